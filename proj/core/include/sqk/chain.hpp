#pragma once

#include <compare>
#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "sqk/group.hpp"
#include "sqk/lattice.hpp"
#include "sqk/quandle.hpp"

namespace sqk {

/// Generator (y, x_1, ..., x_n) of C_n(X)_Y. Degree 0 tuples are bare y.
struct Tuple {
  Element y = 0;
  std::vector<Element> xs;

  int degree() const { return static_cast<int>(xs.size()); }
  std::string to_string() const;

  friend auto operator<=>(const Tuple&, const Tuple&) = default;
  friend bool operator==(const Tuple&, const Tuple&) = default;
};

/// Finite integer combination of tuples of one degree.
class Chain {
 public:
  explicit Chain(int degree) : degree_(degree) {}
  static Chain unit(const Tuple& t, const Integer& c = 1);

  int degree() const { return degree_; }
  /// Throws DegreeMismatch if t has a different degree.
  void add(const Tuple& t, const Integer& c);
  Integer coefficient(const Tuple& t) const;
  const std::map<Tuple, Integer>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }
  /// "2*(0,1,2) - (0,2,1)"; "0" for the zero chain.
  std::string to_string() const;

  Chain& operator+=(const Chain& o);
  Chain& operator-=(const Chain& o);
  Chain& operator*=(const Integer& c);
  friend Chain operator+(Chain a, const Chain& b) { return a += b; }
  friend Chain operator-(Chain a, const Chain& b) { return a -= b; }
  friend Chain operator-(Chain a) { return a *= -1; }
  friend Chain operator*(const Integer& c, Chain a) { return a *= c; }
  friend bool operator==(const Chain&, const Chain&) = default;

 private:
  int degree_;
  std::map<Tuple, Integer> terms_;
};

enum class ComplexVariant { R, Q, Rrho, Qrho };

std::string to_string(ComplexVariant v);
/// Accepts R, Q, Rrho, Qrho (also "R,rho" / "Q,rho"). Throws InputError.
ComplexVariant parse_variant(const std::string& s);
inline bool quotients_degenerate(ComplexVariant v) {
  return v == ComplexVariant::Q || v == ComplexVariant::Qrho;
}
inline bool quotients_rho(ComplexVariant v) {
  return v == ComplexVariant::Rrho || v == ComplexVariant::Qrho;
}

/// Z (modulus 0) or Z/m.
class CoefficientGroup {
 public:
  static CoefficientGroup integers() { return CoefficientGroup(0); }
  static CoefficientGroup modulo(const Integer& m);
  /// "Z" or "Z/m".
  static CoefficientGroup parse(const std::string& s);

  bool is_integers() const { return modulus_ == 0; }
  const Integer& modulus() const { return modulus_; }
  /// Identity over Z, least nonnegative residue over Z/m.
  Integer normalize(const Integer& v) const;
  std::string to_string() const;

  friend bool operator==(const CoefficientGroup&,
                         const CoefficientGroup&) = default;

 private:
  explicit CoefficientGroup(Integer m) : modulus_(std::move(m)) {}
  Integer modulus_;
};

/// C_*(X)_Y for a fixed symmetric quandle and (X, rho)-set, with the
/// degenerate subcomplexes D^Q and D^rho.
class SymmetricComplex {
 public:
  SymmetricComplex(SymmetricQuandle s, XSetAction act);

  const SymmetricQuandle& quandle() const { return s_; }
  const XSetAction& xset() const { return act_; }

  /// |Y| * |X|^n, or SIZE_MAX on overflow.
  std::size_t basis_size(int n) const;
  /// Lexicographic enumeration of (y, x_1, ..., x_n).
  Tuple basis_tuple(int n, std::size_t index) const;
  std::size_t index_of(const Tuple& t) const;
  SparseVector to_vector(const Chain& c) const;

  Chain boundary(const Tuple& t) const;
  /// Zero chain of degree n-1 when n <= 0.
  Chain boundary(const Chain& c) const;

  /// The partner (y·x_i, x_1▷x_i, ..., x_{i-1}▷x_i, rho(x_i), x_{i+1}, ...)
  /// of t at position i (1-based); an involution on tuples.
  Tuple rho_partner(const Tuple& t, int i) const;

  /// Unit chains on tuples with an adjacent repeat, lexicographic.
  std::vector<Chain> dq_generators(int n) const;
  /// t + rho_partner(t, i) for every basis tuple t and i = 1..n.
  std::vector<Chain> drho_generators(int n) const;
  /// The generators quotiented out by `v` in degree n.
  std::vector<Chain> variant_generators(ComplexVariant v, int n) const;

 private:
  SymmetricQuandle s_;
  XSetAction act_;
};

/// Integer-combination membership, solved on an echelon lattice.
bool chain_in_subgroup(const Chain& c, const std::vector<Chain>& gens);

/// Cochain given by its nonzero values on tuples.
class Cocycle {
 public:
  Cocycle(int degree, CoefficientGroup coeff,
          ComplexVariant variant = ComplexVariant::Qrho)
      : degree_(degree), coeff_(std::move(coeff)), variant_(variant) {}

  int degree() const { return degree_; }
  const CoefficientGroup& coefficients() const { return coeff_; }
  ComplexVariant variant() const { return variant_; }
  /// Stores the normalized value; zero erases.
  void set(const Tuple& t, const Integer& v);
  Integer operator()(const Tuple& t) const;
  const std::map<Tuple, Integer>& values() const { return values_; }

 private:
  int degree_;
  CoefficientGroup coeff_;
  ComplexVariant variant_;
  std::map<Tuple, Integer> values_;
};

/// Linear pairing sum c(t) θ(t) in θ's coefficient group.
Integer evaluate(const Cocycle& theta, const Chain& c);

struct CocycleWitness {
  enum class Kind { Boundary, Degenerate, Rho };
  Kind kind;
  /// Boundary: the degree n+1 tuple whose boundary pairs nonzero.
  /// Degenerate / Rho: the generating tuple of degree n.
  Tuple tuple;
  /// 1-based position for Degenerate (x_i = x_{i+1}) and Rho.
  int position = 0;
  Integer value;
  std::string describe() const;
};

class CocycleRejected : public ValidationError {
 public:
  explicit CocycleRejected(CocycleWitness w)
      : ValidationError("not a cocycle: " + w.describe()),
        witness(std::move(w)) {}
  CocycleWitness witness;
};

/// First failing condition: θ∘∂ = 0 on degree n+1 tuples, then θ = 0 on
/// D^Q (Q variants), then θ = 0 on D^rho (rho variants).
std::optional<CocycleWitness> find_cocycle_violation(
    const SymmetricComplex& cx, const Cocycle& theta, ComplexVariant variant);

inline bool is_cocycle(const SymmetricComplex& cx, const Cocycle& theta,
                       ComplexVariant variant) {
  return !find_cocycle_violation(cx, theta, variant).has_value();
}

}  // namespace sqk
