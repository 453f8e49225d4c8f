#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "sqk/errors.hpp"

namespace sqk {

/// Elements of every finite structure are the indices 0..n-1.
using Element = int;
using Table = std::vector<std::vector<Element>>;

/// A finite quandle given by its operation table. Instances only exist once
/// all three axioms have been checked, so every accessor can trust the table.
class FiniteQuandle {
 public:
  /// Validates `table` (row x, column y holds x ▷ y). Throws InputError on
  /// out-of-range entries and AxiomViolation on the first failing axiom.
  static FiniteQuandle from_table(const Table& table);

  int order() const { return n_; }
  Element op(Element x, Element y) const { return op_[index(x, y)]; }
  /// x ▷^-1 y, the unique z with z ▷ y = x.
  Element inv_op(Element x, Element y) const { return inv_[index(x, y)]; }
  Table table() const;

  friend bool operator==(const FiniteQuandle& a, const FiniteQuandle& b) {
    return a.n_ == b.n_ && a.op_ == b.op_;
  }

 private:
  FiniteQuandle() = default;
  std::size_t index(Element x, Element y) const {
    return static_cast<std::size_t>(x) * n_ + y;
  }
  int n_ = 0;
  std::vector<Element> op_;
  std::vector<Element> inv_;
};

/// First violated axiom of a candidate table, if any.
std::optional<AxiomViolation> find_axiom_violation(const Table& table);

inline FiniteQuandle validate_quandle(const Table& table) {
  return FiniteQuandle::from_table(table);
}

class Involution {
 public:
  /// Throws NotInvolution if map∘map != id, InputError on range errors.
  static Involution from_map(std::vector<Element> map);
  static Involution identity(int n);

  int size() const { return static_cast<int>(map_.size()); }
  Element operator()(Element x) const { return map_[x]; }
  const std::vector<Element>& map() const { return map_; }

  friend auto operator<=>(const Involution&, const Involution&) = default;
  friend bool operator==(const Involution&, const Involution&) = default;

 private:
  explicit Involution(std::vector<Element> map) : map_(std::move(map)) {}
  std::vector<Element> map_;
};

/// Lexicographically first (x, y) where one of the two goodness identities
/// fails. Throws NotInvolution when `rho` is not an involution.
std::optional<GoodnessViolation> find_goodness_violation(
    const FiniteQuandle& q, const std::vector<Element>& rho);

bool is_good_involution(const FiniteQuandle& q,
                        const std::vector<Element>& rho);

/// A quandle together with a verified good involution.
class SymmetricQuandle {
 public:
  /// Throws GoodnessViolation / NotInvolution.
  SymmetricQuandle(FiniteQuandle quandle, Involution rho);

  const FiniteQuandle& quandle() const { return quandle_; }
  const Involution& rho() const { return rho_; }
  int order() const { return quandle_.order(); }
  Element op(Element x, Element y) const { return quandle_.op(x, y); }
  Element inv_op(Element x, Element y) const { return quandle_.inv_op(x, y); }
  Element rho(Element x) const { return rho_(x); }

  friend bool operator==(const SymmetricQuandle&, const SymmetricQuandle&) = default;

 private:
  FiniteQuandle quandle_;
  Involution rho_;
};

/// Multiplication table of a finite group, verified on construction.
class FiniteGroupTable {
 public:
  static FiniteGroupTable from_table(const Table& mul);

  int order() const { return n_; }
  Element mul(Element a, Element b) const { return mul_[a * n_ + b]; }
  Element inverse(Element a) const { return inverse_[a]; }
  Element identity() const { return identity_; }

 private:
  FiniteGroupTable() = default;
  int n_ = 0;
  std::vector<Element> mul_;
  std::vector<Element> inverse_;
  Element identity_ = 0;
};

FiniteGroupTable make_cyclic_group(int n);
/// Symmetric group on k points; elements are permutations in lexicographic
/// order, index 0 being the identity.
FiniteGroupTable make_symmetric_group(int k);

FiniteQuandle make_trivial(int n);
/// R_n: x ▷ y = 2y - x mod n.
FiniteQuandle make_dihedral(int n);
/// conj(G) with x ▷ y = y^-1 x y and rho = inversion.
SymmetricQuandle make_conjugation(const FiniteGroupTable& g);
/// D(X) on X_1 ⊔ X_2 (x_i has index x + i*n); rho swaps the copies.
SymmetricQuandle make_double_cover(const FiniteQuandle& x);

bool is_kei(const FiniteQuandle& q);
/// rho(x ▷ y) == rho(x) ▷ rho(y) for all x, y.
bool is_quandle_homomorphism(const FiniteQuandle& q, const Involution& rho);

/// Standard good involutions of R_n.
Involution antipodal_map(int n);
/// parity 0: even residues shifted by n/2, odd fixed; parity 1: the reverse.
Involution half_antipodal_map(int n, int parity);

/// Every involution of {0..n-1}, sorted lexicographically.
std::vector<Involution> enumerate_involutions(int n);

inline constexpr int kDefaultInvolutionCap = 12;

/// All good involutions of `q`, sorted. Throws OrderCapExceeded above `cap`.
std::vector<Involution> enumerate_good_involutions(
    const FiniteQuandle& q, int cap = kDefaultInvolutionCap);

}  // namespace sqk
