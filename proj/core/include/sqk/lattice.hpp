#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace sqk {

using Integer = mpz_class;

/// Sparse integer vector: (index, value) pairs, strictly increasing indices,
/// no zero values.
using SparseVector = std::vector<std::pair<std::size_t, Integer>>;

/// a*x + b*y.
SparseVector combine(const Integer& a, const SparseVector& x, const Integer& b,
                     const SparseVector& y);

using Matrix = std::vector<std::vector<Integer>>;

/// Finitely generated abelian group Z^rank ⊕ Z/d_1 ⊕ ... ⊕ Z/d_k in invariant
/// factor form (d_1 | d_2 | ... | d_k, every d_i ≥ 2).
struct AbelianGroupDescriptor {
  std::size_t rank = 0;
  std::vector<Integer> torsion;

  /// From the nonzero diagonal of a Smith form over `generators` columns.
  static AbelianGroupDescriptor from_smith(std::size_t generators,
                                           const std::vector<Integer>& diag);
  /// Minimal number of generators.
  std::size_t generator_count() const { return rank + torsion.size(); }
  /// "0", "Z", "Z^2 x Z/2", ...
  std::string to_string() const;

  friend bool operator==(const AbelianGroupDescriptor&,
                         const AbelianGroupDescriptor&) = default;
};

/// Sublattice of Z^dim kept as an echelon basis: every basis row has a
/// distinct leading index and a positive leading coefficient. Rows are
/// inserted incrementally with unimodular gcd steps.
class Lattice {
 public:
  explicit Lattice(std::size_t dim) : dim_(dim) {}

  void insert(SparseVector v);
  bool contains(const SparseVector& v) const;
  /// Coefficients of `v` with respect to basis() if v lies in the lattice.
  std::optional<std::vector<Integer>> coordinates(const SparseVector& v) const;

  std::size_t dim() const { return dim_; }
  std::size_t rank() const { return rows_.size(); }
  /// Basis rows ordered by leading index.
  std::vector<SparseVector> basis() const;
  /// Basis rows whose leading index is at least `from`, re-indexed so that
  /// index `from` maps to 0.
  std::vector<SparseVector> basis_tail(std::size_t from) const;

 private:
  std::size_t dim_;
  std::map<std::size_t, SparseVector> rows_;
};

struct SmithForm {
  /// Nonzero diagonal entries, positive, each dividing the next.
  std::vector<Integer> diagonal;
  /// Unimodular Q with rowspace(M)·Q = rowspace(diag); empty unless asked for.
  Matrix column_transform;
};

/// Smith normal form of a dense matrix with `cols` columns.
SmithForm smith_normal_form(Matrix m, std::size_t cols,
                            bool want_column_transform = false);

/// Z^dim / span(rows). Unit pivots are eliminated sparsely; only the
/// remaining block goes through a dense Smith form.
AbelianGroupDescriptor cokernel(std::size_t dim, std::vector<SparseVector> rows);

/// Lattice rows as a dense matrix.
Matrix to_dense(const std::vector<SparseVector>& rows, std::size_t cols);

/// Least nonnegative residue.
Integer mod_floor(const Integer& a, const Integer& m);

}  // namespace sqk
