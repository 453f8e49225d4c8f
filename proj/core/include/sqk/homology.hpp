#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

#include "sqk/chain.hpp"

namespace sqk {

inline constexpr std::size_t kDefaultSizeCap = 200000;

struct HomologyResult {
  int degree = 0;
  ComplexVariant variant = ComplexVariant::Qrho;
  CoefficientGroup coefficients = CoefficientGroup::integers();
  AbelianGroupDescriptor group;
  /// Quotient chain groups C_{n-1}, C_n, C_{n+1} of the chosen variant.
  std::vector<AbelianGroupDescriptor> chain_groups;
};

/// C_n / D'_n where D'_n is spanned by the variant's generators (and by m·C_n
/// over Z/m).
AbelianGroupDescriptor quotient_chain_group(const SymmetricComplex& cx,
                                            ComplexVariant variant, int n,
                                            const CoefficientGroup& coeff);

/// H_n computed as Z_n / B_n inside C_n, where
///   Z_n = { c : ∂c ∈ D'_{n-1} },  B_n = ∂C_{n+1} + D'_n.
/// Quotient chain groups may have torsion (ρ-fixed tuples give 2t
/// generators), so the quotient is never replaced by a free basis.
class HomologyBasis {
 public:
  /// Throws SizeCapExceeded when |Y|·|X|^(n+1) > cap. A shuffle seed
  /// permutes the relation generators before reduction.
  static HomologyBasis compute(const SymmetricComplex& cx,
                               ComplexVariant variant, int n,
                               const CoefficientGroup& coeff,
                               std::size_t cap = kDefaultSizeCap,
                               std::optional<std::uint64_t> shuffle_seed = {});

  const HomologyResult& result() const { return result_; }

  /// Coordinates of [c]: torsion components (reduced mod their orders, in
  /// increasing order of the invariant factors) followed by free components.
  /// nullopt when c is not a relative cycle.
  std::optional<std::vector<Integer>> class_of(const Chain& c) const;

 private:
  HomologyBasis() = default;

  int x_order_ = 0;
  int y_size_ = 0;
  HomologyResult result_;
  Lattice cycles_{0};
  Matrix q_;
  std::vector<Integer> diag_;
};

inline HomologyResult homology(const SymmetricComplex& cx,
                               ComplexVariant variant, int n,
                               const CoefficientGroup& coeff,
                               std::size_t cap = kDefaultSizeCap) {
  return HomologyBasis::compute(cx, variant, n, coeff, cap).result();
}

}  // namespace sqk
