#include "sqk/homology.hpp"

#include <algorithm>
#include <random>
#include <stdexcept>

namespace sqk {

namespace {

// Generators of D'_k as vectors of C_k.
std::vector<SparseVector> relations(const SymmetricComplex& cx,
                                    ComplexVariant variant, int k,
                                    const CoefficientGroup& coeff) {
  std::vector<SparseVector> out;
  if (k < 0) return out;
  for (const auto& g : cx.variant_generators(variant, k)) {
    auto v = cx.to_vector(g);
    if (!v.empty()) out.push_back(std::move(v));
  }
  if (!coeff.is_integers()) {
    const std::size_t size = cx.basis_size(k);
    for (std::size_t j = 0; j < size; ++j)
      out.push_back({{j, coeff.modulus()}});
  }
  return out;
}

SparseVector boundary_vector(const SymmetricComplex& cx, int n,
                             std::size_t j) {
  return cx.to_vector(cx.boundary(cx.basis_tuple(n, j)));
}

SparseVector sparse(const std::vector<Integer>& dense) {
  SparseVector out;
  for (std::size_t i = 0; i < dense.size(); ++i)
    if (dense[i] != 0) out.emplace_back(i, dense[i]);
  return out;
}

}  // namespace

AbelianGroupDescriptor quotient_chain_group(const SymmetricComplex& cx,
                                            ComplexVariant variant, int n,
                                            const CoefficientGroup& coeff) {
  if (n < 0) return {};
  return cokernel(cx.basis_size(n), relations(cx, variant, n, coeff));
}

HomologyBasis HomologyBasis::compute(const SymmetricComplex& cx,
                                     ComplexVariant variant, int n,
                                     const CoefficientGroup& coeff,
                                     std::size_t cap,
                                     std::optional<std::uint64_t> shuffle_seed) {
  if (n < 0) throw InputError("homology degree must be nonnegative");
  const std::size_t top = cx.basis_size(n + 1);
  if (top > cap)
    throw SizeCapExceeded("complex needs " +
                          (top == SIZE_MAX ? std::string("too many")
                                           : std::to_string(top)) +
                          " basis tuples in degree " + std::to_string(n + 1) +
                          " (cap " + std::to_string(cap) + ")");

  std::mt19937_64 rng(shuffle_seed.value_or(0));
  auto gens = [&](int k) {
    auto r = relations(cx, variant, k, coeff);
    if (shuffle_seed) std::shuffle(r.begin(), r.end(), rng);
    return r;
  };

  HomologyBasis h;
  h.x_order_ = cx.quandle().order();
  h.y_size_ = cx.xset().y_size();
  h.result_.degree = n;
  h.result_.variant = variant;
  h.result_.coefficients = coeff;
  for (int k = n - 1; k <= n + 1; ++k)
    h.result_.chain_groups.push_back(
        quotient_chain_group(cx, variant, k, coeff));

  // Z_n: tails of the echelon lattice spanned by (∂e_j | e_j) and (g | 0).
  const std::size_t low = n > 0 ? cx.basis_size(n - 1) : 0;
  const std::size_t mid = cx.basis_size(n);
  Lattice joint(low + mid);
  if (n > 0)
    for (auto& g : gens(n - 1)) joint.insert(std::move(g));
  for (std::size_t j = 0; j < mid; ++j) {
    SparseVector v = n > 0 ? boundary_vector(cx, n, j) : SparseVector{};
    v.emplace_back(low + j, 1);
    joint.insert(std::move(v));
  }
  h.cycles_ = Lattice(mid);
  for (auto& z : joint.basis_tail(low)) h.cycles_.insert(std::move(z));
  const std::size_t rank_z = h.cycles_.rank();

  // B_n in Z_n-coordinates.
  Lattice bounds(rank_z);
  auto add_boundary = [&](const SparseVector& v) {
    auto coords = h.cycles_.coordinates(v);
    if (!coords) throw std::logic_error("boundary outside the cycle lattice");
    bounds.insert(sparse(*coords));
  };
  std::vector<std::size_t> order(top);
  for (std::size_t j = 0; j < top; ++j) order[j] = j;
  if (shuffle_seed) std::shuffle(order.begin(), order.end(), rng);
  for (std::size_t j : order) add_boundary(boundary_vector(cx, n + 1, j));
  for (const auto& g : gens(n)) add_boundary(g);

  auto smith = smith_normal_form(to_dense(bounds.basis(), rank_z), rank_z, true);
  h.q_ = std::move(smith.column_transform);
  h.diag_ = std::move(smith.diagonal);
  h.result_.group = AbelianGroupDescriptor::from_smith(rank_z, h.diag_);
  return h;
}

std::optional<std::vector<Integer>> HomologyBasis::class_of(
    const Chain& c) const {
  if (c.degree() != result_.degree)
    throw DegreeMismatch("chain of degree " + std::to_string(c.degree()) +
                         " in degree " + std::to_string(result_.degree) +
                         " homology");
  std::map<std::size_t, Integer> acc;
  for (const auto& [t, v] : c.terms()) {
    if (t.y < 0 || t.y >= y_size_)
      throw InputError("region color out of range");
    std::size_t idx = static_cast<std::size_t>(t.y);
    for (Element e : t.xs) {
      if (e < 0 || e >= x_order_) throw InputError("element out of range");
      idx = idx * x_order_ + e;
    }
    acc[idx] += v;
  }
  SparseVector vec;
  for (auto& [i, v] : acc)
    if (v != 0) vec.emplace_back(i, v);
  auto w = cycles_.coordinates(vec);
  if (!w) return std::nullopt;

  const std::size_t r = q_.size();
  std::vector<Integer> u(r);
  for (std::size_t i = 0; i < r; ++i) {
    if ((*w)[i] == 0) continue;
    for (std::size_t j = 0; j < r; ++j)
      if (q_[i][j] != 0) u[j] += (*w)[i] * q_[i][j];
  }
  std::vector<Integer> out;
  for (std::size_t i = 0; i < diag_.size(); ++i)
    if (diag_[i] > 1) out.push_back(mod_floor(u[i], diag_[i]));
  for (std::size_t i = diag_.size(); i < r; ++i) out.push_back(u[i]);
  return out;
}

}  // namespace sqk
