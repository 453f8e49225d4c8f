#include <doctest.h>

#include "oracles.hpp"
#include "sqk/fixtures.hpp"
#include "sqk/homology.hpp"

using namespace sqk;

namespace {

// dim H_n of the quotient complex with F_p coefficients, by linear algebra.
long betti_mod_p(const SymmetricComplex& cx, ComplexVariant v, int n, long p) {
  auto dense = [&](const std::vector<Chain>& chains, int k) {
    std::vector<std::vector<long>> m;
    for (const auto& c : chains) {
      std::vector<long> row(cx.basis_size(k));
      for (const auto& [t, val] : c.terms())
        row[cx.index_of(t)] = val.get_si();
      m.push_back(row);
    }
    return m;
  };
  auto rank_of = [&](const std::vector<Chain>& chains, int k) {
    if (k < 0 || chains.empty()) return 0L;
    return oracle::rank_mod_p(dense(chains, k), p);
  };
  auto boundaries = [&](int k) {
    std::vector<Chain> out;
    for (std::size_t j = 0; j < cx.basis_size(k); ++j)
      out.push_back(cx.boundary(cx.basis_tuple(k, j)));
    return out;
  };
  // rank of the induced map C_k/D_k -> C_{k-1}/D_{k-1}
  auto induced_rank = [&](int k) {
    if (k <= 0) return 0L;
    auto low = cx.variant_generators(v, k - 1);
    auto both = boundaries(k);
    both.insert(both.end(), low.begin(), low.end());
    return rank_of(both, k - 1) - rank_of(low, k - 1);
  };
  long dim = static_cast<long>(cx.basis_size(n)) -
             rank_of(cx.variant_generators(v, n), n);
  return dim - induced_rank(n) - induced_rank(n + 1);
}

}  // namespace

TEST_CASE("homology of the one-element quandle") {
  auto t1 = fixtures::t1().quandle;
  SymmetricComplex cx(t1, XSetAction::singleton(t1));
  auto h = homology(cx, ComplexVariant::R, 1, CoefficientGroup::integers());
  CHECK(h.group.to_string() == "Z");
  CHECK(h.chain_groups.size() == 3);
}

TEST_CASE("quotients shrink the chain groups") {
  auto r3 = fixtures::r3_identity().quandle;
  SymmetricComplex cx(r3, XSetAction::quandle_action(r3));
  auto r = homology(cx, ComplexVariant::R, 2, CoefficientGroup::integers());
  auto q = homology(cx, ComplexVariant::Q, 2, CoefficientGroup::integers());
  CHECK(q.chain_groups[1].generator_count() <
        r.chain_groups[1].generator_count());
  CHECK(r.chain_groups[1].rank == 27);
}

TEST_CASE("homology agrees with an F_p rank oracle") {
  struct Case {
    SymmetricQuandle s;
    bool y_is_x;
    long p;
  };
  std::vector<Case> cases = {
      {fixtures::r3_identity().quandle, true, 3},
      {fixtures::r3_identity().quandle, false, 3},
      {fixtures::r4_antipodal().quandle, false, 2},
      {fixtures::t2_swap().quandle, false, 2},
      {fixtures::trivial_paired(2).quandle, false, 3},
  };
  for (auto& c : cases) {
    SymmetricComplex cx(c.s, c.y_is_x ? XSetAction::quandle_action(c.s)
                                     : XSetAction::singleton(c.s));
    for (auto v : {ComplexVariant::R, ComplexVariant::Q, ComplexVariant::Rrho,
                   ComplexVariant::Qrho})
      for (int n = 0; n <= 2; ++n) {
        CAPTURE(to_string(v));
        CAPTURE(n);
        auto h = homology(cx, v, n, CoefficientGroup::modulo(c.p));
        CHECK(h.group.rank == 0);
        for (const auto& t : h.group.torsion) CHECK(t == c.p);
        CHECK(static_cast<long>(h.group.torsion.size()) ==
              betti_mod_p(cx, v, n, c.p));
      }
  }
}

TEST_CASE("homology does not depend on generator order") {
  auto r4 = fixtures::r4_antipodal().quandle;
  SymmetricComplex cx(r4, XSetAction::quandle_action(r4));
  for (int n = 1; n <= 2; ++n) {
    auto base = homology(cx, ComplexVariant::Qrho, n,
                         CoefficientGroup::integers());
    for (std::uint64_t seed : {1u, 2u, 3u}) {
      auto h = HomologyBasis::compute(cx, ComplexVariant::Qrho, n,
                                      CoefficientGroup::integers(),
                                      kDefaultSizeCap, seed);
      CHECK(h.result().group == base.group);
    }
  }
}

TEST_CASE("size cap") {
  auto r4 = fixtures::r4_antipodal().quandle;
  SymmetricComplex cx(r4, XSetAction::quandle_action(r4));
  CHECK_THROWS_AS(
      homology(cx, ComplexVariant::R, 3, CoefficientGroup::integers(), 100),
      SizeCapExceeded);
}

TEST_CASE("Mochizuki cocycle is nonzero on some 2-cycle") {
  auto r3 = fixtures::r3_identity().quandle;
  SymmetricComplex cx(r3, XSetAction::quandle_action(r3));
  auto theta = fixtures::mochizuki();
  auto h = HomologyBasis::compute(cx, ComplexVariant::Qrho, 2,
                                  CoefficientGroup::integers());
  CHECK(h.result().group.generator_count() > 0);
  // The trefoil weight cycle for colors (a, b) = (0, 1) with region 0.
  Chain c(2);
  c.add({0, {0, 1}}, 1);
  c.add({0, {1, 2}}, 1);
  c.add({0, {2, 0}}, 1);
  REQUIRE(h.class_of(c));
  CHECK(evaluate(theta, c) != 0);
  Chain not_cycle = Chain::unit({0, {0, 1}});
  CHECK_FALSE(h.class_of(not_cycle));
}
