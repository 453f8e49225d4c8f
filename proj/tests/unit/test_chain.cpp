#include <doctest.h>

#include <random>

#include "sqk/chain.hpp"
#include "sqk/fixtures.hpp"

using namespace sqk;

namespace {

struct Setup {
  std::string name;
  SymmetricComplex cx;
};

std::vector<Setup> fixture_complexes() {
  std::vector<Setup> out;
  auto add = [&](std::string n, const SymmetricQuandle& s, bool y_is_x) {
    out.push_back({n, SymmetricComplex(s, y_is_x ? XSetAction::quandle_action(s)
                                               : XSetAction::singleton(s))});
  };
  add("R3/id, Y=X", fixtures::r3_identity().quandle, true);
  add("R4/antipodal, Y=X", fixtures::r4_antipodal().quandle, true);
  add("T4/pairing", fixtures::trivial_paired(2).quandle, false);
  add("T2/id", fixtures::t2_identity().quandle, false);
  add("conj(S3)", fixtures::conj_s3().quandle, false);
  return out;
}

Chain random_chain(const SymmetricComplex& cx, int n, std::mt19937& rng) {
  Chain c(n);
  std::uniform_int_distribution<std::size_t> pick(0, cx.basis_size(n) - 1);
  std::uniform_int_distribution<int> coeff(-3, 3);
  for (int k = 0; k < 6; ++k) c.add(cx.basis_tuple(n, pick(rng)), coeff(rng));
  return c;
}

}  // namespace

TEST_CASE("boundary in low degree") {
  auto r3 = fixtures::r3_identity().quandle;
  SymmetricComplex cx(r3, XSetAction::singleton(r3));
  Chain expected(1);
  expected.add({0, {0}}, 1);
  expected.add({0, {2}}, -1);
  CHECK(cx.boundary(Tuple{0, {0, 1}}) == expected);
  CHECK(cx.boundary(Tuple{0, {}}).is_zero());

  SymmetricComplex yx(r3, XSetAction::quandle_action(r3));
  Chain d1(0);
  d1.add({0, {}}, -1);
  d1.add({2, {}}, 1);
  CHECK(yx.boundary(Tuple{0, {1}}) == d1);
  CHECK_THROWS_AS(Chain(2).add({0, {1}}, 1), DegreeMismatch);
}

TEST_CASE("boundary squares to zero on every basis tuple") {
  for (auto& [name, cx] : fixture_complexes()) {
    CAPTURE(name);
    for (int n = 2; n <= 4; ++n) {
      const std::size_t size = cx.basis_size(n);
      if (size > 2000) continue;
      for (std::size_t k = 0; k < size; ++k) {
        Tuple t = cx.basis_tuple(n, k);
        CHECK(cx.boundary(cx.boundary(t)).is_zero());
      }
    }
  }
}

TEST_CASE("boundary squares to zero on random chains") {
  auto r4 = fixtures::r4_antipodal().quandle;
  SymmetricComplex cx(r4, XSetAction::quandle_action(r4));
  std::mt19937 rng(2024);
  for (int n = 2; n <= 4; ++n)
    for (int trial = 0; trial < 20; ++trial)
      CHECK(cx.boundary(cx.boundary(random_chain(cx, n, rng))).is_zero());
}

TEST_CASE("degenerate generators") {
  auto r3 = fixtures::r3_identity().quandle;
  SymmetricComplex cx(r3, XSetAction::singleton(r3));
  CHECK(cx.dq_generators(2).size() == 3);
  CHECK(cx.dq_generators(3).size() == 15);
  auto t2 = fixtures::t2_identity().quandle;
  CHECK(SymmetricComplex(t2, XSetAction::singleton(t2)).dq_generators(2).size() ==
        2);

  auto r4 = fixtures::r4_antipodal().quandle;
  SymmetricComplex c4(r4, XSetAction::singleton(r4));
  auto rho1 = c4.drho_generators(1);
  REQUIRE(rho1.size() == 4);
  for (int x = 0; x < 4; ++x) {
    Chain g(1);
    g.add({0, {x}}, 1);
    g.add({0, {r4.rho(x)}}, 1);
    CHECK(rho1[x] == g);
  }
}

TEST_CASE("rho partners pair up") {
  for (auto& [name, cx] : fixture_complexes()) {
    CAPTURE(name);
    for (int n = 1; n <= 3; ++n)
      for (std::size_t k = 0; k < cx.basis_size(n); ++k) {
        Tuple t = cx.basis_tuple(n, k);
        for (int i = 1; i <= n; ++i)
          CHECK(cx.rho_partner(cx.rho_partner(t, i), i) == t);
      }
  }
}

TEST_CASE("boundaries of degenerate generators stay degenerate") {
  for (auto& [name, cx] : fixture_complexes()) {
    CAPTURE(name);
    for (int n = 2; n <= 3; ++n) {
      auto rho_low = cx.drho_generators(n - 1);
      for (const auto& g : cx.drho_generators(n))
        CHECK(chain_in_subgroup(cx.boundary(g), rho_low));
      auto q_low = cx.dq_generators(n - 1);
      for (const auto& g : cx.dq_generators(n))
        CHECK(chain_in_subgroup(cx.boundary(g), q_low));
    }
    // (y,x,x) has boundary in D^Q_1 = 0 as well: the two faces cancel.
    for (std::size_t k = 0; k < cx.basis_size(2); ++k) {
      Tuple t = cx.basis_tuple(2, k);
      if (t.xs[0] == t.xs[1]) CHECK(cx.boundary(t).is_zero());
    }
  }
}

TEST_CASE("subgroup membership") {
  auto swap = fixtures::t2_swap().quandle;
  SymmetricComplex cx(swap, XSetAction::singleton(swap));
  auto gens = cx.drho_generators(1);
  Chain diff(1);
  diff.add({0, {0}}, 1);
  diff.add({0, {1}}, -1);
  CHECK_FALSE(chain_in_subgroup(diff, gens));
  Chain sum(1);
  sum.add({0, {0}}, 2);
  sum.add({0, {1}}, 2);
  CHECK(chain_in_subgroup(sum, gens));
  CHECK(chain_in_subgroup(Chain(1), gens));
  for (const auto& g : cx.dq_generators(2))
    CHECK(chain_in_subgroup(g, cx.dq_generators(2)));
}

TEST_CASE("fixture cocycles pass and single mutations fail") {
  struct Case {
    std::string name;
    SymmetricComplex cx;
    Cocycle theta;
    Tuple mutate;
  };
  auto r3 = fixtures::r3_identity().quandle;
  auto t4 = fixtures::trivial_paired(2).quandle;
  auto t6 = fixtures::trivial_paired(3).quandle;
  auto t2 = fixtures::t2_identity().quandle;
  auto r4 = fixtures::r4_antipodal().quandle;
  std::vector<Case> cases = {
      {"mochizuki", SymmetricComplex(r3, XSetAction::quandle_action(r3)),
       fixtures::mochizuki(), {0, {1, 2}}},
      {"torus", SymmetricComplex(t4, XSetAction::singleton(t4)),
       fixtures::torus_link_cocycle(), {0, {0, 2}}},
      {"t6", SymmetricComplex(t6, XSetAction::singleton(t6)),
       fixtures::t6_cocycle(), {0, {0, 2, 4}}},
      // Non-degenerate single-entry changes of this cocycle stay cocycles,
      // so the mutation targets a degenerate tuple.
      {"t2", SymmetricComplex(t2, XSetAction::singleton(t2)),
       fixtures::t2_cocycle(), {0, {0, 0, 1}}},
      {"r4", SymmetricComplex(r4, XSetAction::singleton(r4)),
       fixtures::r4_cocycle(), {0, {0, 1, 0}}},
  };
  for (auto& c : cases) {
    CAPTURE(c.name);
    CHECK(is_cocycle(c.cx, c.theta, ComplexVariant::Qrho));
    Cocycle bad = c.theta;
    bad.set(c.mutate, bad(c.mutate) + 1);
    auto w = find_cocycle_violation(c.cx, bad, ComplexVariant::Qrho);
    REQUIRE(w);
    CHECK(!w->describe().empty());
  }
}

TEST_CASE("a lone characteristic function fails the rho condition") {
  auto t4 = fixtures::trivial_paired(2).quandle;
  SymmetricComplex cx(t4, XSetAction::singleton(t4));
  Cocycle theta(2, CoefficientGroup::integers());
  theta.set({0, {0, 2}}, 1);
  auto w = find_cocycle_violation(cx, theta, ComplexVariant::Qrho);
  REQUIRE(w);
  CHECK(w->kind == CocycleWitness::Kind::Rho);
  CHECK(w->tuple == Tuple{0, {0, 2}});
  CHECK(w->position == 1);
}

TEST_CASE("evaluation") {
  auto theta = fixtures::r4_cocycle();
  CHECK(evaluate(theta, Chain::unit({0, {0, 1, 0}})) == 1);
  CHECK(evaluate(theta, Chain::unit({0, {1, 0, 1}})) == -1);
  CHECK(evaluate(theta, Chain(3)) == 0);
  CHECK_THROWS_AS(evaluate(theta, Chain(2)), DegreeMismatch);

  auto m = fixtures::mochizuki();
  auto r3 = fixtures::r3_identity().quandle;
  SymmetricComplex cx(r3, XSetAction::quandle_action(r3));
  std::mt19937 rng(11);
  for (int trial = 0; trial < 20; ++trial) {
    Chain a = random_chain(cx, 2, rng), b = random_chain(cx, 2, rng);
    CHECK(evaluate(m, a + b) ==
          m.coefficients().normalize(evaluate(m, a) + evaluate(m, b)));
  }
}

TEST_CASE("coefficient groups and variants parse") {
  CHECK(CoefficientGroup::parse("Z").is_integers());
  CHECK(CoefficientGroup::parse("Z/3").modulus() == 3);
  CHECK(CoefficientGroup::parse("Z/3").normalize(-1) == 2);
  CHECK_THROWS_AS(CoefficientGroup::parse("Z/1"), InputError);
  CHECK_THROWS_AS(CoefficientGroup::parse("Q"), InputError);
  CHECK(parse_variant("Qrho") == ComplexVariant::Qrho);
  CHECK_THROWS_AS(parse_variant("X"), InputError);
}

TEST_CASE("sign pattern alternating in all three entries is rejected") {
  auto r4 = fixtures::r4_antipodal().quandle;
  SymmetricComplex cx(r4, XSetAction::singleton(r4));
  auto w = find_cocycle_violation(cx, fixtures::r4_cocycle_as_printed(),
                                  ComplexVariant::Qrho);
  REQUIRE(w);
  auto rho_only = fixtures::r4_cocycle_as_printed();
  // theta(e1, e2, e1) + theta(e1, e2', e1') = 2 at position 3.
  CHECK(rho_only(Tuple{0, {0, 1, 0}}) + rho_only(cx.rho_partner({0, {0, 1, 0}}, 3)) == 2);
  // Both patterns agree on the two tuples the F^(n) chains use.
  auto good = fixtures::r4_cocycle();
  for (Tuple t : {Tuple{0, {0, 1, 0}}, Tuple{0, {1, 0, 1}}})
    CHECK(good(t) == rho_only(t));
}
