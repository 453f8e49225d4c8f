#include <doctest.h>

#include <map>

#include "fixture_list.hpp"
#include "sqk/invariants.hpp"

using namespace sqk;

namespace {

const char* kTrefoil = "X[1,5,2,4] X[3,1,4,6] X[5,3,6,2]";
const char* kFigureEight = "X[4,2,5,1] X[8,6,1,5] X[6,3,7,4] X[2,7,3,8]";
const char* kHopf = "X[1,3,2,4] X[3,1,4,2]";

Diagram build(const std::string& text) { return Diagram::build(parse_pd(text)); }

std::string phi_string(const Diagram& d, const SymmetricQuandle& s,
                       const XSetAction& act, const Cocycle& theta,
                       const RegionConstraints& rc = {}) {
  return phi(d, s, act, theta, rc).to_string();
}

// Planar reflection: reverse the rotation at every crossing.
PDCode reflect(const PDCode& pd) {
  PDCode out = pd;
  for (auto& x : out.crossings) std::swap(x[1], x[3]);
  return out;
}

struct CocycleSetup {
  std::string name;
  SymmetricQuandle s;
  XSetAction act;
  Cocycle theta;
};

std::vector<CocycleSetup> cocycle_setups() {
  const auto r3 = fixtures::r3_identity().quandle;
  const auto t4 = fixtures::trivial_paired(2).quandle;
  return {{"mochizuki", r3, XSetAction::quandle_action(r3), fixtures::mochizuki()},
          {"torus", t4, XSetAction::singleton(t4), fixtures::torus_link_cocycle()}};
}

std::vector<OrientationChoice> all_orientations(int comps) {
  std::vector<OrientationChoice> out;
  for (int mask = 0; mask < (1 << comps); ++mask) {
    OrientationChoice o(comps);
    for (int i = 0; i < comps; ++i) o[i] = (mask >> i) & 1;
    out.push_back(o);
  }
  return out;
}

}  // namespace

TEST_CASE("trefoil chirality with the Mochizuki cocycle") {
  const auto s = fixtures::r3_identity().quandle;
  const auto act = XSetAction::quandle_action(s);
  const Diagram d = build(kTrefoil);
  const Diagram m = Diagram::build(mirror_pd(d));
  CHECK(phi_string(d, s, act, fixtures::mochizuki(), {{d.unbounded_face(), 0}}) ==
        "0:3 1:6");
  CHECK(phi_string(m, s, act, fixtures::mochizuki(), {{m.unbounded_face(), 0}}) ==
        "0:3 2:6");
  const Diagram r = Diagram::build(reflect(d.pd()));
  CHECK(phi_string(r, s, act, fixtures::mochizuki(), {{r.unbounded_face(), 0}}) ==
        "0:3 2:6");
}

TEST_CASE("trefoil weight chains have the three-term shape") {
  const auto s = fixtures::r3_identity().quandle;
  const auto act = XSetAction::quandle_action(s);
  const Diagram d = build(kTrefoil);
  for (const auto& c : enumerate_colorings(d, s, act, {{d.unbounded_face(), 0}})) {
    const Chain w = weight_cycle(d, c);
    bool found = false;
    for (int a = 0; a < 3 && !found; ++a)
      for (int b = 0; b < 3 && !found; ++b) {
        const int ab = ((-a - b) % 3 + 3) % 3;
        Chain expect(2);
        expect.add({0, {a, b}}, 1);
        expect.add({0, {b, ab}}, 1);
        expect.add({0, {ab, a}}, 1);
        found = expect == w;
      }
    CAPTURE(w.to_string());
    CHECK(found);
  }
}

TEST_CASE("planar reflection negates weight classes") {
  const auto s = fixtures::r3_identity().quandle;
  const auto act = XSetAction::quandle_action(s);
  SymmetricComplex cx(s, act);
  const auto basis = HomologyBasis::compute(cx, ComplexVariant::Qrho, 2,
                                            CoefficientGroup::integers());
  for (const char* text : {kTrefoil, kFigureEight, kHopf}) {
    const Diagram d = build(text);
    const Diagram r = Diagram::build(reflect(d.pd()));
    // Faces correspond through the edges, with left and right exchanged.
    std::map<int, int> face;
    for (std::size_t i = 0; i < d.edges().size(); ++i) {
      face[d.edges()[i].left_face] = r.edges()[i].right_face;
      face[d.edges()[i].right_face] = r.edges()[i].left_face;
    }
    REQUIRE(static_cast<int>(face.size()) == d.face_count());
    for (const auto& c : enumerate_colorings(d, s, act)) {
      Coloring rc{c.arc, std::vector<Element>(r.face_count())};
      for (auto [f, g] : face) rc.region[g] = c.region[f];
      REQUIRE(is_coloring(r, s, act, rc));
      // The reflected normals leave from the opposite corner, so the chains
      // agree only up to a boundary.
      Chain sum = weight_cycle(d, c);
      sum += weight_cycle(r, rc);
      const auto coords = basis.class_of(sum);
      REQUIRE(coords.has_value());
      for (const auto& v : *coords) CHECK(v == 0);
    }
  }
}

TEST_CASE("weight chains are relative 2-cycles") {
  std::vector<PDCode> codes = {parse_pd(kTrefoil), parse_pd(kFigureEight),
                               parse_pd(kHopf), parse_pd("X[1,1,2,2]"),
                               closed_two_braid(4)};
  for (const auto& u : diagram_setups()) {
    SymmetricComplex cx(u.s, u.act);
    const auto gens = cx.variant_generators(ComplexVariant::Qrho, 1);
    for (const auto& pd : codes) {
      const Diagram d = Diagram::build(pd);
      int checked = 0;
      for (const auto& c : enumerate_colorings(d, u.s, u.act)) {
        if (++checked > 40) break;
        const Chain b = cx.boundary(weight_cycle(d, c));
        CAPTURE(u.name);
        CAPTURE(pd.to_string());
        CHECK(chain_in_subgroup(b, gens));
      }
    }
  }
}

TEST_CASE("closed 2-braids and the linking number") {
  const auto s = fixtures::trivial_paired(2).quandle;
  const auto pt = XSetAction::singleton(s);
  const auto theta = fixtures::torus_link_cocycle();
  for (int m = 1; m <= 3; ++m) {
    const Diagram d = Diagram::build(closed_two_braid(2 * m));
    const std::string ms = std::to_string(m);
    CHECK(phi_string(d, s, pt, theta) == "-" + ms + ":4 0:8 " + ms + ":4");
    for (const auto& c : enumerate_colorings(d, s, pt)) {
      Element col[2] = {-1, -1};
      for (std::size_t e = 0; e < d.edges().size(); ++e)
        col[d.edges()[e].component] = c.arc[e];
      Chain expect(2);
      expect.add({0, {col[0], col[1]}}, m);
      expect.add({0, {col[1], col[0]}}, m);
      CHECK(weight_cycle(d, c) == expect);
    }
  }
}

TEST_CASE("torus cocycle reads the linking number of 2-component links") {
  const auto s = fixtures::trivial_paired(2).quandle;
  const auto pt = XSetAction::singleton(s);
  const auto theta = fixtures::torus_link_cocycle();
  std::vector<PDCode> links = {parse_pd(kHopf), parse_pd("L 1 L 2"),
                               parse_pd(std::string(kHopf) + " X[5,5,6,6]")};
  for (int m = 1; m <= 4; ++m) links.push_back(closed_two_braid(2 * m));
  for (const auto& pd : links) {
    const Diagram d = Diagram::build(pd);
    if (d.component_count() != 2) continue;
    for (const auto& o : all_orientations(2)) {
      const Diagram r = d.with_orientation(o);
      const int lk = std::abs(r.linking_number(0, 1));
      InvariantMultiset expect;
      if (lk == 0) {
        expect.add(0, 16);
      } else {
        expect.add(lk, 4);
        expect.add(-lk, 4);
        expect.add(0, 8);
      }
      CAPTURE(pd.to_string());
      CHECK(phi(d, s, pt, theta) == expect);
    }
  }
}

TEST_CASE("orientation independence") {
  for (const auto& u : cocycle_setups())
    for (const char* text : {kTrefoil, kFigureEight, kHopf, "L 1", "X[1,1,2,2]"}) {
      const Diagram d = build(text);
      const auto base = phi(d, u.s, u.act, u.theta);
      for (const auto& o : all_orientations(d.component_count())) {
        CAPTURE(u.name);
        CAPTURE(text);
        CHECK(phi_oriented(d, u.s, u.act, u.theta, o) == base);
        if (u.act.y_size() > 1) {
          const RegionConstraints rc{{d.unbounded_face(), 1}};
          CHECK(phi_oriented(d, u.s, u.act, u.theta, o, rc) ==
                phi(d, u.s, u.act, u.theta, rc));
        }
      }
    }
}

TEST_CASE("invariance under Reidemeister I") {
  const Diagram t3 = build(kTrefoil);
  const Diagram t4 = Diagram::build(insert_kink(t3, 4, true));
  const Diagram h1 = build(kHopf);
  const Diagram h2 = Diagram::build(insert_kink(h1, 2, false));
  for (const auto& u : cocycle_setups()) {
    CHECK(phi(t3, u.s, u.act, u.theta) == phi(t4, u.s, u.act, u.theta));
    CHECK(phi(h1, u.s, u.act, u.theta) == phi(h2, u.s, u.act, u.theta));
  }
  for (const auto& u : diagram_setups()) {
    if (u.s.order() > 4) continue;
    CAPTURE(u.name);
    CHECK(homology_classes(t3, u.s, u.act) == homology_classes(t4, u.s, u.act));
  }
}

TEST_CASE("homology classes") {
  const auto r3 = fixtures::r3_identity().quandle;
  const auto act = XSetAction::quandle_action(r3);
  const ClassMultiset u = homology_classes(build("L 1"), r3, act);
  for (const auto& [coords, n] : u.counts())
    for (const auto& v : coords) CHECK(v == 0);
  CHECK(u.counts().size() == 1);

  const Diagram d = build(kTrefoil);
  const auto classes = homology_classes(d, r3, act, {{d.unbounded_face(), 0}});
  CHECK(classes.counts().size() == 2);

  // Reoriented colorings give the same classes.
  for (const auto& setup : diagram_setups()) {
    if (setup.s.order() > 4) continue;
    SymmetricComplex cx(setup.s, setup.act);
    auto basis = HomologyBasis::compute(cx, ComplexVariant::Qrho, 2,
                                        CoefficientGroup::integers());
    for (const char* text : {kTrefoil, kHopf}) {
      const Diagram base = build(text);
      for (const auto& o : all_orientations(base.component_count())) {
        const Diagram r = base.with_orientation(o);
        for (const auto& c : enumerate_colorings(base, setup.s, setup.act)) {
          const auto a = basis.class_of(weight_cycle(base, c));
          const auto b = basis.class_of(weight_cycle(r, reorient(c, base, setup.s, o)));
          REQUIRE(a.has_value());
          CHECK(a == b);
        }
      }
    }
  }
}

TEST_CASE("phi rejects non-cocycles") {
  const auto r3 = fixtures::r3_identity().quandle;
  const auto act = XSetAction::quandle_action(r3);
  Cocycle bad(2, CoefficientGroup::modulo(3));
  bad.set({0, {0, 1}}, 1);
  CHECK_THROWS_AS(phi(build(kTrefoil), r3, act, bad), CocycleRejected);
  const auto r4 = fixtures::r4_antipodal().quandle;
  CHECK_THROWS_AS(phi(build(kTrefoil), r4, XSetAction::singleton(r4),
                      fixtures::r4_cocycle()),
                  DegreeMismatch);
}

TEST_CASE("surface chains") {
  const auto r4 = fixtures::r4_antipodal().quandle;
  const auto pt = XSetAction::singleton(r4);
  const auto theta = fixtures::r4_cocycle();
  for (int n = 1; n <= 3; ++n) {
    const auto data = generate_fn_chain(n, 0, 1);
    CHECK(data.groups.size() == 1);
    CHECK(data.groups[0].terms.size() == static_cast<std::size_t>(2 * n));
    CHECK_NOTHROW(check_surface_cycle(data, r4, pt));
    CHECK(phi_surface(data, theta).to_string() == std::to_string(2 * n) + ":1");
    CHECK(triple_point_bound(theta, data) == 2 * n);
  }
  Chain f1(3);
  f1.add({0, {0, 1, 0}}, 1);
  f1.add({0, {1, 0, 1}}, -1);
  CHECK(to_chain(generate_fn_chain(1, 0, 1).groups[0]) == f1);
  f1 *= 2;
  CHECK(to_chain(generate_fn_chain(2, 0, 1).groups[0]) == f1);
  CHECK(phi_surface(generate_fn_chain(2, 0, 0), theta).to_string() == "0:1");

  // Over (R_4, antipodal) with one region color every 3-chain is a relative
  // cycle, so flipping a sign keeps the F^(2) chain a cycle.
  auto flipped = generate_fn_chain(2, 0, 1);
  flipped.groups[0].terms[0].sign = -1;
  CHECK_NOTHROW(check_surface_cycle(flipped, r4, pt));
  // With Y = X over R_3, 2(0,0,1) lies in D^rho but (0,0,1) does not.
  const auto r3 = fixtures::r3_identity().quandle;
  const auto r3x = XSetAction::quandle_action(r3);
  ColoredTriplePointData broken{{{"ok", {}}, {"bad", {{1, {0, {0, 1, 0}}}}}}};
  try {
    check_surface_cycle(broken, r3, r3x);
    FAIL("expected NotACycle");
  } catch (const NotACycle& e) {
    CHECK(e.id == "bad");
    Chain expect(2);
    expect.add({0, {0, 0}}, 1);
    expect.add({0, {0, 1}}, -1);
    expect.add({0, {0, 2}}, 1);
    expect.add({2, {2, 0}}, -1);
    CHECK(e.residual == expect);
  }
  broken.groups[1].terms.push_back({1, {0, {0, 1, 0}}});
  CHECK_NOTHROW(check_surface_cycle(broken, r3, r3x));

  const auto t6 = fixtures::trivial_paired(3).quandle;
  ColoredTriplePointData single{{{"single", {{1, {0, {0, 2, 4}}}}}}};
  CHECK_NOTHROW(check_surface_cycle(single, t6, XSetAction::singleton(t6)));

  const auto t2 = fixtures::t2_identity().quandle;
  ColoredTriplePointData ex82{{{"a", {{1, {0, {0, 1, 0}}}}}}};
  CHECK(phi_surface(ex82, fixtures::t2_cocycle()).to_string() == "1:1");

  ColoredTriplePointData zero{{{"z", {}}}};
  CHECK(phi_surface(zero, theta).to_string() == "0:1");
  CHECK(triple_point_bound(theta, zero) == 0);

  Cocycle doubled(3, CoefficientGroup::integers());
  for (const auto& [t, v] : theta.values()) doubled.set(t, 2 * v);
  CHECK_THROWS_AS(triple_point_bound(doubled, generate_fn_chain(1, 0, 1)),
                  PreconditionViolated);
  CHECK_THROWS_AS(triple_point_bound(fixtures::t2_cocycle(), ex82),
                  PreconditionViolated);
  CHECK_THROWS_AS(generate_fn_chain(0, 0, 1), InputError);
}
