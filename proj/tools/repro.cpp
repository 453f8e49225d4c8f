#include "repro.hpp"

#include <functional>
#include <string>
#include <vector>

#include "sqk/fixtures.hpp"
#include "sqk/invariants.hpp"

namespace sqk::tools {

namespace {

struct Item {
  std::string name;
  std::function<bool()> check;
};

const char* kTrefoil = "X[1,5,2,4] X[3,1,4,6] X[5,3,6,2]";

bool passes(const Cocycle& theta, const SymmetricQuandle& s,
            const XSetAction& act) {
  return !find_cocycle_violation(SymmetricComplex(s, act), theta, theta.variant());
}

std::vector<Item> items() {
  std::vector<Item> out;
  out.push_back({"good involutions of R_n (n = 2..12)", [] {
    for (int n = 2; n <= 12; ++n) {
      const std::size_t expect = n % 2 ? 1 : (n % 4 == 2 ? 2 : 4);
      if (enumerate_good_involutions(make_dihedral(n)).size() != expect)
        return false;
    }
    return true;
  }});
  out.push_back({"every involution of T_n is good (n = 1..6)", [] {
    for (int n = 1; n <= 6; ++n)
      if (enumerate_good_involutions(make_trivial(n)) != enumerate_involutions(n))
        return false;
    return true;
  }});
  out.push_back({"associated groups of T_1, T_2", [] {
    return abelianization(presentation_assoc(make_trivial(2))).to_string() == "Z^2" &&
           abelianization(presentation_assoc(make_trivial(1))).to_string() == "Z" &&
           abelianization(presentation_sym(fixtures::t2_swap().quandle)).to_string() == "Z" &&
           abelianization(presentation_sym(fixtures::t1().quandle)).to_string() == "Z/2";
  }});
  out.push_back({"torus links: phi = {m:4, -m:4, 0:8}, m = 1..3", [] {
    const auto s = fixtures::trivial_paired(2).quandle;
    const auto pt = XSetAction::singleton(s);
    for (int m = 1; m <= 3; ++m) {
      const Diagram d = Diagram::build(closed_two_braid(2 * m));
      const std::string ms = std::to_string(m);
      if (phi(d, s, pt, fixtures::torus_link_cocycle()).to_string() !=
              "-" + ms + ":4 0:8 " + ms + ":4" ||
          d.linking_number(0, 1) != m)
        return false;
    }
    return true;
  }});
  out.push_back({"trefoil chirality: 0:3 1:6 vs 0:3 2:6", [] {
    const auto s = fixtures::r3_identity().quandle;
    const auto act = XSetAction::quandle_action(s);
    const Diagram d = Diagram::build(parse_pd(kTrefoil));
    const Diagram m = Diagram::build(mirror_pd(d));
    return phi(d, s, act, fixtures::mochizuki(), {{d.unbounded_face(), 0}})
                   .to_string() == "0:3 1:6" &&
           phi(m, s, act, fixtures::mochizuki(), {{m.unbounded_face(), 0}})
                   .to_string() == "0:3 2:6";
  }});
  out.push_back({"2-cocycles: Mochizuki (Z/3), torus link (Z)", [] {
    const auto r3 = fixtures::r3_identity().quandle;
    const auto t4 = fixtures::trivial_paired(2).quandle;
    return passes(fixtures::mochizuki(), r3, XSetAction::quandle_action(r3)) &&
           passes(fixtures::torus_link_cocycle(), t4, XSetAction::singleton(t4));
  }});
  out.push_back({"3-cocycle on (T_6, pairing)", [] {
    const auto t6 = fixtures::trivial_paired(3).quandle;
    return passes(fixtures::t6_cocycle(), t6, XSetAction::singleton(t6));
  }});
  out.push_back({"3-cocycle on (T_2, id) over Z/2", [] {
    const auto t2 = fixtures::t2_identity().quandle;
    return passes(fixtures::t2_cocycle(), t2, XSetAction::singleton(t2));
  }});
  out.push_back({"3-cocycle on (R_4, antipodal), sign-corrected", [] {
    const auto r4 = fixtures::r4_antipodal().quandle;
    const auto pt = XSetAction::singleton(r4);
    return passes(fixtures::r4_cocycle(), r4, pt) &&
           !passes(fixtures::r4_cocycle_as_printed(), r4, pt);
  }});
  out.push_back({"F^(n) chains: theta = 2n, bound t(F) >= 2n (n = 1..3)", [] {
    const auto r4 = fixtures::r4_antipodal().quandle;
    const auto pt = XSetAction::singleton(r4);
    for (int n = 1; n <= 3; ++n) {
      const auto data = generate_fn_chain(n, 0, 1);
      check_surface_cycle(data, r4, pt);
      if (triple_point_bound(fixtures::r4_cocycle(), data) != 2 * n) return false;
    }
    return true;
  }});
  return out;
}

}  // namespace

int run_repro(std::ostream& out) {
  int failures = 0;
  for (const auto& item : items()) {
    bool ok = false;
    std::string why;
    try {
      ok = item.check();
    } catch (const std::exception& e) {
      why = std::string(" (") + e.what() + ")";
    }
    if (!ok) ++failures;
    out << (ok ? "PASS " : "FAIL ") << item.name << why << "\n";
  }
  return failures;
}

}  // namespace sqk::tools
