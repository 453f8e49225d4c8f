#include "sqk/fixtures.hpp"

namespace sqk::fixtures {

namespace {

void add(Cocycle& c, int sign, std::vector<Element> xs) {
  Tuple t{0, std::move(xs)};
  c.set(t, c(t) + sign);
}

}  // namespace

LabeledQuandle r3_identity() {
  return {SymmetricQuandle(make_dihedral(3), Involution::identity(3)), {}};
}

LabeledQuandle r4_antipodal() {
  return {SymmetricQuandle(make_dihedral(4), antipodal_map(4)),
          {"e1", "e2", "e1'", "e2'"}};
}

LabeledQuandle t2_identity() {
  return {SymmetricQuandle(make_trivial(2), Involution::identity(2)),
          {"e1", "e2"}};
}

LabeledQuandle t2_swap() {
  return {SymmetricQuandle(make_trivial(2), Involution::from_map({1, 0})), {}};
}

LabeledQuandle t1() {
  return {SymmetricQuandle(make_trivial(1), Involution::identity(1)), {}};
}

LabeledQuandle trivial_paired(int k) {
  std::vector<Element> rho(2 * k);
  std::vector<std::string> labels;
  for (int i = 0; i < k; ++i) {
    rho[2 * i] = 2 * i + 1;
    rho[2 * i + 1] = 2 * i;
    labels.push_back("e" + std::to_string(i + 1));
    labels.push_back("e" + std::to_string(i + 1) + "'");
  }
  return {SymmetricQuandle(make_trivial(2 * k), Involution::from_map(rho)),
          labels};
}

LabeledQuandle conj_s3() {
  return {make_conjugation(make_symmetric_group(3)), {}};
}

Cocycle mochizuki() {
  Cocycle c(2, CoefficientGroup::modulo(3));
  for (int y = 0; y < 3; ++y)
    for (int a = 0; a < 3; ++a)
      for (int b = 0; b < 3; ++b)
        c.set({y, {a, b}}, (y - a) * (a - b) * (a - b) * b);
  return c;
}

Cocycle torus_link_cocycle() {
  // e1=0, e1'=1, e2=2, e2'=3
  Cocycle c(2, CoefficientGroup::integers());
  add(c, +1, {0, 2});
  add(c, +1, {1, 3});
  add(c, -1, {1, 2});
  add(c, -1, {0, 3});
  return c;
}

Cocycle t6_cocycle() {
  // e1=0, e1'=1, e2=2, e2'=3, e3=4, e3'=5
  Cocycle c(3, CoefficientGroup::integers());
  add(c, +1, {0, 2, 4});
  add(c, +1, {1, 3, 4});
  add(c, +1, {1, 2, 5});
  add(c, +1, {0, 3, 5});
  add(c, -1, {1, 2, 4});
  add(c, -1, {0, 3, 4});
  add(c, -1, {0, 2, 5});
  add(c, -1, {1, 3, 5});
  return c;
}

Cocycle t2_cocycle() {
  Cocycle c(3, CoefficientGroup::modulo(2));
  add(c, +1, {0, 1, 0});
  return c;
}

namespace {

// Sixteen (A, B, A)-shaped terms; `middle_sign` is the sign picked up when
// the middle entry is primed.
Cocycle r4_family(int middle_sign) {
  // e1=0, e2=1, e1'=2, e2'=3; prime(x) = x + 2
  Cocycle c(3, CoefficientGroup::integers());
  for (int base = 0; base < 2; ++base) {
    const int a = base == 0 ? 0 : 1;
    const int b = base == 0 ? 1 : 0;
    const int base_sign = base == 0 ? 1 : -1;
    for (int p1 = 0; p1 < 2; ++p1)
      for (int p2 = 0; p2 < 2; ++p2)
        for (int p3 = 0; p3 < 2; ++p3) {
          int sign = base_sign * ((p1 + p3) % 2 ? -1 : 1);
          if (p2) sign *= middle_sign;
          add(c, sign, {a + 2 * p1, b + 2 * p2, a + 2 * p3});
        }
  }
  return c;
}

}  // namespace

Cocycle r4_cocycle() { return r4_family(+1); }

Cocycle r4_cocycle_as_printed() { return r4_family(-1); }

}  // namespace sqk::fixtures
