#include <doctest.h>

#include "sqk/io.hpp"

using namespace sqk;

namespace {

template <class F>
SyntaxError syntax_error(F&& f) {
  try {
    f();
  } catch (const SyntaxError& e) {
    return e;
  }
  FAIL("no SyntaxError");
  return SyntaxError("", 0, 0);
}

}  // namespace

TEST_CASE("quandle files round-trip") {
  for (const auto& lq : {fixtures::r3_identity(), fixtures::r4_antipodal(),
                         fixtures::trivial_paired(3), fixtures::t2_identity(),
                         fixtures::conj_s3()}) {
    const std::string text = write_quandle(lq);
    const LabeledQuandle back = read_quandle(text);
    CHECK(back.quandle == lq.quandle);
    CHECK(back.labels == lq.labels);
    CHECK(write_quandle(back) == text);
  }
}

TEST_CASE("quandle files: comments, defaults and errors") {
  const auto q = read_quandle("# two points\nquandle 2\n0 0  # row\n1 1\n");
  CHECK(q.quandle.rho() == Involution::identity(2));
  CHECK(q.labels.empty());

  auto e = syntax_error([] { parse_quandle_file("quandle 2\n0 0\n1 2\n"); });
  CHECK(e.line == 3);
  CHECK(e.column == 3);
  e = syntax_error([] { parse_quandle_file("quandle 2\n0 0\n1 1\nlabels a a\n"); });
  CHECK(e.line == 4);
  CHECK(e.column == 10);
  e = syntax_error([] { parse_quandle_file("quandle 2\n0 0\n1 1\nlabels a 7\n"); });
  CHECK(e.column == 10);
  e = syntax_error([] { parse_quandle_file("quandle 2\n0 0 0\n1 1\n"); });
  CHECK(e.line == 2);
  e = syntax_error([] { parse_quandle_file("\n\nquandle 2\n0 0\n1 1\nwhat\n"); });
  CHECK(e.line == 6);
  syntax_error([] { parse_quandle_file("table 2\n"); });

  // Axioms are checked only on load.
  const auto bad = parse_quandle_file("quandle 2\n1 1\n0 0\n");
  CHECK_THROWS_AS(load_quandle(bad), AxiomViolation);
  CHECK_THROWS_AS(read_quandle("quandle 3\n0 2 1\n2 1 0\n1 0 2\nrho 1 0 2\n"),
                  ValidationError);
}

TEST_CASE("X-set files round-trip") {
  const auto s = fixtures::r4_antipodal().quandle;
  for (const auto& act : {XSetAction::quandle_action(s), XSetAction::singleton(s)}) {
    const Table t = parse_xset_file(write_xset(act));
    CHECK(static_cast<int>(t.size()) == act.y_size());
    for (int y = 0; y < act.y_size(); ++y)
      for (int x = 0; x < act.x_size(); ++x) CHECK(t[y][x] == act.act(y, x));
  }
  auto e = syntax_error([] { parse_xset_file("xset 2 2\n0 1\n"); });
  CHECK(e.line == 2);
  e = syntax_error([] { parse_xset_file("xset 2 2\n0 1\n1 2\n"); });
  CHECK(e.line == 3);
  CHECK(e.column == 3);
}

TEST_CASE("element and region names") {
  const ElementNames labeled(4, 4, {"e1", "e2", "e1'", "e2'"}, true);
  CHECK(labeled.element("e1'", 1, 1) == 2);
  CHECK(labeled.element("3", 1, 1) == 3);
  CHECK(labeled.region("e2", 1, 1) == 1);
  CHECK(labeled.element_name(3) == "e2'");
  CHECK_THROWS_AS(labeled.region("e", 1, 1), SyntaxError);
  CHECK_THROWS_AS(labeled.element("4", 1, 1), SyntaxError);

  const ElementNames point(4, 1, {"e1", "e2", "e1'", "e2'"});
  CHECK(point.region("e", 1, 1) == 0);
  CHECK(point.region("0", 1, 1) == 0);
  CHECK_THROWS_AS(point.region("e1", 1, 1), SyntaxError);
  CHECK(ElementNames(3, 1).element_name(2) == "2");
}

TEST_CASE("cocycle files") {
  const auto s = fixtures::r3_identity().quandle;
  const SymmetricComplex cx(s, XSetAction::quandle_action(s));
  const ElementNames names(3, 3, {}, true);
  const Cocycle m = fixtures::mochizuki();
  const std::string text = write_cocycle(m);
  const Cocycle back = load_cocycle(text, cx, names);
  CHECK(back.values() == m.values());
  CHECK(back.degree() == 2);
  CHECK(back.coefficients() == m.coefficients());
  CHECK(write_cocycle(back) == text);

  // Defaults Z and Qrho, values reduced modulo the coefficients.
  const Cocycle z = parse_cocycle_file("cocycle deg=1\n0 1 -4\n", names);
  CHECK(z.coefficients().is_integers());
  CHECK(z.variant() == ComplexVariant::Qrho);
  CHECK(z({0, {1}}) == -4);
  const Cocycle r = parse_cocycle_file("cocycle deg=1 coeff=Z/3\n0 1 -4\n", names);
  CHECK(r({0, {1}}) == 2);

  auto e = syntax_error([&] { parse_cocycle_file("cocycle deg=1\n0 1 1\n0 1 2\n", names); });
  CHECK(e.line == 3);
  e = syntax_error([&] { parse_cocycle_file("cocycle deg=2\n0 1 x 1\n", names); });
  CHECK(e.column == 5);
  syntax_error([&] { parse_cocycle_file("cocycle coeff=Z\n", names); });
  syntax_error([&] { parse_cocycle_file("cocycle deg=1 variant=W\n", names); });
  syntax_error([&] { parse_cocycle_file("cocycle deg=1 coeff=Z/1\n", names); });

  // A lone term on a non-degenerate tuple is not a cocycle.
  CHECK_THROWS_AS(
      load_cocycle("cocycle deg=2 coeff=Z/3\n0 0 1 1\n", cx, names), CocycleRejected);
}

TEST_CASE("chain files") {
  const ElementNames names(4, 1, {"e1", "e2", "e1'", "e2'"});
  const Chain c = parse_chain_file(
      "chain deg=2\n2 e 0 e2\n-1 0 e1' e2'\n+3 e 0 e2\n", names);
  CHECK(c.degree() == 2);
  CHECK(c.coefficient({0, {0, 1}}) == 5);
  CHECK(c.coefficient({0, {2, 3}}) == -1);
  CHECK(c.terms().size() == 2);
  auto e = syntax_error([&] { parse_chain_file("chain deg=2\n1 e 0\n", names); });
  CHECK(e.line == 2);
  syntax_error([&] { parse_chain_file("chain deg=2\nx e 0 1\n", names); });
}

TEST_CASE("surface files round-trip") {
  const ElementNames names(4, 1, {"e1", "e2", "e1'", "e2'"});
  const auto data = generate_fn_chain(2, 0, 1);
  const std::string text = write_surface(data, names);
  const auto back = parse_surface_file(text, names);
  REQUIRE(back.groups.size() == 1);
  CHECK(back.groups[0].id == data.groups[0].id);
  CHECK(to_chain(back.groups[0]) == to_chain(data.groups[0]));
  CHECK(write_surface(back, names) == text);

  const auto two = parse_surface_file(
      "surface coloring a\n+1 e e1 e2 e1\nsurface coloring b\n", names);
  CHECK(two.groups.size() == 2);
  CHECK(two.groups[1].terms.empty());

  auto e = syntax_error([&] { parse_surface_file("+1 e e1 e2 e1\n", names); });
  CHECK(e.line == 1);
  e = syntax_error([&] { parse_surface_file("surface coloring a\n0 e e1 e2 e1\n", names); });
  CHECK(e.line == 2);
  syntax_error([&] { parse_surface_file("surface coloring a\n+1 e e1 e2\n", names); });
  syntax_error([&] { parse_surface_file("", names); });
}

TEST_CASE("missing files are input errors") {
  CHECK_THROWS_AS(read_text_file("/nonexistent/file.qnd"), InputError);
}
