#include "sqk/invariants.hpp"

namespace sqk {

namespace {

struct Vec {
  int x, y;
};

Vec under_dir(const DiagramCrossing& c) { return {0, c.under_forward ? 1 : -1}; }
Vec over_dir(const DiagramCrossing& c) { return {c.over_forward ? 1 : -1, 0}; }
Vec left_normal(Vec t) { return {-t.y, t.x}; }

int corner_towards(Vec q) {
  if (q.x > 0) return q.y < 0 ? 0 : 1;
  return q.y > 0 ? 2 : 3;
}

// Corner shared by two adjacent slots.
int corner_between(int a, int b) { return (a + 1) % 4 == b ? a : b; }

void require_cocycle(const SymmetricQuandle& s, const XSetAction& act,
                     const Cocycle& theta) {
  if (theta.degree() != 2)
    throw DegreeMismatch("link invariants need a 2-cocycle");
  SymmetricComplex cx(s, act);
  if (auto w = find_cocycle_violation(cx, theta, ComplexVariant::Qrho))
    throw CocycleRejected(*w);
}

Chain sum_terms(const std::vector<WeightTerm>& terms, int degree) {
  Chain out(degree);
  for (const auto& t : terms) out.add(t.tuple, t.sign);
  return out;
}

}  // namespace

void InvariantMultiset::add(const Integer& value, std::size_t count) {
  counts_[value] += count;
}

std::size_t InvariantMultiset::total() const {
  std::size_t n = 0;
  for (const auto& [v, c] : counts_) n += c;
  return n;
}

std::string InvariantMultiset::to_string() const {
  std::string out;
  for (const auto& [v, c] : counts_) {
    if (!out.empty()) out += ' ';
    out += v.get_str() + ":" + std::to_string(c);
  }
  return out;
}

void ClassMultiset::add(const std::vector<Integer>& coords) { ++counts_[coords]; }

std::string ClassMultiset::to_string() const {
  std::string out;
  for (const auto& [v, c] : counts_) {
    if (!out.empty()) out += ' ';
    out += '(';
    for (std::size_t i = 0; i < v.size(); ++i) {
      if (i) out += ',';
      out += v[i].get_str();
    }
    out += "):" + std::to_string(c);
  }
  return out;
}

std::vector<WeightTerm> crossing_weights(const Diagram& d, const Coloring& c) {
  std::vector<WeightTerm> out;
  for (const auto& x : d.crossings()) {
    const Vec nu = left_normal(under_dir(x));
    const Vec no = left_normal(over_dir(x));
    const Vec q{-(nu.x + no.x), -(nu.y + no.y)};
    const int corner = corner_towards(q);
    const Element x1 = c.arc[x.edge[q.y < 0 ? 0 : 2]];
    const Element x2 = c.arc[x.edge[q.x > 0 ? 1 : 3]];
    const int sign = no.x * nu.y - no.y * nu.x;
    out.push_back({sign, {c.region[x.corner_face[corner]], {x1, x2}}});
  }
  return out;
}

Chain weight_cycle(const Diagram& d, const Coloring& c) {
  return sum_terms(crossing_weights(d, c), 2);
}

InvariantMultiset phi(const Diagram& d, const SymmetricQuandle& s,
                      const XSetAction& act, const Cocycle& theta,
                      const RegionConstraints& constraints) {
  require_cocycle(s, act, theta);
  InvariantMultiset out;
  for (const auto& c : enumerate_colorings(d, s, act, constraints))
    out.add(evaluate(theta, weight_cycle(d, c)));
  return out;
}

InvariantMultiset phi_oriented(const Diagram& d, const SymmetricQuandle& s,
                               const XSetAction& act, const Cocycle& theta,
                               const OrientationChoice& o,
                               const RegionConstraints& constraints) {
  require_cocycle(s, act, theta);
  const Diagram plus = d.with_orientation(o);
  InvariantMultiset out;
  for (const auto& c : enumerate_colorings(plus, s, act, constraints)) {
    Chain cycle(2);
    for (const auto& x : plus.crossings()) {
      const int in_under = x.under_forward ? 0 : 2;
      const int out_under = 2 - in_under;
      const int in_over = x.over_forward ? 3 : 1;
      const int out_over = 4 - in_over;
      const Element over = c.arc[x.edge[1]];
      if (x.sign() > 0) {
        const int corner = corner_between(in_under, out_over);
        cycle.add({c.region[x.corner_face[corner]],
                   {c.arc[x.edge[in_under]], over}},
                  1);
      } else {
        const int corner = corner_between(in_over, out_under);
        cycle.add({c.region[x.corner_face[corner]],
                   {c.arc[x.edge[out_under]], over}},
                  -1);
      }
    }
    out.add(evaluate(theta, cycle));
  }
  return out;
}

ClassMultiset homology_classes(const Diagram& d, const SymmetricQuandle& s,
                               const XSetAction& act,
                               const RegionConstraints& constraints,
                               std::size_t cap) {
  SymmetricComplex cx(s, act);
  auto basis = HomologyBasis::compute(cx, ComplexVariant::Qrho, 2,
                                      CoefficientGroup::integers(), cap);
  ClassMultiset out;
  for (const auto& c : enumerate_colorings(d, s, act, constraints)) {
    auto coords = basis.class_of(weight_cycle(d, c));
    if (!coords)
      throw ValidationError("weight chain is not a 2-cycle");
    out.add(*coords);
  }
  return out;
}

Chain to_chain(const ColoredTriplePointData::Group& g) {
  for (const auto& t : g.terms)
    if (t.tuple.degree() != 3)
      throw DegreeMismatch("triple point weights have three X entries");
  return sum_terms(g.terms, 3);
}

void check_surface_cycle(const ColoredTriplePointData& data,
                         const SymmetricQuandle& s, const XSetAction& act) {
  SymmetricComplex cx(s, act);
  const auto gens = cx.variant_generators(ComplexVariant::Qrho, 2);
  for (const auto& g : data.groups) {
    Chain c = to_chain(g);
    for (const auto& [t, v] : c.terms()) cx.index_of(t);  // range check
    Chain b = cx.boundary(c);
    if (!chain_in_subgroup(b, gens)) throw NotACycle(g.id, b);
  }
}

InvariantMultiset phi_surface(const ColoredTriplePointData& data,
                              const Cocycle& theta) {
  InvariantMultiset out;
  for (const auto& g : data.groups) out.add(evaluate(theta, to_chain(g)));
  return out;
}

Integer triple_point_bound(const Cocycle& theta,
                           const ColoredTriplePointData& data) {
  if (!theta.coefficients().is_integers())
    throw PreconditionViolated("triple point bound needs an integer cocycle");
  for (const auto& [t, v] : theta.values())
    if (abs(v) > 1)
      throw PreconditionViolated("|theta" + t.to_string() + "| = " +
                                 Integer(abs(v)).get_str() + " exceeds 1");
  Integer best = 0;
  for (const auto& g : data.groups) {
    Integer v = abs(evaluate(theta, to_chain(g)));
    if (v > best) best = v;
  }
  return best;
}

ColoredTriplePointData generate_fn_chain(int n, Element x, Element y) {
  if (n < 1) throw InputError("F^(n) needs n >= 1");
  ColoredTriplePointData data;
  ColoredTriplePointData::Group g{"F" + std::to_string(n), {}};
  for (int i = 0; i < n; ++i) g.terms.push_back({1, {0, {x, y, x}}});
  for (int i = 0; i < n; ++i) g.terms.push_back({-1, {0, {y, x, y}}});
  data.groups.push_back(std::move(g));
  return data;
}

}  // namespace sqk
