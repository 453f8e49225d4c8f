#include "sqk/group.hpp"

#include <algorithm>
#include <string>

namespace sqk {

Word inverse(const Word& w) {
  Word out(w.rbegin(), w.rend());
  for (auto& l : out) l.sign = -l.sign;
  return out;
}

GroupPresentation presentation_assoc(const FiniteQuandle& x) {
  GroupPresentation p;
  p.generators = x.order();
  for (Element a = 0; a < x.order(); ++a)
    for (Element b = 0; b < x.order(); ++b)
      p.relators.push_back({{x.op(a, b), -1}, {b, -1}, {a, +1}, {b, +1}});
  return p;
}

GroupPresentation presentation_sym(const SymmetricQuandle& s) {
  GroupPresentation p = presentation_assoc(s.quandle());
  for (Element a = 0; a < s.order(); ++a)
    p.relators.push_back({{s.rho(a), +1}, {a, +1}});
  return p;
}

AbelianGroupDescriptor abelianization(const GroupPresentation& p) {
  const std::size_t cols = static_cast<std::size_t>(p.generators);
  Lattice relations(cols);
  for (const auto& w : p.relators) {
    std::vector<long> sums(cols, 0);
    for (const auto& l : w) {
      if (l.generator < 0 || l.generator >= p.generators)
        throw InputError("relator letter out of range");
      sums[l.generator] += l.sign;
    }
    SparseVector v;
    for (std::size_t j = 0; j < cols; ++j)
      if (sums[j]) v.emplace_back(j, Integer(sums[j]));
    relations.insert(std::move(v));
  }
  auto smith = smith_normal_form(to_dense(relations.basis(), cols), cols);
  return AbelianGroupDescriptor::from_smith(cols, smith.diagonal);
}

XSetAction XSetAction::build(const Table& act, int x_size) {
  XSetAction a;
  a.y_size_ = static_cast<int>(act.size());
  a.x_size_ = x_size;
  if (a.y_size_ == 0) throw InputError("X-set is empty");
  a.act_.resize(static_cast<std::size_t>(a.y_size_) * x_size);
  a.inv_.assign(a.act_.size(), -1);
  for (int y = 0; y < a.y_size_; ++y) {
    if (static_cast<int>(act[y].size()) != x_size)
      throw InputError("X-set row " + std::to_string(y) + " has " +
                       std::to_string(act[y].size()) + " entries, expected " +
                       std::to_string(x_size));
    for (int x = 0; x < x_size; ++x) {
      Element v = act[y][x];
      if (v < 0 || v >= a.y_size_)
        throw InputError("X-set entry out of range in row " +
                         std::to_string(y));
      a.act_[y * x_size + x] = v;
    }
  }
  for (int x = 0; x < x_size; ++x)
    for (int y = 0; y < a.y_size_; ++y) {
      Element& slot = a.inv_[a.act(y, x) * x_size + x];
      if (slot >= 0) throw NotPermutation(x);
      slot = y;
    }
  return a;
}

XSetAction XSetAction::validate(const SymmetricQuandle& s, const Table& act) {
  XSetAction a = build(act, s.order());
  const int n = s.order();
  for (int y = 0; y < a.y_size_; ++y)
    for (int x1 = 0; x1 < n; ++x1)
      for (int x2 = 0; x2 < n; ++x2)
        if (a.act(y, s.op(x1, x2)) !=
            a.act(a.act(a.act_inverse(y, x2), x1), x2))
          throw RelationViolation(y, x1, x2);
  for (int y = 0; y < a.y_size_; ++y)
    for (int x = 0; x < n; ++x)
      if (a.act(y, s.rho(x)) != a.act_inverse(y, x)) throw RhoViolation(y, x);
  return a;
}

XSetAction XSetAction::quandle_action(const SymmetricQuandle& s) {
  return validate(s, s.quandle().table());
}

XSetAction XSetAction::singleton(const SymmetricQuandle& s) {
  return validate(s, Table(1, std::vector<Element>(s.order(), 0)));
}

Table XSetAction::table() const {
  Table t(y_size_, std::vector<Element>(x_size_));
  for (int y = 0; y < y_size_; ++y)
    for (int x = 0; x < x_size_; ++x) t[y][x] = act(y, x);
  return t;
}

Element word_acts(const XSetAction& act, Element y, const Word& w) {
  for (const auto& l : w)
    y = l.sign > 0 ? act.act(y, l.generator) : act.act_inverse(y, l.generator);
  return y;
}

}  // namespace sqk
