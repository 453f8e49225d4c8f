#pragma once

#include <vector>

#include "sqk/lattice.hpp"
#include "sqk/quandle.hpp"

namespace sqk {

struct Letter {
  Element generator;
  int sign;  // +1 or -1

  friend bool operator==(const Letter&, const Letter&) = default;
};

/// Element of the free group F(X), unreduced.
using Word = std::vector<Letter>;

Word inverse(const Word& w);

struct GroupPresentation {
  int generators = 0;
  std::vector<Word> relators;
};

/// G_X: relators (x▷y)^-1 y^-1 x y for every pair (x, y), in row-major order.
GroupPresentation presentation_assoc(const FiniteQuandle& x);
/// G_(X,rho): the G_X relators followed by rho(x) x for every x.
GroupPresentation presentation_sym(const SymmetricQuandle& s);

/// Abelianization read off the Smith form of the relator exponent-sum matrix.
AbelianGroupDescriptor abelianization(const GroupPresentation& p);

/// Right action of G_(X,rho) on Y = {0..y_size-1}, given on generators.
class XSetAction {
 public:
  /// Checks the raw table act[y][x] = y·x against `s`: every column is a
  /// permutation (NotPermutation), y·(x1▷x2) = ((y·x2^-1)·x1)·x2
  /// (RelationViolation) and y·rho(x) = y·x^-1 (RhoViolation).
  static XSetAction validate(const SymmetricQuandle& s, const Table& act);

  /// Y = X acted on by the quandle operation.
  static XSetAction quandle_action(const SymmetricQuandle& s);
  /// The one-point set.
  static XSetAction singleton(const SymmetricQuandle& s);

  int y_size() const { return y_size_; }
  int x_size() const { return x_size_; }
  Element act(Element y, Element x) const { return act_[y * x_size_ + x]; }
  Element act_inverse(Element y, Element x) const {
    return inv_[y * x_size_ + x];
  }
  Table table() const;

 private:
  XSetAction() = default;
  static XSetAction build(const Table& act, int x_size);
  int y_size_ = 0;
  int x_size_ = 0;
  std::vector<Element> act_;
  std::vector<Element> inv_;
};

inline XSetAction validate_xset(const SymmetricQuandle& s, const Table& act) {
  return XSetAction::validate(s, act);
}

/// y·w, folding generator permutations left to right.
Element word_acts(const XSetAction& act, Element y, const Word& w);

}  // namespace sqk
