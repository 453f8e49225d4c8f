#pragma once

#include <optional>
#include <string>
#include <vector>

#include "sqk/fixtures.hpp"
#include "sqk/invariants.hpp"

namespace sqk {

/// Contents of a quandle file before any axiom is checked.
struct QuandleFileData {
  Table table;
  std::optional<std::vector<Element>> rho;
  std::vector<std::string> labels;
};

/// `quandle <n>`, n rows of n indices, optional `rho` and `labels` lines.
/// Throws SyntaxError.
QuandleFileData parse_quandle_file(const std::string& text);

/// Validates axioms, the involution (identity when absent) and goodness.
LabeledQuandle load_quandle(const QuandleFileData& data);
inline LabeledQuandle read_quandle(const std::string& text) {
  return load_quandle(parse_quandle_file(text));
}

/// Canonical single-space form; `rho` and `labels` lines only when not
/// trivial/empty.
std::string write_quandle(const LabeledQuandle& q);

/// `xset <ySize> <xSize>` then |Y| rows of |X| indices.
Table parse_xset_file(const std::string& text);
std::string write_xset(const XSetAction& act);

/// Element tokens: decimal indices or labels. Region tokens: indices, `e`
/// for a one-point Y, or element labels when Y is X acted on by itself.
class ElementNames {
 public:
  ElementNames(int x_size, int y_size, std::vector<std::string> labels = {},
               bool y_is_x = false)
      : x_size_(x_size), y_size_(y_size), labels_(std::move(labels)),
        y_is_x_(y_is_x) {}
  Element element(const std::string& token, int line, int column) const;
  Element region(const std::string& token, int line, int column) const;
  std::string element_name(Element x) const;

 private:
  int x_size_;
  int y_size_;
  std::vector<std::string> labels_;
  bool y_is_x_;
};

/// `cocycle deg=<n> coeff=<Z|Z/m> variant=<R|Q|Rrho|Qrho>` then
/// `y x1 .. xn value` lines. Syntax only.
Cocycle parse_cocycle_file(const std::string& text, const ElementNames& names);
/// Parses and checks the cocycle conditions of its variant (CocycleRejected).
Cocycle load_cocycle(const std::string& text, const SymmetricComplex& cx,
                     const ElementNames& names);
std::string write_cocycle(const Cocycle& c);

/// `chain deg=<n>` then `coeff y x1 .. xn` lines.
Chain parse_chain_file(const std::string& text, const ElementNames& names);

/// Blocks `surface coloring <id>` followed by `<sign> y x1 x2 x3` lines.
ColoredTriplePointData parse_surface_file(const std::string& text,
                                          const ElementNames& names);
std::string write_surface(const ColoredTriplePointData& data,
                          const ElementNames& names);

std::string read_text_file(const std::string& path);

}  // namespace sqk
