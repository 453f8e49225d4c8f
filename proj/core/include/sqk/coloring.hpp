#pragma once

#include <compare>
#include <map>
#include <vector>

#include "sqk/diagram.hpp"
#include "sqk/group.hpp"

namespace sqk {

/// Canonical (X, rho)_Y-coloring: every semi-arc carries the normal on the
/// left of its direction of travel, so only colors are stored.
struct Coloring {
  std::vector<Element> arc;     // per edge
  std::vector<Element> region;  // per face

  friend auto operator<=>(const Coloring&, const Coloring&) = default;
  friend bool operator==(const Coloring&, const Coloring&) = default;
};

/// Face index -> required region color.
using RegionConstraints = std::map<int, Element>;

/// Arc rules at a crossing: the over arcs agree, and the under arc the over
/// normal points to is the other under arc acted on by the over color.
/// Region rule across an edge: left face = right face · arc color.
bool is_coloring(const Diagram& d, const SymmetricQuandle& s,
                 const XSetAction& act, const Coloring& c);

/// All canonical colorings, sorted.
std::vector<Coloring> enumerate_colorings(const Diagram& d,
                                          const SymmetricQuandle& s,
                                          const XSetAction& act,
                                          const RegionConstraints& constraints = {});

/// The same coloring class for the reoriented diagram: arcs of reversed
/// components take rho of their color; region colors are unchanged.
Coloring reorient(const Coloring& c, const Diagram& d,
                  const SymmetricQuandle& s, const OrientationChoice& o);

}  // namespace sqk
