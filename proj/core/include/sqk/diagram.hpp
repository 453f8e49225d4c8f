#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "sqk/errors.hpp"

namespace sqk {

/// Planar diagram code. Each crossing lists its four edge labels
/// counterclockwise starting from the incoming under-edge; the over strand
/// occupies slots 1 and 3. `loops` are crossingless components.
struct PDCode {
  std::vector<std::array<int, 4>> crossings;
  std::vector<int> loops;

  /// "X[a,b,c,d] ... L[a] ...".
  std::string to_string() const;
  friend bool operator==(const PDCode&, const PDCode&) = default;
};

/// Accepts `X a b c d`, `X[a,b,c,d]`, `L a`, `L[a]`, an optional `PD[...]`
/// wrapper, commas between records and `#` comments. Throws SyntaxError,
/// LabelCountError and OrientationInconsistency.
PDCode parse_pd(const std::string& text);

/// Per-component flag: true reverses the component.
using OrientationChoice = std::vector<bool>;

struct Endpoint {
  int crossing = -1;
  int slot = -1;
  friend bool operator==(const Endpoint&, const Endpoint&) = default;
};

struct DiagramEdge {
  int label = 0;
  int component = 0;
  bool loop = false;
  /// Ends in the direction of travel (unset for loops).
  Endpoint tail;
  Endpoint head;
  /// Faces on either side of the direction of travel.
  int left_face = 0;
  int right_face = 0;
};

struct DiagramCrossing {
  /// Edge index at each slot.
  std::array<int, 4> edge{};
  /// Under strand travels slot 0 -> 2 (otherwise 2 -> 0).
  bool under_forward = true;
  /// Over strand travels slot 3 -> 1 (otherwise 1 -> 3).
  bool over_forward = true;
  /// Face in the corner between slots k and k+1.
  std::array<int, 4> corner_face{};
  int under_component = 0;
  int over_component = 0;

  int sign() const { return under_forward == over_forward ? 1 : -1; }
};

/// A PD code realized on the plane: edges (semi-arcs), traced faces,
/// component orientations and crossing signs. Slots are placed
/// counterclockwise at south, east, north, west.
class Diagram {
 public:
  /// Faces are numbered in tracing order. Without `unbounded_face` the face
  /// with the most edges (lowest index on ties) is unbounded. For split
  /// diagrams every part's outer face is merged into one region, which must
  /// then be the unbounded face. Throws InvalidFaceIndex and PlanarityError.
  static Diagram build(const PDCode& pd,
                       std::optional<int> unbounded_face = std::nullopt);

  const PDCode& pd() const { return pd_; }
  const std::vector<DiagramEdge>& edges() const { return edges_; }
  const std::vector<DiagramCrossing>& crossings() const { return crossings_; }
  int face_count() const { return face_count_; }
  /// Number of edge sides on each face's boundary.
  const std::vector<int>& face_sizes() const { return face_sizes_; }
  int unbounded_face() const { return unbounded_; }
  int component_count() const { return components_; }
  /// Connected pieces of the underlying 4-valent graph (loops count).
  int part_count() const { return parts_; }
  int edge_index(int label) const;

  /// The diagram with the chosen components reversed.
  Diagram with_orientation(const OrientationChoice& o) const;

  int writhe() const;
  /// Half the sum of signs of crossings between components a and b.
  int linking_number(int a, int b) const;

 private:
  Diagram() = default;
  PDCode pd_;
  std::vector<DiagramEdge> edges_;
  std::vector<DiagramCrossing> crossings_;
  std::vector<int> face_sizes_;
  int face_count_ = 0;
  int unbounded_ = 0;
  int components_ = 0;
  int parts_ = 0;
};

/// Crossing changes at every crossing (the mirror image).
PDCode mirror_pd(const Diagram& d);

/// Closure of the 2-strand braid sigma_1^k; a 2-component link when k is
/// even, every crossing positive.
PDCode closed_two_braid(int k);

/// Adds a Reidemeister-I kink on the edge with `label`, splitting it.
PDCode insert_kink(const Diagram& d, int label, bool positive);

}  // namespace sqk
