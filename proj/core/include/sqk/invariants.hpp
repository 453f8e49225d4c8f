#pragma once

#include <cstddef>
#include <map>
#include <string>
#include <vector>

#include "sqk/coloring.hpp"
#include "sqk/homology.hpp"

namespace sqk {

struct WeightTerm {
  int sign = 1;
  Tuple tuple;
  friend bool operator==(const WeightTerm&, const WeightTerm&) = default;
};

/// Values with multiplicities, printed as "value:count" in increasing order.
class InvariantMultiset {
 public:
  void add(const Integer& value, std::size_t count = 1);
  const std::map<Integer, std::size_t>& counts() const { return counts_; }
  std::size_t total() const;
  std::string to_string() const;
  friend bool operator==(const InvariantMultiset&,
                         const InvariantMultiset&) = default;

 private:
  std::map<Integer, std::size_t> counts_;
};

/// Class coordinates with multiplicities.
class ClassMultiset {
 public:
  void add(const std::vector<Integer>& coords);
  const std::map<std::vector<Integer>, std::size_t>& counts() const {
    return counts_;
  }
  /// "(c1,c2):count ..."; "():count" when H_2 is trivial.
  std::string to_string() const;
  friend bool operator==(const ClassMultiset&, const ClassMultiset&) = default;

 private:
  std::map<std::vector<Integer>, std::size_t> counts_;
};

/// One weight per crossing, read from the corner both normals leave:
/// ε(y, x_1, x_2) with x_1 the under semi-arc and x_2 the over semi-arc
/// facing that corner, ε the crossing sign.
std::vector<WeightTerm> crossing_weights(const Diagram& d, const Coloring& c);
Chain weight_cycle(const Diagram& d, const Coloring& c);

/// Multiset of θ(c_{D,C}) over all colorings. θ must be a 2-cocycle of the
/// (Q, rho) complex (CocycleRejected otherwise).
InvariantMultiset phi(const Diagram& d, const SymmetricQuandle& s,
                      const XSetAction& act, const Cocycle& theta,
                      const RegionConstraints& constraints = {});

/// Same multiset computed on the oriented diagram D^+: colorings of D^+
/// and weights read from incoming under-arcs, +(y, x_in, x_over) at the
/// corner between incoming under and outgoing over for positive crossings,
/// -(y, x_out, x_over) at the corner between incoming over and outgoing
/// under for negative ones.
InvariantMultiset phi_oriented(const Diagram& d, const SymmetricQuandle& s,
                               const XSetAction& act, const Cocycle& theta,
                               const OrientationChoice& o,
                               const RegionConstraints& constraints = {});

/// Classes [c_{D,C}] in H_2^{Q,rho} over Z.
ClassMultiset homology_classes(const Diagram& d, const SymmetricQuandle& s,
                               const XSetAction& act,
                               const RegionConstraints& constraints = {},
                               std::size_t cap = kDefaultSizeCap);

/// Colored triple-point data of a surface diagram: signed degree 3 tuples
/// grouped by coloring.
struct ColoredTriplePointData {
  struct Group {
    std::string id;
    std::vector<WeightTerm> terms;
  };
  std::vector<Group> groups;
};

Chain to_chain(const ColoredTriplePointData::Group& g);

class NotACycle : public ValidationError {
 public:
  NotACycle(std::string id, Chain residual)
      : ValidationError("coloring " + id + " is not a 3-cycle: boundary " +
                        residual.to_string() + " lies outside D^Q + D^rho"),
        id(std::move(id)),
        residual(std::move(residual)) {}
  std::string id;
  Chain residual;
};

/// Throws NotACycle for the first group whose boundary is not in
/// span(D_2^Q ∪ D_2^rho).
void check_surface_cycle(const ColoredTriplePointData& data,
                         const SymmetricQuandle& s, const XSetAction& act);

InvariantMultiset phi_surface(const ColoredTriplePointData& data,
                              const Cocycle& theta);

/// max |θ(c)| over the groups; needs θ over Z with every |θ(t)| ≤ 1
/// (PreconditionViolated otherwise).
Integer triple_point_bound(const Cocycle& theta,
                           const ColoredTriplePointData& data);

/// n(e, x, y, x) - n(e, y, x, y) as 2n terms in one group.
ColoredTriplePointData generate_fn_chain(int n, Element x, Element y);

}  // namespace sqk
