#include "sqk/coloring.hpp"

#include <algorithm>
#include <deque>

namespace sqk {

namespace {

// Index of the under edge the over normal points away from / towards.
std::pair<int, int> under_source_target(const DiagramCrossing& x) {
  return x.over_forward ? std::pair{x.edge[0], x.edge[2]}
                        : std::pair{x.edge[2], x.edge[0]};
}

class ArcSolver {
 public:
  ArcSolver(const Diagram& d, const SymmetricQuandle& s) : d_(d), s_(s) {}

  std::vector<std::vector<Element>> solve() {
    std::vector<Element> arc(d_.edges().size(), -1);
    std::vector<std::vector<Element>> out;
    search(arc, out);
    return out;
  }

 private:
  bool set(std::vector<Element>& arc, int e, Element v) {
    if (arc[e] < 0) {
      arc[e] = v;
      changed_ = true;
      return true;
    }
    return arc[e] == v;
  }

  bool propagate(std::vector<Element>& arc) {
    do {
      changed_ = false;
      for (const auto& x : d_.crossings()) {
        const int o1 = x.edge[1], o3 = x.edge[3];
        if (arc[o1] >= 0 && !set(arc, o3, arc[o1])) return false;
        if (arc[o3] >= 0 && !set(arc, o1, arc[o3])) return false;
        const Element over = arc[o1];
        if (over < 0) continue;
        auto [src, dst] = under_source_target(x);
        if (arc[src] >= 0 && !set(arc, dst, s_.op(arc[src], over)))
          return false;
        if (arc[dst] >= 0 && !set(arc, src, s_.inv_op(arc[dst], over)))
          return false;
      }
    } while (changed_);
    return true;
  }

  void search(std::vector<Element>& arc,
              std::vector<std::vector<Element>>& out) {
    if (!propagate(arc)) return;
    auto it = std::find(arc.begin(), arc.end(), -1);
    if (it == arc.end()) {
      out.push_back(arc);
      return;
    }
    const auto e = it - arc.begin();
    for (Element v = 0; v < s_.order(); ++v) {
      std::vector<Element> next = arc;
      next[e] = v;
      search(next, out);
    }
  }

  const Diagram& d_;
  const SymmetricQuandle& s_;
  bool changed_ = false;
};

// Region colors from the unbounded face outwards along the dual graph;
// false if some edge disagrees.
bool fill_regions(const Diagram& d, const XSetAction& act,
                  const std::vector<Element>& arc, Element base,
                  std::vector<Element>& region) {
  region.assign(d.face_count(), -1);
  std::vector<std::vector<int>> incident(d.face_count());
  for (std::size_t e = 0; e < d.edges().size(); ++e) {
    incident[d.edges()[e].left_face].push_back(static_cast<int>(e));
    incident[d.edges()[e].right_face].push_back(static_cast<int>(e));
  }
  std::deque<int> queue{d.unbounded_face()};
  region[d.unbounded_face()] = base;
  while (!queue.empty()) {
    const int f = queue.front();
    queue.pop_front();
    for (int e : incident[f]) {
      const auto& edge = d.edges()[e];
      int other;
      Element v;
      if (edge.right_face == f) {
        other = edge.left_face;
        v = act.act(region[f], arc[e]);
      } else {
        other = edge.right_face;
        v = act.act_inverse(region[f], arc[e]);
      }
      if (region[other] < 0) {
        region[other] = v;
        queue.push_back(other);
      }
    }
  }
  for (std::size_t e = 0; e < d.edges().size(); ++e) {
    const auto& edge = d.edges()[e];
    if (region[edge.left_face] != act.act(region[edge.right_face], arc[e]))
      return false;
  }
  return true;
}

}  // namespace

bool is_coloring(const Diagram& d, const SymmetricQuandle& s,
                 const XSetAction& act, const Coloring& c) {
  if (c.arc.size() != d.edges().size() ||
      c.region.size() != static_cast<std::size_t>(d.face_count()))
    return false;
  for (Element a : c.arc)
    if (a < 0 || a >= s.order()) return false;
  for (Element y : c.region)
    if (y < 0 || y >= act.y_size()) return false;
  for (const auto& x : d.crossings()) {
    if (c.arc[x.edge[1]] != c.arc[x.edge[3]]) return false;
    auto [src, dst] = under_source_target(x);
    if (c.arc[dst] != s.op(c.arc[src], c.arc[x.edge[1]])) return false;
  }
  for (std::size_t e = 0; e < d.edges().size(); ++e) {
    const auto& edge = d.edges()[e];
    if (c.region[edge.left_face] !=
        act.act(c.region[edge.right_face], c.arc[e]))
      return false;
  }
  return true;
}

std::vector<Coloring> enumerate_colorings(const Diagram& d,
                                          const SymmetricQuandle& s,
                                          const XSetAction& act,
                                          const RegionConstraints& constraints) {
  for (const auto& [f, y] : constraints) {
    if (f < 0 || f >= d.face_count())
      throw InvalidFaceIndex("constraint on missing face " + std::to_string(f));
    if (y < 0 || y >= act.y_size())
      throw InputError("region color " + std::to_string(y) + " out of range");
  }
  std::vector<Element> bases;
  auto fixed = constraints.find(d.unbounded_face());
  if (fixed != constraints.end()) {
    bases.push_back(fixed->second);
  } else {
    for (Element y = 0; y < act.y_size(); ++y) bases.push_back(y);
  }
  std::vector<Coloring> out;
  for (const auto& arc : ArcSolver(d, s).solve())
    for (Element base : bases) {
      Coloring c{arc, {}};
      if (!fill_regions(d, act, arc, base, c.region)) continue;
      bool ok = true;
      for (const auto& [f, y] : constraints) ok = ok && c.region[f] == y;
      if (ok) out.push_back(std::move(c));
    }
  std::sort(out.begin(), out.end());
  return out;
}

Coloring reorient(const Coloring& c, const Diagram& d,
                  const SymmetricQuandle& s, const OrientationChoice& o) {
  if (static_cast<int>(o.size()) != d.component_count())
    throw InputError("orientation choice does not match the components");
  Coloring out = c;
  for (std::size_t e = 0; e < d.edges().size(); ++e)
    if (o[d.edges()[e].component]) out.arc[e] = s.rho(c.arc[e]);
  return out;
}

}  // namespace sqk
