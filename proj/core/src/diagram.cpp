#include "sqk/diagram.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <numeric>

namespace sqk {

namespace {

struct Token {
  enum Kind { Word, Number, Open, Close, Comma, End } kind;
  std::string text;
  long long value = 0;
  int line = 1;
  int column = 1;
};

std::vector<Token> tokenize(const std::string& text) {
  std::vector<Token> out;
  int line = 1, column = 1;
  std::size_t i = 0;
  auto advance = [&](std::size_t k) {
    for (std::size_t j = 0; j < k; ++j) {
      if (text[i] == '\n') {
        ++line;
        column = 1;
      } else {
        ++column;
      }
      ++i;
    }
  };
  while (i < text.size()) {
    const char ch = text[i];
    if (std::isspace(static_cast<unsigned char>(ch))) {
      advance(1);
    } else if (ch == '#') {
      while (i < text.size() && text[i] != '\n') advance(1);
    } else if (ch == '[' || ch == ']' || ch == ',') {
      out.push_back({ch == '[' ? Token::Open
                     : ch == ']' ? Token::Close
                                 : Token::Comma,
                     std::string(1, ch), 0, line, column});
      advance(1);
    } else if (std::isdigit(static_cast<unsigned char>(ch)) || ch == '-') {
      std::size_t j = i + 1;
      while (j < text.size() && std::isdigit(static_cast<unsigned char>(text[j])))
        ++j;
      std::string num = text.substr(i, j - i);
      if (num == "-") throw SyntaxError("expected a number", line, column);
      if (num.size() > 12) throw SyntaxError("label too large", line, column);
      out.push_back({Token::Number, num, std::stoll(num), line, column});
      advance(j - i);
    } else if (std::isalpha(static_cast<unsigned char>(ch))) {
      std::size_t j = i;
      while (j < text.size() && std::isalpha(static_cast<unsigned char>(text[j])))
        ++j;
      out.push_back({Token::Word, text.substr(i, j - i), 0, line, column});
      advance(j - i);
    } else {
      throw SyntaxError(std::string("unexpected character '") + ch + "'", line,
                        column);
    }
  }
  out.push_back({Token::End, "", 0, line, column});
  return out;
}

class Parser {
 public:
  explicit Parser(std::vector<Token> tokens) : t_(std::move(tokens)) {}

  PDCode parse() {
    PDCode pd;
    bool wrapped = false;
    if (peek().kind == Token::Word && peek().text == "PD") {
      next();
      expect(Token::Open, "'[' after PD");
      wrapped = true;
    }
    for (;;) {
      const Token& tok = peek();
      if (tok.kind == Token::End) break;
      if (tok.kind == Token::Comma) {
        next();
        continue;
      }
      if (tok.kind == Token::Close && wrapped) {
        next();
        wrapped = false;
        if (peek().kind != Token::End)
          throw error(peek(), "trailing input after PD[...]");
        break;
      }
      if (tok.kind != Token::Word || (tok.text != "X" && tok.text != "L"))
        throw error(tok, "expected X or L record, got '" + tok.text + "'");
      next();
      if (tok.text == "X") {
        auto labels = numbers(4);
        pd.crossings.push_back({labels[0], labels[1], labels[2], labels[3]});
      } else {
        pd.loops.push_back(numbers(1)[0]);
      }
    }
    if (wrapped) throw error(peek(), "missing ']' closing PD[");
    return pd;
  }

 private:
  const Token& peek() const { return t_[pos_]; }
  const Token& next() { return t_[pos_++]; }

  SyntaxError error(const Token& t, const std::string& msg) const {
    return SyntaxError(msg, t.line, t.column);
  }

  void expect(Token::Kind k, const std::string& what) {
    if (peek().kind != k) throw error(peek(), "expected " + what);
    next();
  }

  int label() {
    const Token& t = peek();
    if (t.kind != Token::Number) throw error(t, "expected an edge label");
    if (t.value <= 0 || t.value > 1000000000)
      throw error(t, "edge labels must be positive integers");
    next();
    return static_cast<int>(t.value);
  }

  std::vector<int> numbers(int k) {
    std::vector<int> out;
    if (peek().kind == Token::Open) {
      next();
      for (int i = 0; i < k; ++i) {
        if (i) expect(Token::Comma, "','");
        out.push_back(label());
      }
      expect(Token::Close, "']'");
    } else {
      for (int i = 0; i < k; ++i) out.push_back(label());
    }
    return out;
  }

  std::vector<Token> t_;
  std::size_t pos_ = 0;
};

// Edge ends and component traversal shared by parse_pd and Diagram::build.
struct Skeleton {
  std::vector<int> labels;                    // sorted, edge index -> label
  std::map<int, int> index;                   // label -> edge index
  std::vector<std::array<Endpoint, 2>> ends;  // crossing edges only
  std::vector<bool> loop;
  std::vector<std::array<int, 4>> slot_edge;  // crossing, slot -> edge
  std::vector<int> component;
  std::vector<int> tail_end;                  // which of ends[] is the tail
  int components = 0;
};

Skeleton skeleton(const PDCode& pd) {
  Skeleton s;
  std::map<int, int> counts;
  for (const auto& x : pd.crossings)
    for (int l : x) ++counts[l];
  for (const auto& [l, c] : counts)
    if (c != 2) throw LabelCountError(l, c);
  std::map<int, int> loop_counts;
  for (int l : pd.loops) ++loop_counts[l];
  for (const auto& [l, c] : loop_counts)
    if (c != 1 || counts.count(l)) throw LabelCountError(l, c + counts[l]);

  for (const auto& [l, c] : counts) s.labels.push_back(l);
  for (const auto& [l, c] : loop_counts) s.labels.push_back(l);
  std::sort(s.labels.begin(), s.labels.end());
  for (std::size_t i = 0; i < s.labels.size(); ++i)
    s.index[s.labels[i]] = static_cast<int>(i);
  const std::size_t e = s.labels.size();
  s.ends.assign(e, {Endpoint{}, Endpoint{}});
  s.loop.assign(e, false);
  for (int l : pd.loops) s.loop[s.index[l]] = true;
  std::vector<int> seen(e, 0);
  s.slot_edge.resize(pd.crossings.size());
  for (std::size_t c = 0; c < pd.crossings.size(); ++c)
    for (int k = 0; k < 4; ++k) {
      const int idx = s.index[pd.crossings[c][k]];
      s.slot_edge[c][k] = idx;
      s.ends[idx][seen[idx]++] = {static_cast<int>(c), k};
    }

  s.component.assign(e, -1);
  s.tail_end.assign(e, 0);
  for (std::size_t start = 0; start < e; ++start) {
    if (s.component[start] >= 0) continue;
    const int comp = s.components++;
    if (s.loop[start]) {
      s.component[start] = comp;
      continue;
    }
    // Walk the component, recording edges with their tail ends and the
    // slots through which crossings are entered.
    std::vector<std::pair<int, int>> walk;  // edge, tail end
    std::vector<Endpoint> entries;
    int cur = static_cast<int>(start), from = 0;
    do {
      s.component[cur] = comp;
      walk.push_back({cur, from});
      const Endpoint at = s.ends[cur][1 - from];
      entries.push_back(at);
      const int exit_slot = (at.slot + 2) % 4;
      const int nxt = s.slot_edge[at.crossing][exit_slot];
      const Endpoint out{at.crossing, exit_slot};
      from = s.ends[nxt][0] == out ? 0 : 1;
      cur = nxt;
    } while (!(cur == static_cast<int>(start) && from == 0));

    int forward = 0, backward = 0;
    for (const auto& en : entries) {
      if (en.slot == 0) ++forward;
      if (en.slot == 2) ++backward;
    }
    if (forward && backward)
      throw OrientationInconsistency(
          "component through edge " + std::to_string(s.labels[start]) +
          " enters some under-crossings at the incoming slot and others at "
          "the outgoing slot");
    bool reverse = backward > 0;
    if (!forward && !backward && walk.size() > 2) {
      // Over-only component: labels increase along the orientation.
      const std::size_t m = walk.size();
      const int prev = s.labels[walk[m - 1].first];
      const int nxt = s.labels[walk[1].first];
      reverse = nxt > prev;
    }
    for (const auto& [edge, tail] : walk)
      s.tail_end[edge] = reverse ? 1 - tail : tail;
  }
  return s;
}

}  // namespace

std::string PDCode::to_string() const {
  std::string out;
  for (const auto& x : crossings) {
    if (!out.empty()) out += ' ';
    out += "X[" + std::to_string(x[0]) + "," + std::to_string(x[1]) + "," +
           std::to_string(x[2]) + "," + std::to_string(x[3]) + "]";
  }
  for (int l : loops) {
    if (!out.empty()) out += ' ';
    out += "L[" + std::to_string(l) + "]";
  }
  return out;
}

PDCode parse_pd(const std::string& text) {
  PDCode pd = Parser(tokenize(text)).parse();
  if (pd.crossings.empty() && pd.loops.empty())
    throw SyntaxError("empty PD code", 1, 1);
  skeleton(pd);
  return pd;
}

int Diagram::edge_index(int label) const {
  for (std::size_t i = 0; i < edges_.size(); ++i)
    if (edges_[i].label == label) return static_cast<int>(i);
  throw InputError("no edge labelled " + std::to_string(label));
}

Diagram Diagram::build(const PDCode& pd, std::optional<int> unbounded_face) {
  Skeleton s = skeleton(pd);
  Diagram d;
  d.pd_ = pd;
  d.components_ = s.components;
  const int n = static_cast<int>(pd.crossings.size());
  const int e = static_cast<int>(s.labels.size());

  d.crossings_.resize(n);
  for (int c = 0; c < n; ++c) d.crossings_[c].edge = s.slot_edge[c];
  d.edges_.resize(e);
  for (int i = 0; i < e; ++i) {
    auto& edge = d.edges_[i];
    edge.label = s.labels[i];
    edge.component = s.component[i];
    edge.loop = s.loop[i];
    if (edge.loop) continue;
    edge.tail = s.ends[i][s.tail_end[i]];
    edge.head = s.ends[i][1 - s.tail_end[i]];
    // The head is where the edge enters a crossing.
    auto& x = d.crossings_[edge.head.crossing];
    switch (edge.head.slot) {
      case 0:
        x.under_forward = true;
        x.under_component = edge.component;
        break;
      case 2:
        x.under_forward = false;
        x.under_component = edge.component;
        break;
      case 3:
        x.over_forward = true;
        x.over_component = edge.component;
        break;
      case 1:
        x.over_forward = false;
        x.over_component = edge.component;
        break;
    }
  }

  // Parts: union-find over crossings; loops are parts of their own.
  std::vector<int> parent(n);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int a) {
    while (parent[a] != a) a = parent[a] = parent[parent[a]];
    return a;
  };
  for (int i = 0; i < e; ++i)
    if (!s.loop[i])
      parent[find(s.ends[i][0].crossing)] = find(s.ends[i][1].crossing);
  std::map<int, int> part_of_root;
  std::vector<int> crossing_part(n);
  for (int c = 0; c < n; ++c) {
    auto [it, fresh] = part_of_root.try_emplace(
        find(c), static_cast<int>(part_of_root.size()));
    crossing_part[c] = it->second;
  }
  int parts = static_cast<int>(part_of_root.size());

  // Trace raw faces: a dart leaves (c, s) along its edge; at the far end
  // (c', q) the boundary continues from slot q-1, the face lying in corner
  // q-1 of c' and on the left of every dart.
  std::vector<int> dart_face(4 * n, -1);
  std::vector<int> raw_size;
  std::vector<int> raw_part;
  std::vector<std::array<int, 4>> raw_corner(n);
  auto far_end = [&](int c, int slot) {
    const int edge = s.slot_edge[c][slot];
    const Endpoint self{c, slot};
    return s.ends[edge][0] == self ? s.ends[edge][1] : s.ends[edge][0];
  };
  for (int start = 0; start < 4 * n; ++start) {
    if (dart_face[start] >= 0) continue;
    const int f = static_cast<int>(raw_size.size());
    raw_size.push_back(0);
    raw_part.push_back(crossing_part[start / 4]);
    int dart = start;
    do {
      dart_face[dart] = f;
      ++raw_size[f];
      const Endpoint at = far_end(dart / 4, dart % 4);
      const int corner = (at.slot + 3) % 4;
      raw_corner[at.crossing][corner] = f;
      dart = 4 * at.crossing + corner;
    } while (dart != start);
  }
  std::map<int, std::pair<int, int>> loop_faces;  // edge -> (left, right)
  for (int i = 0; i < e; ++i)
    if (s.loop[i]) {
      const int f = static_cast<int>(raw_size.size());
      raw_size.push_back(1);
      raw_size.push_back(1);
      raw_part.push_back(parts);
      raw_part.push_back(parts);
      loop_faces[i] = {f, f + 1};
      ++parts;
    }
  d.parts_ = parts;

  // Euler characteristic of every part with crossings.
  {
    std::vector<int> v(parts, 0), faces(parts, 0);
    for (int c = 0; c < n; ++c) ++v[crossing_part[c]];
    for (std::size_t f = 0; f < raw_size.size(); ++f) ++faces[raw_part[f]];
    for (int p = 0; p < parts; ++p)
      if (v[p] > 0 && v[p] - 2 * v[p] + faces[p] != 2)
        throw PlanarityError("PD code is not planar: V - E + F = " +
                             std::to_string(faces[p] - v[p]) +
                             " on a connected part");
  }

  // Merge the outer faces of split diagrams.
  const int raw_count = static_cast<int>(raw_size.size());
  std::vector<int> outer(parts, -1);
  for (int f = 0; f < raw_count; ++f) {
    int& o = outer[raw_part[f]];
    if (o < 0 || raw_size[f] > raw_size[o]) o = f;
  }
  std::vector<int> final_of(raw_count);
  std::vector<int> sizes;
  int merged = -1;
  for (int f = 0; f < raw_count; ++f) {
    const bool is_outer = parts > 1 && outer[raw_part[f]] == f;
    if (is_outer && merged >= 0) {
      final_of[f] = merged;
      sizes[merged] += raw_size[f];
      continue;
    }
    final_of[f] = static_cast<int>(sizes.size());
    sizes.push_back(raw_size[f]);
    if (is_outer) merged = final_of[f];
  }
  d.face_sizes_ = sizes;
  d.face_count_ = static_cast<int>(sizes.size());

  if (unbounded_face) {
    const int k = *unbounded_face;
    if (k < 0 || k >= d.face_count_)
      throw InvalidFaceIndex("face " + std::to_string(k) +
                             " does not exist (diagram has " +
                             std::to_string(d.face_count_) + " faces)");
    if (parts > 1 && k != merged)
      throw InvalidFaceIndex("split diagram: the unbounded face must be the "
                             "shared outer face " +
                             std::to_string(merged));
    d.unbounded_ = k;
  } else if (parts > 1) {
    d.unbounded_ = merged;
  } else {
    d.unbounded_ = 0;
    for (int f = 1; f < d.face_count_; ++f)
      if (sizes[f] > sizes[d.unbounded_]) d.unbounded_ = f;
  }

  for (int c = 0; c < n; ++c)
    for (int k = 0; k < 4; ++k)
      d.crossings_[c].corner_face[k] = final_of[raw_corner[c][k]];
  for (int i = 0; i < e; ++i) {
    auto& edge = d.edges_[i];
    if (edge.loop) {
      edge.left_face = final_of[loop_faces[i].first];
      edge.right_face = final_of[loop_faces[i].second];
    } else {
      edge.left_face = final_of[dart_face[4 * edge.tail.crossing + edge.tail.slot]];
      edge.right_face = final_of[dart_face[4 * edge.head.crossing + edge.head.slot]];
    }
  }
  return d;
}

Diagram Diagram::with_orientation(const OrientationChoice& o) const {
  if (static_cast<int>(o.size()) != components_)
    throw InputError("orientation choice has " + std::to_string(o.size()) +
                     " entries for " + std::to_string(components_) +
                     " components");
  Diagram d = *this;
  for (auto& edge : d.edges_)
    if (o[edge.component]) {
      std::swap(edge.tail, edge.head);
      std::swap(edge.left_face, edge.right_face);
    }
  for (auto& x : d.crossings_) {
    if (o[x.under_component]) x.under_forward = !x.under_forward;
    if (o[x.over_component]) x.over_forward = !x.over_forward;
  }
  return d;
}

int Diagram::writhe() const {
  int w = 0;
  for (const auto& x : crossings_) w += x.sign();
  return w;
}

int Diagram::linking_number(int a, int b) const {
  int sum = 0;
  for (const auto& x : crossings_)
    if ((x.under_component == a && x.over_component == b) ||
        (x.under_component == b && x.over_component == a))
      sum += x.sign();
  return sum / 2;
}

PDCode mirror_pd(const Diagram& d) {
  PDCode out;
  out.loops = d.pd().loops;
  for (std::size_t c = 0; c < d.crossings().size(); ++c) {
    const auto& x = d.pd().crossings[c];
    // The former over strand passes underneath; list from its incoming end.
    if (d.crossings()[c].over_forward)
      out.crossings.push_back({x[3], x[0], x[1], x[2]});
    else
      out.crossings.push_back({x[1], x[2], x[3], x[0]});
  }
  return out;
}

PDCode closed_two_braid(int k) {
  if (k < 1) throw InputError("braid word needs at least one crossing");
  // Edge at level i (below crossing i) in the left / right position; one
  // strand sits left at even levels, the other right.
  auto left = [k](int i) {
    i %= k;
    return i % 2 == 0 ? i + 1 : k + 1 + i;
  };
  auto right = [k](int i) {
    i %= k;
    return i % 2 == 0 ? k + 1 + i : i + 1;
  };
  PDCode pd;
  for (int i = 0; i < k; ++i)
    pd.crossings.push_back({right(i), right(i + 1), left(i + 1), left(i)});
  return pd;
}

PDCode insert_kink(const Diagram& d, int label, bool positive) {
  const int e = d.edge_index(label);
  const auto& edge = d.edges()[e];
  if (edge.loop) throw InputError("cannot insert a kink on a loop record");
  int top = 0;
  for (const auto& x : d.pd().crossings)
    for (int l : x) top = std::max(top, l);
  for (int l : d.pd().loops) top = std::max(top, l);
  const int f = top + 1, g = top + 2;
  PDCode pd = d.pd();
  pd.crossings[edge.head.crossing][edge.head.slot] = g;
  if (positive)
    pd.crossings.push_back({label, g, f, f});
  else
    pd.crossings.push_back({label, f, f, g});
  return pd;
}

}  // namespace sqk
