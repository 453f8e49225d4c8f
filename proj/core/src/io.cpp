#include "sqk/io.hpp"

#include <cctype>
#include <fstream>
#include <sstream>

namespace sqk {

namespace {

struct Field {
  std::string text;
  int column;
};

struct Line {
  int number;
  std::vector<Field> words;
};

// Non-empty lines split on whitespace, comments removed.
std::vector<Line> lines_of(const std::string& text) {
  std::vector<Line> out;
  std::istringstream in(text);
  std::string raw;
  int number = 0;
  while (std::getline(in, raw)) {
    ++number;
    if (auto hash = raw.find('#'); hash != std::string::npos) raw.resize(hash);
    Line line{number, {}};
    std::size_t i = 0;
    while (i < raw.size()) {
      if (std::isspace(static_cast<unsigned char>(raw[i]))) {
        ++i;
        continue;
      }
      std::size_t j = i;
      while (j < raw.size() && !std::isspace(static_cast<unsigned char>(raw[j])))
        ++j;
      line.words.push_back({raw.substr(i, j - i), static_cast<int>(i) + 1});
      i = j;
    }
    if (!line.words.empty()) out.push_back(std::move(line));
  }
  return out;
}

bool parse_long(const std::string& s, long long& v) {
  if (s.empty() || s.size() > 18) return false;
  std::size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
  if (i == s.size()) return false;
  for (std::size_t j = i; j < s.size(); ++j)
    if (!std::isdigit(static_cast<unsigned char>(s[j]))) return false;
  v = std::stoll(s);
  return true;
}

int integer(const Line& line, std::size_t k, long long lo, long long hi,
            const std::string& what) {
  const Field& w = line.words[k];
  long long v = 0;
  if (!parse_long(w.text, v) || v < lo || v > hi)
    throw SyntaxError("expected " + what + ", got '" + w.text + "'",
                      line.number, w.column);
  return static_cast<int>(v);
}

Integer big_integer(const Field& w, int line) {
  std::string s = w.text;
  if (!s.empty() && s[0] == '+') s.erase(0, 1);
  Integer v;
  if (s.empty() || v.set_str(s, 10) != 0)
    throw SyntaxError("expected an integer, got '" + w.text + "'", line,
                      w.column);
  return v;
}

void expect_count(const Line& line, std::size_t n, const std::string& what) {
  if (line.words.size() != n) {
    const int col = line.words.size() > n ? line.words[n].column
                                          : line.words.back().column;
    throw SyntaxError(what + ": expected " + std::to_string(n) +
                          " fields, found " + std::to_string(line.words.size()),
                      line.number, col);
  }
}

const Line& header(const std::vector<Line>& lines, const std::string& keyword) {
  if (lines.empty() || lines[0].words[0].text != keyword)
    throw SyntaxError("expected header '" + keyword + "'",
                      lines.empty() ? 1 : lines[0].number, 1);
  return lines[0];
}

// key=value fields of a header.
std::string field(const Line& line, const std::string& key,
                  std::optional<std::string> fallback = std::nullopt) {
  for (std::size_t i = 1; i < line.words.size(); ++i) {
    const auto& t = line.words[i].text;
    if (t.size() > key.size() && t.compare(0, key.size() + 1, key + "=") == 0)
      return t.substr(key.size() + 1);
  }
  if (fallback) return *fallback;
  throw SyntaxError("header lacks " + key + "=", line.number, 1);
}

std::string join(const std::vector<std::string>& parts) {
  std::string out;
  for (const auto& p : parts) {
    if (!out.empty()) out += ' ';
    out += p;
  }
  return out;
}

}  // namespace

QuandleFileData parse_quandle_file(const std::string& text) {
  const auto lines = lines_of(text);
  const Line& h = header(lines, "quandle");
  expect_count(h, 2, "quandle header");
  const int n = integer(h, 1, 1, 4096, "a positive order");
  if (lines.size() < static_cast<std::size_t>(n) + 1)
    throw SyntaxError("expected " + std::to_string(n) + " table rows",
                      lines.back().number, 1);
  QuandleFileData data;
  for (int r = 0; r < n; ++r) {
    const Line& line = lines[1 + r];
    expect_count(line, n, "table row");
    std::vector<Element> row;
    for (int k = 0; k < n; ++k)
      row.push_back(integer(line, k, 0, n - 1, "an index below " + std::to_string(n)));
    data.table.push_back(std::move(row));
  }
  for (std::size_t i = n + 1; i < lines.size(); ++i) {
    const Line& line = lines[i];
    const std::string& key = line.words[0].text;
    if (key == "rho" && !data.rho) {
      expect_count(line, n + 1, "rho line");
      std::vector<Element> rho;
      for (int k = 1; k <= n; ++k)
        rho.push_back(integer(line, k, 0, n - 1, "an index below " + std::to_string(n)));
      data.rho = std::move(rho);
    } else if (key == "labels" && data.labels.empty()) {
      expect_count(line, n + 1, "labels line");
      for (int k = 1; k <= n; ++k) {
        const Field& w = line.words[k];
        long long dummy;
        if (parse_long(w.text, dummy))
          throw SyntaxError("labels must not be numbers", line.number, w.column);
        for (const auto& prev : data.labels)
          if (prev == w.text)
            throw SyntaxError("duplicate label '" + w.text + "'", line.number,
                              w.column);
        data.labels.push_back(w.text);
      }
    } else {
      throw SyntaxError("unexpected line starting with '" + key + "'",
                        line.number, line.words[0].column);
    }
  }
  return data;
}

LabeledQuandle load_quandle(const QuandleFileData& data) {
  FiniteQuandle q = FiniteQuandle::from_table(data.table);
  Involution rho = data.rho ? Involution::from_map(*data.rho)
                            : Involution::identity(q.order());
  return {SymmetricQuandle(std::move(q), std::move(rho)), data.labels};
}

std::string write_quandle(const LabeledQuandle& lq) {
  const auto& s = lq.quandle;
  const int n = s.order();
  std::string out = "quandle " + std::to_string(n) + "\n";
  for (int x = 0; x < n; ++x) {
    std::vector<std::string> row;
    for (int y = 0; y < n; ++y) row.push_back(std::to_string(s.op(x, y)));
    out += join(row) + "\n";
  }
  if (s.rho() != Involution::identity(n)) {
    std::vector<std::string> row{"rho"};
    for (int x = 0; x < n; ++x) row.push_back(std::to_string(s.rho(x)));
    out += join(row) + "\n";
  }
  if (!lq.labels.empty()) {
    std::vector<std::string> row{"labels"};
    row.insert(row.end(), lq.labels.begin(), lq.labels.end());
    out += join(row) + "\n";
  }
  return out;
}

Table parse_xset_file(const std::string& text) {
  const auto lines = lines_of(text);
  const Line& h = header(lines, "xset");
  expect_count(h, 3, "xset header");
  const int ys = integer(h, 1, 1, 1 << 20, "a positive |Y|");
  const int xs = integer(h, 2, 1, 4096, "a positive |X|");
  if (lines.size() != static_cast<std::size_t>(ys) + 1)
    throw SyntaxError("expected " + std::to_string(ys) + " rows after the header",
                      lines.back().number, 1);
  Table t;
  for (int r = 0; r < ys; ++r) {
    const Line& line = lines[1 + r];
    expect_count(line, xs, "xset row");
    std::vector<Element> row;
    for (int k = 0; k < xs; ++k)
      row.push_back(integer(line, k, 0, ys - 1, "an index below " + std::to_string(ys)));
    t.push_back(std::move(row));
  }
  return t;
}

std::string write_xset(const XSetAction& act) {
  std::string out = "xset " + std::to_string(act.y_size()) + " " +
                    std::to_string(act.x_size()) + "\n";
  for (int y = 0; y < act.y_size(); ++y) {
    std::vector<std::string> row;
    for (int x = 0; x < act.x_size(); ++x)
      row.push_back(std::to_string(act.act(y, x)));
    out += join(row) + "\n";
  }
  return out;
}

Element ElementNames::element(const std::string& token, int line,
                              int column) const {
  long long v = 0;
  if (parse_long(token, v)) {
    if (v < 0 || v >= x_size_)
      throw SyntaxError("element " + token + " out of range", line, column);
    return static_cast<Element>(v);
  }
  for (std::size_t i = 0; i < labels_.size(); ++i)
    if (labels_[i] == token) return static_cast<Element>(i);
  throw SyntaxError("unknown element '" + token + "'", line, column);
}

Element ElementNames::region(const std::string& token, int line,
                             int column) const {
  long long v = 0;
  if (parse_long(token, v)) {
    if (v < 0 || v >= y_size_)
      throw SyntaxError("region color " + token + " out of range", line, column);
    return static_cast<Element>(v);
  }
  if (token == "e" && y_size_ == 1) return 0;
  if (y_is_x_) return element(token, line, column);
  throw SyntaxError("unknown region color '" + token + "'", line, column);
}

std::string ElementNames::element_name(Element x) const {
  return labels_.empty() ? std::to_string(x) : labels_[x];
}

Cocycle parse_cocycle_file(const std::string& text, const ElementNames& names) {
  const auto lines = lines_of(text);
  const Line& h = header(lines, "cocycle");
  long long deg = 0;
  const std::string d = field(h, "deg");
  if (!parse_long(d, deg) || deg < 0 || deg > 16)
    throw SyntaxError("bad degree '" + d + "'", h.number, 1);
  CoefficientGroup coeff = CoefficientGroup::integers();
  ComplexVariant variant = ComplexVariant::Qrho;
  try {
    coeff = CoefficientGroup::parse(field(h, "coeff", "Z"));
    variant = parse_variant(field(h, "variant", "Qrho"));
  } catch (const SyntaxError&) {
    throw;
  } catch (const InputError& e) {
    throw SyntaxError(e.what(), h.number, 1);
  }
  Cocycle c(static_cast<int>(deg), coeff, variant);
  for (std::size_t i = 1; i < lines.size(); ++i) {
    const Line& line = lines[i];
    expect_count(line, static_cast<std::size_t>(deg) + 2, "cocycle entry");
    Tuple t{names.region(line.words[0].text, line.number, line.words[0].column), {}};
    for (int k = 1; k <= deg; ++k)
      t.xs.push_back(names.element(line.words[k].text, line.number,
                                   line.words[k].column));
    if (c(t) != 0)
      throw SyntaxError("duplicate entry for " + t.to_string(), line.number, 1);
    c.set(t, big_integer(line.words[deg + 1], line.number));
  }
  return c;
}

Cocycle load_cocycle(const std::string& text, const SymmetricComplex& cx,
                     const ElementNames& names) {
  Cocycle c = parse_cocycle_file(text, names);
  if (auto w = find_cocycle_violation(cx, c, c.variant())) throw CocycleRejected(*w);
  return c;
}

std::string write_cocycle(const Cocycle& c) {
  std::string out = "cocycle deg=" + std::to_string(c.degree()) +
                    " coeff=" + c.coefficients().to_string() +
                    " variant=" + to_string(c.variant()) + "\n";
  for (const auto& [t, v] : c.values()) {
    out += std::to_string(t.y);
    for (Element x : t.xs) out += " " + std::to_string(x);
    out += " " + v.get_str() + "\n";
  }
  return out;
}

Chain parse_chain_file(const std::string& text, const ElementNames& names) {
  const auto lines = lines_of(text);
  const Line& h = header(lines, "chain");
  long long deg = 0;
  const std::string d = field(h, "deg");
  if (!parse_long(d, deg) || deg < 0 || deg > 16)
    throw SyntaxError("bad degree '" + d + "'", h.number, 1);
  Chain c(static_cast<int>(deg));
  for (std::size_t i = 1; i < lines.size(); ++i) {
    const Line& line = lines[i];
    expect_count(line, static_cast<std::size_t>(deg) + 2, "chain term");
    const Integer k = big_integer(line.words[0], line.number);
    Tuple t{names.region(line.words[1].text, line.number, line.words[1].column), {}};
    for (int j = 2; j < deg + 2; ++j)
      t.xs.push_back(names.element(line.words[j].text, line.number,
                                   line.words[j].column));
    c.add(t, k);
  }
  return c;
}

ColoredTriplePointData parse_surface_file(const std::string& text,
                                          const ElementNames& names) {
  ColoredTriplePointData data;
  for (const Line& line : lines_of(text)) {
    if (line.words[0].text == "surface") {
      if (line.words.size() != 3 || line.words[1].text != "coloring")
        throw SyntaxError("expected 'surface coloring <id>'", line.number, 1);
      data.groups.push_back({line.words[2].text, {}});
      continue;
    }
    if (data.groups.empty())
      throw SyntaxError("term before any 'surface coloring' header",
                        line.number, 1);
    expect_count(line, 5, "triple point");
    const int sign = integer(line, 0, -1, 1, "a sign +1 or -1");
    if (sign == 0)
      throw SyntaxError("sign must be +1 or -1", line.number, line.words[0].column);
    WeightTerm w{sign, {names.region(line.words[1].text, line.number,
                                     line.words[1].column),
                        {}}};
    for (int k = 2; k < 5; ++k)
      w.tuple.xs.push_back(names.element(line.words[k].text, line.number,
                                         line.words[k].column));
    data.groups.back().terms.push_back(std::move(w));
  }
  if (data.groups.empty()) throw SyntaxError("no 'surface coloring' block", 1, 1);
  return data;
}

std::string write_surface(const ColoredTriplePointData& data,
                          const ElementNames& names) {
  std::string out;
  for (const auto& g : data.groups) {
    out += "surface coloring " + g.id + "\n";
    for (const auto& w : g.terms) {
      out += (w.sign > 0 ? "+1 " : "-1 ") + std::to_string(w.tuple.y);
      for (Element x : w.tuple.xs) out += " " + names.element_name(x);
      out += "\n";
    }
  }
  return out;
}

std::string read_text_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError("cannot open '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

}  // namespace sqk
