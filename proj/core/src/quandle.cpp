#include "sqk/quandle.hpp"

#include <algorithm>
#include <numeric>
#include <string>

namespace sqk {

namespace {

const char* axiom_name(Axiom a) {
  switch (a) {
    case Axiom::Q1:
      return "Q1";
    case Axiom::Q2:
      return "Q2";
    case Axiom::Q3:
      return "Q3";
  }
  return "?";
}

std::string join(const std::vector<int>& v) {
  std::string s;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) s += ' ';
    s += std::to_string(v[i]);
  }
  return s;
}

void check_square(const Table& table) {
  const std::size_t n = table.size();
  if (n == 0) throw InputError("quandle table is empty");
  for (std::size_t x = 0; x < n; ++x) {
    if (table[x].size() != n)
      throw InputError("row " + std::to_string(x) + " has " +
                       std::to_string(table[x].size()) + " entries, expected " +
                       std::to_string(n));
    for (Element v : table[x])
      if (v < 0 || static_cast<std::size_t>(v) >= n)
        throw InputError("table entry " + std::to_string(v) +
                         " out of range in row " + std::to_string(x));
  }
}

void check_map_range(const std::vector<Element>& map, int n) {
  if (static_cast<int>(map.size()) != n)
    throw InputError("involution has " + std::to_string(map.size()) +
                     " entries, expected " + std::to_string(n));
  for (Element v : map)
    if (v < 0 || v >= n)
      throw InputError("involution entry " + std::to_string(v) +
                       " out of range");
}

}  // namespace

AxiomViolation::AxiomViolation(Axiom axiom, std::vector<int> witness)
    : ValidationError(std::string("axiom ") + axiom_name(axiom) +
                      " fails at (" + join(witness) + ")"),
      axiom(axiom),
      witness(std::move(witness)) {}

GoodnessViolation::GoodnessViolation(int x, int y, GoodnessIdentity identity)
    : ValidationError(
          std::string(identity == GoodnessIdentity::RhoEquivariant
                          ? "rho(x^y) != rho(x)^y"
                          : "x^rho(y) != x^(y^-1)") +
          " at x=" + std::to_string(x) + ", y=" + std::to_string(y)),
      x(x),
      y(y),
      identity(identity) {}

std::optional<AxiomViolation> find_axiom_violation(const Table& table) {
  check_square(table);
  const int n = static_cast<int>(table.size());
  for (int x = 0; x < n; ++x)
    if (table[x][x] != x) return AxiomViolation(Axiom::Q1, {x});
  for (int y = 0; y < n; ++y) {
    std::vector<int> seen(n, -1);
    for (int x = 0; x < n; ++x) {
      int v = table[x][y];
      if (seen[v] >= 0) return AxiomViolation(Axiom::Q2, {y, seen[v], x});
      seen[v] = x;
    }
  }
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y)
      for (int z = 0; z < n; ++z)
        if (table[table[x][y]][z] != table[table[x][z]][table[y][z]])
          return AxiomViolation(Axiom::Q3, {x, y, z});
  return std::nullopt;
}

FiniteQuandle FiniteQuandle::from_table(const Table& table) {
  if (auto v = find_axiom_violation(table)) throw *v;
  FiniteQuandle q;
  q.n_ = static_cast<int>(table.size());
  q.op_.resize(static_cast<std::size_t>(q.n_) * q.n_);
  q.inv_.resize(q.op_.size());
  for (int x = 0; x < q.n_; ++x)
    for (int y = 0; y < q.n_; ++y) q.op_[q.index(x, y)] = table[x][y];
  for (int x = 0; x < q.n_; ++x)
    for (int y = 0; y < q.n_; ++y) q.inv_[q.index(table[x][y], y)] = x;
  return q;
}

Table FiniteQuandle::table() const {
  Table t(n_, std::vector<Element>(n_));
  for (int x = 0; x < n_; ++x)
    for (int y = 0; y < n_; ++y) t[x][y] = op(x, y);
  return t;
}

Involution Involution::from_map(std::vector<Element> map) {
  check_map_range(map, static_cast<int>(map.size()));
  for (std::size_t x = 0; x < map.size(); ++x)
    if (map[map[x]] != static_cast<Element>(x))
      throw NotInvolution(static_cast<int>(x));
  return Involution(std::move(map));
}

Involution Involution::identity(int n) {
  std::vector<Element> m(n);
  std::iota(m.begin(), m.end(), 0);
  return Involution(std::move(m));
}

std::optional<GoodnessViolation> find_goodness_violation(
    const FiniteQuandle& q, const std::vector<Element>& rho) {
  const int n = q.order();
  check_map_range(rho, n);
  for (int x = 0; x < n; ++x)
    if (rho[rho[x]] != x) throw NotInvolution(x);
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y) {
      if (rho[q.op(x, y)] != q.op(rho[x], y))
        return GoodnessViolation(x, y, GoodnessIdentity::RhoEquivariant);
      if (q.op(x, rho[y]) != q.inv_op(x, y))
        return GoodnessViolation(x, y, GoodnessIdentity::RhoInverts);
    }
  return std::nullopt;
}

bool is_good_involution(const FiniteQuandle& q,
                        const std::vector<Element>& rho) {
  return !find_goodness_violation(q, rho).has_value();
}

SymmetricQuandle::SymmetricQuandle(FiniteQuandle quandle, Involution rho)
    : quandle_(std::move(quandle)), rho_(std::move(rho)) {
  if (auto v = find_goodness_violation(quandle_, rho_.map())) throw *v;
}

FiniteGroupTable FiniteGroupTable::from_table(const Table& mul) {
  const int n = static_cast<int>(mul.size());
  if (n == 0) throw InputError("group table is empty");
  for (const auto& row : mul) {
    if (static_cast<int>(row.size()) != n)
      throw InputError("group table is not square");
    for (Element v : row)
      if (v < 0 || v >= n) throw InputError("group table entry out of range");
  }
  FiniteGroupTable g;
  g.n_ = n;
  g.mul_.resize(static_cast<std::size_t>(n) * n);
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) g.mul_[a * n + b] = mul[a][b];

  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      for (int c = 0; c < n; ++c)
        if (g.mul(g.mul(a, b), c) != g.mul(a, g.mul(b, c)))
          throw ValidationError("group table is not associative at (" +
                                std::to_string(a) + ", " + std::to_string(b) +
                                ", " + std::to_string(c) + ")");
  int e = -1;
  for (int a = 0; a < n && e < 0; ++a) {
    bool ok = true;
    for (int b = 0; b < n && ok; ++b)
      ok = g.mul(a, b) == b && g.mul(b, a) == b;
    if (ok) e = a;
  }
  if (e < 0) throw ValidationError("group table has no identity");
  g.identity_ = e;
  g.inverse_.assign(n, -1);
  for (int a = 0; a < n; ++a) {
    for (int b = 0; b < n; ++b)
      if (g.mul(a, b) == e && g.mul(b, a) == e) {
        g.inverse_[a] = b;
        break;
      }
    if (g.inverse_[a] < 0)
      throw ValidationError("element " + std::to_string(a) +
                            " has no inverse");
  }
  return g;
}

FiniteGroupTable make_cyclic_group(int n) {
  if (n < 1) throw InputError("group order must be positive");
  Table t(n, std::vector<Element>(n));
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) t[a][b] = (a + b) % n;
  return FiniteGroupTable::from_table(t);
}

FiniteGroupTable make_symmetric_group(int k) {
  if (k < 1 || k > 5) throw InputError("symmetric group degree must be 1..5");
  std::vector<std::vector<int>> perms;
  std::vector<int> p(k);
  std::iota(p.begin(), p.end(), 0);
  do perms.push_back(p);
  while (std::next_permutation(p.begin(), p.end()));
  const int n = static_cast<int>(perms.size());
  auto find = [&](const std::vector<int>& q) {
    return static_cast<int>(
        std::lower_bound(perms.begin(), perms.end(), q) - perms.begin());
  };
  Table t(n, std::vector<Element>(n));
  // (a*b)(i) = b(a(i)): apply a first, matching right actions.
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) {
      std::vector<int> c(k);
      for (int i = 0; i < k; ++i) c[i] = perms[b][perms[a][i]];
      t[a][b] = find(c);
    }
  return FiniteGroupTable::from_table(t);
}

FiniteQuandle make_trivial(int n) {
  if (n < 1) throw InputError("order must be positive");
  Table t(n, std::vector<Element>(n));
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y) t[x][y] = x;
  return FiniteQuandle::from_table(t);
}

FiniteQuandle make_dihedral(int n) {
  if (n < 1) throw InputError("order must be positive");
  Table t(n, std::vector<Element>(n));
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y) t[x][y] = (((2 * y - x) % n) + n) % n;
  return FiniteQuandle::from_table(t);
}

SymmetricQuandle make_conjugation(const FiniteGroupTable& g) {
  const int n = g.order();
  Table t(n, std::vector<Element>(n));
  std::vector<Element> rho(n);
  for (int x = 0; x < n; ++x) {
    rho[x] = g.inverse(x);
    for (int y = 0; y < n; ++y) t[x][y] = g.mul(g.mul(g.inverse(y), x), y);
  }
  return SymmetricQuandle(FiniteQuandle::from_table(t),
                          Involution::from_map(std::move(rho)));
}

SymmetricQuandle make_double_cover(const FiniteQuandle& x) {
  const int n = x.order();
  Table t(2 * n, std::vector<Element>(2 * n));
  std::vector<Element> rho(2 * n);
  for (int i = 0; i < 2; ++i)
    for (int a = 0; a < n; ++a) {
      rho[a + i * n] = a + (1 - i) * n;
      for (int b = 0; b < n; ++b) {
        t[a + i * n][b] = x.op(a, b) + i * n;
        t[a + i * n][b + n] = x.inv_op(a, b) + i * n;
      }
    }
  return SymmetricQuandle(FiniteQuandle::from_table(t),
                          Involution::from_map(std::move(rho)));
}

bool is_kei(const FiniteQuandle& q) {
  for (int x = 0; x < q.order(); ++x)
    for (int y = 0; y < q.order(); ++y)
      if (q.op(q.op(x, y), y) != x) return false;
  return true;
}

bool is_quandle_homomorphism(const FiniteQuandle& q, const Involution& rho) {
  for (int x = 0; x < q.order(); ++x)
    for (int y = 0; y < q.order(); ++y)
      if (rho(q.op(x, y)) != q.op(rho(x), rho(y))) return false;
  return true;
}

Involution antipodal_map(int n) {
  if (n % 2) throw InputError("antipodal map needs even order");
  std::vector<Element> m(n);
  for (int i = 0; i < n; ++i) m[i] = (i + n / 2) % n;
  return Involution::from_map(std::move(m));
}

Involution half_antipodal_map(int n, int parity) {
  if (n % 4) throw InputError("half-antipodal maps need order divisible by 4");
  std::vector<Element> m(n);
  for (int i = 0; i < n; ++i) m[i] = (i % 2 == parity) ? (i + n / 2) % n : i;
  return Involution::from_map(std::move(m));
}

namespace {

void involutions_rec(std::vector<Element>& map, int i,
                     std::vector<Involution>& out) {
  const int n = static_cast<int>(map.size());
  while (i < n && map[i] >= 0) ++i;
  if (i == n) {
    out.push_back(Involution::from_map(map));
    return;
  }
  map[i] = i;
  involutions_rec(map, i + 1, out);
  for (int j = i + 1; j < n; ++j) {
    if (map[j] >= 0) continue;
    map[i] = j;
    map[j] = i;
    involutions_rec(map, i + 1, out);
    map[j] = -1;
  }
  map[i] = -1;
}

}  // namespace

std::vector<Involution> enumerate_involutions(int n) {
  std::vector<Involution> out;
  std::vector<Element> map(n, -1);
  involutions_rec(map, 0, out);
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<Involution> enumerate_good_involutions(const FiniteQuandle& q,
                                                   int cap) {
  if (q.order() > cap)
    throw OrderCapExceeded("order " + std::to_string(q.order()) +
                           " exceeds involution enumeration cap " +
                           std::to_string(cap));
  std::vector<Involution> good;
  for (auto& rho : enumerate_involutions(q.order()))
    if (is_good_involution(q, rho.map())) good.push_back(std::move(rho));
  return good;
}

}  // namespace sqk
