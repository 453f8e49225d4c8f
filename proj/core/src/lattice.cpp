#include "sqk/lattice.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace sqk {

SparseVector combine(const Integer& a, const SparseVector& x, const Integer& b,
                     const SparseVector& y) {
  SparseVector out;
  out.reserve(x.size() + y.size());
  auto ix = x.begin();
  auto iy = y.begin();
  Integer v;
  while (ix != x.end() || iy != y.end()) {
    if (iy == y.end() || (ix != x.end() && ix->first < iy->first)) {
      v = a * ix->second;
      if (v != 0) out.emplace_back(ix->first, v);
      ++ix;
    } else if (ix == x.end() || iy->first < ix->first) {
      v = b * iy->second;
      if (v != 0) out.emplace_back(iy->first, v);
      ++iy;
    } else {
      v = a * ix->second + b * iy->second;
      if (v != 0) out.emplace_back(ix->first, v);
      ++ix;
      ++iy;
    }
  }
  return out;
}

Integer mod_floor(const Integer& a, const Integer& m) {
  Integer r;
  mpz_fdiv_r(r.get_mpz_t(), a.get_mpz_t(), m.get_mpz_t());
  return r;
}

AbelianGroupDescriptor AbelianGroupDescriptor::from_smith(
    std::size_t generators, const std::vector<Integer>& diag) {
  AbelianGroupDescriptor d;
  d.rank = generators - diag.size();
  for (const auto& x : diag)
    if (x > 1) d.torsion.push_back(x);
  return d;
}

std::string AbelianGroupDescriptor::to_string() const {
  std::vector<std::string> parts;
  if (rank == 1) parts.push_back("Z");
  if (rank > 1) parts.push_back("Z^" + std::to_string(rank));
  for (const auto& t : torsion) parts.push_back("Z/" + t.get_str());
  if (parts.empty()) return "0";
  std::string s = parts[0];
  for (std::size_t i = 1; i < parts.size(); ++i) s += " x " + parts[i];
  return s;
}

void Lattice::insert(SparseVector v) {
  while (!v.empty()) {
    if (v.front().second < 0)
      for (auto& e : v) e.second = -e.second;
    const std::size_t p = v.front().first;
    if (p >= dim_) throw std::out_of_range("lattice vector index out of range");
    auto it = rows_.find(p);
    if (it == rows_.end()) {
      rows_.emplace(p, std::move(v));
      return;
    }
    SparseVector& r = it->second;
    const Integer a = r.front().second;
    const Integer b = v.front().second;
    if (mpz_divisible_p(b.get_mpz_t(), a.get_mpz_t())) {
      v = combine(1, v, -(b / a), r);
      continue;
    }
    Integer g, s, t;
    mpz_gcdext(g.get_mpz_t(), s.get_mpz_t(), t.get_mpz_t(), a.get_mpz_t(),
               b.get_mpz_t());
    SparseVector pivot = combine(s, r, t, v);
    SparseVector rest = combine(Integer(a / g), v, Integer(-(b / g)), r);
    r = std::move(pivot);
    v = std::move(rest);
  }
}

std::optional<std::vector<Integer>> Lattice::coordinates(
    const SparseVector& v) const {
  std::map<std::size_t, std::size_t> pos;
  std::size_t k = 0;
  for (const auto& [p, row] : rows_) pos[p] = k++;
  std::vector<Integer> coords(rows_.size());
  SparseVector w = v;
  while (!w.empty()) {
    const std::size_t p = w.front().first;
    auto it = rows_.find(p);
    if (it == rows_.end()) return std::nullopt;
    const Integer& a = it->second.front().second;
    const Integer& b = w.front().second;
    if (!mpz_divisible_p(b.get_mpz_t(), a.get_mpz_t())) return std::nullopt;
    Integer q = b / a;
    coords[pos[p]] = q;
    w = combine(1, w, -q, it->second);
  }
  return coords;
}

bool Lattice::contains(const SparseVector& v) const {
  SparseVector w = v;
  while (!w.empty()) {
    auto it = rows_.find(w.front().first);
    if (it == rows_.end()) return false;
    const Integer& a = it->second.front().second;
    const Integer& b = w.front().second;
    if (!mpz_divisible_p(b.get_mpz_t(), a.get_mpz_t())) return false;
    w = combine(1, w, Integer(-(b / a)), it->second);
  }
  return true;
}

std::vector<SparseVector> Lattice::basis() const {
  std::vector<SparseVector> out;
  out.reserve(rows_.size());
  for (const auto& [p, row] : rows_) out.push_back(row);
  return out;
}

std::vector<SparseVector> Lattice::basis_tail(std::size_t from) const {
  std::vector<SparseVector> out;
  for (auto it = rows_.lower_bound(from); it != rows_.end(); ++it) {
    SparseVector row = it->second;
    for (auto& e : row) e.first -= from;
    out.push_back(std::move(row));
  }
  return out;
}

Matrix to_dense(const std::vector<SparseVector>& rows, std::size_t cols) {
  Matrix m(rows.size(), std::vector<Integer>(cols));
  for (std::size_t i = 0; i < rows.size(); ++i)
    for (const auto& [j, v] : rows[i]) m[i][j] = v;
  return m;
}

namespace {

struct SmithState {
  Matrix& a;
  std::size_t rows;
  std::size_t cols;
  Matrix* q;

  void swap_rows(std::size_t i, std::size_t j) {
    if (i != j) std::swap(a[i], a[j]);
  }
  void swap_cols(std::size_t i, std::size_t j) {
    if (i == j) return;
    for (auto& row : a) std::swap(row[i], row[j]);
    if (q)
      for (auto& row : *q) std::swap(row[i], row[j]);
  }
  // row_i -= f * row_t
  void row_sub(std::size_t i, std::size_t t, const Integer& f) {
    for (std::size_t j = t; j < cols; ++j)
      if (a[t][j] != 0) a[i][j] -= f * a[t][j];
  }
  // col_j -= f * col_t
  void col_sub(std::size_t j, std::size_t t, const Integer& f) {
    for (std::size_t i = t; i < rows; ++i)
      if (a[i][t] != 0) a[i][j] -= f * a[i][t];
    if (q)
      for (auto& row : *q)
        if (row[t] != 0) row[j] -= f * row[t];
  }
};

}  // namespace

SmithForm smith_normal_form(Matrix m, std::size_t cols,
                            bool want_column_transform) {
  SmithForm out;
  const std::size_t rows = m.size();
  for (const auto& r : m)
    if (r.size() != cols) throw std::invalid_argument("ragged matrix");
  if (want_column_transform) {
    out.column_transform.assign(cols, std::vector<Integer>(cols));
    for (std::size_t i = 0; i < cols; ++i) out.column_transform[i][i] = 1;
  }
  SmithState st{m, rows, cols,
                want_column_transform ? &out.column_transform : nullptr};

  for (std::size_t t = 0; t < rows && t < cols; ++t) {
    // Smallest nonzero entry of the remaining block becomes the pivot.
    std::size_t pi = rows, pj = cols;
    for (std::size_t i = t; i < rows; ++i)
      for (std::size_t j = t; j < cols; ++j)
        if (m[i][j] != 0 &&
            (pi == rows || abs(m[i][j]) < abs(m[pi][pj]))) {
          pi = i;
          pj = j;
        }
    if (pi == rows) break;
    st.swap_rows(t, pi);
    st.swap_cols(t, pj);

    for (;;) {
      bool clean = true;
      for (std::size_t i = t + 1; i < rows; ++i) {
        if (m[i][t] == 0) continue;
        Integer f = m[i][t] / m[t][t];
        if (f != 0) st.row_sub(i, t, f);
        if (m[i][t] != 0) clean = false;
      }
      for (std::size_t j = t + 1; j < cols; ++j) {
        if (m[t][j] == 0) continue;
        Integer f = m[t][j] / m[t][t];
        if (f != 0) st.col_sub(j, t, f);
        if (m[t][j] != 0) clean = false;
      }
      if (!clean) {
        // A remainder is smaller than the pivot: move it into place.
        std::size_t bi = t, bj = t;
        for (std::size_t i = t + 1; i < rows; ++i)
          if (m[i][t] != 0 && abs(m[i][t]) < abs(m[bi][bj])) {
            bi = i;
            bj = t;
          }
        for (std::size_t j = t + 1; j < cols; ++j)
          if (m[t][j] != 0 && abs(m[t][j]) < abs(m[bi][bj])) {
            bi = t;
            bj = j;
          }
        st.swap_rows(t, bi);
        st.swap_cols(t, bj);
        continue;
      }
      bool divisible = true;
      for (std::size_t i = t + 1; i < rows && divisible; ++i)
        for (std::size_t j = t + 1; j < cols; ++j)
          if (m[i][j] != 0 &&
              !mpz_divisible_p(m[i][j].get_mpz_t(), m[t][t].get_mpz_t())) {
            for (std::size_t k = t; k < cols; ++k) m[t][k] += m[i][k];
            divisible = false;
            break;
          }
      if (divisible) break;
    }
    out.diagonal.push_back(abs(m[t][t]));
  }
  return out;
}

}  // namespace sqk

namespace sqk {

AbelianGroupDescriptor cokernel(std::size_t dim,
                                std::vector<SparseVector> input) {
  std::vector<std::map<std::size_t, Integer>> rows(input.size());
  std::map<std::size_t, std::set<std::size_t>> cols;
  for (std::size_t r = 0; r < input.size(); ++r)
    for (auto& [c, v] : input[r]) {
      if (c >= dim) throw std::out_of_range("cokernel index out of range");
      rows[r][c] = v;
      cols[c].insert(r);
    }
  std::size_t eliminated = 0;
  std::vector<bool> alive(rows.size(), true);
  for (bool progress = true; progress;) {
    progress = false;
    for (std::size_t r = 0; r < rows.size(); ++r) {
      if (!alive[r]) continue;
      if (rows[r].empty()) {
        alive[r] = false;
        continue;
      }
      auto unit = std::find_if(rows[r].begin(), rows[r].end(), [](auto& e) {
        return e.second == 1 || e.second == -1;
      });
      if (unit == rows[r].end()) continue;
      const std::size_t c = unit->first;
      const Integer u = unit->second;
      std::vector<std::size_t> others(cols[c].begin(), cols[c].end());
      for (std::size_t o : others) {
        if (o == r) continue;
        const Integer f = rows[o][c] * u;  // u = ±1 is its own inverse
        for (auto& [k, v] : rows[r]) {
          Integer& target = rows[o][k];
          target -= f * v;
          if (target == 0) {
            rows[o].erase(k);
            cols[k].erase(o);
          } else {
            cols[k].insert(o);
          }
        }
      }
      for (auto& [k, v] : rows[r]) cols[k].erase(r);
      cols.erase(c);
      rows[r].clear();
      alive[r] = false;
      ++eliminated;
      progress = true;
    }
  }
  std::map<std::size_t, std::size_t> used;
  std::vector<std::size_t> rest;
  for (std::size_t r = 0; r < rows.size(); ++r)
    if (alive[r] && !rows[r].empty()) {
      rest.push_back(r);
      for (auto& [k, v] : rows[r]) used.emplace(k, 0);
    }
  std::size_t k = 0;
  for (auto& [c, i] : used) i = k++;
  Matrix m(rest.size(), std::vector<Integer>(used.size()));
  for (std::size_t i = 0; i < rest.size(); ++i)
    for (auto& [c, v] : rows[rest[i]]) m[i][used[c]] = v;
  auto smith = smith_normal_form(std::move(m), used.size());
  return AbelianGroupDescriptor::from_smith(dim - eliminated, smith.diagonal);
}

}  // namespace sqk
