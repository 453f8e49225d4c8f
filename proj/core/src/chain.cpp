#include "sqk/chain.hpp"

#include <limits>

namespace sqk {

std::string Tuple::to_string() const {
  std::string s = "(" + std::to_string(y);
  for (Element x : xs) s += "," + std::to_string(x);
  return s + ")";
}

Chain Chain::unit(const Tuple& t, const Integer& c) {
  Chain ch(t.degree());
  ch.add(t, c);
  return ch;
}

void Chain::add(const Tuple& t, const Integer& c) {
  if (t.degree() != degree_)
    throw DegreeMismatch("tuple of degree " + std::to_string(t.degree()) +
                         " added to chain of degree " +
                         std::to_string(degree_));
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(t, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

Integer Chain::coefficient(const Tuple& t) const {
  auto it = terms_.find(t);
  return it == terms_.end() ? Integer(0) : it->second;
}

std::string Chain::to_string() const {
  if (terms_.empty()) return "0";
  std::string s;
  bool first = true;
  for (const auto& [t, c] : terms_) {
    Integer a = abs(c);
    if (first)
      s += c < 0 ? "-" : "";
    else
      s += c < 0 ? " - " : " + ";
    if (a != 1) s += a.get_str() + "*";
    s += t.to_string();
    first = false;
  }
  return s;
}

Chain& Chain::operator+=(const Chain& o) {
  if (o.degree_ != degree_) throw DegreeMismatch("adding chains of different degrees");
  for (const auto& [t, c] : o.terms_) add(t, c);
  return *this;
}

Chain& Chain::operator-=(const Chain& o) {
  if (o.degree_ != degree_) throw DegreeMismatch("subtracting chains of different degrees");
  for (const auto& [t, c] : o.terms_) add(t, -c);
  return *this;
}

Chain& Chain::operator*=(const Integer& c) {
  if (c == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [t, v] : terms_) v *= c;
  return *this;
}

std::string to_string(ComplexVariant v) {
  switch (v) {
    case ComplexVariant::R:
      return "R";
    case ComplexVariant::Q:
      return "Q";
    case ComplexVariant::Rrho:
      return "Rrho";
    case ComplexVariant::Qrho:
      return "Qrho";
  }
  return "?";
}

ComplexVariant parse_variant(const std::string& s) {
  if (s == "R") return ComplexVariant::R;
  if (s == "Q") return ComplexVariant::Q;
  if (s == "Rrho" || s == "R,rho") return ComplexVariant::Rrho;
  if (s == "Qrho" || s == "Q,rho") return ComplexVariant::Qrho;
  throw InputError("unknown complex variant '" + s + "'");
}

CoefficientGroup CoefficientGroup::modulo(const Integer& m) {
  if (m < 2) throw InputError("modulus must be at least 2");
  return CoefficientGroup(m);
}

CoefficientGroup CoefficientGroup::parse(const std::string& s) {
  if (s == "Z") return integers();
  if (s.size() > 2 && s.compare(0, 2, "Z/") == 0) {
    Integer m;
    if (m.set_str(s.substr(2), 10) != 0)
      throw InputError("bad coefficient group '" + s + "'");
    return modulo(m);
  }
  throw InputError("bad coefficient group '" + s + "'");
}

Integer CoefficientGroup::normalize(const Integer& v) const {
  return is_integers() ? v : mod_floor(v, modulus_);
}

std::string CoefficientGroup::to_string() const {
  return is_integers() ? "Z" : "Z/" + modulus_.get_str();
}

SymmetricComplex::SymmetricComplex(SymmetricQuandle s, XSetAction act)
    : s_(std::move(s)), act_(std::move(act)) {
  if (act_.x_size() != s_.order())
    throw InputError("X-set acts by " + std::to_string(act_.x_size()) +
                     " generators but the quandle has order " +
                     std::to_string(s_.order()));
}

std::size_t SymmetricComplex::basis_size(int n) const {
  if (n < 0) return 0;
  constexpr std::size_t kMax = std::numeric_limits<std::size_t>::max();
  std::size_t size = static_cast<std::size_t>(act_.y_size());
  const auto x = static_cast<std::size_t>(s_.order());
  for (int i = 0; i < n; ++i) {
    if (size > kMax / x) return kMax;
    size *= x;
  }
  return size;
}

Tuple SymmetricComplex::basis_tuple(int n, std::size_t index) const {
  Tuple t;
  t.xs.resize(n);
  const auto x = static_cast<std::size_t>(s_.order());
  for (int i = n - 1; i >= 0; --i) {
    t.xs[i] = static_cast<Element>(index % x);
    index /= x;
  }
  t.y = static_cast<Element>(index);
  return t;
}

std::size_t SymmetricComplex::index_of(const Tuple& t) const {
  if (t.y < 0 || t.y >= act_.y_size())
    throw InputError("region color " + std::to_string(t.y) + " out of range");
  std::size_t idx = static_cast<std::size_t>(t.y);
  for (Element e : t.xs) {
    if (e < 0 || e >= s_.order())
      throw InputError("element " + std::to_string(e) + " out of range");
    idx = idx * s_.order() + e;
  }
  return idx;
}

SparseVector SymmetricComplex::to_vector(const Chain& c) const {
  std::map<std::size_t, Integer> m;
  for (const auto& [t, v] : c.terms()) m[index_of(t)] += v;
  SparseVector out;
  for (auto& [i, v] : m)
    if (v != 0) out.emplace_back(i, std::move(v));
  return out;
}

Chain SymmetricComplex::boundary(const Tuple& t) const {
  const int n = t.degree();
  Chain out(n - 1);
  if (n <= 0) return out;
  for (int i = 1; i <= n; ++i) {
    const int sign = (i % 2) ? -1 : 1;
    const Element xi = t.xs[i - 1];
    Tuple face{t.y, {}};
    Tuple moved{act_.act(t.y, xi), {}};
    for (int j = 1; j <= n; ++j) {
      if (j == i) continue;
      const Element xj = t.xs[j - 1];
      face.xs.push_back(xj);
      moved.xs.push_back(j < i ? s_.op(xj, xi) : xj);
    }
    out.add(face, sign);
    out.add(moved, -sign);
  }
  return out;
}

Chain SymmetricComplex::boundary(const Chain& c) const {
  Chain out(c.degree() - 1);
  if (c.degree() <= 0) return out;
  for (const auto& [t, v] : c.terms()) out += v * boundary(t);
  return out;
}

Tuple SymmetricComplex::rho_partner(const Tuple& t, int i) const {
  if (i < 1 || i > t.degree())
    throw InputError("rho position out of range");
  const Element xi = t.xs[i - 1];
  Tuple p{act_.act(t.y, xi), t.xs};
  for (int j = 0; j < i - 1; ++j) p.xs[j] = s_.op(t.xs[j], xi);
  p.xs[i - 1] = s_.rho(xi);
  return p;
}

std::vector<Chain> SymmetricComplex::dq_generators(int n) const {
  std::vector<Chain> out;
  if (n < 2) return out;
  const std::size_t size = basis_size(n);
  for (std::size_t k = 0; k < size; ++k) {
    Tuple t = basis_tuple(n, k);
    for (int i = 0; i + 1 < n; ++i)
      if (t.xs[i] == t.xs[i + 1]) {
        out.push_back(Chain::unit(t));
        break;
      }
  }
  return out;
}

std::vector<Chain> SymmetricComplex::drho_generators(int n) const {
  std::vector<Chain> out;
  if (n < 1) return out;
  const std::size_t size = basis_size(n);
  out.reserve(size * n);
  for (std::size_t k = 0; k < size; ++k) {
    Tuple t = basis_tuple(n, k);
    for (int i = 1; i <= n; ++i) {
      Chain g = Chain::unit(t);
      g.add(rho_partner(t, i), 1);
      out.push_back(std::move(g));
    }
  }
  return out;
}

std::vector<Chain> SymmetricComplex::variant_generators(ComplexVariant v,
                                                        int n) const {
  std::vector<Chain> out;
  if (quotients_degenerate(v)) out = dq_generators(n);
  if (quotients_rho(v)) {
    auto r = drho_generators(n);
    out.insert(out.end(), std::make_move_iterator(r.begin()),
               std::make_move_iterator(r.end()));
  }
  return out;
}

bool chain_in_subgroup(const Chain& c, const std::vector<Chain>& gens) {
  std::map<Tuple, std::size_t> index;
  for (const auto& g : gens) {
    if (g.degree() != c.degree())
      throw DegreeMismatch("membership test across degrees");
    for (const auto& [t, v] : g.terms()) index.emplace(t, 0);
  }
  for (const auto& [t, v] : c.terms())
    if (!index.count(t)) return false;
  std::size_t k = 0;
  for (auto& [t, i] : index) i = k++;
  auto vec = [&](const Chain& ch) {
    SparseVector out;
    for (const auto& [t, v] : ch.terms()) out.emplace_back(index.at(t), v);
    return out;
  };
  Lattice lattice(index.size());
  for (const auto& g : gens) lattice.insert(vec(g));
  return lattice.contains(vec(c));
}

void Cocycle::set(const Tuple& t, const Integer& v) {
  if (t.degree() != degree_)
    throw DegreeMismatch("cocycle value on tuple of degree " +
                         std::to_string(t.degree()));
  Integer n = coeff_.normalize(v);
  if (n == 0)
    values_.erase(t);
  else
    values_[t] = n;
}

Integer Cocycle::operator()(const Tuple& t) const {
  auto it = values_.find(t);
  return it == values_.end() ? Integer(0) : it->second;
}

Integer evaluate(const Cocycle& theta, const Chain& c) {
  if (c.degree() != theta.degree())
    throw DegreeMismatch("evaluating a degree " +
                         std::to_string(theta.degree()) +
                         " cocycle on a degree " + std::to_string(c.degree()) +
                         " chain");
  Integer sum = 0;
  for (const auto& [t, v] : c.terms()) {
    auto it = theta.values().find(t);
    if (it != theta.values().end()) sum += v * it->second;
  }
  return theta.coefficients().normalize(sum);
}

std::string CocycleWitness::describe() const {
  switch (kind) {
    case Kind::Boundary:
      return "theta(boundary " + tuple.to_string() + ") = " + value.get_str();
    case Kind::Degenerate:
      return "theta" + tuple.to_string() + " = " + value.get_str() +
             " on a degenerate tuple";
    case Kind::Rho:
      return "theta" + tuple.to_string() + " + theta(rho-partner at " +
             std::to_string(position) + ") = " + value.get_str();
  }
  return "?";
}

std::optional<CocycleWitness> find_cocycle_violation(
    const SymmetricComplex& cx, const Cocycle& theta, ComplexVariant variant) {
  const int n = theta.degree();
  const std::size_t up = cx.basis_size(n + 1);
  for (std::size_t k = 0; k < up; ++k) {
    Tuple t = cx.basis_tuple(n + 1, k);
    Integer v = evaluate(theta, cx.boundary(t));
    if (v != 0) return CocycleWitness{CocycleWitness::Kind::Boundary, t, 0, v};
  }
  const std::size_t size = cx.basis_size(n);
  if (quotients_degenerate(variant))
    for (std::size_t k = 0; k < size; ++k) {
      Tuple t = cx.basis_tuple(n, k);
      for (int i = 0; i + 1 < n; ++i)
        if (t.xs[i] == t.xs[i + 1]) {
          Integer v = theta(t);
          if (v != 0)
            return CocycleWitness{CocycleWitness::Kind::Degenerate, t, i + 1,
                                  v};
          break;
        }
    }
  if (quotients_rho(variant))
    for (std::size_t k = 0; k < size; ++k) {
      Tuple t = cx.basis_tuple(n, k);
      for (int i = 1; i <= n; ++i) {
        Integer v =
            theta.coefficients().normalize(theta(t) + theta(cx.rho_partner(t, i)));
        if (v != 0)
          return CocycleWitness{CocycleWitness::Kind::Rho, t, i, v};
      }
    }
  return std::nullopt;
}

}  // namespace sqk
