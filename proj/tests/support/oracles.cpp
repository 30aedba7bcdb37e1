#include "oracles.hpp"

#include <algorithm>
#include <fstream>
#include <functional>
#include <sstream>
#include <stdexcept>

#ifndef UNMIX_FIXTURE_DIR
#define UNMIX_FIXTURE_DIR "tests/fixtures"
#endif

namespace oracle {

std::string fixture_path(const std::string& name) {
  return std::string(UNMIX_FIXTURE_DIR) + "/" + name;
}

unmix::io::SystemFile load_fixture(const std::string& name) {
  std::ifstream in(fixture_path(name));
  if (!in) throw std::runtime_error("missing fixture " + name);
  std::stringstream buf;
  buf << in.rdbuf();
  return unmix::io::parse_system(buf.str());
}

Polynomial poly(const VarOrderPtr& ring, const std::string& text) {
  return unmix::io::parse_polynomial(text, ring);
}

std::vector<Polynomial> polys(const VarOrderPtr& ring, const std::vector<std::string>& texts) {
  std::vector<Polynomial> out;
  for (const auto& t : texts) out.push_back(poly(ring, t));
  return out;
}

Polynomial laplace_determinant(const std::vector<std::vector<Polynomial>>& m) {
  const std::size_t n = m.size();
  if (n == 1) return m[0][0];
  Polynomial det(m[0][0].order_ptr());
  for (std::size_t col = 0; col < n; ++col) {
    if (m[0][col].is_zero()) continue;
    std::vector<std::vector<Polynomial>> minor;
    for (std::size_t r = 1; r < n; ++r) {
      std::vector<Polynomial> row;
      for (std::size_t c = 0; c < n; ++c)
        if (c != col) row.push_back(m[r][c]);
      minor.push_back(std::move(row));
    }
    Polynomial term = m[0][col] * laplace_determinant(minor);
    if (col % 2 == 0) det += term;
    else det -= term;
  }
  return det;
}

std::vector<std::vector<Polynomial>> sylvester(const Polynomial& f, const Polynomial& g,
                                               std::size_t var) {
  const auto& ring = f.order_ptr();
  const std::uint32_t m = f.degree(var), n = g.degree(var);
  auto coeff = [&](const Polynomial& p, std::uint32_t d) {
    // coefficient of var^d, by collecting matching terms
    std::vector<unmix::Term> terms;
    for (const auto& t : p.terms()) {
      if (t.mono[var] != d) continue;
      unmix::Term c = t;
      c.mono.set(var, 0);
      terms.push_back(c);
    }
    return Polynomial::from_terms(ring, std::move(terms));
  };
  const std::size_t size = m + n;
  std::vector<std::vector<Polynomial>> s(size, std::vector<Polynomial>(size, Polynomial(ring)));
  for (std::uint32_t r = 0; r < n; ++r)
    for (std::uint32_t k = 0; k <= m; ++k) s[r][r + k] = coeff(f, m - k);
  for (std::uint32_t r = 0; r < m; ++r)
    for (std::uint32_t k = 0; k <= n; ++k) s[n + r][r + k] = coeff(g, n - k);
  return s;
}

Uni to_univariate(const Polynomial& p, std::size_t var, const std::vector<Rational>& point) {
  Uni out(p.degree(var) + 1, Rational(0));
  for (const auto& t : p.terms()) {
    Rational v = t.coeff;
    for (std::size_t i = 0; i < p.order().size(); ++i) {
      if (i == var) continue;
      for (std::uint32_t e = 0; e < t.mono[i]; ++e) v *= point[i];
    }
    out[t.mono[var]] += v;
  }
  while (!out.empty() && out.back() == 0) out.pop_back();
  return out;
}

int uni_degree(const Uni& a) { return static_cast<int>(a.size()) - 1; }

Uni uni_gcd(Uni a, Uni b) {
  auto trim = [](Uni& u) {
    while (!u.empty() && u.back() == 0) u.pop_back();
  };
  trim(a);
  trim(b);
  while (!b.empty()) {
    // a mod b
    while (a.size() >= b.size() && !a.empty()) {
      Rational q = a.back() / b.back();
      std::size_t shift = a.size() - b.size();
      for (std::size_t i = 0; i < b.size(); ++i) a[shift + i] -= q * b[i];
      trim(a);
    }
    std::swap(a, b);
  }
  return a;
}

VarOrderPtr Generator::ring(std::size_t n) {
  std::vector<std::string> names;
  for (std::size_t i = 1; i <= n; ++i) names.push_back("x" + std::to_string(i));
  return unmix::make_order(std::move(names));
}

Polynomial Generator::polynomial(const VarOrderPtr& ring, const RandomSpec& spec) {
  std::vector<unmix::Term> terms;
  std::size_t count = static_cast<std::size_t>(uniform(1, static_cast<int>(spec.max_terms)));
  for (std::size_t k = 0; k < count; ++k) {
    unmix::Monomial m;
    std::uint32_t budget = static_cast<std::uint32_t>(uniform(0, static_cast<int>(spec.max_total_degree)));
    for (std::uint32_t d = 0; d < budget; ++d) {
      std::size_t v = static_cast<std::size_t>(uniform(0, static_cast<int>(spec.vars) - 1));
      m.set(v, m[v] + 1);
    }
    int c = 0;
    while (c == 0) c = uniform(-spec.coeff_range, spec.coeff_range);
    terms.push_back({m, Rational(c)});
  }
  return Polynomial::from_terms(ring, std::move(terms));
}

Polynomial Generator::polynomial_of_class(const VarOrderPtr& ring, std::size_t cls,
                                          const RandomSpec& spec) {
  RandomSpec lower = spec;
  lower.vars = cls + 1;
  for (;;) {
    Polynomial p = polynomial(ring, lower);
    if (p.class_index() == cls) return p;
  }
}

std::vector<Polynomial> Generator::system(const VarOrderPtr& ring, std::size_t count,
                                          const RandomSpec& spec) {
  std::vector<Polynomial> out;
  while (out.size() < count) {
    Polynomial p = polynomial(ring, spec);
    if (!p.is_constant()) out.push_back(p);
  }
  return out;
}

unmix::TriangularSet Generator::chain(const VarOrderPtr& ring, std::size_t length,
                                      const RandomSpec& spec) {
  std::vector<std::size_t> classes;
  for (std::size_t i = 0; i < spec.vars; ++i) classes.push_back(i);
  std::shuffle(classes.begin(), classes.end(), rng_);
  std::size_t len = std::min<std::size_t>(length, spec.vars);
  len = static_cast<std::size_t>(uniform(1, static_cast<int>(len)));
  classes.resize(len);
  std::sort(classes.begin(), classes.end());
  std::vector<Polynomial> elems;
  for (auto c : classes) elems.push_back(polynomial_of_class(ring, c, spec));
  return unmix::TriangularSet(std::move(elems));
}

std::vector<Rational> Generator::point(std::size_t n, int range) {
  std::vector<Rational> out;
  for (std::size_t i = 0; i < n; ++i) {
    Rational v(uniform(-range, range), uniform(1, 3));
    v.canonicalize();
    out.push_back(v);
  }
  return out;
}

namespace {

// Exponents listed greatest variable first, so the default vector order
// is the lex order.
using Key = std::vector<std::uint32_t>;
using NP = std::map<Key, Rational, std::greater<Key>>;

struct Ring {
  VarOrderPtr ring;
  std::vector<std::size_t> index;  // sequence position -> ring index
};

Ring make_ring(const VarOrderPtr& ring, const std::vector<std::string>& sequence) {
  Ring r{ring, {}};
  for (const auto& name : sequence) {
    auto i = ring->index_of(name);
    if (!i) throw std::invalid_argument("sequence names an unknown variable " + name);
    r.index.push_back(*i);
  }
  return r;
}

NP to_np(const Polynomial& p, const Ring& r) {
  NP out;
  for (const auto& t : p.terms()) {
    Key k;
    for (auto i : r.index) k.push_back(t.mono[i]);
    out[k] = t.coeff;
  }
  return out;
}

Polynomial from_np(const NP& p, const Ring& r) {
  std::vector<unmix::Term> terms;
  for (const auto& [k, c] : p) {
    unmix::Monomial m;
    for (std::size_t j = 0; j < k.size(); ++j) m.set(r.index[j], k[j]);
    terms.push_back({m, c});
  }
  return Polynomial::from_terms(r.ring, std::move(terms));
}

bool divides(const Key& a, const Key& b) {
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i] > b[i]) return false;
  return true;
}

Key quotient(const Key& b, const Key& a) {
  Key out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = b[i] - a[i];
  return out;
}

// p -= c * x^k * q
void sub_scaled(NP& p, const Rational& c, const Key& k, const NP& q) {
  for (const auto& [qk, qc] : q) {
    Key m(k.size());
    for (std::size_t i = 0; i < k.size(); ++i) m[i] = k[i] + qk[i];
    Rational& slot = p[m];
    slot -= c * qc;
    if (slot == 0) p.erase(m);
  }
}

NP make_monic(NP p) {
  if (p.empty()) return p;
  Rational lc = p.begin()->second;
  for (auto& [k, c] : p) c /= lc;
  return p;
}

NP full_reduce(NP p, const std::vector<NP>& g) {
  NP rem;
  while (!p.empty()) {
    auto [k, c] = *p.begin();
    bool reduced = false;
    for (const auto& q : g) {
      if (q.empty()) continue;
      const auto& [qk, qc] = *q.begin();
      if (divides(qk, k)) {
        sub_scaled(p, c / qc, quotient(k, qk), q);
        reduced = true;
        break;
      }
    }
    if (!reduced) {
      rem[k] = c;
      p.erase(p.begin());
    }
  }
  return rem;
}

NP spoly(const NP& f, const NP& g) {
  const auto& [fk, fc] = *f.begin();
  const auto& [gk, gc] = *g.begin();
  Key l(fk.size());
  for (std::size_t i = 0; i < l.size(); ++i) l[i] = std::max(fk[i], gk[i]);
  NP out;
  sub_scaled(out, Rational(-1) / fc, quotient(l, fk), f);
  sub_scaled(out, Rational(1) / gc, quotient(l, gk), g);
  return out;
}

}  // namespace

std::optional<std::vector<Polynomial>> naive_groebner(const std::vector<Polynomial>& f,
                                                      const std::vector<std::string>& sequence,
                                                      std::size_t max_pairs) {
  const Ring r = make_ring(f.front().order_ptr(), sequence);
  std::vector<NP> g;
  for (const auto& p : f)
    if (!p.is_zero()) g.push_back(to_np(p, r));
  std::vector<std::pair<std::size_t, std::size_t>> pairs;
  for (std::size_t j = 0; j < g.size(); ++j)
    for (std::size_t i = 0; i < j; ++i) pairs.emplace_back(i, j);
  std::size_t examined = 0;
  while (!pairs.empty()) {
    if (++examined > max_pairs) return std::nullopt;
    auto [i, j] = pairs.back();
    pairs.pop_back();
    NP h = full_reduce(spoly(g[i], g[j]), g);
    if (h.empty()) continue;
    for (std::size_t k = 0; k < g.size(); ++k) pairs.emplace_back(k, g.size());
    g.push_back(std::move(h));
  }
  // minimize: drop generators whose leading term is divisible by another's
  std::vector<NP> minimal;
  for (std::size_t i = 0; i < g.size(); ++i) {
    bool drop = false;
    for (std::size_t j = 0; j < g.size() && !drop; ++j) {
      if (i == j) continue;
      const Key& ki = g[i].begin()->first;
      const Key& kj = g[j].begin()->first;
      if (divides(kj, ki) && (kj != ki || j < i)) drop = true;
    }
    if (!drop) minimal.push_back(make_monic(g[i]));
  }
  // inter-reduce
  for (std::size_t i = 0; i < minimal.size(); ++i) {
    std::vector<NP> others;
    for (std::size_t j = 0; j < minimal.size(); ++j)
      if (j != i) others.push_back(minimal[j]);
    minimal[i] = make_monic(full_reduce(minimal[i], others));
  }
  std::sort(minimal.begin(), minimal.end(),
            [](const NP& a, const NP& b) { return a.begin()->first > b.begin()->first; });
  std::vector<Polynomial> out;
  for (const auto& p : minimal) out.push_back(from_np(p, r));
  return out;
}

std::vector<Polynomial> monic(const std::vector<Polynomial>& g,
                              const std::vector<std::string>& sequence) {
  std::vector<Polynomial> out;
  for (const auto& p : g) {
    const Ring r = make_ring(p.order_ptr(), sequence);
    out.push_back(from_np(make_monic(to_np(p, r)), r));
  }
  return out;
}

Polynomial naive_remainder(const Polynomial& p, const std::vector<Polynomial>& g,
                           const std::vector<std::string>& sequence) {
  const Ring r = make_ring(p.order_ptr(), sequence);
  std::vector<NP> basis;
  for (const auto& q : g) basis.push_back(to_np(q, r));
  return from_np(full_reduce(to_np(p, r), basis), r);
}

}  // namespace oracle
