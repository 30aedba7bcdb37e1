#include "unmix/groebner.hpp"

#include <algorithm>
#include <cctype>
#include <limits>
#include <set>
#include <stdexcept>

#include "unmix/errors.hpp"

namespace unmix {

namespace gb_detail {

struct ITerm {
  Monomial m;
  Integer c;
};
// Integer polynomial in the internal ring (native lex is the basis
// order). Terms ascend, so the leading term is back().
using IPoly = std::vector<ITerm>;

bool ascending(const ITerm& a, const ITerm& b) { return lex_compare(a.m, b.m) < 0; }

std::size_t bits(const Integer& c) { return mpz_sizeinbase(c.get_mpz_t(), 2); }

// Positive-leading primitive form.
void make_primitive(IPoly& p) {
  if (p.empty()) return;
  Integer g = 0;
  for (const auto& t : p) {
    g = gcd(g, t.c);
    if (g == 1) break;
  }
  if (p.back().c < 0) g = -g;
  if (g != 1) {
    for (auto& t : p) mpz_divexact(t.c.get_mpz_t(), t.c.get_mpz_t(), g.get_mpz_t());
  }
}

bool is_constant(const IPoly& p) { return p.size() == 1 && p.back().m.is_one(); }

// a*h - b*shift*g where the leading terms cancel by construction.
IPoly combine(const Integer& a, const IPoly& h, const Integer& b, const IPoly& g,
              const Monomial& shift) {
  IPoly out;
  out.reserve(h.size() + g.size());
  std::size_t i = 0, j = 0;
  const std::size_t hn = h.size() - 1, gn = g.size() - 1;
  Monomial gm;
  bool have_gm = false;
  while (i < hn || j < gn) {
    if (j < gn && !have_gm) {
      gm = g[j].m * shift;
      have_gm = true;
    }
    int c;
    if (i == hn) {
      c = 1;
    } else if (j == gn) {
      c = -1;
    } else {
      auto cmp = lex_compare(h[i].m, gm);
      c = cmp < 0 ? -1 : (cmp > 0 ? 1 : 0);
    }
    if (c < 0) {
      out.push_back(ITerm{h[i].m, a == 1 ? h[i].c : Integer(a * h[i].c)});
      ++i;
    } else if (c > 0) {
      out.push_back(ITerm{gm, -b * g[j].c});
      ++j;
      have_gm = false;
    } else {
      Integer v = a * h[i].c - b * g[j].c;
      if (v != 0) out.push_back(ITerm{gm, std::move(v)});
      ++i;
      ++j;
      have_gm = false;
    }
  }
  return out;
}

// Full reduction of h modulo `basis`. When `mult` is given it accumulates
// the factor m with m * h_in == result (mod the ideal).
IPoly reduce(IPoly h, const std::vector<const IPoly*>& basis, Rational* mult,
             std::size_t max_bits) {
  std::vector<ITerm> rem_desc;
  std::size_t steps = 0;
  while (!h.empty()) {
    const ITerm& lt = h.back();
    const IPoly* div = nullptr;
    for (const IPoly* g : basis) {
      if (g->back().m.divides(lt.m)) {
        div = g;
        break;
      }
    }
    if (div == nullptr) {
      rem_desc.push_back(std::move(h.back()));
      h.pop_back();
      continue;
    }
    const Integer& gl = div->back().c;
    Integer common = gcd(lt.c, gl);
    Integer a = gl / common;
    Integer b = lt.c / common;
    Monomial shift = div->back().m.cofactor_in(lt.m);
    h = combine(a, h, b, *div, shift);
    if (a != 1) {
      for (auto& t : rem_desc) t.c *= a;
      if (mult) *mult *= a;
    }
    if (++steps % 16 == 0 && !h.empty()) {
      Integer k = 0;
      for (const auto& t : h) {
        k = gcd(k, t.c);
        if (k == 1) break;
      }
      for (const auto& t : rem_desc) {
        if (k == 1) break;
        k = gcd(k, t.c);
      }
      if (k > 1) {
        for (auto& t : h) mpz_divexact(t.c.get_mpz_t(), t.c.get_mpz_t(), k.get_mpz_t());
        for (auto& t : rem_desc) mpz_divexact(t.c.get_mpz_t(), t.c.get_mpz_t(), k.get_mpz_t());
        if (mult) *mult /= k;
      }
      for (const auto& t : h) {
        if (bits(t.c) > max_bits) {
          throw ResourceLimit("Groebner coefficient exceeded " + std::to_string(max_bits) +
                              " bits");
        }
      }
    }
  }
  std::reverse(rem_desc.begin(), rem_desc.end());
  return rem_desc;
}

IPoly s_poly(const IPoly& f, const IPoly& g) {
  const auto& lf = f.back();
  const auto& lg = g.back();
  Monomial l = lcm(lf.m, lg.m);
  Integer common = gcd(lf.c, lg.c);
  Integer a = lg.c / common;
  Integer b = lf.c / common;
  Monomial fs = lf.m.cofactor_in(l);
  Monomial gs = lg.m.cofactor_in(l);
  IPoly fshift = f;
  for (auto& t : fshift) t.m = t.m * fs;
  return combine(a, fshift, b, g, gs);
}

// Index maps between the caller's ring and the internal ring whose
// native lex order equals the requested order.
struct RingMap {
  std::vector<std::size_t> to_internal;
  std::vector<std::size_t> to_ambient;

  RingMap(const VarOrder& ring, const TermOrderSpec& order) {
    const std::size_t n = ring.size();
    if (order.sequence.size() != n) {
      throw std::invalid_argument("term order '" + order.to_string() +
                                  "' is not a permutation of the ring variables");
    }
    to_internal.assign(n, n);
    to_ambient.assign(n, n);
    for (std::size_t k = 0; k < n; ++k) {
      auto idx = ring.index_of(order.sequence[k]);
      if (!idx || to_internal[*idx] != n) {
        throw std::invalid_argument("term order '" + order.to_string() +
                                    "' is not a permutation of the ring variables");
      }
      to_internal[*idx] = n - 1 - k;
      to_ambient[n - 1 - k] = *idx;
    }
  }

  Monomial in(const Monomial& m) const {
    Monomial r;
    for (std::size_t i = 0; i < to_internal.size(); ++i) r.set(to_internal[i], m[i]);
    return r;
  }
  Monomial out(const Monomial& m) const {
    Monomial r;
    for (std::size_t i = 0; i < to_ambient.size(); ++i) r.set(to_ambient[i], m[i]);
    return r;
  }
};

// p scaled by the lcm of its denominators, returned as the scale.
IPoly to_internal(const Polynomial& p, const RingMap& map, Integer* den_out = nullptr) {
  Integer den = 1;
  for (const auto& t : p.terms()) den = lcm(den, Integer(t.coeff.get_den()));
  IPoly out;
  out.reserve(p.term_count());
  for (const auto& t : p.terms()) {
    out.push_back(ITerm{map.in(t.mono), t.coeff.get_num() * (den / t.coeff.get_den())});
  }
  std::sort(out.begin(), out.end(), ascending);
  if (den_out) *den_out = den;
  return out;
}

Polynomial to_ambient(const IPoly& p, const RingMap& map, const VarOrderPtr& ring,
                      const Rational& divisor = Rational(1)) {
  std::vector<Term> terms;
  terms.reserve(p.size());
  for (const auto& t : p) terms.push_back(Term{map.out(t.m), Rational(t.c) / divisor});
  return Polynomial::from_terms(ring, std::move(terms));
}

struct Pair {
  Monomial lcm;
  std::size_t i, j;
};

struct PairLess {
  bool operator()(const Pair& a, const Pair& b) const {
    auto c = lex_compare(a.lcm, b.lcm);
    if (c != 0) return c < 0;
    if (a.i != b.i) return a.i < b.i;
    return a.j < b.j;
  }
};

class Builder {
 public:
  explicit Builder(const GbLimits& limits) : limits_(limits) {}

  // Returns false once the unit ideal is detected.
  bool run(std::vector<IPoly> inputs) {
    std::stable_sort(inputs.begin(), inputs.end(), [](const IPoly& a, const IPoly& b) {
      return lex_compare(a.back().m, b.back().m) < 0;
    });
    for (auto& f : inputs) {
      if (!add(reduce(std::move(f), basis_, nullptr, limits_.max_coeff_bits))) return false;
    }
    while (!pairs_.empty()) {
      if (pairs_.size() > limits_.max_pairs) {
        throw ResourceLimit("Groebner pair queue exceeded " + std::to_string(limits_.max_pairs));
      }
      Pair p = *pairs_.begin();
      pairs_.erase(pairs_.begin());
      IPoly s = s_poly(polys_[p.i], polys_[p.j]);
      if (!add(reduce(std::move(s), basis_, nullptr, limits_.max_coeff_bits))) return false;
    }
    return true;
  }

  // Interreduced, primitive, sorted by descending leading monomial.
  std::vector<IPoly> reduced_basis() const {
    std::vector<std::size_t> keep;
    for (std::size_t i = 0; i < polys_.size(); ++i) {
      if (!alive_[i]) continue;
      bool redundant = false;
      for (std::size_t j = 0; j < polys_.size() && !redundant; ++j) {
        if (j == i || !alive_[j]) continue;
        const auto& mi = polys_[i].back().m;
        const auto& mj = polys_[j].back().m;
        redundant = mj.divides(mi) && (!(mi == mj) || j < i);
      }
      if (!redundant) keep.push_back(i);
    }
    std::vector<IPoly> out;
    for (std::size_t i : keep) {
      std::vector<const IPoly*> others;
      for (std::size_t j : keep) {
        if (j != i) others.push_back(&polys_[j]);
      }
      // The leading monomial is irreducible, so only the tail changes.
      IPoly g = polys_[i];
      ITerm lead = g.back();
      g.pop_back();
      Rational mult = 1;
      IPoly tail = reduce(std::move(g), others, &mult, limits_.max_coeff_bits);
      // tail == mult * old_tail modulo the ideal; rescale the lead to match.
      for (auto& t : tail) t.c *= mult.get_den();
      lead.c *= mult.get_num();
      tail.push_back(std::move(lead));
      make_primitive(tail);
      out.push_back(std::move(tail));
    }
    std::sort(out.begin(), out.end(), [](const IPoly& a, const IPoly& b) {
      return lex_compare(a.back().m, b.back().m) > 0;
    });
    return out;
  }

 private:
  bool add(IPoly h) {
    if (h.empty()) return true;
    make_primitive(h);
    if (is_constant(h)) return false;
    polys_.push_back(std::move(h));
    alive_.push_back(0);
    update(polys_.size() - 1);
    basis_.clear();
    for (std::size_t i = 0; i < polys_.size(); ++i) {
      if (alive_[i]) basis_.push_back(&polys_[i]);
    }
    return true;
  }

  // Gebauer-Moeller installation of the new element h.
  void update(std::size_t h) {
    const Monomial lh = polys_[h].back().m;
    std::vector<std::size_t> cand;
    for (std::size_t g = 0; g < h; ++g) {
      if (alive_[g]) cand.push_back(g);
    }
    std::vector<std::size_t> kept;
    for (std::size_t k = 0; k < cand.size(); ++k) {
      const Monomial& lg = polys_[cand[k]].back().m;
      bool keep = lg.coprime(lh);
      if (!keep) {
        const Monomial l = lcm(lg, lh);
        keep = true;
        for (std::size_t r = k + 1; r < cand.size() && keep; ++r) {
          if (lcm(polys_[cand[r]].back().m, lh).divides(l)) keep = false;
        }
        for (std::size_t d : kept) {
          if (!keep) break;
          if (lcm(polys_[d].back().m, lh).divides(l)) keep = false;
        }
      }
      if (keep) kept.push_back(cand[k]);
    }

    for (auto it = pairs_.begin(); it != pairs_.end();) {
      const Monomial& l = it->lcm;
      if (lh.divides(l) && !(lcm(polys_[it->i].back().m, lh) == l) &&
          !(lcm(polys_[it->j].back().m, lh) == l)) {
        it = pairs_.erase(it);
      } else {
        ++it;
      }
    }
    for (std::size_t g : kept) {
      const Monomial& lg = polys_[g].back().m;
      if (!lg.coprime(lh)) pairs_.insert(Pair{lcm(lg, lh), g, h});
    }
    for (std::size_t g = 0; g < h; ++g) {
      if (alive_[g] && lh.divides(polys_[g].back().m)) alive_[g] = 0;
    }
    alive_[h] = 1;
  }

  GbLimits limits_;
  std::vector<IPoly> polys_;
  std::vector<char> alive_;
  std::vector<const IPoly*> basis_;
  std::set<Pair, PairLess> pairs_;
};

}  // namespace gb_detail

using gb_detail::IPoly;
using gb_detail::RingMap;

struct GroebnerBasis::Impl {
  VarOrderPtr ring;
  TermOrderSpec order;
  RingMap map;
  std::vector<Polynomial> generators;
  std::vector<IPoly> internal;
  std::vector<const IPoly*> view;
  bool unit = false;
};

GroebnerBasis make_basis(std::shared_ptr<const GroebnerBasis::Impl> impl) {
  return GroebnerBasis(std::move(impl));
}

namespace {

GroebnerBasis finish(const VarOrderPtr& ring, const TermOrderSpec& order, RingMap map,
                     std::vector<IPoly> internal, bool unit) {
  auto impl = std::make_shared<GroebnerBasis::Impl>(
      GroebnerBasis::Impl{ring, order, std::move(map), {}, {}, {}, unit});
  if (unit) {
    internal.clear();
    internal.push_back(IPoly{gb_detail::ITerm{Monomial{}, Integer(1)}});
  }
  impl->internal = std::move(internal);
  for (const auto& g : impl->internal) {
    impl->generators.push_back(gb_detail::to_ambient(g, impl->map, ring));
    impl->view.push_back(&g);
  }
  return make_basis(std::move(impl));
}

VarOrderPtr common_ring(std::span<const Polynomial> polys) {
  if (polys.empty()) throw std::invalid_argument("Groebner basis of an empty set");
  const auto& ring = polys.front().order_ptr();
  for (const auto& p : polys) {
    if (!(p.order() == *ring)) throw std::invalid_argument("variable order mismatch");
  }
  return ring;
}

}  // namespace

// ------------------------------------------------------------ TermOrderSpec

TermOrderSpec TermOrderSpec::lex(const VarOrder& ring) {
  TermOrderSpec spec;
  for (std::size_t i = ring.size(); i-- > 0;) spec.sequence.push_back(ring.name(i));
  return spec;
}

TermOrderSpec TermOrderSpec::parse(std::string_view text) {
  TermOrderSpec spec;
  std::size_t start = 0;
  for (;;) {
    auto end = text.find('>', start);
    auto piece = text.substr(start, end == std::string_view::npos ? text.npos : end - start);
    while (!piece.empty() && std::isspace(static_cast<unsigned char>(piece.front()))) piece.remove_prefix(1);
    while (!piece.empty() && std::isspace(static_cast<unsigned char>(piece.back()))) piece.remove_suffix(1);
    if (piece.empty()) throw std::invalid_argument("malformed term order '" + std::string(text) + "'");
    spec.sequence.emplace_back(piece);
    if (end == std::string_view::npos) break;
    start = end + 1;
  }
  return spec;
}

std::string TermOrderSpec::to_string() const {
  std::string out;
  for (std::size_t i = 0; i < sequence.size(); ++i) {
    if (i) out += '>';
    out += sequence[i];
  }
  return out;
}

// ------------------------------------------------------------ GroebnerBasis

const std::vector<Polynomial>& GroebnerBasis::generators() const { return impl_->generators; }
const TermOrderSpec& GroebnerBasis::order() const { return impl_->order; }
const VarOrderPtr& GroebnerBasis::ring() const { return impl_->ring; }
bool GroebnerBasis::is_unit() const { return impl_->unit; }

Term GroebnerBasis::leading_term_of(const Polynomial& p) const {
  if (p.is_zero()) throw std::invalid_argument("leading term of zero");
  const Term* best = nullptr;
  Monomial best_m;
  for (const auto& t : p.terms()) {
    Monomial m = impl_->map.in(t.mono);
    if (!best || lex_compare(m, best_m) > 0) {
      best = &t;
      best_m = m;
    }
  }
  return *best;
}

GroebnerBasis buchberger(std::span<const Polynomial> generators, const TermOrderSpec& order,
                         const GbLimits& limits) {
  auto ring = common_ring(generators);
  RingMap map(*ring, order);
  std::vector<IPoly> inputs;
  bool unit = false;
  for (const auto& p : generators) {
    if (p.is_zero()) continue;
    if (p.is_constant()) unit = true;
    inputs.push_back(gb_detail::to_internal(p, map));
  }
  if (unit) return finish(ring, order, map, {}, true);
  if (inputs.empty()) return finish(ring, order, map, {}, false);
  gb_detail::Builder builder(limits);
  if (!builder.run(std::move(inputs))) return finish(ring, order, map, {}, true);
  return finish(ring, order, map, builder.reduced_basis(), false);
}

GroebnerBasis adopt_reduced_basis(std::span<const Polynomial> generators,
                                  const TermOrderSpec& order) {
  auto ring = common_ring(generators);
  RingMap map(*ring, order);
  std::vector<IPoly> internal;
  for (const auto& p : generators) {
    if (p.is_zero()) continue;
    if (p.is_constant()) return finish(ring, order, map, {}, true);
    internal.push_back(gb_detail::to_internal(p, map));
    gb_detail::make_primitive(internal.back());
  }
  std::sort(internal.begin(), internal.end(), [](const IPoly& a, const IPoly& b) {
    return lex_compare(a.back().m, b.back().m) > 0;
  });
  return finish(ring, order, map, std::move(internal), false);
}

Polynomial normal_form(const Polynomial& p, const GroebnerBasis& g) {
  const auto& impl = g.impl();
  if (!(p.order() == *impl.ring)) throw std::invalid_argument("variable order mismatch");
  if (p.is_zero() || impl.unit) return Polynomial(impl.ring);
  Integer den;
  IPoly h = gb_detail::to_internal(p, impl.map, &den);
  Rational mult = 1;
  IPoly r = gb_detail::reduce(std::move(h), impl.view, &mult,
                              std::numeric_limits<std::size_t>::max());
  return gb_detail::to_ambient(r, impl.map, impl.ring, mult * Rational(den));
}

std::vector<Polynomial> normal_forms(std::span<const Polynomial> polys, const GroebnerBasis& g,
                                     Exec exec) {
  std::vector<Polynomial> out(polys.size(), Polynomial(g.ring()));
  parallel_for(polys.size(), exec, [&](std::size_t i) { out[i] = normal_form(polys[i], g); });
  return out;
}

bool ideal_member(const Polynomial& p, const GroebnerBasis& g) {
  return normal_form(p, g).is_zero();
}

bool all_members(std::span<const Polynomial> polys, const GroebnerBasis& g, Exec exec) {
  for (const auto& r : normal_forms(polys, g, exec)) {
    if (!r.is_zero()) return false;
  }
  return true;
}

bool ideal_equal(const GroebnerBasis& a, const GroebnerBasis& b, Exec exec) {
  if (!(*a.ring() == *b.ring())) return false;
  return all_members(a.generators(), b, exec) && all_members(b.generators(), a, exec);
}

bool radical_member(const Polynomial& p, std::span<const Polynomial> f,
                    const GbLimits& limits) {
  if (p.is_zero()) return true;
  const auto& ring = p.order_ptr();
  auto wide = ring->with_greatest(ring->fresh_name("z"));
  const std::size_t z = ring->size();
  std::vector<Polynomial> h;
  for (const auto& q : f) {
    if (!(q.order() == *ring)) throw std::invalid_argument("variable order mismatch");
    h.push_back(q.lifted_to(wide));
  }
  h.push_back(Polynomial::variable(wide, z) * p.lifted_to(wide) -
              Polynomial::constant(wide, Rational(1)));
  return buchberger(h, TermOrderSpec::lex(*wide), limits).is_unit();
}

std::vector<Polynomial> eliminate(const GroebnerBasis& g, std::span<const std::string> drop) {
  const auto& seq = g.order().sequence;
  std::vector<std::size_t> dropped;
  for (const auto& name : drop) {
    auto pos = std::find(seq.begin(), seq.end(), name);
    if (pos == seq.end()) throw std::invalid_argument("unknown variable '" + name + "'");
    dropped.push_back(static_cast<std::size_t>(pos - seq.begin()));
  }
  for (std::size_t k = 0; k < dropped.size(); ++k) {
    if (dropped[k] >= dropped.size()) {
      throw std::invalid_argument(
          "eliminate: dropped variables must be greater than every kept variable");
    }
  }
  std::vector<std::size_t> vars;
  for (const auto& name : drop) vars.push_back(*g.ring()->index_of(name));
  std::vector<Polynomial> out;
  for (const auto& p : g.generators()) {
    bool free = std::none_of(vars.begin(), vars.end(), [&](std::size_t v) { return p.involves(v); });
    if (free) out.push_back(p);
  }
  return out;
}

Polynomial s_polynomial(const Polynomial& f, const Polynomial& g, const TermOrderSpec& order) {
  if (f.is_zero() || g.is_zero()) throw std::invalid_argument("S-polynomial of zero");
  RingMap map(f.order(), order);
  auto lead = [&](const Polynomial& p) {
    const Term* best = &p.terms()[0];
    Monomial bm = map.in(best->mono);
    for (const auto& t : p.terms()) {
      Monomial m = map.in(t.mono);
      if (lex_compare(m, bm) > 0) {
        best = &t;
        bm = m;
      }
    }
    return *best;
  };
  Term lf = lead(f), lg = lead(g);
  Monomial l = lcm(lf.mono, lg.mono);
  return f.times_monomial(lf.mono.cofactor_in(l), 1 / lf.coeff) -
         g.times_monomial(lg.mono.cofactor_in(l), 1 / lg.coeff);
}

}  // namespace unmix
