#include "unmix/polyring.hpp"

#include <algorithm>
#include <limits>
#include <stdexcept>

#include "unmix/parser_io.hpp"

namespace unmix {

// ---------------------------------------------------------------- VarOrder

VarOrder::VarOrder(std::vector<std::string> names) : names_(std::move(names)) {
  if (names_.empty()) throw std::invalid_argument("variable order is empty");
  if (names_.size() > kMaxVars) {
    throw std::invalid_argument("at most " + std::to_string(kMaxVars) +
                                " variables are supported");
  }
  for (std::size_t i = 0; i < names_.size(); ++i) {
    if (names_[i].empty()) throw std::invalid_argument("empty variable name");
    for (std::size_t j = 0; j < i; ++j) {
      if (names_[i] == names_[j]) {
        throw std::invalid_argument("duplicate variable '" + names_[i] + "'");
      }
    }
  }
}

std::optional<std::size_t> VarOrder::index_of(std::string_view name) const {
  for (std::size_t i = 0; i < names_.size(); ++i) {
    if (names_[i] == name) return i;
  }
  return std::nullopt;
}

VarOrderPtr VarOrder::with_greatest(const std::string& name) const {
  auto names = names_;
  names.push_back(name);
  return std::make_shared<const VarOrder>(std::move(names));
}

std::string VarOrder::fresh_name(const std::string& base) const {
  std::string candidate = base;
  while (index_of(candidate)) candidate += "_";
  return candidate;
}

VarOrderPtr make_order(std::vector<std::string> names) {
  return std::make_shared<const VarOrder>(std::move(names));
}

// ---------------------------------------------------------------- Monomial

Monomial Monomial::variable(std::size_t index, std::uint32_t exponent) {
  if (index >= kMaxVars) throw std::out_of_range("variable index");
  Monomial m;
  m.exp_[index] = exponent;
  return m;
}

std::uint64_t Monomial::total_degree() const {
  std::uint64_t d = 0;
  for (auto e : exp_) d += e;
  return d;
}

bool Monomial::is_one() const {
  return std::all_of(exp_.begin(), exp_.end(), [](auto e) { return e == 0; });
}

bool Monomial::divides(const Monomial& m) const {
  for (std::size_t i = 0; i < kMaxVars; ++i) {
    if (exp_[i] > m.exp_[i]) return false;
  }
  return true;
}

Monomial Monomial::cofactor_in(const Monomial& m) const {
  Monomial q;
  for (std::size_t i = 0; i < kMaxVars; ++i) q.exp_[i] = m.exp_[i] - exp_[i];
  return q;
}

bool Monomial::coprime(const Monomial& m) const {
  for (std::size_t i = 0; i < kMaxVars; ++i) {
    if (exp_[i] != 0 && m.exp_[i] != 0) return false;
  }
  return true;
}

Monomial operator*(const Monomial& a, const Monomial& b) {
  Monomial r;
  for (std::size_t i = 0; i < kMaxVars; ++i) {
    std::uint64_t e = std::uint64_t{a.exp_[i]} + b.exp_[i];
    if (e > std::numeric_limits<std::uint32_t>::max()) {
      throw std::overflow_error("monomial exponent overflow");
    }
    r.exp_[i] = static_cast<std::uint32_t>(e);
  }
  return r;
}

Monomial lcm(const Monomial& a, const Monomial& b) {
  Monomial r;
  for (std::size_t i = 0; i < kMaxVars; ++i) {
    r.exp_[i] = std::max(a.exp_[i], b.exp_[i]);
  }
  return r;
}

// -------------------------------------------------------------- Polynomial

namespace {

bool term_greater(const Term& a, const Term& b) {
  return lex_compare(a.mono, b.mono) > 0;
}

// Merge of two sorted term lists: a + sign * b.
std::vector<Term> merge_terms(const std::vector<Term>& a,
                              const std::vector<Term>& b, bool subtract) {
  std::vector<Term> out;
  out.reserve(a.size() + b.size());
  std::size_t i = 0, j = 0;
  while (i < a.size() && j < b.size()) {
    auto c = lex_compare(a[i].mono, b[j].mono);
    if (c > 0) {
      out.push_back(a[i++]);
    } else if (c < 0) {
      out.push_back(b[j++]);
      if (subtract) out.back().coeff = -out.back().coeff;
    } else {
      Rational s = subtract ? Rational(a[i].coeff - b[j].coeff)
                            : Rational(a[i].coeff + b[j].coeff);
      if (s != 0) out.push_back(Term{a[i].mono, std::move(s)});
      ++i;
      ++j;
    }
  }
  for (; i < a.size(); ++i) out.push_back(a[i]);
  for (; j < b.size(); ++j) {
    out.push_back(b[j]);
    if (subtract) out.back().coeff = -out.back().coeff;
  }
  return out;
}

}  // namespace

Polynomial::Polynomial(VarOrderPtr order) : order_(std::move(order)) {
  if (!order_) throw std::invalid_argument("polynomial without variable order");
}

Polynomial Polynomial::constant(VarOrderPtr order, const Rational& c) {
  Polynomial p(std::move(order));
  if (c != 0) p.terms_.push_back(Term{Monomial{}, c});
  return p;
}

Polynomial Polynomial::variable(VarOrderPtr order, std::size_t index,
                                std::uint32_t exponent) {
  if (index >= order->size()) throw std::out_of_range("variable index");
  Polynomial p(std::move(order));
  p.terms_.push_back(Term{Monomial::variable(index, exponent), Rational(1)});
  return p;
}

Polynomial Polynomial::from_terms(VarOrderPtr order, std::vector<Term> terms) {
  Polynomial p(std::move(order));
  std::sort(terms.begin(), terms.end(), term_greater);
  for (auto& t : terms) {
    if (!p.terms_.empty() && p.terms_.back().mono == t.mono) {
      p.terms_.back().coeff += t.coeff;
      if (p.terms_.back().coeff == 0) p.terms_.pop_back();
    } else if (t.coeff != 0) {
      p.terms_.push_back(std::move(t));
    }
  }
  return p;
}

bool Polynomial::is_constant() const {
  return terms_.empty() || (terms_.size() == 1 && terms_[0].mono.is_one());
}

Rational Polynomial::constant_value() const {
  if (terms_.empty()) return Rational(0);
  if (!is_constant()) throw std::invalid_argument("polynomial is not constant");
  return terms_[0].coeff;
}

std::uint32_t Polynomial::degree(std::size_t var) const {
  std::uint32_t d = 0;
  for (const auto& t : terms_) d = std::max(d, t.mono[var]);
  return d;
}

std::uint64_t Polynomial::total_degree() const {
  std::uint64_t d = 0;
  for (const auto& t : terms_) d = std::max(d, t.mono.total_degree());
  return d;
}

std::optional<std::size_t> Polynomial::class_index() const {
  // The lex-greatest term carries the highest variable present.
  if (terms_.empty()) return std::nullopt;
  const auto& m = terms_.front().mono;
  for (std::size_t i = order_->size(); i-- > 0;) {
    if (m[i] > 0) return i;
  }
  return std::nullopt;
}

void Polynomial::require_same_ring(const Polynomial& other) const {
  if (order_ != other.order_ && !(*order_ == *other.order_)) {
    throw std::invalid_argument("variable order mismatch");
  }
}

Polynomial Polynomial::operator-() const {
  Polynomial r = *this;
  for (auto& t : r.terms_) t.coeff = -t.coeff;
  return r;
}

Polynomial& Polynomial::operator+=(const Polynomial& other) {
  require_same_ring(other);
  terms_ = merge_terms(terms_, other.terms_, false);
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& other) {
  require_same_ring(other);
  terms_ = merge_terms(terms_, other.terms_, true);
  return *this;
}

Polynomial& Polynomial::operator*=(const Polynomial& other) {
  *this = *this * other;
  return *this;
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  a.require_same_ring(b);
  if (a.is_zero() || b.is_zero()) return Polynomial(a.order_);
  if (b.terms_.size() == 1) return a.times_monomial(b.terms_[0].mono, b.terms_[0].coeff);
  if (a.terms_.size() == 1) return b.times_monomial(a.terms_[0].mono, a.terms_[0].coeff);
  std::vector<Term> prod;
  prod.reserve(a.terms_.size() * b.terms_.size());
  for (const auto& s : a.terms_) {
    for (const auto& t : b.terms_) {
      prod.push_back(Term{s.mono * t.mono, s.coeff * t.coeff});
    }
  }
  return Polynomial::from_terms(a.order_, std::move(prod));
}

Polynomial Polynomial::scaled(const Rational& c) const {
  if (c == 0) return Polynomial(order_);
  Polynomial r = *this;
  for (auto& t : r.terms_) t.coeff *= c;
  return r;
}

Polynomial Polynomial::times_monomial(const Monomial& m, const Rational& c) const {
  if (c == 0) return Polynomial(order_);
  Polynomial r = *this;
  // Multiplying by a monomial preserves the lex order of terms.
  for (auto& t : r.terms_) {
    t.mono = t.mono * m;
    t.coeff *= c;
  }
  return r;
}

Polynomial Polynomial::pow(std::uint32_t k) const {
  Polynomial result = constant(order_, Rational(1));
  Polynomial base = *this;
  while (k > 0) {
    if (k & 1u) result = result * base;
    k >>= 1u;
    if (k > 0) base = base * base;
  }
  return result;
}

Polynomial Polynomial::lifted_to(VarOrderPtr wider) const {
  if (wider->size() < order_->size()) {
    throw std::invalid_argument("target ring is smaller");
  }
  for (std::size_t i = 0; i < order_->size(); ++i) {
    if (wider->name(i) != order_->name(i)) {
      throw std::invalid_argument("target ring does not extend this ring");
    }
  }
  Polynomial r(std::move(wider));
  r.terms_ = terms_;
  return r;
}

Polynomial Polynomial::remapped(VarOrderPtr target,
                                std::span<const std::size_t> new_index) const {
  if (new_index.size() != order_->size()) {
    throw std::invalid_argument("remap table has wrong length");
  }
  std::vector<Term> terms;
  terms.reserve(terms_.size());
  for (const auto& t : terms_) {
    Monomial m;
    for (std::size_t i = 0; i < new_index.size(); ++i) {
      if (t.mono[i] == 0) continue;
      if (new_index[i] >= target->size()) {
        throw std::invalid_argument("variable '" + order_->name(i) +
                                    "' has no place in the target ring");
      }
      m.set(new_index[i], t.mono[i]);
    }
    terms.push_back(Term{m, t.coeff});
  }
  return from_terms(std::move(target), std::move(terms));
}

bool Polynomial::operator==(const Polynomial& other) const {
  if (!(order_ == other.order_ || *order_ == *other.order_)) return false;
  if (terms_.size() != other.terms_.size()) return false;
  for (std::size_t i = 0; i < terms_.size(); ++i) {
    if (!(terms_[i].mono == other.terms_[i].mono) ||
        terms_[i].coeff != other.terms_[i].coeff) {
      return false;
    }
  }
  return true;
}

// ------------------------------------------------------------- free functions

LeadingData leading_data(const Polynomial& p) {
  auto cls = p.class_index();
  if (!cls) throw std::invalid_argument("no class: polynomial is constant");
  auto coeffs = coeffs_in(p, *cls);
  return LeadingData{*cls, coeffs.front().first, std::move(coeffs.front().second)};
}

std::vector<std::pair<std::uint32_t, Polynomial>> coeffs_in(const Polynomial& p,
                                                            std::size_t var) {
  if (var >= p.order().size()) throw std::out_of_range("variable index");
  std::map<std::uint32_t, std::vector<Term>, std::greater<>> buckets;
  for (const auto& t : p.terms()) {
    Monomial m = t.mono;
    auto d = m[var];
    m.set(var, 0);
    buckets[d].push_back(Term{m, t.coeff});
  }
  std::vector<std::pair<std::uint32_t, Polynomial>> out;
  for (auto& [d, terms] : buckets) {
    out.emplace_back(d, Polynomial::from_terms(p.order_ptr(), std::move(terms)));
  }
  if (out.empty()) out.emplace_back(0, Polynomial(p.order_ptr()));
  return out;
}

Polynomial normalize(const Polynomial& p) {
  if (p.is_zero()) throw std::invalid_argument("cannot normalize the zero polynomial");
  Integer den = 1;
  for (const auto& t : p.terms()) den = lcm(den, Integer(t.coeff.get_den()));
  Integer g = 0;
  for (const auto& t : p.terms()) {
    Integer num = t.coeff.get_num() * (den / t.coeff.get_den());
    g = gcd(g, num);
  }
  Rational factor(den, g);
  factor.canonicalize();
  if (p.leading_term().coeff < 0) factor = -factor;
  return p.scaled(factor);
}

Rational evaluate(const Polynomial& p, std::span<const Rational> point) {
  if (point.size() < p.order().size()) {
    for (std::size_t i = point.size(); i < p.order().size(); ++i) {
      if (p.involves(i)) {
        throw std::invalid_argument("missing value for variable '" +
                                    p.order().name(i) + "'");
      }
    }
  }
  Rational sum = 0;
  for (const auto& t : p.terms()) {
    Rational v = t.coeff;
    for (std::size_t i = 0; i < p.order().size(); ++i) {
      for (std::uint32_t e = 0; e < t.mono[i]; ++e) v *= point[i];
    }
    sum += v;
  }
  return sum;
}

Rational evaluate(const Polynomial& p, const std::map<std::string, Rational>& point) {
  std::vector<Rational> values(p.order().size(), Rational(0));
  for (std::size_t i = 0; i < p.order().size(); ++i) {
    auto it = point.find(p.order().name(i));
    if (it != point.end()) {
      values[i] = it->second;
    } else if (p.involves(i)) {
      throw std::invalid_argument("missing value for variable '" +
                                  p.order().name(i) + "'");
    }
  }
  return evaluate(p, std::span<const Rational>(values));
}

Polynomial substitute(const Polynomial& p, std::size_t var, const Rational& v) {
  std::vector<Term> terms;
  terms.reserve(p.term_count());
  for (const auto& t : p.terms()) {
    Monomial m = t.mono;
    Rational c = t.coeff;
    for (std::uint32_t e = 0; e < m[var]; ++e) c *= v;
    m.set(var, 0);
    terms.push_back(Term{m, c});
  }
  return Polynomial::from_terms(p.order_ptr(), std::move(terms));
}

Polynomial exact_divide(const Polynomial& a, const Polynomial& b) {
  if (b.is_zero()) throw std::domain_error("division by zero polynomial");
  if (b.is_constant()) return a.scaled(1 / b.constant_value());
  Polynomial rest = a;
  std::vector<Term> quotient;
  const Term& lead = b.leading_term();
  while (!rest.is_zero()) {
    const Term& t = rest.leading_term();
    if (!lead.mono.divides(t.mono)) throw std::domain_error("inexact polynomial division");
    Term q{lead.mono.cofactor_in(t.mono), t.coeff / lead.coeff};
    rest -= b.times_monomial(q.mono, q.coeff);
    quotient.push_back(std::move(q));
  }
  return Polynomial::from_terms(a.order_ptr(), std::move(quotient));
}

bool canonical_less(const Polynomial& a, const Polynomial& b) {
  return io::render_polynomial(a) < io::render_polynomial(b);
}

std::vector<Polynomial> canonical_set(std::span<const Polynomial> polys) {
  std::vector<std::pair<std::string, Polynomial>> keyed;
  for (const auto& p : polys) {
    if (p.is_zero()) continue;
    auto n = normalize(p);
    keyed.emplace_back(io::render_polynomial(n), std::move(n));
  }
  std::sort(keyed.begin(), keyed.end(),
            [](const auto& x, const auto& y) { return x.first < y.first; });
  keyed.erase(std::unique(keyed.begin(), keyed.end(),
                          [](const auto& x, const auto& y) { return x.first == y.first; }),
              keyed.end());
  std::vector<Polynomial> out;
  out.reserve(keyed.size());
  for (auto& kv : keyed) out.push_back(std::move(kv.second));
  return out;
}

}  // namespace unmix
