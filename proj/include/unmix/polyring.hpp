#ifndef UNMIX_POLYRING_HPP
#define UNMIX_POLYRING_HPP

#include <gmpxx.h>

#include <array>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace unmix {

using Rational = mpq_class;
using Integer = mpz_class;

/// Upper bound on the number of variables of any ring, auxiliary
/// saturation variables included.
inline constexpr std::size_t kMaxVars = 16;

/// Ascending variable ordering: position 0 is the smallest variable.
class VarOrder {
 public:
  explicit VarOrder(std::vector<std::string> names);

  std::size_t size() const { return names_.size(); }
  const std::string& name(std::size_t i) const { return names_.at(i); }
  const std::vector<std::string>& names() const { return names_; }
  std::optional<std::size_t> index_of(std::string_view name) const;

  /// Same ordering with `name` appended as the new greatest variable.
  std::shared_ptr<const VarOrder> with_greatest(const std::string& name) const;
  /// A name not used by this ordering, derived from `base`.
  std::string fresh_name(const std::string& base = "z") const;

  bool operator==(const VarOrder& other) const = default;

 private:
  std::vector<std::string> names_;
};

using VarOrderPtr = std::shared_ptr<const VarOrder>;

VarOrderPtr make_order(std::vector<std::string> names);

/// Dense exponent vector. Entries past the ring size stay zero.
class Monomial {
 public:
  Monomial() = default;

  static Monomial variable(std::size_t index, std::uint32_t exponent = 1);

  std::uint32_t operator[](std::size_t i) const { return exp_[i]; }
  void set(std::size_t i, std::uint32_t e) { exp_[i] = e; }

  std::uint64_t total_degree() const;
  bool is_one() const;
  bool divides(const Monomial& m) const;
  /// Precondition: divides(m).
  Monomial cofactor_in(const Monomial& m) const;
  bool coprime(const Monomial& m) const;

  friend Monomial operator*(const Monomial& a, const Monomial& b);
  friend Monomial lcm(const Monomial& a, const Monomial& b);
  friend bool operator==(const Monomial&, const Monomial&) = default;

 private:
  std::array<std::uint32_t, kMaxVars> exp_{};
};

/// Lexicographic comparison with the highest-index variable most
/// significant (x_n > ... > x_1).
inline std::strong_ordering lex_compare(const Monomial& a, const Monomial& b) {
  for (std::size_t i = kMaxVars; i-- > 0;) {
    if (a[i] != b[i]) return a[i] <=> b[i];
  }
  return std::strong_ordering::equal;
}

struct Term {
  Monomial mono;
  Rational coeff;
};

/// Sparse multivariate polynomial over Q. Terms are kept in strictly
/// descending lex order and never hold a zero coefficient.
class Polynomial {
 public:
  explicit Polynomial(VarOrderPtr order);

  static Polynomial constant(VarOrderPtr order, const Rational& c);
  static Polynomial variable(VarOrderPtr order, std::size_t index,
                             std::uint32_t exponent = 1);
  /// Sorts and combines like terms; zero coefficients are dropped.
  static Polynomial from_terms(VarOrderPtr order, std::vector<Term> terms);

  const VarOrder& order() const { return *order_; }
  const VarOrderPtr& order_ptr() const { return order_; }
  std::span<const Term> terms() const { return terms_; }
  std::size_t term_count() const { return terms_.size(); }

  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  /// Value of a constant polynomial (0 for the zero polynomial).
  Rational constant_value() const;

  std::uint32_t degree(std::size_t var) const;
  std::uint64_t total_degree() const;
  /// Largest variable index with positive degree, or nullopt for constants.
  std::optional<std::size_t> class_index() const;
  /// True iff the polynomial involves variable `var`.
  bool involves(std::size_t var) const { return degree(var) > 0; }

  /// Greatest term under the native lex order. Precondition: non-zero.
  const Term& leading_term() const { return terms_.front(); }

  Polynomial operator-() const;
  Polynomial& operator+=(const Polynomial& other);
  Polynomial& operator-=(const Polynomial& other);
  Polynomial& operator*=(const Polynomial& other);
  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);

  Polynomial scaled(const Rational& c) const;
  Polynomial times_monomial(const Monomial& m, const Rational& c) const;
  Polynomial pow(std::uint32_t k) const;

  /// Same terms viewed in another ring that shares this ring's leading
  /// variables (e.g. the ring extended by an auxiliary variable).
  Polynomial lifted_to(VarOrderPtr wider) const;
  /// Exponent i moves to position new_index[i] of `target`.
  Polynomial remapped(VarOrderPtr target,
                      std::span<const std::size_t> new_index) const;

  bool operator==(const Polynomial& other) const;

 private:
  void require_same_ring(const Polynomial& other) const;

  VarOrderPtr order_;
  std::vector<Term> terms_;
};

struct LeadingData {
  std::size_t cls;     // class index (0-based position of lv)
  std::uint32_t ldeg;  // degree in the leading variable
  Polynomial ini;      // initial: coefficient of lv^ldeg
};

/// Class, leading degree and initial. Throws std::invalid_argument
/// ("no class") for constants.
LeadingData leading_data(const Polynomial& p);

/// Non-zero coefficients of p as a univariate polynomial in `var`,
/// highest degree first.
std::vector<std::pair<std::uint32_t, Polynomial>> coeffs_in(const Polynomial& p,
                                                            std::size_t var);

/// Primitive integer representative: denominators cleared, integer
/// content removed, greatest lex term positive. Throws on zero.
Polynomial normalize(const Polynomial& p);

Rational evaluate(const Polynomial& p, std::span<const Rational> point);
/// Throws std::invalid_argument when a variable of p has no value.
Rational evaluate(const Polynomial& p,
                  const std::map<std::string, Rational>& point);

/// Replaces variable `var` by the value `v`.
Polynomial substitute(const Polynomial& p, std::size_t var, const Rational& v);

/// Exact quotient a / b. Throws std::domain_error when b does not divide a.
Polynomial exact_divide(const Polynomial& a, const Polynomial& b);

/// Strict-weak "canonical" order used for sets of polynomials: the
/// rendered string order.
bool canonical_less(const Polynomial& a, const Polynomial& b);

/// Normalizes each non-zero element, drops zeros and duplicates, and
/// sorts canonically.
std::vector<Polynomial> canonical_set(std::span<const Polynomial> polys);

}  // namespace unmix

#endif  // UNMIX_POLYRING_HPP
