#ifndef UNMIX_GROEBNER_HPP
#define UNMIX_GROEBNER_HPP

#include <cstddef>
#include <memory>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "unmix/parallel.hpp"
#include "unmix/polyring.hpp"

namespace unmix {

/// Lexicographic term order given as the variable sequence from greatest
/// to least, e.g. {"z", "x5", ..., "x1"}.
struct TermOrderSpec {
  std::vector<std::string> sequence;

  /// x_n > ... > x_1 for the ring's ascending ordering.
  static TermOrderSpec lex(const VarOrder& ring);
  /// Parses "z>x5>x4>...".
  static TermOrderSpec parse(std::string_view text);
  std::string to_string() const;

  bool operator==(const TermOrderSpec&) const = default;
};

struct GbLimits {
  std::size_t max_pairs = 200000;       // pending S-pair queue length
  std::size_t max_coeff_bits = 200000;  // any intermediate coefficient
};

/// Reduced Groebner basis. Generators are primitive integer polynomials
/// with positive leading coefficient (under the basis order), sorted by
/// descending leading monomial. The unit ideal is represented by {1}.
class GroebnerBasis {
 public:
  struct Impl;

  const std::vector<Polynomial>& generators() const;
  const TermOrderSpec& order() const;
  const VarOrderPtr& ring() const;
  std::size_t size() const { return generators().size(); }
  bool is_unit() const;
  bool is_zero_ideal() const { return generators().empty(); }

  /// Leading term of p under this basis' order.
  Term leading_term_of(const Polynomial& p) const;

  const Impl& impl() const { return *impl_; }

 private:
  friend GroebnerBasis make_basis(std::shared_ptr<const Impl>);
  explicit GroebnerBasis(std::shared_ptr<const Impl> impl) : impl_(std::move(impl)) {}
  std::shared_ptr<const Impl> impl_;
};

GroebnerBasis buchberger(std::span<const Polynomial> generators, const TermOrderSpec& order,
                         const GbLimits& limits = {});

/// Wraps generators that already form a reduced basis under `order`
/// (e.g. the output of eliminate) without recomputation.
GroebnerBasis adopt_reduced_basis(std::span<const Polynomial> generators,
                                  const TermOrderSpec& order);

/// Complete reduction: no term of the result is divisible by a leading
/// term of G and p - result lies in Ideal(G).
Polynomial normal_form(const Polynomial& p, const GroebnerBasis& g);

/// Batched normal forms, one OpenMP task per polynomial under
/// Exec::parallel.
std::vector<Polynomial> normal_forms(std::span<const Polynomial> polys,
                                     const GroebnerBasis& g, Exec exec = Exec::parallel);

bool ideal_member(const Polynomial& p, const GroebnerBasis& g);
/// rem(F, G) = {0}: every element of F reduces to zero modulo G.
bool all_members(std::span<const Polynomial> polys, const GroebnerBasis& g,
                 Exec exec = Exec::parallel);
bool ideal_equal(const GroebnerBasis& a, const GroebnerBasis& b, Exec exec = Exec::parallel);

/// p lies in the radical of Ideal(F): the basis of F + {z*p - 1} with a
/// fresh greatest variable z is {1}.
bool radical_member(const Polynomial& p, std::span<const Polynomial> f,
                    const GbLimits& limits = {});

/// Generators of G free of every dropped variable. Requires every dropped
/// variable to be greater than every kept one in G's order.
std::vector<Polynomial> eliminate(const GroebnerBasis& g, std::span<const std::string> drop);

/// S-polynomial of f and g under `order` (over the ring of f).
Polynomial s_polynomial(const Polynomial& f, const Polynomial& g, const TermOrderSpec& order);

}  // namespace unmix

#endif  // UNMIX_GROEBNER_HPP
