#ifndef UNMIX_VERIFY_HPP
#define UNMIX_VERIFY_HPP

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "unmix/decomp.hpp"
#include "unmix/groebner.hpp"
#include "unmix/triset.hpp"

namespace unmix {

/// Outcome of one property check. `skipped` checks are neither passed nor
/// failed (e.g. too many generator products).
struct CheckResult {
  std::string name;
  bool passed = true;
  bool skipped = false;
  std::string detail;
};

bool all_passed(std::span<const CheckResult> checks);

/// prod ini(f_i)^d_i * p - prem(p, T) lies in Ideal(T).
bool prem_identity_holds(const Polynomial& p, const TriangularSet& t, const GbLimits& limits = {});

/// Least m <= max_m with g * h^m in Ideal(T) (given as a basis), if any.
std::optional<std::uint32_t> saturation_exponent(const Polynomial& g, const Polynomial& h,
                                                 const GroebnerBasis& ideal_t,
                                                 std::uint32_t max_m = 20);

/// Every generator of `sat` has a saturation exponent <= max_m and every
/// element of T reduces to zero modulo `sat`.
CheckResult check_saturation(const TriangularSet& t, const Polynomial& h, const GroebnerBasis& sat,
                             std::uint32_t max_m = 20, const GbLimits& limits = {});

/// Zero(a) = Zero(b): every generator of each is a radical member of the
/// other.
bool zero_set_equal(const GroebnerBasis& a, const GroebnerBasis& b, const GbLimits& limits = {});

/// Zero(a) lies inside the union of Zero(cover_i): every product of one
/// generator per cover basis is a radical member of a. nullopt when there
/// are more than max_products products.
std::optional<bool> zero_set_covered(std::span<const Polynomial> a,
                                     std::span<const GroebnerBasis> cover,
                                     std::size_t max_products = 200, const GbLimits& limits = {});

/// Each input polynomial is a radical member of every component.
CheckResult check_soundness(std::span<const Polynomial> p, std::span<const Component> components,
                            const GbLimits& limits = {});

/// Zero(P) is covered by the components (skipped past max_products).
CheckResult check_completeness(std::span<const Polynomial> p,
                               std::span<const Component> components,
                               std::size_t max_products = 200, const GbLimits& limits = {});

/// Saturation witnesses of every component plus soundness and
/// completeness of the whole decomposition.
std::vector<CheckResult> verify_decomposition(std::span<const Polynomial> p,
                                              const Decomposition& d,
                                              const GbLimits& limits = {});

/// The two component lists describe the same zero set.
CheckResult check_same_variety(std::span<const Component> a, std::span<const Component> b,
                               std::size_t max_products = 200, const GbLimits& limits = {});

}  // namespace unmix

#endif  // UNMIX_VERIFY_HPP
