#include "unmix/verify.hpp"

#include <algorithm>

#include "unmix/elimination.hpp"
#include "unmix/parser_io.hpp"

namespace unmix {

bool all_passed(std::span<const CheckResult> checks) {
  return std::all_of(checks.begin(), checks.end(), [](const CheckResult& c) { return c.passed; });
}

bool prem_identity_holds(const Polynomial& p, const TriangularSet& t, const GbLimits& limits) {
  auto r = prem_chain(p, t);
  Polynomial lhs = p;
  for (std::size_t i = 0; i < t.size(); ++i) lhs = lhs * t.initial(i).pow(r.exponents[i]);
  auto g = buchberger(t.elements(), TermOrderSpec::lex(t.order()), limits);
  return ideal_member(lhs - r.remainder, g);
}

std::optional<std::uint32_t> saturation_exponent(const Polynomial& g, const Polynomial& h,
                                                 const GroebnerBasis& ideal_t,
                                                 std::uint32_t max_m) {
  Polynomial current = normal_form(g, ideal_t);
  for (std::uint32_t m = 0; m <= max_m; ++m) {
    if (current.is_zero()) return m;
    current = normal_form(current * h, ideal_t);
  }
  return std::nullopt;
}

CheckResult check_saturation(const TriangularSet& t, const Polynomial& h, const GroebnerBasis& sat,
                             std::uint32_t max_m, const GbLimits& limits) {
  CheckResult out{"saturation witnesses", true, false, {}};
  auto ideal_t = buchberger(t.elements(), TermOrderSpec::lex(t.order()), limits);
  for (const auto& g : sat.generators()) {
    if (!saturation_exponent(g, h, ideal_t, max_m)) {
      out.passed = false;
      out.detail = "no exponent <= " + std::to_string(max_m) + " for " + io::render_polynomial(g);
      return out;
    }
  }
  if (!all_members(t.elements(), sat, Exec::serial)) {
    out.passed = false;
    out.detail = "chain not contained in its saturation";
  }
  return out;
}

bool zero_set_equal(const GroebnerBasis& a, const GroebnerBasis& b, const GbLimits& limits) {
  for (const auto& g : a.generators()) {
    if (!radical_member(g, b.generators(), limits)) return false;
  }
  for (const auto& g : b.generators()) {
    if (!radical_member(g, a.generators(), limits)) return false;
  }
  return true;
}

std::optional<bool> zero_set_covered(std::span<const Polynomial> a,
                                     std::span<const GroebnerBasis> cover,
                                     std::size_t max_products, const GbLimits& limits) {
  std::size_t count = 1;
  for (const auto& g : cover) {
    count *= g.size();
    if (count > max_products) return std::nullopt;
  }
  const auto& ring = a.front().order_ptr();
  std::vector<std::size_t> pick(cover.size(), 0);
  for (;;) {
    Polynomial prod = Polynomial::constant(ring, Rational(1));
    for (std::size_t k = 0; k < cover.size(); ++k) prod = prod * cover[k].generators()[pick[k]];
    if (!radical_member(prod, a, limits)) return false;
    std::size_t k = 0;
    while (k < cover.size() && ++pick[k] == cover[k].size()) pick[k++] = 0;
    if (k == cover.size()) return true;
  }
}

CheckResult check_soundness(std::span<const Polynomial> p, std::span<const Component> components,
                            const GbLimits& limits) {
  CheckResult out{"decomposition soundness", true, false, {}};
  for (std::size_t i = 0; i < components.size(); ++i) {
    for (const auto& f : p) {
      if (!radical_member(f, components[i].generators.generators(), limits)) {
        out.passed = false;
        out.detail = io::render_polynomial(f) + " is not in the radical of component " +
                     std::to_string(i + 1);
        return out;
      }
    }
  }
  return out;
}

CheckResult check_completeness(std::span<const Polynomial> p,
                               std::span<const Component> components,
                               std::size_t max_products, const GbLimits& limits) {
  CheckResult out{"decomposition completeness", true, false, {}};
  std::vector<GroebnerBasis> cover;
  for (const auto& c : components) cover.push_back(c.generators);
  auto covered = zero_set_covered(p, cover, max_products, limits);
  if (!covered) {
    out.skipped = true;
    out.detail = "more than " + std::to_string(max_products) + " generator products";
  } else if (!*covered) {
    out.passed = false;
    out.detail = "some zero of the input lies outside every component";
  }
  return out;
}

std::vector<CheckResult> verify_decomposition(std::span<const Polynomial> p,
                                              const Decomposition& d, const GbLimits& limits) {
  std::vector<CheckResult> out;
  for (std::size_t i = 0; i < d.components.size(); ++i) {
    const auto& c = d.components[i];
    auto h = saturation_multiplier(c.source_chain, c.method, Exec::serial);
    auto check = check_saturation(c.source_chain, h, c.generators, 20, limits);
    check.name += " (component " + std::to_string(i + 1) + ")";
    out.push_back(std::move(check));
  }
  out.push_back(check_soundness(p, d.components, limits));
  out.push_back(check_completeness(p, d.components, 200, limits));
  return out;
}

CheckResult check_same_variety(std::span<const Component> a, std::span<const Component> b,
                               std::size_t max_products, const GbLimits& limits) {
  CheckResult out{"same variety", true, false, {}};
  auto covers = [&](std::span<const Component> inner,
                    std::span<const Component> outer) -> std::optional<bool> {
    std::vector<GroebnerBasis> cover;
    for (const auto& c : outer) cover.push_back(c.generators);
    for (const auto& c : inner) {
      auto r = zero_set_covered(c.generators.generators(), cover, max_products, limits);
      if (!r || !*r) return r;
    }
    return true;
  };
  if (a.empty() || b.empty()) {
    out.passed = a.empty() && b.empty();
    return out;
  }
  auto ab = covers(a, b);
  auto ba = covers(b, a);
  if ((ab && !*ab) || (ba && !*ba)) {
    out.passed = false;
    out.detail = "component sets have different zero sets";
  } else if (!ab || !ba) {
    out.skipped = true;
    out.detail = "more than " + std::to_string(max_products) + " generator products";
  }
  return out;
}

}  // namespace unmix
