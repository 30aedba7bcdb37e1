#include <doctest.h>

#include <algorithm>
#include <numeric>

#include "oracles.hpp"
#include "unmix/decomp.hpp"
#include "unmix/verify.hpp"

using namespace unmix;
using oracle::poly;
using oracle::polys;

namespace {
TriangularSet load_chain(const std::string& name) {
  return TriangularSet(oracle::load_fixture(name).polys);
}

GroebnerBasis basis_of(const std::string& name) {
  auto sys = oracle::load_fixture(name);
  return buchberger(sys.polys, TermOrderSpec::lex(*sys.order));
}

// Sequential removal in a given order: j goes when a remaining i != j has
// Ideal(G_i) inside Ideal(G_j).
std::vector<std::size_t> remove_in_order(const std::vector<std::vector<char>>& contained,
                                         const std::vector<std::size_t>& order) {
  std::vector<char> alive(contained.size(), 1);
  for (auto j : order) {
    for (std::size_t i = 0; i < contained.size(); ++i) {
      if (i != j && alive[i] && contained[i][j]) {
        alive[j] = 0;
        break;
      }
    }
  }
  std::vector<std::size_t> out;
  for (std::size_t j = 0; j < alive.size(); ++j)
    if (alive[j]) out.push_back(j);
  return out;
}

// The surviving ideals as a set of rendered reduced bases.
std::vector<std::vector<std::string>> ideals(const std::vector<GroebnerBasis>& bases,
                                             const std::vector<std::size_t>& keep) {
  std::vector<std::vector<std::string>> out;
  for (auto k : keep) out.push_back(io::render_all(bases[k].generators()));
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}
}  // namespace

TEST_CASE("saturation by a single polynomial") {
  auto r = make_order({"x1", "x2"});
  TriangularSet lin(polys(r, {"x1"}));
  auto g = saturate_by(lin, poly(r, "1"));
  CHECK(g.generators() == polys(r, {"x1"}));

  TriangularSet prod(polys(r, {"x1*x2"}));
  auto s = saturate_by(prod, poly(r, "x1"));
  CHECK(s.generators() == polys(r, {"x2"}));

  CHECK(sat_classic(lin).generators() == polys(r, {"x1"}));
  CHECK(sat_improved(lin).generators() == polys(r, {"x1"}));
  CHECK(is_perfect(lin));
  CHECK_FALSE(is_perfect(TriangularSet(polys(r, {"x1", "x1*x2+1"}))));
}

TEST_CASE("saturations of the 4.3 chains") {
  auto t1 = load_chain("example_4_3_t1.psys");
  auto classic = sat_classic(t1);
  CHECK(ideal_equal(classic, basis_of("example_4_3_sat1.psys")));
  auto by_x3 = saturate_by(t1, poly(t1.order_ptr(), "x3"));
  CHECK(ideal_equal(by_x3, classic));
  CHECK(ideal_equal(sat_improved(t1), classic));

  auto t4 = load_chain("example_4_3_t4.psys");
  auto sat4 = sat_classic(t4);
  CHECK(ideal_equal(sat4, buchberger(t4.elements(), TermOrderSpec::lex(t4.order()))));
  CHECK(is_perfect(t4));
}

TEST_CASE("saturation multipliers") {
  auto t = load_chain("example_2_2_5.psys");
  auto r = t.order_ptr();
  CHECK(saturation_multiplier(t, SatMethod::classic) == poly(r, "x1*x2^2"));
  CHECK(saturation_multiplier(t, SatMethod::improved) == poly(r, "x2"));
  CHECK(to_string(SatMethod::classic) == "classic");
  CHECK(to_string(SatMethod::improved) == "improved");
}

TEST_CASE("decomposition of a product") {
  auto r = make_order({"x1", "x2"});
  auto p = polys(r, {"x1*x2"});
  auto d = unm_var_dec(p);
  REQUIRE(d.components.size() == 2);
  std::vector<std::string> gens;
  for (const auto& c : d.components) {
    CHECK(c.dimension == 1);
    REQUIRE(c.generators.size() == 1);
    gens.push_back(io::render_polynomial(c.generators.generators()[0]));
  }
  std::sort(gens.begin(), gens.end());
  CHECK(gens == std::vector<std::string>{"x1", "x2"});
  CHECK(all_passed(verify_decomposition(p, d)));
}

TEST_CASE("decomposition of the 4.3 system") {
  auto sys = oracle::load_fixture("example_4_3.psys");
  auto d = unm_var_dec(sys.polys);
  REQUIRE(d.components.size() == 1);
  CHECK(d.components[0].dimension == 2);
  CHECK(ideal_equal(d.components[0].generators, basis_of("example_4_3_sat1.psys")));
  for (const auto& check : verify_decomposition(sys.polys, d)) {
    CAPTURE(check.name);
    CAPTURE(check.detail);
    CHECK(check.passed);
  }
  auto classic = unm_var_dec(sys.polys, SatMethod::classic);
  auto same = check_same_variety(d.components, classic.components);
  CHECK(same.passed);
  CHECK_FALSE(same.skipped);
}

TEST_CASE("component order") {
  auto sys = oracle::load_fixture("example_4_3.psys");
  auto d = unm_var_dec(sys.polys);
  CHECK(std::is_sorted(d.components.begin(), d.components.end(), component_less));
  for (const auto& b : d.pruned) {
    bool known = b.reason == "dimension pruning" || b.reason == "not perfect" || b.reason == "redundant";
    CHECK(known);
  }
}

TEST_CASE("redundancy removal is confluent") {
  auto r = make_order({"x1", "x2", "x3"});
  std::vector<std::vector<std::string>> corpus{
      {"x1"}, {"x1", "x2"}, {"x2"}, {"2*x2"}, {"x1*x2"}, {"x3", "x1"}, {"x1^2"}};
  std::vector<GroebnerBasis> all;
  for (const auto& g : corpus) all.push_back(buchberger(polys(r, g), TermOrderSpec::lex(*r)));

  // every subset of up to four bases, every removal order
  const std::size_t n = all.size();
  int subsets = 0;
  for (unsigned mask = 1; mask < (1u << n); ++mask) {
    if (__builtin_popcount(mask) > 4) continue;
    std::vector<GroebnerBasis> bases;
    for (std::size_t k = 0; k < n; ++k)
      if (mask & (1u << k)) bases.push_back(all[k]);
    auto contained = containment_matrix(bases, Exec::serial);
    CHECK(contained == containment_matrix(bases, Exec::parallel));
    auto expect = ideals(bases, irredundant(contained));
    std::vector<std::size_t> order(bases.size());
    std::iota(order.begin(), order.end(), 0);
    do {
      CHECK(ideals(bases, remove_in_order(contained, order)) == expect);
    } while (std::next_permutation(order.begin(), order.end()));
    ++subsets;
  }
  CHECK(subsets > 50);
}

TEST_CASE("property: saturation witnesses and method agreement") {
  oracle::Generator gen(1717);
  for (int i = 0; i < 40; ++i) {
    auto r = gen.ring(3);
    oracle::RandomSpec spec{3, 2, 3, 3};
    auto t = gen.chain(r, 3, spec);
    auto classic = sat_classic(t);
    auto improved = sat_improved(t, {}, Exec::serial);
    auto j = saturation_multiplier(t, SatMethod::classic);
    auto u = saturation_multiplier(t, SatMethod::improved);
    CHECK(check_saturation(t, j, classic).passed);
    CHECK(check_saturation(t, u, improved).passed);
    CHECK(zero_set_equal(classic, improved));
  }
}

TEST_CASE("property: decompositions of random systems") {
  oracle::Generator gen(2718);
  int complete_checked = 0;
  for (int i = 0; i < 30; ++i) {
    std::size_t n = static_cast<std::size_t>(gen.uniform(2, 3));
    auto r = gen.ring(n);
    oracle::RandomSpec spec{n, 2, 3, 3};
    auto p = gen.system(r, static_cast<std::size_t>(gen.uniform(1, 3)), spec);
    auto serial = unm_var_dec(p, SatMethod::improved, {}, Exec::serial);
    auto parallel = unm_var_dec(p, SatMethod::improved, {}, Exec::parallel);
    REQUIRE(serial.components.size() == parallel.components.size());
    for (std::size_t k = 0; k < serial.components.size(); ++k)
      CHECK(serial.components[k].generators.generators() ==
            parallel.components[k].generators.generators());
    for (const auto& c : serial.components) {
      CHECK(c.dimension == n - c.source_chain.size());
      CHECK_FALSE(c.generators.is_unit());
    }
    for (const auto& check : verify_decomposition(p, serial)) {
      CAPTURE(check.name);
      CAPTURE(check.detail);
      CHECK(check.passed);
      if (check.name == "decomposition completeness" && !check.skipped) ++complete_checked;
    }
  }
  CHECK(complete_checked > 20);
}
