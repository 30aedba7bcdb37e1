#include "unmix/decomp.hpp"

#include <algorithm>
#include <numeric>
#include <optional>
#include <stdexcept>

#include "unmix/parser_io.hpp"

namespace unmix {

std::string to_string(SatMethod m) { return m == SatMethod::classic ? "classic" : "improved"; }

GroebnerBasis saturate_by(const TriangularSet& t, const Polynomial& h, const GbLimits& limits,
                          std::size_t* auxiliary_size) {
  if (auxiliary_size) *auxiliary_size = 0;
  if (h.is_zero()) throw std::invalid_argument("saturation by zero");
  const auto& ring = t.order_ptr();
  if (!(h.order() == *ring)) throw std::invalid_argument("variable order mismatch");
  const auto lex = TermOrderSpec::lex(*ring);
  if (h.is_constant()) return buchberger(t.elements(), lex, limits);

  const std::string z = ring->fresh_name("z");
  auto wide = ring->with_greatest(z);
  std::vector<Polynomial> gens;
  for (const auto& f : t) gens.push_back(f.lifted_to(wide));
  gens.push_back(Polynomial::variable(wide, ring->size()) * h.lifted_to(wide) -
                 Polynomial::constant(wide, Rational(1)));
  GroebnerBasis g = buchberger(gens, TermOrderSpec::lex(*wide), limits);
  if (auxiliary_size) *auxiliary_size = g.size();

  std::vector<std::string> drop{z};
  std::vector<std::size_t> index(wide->size());
  std::iota(index.begin(), index.end(), std::size_t{0});
  std::vector<Polynomial> kept;
  for (const auto& p : eliminate(g, drop)) kept.push_back(p.remapped(ring, index));
  // T lies in the saturation, so the z-free part is never empty.
  if (kept.empty()) throw std::logic_error("saturation lost the chain");
  return adopt_reduced_basis(kept, lex);
}

Polynomial saturation_multiplier(const TriangularSet& t, SatMethod method, Exec exec) {
  if (method == SatMethod::classic) {
    Polynomial j = Polynomial::constant(t.order_ptr(), Rational(1));
    for (const auto& ini : t.initials()) j = j * ini;
    return j;
  }
  return products(t, exec).u_set;
}

GroebnerBasis sat_classic(const TriangularSet& t, const GbLimits& limits,
                          std::size_t* auxiliary_size) {
  return saturate_by(t, saturation_multiplier(t, SatMethod::classic), limits, auxiliary_size);
}

GroebnerBasis sat_improved(const TriangularSet& t, const GbLimits& limits, Exec exec,
                           std::size_t* auxiliary_size) {
  return saturate_by(t, saturation_multiplier(t, SatMethod::improved, exec), limits,
                     auxiliary_size);
}

GroebnerBasis saturate(const TriangularSet& t, SatMethod method, const GbLimits& limits,
                       Exec exec, std::size_t* auxiliary_size) {
  return method == SatMethod::classic ? sat_classic(t, limits, auxiliary_size)
                                      : sat_improved(t, limits, exec, auxiliary_size);
}

bool is_perfect(const TriangularSet& t, const GbLimits& limits) {
  return !sat_classic(t, limits).is_unit();
}

namespace {

struct SortKey {
  std::size_t dimension;
  std::vector<std::string> generators;
  std::vector<std::string> chain;
};

SortKey key_of(const Component& c) {
  return SortKey{c.dimension, io::render_all(c.generators.generators()),
                 io::render_all(c.source_chain.elements())};
}

bool key_less(const SortKey& a, const SortKey& b) {
  if (a.dimension != b.dimension) return a.dimension > b.dimension;
  if (a.generators.size() != b.generators.size()) return a.generators.size() < b.generators.size();
  if (a.generators != b.generators) return a.generators < b.generators;
  return a.chain < b.chain;
}

}  // namespace

bool component_less(const Component& a, const Component& b) {
  return key_less(key_of(a), key_of(b));
}

std::vector<std::vector<char>> containment_matrix(std::span<const GroebnerBasis> bases,
                                                  Exec exec) {
  const std::size_t n = bases.size();
  std::vector<std::vector<char>> out(n, std::vector<char>(n, 1));
  parallel_for(n * n, exec, [&](std::size_t k) {
    const std::size_t i = k / n, j = k % n;
    if (i == j) return;
    out[i][j] = all_members(bases[i].generators(), bases[j], Exec::serial) ? 1 : 0;
  });
  return out;
}

std::vector<std::size_t> irredundant(const std::vector<std::vector<char>>& contained) {
  const std::size_t n = contained.size();
  std::vector<std::size_t> keep;
  for (std::size_t j = 0; j < n; ++j) {
    bool redundant = false;
    for (std::size_t i = 0; i < n && !redundant; ++i) {
      if (i == j || !contained[i][j]) continue;
      const bool equal = contained[j][i];
      redundant = !equal || i < j;
    }
    if (!redundant) keep.push_back(j);
  }
  return keep;
}

Decomposition unm_var_dec(std::span<const Polynomial> p, SatMethod method,
                          const DecompLimits& limits, Exec exec) {
  const auto input = canonical_set(p);
  if (input.empty()) throw std::invalid_argument("decomposition of an empty system");
  Decomposition out;
  out.ring = input.front().order_ptr();
  out.branches = charser_a(input, limits.charser, exec, &out.charser_stats);

  std::vector<const CharBranch*> survivors;
  for (const auto& b : out.branches) {
    if (b.triset.size() > input.size()) {
      out.pruned.push_back(PrunedBranch{b.triset, "dimension pruning"});
    } else {
      survivors.push_back(&b);
    }
  }

  std::vector<std::optional<GroebnerBasis>> sats(survivors.size());
  parallel_for(survivors.size(), exec, [&](std::size_t i) {
    sats[i] = saturate(survivors[i]->triset, method, limits.gb, Exec::serial);
  });

  std::vector<Component> candidates;
  for (std::size_t i = 0; i < survivors.size(); ++i) {
    const auto& b = *survivors[i];
    if (sats[i]->is_unit()) {
      out.pruned.push_back(PrunedBranch{b.triset, "not perfect"});
      continue;
    }
    candidates.push_back(Component{*sats[i], out.ring->size() - b.triset.size(), b.triset,
                                   b.u_set, method});
  }
  std::sort(candidates.begin(), candidates.end(), component_less);

  std::vector<GroebnerBasis> bases;
  for (const auto& c : candidates) bases.push_back(c.generators);
  const auto keep = irredundant(containment_matrix(bases, exec));
  std::size_t next = 0;
  for (std::size_t j = 0; j < candidates.size(); ++j) {
    if (next < keep.size() && keep[next] == j) {
      out.components.push_back(std::move(candidates[j]));
      ++next;
    } else {
      out.pruned.push_back(PrunedBranch{candidates[j].source_chain, "redundant"});
    }
  }
  return out;
}

}  // namespace unmix
