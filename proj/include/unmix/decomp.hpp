#ifndef UNMIX_DECOMP_HPP
#define UNMIX_DECOMP_HPP

#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "unmix/charset.hpp"
#include "unmix/groebner.hpp"
#include "unmix/parallel.hpp"
#include "unmix/triset.hpp"

namespace unmix {

enum class SatMethod { improved, classic };

std::string to_string(SatMethod m);

/// Ideal(T) : h^infinity, as the reduced lex basis (x_n > ... > x_1) of
/// the z-free part of T + {z*h - 1} with z greatest. A constant h gives
/// the basis of T itself. `auxiliary_size` receives the size of the basis
/// in the extended ring (0 when none was computed).
GroebnerBasis saturate_by(const TriangularSet& t, const Polynomial& h, const GbLimits& limits = {},
                          std::size_t* auxiliary_size = nullptr);

/// Saturation by the product of all initials.
GroebnerBasis sat_classic(const TriangularSet& t, const GbLimits& limits = {},
                          std::size_t* auxiliary_size = nullptr);

/// Saturation by the product of the U-set; the basis of T when the U-set
/// is empty.
GroebnerBasis sat_improved(const TriangularSet& t, const GbLimits& limits = {},
                           Exec exec = Exec::parallel, std::size_t* auxiliary_size = nullptr);

/// The multiplier each method saturates by: J or U.
Polynomial saturation_multiplier(const TriangularSet& t, SatMethod method,
                                 Exec exec = Exec::parallel);

GroebnerBasis saturate(const TriangularSet& t, SatMethod method, const GbLimits& limits = {},
                       Exec exec = Exec::parallel, std::size_t* auxiliary_size = nullptr);

/// sat_classic(T) is not the unit ideal.
bool is_perfect(const TriangularSet& t, const GbLimits& limits = {});

struct Component {
  GroebnerBasis generators;
  std::size_t dimension;  // n - |T|
  TriangularSet source_chain;
  std::vector<Polynomial> u_set;
  SatMethod method;
};

struct PrunedBranch {
  TriangularSet chain;
  std::string reason;  // "dimension pruning", "not perfect" or "redundant"
};

struct Decomposition {
  VarOrderPtr ring;
  std::vector<CharBranch> branches;
  std::vector<Component> components;  // sorted as in component_less
  std::vector<PrunedBranch> pruned;
  CharserStats charser_stats;
};

struct DecompLimits {
  GbLimits gb;
  CharserLimits charser;
};

/// Output order: dimension descending, generator count ascending, then
/// rendered generators and source chain lexicographically.
bool component_less(const Component& a, const Component& b);

/// contained[i][j] is true iff every generator of bases[i] reduces to zero
/// modulo bases[j], i.e. Ideal(G_i) is inside Ideal(G_j). Entries are
/// independent and computed as one OpenMP loop under Exec::parallel.
std::vector<std::vector<char>> containment_matrix(std::span<const GroebnerBasis> bases,
                                                  Exec exec = Exec::parallel);

/// Indices that survive redundancy removal: G_j is dropped when some G_i
/// has a strictly smaller ideal, or an equal ideal and i < j. The result
/// does not depend on the order in which removals are applied.
std::vector<std::size_t> irredundant(const std::vector<std::vector<char>>& contained);

/// Branches from CharserA, pruning |T| > |P|, saturation, removal of the
/// unit ideal and of redundant components.
Decomposition unm_var_dec(std::span<const Polynomial> p, SatMethod method = SatMethod::improved,
                          const DecompLimits& limits = {}, Exec exec = Exec::parallel);

}  // namespace unmix

#endif  // UNMIX_DECOMP_HPP
