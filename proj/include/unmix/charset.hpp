#ifndef UNMIX_CHARSET_HPP
#define UNMIX_CHARSET_HPP

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "unmix/parallel.hpp"
#include "unmix/polyring.hpp"
#include "unmix/triset.hpp"

namespace unmix {

/// Either an ascending chain or a contradiction (a non-zero constant was
/// derived, so the input has no zeros).
struct CharsetOutcome {
  std::optional<TriangularSet> chain;

  bool contradictory() const { return !chain.has_value(); }
};

/// Rank order used by basic_set: class, then leading degree, then the
/// canonical string order. Constants rank below everything.
bool rank_less(const Polynomial& a, const Polynomial& b);

/// Greedy minimal-rank ascending subset of F. F must be non-empty and
/// free of zeros.
CharsetOutcome basic_set(std::span<const Polynomial> f);

/// Ritt-Wu iteration: add the non-zero remainders of F modulo the basic
/// set until none are left.
CharsetOutcome wu_charset(std::span<const Polynomial> f);

struct CharBranch {
  TriangularSet triset;
  std::vector<Polynomial> u_set;
  std::vector<Polynomial> source;  // canonical set F that produced the chain
};

struct CharserLimits {
  std::size_t max_pops = 10000;  // worklist pops before ResourceLimit
};

struct CharserStats {
  std::size_t pops = 0;
  std::size_t contradictions = 0;
};

/// Characteristic series with U-set splitting. Every popped F yields
/// T = wu_charset(F); a consistent T becomes a branch and F + T + {I} is
/// pushed for each I in the U-set of T. Worklist sets are canonical and
/// visited at most once.
///
/// Exec::serial pops the worklist last-in first-out. Exec::parallel
/// processes the whole frontier as one OpenMP wave. Branches are merged
/// by chain and sorted canonically, so both produce the same list.
std::vector<CharBranch> charser_a(std::span<const Polynomial> p, const CharserLimits& limits = {},
                                  Exec exec = Exec::parallel, CharserStats* stats = nullptr);

}  // namespace unmix

#endif  // UNMIX_CHARSET_HPP
