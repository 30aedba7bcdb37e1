#ifndef UNMIX_ELIMINATION_HPP
#define UNMIX_ELIMINATION_HPP

#include <cstdint>
#include <span>
#include <vector>

#include "unmix/parallel.hpp"
#include "unmix/polyring.hpp"

namespace unmix {

class TriangularSet;

struct PremStep {
  Polynomial remainder;
  std::uint32_t multiplications;  // d: ini(f)^d * g = q * f + remainder
};

/// Pseudo-remainder of g by f in variable `var`. d counts the
/// multiply-subtract steps actually performed, so it is tight.
PremStep prem_step(const Polynomial& g, const Polynomial& f, std::size_t var);

struct PremResult {
  Polynomial remainder;
  /// exponents[i] belongs to chain element i (same indexing as the chain).
  std::vector<std::uint32_t> exponents;
};

/// prem(...prem(p, f_s, y_s)..., f_1, y_1).
PremResult prem_chain(const Polynomial& p, const TriangularSet& chain);

/// Sylvester resultant of f and g in `var`, computed by fraction-free
/// Bareiss elimination. When one operand has degree 0 in var the result
/// is that operand raised to the other's degree.
Polynomial resultant(const Polynomial& f, const Polynomial& g, std::size_t var,
                     Exec exec = Exec::parallel);

/// res(...res(p, f_s, y_s)..., f_1, y_1), skipping every step where the
/// running polynomial does not involve y_i.
Polynomial resultant_chain(const Polynomial& p, const TriangularSet& chain,
                           Exec exec = Exec::parallel);

/// Sylvester matrix of f and g in `var` (deg f + deg g square).
std::vector<std::vector<Polynomial>> sylvester_matrix(const Polynomial& f,
                                                      const Polynomial& g,
                                                      std::size_t var);

/// Fraction-free Gaussian elimination determinant. The row updates of each
/// pivot step are independent and run as an OpenMP loop under
/// Exec::parallel.
Polynomial bareiss_determinant(std::vector<std::vector<Polynomial>> m,
                               Exec exec = Exec::parallel);

}  // namespace unmix

#endif  // UNMIX_ELIMINATION_HPP
