#include "unmix/elimination.hpp"

#include <stdexcept>

#include "unmix/triset.hpp"

namespace unmix {

PremStep prem_step(const Polynomial& g, const Polynomial& f, std::size_t var) {
  if (f.is_zero()) throw std::invalid_argument("pseudo-division by zero");
  const auto m = f.degree(var);
  if (m == 0) throw std::invalid_argument("divisor is constant in the main variable");

  const auto f_coeffs = coeffs_in(f, var);
  const Polynomial& init = f_coeffs.front().second;

  PremStep out{g, 0};
  Polynomial& r = out.remainder;
  for (auto d = r.degree(var); !r.is_zero() && d >= m; d = r.degree(var)) {
    Polynomial lead = coeffs_in(r, var).front().second;
    Polynomial shift = Polynomial::variable(f.order_ptr(), var, d - m);
    r = init * r - lead * shift * f;
    ++out.multiplications;
  }
  return out;
}

PremResult prem_chain(const Polynomial& p, const TriangularSet& chain) {
  PremResult out{p, std::vector<std::uint32_t>(chain.size(), 0)};
  for (std::size_t i = chain.size(); i-- > 0;) {
    const auto& f = chain[i];
    auto step = prem_step(out.remainder, f, chain.leading_var(i));
    out.remainder = std::move(step.remainder);
    out.exponents[i] = step.multiplications;
  }
  return out;
}

std::vector<std::vector<Polynomial>> sylvester_matrix(const Polynomial& f,
                                                      const Polynomial& g,
                                                      std::size_t var) {
  const auto m = f.degree(var);
  const auto n = g.degree(var);
  const std::size_t size = m + n;
  Polynomial zero(f.order_ptr());
  std::vector<std::vector<Polynomial>> rows(size, std::vector<Polynomial>(size, zero));

  auto dense = [&](const Polynomial& p, std::uint32_t deg) {
    // Coefficient of var^(deg - k) at index k.
    std::vector<Polynomial> c(deg + 1, zero);
    for (auto& [d, coeff] : coeffs_in(p, var)) c[deg - d] = coeff;
    return c;
  };
  const auto fc = dense(f, m);
  const auto gc = dense(g, n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t k = 0; k <= m; ++k) rows[i][i + k] = fc[k];
  }
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t k = 0; k <= n; ++k) rows[n + i][i + k] = gc[k];
  }
  return rows;
}

Polynomial bareiss_determinant(std::vector<std::vector<Polynomial>> m, Exec exec) {
  const std::size_t n = m.size();
  if (n == 0) throw std::invalid_argument("determinant of an empty matrix");
  const auto order = m[0][0].order_ptr();
  bool negate = false;
  Polynomial prev = Polynomial::constant(order, Rational(1));

  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (m[k][k].is_zero()) {
      std::size_t r = k + 1;
      while (r < n && m[r][k].is_zero()) ++r;
      if (r == n) return Polynomial(order);
      std::swap(m[k], m[r]);
      negate = !negate;
    }
    const auto& pivot_row = m[k];
    parallel_for(n - k - 1, exec, [&](std::size_t offset) {
      auto& row = m[k + 1 + offset];
      for (std::size_t j = k + 1; j < n; ++j) {
        Polynomial num = pivot_row[k] * row[j] - row[k] * pivot_row[j];
        row[j] = exact_divide(num, prev);
      }
      row[k] = Polynomial(order);
    });
    prev = m[k][k];
  }
  Polynomial det = std::move(m[n - 1][n - 1]);
  return negate ? -det : det;
}

Polynomial resultant(const Polynomial& f, const Polynomial& g, std::size_t var,
                     Exec exec) {
  const auto m = f.degree(var);
  const auto n = g.degree(var);
  if (m == 0 && n == 0) {
    throw std::invalid_argument("resultant: both operands are constant in the variable");
  }
  if (f.is_zero() || g.is_zero()) return Polynomial(f.order_ptr());
  if (m == 0) return f.pow(n);
  if (n == 0) return g.pow(m);
  return bareiss_determinant(sylvester_matrix(f, g, var), exec);
}

Polynomial resultant_chain(const Polynomial& p, const TriangularSet& chain, Exec exec) {
  Polynomial current = p;
  for (std::size_t i = chain.size(); i-- > 0;) {
    const auto y = chain.leading_var(i);
    if (current.degree(y) == 0) continue;
    current = resultant(current, chain[i], y, exec);
  }
  return current;
}

}  // namespace unmix
