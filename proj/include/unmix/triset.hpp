#ifndef UNMIX_TRISET_HPP
#define UNMIX_TRISET_HPP

#include <cstddef>
#include <span>
#include <vector>

#include "unmix/parallel.hpp"
#include "unmix/polyring.hpp"

namespace unmix {

/// Ordered chain [f_1, ..., f_s] of non-constant polynomials with
/// strictly increasing classes. Variables led by no element are the
/// parameters of the chain.
class TriangularSet {
 public:
  /// Throws std::invalid_argument unless the chain is non-empty, every
  /// element is non-constant and classes strictly increase.
  explicit TriangularSet(std::vector<Polynomial> chain);

  static bool is_triangular(std::span<const Polynomial> chain);

  std::size_t size() const { return chain_.size(); }
  const Polynomial& operator[](std::size_t i) const { return chain_[i]; }
  const std::vector<Polynomial>& elements() const { return chain_; }
  auto begin() const { return chain_.begin(); }
  auto end() const { return chain_.end(); }

  const VarOrderPtr& order_ptr() const { return chain_.front().order_ptr(); }
  const VarOrder& order() const { return chain_.front().order(); }

  std::size_t leading_var(std::size_t i) const { return leading_[i]; }
  std::uint32_t leading_degree(std::size_t i) const { return degrees_[i]; }
  const Polynomial& initial(std::size_t i) const { return initials_[i]; }
  const std::vector<Polynomial>& initials() const { return initials_; }

  bool is_led(std::size_t var) const;
  std::vector<std::size_t> parameters() const;

  /// p is reduced w.r.t. the chain: deg(p, y_i) < ldeg(f_i) for all i.
  bool reduces(const Polynomial& p) const;

  bool operator==(const TriangularSet& other) const { return chain_ == other.chain_; }

 private:
  std::vector<Polynomial> chain_;
  std::vector<std::size_t> leading_;
  std::vector<std::uint32_t> degrees_;
  std::vector<Polynomial> initials_;
};

struct TrisetFlags {
  bool triangular = false;
  bool noncontradictory_ascending = false;
  bool regular = false;
  bool normal = false;
};

/// Structural flags of a candidate chain. Only `triangular` is meaningful
/// when the classes do not strictly increase.
TrisetFlags classify_triset(std::span<const Polynomial> chain);

/// Normalized, canonically sorted C_f for every element.
std::vector<std::vector<Polynomial>> coefficient_sets(const TriangularSet& t);

/// R_f = { normalize(res(c, T)) : c in C_f, res(c, T) != 0 } per element.
std::vector<std::vector<Polynomial>> resultant_sets(const TriangularSet& t,
                                                    Exec exec = Exec::parallel);

/// Normalized initials that must be assumed non-zero (the U-set): the
/// initial of f joins when res(ini(f), T) = 0, or when it is non-zero and
/// R_f holds no non-zero constant.
std::vector<Polynomial> u_set(const TriangularSet& t, Exec exec = Exec::parallel);

struct ChainProducts {
  Polynomial initials;  // J, product of all initials
  Polynomial u_set;     // U, product of the U-set (1 when empty)
};
ChainProducts products(const TriangularSet& t, Exec exec = Exec::parallel);

struct TrisetReport {
  TrisetFlags flags;
  std::vector<std::vector<Polynomial>> coefficient_sets;
  std::vector<std::vector<Polynomial>> resultant_sets;
  std::vector<Polynomial> initial_resultants;  // res(ini(f_i), T), raw
  std::vector<Polynomial> u_set;
};

TrisetReport report_triset(const TriangularSet& t, Exec exec = Exec::parallel);

}  // namespace unmix

#endif  // UNMIX_TRISET_HPP
