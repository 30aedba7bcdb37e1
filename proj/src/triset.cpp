#include "unmix/triset.hpp"

#include <algorithm>
#include <stdexcept>

#include "unmix/elimination.hpp"

namespace unmix {

TriangularSet::TriangularSet(std::vector<Polynomial> chain) : chain_(std::move(chain)) {
  if (chain_.empty()) throw std::invalid_argument("triangular set is empty");
  if (!is_triangular(chain_)) {
    throw std::invalid_argument("chain is not triangular (classes must strictly increase)");
  }
  for (const auto& f : chain_) {
    auto ld = leading_data(f);
    leading_.push_back(ld.cls);
    degrees_.push_back(ld.ldeg);
    initials_.push_back(std::move(ld.ini));
  }
}

bool TriangularSet::is_triangular(std::span<const Polynomial> chain) {
  if (chain.empty()) return false;
  std::optional<std::size_t> prev;
  for (const auto& f : chain) {
    if (!(f.order() == chain.front().order())) return false;
    auto cls = f.class_index();
    if (!cls) return false;
    if (prev && *cls <= *prev) return false;
    prev = cls;
  }
  return true;
}

bool TriangularSet::is_led(std::size_t var) const {
  return std::find(leading_.begin(), leading_.end(), var) != leading_.end();
}

std::vector<std::size_t> TriangularSet::parameters() const {
  std::vector<std::size_t> out;
  for (std::size_t v = 0; v < order().size(); ++v) {
    if (!is_led(v)) out.push_back(v);
  }
  return out;
}

bool TriangularSet::reduces(const Polynomial& p) const {
  for (std::size_t i = 0; i < chain_.size(); ++i) {
    if (p.degree(leading_[i]) >= degrees_[i]) return false;
  }
  return true;
}

namespace {

struct ElementResultants {
  Polynomial initial_resultant;
  std::vector<Polynomial> r_set;  // normalized, canonical
  bool has_constant = false;
};

std::vector<ElementResultants> element_resultants(const TriangularSet& t, Exec exec) {
  std::vector<ElementResultants> out(t.size(),
                                     ElementResultants{Polynomial(t.order_ptr()), {}, false});
  parallel_for(t.size(), exec, [&](std::size_t i) {
    auto& e = out[i];
    e.initial_resultant = resultant_chain(t.initial(i), t, Exec::serial);
    std::vector<Polynomial> raw;
    for (const auto& [deg, c] : coeffs_in(t[i], t.leading_var(i))) {
      Polynomial r = resultant_chain(c, t, Exec::serial);
      if (r.is_zero()) continue;
      if (r.is_constant()) e.has_constant = true;
      raw.push_back(std::move(r));
    }
    e.r_set = canonical_set(raw);
  });
  return out;
}

}  // namespace

TrisetFlags classify_triset(std::span<const Polynomial> chain) {
  TrisetFlags flags;
  flags.triangular = TriangularSet::is_triangular(chain);
  if (!flags.triangular) return flags;
  TriangularSet t(std::vector<Polynomial>(chain.begin(), chain.end()));

  flags.regular = true;
  for (const auto& ini : t.initials()) {
    if (resultant_chain(ini, t).is_zero()) {
      flags.regular = false;
      break;
    }
  }

  flags.normal = true;
  for (const auto& ini : t.initials()) {
    for (std::size_t v = 0; v < t.order().size(); ++v) {
      if (ini.involves(v) && t.is_led(v)) flags.normal = false;
    }
  }

  // Each element and each initial must be reduced w.r.t. every other element.
  flags.noncontradictory_ascending = true;
  for (std::size_t i = 0; i < t.size(); ++i) {
    for (std::size_t j = 0; j < t.size(); ++j) {
      if (i == j) continue;
      const auto y = t.leading_var(j);
      const auto d = t.leading_degree(j);
      if (t[i].degree(y) >= d || t.initial(i).degree(y) >= d) {
        flags.noncontradictory_ascending = false;
      }
    }
  }
  return flags;
}

std::vector<std::vector<Polynomial>> coefficient_sets(const TriangularSet& t) {
  std::vector<std::vector<Polynomial>> out;
  for (std::size_t i = 0; i < t.size(); ++i) {
    std::vector<Polynomial> raw;
    for (auto& [deg, c] : coeffs_in(t[i], t.leading_var(i))) raw.push_back(std::move(c));
    out.push_back(canonical_set(raw));
  }
  return out;
}

std::vector<std::vector<Polynomial>> resultant_sets(const TriangularSet& t, Exec exec) {
  std::vector<std::vector<Polynomial>> out;
  for (auto& e : element_resultants(t, exec)) out.push_back(std::move(e.r_set));
  return out;
}

namespace {

std::vector<Polynomial> u_set_from(const TriangularSet& t,
                                   const std::vector<ElementResultants>& res) {
  std::vector<Polynomial> chosen;
  for (std::size_t i = 0; i < t.size(); ++i) {
    if (res[i].initial_resultant.is_zero() || !res[i].has_constant) {
      chosen.push_back(t.initial(i));
    }
  }
  return canonical_set(chosen);
}

}  // namespace

std::vector<Polynomial> u_set(const TriangularSet& t, Exec exec) {
  return u_set_from(t, element_resultants(t, exec));
}

ChainProducts products(const TriangularSet& t, Exec exec) {
  ChainProducts out{Polynomial::constant(t.order_ptr(), Rational(1)),
                    Polynomial::constant(t.order_ptr(), Rational(1))};
  for (const auto& ini : t.initials()) out.initials = out.initials * ini;
  for (const auto& u : u_set(t, exec)) out.u_set = out.u_set * u;
  return out;
}

TrisetReport report_triset(const TriangularSet& t, Exec exec) {
  TrisetReport rep;
  rep.flags = classify_triset(t.elements());
  rep.coefficient_sets = coefficient_sets(t);
  auto res = element_resultants(t, exec);
  rep.u_set = u_set_from(t, res);
  for (auto& e : res) {
    rep.initial_resultants.push_back(std::move(e.initial_resultant));
    rep.resultant_sets.push_back(std::move(e.r_set));
  }
  return rep;
}

}  // namespace unmix
