#include "unmix/charset.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>
#include <string>

#include "unmix/elimination.hpp"
#include "unmix/errors.hpp"
#include "unmix/parser_io.hpp"

namespace unmix {

namespace {

struct Ranked {
  std::size_t cls;
  std::uint32_t ldeg;
  std::string text;
  const Polynomial* poly;
};

bool ranked_less(const Ranked& a, const Ranked& b) {
  if (a.cls != b.cls) return a.cls < b.cls;
  if (a.ldeg != b.ldeg) return a.ldeg < b.ldeg;
  return a.text < b.text;
}

std::string key_of(std::span<const Polynomial> set) {
  std::string key;
  for (const auto& p : set) {
    key += io::render_polynomial(p);
    key += ';';
  }
  return key;
}

bool contains(std::span<const Polynomial> set, const Polynomial& p) {
  return std::find(set.begin(), set.end(), p) != set.end();
}

}  // namespace

bool rank_less(const Polynomial& a, const Polynomial& b) {
  auto ca = a.class_index();
  auto cb = b.class_index();
  if (!ca || !cb) {
    if (ca.has_value() != cb.has_value()) return !ca;
    return canonical_less(a, b);
  }
  if (*ca != *cb) return *ca < *cb;
  auto da = a.degree(*ca), db = b.degree(*cb);
  if (da != db) return da < db;
  return canonical_less(a, b);
}

CharsetOutcome basic_set(std::span<const Polynomial> f) {
  if (f.empty()) throw std::invalid_argument("basic set of an empty set");
  std::vector<Ranked> cand;
  for (const auto& p : f) {
    if (p.is_zero()) throw std::invalid_argument("basic set input contains zero");
    auto cls = p.class_index();
    if (!cls) return CharsetOutcome{};
    cand.push_back(Ranked{*cls, p.degree(*cls), io::render_polynomial(p), &p});
  }
  std::sort(cand.begin(), cand.end(), ranked_less);

  std::vector<Polynomial> chain;
  std::vector<std::pair<std::size_t, std::uint32_t>> leads;
  while (!cand.empty()) {
    const Ranked b = cand.front();
    chain.push_back(*b.poly);
    leads.emplace_back(b.cls, b.ldeg);
    std::erase_if(cand, [&](const Ranked& r) {
      if (r.cls <= b.cls) return true;
      for (auto [var, deg] : leads) {
        if (r.poly->degree(var) >= deg) return true;
      }
      return false;
    });
  }
  return CharsetOutcome{TriangularSet(std::move(chain))};
}

CharsetOutcome wu_charset(std::span<const Polynomial> f) {
  std::vector<Polynomial> current = canonical_set(f);
  if (current.empty()) throw std::invalid_argument("characteristic set of an empty set");
  for (;;) {
    CharsetOutcome b = basic_set(current);
    if (b.contradictory()) return b;
    const TriangularSet& chain = *b.chain;
    std::vector<Polynomial> remainders;
    for (const auto& p : current) {
      if (contains(chain.elements(), p)) continue;
      Polynomial r = prem_chain(p, chain).remainder;
      if (!r.is_zero()) remainders.push_back(normalize(r));
    }
    if (remainders.empty()) return b;
    remainders.insert(remainders.end(), current.begin(), current.end());
    current = canonical_set(remainders);
  }
}

namespace {

struct Popped {
  std::optional<TriangularSet> chain;
  std::vector<Polynomial> u_set;
  std::vector<std::vector<Polynomial>> children;
};

Popped process(const std::vector<Polynomial>& f) {
  Popped out;
  CharsetOutcome cs = wu_charset(f);
  if (cs.contradictory()) return out;
  out.chain = std::move(cs.chain);
  // Inner kernels stay serial: the caller already parallelizes over F.
  out.u_set = u_set(*out.chain, Exec::serial);
  for (const auto& ini : out.u_set) {
    std::vector<Polynomial> child = f;
    child.insert(child.end(), out.chain->begin(), out.chain->end());
    child.push_back(ini);
    out.children.push_back(canonical_set(child));
  }
  return out;
}

class BranchCollector {
 public:
  void add(Popped& popped, const std::vector<Polynomial>& source) {
    const auto& chain = *popped.chain;
    auto key = io::render_all(chain.elements());
    auto src_key = key_of(source);
    auto it = branches_.find(key);
    if (it == branches_.end()) {
      branches_.emplace(std::move(key),
                        Entry{CharBranch{chain, std::move(popped.u_set), source}, src_key});
    } else if (src_key < it->second.source_key) {
      it->second.branch.source = source;
      it->second.source_key = src_key;
    }
  }

  std::vector<CharBranch> take() {
    std::vector<CharBranch> out;
    for (auto& [key, e] : branches_) out.push_back(std::move(e.branch));
    return out;
  }

 private:
  struct Entry {
    CharBranch branch;
    std::string source_key;
  };
  std::map<std::vector<std::string>, Entry> branches_;
};

void count_pop(CharserStats& stats, std::size_t n, const CharserLimits& limits) {
  if (stats.pops + n > limits.max_pops) {
    throw ResourceLimit("CharserA worklist exceeded " + std::to_string(limits.max_pops) +
                        " pops");
  }
  stats.pops += n;
}

}  // namespace

std::vector<CharBranch> charser_a(std::span<const Polynomial> p, const CharserLimits& limits,
                                  Exec exec, CharserStats* stats_out) {
  std::vector<Polynomial> start = canonical_set(p);
  if (start.empty()) throw std::invalid_argument("CharserA of an empty set");

  CharserStats stats;
  BranchCollector branches;
  std::set<std::string> visited{key_of(start)};

  if (exec == Exec::serial) {
    std::vector<std::vector<Polynomial>> work{start};
    while (!work.empty()) {
      auto f = std::move(work.back());
      work.pop_back();
      count_pop(stats, 1, limits);
      Popped popped = process(f);
      if (!popped.chain) {
        ++stats.contradictions;
        continue;
      }
      for (auto& child : popped.children) {
        if (visited.insert(key_of(child)).second) work.push_back(std::move(child));
      }
      branches.add(popped, f);
    }
  } else {
    std::vector<std::vector<Polynomial>> wave{start};
    while (!wave.empty()) {
      count_pop(stats, wave.size(), limits);
      std::vector<Popped> results(wave.size());
      parallel_for(wave.size(), exec, [&](std::size_t i) { results[i] = process(wave[i]); });
      std::vector<std::vector<Polynomial>> next;
      for (std::size_t i = 0; i < wave.size(); ++i) {
        auto& popped = results[i];
        if (!popped.chain) {
          ++stats.contradictions;
          continue;
        }
        for (auto& child : popped.children) {
          if (visited.insert(key_of(child)).second) next.push_back(std::move(child));
        }
        branches.add(popped, wave[i]);
      }
      wave = std::move(next);
    }
  }
  if (stats_out) *stats_out = stats;
  return branches.take();
}

}  // namespace unmix
