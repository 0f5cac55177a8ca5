#include "gtmm/constructions.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <unordered_set>

namespace gtmm {

namespace {

std::vector<Elem> axis_subset(const Group& cube, std::uint64_t n,
                              unsigned axis) {
  // (C\{0}) placed on one coordinate, identity on the others. Coordinate 0
  // is the most significant digit of the mixed-radix code.
  std::uint64_t stride = 1;
  for (unsigned i = axis + 1; i < 3; ++i) stride *= n;
  std::vector<Elem> out;
  out.reserve(n - 1);
  for (std::uint64_t a = 1; a < n; ++a) {
    out.push_back(cube.element(a * stride));
  }
  return out;
}

}  // namespace

SimultaneousFamily punctured_axis_family(std::uint64_t n) {
  if (n < 2) {
    throw DomainError("punctured axes are empty below n = 2");
  }
  const Group cube = Group::direct_power(Group::cyclic(n), 3);
  std::vector<SubsetTriple> triples;
  triples.emplace_back(cube, axis_subset(cube, n, 0), axis_subset(cube, n, 1),
                       axis_subset(cube, n, 2));
  triples.emplace_back(cube, axis_subset(cube, n, 1), axis_subset(cube, n, 2),
                       axis_subset(cube, n, 0));
  SimultaneousFamily family(cube, std::move(triples));
  if (!stpp_check(family)) {
    throw Error("punctured axis family failed its own property check");
  }
  return family;
}

namespace {

std::vector<Elem> product_subset(const Group& p, const Group& right,
                                 const std::vector<Elem>& a,
                                 const std::vector<Elem>& b) {
  // Under the flattened mixed-radix encoding, the code of (x, y) in the
  // product is x.code * |G'| + y.code.
  std::vector<Elem> out;
  out.reserve(a.size() * b.size());
  for (const Elem& x : a) {
    for (const Elem& y : b) {
      out.push_back(p.element(x.code * right.order() + y.code));
    }
  }
  return out;
}

}  // namespace

SimultaneousFamily product_family(const SimultaneousFamily& f,
                                  const SimultaneousFamily& g) {
  if (f.status() != FamilyStatus::stpp || g.status() != FamilyStatus::stpp) {
    throw UnverifiedError("product_family requires stpp-verified inputs");
  }
  const Group p = Group::direct_product(f.group(), g.group());
  std::vector<SubsetTriple> triples;
  triples.reserve(f.size() * g.size());
  for (const SubsetTriple& a : f.triples()) {
    for (const SubsetTriple& b : g.triples()) {
      triples.emplace_back(p, product_subset(p, g.group(), a.s(), b.s()),
                           product_subset(p, g.group(), a.t(), b.t()),
                           product_subset(p, g.group(), a.u(), b.u()));
    }
  }
  SimultaneousFamily out(p, std::move(triples));
  if (!stpp_check(out)) {
    throw Error("product family failed re-verification");
  }
  return out;
}

namespace {

// All tuples with coordinate i drawn from pick(i), crossed with every top
// permutation, in odometer-then-rank order.
std::vector<Elem> wreath_subset(
    const Group& w, const std::vector<const std::vector<Elem>*>& pick) {
  const std::uint32_t n = w.wreath_degree();
  const std::uint64_t top = perm::factorial(n);
  std::vector<std::size_t> odometer(n, 0);
  std::vector<Elem> parts(n);
  std::vector<Elem> out;
  while (true) {
    for (std::uint32_t i = 0; i < n; ++i) parts[i] = (*pick[i])[odometer[i]];
    for (std::uint64_t r = 0; r < top; ++r) {
      out.push_back(w.from_wreath(parts, perm::unrank(n, r)));
    }
    std::uint32_t i = n;
    while (i > 0) {
      --i;
      if (++odometer[i] < pick[i]->size()) break;
      odometer[i] = 0;
      if (i == 0) return out;
    }
  }
}

}  // namespace

SubsetTriple wreath_triple(const SimultaneousFamily& f, bool verify) {
  if (f.status() != FamilyStatus::stpp) {
    throw UnverifiedError("wreath_triple requires an stpp-verified family");
  }
  const std::uint32_t n = static_cast<std::uint32_t>(f.size());
  const Group w = Group::wreath_product(f.group(), n);
  std::vector<const std::vector<Elem>*> s(n), t(n), u(n);
  for (std::uint32_t i = 0; i < n; ++i) {
    s[i] = &f.triples()[i].s();
    t[i] = &f.triples()[i].t();
    u[i] = &f.triples()[i].u();
  }
  SubsetTriple out(w, wreath_subset(w, s), wreath_subset(w, t),
                   wreath_subset(w, u));
  if (verify && !tpp_check(out)) {
    throw Error("wreath product triple failed re-verification");
  }
  return out;
}

SimultaneousFamily permuted_wreath_family(const SimultaneousFamily& f,
                                          const PermutationFamily& perms) {
  if (f.status() != FamilyStatus::stpp) {
    throw UnverifiedError(
        "permuted_wreath_family requires an stpp-verified family");
  }
  const std::uint32_t n = static_cast<std::uint32_t>(f.size());
  if (perms.degree != n) {
    throw DomainError("permutation degree does not match the family size");
  }
  if (perms.triples.empty()) {
    throw DomainError("need at least one permutation triple");
  }
  const Group w = Group::wreath_product(f.group(), n);
  std::vector<SubsetTriple> triples;
  triples.reserve(perms.k());
  for (const PermTriple& pt : perms.triples) {
    if (pt.sigma.size() != n || pt.tau.size() != n || pt.upsilon.size() != n ||
        !perm::is_valid(pt.sigma) || !perm::is_valid(pt.tau) ||
        !perm::is_valid(pt.upsilon)) {
      throw DomainError("invalid permutation triple");
    }
    std::vector<const std::vector<Elem>*> s(n), t(n), u(n);
    for (std::uint32_t i = 0; i < n; ++i) {
      s[i] = &f.triples()[pt.sigma[i]].s();
      t[i] = &f.triples()[pt.tau[i]].t();
      u[i] = &f.triples()[pt.upsilon[i]].u();
    }
    triples.emplace_back(w, wreath_subset(w, s), wreath_subset(w, t),
                         wreath_subset(w, u));
  }
  return SimultaneousFamily(w, std::move(triples));
}

namespace {

using CodeSet = std::unordered_set<std::uint64_t>;

CodeSet pair_quotients(const Group& g, const std::vector<Elem>& a,
                       const std::vector<Elem>& b) {
  CodeSet out;
  out.reserve(a.size() * b.size());
  for (const Elem& x : a) {
    for (const Elem& y : b) {
      out.insert(g.mul(x, g.inv(y)).code);
    }
  }
  return out;
}

// No solution of q_s q_t q_u = 1 across the three pairwise quotient sets,
// except the all-identity one on the diagonal. Mirrors find_stpp_violation.
bool combo_ok(const Group& g, bool diagonal, const CodeSet& qs,
              const CodeSet& qt, const CodeSet& qu) {
  const std::uint64_t one = g.identity().code;
  for (std::uint64_t cs : qs) {
    const Elem es = g.element(cs);
    for (std::uint64_t ct : qt) {
      const std::uint64_t cu = g.inv(g.mul(es, g.element(ct))).code;
      if (diagonal && cs == one && ct == one && cu == one) continue;
      if (qu.contains(cu)) return false;
    }
  }
  return true;
}

// Builds the wreath subsets of one candidate permutation triple.
struct CandidateSubsets {
  std::vector<Elem> s, t, u;
};

CandidateSubsets candidate_subsets(const Group& w,
                                   const SimultaneousFamily& f,
                                   const PermTriple& pt) {
  const std::uint32_t n = static_cast<std::uint32_t>(f.size());
  std::vector<const std::vector<Elem>*> s(n), t(n), u(n);
  for (std::uint32_t i = 0; i < n; ++i) {
    s[i] = &f.triples()[pt.sigma[i]].s();
    t[i] = &f.triples()[pt.tau[i]].t();
    u[i] = &f.triples()[pt.upsilon[i]].u();
  }
  return {wreath_subset(w, s), wreath_subset(w, t), wreath_subset(w, u)};
}

// Lazily evaluated pairwise quotient sets and combo feasibility over the
// candidate list, with a shared budget.
class ComboOracle {
 public:
  ComboOracle(const Group& w, std::vector<CandidateSubsets> candidates,
              std::uint64_t budget)
      : w_(w), candidates_(std::move(candidates)), budget_(budget) {}

  // Returns std::nullopt when the budget is exhausted.
  std::optional<bool> ok(std::size_t a, std::size_t b, std::size_t c) {
    const auto key = std::make_tuple(a, b, c);
    if (const auto it = memo_.find(key); it != memo_.end()) {
      return it->second;
    }
    if (checks_ >= budget_) return std::nullopt;
    ++checks_;
    const bool result =
        combo_ok(w_, a == b && b == c,
                 quotients(qs_, a, b, &CandidateSubsets::s),
                 quotients(qt_, b, c, &CandidateSubsets::t),
                 quotients(qu_, c, a, &CandidateSubsets::u));
    memo_.emplace(key, result);
    return result;
  }

  std::uint64_t checks() const { return checks_; }

 private:
  using PairKey = std::pair<std::size_t, std::size_t>;

  const CodeSet& quotients(std::map<PairKey, CodeSet>& cache, std::size_t a,
                           std::size_t b,
                           std::vector<Elem> CandidateSubsets::*member) {
    const PairKey key{a, b};
    auto it = cache.find(key);
    if (it == cache.end()) {
      it = cache
               .emplace(key, pair_quotients(w_, candidates_[a].*member,
                                            candidates_[b].*member))
               .first;
    }
    return it->second;
  }

  const Group& w_;
  std::vector<CandidateSubsets> candidates_;
  std::uint64_t budget_;
  std::uint64_t checks_ = 0;
  std::map<PairKey, CodeSet> qs_, qt_, qu_;
  std::map<std::tuple<std::size_t, std::size_t, std::size_t>, bool> memo_;
};

// All (a, b, c) over the chosen set, including repeats.
std::optional<bool> subset_feasible(ComboOracle& oracle,
                                    const std::vector<std::size_t>& chosen) {
  for (std::size_t a : chosen) {
    for (std::size_t b : chosen) {
      for (std::size_t c : chosen) {
        const auto ok = oracle.ok(a, b, c);
        if (!ok.has_value()) return std::nullopt;
        if (!*ok) return false;
      }
    }
  }
  return true;
}

// Combos that involve the newly added candidate only.
std::optional<bool> extension_feasible(ComboOracle& oracle,
                                       const std::vector<std::size_t>& chosen,
                                       std::size_t added) {
  std::vector<std::size_t> all(chosen);
  all.push_back(added);
  for (std::size_t a : all) {
    for (std::size_t b : all) {
      for (std::size_t c : all) {
        if (a != added && b != added && c != added) continue;
        const auto ok = oracle.ok(a, b, c);
        if (!ok.has_value()) return std::nullopt;
        if (!*ok) return false;
      }
    }
  }
  return true;
}

}  // namespace

PermFamilySearchResult search_permutation_family(const SimultaneousFamily& f,
                                                 std::uint64_t budget) {
  if (f.status() != FamilyStatus::stpp) {
    throw UnverifiedError(
        "search_permutation_family requires an stpp-verified family");
  }
  const std::uint32_t n = static_cast<std::uint32_t>(f.size());
  const std::uint64_t top = perm::factorial(n);
  std::uint64_t candidate_count = 0;
  if (__builtin_mul_overflow(top * top, top, &candidate_count)) {
    throw OverflowError("candidate space (n!)^3 overflows 64 bits");
  }
  const Group w = Group::wreath_product(f.group(), n);
  if (w.order() > kDefaultEnumerationCap) {
    throw EnumerationCapError(
        "wreath group order " + std::to_string(w.order()) +
        " exceeds the enumeration cap; the search space is out of reach");
  }
  w.memoize_tables();

  // Candidates in lexicographic (sigma, tau, upsilon) rank order; this
  // fixes the deterministic tie-break.
  std::vector<PermTriple> perm_triples;
  perm_triples.reserve(candidate_count);
  std::vector<CandidateSubsets> subsets;
  subsets.reserve(candidate_count);
  for (std::uint64_t rs = 0; rs < top; ++rs) {
    for (std::uint64_t rt = 0; rt < top; ++rt) {
      for (std::uint64_t ru = 0; ru < top; ++ru) {
        PermTriple pt{perm::unrank(n, rs), perm::unrank(n, rt),
                      perm::unrank(n, ru)};
        subsets.push_back(candidate_subsets(w, f, pt));
        perm_triples.push_back(std::move(pt));
      }
    }
  }

  ComboOracle oracle(w, std::move(subsets), budget);
  std::vector<std::size_t> best;
  bool exhaustive = true;

  if (candidate_count <= 12) {
    // Exhaustive over all subsets, largest first, lexicographic within a
    // size; the first feasible subset is the canonical winner.
    const std::size_t c = static_cast<std::size_t>(candidate_count);
    for (std::size_t k = c; k >= 1 && best.empty(); --k) {
      std::vector<std::size_t> combo(k);
      std::iota(combo.begin(), combo.end(), 0);
      while (true) {
        const auto feasible = subset_feasible(oracle, combo);
        if (!feasible.has_value()) {
          exhaustive = false;
          break;
        }
        if (*feasible) {
          best = combo;
          break;
        }
        // next k-combination of {0..c-1}
        std::size_t i = k;
        while (i > 0) {
          --i;
          if (combo[i] != i + c - k) {
            ++combo[i];
            for (std::size_t j = i + 1; j < k; ++j) combo[j] = combo[j - 1] + 1;
            break;
          }
          if (i == 0) {
            i = k + 1;  // signal: combinations exhausted
            break;
          }
        }
        if (i == k + 1) break;
      }
      if (!exhaustive) break;
    }
  } else {
    // Greedy depth-first growth with backtracking under the budget.
    std::vector<std::size_t> current;
    bool budget_hit = false;
    const std::size_t c = static_cast<std::size_t>(candidate_count);
    auto dfs = [&](auto&& self, std::size_t next) -> void {
      if (current.size() > best.size()) best = current;
      if (budget_hit) return;
      for (std::size_t cand = next; cand < c; ++cand) {
        if (current.size() + (c - cand) <= best.size()) return;
        const auto feasible = extension_feasible(oracle, current, cand);
        if (!feasible.has_value()) {
          budget_hit = true;
          return;
        }
        if (!*feasible) continue;
        current.push_back(cand);
        self(self, cand + 1);
        current.pop_back();
        if (budget_hit) return;
      }
    };
    dfs(dfs, 0);
    exhaustive = !budget_hit;
  }

  if (best.empty()) {
    throw DomainError(
        "search budget exhausted before any feasible family was verified");
  }

  PermutationFamily family;
  family.degree = n;
  for (std::size_t idx : best) family.triples.push_back(perm_triples[idx]);

  // Never trust search state: rebuild and re-verify through the public path.
  SimultaneousFamily verified = permuted_wreath_family(f, family);
  if (!stpp_check(verified)) {
    throw Error("search result failed re-verification");
  }
  return PermFamilySearchResult{std::move(family), std::move(verified),
                                oracle.checks(), exhaustive};
}

namespace {

// Incremental quotient-set state for one subset with undo support.
class QuotientTracker {
 public:
  explicit QuotientTracker(const Group& g) : g_(g) {
    set_.insert(g.identity().code);
  }

  // Adds the quotients of `e` against `members` (both directions) plus the
  // identity pair; records what was newly inserted for undo.
  void push(const Elem& e, const std::vector<Elem>& members) {
    history_.emplace_back();
    std::vector<std::uint64_t>& added = history_.back();
    auto insert = [&](std::uint64_t code) {
      if (set_.insert(code).second) added.push_back(code);
    };
    const Elem e_inv = g_.inv(e);
    for (const Elem& x : members) {
      insert(g_.mul(e, g_.inv(x)).code);
      insert(g_.mul(x, e_inv).code);
    }
  }

  void pop() {
    for (std::uint64_t code : history_.back()) set_.erase(code);
    history_.pop_back();
  }

  const CodeSet& codes() const { return set_; }
  const std::vector<std::uint64_t>& last_added() const {
    return history_.back();
  }

 private:
  const Group& g_;
  CodeSet set_;
  std::vector<std::vector<std::uint64_t>> history_;
};

class TppSearcher {
 public:
  TppSearcher(const Group& g, std::array<std::uint64_t, 3> target,
              const TppSearchOptions& options)
      : g_(g),
        target_(target),
        options_(options),
        qs_(g),
        qt_(g),
        qu_(g),
        elements_(g.elements(options.enumeration_cap)) {
    g_.memoize_tables();
  }

  TppSearchReport run() {
    grow_s(0);
    report_.complete = !stopped_;
    return std::move(report_);
  }

 private:
  bool budget_spent() {
    ++report_.nodes;
    if (report_.nodes > options_.node_budget ||
        report_.triples.size() >= options_.max_results ||
        (options_.first_only && !report_.triples.empty())) {
      stopped_ = true;
    }
    return stopped_;
  }

  std::size_t start_index(const std::vector<Elem>& chosen) const {
    if (chosen.empty()) return 0;
    return static_cast<std::size_t>(chosen.back().code) + 1;
  }

  void grow_s(std::size_t from) {
    if (stopped_) return;
    if (s_.size() == target_[0]) {
      grow_t(0);
      return;
    }
    if (options_.modulo_right_translation && s_.empty()) from = 0;
    for (std::size_t i = std::max(from, start_index(s_));
         i < elements_.size(); ++i) {
      if (elements_.size() - i < target_[0] - s_.size()) break;
      if (options_.modulo_right_translation && s_.empty() && i != 0) break;
      if (budget_spent()) return;
      const Elem& e = elements_[i];
      qs_.push(e, s_);
      s_.push_back(e);
      grow_s(i + 1);
      s_.pop_back();
      qs_.pop();
      if (stopped_) return;
    }
  }

  void grow_t(std::size_t from) {
    if (stopped_) return;
    if (t_.size() == target_[1]) {
      // Freeze QS x QT into the product set used for U pruning.
      build_product_set();
      grow_u(0);
      return;
    }
    for (std::size_t i = std::max(from, start_index(t_));
         i < elements_.size(); ++i) {
      if (elements_.size() - i < target_[1] - t_.size()) break;
      if (options_.modulo_right_translation && t_.empty() && i != 0) break;
      if (budget_spent()) return;
      const Elem& e = elements_[i];
      qt_.push(e, t_);
      bool ok = true;
      // A new t-quotient q with q^{-1} already among the s-quotients makes
      // q_s q_t = 1 nontrivially solvable; hopeless regardless of U.
      for (std::uint64_t code : qt_.last_added()) {
        if (code == identity_code() ||
            !qs_.codes().contains(g_.inv(g_.element(code)).code)) {
          continue;
        }
        ok = false;
        break;
      }
      if (ok) {
        t_.push_back(e);
        grow_t(i + 1);
        t_.pop_back();
      }
      qt_.pop();
      if (stopped_) return;
    }
  }

  void grow_u(std::size_t from) {
    if (stopped_) return;
    if (u_.size() == target_[2]) {
      record();
      return;
    }
    for (std::size_t i = std::max(from, start_index(u_));
         i < elements_.size(); ++i) {
      if (elements_.size() - i < target_[2] - u_.size()) break;
      if (options_.modulo_right_translation && u_.empty() && i != 0) break;
      if (budget_spent()) return;
      const Elem& e = elements_[i];
      qu_.push(e, u_);
      bool ok = true;
      for (std::uint64_t code : qu_.last_added()) {
        if (code == identity_code()) continue;
        if (st_products_.contains(g_.inv(g_.element(code)).code)) {
          ok = false;
          break;
        }
      }
      if (ok) {
        u_.push_back(e);
        grow_u(i + 1);
        u_.pop_back();
      }
      qu_.pop();
      if (stopped_) return;
    }
  }

  void build_product_set() {
    st_products_.clear();
    for (std::uint64_t cs : qs_.codes()) {
      const Elem es = g_.element(cs);
      for (std::uint64_t ct : qt_.codes()) {
        st_products_.insert(g_.mul(es, g_.element(ct)).code);
      }
    }
  }

  void record() {
    SubsetTriple triple(g_, s_, t_, u_);
    if (!tpp_check(triple)) {
      throw Error("search produced a non-conforming triple; pruning is "
                  "out of sync with the checker");
    }
    report_.triples.push_back(std::move(triple));
    if (options_.first_only || report_.triples.size() >= options_.max_results) {
      stopped_ = true;
      // A completed search that stops by request is still truthful about
      // completeness only in the unbounded sense; mark it cut.
    }
  }

  std::uint64_t identity_code() const { return 0; }

  const Group& g_;
  std::array<std::uint64_t, 3> target_;
  TppSearchOptions options_;
  QuotientTracker qs_, qt_, qu_;
  std::vector<Elem> elements_;
  std::vector<Elem> s_, t_, u_;
  CodeSet st_products_;
  TppSearchReport report_;
  bool stopped_ = false;
};

}  // namespace

TppSearchReport find_tpp_triples(const Group& g,
                                 std::array<std::uint64_t, 3> target,
                                 const TppSearchOptions& options) {
  for (std::uint64_t size : target) {
    if (size < 1) throw DomainError("target sizes must be positive");
    if (size > g.order()) {
      throw DomainError("target size exceeds the group order");
    }
  }
  return TppSearcher(g, target, options).run();
}

}  // namespace gtmm
