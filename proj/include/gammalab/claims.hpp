#ifndef GAMMALAB_CLAIMS_HPP_
#define GAMMALAB_CLAIMS_HPP_

#include <chrono>
#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "gammalab/congruence.hpp"
#include "gammalab/core.hpp"
#include "gammalab/enumerate.hpp"
#include "gammalab/filters.hpp"
#include "gammalab/parallel.hpp"

namespace gammalab {

//! Status of a cataloged claim. `proved` claims must never produce a
//! counterexample (one would be an implementation bug); `doubted` claims are
//! open questions the toolkit searches; `refuted_proof` marks statements
//! whose published proofs are known to be broken although the statements
//! themselves might still hold; `exploratory` probes carry no expectation.
enum class ClaimKind { proved, doubted, refuted_proof, exploratory };

inline std::string to_string(ClaimKind k) {
  switch (k) {
    case ClaimKind::proved: return "proved";
    case ClaimKind::doubted: return "doubted";
    case ClaimKind::refuted_proof: return "refuted-proof";
    case ClaimKind::exploratory: return "exploratory";
  }
  return "?";
}

struct ClaimInfo {
  std::string id;
  ClaimKind kind;
  bool needs_semigroup;
  std::string statement;
};

//! The claim catalog. cls(x) is the class of x under the relation
//! identifying elements with equal principal filters; <= on classes is the
//! class order.
inline const std::vector<ClaimInfo>& claim_catalog() {
  static const std::vector<ClaimInfo> catalog = {
      {"C1", ClaimKind::proved, true,
       "cls(a) below cls(b) implies N(b) subset of N(a)"},
      {"C2", ClaimKind::proved, true,
       "N(a) = N(b) implies cls(a) below cls(b)"},
      {"C3", ClaimKind::doubted, true,
       "N(b) subset of N(a) implies cls(a) below cls(b)"},
      {"C4", ClaimKind::doubted, true,
       "for every a the four strictly-above sets coincide"},
      {"C5", ClaimKind::proved, false,
       "in a band, every up-set [a) is a subsemigroup"},
      {"C6", ClaimKind::proved, true,
       "if N(a) = [a) for every a, distinct elements have distinct N"},
      {"C7", ClaimKind::proved, true,
       "if distinct elements have distinct N, the structure is a semilattice"},
      {"C8", ClaimKind::proved, true,
       "a commutative band whose order satisfies a <= b iff a g b = a for "
       "all g has N(a) = [a) for every a"},
      {"C9", ClaimKind::proved, false,
       "if a <= b implies a g b = a for all g, the structure is a band"},
      {"C10", ClaimKind::proved, true,
       "for every semilattice congruence and every x, the classes above "
       "cls(x) form a filter of the quotient"},
      {"C11", ClaimKind::refuted_proof, true,
       "if distinct elements have distinct N, then N(a) = [a) for every a"},
      {"C12", ClaimKind::refuted_proof, true,
       "every semilattice has distinct N for distinct elements"},
      {"C13", ClaimKind::exploratory, true,
       "the equal-principal-filter partition equals the smallest complete "
       "semilattice congruence"},
  };
  return catalog;
}

inline const ClaimInfo& claim_info(std::string_view id) {
  for (const ClaimInfo& c : claim_catalog()) {
    if (c.id == id) return c;
  }
  throw Error("unknown claim id: " + std::string(id));
}

struct ClaimWitness {
  std::vector<int> elements;
  std::optional<Partition> partition;
  std::string note;

  bool operator==(const ClaimWitness&) const = default;
};

struct ClaimVerdict {
  std::string claim_id;
  bool holds = false;
  bool vacuous = false;  // the claim's antecedent never fires on this structure
  std::optional<ClaimWitness> witness;

  bool operator==(const ClaimVerdict&) const = default;
};

namespace detail {

inline std::vector<ElementSet> all_principal_filters(const PoGammaStructure& s) {
  std::vector<ElementSet> out;
  out.reserve(static_cast<std::size_t>(s.n));
  for (int a = 0; a < s.n; ++a) out.push_back(principal_filter(s, a));
  return out;
}

inline ClaimVerdict verdict_pairwise(
    const PoGammaStructure& s, std::string id,
    const std::function<bool(int, int)>& antecedent,
    const std::function<bool(int, int)>& consequent) {
  ClaimVerdict v;
  v.claim_id = std::move(id);
  v.holds = true;
  bool fired = false;
  for (int a = 0; a < s.n; ++a) {
    for (int b = 0; b < s.n; ++b) {
      if (!antecedent(a, b)) continue;
      fired = true;
      if (!consequent(a, b) && v.holds) {
        v.holds = false;
        v.witness = ClaimWitness{{a, b}, std::nullopt, ""};
      }
    }
  }
  v.vacuous = !fired;
  return v;
}

// Structure-level implication: vacuous when the antecedent is false.
inline ClaimVerdict verdict_implication(std::string id, bool antecedent,
                                        bool consequent,
                                        std::optional<ClaimWitness> witness) {
  ClaimVerdict v;
  v.claim_id = std::move(id);
  v.vacuous = !antecedent;
  v.holds = !antecedent || consequent;
  if (!v.holds) v.witness = std::move(witness);
  return v;
}

}  // namespace detail

inline ClaimVerdict check_claim(std::string_view id, const PoGammaStructure& s) {
  const ClaimInfo& info = claim_info(id);
  if (info.needs_semigroup && s.kind != StructureKind::semigroup) {
    throw Error("claim " + info.id + " requires a semigroup structure");
  }

  if (info.id == "C1" || info.id == "C2" || info.id == "C3") {
    std::vector<ElementSet> n_of = detail::all_principal_filters(s);
    Partition cls = principal_filter_partition(s);
    BoolRelation order = class_order(s, cls);
    auto below = [&](int a, int b) { return order.at(cls(a), cls(b)); };
    auto subset = [&](int b, int a) {
      return n_of[static_cast<std::size_t>(b)].subset_of(
          n_of[static_cast<std::size_t>(a)]);
    };
    if (info.id == "C1") {
      return detail::verdict_pairwise(s, info.id, below,
                                      [&](int a, int b) { return subset(b, a); });
    }
    if (info.id == "C2") {
      return detail::verdict_pairwise(
          s, info.id,
          [&](int a, int b) {
            return n_of[static_cast<std::size_t>(a)] ==
                   n_of[static_cast<std::size_t>(b)];
          },
          below);
    }
    return detail::verdict_pairwise(
        s, info.id, [&](int a, int b) { return subset(b, a); }, below);
  }

  if (info.id == "C4") {
    Partition cls = principal_filter_partition(s);
    BoolRelation order = class_order(s, cls);
    ClaimVerdict v;
    v.claim_id = info.id;
    v.holds = true;
    bool any_nonempty = false;
    for (int a = 0; a < s.n; ++a) {
      ClassUpperSets sets = class_upper_sets(s, a, cls.class_of, order);
      if (!sets.strictly_above.is_empty() || !sets.above_in_filter.is_empty() ||
          !sets.above_class_union.is_empty() ||
          !sets.filter_minus_class.is_empty()) {
        any_nonempty = true;
      }
      if (!sets.all_equal() && v.holds) {
        v.holds = false;
        v.witness = ClaimWitness{
            {a},
            std::nullopt,
            "strictly-above=" + sets.strictly_above.to_string() +
                " above-in-filter=" + sets.above_in_filter.to_string() +
                " class-union=" + sets.above_class_union.to_string() +
                " filter-minus-class=" + sets.filter_minus_class.to_string()};
      }
    }
    v.vacuous = !any_nonempty;
    return v;
  }

  if (info.id == "C5") {
    StructuralProfile profile = structural_profile(s);
    std::optional<ClaimWitness> witness;
    bool consequent = true;
    for (int a = 0; a < s.n && consequent; ++a) {
      FilterCheck check = is_filter(s, up_set(s, a));
      if (!check.is_subsemigroup) {
        consequent = false;
        const FilterViolation& w = *check.witness;
        witness = ClaimWitness{{a, w.x, w.y},
                               std::nullopt,
                               "product escapes [" + std::to_string(a) +
                                   ") at gamma=" + std::to_string(w.gamma)};
      }
    }
    return detail::verdict_implication(info.id, profile.is_band, consequent,
                                       std::move(witness));
  }

  if (info.id == "C6" || info.id == "C11") {
    std::vector<ElementSet> n_of = detail::all_principal_filters(s);
    bool principal_equals_upset = true;
    std::optional<ClaimWitness> up_witness;
    for (int a = 0; a < s.n; ++a) {
      if (n_of[static_cast<std::size_t>(a)] != up_set(s, a)) {
        principal_equals_upset = false;
        if (!up_witness) {
          up_witness = ClaimWitness{
              {a},
              std::nullopt,
              "N(" + std::to_string(a) + ")=" +
                  n_of[static_cast<std::size_t>(a)].to_string() +
                  " but [" + std::to_string(a) + ")=" +
                  up_set(s, a).to_string()};
        }
      }
    }
    Partition cls = principal_filter_partition(s);
    std::optional<ClaimWitness> pair_witness;
    if (!cls.is_discrete()) {
      for (int a = 0; a < s.n && !pair_witness; ++a) {
        for (int b = a + 1; b < s.n; ++b) {
          if (cls(a) == cls(b)) {
            pair_witness = ClaimWitness{
                {a, b}, std::nullopt, "distinct elements with equal N"};
            break;
          }
        }
      }
    }
    if (info.id == "C6") {
      return detail::verdict_implication(info.id, principal_equals_upset,
                                         cls.is_discrete(),
                                         std::move(pair_witness));
    }
    return detail::verdict_implication(info.id, cls.is_discrete(),
                                       principal_equals_upset,
                                       std::move(up_witness));
  }

  if (info.id == "C7" || info.id == "C12") {
    Partition cls = principal_filter_partition(s);
    StructuralProfile profile = structural_profile(s);
    if (info.id == "C7") {
      std::optional<ClaimWitness> witness;
      if (!profile.is_semilattice) {
        for (int a = 0; a < s.n && !witness; ++a) {
          for (int gamma = 0; gamma < s.g && !witness; ++gamma) {
            if (s.product(gamma, a, a) != a) {
              witness = ClaimWitness{
                  {a}, std::nullopt,
                  "not idempotent at gamma=" + std::to_string(gamma)};
            }
          }
        }
        for (int a = 0; a < s.n && !witness; ++a) {
          for (int b = 0; b < s.n && !witness; ++b) {
            for (int gamma = 0; gamma < s.g; ++gamma) {
              if (s.product(gamma, a, b) != s.product(gamma, b, a)) {
                witness = ClaimWitness{
                    {a, b}, std::nullopt,
                    "not commutative at gamma=" + std::to_string(gamma)};
                break;
              }
            }
          }
        }
      }
      return detail::verdict_implication(info.id, cls.is_discrete(),
                                         profile.is_semilattice,
                                         std::move(witness));
    }
    std::optional<ClaimWitness> witness;
    if (!cls.is_discrete()) {
      for (int a = 0; a < s.n && !witness; ++a) {
        for (int b = a + 1; b < s.n; ++b) {
          if (cls(a) == cls(b)) {
            witness = ClaimWitness{
                {a, b}, std::nullopt, "distinct elements with equal N"};
            break;
          }
        }
      }
    }
    return detail::verdict_implication(info.id, profile.is_semilattice,
                                       cls.is_discrete(), std::move(witness));
  }

  if (info.id == "C8") {
    StructuralProfile profile = structural_profile(s);
    bool antecedent = profile.is_semilattice && profile.order_iff;
    bool consequent = true;
    std::optional<ClaimWitness> witness;
    for (int a = 0; a < s.n && consequent; ++a) {
      ElementSet n_a = principal_filter(s, a);
      if (n_a != up_set(s, a)) {
        consequent = false;
        witness = ClaimWitness{{a},
                               std::nullopt,
                               "N(" + std::to_string(a) + ")=" + n_a.to_string() +
                                   " but [" + std::to_string(a) + ")=" +
                                   up_set(s, a).to_string()};
      }
    }
    return detail::verdict_implication(info.id, antecedent, consequent,
                                       std::move(witness));
  }

  if (info.id == "C9") {
    StructuralProfile profile = structural_profile(s);
    std::optional<ClaimWitness> witness;
    if (!profile.is_band) {
      for (int a = 0; a < s.n && !witness; ++a) {
        for (int gamma = 0; gamma < s.g; ++gamma) {
          if (s.product(gamma, a, a) != a) {
            witness = ClaimWitness{
                {a}, std::nullopt,
                "not idempotent at gamma=" + std::to_string(gamma)};
            break;
          }
        }
      }
    }
    return detail::verdict_implication(info.id, profile.order_forward,
                                       profile.is_band, std::move(witness));
  }

  if (info.id == "C10") {
    ClaimVerdict v;
    v.claim_id = info.id;
    v.holds = true;
    v.vacuous = false;  // the one-class congruence always exists
    for (const Partition& p : enumerate_semilattice_congruences(s)) {
      QuotientStructure q = quotient(s, p);
      for (int x = 0; x < s.n; ++x) {
        ElementSet t = ElementSet::empty(q.class_count());
        for (int j = 0; j < q.class_count(); ++j) {
          if (q.class_leq(p(x), j)) t.insert(j);
        }
        FilterCheck check = is_filter(q.structure, t);
        if (!check.verdict && v.holds) {
          v.holds = false;
          v.witness = ClaimWitness{
              {x}, p,
              "quotient up-set " + t.to_string() + " fails " +
                  to_string(check.witness->law)};
        }
      }
    }
    return v;
  }

  // C13: exploratory comparison of two distinguished congruences.
  Partition n_rel = principal_filter_partition(s);
  Partition smallest = smallest_semilattice_congruence(s, true);
  ClaimVerdict v;
  v.claim_id = info.id;
  v.holds = n_rel == smallest;
  v.vacuous = false;
  if (!v.holds) {
    for (int a = 0; a < s.n && !v.witness; ++a) {
      for (int b = a + 1; b < s.n; ++b) {
        if ((n_rel(a) == n_rel(b)) != (smallest(a) == smallest(b))) {
          v.witness = ClaimWitness{
              {a, b}, smallest,
              "equal-N partition " + n_rel.to_string() +
                  " vs smallest complete " + smallest.to_string()};
          break;
        }
      }
    }
  }
  return v;
}

struct SearchHit {
  PoGammaStructure structure;
  ClaimVerdict verdict;
};

//! One counterexample sweep. cfg.n and cfg.g are inclusive upper bounds: the
//! search walks every shape (n', g') with 1 <= n' <= n, 1 <= g' <= g in
//! ascending order, each shape in canonical stream order, so reports are
//! reproducible bit for bit.
struct SearchReport {
  std::string claim_id;
  EnumConfig cfg;
  std::uint64_t structures_checked = 0;
  std::uint64_t counterexamples_found = 0;
  std::vector<SearchHit> counterexamples;  // first hits, up to limit
  std::size_t limit = 0;
  bool truncated = false;
  std::chrono::milliseconds elapsed{0};
};

inline SearchReport search_counterexamples(std::string_view id,
                                           const EnumConfig& cfg,
                                           std::size_t limit = 10) {
  const ClaimInfo& info = claim_info(id);
  if (info.needs_semigroup && cfg.kind != StructureKind::semigroup) {
    throw Error("claim " + info.id + " requires a semigroup corpus");
  }
  auto start = std::chrono::steady_clock::now();

  SearchReport report;
  report.claim_id = info.id;
  report.cfg = cfg;
  report.limit = limit;

  for (int n = 1; n <= cfg.n; ++n) {
    for (int g = 1; g <= cfg.g; ++g) {
      EnumConfig shape = cfg;
      shape.n = n;
      shape.g = g;
      std::vector<PoGammaStructure> corpus = enumerate_structures(shape);
      report.structures_checked += corpus.size();

      int workers = thread_cap();
      std::vector<std::vector<SearchHit>> parts(
          static_cast<std::size_t>(workers < 1 ? 1 : workers));
      detail::parallel_chunks(
          corpus.size(), [&](int chunk, std::uint64_t begin, std::uint64_t end) {
            auto& local = parts[static_cast<std::size_t>(chunk)];
            for (std::uint64_t i = begin; i < end; ++i) {
              ClaimVerdict v = check_claim(info.id, corpus[i]);
              if (!v.holds) local.push_back({corpus[i], std::move(v)});
            }
          });
      for (auto& part : parts) {
        for (auto& hit : part) {
          ++report.counterexamples_found;
          if (report.counterexamples.size() < limit) {
            report.counterexamples.push_back(std::move(hit));
          }
        }
      }
    }
  }
  report.truncated = report.counterexamples_found > report.counterexamples.size();
  report.elapsed = std::chrono::duration_cast<std::chrono::milliseconds>(
      std::chrono::steady_clock::now() - start);
  return report;
}

}  // namespace gammalab

#endif  // GAMMALAB_CLAIMS_HPP_
