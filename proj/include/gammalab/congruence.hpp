#ifndef GAMMALAB_CONGRUENCE_HPP_
#define GAMMALAB_CONGRUENCE_HPP_

#include <algorithm>
#include <cassert>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "gammalab/core.hpp"
#include "gammalab/filters.hpp"

namespace gammalab {

//! An equivalence relation on the carrier, as a class assignment. Canonical
//! labeling: class ids follow the rank of each class's minimum element, so
//! class_of is a restricted growth string and equal partitions compare equal.
struct Partition {
  std::vector<int> class_of;
  int k = 0;

  int operator()(int a) const { return class_of[static_cast<std::size_t>(a)]; }
  int size() const { return static_cast<int>(class_of.size()); }

  bool is_discrete() const { return k == size(); }

  static Partition from_labels(const std::vector<int>& labels) {
    Partition p;
    p.class_of.assign(labels.size(), -1);
    std::vector<int> rename;
    for (std::size_t i = 0; i < labels.size(); ++i) {
      int label = labels[i];
      int id = -1;
      for (std::size_t j = 0; j < rename.size(); ++j) {
        if (rename[j] == label) {
          id = static_cast<int>(j);
          break;
        }
      }
      if (id < 0) {
        id = static_cast<int>(rename.size());
        rename.push_back(label);
      }
      p.class_of[i] = id;
    }
    p.k = static_cast<int>(rename.size());
    return p;
  }

  static Partition discrete(int n) {
    Partition p;
    p.class_of.resize(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) p.class_of[static_cast<std::size_t>(i)] = i;
    p.k = n;
    return p;
  }

  static Partition one_class(int n) {
    Partition p;
    p.class_of.assign(static_cast<std::size_t>(n), 0);
    p.k = n > 0 ? 1 : 0;
    return p;
  }

  ElementSet members_of(int cls) const {
    ElementSet out = ElementSet::empty(size());
    for (int a = 0; a < size(); ++a) {
      if ((*this)(a) == cls) out.insert(a);
    }
    return out;
  }

  bool operator==(const Partition&) const = default;

  std::string to_string() const {
    std::string out;
    for (int cls = 0; cls < k; ++cls) {
      if (cls > 0) out += ' ';
      out += members_of(cls).to_string();
    }
    return out;
  }
};

enum class CongruenceLaw {
  right_compatible,   // p(a)=p(b) must force p(a γ c)=p(b γ c)
  left_compatible,    // p(a)=p(b) must force p(c γ a)=p(c γ b)
  idempotent_class,   // p(a γ a)=p(a)
  commuting_classes,  // p(a γ b)=p(b γ a)
  order_complete,     // a <= b must force p(a)=p(a γ b)
};

inline std::string to_string(CongruenceLaw law) {
  switch (law) {
    case CongruenceLaw::right_compatible: return "right-compatible";
    case CongruenceLaw::left_compatible: return "left-compatible";
    case CongruenceLaw::idempotent_class: return "idempotent-class";
    case CongruenceLaw::commuting_classes: return "commuting-classes";
    case CongruenceLaw::order_complete: return "order-complete";
  }
  return "?";
}

struct CongruenceViolation {
  CongruenceLaw law;
  int a = -1;
  int b = -1;
  int c = -1;
  int gamma = -1;

  bool operator==(const CongruenceViolation&) const = default;
};

//! is_congruence: equivalence compatible on both sides with every label.
//! is_semilattice adds the two class laws (a γ a) ~ a and (a γ b) ~ (b γ a).
//! is_complete additionally asks a <= b to force a ~ (a γ b); this notion is
//! deliberately isolated behind its own flag.
struct CongruenceCheck {
  bool is_equivalence = true;  // guaranteed by the representation
  bool is_congruence = false;
  bool is_semilattice = false;
  bool is_complete = false;
  std::optional<CongruenceViolation> witness;
};

inline CongruenceCheck check_congruence(const PoGammaStructure& s,
                                        const Partition& p) {
  if (p.size() != s.n) throw Error("check_congruence: partition shape mismatch");
  CongruenceCheck out;

  std::optional<CongruenceViolation> compat_w, law_w, complete_w;
  for (int a = 0; a < s.n && !compat_w; ++a) {
    for (int b = 0; b < s.n && !compat_w; ++b) {
      if (p(a) != p(b)) continue;
      for (int c = 0; c < s.n && !compat_w; ++c) {
        for (int gamma = 0; gamma < s.g; ++gamma) {
          if (p(s.product(gamma, a, c)) != p(s.product(gamma, b, c))) {
            compat_w = CongruenceViolation{CongruenceLaw::right_compatible,
                                           a, b, c, gamma};
            break;
          }
          if (p(s.product(gamma, c, a)) != p(s.product(gamma, c, b))) {
            compat_w = CongruenceViolation{CongruenceLaw::left_compatible,
                                           a, b, c, gamma};
            break;
          }
        }
      }
    }
  }
  for (int a = 0; a < s.n && !law_w; ++a) {
    for (int gamma = 0; gamma < s.g; ++gamma) {
      if (p(s.product(gamma, a, a)) != p(a)) {
        law_w = CongruenceViolation{CongruenceLaw::idempotent_class,
                                    a, -1, -1, gamma};
        break;
      }
    }
  }
  for (int a = 0; a < s.n && !law_w; ++a) {
    for (int b = 0; b < s.n && !law_w; ++b) {
      for (int gamma = 0; gamma < s.g; ++gamma) {
        if (p(s.product(gamma, a, b)) != p(s.product(gamma, b, a))) {
          law_w = CongruenceViolation{CongruenceLaw::commuting_classes,
                                      a, b, -1, gamma};
          break;
        }
      }
    }
  }
  for (int a = 0; a < s.n && !complete_w; ++a) {
    for (int b = 0; b < s.n && !complete_w; ++b) {
      if (!s.less_equal(a, b)) continue;
      for (int gamma = 0; gamma < s.g; ++gamma) {
        if (p(a) != p(s.product(gamma, a, b))) {
          complete_w = CongruenceViolation{CongruenceLaw::order_complete,
                                           a, b, -1, gamma};
          break;
        }
      }
    }
  }

  out.is_congruence = !compat_w.has_value();
  out.is_semilattice = out.is_congruence && !law_w.has_value();
  out.is_complete = out.is_semilattice && !complete_w.has_value();
  if (compat_w) {
    out.witness = compat_w;
  } else if (law_w) {
    out.witness = law_w;
  } else if (complete_w) {
    out.witness = complete_w;
  }
  return out;
}

//! The relation identifying elements with equal principal filters,
//! a ~ b iff N(a) = N(b). For any po-Γ-semigroup this is a semilattice
//! congruence; that fact is asserted here, not assumed.
inline Partition principal_filter_partition(const PoGammaStructure& s) {
  if (s.kind != StructureKind::semigroup) {
    throw Error("principal_filter_partition: requires a semigroup "
                "(the relation need not be a congruence otherwise)");
  }
  std::vector<std::uint64_t> filters(static_cast<std::size_t>(s.n));
  for (int a = 0; a < s.n; ++a) {
    filters[static_cast<std::size_t>(a)] = principal_filter(s, a).bits();
  }
  std::vector<int> labels(static_cast<std::size_t>(s.n));
  for (int a = 0; a < s.n; ++a) {
    int label = a;
    for (int b = 0; b < a; ++b) {
      if (filters[static_cast<std::size_t>(b)] ==
          filters[static_cast<std::size_t>(a)]) {
        label = b;
        break;
      }
    }
    labels[static_cast<std::size_t>(a)] = label;
  }
  Partition p = Partition::from_labels(labels);
  CongruenceCheck check = check_congruence(s, p);
  if (!check.is_semilattice) {
    throw std::logic_error(
        "principal_filter_partition: relation failed the semilattice "
        "congruence check; this is an internal inconsistency");
  }
  return p;
}

//! Class order of a semilattice congruence: class(a) precedes class(b) iff
//! (a γ b) lands back in class(a) for every label γ. Representative
//! independence follows from the congruence laws and is asserted in debug
//! builds.
inline BoolRelation class_order(const PoGammaStructure& s, const Partition& p) {
  CongruenceCheck check = check_congruence(s, p);
  if (!check.is_semilattice) {
    throw Error("class_order: partition is not a semilattice congruence");
  }
  std::vector<int> rep(static_cast<std::size_t>(p.k), -1);
  for (int a = s.n - 1; a >= 0; --a) rep[static_cast<std::size_t>(p(a))] = a;

  BoolRelation order(p.k);
  for (int i = 0; i < p.k; ++i) {
    for (int j = 0; j < p.k; ++j) {
      bool below = true;
      int a = rep[static_cast<std::size_t>(i)];
      int b = rep[static_cast<std::size_t>(j)];
      for (int gamma = 0; gamma < s.g && below; ++gamma) {
        if (p(s.product(gamma, a, b)) != i) below = false;
      }
#ifndef NDEBUG
      for (int a2 = 0; a2 < s.n; ++a2) {
        if (p(a2) != i) continue;
        for (int b2 = 0; b2 < s.n; ++b2) {
          if (p(b2) != j) continue;
          bool below2 = true;
          for (int gamma = 0; gamma < s.g && below2; ++gamma) {
            if (p(s.product(gamma, a2, b2)) != i) below2 = false;
          }
          assert(below2 == below &&
                 "class_order: representative dependence (congruence bug)");
        }
      }
#endif
      order.set(i, j, below);
    }
  }
  return order;
}

//! The quotient of s by a semilattice congruence: classes as elements, the
//! induced tables, and the class order. Construction scans every
//! representative pair, so a well-definedness failure surfaces immediately.
struct QuotientStructure {
  PoGammaStructure structure;  // carrier = class ids
  int class_count() const { return structure.n; }
  int qop(int gamma, int i, int j) const { return structure.product(gamma, i, j); }
  bool class_leq(int i, int j) const { return structure.less_equal(i, j); }
};

inline QuotientStructure quotient(const PoGammaStructure& s, const Partition& p) {
  CongruenceCheck check = check_congruence(s, p);
  if (!check.is_semilattice) {
    throw Error("quotient: partition is not a semilattice congruence");
  }
  PoGammaStructure q = make_structure(p.k, s.g, s.kind);
  std::vector<int> assigned(static_cast<std::size_t>(s.g) * p.k * p.k, -1);
  for (int gamma = 0; gamma < s.g; ++gamma) {
    for (int a = 0; a < s.n; ++a) {
      for (int b = 0; b < s.n; ++b) {
        int cell = (gamma * p.k + p(a)) * p.k + p(b);
        int value = p(s.product(gamma, a, b));
        int& slot = assigned[static_cast<std::size_t>(cell)];
        if (slot == -1) {
          slot = value;
        } else if (slot != value) {
          throw std::logic_error(
              "quotient: induced table is not well-defined; "
              "this is an internal inconsistency");
        }
      }
    }
  }
  for (int gamma = 0; gamma < s.g; ++gamma) {
    for (int i = 0; i < p.k; ++i) {
      for (int j = 0; j < p.k; ++j) {
        q.set_product(gamma, i, j,
                      assigned[static_cast<std::size_t>((gamma * p.k + i) * p.k + j)]);
      }
    }
  }
  q.leq = class_order(s, p);

  ValidationReport report = validate(q);
  if (!report.ok()) {
    if (s.kind == StructureKind::semigroup) {
      throw std::logic_error(
          "quotient: quotient of a semigroup failed validation; "
          "this is an internal inconsistency");
    }
    throw Error("quotient: class order of this groupoid is not a "
                "compatible partial order (" +
                report.violations.front().describe() + ")");
  }
  return QuotientStructure{q};
}

//! T, the set of classes lying above class(x) in the quotient order. The
//! corrected quotient-filter theorem (claim C10) says this is always a
//! filter of M/σ; tests assert it, this operation only computes the set.
inline ElementSet quotient_upset(const PoGammaStructure& s, const Partition& p,
                                 int x) {
  if (x < 0 || x >= s.n) throw Error("quotient_upset: element out of range");
  QuotientStructure q = quotient(s, p);
  ElementSet t = ElementSet::empty(q.class_count());
  for (int j = 0; j < q.class_count(); ++j) {
    if (q.class_leq(p(x), j)) t.insert(j);
  }
  return t;
}

namespace detail {

// Restricted growth strings in lexicographic order: the all-zero string (one
// class) first, the discrete partition last. Coarser partitions precede any
// partition refining them.
inline bool next_growth_string(std::vector<int>& rgs) {
  int n = static_cast<int>(rgs.size());
  for (int i = n - 1; i >= 1; --i) {
    int max_prefix = 0;
    for (int j = 0; j < i; ++j) max_prefix = std::max(max_prefix, rgs[static_cast<std::size_t>(j)]);
    if (rgs[static_cast<std::size_t>(i)] <= max_prefix) {
      ++rgs[static_cast<std::size_t>(i)];
      for (int j = i + 1; j < n; ++j) rgs[static_cast<std::size_t>(j)] = 0;
      return true;
    }
  }
  return false;
}

}  // namespace detail

//! Every semilattice congruence of s, in lexicographic growth-string order
//! (coarsest first). Bell-number bounded, so n is capped.
inline std::vector<Partition> enumerate_semilattice_congruences(
    const PoGammaStructure& s, bool complete_only = false) {
  if (s.n > kMaxPartitionScan) {
    throw Error("enumerate_semilattice_congruences: carrier too large "
                "for partition scan");
  }
  std::vector<Partition> out;
  std::vector<int> rgs(static_cast<std::size_t>(s.n), 0);
  while (true) {
    Partition p = Partition::from_labels(rgs);
    CongruenceCheck check = check_congruence(s, p);
    if (check.is_semilattice && (!complete_only || check.is_complete)) {
      out.push_back(p);
    }
    if (!detail::next_growth_string(rgs)) break;
  }
  return out;
}

//! The common refinement (intersection as relations) of all semilattice
//! congruences — of all complete ones when the flag is set. The families of
//! defining laws are closed under intersection, so the result is itself a
//! semilattice congruence; that is asserted, not assumed.
inline Partition smallest_semilattice_congruence(const PoGammaStructure& s,
                                                 bool complete) {
  std::vector<Partition> all = enumerate_semilattice_congruences(s, complete);
  if (all.empty()) {
    // The one-class partition always qualifies, complete or not.
    throw std::logic_error("smallest_semilattice_congruence: no congruences "
                           "found; this is an internal inconsistency");
  }
  std::vector<int> labels(static_cast<std::size_t>(s.n));
  for (int a = 0; a < s.n; ++a) {
    int label = a;
    for (int b = 0; b < a; ++b) {
      bool same = true;
      for (const Partition& p : all) {
        if (p(a) != p(b)) {
          same = false;
          break;
        }
      }
      if (same) {
        label = b;
        break;
      }
    }
    labels[static_cast<std::size_t>(a)] = label;
  }
  Partition p = Partition::from_labels(labels);
  CongruenceCheck check = check_congruence(s, p);
  if (!check.is_semilattice || (complete && !check.is_complete)) {
    throw std::logic_error(
        "smallest_semilattice_congruence: intersection failed the check; "
        "this is an internal inconsistency");
  }
  return p;
}

//! Convenience overload computing the class data from the
//! same-principal-filter partition.
inline ClassUpperSets class_upper_sets(const PoGammaStructure& s, int a) {
  Partition p = principal_filter_partition(s);
  BoolRelation order = class_order(s, p);
  return class_upper_sets(s, a, p.class_of, order);
}

}  // namespace gammalab

#endif  // GAMMALAB_CONGRUENCE_HPP_
