#ifndef GAMMALAB_FILTERS_HPP_
#define GAMMALAB_FILTERS_HPP_

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "gammalab/core.hpp"
#include "gammalab/parallel.hpp"

namespace gammalab {

enum class FilterLaw { nonempty, subsemigroup, factor_closed, up_closed };

inline std::string to_string(FilterLaw law) {
  switch (law) {
    case FilterLaw::nonempty: return "nonempty";
    case FilterLaw::subsemigroup: return "subsemigroup";
    case FilterLaw::factor_closed: return "factor-closed";
    case FilterLaw::up_closed: return "up-closed";
  }
  return "?";
}

struct FilterViolation {
  FilterLaw law;
  int x = -1;
  int y = -1;
  int gamma = -1;

  bool operator==(const FilterViolation&) const = default;
};

//! Result of testing one subset against the four filter laws. A filter is a
//! nonempty subsemigroup F that is factor-closed (x γ y in F forces x and y
//! into F) and upward closed under <=.
struct FilterCheck {
  bool is_nonempty = false;
  bool is_subsemigroup = false;
  bool is_factor_closed = false;
  bool is_up_closed = false;
  bool verdict = false;
  std::optional<FilterViolation> witness;
};

inline FilterCheck is_filter(const PoGammaStructure& s, const ElementSet& f) {
  if (f.universe() != s.n) throw Error("is_filter: set universe mismatch");
  FilterCheck out;
  out.is_nonempty = !f.is_empty();
  out.is_subsemigroup = true;
  out.is_factor_closed = true;
  out.is_up_closed = true;

  std::optional<FilterViolation> sub_w, factor_w, up_w;
  for (int x = 0; x < s.n && !sub_w; ++x) {
    if (!f.contains(x)) continue;
    for (int y = 0; y < s.n && !sub_w; ++y) {
      if (!f.contains(y)) continue;
      for (int gamma = 0; gamma < s.g; ++gamma) {
        if (!f.contains(s.product(gamma, x, y))) {
          sub_w = FilterViolation{FilterLaw::subsemigroup, x, y, gamma};
          break;
        }
      }
    }
  }
  for (int x = 0; x < s.n && !factor_w; ++x) {
    for (int y = 0; y < s.n && !factor_w; ++y) {
      for (int gamma = 0; gamma < s.g; ++gamma) {
        if (f.contains(s.product(gamma, x, y)) &&
            !(f.contains(x) && f.contains(y))) {
          factor_w = FilterViolation{FilterLaw::factor_closed, x, y, gamma};
          break;
        }
      }
    }
  }
  for (int x = 0; x < s.n && !up_w; ++x) {
    if (!f.contains(x)) continue;
    for (int y = 0; y < s.n; ++y) {
      if (s.less_equal(x, y) && !f.contains(y)) {
        up_w = FilterViolation{FilterLaw::up_closed, x, y};
        break;
      }
    }
  }

  out.is_subsemigroup = !sub_w.has_value();
  out.is_factor_closed = !factor_w.has_value();
  out.is_up_closed = !up_w.has_value();
  out.verdict = out.is_nonempty && out.is_subsemigroup &&
                out.is_factor_closed && out.is_up_closed;
  if (!out.verdict) {
    if (!out.is_nonempty) {
      out.witness = FilterViolation{FilterLaw::nonempty};
    } else if (sub_w) {
      out.witness = sub_w;
    } else if (factor_w) {
      out.witness = factor_w;
    } else {
      out.witness = up_w;
    }
  }
  return out;
}

namespace detail {

// One pass of a single closure rule over the current mask; returns the
// enlarged mask. Rules: 0 adds products of members, 1 adds factors of
// members (x, y whenever x γ y is in), 2 adds upper bounds of members.
inline std::uint64_t closure_rule_pass(const PoGammaStructure& s, int rule,
                                       std::uint64_t f) {
  switch (rule) {
    case 0:
      for (int x = 0; x < s.n; ++x) {
        if (!((f >> x) & 1u)) continue;
        for (int y = 0; y < s.n; ++y) {
          if (!((f >> y) & 1u)) continue;
          for (int gamma = 0; gamma < s.g; ++gamma) {
            f |= std::uint64_t{1} << s.product(gamma, x, y);
          }
        }
      }
      return f;
    case 1:
      for (int x = 0; x < s.n; ++x) {
        for (int y = 0; y < s.n; ++y) {
          for (int gamma = 0; gamma < s.g; ++gamma) {
            if ((f >> s.product(gamma, x, y)) & 1u) {
              f |= std::uint64_t{1} << x;
              f |= std::uint64_t{1} << y;
            }
          }
        }
      }
      return f;
    default:
      for (int x = 0; x < s.n; ++x) {
        if ((f >> x) & 1u) f |= s.leq.rows[static_cast<std::size_t>(x)];
      }
      return f;
  }
}

}  // namespace detail

//! Least filter containing the seed: the fixed point of repeatedly adding
//! products, factors, and upper bounds of members. The result does not
//! depend on the order the rules are applied in; rule_order exists so tests
//! can assert exactly that.
inline ElementSet filter_closure(const PoGammaStructure& s,
                                 const ElementSet& seed,
                                 const std::array<int, 3>& rule_order = {0, 1, 2}) {
  if (seed.universe() != s.n) throw Error("filter_closure: set universe mismatch");
  if (seed.is_empty()) throw Error("filter_closure: empty seed");
  std::uint64_t f = seed.bits();
  bool changed = true;
  while (changed) {
    changed = false;
    for (int rule : rule_order) {
      std::uint64_t next = detail::closure_rule_pass(s, rule, f);
      if (next != f) {
        f = next;
        changed = true;
      }
    }
  }
  return ElementSet(f, s.n);
}

//! N(a), the smallest filter containing a, by fixed-point closure.
inline ElementSet principal_filter(const PoGammaStructure& s, int a) {
  if (a < 0 || a >= s.n) throw Error("principal_filter: element out of range");
  return filter_closure(s, ElementSet::single(s.n, a));
}

//! N(a) computed the slow independent way: the intersection of every filter
//! containing a (the whole carrier always qualifies). Scans all 2^n subsets,
//! so n is capped at kMaxSubsetScan.
inline ElementSet principal_filter_intersection(const PoGammaStructure& s, int a) {
  if (a < 0 || a >= s.n) {
    throw Error("principal_filter_intersection: element out of range");
  }
  if (s.n > kMaxSubsetScan) {
    throw Error("principal_filter_intersection: carrier too large for subset scan");
  }
  std::uint64_t total = std::uint64_t{1} << s.n;
  int workers = thread_cap();
  std::vector<std::uint64_t> partial(
      static_cast<std::size_t>(workers < 1 ? 1 : workers),
      ElementSet::full(s.n).bits());
  detail::parallel_chunks(total, [&](int chunk, std::uint64_t begin, std::uint64_t end) {
    std::uint64_t acc = ElementSet::full(s.n).bits();
    for (std::uint64_t mask = begin; mask < end; ++mask) {
      if (!((mask >> a) & 1u)) continue;
      if (is_filter(s, ElementSet(mask, s.n)).verdict) acc &= mask;
    }
    partial[static_cast<std::size_t>(chunk)] = acc;
  });
  std::uint64_t acc = ElementSet::full(s.n).bits();
  for (std::uint64_t p : partial) acc &= p;
  return ElementSet(acc, s.n);
}

//! Every filter of s, in increasing bit-mask order. Always contains M.
inline std::vector<ElementSet> all_filters(const PoGammaStructure& s) {
  if (s.n > kMaxSubsetScan) {
    throw Error("all_filters: carrier too large for subset scan");
  }
  std::uint64_t total = std::uint64_t{1} << s.n;
  int workers = thread_cap();
  std::vector<std::vector<ElementSet>> parts(
      static_cast<std::size_t>(workers < 1 ? 1 : workers));
  detail::parallel_chunks(total, [&](int chunk, std::uint64_t begin, std::uint64_t end) {
    auto& local = parts[static_cast<std::size_t>(chunk)];
    for (std::uint64_t mask = begin; mask < end; ++mask) {
      ElementSet f(mask, s.n);
      if (is_filter(s, f).verdict) local.push_back(f);
    }
  });
  std::vector<ElementSet> out;
  for (auto& part : parts) {
    out.insert(out.end(), part.begin(), part.end());
  }
  return out;
}

//! For a fixed base element, the four candidate descriptions of "everything
//! strictly above": elements whose class lies strictly above the base class,
//! the same restricted to N(base), the union of the strictly-above classes,
//! and N(base) minus the base class. Whether all four always coincide is an
//! open question this toolkit searches (claim C4).
struct ClassUpperSets {
  int base = -1;
  ElementSet strictly_above;       // class strictly above the base class
  ElementSet above_in_filter;      // ... and inside N(base)
  ElementSet above_class_union;    // union of the strictly-above classes
  ElementSet filter_minus_class;   // N(base) without the base class

  bool all_equal() const {
    return strictly_above == above_in_filter &&
           strictly_above == above_class_union &&
           strictly_above == filter_minus_class;
  }
};

//! class_of assigns each element its class id, class_leq is the class order;
//! both normally come from the same-principal-filter partition (see
//! congruence.hpp for the convenience overload).
inline ClassUpperSets class_upper_sets(const PoGammaStructure& s, int a,
                                       const std::vector<int>& class_of,
                                       const BoolRelation& class_leq) {
  if (a < 0 || a >= s.n) throw Error("class_upper_sets: element out of range");
  if (class_of.size() != static_cast<std::size_t>(s.n)) {
    throw Error("class_upper_sets: class assignment shape mismatch");
  }
  ClassUpperSets out;
  out.base = a;
  out.strictly_above = ElementSet::empty(s.n);
  out.above_in_filter = ElementSet::empty(s.n);
  out.above_class_union = ElementSet::empty(s.n);
  out.filter_minus_class = ElementSet::empty(s.n);

  int ca = class_of[static_cast<std::size_t>(a)];
  auto strictly_above = [&](int cb) {
    return cb != ca && class_leq.at(ca, cb);
  };

  ElementSet na = principal_filter(s, a);
  for (int b = 0; b < s.n; ++b) {
    int cb = class_of[static_cast<std::size_t>(b)];
    if (strictly_above(cb)) {
      out.strictly_above.insert(b);
      if (na.contains(b)) out.above_in_filter.insert(b);
    }
  }
  // Union of whole classes, built class by class.
  for (int cls = 0; cls < class_leq.size; ++cls) {
    if (!strictly_above(cls)) continue;
    for (int b = 0; b < s.n; ++b) {
      if (class_of[static_cast<std::size_t>(b)] == cls) {
        out.above_class_union.insert(b);
      }
    }
  }
  for (int b : na) {
    if (class_of[static_cast<std::size_t>(b)] != ca) {
      out.filter_minus_class.insert(b);
    }
  }
  return out;
}

}  // namespace gammalab

#endif  // GAMMALAB_FILTERS_HPP_
