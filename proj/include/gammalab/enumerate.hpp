#ifndef GAMMALAB_ENUMERATE_HPP_
#define GAMMALAB_ENUMERATE_HPP_

#include <algorithm>
#include <cmath>
#include <compare>
#include <cstdint>
#include <numeric>
#include <random>
#include <string>
#include <unordered_set>
#include <vector>

#include "gammalab/core.hpp"

namespace gammalab {

enum class OrderMode { all_compatible, discrete_only };

struct EnumConfig {
  int n = 1;
  int g = 1;
  OrderMode order_mode = OrderMode::all_compatible;
  bool iso_dedup = false;
  StructureKind kind = StructureKind::semigroup;

  bool operator==(const EnumConfig&) const = default;
};

// Node budget for the randomized table search before giving up.
inline constexpr std::uint64_t kRandomNodeBudget = 4'000'000;

namespace detail {

inline void ensure_config(const EnumConfig& cfg) {
  if (cfg.n < 1 || cfg.g < 1) throw Error("config: n and g must be >= 1");
  if (cfg.n > kMaxElements) throw Error("config: n exceeds element cap");
}

// Evaluates one mixed-associativity constraint on a partially filled table
// family (-1 = unassigned). Returns false only when both sides are fully
// determined and differ.
struct TableFill {
  int n;
  int g;
  std::vector<int> cells;  // (gamma * n + a) * n + b, -1 = unassigned

  int at(int gamma, int a, int b) const {
    return cells[static_cast<std::size_t>((gamma * n + a) * n + b)];
  }

  bool constraint_ok(int gamma, int mu, int a, int b, int c) const {
    int v1 = at(gamma, a, b);
    if (v1 < 0) return true;
    int lhs = at(mu, v1, c);
    if (lhs < 0) return true;
    int w1 = at(mu, b, c);
    if (w1 < 0) return true;
    int rhs = at(gamma, a, w1);
    if (rhs < 0) return true;
    return lhs == rhs;
  }

  // All constraints whose evaluation can complete upon assignment of cell
  // (lambda, x, y): the cell appears as one of the four table lookups.
  bool assignment_ok(int lambda, int x, int y) const {
    int v = at(lambda, x, y);
    for (int mu = 0; mu < g; ++mu) {
      for (int c = 0; c < n; ++c) {
        if (!constraint_ok(lambda, mu, x, y, c)) return false;
      }
    }
    for (int gamma = 0; gamma < g; ++gamma) {
      for (int a = 0; a < n; ++a) {
        if (!constraint_ok(gamma, lambda, a, x, y)) return false;
      }
    }
    for (int gamma = 0; gamma < g; ++gamma) {
      for (int a = 0; a < n; ++a) {
        for (int b = 0; b < n; ++b) {
          if (at(gamma, a, b) == x) {
            if (!constraint_ok(gamma, lambda, a, b, y)) return false;
          }
        }
      }
    }
    for (int mu = 0; mu < g; ++mu) {
      for (int b = 0; b < n; ++b) {
        for (int c = 0; c < n; ++c) {
          if (at(mu, b, c) == y) {
            if (!constraint_ok(lambda, mu, x, b, c)) return false;
          }
        }
      }
    }
    (void)v;
    return true;
  }
};

// Depth-first fill over all cells in raster order. For semigroups each
// assignment is pruned by the incremental mixed-associativity check; for
// groupoids every table family is a leaf. Emit returns false to stop early.
template <typename Emit>
bool table_dfs(TableFill& fill, int cell, int total, StructureKind kind,
               const std::vector<std::vector<int>>& value_order, Emit& emit,
               std::uint64_t* node_budget) {
  if (cell == total) {
    std::vector<std::uint8_t> table(fill.cells.begin(), fill.cells.end());
    return emit(table);
  }
  int n = fill.n;
  int gamma = cell / (n * n);
  int a = (cell / n) % n;
  int b = cell % n;
  for (int v : value_order[static_cast<std::size_t>(cell)]) {
    if (node_budget != nullptr) {
      if (*node_budget == 0) {
        throw Error("table generation budget exhausted; "
                    "the requested shape is too constrained");
      }
      --*node_budget;
    }
    fill.cells[static_cast<std::size_t>(cell)] = v;
    if (kind == StructureKind::groupoid || fill.assignment_ok(gamma, a, b)) {
      if (!table_dfs(fill, cell + 1, total, kind, value_order, emit,
                     node_budget)) {
        fill.cells[static_cast<std::size_t>(cell)] = -1;
        return false;
      }
    }
    fill.cells[static_cast<std::size_t>(cell)] = -1;
  }
  return true;
}

template <typename Emit>
bool enumerate_tables(int n, int g, StructureKind kind,
                      const std::vector<std::vector<int>>& value_order,
                      Emit&& emit, std::uint64_t* node_budget) {
  TableFill fill{n, g, std::vector<int>(static_cast<std::size_t>(g) * n * n, -1)};
  return table_dfs(fill, 0, g * n * n, kind, value_order, emit, node_budget);
}

}  // namespace detail

//! Every labeled partial order on n elements, ascending by row masks.
inline std::vector<BoolRelation> all_partial_orders(int n) {
  if (n < 1 || n > 5) throw Error("all_partial_orders: n out of range");
  std::vector<std::pair<int, int>> off_diag;
  for (int a = 0; a < n; ++a) {
    for (int b = 0; b < n; ++b) {
      if (a != b) off_diag.emplace_back(a, b);
    }
  }
  std::vector<BoolRelation> out;
  std::uint64_t total = std::uint64_t{1} << off_diag.size();
  for (std::uint64_t mask = 0; mask < total; ++mask) {
    BoolRelation r = BoolRelation::identity(n);
    for (std::size_t i = 0; i < off_diag.size(); ++i) {
      if ((mask >> i) & 1u) r.set(off_diag[i].first, off_diag[i].second);
    }
    bool ok = true;
    for (int a = 0; a < n && ok; ++a) {
      for (int b = a + 1; b < n && ok; ++b) {
        if (r.at(a, b) && r.at(b, a)) ok = false;
      }
    }
    for (int a = 0; a < n && ok; ++a) {
      for (int b = 0; b < n && ok; ++b) {
        if (!r.at(a, b)) continue;
        for (int c = 0; c < n; ++c) {
          if (r.at(b, c) && !r.at(a, c)) {
            ok = false;
            break;
          }
        }
      }
    }
    if (ok) out.push_back(r);
  }
  std::sort(out.begin(), out.end(),
            [](const BoolRelation& x, const BoolRelation& y) {
              return x.rows < y.rows;
            });
  return out;
}

//! True when the order is two-sidedly compatible with every table of s.
inline bool order_compatible(const PoGammaStructure& s) {
  for (int a = 0; a < s.n; ++a) {
    for (int b = 0; b < s.n; ++b) {
      if (a == b || !s.less_equal(a, b)) continue;
      for (int gamma = 0; gamma < s.g; ++gamma) {
        for (int c = 0; c < s.n; ++c) {
          if (!s.less_equal(s.product(gamma, a, c), s.product(gamma, b, c))) {
            return false;
          }
          if (!s.less_equal(s.product(gamma, c, a), s.product(gamma, c, b))) {
            return false;
          }
        }
      }
    }
  }
  return true;
}

//! Simultaneously relabels elements by elem_perm and labels by label_perm:
//! new index elem_perm[a] plays the role old index a played.
inline PoGammaStructure apply_relabeling(const PoGammaStructure& s,
                                         const std::vector<int>& elem_perm,
                                         const std::vector<int>& label_perm) {
  if (elem_perm.size() != static_cast<std::size_t>(s.n) ||
      label_perm.size() != static_cast<std::size_t>(s.g)) {
    throw Error("apply_relabeling: permutation shape mismatch");
  }
  PoGammaStructure out = make_structure(s.n, s.g, s.kind);
  for (int gamma = 0; gamma < s.g; ++gamma) {
    for (int a = 0; a < s.n; ++a) {
      for (int b = 0; b < s.n; ++b) {
        out.set_product(label_perm[static_cast<std::size_t>(gamma)],
                        elem_perm[static_cast<std::size_t>(a)],
                        elem_perm[static_cast<std::size_t>(b)],
                        elem_perm[static_cast<std::size_t>(s.product(gamma, a, b))]);
      }
    }
  }
  out.leq = BoolRelation(s.n);
  for (int a = 0; a < s.n; ++a) {
    for (int b = 0; b < s.n; ++b) {
      if (s.less_equal(a, b)) {
        out.leq.set(elem_perm[static_cast<std::size_t>(a)],
                    elem_perm[static_cast<std::size_t>(b)]);
      }
    }
  }
  return out;
}

//! Total-order key under simultaneous relabeling of elements and labels:
//! the lexicographically least serialized form over all n! * g! relabelings.
//! Two structures share a key exactly when they are isomorphic.
struct CanonicalKey {
  std::vector<std::uint8_t> bytes;
  auto operator<=>(const CanonicalKey&) const = default;
};

namespace detail {

inline std::vector<std::uint8_t> serialized_form(const PoGammaStructure& s) {
  std::vector<std::uint8_t> bytes;
  bytes.reserve(2 + s.op.size() + static_cast<std::size_t>(s.n) * s.n);
  bytes.push_back(static_cast<std::uint8_t>(s.n));
  bytes.push_back(static_cast<std::uint8_t>(s.g));
  bytes.insert(bytes.end(), s.op.begin(), s.op.end());
  for (int a = 0; a < s.n; ++a) {
    for (int b = 0; b < s.n; ++b) {
      bytes.push_back(s.less_equal(a, b) ? 1 : 0);
    }
  }
  return bytes;
}

}  // namespace detail

inline CanonicalKey canonical_key(const PoGammaStructure& s) {
  if (s.n > kMaxCanonicalN || s.g > kMaxCanonicalG) {
    throw Error("canonical_key: shape too large for the permutation scan");
  }
  std::vector<int> elem_perm(static_cast<std::size_t>(s.n));
  std::iota(elem_perm.begin(), elem_perm.end(), 0);
  CanonicalKey best;
  do {
    std::vector<int> label_perm(static_cast<std::size_t>(s.g));
    std::iota(label_perm.begin(), label_perm.end(), 0);
    do {
      std::vector<std::uint8_t> bytes =
          detail::serialized_form(apply_relabeling(s, elem_perm, label_perm));
      if (best.bytes.empty() || bytes < best.bytes) best.bytes = std::move(bytes);
    } while (std::next_permutation(label_perm.begin(), label_perm.end()));
  } while (std::next_permutation(elem_perm.begin(), elem_perm.end()));
  return best;
}

//! The full corpus of one shape: every table family of the requested kind
//! paired with every compatible partial order (or just the discrete order),
//! optionally deduplicated up to isomorphism. The result is sorted by
//! canonical key, so the stream order is deterministic and — with dedup —
//! keys are strictly increasing.
inline std::vector<PoGammaStructure> enumerate_structures(const EnumConfig& cfg) {
  detail::ensure_config(cfg);
  if (cfg.kind == StructureKind::semigroup) {
    if (cfg.n > kMaxEnumN || cfg.g > kMaxEnumG) {
      throw Error("enumerate_structures: exhaustive bounds are n <= 4, g <= 2");
    }
  } else {
    // No associativity pruning exists for groupoids; insist the raw table
    // space stays below 2^24 families.
    double log2_families = static_cast<double>(cfg.g) * cfg.n * cfg.n *
                           std::log2(static_cast<double>(cfg.n));
    if (cfg.n > kMaxEnumN || cfg.g > kMaxEnumG || log2_families > 24.0) {
      throw Error("enumerate_structures: groupoid table space too large");
    }
  }

  std::vector<std::vector<int>> value_order(
      static_cast<std::size_t>(cfg.g) * cfg.n * cfg.n);
  for (auto& choices : value_order) {
    choices.resize(static_cast<std::size_t>(cfg.n));
    std::iota(choices.begin(), choices.end(), 0);
  }

  std::vector<BoolRelation> orders;
  if (cfg.order_mode == OrderMode::discrete_only) {
    orders.push_back(BoolRelation::identity(cfg.n));
  } else {
    orders = all_partial_orders(cfg.n);
  }

  struct Entry {
    CanonicalKey key;
    std::vector<std::uint8_t> raw;
    PoGammaStructure s;
  };
  std::vector<Entry> entries;
  std::unordered_set<std::string> seen_keys;

  detail::enumerate_tables(
      cfg.n, cfg.g, cfg.kind, value_order,
      [&](const std::vector<std::uint8_t>& table) {
        PoGammaStructure s = make_structure(cfg.n, cfg.g, cfg.kind);
        s.op = table;
        for (const BoolRelation& order : orders) {
          s.leq = order;
          if (!order_compatible(s)) continue;
          CanonicalKey key = canonical_key(s);
          if (cfg.iso_dedup) {
            std::string packed(key.bytes.begin(), key.bytes.end());
            if (!seen_keys.insert(std::move(packed)).second) continue;
          }
          entries.push_back({key, detail::serialized_form(s), s});
        }
        return true;
      },
      nullptr);

  std::sort(entries.begin(), entries.end(), [](const Entry& x, const Entry& y) {
    if (x.key != y.key) return x.key < y.key;
    return x.raw < y.raw;
  });
  std::vector<PoGammaStructure> out;
  out.reserve(entries.size());
  for (auto& e : entries) out.push_back(std::move(e.s));
  return out;
}

namespace detail {

// Engine-independent pick so generated structures are reproducible across
// standard libraries.
inline int pick_below(std::mt19937_64& rng, int k) {
  return static_cast<int>(rng() % static_cast<std::uint64_t>(k));
}

inline void shuffle_values(std::mt19937_64& rng, std::vector<int>& v) {
  for (int i = static_cast<int>(v.size()) - 1; i > 0; --i) {
    std::swap(v[static_cast<std::size_t>(i)],
              v[static_cast<std::size_t>(pick_below(rng, i + 1))]);
  }
}

inline BoolRelation transitive_closure(BoolRelation r) {
  for (int b = 0; b < r.size; ++b) {
    for (int a = 0; a < r.size; ++a) {
      if (r.at(a, b)) {
        r.rows[static_cast<std::size_t>(a)] |= r.rows[static_cast<std::size_t>(b)];
      }
    }
  }
  return r;
}

}  // namespace detail

//! Seeded random structure of the requested shape: a randomized depth-first
//! table search (so the associativity filter can always be satisfied) plus a
//! random compatible partial order. Deterministic in (cfg, seed); throws if
//! the node budget runs out before a table is found.
inline PoGammaStructure random_structure(const EnumConfig& cfg, std::uint64_t seed,
                                         std::uint64_t budget = kRandomNodeBudget) {
  detail::ensure_config(cfg);
  std::mt19937_64 rng(seed ^ 0x9e3779b97f4a7c15ULL);
  rng.discard(8);

  std::vector<std::vector<int>> value_order(
      static_cast<std::size_t>(cfg.g) * cfg.n * cfg.n);
  for (auto& choices : value_order) {
    choices.resize(static_cast<std::size_t>(cfg.n));
    std::iota(choices.begin(), choices.end(), 0);
    detail::shuffle_values(rng, choices);
  }

  PoGammaStructure s = make_structure(cfg.n, cfg.g, cfg.kind);
  bool found = false;
  std::uint64_t remaining = budget;
  detail::enumerate_tables(
      cfg.n, cfg.g, cfg.kind, value_order,
      [&](const std::vector<std::uint8_t>& table) {
        s.op = table;
        found = true;
        return false;  // first hit wins
      },
      &remaining);
  if (!found) {
    throw Error("random_structure: generation budget exhausted");
  }

  s.leq = BoolRelation::identity(cfg.n);
  if (cfg.order_mode == OrderMode::all_compatible) {
    if (cfg.n <= 5) {
      std::vector<BoolRelation> candidates;
      for (const BoolRelation& order : all_partial_orders(cfg.n)) {
        s.leq = order;
        if (order_compatible(s)) candidates.push_back(order);
      }
      s.leq = candidates[static_cast<std::size_t>(
          detail::pick_below(rng, static_cast<int>(candidates.size())))];
    } else {
      // Grow a compatible order pair by pair from the discrete one.
      int attempts = 4 * cfg.n * cfg.n;
      for (int t = 0; t < attempts; ++t) {
        int a = detail::pick_below(rng, cfg.n);
        int b = detail::pick_below(rng, cfg.n);
        if (a == b || s.less_equal(b, a) || s.less_equal(a, b)) continue;
        BoolRelation saved = s.leq;
        s.leq.set(a, b);
        s.leq = detail::transitive_closure(s.leq);
        bool antisym = true;
        for (int x = 0; x < cfg.n && antisym; ++x) {
          for (int y = x + 1; y < cfg.n; ++y) {
            if (s.leq.at(x, y) && s.leq.at(y, x)) {
              antisym = false;
              break;
            }
          }
        }
        if (!antisym || !order_compatible(s)) s.leq = saved;
      }
    }
  }

  ValidationReport report = validate(s);
  if (!report.ok()) {
    throw std::logic_error("random_structure: generated structure failed "
                           "validation; this is an internal inconsistency");
  }
  return s;
}

//! Classical construction of a Γ-structure from an ordinary semigroup S and
//! a choice of elements to serve as labels: a γ b := (a · γ) · b. Mixed
//! associativity holds by construction and is still verified.
inline PoGammaStructure gamma_from_semigroup(const PoGammaStructure& base,
                                             const std::vector<int>& gamma_elements) {
  if (base.g != 1) {
    throw Error("gamma_from_semigroup: base must have a single table");
  }
  if (base.kind != StructureKind::semigroup || !validate(base).ok()) {
    throw Error("gamma_from_semigroup: base must be a valid ordered semigroup");
  }
  if (gamma_elements.empty()) {
    throw Error("gamma_from_semigroup: label set must be nonempty");
  }
  for (int e : gamma_elements) {
    if (e < 0 || e >= base.n) {
      throw Error("gamma_from_semigroup: label element out of range");
    }
  }
  PoGammaStructure out =
      make_structure(base.n, static_cast<int>(gamma_elements.size()),
                     StructureKind::semigroup);
  for (std::size_t i = 0; i < gamma_elements.size(); ++i) {
    int mid = gamma_elements[i];
    for (int a = 0; a < base.n; ++a) {
      for (int b = 0; b < base.n; ++b) {
        out.set_product(static_cast<int>(i), a, b,
                        base.product(0, base.product(0, a, mid), b));
      }
    }
  }
  out.leq = base.leq;
  ValidationReport report = validate(out);
  if (!report.ok()) {
    throw std::logic_error("gamma_from_semigroup: construction failed "
                           "validation; this is an internal inconsistency");
  }
  return out;
}

}  // namespace gammalab

#endif  // GAMMALAB_ENUMERATE_HPP_
