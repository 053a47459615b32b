#ifndef GAMMALAB_CORE_HPP_
#define GAMMALAB_CORE_HPP_

#include <array>
#include <bit>
#include <cstdint>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

namespace gammalab {

// Carrier elements live in 0..n-1 and element sets are 64-bit masks.
inline constexpr int kMaxElements = 64;
// all_filters / principal_filter_intersection scan all 2^n subsets.
inline constexpr int kMaxSubsetScan = 20;
// Semilattice-congruence enumeration scans all Bell(n) partitions.
inline constexpr int kMaxPartitionScan = 10;
// Exhaustive structure enumeration (backtracking over table cells).
inline constexpr int kMaxEnumN = 4;
inline constexpr int kMaxEnumG = 2;
// canonical_key scans all n! * g! simultaneous relabelings.
inline constexpr int kMaxCanonicalN = 8;
inline constexpr int kMaxCanonicalG = 3;

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

//! A subset of {0..universe-1} with constant-time membership, stored as a
//! bit mask. Iteration is always in increasing element order.
class ElementSet {
 public:
  ElementSet() = default;
  ElementSet(std::uint64_t bits, int universe) : bits_(bits), n_(universe) {
    if (universe < 0 || universe > kMaxElements) {
      throw Error("ElementSet universe out of range");
    }
    if (universe < kMaxElements && (bits >> universe) != 0) {
      throw Error("ElementSet member out of range");
    }
  }

  static ElementSet empty(int universe) { return ElementSet(0, universe); }
  static ElementSet full(int universe) {
    return ElementSet(universe == kMaxElements
                          ? ~std::uint64_t{0}
                          : (std::uint64_t{1} << universe) - 1,
                      universe);
  }
  static ElementSet single(int universe, int a) {
    ElementSet s = empty(universe);
    s.insert(a);
    return s;
  }

  int universe() const { return n_; }
  std::uint64_t bits() const { return bits_; }
  int size() const { return std::popcount(bits_); }
  bool is_empty() const { return bits_ == 0; }

  bool contains(int a) const {
    return a >= 0 && a < n_ && ((bits_ >> a) & 1u) != 0;
  }
  void insert(int a) {
    if (a < 0 || a >= n_) throw Error("element out of range");
    bits_ |= std::uint64_t{1} << a;
  }
  void remove(int a) {
    if (a < 0 || a >= n_) throw Error("element out of range");
    bits_ &= ~(std::uint64_t{1} << a);
  }

  bool subset_of(const ElementSet& other) const {
    return (bits_ & ~other.bits_) == 0;
  }

  ElementSet intersect(const ElementSet& o) const {
    return ElementSet(bits_ & o.bits_, n_);
  }
  ElementSet unite(const ElementSet& o) const {
    return ElementSet(bits_ | o.bits_, n_);
  }
  ElementSet minus(const ElementSet& o) const {
    return ElementSet(bits_ & ~o.bits_, n_);
  }

  bool operator==(const ElementSet&) const = default;

  // Minimal forward iterator over members, ascending.
  class iterator {
   public:
    iterator(std::uint64_t rest) : rest_(rest) {}
    int operator*() const { return std::countr_zero(rest_); }
    iterator& operator++() {
      rest_ &= rest_ - 1;
      return *this;
    }
    bool operator!=(const iterator& o) const { return rest_ != o.rest_; }

   private:
    std::uint64_t rest_;
  };
  iterator begin() const { return iterator(bits_); }
  iterator end() const { return iterator(0); }

  std::vector<int> members() const {
    std::vector<int> out;
    out.reserve(static_cast<std::size_t>(size()));
    for (int x : *this) out.push_back(x);
    return out;
  }

  std::string to_string() const {
    std::string out = "{";
    bool first = true;
    for (int x : *this) {
      if (!first) out += ',';
      out += std::to_string(x);
      first = false;
    }
    out += '}';
    return out;
  }

 private:
  std::uint64_t bits_ = 0;
  int n_ = 0;
};

//! Square boolean relation with mask rows: bit j of rows[i] holds i R j.
struct BoolRelation {
  int size = 0;
  std::vector<std::uint64_t> rows;

  BoolRelation() = default;
  explicit BoolRelation(int n) : size(n), rows(static_cast<std::size_t>(n), 0) {}

  static BoolRelation identity(int n) {
    BoolRelation r(n);
    for (int i = 0; i < n; ++i) r.set(i, i);
    return r;
  }

  bool at(int i, int j) const {
    return (rows[static_cast<std::size_t>(i)] >> j) & 1u;
  }
  void set(int i, int j, bool v = true) {
    if (v) {
      rows[static_cast<std::size_t>(i)] |= std::uint64_t{1} << j;
    } else {
      rows[static_cast<std::size_t>(i)] &= ~(std::uint64_t{1} << j);
    }
  }

  bool operator==(const BoolRelation&) const = default;
};

enum class StructureKind { groupoid, semigroup };

inline std::string to_string(StructureKind k) {
  return k == StructureKind::semigroup ? "semigroup" : "groupoid";
}

//! A finite carrier M = {0..n-1}, a label set Γ = {0..g-1}, one n×n
//! operation table per label, and a partial order on M. The label set
//! carries no order of its own. kind=semigroup additionally promises
//! mixed associativity (a γ b) μ c = a γ (b μ c); validate() checks it.
struct PoGammaStructure {
  int n = 0;
  int g = 0;
  // op[(gamma * n + a) * n + b] encodes a γ b.
  std::vector<std::uint8_t> op;
  BoolRelation leq;
  StructureKind kind = StructureKind::semigroup;

  int product(int gamma, int a, int b) const {
    return op[static_cast<std::size_t>((gamma * n + a) * n + b)];
  }
  void set_product(int gamma, int a, int b, int v) {
    op[static_cast<std::size_t>((gamma * n + a) * n + b)] =
        static_cast<std::uint8_t>(v);
  }
  bool less_equal(int a, int b) const { return leq.at(a, b); }

  bool operator==(const PoGammaStructure&) const = default;
};

inline PoGammaStructure make_structure(int n, int g,
                                       StructureKind kind = StructureKind::semigroup) {
  PoGammaStructure s;
  s.n = n;
  s.g = g;
  s.op.assign(static_cast<std::size_t>(g) * n * n, 0);
  s.leq = BoolRelation::identity(n);
  s.kind = kind;
  return s;
}

enum class Axiom {
  table_shape,
  order_shape,
  entry_range,
  reflexivity,
  antisymmetry,
  transitivity,
  compatibility_right,
  compatibility_left,
  associativity,
};

inline std::string to_string(Axiom a) {
  switch (a) {
    case Axiom::table_shape: return "table-shape";
    case Axiom::order_shape: return "order-shape";
    case Axiom::entry_range: return "entry-range";
    case Axiom::reflexivity: return "reflexivity";
    case Axiom::antisymmetry: return "antisymmetry";
    case Axiom::transitivity: return "transitivity";
    case Axiom::compatibility_right: return "compatibility-right";
    case Axiom::compatibility_left: return "compatibility-left";
    case Axiom::associativity: return "associativity";
  }
  return "?";
}

//! One axiom violation with the witnessing tuple. Unused positions are -1.
struct Violation {
  Axiom axiom;
  int a = -1;
  int b = -1;
  int c = -1;
  int gamma = -1;
  int mu = -1;

  // Shape and range problems are structural, not algebraic.
  bool structural() const {
    return axiom == Axiom::table_shape || axiom == Axiom::order_shape ||
           axiom == Axiom::entry_range;
  }

  std::string describe() const {
    std::ostringstream os;
    switch (axiom) {
      case Axiom::table_shape:
        os << "operation table family has the wrong shape";
        break;
      case Axiom::order_shape:
        os << "order relation has the wrong shape";
        break;
      case Axiom::entry_range:
        os << "table entry out of range at (gamma=" << gamma << ", a=" << a
           << ", b=" << b << ")";
        break;
      case Axiom::reflexivity:
        os << "reflexivity fails at (" << a << "," << a << ")";
        break;
      case Axiom::antisymmetry:
        os << "antisymmetry fails at (" << a << "," << b << ")";
        break;
      case Axiom::transitivity:
        os << "transitivity fails at (" << a << "," << b << "," << c << ")";
        break;
      case Axiom::compatibility_right:
        os << "compatibility fails: " << a << " <= " << b << " but not "
           << a << "*" << c << " <= " << b << "*" << c << " (gamma=" << gamma
           << ")";
        break;
      case Axiom::compatibility_left:
        os << "compatibility fails: " << a << " <= " << b << " but not "
           << c << "*" << a << " <= " << c << "*" << b << " (gamma=" << gamma
           << ")";
        break;
      case Axiom::associativity:
        os << "associativity fails at (a=" << a << ", gamma=" << gamma
           << ", b=" << b << ", mu=" << mu << ", c=" << c << ")";
        break;
    }
    return os.str();
  }
};

struct ValidationReport {
  std::vector<Violation> violations;
  bool ok() const { return violations.empty(); }
};

//! Checks every axiom of the declared kind: shapes and entry ranges
//! (structural), partial-order laws, two-sided compatibility, and — for
//! kind=semigroup — mixed associativity. Violations are reported in a
//! fixed canonical scan order, so witnesses are reproducible.
inline ValidationReport validate(const PoGammaStructure& s) {
  ValidationReport report;
  auto add = [&](Violation v) { report.violations.push_back(v); };

  if (s.n < 1 || s.n > kMaxElements || s.g < 1 ||
      s.op.size() != static_cast<std::size_t>(s.g) * s.n * s.n) {
    add({Axiom::table_shape});
    return report;
  }
  if (s.leq.size != s.n || s.leq.rows.size() != static_cast<std::size_t>(s.n)) {
    add({Axiom::order_shape});
    return report;
  }
  for (int a = 0; a < s.n; ++a) {
    if (s.n < kMaxElements && (s.leq.rows[static_cast<std::size_t>(a)] >> s.n) != 0) {
      add({Axiom::order_shape, a});
      return report;
    }
  }

  bool ranges_ok = true;
  for (int gamma = 0; gamma < s.g; ++gamma) {
    for (int a = 0; a < s.n; ++a) {
      for (int b = 0; b < s.n; ++b) {
        if (s.product(gamma, a, b) >= s.n) {
          Violation v{Axiom::entry_range};
          v.gamma = gamma;
          v.a = a;
          v.b = b;
          add(v);
          ranges_ok = false;
        }
      }
    }
  }
  if (!ranges_ok) return report;  // axiom scans would index out of range

  for (int a = 0; a < s.n; ++a) {
    if (!s.less_equal(a, a)) add({Axiom::reflexivity, a});
  }
  for (int a = 0; a < s.n; ++a) {
    for (int b = a + 1; b < s.n; ++b) {
      if (s.less_equal(a, b) && s.less_equal(b, a)) {
        add({Axiom::antisymmetry, a, b});
      }
    }
  }
  for (int a = 0; a < s.n; ++a) {
    for (int b = 0; b < s.n; ++b) {
      if (!s.less_equal(a, b)) continue;
      for (int c = 0; c < s.n; ++c) {
        if (s.less_equal(b, c) && !s.less_equal(a, c)) {
          add({Axiom::transitivity, a, b, c});
        }
      }
    }
  }

  for (int a = 0; a < s.n; ++a) {
    for (int b = 0; b < s.n; ++b) {
      if (a == b || !s.less_equal(a, b)) continue;
      for (int gamma = 0; gamma < s.g; ++gamma) {
        for (int c = 0; c < s.n; ++c) {
          if (!s.less_equal(s.product(gamma, a, c), s.product(gamma, b, c))) {
            Violation v{Axiom::compatibility_right, a, b, c};
            v.gamma = gamma;
            add(v);
          }
          if (!s.less_equal(s.product(gamma, c, a), s.product(gamma, c, b))) {
            Violation v{Axiom::compatibility_left, a, b, c};
            v.gamma = gamma;
            add(v);
          }
        }
      }
    }
  }

  if (s.kind == StructureKind::semigroup) {
    for (int a = 0; a < s.n; ++a) {
      for (int gamma = 0; gamma < s.g; ++gamma) {
        for (int b = 0; b < s.n; ++b) {
          for (int mu = 0; mu < s.g; ++mu) {
            for (int c = 0; c < s.n; ++c) {
              int lhs = s.product(mu, s.product(gamma, a, b), c);
              int rhs = s.product(gamma, a, s.product(mu, b, c));
              if (lhs != rhs) {
                Violation v{Axiom::associativity, a, b, c};
                v.gamma = gamma;
                v.mu = mu;
                add(v);
              }
            }
          }
        }
      }
    }
  }
  return report;
}

//! The up-set [a) = { t : t >= a }.
inline ElementSet up_set(const PoGammaStructure& s, int a) {
  if (a < 0 || a >= s.n) throw Error("up_set: element out of range");
  // Row a of leq is exactly the mask of elements above a.
  return ElementSet(s.leq.rows[static_cast<std::size_t>(a)], s.n);
}

struct StructuralProfile {
  bool is_band = false;         // a γ a = a for all a, γ
  bool is_commutative = false;  // a γ b = b γ a for all a, b, γ
  bool is_semilattice = false;  // band and commutative
  bool order_forward = false;   // a <= b implies a γ b = a for all γ
  bool order_iff = false;       // a <= b iff a γ b = a for all γ
};

inline StructuralProfile structural_profile(const PoGammaStructure& s) {
  StructuralProfile p;
  p.is_band = true;
  p.is_commutative = true;
  p.order_forward = true;
  bool backward = true;
  for (int a = 0; a < s.n; ++a) {
    for (int gamma = 0; gamma < s.g; ++gamma) {
      if (s.product(gamma, a, a) != a) p.is_band = false;
    }
  }
  for (int a = 0; a < s.n; ++a) {
    for (int b = 0; b < s.n; ++b) {
      bool absorbs = true;  // a γ b = a for every γ
      for (int gamma = 0; gamma < s.g; ++gamma) {
        if (s.product(gamma, a, b) != s.product(gamma, b, a)) {
          p.is_commutative = false;
        }
        if (s.product(gamma, a, b) != a) absorbs = false;
      }
      if (s.less_equal(a, b) && !absorbs) p.order_forward = false;
      if (absorbs && !s.less_equal(a, b)) backward = false;
    }
  }
  p.is_semilattice = p.is_band && p.is_commutative;
  p.order_iff = p.order_forward && backward;
  return p;
}

}  // namespace gammalab

#endif  // GAMMALAB_CORE_HPP_
