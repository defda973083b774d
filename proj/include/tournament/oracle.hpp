#pragma once

// Brute-force enumeration of every matrix in a tournament class at small
// orders.  Each class is defined by forced-zero cells plus pairwise
// equal/complement ties between cells; the free choices collapse to a handful
// of independent bits, so the full class is a counter sweep.  Everything else
// in this repository is checked against these enumerations.

#include <algorithm>
#include <array>
#include <bit>
#include <cstdint>
#include <map>
#include <utility>
#include <vector>

#include "tournament/core.hpp"
#include "tournament/switches.hpp"

namespace tournament {

// Largest order this module enumerates per class; chosen so the free-bit
// count stays at most 21 (about 2M matrices).
constexpr int max_oracle_order(TournamentClass c) {
  switch (c) {
    case TournamentClass::Plain: return 7;
    case TournamentClass::Loopy: return 6;
    case TournamentClass::Hankel: return 9;
    case TournamentClass::SkewHankel: return 10;
    case TournamentClass::HankelLoopy: return 8;
    case TournamentClass::SkewHankelLoopy: return 9;
    case TournamentClass::SkewHankelDoublyLoopy: return 8;
  }
  return 0;
}

// Partition of the n*n cells into forced-zero cells and orbits of cells whose
// values are all determined by one free bit (directly or complemented).
class OrbitTable {
 public:
  OrbitTable(int n, TournamentClass c) : n_(n), klass_(c) {
    if (n < 0) throw DomainError("orbit table: negative order");
    const std::size_t cells = static_cast<std::size_t>(n) * static_cast<std::size_t>(n);
    orbit_.assign(cells, kUnvisited);
    flip_.assign(cells, 0);

    for (int i = 1; i <= n; ++i)
      for (int j = 1; j <= n; ++j) {
        const std::size_t c0 = cell(i, j);
        if (orbit_[c0] != kUnvisited) continue;
        if (forced_zero(i, j)) {
          orbit_[c0] = kForcedZero;
          continue;
        }
        // New orbit: close over the class's cell relations from (i, j).
        const int id = free_bits_++;
        orbit_cells_.emplace_back();
        assign(i, j, id, 0);
        std::vector<std::pair<int, int>> stack{{i, j}};
        while (!stack.empty()) {
          const auto [a, b] = stack.back();
          stack.pop_back();
          const std::uint8_t f = flip_[cell(a, b)];
          relations(a, b, [&](int a2, int b2, std::uint8_t rel) {
            const std::size_t c2 = cell(a2, b2);
            if (orbit_[c2] == kForcedZero)
              throw InternalError("orbit table: relation reaches a forced cell");
            if (orbit_[c2] == kUnvisited) {
              assign(a2, b2, id, static_cast<std::uint8_t>(f ^ rel));
              stack.emplace_back(a2, b2);
            } else if (orbit_[c2] != id ||
                       flip_[c2] != static_cast<std::uint8_t>(f ^ rel)) {
              throw InternalError("orbit table: inconsistent cell relations");
            }
          });
        }
      }
  }

  int order() const { return n_; }
  int free_bits() const { return free_bits_; }

  // Cells controlled by one bit, as (row, col, flip) with 1-based indices;
  // the cell value is bit XOR flip.
  const std::vector<std::array<int, 3>>& cells_of(int bit) const {
    return orbit_cells_[static_cast<std::size_t>(bit)];
  }

 private:
  static constexpr int kUnvisited = -2;
  static constexpr int kForcedZero = -1;

  std::size_t cell(int i, int j) const {
    return static_cast<std::size_t>(i - 1) * static_cast<std::size_t>(n_) +
           static_cast<std::size_t>(j - 1);
  }

  void assign(int i, int j, int id, std::uint8_t f) {
    orbit_[cell(i, j)] = id;
    flip_[cell(i, j)] = f;
    orbit_cells_[static_cast<std::size_t>(id)].push_back({i, j, f});
  }

  bool forced_zero(int i, int j) const {
    const int mir = n_ + 1 - i;
    switch (klass_) {
      case TournamentClass::Plain:
      case TournamentClass::Hankel:
        return i == j;
      case TournamentClass::SkewHankel:
        return i == j || j == mir;
      case TournamentClass::SkewHankelLoopy:
        return j == mir;  // includes the odd middle cell
      case TournamentClass::Loopy:
      case TournamentClass::HankelLoopy:
      case TournamentClass::SkewHankelDoublyLoopy:
        return false;
    }
    return false;
  }

  // Enumerates the class's binary constraints incident to cell (i, j) as
  // (row, col, rel) with rel 1 = complement, 0 = equal.
  template <typename Fn>
  void relations(int i, int j, Fn&& fn) const {
    const int n = n_;
    const int im = n + 1 - i, jm = n + 1 - j;
    const bool off_main = i != j;
    const bool off_hankel = j != im;
    switch (klass_) {
      case TournamentClass::Plain:
      case TournamentClass::Loopy:
        if (off_main) fn(j, i, 1);
        break;
      case TournamentClass::Hankel:
      case TournamentClass::HankelLoopy:
        if (off_main) fn(j, i, 1);
        fn(jm, im, 0);
        break;
      case TournamentClass::SkewHankel:
        if (off_main && off_hankel) {
          fn(j, i, 1);
          fn(im, jm, 0);
        }
        break;
      case TournamentClass::SkewHankelLoopy:
        if (!off_main) {
          if (i != im) fn(im, im, 1);  // paired loops carry exactly one 1
        } else if (off_hankel) {
          fn(j, i, 1);
          fn(im, jm, 0);
        }
        break;
      case TournamentClass::SkewHankelDoublyLoopy:
        if (!off_main) {
          if (i != im) fn(im, im, 1);
        } else if (!off_hankel) {
          fn(im, i, 1);  // Hankel-diagonal pairs carry exactly one 1
        } else {
          fn(j, i, 1);
          fn(im, jm, 0);
        }
        break;
    }
  }

  int n_;
  TournamentClass klass_;
  int free_bits_ = 0;
  std::vector<int> orbit_;
  std::vector<std::uint8_t> flip_;
  std::vector<std::vector<std::array<int, 3>>> orbit_cells_;
};

// Streams every member of the class at order n, in increasing matrix-text
// order, as `fn(const BinaryMatrix&)`.  The reference is to a scratch matrix
// reused between calls.
template <typename Fn>
void for_each_member(int n, TournamentClass c, Fn&& fn) {
  if (n < 0 || n > max_oracle_order(c))
    throw RangeError("enumeration supports class \"" +
                     std::string(class_name(c)) + "\" only up to order " +
                     std::to_string(max_oracle_order(c)));
  const OrbitTable table(n, c);
  const int k = table.free_bits();

  BinaryMatrix m(n);
  // Counter value 0: every bit is 0, so exactly the flipped cells hold 1.
  for (int b = 0; b < k; ++b)
    for (const auto& [i, j, f] : table.cells_of(b))
      if (f) m.set(i, j, true);

  // Bit b=0 was allocated first (earliest cell in reading order) and must be
  // the most significant counter bit for text order; bit b toggles when
  // counter bit (k-1-b) toggles.
  const std::uint64_t total = std::uint64_t{1} << k;
  for (std::uint64_t counter = 0;;) {
    fn(static_cast<const BinaryMatrix&>(m));
    if (++counter == total) break;
    std::uint64_t changed = counter ^ (counter - 1);  // low bits that toggled
    while (changed) {
      const int bitpos = std::countr_zero(changed);
      changed &= changed - 1;
      const int b = k - 1 - bitpos;
      const bool value = ((counter >> bitpos) & 1) != 0;
      for (const auto& [i, j, f] : table.cells_of(b))
        m.set(i, j, value != static_cast<bool>(f));
    }
  }
}

inline std::vector<BinaryMatrix> all_members(int n, TournamentClass c) {
  std::vector<BinaryMatrix> out;
  for_each_member(n, c, [&](const BinaryMatrix& m) { out.push_back(m); });
  return out;
}

inline std::vector<BinaryMatrix> members_with_scores(const ScoreVector& r,
                                                     TournamentClass c) {
  std::vector<BinaryMatrix> out;
  const int n = static_cast<int>(r.size());
  for_each_member(n, c, [&](const BinaryMatrix& m) {
    if (score_vector(m) == r) out.push_back(m);
  });
  return out;
}

// Number of members realizing each score vector, keyed in lexicographic
// score order.
inline std::map<ScoreVector, long long> score_census(int n, TournamentClass c) {
  std::map<ScoreVector, long long> census;
  ScoreVector r(static_cast<std::size_t>(n));
  for_each_member(n, c, [&](const BinaryMatrix& m) {
    for (int i = 1; i <= n; ++i) r[static_cast<std::size_t>(i - 1)] = m.row_sum(i);
    ++census[r];
  });
  return census;
}

// Ground-truth feasibility by exhaustive search.
inline bool oracle_feasible(const ScoreVector& r, TournamentClass c) {
  const int n = static_cast<int>(r.size());
  bool found = false;
  for_each_member(n, c, [&](const BinaryMatrix& m) {
    if (!found && score_vector(m) == r) found = true;
  });
  return found;
}

// ---------------------------------------------------------------------------
// Switch graph

// Summary of the graph whose vertices are all members with a fixed score
// vector and whose edges are single moves from the class vocabulary.
struct SwitchGraphReport {
  long long vertex_count = 0;
  bool connected = false;
  int diameter = 0;  // longest shortest path; -1 when disconnected
};

namespace detail {

inline SwitchGraphReport switch_graph_report(
    const std::vector<BinaryMatrix>& members, TournamentClass c,
    bool want_diameter) {
  SwitchGraphReport report;
  report.vertex_count = static_cast<long long>(members.size());
  if (members.size() <= 1) {
    report.connected = true;
    report.diameter = 0;
    return report;
  }
  const int count = static_cast<int>(members.size());
  const int n = members.front().order();

  std::map<BinaryMatrix, int> index;
  for (int v = 0; v < count; ++v)
    index.emplace(members[static_cast<std::size_t>(v)], v);

  constexpr std::array<MoveKind, 8> kAllKinds = {
      MoveKind::ThreeCycle, MoveKind::EdgeLoop,   MoveKind::FourCycle,
      MoveKind::HankelPair3, MoveKind::Hankel3Mid, MoveKind::Hankel4,
      MoveKind::SkewPair3,  MoveKind::Skew4};

  std::vector<std::vector<int>> adj(members.size());
  BinaryMatrix scratch(n);
  for (int v = 0; v < count; ++v) {
    for (const MoveKind kind : kAllKinds) {
      if (!move_allowed(kind, c)) continue;
      Move mv;
      mv.kind = kind;
      const int arity = move_arity(kind);
      std::array<int, 4> t{1, 1, 1, 1};  // odometer over all index tuples
      for (;;) {
        for (int a = 0; a < arity; ++a) mv.idx[static_cast<std::size_t>(a)] = t[static_cast<std::size_t>(a)];
        scratch = members[static_cast<std::size_t>(v)];
        bool applied = true;
        try {
          detail::apply_move_unchecked(scratch, mv);
        } catch (const PatternError&) {
          applied = false;  // tuple shape or entry pattern absent here
        }
        if (applied) {
          const auto it = index.find(scratch);
          if (it == index.end())
            throw InternalError("switch move left the score class");
          adj[static_cast<std::size_t>(v)].push_back(it->second);
        }
        int a = arity - 1;
        while (a >= 0 && ++t[static_cast<std::size_t>(a)] > n) t[static_cast<std::size_t>(a--)] = 1;
        if (a < 0) break;
      }
    }
  }

  // Breadth-first distances from one vertex; reused for every eccentricity.
  std::vector<int> dist(members.size());
  const auto bfs_farthest = [&](int source) {
    std::fill(dist.begin(), dist.end(), -1);
    dist[static_cast<std::size_t>(source)] = 0;
    std::vector<int> frontier{source};
    int depth = 0;
    while (!frontier.empty()) {
      std::vector<int> next;
      for (const int u : frontier)
        for (const int w : adj[static_cast<std::size_t>(u)])
          if (dist[static_cast<std::size_t>(w)] < 0) {
            dist[static_cast<std::size_t>(w)] = depth + 1;
            next.push_back(w);
          }
      frontier = std::move(next);
      ++depth;
    }
    int far = 0;
    for (const int d : dist) far = std::max(far, d);
    return far;
  };

  bfs_farthest(0);
  report.connected =
      std::find(dist.begin(), dist.end(), -1) == dist.end();
  if (!report.connected) {
    report.diameter = -1;
    return report;
  }
  if (want_diameter) {
    int diameter = 0;
    for (int v = 0; v < count; ++v)
      diameter = std::max(diameter, bfs_farthest(v));
    report.diameter = diameter;
  }
  return report;
}

}  // namespace detail

// Builds the switch graph on all members with score vector r by brute force
// and reports its size and connectivity.  The diameter is computed only when
// want_diameter is set (and the graph is connected); graphs on at most one
// vertex have diameter 0.
inline SwitchGraphReport switch_graph_connected(const ScoreVector& r,
                                                TournamentClass c,
                                                bool want_diameter = true) {
  if (is_reduction_only(c))
    throw DomainError("switch moves are defined for base classes only");
  return detail::switch_graph_report(members_with_scores(r, c), c,
                                     want_diameter);
}

}  // namespace tournament
