#pragma once

// Constructors: given a feasible score vector, build a tournament of the
// requested class realizing it.  Plain tournaments come from a greedy win
// assignment; loopy tournaments from a plain tournament one order up whose
// first row encodes the diagonal; Hankel and skew-Hankel tournaments from a
// recursive bordering scheme that peels off one or two indices per level and
// re-sorts with mirror-preserving permutations.  Every constructor certifies
// its output (class membership plus exact score match) and derives a chain
// trace of the reduction/sort steps on request.

#include <algorithm>
#include <numeric>
#include <span>
#include <utility>
#include <vector>

#include "tournament/core.hpp"
#include "tournament/feasibility.hpp"

namespace tournament {

enum class ChainStepKind { Reduce, Sort };

struct ChainStep {
  ChainStepKind kind;
  ScoreVector result;  // score vector after the step
  friend bool operator==(const ChainStep&, const ChainStep&) = default;
};

using ChainTrace = std::vector<ChainStep>;

// True when p commutes with the mirror pairing i <-> n+1-i.
inline bool commutes_with_mirror(const Permutation& p) {
  const int n = static_cast<int>(p.size());
  for (int i = 1; i <= n; ++i)
    if (p[static_cast<std::size_t>(n - i)] !=
        n + 1 - p[static_cast<std::size_t>(i - 1)])
      return false;
  return true;
}

// A mirror-commuting sorting permutation together with the vector it yields:
// sorted[perm(i)] = r_i.
struct PairedSortResult {
  Permutation perm;
  ScoreVector sorted;
  bool identity() const { return is_identity(perm); }
};

namespace detail {

// Selection sort of positions 1..n/2, each step swapping (i,j) together with
// the mirrored pair (n+1-i, n+1-j).  Minimal value wins, smallest index on
// ties.  orig_at[pos-1] tracks which original index sits at pos.
inline void half_selection_sort(ScoreVector& v, std::vector<int>& orig_at) {
  const int n = static_cast<int>(v.size());
  const int h = n / 2;
  auto swap_at = [&](int a, int b) {
    std::swap(v[static_cast<std::size_t>(a - 1)], v[static_cast<std::size_t>(b - 1)]);
    std::swap(orig_at[static_cast<std::size_t>(a - 1)],
              orig_at[static_cast<std::size_t>(b - 1)]);
  };
  for (int i = 1; i <= h; ++i) {
    int best = i;
    for (int j = i + 1; j <= h; ++j)
      if (v[static_cast<std::size_t>(j - 1)] < v[static_cast<std::size_t>(best - 1)])
        best = j;
    if (best != i) {
      swap_at(i, best);
      swap_at(n + 1 - i, n + 1 - best);
    }
  }
}

inline PairedSortResult finish_sort(ScoreVector v, std::vector<int> orig_at) {
  const int n = static_cast<int>(v.size());
  Permutation p(static_cast<std::size_t>(n));
  for (int pos = 1; pos <= n; ++pos)
    p[static_cast<std::size_t>(orig_at[static_cast<std::size_t>(pos - 1)] - 1)] = pos;
  return {std::move(p), std::move(v)};
}

}  // namespace detail

// Sorts the first half nondecreasingly using mirrored double swaps only; the
// second half moves along.  Palindromic input stays palindromic.
inline PairedSortResult paired_half_sort(std::span<const Score> r) {
  ScoreVector v(r.begin(), r.end());
  std::vector<int> orig_at(v.size());
  std::iota(orig_at.begin(), orig_at.end(), 1);
  detail::half_selection_sort(v, orig_at);
  return detail::finish_sort(std::move(v), std::move(orig_at));
}

// Fully sorts a vector with the mirror-pair sum property: first each mirror
// pair is oriented (swap i and n+1-i when r_i > r_{n+1-i}), then the halves
// are sorted by mirrored double swaps.  The result is nondecreasing.
inline PairedSortResult hankel_sort(std::span<const Score> r) {
  ScoreVector v(r.begin(), r.end());
  const int n = static_cast<int>(v.size());
  std::vector<int> orig_at(v.size());
  std::iota(orig_at.begin(), orig_at.end(), 1);
  for (int i = 1; 2 * i <= n; ++i) {
    if (v[static_cast<std::size_t>(i - 1)] > v[static_cast<std::size_t>(n - i)]) {
      std::swap(v[static_cast<std::size_t>(i - 1)], v[static_cast<std::size_t>(n - i)]);
      std::swap(orig_at[static_cast<std::size_t>(i - 1)],
                orig_at[static_cast<std::size_t>(n - i)]);
    }
  }
  detail::half_selection_sort(v, orig_at);
  return detail::finish_sort(std::move(v), std::move(orig_at));
}

// Score vector -> tournament.  Classical inductive construction: repeatedly
// take the index with the smallest outstanding demand, let it beat the next
// smallest ones (as many as it still needs) and lose to all larger ones,
// whose demands drop by one each.
inline BinaryMatrix build_plain(std::span<const Score> r) {
  if (!exists_plain(r).feasible)
    throw InfeasibleError("no tournament has this score vector");
  const int n = static_cast<int>(r.size());

  ScoreVector rem(r.begin(), r.end());
  std::vector<int> active(static_cast<std::size_t>(n));
  std::iota(active.begin(), active.end(), 1);

  BinaryMatrix m(n);
  while (!active.empty()) {
    std::stable_sort(active.begin(), active.end(), [&](int a, int b) {
      return rem[static_cast<std::size_t>(a - 1)] < rem[static_cast<std::size_t>(b - 1)];
    });
    const int v = active.front();
    const Score wins = rem[static_cast<std::size_t>(v - 1)];
    if (wins < 0 || wins + 1 > static_cast<Score>(active.size()))
      throw InternalError("greedy construction ran out of opponents");
    for (std::size_t k = 1; k < active.size(); ++k) {
      const int u = active[k];
      if (k <= static_cast<std::size_t>(wins)) {
        m.set(v, u, true);
      } else {
        m.set(u, v, true);
        rem[static_cast<std::size_t>(u - 1)] -= 1;
      }
    }
    active.erase(active.begin());
  }

  if (!is_member(m, TournamentClass::Plain) ||
      score_vector(m) != ScoreVector(r.begin(), r.end()))
    throw InternalError("constructed tournament fails certification");
  return m;
}

// Loopy tournament of order n -> tournament of order n+1: a new first index
// collects the diagonal (column 1 below it) and its complement (row 1).
inline BinaryMatrix lift_loopy(const BinaryMatrix& m) {
  if (!is_member(m, TournamentClass::Loopy))
    throw DomainError("lift_loopy: input is not a loopy tournament");
  const int n = m.order();
  BinaryMatrix out(n + 1);
  for (int i = 1; i <= n; ++i) {
    if (m.get(i, i))
      out.set(i + 1, 1, true);
    else
      out.set(1, i + 1, true);
    for (int j = 1; j <= n; ++j)
      if (i != j && m.get(i, j)) out.set(i + 1, j + 1, true);
  }
  return out;
}

// Inverse of lift_loopy: fold index 1 of a tournament into the diagonal.
inline BinaryMatrix fold_plain(const BinaryMatrix& m) {
  if (!is_member(m, TournamentClass::Plain))
    throw DomainError("fold_plain: input is not a tournament");
  if (m.order() < 1) throw DomainError("fold_plain: nothing to fold");
  return collapse(m, 1);
}

// Loopy score vector -> loopy tournament, via a plain tournament on the
// score vector (t, r sorted) one order up.
inline BinaryMatrix build_loopy(std::span<const Score> r) {
  const auto rep = exists_loopy(r);
  if (!rep.feasible)
    throw InfeasibleError("no loopy tournament has this score vector");

  ScoreVector lifted;
  lifted.reserve(r.size() + 1);
  lifted.push_back(*rep.loop_count);
  lifted.insert(lifted.end(), r.begin(), r.end());

  const BinaryMatrix plain = build_plain(lifted);
  BinaryMatrix m = collapse(plain, 1);

  if (!is_member(m, TournamentClass::Loopy) ||
      score_vector(m) != ScoreVector(r.begin(), r.end()))
    throw InternalError("constructed tournament fails certification");
  return m;
}

namespace detail {

inline void record_step(ChainTrace* trace, ChainStepKind kind,
                        const ScoreVector& v) {
  if (trace) trace->push_back({kind, v});
}

inline BinaryMatrix hankel_core(const ScoreVector& r, ChainTrace* trace);

// r nondecreasing with mirror pairs summing to n-1.
inline BinaryMatrix hankel_sorted_core(const ScoreVector& r, ChainTrace* trace) {
  const int n = static_cast<int>(r.size());
  if (n <= 1) return BinaryMatrix(n);
  BinaryMatrix out(n);
  ScoreVector reduced;
  std::vector<int> embed;  // core index (1-based) -> outer index

  if (n % 2 == 0) {
    // Border on indices 1 and n.  v has r_1 ones in positions n-r_1..n-1.
    const Score r1 = r.front();
    std::vector<char> v(static_cast<std::size_t>(n), 0);
    for (int i = n - static_cast<int>(r1); i <= n - 1; ++i)
      v[static_cast<std::size_t>(i - 1)] = 1;
    for (int j = 2; j <= n; ++j)
      if (v[static_cast<std::size_t>(n - j)]) out.set(1, j, true);
    for (int i = 2; i <= n; ++i)
      if (!v[static_cast<std::size_t>(n - i)]) out.set(i, 1, true);
    for (int i = 2; i <= n - 1; ++i)
      if (v[static_cast<std::size_t>(i - 1)]) out.set(i, n, true);
    for (int j = 2; j <= n - 1; ++j)
      if (!v[static_cast<std::size_t>(j - 1)]) out.set(n, j, true);
    reduced.resize(static_cast<std::size_t>(n - 2));
    embed.resize(static_cast<std::size_t>(n - 2));
    for (int i = 1; i <= n - 2; ++i) {
      reduced[static_cast<std::size_t>(i - 1)] =
          r[static_cast<std::size_t>(i)] - v[static_cast<std::size_t>(i)] - 1 +
          v[static_cast<std::size_t>(n - i - 1)];
      embed[static_cast<std::size_t>(i - 1)] = i + 1;
    }
  } else {
    // Middle cross: the middle index beats exactly the first (n-1)/2.
    const int m = (n + 1) / 2;
    for (int j = 1; j < m; ++j) out.set(m, j, true);
    for (int i = m + 1; i <= n; ++i) out.set(i, m, true);
    reduced.resize(static_cast<std::size_t>(n - 1));
    embed.resize(static_cast<std::size_t>(n - 1));
    for (int i = 1; i <= n - 1; ++i) {
      reduced[static_cast<std::size_t>(i - 1)] =
          i < m ? r[static_cast<std::size_t>(i - 1)]
                : r[static_cast<std::size_t>(i)] - 1;
      embed[static_cast<std::size_t>(i - 1)] = i < m ? i : i + 1;
    }
  }

  if (!reduced.empty()) {
    record_step(trace, ChainStepKind::Reduce, reduced);
    if (nearly_index(reduced) > 2)
      throw InternalError("border reduction lost near-monotonicity");
    if (!exists_hankel(reduced).feasible)
      throw InternalError("border reduction lost feasibility");
    const BinaryMatrix core = hankel_core(reduced, trace);
    for (int a = 1; a <= core.order(); ++a)
      for (int b = 1; b <= core.order(); ++b)
        if (core.get(a, b))
          out.set(embed[static_cast<std::size_t>(a - 1)],
                  embed[static_cast<std::size_t>(b - 1)], true);
  }
  return out;
}

inline BinaryMatrix hankel_core(const ScoreVector& r, ChainTrace* trace) {
  auto s = hankel_sort(r);
  if (s.identity()) return hankel_sorted_core(r, trace);
  record_step(trace, ChainStepKind::Sort, s.sorted);
  const BinaryMatrix sorted_m = hankel_sorted_core(s.sorted, trace);
  return permute(sorted_m, inverse_permutation(s.perm));
}

inline BinaryMatrix skew_core(const ScoreVector& r, ChainTrace* trace);

// r palindromic with nondecreasing first half.
inline BinaryMatrix skew_sorted_core(const ScoreVector& r, ChainTrace* trace) {
  const int n = static_cast<int>(r.size());
  if (n <= 1) return BinaryMatrix(n);
  BinaryMatrix out(n);
  ScoreVector reduced;
  std::vector<int> embed;

  if (n % 2 == 1) {
    // Middle cross: column m holds a palindromic pattern v, row m its
    // complement; v is 1 on positions r_m/2+1..(n-1)/2 and mirrors.
    const int m = (n + 1) / 2;
    const Score mh = r[static_cast<std::size_t>(m - 1)] / 2;
    std::vector<char> v(static_cast<std::size_t>(n), 0);
    for (int i = static_cast<int>(mh) + 1; 2 * i <= n - 1; ++i) {
      v[static_cast<std::size_t>(i - 1)] = 1;
      v[static_cast<std::size_t>(n - i)] = 1;
    }
    for (int i = 1; i <= n; ++i) {
      if (i == m) continue;
      if (v[static_cast<std::size_t>(i - 1)])
        out.set(i, m, true);
      else
        out.set(m, i, true);
    }
    reduced.reserve(static_cast<std::size_t>(n - 1));
    embed.reserve(static_cast<std::size_t>(n - 1));
    for (int i = 1; i <= n; ++i) {
      if (i == m) continue;
      reduced.push_back(r[static_cast<std::size_t>(i - 1)] -
                        v[static_cast<std::size_t>(i - 1)]);
      embed.push_back(i);
    }
  } else {
    // Border on indices 1 and n; v is 1 on the centered block of length
    // n-2-r_1 (shifted by one when r_1 is odd).
    const Score r1 = r.front();
    const int lo = 2 + static_cast<int>((r1 + 1) / 2);
    const int hi = n - 1 - static_cast<int>(r1 / 2);
    std::vector<char> v(static_cast<std::size_t>(n), 0);
    for (int i = lo; i <= hi; ++i) v[static_cast<std::size_t>(i - 1)] = 1;
    for (int j = 2; j <= n - 1; ++j)
      if (!v[static_cast<std::size_t>(n - j)]) out.set(1, j, true);
    for (int i = 2; i <= n - 1; ++i)
      if (v[static_cast<std::size_t>(n - i)]) out.set(i, 1, true);
    for (int i = 2; i <= n - 1; ++i)
      if (v[static_cast<std::size_t>(i - 1)]) out.set(i, n, true);
    for (int j = 2; j <= n - 1; ++j)
      if (!v[static_cast<std::size_t>(j - 1)]) out.set(n, j, true);
    reduced.resize(static_cast<std::size_t>(n - 2));
    embed.resize(static_cast<std::size_t>(n - 2));
    for (int i = 1; i <= n - 2; ++i) {
      reduced[static_cast<std::size_t>(i - 1)] =
          r[static_cast<std::size_t>(i)] - v[static_cast<std::size_t>(i)] -
          v[static_cast<std::size_t>(n - i - 1)];
      embed[static_cast<std::size_t>(i - 1)] = i + 1;
    }
  }

  if (!reduced.empty()) {
    record_step(trace, ChainStepKind::Reduce, reduced);
    const auto half = std::span<const Score>(reduced).first(reduced.size() / 2);
    if (nearly_index(half) > 2)
      throw InternalError("border reduction lost near-monotonicity");
    if (!exists_skew_hankel(reduced).feasible)
      throw InternalError("border reduction lost feasibility");
    const BinaryMatrix core = skew_core(reduced, trace);
    for (int a = 1; a <= core.order(); ++a)
      for (int b = 1; b <= core.order(); ++b)
        if (core.get(a, b))
          out.set(embed[static_cast<std::size_t>(a - 1)],
                  embed[static_cast<std::size_t>(b - 1)], true);
  }
  return out;
}

inline BinaryMatrix skew_core(const ScoreVector& r, ChainTrace* trace) {
  auto s = paired_half_sort(r);
  if (s.identity()) return skew_sorted_core(r, trace);
  record_step(trace, ChainStepKind::Sort, s.sorted);
  const BinaryMatrix sorted_m = skew_sorted_core(s.sorted, trace);
  return permute(sorted_m, inverse_permutation(s.perm));
}

}  // namespace detail

// Hankel score vector -> Hankel tournament.  The optional trace records the
// reduced vector after every border peel and the sorted vector whenever a
// level needed a nontrivial mirror-preserving sort.
inline BinaryMatrix build_hankel(std::span<const Score> r,
                                 ChainTrace* trace = nullptr) {
  if (!exists_hankel(r).feasible)
    throw InfeasibleError("no Hankel tournament has this score vector");
  const ScoreVector rv(r.begin(), r.end());
  BinaryMatrix m = detail::hankel_core(rv, trace);
  if (!is_member(m, TournamentClass::Hankel) || score_vector(m) != rv)
    throw InternalError("constructed tournament fails certification");
  return m;
}

// Skew-Hankel score vector -> combinatorially skew-Hankel tournament.
inline BinaryMatrix build_skew_hankel(std::span<const Score> r,
                                      ChainTrace* trace = nullptr) {
  if (!exists_skew_hankel(r).feasible)
    throw InfeasibleError("no skew-Hankel tournament has this score vector");
  const ScoreVector rv(r.begin(), r.end());
  BinaryMatrix m = detail::skew_core(rv, trace);
  if (!is_member(m, TournamentClass::SkewHankel) || score_vector(m) != rv)
    throw InternalError("constructed tournament fails certification");
  return m;
}

// Dispatch over the constructible classes; the loopy variants are
// decision-only and cannot be built directly.
inline BinaryMatrix build_tournament(std::span<const Score> r, TournamentClass c,
                                     ChainTrace* trace = nullptr) {
  switch (c) {
    case TournamentClass::Plain: return build_plain(r);
    case TournamentClass::Loopy: return build_loopy(r);
    case TournamentClass::Hankel: return build_hankel(r, trace);
    case TournamentClass::SkewHankel: return build_skew_hankel(r, trace);
    default:
      throw DomainError("construction is defined for base classes only");
  }
}

}  // namespace tournament
