#pragma once

// Existence criteria for score vectors in every tournament class: prefix-sum
// inequalities on the given or sorted order, the loop-count condition for
// loopy tournaments, mirror-pair conditions for Hankel and skew-Hankel
// classes, and the score reductions that turn a loopy-variant question into a
// base-class question.  All checks are O(n log n); none consult enumeration.

#include <algorithm>
#include <optional>
#include <span>
#include <string_view>
#include <vector>

#include "tournament/core.hpp"

namespace tournament {

enum class FeasibilityReason {
  kFeasible,
  kPrefixSumLow,         // some prefix sum falls below its lower bound
  kTotalSumMismatch,     // the full-sum equality fails
  kLoopCountOutOfRange,  // derived loop count t outside 0..n
  kPairSumBroken,        // r_i + r_{n+1-i} misses its required value
  kPairDifferenceInvalid,  // r_i - r_{n+1-i} outside the admissible set
  kNotPalindromic,       // r_i != r_{n+1-i}
  kMiddleTermOdd,        // odd order: middle entry must be even
  kMiddleTermTooLarge,   // odd order: middle entry exceeds n-1
  kNegativeEntry,        // an entry is negative where the scan cannot see it
};

constexpr std::string_view reason_text(FeasibilityReason r) {
  switch (r) {
    case FeasibilityReason::kFeasible: return "feasible";
    case FeasibilityReason::kPrefixSumLow: return "prefix sum below bound";
    case FeasibilityReason::kTotalSumMismatch: return "total sum mismatch";
    case FeasibilityReason::kLoopCountOutOfRange: return "loop count out of range";
    case FeasibilityReason::kPairSumBroken: return "mirror pair sum broken";
    case FeasibilityReason::kPairDifferenceInvalid:
      return "mirror pair difference invalid";
    case FeasibilityReason::kNotPalindromic: return "not palindromic";
    case FeasibilityReason::kMiddleTermOdd: return "middle term odd";
    case FeasibilityReason::kMiddleTermTooLarge: return "middle term too large";
    case FeasibilityReason::kNegativeEntry: return "negative entry";
  }
  return "?";
}

struct FeasibilityReport {
  bool feasible = false;
  TournamentClass klass = TournamentClass::Plain;
  FeasibilityReason reason = FeasibilityReason::kFeasible;
  // 1-based index of the first violated condition: a prefix length, a mirror
  // pair index, or the middle index.  Present exactly when infeasible.
  std::optional<int> witness_k;
  // True when witness_k refers to positions of the sorted rearrangement.
  bool witness_in_sorted_order = false;
  // Loopy classes: the number t with loop count n - t.
  std::optional<Score> loop_count;
  // Variant classes: the reduced base-class score vector, when well-defined.
  std::optional<ScoreVector> reduced;

  static FeasibilityReport ok(TournamentClass c) {
    FeasibilityReport rep;
    rep.feasible = true;
    rep.klass = c;
    return rep;
  }
  static FeasibilityReport fail(TournamentClass c, FeasibilityReason why,
                                int witness, bool sorted = false) {
    FeasibilityReport rep;
    rep.klass = c;
    rep.reason = why;
    rep.witness_k = witness;
    rep.witness_in_sorted_order = sorted;
    return rep;
  }
};

// Least k >= 0 such that r_j >= r_i - k for all i < j; 0 for nondecreasing.
inline Score nearly_index(std::span<const Score> r) {
  Score best = 0, prefix_max = r.empty() ? 0 : r.front();
  for (std::size_t j = 1; j < r.size(); ++j) {
    best = std::max(best, prefix_max - r[j]);
    prefix_max = std::max(prefix_max, r[j]);
  }
  return best;
}

namespace detail {

// Checks sum_{i<=k} r_i >= k(k-1)/2 + max(k - t, 0) for k = 1..n, with
// equality required at k = n.  t = n disables the loop-count term.
inline FeasibilityReport prefix_scan(std::span<const Score> r, Score t,
                                     TournamentClass klass, bool sorted_order) {
  const int n = static_cast<int>(r.size());
  Score sum = 0;
  for (int k = 1; k <= n; ++k) {
    sum += r[static_cast<std::size_t>(k - 1)];
    const Score bound = static_cast<Score>(k) * (k - 1) / 2 + std::max<Score>(k - t, 0);
    if (sum < bound)
      return FeasibilityReport::fail(klass, FeasibilityReason::kPrefixSumLow, k,
                                     sorted_order);
    if (k == n && sum != bound)
      return FeasibilityReport::fail(klass, FeasibilityReason::kTotalSumMismatch,
                                     n, sorted_order);
  }
  return FeasibilityReport::ok(klass);
}

inline std::vector<Score> sorted_copy(std::span<const Score> r) {
  std::vector<Score> s(r.begin(), r.end());
  std::sort(s.begin(), s.end());
  return s;
}

}  // namespace detail

// Literal prefix-sum test on the given order: sum_{i<=k} r_i >= C(k,2) for
// all k, with equality at k = n.
inline FeasibilityReport landau_prefix_holds(std::span<const Score> r) {
  return detail::prefix_scan(r, static_cast<Score>(r.size()),
                             TournamentClass::Plain, false);
}

// Score vectors of tournaments.  Vectors that are 2-nearly nondecreasing are
// decided on the given order; anything rougher is sorted first, and the
// witness then refers to the sorted order.
inline FeasibilityReport exists_plain(std::span<const Score> r) {
  if (nearly_index(r) <= 2) return landau_prefix_holds(r);
  return detail::prefix_scan(detail::sorted_copy(r), static_cast<Score>(r.size()),
                             TournamentClass::Plain, true);
}

// Score vectors of loopy tournaments: t = C(n,2) + n - sum must lie in 0..n,
// and the sorted vector must satisfy the strengthened prefix bounds
// C(k,2) + max(k - t, 0).
inline FeasibilityReport exists_loopy(std::span<const Score> r) {
  const int n = static_cast<int>(r.size());
  Score sum = 0;
  for (Score v : r) sum += v;
  const Score t = static_cast<Score>(n) * (n - 1) / 2 + n - sum;
  if (t < 0 || t > n) {
    auto rep = FeasibilityReport::fail(TournamentClass::Loopy,
                                       FeasibilityReason::kLoopCountOutOfRange, n);
    rep.loop_count = t;
    return rep;
  }
  auto rep = detail::prefix_scan(detail::sorted_copy(r), t,
                                 TournamentClass::Loopy, true);
  rep.klass = TournamentClass::Loopy;
  rep.loop_count = t;
  return rep;
}

// Score vectors of Hankel tournaments: every mirror pair must sum to n-1 in
// the given order, and the sorted vector must satisfy the plain prefix
// bounds.
inline FeasibilityReport exists_hankel(std::span<const Score> r) {
  const int n = static_cast<int>(r.size());
  for (int i = 1; 2 * i <= n + 1; ++i) {
    const Score s = r[static_cast<std::size_t>(i - 1)] +
                    r[static_cast<std::size_t>(n - i)];
    if (s != n - 1)
      return FeasibilityReport::fail(TournamentClass::Hankel,
                                     FeasibilityReason::kPairSumBroken, i);
  }
  auto rep = detail::prefix_scan(detail::sorted_copy(r), static_cast<Score>(n),
                                 TournamentClass::Hankel, true);
  rep.klass = TournamentClass::Hankel;
  return rep;
}

// Score vectors of combinatorially skew-Hankel tournaments.  The vector must
// be palindromic in the given order; the sorted half must satisfy
// sum_{i<=k} >= k(k-1) (even order) or k(k-1) + max(k - r_mid/2, 0) (odd
// order, middle entry even, 0 <= r_mid <= n-1), with equality at the last k.
inline FeasibilityReport exists_skew_hankel(std::span<const Score> r) {
  const auto klass = TournamentClass::SkewHankel;
  const int n = static_cast<int>(r.size());
  for (int i = 1; 2 * i <= n; ++i)
    if (r[static_cast<std::size_t>(i - 1)] != r[static_cast<std::size_t>(n - i)])
      return FeasibilityReport::fail(klass, FeasibilityReason::kNotPalindromic, i);

  const int half = n / 2;
  Score mid_half = 0;  // half the middle entry; 0 disables its term
  if (n % 2 == 1) {
    const int m = (n + 1) / 2;
    const Score mid = r[static_cast<std::size_t>(m - 1)];
    if (mid < 0)
      return FeasibilityReport::fail(klass, FeasibilityReason::kNegativeEntry, m);
    if (mid % 2 != 0)
      return FeasibilityReport::fail(klass, FeasibilityReason::kMiddleTermOdd, m);
    if (mid > n - 1)
      return FeasibilityReport::fail(klass, FeasibilityReason::kMiddleTermTooLarge,
                                     m);
    mid_half = mid / 2;
  }

  std::vector<Score> h(r.begin(), r.begin() + half);
  std::sort(h.begin(), h.end());
  Score sum = 0;
  for (int k = 1; k <= half; ++k) {
    sum += h[static_cast<std::size_t>(k - 1)];
    Score bound = static_cast<Score>(k) * (k - 1);
    if (n % 2 == 1) bound += std::max<Score>(k - mid_half, 0);
    if (sum < bound)
      return FeasibilityReport::fail(klass, FeasibilityReason::kPrefixSumLow, k,
                                     true);
    if (k == half && sum != bound)
      return FeasibilityReport::fail(klass, FeasibilityReason::kTotalSumMismatch,
                                     half, true);
  }
  return FeasibilityReport::ok(klass);
}

// Reduces a loopy-variant score vector to its base class and decides
// feasibility there.  The reduced vector is reported whenever the diagonal
// pattern admits one.
inline FeasibilityReport reduce_loopy_variant(std::span<const Score> r,
                                              TournamentClass c) {
  if (!is_reduction_only(c))
    throw DomainError("reduce_loopy_variant: not a loopy-variant class");
  const int n = static_cast<int>(r.size());
  const int m = (n + 1) / 2;  // middle index when n is odd
  ScoreVector reduced(r.begin(), r.end());

  if (c == TournamentClass::HankelLoopy) {
    // Pairs sum to n-1 (no loops) or n+1 (one loop on each side); the odd
    // middle pairs with itself and sheds at most a single loop.
    for (int i = 1; 2 * i <= n + 1; ++i) {
      const Score s = r[static_cast<std::size_t>(i - 1)] +
                      r[static_cast<std::size_t>(n - i)];
      if (s == n + 1) {
        reduced[static_cast<std::size_t>(i - 1)] -= 1;
        if (i != n + 1 - i) reduced[static_cast<std::size_t>(n - i)] -= 1;
      } else if (s != n - 1) {
        return FeasibilityReport::fail(c, FeasibilityReason::kPairSumBroken, i);
      }
    }
  } else {
    for (int i = 1; 2 * i < n + 1; ++i) {
      Score& a = reduced[static_cast<std::size_t>(i - 1)];
      Score& b = reduced[static_cast<std::size_t>(n - i)];
      const Score d = a - b;
      if (c == TournamentClass::SkewHankelLoopy) {
        // Exactly one loop per mirrored pair of rows: differences are +-1.
        if (d == 1)
          a -= 1;
        else if (d == -1)
          b -= 1;
        else
          return FeasibilityReport::fail(
              c, FeasibilityReason::kPairDifferenceInvalid, i);
      } else {
        // Doubly loopy: one main-diagonal loop and one Hankel-diagonal loop
        // per pair, landing on one side (difference 2) or split (equal).
        if (d == 0) {
          a -= 1;
          b -= 1;
        } else if (d == 2) {
          a -= 2;
        } else if (d == -2) {
          b -= 2;
        } else {
          return FeasibilityReport::fail(
              c, FeasibilityReason::kPairDifferenceInvalid, i);
        }
      }
    }
    // The odd middle row: in the doubly loopy class its free loop absorbs an
    // odd middle score; in the single-loopy class it stays untouched.
    if (n % 2 == 1 && c == TournamentClass::SkewHankelDoublyLoopy)
      reduced[static_cast<std::size_t>(m - 1)] -=
          reduced[static_cast<std::size_t>(m - 1)] % 2;
  }

  FeasibilityReport rep = c == TournamentClass::HankelLoopy
                              ? exists_hankel(reduced)
                              : exists_skew_hankel(reduced);
  rep.klass = c;
  rep.reduced = std::move(reduced);
  return rep;
}

// Dispatch over all classes.
inline FeasibilityReport check_feasibility(std::span<const Score> r,
                                           TournamentClass c) {
  switch (c) {
    case TournamentClass::Plain: return exists_plain(r);
    case TournamentClass::Loopy: return exists_loopy(r);
    case TournamentClass::Hankel: return exists_hankel(r);
    case TournamentClass::SkewHankel: return exists_skew_hankel(r);
    default: return reduce_loopy_variant(r, c);
  }
}

}  // namespace tournament
