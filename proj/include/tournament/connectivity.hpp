#pragma once
// Constructive switch paths between two tournaments of the same class with
// equal score vectors.  Each class walks cycles of the difference digraph
// (entries where the start has a 1 and the destination a 0) using only moves
// from its own vocabulary, so every intermediate matrix stays in class:
//
//   plain        3-cycle reversals along difference cycles
//   loopy        lift both endpoints by one index, route as plain, translate
//                triangles through the lifted index into edge-loop moves
//   Hankel       route via the canonical construction for the score vector:
//                align the first column (even order) or the middle row (odd
//                order), peel the fixed border, recurse
//   skew-Hankel  reverse mirror-free difference cycles together with their
//                mirror images; split self-mirrored cycles with one 4-cycle
//
// Paths are replay-validated before they are returned; an algorithmic slip
// surfaces as InternalError, never as a silently wrong path.

#include <algorithm>
#include <array>
#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "tournament/construct.hpp"
#include "tournament/core.hpp"
#include "tournament/switches.hpp"

namespace tournament {

// The 1s of `from` that `to` lacks.  With equal score vectors every vertex
// has equal in- and outdegree, so the edges partition into cycles.
struct DifferenceDigraph {
  int n = 0;
  std::vector<std::pair<int, int>> edges;
};

inline DifferenceDigraph difference_digraph(const BinaryMatrix& from,
                                            const BinaryMatrix& to) {
  if (from.order() != to.order())
    throw DomainError("difference digraph needs matrices of equal order");
  DifferenceDigraph d;
  d.n = from.order();
  for (int i = 1; i <= d.n; ++i)
    for (int j = 1; j <= d.n; ++j)
      if (from.get(i, j) && !to.get(i, j)) d.edges.emplace_back(i, j);
  return d;
}

namespace detail {

// Ascending successor lists of the difference digraph.
inline std::vector<std::vector<int>> difference_successors(
    const BinaryMatrix& from, const BinaryMatrix& to) {
  const int n = from.order();
  std::vector<std::vector<int>> succ(static_cast<std::size_t>(n) + 1);
  for (int i = 1; i <= n; ++i)
    for (int j = 1; j <= n; ++j)
      if (from.get(i, j) && !to.get(i, j))
        succ[static_cast<std::size_t>(i)].push_back(j);
  return succ;
}

inline long long count_difference(const BinaryMatrix& from,
                                  const BinaryMatrix& to) {
  long long c = 0;
  for (int i = 1; i <= from.order(); ++i)
    for (int j = 1; j <= from.order(); ++j)
      if (from.get(i, j) && !to.get(i, j)) ++c;
  return c;
}

// Applies a move the path search believes is legal and records it; a pattern
// rejection here means the search itself is broken.
inline void emit_move(BinaryMatrix& cur, const Move& mv,
                      std::vector<Move>& moves) {
  try {
    apply_move_unchecked(cur, mv);
  } catch (const PatternError& err) {
    throw InternalError(std::string("path search emitted an illegal move ") +
                        format_move(mv) + ": " + err.what());
  }
  moves.push_back(mv);
}

// Reverses the directed cycle `cyc` (distinct vertices, each consecutive edge
// present in `cur`) by triangle moves built with `make`.  A long cycle is cut
// at the chord between its first and third vertices: if the chord points
// backward the front triangle is reversed now, otherwise it is deferred until
// the rest of the cycle (which then contains the chord) has been reversed.
template <typename MakeTriangle>
inline void reverse_cycle(BinaryMatrix& cur, std::vector<int> cyc,
                          MakeTriangle&& make, std::vector<Move>& moves) {
  if (cyc.size() < 3)
    throw InternalError("cycle reversal needs at least three vertices");
  std::vector<std::array<int, 3>> deferred;
  while (cyc.size() > 3) {
    const int v1 = cyc[0], v2 = cyc[1], v3 = cyc[2];
    if (cur.get(v3, v1))
      emit_move(cur, make(v1, v2, v3), moves);
    else
      deferred.push_back({v1, v2, v3});
    cyc.erase(cyc.begin() + 1);
  }
  emit_move(cur, make(cyc[0], cyc[1], cyc[2]), moves);
  for (auto it = deferred.rbegin(); it != deferred.rend(); ++it)
    emit_move(cur, make((*it)[0], (*it)[1], (*it)[2]), moves);
}

// Smallest-index simple cycle: start at the smallest vertex with an
// out-edge and follow smallest successors until a vertex repeats.
inline std::vector<int> find_cycle(const std::vector<std::vector<int>>& succ) {
  const int n = static_cast<int>(succ.size()) - 1;
  int start = 0;
  for (int v = 1; v <= n && !start; ++v)
    if (!succ[static_cast<std::size_t>(v)].empty()) start = v;
  if (!start) return {};
  std::vector<int> walk;
  std::vector<int> pos(static_cast<std::size_t>(n) + 1, -1);
  int v = start;
  while (pos[static_cast<std::size_t>(v)] < 0) {
    pos[static_cast<std::size_t>(v)] = static_cast<int>(walk.size());
    walk.push_back(v);
    const auto& out = succ[static_cast<std::size_t>(v)];
    if (out.empty())
      throw InternalError("difference digraph is not balanced");
    v = out.front();
  }
  return {walk.begin() + pos[static_cast<std::size_t>(v)], walk.end()};
}

// Shortest cycle through `through`: breadth-first search from its smallest
// successor back to it, neighbors visited in ascending order.
inline std::vector<int> find_cycle_through(
    const std::vector<std::vector<int>>& succ, int through) {
  const int n = static_cast<int>(succ.size()) - 1;
  const auto& out = succ[static_cast<std::size_t>(through)];
  if (out.empty())
    throw InternalError("no difference edge leaves the alignment vertex");
  std::vector<int> parent(static_cast<std::size_t>(n) + 1, 0);
  std::vector<int> queue{out.front()};
  parent[static_cast<std::size_t>(out.front())] = -1;
  for (std::size_t head = 0; head < queue.size(); ++head) {
    const int v = queue[head];
    for (int w : succ[static_cast<std::size_t>(v)]) {
      if (w == through) {
        std::vector<int> cyc{v};
        for (int u = v; parent[static_cast<std::size_t>(u)] != -1;) {
          u = parent[static_cast<std::size_t>(u)];
          cyc.push_back(u);
        }
        cyc.push_back(through);
        std::reverse(cyc.begin(), cyc.end());
        return cyc;  // [through, first hop, ..., last hop]
      }
      if (w != through && parent[static_cast<std::size_t>(w)] == 0) {
        parent[static_cast<std::size_t>(w)] = v;
        queue.push_back(w);
      }
    }
  }
  throw InternalError("no difference cycle returns to the alignment vertex");
}

// Applies every move of `moves` to a copy of `start` and checks the result.
inline void verify_replay(const BinaryMatrix& start,
                          const std::vector<Move>& moves,
                          const BinaryMatrix& expected) {
  BinaryMatrix cur = start;
  for (const Move& mv : moves) {
    try {
      apply_move_unchecked(cur, mv);
    } catch (const PatternError& err) {
      throw InternalError(std::string("constructed path breaks at ") +
                          format_move(mv) + ": " + err.what());
    }
  }
  if (!(cur == expected))
    throw InternalError("constructed path does not reach its destination");
}

inline void require_path_endpoints(const BinaryMatrix& from,
                                   const BinaryMatrix& to,
                                   TournamentClass klass) {
  if (!is_member(from, klass) || !is_member(to, klass))
    throw DomainError("path endpoints must both be " +
                      std::string(class_name(klass)) + " tournaments");
  if (score_vector(from) != score_vector(to))
    throw DomainError("path endpoints must share one score vector");
}

// Rewrites each move's vertex slots through `f` (kind unchanged).
template <typename F>
inline std::vector<Move> translate_moves(const std::vector<Move>& in, F&& f) {
  std::vector<Move> out;
  out.reserve(in.size());
  for (const Move& mv : in) {
    Move t = mv;
    for (int a = 0; a < move_arity(mv.kind); ++a) t.idx[a] = f(mv.idx[a]);
    out.push_back(t);
  }
  return out;
}

// Principal submatrix on the (ascending) retained indices.
inline BinaryMatrix submatrix(const BinaryMatrix& m,
                              const std::vector<int>& keep) {
  BinaryMatrix out(static_cast<int>(keep.size()));
  for (int a = 1; a <= out.order(); ++a)
    for (int b = 1; b <= out.order(); ++b)
      if (m.get(keep[static_cast<std::size_t>(a - 1)],
                keep[static_cast<std::size_t>(b - 1)]))
        out.set(a, b, true);
  return out;
}

}  // namespace detail

// ---------------------------------------------------------------------------
// Plain and loopy paths

inline MovePath path_plain(const BinaryMatrix& from, const BinaryMatrix& to) {
  detail::require_path_endpoints(from, to, TournamentClass::Plain);
  BinaryMatrix cur = from;
  std::vector<Move> moves;
  for (;;) {
    const auto succ = detail::difference_successors(cur, to);
    const std::vector<int> cyc = detail::find_cycle(succ);
    if (cyc.empty()) break;
    const long long before = detail::count_difference(cur, to);
    detail::reverse_cycle(
        cur, cyc, [](int a, int b, int c) { return Move::three_cycle(a, b, c); },
        moves);
    if (detail::count_difference(cur, to) >= before)
      throw InternalError("cycle reversal did not shrink the difference");
  }
  if (!(cur == to)) throw InternalError("plain path left a residue");
  return MovePath{from, std::move(moves), TournamentClass::Plain};
}

inline MovePath path_loopy(const BinaryMatrix& from, const BinaryMatrix& to) {
  detail::require_path_endpoints(from, to, TournamentClass::Loopy);
  const MovePath lifted = path_plain(lift_loopy(from), lift_loopy(to));
  std::vector<Move> moves;
  moves.reserve(lifted.moves.size());
  for (const Move& mv : lifted.moves) {
    std::array<int, 3> v{mv.idx[0], mv.idx[1], mv.idx[2]};
    // A triangle through the lifted index toggles one diagonal pair: rotate
    // it to the front and reread the rest as an edge-loop move.
    while (v[1] == 1 || v[2] == 1) {
      const int head = v[0];
      v = {v[1], v[2], head};
    }
    if (v[0] == 1)
      moves.push_back(Move::edge_loop(v[1] - 1, v[2] - 1));
    else
      moves.push_back(Move::three_cycle(v[0] - 1, v[1] - 1, v[2] - 1));
  }
  detail::verify_replay(from, moves, to);
  return MovePath{from, std::move(moves), TournamentClass::Loopy};
}

// ---------------------------------------------------------------------------
// Hankel paths: align on the canonical construction for the score vector.

namespace detail {

// Reverses the 4-cycle a->b->c->d->a together with its mirror image as two
// paired-triangle moves cut along a chord.  The (a,c) chord is used unless c
// is a's mirror (then its triangles would contain a mirror pair); the chord's
// current orientation decides which triangle is present first.
inline void emit_pure4_pair(BinaryMatrix& cur, int a, int b, int c, int d,
                            std::vector<Move>& moves) {
  const int n = cur.order();
  if (c == n + 1 - a) {
    if (cur.get(b, d)) {
      emit_move(cur, Move::hankel_pair3(d, a, b), moves);
      emit_move(cur, Move::hankel_pair3(b, c, d), moves);
    } else {
      emit_move(cur, Move::hankel_pair3(b, c, d), moves);
      emit_move(cur, Move::hankel_pair3(d, a, b), moves);
    }
  } else if (cur.get(a, c)) {
    emit_move(cur, Move::hankel_pair3(a, c, d), moves);
    emit_move(cur, Move::hankel_pair3(a, b, c), moves);
  } else {
    emit_move(cur, Move::hankel_pair3(a, b, c), moves);
    emit_move(cur, Move::hankel_pair3(a, c, d), moves);
  }
}

inline std::vector<Move> hankel_canonical_moves(const BinaryMatrix& start);

// Nondecreasing scores: transform `start` into build_hankel(scores).
inline std::vector<Move> hankel_canonical_sorted(const BinaryMatrix& start) {
  const int n = start.order();
  const ScoreVector r = score_vector(start);
  const BinaryMatrix target = build_hankel(r);
  const int mid = (n + 1) / 2;
  const auto mir = [n](int v) { return n + 1 - v; };
  BinaryMatrix cur = start;
  std::vector<Move> moves;
  long long guard = static_cast<long long>(n) * n * n + 16;

  if (n % 2 == 0) {
    // Push the 1s of column 1 to the bottom, one batch per round.
    const auto column_aligned = [&] {
      for (int i = 1; i <= n; ++i)
        if (cur.get(i, 1) != target.get(i, 1)) return false;
      return true;
    };
    // Progress token: single-entry batches push a column-1 one strictly
    // downward (first part grows); the forced pair batch below keeps the
    // first part but moves a doubly-filled mirror pair strictly inward.
    const auto progress_token = [&] {
      long long w = 0, d = 0;
      for (int i = 2; i <= n; ++i)
        if (cur.get(i, 1)) w += i;
      for (int p = 2; p <= n / 2; ++p)
        if (cur.get(p, 1) && cur.get(mir(p), 1)) d += p;
      return std::pair<long long, long long>(w, d);
    };
    while (!column_aligned()) {
      if (--guard < 0) throw InternalError("column alignment stalled");
      const std::pair<long long, long long> before = progress_token();
      if (!cur.get(n, 1)) {
        // Last entry empty: some mirror pair of rows both hold a 1; a
        // 4-cycle through whichever of them beats the other drops a 1 to
        // row n.
        int i = 0;
        for (int c = 2; c <= n / 2 && !i; ++c)
          if (cur.get(c, 1) && cur.get(mir(c), 1)) i = c;
        if (!i)
          throw InternalError("no mirrored pair of ones above an empty end");
        emit_move(cur,
                  cur.get(i, mir(i)) ? Move::hankel4(mir(i), 1)
                                     : Move::hankel4(i, 1),
                  moves);
      } else {
        // First out-of-place 1 and the first 0 below it.
        int i = 0, j = 0;
        for (int c = 2; c < n && !i; ++c) {
          if (!cur.get(c, 1)) continue;
          for (int z = c + 1; z <= n && !i; ++z)
            if (!cur.get(z, 1)) {
              i = c;
              j = z;
            }
        }
        if (!i) throw InternalError("misaligned column has no loose one");
        if (i < mir(i) && !cur.get(mir(i), 1)) {
          // Swap the 1 with its empty mirror row via a pure 4-cycle pair.
          int k = 0;
          for (int c = 2; c <= n - 1 && !k; ++c)
            if (c != i && c != mir(i) && !cur.get(i, c) && cur.get(mir(i), c))
              k = c;
          if (!k) throw InternalError("no witness column for the mirror swap");
          emit_pure4_pair(cur, 1, mir(i), k, i, moves);
        } else if (cur.get(j, i)) {
          emit_move(cur, Move::hankel_pair3(1, j, i), moves);
        } else {
          int k = 0;
          for (int c = 2; c <= n && !k; ++c)
            if (c != i && c != j && c != mir(i) && c != mir(j) &&
                !cur.get(i, c) && cur.get(j, c))
              k = c;
          if (!k) throw InternalError("no witness column for the row swap");
          emit_pure4_pair(cur, 1, j, k, i, moves);
        }
      }
      const std::pair<long long, long long> after = progress_token();
      if (after.first < before.first ||
          (after.first == before.first && after.second <= before.second))
        throw InternalError("column alignment batch made no progress");
    }
  } else {
    // Odd order: make the middle row beat exactly the first half.
    const auto row_mismatch = [&] {
      int c = 0;
      for (int j = 1; j <= n; ++j)
        if (cur.get(mid, j) != target.get(mid, j)) ++c;
      return c;
    };
    while (row_mismatch() > 0) {
      if (--guard < 0) throw InternalError("middle-row alignment stalled");
      const int before = row_mismatch();
      const auto succ = difference_successors(cur, target);
      const std::vector<int> cyc = find_cycle_through(succ, mid);
      const std::vector<int> iv(cyc.begin() + 1, cyc.end());
      const int i1 = iv.front();
      if (cur.get(i1, mir(i1))) {
        // The triangle middle -> i1 -> mirror(i1) is already present.
        emit_move(cur, Move::hankel3_mid(mir(i1)), moves);
      } else {
        // Walk the cycle for a vertex that beats the mirror of an earlier
        // one; chain 4-cycles back to the front, then close with the
        // middle triangle.
        int fj = -1, fh = -1;
        for (int j = 1; j < static_cast<int>(iv.size()) && fj < 0; ++j)
          for (int h = 0; h <= j; ++h)
            if (cur.get(iv[static_cast<std::size_t>(j)],
                        mir(iv[static_cast<std::size_t>(h)]))) {
              fj = j;
              fh = h;
              break;
            }
        if (fj >= 0) {
          int from_pos = fj;
          if (!cur.get(iv[static_cast<std::size_t>(fj)],
                       mir(iv[static_cast<std::size_t>(fj)]))) {
            emit_move(cur,
                      Move::hankel4(iv[static_cast<std::size_t>(fh)],
                                    mir(iv[static_cast<std::size_t>(fj)])),
                      moves);
            from_pos = fh;
          }
          for (int l = from_pos; l >= 1; --l)
            emit_move(cur,
                      Move::hankel4(iv[static_cast<std::size_t>(l - 1)],
                                    iv[static_cast<std::size_t>(l)]),
                      moves);
          emit_move(cur, Move::hankel3_mid(mir(i1)), moves);
        } else {
          // No such vertex: the cycle is mirror-free and can be reversed
          // together with its mirror image by paired triangles.
          for (std::size_t x = 0; x < cyc.size(); ++x)
            for (std::size_t y = x + 1; y < cyc.size(); ++y)
              if (cyc[x] == mir(cyc[y]))
                throw InternalError("alignment cycle is not mirror-free");
          reverse_cycle(
              cur, cyc,
              [](int a, int b, int c) { return Move::hankel_pair3(a, b, c); },
              moves);
        }
      }
      if (row_mismatch() >= before)
        throw InternalError("middle-row batch made no progress");
    }
  }

  // The border (or middle cross) now matches the canonical matrix; peel it
  // and align the core recursively.
  std::vector<int> keep;
  if (n % 2 == 0)
    for (int v = 2; v <= n - 1; ++v) keep.push_back(v);
  else
    for (int v = 1; v <= n; ++v)
      if (v != mid) keep.push_back(v);
  if (!keep.empty()) {
    const BinaryMatrix core = submatrix(cur, keep);
    const std::vector<Move> sub = hankel_canonical_moves(core);
    const auto lift = [&keep](int v) {
      return keep[static_cast<std::size_t>(v - 1)];
    };
    for (const Move& mv : translate_moves(sub, lift)) emit_move(cur, mv, moves);
  }
  if (!(cur == target))
    throw InternalError("canonical alignment missed its target");
  return moves;
}

inline std::vector<Move> hankel_canonical_moves(const BinaryMatrix& start) {
  const int n = start.order();
  const ScoreVector r = score_vector(start);
  if (n <= 2) {
    if (!(start == build_hankel(r)))
      throw InternalError("tiny class member is not canonical");
    return {};
  }
  if (std::is_sorted(r.begin(), r.end())) return hankel_canonical_sorted(start);
  // Unsorted scores: relabel with the mirror-commuting sorting permutation,
  // align the relabeled matrix, then carry the moves back.
  const PairedSortResult s = hankel_sort(r);
  const std::vector<Move> sub = hankel_canonical_sorted(permute(start, s.perm));
  const Permutation back = inverse_permutation(s.perm);
  std::vector<Move> moves = translate_moves(sub, [&back](int v) {
    return back[static_cast<std::size_t>(v - 1)];
  });
  verify_replay(start, moves, build_hankel(r));
  return moves;
}

}  // namespace detail

inline MovePath path_hankel(const BinaryMatrix& from, const BinaryMatrix& to) {
  detail::require_path_endpoints(from, to, TournamentClass::Hankel);
  std::vector<Move> moves = detail::hankel_canonical_moves(from);
  const std::vector<Move> back = detail::hankel_canonical_moves(to);
  const int n = from.order();
  moves.reserve(moves.size() + back.size());
  for (auto it = back.rbegin(); it != back.rend(); ++it)
    moves.push_back(inverse_move(*it, n));
  detail::verify_replay(from, moves, to);
  return MovePath{from, std::move(moves), TournamentClass::Hankel};
}

// ---------------------------------------------------------------------------
// Skew-Hankel paths: direct difference-cycle surgery.

inline MovePath path_skew_hankel(const BinaryMatrix& from,
                                 const BinaryMatrix& to) {
  detail::require_path_endpoints(from, to, TournamentClass::SkewHankel);
  const int n = from.order();
  const int mid = (n + 1) / 2;
  const auto mir = [n](int v) { return n + 1 - v; };
  BinaryMatrix cur = from;
  std::vector<Move> moves;
  const auto sp3 = [](int a, int b, int c) { return Move::skew_pair3(a, b, c); };
  long long guard = static_cast<long long>(n) * n * n + 16;

  if (n % 2 == 1) {
    // Align the middle row first; afterwards no difference edge touches it.
    const auto row_mismatch = [&] {
      int c = 0;
      for (int j = 1; j <= n; ++j)
        if (cur.get(mid, j) != to.get(mid, j)) ++c;
      return c;
    };
    while (row_mismatch() > 0) {
      if (--guard < 0) throw InternalError("middle-row alignment stalled");
      const int before = row_mismatch();
      const auto succ = detail::difference_successors(cur, to);
      std::vector<int> cyc = detail::find_cycle_through(succ, mid);
      // Shrink to a mirror-free cycle: while some vertex and its mirror are
      // both on the cycle, reroute through the mirrored arc between the
      // outermost such pair.
      long long inner = static_cast<long long>(n) * n + 16;
      for (;;) {
        if (--inner < 0) throw InternalError("mirror surgery stalled");
        const std::vector<int> iv(cyc.begin() + 1, cyc.end());
        const int k = static_cast<int>(iv.size());
        std::vector<int> pos(static_cast<std::size_t>(n) + 1, 0);
        for (int t = 1; t <= k; ++t)
          pos[static_cast<std::size_t>(iv[static_cast<std::size_t>(t - 1)])] = t;
        int a = 0, c = 0;
        for (int t = 1; t <= k; ++t)
          if (pos[static_cast<std::size_t>(mir(iv[static_cast<std::size_t>(t - 1)]))]) {
            if (!a) a = t;
            c = t;
          }
        if (!a) break;  // already mirror-free
        const int b = pos[static_cast<std::size_t>(mir(iv[static_cast<std::size_t>(a - 1)]))];
        const int d = pos[static_cast<std::size_t>(mir(iv[static_cast<std::size_t>(c - 1)]))];
        std::vector<int> next{mid};
        if (b < d) {
          for (int t = 1; t <= a; ++t)
            next.push_back(iv[static_cast<std::size_t>(t - 1)]);
          for (int t = b + 1; t <= d - 1; ++t)
            next.push_back(mir(iv[static_cast<std::size_t>(t - 1)]));
          for (int t = c; t <= k; ++t)
            next.push_back(iv[static_cast<std::size_t>(t - 1)]);
        } else {
          for (int t = 1; t <= d; ++t)
            next.push_back(iv[static_cast<std::size_t>(t - 1)]);
          for (int t = c + 1; t <= k; ++t)
            next.push_back(mir(iv[static_cast<std::size_t>(t - 1)]));
        }
        // The rerouted walk must still be a simple difference cycle.
        std::vector<char> seen(static_cast<std::size_t>(n) + 1, 0);
        for (int v : next) {
          if (seen[static_cast<std::size_t>(v)])
            throw InternalError("mirror surgery produced a repeated vertex");
          seen[static_cast<std::size_t>(v)] = 1;
        }
        for (std::size_t t = 0; t < next.size(); ++t) {
          const int u = next[t];
          const int w = next[(t + 1) % next.size()];
          if (!cur.get(u, w) || to.get(u, w))
            throw InternalError("mirror surgery left the difference digraph");
        }
        cyc = std::move(next);
      }
      detail::reverse_cycle(cur, cyc, sp3, moves);
      if (row_mismatch() >= before)
        throw InternalError("middle-row batch made no progress");
    }
  }

  // Reverse the remaining difference cycles in mirror pairs.
  for (;;) {
    if (--guard < 0) throw InternalError("cycle elimination stalled");
    const auto succ = detail::difference_successors(cur, to);
    int start = 0;
    for (int v = 1; v <= n && !start; ++v)
      if (!succ[static_cast<std::size_t>(v)].empty()) start = v;
    if (!start) break;
    const long long before = detail::count_difference(cur, to);

    // Grow a mirror-free path greedily until every successor of its tip
    // lands on the path or on a mirror of it.
    std::vector<int> walk{start};
    std::vector<int> pos(static_cast<std::size_t>(n) + 1, 0);
    pos[static_cast<std::size_t>(start)] = 1;
    int blocked = 0;
    for (;;) {
      const int v = walk.back();
      const auto& out = succ[static_cast<std::size_t>(v)];
      if (out.empty()) throw InternalError("difference digraph is not balanced");
      int ext = 0;
      for (int w : out)
        if (!pos[static_cast<std::size_t>(w)] &&
            !pos[static_cast<std::size_t>(mir(w))]) {
          ext = w;
          break;
        }
      if (!ext) {
        blocked = out.front();
        break;
      }
      walk.push_back(ext);
      pos[static_cast<std::size_t>(ext)] = static_cast<int>(walk.size());
    }

    if (pos[static_cast<std::size_t>(blocked)]) {
      // The tip closes a mirror-free cycle; reverse it (the paired halves
      // of each triangle move reverse the mirror cycle alongside).
      const int s = pos[static_cast<std::size_t>(blocked)];
      detail::reverse_cycle(
          cur, std::vector<int>(walk.begin() + (s - 1), walk.end()), sp3,
          moves);
    } else {
      // The tip hits the mirror of a path vertex: a self-mirrored cycle.
      // One 4-cycle move splits it; the remainder is a mirror pair of
      // ordinary cycles.
      const int s = pos[static_cast<std::size_t>(mir(blocked))];
      if (!s) throw InternalError("blocked walk found no anchor");
      const std::vector<int> iv(walk.begin() + (s - 1), walk.end());
      const int q = static_cast<int>(iv.size());
      if (q < 2) throw InternalError("self-mirrored cycle is degenerate");
      const int i1 = iv[0], i2 = iv[1];
      if (cur.get(mir(i2), i1)) {
        detail::emit_move(cur, Move::skew4(i1, i2), moves);
        if (q > 2) {
          std::vector<int> rest(iv.begin() + 1, iv.end());
          rest.push_back(mir(i1));
          detail::reverse_cycle(cur, rest, sp3, moves);
        }
      } else {
        std::vector<int> rest{i1};
        for (int t = 2; t <= q; ++t)
          rest.push_back(mir(iv[static_cast<std::size_t>(t - 1)]));
        detail::reverse_cycle(cur, rest, sp3, moves);
        detail::emit_move(cur, Move::skew4(i1, i2), moves);
      }
    }
    if (detail::count_difference(cur, to) >= before)
      throw InternalError("cycle elimination made no progress");
  }

  if (!(cur == to)) throw InternalError("skew path left a residue");
  detail::verify_replay(from, moves, to);
  return MovePath{from, std::move(moves), TournamentClass::SkewHankel};
}

// ---------------------------------------------------------------------------

// Class dispatcher.  The reduction-only variants have no switch vocabulary.
inline MovePath find_path(const BinaryMatrix& from, const BinaryMatrix& to,
                          TournamentClass klass) {
  switch (klass) {
    case TournamentClass::Plain:
      return path_plain(from, to);
    case TournamentClass::Loopy:
      return path_loopy(from, to);
    case TournamentClass::Hankel:
      return path_hankel(from, to);
    case TournamentClass::SkewHankel:
      return path_skew_hankel(from, to);
    default:
      throw DomainError("switch moves are defined for base classes only");
  }
}

}  // namespace tournament
