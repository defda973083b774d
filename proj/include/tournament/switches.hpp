#pragma once

// Score-preserving switch moves.  Each move complements a fixed set of
// entries: reversing a directed 3- or 4-cycle keeps every row sum, and the
// mirrored composites (a switch together with its mirror image) additionally
// keep the Hankel or rotational symmetry of the matrix.  Moves carry 1-based
// vertex indices, round-trip through a one-line text form, validate the
// required entry pattern before touching the matrix, and certify the class
// afterwards.

#include <array>
#include <initializer_list>
#include <span>
#include <sstream>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "tournament/core.hpp"

namespace tournament {

// ---------------------------------------------------------------------------
// Move type

enum class MoveKind {
  ThreeCycle,   // T i j k      reverse i->j->k->i
  EdgeLoop,     // EL i j       reverse i->j, move the loop from j to i
  FourCycle,    // Q i j k l    reverse i->j->k->l->i, chords untouched
  HankelPair3,  // HP3 i j k    triangle i,j,k then its mirror in reverse order
  Hankel3Mid,   // H3M i        triangle i, (n+1)/2, n+1-i
  Hankel4,      // H4 i j       reverse i->j->(n+1-j)->(n+1-i)->i
  SkewPair3,    // SP3 i j k    triangle i,j,k then its mirror in same order
  Skew4,        // S4 i j       reverse i->j->(n+1-i)->(n+1-j)->i
};

constexpr int move_arity(MoveKind k) {
  switch (k) {
    case MoveKind::ThreeCycle: return 3;
    case MoveKind::EdgeLoop: return 2;
    case MoveKind::FourCycle: return 4;
    case MoveKind::HankelPair3: return 3;
    case MoveKind::Hankel3Mid: return 1;
    case MoveKind::Hankel4: return 2;
    case MoveKind::SkewPair3: return 3;
    case MoveKind::Skew4: return 2;
  }
  return 0;
}

constexpr std::string_view move_tag(MoveKind k) {
  switch (k) {
    case MoveKind::ThreeCycle: return "T";
    case MoveKind::EdgeLoop: return "EL";
    case MoveKind::FourCycle: return "Q";
    case MoveKind::HankelPair3: return "HP3";
    case MoveKind::Hankel3Mid: return "H3M";
    case MoveKind::Hankel4: return "H4";
    case MoveKind::SkewPair3: return "SP3";
    case MoveKind::Skew4: return "S4";
  }
  return "?";
}

struct Move {
  MoveKind kind = MoveKind::ThreeCycle;
  std::array<int, 4> idx{0, 0, 0, 0};  // 1-based vertices; unused slots are 0

  static Move three_cycle(int i, int j, int k) {
    return {MoveKind::ThreeCycle, {i, j, k, 0}};
  }
  static Move edge_loop(int i, int j) {
    return {MoveKind::EdgeLoop, {i, j, 0, 0}};
  }
  static Move four_cycle(int i, int j, int k, int l) {
    return {MoveKind::FourCycle, {i, j, k, l}};
  }
  static Move hankel_pair3(int i, int j, int k) {
    return {MoveKind::HankelPair3, {i, j, k, 0}};
  }
  static Move hankel3_mid(int i) { return {MoveKind::Hankel3Mid, {i, 0, 0, 0}}; }
  static Move hankel4(int i, int j) { return {MoveKind::Hankel4, {i, j, 0, 0}}; }
  static Move skew_pair3(int i, int j, int k) {
    return {MoveKind::SkewPair3, {i, j, k, 0}};
  }
  static Move skew4(int i, int j) { return {MoveKind::Skew4, {i, j, 0, 0}}; }

  friend bool operator==(const Move&, const Move&) = default;
};

inline std::string format_move(const Move& mv) {
  std::string out{move_tag(mv.kind)};
  for (int a = 0; a < move_arity(mv.kind); ++a) {
    out += ' ';
    out += std::to_string(mv.idx[static_cast<std::size_t>(a)]);
  }
  return out;
}

inline Move parse_move(std::string_view line) {
  std::istringstream in{std::string(line)};
  std::string tag;
  if (!(in >> tag)) throw ParseError("empty move line");
  Move mv;
  bool known = false;
  for (MoveKind k :
       {MoveKind::ThreeCycle, MoveKind::EdgeLoop, MoveKind::FourCycle,
        MoveKind::HankelPair3, MoveKind::Hankel3Mid, MoveKind::Hankel4,
        MoveKind::SkewPair3, MoveKind::Skew4}) {
    if (tag == move_tag(k)) {
      mv.kind = k;
      known = true;
      break;
    }
  }
  if (!known) throw ParseError("unknown move tag '" + tag + "'");
  for (int a = 0; a < move_arity(mv.kind); ++a) {
    if (!(in >> mv.idx[static_cast<std::size_t>(a)]))
      throw ParseError("move '" + tag + "' needs " +
                       std::to_string(move_arity(mv.kind)) + " indices");
  }
  std::string extra;
  if (in >> extra) throw ParseError("trailing token '" + extra + "' after move");
  return mv;
}

inline std::vector<Move> parse_moves(std::string_view text) {
  std::vector<Move> out;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t nl = text.find('\n', pos);
    std::string_view line =
        text.substr(pos, nl == std::string_view::npos ? nl : nl - pos);
    if (line.find_first_not_of(" \t\r") != std::string_view::npos)
      out.push_back(parse_move(line));
    if (nl == std::string_view::npos) break;
    pos = nl + 1;
  }
  return out;
}

inline std::string format_moves(std::span<const Move> moves) {
  std::string out;
  for (const Move& mv : moves) {
    out += format_move(mv);
    out += '\n';
  }
  return out;
}

// Every move is reversible by another move of the same kind.
inline Move inverse_move(const Move& mv, int n) {
  const int i = mv.idx[0], j = mv.idx[1], k = mv.idx[2], l = mv.idx[3];
  switch (mv.kind) {
    case MoveKind::ThreeCycle: return Move::three_cycle(k, j, i);
    case MoveKind::EdgeLoop: return Move::edge_loop(j, i);
    case MoveKind::FourCycle: return Move::four_cycle(l, k, j, i);
    case MoveKind::HankelPair3: return Move::hankel_pair3(k, j, i);
    case MoveKind::Hankel3Mid: return Move::hankel3_mid(n + 1 - i);
    case MoveKind::Hankel4: return Move::hankel4(n + 1 - i, n + 1 - j);
    case MoveKind::SkewPair3: return Move::skew_pair3(k, j, i);
    case MoveKind::Skew4: return Move::skew4(i, n + 1 - j);
  }
  throw InternalError("unhandled move kind");
}

// ---------------------------------------------------------------------------
// Pattern validation and application

namespace detail {

struct CellReq {
  int i, j;
  bool want;
};

// A move's effect: the entries it requires and the entries it complements
// (these coincide except that required values vary).
struct MoveCells {
  std::vector<CellReq> reqs;
  std::vector<std::pair<int, int>> flips;

  void edge(int a, int b) {  // a->b must be present; both cells complement
    reqs.push_back({a, b, true});
    reqs.push_back({b, a, false});
    flips.emplace_back(a, b);
    flips.emplace_back(b, a);
  }
  void cell(int a, int b, bool want) {
    reqs.push_back({a, b, want});
    flips.emplace_back(a, b);
  }
  void cycle(std::initializer_list<int> vs) {
    const int* v = vs.begin();
    const int q = static_cast<int>(vs.size());
    for (int s = 0; s < q; ++s) edge(v[s], v[(s + 1) % q]);
  }
};

inline void check_move_indices(const Move& mv, int n) {
  const auto fail = [&](const std::string& why) {
    throw PatternError(format_move(mv) + ": " + why);
  };
  const int arity = move_arity(mv.kind);
  for (int a = 0; a < arity; ++a) {
    const int v = mv.idx[static_cast<std::size_t>(a)];
    if (v < 1 || v > n) fail("index " + std::to_string(v) + " out of range");
    for (int b = 0; b < a; ++b)
      if (mv.idx[static_cast<std::size_t>(b)] == v)
        fail("repeated index " + std::to_string(v));
  }
  const auto mir = [n](int v) { return n + 1 - v; };
  const int mid = (n + 1) / 2;
  const bool odd = n % 2 == 1;
  switch (mv.kind) {
    case MoveKind::Hankel3Mid:
      if (!odd) fail("order must be odd");
      if (mv.idx[0] == mid) fail("index must differ from the middle");
      break;
    case MoveKind::Hankel4:
    case MoveKind::Skew4:
      if (odd && (mv.idx[0] == mid || mv.idx[1] == mid))
        fail("indices must differ from the middle");
      if (mv.idx[1] == mir(mv.idx[0])) fail("indices must not be mirrors");
      break;
    case MoveKind::HankelPair3:
    case MoveKind::SkewPair3: {
      // The two triangles may share at most the self-mirrored middle vertex.
      for (int a = 0; a < 3; ++a)
        for (int b = 0; b < 3; ++b) {
          const int u = mv.idx[static_cast<std::size_t>(a)];
          const int w = mv.idx[static_cast<std::size_t>(b)];
          if (u == mir(w) && !(odd && u == mid && w == mid))
            fail("triangle collides with its mirror");
        }
      break;
    }
    default:
      break;
  }
}

// Validates indices and the entry pattern; returns the cells to complement.
// The matrix is left untouched.
inline MoveCells move_cells_checked(const BinaryMatrix& m, const Move& mv) {
  const int n = m.order();
  check_move_indices(mv, n);
  const auto mir = [n](int v) { return n + 1 - v; };
  const int mid = (n + 1) / 2;
  const int i = mv.idx[0], j = mv.idx[1], k = mv.idx[2], l = mv.idx[3];
  MoveCells cells;
  switch (mv.kind) {
    case MoveKind::ThreeCycle:
      cells.cycle({i, j, k});
      break;
    case MoveKind::EdgeLoop:
      cells.cell(i, i, false);
      cells.cell(i, j, true);
      cells.cell(j, i, false);
      cells.cell(j, j, true);
      break;
    case MoveKind::FourCycle:
      cells.cycle({i, j, k, l});
      break;
    case MoveKind::HankelPair3:
      cells.cycle({i, j, k});
      cells.cycle({mir(k), mir(j), mir(i)});
      break;
    case MoveKind::Hankel3Mid:
      cells.cycle({i, mid, mir(i)});
      break;
    case MoveKind::Hankel4:
      cells.cycle({i, j, mir(j), mir(i)});
      break;
    case MoveKind::SkewPair3:
      cells.cycle({i, j, k});
      cells.cycle({mir(i), mir(j), mir(k)});
      break;
    case MoveKind::Skew4:
      cells.cycle({i, j, mir(i), mir(j)});
      break;
  }
  for (const CellReq& req : cells.reqs) {
    if (m.get(req.i, req.j) != req.want)
      throw PatternError(format_move(mv) + ": entry (" + std::to_string(req.i) +
                         "," + std::to_string(req.j) + ") must be " +
                         (req.want ? "1" : "0"));
  }
  return cells;
}

// Pattern-checked application without the class certification; the fast path
// for callers that maintain class membership themselves.
inline void apply_move_unchecked(BinaryMatrix& m, const Move& mv) {
  const MoveCells cells = move_cells_checked(m, mv);
  for (auto [a, b] : cells.flips) m.flip(a, b);
}

}  // namespace detail

// Reverse the 3-cycle i->j->k->i.  Diagonal entries are untouched, so this
// preserves loops.
inline void apply_three_cycle(BinaryMatrix& m, int i, int j, int k) {
  detail::apply_move_unchecked(m, Move::three_cycle(i, j, k));
}

// Reverse an edge i->j from a loopless vertex to a looped one, moving the
// loop from j to i.
inline void apply_edge_loop(BinaryMatrix& m, int i, int j) {
  detail::apply_move_unchecked(m, Move::edge_loop(i, j));
}

// Reverse the 4-cycle i->j->k->l->i.  The chords (i,k) and (j,l) and the
// diagonal are untouched.
inline void apply_four_cycle(BinaryMatrix& m, int i, int j, int k, int l) {
  detail::apply_move_unchecked(m, Move::four_cycle(i, j, k, l));
}

// The move kinds that keep a member of class c inside the class.
constexpr bool move_allowed(MoveKind k, TournamentClass c) {
  switch (c) {
    case TournamentClass::Plain:
      return k == MoveKind::ThreeCycle || k == MoveKind::FourCycle;
    case TournamentClass::Loopy:
      return k == MoveKind::ThreeCycle || k == MoveKind::EdgeLoop ||
             k == MoveKind::FourCycle;
    case TournamentClass::Hankel:
      return k == MoveKind::Hankel4 || k == MoveKind::HankelPair3 ||
             k == MoveKind::Hankel3Mid;
    case TournamentClass::SkewHankel:
      return k == MoveKind::Skew4 || k == MoveKind::SkewPair3;
    default:
      return false;
  }
}

// Applies one move in place.  Throws DomainError when the move kind is not in
// the class vocabulary, PatternError when the entry pattern or index shape is
// not present (matrix untouched), and InternalError when the result leaves
// the class (matrix restored).
inline void apply_move(BinaryMatrix& m, const Move& mv, TournamentClass c) {
  if (is_reduction_only(c))
    throw DomainError("switch moves are defined for base classes only");
  if (!move_allowed(mv.kind, c))
    throw DomainError(format_move(mv) + ": move kind not allowed for class " +
                      std::string(class_name(c)));
  const detail::MoveCells cells = detail::move_cells_checked(m, mv);
  for (auto [a, b] : cells.flips) m.flip(a, b);
  if (!is_member(m, c)) {
    for (auto [a, b] : cells.flips) m.flip(a, b);
    throw InternalError(format_move(mv) + ": move left class " +
                        std::string(class_name(c)));
  }
}

// Applies a sequence of moves; a PatternError is re-thrown with the 0-based
// step index of the offending move.
inline void apply_moves(BinaryMatrix& m, std::span<const Move> moves,
                        TournamentClass c) {
  for (std::size_t s = 0; s < moves.size(); ++s) {
    try {
      apply_move(m, moves[s], c);
    } catch (const PatternError& e) {
      throw PatternError(e.what(), static_cast<int>(s));
    }
  }
}

// ---------------------------------------------------------------------------
// Move paths

// A start matrix plus a move sequence.  Valid when the start lies in the
// class and every prefix keeps both the class and the score vector.
struct MovePath {
  BinaryMatrix start;
  std::vector<Move> moves;
  TournamentClass klass = TournamentClass::Plain;
};

// Replays the path step by step, enforcing its validity contract; returns the
// final matrix.
inline BinaryMatrix replay_path(const MovePath& p) {
  if (!is_member(p.start, p.klass))
    throw DomainError("path start matrix is not in class " +
                      std::string(class_name(p.klass)));
  BinaryMatrix m = p.start;
  const ScoreVector r = score_vector(m);
  for (std::size_t s = 0; s < p.moves.size(); ++s) {
    try {
      apply_move(m, p.moves[s], p.klass);
    } catch (const PatternError& e) {
      throw PatternError(e.what(), static_cast<int>(s));
    }
    if (score_vector(m) != r)
      throw InternalError(format_move(p.moves[s]) +
                          ": move changed the score vector");
  }
  return m;
}

// The reverse walk: starts at the path's end and undoes each move.
inline MovePath inverse_path(const MovePath& p) {
  MovePath out;
  out.klass = p.klass;
  out.start = replay_path(p);
  const int n = p.start.order();
  out.moves.reserve(p.moves.size());
  for (auto it = p.moves.rbegin(); it != p.moves.rend(); ++it)
    out.moves.push_back(inverse_move(*it, n));
  return out;
}

inline std::string format_path(const MovePath& p) {
  return format_matrix(p.start) + format_moves(p.moves);
}

inline MovePath read_path(std::istream& in, TournamentClass c) {
  MovePath p;
  p.klass = c;
  p.start = read_matrix(in);
  std::string line;
  while (std::getline(in, line)) {
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    p.moves.push_back(parse_move(line));
  }
  return p;
}

inline MovePath parse_path(std::string_view text, TournamentClass c) {
  std::istringstream in{std::string(text)};
  return read_path(in, c);
}

}  // namespace tournament
