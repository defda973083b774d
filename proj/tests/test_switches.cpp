#include <catch2/catch_amalgamated.hpp>

#include <algorithm>
#include <vector>

#include "helpers.hpp"
#include "tournament/oracle.hpp"
#include "tournament/switches.hpp"

using namespace tournament;
using test_util::mat;

namespace {

// Hankel pair of order 7 with score vector (1,2,2,3,4,4,5) connected by
// [H4 7 5, HP3 3 2 1, H3M 6].
BinaryMatrix hankel7_a() {
  return mat({"0000001", "1000010", "1100000", "1110000", "1111000", "1011100",
              "0111110"});
}

BinaryMatrix hankel7_b() {
  return mat({"0100000", "0011000", "1000100", "1010010", "1101010", "1110001",
              "1111100"});
}

// Skew pair of order 5 with score vector (1,2,2,2,1) connected by [SP3 1 3 4].
BinaryMatrix skew5_a() {
  return mat({"00100", "10001", "01010", "10001", "00100"});
}

BinaryMatrix skew5_b() {
  return mat({"00010", "10100", "10001", "00101", "01000"});
}

// All moves of the class vocabulary over every index tuple, valid or not.
std::vector<Move> all_moves(int n, TournamentClass c) {
  std::vector<Move> out;
  const auto each_pair = [&](auto&& fn) {
    for (int i = 1; i <= n; ++i)
      for (int j = 1; j <= n; ++j)
        if (i != j) fn(i, j);
  };
  const auto each_triple = [&](auto&& fn) {
    for (int i = 1; i <= n; ++i)
      for (int j = 1; j <= n; ++j)
        for (int k = 1; k <= n; ++k)
          if (i != j && i != k && j != k) fn(i, j, k);
  };
  switch (c) {
    case TournamentClass::Plain:
    case TournamentClass::Loopy:
      each_triple([&](int i, int j, int k) {
        out.push_back(Move::three_cycle(i, j, k));
        for (int l = 1; l <= n; ++l)
          if (l != i && l != j && l != k)
            out.push_back(Move::four_cycle(i, j, k, l));
      });
      if (c == TournamentClass::Loopy)
        each_pair([&](int i, int j) { out.push_back(Move::edge_loop(i, j)); });
      break;
    case TournamentClass::Hankel:
      each_pair([&](int i, int j) { out.push_back(Move::hankel4(i, j)); });
      each_triple([&](int i, int j, int k) {
        out.push_back(Move::hankel_pair3(i, j, k));
      });
      for (int i = 1; i <= n; ++i) out.push_back(Move::hankel3_mid(i));
      break;
    case TournamentClass::SkewHankel:
      each_pair([&](int i, int j) { out.push_back(Move::skew4(i, j)); });
      each_triple([&](int i, int j, int k) {
        out.push_back(Move::skew_pair3(i, j, k));
      });
      break;
    default:
      break;
  }
  return out;
}

}  // namespace

TEST_CASE("moves round-trip through text") {
  const std::vector<Move> moves = {
      Move::three_cycle(1, 2, 3), Move::edge_loop(4, 2),
      Move::four_cycle(5, 1, 3, 2), Move::hankel_pair3(3, 2, 1),
      Move::hankel3_mid(6),         Move::hankel4(7, 5),
      Move::skew_pair3(1, 3, 4),    Move::skew4(2, 3)};
  const std::vector<std::string> texts = {"T 1 2 3",   "EL 4 2", "Q 5 1 3 2",
                                          "HP3 3 2 1", "H3M 6",  "H4 7 5",
                                          "SP3 1 3 4", "S4 2 3"};
  for (std::size_t s = 0; s < moves.size(); ++s) {
    CHECK(format_move(moves[s]) == texts[s]);
    CHECK(parse_move(texts[s]) == moves[s]);
  }

  const std::string block = format_moves(moves);
  CHECK(parse_moves(block) == moves);
  CHECK(parse_moves("") == std::vector<Move>{});
  CHECK(parse_moves("  \n\nT 1 2 3\n") ==
        std::vector<Move>{Move::three_cycle(1, 2, 3)});

  CHECK_THROWS_AS(parse_move(""), ParseError);
  CHECK_THROWS_AS(parse_move("X 1 2"), ParseError);
  CHECK_THROWS_AS(parse_move("T 1 2"), ParseError);
  CHECK_THROWS_AS(parse_move("T 1 2 3 4"), ParseError);
  CHECK_THROWS_AS(parse_move("EL 1 two"), ParseError);
}

TEST_CASE("edge-loop switch moves the loop against the reversed edge") {
  BinaryMatrix m = mat({"01", "01"});
  REQUIRE(is_member(m, TournamentClass::Loopy));
  apply_move(m, Move::edge_loop(1, 2), TournamentClass::Loopy);
  CHECK(m == mat({"10", "10"}));

  // Its inverse restores the original.
  apply_move(m, inverse_move(Move::edge_loop(1, 2), 2),
             TournamentClass::Loopy);
  CHECK(m == mat({"01", "01"}));

  // The pattern needs the loop on the target vertex.
  BinaryMatrix no_loop = mat({"01", "00"});
  CHECK_THROWS_AS(apply_move(no_loop, Move::edge_loop(1, 2),
                             TournamentClass::Loopy),
                  PatternError);
}

TEST_CASE("three-cycle switch keeps diagonals and four-cycle keeps chords") {
  // Loops at 1 and 3 survive reversing the triangle.
  BinaryMatrix loopy = mat({"110", "001", "101"});
  REQUIRE(is_member(loopy, TournamentClass::Loopy));
  apply_move(loopy, Move::three_cycle(1, 2, 3), TournamentClass::Loopy);
  CHECK(loopy == mat({"101", "100", "011"}));

  // 4-cycle 1->2->3->4->1 with chords 1->3 and 2->4.
  BinaryMatrix plain = mat({"0110", "0011", "0001", "1000"});
  REQUIRE(is_member(plain, TournamentClass::Plain));
  apply_move(plain, Move::four_cycle(1, 2, 3, 4), TournamentClass::Plain);
  CHECK(plain == mat({"0011", "1001", "0100", "0010"}));
  CHECK(plain.get(1, 3));  // chords kept
  CHECK(plain.get(2, 4));
}

TEST_CASE("four-cycle with reversed chord equals two three-cycles") {
  for (const BinaryMatrix& m : all_members(5, TournamentClass::Plain)) {
    for (int i = 1; i <= 5; ++i)
      for (int j = 1; j <= 5; ++j)
        for (int k = 1; k <= 5; ++k)
          for (int l = 1; l <= 5; ++l) {
            if (i == j || i == k || i == l || j == k || j == l || k == l)
              continue;
            if (!(m.get(i, j) && m.get(j, k) && m.get(k, l) && m.get(l, i) &&
                  m.get(k, i)))
              continue;
            BinaryMatrix a = m;
            apply_move(a, Move::four_cycle(i, j, k, l),
                       TournamentClass::Plain);
            BinaryMatrix b = m;
            apply_move(b, Move::three_cycle(i, j, k), TournamentClass::Plain);
            apply_move(b, Move::three_cycle(i, k, l), TournamentClass::Plain);
            CHECK(a == b);
          }
  }
}

TEST_CASE("hankel order-7 pair is connected by the documented move path") {
  MovePath p;
  p.start = hankel7_a();
  p.klass = TournamentClass::Hankel;
  p.moves = {Move::hankel4(7, 5), Move::hankel_pair3(3, 2, 1),
             Move::hankel3_mid(6)};
  REQUIRE(is_member(p.start, TournamentClass::Hankel));
  CHECK(replay_path(p) == hankel7_b());

  // Walking back with inverted moves returns to the start.
  const MovePath back = inverse_path(p);
  CHECK(back.start == hankel7_b());
  CHECK(replay_path(back) == hankel7_a());
}

TEST_CASE("skew order-5 pair is connected by one paired triangle switch") {
  MovePath p;
  p.start = skew5_a();
  p.klass = TournamentClass::SkewHankel;
  p.moves = {Move::skew_pair3(1, 3, 4)};
  REQUIRE(is_member(p.start, TournamentClass::SkewHankel));
  CHECK(replay_path(p) == skew5_b());

  const MovePath back = inverse_path(p);
  CHECK(replay_path(back) == skew5_a());
}

TEST_CASE("every applicable move preserves class and scores and inverts") {
  const std::vector<std::pair<TournamentClass, int>> ranges = {
      {TournamentClass::Plain, 4},
      {TournamentClass::Loopy, 3},
      {TournamentClass::Hankel, 6},
      {TournamentClass::Hankel, 7},
      {TournamentClass::SkewHankel, 5},
      {TournamentClass::SkewHankel, 6}};
  for (auto [c, n] : ranges) {
    const std::vector<Move> moves = all_moves(n, c);
    long long applied = 0;
    for (const BinaryMatrix& m : all_members(n, c)) {
      const ScoreVector r = score_vector(m);
      for (const Move& mv : moves) {
        BinaryMatrix work = m;
        try {
          apply_move(work, mv, c);
        } catch (const PatternError&) {
          CHECK(work == m);  // failed moves leave the matrix untouched
          continue;
        }
        ++applied;
        CHECK(is_member(work, c));
        CHECK(score_vector(work) == r);
        CHECK(work != m);
        apply_move(work, inverse_move(mv, n), c);
        CHECK(work == m);
      }
    }
    INFO("class " << class_name(c) << " order " << n);
    CHECK(applied > 0);
  }
}

TEST_CASE("purity and shape violations are rejected before application") {
  BinaryMatrix h = hankel7_a();  // n = 7, middle = 4
  const BinaryMatrix orig = h;

  // Triangle meeting its mirror in a non-middle vertex.
  CHECK_THROWS_AS(apply_move(h, Move::hankel_pair3(2, 6, 3),
                             TournamentClass::Hankel),
                  PatternError);
  // The degenerate triple (i, middle, n+1-i) must go through H3M instead.
  CHECK_THROWS_AS(apply_move(h, Move::hankel_pair3(2, 4, 6),
                             TournamentClass::Hankel),
                  PatternError);
  // H3M at the middle itself, and mirrored or middle H4 indices.
  CHECK_THROWS_AS(apply_move(h, Move::hankel3_mid(4), TournamentClass::Hankel),
                  PatternError);
  CHECK_THROWS_AS(apply_move(h, Move::hankel4(2, 6), TournamentClass::Hankel),
                  PatternError);
  CHECK_THROWS_AS(apply_move(h, Move::hankel4(4, 5), TournamentClass::Hankel),
                  PatternError);
  // Out-of-range and repeated indices.
  CHECK_THROWS_AS(apply_move(h, Move::hankel4(0, 3), TournamentClass::Hankel),
                  PatternError);
  CHECK_THROWS_AS(apply_move(h, Move::hankel4(8, 3), TournamentClass::Hankel),
                  PatternError);
  CHECK_THROWS_AS(apply_move(h, Move::hankel_pair3(3, 3, 5),
                             TournamentClass::Hankel),
                  PatternError);
  CHECK(h == orig);

  BinaryMatrix s = skew5_a();  // n = 5, middle = 3
  CHECK_THROWS_AS(apply_move(s, Move::skew_pair3(1, 5, 2),
                             TournamentClass::SkewHankel),
                  PatternError);
  CHECK_THROWS_AS(apply_move(s, Move::skew_pair3(1, 3, 5),
                             TournamentClass::SkewHankel),
                  PatternError);
  CHECK_THROWS_AS(apply_move(s, Move::skew4(1, 5), TournamentClass::SkewHankel),
                  PatternError);
  CHECK_THROWS_AS(apply_move(s, Move::skew4(3, 1), TournamentClass::SkewHankel),
                  PatternError);
  CHECK(s == skew5_a());

  // H3M needs an odd order.
  BinaryMatrix h2 = mat({"01", "00"});
  REQUIRE(is_member(h2, TournamentClass::Hankel));
  CHECK_THROWS_AS(apply_move(h2, Move::hankel3_mid(1), TournamentClass::Hankel),
                  PatternError);
}

TEST_CASE("move kinds outside the class vocabulary are rejected") {
  BinaryMatrix h = hankel7_a();
  CHECK_THROWS_AS(apply_move(h, Move::three_cycle(1, 2, 3),
                             TournamentClass::Hankel),
                  DomainError);
  CHECK_THROWS_AS(apply_move(h, Move::skew4(1, 2), TournamentClass::Hankel),
                  DomainError);

  BinaryMatrix p = mat({"010", "001", "100"});
  CHECK_THROWS_AS(apply_move(p, Move::edge_loop(1, 2), TournamentClass::Plain),
                  DomainError);
  CHECK_THROWS_AS(apply_move(p, Move::hankel3_mid(1), TournamentClass::Plain),
                  DomainError);

  // Reduction-only classes have no switch vocabulary at all.
  BinaryMatrix hl = mat({"00011", "11001", "11100", "01110", "00110"});
  REQUIRE(is_member(hl, TournamentClass::HankelLoopy));
  CHECK_THROWS_AS(apply_move(hl, Move::hankel4(1, 2),
                             TournamentClass::HankelLoopy),
                  DomainError);
}

TEST_CASE("class certification restores the matrix on failure") {
  // Pattern present, but the matrix is not a tournament (empty duel 1-4).
  BinaryMatrix bad(4);
  bad.set(1, 2, true);
  bad.set(2, 3, true);
  bad.set(3, 1, true);
  bad.set(2, 4, true);
  bad.set(3, 4, true);
  const BinaryMatrix orig = bad;
  CHECK_THROWS_AS(apply_move(bad, Move::three_cycle(1, 2, 3),
                             TournamentClass::Plain),
                  InternalError);
  CHECK(bad == orig);
}

TEST_CASE("composite halves are validated atomically") {
  // Plain matrix with triangle 1->2->3 present but its mirror triangle
  // absent; HP3 must fail without touching anything.
  BinaryMatrix m = mat({"0101", "0011", "1000", "0010"});
  REQUIRE(is_member(m, TournamentClass::Plain));
  const BinaryMatrix orig = m;
  REQUIRE(m.get(1, 2));
  REQUIRE(m.get(2, 3));
  REQUIRE(m.get(3, 1));
  CHECK_THROWS_AS(detail::apply_move_unchecked(m, Move::hankel_pair3(1, 2, 3)),
                  PatternError);
  CHECK(m == orig);
}

TEST_CASE("move sequences report the failing step index") {
  BinaryMatrix m = hankel7_a();
  const std::vector<Move> moves = {Move::hankel4(7, 5),
                                   Move::hankel4(7, 5),  // no longer present
                                   Move::hankel3_mid(6)};
  try {
    apply_moves(m, moves, TournamentClass::Hankel);
    FAIL("expected PatternError");
  } catch (const PatternError& e) {
    CHECK(e.step == 1);
  }

  // A standalone application keeps the default step marker.
  BinaryMatrix k = hankel7_b();
  try {
    apply_move(k, Move::hankel4(7, 5), TournamentClass::Hankel);
    FAIL("expected PatternError");
  } catch (const PatternError& e) {
    CHECK(e.step == -1);
  }
}

TEST_CASE("paths round-trip through text") {
  MovePath p;
  p.start = hankel7_a();
  p.klass = TournamentClass::Hankel;
  p.moves = {Move::hankel4(7, 5), Move::hankel_pair3(3, 2, 1),
             Move::hankel3_mid(6)};
  const std::string text = format_path(p);
  const MovePath q = parse_path(text, TournamentClass::Hankel);
  CHECK(q.start == p.start);
  CHECK(q.moves == p.moves);
  CHECK(replay_path(q) == hankel7_b());

  // Replay rejects a start matrix outside the class.
  MovePath wrong = p;
  wrong.klass = TournamentClass::SkewHankel;
  CHECK_THROWS_AS(replay_path(wrong), DomainError);
}
