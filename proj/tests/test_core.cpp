#include <catch2/catch_amalgamated.hpp>

#include <sstream>
#include <vector>

#include "helpers.hpp"
#include "tournament/core.hpp"

using namespace tournament;
using test_util::mat;

namespace {

// A loopy tournament of order 5 with two loops and scores (2,3,2,3,2).
const BinaryMatrix kLoopy5 = mat({
    "01100",
    "01101",
    "00011",
    "11001",
    "10001",
});

// A regular Hankel tournament of order 5, scores (2,2,2,2,2).
const BinaryMatrix kHankel5 = mat({
    "00011",
    "10001",
    "11000",
    "01100",
    "00110",
});

// A skew-Hankel tournament of order 5, scores (1,2,2,2,1).
const BinaryMatrix kSkew5 = mat({
    "01000",
    "00101",
    "10001",
    "10100",
    "00010",
});

}  // namespace

TEST_CASE("matrix accessors are 1-based and bounds-checked") {
  BinaryMatrix m(3);
  REQUIRE(m.order() == 3);
  for (int i = 1; i <= 3; ++i)
    for (int j = 1; j <= 3; ++j) REQUIRE_FALSE(m.get(i, j));

  m.set(1, 3, true);
  CHECK(m.get(1, 3));
  m.flip(1, 3);
  CHECK_FALSE(m.get(1, 3));
  m.flip(2, 2);
  CHECK(m.get(2, 2));
  CHECK(m.row_sum(2) == 1);

  CHECK_THROWS_AS(m.get(0, 1), DomainError);
  CHECK_THROWS_AS(m.get(1, 4), DomainError);
  CHECK_THROWS_AS(m.set(4, 1, true), DomainError);
}

TEST_CASE("matrix equality, ordering, and hashing") {
  BinaryMatrix a(2), b(2);
  CHECK(a == b);
  b.set(2, 1, true);
  CHECK(a != b);

  // Text order: compare entries in reading order, 0 before 1.  The first
  // differing cell of b = 00/10 and c = 01/00 is (1,2), so b < c.
  BinaryMatrix c(2);
  c.set(1, 2, true);
  CHECK(a < c);
  CHECK(b < c);
  CHECK_FALSE(c < b);
  CHECK_FALSE(a < a);

  CHECK(BinaryMatrixHash{}(a) == a.hash());
  CHECK(a.hash() != b.hash());  // not guaranteed in general, but true here

  // Order-69 matrices exercise the multi-word row path.
  BinaryMatrix w1(69), w2(69);
  w2.set(1, 69, true);
  CHECK(w1 < w2);
  CHECK(w1.row_sum(1) == 0);
  CHECK(w2.row_sum(1) == 1);
  w1.set(1, 1, true);
  CHECK(w2 < w1);
}

TEST_CASE("score vectors, column sums, and trace") {
  CHECK(score_vector(kLoopy5) == ScoreVector{2, 3, 2, 3, 2});
  CHECK(column_sums(kLoopy5) == ScoreVector{2, 3, 2, 1, 4});
  CHECK(trace(kLoopy5) == 2);

  CHECK(score_vector(kHankel5) == ScoreVector{2, 2, 2, 2, 2});
  CHECK(trace(kHankel5) == 0);

  CHECK(score_vector(kSkew5) == ScoreVector{1, 2, 2, 2, 1});
  CHECK(column_sums(kSkew5) == ScoreVector{2, 1, 2, 1, 2});
}

TEST_CASE("transpose and Hankel transpose are commuting involutions") {
  for (const BinaryMatrix& m : {kLoopy5, kHankel5, kSkew5}) {
    CHECK(transpose(transpose(m)) == m);
    CHECK(hankel_transpose(hankel_transpose(m)) == m);
    CHECK(transpose(hankel_transpose(m)) == hankel_transpose(transpose(m)));
  }
  // The Hankel transpose of a Hankel tournament is itself.
  CHECK(hankel_transpose(kHankel5) == kHankel5);
  CHECK(hankel_transpose(kLoopy5) != kLoopy5);
}

TEST_CASE("class membership of the reference fixtures") {
  CHECK(member_classes(kLoopy5) ==
        std::vector<TournamentClass>{TournamentClass::Loopy});

  CHECK(member_classes(kHankel5) ==
        std::vector<TournamentClass>{
            TournamentClass::Plain, TournamentClass::Loopy,
            TournamentClass::Hankel, TournamentClass::HankelLoopy});

  // Skew-Hankel matrices leave both Hankel-diagonal duels empty, so they are
  // not plain tournaments.
  CHECK(member_classes(kSkew5) ==
        std::vector<TournamentClass>{TournamentClass::SkewHankel});
}

TEST_CASE("class membership of loopy variants") {
  // Hankel-symmetric with loops: scores (2,3,3,3,2).
  const BinaryMatrix hankel_loopy = mat({
      "00011",
      "11001",
      "11100",
      "01110",
      "00110",
  });
  CHECK(score_vector(hankel_loopy) == ScoreVector{2, 3, 3, 3, 2});
  CHECK(member_classes(hankel_loopy) ==
        std::vector<TournamentClass>{TournamentClass::Loopy,
                                     TournamentClass::HankelLoopy});

  // Skew-Hankel with one loop per mirrored pair of rows.
  const BinaryMatrix skew_loopy = mat({
      "10",
      "00",
  });
  CHECK(is_member(skew_loopy, TournamentClass::SkewHankelLoopy));
  CHECK_FALSE(is_member(skew_loopy, TournamentClass::SkewHankel));
  CHECK_FALSE(is_member(skew_loopy, TournamentClass::SkewHankelDoublyLoopy));
  CHECK_FALSE(is_member(skew_loopy, TournamentClass::Loopy));

  // Loops on the main diagonal and the Hankel diagonal at once.
  const BinaryMatrix doubly_loopy = mat({
      "10",
      "10",
  });
  CHECK(is_member(doubly_loopy, TournamentClass::SkewHankelDoublyLoopy));
  CHECK(score_vector(doubly_loopy) == ScoreVector{1, 1});
  CHECK_FALSE(is_member(doubly_loopy, TournamentClass::SkewHankelLoopy));

  const BinaryMatrix doubly_loopy_alt = mat({
      "01",
      "01",
  });
  CHECK(is_member(doubly_loopy_alt, TournamentClass::SkewHankelDoublyLoopy));
  CHECK(score_vector(doubly_loopy_alt) == ScoreVector{1, 1});

  // A middle-cell loop is allowed only in the doubly loopy class.
  BinaryMatrix middle(1);
  middle.set(1, 1, true);
  CHECK(is_member(middle, TournamentClass::Loopy));
  CHECK(is_member(middle, TournamentClass::SkewHankelDoublyLoopy));
  CHECK(is_member(middle, TournamentClass::HankelLoopy));
  CHECK_FALSE(is_member(middle, TournamentClass::SkewHankelLoopy));
  CHECK_FALSE(is_member(middle, TournamentClass::SkewHankel));
}

TEST_CASE("plain tournaments satisfy T + T^t = J - I") {
  const BinaryMatrix& m = kHankel5;
  const BinaryMatrix t = transpose(m);
  for (int i = 1; i <= 5; ++i)
    for (int j = 1; j <= 5; ++j)
      CHECK(m.get(i, j) + t.get(i, j) == (i == j ? 0 : 1));
}

TEST_CASE("column reversal of a Hankel tournament") {
  const BinaryMatrix expected = mat({
      "11000",
      "10001",
      "00011",
      "00110",
      "01100",
  });
  CHECK(hankel_loopy_graph(kHankel5) == expected);
  // The reversal has loops exactly where the Hankel diagonal had 1s.
  CHECK(trace(hankel_loopy_graph(kHankel5)) == 2);
  CHECK_THROWS_AS(hankel_loopy_graph(kLoopy5), DomainError);
}

TEST_CASE("permutations relabel rows, columns, and scores consistently") {
  const Permutation p{3, 1, 4, 5, 2};
  REQUIRE(is_permutation_of_degree(p, 5));
  CHECK_FALSE(is_permutation_of_degree({1, 1, 2}, 3));
  CHECK_FALSE(is_permutation_of_degree({1, 2}, 3));
  CHECK(is_identity(identity_permutation(4)));
  CHECK_FALSE(is_identity(p));

  const BinaryMatrix moved = permute(kSkew5, p);
  CHECK(score_vector(moved) == permute(score_vector(kSkew5), p));
  CHECK(permute(moved, inverse_permutation(p)) == kSkew5);
  for (int i = 1; i <= 5; ++i)
    for (int j = 1; j <= 5; ++j)
      CHECK(moved.get(p[static_cast<std::size_t>(i - 1)],
                      p[static_cast<std::size_t>(j - 1)]) == kSkew5.get(i, j));

  CHECK_THROWS_AS(permute(kSkew5, Permutation{1, 2, 3}), DomainError);
}

TEST_CASE("collapse moves a column onto the diagonal and removes it") {
  // Column 1 entries become loops of their rows.
  const BinaryMatrix plain = mat({
      "0011",
      "1001",
      "0100",
      "0010",
  });
  REQUIRE(is_member(plain, TournamentClass::Plain));
  const BinaryMatrix folded = collapse(plain, 1);
  REQUIRE(folded.order() == 3);
  // Rows 2,3,4 kept their off-column entries; column-1 bits moved to loops.
  CHECK(folded == mat({
                      "101",
                      "100",
                      "010",
                  }));
  CHECK(is_member(folded, TournamentClass::Loopy));
  CHECK(score_vector(folded) == ScoreVector{2, 1, 1});

  CHECK_THROWS_AS(collapse(plain, 0), DomainError);
  CHECK_THROWS_AS(collapse(plain, 5), DomainError);
  CHECK_THROWS_AS(collapse(kLoopy5, 1), DomainError);  // not plain
}

TEST_CASE("matrix text round trip") {
  for (const BinaryMatrix& m : {kLoopy5, kHankel5, kSkew5}) {
    CHECK(parse_matrix(format_matrix(m)) == m);
  }

  SECTION("consecutive blocks on one stream") {
    std::istringstream in(format_matrix(kLoopy5) + "\n" +
                          format_matrix(kHankel5));
    CHECK(read_matrix(in) == kLoopy5);
    CHECK(read_matrix(in) == kHankel5);
    CHECK_FALSE(try_read_matrix(in).has_value());
  }

  SECTION("windows line endings are accepted") {
    CHECK(parse_matrix("2\r\n01\r\n00\r\n") == mat({"01", "00"}));
  }

  SECTION("malformed input is rejected") {
    CHECK_THROWS_AS(parse_matrix("x\n01\n00\n"), ParseError);
    CHECK_THROWS_AS(parse_matrix("0\n"), ParseError);
    CHECK_THROWS_AS(parse_matrix("-2\n"), ParseError);
    CHECK_THROWS_AS(parse_matrix("2\n01\n"), ParseError);
    CHECK_THROWS_AS(parse_matrix("2\n011\n00\n"), ParseError);
    CHECK_THROWS_AS(parse_matrix("2\n0a\n00\n"), ParseError);
    CHECK_THROWS_AS(parse_matrix("2\n01\n00\n1\n"), ParseError);
    CHECK_THROWS_AS(parse_matrix(""), ParseError);
  }
}

TEST_CASE("score vector text round trip") {
  const ScoreVector r{0, 3, 12, 7};
  CHECK(format_score_vector(r) == "0 3 12 7");
  CHECK(parse_score_vector("0 3 12 7") == r);
  CHECK(parse_score_vector("  5 ") == ScoreVector{5});

  CHECK_THROWS_AS(parse_score_vector(""), ParseError);
  CHECK_THROWS_AS(parse_score_vector("1 -2"), ParseError);
  CHECK_THROWS_AS(parse_score_vector("1 two"), ParseError);
  CHECK_THROWS_AS(parse_score_vector("1.5"), ParseError);
}

TEST_CASE("class names round trip") {
  for (TournamentClass c : kAllClasses) {
    const auto parsed = parse_class_name(class_name(c));
    REQUIRE(parsed.has_value());
    CHECK(*parsed == c);
  }
  CHECK_FALSE(parse_class_name("banana").has_value());
  CHECK(is_reduction_only(TournamentClass::HankelLoopy));
  CHECK_FALSE(is_reduction_only(TournamentClass::Hankel));
}
