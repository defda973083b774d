#pragma once

// Core value types for score-constrained tournament matrices: a bit-packed
// square 0/1 matrix, score vectors, the tournament class taxonomy with
// entrywise membership validators, and the canonical text formats used by
// every tool in this repository.
//
// All external indices are 1-based; storage is 0-based internally.

#include <algorithm>
#include <bit>
#include <cctype>
#include <cstdint>
#include <istream>
#include <optional>
#include <span>
#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace tournament {

using Score = long long;
using ScoreVector = std::vector<Score>;

// p[i-1] is the image of 1-based index i under the permutation.
using Permutation = std::vector<int>;

enum class TournamentClass {
  Plain,
  Loopy,
  Hankel,
  SkewHankel,
  // Reduction-only variants: accepted by validators and score reducers,
  // rejected by constructors and the switch calculus.
  HankelLoopy,
  SkewHankelLoopy,
  SkewHankelDoublyLoopy,
};

inline constexpr TournamentClass kAllClasses[] = {
    TournamentClass::Plain,
    TournamentClass::Loopy,
    TournamentClass::Hankel,
    TournamentClass::SkewHankel,
    TournamentClass::HankelLoopy,
    TournamentClass::SkewHankelLoopy,
    TournamentClass::SkewHankelDoublyLoopy,
};

constexpr bool is_reduction_only(TournamentClass c) {
  return c == TournamentClass::HankelLoopy ||
         c == TournamentClass::SkewHankelLoopy ||
         c == TournamentClass::SkewHankelDoublyLoopy;
}

constexpr std::string_view class_name(TournamentClass c) {
  switch (c) {
    case TournamentClass::Plain: return "plain";
    case TournamentClass::Loopy: return "loopy";
    case TournamentClass::Hankel: return "hankel";
    case TournamentClass::SkewHankel: return "skewhankel";
    case TournamentClass::HankelLoopy: return "hankelloopy";
    case TournamentClass::SkewHankelLoopy: return "skewhankelloopy";
    case TournamentClass::SkewHankelDoublyLoopy: return "skewhankeldoublyloopy";
  }
  return "?";
}

inline std::optional<TournamentClass> parse_class_name(std::string_view s) {
  for (TournamentClass c : kAllClasses)
    if (s == class_name(c)) return c;
  return std::nullopt;
}

// ---------------------------------------------------------------------------
// Errors

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Malformed text input (matrix, score vector, or move syntax).
struct ParseError : Error {
  using Error::Error;
};

// Precondition violations: bad indices, non-bijective permutations, inputs
// outside an operation's stated domain.
struct DomainError : Error {
  using Error::Error;
};

// A constructor was asked to realize a score vector that fails the class's
// existence criterion.
struct InfeasibleError : Error {
  using Error::Error;
};

// A switch was requested whose entry pattern is absent or whose index-purity
// constraint fails.  `step` is the 0-based position inside a move sequence,
// or -1 when the move was applied on its own.
struct PatternError : Error {
  explicit PatternError(const std::string& what, int step_index = -1)
      : Error(what), step(step_index) {}
  int step = -1;
};

// An enumeration request outside the documented brute-force ranges.
struct RangeError : Error {
  using Error::Error;
};

// Internal consistency failure: an invariant the algorithms guarantee was
// observed broken.  Indicates a bug, never bad user input.
struct InternalError : Error {
  using Error::Error;
};

// ---------------------------------------------------------------------------
// BinaryMatrix

class BinaryMatrix {
 public:
  BinaryMatrix() = default;

  explicit BinaryMatrix(int n) : n_(n), words_(word_count(n)) {
    if (n < 0) throw DomainError("matrix order must be nonnegative");
    bits_.assign(static_cast<std::size_t>(n_) * words_, 0);
  }

  int order() const { return n_; }

  bool get(int i, int j) const {
    check_index(i, j);
    return bit(i - 1, j - 1);
  }

  void set(int i, int j, bool v) {
    check_index(i, j);
    set_bit(i - 1, j - 1, v);
  }

  void flip(int i, int j) { set(i, j, !get(i, j)); }

  // Row sum of 1-based row i.
  Score row_sum(int i) const {
    check_index(i, 1);
    Score s = 0;
    for (int w = 0; w < words_; ++w)
      s += std::popcount(bits_[static_cast<std::size_t>(i - 1) * words_ + w]);
    return s;
  }

  friend bool operator==(const BinaryMatrix&, const BinaryMatrix&) = default;

  // Orders matrices by size, then by entries in row-major reading order
  // (0 before 1), which coincides with comparing their canonical text.
  friend bool operator<(const BinaryMatrix& a, const BinaryMatrix& b) {
    if (a.n_ != b.n_) return a.n_ < b.n_;
    for (std::size_t w = 0; w < a.bits_.size(); ++w) {
      const std::uint64_t x = a.bits_[w], y = b.bits_[w];
      if (x != y) {
        const std::uint64_t low = (x ^ y) & ~((x ^ y) - 1);  // lowest diff bit
        return (y & low) != 0;
      }
    }
    return false;
  }

  std::size_t hash() const {
    std::size_t h = static_cast<std::size_t>(n_) * 0x9e3779b97f4a7c15ull;
    for (std::uint64_t w : bits_) {
      h ^= w + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
    }
    return h;
  }

  // Unchecked 0-based accessors for hot loops.
  bool bit(int i0, int j0) const {
    return (bits_[static_cast<std::size_t>(i0) * words_ +
                  static_cast<std::size_t>(j0 >> 6)] >>
            (j0 & 63)) &
           1u;
  }
  void set_bit(int i0, int j0, bool v) {
    std::uint64_t& w = bits_[static_cast<std::size_t>(i0) * words_ +
                             static_cast<std::size_t>(j0 >> 6)];
    const std::uint64_t mask = std::uint64_t{1} << (j0 & 63);
    if (v)
      w |= mask;
    else
      w &= ~mask;
  }

 private:
  static int word_count(int n) { return (n + 63) / 64; }

  void check_index(int i, int j) const {
    if (i < 1 || i > n_ || j < 1 || j > n_)
      throw DomainError("matrix index out of range");
  }

  int n_ = 0;
  int words_ = 0;
  std::vector<std::uint64_t> bits_;
};

struct BinaryMatrixHash {
  std::size_t operator()(const BinaryMatrix& m) const { return m.hash(); }
};

// ---------------------------------------------------------------------------
// Basic matrix operations

inline ScoreVector score_vector(const BinaryMatrix& m) {
  ScoreVector r(static_cast<std::size_t>(m.order()));
  for (int i = 1; i <= m.order(); ++i) r[static_cast<std::size_t>(i - 1)] = m.row_sum(i);
  return r;
}

inline ScoreVector column_sums(const BinaryMatrix& m) {
  const int n = m.order();
  ScoreVector s(static_cast<std::size_t>(n), 0);
  for (int i = 1; i <= n; ++i)
    for (int j = 1; j <= n; ++j)
      if (m.get(i, j)) ++s[static_cast<std::size_t>(j - 1)];
  return s;
}

inline Score trace(const BinaryMatrix& m) {
  Score t = 0;
  for (int i = 1; i <= m.order(); ++i) t += m.get(i, i);
  return t;
}

inline BinaryMatrix transpose(const BinaryMatrix& m) {
  const int n = m.order();
  BinaryMatrix r(n);
  for (int i = 1; i <= n; ++i)
    for (int j = 1; j <= n; ++j)
      if (m.get(i, j)) r.set(j, i, true);
  return r;
}

// Reflection across the Hankel (anti-) diagonal: r[i][j] = m[n+1-j][n+1-i].
inline BinaryMatrix hankel_transpose(const BinaryMatrix& m) {
  const int n = m.order();
  BinaryMatrix r(n);
  for (int i = 1; i <= n; ++i)
    for (int j = 1; j <= n; ++j)
      if (m.get(n + 1 - j, n + 1 - i)) r.set(i, j, true);
  return r;
}

// ---------------------------------------------------------------------------
// Permutations

inline bool is_permutation_of_degree(const Permutation& p, int n) {
  if (static_cast<int>(p.size()) != n) return false;
  std::vector<bool> seen(static_cast<std::size_t>(n), false);
  for (int v : p) {
    if (v < 1 || v > n || seen[static_cast<std::size_t>(v - 1)]) return false;
    seen[static_cast<std::size_t>(v - 1)] = true;
  }
  return true;
}

inline Permutation identity_permutation(int n) {
  Permutation p(static_cast<std::size_t>(n));
  for (int i = 1; i <= n; ++i) p[static_cast<std::size_t>(i - 1)] = i;
  return p;
}

inline bool is_identity(const Permutation& p) {
  for (int i = 0; i < static_cast<int>(p.size()); ++i)
    if (p[static_cast<std::size_t>(i)] != i + 1) return false;
  return true;
}

inline Permutation inverse_permutation(const Permutation& p) {
  Permutation inv(p.size());
  for (int i = 1; i <= static_cast<int>(p.size()); ++i)
    inv[static_cast<std::size_t>(p[static_cast<std::size_t>(i - 1)] - 1)] = i;
  return inv;
}

// Simultaneous row/column relabeling: result[p(i)][p(j)] = m[i][j].
inline BinaryMatrix permute(const BinaryMatrix& m, const Permutation& p) {
  const int n = m.order();
  if (!is_permutation_of_degree(p, n))
    throw DomainError("permute: not a bijection on 1..n");
  BinaryMatrix r(n);
  for (int i = 1; i <= n; ++i)
    for (int j = 1; j <= n; ++j)
      if (m.get(i, j))
        r.set(p[static_cast<std::size_t>(i - 1)], p[static_cast<std::size_t>(j - 1)], true);
  return r;
}

// Applies a relabeling to a score vector: result[p(i)] = r[i].
inline ScoreVector permute(const ScoreVector& r, const Permutation& p) {
  if (!is_permutation_of_degree(p, static_cast<int>(r.size())))
    throw DomainError("permute: not a bijection on 1..n");
  ScoreVector out(r.size());
  for (std::size_t i = 0; i < r.size(); ++i)
    out[static_cast<std::size_t>(p[i] - 1)] = r[i];
  return out;
}

// ---------------------------------------------------------------------------
// Class membership

inline bool is_member(const BinaryMatrix& m, TournamentClass c) {
  const int n = m.order();
  const auto mir = [n](int i) { return n + 1 - i; };

  // Off-diagonal skew-symmetry t[j][i] = 1 - t[i][j]; `skip_hankel_pair`
  // exempts the Hankel-diagonal pairs (handled separately by skew classes).
  const auto complementary = [&](bool skip_hankel_pair) {
    for (int i = 1; i <= n; ++i)
      for (int j = i + 1; j <= n; ++j) {
        if (skip_hankel_pair && j == mir(i)) continue;
        if (m.get(i, j) == m.get(j, i)) return false;
      }
    return true;
  };
  // Invariance under reflection across the Hankel diagonal.
  const auto hankel_symmetric = [&] {
    for (int i = 1; i <= n; ++i)
      for (int j = 1; j <= n; ++j)
        if (m.get(i, j) != m.get(mir(j), mir(i))) return false;
    return true;
  };
  // Invariance under 180-degree rotation, off both diagonals (the diagonal
  // cells follow their own per-class rules).
  const auto rotation_symmetric = [&] {
    for (int i = 1; i <= n; ++i)
      for (int j = 1; j <= n; ++j)
        if (i != j && j != mir(i) && m.get(i, j) != m.get(mir(i), mir(j)))
          return false;
    return true;
  };
  const auto zero_main_diagonal = [&] {
    for (int i = 1; i <= n; ++i)
      if (m.get(i, i)) return false;
    return true;
  };
  const auto zero_hankel_diagonal = [&] {
    for (int i = 1; i <= n; ++i)
      if (m.get(i, mir(i))) return false;
    return true;
  };
  // Main-diagonal pairs carry exactly one loop each: t[i][i] = 1 - t[i'][i'];
  // for odd n the self-paired middle cell cannot satisfy this and is covered
  // by the Hankel-diagonal rule of the concrete class.
  const auto loop_pairs_complementary = [&] {
    for (int i = 1; i <= n; ++i)
      if (i != mir(i) && m.get(i, i) == m.get(mir(i), mir(i))) return false;
    return true;
  };

  switch (c) {
    case TournamentClass::Plain:
      return zero_main_diagonal() && complementary(false);
    case TournamentClass::Loopy:
      return complementary(false);
    case TournamentClass::Hankel:
      return zero_main_diagonal() && complementary(false) && hankel_symmetric();
    case TournamentClass::HankelLoopy:
      // Hankel symmetry already forces t[i][i] = t[i'][i'] on the diagonal.
      return complementary(false) && hankel_symmetric();
    case TournamentClass::SkewHankel:
      return zero_main_diagonal() && zero_hankel_diagonal() &&
             complementary(true) && rotation_symmetric();
    case TournamentClass::SkewHankelLoopy:
      return zero_hankel_diagonal() && loop_pairs_complementary() &&
             complementary(true) && rotation_symmetric();
    case TournamentClass::SkewHankelDoublyLoopy: {
      // Each non-middle Hankel-diagonal pair also carries exactly one 1.
      for (int i = 1; i <= n; ++i)
        if (i != mir(i) && m.get(i, mir(i)) == m.get(mir(i), i)) return false;
      return loop_pairs_complementary() && complementary(true) &&
             rotation_symmetric();
    }
  }
  throw DomainError("is_member: unknown class");
}

// Every class the matrix belongs to, in declaration order.
inline std::vector<TournamentClass> member_classes(const BinaryMatrix& m) {
  std::vector<TournamentClass> out;
  for (TournamentClass c : kAllClasses)
    if (is_member(m, c)) out.push_back(c);
  return out;
}

// ---------------------------------------------------------------------------
// Class-specific conversions

// Reorders columns last-to-first, turning a Hankel tournament into the
// adjacency matrix of a graph with floor(n/2) loops.
inline BinaryMatrix hankel_loopy_graph(const BinaryMatrix& m) {
  if (!is_member(m, TournamentClass::Hankel))
    throw DomainError("hankel_loopy_graph: input is not a Hankel tournament");
  const int n = m.order();
  BinaryMatrix r(n);
  for (int i = 1; i <= n; ++i)
    for (int j = 1; j <= n; ++j)
      if (m.get(i, n + 1 - j)) r.set(i, j, true);
  return r;
}

// Moves the 1s of column `col` horizontally onto the main diagonal of their
// rows, then deletes row and column `col`; a plain tournament of order n
// collapses to a loopy tournament of order n-1.
inline BinaryMatrix collapse(const BinaryMatrix& m, int col) {
  const int n = m.order();
  if (col < 1 || col > n) throw DomainError("collapse: index out of range");
  if (!is_member(m, TournamentClass::Plain))
    throw DomainError("collapse: input is not a plain tournament");
  BinaryMatrix r(n - 1);
  const auto reindex = [col](int v) { return v < col ? v : v - 1; };
  for (int i = 1; i <= n; ++i) {
    if (i == col) continue;
    r.set(reindex(i), reindex(i), m.get(i, col));
    for (int j = 1; j <= n; ++j) {
      if (j == col || j == i) continue;
      if (m.get(i, j)) r.set(reindex(i), reindex(j), true);
    }
  }
  return r;
}

// ---------------------------------------------------------------------------
// Canonical text formats

inline std::string format_matrix(const BinaryMatrix& m) {
  const int n = m.order();
  std::string out = std::to_string(n);
  out.push_back('\n');
  for (int i = 1; i <= n; ++i) {
    for (int j = 1; j <= n; ++j) out.push_back(m.get(i, j) ? '1' : '0');
    out.push_back('\n');
  }
  return out;
}

namespace detail {

inline bool read_line(std::istream& in, std::string& line) {
  if (!std::getline(in, line)) return false;
  if (!line.empty() && line.back() == '\r') line.pop_back();
  return true;
}

}  // namespace detail

// Reads one matrix block ("n" header line, then n rows of 0/1 characters),
// skipping blank lines before the header.  Returns nullopt at a clean EOF.
inline std::optional<BinaryMatrix> try_read_matrix(std::istream& in) {
  std::string line;
  do {
    if (!detail::read_line(in, line)) return std::nullopt;
  } while (line.find_first_not_of(" \t") == std::string::npos);

  int n = 0;
  {
    std::size_t pos = 0;
    try {
      n = std::stoi(line, &pos);
    } catch (const std::exception&) {
      throw ParseError("matrix header is not an integer: \"" + line + "\"");
    }
    if (pos != line.size() || n < 1)
      throw ParseError("matrix header must be a positive order: \"" + line + "\"");
  }
  BinaryMatrix m(n);
  for (int i = 1; i <= n; ++i) {
    if (!detail::read_line(in, line))
      throw ParseError("matrix row " + std::to_string(i) + " missing");
    if (static_cast<int>(line.size()) != n)
      throw ParseError("matrix row " + std::to_string(i) + " has length " +
                       std::to_string(line.size()) + ", expected " +
                       std::to_string(n));
    for (int j = 1; j <= n; ++j) {
      const char ch = line[static_cast<std::size_t>(j - 1)];
      if (ch != '0' && ch != '1')
        throw ParseError("matrix row " + std::to_string(i) +
                         " contains a character other than 0/1");
      if (ch == '1') m.set(i, j, true);
    }
  }
  return m;
}

inline BinaryMatrix read_matrix(std::istream& in) {
  auto m = try_read_matrix(in);
  if (!m) throw ParseError("expected a matrix, found end of input");
  return *std::move(m);
}

inline BinaryMatrix parse_matrix(std::string_view text) {
  std::istringstream in{std::string(text)};
  BinaryMatrix m = read_matrix(in);
  std::string rest;
  while (std::getline(in, rest))
    if (rest.find_first_not_of(" \t\r") != std::string::npos)
      throw ParseError("trailing content after matrix");
  return m;
}

inline std::string format_score_vector(std::span<const Score> r) {
  std::string out;
  for (std::size_t i = 0; i < r.size(); ++i) {
    if (i) out.push_back(' ');
    out += std::to_string(r[i]);
  }
  return out;
}

inline ScoreVector parse_score_vector(std::string_view line) {
  std::istringstream in{std::string(line)};
  ScoreVector r;
  std::string tok;
  while (in >> tok) {
    Score v = 0;
    std::size_t pos = 0;
    try {
      v = std::stoll(tok, &pos);
    } catch (const std::exception&) {
      throw ParseError("score entry is not an integer: \"" + tok + "\"");
    }
    if (pos != tok.size())
      throw ParseError("score entry is not an integer: \"" + tok + "\"");
    if (v < 0) throw ParseError("score entries must be nonnegative");
    r.push_back(v);
  }
  if (r.empty()) throw ParseError("empty score vector");
  return r;
}

}  // namespace tournament
