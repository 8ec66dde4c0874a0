#pragma once

/**
 * @file pattern.hpp
 * Sign pattern matrices over {+,-,0}, extended-symbol templates, parsing,
 * the basic symmetries (negation, transposition, permutation similarity),
 * qualitative products and the A = A_+ + A_- split.
 */

#include <cstdint>
#include <iosfwd>
#include <stdexcept>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "signpat/sign.hpp"

namespace signpat {

/// Parse failure with 1-based (row, col) token position.
class ParseError : public std::runtime_error {
 public:
  ParseError(std::string msg, int row, int col)
      : std::runtime_error(std::move(msg)), row_(row), col_(col) {}
  int row() const { return row_; }
  int col() const { return col_; }

 private:
  int row_;
  int col_;
};

/// Square grid of signs. Indices are 0-based.
class SignPattern {
 public:
  SignPattern() = default;
  explicit SignPattern(int n) : n_(n), e_(static_cast<size_t>(n) * n, Sign::Zero) {
    if (n < 1) throw std::invalid_argument("SignPattern: order must be >= 1");
  }

  int order() const { return n_; }
  Sign at(int i, int j) const { return e_[static_cast<size_t>(i) * n_ + j]; }
  void set(int i, int j, Sign s) { e_[static_cast<size_t>(i) * n_ + j] = s; }

  bool operator==(const SignPattern&) const = default;

  bool is_zero() const {
    for (Sign s : e_)
      if (s != Sign::Zero) return false;
    return true;
  }

  /// Multi-line text, tokens separated by single spaces.
  std::string to_text() const;
  /// Rows joined by '/', e.g. "0+0/00+/+00".
  std::string to_compact() const;

 private:
  int n_ = 0;
  std::vector<Sign> e_;
};

/// Rectangular grid of signs (row/column slices, standard-form targets).
struct SignRect {
  int rows = 0;
  int cols = 0;
  std::vector<Sign> e;

  SignRect() = default;
  SignRect(int r, int c) : rows(r), cols(c), e(static_cast<size_t>(r) * c, Sign::Zero) {}

  Sign at(int i, int j) const { return e[static_cast<size_t>(i) * cols + j]; }
  void set(int i, int j, Sign s) { e[static_cast<size_t>(i) * cols + j] = s; }
  bool operator==(const SignRect&) const = default;
};

/// Rectangular grid of extended signs; used for templates and
/// qualitative products.
class ExtendedSignPattern {
 public:
  ExtendedSignPattern() = default;
  ExtendedSignPattern(int rows, int cols)
      : rows_(rows), cols_(cols),
        e_(static_cast<size_t>(rows) * cols, ExtendedSign::Zero) {
    if (rows < 1 || cols < 1) throw std::invalid_argument("ExtendedSignPattern: bad shape");
  }

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  ExtendedSign at(int i, int j) const { return e_[static_cast<size_t>(i) * cols_ + j]; }
  void set(int i, int j, ExtendedSign s) { e_[static_cast<size_t>(i) * cols_ + j] = s; }
  bool operator==(const ExtendedSignPattern&) const = default;

  std::string to_text() const;

 private:
  int rows_ = 0;
  int cols_ = 0;
  std::vector<ExtendedSign> e_;
};

// ---------------------------------------------------------------------------
// Parsing / formatting

/// Parse one pattern from rows of whitespace-separated tokens in {+,-,0}.
/// The token grid must be square. Throws ParseError with 1-based position.
SignPattern parse_pattern(std::string_view text);

/// Parse "0+0/00+/+00" (the CSV encoding).
SignPattern parse_compact(std::string_view text);

/// Parse a pattern file: '#' begins a comment line, blank lines separate
/// patterns. Returns the patterns in file order.
std::vector<SignPattern> parse_pattern_file(std::istream& in);
std::vector<SignPattern> parse_pattern_text(std::string_view text);

// ---------------------------------------------------------------------------
// Symmetries

struct Negate {};
struct Transpose {};
struct PermuteSimilar {
  std::vector<int> sigma;  // 0-based permutation of {0..n-1}
};
using Symmetry = std::variant<Negate, Transpose, PermuteSimilar>;

SignPattern negate(const SignPattern& a);
SignPattern transpose(const SignPattern& a);
/// Pattern of P^T A P for the permutation matrix P of sigma:
/// result(i,j) = a(sigma[i], sigma[j]). Throws if sigma is not a permutation.
SignPattern permute_similar(const SignPattern& a, const std::vector<int>& sigma);
SignPattern apply_symmetry(const SignPattern& a, const Symmetry& sym);

// ---------------------------------------------------------------------------
// Decompositions and comparisons

struct SplitParts {
  SignPattern a_plus;   // keeps exactly the + entries
  SignPattern a_minus;  // keeps exactly the - entries
  SignPattern b_a;      // pattern of A_+ - A_-^T; has no Minus entries
};
SplitParts split_parts(const SignPattern& a);

/// True iff every nonzero entry of a equals the corresponding entry of b.
bool is_subpattern(const SignPattern& a, const SignPattern& b);

/// True iff every nonzero entry of m equals the target entry of s
/// (rectangular subpattern test against a plain sign grid).
bool is_subpattern(const SignRect& m, const SignRect& s);

/// True iff every entry of a is admitted by the corresponding template cell.
bool matches_template(const SignPattern& a, const ExtendedSignPattern& t);

/// Entrywise qualitative sign of the product sum_k a_ik b_kj:
/// Zero if all summands vanish, the common sign if they agree, Any otherwise.
ExtendedSignPattern qual_product(const SignPattern& a, const SignPattern& b);

// ---------------------------------------------------------------------------
// Slicing

SignRect to_rect(const SignPattern& a);
SignRect delete_row(const SignRect& m, int i);
SignRect delete_col(const SignRect& m, int j);
/// Principal submatrix on the given (sorted or unsorted) index subset.
SignPattern principal_submatrix(const SignPattern& a, const std::vector<int>& idx);

// ---------------------------------------------------------------------------
// Templates

/// k x k tridiagonal template: + superdiagonal, - subdiagonal, -0 diagonal.
ExtendedSignPattern type_i_template(int k);
/// k x k tridiagonal template: + superdiagonal, + subdiagonal, # diagonal.
ExtendedSignPattern type_ii_template(int k);
/// [[+0,+],[+,#]]
ExtendedSignPattern corner_template_low();
/// [[#,+],[+,+0]]
ExtendedSignPattern corner_template_high();
/// n x (n+1) staircase: row i has - at columns 0..i, + at column i+1, 0 after.
SignRect standard_form_rect(int n);

}  // namespace signpat
