#include "signpat/pattern.hpp"

#include <algorithm>
#include <istream>
#include <sstream>

namespace signpat {

std::string SignPattern::to_text() const {
  std::string out;
  for (int i = 0; i < n_; ++i) {
    for (int j = 0; j < n_; ++j) {
      if (j) out += ' ';
      out += to_char(at(i, j));
    }
    if (i + 1 < n_) out += '\n';
  }
  return out;
}

std::string SignPattern::to_compact() const {
  std::string out;
  for (int i = 0; i < n_; ++i) {
    if (i) out += '/';
    for (int j = 0; j < n_; ++j) out += to_char(at(i, j));
  }
  return out;
}

std::string ExtendedSignPattern::to_text() const {
  std::string out;
  for (int i = 0; i < rows_; ++i) {
    for (int j = 0; j < cols_; ++j) {
      if (j) out += ' ';
      out += to_string(at(i, j));
    }
    if (i + 1 < rows_) out += '\n';
  }
  return out;
}

namespace {

struct Token {
  std::string text;
  int row;  // 1-based
  int col;  // 1-based token index within the row
};

std::vector<std::vector<Token>> tokenize_rows(std::string_view text) {
  std::vector<std::vector<Token>> rows;
  int lineno = 0;
  size_t pos = 0;
  while (pos <= text.size()) {
    size_t nl = text.find('\n', pos);
    std::string_view line =
        text.substr(pos, nl == std::string_view::npos ? std::string_view::npos : nl - pos);
    ++lineno;
    std::vector<Token> toks;
    std::istringstream ls{std::string(line)};
    std::string t;
    int c = 0;
    while (ls >> t) toks.push_back({t, lineno, ++c});
    if (!toks.empty()) rows.push_back(std::move(toks));
    if (nl == std::string_view::npos) break;
    pos = nl + 1;
  }
  return rows;
}

SignPattern pattern_from_tokens(const std::vector<std::vector<Token>>& rows) {
  if (rows.empty()) throw ParseError("empty input", 0, 0);
  const int n = static_cast<int>(rows.size());
  for (const auto& r : rows) {
    if (static_cast<int>(r.size()) != n) {
      const Token& t = r.front();
      throw ParseError("ragged rows: expected " + std::to_string(n) + " tokens, got " +
                           std::to_string(r.size()),
                       t.row, 1);
    }
  }
  SignPattern a(n);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      const Token& t = rows[i][j];
      if (t.text.size() != 1 || !sign_from_char(t.text[0])) {
        throw ParseError("unknown token '" + t.text + "' at (" + std::to_string(i + 1) + "," +
                             std::to_string(j + 1) + ")",
                         i + 1, j + 1);
      }
      a.set(i, j, *sign_from_char(t.text[0]));
    }
  }
  return a;
}

}  // namespace

SignPattern parse_pattern(std::string_view text) {
  return pattern_from_tokens(tokenize_rows(text));
}

SignPattern parse_compact(std::string_view text) {
  std::vector<std::string> rows;
  std::string cur;
  for (char c : text) {
    if (c == '/') {
      rows.push_back(cur);
      cur.clear();
    } else {
      cur += c;
    }
  }
  rows.push_back(cur);
  const int n = static_cast<int>(rows.size());
  SignPattern a(n);
  for (int i = 0; i < n; ++i) {
    if (static_cast<int>(rows[i].size()) != n)
      throw ParseError("compact pattern is not square", i + 1, 1);
    for (int j = 0; j < n; ++j) {
      auto s = sign_from_char(rows[i][j]);
      if (!s)
        throw ParseError(std::string("unknown token '") + rows[i][j] + "'", i + 1, j + 1);
      a.set(i, j, *s);
    }
  }
  return a;
}

std::vector<SignPattern> parse_pattern_text(std::string_view text) {
  // Strip comments, group non-blank lines into blocks.
  std::vector<SignPattern> out;
  std::string block;
  bool block_nonempty = false;
  auto flush = [&] {
    if (block_nonempty) out.push_back(parse_pattern(block));
    block.clear();
    block_nonempty = false;
  };
  size_t pos = 0;
  while (pos <= text.size()) {
    size_t nl = text.find('\n', pos);
    std::string line(text.substr(pos, nl == std::string_view::npos ? std::string_view::npos
                                                                   : nl - pos));
    size_t first = line.find_first_not_of(" \t\r");
    bool blank = (first == std::string::npos);
    bool comment = !blank && line[first] == '#';
    if (blank) {
      flush();
    } else if (!comment) {
      block += line;
      block += '\n';
      block_nonempty = true;
    }
    if (nl == std::string_view::npos) break;
    pos = nl + 1;
  }
  flush();
  if (out.empty()) throw ParseError("empty input", 0, 0);
  return out;
}

std::vector<SignPattern> parse_pattern_file(std::istream& in) {
  std::ostringstream ss;
  ss << in.rdbuf();
  return parse_pattern_text(ss.str());
}

SignPattern negate(const SignPattern& a) {
  SignPattern b(a.order());
  for (int i = 0; i < a.order(); ++i)
    for (int j = 0; j < a.order(); ++j) b.set(i, j, -a.at(i, j));
  return b;
}

SignPattern transpose(const SignPattern& a) {
  SignPattern b(a.order());
  for (int i = 0; i < a.order(); ++i)
    for (int j = 0; j < a.order(); ++j) b.set(i, j, a.at(j, i));
  return b;
}

SignPattern permute_similar(const SignPattern& a, const std::vector<int>& sigma) {
  const int n = a.order();
  if (static_cast<int>(sigma.size()) != n)
    throw std::invalid_argument("permute_similar: sigma has wrong length");
  std::vector<bool> seen(n, false);
  for (int v : sigma) {
    if (v < 0 || v >= n || seen[v])
      throw std::invalid_argument("permute_similar: sigma is not a permutation");
    seen[v] = true;
  }
  SignPattern b(n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) b.set(i, j, a.at(sigma[i], sigma[j]));
  return b;
}

SignPattern apply_symmetry(const SignPattern& a, const Symmetry& sym) {
  if (std::holds_alternative<Negate>(sym)) return negate(a);
  if (std::holds_alternative<Transpose>(sym)) return transpose(a);
  return permute_similar(a, std::get<PermuteSimilar>(sym).sigma);
}

SplitParts split_parts(const SignPattern& a) {
  const int n = a.order();
  SplitParts p{SignPattern(n), SignPattern(n), SignPattern(n)};
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      if (a.at(i, j) == Sign::Plus) p.a_plus.set(i, j, Sign::Plus);
      if (a.at(i, j) == Sign::Minus) p.a_minus.set(i, j, Sign::Minus);
      // Entry (i,j) of A_+ - A_-^T: a + from a_ij = + or from a_ji = -.
      // The two sources cannot cancel, both contribute +.
      if (a.at(i, j) == Sign::Plus || a.at(j, i) == Sign::Minus) p.b_a.set(i, j, Sign::Plus);
    }
  }
  return p;
}

bool is_subpattern(const SignPattern& a, const SignPattern& b) {
  if (a.order() != b.order()) throw std::invalid_argument("is_subpattern: order mismatch");
  for (int i = 0; i < a.order(); ++i)
    for (int j = 0; j < a.order(); ++j)
      if (a.at(i, j) != Sign::Zero && a.at(i, j) != b.at(i, j)) return false;
  return true;
}

bool is_subpattern(const SignRect& m, const SignRect& s) {
  if (m.rows != s.rows || m.cols != s.cols)
    throw std::invalid_argument("is_subpattern: shape mismatch");
  for (int i = 0; i < m.rows; ++i)
    for (int j = 0; j < m.cols; ++j)
      if (m.at(i, j) != Sign::Zero && m.at(i, j) != s.at(i, j)) return false;
  return true;
}

bool matches_template(const SignPattern& a, const ExtendedSignPattern& t) {
  if (a.order() != t.rows() || a.order() != t.cols())
    throw std::invalid_argument("matches_template: dimension mismatch");
  for (int i = 0; i < a.order(); ++i)
    for (int j = 0; j < a.order(); ++j)
      if (!admits(t.at(i, j), a.at(i, j))) return false;
  return true;
}

ExtendedSignPattern qual_product(const SignPattern& a, const SignPattern& b) {
  if (a.order() != b.order()) throw std::invalid_argument("qual_product: order mismatch");
  const int n = a.order();
  ExtendedSignPattern p(n, n);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      bool plus = false, minus = false;
      for (int k = 0; k < n; ++k) {
        Sign s = a.at(i, k) * b.at(k, j);
        if (s == Sign::Plus) plus = true;
        if (s == Sign::Minus) minus = true;
      }
      ExtendedSign e = ExtendedSign::Zero;
      if (plus && minus) e = ExtendedSign::Any;
      else if (plus) e = ExtendedSign::Plus;
      else if (minus) e = ExtendedSign::Minus;
      p.set(i, j, e);
    }
  }
  return p;
}

SignRect to_rect(const SignPattern& a) {
  SignRect m(a.order(), a.order());
  for (int i = 0; i < a.order(); ++i)
    for (int j = 0; j < a.order(); ++j) m.set(i, j, a.at(i, j));
  return m;
}

SignRect delete_row(const SignRect& m, int r) {
  if (r < 0 || r >= m.rows) throw std::out_of_range("delete_row: bad index");
  SignRect out(m.rows - 1, m.cols);
  for (int i = 0, oi = 0; i < m.rows; ++i) {
    if (i == r) continue;
    for (int j = 0; j < m.cols; ++j) out.set(oi, j, m.at(i, j));
    ++oi;
  }
  return out;
}

SignRect delete_col(const SignRect& m, int c) {
  if (c < 0 || c >= m.cols) throw std::out_of_range("delete_col: bad index");
  SignRect out(m.rows, m.cols - 1);
  for (int i = 0; i < m.rows; ++i)
    for (int j = 0, oj = 0; j < m.cols; ++j) {
      if (j == c) continue;
      out.set(i, oj++, m.at(i, j));
    }
  return out;
}

SignPattern principal_submatrix(const SignPattern& a, const std::vector<int>& idx) {
  std::vector<int> s = idx;
  std::sort(s.begin(), s.end());
  const int k = static_cast<int>(s.size());
  if (k == 0) throw std::invalid_argument("principal_submatrix: empty index set");
  SignPattern b(k);
  for (int i = 0; i < k; ++i)
    for (int j = 0; j < k; ++j) b.set(i, j, a.at(s[i], s[j]));
  return b;
}

ExtendedSignPattern type_i_template(int k) {
  ExtendedSignPattern t(k, k);
  for (int i = 0; i < k; ++i) {
    t.set(i, i, ExtendedSign::MinusZero);
    if (i + 1 < k) {
      t.set(i, i + 1, ExtendedSign::Plus);
      t.set(i + 1, i, ExtendedSign::Minus);
    }
  }
  return t;
}

ExtendedSignPattern type_ii_template(int k) {
  ExtendedSignPattern t(k, k);
  for (int i = 0; i < k; ++i) {
    t.set(i, i, ExtendedSign::Any);
    if (i + 1 < k) {
      t.set(i, i + 1, ExtendedSign::Plus);
      t.set(i + 1, i, ExtendedSign::Plus);
    }
  }
  return t;
}

ExtendedSignPattern corner_template_low() {
  ExtendedSignPattern t(2, 2);
  t.set(0, 0, ExtendedSign::PlusZero);
  t.set(0, 1, ExtendedSign::Plus);
  t.set(1, 0, ExtendedSign::Plus);
  t.set(1, 1, ExtendedSign::Any);
  return t;
}

ExtendedSignPattern corner_template_high() {
  ExtendedSignPattern t(2, 2);
  t.set(0, 0, ExtendedSign::Any);
  t.set(0, 1, ExtendedSign::Plus);
  t.set(1, 0, ExtendedSign::Plus);
  t.set(1, 1, ExtendedSign::PlusZero);
  return t;
}

SignRect standard_form_rect(int n) {
  SignRect s(n, n + 1);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j <= i; ++j) s.set(i, j, Sign::Minus);
    s.set(i, i + 1, Sign::Plus);
  }
  return s;
}

}  // namespace signpat
