#include "lierig/dsl.hpp"

#include <algorithm>
#include <cctype>
#include <optional>
#include <set>
#include <sstream>

namespace lierig {

ParseError::ParseError(std::size_t line, std::size_t column, const std::string& message)
    : std::runtime_error(std::to_string(line) + ":" + std::to_string(column) + ": " + message),
      line_(line),
      column_(column),
      detail_(message) {}

StructureConstants AlgebraDocument::constants() const {
  StructureConstants g(dim);
  for (const auto& [key, v] : brackets) g.set_bracket(key.first, key.second, v);
  return g;
}

const TorusBlock& AlgebraDocument::torus(const std::string& torus_name) const {
  for (const auto& t : tori)
    if (t.name == torus_name) return t;
  throw std::out_of_range("no torus named '" + torus_name + "' in " + name);
}

namespace {

bool is_ident_start(char c) { return std::isalpha(static_cast<unsigned char>(c)) || c == '_'; }
bool is_ident_char(char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '_'; }
bool is_digit(char c) { return std::isdigit(static_cast<unsigned char>(c)) != 0; }

class Cursor {
 public:
  Cursor(std::string_view text, std::size_t line) : text_(text), line_(line) {}

  void skip_space() {
    while (pos_ < text_.size() && (text_[pos_] == ' ' || text_[pos_] == '\t' || text_[pos_] == '\r')) ++pos_;
  }
  bool at_end() {
    skip_space();
    return pos_ >= text_.size();
  }
  char peek() {
    skip_space();
    return pos_ < text_.size() ? text_[pos_] : '\0';
  }
  std::size_t column() const { return pos_ + 1; }
  std::size_t line() const { return line_; }

  [[noreturn]] void fail(const std::string& msg) const { throw ParseError(line_, column(), msg); }
  [[noreturn]] void fail_at(std::size_t col, const std::string& msg) const { throw ParseError(line_, col, msg); }

  void expect(char c) {
    if (peek() != c) fail(std::string("expected '") + c + "'");
    ++pos_;
  }
  bool accept(char c) {
    if (peek() != c) return false;
    ++pos_;
    return true;
  }

  std::string word() {
    skip_space();
    const std::size_t start = pos_;
    while (pos_ < text_.size() && !std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    if (start == pos_) fail("expected a word");
    return std::string(text_.substr(start, pos_ - start));
  }

  std::string identifier() {
    skip_space();
    if (pos_ >= text_.size() || !is_ident_start(text_[pos_])) fail("expected an identifier");
    const std::size_t start = pos_;
    while (pos_ < text_.size() && is_ident_char(text_[pos_])) ++pos_;
    return std::string(text_.substr(start, pos_ - start));
  }

  void keyword(std::string_view kw) {
    const std::size_t col = (skip_space(), column());
    if (identifier() != kw) fail_at(col, "expected '" + std::string(kw) + "'");
  }

  std::size_t natural() {
    skip_space();
    const std::size_t start = pos_;
    while (pos_ < text_.size() && is_digit(text_[pos_])) ++pos_;
    if (start == pos_) fail("expected a non-negative integer");
    return std::stoul(std::string(text_.substr(start, pos_ - start)));
  }

  /// [-]int[/posint]; allow_sign is false inside bracket terms, where the sign
  /// belongs to the term separator.
  Rational rational(bool allow_sign) {
    skip_space();
    const std::size_t start = pos_;
    if (allow_sign && pos_ < text_.size() && text_[pos_] == '-') ++pos_;
    const std::size_t digits = pos_;
    while (pos_ < text_.size() && is_digit(text_[pos_])) ++pos_;
    if (digits == pos_) fail_at(start + 1, "expected a rational number");
    if (pos_ < text_.size() && text_[pos_] == '/') {
      ++pos_;
      const std::size_t den = pos_;
      while (pos_ < text_.size() && is_digit(text_[pos_])) ++pos_;
      if (den == pos_) fail("expected a denominator");
    }
    const std::string token(text_.substr(start, pos_ - start));
    try {
      return parse_rational(token);
    } catch (const std::invalid_argument& e) {
      fail_at(start + 1, e.what());
    }
  }

  void expect_end() {
    if (!at_end()) fail("unexpected trailing text");
  }

 private:
  std::string_view text_;
  std::size_t line_;
  std::size_t pos_ = 0;
};

struct OpenTorus {
  std::size_t line = 0;
  std::size_t column = 0;
  std::string name;
  std::vector<Vector> rows;
};

class Parser {
 public:
  AlgebraDocument run(std::string_view text) {
    std::size_t line_no = 0;
    std::size_t start = 0;
    while (start <= text.size()) {
      std::size_t end = text.find('\n', start);
      if (end == std::string_view::npos) end = text.size();
      ++line_no;
      std::string_view line = text.substr(start, end - start);
      if (auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
      statement(Cursor(line, line_no));
      start = end + 1;
    }
    close_torus();
    if (!have_header_) throw ParseError(line_no, 1, "missing 'algebra <name> dim <n>' header");
    if (!have_basis_) throw ParseError(line_no, 1, "missing 'basis' line");
    return std::move(doc_);
  }

 private:
  void statement(Cursor c) {
    if (c.at_end()) return;
    if (c.peek() == '[') {
      close_torus();
      require_basis(c);
      bracket(c);
      return;
    }
    const std::size_t col = c.column();
    const std::string kw = c.identifier();
    if (kw == "algebra") {
      if (have_header_) c.fail_at(col, "duplicate 'algebra' header");
      doc_.name = c.word();
      c.keyword("dim");
      const std::size_t dcol = (c.skip_space(), c.column());
      doc_.dim = c.natural();
      if (doc_.dim == 0) c.fail_at(dcol, "dimension must be positive");
      c.expect_end();
      have_header_ = true;
    } else if (kw == "basis") {
      if (!have_header_) c.fail_at(col, "'basis' before 'algebra' header");
      if (have_basis_) c.fail_at(col, "duplicate 'basis' line");
      while (!c.at_end()) {
        const std::size_t lcol = c.column();
        std::string label = c.identifier();
        if (std::find(doc_.labels.begin(), doc_.labels.end(), label) != doc_.labels.end())
          c.fail_at(lcol, "duplicate basis label '" + label + "'");
        doc_.labels.push_back(std::move(label));
      }
      if (doc_.labels.size() != doc_.dim)
        c.fail("basis has " + std::to_string(doc_.labels.size()) + " labels, expected " + std::to_string(doc_.dim));
      have_basis_ = true;
    } else if (kw == "torus") {
      close_torus();
      require_basis(c);
      OpenTorus t;
      t.line = c.line();
      t.column = col;
      const std::size_t ncol = (c.skip_space(), c.column());
      t.name = c.identifier();
      for (const auto& existing : doc_.tori)
        if (existing.name == t.name) c.fail_at(ncol, "duplicate torus '" + t.name + "'");
      c.expect_end();
      torus_ = std::move(t);
    } else if (kw == "row") {
      if (!torus_) c.fail_at(col, "'row' outside a torus block");
      Vector row;
      while (!c.at_end()) row.push_back(c.rational(true));
      if (row.size() != doc_.dim)
        c.fail_at(col, "row has " + std::to_string(row.size()) + " entries, expected " + std::to_string(doc_.dim));
      torus_->rows.push_back(std::move(row));
    } else {
      c.fail_at(col, "unknown statement '" + kw + "'");
    }
  }

  void require_basis(const Cursor& c) const {
    if (!have_basis_) c.fail_at(1, "statement before 'basis' line");
  }

  std::size_t label_index(Cursor& c) {
    const std::size_t col = (c.skip_space(), c.column());
    const std::string label = c.identifier();
    auto it = std::find(doc_.labels.begin(), doc_.labels.end(), label);
    if (it == doc_.labels.end()) c.fail_at(col, "unknown label '" + label + "'");
    return static_cast<std::size_t>(it - doc_.labels.begin());
  }

  void bracket(Cursor& c) {
    const std::size_t col = c.column();
    c.expect('[');
    const std::size_t i = label_index(c);
    c.expect(',');
    const std::size_t j = label_index(c);
    c.expect(']');
    if (i == j) c.fail_at(col, "self-bracket [" + doc_.labels[i] + "," + doc_.labels[i] + "] is always zero");
    const auto key = std::minmax(i, j);
    if (!seen_.insert(key).second)
      c.fail_at(col, "duplicate bracket [" + doc_.labels[key.first] + "," + doc_.labels[key.second] + "]");
    c.expect('=');

    Vector v = zero_vector(doc_.dim);
    if (c.peek() == '0') {
      c.rational(false);
      if (c.at_end()) return;
      c.fail("a literal 0 right-hand side stands alone");
    }
    bool first = true;
    while (true) {
      int sign = 1;
      if (c.accept('-')) {
        sign = -1;
      } else if (!c.accept('+') && !first) {
        c.fail("expected '+' or '-'");
      }
      Rational coef = 1;
      if (is_digit(c.peek())) {
        coef = c.rational(false);
        c.expect('*');
      }
      v[label_index(c)] += sign * coef;
      first = false;
      if (c.at_end()) break;
    }
    if (is_zero(v)) return;
    if (i > j)
      for (auto& x : v) x = -x;
    doc_.brackets[key] = std::move(v);
  }

  void close_torus() {
    if (!torus_) return;
    OpenTorus t = std::move(*torus_);
    torus_.reset();
    const std::size_t n = doc_.dim;
    if (t.rows.empty() || t.rows.size() % n != 0)
      throw ParseError(t.line, t.column,
                       "torus '" + t.name + "' has " + std::to_string(t.rows.size()) +
                           " rows, expected a positive multiple of " + std::to_string(n));
    TorusBlock block{t.name, {}};
    for (std::size_t m = 0; m < t.rows.size(); m += n)
      block.generators.push_back(RatMatrix::from_rows({t.rows.begin() + m, t.rows.begin() + m + n}, n));
    doc_.tori.push_back(std::move(block));
  }

  AlgebraDocument doc_;
  bool have_header_ = false;
  bool have_basis_ = false;
  std::set<std::pair<std::size_t, std::size_t>> seen_;
  std::optional<OpenTorus> torus_;
};

}  // namespace

AlgebraDocument parse_document(std::string_view text) { return Parser().run(text); }

std::string format_combination(const std::vector<std::string>& labels, const Vector& v) {
  std::string out;
  for (std::size_t k = 0; k < v.size(); ++k) {
    if (v[k] == 0) continue;
    const bool negative = v[k] < 0;
    if (out.empty())
      out += negative ? "-" : "";
    else
      out += negative ? " - " : " + ";
    const Rational mag = abs(v[k]);
    if (mag != 1) out += to_string(mag) + "*";
    out += labels[k];
  }
  return out.empty() ? "0" : out;
}

std::string serialize(const AlgebraDocument& doc) {
  std::ostringstream out;
  out << "algebra " << doc.name << " dim " << doc.dim << "\n";
  out << "basis";
  for (const auto& l : doc.labels) out << ' ' << l;
  out << "\n";
  for (const auto& [key, v] : doc.brackets) {
    out << '[' << doc.labels[key.first] << ',' << doc.labels[key.second] << "] = " << format_combination(doc.labels, v)
        << "\n";
  }
  for (const auto& t : doc.tori) {
    out << "torus " << t.name << "\n";
    for (const auto& m : t.generators)
      for (std::size_t r = 0; r < m.rows(); ++r) {
        out << "row";
        for (std::size_t c = 0; c < m.cols(); ++c) out << ' ' << to_string(m(r, c));
        out << "\n";
      }
  }
  return out.str();
}

AlgebraDocument make_document(std::string name, std::vector<std::string> labels, const StructureConstants& g,
                              std::vector<TorusBlock> tori) {
  if (labels.size() != g.dim()) throw std::invalid_argument("make_document: label count does not match dimension");
  AlgebraDocument doc;
  doc.name = std::move(name);
  doc.dim = g.dim();
  doc.labels = std::move(labels);
  for (const auto& [key, v] : g.brackets()) doc.brackets[key] = v;
  doc.tori = std::move(tori);
  return doc;
}

}  // namespace lierig
