#pragma once

// Manifold expressions: spheres, binary products and n-ary connected sums of
// closed connected orientable manifolds, plus the text grammar
//
//   expr := term ('#' term)*
//   term := atom ('x' atom)*
//   atom := 'S'<int> | 'Sng(' <int> ',' <int> ')' | '(' expr ')'
//
// Product binds tighter than connected sum; whitespace is insignificant.

#include "morseflow/errors.hpp"

#include <cctype>
#include <cstddef>
#include <memory>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace morseflow {

class ManifoldExpr {
public:
  enum class Kind { Sphere, Product, ConnectedSum };

  /// S^k, k >= 1.
  static ManifoldExpr sphere(int k);
  static ManifoldExpr product(ManifoldExpr left, ManifoldExpr right);
  /// Nested connected sums are flattened; all summands must share a
  /// dimension n >= 2.
  static ManifoldExpr connected_sum(std::vector<ManifoldExpr> summands);

  Kind kind() const noexcept;
  int dimension() const noexcept;

  /// Only meaningful for Kind::Sphere.
  int sphere_dimension() const noexcept;
  /// Only meaningful for Kind::Product.
  const ManifoldExpr& left() const noexcept;
  const ManifoldExpr& right() const noexcept;
  /// Only meaningful for Kind::ConnectedSum.
  std::span<const ManifoldExpr> summands() const noexcept;

  friend bool operator==(const ManifoldExpr& a, const ManifoldExpr& b);

private:
  struct Node;
  explicit ManifoldExpr(std::shared_ptr<const Node> node) : node_(std::move(node)) {}

  std::shared_ptr<const Node> node_;
};

struct ManifoldExpr::Node {
  Kind kind;
  int dim;
  std::vector<ManifoldExpr> children;
};

inline ManifoldExpr ManifoldExpr::sphere(int k) {
  if (k < 1)
    throw DomainError("sphere dimension must be >= 1, got " + std::to_string(k));
  return ManifoldExpr(std::make_shared<const Node>(Node{Kind::Sphere, k, {}}));
}

inline ManifoldExpr ManifoldExpr::product(ManifoldExpr left, ManifoldExpr right) {
  const int dim = left.dimension() + right.dimension();
  std::vector<ManifoldExpr> children;
  children.reserve(2);
  children.push_back(std::move(left));
  children.push_back(std::move(right));
  return ManifoldExpr(
      std::make_shared<const Node>(Node{Kind::Product, dim, std::move(children)}));
}

inline ManifoldExpr ManifoldExpr::connected_sum(std::vector<ManifoldExpr> summands) {
  std::vector<ManifoldExpr> flat;
  for (auto& s : summands) {
    if (s.kind() == Kind::ConnectedSum) {
      auto inner = s.summands();
      flat.insert(flat.end(), inner.begin(), inner.end());
    } else {
      flat.push_back(std::move(s));
    }
  }
  if (flat.size() < 2)
    throw DomainError("a connected sum needs at least two summands");
  const int n = flat.front().dimension();
  if (n < 2)
    throw DimensionError("connected sum summands must have dimension >= 2, got " +
                         std::to_string(n));
  for (const auto& s : flat) {
    if (s.dimension() != n)
      throw DimensionError("connected sum of manifolds of dimensions " +
                           std::to_string(n) + " and " +
                           std::to_string(s.dimension()));
  }
  return ManifoldExpr(
      std::make_shared<const Node>(Node{Kind::ConnectedSum, n, std::move(flat)}));
}

inline ManifoldExpr::Kind ManifoldExpr::kind() const noexcept { return node_->kind; }
inline int ManifoldExpr::dimension() const noexcept { return node_->dim; }
inline int ManifoldExpr::sphere_dimension() const noexcept { return node_->dim; }
inline const ManifoldExpr& ManifoldExpr::left() const noexcept {
  return node_->children[0];
}
inline const ManifoldExpr& ManifoldExpr::right() const noexcept {
  return node_->children[1];
}
inline std::span<const ManifoldExpr> ManifoldExpr::summands() const noexcept {
  return node_->children;
}

inline bool operator==(const ManifoldExpr& a, const ManifoldExpr& b) {
  if (a.node_ == b.node_) return true;
  return a.kind() == b.kind() && a.dimension() == b.dimension() &&
         a.node_->children == b.node_->children;
}

inline int dimension(const ManifoldExpr& expr) noexcept { return expr.dimension(); }

/// Canonical S^n_g: S^n for g = 0, S^{n-1} x S^1 for g = 1, and the connected
/// sum of g copies of S^{n-1} x S^1 otherwise.
inline ManifoldExpr s_ng(int n, int g) {
  if (n < 2) throw DomainError("S^n_g requires n >= 2, got n = " + std::to_string(n));
  if (g < 0) throw DomainError("S^n_g requires g >= 0, got g = " + std::to_string(g));
  if (g == 0) return ManifoldExpr::sphere(n);
  auto handle = ManifoldExpr::product(ManifoldExpr::sphere(n - 1), ManifoldExpr::sphere(1));
  if (g == 1) return handle;
  return ManifoldExpr::connected_sum(std::vector<ManifoldExpr>(static_cast<std::size_t>(g), handle));
}

namespace detail {

class ExprParser {
public:
  explicit ExprParser(std::string_view text) {
    for (std::size_t i = 0; i < text.size(); ++i) {
      if (!std::isspace(static_cast<unsigned char>(text[i]))) {
        chars_.push_back(text[i]);
        offsets_.push_back(i);
      }
    }
    end_offset_ = text.size();
  }

  ManifoldExpr parse() {
    auto e = expr();
    if (pos_ != chars_.size()) fail("unexpected '" + std::string(1, chars_[pos_]) + "'");
    return e;
  }

private:
  ManifoldExpr expr() {
    const std::size_t start = offset();
    std::vector<ManifoldExpr> terms;
    terms.push_back(term());
    while (peek() == '#') {
      ++pos_;
      terms.push_back(term());
    }
    if (terms.size() == 1) return std::move(terms.front());
    try {
      return ManifoldExpr::connected_sum(std::move(terms));
    } catch (const DimensionError& e) {
      throw DimensionError(std::string(e.what()) + " (connected sum starting at position " +
                           std::to_string(start) + ")");
    }
  }

  ManifoldExpr term() {
    auto acc = atom();
    while (peek() == 'x') {
      ++pos_;
      acc = ManifoldExpr::product(std::move(acc), atom());
    }
    return acc;
  }

  ManifoldExpr atom() {
    const char c = peek();
    if (c == '(') {
      ++pos_;
      auto e = expr();
      expect(')');
      return e;
    }
    if (c != 'S') fail(c == '\0' ? "unexpected end of input, expected an atom"
                                 : "expected 'S', 'Sng(' or '(' but found '" +
                                       std::string(1, c) + "'");
    ++pos_;
    if (peek() == 'n') {
      const std::size_t at = offset();
      expect('n');
      expect('g');
      expect('(');
      const long n = integer();
      expect(',');
      const long g = integer();
      expect(')');
      if (n < 2 || g < 0)
        throw DomainError("Sng(" + std::to_string(n) + "," + std::to_string(g) +
                          ") requires n >= 2 and g >= 0 (at position " +
                          std::to_string(at) + ")");
      return s_ng(static_cast<int>(n), static_cast<int>(g));
    }
    const std::size_t at = offset();
    const long k = integer();
    if (k < 1)
      throw DomainError("sphere dimension must be >= 1, got S" + std::to_string(k) +
                        " at position " + std::to_string(at));
    return ManifoldExpr::sphere(static_cast<int>(k));
  }

  long integer() {
    bool negative = false;
    if (peek() == '-') {
      negative = true;
      ++pos_;
    }
    if (!std::isdigit(static_cast<unsigned char>(peek()))) fail("expected an integer");
    long value = 0;
    while (std::isdigit(static_cast<unsigned char>(peek()))) {
      value = value * 10 + (peek() - '0');
      if (value > 100000) fail("integer too large");
      ++pos_;
    }
    return negative ? -value : value;
  }

  void expect(char c) {
    if (peek() != c) {
      const char got = peek();
      fail("expected '" + std::string(1, c) + "' but found " +
           (got == '\0' ? std::string("end of input") : "'" + std::string(1, got) + "'"));
    }
    ++pos_;
  }

  char peek() const { return pos_ < chars_.size() ? chars_[pos_] : '\0'; }
  std::size_t offset() const { return pos_ < offsets_.size() ? offsets_[pos_] : end_offset_; }
  [[noreturn]] void fail(const std::string& msg) const { throw ParseError(msg, offset()); }

  std::vector<char> chars_;
  std::vector<std::size_t> offsets_;
  std::size_t end_offset_ = 0;
  std::size_t pos_ = 0;
};

} // namespace detail

inline ManifoldExpr parse_manifold(std::string_view text) {
  return detail::ExprParser(text).parse();
}

/// Canonical text form; parse_manifold(render(e)) == e.
inline std::string render(const ManifoldExpr& expr) {
  switch (expr.kind()) {
  case ManifoldExpr::Kind::Sphere:
    return "S" + std::to_string(expr.sphere_dimension());
  case ManifoldExpr::Kind::Product: {
    auto wrap = [](const ManifoldExpr& e, bool wrap_product) {
      const bool paren = e.kind() == ManifoldExpr::Kind::ConnectedSum ||
                         (wrap_product && e.kind() == ManifoldExpr::Kind::Product);
      return paren ? "(" + render(e) + ")" : render(e);
    };
    return wrap(expr.left(), false) + " x " + wrap(expr.right(), true);
  }
  case ManifoldExpr::Kind::ConnectedSum: {
    std::string out;
    for (const auto& s : expr.summands()) {
      if (!out.empty()) out += " # ";
      out += render(s);
    }
    return out;
  }
  }
  return {};
}

} // namespace morseflow
