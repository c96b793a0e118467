#pragma once

#include "morseflow/integer.hpp"

#include <algorithm>
#include <cstddef>
#include <initializer_list>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

namespace morseflow {

/// Finitely generated graded abelian group: H_i = Z^{rank_i} + sum Z/d_j.
/// Zero ranks and empty torsion lists are never stored.
class GradedGroup {
public:
  GradedGroup() = default;

  void set_rank(int degree, Integer rank) {
    if (rank < 0) throw std::invalid_argument("negative rank in degree " + std::to_string(degree));
    if (rank == 0)
      ranks_.erase(degree);
    else
      ranks_[degree] = std::move(rank);
  }

  /// Invariant factors must satisfy d_1 | d_2 | ... with every d_j >= 2.
  void set_torsion(int degree, std::vector<Integer> factors) {
    for (std::size_t j = 0; j < factors.size(); ++j) {
      if (factors[j] < 2)
        throw std::invalid_argument("torsion invariant factor must be >= 2");
      if (j > 0 && factors[j] % factors[j - 1] != 0)
        throw std::invalid_argument("torsion invariant factors violate divisibility chain");
    }
    if (factors.empty())
      torsion_.erase(degree);
    else
      torsion_[degree] = std::move(factors);
  }

  Integer rank(int degree) const {
    auto it = ranks_.find(degree);
    return it == ranks_.end() ? Integer(0) : it->second;
  }

  std::vector<Integer> torsion(int degree) const {
    auto it = torsion_.find(degree);
    return it == torsion_.end() ? std::vector<Integer>{} : it->second;
  }

  const std::map<int, Integer>& ranks() const noexcept { return ranks_; }
  const std::map<int, std::vector<Integer>>& torsion() const noexcept { return torsion_; }

  bool torsion_free() const noexcept { return torsion_.empty(); }

  /// Largest degree with nonzero rank or torsion, -1 for the zero group.
  int top_degree() const {
    int top = -1;
    if (!ranks_.empty()) top = ranks_.rbegin()->first;
    if (!torsion_.empty()) top = std::max(top, torsion_.rbegin()->first);
    return top;
  }

  friend bool operator==(const GradedGroup&, const GradedGroup&) = default;

private:
  std::map<int, Integer> ranks_;
  std::map<int, std::vector<Integer>> torsion_;
};

/// Dense Poincare polynomial sum b_i t^i. Trailing zero coefficients are
/// trimmed, so the zero polynomial has no coefficients.
class PoincarePolynomial {
public:
  PoincarePolynomial() = default;
  explicit PoincarePolynomial(std::vector<Integer> coefficients)
      : coeffs_(std::move(coefficients)) {
    for (const auto& c : coeffs_)
      if (c < 0) throw std::invalid_argument("Poincare polynomial coefficients must be >= 0");
    trim();
  }
  PoincarePolynomial(std::initializer_list<int> coefficients)
      : PoincarePolynomial(std::vector<Integer>(coefficients.begin(), coefficients.end())) {}

  static PoincarePolynomial one() { return PoincarePolynomial{1}; }
  /// 1 + t^k
  static PoincarePolynomial sphere(int k) {
    std::vector<Integer> c(static_cast<std::size_t>(k) + 1, 0);
    c.front() += 1;
    c.back() += 1;
    return PoincarePolynomial(std::move(c));
  }

  /// -1 for the zero polynomial.
  int degree() const noexcept { return static_cast<int>(coeffs_.size()) - 1; }

  Integer coefficient(int i) const {
    if (i < 0 || i > degree()) return 0;
    return coeffs_[static_cast<std::size_t>(i)];
  }

  const std::vector<Integer>& coefficients() const noexcept { return coeffs_; }

  /// Pretty form, e.g. "1 + 2t + 2t^3 + t^4".
  std::string to_string() const {
    std::string out;
    for (int i = 0; i <= degree(); ++i) {
      const auto& c = coeffs_[static_cast<std::size_t>(i)];
      if (c == 0) continue;
      if (!out.empty()) out += " + ";
      std::string mono = i == 0 ? "" : (i == 1 ? "t" : "t^" + std::to_string(i));
      if (i == 0 || c != 1)
        out += c.str() + mono;
      else
        out += mono;
    }
    return out.empty() ? "0" : out;
  }

  friend bool operator==(const PoincarePolynomial&, const PoincarePolynomial&) = default;

private:
  void trim() {
    while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
  }

  std::vector<Integer> coeffs_;
};

} // namespace morseflow
