#pragma once

// Closed-form integer homology of manifold expressions.
//
//   H_*(S^k)      = Z in degrees 0 and k
//   H_*(X x Y)    = Kunneth; for torsion-free inputs the ranks convolve
//   H_*(X # Y)    = Z in degrees 0 and n, H_i(X) + H_i(Y) for 1 <= i <= n-1

#include "morseflow/errors.hpp"
#include "morseflow/graded_group.hpp"
#include "morseflow/integer.hpp"
#include "morseflow/manifold_expr.hpp"

#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace morseflow {

inline GradedGroup homology(const ManifoldExpr& expr) {
  GradedGroup h;
  switch (expr.kind()) {
  case ManifoldExpr::Kind::Sphere:
    h.set_rank(0, 1);
    h.set_rank(expr.sphere_dimension(), 1);
    break;
  case ManifoldExpr::Kind::Product: {
    const auto a = homology(expr.left());
    const auto b = homology(expr.right());
    // Rank-wise Kunneth drops the Tor term, which vanishes only without torsion.
    if (!a.torsion_free() || !b.torsion_free())
      throw std::logic_error("rank-wise Kunneth rule applied to a group with torsion");
    std::map<int, Integer> acc;
    for (const auto& [i, ri] : a.ranks())
      for (const auto& [j, rj] : b.ranks()) acc[i + j] += ri * rj;
    for (auto& [d, r] : acc) h.set_rank(d, std::move(r));
    break;
  }
  case ManifoldExpr::Kind::ConnectedSum: {
    const int n = expr.dimension();
    std::vector<Integer> middle(static_cast<std::size_t>(n + 1), 0);
    for (const auto& s : expr.summands()) {
      const auto hs = homology(s);
      for (int i = 1; i <= n - 1; ++i) middle[static_cast<std::size_t>(i)] += hs.rank(i);
    }
    h.set_rank(0, 1);
    h.set_rank(n, 1);
    for (int i = 1; i <= n - 1; ++i) h.set_rank(i, middle[static_cast<std::size_t>(i)]);
    break;
  }
  }
  return h;
}

inline PoincarePolynomial poincare_polynomial(const GradedGroup& h) {
  std::vector<Integer> c(static_cast<std::size_t>(std::max(h.top_degree(), 0) + 1), 0);
  for (const auto& [d, r] : h.ranks())
    if (d >= 0) c[static_cast<std::size_t>(d)] = r;
  return PoincarePolynomial(std::move(c));
}

inline PoincarePolynomial poincare_polynomial(const ManifoldExpr& expr) {
  return poincare_polynomial(homology(expr));
}

inline PoincarePolynomial poly_product(const PoincarePolynomial& p, const PoincarePolynomial& q) {
  if (p.degree() < 0 || q.degree() < 0) return {};
  std::vector<Integer> c(static_cast<std::size_t>(p.degree() + q.degree() + 1), 0);
  for (int i = 0; i <= p.degree(); ++i)
    for (int j = 0; j <= q.degree(); ++j)
      c[static_cast<std::size_t>(i + j)] += p.coefficient(i) * q.coefficient(j);
  return PoincarePolynomial(std::move(c));
}

/// Poincare polynomial of the connected sum of closed n-manifolds with the
/// given polynomials: 1 + sum_i (sum of inputs' b_i) t^i + t^n.
inline PoincarePolynomial connected_sum_poly(std::span<const PoincarePolynomial> polys, int n) {
  if (polys.empty()) throw DomainError("connected sum of zero manifolds");
  if (n < 1) throw DomainError("connected sum dimension must be positive");
  std::vector<Integer> c(static_cast<std::size_t>(n + 1), 0);
  for (std::size_t k = 0; k < polys.size(); ++k) {
    const auto& p = polys[k];
    if (p.degree() != n)
      throw DimensionError("summand " + std::to_string(k) + " has degree " +
                           std::to_string(p.degree()) + ", expected " + std::to_string(n));
    if (p.coefficient(0) != 1 || p.coefficient(n) != 1)
      throw DomainError("summand " + std::to_string(k) +
                        " is not the polynomial of a closed connected orientable manifold "
                        "(bottom and top coefficients must be 1)");
    for (int i = 1; i < n; ++i) c[static_cast<std::size_t>(i)] += p.coefficient(i);
  }
  c.front() = 1;
  c.back() = 1;
  return PoincarePolynomial(std::move(c));
}

inline Integer betti(const ManifoldExpr& expr, int degree) {
  if (degree < 0 || degree > expr.dimension()) return 0;
  return homology(expr).rank(degree);
}

inline Integer euler_characteristic(const GradedGroup& h) {
  Integer chi = 0;
  for (const auto& [d, r] : h.ranks()) chi += (d % 2 == 0) ? r : Integer(-r);
  return chi;
}

inline Integer euler_characteristic(const ManifoldExpr& expr) {
  return euler_characteristic(homology(expr));
}

} // namespace morseflow
