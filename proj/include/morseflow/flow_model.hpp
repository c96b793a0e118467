#pragma once

// Combinatorial data of gradient-like flows whose saddles have pairwise
// disjoint invariant manifolds, and the constraints such flows satisfy on
// S^n_g: the genus formula g = (nu - mu + 2) / 2, the Morse inequalities
// c_i >= b_i(S^n_g), the middle-index obstruction, and the count laws
// nu = 2g + k, mu = k + 2.

#include "morseflow/errors.hpp"
#include "morseflow/homology.hpp"
#include "morseflow/integer.hpp"
#include "morseflow/manifold_expr.hpp"

#include <algorithm>
#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

namespace morseflow {

struct Connection {
  std::string from;
  std::string to;

  friend bool operator==(const Connection&, const Connection&) = default;
};

/// Equilibrium counts c_0..c_n of a flow on a closed n-manifold, optionally
/// with the saddle/node connection graph.
struct FlowSpec {
  int n = 0;
  std::vector<std::int64_t> counts;
  bool no_heteroclinic = true;
  /// Present together with `indices`; `indices` maps every equilibrium id to
  /// its Morse index.
  std::optional<std::vector<Connection>> connections;
  std::map<std::string, int> indices;

  /// nu: equilibria of index 1..n-1.
  std::int64_t saddles() const {
    std::int64_t nu = 0;
    for (int i = 1; i < n; ++i) nu += counts[static_cast<std::size_t>(i)];
    return nu;
  }
  /// mu: equilibria of index 0 or n.
  std::int64_t nodes() const { return counts.front() + counts.back(); }

  friend bool operator==(const FlowSpec&, const FlowSpec&) = default;
};

/// Throws MalformedSpec unless the spec is structurally valid.
inline void check_well_formed(const FlowSpec& spec) {
  if (spec.n < 2) throw MalformedSpec("n must be >= 2, got " + std::to_string(spec.n));
  if (spec.counts.size() != static_cast<std::size_t>(spec.n) + 1)
    throw MalformedSpec("counts must have length n+1 = " + std::to_string(spec.n + 1) +
                        ", got " + std::to_string(spec.counts.size()));
  for (std::size_t i = 0; i < spec.counts.size(); ++i)
    if (spec.counts[i] < 0)
      throw MalformedSpec("counts[" + std::to_string(i) + "] is negative");
  if (spec.counts.front() == 0)
    throw MalformedSpec("counts[0] must be >= 1: a flow on a closed manifold has a sink");
  if (spec.counts.back() == 0)
    throw MalformedSpec("counts[n] must be >= 1: a flow on a closed manifold has a source");
  if (!spec.connections) {
    if (!spec.indices.empty()) throw MalformedSpec("indices given without connections");
    return;
  }
  std::vector<std::int64_t> tally(spec.counts.size(), 0);
  for (const auto& [id, index] : spec.indices) {
    if (index < 0 || index > spec.n)
      throw MalformedSpec("indices." + id + " = " + std::to_string(index) +
                          " is outside 0..n");
    ++tally[static_cast<std::size_t>(index)];
  }
  if (tally != spec.counts)
    throw MalformedSpec("indices do not agree with counts");
  for (std::size_t e = 0; e < spec.connections->size(); ++e) {
    const auto& c = (*spec.connections)[e];
    for (const auto* id : {&c.from, &c.to})
      if (!spec.indices.contains(*id))
        throw MalformedSpec("connections[" + std::to_string(e) + "] refers to unknown equilibrium '" +
                            *id + "'");
  }
}

/// g = (nu - mu + 2) / 2. Throws GenusError when that is negative or not an
/// integer.
inline std::int64_t genus_of_counts(std::int64_t nu, std::int64_t mu) {
  if (nu < 0) throw DomainError("saddle count must be >= 0");
  if (mu < 2) throw DomainError("node count must be >= 2");
  const std::int64_t twice = nu - mu + 2;
  if (twice < 0)
    throw GenusError(GenusErrorKind::Negative,
                     "nu - mu + 2 = " + std::to_string(twice) + " is negative");
  if (twice % 2 != 0)
    throw GenusError(GenusErrorKind::Parity,
                     "nu - mu = " + std::to_string(nu - mu) + " is odd, genus is not an integer");
  return twice / 2;
}

struct MorseViolation {
  int index;
  std::int64_t count;
  Integer betti;

  friend bool operator==(const MorseViolation&, const MorseViolation&) = default;
};

/// Every i with c_i < b_i(S^n_g).
inline std::vector<MorseViolation> check_morse_inequalities(const FlowSpec& spec, std::int64_t g) {
  const auto h = homology(s_ng(spec.n, static_cast<int>(g)));
  std::vector<MorseViolation> out;
  for (int i = 0; i <= spec.n; ++i) {
    const auto c = spec.counts[static_cast<std::size_t>(i)];
    auto b = h.rank(i);
    if (Integer(c) < b) out.push_back({i, c, std::move(b)});
  }
  return out;
}

enum class Verdict { Admissible, Forbidden };

struct ObstructionResult {
  Verdict verdict;
  std::string reason;
};

/// Can a saddle of Morse index i exist on S^n_g for a flow without
/// heteroclinic intersections? The closures of its unstable and stable
/// manifolds are spheres of dimensions i and n-i meeting transversally at the
/// saddle alone, so their intersection number is +-1. If both homology groups
/// H_i and H_{n-i} vanish, both spheres bound and the intersection number
/// must be 0.
inline ObstructionResult obstruction_check(int n, int index, std::int64_t g) {
  if (n < 3) throw DomainError("obstruction check requires n >= 3, got " + std::to_string(n));
  if (index < 1 || index > n - 1)
    throw DomainError("saddle index " + std::to_string(index) + " is outside 1.." +
                      std::to_string(n - 1));
  if (g < 0) throw DomainError("genus must be >= 0");
  const std::string where = "index " + std::to_string(index) + " on S^" + std::to_string(n) +
                            "_" + std::to_string(g);
  if (index < 2 || index > n - 2)
    return {Verdict::Admissible,
            where + ": index 1 and n-1 saddles are not obstructed by the intersection-number argument"};
  const auto h = homology(s_ng(n, static_cast<int>(g)));
  if (h.rank(index) == 0 && h.rank(n - index) == 0)
    return {Verdict::Forbidden,
            where + ": the closures of the unstable and stable manifolds are spheres of dimensions " +
                std::to_string(index) + " and " + std::to_string(n - index) +
                " meeting transversally only at the saddle, so their intersection number is +1 or -1; "
                "but H_" + std::to_string(index) + " = H_" + std::to_string(n - index) +
                " = 0, so both spheres are null-homologous and the intersection number must be 0"};
  return {Verdict::Admissible,
          where + ": H_" + std::to_string(index) + " or H_" + std::to_string(n - index) +
              " is nonzero, the intersection-number obstruction does not apply"};
}

struct Check {
  std::string name;
  bool pass = false;
  std::string detail;

  friend bool operator==(const Check&, const Check&) = default;
};

struct ValidationReport {
  /// Genus when it is defined; otherwise `genus_error` says why not.
  std::optional<std::int64_t> genus;
  std::optional<GenusErrorKind> genus_error;
  /// k = mu - 2.
  std::int64_t k = 0;
  std::vector<Check> checks;
  bool admissible = false;

  const Check* find(const std::string& name) const {
    for (const auto& c : checks)
      if (c.name == name) return &c;
    return nullptr;
  }

  friend bool operator==(const ValidationReport&, const ValidationReport&) = default;
};

namespace detail {

inline Check connection_check(const FlowSpec& spec) {
  const int n = spec.n;
  auto is_saddle = [n](int idx) { return idx >= 1 && idx <= n - 1; };
  std::map<std::string, std::set<std::string>> sinks, sources;
  std::int64_t saddle_edges = 0;
  for (const auto& c : *spec.connections) {
    const int a = spec.indices.at(c.from);
    const int b = spec.indices.at(c.to);
    if (is_saddle(a) && is_saddle(b)) {
      ++saddle_edges;
      continue;
    }
    auto attach = [&](const std::string& saddle, const std::string& other, int other_index) {
      if (other_index == 0) sinks[saddle].insert(other);
      if (other_index == n) sources[saddle].insert(other);
    };
    if (is_saddle(a)) attach(c.from, c.to, b);
    if (is_saddle(b)) attach(c.to, c.from, a);
  }
  std::int64_t bad_saddles = 0;
  for (const auto& [id, index] : spec.indices) {
    if (!is_saddle(index)) continue;
    if (sinks[id].size() != 1 || sources[id].size() != 1) ++bad_saddles;
  }
  Check check{"connections", saddle_edges == 0 && bad_saddles == 0, ""};
  if (saddle_edges > 0)
    check.detail += std::to_string(saddle_edges) +
                    " connection(s) join two saddles, contradicting disjoint saddle invariant manifolds";
  if (bad_saddles > 0) {
    if (!check.detail.empty()) check.detail += "; ";
    check.detail += std::to_string(bad_saddles) +
                    " saddle(s) without exactly one sink and one source among their connections";
  }
  return check;
}

} // namespace detail

/// Runs every constraint against the spec. Constraint failures are reported,
/// only a malformed spec throws.
inline ValidationReport validate_flow(const FlowSpec& spec) {
  check_well_formed(spec);
  const int n = spec.n;
  const std::int64_t nu = spec.saddles();
  const std::int64_t mu = spec.nodes();

  ValidationReport report;
  report.k = mu - 2;

  Check genus_check{"genus", false, ""};
  try {
    report.genus = genus_of_counts(nu, mu);
    genus_check.pass = true;
    genus_check.detail = "g = (nu - mu + 2)/2 = " + std::to_string(*report.genus);
  } catch (const GenusError& e) {
    report.genus_error = e.kind();
    genus_check.detail = e.what();
  }
  report.checks.push_back(genus_check);

  Check index_check{"index_restriction", true, ""};
  if (n >= 4) {
    for (int i = 2; i <= n - 2; ++i) {
      if (spec.counts[static_cast<std::size_t>(i)] == 0) continue;
      const auto r = obstruction_check(n, i, report.genus.value_or(0));
      if (r.verdict == Verdict::Forbidden) {
        index_check.pass = false;
        if (!index_check.detail.empty()) index_check.detail += "; ";
        index_check.detail += std::to_string(spec.counts[static_cast<std::size_t>(i)]) +
                              " saddle(s) of index " + std::to_string(i) + " forbidden: " + r.reason;
      }
    }
  } else {
    index_check.detail = "n = " + std::to_string(n) +
                         ": no middle indices; the index restriction is only established for n >= 4 "
                         "(and classically for g = 0), nothing is asserted here";
  }
  report.checks.push_back(index_check);

  const std::string no_genus = "skipped: genus undefined";
  Check morse_check{"morse_inequalities", false, no_genus};
  Check count_check{"count_law", false, no_genus};
  Check euler_check{"euler_characteristic", false, no_genus};
  if (report.genus) {
    const auto g = *report.genus;
    const auto violations = check_morse_inequalities(spec, g);
    morse_check.pass = violations.empty();
    morse_check.detail.clear();
    for (const auto& v : violations) {
      if (!morse_check.detail.empty()) morse_check.detail += "; ";
      morse_check.detail += "c_" + std::to_string(v.index) + " = " + std::to_string(v.count) +
                            " < b_" + std::to_string(v.index) + " = " + v.betti.str();
    }

    count_check.pass = report.k >= 0 && nu == 2 * g + report.k;
    count_check.detail = "k = mu - 2 = " + std::to_string(report.k) + ", nu = " + std::to_string(nu) +
                         ", 2g + k = " + std::to_string(2 * g + report.k);

    Integer alternating = 0;
    for (int i = 0; i <= n; ++i) {
      const Integer c = spec.counts[static_cast<std::size_t>(i)];
      alternating += (i % 2 == 0) ? c : Integer(-c);
    }
    const auto chi = euler_characteristic(s_ng(n, static_cast<int>(g)));
    euler_check.pass = alternating == chi;
    euler_check.detail = "sum (-1)^i c_i = " + alternating.str() + ", chi(S^n_g) = " + chi.str();
  }
  report.checks.push_back(morse_check);
  report.checks.push_back(count_check);
  report.checks.push_back(euler_check);

  if (spec.connections) report.checks.push_back(detail::connection_check(spec));
  if (!spec.no_heteroclinic)
    report.checks.push_back({"no_heteroclinic", false,
                             "saddle invariant manifolds are declared to intersect; "
                             "none of the constraints above are guaranteed"});

  report.admissible = std::all_of(report.checks.begin(), report.checks.end(),
                                  [](const Check& c) { return c.pass; });
  return report;
}

struct EnumeratedFlow {
  std::vector<std::int64_t> counts;
  std::int64_t k;

  friend bool operator==(const EnumeratedFlow&, const EnumeratedFlow&) = default;
  friend auto operator<=>(const EnumeratedFlow& a, const EnumeratedFlow& b) {
    if (auto c = a.k <=> b.k; c != 0) return c;
    return a.counts <=> b.counts;
  }
};

/// Combinatorially admissible count vectors on S^n_g for 0 <= k <= k_max,
/// ordered by k then lexicographically by counts. These satisfy the
/// necessary conditions only; nothing is claimed about realizability.
inline std::vector<EnumeratedFlow> enumerate_flows(int n, std::int64_t g, std::int64_t k_max) {
  if (n < 4) throw DomainError("enumeration requires n >= 4, got " + std::to_string(n));
  if (g < 0) throw DomainError("genus must be >= 0");
  if (k_max < 0) throw DomainError("k_max must be >= 0");
  std::vector<EnumeratedFlow> out;
  for (std::int64_t k = 0; k <= k_max; ++k) {
    for (std::int64_t c0 = 1; c0 <= k + 1; ++c0) {
      for (std::int64_t c1 = g; c1 <= g + k; ++c1) {
        FlowSpec spec;
        spec.n = n;
        spec.counts.assign(static_cast<std::size_t>(n) + 1, 0);
        spec.counts[0] = c0;
        spec.counts[1] = c1;
        spec.counts[static_cast<std::size_t>(n - 1)] = 2 * g + k - c1;
        spec.counts[static_cast<std::size_t>(n)] = k + 2 - c0;
        if (validate_flow(spec).admissible) out.push_back({std::move(spec.counts), k});
      }
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

} // namespace morseflow
