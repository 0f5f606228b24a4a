#include "chainfib/bounds.hpp"

#include <cmath>
#include <numbers>

namespace chainfib {

i64 chi_abs(i64 g, i64 n) {
  if (g < 0 || n < 0) fail(errc::invalid_input, "g and n must be non-negative");
  const i64 chi = 2 - 2 * g - n;
  if (chi >= 0)
    fail(errc::non_hyperbolic_surface,
         "chi(S_{" + std::to_string(g) + "," + std::to_string(n) + "}) = " +
             std::to_string(chi) + " is not negative");
  if (3 * g - 3 + n < 1)
    fail(errc::non_hyperbolic_surface,
         "S_{" + std::to_string(g) + "," + std::to_string(n) +
             "} carries no pseudo-Anosov map");
  return -chi;
}

double lower_bound_constant() { return 334.08 * 3.0 * std::numbers::pi; }

double lower_bound(const BoundsQuery& q) {
  if (q.k < 0) fail(errc::invalid_input, "k must be non-negative");
  return static_cast<double>(q.k + 1) /
         (lower_bound_constant() * static_cast<double>(chi_abs(q.g, q.n)));
}

UpperBound upper_bound(const BoundsQuery& q) {
  ChainClass witness = solve_target(q.k, q.g, q.n);
  const double value = 2.0 * static_cast<double>(q.k + 1) *
                       std::log(static_cast<double>(q.k + 3)) /
                       static_cast<double>(chi_abs(q.g, q.n));
  return UpperBound{value, std::move(witness)};
}

std::optional<double> corollary_bounds(const BoundsQuery& q) {
  const auto [k, g, n] = q;
  if (k == n - 1 && n >= 4 * g - 4) {
    return 2.0 * static_cast<double>(n) * std::log(static_cast<double>(n + 2)) /
           static_cast<double>(chi_abs(g, n));
  }
  if (g >= 2 && n >= 4 * g - 4 && 2 * k >= n + 4 * g - 6 && k < n) {
    return 2.0 * static_cast<double>(k + 1) *
           std::log(static_cast<double>(n + 2)) /
           static_cast<double>(chi_abs(g, n));
  }
  return std::nullopt;
}

EntropyCap normalized_entropy_cap(const SequenceIndex& idx) {
  if (idx.t != 1) fail(errc::invalid_input, "entropy cap is for t = 1 sequences");
  const i64 n = idx.length();
  if (n < 4) fail(errc::invalid_input, "sequence length must be >= 4");
  const double log_lambda = std::log(monodromy_stretch(n).value);
  EntropyCap out;
  out.exact = static_cast<double>(6 * idx.m + 2 * idx.pad + idx.i) * log_lambda;
  out.cap = 2.0 * static_cast<double>(n) * std::log(static_cast<double>(n + 2));
  return out;
}

BoundsReport bounds_report(const BoundsQuery& q) {
  BoundsReport r;
  r.chi_abs = chi_abs(q.g, q.n);
  r.lower = lower_bound(q);
  r.domain_violation = theorem_domain_violation(q.k, q.g, q.n);
  r.in_theorem_domain = r.domain_violation.empty();
  if (r.in_theorem_domain) {
    auto ub = upper_bound(q);
    r.upper = ub.value;
    r.witness = std::move(ub.witness);
    SequenceIndex idx{q.g - 1, q.n - q.k - 1, 2 * q.k - 4 * q.g + 6 - q.n, 1};
    r.entropy_cap = normalized_entropy_cap(idx);
  }
  r.corollary = corollary_bounds(q);
  return r;
}

}  // namespace chainfib
