#pragma once

#include <optional>

#include "chainfib/families.hpp"
#include "chainfib/thurston.hpp"

namespace chainfib {

// Query for bounds on L(k, g, n): pseudo-Anosov maps of S_{g,n} whose
// mapping torus has first homology of rank >= k+1.
struct BoundsQuery {
  i64 k = 0;
  i64 g = 0;
  i64 n = 0;
};

// |chi(S_{g,n})| = 2g + n - 2; requires a surface carrying pseudo-Anosov maps.
i64 chi_abs(i64 g, i64 n);

// 334.08 * 3 * pi, the exact product behind the lower-bound constant.
double lower_bound_constant();

// (k+1) / (334.08 * 3pi * |chi|).
double lower_bound(const BoundsQuery& q);

struct UpperBound {
  double value = 0;
  ChainClass witness;
};

// 2(k+1) log(k+3) / |chi| on the domain 4g-4 <= k+1 <= n <= 2k-4g+6,
// together with the realizing class.
UpperBound upper_bound(const BoundsQuery& q);

// The k = n-1 specialization 2n log(n+2)/|chi| (n >= 4g-4), or the
// fixed-genus form 2(k+1) log(n+2)/|chi| ((n+4g-6)/2 <= k < n). Absent
// when neither applies.
std::optional<double> corollary_bounds(const BoundsQuery& q);

struct EntropyCap {
  double exact = 0;  // |chi(S_{m+1, N+pad})| * log(lambda_N)
  double cap = 0;    // 2N log(N+2)
};

// Normalized-entropy bound for a t = 1 sequence index.
EntropyCap normalized_entropy_cap(const SequenceIndex& idx);

struct BoundsReport {
  i64 chi_abs = 0;
  double lower = 0;
  bool in_theorem_domain = false;
  std::string domain_violation;          // empty when in the domain
  std::optional<double> upper;
  std::optional<ChainClass> witness;     // present iff in the domain
  std::optional<double> corollary;
  std::optional<EntropyCap> entropy_cap; // cap for the witness index
};

BoundsReport bounds_report(const BoundsQuery& q);

}  // namespace chainfib
