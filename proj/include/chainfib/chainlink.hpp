#pragma once

#include "chainfib/core.hpp"

namespace chainfib {

// Only the open positive orthant is known to lie in the fibered cone of M(N);
// the true cone may be larger, so membership is reported as a tri-state.
enum class ConeStatus {
  inside_known_subcone,  // all coordinates >= 1, formulas apply
  unknown,               // outside the orthant, could still be fibered
  norm_undefined,        // coordinate sum <= 0, cannot lie over this face
};

const char* cone_status_name(ConeStatus s);

// Class (a_1, ..., a_N) for the N-chained link complement M(N), N >= 4.
class ChainClass {
public:
  explicit ChainClass(std::vector<i64> coords);

  const FiberClass& underlying() const { return v_; }
  const std::vector<i64>& coords() const { return v_.coords(); }
  std::size_t length() const { return v_.size(); }

  friend bool operator==(const ChainClass&, const ChainClass&) = default;

private:
  FiberClass v_;
};

bool chain_in_cone(const ChainClass& v);
ConeStatus chain_cone_status(const ChainClass& v);

// sum of the coordinates (= -chi of the minimal representative).
i64 chain_norm(const ChainClass& v);

// sum_i gcd0(a_{i-1} + a_{i+1}, a_i), indices cyclic mod N; primitive only.
i64 chain_boundaries(const ChainClass& v);

SurfaceType chain_classify(const ChainClass& v);

}  // namespace chainfib
