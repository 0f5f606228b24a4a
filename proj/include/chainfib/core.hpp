#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "chainfib/errors.hpp"

namespace chainfib {

using i64 = std::int64_t;

// 64-bit arithmetic with overflow surfaced as errc::overflow.
i64 checked_add(i64 a, i64 b);
i64 checked_mul(i64 a, i64 b);

// gcd with the conventions gcd0(0, w) = |w| and gcd0(0, 0) = 0.
i64 gcd0(i64 a, i64 b);

// Integer class in H2(M, dM; Z) in the canonical basis, length >= 3.
class FiberClass {
public:
  explicit FiberClass(std::vector<i64> coords);

  const std::vector<i64>& coords() const noexcept { return coords_; }
  std::size_t size() const noexcept { return coords_.size(); }
  i64 operator[](std::size_t i) const { return coords_[i]; }

  friend bool operator==(const FiberClass&, const FiberClass&) = default;

private:
  std::vector<i64> coords_;
};

bool is_primitive(const FiberClass& v);

struct SurfaceType {
  i64 genus = 0;
  i64 punctures = 0;

  i64 euler_characteristic() const { return 2 - 2 * genus - punctures; }
  std::string name() const;  // "S_{g,n}"

  friend bool operator==(const SurfaceType&, const SurfaceType&) = default;
};

// Recover (genus, punctures) from a Thurston norm value and a boundary count.
// norm = -chi = 2g + n - 2, so g = (norm + 2 - boundaries) / 2.
SurfaceType surface_from(i64 norm, i64 boundaries);

}  // namespace chainfib
