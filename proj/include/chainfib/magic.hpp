#pragma once

#include "chainfib/core.hpp"

namespace chainfib {

// Class (x, y, z) on the fibered face cone of the magic manifold.
// The modeled cone is C = {x > 0, y > 0, x > z, y > z} (open).
class MagicClass {
public:
  MagicClass(i64 x, i64 y, i64 z);
  explicit MagicClass(FiberClass v);

  i64 x() const { return v_[0]; }
  i64 y() const { return v_[1]; }
  i64 z() const { return v_[2]; }
  const FiberClass& underlying() const { return v_; }

  friend bool operator==(const MagicClass&, const MagicClass&) = default;

private:
  FiberClass v_;
};

bool magic_in_cone(const MagicClass& v);

// ||(x,y,z)|| = x + y - z on the cone.
i64 magic_norm(const MagicClass& v);

// gcd0(x, y+z) + gcd0(y, z+x) + gcd0(z, x+y), primitive classes only.
i64 magic_boundaries(const MagicClass& v);

SurfaceType magic_classify(const MagicClass& v);

}  // namespace chainfib
