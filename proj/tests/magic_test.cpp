#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "chainfib/magic.hpp"

using namespace chainfib;

TEST_CASE("cone membership is strict") {
  CHECK(magic_in_cone(MagicClass(1, 1, 0)));
  CHECK(magic_in_cone(MagicClass(4, 4, 2)));
  CHECK_FALSE(magic_in_cone(MagicClass(1, 0, 0)));
  CHECK_FALSE(magic_in_cone(MagicClass(1, 1, 1)));  // x > z fails
  CHECK(magic_in_cone(MagicClass(2, 3, -5)));
}

TEST_CASE("norm") {
  CHECK(magic_norm(MagicClass(1, 1, 0)) == 2);
  CHECK(magic_norm(MagicClass(4, 4, 2)) == 6);
  CHECK(magic_norm(MagicClass(5, 5, 3)) == 7);
  CHECK_THROWS_AS(magic_norm(MagicClass(1, 0, 0)), error);
}

TEST_CASE("norm is linear on rays") {
  for (i64 c = 1; c <= 9; ++c) {
    CHECK(magic_norm(MagicClass(5 * c, 5 * c, 3 * c)) ==
          c * magic_norm(MagicClass(5, 5, 3)));
    CHECK(magic_norm(MagicClass(3 * c, 4 * c, -2 * c)) ==
          c * magic_norm(MagicClass(3, 4, -2)));
  }
}

TEST_CASE("boundary count") {
  CHECK(magic_boundaries(MagicClass(5, 5, 3)) == 3);
  CHECK(magic_boundaries(MagicClass(3, 4, 0)) == 9);
  CHECK(magic_boundaries(MagicClass(1, 1, 0)) == 4);
  CHECK_THROWS_AS(magic_boundaries(MagicClass(4, 4, 2)), error);  // gcd 2
}

TEST_CASE("classification") {
  CHECK(magic_classify(MagicClass(5, 5, 3)) == SurfaceType{3, 3});
  CHECK(magic_classify(MagicClass(3, 4, 0)) == SurfaceType{0, 9});
  CHECK(magic_classify(MagicClass(9, 9, 4)) == SurfaceType{6, 4});
}

TEST_CASE("classification never hits a parity error on the cone") {
  // primitive classes with x, y in [1, 200], z in [-200, 200]
  long tested = 0, violations = 0;
  for (i64 x = 1; x <= 200; ++x)
    for (i64 y = 1; y <= 200; ++y) {
      const i64 zmax = std::min(x, y) - 1;
      for (i64 z = -200; z <= zmax; ++z) {
        const MagicClass v(x, y, z);
        if (!is_primitive(v.underlying())) continue;
        ++tested;
        const i64 norm = magic_norm(v);
        const i64 b = magic_boundaries(v);
        if ((norm + b) % 2 != 0 || norm + 2 - b < 0 || b < 1) ++violations;
      }
    }
  CHECK(violations == 0);
  CHECK(tested > 1'000'000);
}
