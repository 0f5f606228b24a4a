#include "chainfib/magic.hpp"

namespace chainfib {

namespace {

std::string coord_string(const MagicClass& v) {
  return "(" + std::to_string(v.x()) + "," + std::to_string(v.y()) + "," +
         std::to_string(v.z()) + ")";
}

}  // namespace

MagicClass::MagicClass(i64 x, i64 y, i64 z) : v_(std::vector<i64>{x, y, z}) {}

MagicClass::MagicClass(FiberClass v) : v_(std::move(v)) {
  if (v_.size() != 3)
    fail(errc::invalid_input, "a magic-manifold class has exactly 3 coordinates");
}

bool magic_in_cone(const MagicClass& v) {
  return v.x() > 0 && v.y() > 0 && v.x() > v.z() && v.y() > v.z();
}

i64 magic_norm(const MagicClass& v) {
  if (!magic_in_cone(v))
    fail(errc::outside_cone, coord_string(v) + " is not in the open cone");
  return checked_add(v.x(), v.y()) - v.z();
}

i64 magic_boundaries(const MagicClass& v) {
  if (!magic_in_cone(v))
    fail(errc::outside_cone, coord_string(v) + " is not in the open cone");
  if (!is_primitive(v.underlying()))
    fail(errc::not_primitive, coord_string(v) + " is not primitive");
  i64 b = gcd0(v.x(), checked_add(v.y(), v.z()));
  b = checked_add(b, gcd0(v.y(), checked_add(v.z(), v.x())));
  b = checked_add(b, gcd0(v.z(), checked_add(v.x(), v.y())));
  return b;
}

SurfaceType magic_classify(const MagicClass& v) {
  return surface_from(magic_norm(v), magic_boundaries(v));
}

}  // namespace chainfib
