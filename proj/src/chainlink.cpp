#include "chainfib/chainlink.hpp"

namespace chainfib {

namespace {

std::string coord_string(const ChainClass& v) {
  std::string s = "(";
  for (std::size_t i = 0; i < v.length(); ++i) {
    if (i) s += ",";
    s += std::to_string(v.coords()[i]);
  }
  return s + ")";
}

}  // namespace

const char* cone_status_name(ConeStatus s) {
  switch (s) {
    case ConeStatus::inside_known_subcone: return "inside-known-subcone";
    case ConeStatus::unknown: return "unknown";
    case ConeStatus::norm_undefined: return "norm-undefined";
  }
  return "?";
}

ChainClass::ChainClass(std::vector<i64> coords) : v_(std::move(coords)) {
  if (v_.size() < 4)
    fail(errc::invalid_input,
         "M(n) needs n >= 4 link components, got " + std::to_string(v_.size()));
}

bool chain_in_cone(const ChainClass& v) {
  for (i64 c : v.coords())
    if (c < 1) return false;
  return true;
}

ConeStatus chain_cone_status(const ChainClass& v) {
  if (chain_in_cone(v)) return ConeStatus::inside_known_subcone;
  i64 sum = 0;
  for (i64 c : v.coords()) sum = checked_add(sum, c);
  return sum > 0 ? ConeStatus::unknown : ConeStatus::norm_undefined;
}

i64 chain_norm(const ChainClass& v) {
  if (!chain_in_cone(v))
    fail(errc::outside_cone,
         coord_string(v) + " is not in the open positive orthant");
  i64 sum = 0;
  for (i64 c : v.coords()) sum = checked_add(sum, c);
  return sum;
}

i64 chain_boundaries(const ChainClass& v) {
  if (!chain_in_cone(v))
    fail(errc::outside_cone,
         coord_string(v) + " is not in the open positive orthant");
  if (!is_primitive(v.underlying()))
    fail(errc::not_primitive, coord_string(v) + " is not primitive");
  const auto& a = v.coords();
  const std::size_t n = a.size();
  i64 b = 0;
  for (std::size_t i = 0; i < n; ++i) {
    i64 prev = a[(i + n - 1) % n];
    i64 next = a[(i + 1) % n];
    b = checked_add(b, gcd0(checked_add(prev, next), a[i]));
  }
  return b;
}

SurfaceType chain_classify(const ChainClass& v) {
  return surface_from(chain_norm(v), chain_boundaries(v));
}

}  // namespace chainfib
