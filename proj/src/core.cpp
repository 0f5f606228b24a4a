#include "chainfib/core.hpp"

#include <limits>
#include <numeric>

namespace chainfib {

const char* errc_name(errc code) {
  switch (code) {
    case errc::outside_cone: return "OutsideCone";
    case errc::not_primitive: return "NotPrimitive";
    case errc::parity: return "ParityError";
    case errc::negative_genus: return "NegativeGenus";
    case errc::domain: return "DomainError";
    case errc::excluded_residue: return "ExcludedResidue";
    case errc::overflow: return "Overflow";
    case errc::non_convergence: return "NonConvergence";
    case errc::non_hyperbolic_surface: return "NonHyperbolicSurface";
    case errc::invalid_input: return "InvalidInput";
  }
  return "UnknownError";
}

void fail(errc code, const std::string& msg) {
  throw error(code, std::string(errc_name(code)) + ": " + msg);
}

i64 checked_add(i64 a, i64 b) {
  i64 out = 0;
  if (__builtin_add_overflow(a, b, &out))
    fail(errc::overflow, "64-bit addition overflow");
  return out;
}

i64 checked_mul(i64 a, i64 b) {
  i64 out = 0;
  if (__builtin_mul_overflow(a, b, &out))
    fail(errc::overflow, "64-bit multiplication overflow");
  return out;
}

i64 gcd0(i64 a, i64 b) {
  if (a == std::numeric_limits<i64>::min() || b == std::numeric_limits<i64>::min())
    fail(errc::overflow, "|INT64_MIN| is not representable");
  return std::gcd(a, b);
}

FiberClass::FiberClass(std::vector<i64> coords) : coords_(std::move(coords)) {
  if (coords_.size() < 3)
    fail(errc::invalid_input, "a fiber class needs at least 3 coordinates");
  for (i64 c : coords_)
    if (c == std::numeric_limits<i64>::min())
      fail(errc::overflow, "coordinate magnitude not representable");
}

bool is_primitive(const FiberClass& v) {
  i64 g = 0;
  for (i64 c : v.coords()) g = gcd0(g, c);
  return g == 1;
}

std::string SurfaceType::name() const {
  return "S_{" + std::to_string(genus) + "," + std::to_string(punctures) + "}";
}

SurfaceType surface_from(i64 norm, i64 boundaries) {
  if (norm < 1 || boundaries < 1)
    fail(errc::invalid_input, "norm and boundary count must be positive");
  if ((checked_add(norm, boundaries) % 2) != 0)
    fail(errc::parity, "norm " + std::to_string(norm) + " + boundaries " +
                           std::to_string(boundaries) + " is odd");
  i64 twice_genus = checked_add(norm, 2) - boundaries;
  if (twice_genus < 0)
    fail(errc::negative_genus, "norm " + std::to_string(norm) +
                                   " too small for " + std::to_string(boundaries) +
                                   " boundaries");
  return SurfaceType{twice_genus / 2, boundaries};
}

}  // namespace chainfib
