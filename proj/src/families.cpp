#include "chainfib/families.hpp"

#include <array>

namespace chainfib {

namespace {

struct FamilyDef {
  MagicFamilyInfo info;
  // tuple coordinates (xk*k + x0, yk*k + y0, zk*k + z0)
  i64 xk, x0, yk, y0, zk, z0;
  // claimed genus gk*k + g0 and boundaries bk*k + b0
  i64 gk, g0, bk, b0;
};

constexpr std::array<FamilyDef, 12> kFamilies{{
    {{MagicFamilyId::three_bdry_1, "3b1", 1, 0, 0}, 4, 1, 4, 1, 2, 1, 3, 0, 0, 3},
    {{MagicFamilyId::three_bdry_2, "3b2", 1, 0, 0}, 4, 0, 4, 0, 2, 1, 3, -1, 0, 3},
    {{MagicFamilyId::three_bdry_3, "3b3", 1, 3, 1}, 4, -1, 4, -1, 2, 1, 3, -2, 0, 3},
    {{MagicFamilyId::three_bdry_4, "3b4", 1, 3, 2}, 4, 1, 4, 1, 2, -1, 3, 1, 0, 3},
    {{MagicFamilyId::four_bdry_1, "4b1", 1, 0, 0}, 4, 1, 4, 1, 2, 0, 3, 0, 0, 4},
    {{MagicFamilyId::four_bdry_2, "4b2", 1, 0, 0}, 4, -1, 4, -1, 2, 0, 3, -2, 0, 4},
    {{MagicFamilyId::four_bdry_3, "4b3", 1, 3, 0}, 4, 3, 4, 3, 2, 0, 3, 2, 0, 4},
    {{MagicFamilyId::four_bdry_4, "4b4", 2, 3, 0}, 4, -3, 4, -3, 2, 0, 3, -4, 0, 4},
    {{MagicFamilyId::planar_a, "pa", 1, 0, 0}, 2, -1, 2, 0, 0, 0, 0, 0, 4, 1},
    {{MagicFamilyId::planar_b, "pb", 1, 0, 0}, 2, -1, 2, 1, 0, 0, 0, 0, 4, 2},
    {{MagicFamilyId::planar_c, "pc", 1, 0, 0}, 2, 0, 2, 1, 0, 0, 0, 0, 4, 3},
    {{MagicFamilyId::planar_d, "pd", 1, 0, 0}, 2, -1, 2, 3, 0, 0, 0, 0, 4, 4},
}};

const FamilyDef& def_of(MagicFamilyId id) {
  return kFamilies[static_cast<std::size_t>(id)];
}

}  // namespace

std::span<const MagicFamilyInfo> magic_families() {
  static const auto infos = [] {
    std::array<MagicFamilyInfo, kFamilies.size()> out{};
    for (std::size_t i = 0; i < kFamilies.size(); ++i) out[i] = kFamilies[i].info;
    return out;
  }();
  return infos;
}

const MagicFamilyInfo& magic_family_info(MagicFamilyId id) {
  return def_of(id).info;
}

std::optional<MagicFamilyId> magic_family_from_name(std::string_view name) {
  for (const auto& f : kFamilies)
    if (name == f.info.name) return f.info.id;
  return std::nullopt;
}

bool magic_family_admissible(MagicFamilyId id, i64 k) {
  const auto& f = def_of(id);
  if (k < f.info.min_k) return false;
  if (f.info.excluded_mod != 0 &&
      k % f.info.excluded_mod == f.info.excluded_residue)
    return false;
  return true;
}

MagicClass magic_family_raw(MagicFamilyId id, i64 k) {
  const auto& f = def_of(id);
  return MagicClass(checked_add(checked_mul(f.xk, k), f.x0),
                    checked_add(checked_mul(f.yk, k), f.y0),
                    checked_add(checked_mul(f.zk, k), f.z0));
}

MagicClass magic_family(MagicFamilyId id, i64 k) {
  const auto& f = def_of(id);
  if (k < f.info.min_k)
    fail(errc::domain, std::string("family ") + f.info.name + " needs k >= " +
                           std::to_string(f.info.min_k));
  if (!magic_family_admissible(id, k))
    fail(errc::excluded_residue,
         std::string("family ") + f.info.name + " excludes k = " +
             std::to_string(f.info.excluded_residue) + " mod " +
             std::to_string(f.info.excluded_mod));
  return magic_family_raw(id, k);
}

SurfaceType magic_family_claim(MagicFamilyId id, i64 k) {
  const auto& f = def_of(id);
  return SurfaceType{checked_add(checked_mul(f.gk, k), f.g0),
                     checked_add(checked_mul(f.bk, k), f.b0)};
}

namespace {

void check_index(const SequenceIndex& idx) {
  if (idx.m < 1 || idx.pad < 0 || idx.i < 0 || idx.t < 1)
    fail(errc::invalid_input, "sequence index needs m >= 1, pad >= 0, i >= 0, t >= 1");
}

}  // namespace

ChainClass chain_sequence(const SequenceIndex& idx) {
  if (idx.t != 1) fail(errc::invalid_input, "t = 1 sequence requested with t != 1");
  return chain_sequence_t(idx);
}

ChainClass chain_sequence_t(const SequenceIndex& idx) {
  check_index(idx);
  std::vector<i64> coords;
  coords.reserve(static_cast<std::size_t>(idx.length()));
  for (i64 j = 0; j < idx.pad; ++j) coords.push_back(idx.t + 1);
  for (i64 j = 0; j < idx.m; ++j) {
    coords.push_back(idx.t + 1);
    coords.push_back(idx.t + 1);
    coords.push_back(idx.t);
    coords.push_back(idx.t);
  }
  for (i64 j = 0; j < idx.i; ++j) coords.push_back(idx.t);
  ChainClass out(std::move(coords));
  // every block carries both t and t+1, so gcd 1; flag if that ever breaks
  if (!is_primitive(out.underlying()))
    fail(errc::not_primitive, "sequence tuple has a common factor");
  return out;
}

SurfaceType chain_sequence_claim(const SequenceIndex& idx) {
  check_index(idx);
  const i64 n = idx.length();
  return SurfaceType{
      checked_add(checked_mul(2 * idx.m, idx.t), -(idx.m - 1)),
      checked_add(checked_mul(n - 4 * idx.m, idx.t), 4 * idx.m + idx.pad)};
}

std::string theorem_domain_violation(i64 k, i64 g, i64 n) {
  if (g < 2) return "g >= 2 fails: g = " + std::to_string(g);
  if (!(4 * g - 4 <= k + 1))
    return "4g-4 <= k+1 fails: " + std::to_string(4 * g - 4) + " > " +
           std::to_string(k + 1);
  if (!(k + 1 <= n))
    return "k+1 <= n fails: " + std::to_string(k + 1) + " > " + std::to_string(n);
  if (!(n <= 2 * k - 4 * g + 6))
    return "n <= 2k-4g+6 fails: " + std::to_string(n) + " > " +
           std::to_string(2 * k - 4 * g + 6);
  return "";
}

ChainClass solve_target(i64 k, i64 g, i64 n) {
  const std::string why = theorem_domain_violation(k, g, n);
  if (!why.empty()) fail(errc::domain, why);
  SequenceIndex idx;
  idx.m = g - 1;
  idx.pad = n - k - 1;
  idx.i = 2 * k - 4 * g + 6 - n;
  idx.t = 1;
  return chain_sequence(idx);
}

}  // namespace chainfib
