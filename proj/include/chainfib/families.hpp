#pragma once

#include <optional>
#include <span>
#include <string_view>

#include "chainfib/chainlink.hpp"
#include "chainfib/magic.hpp"

namespace chainfib {

// The twelve coordinate families of fibered classes of the magic manifold:
// four with 3 boundaries, four with 4 boundaries, four planar ones.
enum class MagicFamilyId {
  three_bdry_1,  // (4k+1, 4k+1, 2k+1)
  three_bdry_2,  // (4k,   4k,   2k+1)
  three_bdry_3,  // (4k-1, 4k-1, 2k+1), k != 1 mod 3
  three_bdry_4,  // (4k+1, 4k+1, 2k-1), k != 2 mod 3
  four_bdry_1,   // (4k+1, 4k+1, 2k)
  four_bdry_2,   // (4k-1, 4k-1, 2k)
  four_bdry_3,   // (4k+3, 4k+3, 2k), k != 0 mod 3
  four_bdry_4,   // (4k-3, 4k-3, 2k), k != 0 mod 3
  planar_a,      // (2k-1, 2k,   0)
  planar_b,      // (2k-1, 2k+1, 0)
  planar_c,      // (2k,   2k+1, 0)
  planar_d,      // (2k-1, 2k+3, 0)
};

struct MagicFamilyInfo {
  MagicFamilyId id;
  const char* name;
  i64 min_k;          // smallest k with the tuple in the cone and genus >= 0
  int excluded_mod;   // 0 when no residue is excluded
  i64 excluded_residue;
};

std::span<const MagicFamilyInfo> magic_families();
const MagicFamilyInfo& magic_family_info(MagicFamilyId id);
std::optional<MagicFamilyId> magic_family_from_name(std::string_view name);

bool magic_family_admissible(MagicFamilyId id, i64 k);

// The raw tuple, with no admissibility check. Excluded residues give
// non-primitive tuples (common factor 3).
MagicClass magic_family_raw(MagicFamilyId id, i64 k);

MagicClass magic_family(MagicFamilyId id, i64 k);

// Genus and boundary count the family is expected to realize at k.
SurfaceType magic_family_claim(MagicFamilyId id, i64 k);

// Index of the sequence s built from `pad` leading (t+1)'s, m blocks
// (t+1, t+1, t, t) and i trailing t's. `pad` is the superscript of s^{(m,.)}
// (renamed: the paper-style superscript would collide with puncture counts).
struct SequenceIndex {
  i64 m = 1;
  i64 pad = 0;
  i64 i = 0;
  i64 t = 1;

  i64 length() const { return pad + 4 * m + i; }
};

// t = 1 sequence; classifies as S_{m+1, N+pad} with N = pad + 4m + i.
ChainClass chain_sequence(const SequenceIndex& idx);

// General t; genus 2mt - (m-1), boundaries (N-4m)t + 4m + pad.
ChainClass chain_sequence_t(const SequenceIndex& idx);

// Claimed type of chain_sequence_t(idx).
SurfaceType chain_sequence_claim(const SequenceIndex& idx);

// Fibered class of length k+1 and type S_{g,n} realizing the target,
// valid on the domain 4g-4 <= k+1 <= n <= 2k-4g+6.
ChainClass solve_target(i64 k, i64 g, i64 n);

// Empty string when (k, g, n) is in the domain, otherwise the failed
// inequality spelled out.
std::string theorem_domain_violation(i64 k, i64 g, i64 n);

}  // namespace chainfib
