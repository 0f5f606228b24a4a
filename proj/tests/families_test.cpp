#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <set>

#include "chainfib/families.hpp"

using namespace chainfib;

TEST_CASE("named family examples") {
  const MagicClass a = magic_family(MagicFamilyId::three_bdry_3, 2);
  CHECK(a == MagicClass(7, 7, 5));
  CHECK(magic_classify(a) == SurfaceType{4, 3});

  const MagicClass b = magic_family(MagicFamilyId::planar_a, 2);
  CHECK(b == MagicClass(3, 4, 0));
  CHECK(magic_classify(b) == SurfaceType{0, 9});

  CHECK_THROWS_AS(magic_family(MagicFamilyId::three_bdry_3, 4), error);
  try {
    magic_family(MagicFamilyId::three_bdry_3, 4);
  } catch (const error& e) {
    CHECK(e.code() == errc::excluded_residue);
  }
}

TEST_CASE("family lookup by name") {
  CHECK(magic_family_from_name("3b1") == MagicFamilyId::three_bdry_1);
  CHECK(magic_family_from_name("pd") == MagicFamilyId::planar_d);
  CHECK_FALSE(magic_family_from_name("nope").has_value());
  CHECK(magic_families().size() == 12);
}

TEST_CASE("admissible tuples match their claims, k <= 200") {
  for (const auto& info : magic_families()) {
    for (i64 k = info.min_k; k <= 200; ++k) {
      if (!magic_family_admissible(info.id, k)) {
        // double-entry bookkeeping: the residue predicate and primitivity
        // must agree on exclusion
        CHECK_FALSE(is_primitive(magic_family_raw(info.id, k).underlying()));
        continue;
      }
      const MagicClass v = magic_family(info.id, k);
      CHECK(magic_in_cone(v));
      CHECK(is_primitive(v.underlying()));
      CHECK(magic_classify(v) == magic_family_claim(info.id, k));
    }
  }
}

TEST_CASE("three-boundary families cover every genus >= 2") {
  std::set<i64> covered;
  const MagicFamilyId three[] = {
      MagicFamilyId::three_bdry_1, MagicFamilyId::three_bdry_2,
      MagicFamilyId::three_bdry_3, MagicFamilyId::three_bdry_4};
  for (MagicFamilyId id : three)
    for (i64 k = 1; k <= 120; ++k) {
      if (!magic_family_admissible(id, k)) continue;
      const SurfaceType s = magic_classify(magic_family(id, k));
      CHECK(s.punctures == 3);
      covered.insert(s.genus);
    }
  for (i64 g = 2; g <= 300; ++g) CHECK(covered.count(g) == 1);
}

TEST_CASE("planar families cover every puncture count > 4") {
  std::set<i64> covered;
  const MagicFamilyId planar[] = {MagicFamilyId::planar_a, MagicFamilyId::planar_b,
                                  MagicFamilyId::planar_c, MagicFamilyId::planar_d};
  for (MagicFamilyId id : planar)
    for (i64 k = 1; k <= 120; ++k) {
      const SurfaceType s = magic_classify(magic_family(id, k));
      CHECK(s.genus == 0);
      covered.insert(s.punctures);
    }
  for (i64 n = 5; n <= 400; ++n) CHECK(covered.count(n) == 1);
}

TEST_CASE("t=1 sequence examples") {
  CHECK(chain_sequence({1, 1, 1, 1}) == ChainClass({2, 2, 2, 1, 1, 1}));
  CHECK(chain_classify(chain_sequence({1, 1, 1, 1})) == SurfaceType{2, 7});

  CHECK(chain_sequence({2, 0, 2, 1}) ==
        ChainClass({2, 2, 1, 1, 2, 2, 1, 1, 1, 1}));
  CHECK(chain_classify(chain_sequence({2, 0, 2, 1})) == SurfaceType{3, 10});

  CHECK(chain_sequence({1, 0, 0, 1}) == ChainClass({2, 2, 1, 1}));
  CHECK(chain_classify(chain_sequence({1, 0, 0, 1})) == SurfaceType{2, 4});

  CHECK_THROWS_AS(chain_sequence({1, 0, 0, 2}), error);
  CHECK_THROWS_AS(chain_sequence({0, 0, 4, 1}), error);
}

TEST_CASE("general-t sequence examples") {
  CHECK(chain_sequence_t({1, 0, 2, 2}) == ChainClass({3, 3, 2, 2, 2, 2}));
  CHECK(chain_classify(chain_sequence_t({1, 0, 2, 2})) == SurfaceType{4, 8});

  CHECK(chain_sequence_t({1, 0, 2, 1}) == ChainClass({2, 2, 1, 1, 1, 1}));
  CHECK(chain_classify(chain_sequence_t({1, 0, 2, 1})) == SurfaceType{2, 6});

  CHECK(chain_sequence_t({2, 0, 0, 2}) == ChainClass({3, 3, 2, 2, 3, 3, 2, 2}));
  CHECK(chain_classify(chain_sequence_t({2, 0, 0, 2})) == SurfaceType{7, 8});
}

TEST_CASE("sequence sweep matches the claimed types") {
  for (i64 m = 1; m <= 6; ++m)
    for (i64 pad = 0; pad <= 6; ++pad)
      for (i64 i = 0; i <= 20; ++i)
        for (i64 t = 1; t <= 4; ++t) {
          const SequenceIndex idx{m, pad, i, t};
          const ChainClass s = chain_sequence_t(idx);
          CHECK(is_primitive(s.underlying()));
          CHECK(chain_in_cone(s));
          CHECK(chain_classify(s) == chain_sequence_claim(idx));
          if (t == 1)
            CHECK(chain_sequence_claim(idx) ==
                  SurfaceType{m + 1, idx.length() + pad});
        }
}

TEST_CASE("solve_target examples") {
  const ChainClass a = solve_target(5, 2, 6);
  CHECK(a == ChainClass({2, 2, 1, 1, 1, 1}));
  CHECK(chain_classify(a) == SurfaceType{2, 6});

  const ChainClass b = solve_target(7, 2, 8);
  CHECK(b.length() == 8);
  CHECK(chain_classify(b) == SurfaceType{2, 8});

  CHECK_THROWS_AS(solve_target(5, 2, 9), error);  // 9 > 2k-4g+6 = 8
  CHECK_THROWS_AS(solve_target(3, 2, 6), error);
  CHECK(theorem_domain_violation(5, 2, 8).empty());
  CHECK(theorem_domain_violation(5, 2, 9) == "n <= 2k-4g+6 fails: 9 > 8");
}

TEST_CASE("solve_target sweep: length, type, primitivity") {
  for (i64 g = 2; g <= 6; ++g)
    for (i64 n = 1; n <= 60; ++n)
      for (i64 k = 0; k < n; ++k) {
        if (!theorem_domain_violation(k, g, n).empty()) continue;
        const ChainClass s = solve_target(k, g, n);
        CHECK(static_cast<i64>(s.length()) == k + 1);
        CHECK(is_primitive(s.underlying()));
        CHECK(chain_in_cone(s));
        CHECK(chain_classify(s) == SurfaceType{g, n});
      }
}
