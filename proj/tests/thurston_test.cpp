#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <random>

#include "chainfib/thurston.hpp"

using namespace chainfib;

TEST_CASE("mu of simple matrices") {
  CHECK(mu(IntersectionMatrix::row_of_ones(7)) == doctest::Approx(7).epsilon(1e-13));
  CHECK(mu(IntersectionMatrix(std::vector<std::vector<i64>>{{1}})) ==
        doctest::Approx(1).epsilon(1e-13));
  // NN^T = [[2,2],[2,2]], eigenvalues {0, 4}
  CHECK(mu(IntersectionMatrix({{1, 1}, {1, 1}})) ==
        doctest::Approx(4).epsilon(1e-13));
}

TEST_CASE("intersection matrix validation") {
  CHECK_THROWS_AS(IntersectionMatrix({{0, 0}, {1, 1}}), error);
  CHECK_THROWS_AS(IntersectionMatrix({{1, 0}, {1, 0}}), error);
  CHECK_THROWS_AS(IntersectionMatrix({{1, -1}, {1, 1}}), error);
  CHECK_THROWS_AS(IntersectionMatrix({{1, 1}, {1}}), error);
}

TEST_CASE("mu agrees with the characteristic polynomial on random 2x2 and 3x3") {
  std::mt19937_64 rng(23);
  std::uniform_int_distribution<i64> entry(0, 10);
  int done = 0;
  while (done < 500) {
    const std::size_t m = 2 + done % 2;
    std::vector<std::vector<i64>> rows(m, std::vector<i64>(m));
    for (auto& row : rows)
      for (auto& x : row) x = entry(rng);
    try {
      const IntersectionMatrix n(rows);
      ++done;
      CHECK(std::abs(mu(n) - largest_root_charpoly(n.gram())) <= 1e-10);
    } catch (const error&) {
      // zero row or column, draw again
    }
  }
}

TEST_CASE("generator images") {
  const RepMatrix a = represent({Twist::a}, 4.0);
  CHECK(a.a == 1);
  CHECK(a.b == 2);
  CHECK(a.c == 0);
  CHECK(a.d == 1);

  const RepMatrix id = represent({}, 4.0);
  CHECK(id.a == 1);
  CHECK(id.b == 0);
  CHECK(id.c == 0);
  CHECK(id.d == 1);
}

TEST_CASE("trace of T_A T_B^-1 is mu + 2") {
  for (i64 n = 1; n <= 50; ++n) {
    const RepMatrix m = represent({Twist::a, Twist::b_inv}, static_cast<double>(n));
    CHECK(m.trace() == doctest::Approx(n + 2).epsilon(1e-13));
  }
}

TEST_CASE("word classification by trace") {
  const auto hyp = classify_word({Twist::a, Twist::b_inv}, 6.0);
  CHECK(hyp.kind == WordClass::hyperbolic);
  CHECK(hyp.stretch.value == doctest::Approx(4 + std::sqrt(15.0)).epsilon(1e-13));
  CHECK(hyp.stretch.exact_p == 8);
  CHECK(hyp.stretch.exact_q == 60);

  CHECK(classify_word({Twist::a}, 9.0).kind == WordClass::parabolic);
  CHECK(classify_word({}, 2.0).kind == WordClass::parabolic);

  const auto golden = classify_word({Twist::a, Twist::b_inv}, 1.0);
  CHECK(golden.kind == WordClass::hyperbolic);
  CHECK(golden.stretch.value ==
        doctest::Approx((3 + std::sqrt(5.0)) / 2).epsilon(1e-13));

  CHECK(classify_word({Twist::a, Twist::b}, 1.0).kind == WordClass::elliptic);
}

TEST_CASE("determinant 1 and formal inverses for random words") {
  std::mt19937_64 rng(31);
  std::uniform_int_distribution<int> letter(0, 3);
  std::uniform_int_distribution<std::size_t> len(0, 20);
  std::uniform_int_distribution<i64> mus(1, 50);
  for (int trial = 0; trial < 400; ++trial) {
    TwistWord w(len(rng));
    for (auto& t : w) t = static_cast<Twist>(letter(rng));
    const double m = static_cast<double>(mus(rng));
    const RepMatrix rep = represent(w, m);
    // entries grow like sqrt(mu)^len, so cancellation error scales with
    // the squared magnitude
    const double mag = std::max(
        {1.0, std::abs(rep.a), std::abs(rep.b), std::abs(rep.c), std::abs(rep.d)});
    CHECK(std::abs(rep.det() - 1.0) <= 1e-12 * mag * mag);

    TwistWord round_trip = w;
    const TwistWord inv = inverse_word(w);
    round_trip.insert(round_trip.end(), inv.begin(), inv.end());
    const RepMatrix r = represent(round_trip, m);
    CHECK(std::abs(r.a - 1) <= 1e-10 * mag * mag);
    CHECK(std::abs(r.b) <= 1e-10 * mag * mag);
    CHECK(std::abs(r.c) <= 1e-10 * mag * mag);
    CHECK(std::abs(r.d - 1) <= 1e-10 * mag * mag);
  }
}

TEST_CASE("monodromy stretch factors") {
  const StretchFactor s4 = monodromy_stretch(4);
  CHECK(s4.exact_p == 6);
  CHECK(s4.exact_q == 32);
  CHECK(s4.value == doctest::Approx(3 + 2 * std::sqrt(2.0)).epsilon(1e-13));

  const StretchFactor s6 = monodromy_stretch(6);
  CHECK(s6.exact_p == 8);
  CHECK(s6.exact_q == 60);
  CHECK(s6.value == doctest::Approx(4 + std::sqrt(15.0)).epsilon(1e-13));

  CHECK_THROWS_AS(monodromy_stretch(3), error);
}

TEST_CASE("stretch factor grows strictly, squeezed between n and n+2") {
  double prev = 0.0;
  for (i64 n = 4; n <= 10'000; ++n) {
    const double lambda = monodromy_stretch(n).value;
    CHECK(lambda > prev);
    CHECK(lambda > static_cast<double>(n));
    CHECK(lambda < static_cast<double>(n) + 2);
    prev = lambda;
  }
}

TEST_CASE("value times reciprocal root is 1") {
  for (i64 n = 4; n <= 100; ++n) {
    const StretchFactor s = monodromy_stretch(n);
    const double reciprocal =
        (s.trace_abs - std::sqrt(s.trace_abs * s.trace_abs - 4)) / 2;
    CHECK(s.value * reciprocal == doctest::Approx(1.0).epsilon(1e-10));
  }
}

TEST_CASE("word parsing round trips") {
  const TwistWord w = parse_word("A B' A' B");
  CHECK(w == TwistWord{Twist::a, Twist::b_inv, Twist::a_inv, Twist::b});
  CHECK(word_string(w) == "A B' A' B");
  CHECK_THROWS_AS(parse_word("C"), error);
}
