#include "chainfib/verify.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <sstream>

namespace chainfib {

namespace {

class Check {
public:
  explicit Check(std::string name) { result_.name = std::move(name); }

  void require(bool ok, const std::string& what) {
    ++cases_;
    if (!ok && result_.detail.empty()) result_.detail = what;
  }

  CheckResult finish() {
    result_.passed = result_.detail.empty();
    if (result_.passed)
      result_.detail = std::to_string(cases_) + " cases";
    return result_;
  }

private:
  CheckResult result_;
  long cases_ = 0;
};

std::string tuple_string(const std::vector<i64>& v) {
  std::string s = "(";
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(v[i]);
  }
  return s + ")";
}

CheckResult check_stretch_factor() {
  Check c("stretch factor: closed form vs represented word, n in [4, 10^4]");
  const TwistWord word{Twist::a, Twist::b_inv};
  for (i64 n = 4; n <= 10'000; ++n) {
    const StretchFactor direct = monodromy_stretch(n);
    const double m = mu(IntersectionMatrix::row_of_ones(static_cast<std::size_t>(n)));
    const WordType via_word = classify_word(word, m);
    c.require(via_word.kind == WordClass::hyperbolic,
              "word not hyperbolic at n=" + std::to_string(n));
    if (via_word.kind != WordClass::hyperbolic) continue;
    // 1e-12 relative: 1 ulp of lambda_n already exceeds 1e-12 absolute
    // once n reaches ~4000
    c.require(std::abs(direct.value - via_word.stretch.value) <=
                  1e-12 * direct.value,
              "stretch mismatch at n=" + std::to_string(n));
    c.require(direct.trace_abs == static_cast<double>(n + 2) &&
                  direct.exact_p == n + 2,
              "trace != n+2 at n=" + std::to_string(n));
    c.require(std::abs(via_word.stretch.trace_abs - static_cast<double>(n + 2)) <=
                  1e-9,
              "represented trace drifted at n=" + std::to_string(n));
  }
  const double lambda6 = monodromy_stretch(6).value;
  c.require(std::abs(lambda6 - (4.0 + std::sqrt(15.0))) <= 1e-12,
            "lambda_6 != 4+sqrt(15)");
  c.require(std::abs(lambda6 - 7.872983346207) <= 1e-9, "lambda_6 decimal drifted");
  return c.finish();
}

CheckResult check_magic_families() {
  Check c("magic families: exact genus/boundary claims for k <= 200");
  for (const auto& info : magic_families()) {
    for (i64 k = info.min_k; k <= 200; ++k) {
      if (magic_family_admissible(info.id, k)) {
        const MagicClass v = magic_family(info.id, k);
        const std::string at =
            std::string(info.name) + " k=" + std::to_string(k);
        c.require(magic_in_cone(v), "outside cone: " + at);
        c.require(is_primitive(v.underlying()), "not primitive: " + at);
        c.require(magic_classify(v) == magic_family_claim(info.id, k),
                  "classification mismatch: " + at);
      } else {
        c.require(!is_primitive(magic_family_raw(info.id, k).underlying()),
                  "excluded residue is primitive: " + std::string(info.name) +
                      " k=" + std::to_string(k));
      }
    }
  }
  return c.finish();
}

CheckResult check_sequences() {
  Check c("sequences: S_{m+1, N+pad} for t=1 and the general-t table");
  for (i64 m = 1; m <= 10; ++m)
    for (i64 pad = 0; pad <= 10; ++pad)
      for (i64 i = 0; i <= 50; ++i) {
        const SequenceIndex idx{m, pad, i, 1};
        const ChainClass s = chain_sequence(idx);
        const SurfaceType expect{m + 1, idx.length() + pad};
        if (chain_classify(s) != expect) {
          c.require(false, "t=1 mismatch at m=" + std::to_string(m) +
                               " pad=" + std::to_string(pad) +
                               " i=" + std::to_string(i));
        } else {
          c.require(true, "");
        }
      }
  for (i64 m = 1; m <= 5; ++m)
    for (i64 pad = 0; pad <= 5; ++pad)
      for (i64 i = 0; i <= 20; ++i)
        for (i64 t = 1; t <= 5; ++t) {
          const SequenceIndex idx{m, pad, i, t};
          const ChainClass s = chain_sequence_t(idx);
          c.require(chain_classify(s) == chain_sequence_claim(idx),
                    "general-t mismatch at m=" + std::to_string(m) +
                        " pad=" + std::to_string(pad) + " i=" + std::to_string(i) +
                        " t=" + std::to_string(t));
        }
  return c.finish();
}

CheckResult check_theorem_witness() {
  Check c("theorem witness: solve_target realizes S_{g,n} on the whole domain");
  for (i64 g = 2; g <= 6; ++g)
    for (i64 n = 1; n <= 60; ++n)
      for (i64 k = 0; k < n; ++k) {
        if (!theorem_domain_violation(k, g, n).empty()) continue;
        const std::string at = "(k,g,n)=(" + std::to_string(k) + "," +
                               std::to_string(g) + "," + std::to_string(n) + ")";
        const ChainClass s = solve_target(k, g, n);
        c.require(static_cast<i64>(s.length()) == k + 1, "length != k+1 at " + at);
        c.require(chain_in_cone(s), "witness outside cone at " + at);
        c.require(is_primitive(s.underlying()), "witness not primitive at " + at);
        c.require(chain_classify(s) == SurfaceType{g, n}, "wrong type at " + at);
        const double got = upper_bound({k, g, n}).value;
        const double expect = 2.0 * static_cast<double>(k + 1) *
                              std::log(static_cast<double>(k + 3)) /
                              static_cast<double>(2 * g + n - 2);
        c.require(std::abs(got - expect) <= 1e-12, "upper bound drift at " + at);
      }
  return c.finish();
}

CheckResult check_entropy_cap() {
  Check c("entropy cap: |chi| log(lambda_N) < 2N log(N+2), log(lambda_N) < log(N+2)");
  for (i64 m = 1; m <= 10; ++m)
    for (i64 pad = 0; pad <= 10; ++pad)
      for (i64 i = 0; i <= 50; ++i) {
        const SequenceIndex idx{m, pad, i, 1};
        const EntropyCap cap = normalized_entropy_cap(idx);
        c.require(cap.exact < cap.cap,
                  "cap violated at m=" + std::to_string(m) + " pad=" +
                      std::to_string(pad) + " i=" + std::to_string(i));
      }
  for (i64 n = 4; n <= 10'000; ++n) {
    const double lambda = monodromy_stretch(n).value;
    c.require(static_cast<double>(n) * std::log(lambda) <
                  static_cast<double>(n) * std::log(static_cast<double>(n + 2)),
              "lambda_n >= n+2 at n=" + std::to_string(n));
  }
  return c.finish();
}

CheckResult check_lower_bound() {
  Check c("lower bound: constant within 0.1% of 3147.8, lower < upper on the domain");
  const double product = lower_bound_constant();
  c.require(std::abs(product - 3147.8) <= 0.001 * 3147.8,
            "334.08*3pi = " + std::to_string(product));
  for (i64 g = 2; g <= 6; ++g)
    for (i64 n = 1; n <= 60; ++n)
      for (i64 k = 0; k < n; ++k) {
        if (!theorem_domain_violation(k, g, n).empty()) continue;
        const BoundsQuery q{k, g, n};
        c.require(lower_bound(q) < upper_bound(q).value,
                  "lower >= upper at (k,g,n)=(" + std::to_string(k) + "," +
                      std::to_string(g) + "," + std::to_string(n) + ")");
      }
  return c.finish();
}

CheckResult check_oracles() {
  Check c("oracles: mu vs characteristic polynomial, cyclic/reversal invariance");
  // every 2x2 with entries <= 10 and no zero row or column
  for (i64 a = 0; a <= 10; ++a)
    for (i64 b = 0; b <= 10; ++b)
      for (i64 d = 0; d <= 10; ++d)
        for (i64 e = 0; e <= 10; ++e) {
          if ((a == 0 && b == 0) || (d == 0 && e == 0)) continue;
          if ((a == 0 && d == 0) || (b == 0 && e == 0)) continue;
          const IntersectionMatrix n({{a, b}, {d, e}});
          const double via_power = mu(n);
          const double via_poly = largest_root_charpoly(n.gram());
          c.require(std::abs(via_power - via_poly) <= 1e-10,
                    "2x2 mismatch at [[" + std::to_string(a) + "," +
                        std::to_string(b) + "],[" + std::to_string(d) + "," +
                        std::to_string(e) + "]]");
        }
  // 3x3: random sample with entries <= 10 (full enumeration is 11^9 matrices)
  std::mt19937_64 rng(0x5eed3u);
  std::uniform_int_distribution<i64> entry(0, 10);
  int done = 0;
  while (done < 20'000) {
    std::vector<std::vector<i64>> rows(3, std::vector<i64>(3));
    for (auto& row : rows)
      for (auto& x : row) x = entry(rng);
    bool valid = true;
    for (int i = 0; i < 3 && valid; ++i) {
      valid = (rows[i][0] | rows[i][1] | rows[i][2]) != 0 &&
              (rows[0][i] | rows[1][i] | rows[2][i]) != 0;
    }
    if (!valid) continue;
    ++done;
    const IntersectionMatrix n(rows);
    c.require(std::abs(mu(n) - largest_root_charpoly(n.gram())) <= 1e-10,
              "3x3 mismatch at " + tuple_string(rows[0]) + tuple_string(rows[1]) +
                  tuple_string(rows[2]));
  }
  // boundary count only sees cyclic adjacency
  std::uniform_int_distribution<std::size_t> len(4, 12);
  std::uniform_int_distribution<i64> coord(1, 9);
  int tuples = 0;
  while (tuples < 100'000) {
    std::vector<i64> a(len(rng));
    for (auto& x : a) x = coord(rng);
    ChainClass v(a);
    if (!is_primitive(v.underlying())) continue;
    ++tuples;
    const i64 base = chain_boundaries(v);
    std::vector<i64> rotated(a);
    std::rotate(rotated.begin(),
                rotated.begin() + static_cast<long>(1 + rng() % (a.size() - 1)),
                rotated.end());
    std::vector<i64> reversed(a.rbegin(), a.rend());
    c.require(chain_boundaries(ChainClass(rotated)) == base,
              "rotation changed boundary count of " + tuple_string(a));
    c.require(chain_boundaries(ChainClass(reversed)) == base,
              "reversal changed boundary count of " + tuple_string(a));
  }
  return c.finish();
}

}  // namespace

std::vector<CheckResult> run_all_checks() {
  return {
      check_stretch_factor(), check_magic_families(), check_sequences(),
      check_theorem_witness(), check_entropy_cap(), check_lower_bound(),
      check_oracles(),
  };
}

}  // namespace chainfib
