#include "chainfib/thurston.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

namespace chainfib {

namespace {

constexpr double kTraceTol = 1e-12;
constexpr double kMuRelTol = 1e-14;
constexpr double kMuCrossCheckTol = 1e-10;
constexpr std::size_t kMuIterCap = 1'000'000;

}  // namespace

IntersectionMatrix::IntersectionMatrix(std::vector<std::vector<i64>> entries)
    : entries_(std::move(entries)) {
  if (entries_.empty() || entries_[0].empty())
    fail(errc::invalid_input, "intersection matrix must be non-empty");
  const std::size_t ncols = entries_[0].size();
  for (const auto& row : entries_)
    if (row.size() != ncols)
      fail(errc::invalid_input, "ragged intersection matrix");
  for (const auto& row : entries_)
    for (i64 e : row)
      if (e < 0)
        fail(errc::invalid_input, "intersection numbers are non-negative");
  for (const auto& row : entries_)
    if (std::all_of(row.begin(), row.end(), [](i64 e) { return e == 0; }))
      fail(errc::invalid_input, "zero row: a curve missing the other multicurve");
  for (std::size_t j = 0; j < ncols; ++j) {
    bool nonzero = false;
    for (const auto& row : entries_) nonzero = nonzero || row[j] != 0;
    if (!nonzero)
      fail(errc::invalid_input, "zero column: a curve missing the other multicurve");
  }
}

IntersectionMatrix IntersectionMatrix::row_of_ones(std::size_t n) {
  if (n == 0) fail(errc::invalid_input, "need at least one curve");
  return IntersectionMatrix({std::vector<i64>(n, 1)});
}

std::vector<std::vector<double>> IntersectionMatrix::gram() const {
  const std::size_t m = rows(), n = cols();
  std::vector<std::vector<double>> g(m, std::vector<double>(m, 0.0));
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < m; ++j) {
      i64 s = 0;
      for (std::size_t k = 0; k < n; ++k)
        s = checked_add(s, checked_mul(entries_[i][k], entries_[j][k]));
      g[i][j] = static_cast<double>(s);
    }
  return g;
}

double largest_root_charpoly(const std::vector<std::vector<double>>& g) {
  const std::size_t m = g.size();
  if (m == 1) return g[0][0];
  if (m == 2) {
    double tr = g[0][0] + g[1][1];
    double disc = (g[0][0] - g[1][1]) * (g[0][0] - g[1][1]) + 4 * g[0][1] * g[1][0];
    return (tr + std::sqrt(std::max(disc, 0.0))) / 2;
  }
  if (m == 3) {
    // analytic symmetric 3x3 eigenvalues
    double p1 = g[0][1] * g[0][1] + g[0][2] * g[0][2] + g[1][2] * g[1][2];
    if (p1 == 0.0) return std::max({g[0][0], g[1][1], g[2][2]});
    double q = (g[0][0] + g[1][1] + g[2][2]) / 3;
    double p2 = (g[0][0] - q) * (g[0][0] - q) + (g[1][1] - q) * (g[1][1] - q) +
                (g[2][2] - q) * (g[2][2] - q) + 2 * p1;
    double p = std::sqrt(p2 / 6);
    std::array<std::array<double, 3>, 3> b{};
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j) b[i][j] = (g[i][j] - (i == j ? q : 0.0)) / p;
    double detb = b[0][0] * (b[1][1] * b[2][2] - b[1][2] * b[2][1]) -
                  b[0][1] * (b[1][0] * b[2][2] - b[1][2] * b[2][0]) +
                  b[0][2] * (b[1][0] * b[2][1] - b[1][1] * b[2][0]);
    double r = std::clamp(detb / 2, -1.0, 1.0);
    double phi = std::acos(r) / 3;
    return q + 2 * p * std::cos(phi);
  }
  fail(errc::invalid_input, "closed-form route only covers sizes 1..3");
}

double mu(const IntersectionMatrix& n) {
  const auto g = n.gram();
  const std::size_t m = g.size();
  std::vector<double> v(m, 1.0), w(m, 0.0);
  double lambda = 0.0;
  bool converged = false;
  int settled = 0;  // consecutive sub-tolerance steps, guards slow spectral gaps
  for (std::size_t it = 0; it < kMuIterCap; ++it) {
    for (std::size_t i = 0; i < m; ++i) {
      double s = 0.0;
      for (std::size_t j = 0; j < m; ++j) s += g[i][j] * v[j];
      w[i] = s;
    }
    double num = 0.0, den = 0.0;
    for (std::size_t i = 0; i < m; ++i) {
      num += v[i] * w[i];
      den += v[i] * v[i];
    }
    double next = num / den;
    double norm = 0.0;
    for (double x : w) norm += x * x;
    norm = std::sqrt(norm);
    for (std::size_t i = 0; i < m; ++i) v[i] = w[i] / norm;
    if (it > 0 && std::abs(next - lambda) <= kMuRelTol * std::abs(next)) {
      ++settled;
    } else {
      settled = 0;
    }
    lambda = next;
    if (settled >= 3) {
      converged = true;
      break;
    }
  }
  if (!converged)
    fail(errc::non_convergence, "power iteration hit the iteration cap");
  if (m <= 3) {
    double closed = largest_root_charpoly(g);
    if (std::abs(closed - lambda) > kMuCrossCheckTol * std::max(1.0, std::abs(closed)))
      fail(errc::non_convergence,
           "power iteration disagrees with the characteristic polynomial");
  }
  return lambda;
}

TwistWord parse_word(const std::string& text) {
  TwistWord word;
  std::istringstream in(text);
  std::string tok;
  while (in >> tok) {
    if (tok == "A") word.push_back(Twist::a);
    else if (tok == "A'" || tok == "A-" || tok == "a'") word.push_back(Twist::a_inv);
    else if (tok == "B") word.push_back(Twist::b);
    else if (tok == "B'" || tok == "B-" || tok == "b'") word.push_back(Twist::b_inv);
    else fail(errc::invalid_input, "bad twist letter '" + tok + "'");
  }
  return word;
}

std::string word_string(const TwistWord& word) {
  std::string s;
  for (Twist t : word) {
    if (!s.empty()) s += " ";
    switch (t) {
      case Twist::a: s += "A"; break;
      case Twist::a_inv: s += "A'"; break;
      case Twist::b: s += "B"; break;
      case Twist::b_inv: s += "B'"; break;
    }
  }
  return s;
}

TwistWord inverse_word(const TwistWord& word) {
  TwistWord inv;
  inv.reserve(word.size());
  for (auto it = word.rbegin(); it != word.rend(); ++it) {
    switch (*it) {
      case Twist::a: inv.push_back(Twist::a_inv); break;
      case Twist::a_inv: inv.push_back(Twist::a); break;
      case Twist::b: inv.push_back(Twist::b_inv); break;
      case Twist::b_inv: inv.push_back(Twist::b); break;
    }
  }
  return inv;
}

const char* word_class_name(WordClass c) {
  switch (c) {
    case WordClass::hyperbolic: return "hyperbolic";
    case WordClass::parabolic: return "parabolic";
    case WordClass::elliptic: return "elliptic";
  }
  return "?";
}

namespace {

RepMatrix mul(const RepMatrix& l, const RepMatrix& r) {
  return RepMatrix{l.a * r.a + l.b * r.c, l.a * r.b + l.b * r.d,
                   l.c * r.a + l.d * r.c, l.c * r.b + l.d * r.d};
}

RepMatrix generator(Twist t, double root) {
  switch (t) {
    case Twist::a: return RepMatrix{1, root, 0, 1};
    case Twist::a_inv: return RepMatrix{1, -root, 0, 1};
    case Twist::b: return RepMatrix{1, 0, -root, 1};
    case Twist::b_inv: return RepMatrix{1, 0, root, 1};
  }
  fail(errc::invalid_input, "bad twist letter");
}

StretchFactor stretch_from_trace(double trace_abs) {
  StretchFactor s;
  s.trace_abs = trace_abs;
  s.value = (trace_abs + std::sqrt(trace_abs * trace_abs - 4)) / 2;
  double rounded = std::round(trace_abs);
  if (std::abs(trace_abs - rounded) <= 1e-9 && rounded < 9.0e15) {
    s.has_exact = true;
    s.exact_p = static_cast<i64>(rounded);
    s.exact_q = checked_add(checked_mul(s.exact_p, s.exact_p), -4);
  }
  return s;
}

}  // namespace

RepMatrix represent(const TwistWord& word, double mu_value) {
  if (!(mu_value > 0)) fail(errc::invalid_input, "mu must be positive");
  const double root = std::sqrt(mu_value);
  RepMatrix acc;  // identity
  for (Twist t : word) acc = mul(acc, generator(t, root));
  return acc;
}

WordType classify_word(const TwistWord& word, double mu_value) {
  const double tr = std::abs(represent(word, mu_value).trace());
  WordType out;
  if (std::abs(tr - 2.0) <= kTraceTol) {
    out.kind = WordClass::parabolic;
  } else if (tr > 2.0) {
    out.kind = WordClass::hyperbolic;
    out.stretch = stretch_from_trace(tr);
  } else {
    out.kind = WordClass::elliptic;
  }
  return out;
}

StretchFactor monodromy_stretch(i64 n) {
  if (n < 4) fail(errc::invalid_input, "M(n) needs n >= 4");
  StretchFactor s;
  s.trace_abs = static_cast<double>(n) + 2;
  s.has_exact = true;
  s.exact_p = checked_add(n, 2);
  s.exact_q = checked_mul(n, checked_add(n, 4));
  s.value = (s.trace_abs + std::sqrt(static_cast<double>(s.exact_q))) / 2;
  return s;
}

}  // namespace chainfib
