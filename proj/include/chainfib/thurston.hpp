#pragma once

#include <array>
#include <string>
#include <vector>

#include "chainfib/core.hpp"

namespace chainfib {

// Geometric intersection numbers i(alpha_i, beta_j) of two filling multicurves.
class IntersectionMatrix {
public:
  explicit IntersectionMatrix(std::vector<std::vector<i64>> entries);

  static IntersectionMatrix row_of_ones(std::size_t n);

  std::size_t rows() const { return entries_.size(); }
  std::size_t cols() const { return entries_[0].size(); }
  i64 entry(std::size_t i, std::size_t j) const { return entries_[i][j]; }

  // N * N^T as doubles, rows() x rows().
  std::vector<std::vector<double>> gram() const;

private:
  std::vector<std::vector<i64>> entries_;
};

enum class Twist { a, a_inv, b, b_inv };

using TwistWord = std::vector<Twist>;

TwistWord parse_word(const std::string& text);  // e.g. "A B' A' B"
std::string word_string(const TwistWord& word);
TwistWord inverse_word(const TwistWord& word);

struct RepMatrix {
  double a = 1, b = 0, c = 0, d = 1;

  double trace() const { return a + d; }
  double det() const { return a * d - b * c; }
};

struct StretchFactor {
  double trace_abs = 0;
  double value = 0;
  // (p + sqrt(q)) / 2 when the trace is an integer.
  bool has_exact = false;
  i64 exact_p = 0;
  i64 exact_q = 0;
};

enum class WordClass { hyperbolic, parabolic, elliptic };

const char* word_class_name(WordClass c);

struct WordType {
  WordClass kind = WordClass::parabolic;
  StretchFactor stretch;  // meaningful only when hyperbolic
};

// Largest eigenvalue of a symmetric non-negative matrix, closed form,
// sizes 1..3 only. Used as the cross-check route for mu.
double largest_root_charpoly(const std::vector<std::vector<double>>& g);

// Perron-Frobenius eigenvalue of N N^T by power iteration (all-ones start,
// relative tolerance 1e-14, cap 1e6 iterations). For gram sizes <= 3 the
// result is cross-checked against the characteristic polynomial.
double mu(const IntersectionMatrix& n);

// Product of the generator images T_A -> [[1, sqrt(mu)], [0, 1]],
// T_B -> [[1, 0], [-sqrt(mu), 1]] in word order.
RepMatrix represent(const TwistWord& word, double mu_value);

WordType classify_word(const TwistWord& word, double mu_value);

// Stretch factor (n+2 + sqrt(n^2+4n))/2 of the monodromy of the fiber
// (1,...,1) of M(n).
StretchFactor monodromy_stretch(i64 n);

}  // namespace chainfib
