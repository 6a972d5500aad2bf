#pragma once

#include <cmath>
#include <span>
#include <stdexcept>

namespace stlsynth {

// Smoothing parameters shared by the soft max/min operators and the
// rectifiers. A single beta is used throughout.
struct SmoothParams {
  double beta = 10.0;
};

// smooth_max(a_1..a_m) = (1/beta) * ln(sum_i e^{beta a_i}), computed with a
// max shift so it stays finite for beta up to a few hundred.
// Overshoots max by at most ln(m)/beta and never undershoots.
inline double smooth_max(std::span<const double> values, double beta) {
  if (values.empty()) throw std::invalid_argument("smooth_max: empty argument list");
  if (!(beta > 0)) throw std::invalid_argument("smooth_max: beta must be positive");
  double shift = values[0];
  for (double v : values) shift = std::max(shift, v);
  double sum = 0.0;
  for (double v : values) sum += std::exp(beta * (v - shift));
  return shift + std::log(sum) / beta;
}

inline double smooth_min(std::span<const double> values, double beta) {
  if (values.empty()) throw std::invalid_argument("smooth_min: empty argument list");
  if (!(beta > 0)) throw std::invalid_argument("smooth_min: beta must be positive");
  double shift = values[0];
  for (double v : values) shift = std::min(shift, v);
  double sum = 0.0;
  for (double v : values) sum += std::exp(beta * (shift - v));
  return shift - std::log(sum) / beta;
}

// Pairwise forms. Log-sum-exp is associative, so folding these over a window
// computes the same value as the n-ary form.
inline double smooth_max2(double a, double b, double beta) {
  double hi = std::max(a, b);
  double lo = std::min(a, b);
  return hi + std::log1p(std::exp(beta * (lo - hi))) / beta;
}

inline double smooth_min2(double a, double b, double beta) { return -smooth_max2(-a, -b, beta); }

inline double rect_pos(double a) { return a > 0.0 ? a : 0.0; }
inline double rect_neg(double a) { return a < 0.0 ? a : 0.0; }

// (1/beta) * ln(1 + e^{beta a}); softplus, the smooth positive rectifier.
inline double rect_pos_smooth(double a, double beta) {
  double z = beta * a;
  if (z > 0) return a + std::log1p(std::exp(-z)) / beta;
  return std::log1p(std::exp(z)) / beta;
}

// -(1/beta) * ln(1 + e^{-beta a}); the smooth negative rectifier.
inline double rect_neg_smooth(double a, double beta) { return -rect_pos_smooth(-a, beta); }

}  // namespace stlsynth
