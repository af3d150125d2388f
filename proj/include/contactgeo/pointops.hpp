#pragma once

#include <array>
#include <cmath>
#include <span>

#include "contactgeo/fields.hpp"

namespace contactgeo {

// Point-local dense values with fixed stride; slots past the active
// dimension stay zero, so whole-array arithmetic is safe.
using Vec = std::array<double, kMaxDim>;
using Mat = std::array<double, kMaxDim * kMaxDim>;

inline Vec operator+(const Vec& a, const Vec& b) {
  Vec r{};
  for (int i = 0; i < kMaxDim; ++i)
    r[static_cast<std::size_t>(i)] =
        a[static_cast<std::size_t>(i)] + b[static_cast<std::size_t>(i)];
  return r;
}

inline Vec operator-(const Vec& a, const Vec& b) {
  Vec r{};
  for (int i = 0; i < kMaxDim; ++i)
    r[static_cast<std::size_t>(i)] =
        a[static_cast<std::size_t>(i)] - b[static_cast<std::size_t>(i)];
  return r;
}

inline Vec operator-(const Vec& a) {
  Vec r{};
  for (int i = 0; i < kMaxDim; ++i)
    r[static_cast<std::size_t>(i)] = -a[static_cast<std::size_t>(i)];
  return r;
}

inline Vec operator*(double c, const Vec& a) {
  Vec r{};
  for (int i = 0; i < kMaxDim; ++i)
    r[static_cast<std::size_t>(i)] = c * a[static_cast<std::size_t>(i)];
  return r;
}

inline Mat operator+(const Mat& a, const Mat& b) {
  Mat r{};
  for (int i = 0; i < kMaxDim * kMaxDim; ++i)
    r[static_cast<std::size_t>(i)] =
        a[static_cast<std::size_t>(i)] + b[static_cast<std::size_t>(i)];
  return r;
}

inline Mat operator-(const Mat& a, const Mat& b) {
  Mat r{};
  for (int i = 0; i < kMaxDim * kMaxDim; ++i)
    r[static_cast<std::size_t>(i)] =
        a[static_cast<std::size_t>(i)] - b[static_cast<std::size_t>(i)];
  return r;
}

inline Mat operator*(double c, const Mat& a) {
  Mat r{};
  for (int i = 0; i < kMaxDim * kMaxDim; ++i)
    r[static_cast<std::size_t>(i)] = c * a[static_cast<std::size_t>(i)];
  return r;
}

inline double max_abs(const Vec& a) {
  double m = 0.0;
  for (double x : a) m = std::max(m, std::abs(x));
  return m;
}

inline double max_abs(const Mat& a) {
  double m = 0.0;
  for (double x : a) m = std::max(m, std::abs(x));
  return m;
}

inline Vec to_vec(std::span<const double> x) {
  Vec r{};
  for (std::size_t i = 0; i < x.size(); ++i) r[i] = x[i];
  return r;
}

inline double covec_pair(int d, const Vec& w, std::span<const double> x) {
  double acc = 0.0;
  for (int i = 0; i < d; ++i)
    acc += w[static_cast<std::size_t>(i)] * x[static_cast<std::size_t>(i)];
  return acc;
}

inline Vec mat_apply(int d, const Mat& a, std::span<const double> x) {
  Vec r{};
  for (int i = 0; i < d; ++i) {
    double acc = 0.0;
    for (int j = 0; j < d; ++j)
      acc += a[static_cast<std::size_t>(i * kMaxDim + j)] *
             x[static_cast<std::size_t>(j)];
    r[static_cast<std::size_t>(i)] = acc;
  }
  return r;
}

inline Mat mat_mul(int d, const Mat& a, const Mat& b) {
  Mat r{};
  for (int i = 0; i < d; ++i)
    for (int j = 0; j < d; ++j) {
      double acc = 0.0;
      for (int k = 0; k < d; ++k)
        acc += a[static_cast<std::size_t>(i * kMaxDim + k)] *
               b[static_cast<std::size_t>(k * kMaxDim + j)];
      r[static_cast<std::size_t>(i * kMaxDim + j)] = acc;
    }
  return r;
}

inline Mat mat_identity(int d) {
  Mat r{};
  for (int i = 0; i < d; ++i) r[static_cast<std::size_t>(i * kMaxDim + i)] = 1.0;
  return r;
}

// Rank-one update target: r_ij = x_i * w_j (vector tensor covector).
inline Mat outer(int d, const Vec& x, const Vec& w) {
  Mat r{};
  for (int i = 0; i < d; ++i)
    for (int j = 0; j < d; ++j)
      r[static_cast<std::size_t>(i * kMaxDim + j)] =
          x[static_cast<std::size_t>(i)] * w[static_cast<std::size_t>(j)];
  return r;
}

}  // namespace contactgeo
