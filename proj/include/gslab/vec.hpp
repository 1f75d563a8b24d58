#pragma once
#include <cmath>
#include <cstddef>
#include <vector>

namespace gslab {

// Small ambient vectors (dimension 2..4 in the geometry code). A plain
// std::vector keeps the dimension dynamic; these helpers cover the handful
// of operations the project needs.
using Vec = std::vector<double>;

inline double dot(const Vec& a, const Vec& b) {
  double s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

inline double norm2(const Vec& a) { return dot(a, a); }
inline double norm(const Vec& a) { return std::sqrt(norm2(a)); }

inline Vec operator+(Vec a, const Vec& b) {
  for (std::size_t i = 0; i < a.size(); ++i) a[i] += b[i];
  return a;
}

inline Vec operator-(Vec a, const Vec& b) {
  for (std::size_t i = 0; i < a.size(); ++i) a[i] -= b[i];
  return a;
}

inline Vec operator*(double c, Vec a) {
  for (double& x : a) x *= c;
  return a;
}

inline Vec& operator+=(Vec& a, const Vec& b) {
  for (std::size_t i = 0; i < a.size(); ++i) a[i] += b[i];
  return a;
}

inline Vec& operator*=(Vec& a, double c) {
  for (double& x : a) x *= c;
  return a;
}

inline Vec normalized(Vec a) {
  double n = norm(a);
  for (double& x : a) x /= n;
  return a;
}

}  // namespace gslab
