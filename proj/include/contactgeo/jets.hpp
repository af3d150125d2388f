#pragma once

#include <cmath>
#include <utility>

namespace contactgeo {

// First-order dual number over a scalar ring T.  Nesting (Dual<Dual<...>>)
// propagates exact higher-order directional derivatives through arbitrary
// arithmetic, including division, with no truncation error beyond rounding.
template <class T>
struct Dual {
  T val{};
  T dot{};

  Dual() = default;
  Dual(double c) : val(c) {}  // lift of a constant; derivative part is zero
  Dual(T v, T d) : val(std::move(v)), dot(std::move(d)) {}

  Dual& operator+=(const Dual& o) {
    val += o.val;
    dot += o.dot;
    return *this;
  }
  Dual& operator-=(const Dual& o) {
    val -= o.val;
    dot -= o.dot;
    return *this;
  }
  Dual& operator*=(const Dual& o) { return *this = *this * o; }
  Dual& operator/=(const Dual& o) { return *this = *this / o; }

  friend Dual operator+(Dual a, const Dual& b) {
    a += b;
    return a;
  }
  friend Dual operator-(Dual a, const Dual& b) {
    a -= b;
    return a;
  }
  friend Dual operator-(const Dual& a) { return Dual(-a.val, -a.dot); }
  friend Dual operator+(const Dual& a) { return a; }
  friend Dual operator*(const Dual& a, const Dual& b) {
    return Dual(a.val * b.val, a.val * b.dot + a.dot * b.val);
  }
  friend Dual operator/(const Dual& a, const Dual& b) {
    T q = a.val / b.val;
    return Dual(q, (a.dot - q * b.dot) / b.val);
  }
};

inline double value_of(double x) { return x; }
template <class T>
double value_of(const Dual<T>& d) {
  return value_of(d.val);
}

using std::sqrt;
template <class T>
Dual<T> sqrt(const Dual<T>& a) {
  T r = sqrt(a.val);
  return Dual<T>(r, a.dot / (r + r));
}

// Jet tower used by the field evaluator.  D4 is the deepest ring supported;
// each stacked derivative of a field climbs one level.
using D1 = Dual<double>;
using D2 = Dual<D1>;
using D3 = Dual<D2>;
using D4 = Dual<D3>;

}  // namespace contactgeo
