#pragma once

// Gaussian rationals Q(i).

#include <string>

#include "m24/exact/poly.hpp"

namespace m24 {

struct GaussRat {
  Rat re;
  Rat im;

  GaussRat() = default;
  GaussRat(int r) : re(r) {}
  GaussRat(Rat r) : re(std::move(r)) {}
  GaussRat(Rat r, Rat i) : re(std::move(r)), im(std::move(i)) {}

  static GaussRat i() { return {Rat(0), Rat(1)}; }

  GaussRat operator-() const { return {-re, -im}; }
  GaussRat& operator+=(const GaussRat& o) {
    re += o.re;
    im += o.im;
    return *this;
  }
  GaussRat& operator-=(const GaussRat& o) {
    re -= o.re;
    im -= o.im;
    return *this;
  }
  friend GaussRat operator+(GaussRat a, const GaussRat& b) { return a += b; }
  friend GaussRat operator-(GaussRat a, const GaussRat& b) { return a -= b; }
  friend GaussRat operator*(const GaussRat& a, const GaussRat& b) {
    if (sgn(a.im) == 0 && sgn(b.im) == 0) return GaussRat(a.re * b.re);
    return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
  }
  friend GaussRat operator/(const GaussRat& a, const GaussRat& b);
  friend bool operator==(const GaussRat& a, const GaussRat& b) { return a.re == b.re && a.im == b.im; }
  friend bool operator!=(const GaussRat& a, const GaussRat& b) { return !(a == b); }

  Rat norm() const { return re * re + im * im; }
};

inline bool is_zero(const GaussRat& x) { return sgn(x.re) == 0 && sgn(x.im) == 0; }
inline GaussRat conj(const GaussRat& x) { return {x.re, -x.im}; }
GaussRat inverse(const GaussRat& x);
inline bool is_real(const GaussRat& x) { return sgn(x.im) == 0; }

/// "a", "b*i" or "a + b*i" with rationals as p/q.
std::string to_string(const GaussRat& x);
GaussRat parse_gauss(std::string_view text);

using GPoly = Poly<GaussRat>;

GPoly to_gpoly(const QPoly& p);
/// Applies i -> -i to every coefficient.
GPoly conj(const GPoly& p);

}  // namespace m24
