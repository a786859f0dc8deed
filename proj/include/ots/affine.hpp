#pragma once

#include <string>

#include "ots/rational.hpp"

namespace ots {

// Value of the form constant + d_coeff * d, kept symbolic in the demand d.
// Layer values of the path network are of this shape: plain bound sums have
// d_coeff = 0, values descending from an interior coordinate carry exactly
// one +d term. Keying nodes on the symbolic form keeps values distinct even
// when they coincide numerically for a particular d.
struct AffineInD {
  Rational constant{};
  long d_coeff = 0;

  Rational eval(const Rational& d) const { return constant + Rational(d_coeff) * d; }

  friend bool operator==(const AffineInD& a, const AffineInD& b) {
    return a.d_coeff == b.d_coeff && a.constant == b.constant;
  }
  friend bool operator!=(const AffineInD& a, const AffineInD& b) { return !(a == b); }
  friend bool operator<(const AffineInD& a, const AffineInD& b) {
    if (a.d_coeff != b.d_coeff) return a.d_coeff < b.d_coeff;
    return a.constant < b.constant;
  }

  friend AffineInD operator+(const AffineInD& a, const AffineInD& b) {
    return AffineInD{a.constant + b.constant, a.d_coeff + b.d_coeff};
  }

  std::string str() const {
    if (d_coeff == 0) return constant.str();
    std::string dpart = d_coeff == 1 ? "d" : std::to_string(d_coeff) + "*d";
    if (constant.is_zero()) return dpart;
    return constant.str() + "+" + dpart;
  }
};

}  // namespace ots
