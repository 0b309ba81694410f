// Copyright 2026 The pauliepr Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef PAULIEPR_SCALAR_HPP
#define PAULIEPR_SCALAR_HPP

#include <complex>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>

#include "pauliepr/pauli.hpp"

namespace pauliepr {

using Rational = boost::multiprecision::cpp_rational;
using Integer = boost::multiprecision::cpp_int;

/// Exact Gaussian rational re + im*i.
class Scalar {
  public:
    Scalar() = default;
    Scalar(long long re) : re_(re) {}  // NOLINT(google-explicit-constructor)
    Scalar(Rational re, Rational im = 0) : re_(std::move(re)), im_(std::move(im)) {}

    static Scalar i() { return Scalar(0, 1); }
    /// num/den. Throws std::domain_error for den == 0.
    static Scalar fraction(long long num, long long den);
    static Scalar from_phase(Phase phase);

    const Rational &re() const { return re_; }
    const Rational &im() const { return im_; }
    bool is_zero() const { return re_ == 0 && im_ == 0; }
    bool is_real() const { return im_ == 0; }

    Scalar conj() const { return Scalar(re_, -im_); }

    Scalar operator-() const { return Scalar(-re_, -im_); }
    Scalar &operator+=(const Scalar &o);
    Scalar &operator-=(const Scalar &o);
    Scalar &operator*=(const Scalar &o);
    /// Throws std::domain_error when dividing by zero.
    Scalar &operator/=(const Scalar &o);

    friend Scalar operator+(Scalar a, const Scalar &b) { return a += b; }
    friend Scalar operator-(Scalar a, const Scalar &b) { return a -= b; }
    friend Scalar operator*(Scalar a, const Scalar &b) { return a *= b; }
    friend Scalar operator/(Scalar a, const Scalar &b) { return a /= b; }
    friend bool operator==(const Scalar &a, const Scalar &b) { return a.re_ == b.re_ && a.im_ == b.im_; }

    std::complex<double> to_complex() const;

    /// Canonical text that the expression parser reads back: "0", "-3/4", "i", "1/2*i", "(1 - 2*i)".
    std::string str() const;

  private:
    Rational re_{0};
    Rational im_{0};
};

std::ostream &operator<<(std::ostream &out, const Scalar &s);

}  // namespace pauliepr

#endif
