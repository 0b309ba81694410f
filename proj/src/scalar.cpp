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

#include "pauliepr/scalar.hpp"

#include <ostream>
#include <stdexcept>

namespace pauliepr {

namespace {

std::string rational_str(const Rational &r) {
    // cpp_rational prints "a/b" or "a" in lowest terms.
    return r.str();
}

}  // namespace

Scalar Scalar::fraction(long long num, long long den) {
    if (den == 0) {
        throw std::domain_error("zero denominator");
    }
    // The rational constructor rejects negative denominators.
    if (den < 0) {
        return Scalar(Rational(-Integer(num), -Integer(den)));
    }
    return Scalar(Rational(num, den));
}

Scalar Scalar::from_phase(Phase phase) {
    switch (phase.exponent()) {
        case 0:
            return Scalar(1);
        case 1:
            return Scalar(0, 1);
        case 2:
            return Scalar(-1);
        default:
            return Scalar(0, -1);
    }
}

Scalar &Scalar::operator+=(const Scalar &o) {
    re_ += o.re_;
    im_ += o.im_;
    return *this;
}

Scalar &Scalar::operator-=(const Scalar &o) {
    re_ -= o.re_;
    im_ -= o.im_;
    return *this;
}

Scalar &Scalar::operator*=(const Scalar &o) {
    Rational re = re_ * o.re_ - im_ * o.im_;
    Rational im = re_ * o.im_ + im_ * o.re_;
    re_ = std::move(re);
    im_ = std::move(im);
    return *this;
}

Scalar &Scalar::operator/=(const Scalar &o) {
    if (o.is_zero()) {
        throw std::domain_error("division of a scalar by zero");
    }
    Rational norm = o.re_ * o.re_ + o.im_ * o.im_;
    *this *= o.conj();
    re_ /= norm;
    im_ /= norm;
    return *this;
}

std::complex<double> Scalar::to_complex() const {
    return {re_.convert_to<double>(), im_.convert_to<double>()};
}

std::string Scalar::str() const {
    if (im_ == 0) {
        return rational_str(re_);
    }
    std::string imag;
    if (im_ == 1) {
        imag = "i";
    } else if (im_ == -1) {
        imag = "-i";
    } else {
        imag = rational_str(im_) + "*i";
    }
    if (re_ == 0) {
        return imag;
    }
    if (im_ < 0) {
        std::string magnitude = im_ == -1 ? "i" : rational_str(-im_) + "*i";
        return "(" + rational_str(re_) + " - " + magnitude + ")";
    }
    return "(" + rational_str(re_) + " + " + imag + ")";
}

std::ostream &operator<<(std::ostream &out, const Scalar &s) {
    return out << s.str();
}

}  // namespace pauliepr
