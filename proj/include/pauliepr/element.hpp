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

#ifndef PAULIEPR_ELEMENT_HPP
#define PAULIEPR_ELEMENT_HPP

#include <cstddef>
#include <iosfwd>
#include <map>
#include <string>

#include "pauliepr/pauli.hpp"
#include "pauliepr/scalar.hpp"

namespace pauliepr {

/// A finite linear combination of Pauli words of a common length (the arity).
///
/// Always canonical: terms are kept in a word-ordered map and zero coefficients are never
/// stored, so two Elements are equal exactly when their term maps are equal.
class Element {
  public:
    using TermMap = std::map<PauliWord, Scalar>;

    /// The zero element of the given arity.
    explicit Element(std::size_t arity);

    static Element zero(std::size_t arity) { return Element(arity); }
    static Element identity(std::size_t arity);
    static Element word(const PauliWord &w, Scalar coefficient = 1);
    /// Throws ArityMismatch if a word has the wrong length. Zero coefficients are dropped.
    static Element from_terms(std::size_t arity, const TermMap &terms);

    std::size_t arity() const { return arity_; }
    const TermMap &terms() const { return terms_; }
    std::size_t term_count() const { return terms_.size(); }
    bool is_zero() const { return terms_.empty(); }
    Scalar coefficient(const PauliWord &w) const;

    Element &operator+=(const Element &o);
    Element &operator-=(const Element &o);

    friend bool operator==(const Element &, const Element &) = default;

    /// Canonical text, readable by the expression parser: "i*E03", "-1/4 + 1/4*E11".
    std::string str() const;

  private:
    void accumulate(const PauliWord &w, const Scalar &c);

    std::size_t arity_;
    TermMap terms_;
};

Element add(const Element &a, const Element &b);
Element subtract(const Element &a, const Element &b);
Element scale(const Scalar &c, const Element &a);
Element negate(const Element &a);
/// Bilinear extension of mul_words. Throws ArityMismatch.
Element mul(const Element &a, const Element &b, const CompositionTable &table = CompositionTable::standard());
/// Conjugates every coefficient; words are self-adjoint.
Element adjoint(const Element &a);
/// Coefficient of the identity word, i.e. trace / 2^arity.
Scalar trace_normalized(const Element &a);
/// True if b = factor * a for some nonzero scalar factor, writing it to *factor when given.
bool proportional(const Element &a, const Element &b, Scalar *factor = nullptr);

inline Element operator+(const Element &a, const Element &b) { return add(a, b); }
inline Element operator-(const Element &a, const Element &b) { return subtract(a, b); }
inline Element operator-(const Element &a) { return negate(a); }
inline Element operator*(const Element &a, const Element &b) { return mul(a, b); }
inline Element operator*(const Scalar &c, const Element &a) { return scale(c, a); }

std::ostream &operator<<(std::ostream &out, const Element &e);

/// Short constructors for the two-site and one-site basis elements.
namespace sym {

/// E(i, j) is the two-site word with letters i and j; E(0, 0) is the identity.
Element E(int first, int second);
/// e(k) is the one-site generator e_k; e(0) is the one-site identity.
Element e(int k);
/// The two-site identity.
Element one();

}  // namespace sym

}  // namespace pauliepr

#endif
