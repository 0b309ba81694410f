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

#include "pauliepr/element.hpp"

#include <ostream>

#include "pauliepr/errors.hpp"

namespace pauliepr {

namespace {

void require_same_arity(const Element &a, const Element &b, const char *op) {
    if (a.arity() != b.arity()) {
        throw ArityMismatch(std::string(op) + ": arity " + std::to_string(a.arity()) + " vs " +
                            std::to_string(b.arity()));
    }
}

// Coefficient text for a non-identity term, including the trailing '*' when needed.
std::string coefficient_prefix(const Scalar &c) {
    if (c == Scalar(1)) {
        return "";
    }
    if (c == Scalar(-1)) {
        return "-";
    }
    return c.str() + "*";
}

}  // namespace

Element::Element(std::size_t arity) : arity_(arity) {
    if (arity == 0) {
        throw std::invalid_argument("element arity must be at least 1");
    }
}

Element Element::identity(std::size_t arity) {
    return word(PauliWord::identity(arity));
}

Element Element::word(const PauliWord &w, Scalar coefficient) {
    Element out(w.size());
    out.accumulate(w, coefficient);
    return out;
}

Element Element::from_terms(std::size_t arity, const TermMap &terms) {
    Element out(arity);
    for (const auto &[w, c] : terms) {
        if (w.size() != arity) {
            throw ArityMismatch("term " + w.name() + " does not have arity " + std::to_string(arity));
        }
        out.accumulate(w, c);
    }
    return out;
}

Scalar Element::coefficient(const PauliWord &w) const {
    auto it = terms_.find(w);
    return it == terms_.end() ? Scalar() : it->second;
}

void Element::accumulate(const PauliWord &w, const Scalar &c) {
    if (c.is_zero()) {
        return;
    }
    auto [it, inserted] = terms_.try_emplace(w, c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero()) {
            terms_.erase(it);
        }
    }
}

Element &Element::operator+=(const Element &o) {
    require_same_arity(*this, o, "add");
    for (const auto &[w, c] : o.terms_) {
        accumulate(w, c);
    }
    return *this;
}

Element &Element::operator-=(const Element &o) {
    require_same_arity(*this, o, "subtract");
    for (const auto &[w, c] : o.terms_) {
        accumulate(w, -c);
    }
    return *this;
}

std::string Element::str() const {
    if (terms_.empty()) {
        return "0";
    }
    std::string out;
    for (const auto &[w, c] : terms_) {
        std::string term = w.is_identity() ? c.str() : coefficient_prefix(c) + w.name();
        if (out.empty()) {
            out = term;
        } else if (term.front() == '-') {
            out += " - " + term.substr(1);
        } else {
            out += " + " + term;
        }
    }
    return out;
}

Element add(const Element &a, const Element &b) {
    Element out = a;
    out += b;
    return out;
}

Element subtract(const Element &a, const Element &b) {
    Element out = a;
    out -= b;
    return out;
}

Element scale(const Scalar &c, const Element &a) {
    Element::TermMap terms;
    for (const auto &[w, x] : a.terms()) {
        terms.emplace(w, c * x);
    }
    return Element::from_terms(a.arity(), terms);
}

Element negate(const Element &a) {
    return scale(Scalar(-1), a);
}

Element mul(const Element &a, const Element &b, const CompositionTable &table) {
    require_same_arity(a, b, "mul");
    Element out(a.arity());
    for (const auto &[wa, ca] : a.terms()) {
        for (const auto &[wb, cb] : b.terms()) {
            WordProduct p = mul_words(wa, wb, table);
            out += Element::word(p.word, ca * cb * Scalar::from_phase(p.phase));
        }
    }
    return out;
}

Element adjoint(const Element &a) {
    Element::TermMap terms;
    for (const auto &[w, c] : a.terms()) {
        terms.emplace(w, c.conj());
    }
    return Element::from_terms(a.arity(), terms);
}

Scalar trace_normalized(const Element &a) {
    return a.coefficient(PauliWord::identity(a.arity()));
}

bool proportional(const Element &a, const Element &b, Scalar *factor) {
    if (a.arity() != b.arity() || a.is_zero() || b.is_zero() || a.term_count() != b.term_count()) {
        return false;
    }
    const auto &[w0, c0] = *a.terms().begin();
    Scalar ratio = b.coefficient(w0) / c0;
    if (ratio.is_zero() || scale(ratio, a) != b) {
        return false;
    }
    if (factor != nullptr) {
        *factor = ratio;
    }
    return true;
}

std::ostream &operator<<(std::ostream &out, const Element &e) {
    return out << e.str();
}

namespace sym {

Element E(int first, int second) {
    return Element::word(PauliWord::from_indices({first, second}));
}

Element e(int k) {
    return Element::word(PauliWord::from_indices({k}));
}

Element one() {
    return Element::identity(2);
}

}  // namespace sym

}  // namespace pauliepr
