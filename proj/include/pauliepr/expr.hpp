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

#ifndef PAULIEPR_EXPR_HPP
#define PAULIEPR_EXPR_HPP

#include <cstddef>
#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <variant>

#include "pauliepr/element.hpp"
#include "pauliepr/matrix_oracle.hpp"
#include "pauliepr/scalar.hpp"

namespace pauliepr {

// Expression language for elements:
//
//   expr   := term (('+' | '-') term)*
//   term   := factor ('*' factor)*
//   factor := '-' factor | INT ['/' INT] | 'i' | 'I' | 'psi' | 'E' D D | 'e' D | '(' expr ')'
//
// E takes two digits 0..3 (two-site words), e one digit 1..3 (one-site generators); the two
// never mix in one expression. There is no division operator: 1/2 is a fraction literal and
// "x/i" is written "-i*x".

struct ExprNode;

class ElementExpr {
  public:
    enum class Op { kAdd, kSubtract, kMultiply };

    /// Throws std::domain_error for negative values.
    static ElementExpr integer(Integer value);
    /// Kept as written (not reduced) so printing reproduces the input. Literals are unsigned:
    /// throws std::domain_error unless numerator >= 0 and denominator > 0.
    static ElementExpr fraction(Integer numerator, Integer denominator);
    static ElementExpr imaginary();
    static ElementExpr identity();
    static ElementExpr psi();
    static ElementExpr symbol(PauliWord word);
    static ElementExpr negate(ElementExpr operand);
    static ElementExpr binary(Op op, ElementExpr lhs, ElementExpr rhs);

    const ExprNode &node() const { return *node_; }

    /// Arity forced by the symbols in the expression; nullopt for pure scalars.
    std::optional<std::size_t> arity() const;

    friend bool operator==(const ElementExpr &a, const ElementExpr &b);

  private:
    static ElementExpr wrap(ExprNode node);
    explicit ElementExpr(std::shared_ptr<const ExprNode> node) : node_(std::move(node)) {}
    std::shared_ptr<const ExprNode> node_;
};

inline ElementExpr operator+(ElementExpr a, ElementExpr b) {
    return ElementExpr::binary(ElementExpr::Op::kAdd, std::move(a), std::move(b));
}
inline ElementExpr operator-(ElementExpr a, ElementExpr b) {
    return ElementExpr::binary(ElementExpr::Op::kSubtract, std::move(a), std::move(b));
}
inline ElementExpr operator*(ElementExpr a, ElementExpr b) {
    return ElementExpr::binary(ElementExpr::Op::kMultiply, std::move(a), std::move(b));
}
inline ElementExpr operator-(ElementExpr a) {
    return ElementExpr::negate(std::move(a));
}

struct IntegerNode {
    Integer value;
    bool operator==(const IntegerNode &) const = default;
};
struct FractionNode {
    Integer numerator;
    Integer denominator;
    bool operator==(const FractionNode &) const = default;
};
struct ImaginaryNode {
    bool operator==(const ImaginaryNode &) const = default;
};
struct IdentityNode {
    bool operator==(const IdentityNode &) const = default;
};
struct PsiNode {
    bool operator==(const PsiNode &) const = default;
};
struct SymbolNode {
    PauliWord word;
    bool operator==(const SymbolNode &) const = default;
};
struct NegateNode {
    ElementExpr operand;
};
struct BinaryNode {
    ElementExpr::Op op;
    ElementExpr lhs;
    ElementExpr rhs;
};

struct ExprNode {
    std::variant<IntegerNode, FractionNode, ImaginaryNode, IdentityNode, PsiNode, SymbolNode, NegateNode, BinaryNode>
        value;
};

/// Parse failure with the byte offset into the input where it was detected.
class ParseError : public std::runtime_error {
  public:
    ParseError(std::string kind, std::size_t offset, const std::string &detail);
    const std::string &kind() const { return kind_; }
    std::size_t offset() const { return offset_; }

  private:
    std::string kind_;
    std::size_t offset_;
};

class SyntaxError : public ParseError {
  public:
    SyntaxError(std::size_t offset, const std::string &detail) : ParseError("SyntaxError", offset, detail) {}
};

/// A symbol digit outside its range (E: 0..3, e: 1..3).
class RangeError : public ParseError {
  public:
    RangeError(std::size_t offset, const std::string &detail) : ParseError("RangeError", offset, detail) {}
};

/// One-site and two-site symbols used together.
class ArityConflict : public ParseError {
  public:
    ArityConflict(std::size_t offset, const std::string &detail) : ParseError("ArityConflict", offset, detail) {}
};

ElementExpr parse_expr(std::string_view input);

/// Fully parenthesized text; parse_expr(to_string(x)) == x.
std::string to_string(const ElementExpr &expr);

struct SymbolicBindings {
    const CompositionTable *table = &CompositionTable::standard();
    /// Value of `psi`; evaluation throws std::invalid_argument if psi is used while unbound.
    std::optional<Element> psi;
    /// Arity used when the expression contains no symbols.
    std::size_t default_arity = 2;
};

struct MatrixBindings {
    std::optional<MatrixRep> psi;
    std::size_t default_arity = 2;
};

Element evaluate(const ElementExpr &expr, const SymbolicBindings &bindings);
MatrixRep evaluate_matrix(const ElementExpr &expr, const MatrixBindings &bindings);

}  // namespace pauliepr

#endif
