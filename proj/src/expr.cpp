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

#include "pauliepr/expr.hpp"

#include <cctype>

#include "pauliepr/errors.hpp"

namespace pauliepr {

namespace {

template <class... Ts>
struct Overloaded : Ts... {
    using Ts::operator()...;
};
template <class... Ts>
Overloaded(Ts...) -> Overloaded<Ts...>;

class Parser {
  public:
    explicit Parser(std::string_view input) : input_(input) {}

    ElementExpr parse() {
        ElementExpr out = parse_expr();
        skip_space();
        if (pos_ < input_.size()) {
            throw SyntaxError(pos_, std::string("unexpected '") + input_[pos_] + "'");
        }
        return out;
    }

  private:
    void skip_space() {
        while (pos_ < input_.size() && std::isspace(static_cast<unsigned char>(input_[pos_]))) {
            pos_++;
        }
    }

    bool peek(char c) {
        skip_space();
        return pos_ < input_.size() && input_[pos_] == c;
    }

    ElementExpr parse_expr() {
        ElementExpr out = parse_term();
        while (true) {
            if (peek('+')) {
                pos_++;
                out = out + parse_term();
            } else if (peek('-')) {
                pos_++;
                out = out - parse_term();
            } else {
                return out;
            }
        }
    }

    ElementExpr parse_term() {
        ElementExpr out = parse_factor();
        while (peek('*')) {
            pos_++;
            out = out * parse_factor();
        }
        return out;
    }

    ElementExpr parse_factor() {
        skip_space();
        if (pos_ >= input_.size()) {
            throw SyntaxError(pos_, "expected a factor, found end of input");
        }
        char c = input_[pos_];
        if (c == '-') {
            pos_++;
            return -parse_factor();
        }
        if (c == '(') {
            std::size_t open = pos_++;
            ElementExpr inner = parse_expr();
            if (!peek(')')) {
                throw SyntaxError(pos_, "missing ')' for '(' at offset " + std::to_string(open));
            }
            pos_++;
            return inner;
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            return parse_number();
        }
        if (std::isalpha(static_cast<unsigned char>(c))) {
            return parse_symbol();
        }
        throw SyntaxError(pos_, std::string("unexpected '") + c + "'");
    }

    Integer read_integer() {
        std::size_t start = pos_;
        while (pos_ < input_.size() && std::isdigit(static_cast<unsigned char>(input_[pos_]))) {
            pos_++;
        }
        return Integer(std::string(input_.substr(start, pos_ - start)));
    }

    ElementExpr parse_number() {
        Integer numerator = read_integer();
        if (!peek('/')) {
            return ElementExpr::integer(std::move(numerator));
        }
        pos_++;
        skip_space();
        if (pos_ >= input_.size() || !std::isdigit(static_cast<unsigned char>(input_[pos_]))) {
            throw SyntaxError(pos_, "'/' is only allowed between integer literals");
        }
        std::size_t at = pos_;
        Integer denominator = read_integer();
        if (denominator == 0) {
            throw SyntaxError(at, "zero denominator");
        }
        return ElementExpr::fraction(std::move(numerator), std::move(denominator));
    }

    ElementExpr parse_symbol() {
        std::size_t start = pos_;
        while (pos_ < input_.size() && std::isalnum(static_cast<unsigned char>(input_[pos_]))) {
            pos_++;
        }
        std::string_view text = input_.substr(start, pos_ - start);
        if (text == "i") {
            return ElementExpr::imaginary();
        }
        if (text == "I") {
            return ElementExpr::identity();
        }
        if (text == "psi") {
            note_arity(2, start);
            return ElementExpr::psi();
        }
        auto all_digits = [](std::string_view s) {
            for (char d : s) {
                if (!std::isdigit(static_cast<unsigned char>(d))) {
                    return false;
                }
            }
            return true;
        };
        std::string_view digits = text.substr(1);
        if (text.front() == 'E' && digits.size() == 2 && all_digits(digits)) {
            int a = digits[0] - '0';
            int b = digits[1] - '0';
            if (a > 3 || b > 3) {
                throw RangeError(start, "E-symbol digits must be in 0..3, got '" + std::string(text) + "'");
            }
            note_arity(2, start);
            return ElementExpr::symbol(PauliWord::from_indices({a, b}));
        }
        if (text.front() == 'e' && digits.size() == 1 && all_digits(digits)) {
            int k = digits[0] - '0';
            if (k < 1 || k > 3) {
                throw RangeError(start, "e-symbol digit must be in 1..3, got '" + std::string(text) + "'");
            }
            note_arity(1, start);
            return ElementExpr::symbol(PauliWord::from_indices({k}));
        }
        throw SyntaxError(start, "unknown symbol '" + std::string(text) + "'");
    }

    void note_arity(std::size_t arity, std::size_t at) {
        if (arity_ && *arity_ != arity) {
            throw ArityConflict(at, "e-symbols and E-symbols (or psi) cannot be mixed");
        }
        arity_ = arity;
    }

    std::string_view input_;
    std::size_t pos_ = 0;
    std::optional<std::size_t> arity_;
};

}  // namespace

ElementExpr ElementExpr::wrap(ExprNode node) {
    return ElementExpr(std::make_shared<const ExprNode>(std::move(node)));
}

ElementExpr ElementExpr::integer(Integer value) {
    if (value < 0) {
        throw std::domain_error("integer literals are nonnegative; wrap them in negate()");
    }
    return wrap({IntegerNode{std::move(value)}});
}
ElementExpr ElementExpr::fraction(Integer numerator, Integer denominator) {
    if (denominator <= 0 || numerator < 0) {
        throw std::domain_error("fraction literals need a nonnegative numerator and a positive denominator");
    }
    return wrap({FractionNode{std::move(numerator), std::move(denominator)}});
}
ElementExpr ElementExpr::imaginary() {
    return wrap({ImaginaryNode{}});
}
ElementExpr ElementExpr::identity() {
    return wrap({IdentityNode{}});
}
ElementExpr ElementExpr::psi() {
    return wrap({PsiNode{}});
}
ElementExpr ElementExpr::symbol(PauliWord word) {
    return wrap({SymbolNode{std::move(word)}});
}
ElementExpr ElementExpr::negate(ElementExpr operand) {
    return wrap({NegateNode{std::move(operand)}});
}
ElementExpr ElementExpr::binary(Op op, ElementExpr lhs, ElementExpr rhs) {
    return wrap({BinaryNode{op, std::move(lhs), std::move(rhs)}});
}

std::optional<std::size_t> ElementExpr::arity() const {
    return std::visit(
        Overloaded{
            [](const SymbolNode &n) -> std::optional<std::size_t> { return n.word.size(); },
            [](const PsiNode &) -> std::optional<std::size_t> { return 2; },
            [](const NegateNode &n) { return n.operand.arity(); },
            [](const BinaryNode &n) {
                auto a = n.lhs.arity();
                return a ? a : n.rhs.arity();
            },
            [](const auto &) -> std::optional<std::size_t> { return std::nullopt; },
        },
        node_->value);
}

bool operator==(const ElementExpr &a, const ElementExpr &b) {
    const auto &x = a.node().value;
    const auto &y = b.node().value;
    if (x.index() != y.index()) {
        return false;
    }
    if (const auto *n = std::get_if<NegateNode>(&x)) {
        return n->operand == std::get<NegateNode>(y).operand;
    }
    if (const auto *n = std::get_if<BinaryNode>(&x)) {
        const auto &m = std::get<BinaryNode>(y);
        return n->op == m.op && n->lhs == m.lhs && n->rhs == m.rhs;
    }
    return std::visit(
        [&](const auto &lhs) -> bool {
            using T = std::decay_t<decltype(lhs)>;
            if constexpr (std::is_same_v<T, NegateNode> || std::is_same_v<T, BinaryNode>) {
                return false;
            } else {
                return lhs == std::get<T>(y);
            }
        },
        x);
}

ParseError::ParseError(std::string kind, std::size_t offset, const std::string &detail)
    : std::runtime_error(kind + " at offset " + std::to_string(offset) + ": " + detail),
      kind_(std::move(kind)),
      offset_(offset) {}

ElementExpr parse_expr(std::string_view input) {
    return Parser(input).parse();
}

std::string to_string(const ElementExpr &expr) {
    return std::visit(
        Overloaded{
            [](const IntegerNode &n) { return n.value.str(); },
            [](const FractionNode &n) { return n.numerator.str() + "/" + n.denominator.str(); },
            [](const ImaginaryNode &) { return std::string("i"); },
            [](const IdentityNode &) { return std::string("I"); },
            [](const PsiNode &) { return std::string("psi"); },
            [](const SymbolNode &n) {
                std::string out(1, n.word.size() == 1 ? 'e' : 'E');
                for (SiteLetter l : n.word.letters()) {
                    out.push_back(static_cast<char>('0' + index_of(l)));
                }
                return out;
            },
            [](const NegateNode &n) { return "-" + to_string(n.operand); },
            [](const BinaryNode &n) {
                const char *op = n.op == ElementExpr::Op::kAdd ? " + " : n.op == ElementExpr::Op::kSubtract ? " - " : " * ";
                return "(" + to_string(n.lhs) + op + to_string(n.rhs) + ")";
            },
        },
        expr.node().value);
}

namespace {

Element eval_symbolic(const ElementExpr &expr, const SymbolicBindings &b, std::size_t arity) {
    auto scalar = [&](Scalar c) { return scale(c, Element::identity(arity)); };
    return std::visit(
        Overloaded{
            [&](const IntegerNode &n) { return scalar(Scalar(Rational(n.value))); },
            [&](const FractionNode &n) { return scalar(Scalar(Rational(n.numerator, n.denominator))); },
            [&](const ImaginaryNode &) { return scalar(Scalar::i()); },
            [&](const IdentityNode &) { return Element::identity(arity); },
            [&](const PsiNode &) {
                if (!b.psi) {
                    throw std::invalid_argument("psi is not bound");
                }
                return *b.psi;
            },
            [&](const SymbolNode &n) { return Element::word(n.word); },
            [&](const NegateNode &n) { return negate(eval_symbolic(n.operand, b, arity)); },
            [&](const BinaryNode &n) {
                Element lhs = eval_symbolic(n.lhs, b, arity);
                Element rhs = eval_symbolic(n.rhs, b, arity);
                switch (n.op) {
                    case ElementExpr::Op::kAdd:
                        return add(lhs, rhs);
                    case ElementExpr::Op::kSubtract:
                        return subtract(lhs, rhs);
                    default:
                        return mul(lhs, rhs, *b.table);
                }
            },
        },
        expr.node().value);
}

MatrixRep eval_matrix(const ElementExpr &expr, const MatrixBindings &b, std::size_t arity) {
    auto scalar = [&](Complex c) -> MatrixRep { return c * identity_matrix(arity); };
    return std::visit(
        Overloaded{
            [&](const IntegerNode &n) { return scalar(n.value.convert_to<double>()); },
            [&](const FractionNode &n) {
                return scalar(Rational(n.numerator, n.denominator).convert_to<double>());
            },
            [&](const ImaginaryNode &) { return scalar(Complex(0, 1)); },
            [&](const IdentityNode &) { return identity_matrix(arity); },
            [&](const PsiNode &) -> MatrixRep {
                if (!b.psi) {
                    throw std::invalid_argument("psi is not bound");
                }
                return *b.psi;
            },
            [&](const SymbolNode &n) { return word_matrix(n.word); },
            [&](const NegateNode &n) -> MatrixRep { return -eval_matrix(n.operand, b, arity); },
            [&](const BinaryNode &n) -> MatrixRep {
                MatrixRep lhs = eval_matrix(n.lhs, b, arity);
                MatrixRep rhs = eval_matrix(n.rhs, b, arity);
                switch (n.op) {
                    case ElementExpr::Op::kAdd:
                        return lhs + rhs;
                    case ElementExpr::Op::kSubtract:
                        return lhs - rhs;
                    default:
                        return lhs * rhs;
                }
            },
        },
        expr.node().value);
}

}  // namespace

Element evaluate(const ElementExpr &expr, const SymbolicBindings &bindings) {
    return eval_symbolic(expr, bindings, expr.arity().value_or(bindings.default_arity));
}

MatrixRep evaluate_matrix(const ElementExpr &expr, const MatrixBindings &bindings) {
    return eval_matrix(expr, bindings, expr.arity().value_or(bindings.default_arity));
}

}  // namespace pauliepr
