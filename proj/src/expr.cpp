#include "trigcolloc/expr.hpp"

#include <cctype>
#include <cmath>
#include <cstdio>
#include <numbers>

namespace trigcolloc {

namespace {

bool contains_var_x(const Expr& e) {
    if (e.kind == Expr::Kind::VarX)
        return true;
    for (const Expr& a : e.args)
        if (contains_var_x(a))
            return true;
    return false;
}

class Parser {
public:
    Parser(const std::string& text, bool operator_mode)
        : text_(text), operator_mode_(operator_mode) {}

    Expr parse() {
        Expr e = parse_sum();
        skip_ws();
        if (pos_ != text_.size())
            throw ParseError("unexpected trailing input", pos_);
        return e;
    }

private:
    void skip_ws() {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_])))
            ++pos_;
    }

    char peek() {
        skip_ws();
        return pos_ < text_.size() ? text_[pos_] : '\0';
    }

    bool accept(char c) {
        if (peek() == c) {
            ++pos_;
            return true;
        }
        return false;
    }

    Expr parse_sum() {
        Expr left = parse_term();
        for (;;) {
            if (accept('+')) {
                left = make(Expr::Kind::Add, {std::move(left), parse_term()});
            } else if (accept('-')) {
                left = make(Expr::Kind::Sub, {std::move(left), parse_term()});
            } else {
                return left;
            }
        }
    }

    Expr parse_term() {
        Expr left = parse_unary();
        for (;;) {
            if (accept('*')) {
                left = make(Expr::Kind::Mul, {std::move(left), parse_unary()});
            } else if (accept('/')) {
                left = make(Expr::Kind::Div, {std::move(left), parse_unary()});
            } else {
                return left;
            }
        }
    }

    Expr parse_unary() {
        if (accept('-'))
            return make(Expr::Kind::Neg, {parse_unary()});
        return parse_power();
    }

    Expr parse_power() {
        Expr base = parse_primary();
        if (accept('^')) {
            // exponents are literals only
            bool neg = accept('-');
            skip_ws();
            Expr exp = parse_number();
            if (neg)
                exp.number = -exp.number;
            return make(Expr::Kind::Pow, {std::move(base), std::move(exp)});
        }
        return base;
    }

    Expr parse_primary() {
        const char c = peek();
        if (c == '(') {
            ++pos_;
            Expr e = parse_sum();
            if (!accept(')'))
                throw ParseError("expected ')'", pos_);
            return e;
        }
        if (std::isdigit(static_cast<unsigned char>(c)) || c == '.')
            return parse_number();
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_')
            return parse_identifier();
        throw ParseError("unexpected token", pos_);
    }

    Expr parse_number() {
        skip_ws();
        const std::size_t start = pos_;
        while (pos_ < text_.size() && (std::isdigit(static_cast<unsigned char>(text_[pos_])) ||
                                       text_[pos_] == '.'))
            ++pos_;
        if (pos_ == start)
            throw ParseError("expected a number", pos_);
        if (pos_ < text_.size() && (text_[pos_] == 'e' || text_[pos_] == 'E')) {
            std::size_t p = pos_ + 1;
            if (p < text_.size() && (text_[p] == '+' || text_[p] == '-'))
                ++p;
            if (p < text_.size() && std::isdigit(static_cast<unsigned char>(text_[p]))) {
                pos_ = p;
                while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_])))
                    ++pos_;
            }
        }
        Expr e;
        e.kind = Expr::Kind::Number;
        try {
            e.number = std::stod(text_.substr(start, pos_ - start));
        } catch (const std::exception&) {
            throw ParseError("malformed number", start);
        }
        return e;
    }

    Expr parse_identifier() {
        skip_ws();
        const std::size_t start = pos_;
        while (pos_ < text_.size() && (std::isalnum(static_cast<unsigned char>(text_[pos_])) ||
                                       text_[pos_] == '_'))
            ++pos_;
        const std::string name = text_.substr(start, pos_ - start);
        if (name == "x") {
            Expr e;
            e.kind = Expr::Kind::VarX;
            return e;
        }
        if (name == "pi") {
            Expr e;
            e.kind = Expr::Kind::Number;
            e.number = std::numbers::pi;
            return e;
        }
        if (name == "d") {
            if (!operator_mode_)
                throw ParseError("symbol 'd' is not allowed in a scalar expression", start);
            Expr e;
            e.kind = Expr::Kind::Diff;
            return e;
        }
        if (name == "sin" || name == "cos" || name == "exp" || name == "sqrt") {
            if (!accept('('))
                throw ParseError("expected '(' after function name", pos_);
            Expr arg = parse_sum();
            if (!accept(')'))
                throw ParseError("expected ')'", pos_);
            Expr e;
            e.kind = Expr::Kind::Call;
            e.func = name;
            e.args.push_back(std::move(arg));
            return e;
        }
        if (name == "inv") {
            if (!operator_mode_)
                throw ParseError("inv(...) is only allowed in operator expressions", start);
            if (!accept('('))
                throw ParseError("expected '(' after inv", pos_);
            Expr arg = parse_sum();
            if (!accept(')'))
                throw ParseError("expected ')'", pos_);
            Expr e;
            e.kind = Expr::Kind::Inv;
            e.args.push_back(std::move(arg));
            return e;
        }
        throw ParseError("unknown identifier '" + name + "'", start);
    }

    static Expr make(Expr::Kind kind, std::vector<Expr> args) {
        Expr e;
        e.kind = kind;
        e.args = std::move(args);
        return e;
    }

    const std::string& text_;
    bool operator_mode_;
    std::size_t pos_ = 0;
};

void validate_operator(const Expr& e) {
    switch (e.kind) {
    case Expr::Kind::Inv:
        if (e.args[0].contains_diff())
            throw ParseError("d is not allowed inside inv(...)", 0);
        break;
    case Expr::Kind::Div:
        if (e.args[1].contains_diff())
            throw ParseError("d is not allowed in a denominator", 0);
        if (e.args[0].contains_diff() && contains_var_x(e.args[1]))
            throw ParseError("an operator may only be divided by a constant", 0);
        break;
    case Expr::Kind::Pow:
        if (e.args[0].contains_diff()) {
            const double p = e.args[1].number;
            if (p < 0.0 || p != std::floor(p))
                throw ParseError("operator powers must be nonnegative integers", 0);
        }
        break;
    default:
        break;
    }
    for (const Expr& a : e.args)
        validate_operator(a);
}

std::string format_number(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

} // namespace

bool Expr::contains_diff() const {
    if (kind == Kind::Diff)
        return true;
    for (const Expr& a : args)
        if (a.contains_diff())
            return true;
    return false;
}

Expr parse_scalar(const std::string& text) {
    return Parser(text, /*operator_mode=*/false).parse();
}

Expr parse_operator(const std::string& text) {
    Expr e = Parser(text, /*operator_mode=*/true).parse();
    validate_operator(e);
    return e;
}

double eval_scalar(const Expr& e, double x) {
    switch (e.kind) {
    case Expr::Kind::Number:
        return e.number;
    case Expr::Kind::VarX:
        return x;
    case Expr::Kind::Diff:
        throw EvalError("cannot evaluate the differentiation symbol as a scalar");
    case Expr::Kind::Add:
        return eval_scalar(e.args[0], x) + eval_scalar(e.args[1], x);
    case Expr::Kind::Sub:
        return eval_scalar(e.args[0], x) - eval_scalar(e.args[1], x);
    case Expr::Kind::Mul:
        return eval_scalar(e.args[0], x) * eval_scalar(e.args[1], x);
    case Expr::Kind::Div: {
        const double den = eval_scalar(e.args[1], x);
        if (den == 0.0)
            throw EvalError("division by zero in " + to_string(e));
        return eval_scalar(e.args[0], x) / den;
    }
    case Expr::Kind::Pow:
        return std::pow(eval_scalar(e.args[0], x), e.args[1].number);
    case Expr::Kind::Neg:
        return -eval_scalar(e.args[0], x);
    case Expr::Kind::Inv: {
        const double v = eval_scalar(e.args[0], x);
        if (v == 0.0)
            throw EvalError("division by zero in " + to_string(e));
        return 1.0 / v;
    }
    case Expr::Kind::Call: {
        const double a = eval_scalar(e.args[0], x);
        if (e.func == "sin")
            return std::sin(a);
        if (e.func == "cos")
            return std::cos(a);
        if (e.func == "exp")
            return std::exp(a);
        if (e.func == "sqrt") {
            if (a < 0.0)
                throw EvalError("sqrt of a negative value in " + to_string(e));
            return std::sqrt(a);
        }
        throw EvalError("unknown function " + e.func);
    }
    }
    throw EvalError("malformed expression node");
}

std::string to_string(const Expr& e) {
    switch (e.kind) {
    case Expr::Kind::Number:
        return format_number(e.number);
    case Expr::Kind::VarX:
        return "x";
    case Expr::Kind::Diff:
        return "d";
    case Expr::Kind::Add:
        return "(" + to_string(e.args[0]) + " + " + to_string(e.args[1]) + ")";
    case Expr::Kind::Sub:
        return "(" + to_string(e.args[0]) + " - " + to_string(e.args[1]) + ")";
    case Expr::Kind::Mul:
        return "(" + to_string(e.args[0]) + " * " + to_string(e.args[1]) + ")";
    case Expr::Kind::Div:
        return "(" + to_string(e.args[0]) + " / " + to_string(e.args[1]) + ")";
    case Expr::Kind::Pow:
        return "(" + to_string(e.args[0]) + "^" + format_number(e.args[1].number) + ")";
    case Expr::Kind::Neg:
        return "(-" + to_string(e.args[0]) + ")";
    case Expr::Kind::Inv:
        return "inv(" + to_string(e.args[0]) + ")";
    case Expr::Kind::Call:
        return e.func + "(" + to_string(e.args[0]) + ")";
    }
    return "?";
}

bool structurally_equal(const Expr& a, const Expr& b) {
    if (a.kind != b.kind || a.args.size() != b.args.size())
        return false;
    if (a.kind == Expr::Kind::Number && a.number != b.number)
        return false;
    if (a.kind == Expr::Kind::Call && a.func != b.func)
        return false;
    if (a.kind == Expr::Kind::Pow && a.args[1].number != b.args[1].number)
        return false;
    for (std::size_t i = 0; i < a.args.size(); ++i)
        if (!structurally_equal(a.args[i], b.args[i]))
            return false;
    return true;
}

namespace {

using Poly = std::vector<double>; // coefficients in d, low order first

std::optional<Poly> poly_in_d(const Expr& e) {
    auto trim = [](Poly p) {
        while (p.size() > 1 && p.back() == 0.0)
            p.pop_back();
        return p;
    };
    switch (e.kind) {
    case Expr::Kind::Number:
        return Poly{e.number};
    case Expr::Kind::VarX:
        return std::nullopt;
    case Expr::Kind::Diff:
        return Poly{0.0, 1.0};
    case Expr::Kind::Add:
    case Expr::Kind::Sub: {
        auto a = poly_in_d(e.args[0]);
        auto b = poly_in_d(e.args[1]);
        if (!a || !b)
            return std::nullopt;
        const double sign = (e.kind == Expr::Kind::Sub) ? -1.0 : 1.0;
        if (b->size() > a->size())
            a->resize(b->size(), 0.0);
        for (std::size_t i = 0; i < b->size(); ++i)
            (*a)[i] += sign * (*b)[i];
        return trim(*a);
    }
    case Expr::Kind::Mul: {
        auto a = poly_in_d(e.args[0]);
        auto b = poly_in_d(e.args[1]);
        if (!a || !b)
            return std::nullopt;
        Poly c(a->size() + b->size() - 1, 0.0);
        for (std::size_t i = 0; i < a->size(); ++i)
            for (std::size_t j = 0; j < b->size(); ++j)
                c[i + j] += (*a)[i] * (*b)[j];
        return trim(c);
    }
    case Expr::Kind::Div: {
        auto a = poly_in_d(e.args[0]);
        auto b = poly_in_d(e.args[1]);
        if (!a || !b || b->size() != 1 || (*b)[0] == 0.0)
            return std::nullopt;
        for (double& v : *a)
            v /= (*b)[0];
        return trim(*a);
    }
    case Expr::Kind::Neg: {
        auto a = poly_in_d(e.args[0]);
        if (!a)
            return std::nullopt;
        for (double& v : *a)
            v = -v;
        return a;
    }
    case Expr::Kind::Pow: {
        auto a = poly_in_d(e.args[0]);
        if (!a)
            return std::nullopt;
        const double pexp = e.args[1].number;
        if (a->size() == 1)
            return Poly{std::pow((*a)[0], pexp)};
        if (pexp < 0.0 || pexp != std::floor(pexp))
            return std::nullopt;
        Poly acc{1.0};
        for (int i = 0; i < static_cast<int>(pexp); ++i) {
            Poly c(acc.size() + a->size() - 1, 0.0);
            for (std::size_t j = 0; j < acc.size(); ++j)
                for (std::size_t k = 0; k < a->size(); ++k)
                    c[j + k] += acc[j] * (*a)[k];
            acc = std::move(c);
        }
        return trim(acc);
    }
    case Expr::Kind::Inv: {
        auto a = poly_in_d(e.args[0]);
        if (!a || a->size() != 1 || (*a)[0] == 0.0)
            return std::nullopt;
        return Poly{1.0 / (*a)[0]};
    }
    case Expr::Kind::Call: {
        auto a = poly_in_d(e.args[0]);
        if (!a || a->size() != 1)
            return std::nullopt;
        Expr c;
        c.kind = Expr::Kind::Number;
        c.number = (*a)[0];
        Expr call;
        call.kind = Expr::Kind::Call;
        call.func = e.func;
        call.args.push_back(c);
        return Poly{eval_scalar(call, 0.0)};
    }
    }
    return std::nullopt;
}

} // namespace

std::optional<std::vector<double>> constant_coefficients(const Expr& e) {
    return poly_in_d(e);
}

} // namespace trigcolloc
