#pragma once

#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace trigcolloc {

/// Parse failure with the byte offset of the offending token.
class ParseError : public std::runtime_error {
public:
    ParseError(const std::string& what, std::size_t offset)
        : std::runtime_error(what + " at offset " + std::to_string(offset)), offset_(offset) {}
    std::size_t offset() const { return offset_; }

private:
    std::size_t offset_;
};

class EvalError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Expression tree shared by scalar functions of x and linear differential
/// operators; operator trees additionally contain the symbol d.
struct Expr {
    enum class Kind { Number, VarX, Diff, Add, Sub, Mul, Div, Pow, Neg, Call, Inv };

    Kind kind = Kind::Number;
    double number = 0.0;     // Kind::Number
    std::string func;        // Kind::Call: sin, cos, exp, sqrt
    std::vector<Expr> args;  // children

    bool contains_diff() const;
};

/// Scalar grammar: literals, x, pi, + - * / ^ (literal exponent), unary -,
/// sin cos exp sqrt, parentheses.
Expr parse_scalar(const std::string& text);

/// Same grammar plus the symbols d and inv(f); validates that d never
/// appears inside inv or a division, and that powers of operator
/// subexpressions are nonnegative integers.
Expr parse_operator(const std::string& text);

/// IEEE double evaluation; throws EvalError on division by zero or a
/// function-domain violation. The expression must be d-free.
double eval_scalar(const Expr& e, double x);

std::string to_string(const Expr& e);

bool structurally_equal(const Expr& a, const Expr& b);

/// If the operator is a constant-coefficient polynomial in d, its
/// coefficient list alpha_0..alpha_s; otherwise absent.
std::optional<std::vector<double>> constant_coefficients(const Expr& e);

} // namespace trigcolloc
