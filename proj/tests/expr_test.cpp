#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <numbers>
#include <string>
#include <vector>

#include "trigcolloc/expr.hpp"

using namespace trigcolloc;

namespace {

constexpr double pi = std::numbers::pi;

// Evaluation oracle: values precomputed with an independent interpreter.
const double kx[20] = {-2.0, -1.63, -1.26, -0.8900000000000001, -0.52, -0.1499999999999999,
                       0.21999999999999975, 0.5899999999999999, 0.96, 1.33, 1.7000000000000002,
                       2.0700000000000003, 2.4399999999999995, 2.8099999999999996,
                       3.1799999999999997, 3.55, 3.92, 4.29, 4.66, 5.03};

struct EvalFixture {
    const char* text;
    double values[20];
};

const EvalFixture kEvalFixtures[] = {
    {"cos(x) + sin(x)",
     {-1.325444263372824, -1.0574170680917807, -0.6462734332122264, -0.14765972095312718,
      0.37093904183391313, 0.8393329454624432, 1.1941270724114745, 1.3873017020129472,
      1.392711554373455, 1.2096244313547677, 0.8628203161569437, 0.39923751884035774,
      -0.11838020374340263, -0.6199757210971353, -1.0376604330379557, -1.3149026732522358,
      -1.4141790051291157, -1.322052842875386, -1.050993030368725, -0.637686241632845}},
    {"exp(-x/2)*((sqrt(2)*exp(pi/(4*sqrt(3))) - 1)*sin(sqrt(3)*x/2) + cos(sqrt(3)*x/2))",
     {-3.72472448212606, -2.3757401156025453, -1.1751786565392661, -0.2129596183996591,
      0.4757705999329545, 0.8976754439535662, 1.0875440067533435, 1.0956569806785221,
      0.9773072946149318, 0.7849946152875416, 0.563349827987105, 0.346519410205378,
      0.15754484814964337, 0.009190305563094973, -0.09432298549282263, -0.15515224453942475,
      -0.17961645655498462, -0.17619440294276456, -0.15389749123456878, -0.1210855557772055}},
    {"x*(x - pi/(2*sqrt(3)))",
     {5.813799364234217, 4.135146481850887, 2.7302935994675575, 1.5992407170842273,
      0.7419878347008967, 0.15853495231756623, -0.15111793006576385, -0.1869708124490943,
      0.050976305167575404, 0.5627234227842453, 1.3482705404009152, 2.4076176580175854,
      3.7407647756342524, 5.347711893250922, 7.228459010867593, 9.383006128484263,
      11.811353246100934, 14.513500363717604, 17.489447481334274, 20.739194598950945}},
    {"sqrt(x^2 + 1)*exp(-x) - cos(2*x)/(1 + x^2)",
     {16.65316045094107, 10.031692180297618, 5.985171843472517, 3.3757789240307714,
      1.4973742573918702, 0.240517756517867, -0.0412729930554967, 0.36105248899342757,
      0.7088275276715745, 0.7601664472691685, 0.6088424690992188, 0.3925759227651506,
      0.20584886778400724, 0.09098729628673491, 0.048902689903979946, 0.05561591002594219,
      0.07941369633717116, 0.09458459438384222, 0.088899179630307, 0.06413893481198946}},
};

const char* kOperatorFixtures[] = {
    "d^2 + 1",
    "(2 - pi/(2*sqrt(3)))*(x + 1) + x^2 + (-2*pi/(2*sqrt(3)) + 4*x - pi/(2*sqrt(3))*x + x^2)*d "
    "+ (x^2 - pi/(2*sqrt(3))*x)*d^2",
    "(1/(2*pi))^4*d^4 + 13*(1/(2*pi))^2*d^2 + 36",
    "-((x^2 - x)*d^2 + (4*x - 2)*d + 2)",
    "x*(x - 1)",
    "-(1 - x^2)/4*d^2 + (x + (1 - x^2)*(0.6 - x)/2)*d + 1/2 + x*(x - 0.6) - (1 - x^2)/2",
    "-(1 - x^2)/4*d^2 + (x + (1 - x^2)*(0.4 - x))*d + 1/2 + 2*x*(x - 0.4) - (1 - x^2)",
    "inv(pi^2*(1 + sin(pi*x)))*(-(d^2) + 2*inv(x*(1 - x))*((2*x - 1)*d + 1))",
};

} // namespace

TEST_CASE("eval_scalar agrees with precomputed tables") {
    for (const EvalFixture& f : kEvalFixtures) {
        const Expr e = parse_scalar(f.text);
        for (int k = 0; k < 20; ++k) {
            const double got = eval_scalar(e, kx[k]);
            CHECK(std::abs(got - f.values[k]) <= 1e-14 * std::max(1.0, std::abs(f.values[k])));
        }
    }
}

TEST_CASE("parse-print round trip is structurally stable") {
    for (const char* text : kOperatorFixtures) {
        const Expr once = parse_operator(text);
        const Expr twice = parse_operator(to_string(once));
        CHECK(structurally_equal(once, twice));
    }
    for (const EvalFixture& f : kEvalFixtures) {
        const Expr once = parse_scalar(f.text);
        CHECK(structurally_equal(once, parse_scalar(to_string(once))));
    }
}

TEST_CASE("precedence and associativity") {
    CHECK(eval_scalar(parse_scalar("2 + 3*4"), 0.0) == 14.0);
    CHECK(eval_scalar(parse_scalar("2 - 3 - 4"), 0.0) == -5.0);
    CHECK(eval_scalar(parse_scalar("12/3/2"), 0.0) == 2.0);
    CHECK(eval_scalar(parse_scalar("-2^2"), 0.0) == -4.0); // unary minus after power
    CHECK(eval_scalar(parse_scalar("2*x^3"), 2.0) == 16.0);
    CHECK(eval_scalar(parse_scalar("(1 + x)^2"), 2.0) == 9.0);
    CHECK(eval_scalar(parse_scalar("x^-1"), 4.0) == 0.25);
    CHECK(eval_scalar(parse_scalar("pi"), 0.0) == doctest::Approx(pi).epsilon(1e-16));
}

TEST_CASE("parse errors carry an offset") {
    CHECK_THROWS_AS((void)parse_scalar("2*+x"), ParseError);
    try {
        (void)parse_scalar("2*+x");
    } catch (const ParseError& e) {
        CHECK(e.offset() == 2);
        CHECK(std::string(e.what()).find("offset 2") != std::string::npos);
    }
    CHECK_THROWS_AS((void)parse_scalar(""), ParseError);
    CHECK_THROWS_AS((void)parse_scalar("sin()"), ParseError);
    CHECK_THROWS_AS((void)parse_scalar("(1 + 2"), ParseError);
    CHECK_THROWS_AS((void)parse_scalar("1 + 2)"), ParseError);
    CHECK_THROWS_AS((void)parse_scalar("bogus(1)"), ParseError);
    CHECK_THROWS_AS((void)parse_scalar("x^x"), ParseError); // exponent must be a literal
}

TEST_CASE("scalar grammar rejects operator symbols") {
    CHECK_THROWS_AS((void)parse_scalar("d^2 + 1"), ParseError);
    CHECK_THROWS_AS((void)parse_scalar("inv(x)"), ParseError);
}

TEST_CASE("operator validation") {
    CHECK_NOTHROW((void)parse_operator("d^2 + d + 1"));
    CHECK_NOTHROW((void)parse_operator("x*d + sin(x)"));
    CHECK_NOTHROW((void)parse_operator("inv(1 + x^2)*d"));
    // d inside inv, d in a denominator, fractional operator powers: rejected.
    CHECK_THROWS((void)parse_operator("inv(d)"));
    CHECK_THROWS((void)parse_operator("1/d"));
    CHECK_THROWS((void)parse_operator("x/(d + 1)"));
    CHECK_THROWS((void)parse_operator("d^0.5"));
    CHECK_THROWS((void)parse_operator("d^-1"));
    // Dividing an operator by a constant is allowed; by a function of x is not.
    CHECK_NOTHROW((void)parse_operator("d^2/4"));
    CHECK_THROWS((void)parse_operator("d/x"));
}

TEST_CASE("eval_scalar refuses operator expressions and bad domains") {
    CHECK_THROWS_AS((void)eval_scalar(parse_operator("d + 1"), 0.0), EvalError);
    CHECK_THROWS_AS((void)eval_scalar(parse_scalar("1/x"), 0.0), EvalError);
    CHECK_THROWS_AS((void)eval_scalar(parse_scalar("sqrt(x)"), -1.0), EvalError);
}

TEST_CASE("contains_diff flags the operator symbol") {
    CHECK(parse_operator("x*d^2").contains_diff());
    CHECK_FALSE(parse_operator("x^2 + sin(x)").contains_diff());
}

TEST_CASE("constant_coefficients extracts polynomials in d") {
    const auto c1 = constant_coefficients(parse_operator("d^2 + d + 1"));
    REQUIRE(c1.has_value());
    CHECK(*c1 == std::vector<double>{1.0, 1.0, 1.0});

    const auto c2 = constant_coefficients(parse_operator("(1/(2*pi))^4*d^4 + 13*(1/(2*pi))^2*d^2 + 36"));
    REQUIRE(c2.has_value());
    REQUIRE(c2->size() == 5);
    CHECK((*c2)[0] == doctest::Approx(36.0));
    CHECK((*c2)[1] == 0.0);
    CHECK((*c2)[2] == doctest::Approx(13.0 / (4.0 * pi * pi)).epsilon(1e-15));
    CHECK((*c2)[3] == 0.0);
    CHECK((*c2)[4] == doctest::Approx(1.0 / (16.0 * pi * pi * pi * pi)).epsilon(1e-15));

    // Products expand by convolution.
    const auto c3 = constant_coefficients(parse_operator("2*(d + 1)^2"));
    REQUIRE(c3.has_value());
    CHECK(*c3 == std::vector<double>{2.0, 4.0, 2.0});

    // Variable coefficients have no constant-coefficient form.
    CHECK_FALSE(constant_coefficients(parse_operator("x*d")).has_value());
    CHECK_FALSE(constant_coefficients(parse_operator("sin(x) + d")).has_value());
}
