#include "trigcolloc/example_configs.hpp"

#include <stdexcept>
#include <string>

namespace trigcolloc {

namespace {

// Kept byte-identical to the files under data/ (verified by a test).
constexpr std::string_view k_example1 = R"cfg(# u'' + u = 0 on [0, pi/2], u(0) = u(pi/2) = 1.
# Uniform nodes on [0, 2pi) with one node pinned to pi/2 so both
# boundary rows hit grid points exactly.
mode = bvp

[grid]
period = 2*pi
points = 5
placement = uniform
anchor = pi/2

[operator]
expr = d^2 + 1
variant = plain

[rhs]
expr = 0

[condition]
kind = value
location = 0
rhs = 1

[condition]
kind = value
location = pi/2
rhs = 1

[exact]
expr = cos(x) + sin(x)
)cfg";

constexpr std::string_view k_example2 = R"cfg(# u'' + u' + u = 0 on [0, pi/(2*sqrt(3))], u = 1 at both ends.
# Solved for v after the substitution u = x*(x - pi/(2*sqrt(3)))*v + 1,
# which absorbs the boundary conditions; the period is doubled so no
# implicit v(0) = v(end) constraint sneaks in.
mode = bvp

[grid]
period = pi/sqrt(3)
points = 21
placement = endpoints
interval = 0 pi/(2*sqrt(3))

[operator]
expr = (2 - pi/(2*sqrt(3)))*(x + 1) + x^2 + (-2*pi/(2*sqrt(3)) + 4*x - pi/(2*sqrt(3))*x + x^2)*d + (x^2 - pi/(2*sqrt(3))*x)*d^2
variant = preconditioned

[rhs]
expr = -1

[post_map]
g = x*(x - pi/(2*sqrt(3)))
h = 1
psi_weighted = true

[exact]
expr = exp(-x/2)*((sqrt(2)*exp(pi/(4*sqrt(3))) - 1)*sin(sqrt(3)*x/2) + cos(sqrt(3)*x/2))
)cfg";

constexpr std::string_view k_example3 = R"cfg(# Fourth-order problem (1/2pi)^4 u'''' + 13 (1/2pi)^2 u'' + 36 u = 0
# with u(0) = u(1) = 1 and u'(0) = u'(1) = 0. The operator matrix has a
# four-dimensional kernel, so the four boundary rows pin the solution.
# x = 1 coincides with x = 0 modulo the period; both rows are kept.
mode = bvp

[grid]
period = 1
points = 11
placement = uniform

[operator]
expr = (1/(2*pi))^4*d^4 + 13*(1/(2*pi))^2*d^2 + 36
variant = plain

[rhs]
expr = 0

[condition]
kind = value
location = 0
rhs = 1

[condition]
kind = value
location = 1
rhs = 1

[condition]
kind = derivative
location = 0
rhs = 0

[condition]
kind = derivative
location = 1
rhs = 0

[exact]
expr = cos(4*pi*x)/2 + cos(6*pi*x)/2
)cfg";

constexpr std::string_view k_example4 = R"cfg(# -y'' = lambda*y on [0,1], y(0) = y(1) = 0; exact eigenvalues (pi*j)^2.
# Substitution y = x*(x-1)*v gives the generalized pencil below. Nodes
# stay strictly inside (0,1) so the diagonal of B = X(X-I) is invertible.
mode = eig

[grid]
period = 1
points = 19
placement = interior
interval = 0 1

[operator]
expr = -((x^2 - x)*d^2 + (4*x - 2)*d + 2)
variant = preconditioned

[B]
expr = x*(x - 1)

[reference]
type = exact
expr = (pi*x)^2
indices = 1, 5, 11, 15
)cfg";

constexpr std::string_view k_example5a = R"cfg(# Genetics eigenvalue problem with alpha = 1, x0 = 0.6:
#   (1/4)(1-x^2)(-u'' + 2*alpha*((x0-x)u)') = lambda*u, u(-1) = u(1) = 0.
# Substitution u = (1-x^2)*v; bounds are published reference values.
mode = eig

[grid]
period = 4
points = 41
placement = interior
interval = -1 1

[operator]
expr = -(1 - x^2)/4*d^2 + (x + (1 - x^2)*(0.6 - x)/2)*d + 1/2 + x*(x - 0.6) - (1 - x^2)/2
variant = preconditioned

[reference]
type = bounds
row = 1 0.3931 0.3939
row = 4 4.85 4.96
row = 8 16.7 17.96
row = 10 24.6 27.46
)cfg";

constexpr std::string_view k_example5b = R"cfg(# Same genetics problem as example5a with alpha = 2, x0 = 0.4.
mode = eig

[grid]
period = 4
points = 41
placement = interior
interval = -1 1

[operator]
expr = -(1 - x^2)/4*d^2 + (x + (1 - x^2)*(0.4 - x))*d + 1/2 + 2*x*(x - 0.4) - (1 - x^2)
variant = preconditioned

[reference]
type = bounds
row = 1 0.2982 0.2992
row = 4 4.73 4.97
row = 8 15.3 17.96
row = 10 21.7 27.46
)cfg";

constexpr std::string_view k_example6 = R"cfg(# u'' + lambda*(1 + sin x)*u = 0 on [0, pi], u(0) = u(pi) = 0.
# Rescaled to y = x/pi and substituted u = y*(1-y)*v(y); the period is
# doubled to 2 so v needs no periodicity across y = 1, and nodes stay in
# (0,1) clear of the inv(x*(1-x)) singularities.
mode = eig

[grid]
period = 2
points = 43
placement = interior
interval = 0 1

[operator]
expr = inv(pi^2*(1 + sin(pi*x)))*(-(d^2) + 2*inv(x*(1 - x))*((2*x - 1)*d + 1))
variant = preconditioned

[reference]
type = bounds
row = 1 0.540282 0.540319
row = 3 5.411 5.449
row = 5 14.54 15.313
row = 6 21.39 22.1
)cfg";

} // namespace

std::string_view example_config(std::string_view name) {
    if (name == "example1") return k_example1;
    if (name == "example2") return k_example2;
    if (name == "example3") return k_example3;
    if (name == "example4") return k_example4;
    if (name == "example5a") return k_example5a;
    if (name == "example5b") return k_example5b;
    if (name == "example6") return k_example6;
    throw std::out_of_range("unknown example config '" + std::string(name) + "'");
}

std::vector<std::string_view> example_config_names() {
    return {"example1", "example2", "example3", "example4", "example5a", "example5b", "example6"};
}

} // namespace trigcolloc
