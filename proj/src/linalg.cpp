#include "trigcolloc/linalg.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <stdexcept>

namespace trigcolloc {

namespace {

constexpr double kEps = std::numeric_limits<double>::epsilon();

struct LuFactors {
    DenseMatrix lu;
    std::vector<std::size_t> perm;
};

LuFactors lu_factor(const DenseMatrix& a) {
    if (a.rows() != a.cols())
        throw std::invalid_argument("lu_solve: matrix must be square");
    const std::size_t n = a.rows();
    LuFactors f{a, std::vector<std::size_t>(n)};
    std::iota(f.perm.begin(), f.perm.end(), std::size_t{0});
    const double pivot_floor = 1e-13 * a.infinity_norm();
    DenseMatrix& m = f.lu;
    for (std::size_t k = 0; k < n; ++k) {
        std::size_t p = k;
        for (std::size_t i = k + 1; i < n; ++i)
            if (std::abs(m(i, k)) > std::abs(m(p, k)))
                p = i;
        if (std::abs(m(p, k)) <= pivot_floor)
            throw std::runtime_error("lu_solve: matrix is numerically singular");
        if (p != k) {
            for (std::size_t j = 0; j < n; ++j)
                std::swap(m(k, j), m(p, j));
            std::swap(f.perm[k], f.perm[p]);
        }
        for (std::size_t i = k + 1; i < n; ++i) {
            const double l = m(i, k) / m(k, k);
            m(i, k) = l;
            for (std::size_t j = k + 1; j < n; ++j)
                m(i, j) -= l * m(k, j);
        }
    }
    return f;
}

std::vector<double> lu_apply(const LuFactors& f, const std::vector<double>& b) {
    const std::size_t n = f.lu.rows();
    std::vector<double> x(n);
    for (std::size_t i = 0; i < n; ++i)
        x[i] = b[f.perm[i]];
    for (std::size_t i = 1; i < n; ++i)
        for (std::size_t j = 0; j < i; ++j)
            x[i] -= f.lu(i, j) * x[j];
    for (std::size_t i = n; i-- > 0;) {
        for (std::size_t j = i + 1; j < n; ++j)
            x[i] -= f.lu(i, j) * x[j];
        x[i] /= f.lu(i, i);
    }
    return x;
}

} // namespace

std::vector<double> lu_solve(const DenseMatrix& a, const std::vector<double>& b) {
    if (b.size() != a.rows())
        throw std::invalid_argument("lu_solve: rhs length does not match matrix order");
    return lu_apply(lu_factor(a), b);
}

LeastSquaresResult least_squares(const DenseMatrix& a, const std::vector<double>& b) {
    const std::size_t m = a.rows();
    const std::size_t n = a.cols();
    if (m < n)
        throw std::invalid_argument("least_squares: requires rows >= cols");
    if (b.size() != m)
        throw std::invalid_argument("least_squares: rhs length does not match row count");

    DenseMatrix r = a;
    std::vector<double> qtb = b;
    std::vector<std::size_t> perm(n);
    std::iota(perm.begin(), perm.end(), std::size_t{0});

    auto col_norm = [&](std::size_t col, std::size_t from) {
        double s = 0.0;
        for (std::size_t i = from; i < m; ++i)
            s += r(i, col) * r(i, col);
        return std::sqrt(s);
    };

    for (std::size_t k = 0; k < n; ++k) {
        // column pivot: largest remaining norm
        std::size_t p = k;
        double best = col_norm(k, k);
        for (std::size_t j = k + 1; j < n; ++j) {
            const double cn = col_norm(j, k);
            if (cn > best) {
                best = cn;
                p = j;
            }
        }
        if (p != k) {
            for (std::size_t i = 0; i < m; ++i)
                std::swap(r(i, k), r(i, p));
            std::swap(perm[k], perm[p]);
        }
        if (best == 0.0)
            continue;
        // Householder reflector zeroing r(k+1.., k)
        double alpha = (r(k, k) >= 0.0) ? -best : best;
        std::vector<double> v(m - k);
        v[0] = r(k, k) - alpha;
        for (std::size_t i = k + 1; i < m; ++i)
            v[i - k] = r(i, k);
        double vtv = 0.0;
        for (double t : v)
            vtv += t * t;
        r(k, k) = alpha;
        for (std::size_t i = k + 1; i < m; ++i)
            r(i, k) = 0.0;
        if (vtv == 0.0)
            continue;
        for (std::size_t j = k + 1; j < n; ++j) {
            double dot = 0.0;
            for (std::size_t i = k; i < m; ++i)
                dot += v[i - k] * r(i, j);
            const double f = 2.0 * dot / vtv;
            for (std::size_t i = k; i < m; ++i)
                r(i, j) -= f * v[i - k];
        }
        double dot = 0.0;
        for (std::size_t i = k; i < m; ++i)
            dot += v[i - k] * qtb[i];
        const double f = 2.0 * dot / vtv;
        for (std::size_t i = k; i < m; ++i)
            qtb[i] -= f * v[i - k];
    }

    const double tol = static_cast<double>(std::max(m, n)) * kEps * std::abs(r(0, 0));
    std::size_t rank = 0;
    while (rank < n && std::abs(r(rank, rank)) > tol)
        ++rank;

    LeastSquaresResult out;
    out.rank = rank;
    out.rank_deficient = rank < n;
    double res2 = 0.0;
    for (std::size_t i = rank; i < m; ++i)
        res2 += qtb[i] * qtb[i];
    out.residual_norm = std::sqrt(res2);
    out.x.assign(n, 0.0);
    if (rank == 0)
        return out;

    std::vector<double> z(n, 0.0);
    if (!out.rank_deficient) {
        for (std::size_t i = n; i-- > 0;) {
            double s = qtb[i];
            for (std::size_t j = i + 1; j < n; ++j)
                s -= r(i, j) * z[j];
            z[i] = s / r(i, i);
        }
    } else {
        // Minimum-norm solution of the trapezoidal system J z = c1 with
        // J = r(0..rank-1, 0..n-1): z = J^T (J J^T)^{-1} c1.
        DenseMatrix g(rank, rank);
        for (std::size_t i = 0; i < rank; ++i)
            for (std::size_t j = i; j < rank; ++j) {
                double s = 0.0;
                for (std::size_t c = std::max(i, j); c < n; ++c)
                    s += r(i, c) * r(j, c);
                g(i, j) = g(j, i) = s;
            }
        // Cholesky solve of g y = c1
        for (std::size_t i = 0; i < rank; ++i) {
            for (std::size_t j = i; j < rank; ++j) {
                double s = g(i, j);
                for (std::size_t c = 0; c < i; ++c)
                    s -= g(i, c) * g(j, c);
                if (i == j) {
                    if (s <= 0.0)
                        throw std::runtime_error("least_squares: Gram matrix not positive definite");
                    g(i, i) = std::sqrt(s);
                } else {
                    g(j, i) = s / g(i, i);
                }
            }
        }
        std::vector<double> y(rank);
        for (std::size_t i = 0; i < rank; ++i) {
            double s = qtb[i];
            for (std::size_t c = 0; c < i; ++c)
                s -= g(i, c) * y[c];
            y[i] = s / g(i, i);
        }
        for (std::size_t i = rank; i-- > 0;) {
            double s = y[i];
            for (std::size_t c = i + 1; c < rank; ++c)
                s -= g(c, i) * y[c];
            y[i] = s / g(i, i);
        }
        for (std::size_t j = 0; j < n; ++j) {
            double s = 0.0;
            for (std::size_t i = 0; i < std::min(j + 1, rank); ++i)
                s += r(i, j) * y[i];
            z[j] = s;
        }
    }
    for (std::size_t j = 0; j < n; ++j)
        out.x[perm[j]] = z[j];
    return out;
}

SvdResult svd(const DenseMatrix& a) {
    if (a.rows() < a.cols())
        throw std::invalid_argument("svd: requires rows >= cols");
    const std::size_t m = a.rows();
    const std::size_t n = a.cols();
    DenseMatrix u = a;
    DenseMatrix v = DenseMatrix::identity(n);

    // one-sided Jacobi: orthogonalize column pairs
    for (int sweep = 0; sweep < 60; ++sweep) {
        bool rotated = false;
        for (std::size_t i = 0; i + 1 < n; ++i)
            for (std::size_t j = i + 1; j < n; ++j) {
                double aii = 0.0, ajj = 0.0, aij = 0.0;
                for (std::size_t k = 0; k < m; ++k) {
                    aii += u(k, i) * u(k, i);
                    ajj += u(k, j) * u(k, j);
                    aij += u(k, i) * u(k, j);
                }
                if (aii == 0.0 || ajj == 0.0)
                    continue;
                if (std::abs(aij) <= 1e-15 * std::sqrt(aii * ajj))
                    continue;
                rotated = true;
                const double zeta = (ajj - aii) / (2.0 * aij);
                const double t =
                    ((zeta >= 0.0) ? 1.0 : -1.0) / (std::abs(zeta) + std::sqrt(1.0 + zeta * zeta));
                const double cs = 1.0 / std::sqrt(1.0 + t * t);
                const double sn = cs * t;
                for (std::size_t k = 0; k < m; ++k) {
                    const double ui = u(k, i), uj = u(k, j);
                    u(k, i) = cs * ui - sn * uj;
                    u(k, j) = sn * ui + cs * uj;
                }
                for (std::size_t k = 0; k < n; ++k) {
                    const double vi = v(k, i), vj = v(k, j);
                    v(k, i) = cs * vi - sn * vj;
                    v(k, j) = sn * vi + cs * vj;
                }
            }
        if (!rotated)
            break;
    }

    std::vector<double> sigma(n);
    for (std::size_t j = 0; j < n; ++j) {
        double s = 0.0;
        for (std::size_t k = 0; k < m; ++k)
            s += u(k, j) * u(k, j);
        sigma[j] = std::sqrt(s);
    }
    std::vector<std::size_t> order(n);
    std::iota(order.begin(), order.end(), std::size_t{0});
    std::stable_sort(order.begin(), order.end(),
                     [&](std::size_t x, std::size_t y) { return sigma[x] > sigma[y]; });

    SvdResult out;
    out.singular_values.resize(n);
    out.v = DenseMatrix(n, n);
    for (std::size_t j = 0; j < n; ++j) {
        out.singular_values[j] = sigma[order[j]];
        for (std::size_t k = 0; k < n; ++k)
            out.v(k, j) = v(k, order[j]);
    }
    return out;
}

std::vector<double> singular_values(const DenseMatrix& a) {
    if (a.rows() >= a.cols())
        return svd(a).singular_values;
    return svd(a.transposed()).singular_values;
}

std::size_t numerical_rank(const DenseMatrix& a, std::optional<double> tol) {
    const auto sv = singular_values(a);
    if (sv.empty())
        return 0;
    const double t =
        tol ? *tol : static_cast<double>(std::max(a.rows(), a.cols())) * kEps * sv.front();
    std::size_t r = 0;
    for (double s : sv)
        if (s > t)
            ++r;
    return r;
}

std::vector<std::vector<double>> kernel_vectors(const DenseMatrix& a, std::optional<double> tol) {
    const SvdResult sv = svd(a.rows() >= a.cols() ? a : a.transposed());
    const double t = tol ? *tol
                         : static_cast<double>(std::max(a.rows(), a.cols())) * kEps *
                               (sv.singular_values.empty() ? 0.0 : sv.singular_values.front());
    std::vector<std::vector<double>> out;
    const std::size_t n = sv.singular_values.size();
    for (std::size_t j = 0; j < n; ++j) {
        if (sv.singular_values[j] <= t) {
            std::vector<double> col(n);
            for (std::size_t k = 0; k < n; ++k)
                col[k] = sv.v(k, j);
            out.push_back(std::move(col));
        }
    }
    if (out.empty())
        throw std::runtime_error("kernel_vectors: matrix has full numerical rank");
    return out;
}

namespace {

void balance(DenseMatrix& a) {
    const std::size_t n = a.rows();
    bool done = false;
    while (!done) {
        done = true;
        for (std::size_t i = 0; i < n; ++i) {
            double rnorm = 0.0, cnorm = 0.0;
            for (std::size_t j = 0; j < n; ++j)
                if (j != i) {
                    cnorm += std::abs(a(j, i));
                    rnorm += std::abs(a(i, j));
                }
            if (cnorm == 0.0 || rnorm == 0.0)
                continue;
            double g = rnorm / 2.0;
            double f = 1.0;
            const double s = cnorm + rnorm;
            while (cnorm < g) {
                f *= 2.0;
                cnorm *= 4.0;
            }
            g = rnorm * 2.0;
            while (cnorm > g) {
                f /= 2.0;
                cnorm /= 4.0;
            }
            if ((cnorm + rnorm) / f < 0.95 * s) {
                done = false;
                const double ginv = 1.0 / f;
                for (std::size_t j = 0; j < n; ++j)
                    a(i, j) *= ginv;
                for (std::size_t j = 0; j < n; ++j)
                    a(j, i) *= f;
            }
        }
    }
}

void to_hessenberg(DenseMatrix& a) {
    const std::size_t n = a.rows();
    if (n < 3)
        return;
    for (std::size_t k = 0; k + 2 < n; ++k) {
        double norm = 0.0;
        for (std::size_t i = k + 1; i < n; ++i)
            norm += a(i, k) * a(i, k);
        norm = std::sqrt(norm);
        if (norm == 0.0)
            continue;
        const double alpha = (a(k + 1, k) >= 0.0) ? -norm : norm;
        std::vector<double> v(n - k - 1);
        v[0] = a(k + 1, k) - alpha;
        for (std::size_t i = k + 2; i < n; ++i)
            v[i - k - 1] = a(i, k);
        double vtv = 0.0;
        for (double t : v)
            vtv += t * t;
        if (vtv == 0.0)
            continue;
        // A <- H A with H = I - 2 v v^T / (v^T v)
        for (std::size_t j = k; j < n; ++j) {
            double dot = 0.0;
            for (std::size_t i = k + 1; i < n; ++i)
                dot += v[i - k - 1] * a(i, j);
            const double f = 2.0 * dot / vtv;
            for (std::size_t i = k + 1; i < n; ++i)
                a(i, j) -= f * v[i - k - 1];
        }
        // A <- A H
        for (std::size_t i = 0; i < n; ++i) {
            double dot = 0.0;
            for (std::size_t j = k + 1; j < n; ++j)
                dot += a(i, j) * v[j - k - 1];
            const double f = 2.0 * dot / vtv;
            for (std::size_t j = k + 1; j < n; ++j)
                a(i, j) -= f * v[j - k - 1];
        }
        for (std::size_t i = k + 2; i < n; ++i)
            a(i, k) = 0.0;
    }
}

// Francis implicit double-shift QR on an upper Hessenberg matrix.
Spectrum hqr(DenseMatrix& h) {
    const int n = static_cast<int>(h.rows());
    Spectrum wri(static_cast<std::size_t>(n));
    auto H = [&](int i, int j) -> double& {
        return h(static_cast<std::size_t>(i), static_cast<std::size_t>(j));
    };
    double anorm = 0.0;
    for (int i = 0; i < n; ++i)
        for (int j = std::max(i - 1, 0); j < n; ++j)
            anorm += std::abs(H(i, j));
    int nn = n - 1;
    double t = 0.0;
    while (nn >= 0) {
        int its = 0;
        int l;
        do {
            for (l = nn; l >= 1; --l) {
                double s = std::abs(H(l - 1, l - 1)) + std::abs(H(l, l));
                if (s == 0.0)
                    s = anorm;
                if (std::abs(H(l, l - 1)) <= 1e-13 * s) {
                    H(l, l - 1) = 0.0;
                    break;
                }
            }
            if (l < 0)
                l = 0;
            double x = H(nn, nn);
            if (l == nn) {
                wri[static_cast<std::size_t>(nn)] = x + t;
                --nn;
            } else {
                double y = H(nn - 1, nn - 1);
                double w = H(nn, nn - 1) * H(nn - 1, nn);
                if (l == nn - 1) {
                    double p = 0.5 * (y - x);
                    double q = p * p + w;
                    double z = std::sqrt(std::abs(q));
                    x += t;
                    if (q >= 0.0) {
                        z = p + ((p >= 0.0) ? z : -z);
                        wri[static_cast<std::size_t>(nn - 1)] = x + z;
                        wri[static_cast<std::size_t>(nn)] =
                            (z != 0.0) ? (x - w / z) : (x + z);
                    } else {
                        wri[static_cast<std::size_t>(nn - 1)] = {x + p, z};
                        wri[static_cast<std::size_t>(nn)] = {x + p, -z};
                    }
                    nn -= 2;
                } else {
                    if (its == 100)
                        throw std::runtime_error("eigenvalues: QR iteration did not converge");
                    if (its != 0 && its % 10 == 0) {
                        t += x;
                        for (int i = 0; i <= nn; ++i)
                            H(i, i) -= x;
                        const double s = std::abs(H(nn, nn - 1)) + std::abs(H(nn - 1, nn - 2));
                        y = x = 0.75 * s;
                        w = -0.4375 * s * s;
                    }
                    ++its;
                    int m;
                    double p = 0.0, q = 0.0, r = 0.0;
                    for (m = nn - 2; m >= l; --m) {
                        const double z = H(m, m);
                        const double rr = x - z;
                        double s = y - z;
                        p = (rr * s - w) / H(m + 1, m) + H(m, m + 1);
                        q = H(m + 1, m + 1) - z - rr - s;
                        r = H(m + 2, m + 1);
                        s = std::abs(p) + std::abs(q) + std::abs(r);
                        p /= s;
                        q /= s;
                        r /= s;
                        if (m == l)
                            break;
                        const double u = std::abs(H(m, m - 1)) * (std::abs(q) + std::abs(r));
                        const double v = std::abs(p) * (std::abs(H(m - 1, m - 1)) + std::abs(z) +
                                                        std::abs(H(m + 1, m + 1)));
                        if (u <= kEps * v)
                            break;
                    }
                    for (int i = m + 2; i <= nn; ++i) {
                        H(i, i - 2) = 0.0;
                        if (i != m + 2)
                            H(i, i - 3) = 0.0;
                    }
                    for (int k = m; k <= nn - 1; ++k) {
                        if (k != m) {
                            p = H(k, k - 1);
                            q = H(k + 1, k - 1);
                            r = (k + 1 != nn) ? H(k + 2, k - 1) : 0.0;
                            x = std::abs(p) + std::abs(q) + std::abs(r);
                            if (x != 0.0) {
                                p /= x;
                                q /= x;
                                r /= x;
                            }
                        }
                        double s = std::sqrt(p * p + q * q + r * r);
                        if (p < 0.0)
                            s = -s;
                        if (s != 0.0) {
                            if (k == m) {
                                if (l != m)
                                    H(k, k - 1) = -H(k, k - 1);
                            } else {
                                H(k, k - 1) = -s * x;
                            }
                            p += s;
                            x = p / s;
                            double yy = q / s;
                            double z = r / s;
                            q /= p;
                            r /= p;
                            for (int j = k; j <= nn; ++j) {
                                double pp = H(k, j) + q * H(k + 1, j);
                                if (k + 1 != nn) {
                                    pp += r * H(k + 2, j);
                                    H(k + 2, j) -= pp * z;
                                }
                                H(k + 1, j) -= pp * yy;
                                H(k, j) -= pp * x;
                            }
                            const int mmin = (nn < k + 3) ? nn : k + 3;
                            for (int i = l; i <= mmin; ++i) {
                                double pp = x * H(i, k) + yy * H(i, k + 1);
                                if (k + 1 != nn) {
                                    pp += z * H(i, k + 2);
                                    H(i, k + 2) -= pp * r;
                                }
                                H(i, k + 1) -= pp * q;
                                H(i, k) -= pp;
                            }
                        }
                    }
                }
            }
        } while (l < nn - 1 && nn >= 0);
    }
    return wri;
}

} // namespace

Spectrum eigenvalues(const DenseMatrix& a) {
    if (a.rows() != a.cols())
        throw std::invalid_argument("eigenvalues: matrix must be square");
    if (a.rows() == 0)
        return {};
    if (a.rows() == 1)
        return {a(0, 0)};
    DenseMatrix h = a;
    balance(h);
    to_hessenberg(h);
    return hqr(h);
}

Spectrum generalized_eigenvalues(const DenseMatrix& a, const DenseMatrix& b) {
    if (a.rows() != a.cols() || b.rows() != b.cols() || a.rows() != b.rows())
        throw std::invalid_argument("generalized_eigenvalues: matrices must be square and same order");
    const std::size_t n = a.rows();
    LuFactors f = [&] {
        try {
            return lu_factor(b);
        } catch (const std::exception&) {
            throw std::runtime_error("generalized_eigenvalues: B is numerically singular");
        }
    }();
    DenseMatrix c(n, n);
    std::vector<double> col(n);
    for (std::size_t j = 0; j < n; ++j) {
        for (std::size_t i = 0; i < n; ++i)
            col[i] = a(i, j);
        const std::vector<double> x = lu_apply(f, col);
        for (std::size_t i = 0; i < n; ++i)
            c(i, j) = x[i];
    }
    return eigenvalues(c);
}

void sort_spectrum(Spectrum& s) {
    std::sort(s.begin(), s.end(), [](const std::complex<double>& x, const std::complex<double>& y) {
        if (x.real() != y.real())
            return x.real() < y.real();
        return x.imag() < y.imag();
    });
}

} // namespace trigcolloc
