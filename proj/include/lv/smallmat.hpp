// Dense linear algebra for small real matrices (n <= 8): inversion,
// characteristic polynomial, polynomial roots, eigenvalues, spectral radius.
#pragma once

#include <algorithm>
#include <array>
#include <cmath>
#include <complex>
#include <initializer_list>
#include <stdexcept>
#include <string>
#include <vector>

namespace lv {

using Complex = std::complex<double>;

struct SingularMatrix : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct NoConvergence : std::runtime_error {
    std::vector<Complex> best_roots;
    std::vector<double> residuals;
    NoConvergence(std::string msg, std::vector<Complex> roots, std::vector<double> res)
        : std::runtime_error(std::move(msg)),
          best_roots(std::move(roots)),
          residuals(std::move(res)) {}
};

class Mat {
public:
    static constexpr int kMaxDim = 8;

    explicit Mat(int n) : n_(n) {
        if (n < 1 || n > kMaxDim)
            throw std::invalid_argument("Mat: dimension must be in [1, 8]");
        a_.fill(0.0);
    }

    Mat(std::initializer_list<std::initializer_list<double>> rows)
        : Mat(static_cast<int>(rows.size())) {
        int i = 0;
        for (const auto& row : rows) {
            if (static_cast<int>(row.size()) != n_)
                throw std::invalid_argument("Mat: ragged initializer");
            int j = 0;
            for (double v : row) (*this)(i, j++) = v;
            ++i;
        }
        check_finite();
    }

    static Mat identity(int n) {
        Mat m(n);
        for (int i = 0; i < n; ++i) m(i, i) = 1.0;
        return m;
    }

    static Mat diagonal(std::initializer_list<double> d) {
        Mat m(static_cast<int>(d.size()));
        int i = 0;
        for (double v : d) m(i, i) = v, ++i;
        return m;
    }

    int size() const { return n_; }

    double& operator()(int i, int j) { return a_[static_cast<size_t>(i) * kMaxDim + j]; }
    double operator()(int i, int j) const { return a_[static_cast<size_t>(i) * kMaxDim + j]; }

    double trace() const {
        double t = 0.0;
        for (int i = 0; i < n_; ++i) t += (*this)(i, i);
        return t;
    }

    double max_abs() const {
        double m = 0.0;
        for (int i = 0; i < n_; ++i)
            for (int j = 0; j < n_; ++j) m = std::max(m, std::abs((*this)(i, j)));
        return m;
    }

    void check_finite() const {
        for (int i = 0; i < n_; ++i)
            for (int j = 0; j < n_; ++j)
                if (!std::isfinite((*this)(i, j)))
                    throw std::invalid_argument("Mat: non-finite entry");
    }

private:
    int n_;
    std::array<double, kMaxDim * kMaxDim> a_;
};

inline Mat operator*(const Mat& a, const Mat& b) {
    const int n = a.size();
    if (b.size() != n) throw std::invalid_argument("Mat: size mismatch");
    Mat c(n);
    for (int i = 0; i < n; ++i)
        for (int k = 0; k < n; ++k) {
            const double aik = a(i, k);
            for (int j = 0; j < n; ++j) c(i, j) += aik * b(k, j);
        }
    return c;
}

inline std::vector<double> mul(const Mat& a, const std::vector<double>& x) {
    const int n = a.size();
    if (static_cast<int>(x.size()) != n) throw std::invalid_argument("mul: size mismatch");
    std::vector<double> y(n, 0.0);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) y[i] += a(i, j) * x[j];
    return y;
}

// Gauss-Jordan with partial pivoting. A pivot below 1e-12 times the largest
// initial row norm is treated as singular (the map then has no unique
// nondegenerate fixed point).
inline Mat invert(const Mat& m) {
    const int n = m.size();
    m.check_finite();

    double max_row_norm = 0.0;
    for (int i = 0; i < n; ++i) {
        double rn = 0.0;
        for (int j = 0; j < n; ++j) rn += std::abs(m(i, j));
        max_row_norm = std::max(max_row_norm, rn);
    }
    const double pivot_tol = 1e-12 * max_row_norm;

    Mat a = m;
    Mat inv = Mat::identity(n);
    for (int col = 0; col < n; ++col) {
        int piv = col;
        for (int i = col + 1; i < n; ++i)
            if (std::abs(a(i, col)) > std::abs(a(piv, col))) piv = i;
        if (std::abs(a(piv, col)) <= pivot_tol)
            throw SingularMatrix("invert: pivot below tolerance at column " + std::to_string(col));
        if (piv != col) {
            for (int j = 0; j < n; ++j) {
                std::swap(a(piv, j), a(col, j));
                std::swap(inv(piv, j), inv(col, j));
            }
        }
        const double d = a(col, col);
        for (int j = 0; j < n; ++j) {
            a(col, j) /= d;
            inv(col, j) /= d;
        }
        for (int i = 0; i < n; ++i) {
            if (i == col) continue;
            const double f = a(i, col);
            if (f == 0.0) continue;
            for (int j = 0; j < n; ++j) {
                a(i, j) -= f * a(col, j);
                inv(i, j) -= f * inv(col, j);
            }
        }
    }
    return inv;
}

// Coefficients c[0]..c[degree] of a real polynomial, ascending powers.
struct PolyCoeffs {
    std::vector<double> c;

    int degree() const { return static_cast<int>(c.size()) - 1; }

    Complex eval(Complex z) const {
        Complex p = 0.0;
        for (int i = degree(); i >= 0; --i) p = p * z + c[static_cast<size_t>(i)];
        return p;
    }
};

// det(lambda I - m) by the Faddeev-LeVerrier trace recursion; monic.
inline PolyCoeffs char_poly(const Mat& m) {
    const int n = m.size();
    PolyCoeffs p;
    p.c.assign(static_cast<size_t>(n) + 1, 0.0);
    p.c[static_cast<size_t>(n)] = 1.0;

    Mat mk = m;
    p.c[static_cast<size_t>(n - 1)] = -mk.trace();
    for (int k = 2; k <= n; ++k) {
        Mat shifted = mk;
        const double ck = p.c[static_cast<size_t>(n - k + 1)];
        for (int i = 0; i < n; ++i) shifted(i, i) += ck;
        mk = m * shifted;
        p.c[static_cast<size_t>(n - k)] = -mk.trace() / k;
    }
    return p;
}

// Durand-Kerner simultaneous iteration. Stops when every per-root step is
// below 1e-13 * (1 + |root|), or when every residual |p(z)| is below the
// floating-point evaluation noise floor (multiple roots stall above the step
// tolerance). Roots with |Im| < 1e-9 are snapped to the real axis.
inline std::vector<Complex> poly_roots(const PolyCoeffs& p) {
    const int n = p.degree();
    if (n < 1) throw std::invalid_argument("poly_roots: degree must be >= 1");
    const double lead = p.c[static_cast<size_t>(n)];
    if (lead == 0.0) throw std::invalid_argument("poly_roots: zero leading coefficient");

    std::vector<double> a(static_cast<size_t>(n) + 1);
    for (int i = 0; i <= n; ++i) a[static_cast<size_t>(i)] = p.c[static_cast<size_t>(i)] / lead;

    auto eval = [&](Complex z) {
        Complex v = 1.0;
        for (int i = n - 1; i >= 0; --i) v = v * z + a[static_cast<size_t>(i)];
        return v;
    };
    // Evaluation noise scale at z: sum |a_i| |z|^i.
    auto noise_scale = [&](Complex z) {
        const double az = std::abs(z);
        double s = 1.0;
        for (int i = n - 1; i >= 0; --i) s = s * az + std::abs(a[static_cast<size_t>(i)]);
        return s;
    };

    double maxc = 0.0;
    for (int i = 0; i < n; ++i) maxc = std::max(maxc, std::abs(a[static_cast<size_t>(i)]));
    const double radius = 1.0 + maxc;

    std::vector<Complex> z(static_cast<size_t>(n));
    for (int k = 0; k < n; ++k) {
        const double ang = 2.0 * M_PI * k / n + 0.4;
        z[static_cast<size_t>(k)] = radius * Complex(std::cos(ang), std::sin(ang));
    }

    constexpr int kMaxIter = 1000;
    for (int iter = 0; iter < kMaxIter; ++iter) {
        bool steps_small = true;
        for (int k = 0; k < n; ++k) {
            Complex den = 1.0;
            for (int j = 0; j < n; ++j)
                if (j != k) den *= z[static_cast<size_t>(k)] - z[static_cast<size_t>(j)];
            if (den == Complex(0.0, 0.0)) den = Complex(1e-300, 0.0);
            const Complex dz = eval(z[static_cast<size_t>(k)]) / den;
            z[static_cast<size_t>(k)] -= dz;
            if (std::abs(dz) > 1e-13 * (1.0 + std::abs(z[static_cast<size_t>(k)])))
                steps_small = false;
        }
        bool residuals_small = true;
        for (int k = 0; k < n; ++k) {
            if (std::abs(eval(z[static_cast<size_t>(k)])) >
                1e-14 * noise_scale(z[static_cast<size_t>(k)])) {
                residuals_small = false;
                break;
            }
        }
        if (steps_small || residuals_small) {
            for (auto& r : z)
                if (std::abs(r.imag()) < 1e-9) r = Complex(r.real(), 0.0);
            std::sort(z.begin(), z.end(), [](Complex u, Complex v) {
                return u.real() != v.real() ? u.real() < v.real() : u.imag() < v.imag();
            });
            return z;
        }
    }
    std::vector<double> res(static_cast<size_t>(n));
    for (int k = 0; k < n; ++k) res[static_cast<size_t>(k)] = std::abs(eval(z[static_cast<size_t>(k)]));
    throw NoConvergence("poly_roots: iteration cap reached", z, res);
}

inline std::vector<Complex> eigenvalues(const Mat& m) { return poly_roots(char_poly(m)); }

inline double spectral_radius(const Mat& m) {
    double rho = 0.0;
    for (Complex lam : eigenvalues(m)) rho = std::max(rho, std::abs(lam));
    return rho;
}

}  // namespace lv
