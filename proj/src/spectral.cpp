#include "trh/spectral.hpp"

#include <Eigen/Eigenvalues>

#include <cmath>
#include <limits>

namespace trh {

namespace {

using cplx = std::complex<double>;

std::vector<double> monic_double_coeffs(const IntPolynomial& p) {
    const double lead = p.leading().to_double();
    std::vector<double> c(static_cast<std::size_t>(p.degree()) + 1);
    for (int i = 0; i <= p.degree(); ++i)
        c[static_cast<std::size_t>(i)] = p.coeff(i).to_double() / lead;
    return c;
}

cplx horner(const std::vector<double>& a, cplx z) {
    cplx acc(0.0, 0.0);
    for (auto it = a.rbegin(); it != a.rend(); ++it) acc = acc * z + *it;
    return acc;
}

cplx horner_deriv(const std::vector<double>& a, cplx z) {
    cplx acc(0.0, 0.0);
    for (std::size_t i = a.size() - 1; i >= 1; --i)
        acc = acc * z + static_cast<double>(i) * a[i];
    return acc;
}

// Backward-error noise floor for Horner evaluation at |z| = x.
double eval_noise(const std::vector<double>& a, double x) {
    double s = 0.0, xk = 1.0;
    for (std::size_t k = 0; k < a.size(); ++k) {
        s += (2.0 * static_cast<double>(k) + 1.0) * std::abs(a[k]) * xk;
        xk *= x;
    }
    return s * std::numeric_limits<double>::epsilon();
}

// Aberth-Ehrlich iteration for a square-free monic polynomial given by
// ascending double coefficients. Degree 1 and 2 are closed-form.
std::vector<cplx> aberth_roots(const std::vector<double>& a) {
    const int n = static_cast<int>(a.size()) - 1;
    if (n == 1) return {cplx(-a[0], 0.0)};
    if (n == 2) {
        const cplx disc = cplx(a[1] * a[1] - 4.0 * a[0], 0.0);
        const cplx sq = std::sqrt(disc);
        // Avoid cancellation: pick the larger-magnitude numerator first.
        const cplx q = (a[1] >= 0.0) ? (-a[1] - sq.real()) + cplx(0, -sq.imag())
                                     : (-a[1] + sq.real()) + cplx(0, sq.imag());
        const cplx r1 = q * 0.5;
        const cplx r2 = (std::abs(r1) > 0.0) ? cplx(a[0], 0.0) / r1 : -r1 - cplx(a[1], 0.0);
        return {r1, r2};
    }

    double amax = 0.0;
    for (int i = 0; i < n; ++i) amax = std::max(amax, std::abs(a[static_cast<std::size_t>(i)]));
    const double cauchy = 1.0 + amax;
    double r0 = std::pow(std::max(std::abs(a[0]), 1e-12), 1.0 / n);
    r0 = std::min(std::max(r0, 0.5), cauchy);

    std::vector<cplx> z(static_cast<std::size_t>(n));
    for (int k = 0; k < n; ++k) {
        const double theta = 2.0 * M_PI * k / n + 0.7;
        z[static_cast<std::size_t>(k)] = std::polar(r0, theta);
    }

    constexpr int max_iter = 1000;
    for (int iter = 0; iter < max_iter; ++iter) {
        bool all_done = true;
        for (int i = 0; i < n; ++i) {
            cplx& zi = z[static_cast<std::size_t>(i)];
            const cplx p = horner(a, zi);
            if (std::abs(p) <= eval_noise(a, std::abs(zi))) continue;
            const cplx dp = horner_deriv(a, zi);
            if (dp == cplx(0.0, 0.0)) {
                zi += cplx(1e-8, 1e-8) * (1.0 + std::abs(zi));
                all_done = false;
                continue;
            }
            const cplx w = p / dp;
            cplx repel(0.0, 0.0);
            for (int j = 0; j < n; ++j) {
                if (j == i) continue;
                const cplx diff = zi - z[static_cast<std::size_t>(j)];
                if (diff != cplx(0.0, 0.0)) repel += 1.0 / diff;
            }
            const cplx denom = 1.0 - w * repel;
            const cplx step = (denom == cplx(0.0, 0.0)) ? w : w / denom;
            zi -= step;
            if (!std::isfinite(zi.real()) || !std::isfinite(zi.imag()))
                throw numerical_failure("roots: Aberth iteration diverged");
            if (std::abs(step) > 1e-14 * (1.0 + std::abs(zi))) all_done = false;
        }
        if (all_done) return z;
    }
    throw numerical_failure("roots: Aberth iteration did not converge within the cap");
}

// Real-root cleanup: conjugate-pair inputs give nearly-real roots whose
// imaginary dust can flip downstream comparisons.
void snap_to_real(std::vector<cplx>& zs, const std::vector<double>& a) {
    for (auto& z : zs) {
        if (z.imag() == 0.0) continue;
        if (std::abs(z.imag()) < 1e-12 * (1.0 + std::abs(z.real()))) {
            const cplx real_z(z.real(), 0.0);
            if (std::abs(horner(a, real_z)) <= 4.0 * std::max(std::abs(horner(a, z)),
                                                              eval_noise(a, std::abs(z))))
                z = real_z;
        }
    }
}

} // namespace

SpectrumEstimate roots(const IntPolynomial& q, double tol) {
    if (q.degree() < 1) throw contract_violation("roots: degree must be >= 1");
    if (tol <= 0.0) throw contract_violation("roots: tolerance must be positive");

    SpectrumEstimate out;
    out.source_degree = q.degree();

    IntPolynomial p = primitive_part(q);

    // Exact zero roots: strip the z^j factor.
    int zero_count = 0;
    while (p.coeff(0).is_zero() && p.degree() > 0) {
        std::vector<Integer> shifted(p.coeffs().begin() + 1, p.coeffs().end());
        p = IntPolynomial(std::move(shifted));
        ++zero_count;
    }
    for (int i = 0; i < zero_count; ++i)
        out.roots.push_back({cplx(0.0, 0.0), 0.0});

    // Square-free layers: roots of layer r are the roots of multiplicity
    // >= r, so concatenating layers yields the multiset.
    while (p.degree() >= 1) {
        const IntPolynomial w = square_free_part(p);
        const auto wd = monic_double_coeffs(w);
        auto zs = aberth_roots(wd);
        snap_to_real(zs, wd);
        for (const auto& z : zs) {
            const double pw = std::abs(horner(wd, z));
            const double dpw = std::abs(horner_deriv(wd, z));
            double radius;
            if (pw == 0.0)
                radius = 0.0;
            else if (dpw == 0.0)
                throw numerical_failure("roots: stationary point reported as root");
            else
                radius = pw / dpw;
            if (!(radius <= tol))
                throw numerical_failure("roots: error radius " + std::to_string(radius) +
                                        " exceeds tolerance");
            out.roots.push_back({z, radius});
        }
        p = exact_poly_div(p, w);
    }

    if (static_cast<int>(out.roots.size()) != out.source_degree)
        throw numerical_failure("roots: multiplicity bookkeeping lost a root");
    return out;
}

HouseValue house(const IntPolynomial& q, double tol) {
    if (!q.is_monic()) throw contract_violation("house: polynomial must be monic");
    if (q.coeff(0).is_zero())
        throw contract_violation("house: constant term must be nonzero");

    const SpectrumEstimate spec = roots(q, tol);
    HouseValue h;
    h.value = 0.0;
    for (const auto& r : spec.roots) {
        const double m = std::abs(r.value);
        if (m > h.value) {
            h.value = m;
            h.radius = r.radius;
        }
    }
    h.certified_gt_one = (h.value - h.radius > 1.0);
    return h;
}

double spectral_radius(const IntMatrix& a, double tol) {
    const SpectrumEstimate spec = roots(char_poly(a), tol);
    double rho = 0.0;
    for (const auto& r : spec.roots) rho = std::max(rho, std::abs(r.value));

    bool nonneg = true;
    for (Eigen::Index i = 0; i < a.rows() && nonneg; ++i)
        for (Eigen::Index j = 0; j < a.cols() && nonneg; ++j)
            if (a(i, j).sign() < 0) nonneg = false;
    if (nonneg && a.rows() > 0) {
        double min_row = std::numeric_limits<double>::infinity(), max_row = 0.0;
        for (Eigen::Index i = 0; i < a.rows(); ++i) {
            Integer s(0);
            for (Eigen::Index j = 0; j < a.cols(); ++j) s += a(i, j);
            const double rs = s.to_double();
            min_row = std::min(min_row, rs);
            max_row = std::max(max_row, rs);
        }
        const double slack = 1e-9 * (1.0 + max_row);
        if (rho < min_row - slack || rho > max_row + slack)
            throw numerical_failure("spectral_radius: row-sum bracket violated");
    }
    return rho;
}

double perron_radius(const IntMatrix& a, double tol) {
    const Eigen::Index n = a.rows();
    if (n != a.cols()) throw contract_violation("perron_radius: matrix must be square");
    double min_row = std::numeric_limits<double>::infinity(), max_row = 0.0;
    Eigen::MatrixXd m(n, n);
    for (Eigen::Index i = 0; i < n; ++i) {
        Integer s(0);
        for (Eigen::Index j = 0; j < n; ++j) {
            if (a(i, j).sign() < 0)
                throw contract_violation("perron_radius: matrix must be nonnegative");
            m(i, j) = a(i, j).to_double();
            s += a(i, j);
        }
        min_row = std::min(min_row, s.to_double());
        max_row = std::max(max_row, s.to_double());
    }

    Eigen::EigenSolver<Eigen::MatrixXd> solver(m, /*computeEigenvectors=*/false);
    if (solver.info() != Eigen::Success)
        throw numerical_failure("perron_radius: dense eigensolver failed");
    double rho = 0.0;
    for (Eigen::Index i = 0; i < n; ++i)
        rho = std::max(rho, std::abs(solver.eigenvalues()[i]));

    const double slack = std::max(tol, 1e-9) * (1.0 + max_row);
    if (rho < min_row - slack || rho > max_row + slack)
        throw numerical_failure("perron_radius: row-sum bracket violated");
    return rho;
}

double dobrowolsky_floor(int d) {
    if (d < 3) throw domain_error("dobrowolsky_floor: requires d >= 3");
    const double ld = std::log(static_cast<double>(d));
    const double ratio = std::log(ld) / ld;
    return 1.0 + ratio * ratio * ratio / static_cast<double>(d);
}

double sz_floor(int s) {
    if (s < 0) throw domain_error("sz_floor: requires s >= 0");
    return 1.0 + std::pow(4.0, -(s + 2));
}

double combined_floor(int d, double c) {
    if (d < 2) throw domain_error("combined_floor: requires d >= 2");
    if (c <= 0.0) throw domain_error("combined_floor: c must be positive");
    const double ld = std::log(static_cast<double>(d));
    return 1.0 + c / (static_cast<double>(d) * ld * ld * ld);
}

} // namespace trh
