#ifndef TRH_POLYNOMIAL_HPP
#define TRH_POLYNOMIAL_HPP

#include <algorithm>
#include <cstdint>
#include <initializer_list>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "trh/errors.hpp"
#include "trh/integer.hpp"

namespace trh {

/// Dense univariate polynomial over a commutative ring scalar.
///
/// Coefficients are stored degree-ascending with a nonzero leading
/// coefficient; the zero polynomial is the empty coefficient vector and
/// has degree -1.
template <class Scalar>
class Polynomial {
public:
    Polynomial() = default;

    explicit Polynomial(std::vector<Scalar> ascending_coeffs)
        : c_(std::move(ascending_coeffs)) {
        normalize();
    }

    Polynomial(std::initializer_list<Scalar> ascending_coeffs)
        : c_(ascending_coeffs) {
        normalize();
    }

    static Polynomial constant(Scalar v) { return Polynomial{std::move(v)}; }

    static Polynomial monomial(int degree, Scalar lead = Scalar(1)) {
        std::vector<Scalar> c(static_cast<std::size_t>(degree) + 1, Scalar(0));
        c.back() = std::move(lead);
        return Polynomial(std::move(c));
    }

    /// -1 for the zero polynomial.
    int degree() const { return static_cast<int>(c_.size()) - 1; }
    bool is_zero() const { return c_.empty(); }

    const Scalar& leading() const {
        if (is_zero()) throw domain_error("leading(): zero polynomial");
        return c_.back();
    }

    bool is_monic() const { return !is_zero() && c_.back() == Scalar(1); }

    /// Coefficient of z^i; zero beyond the degree.
    Scalar coeff(int i) const {
        if (i < 0 || i >= static_cast<int>(c_.size())) return Scalar(0);
        return c_[static_cast<std::size_t>(i)];
    }

    const std::vector<Scalar>& coeffs() const { return c_; }

    friend bool operator==(const Polynomial& a, const Polynomial& b) {
        return a.c_ == b.c_;
    }

    friend Polynomial operator+(const Polynomial& a, const Polynomial& b) {
        std::vector<Scalar> c(std::max(a.c_.size(), b.c_.size()), Scalar(0));
        for (std::size_t i = 0; i < c.size(); ++i) {
            if (i < a.c_.size()) c[i] += a.c_[i];
            if (i < b.c_.size()) c[i] += b.c_[i];
        }
        return Polynomial(std::move(c));
    }

    friend Polynomial operator-(const Polynomial& a, const Polynomial& b) {
        std::vector<Scalar> c(std::max(a.c_.size(), b.c_.size()), Scalar(0));
        for (std::size_t i = 0; i < c.size(); ++i) {
            if (i < a.c_.size()) c[i] += a.c_[i];
            if (i < b.c_.size()) c[i] -= b.c_[i];
        }
        return Polynomial(std::move(c));
    }

    Polynomial operator-() const {
        std::vector<Scalar> c(c_);
        for (auto& x : c) x = -x;
        return Polynomial(std::move(c));
    }

    friend Polynomial operator*(const Polynomial& a, const Polynomial& b) {
        if (a.is_zero() || b.is_zero()) return Polynomial();
        std::vector<Scalar> c(a.c_.size() + b.c_.size() - 1, Scalar(0));
        for (std::size_t i = 0; i < a.c_.size(); ++i)
            for (std::size_t j = 0; j < b.c_.size(); ++j)
                c[i + j] += a.c_[i] * b.c_[j];
        return Polynomial(std::move(c));
    }

    friend Polynomial operator*(const Polynomial& a, const Scalar& s) {
        std::vector<Scalar> c(a.c_);
        for (auto& x : c) x *= s;
        return Polynomial(std::move(c));
    }

    Polynomial derivative() const {
        if (degree() < 1) return Polynomial();
        std::vector<Scalar> c(c_.size() - 1);
        for (std::size_t i = 1; i < c_.size(); ++i)
            c[i - 1] = c_[i] * Scalar(static_cast<long long>(i));
        return Polynomial(std::move(c));
    }

    /// Horner evaluation in the coefficient ring.
    Scalar operator()(const Scalar& x) const {
        Scalar acc(0);
        for (auto it = c_.rbegin(); it != c_.rend(); ++it)
            acc = acc * x + *it;
        return acc;
    }

    /// Horner evaluation in another ring; conv maps a coefficient into it.
    template <class X, class Conv>
    X evaluate(const X& x, Conv conv) const {
        X acc{};
        for (auto it = c_.rbegin(); it != c_.rend(); ++it)
            acc = acc * x + conv(*it);
        return acc;
    }

private:
    void normalize() {
        while (!c_.empty() && c_.back() == Scalar(0)) c_.pop_back();
    }

    std::vector<Scalar> c_;
};

using IntPolynomial = Polynomial<Integer>;
using RatPolynomial = Polynomial<Rational>;

/// Quotient and remainder by a monic divisor; valid over any ring.
template <class Scalar>
std::pair<Polynomial<Scalar>, Polynomial<Scalar>>
divrem_by_monic(const Polynomial<Scalar>& a, const Polynomial<Scalar>& b) {
    if (!b.is_monic()) throw contract_violation("divrem_by_monic: divisor must be monic");
    if (a.degree() < b.degree()) return {Polynomial<Scalar>(), a};
    std::vector<Scalar> rem(a.coeffs());
    const int db = b.degree();
    std::vector<Scalar> quot(static_cast<std::size_t>(a.degree() - db) + 1, Scalar(0));
    for (int i = a.degree(); i >= db; --i) {
        Scalar q = rem[static_cast<std::size_t>(i)];
        if (q == Scalar(0)) continue;
        quot[static_cast<std::size_t>(i - db)] = q;
        for (int j = 0; j <= db; ++j)
            rem[static_cast<std::size_t>(i - db + j)] -= q * b.coeff(j);
    }
    return {Polynomial<Scalar>(std::move(quot)), Polynomial<Scalar>(std::move(rem))};
}

/// True iff b divides a exactly; on success *quotient receives a/b.
template <class Scalar>
bool try_divide(const Polynomial<Scalar>& a, const Polynomial<Scalar>& b,
                Polynomial<Scalar>* quotient) {
    auto [q, r] = divrem_by_monic(a, b);
    if (!r.is_zero()) return false;
    if (quotient) *quotient = std::move(q);
    return true;
}

/// Power sums S_1..S_N of the roots (with multiplicity) of a monic
/// polynomial, by the Newton-Girard recurrences: the r*sigma_r family up
/// to the degree and the length-n shift recurrence beyond it. Exact over
/// exact scalars.
template <class Scalar>
std::vector<Scalar> power_sums(const Polynomial<Scalar>& q, int n_terms) {
    if (!q.is_monic()) throw contract_violation("power_sums: polynomial must be monic");
    const int n = q.degree();
    if (n < 1) throw contract_violation("power_sums: degree must be >= 1");
    if (n_terms < 1) throw contract_violation("power_sums: need at least one term");

    // Elementary symmetric functions: e_k = (-1)^k * coeff(n-k).
    std::vector<Scalar> e(static_cast<std::size_t>(n) + 1, Scalar(0));
    e[0] = Scalar(1);
    for (int k = 1; k <= n; ++k) {
        Scalar v = q.coeff(n - k);
        e[static_cast<std::size_t>(k)] = (k % 2 == 0) ? v : -v;
    }

    std::vector<Scalar> p(static_cast<std::size_t>(n_terms) + 1, Scalar(0));
    for (int k = 1; k <= n_terms; ++k) {
        Scalar acc(0);
        const int span = std::min(k, n);
        for (int i = 1; i <= span; ++i) {
            Scalar term = e[static_cast<std::size_t>(i)] * p[static_cast<std::size_t>(k - i)];
            acc += (i % 2 == 1) ? term : -term;
        }
        if (k <= n) {
            Scalar tail = e[static_cast<std::size_t>(k)] * Scalar(k);
            acc += (k % 2 == 1) ? tail : -tail;
        }
        p[static_cast<std::size_t>(k)] = acc;
    }
    return std::vector<Scalar>(p.begin() + 1, p.end());
}

/// S_1..S_N for an integer polynomial; the carrier of exact trace scans.
using PowerSumSequence = std::vector<Integer>;

/// Moebius function; 0 on non-squarefree arguments.
int mobius(std::uint64_t n);

/// Euler totient by trial factorization.
std::uint64_t euler_phi(std::uint64_t n);

/// The k-th cyclotomic polynomial, degree phi(k), computed exactly from
/// the Moebius product of (z^d - 1) factors.
IntPolynomial cyclotomic(std::uint64_t k);

/// Least B' such that phi(t) > B for every t > B'. The scan is finite
/// because phi(t) >= sqrt(t/2), so phi(t) <= B forces t <= 2(B+1)^2.
std::uint64_t totient_threshold(std::uint64_t b);

/// Result of peeling cyclotomic factors off a monic integer polynomial.
struct CyclotomicFactorization {
    std::vector<std::uint64_t> indices; // k_1 <= ... <= k_l, with repeats
    IntPolynomial residual;             // constant 1 iff complete
    bool complete = false;

    /// lcm of the indices: the period of the root-power (trace) sequence
    /// when the factorization is complete.
    Integer period() const;
};

/// Kronecker-style classification: repeatedly trial-divide by every
/// cyclotomic Phi_k whose degree still fits, enumerating candidates up to
/// k <= 2*deg^2 (justified by phi(k) >= sqrt(k/2)). Requires monic input
/// with nonzero constant term.
CyclotomicFactorization cyclotomic_factorization(const IntPolynomial& q);

/// Monic integer polynomial whose roots are the k-th powers of the roots
/// of q (with multiplicity), via the power-sum transform S'_v = S_{kv}
/// and the inverse Newton-Girard recurrence. Integrality of the result
/// is checked, not assumed.
IntPolynomial power_roots_poly(const IntPolynomial& q, std::uint64_t k);

/// gcd of all coefficients, nonnegative; 0 for the zero polynomial.
Integer content(const IntPolynomial& p);

/// p divided by its content, sign-normalized to a positive leading
/// coefficient.
IntPolynomial primitive_part(const IntPolynomial& p);

/// Primitive-PRS polynomial gcd over the integers (positive leading
/// coefficient, primitive).
IntPolynomial poly_gcd(IntPolynomial a, IntPolynomial b);

/// Exact division of integer polynomials; throws numerical_failure if b
/// does not divide a.
IntPolynomial exact_poly_div(const IntPolynomial& a, const IntPolynomial& b);

/// The product of the distinct irreducible factors of p (each once).
IntPolynomial square_free_part(const IntPolynomial& p);

std::string to_string(const IntPolynomial& p, const char* var = "z");

} // namespace trh

#endif
