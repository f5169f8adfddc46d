#include "trh/polynomial.hpp"

#include <map>
#include <numeric>

namespace trh {

namespace {

// Prime factorization by trial division, (prime, exponent) pairs.
std::vector<std::pair<std::uint64_t, int>> factorize(std::uint64_t n) {
    std::vector<std::pair<std::uint64_t, int>> f;
    for (std::uint64_t p = 2; p * p <= n; p += (p == 2 ? 1 : 2)) {
        if (n % p) continue;
        int e = 0;
        while (n % p == 0) { n /= p; ++e; }
        f.emplace_back(p, e);
    }
    if (n > 1) f.emplace_back(n, 1);
    return f;
}

std::vector<std::uint64_t> divisors(std::uint64_t n) {
    std::vector<std::uint64_t> d{1};
    for (auto [p, e] : factorize(n)) {
        const std::size_t base = d.size();
        std::uint64_t pk = 1;
        for (int i = 0; i < e; ++i) {
            pk *= p;
            for (std::size_t j = 0; j < base; ++j) d.push_back(d[j] * pk);
        }
    }
    std::sort(d.begin(), d.end());
    return d;
}

} // namespace

int mobius(std::uint64_t n) {
    if (n == 0) throw domain_error("mobius: argument must be positive");
    int sign = 1;
    for (auto [p, e] : factorize(n)) {
        (void)p;
        if (e > 1) return 0;
        sign = -sign;
    }
    return sign;
}

std::uint64_t euler_phi(std::uint64_t n) {
    if (n == 0) throw domain_error("euler_phi: argument must be positive");
    std::uint64_t phi = n;
    for (auto [p, e] : factorize(n)) {
        (void)e;
        phi -= phi / p;
    }
    return phi;
}

IntPolynomial cyclotomic(std::uint64_t k) {
    if (k == 0) throw domain_error("cyclotomic: index must be positive");
    if (k == 1) return IntPolynomial{Integer(-1), Integer(1)};

    IntPolynomial num{Integer(1)};
    IntPolynomial den{Integer(1)};
    for (std::uint64_t d : divisors(k)) {
        const int mu = mobius(d);
        if (mu == 0) continue;
        // factor z^(k/d) - 1
        IntPolynomial f = IntPolynomial::monomial(static_cast<int>(k / d)) -
                          IntPolynomial{Integer(1)};
        (mu == 1 ? num : den) = (mu == 1 ? num : den) * f;
    }
    auto [q, r] = divrem_by_monic(num, den);
    if (!r.is_zero())
        throw numerical_failure("cyclotomic: Moebius product division not exact");
    return q;
}

std::uint64_t totient_threshold(std::uint64_t b) {
    if (b == 0) throw domain_error("totient_threshold: B must be positive");
    // phi(t) <= B implies t <= 2B^2; scan a little further for safety.
    const std::uint64_t limit = 2 * (b + 1) * (b + 1);
    std::uint64_t last = 1;
    for (std::uint64_t t = 1; t <= limit; ++t)
        if (euler_phi(t) <= b) last = t;
    return last;
}

Integer CyclotomicFactorization::period() const {
    Integer l(1);
    for (std::uint64_t k : indices) l = lcm(l, Integer(static_cast<long long>(k)));
    return l;
}

CyclotomicFactorization cyclotomic_factorization(const IntPolynomial& q) {
    if (!q.is_monic())
        throw contract_violation("cyclotomic_factorization: polynomial must be monic");
    if (q.coeff(0) == Integer(0))
        throw contract_violation("cyclotomic_factorization: constant term must be nonzero");

    CyclotomicFactorization out;
    out.residual = q;
    const int d0 = q.degree();
    const std::uint64_t kmax = 2 * static_cast<std::uint64_t>(d0) * static_cast<std::uint64_t>(d0);
    for (std::uint64_t k = 1; k <= std::max<std::uint64_t>(kmax, 1); ++k) {
        const int rem_deg = out.residual.degree();
        if (rem_deg == 0) break;
        if (euler_phi(k) > static_cast<std::uint64_t>(rem_deg)) continue;
        const IntPolynomial phi_k = cyclotomic(k);
        IntPolynomial quotient;
        while (try_divide(out.residual, phi_k, &quotient)) {
            out.residual = quotient;
            out.indices.push_back(k);
            if (out.residual.degree() < phi_k.degree()) break;
        }
    }
    out.complete = (out.residual.degree() == 0 && out.residual.coeff(0) == Integer(1));
    return out;
}

IntPolynomial power_roots_poly(const IntPolynomial& q, std::uint64_t k) {
    if (!q.is_monic()) throw contract_violation("power_roots_poly: polynomial must be monic");
    if (k == 0) throw domain_error("power_roots_poly: exponent must be positive");
    const int n = q.degree();
    if (n == 0) return q;
    if (k == 1) return q;

    const auto s = power_sums(q, static_cast<int>(k) * n);
    // Power sums of the transformed root multiset.
    std::vector<Integer> sp(static_cast<std::size_t>(n) + 1, Integer(0));
    for (int v = 1; v <= n; ++v)
        sp[static_cast<std::size_t>(v)] = s[static_cast<std::size_t>(k) * v - 1];

    // Inverse Newton-Girard: r*e_r = sum_{i=1..r} (-1)^(i-1) e_{r-i} S'_i.
    std::vector<Integer> e(static_cast<std::size_t>(n) + 1, Integer(0));
    e[0] = Integer(1);
    for (int r = 1; r <= n; ++r) {
        Integer acc(0);
        for (int i = 1; i <= r; ++i) {
            Integer term = e[static_cast<std::size_t>(r - i)] * sp[static_cast<std::size_t>(i)];
            acc += (i % 2 == 1) ? term : -term;
        }
        e[static_cast<std::size_t>(r)] = exact_div(acc, Integer(r));
    }

    std::vector<Integer> coeffs(static_cast<std::size_t>(n) + 1, Integer(0));
    for (int j = 0; j <= n; ++j) {
        Integer v = e[static_cast<std::size_t>(j)];
        coeffs[static_cast<std::size_t>(n - j)] = (j % 2 == 0) ? v : -v;
    }
    return IntPolynomial(std::move(coeffs));
}

Integer content(const IntPolynomial& p) {
    Integer g(0);
    for (const auto& c : p.coeffs()) g = gcd(g, c);
    return abs(g);
}

IntPolynomial primitive_part(const IntPolynomial& p) {
    if (p.is_zero()) return p;
    Integer c = content(p);
    if (p.leading().sign() < 0) c = -c;
    std::vector<Integer> out(p.coeffs());
    for (auto& x : out) x = exact_div(x, c);
    return IntPolynomial(std::move(out));
}

namespace {

// Pseudo-remainder: lc(b)^(deg a - deg b + 1) * a mod b, integral by
// construction.
IntPolynomial pseudo_rem(const IntPolynomial& a, const IntPolynomial& b) {
    IntPolynomial r = a;
    const Integer d = b.leading();
    int steps = a.degree() - b.degree() + 1;
    while (!r.is_zero() && r.degree() >= b.degree()) {
        const int shift = r.degree() - b.degree();
        const Integer lead = r.leading();
        r = r * d - (b * lead) * IntPolynomial::monomial(shift);
        --steps;
    }
    // Keep the classical normalization so divisibility arguments apply.
    for (; steps > 0; --steps) r = r * d;
    return r;
}

} // namespace

IntPolynomial poly_gcd(IntPolynomial a, IntPolynomial b) {
    a = primitive_part(a);
    b = primitive_part(b);
    if (a.is_zero()) return b;
    if (b.is_zero()) return a;
    if (a.degree() < b.degree()) std::swap(a, b);
    while (!b.is_zero()) {
        IntPolynomial r = primitive_part(pseudo_rem(a, b));
        a = std::move(b);
        b = std::move(r);
    }
    return primitive_part(a);
}

IntPolynomial exact_poly_div(const IntPolynomial& a, const IntPolynomial& b) {
    if (b.is_zero()) throw domain_error("exact_poly_div: division by zero polynomial");
    if (a.is_zero()) return a;
    if (a.degree() < b.degree())
        throw numerical_failure("exact_poly_div: quotient is not integral");
    std::vector<Integer> rem(a.coeffs());
    const int db = b.degree();
    std::vector<Integer> quot(static_cast<std::size_t>(a.degree() - db) + 1, Integer(0));
    for (int i = a.degree(); i >= db; --i) {
        const Integer& top = rem[static_cast<std::size_t>(i)];
        if (top.is_zero()) continue;
        Integer q = exact_div(top, b.leading());
        quot[static_cast<std::size_t>(i - db)] = q;
        for (int j = 0; j <= db; ++j)
            rem[static_cast<std::size_t>(i - db + j)] -= q * b.coeff(j);
    }
    for (const auto& c : rem)
        if (!c.is_zero())
            throw numerical_failure("exact_poly_div: nonzero remainder");
    return IntPolynomial(std::move(quot));
}

IntPolynomial square_free_part(const IntPolynomial& p) {
    if (p.degree() < 1) return primitive_part(p);
    IntPolynomial pp = primitive_part(p);
    IntPolynomial g = poly_gcd(pp, pp.derivative());
    if (g.degree() == 0) return pp;
    return exact_poly_div(pp, g);
}

std::string to_string(const IntPolynomial& p, const char* var) {
    if (p.is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (int i = p.degree(); i >= 0; --i) {
        Integer c = p.coeff(i);
        if (c.is_zero()) continue;
        if (first) {
            if (c.sign() < 0) os << "-";
        } else {
            os << (c.sign() < 0 ? " - " : " + ");
        }
        Integer a = abs(c);
        const bool unit = (a == Integer(1));
        if (i == 0 || !unit) os << a.str();
        if (i > 0) {
            if (!unit) os << "*";
            os << var;
            if (i > 1) os << "^" << i;
        }
        first = false;
    }
    return os.str();
}

} // namespace trh
