#ifndef TRH_TRACE_SEARCH_HPP
#define TRH_TRACE_SEARCH_HPP

#include <complex>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <variant>
#include <vector>

#include "trh/matrix.hpp"
#include "trh/polynomial.hpp"

namespace trh {

enum class CertificateCase {
    direct_scan,
    expanding,
    cyclotomic_large_kl,
    cyclotomic_small_kl,
};

enum class ExpandingSubcase {
    none,
    below_k0,      // exact trace exceeded B within the K0 prefix
    fejer_window,  // found in the K0..K window of the kernel argument
};

const char* to_string(CertificateCase c);
const char* to_string(ExpandingSubcase c);

/// Witness that Tr(A^nu) > B inside the search horizon. nu and trace are
/// arbitrary-precision: the constructive cyclotomic path can return
/// factorially large powers.
struct NuCertificate {
    Integer nu;
    Integer trace;
    Integer threshold_b;
    CertificateCase kind = CertificateCase::direct_scan;
    Integer horizon;
    bool minimal = false;
    ExpandingSubcase subcase = ExpandingSubcase::none;
    bool conjectural_horizon = false;
};

/// Exhausted scan. periodic is set only when the trace sequence is
/// provably periodic (fully cyclotomic characteristic polynomial) AND
/// every trace over one full period was verified <= B; the period is
/// reported whenever the sequence is periodic at all.
struct SearchFailure {
    Integer horizon;
    Integer max_trace_seen;
    bool periodic = false;
    std::optional<Integer> period;
};

using SearchResult = std::variant<NuCertificate, SearchFailure>;

/// Minimal nu <= ceil(m^(2+eps)) with Tr(A^nu) > B, via an exact
/// Newton-recurrence scan over the power sums of char_poly(A). Requires
/// det(A) = 1. max_nu > 0 caps the scan (safety valve).
SearchResult find_nu(const IntMatrix& a, const Integer& b, double eps,
                     std::uint64_t max_nu = 0);

/// Spectrally expanding case: char_poly(A) must not be fully cyclotomic.
/// Scans exactly up to max(ceil(m^(1+eps)), K0) with
/// K0 = ceil(20 (B/c) m log(m)^3); exhaustion is an error here.
/// conjectural_linear_horizon replaces both bounds by the linear
/// ceil(20 (B/c) m), which is only valid under the Schinzel-Zassenhaus
/// conjecture and is labeled as such in the certificate.
NuCertificate find_nu_expanding(const IntMatrix& a, const Integer& b, double eps,
                                double c, bool conjectural_linear_horizon = false,
                                std::uint64_t max_nu = 0);

/// Fully cyclotomic case, constructive and non-scanning: either
/// nu = k_l * nu' from the root-power transform when the largest
/// cyclotomic index exceeds the totient threshold B', or nu = (B')! with
/// trace m when it does not (requires m > B). The returned trace is
/// re-verified exactly.
NuCertificate find_nu_cyclotomic(const IntMatrix& a, const Integer& b);

struct DirichletResult {
    std::uint64_t nu = 0;
    double real_sum = 0.0;
};

/// Pigeonhole engine over the 8-sector decomposition of the plane: codes
/// z_j^k by angular sector for k = 1..8^m+1 and returns the smallest gap
/// between equal code vectors, which guarantees
/// Re(S_nu) >= (1/sqrt 2) sum |z_j|^nu.
DirichletResult dirichlet_nu(std::span<const std::complex<double>> zs,
                             std::size_t max_m = 8);

struct NewtonGirardResult {
    int nu = 0;
    Rational value;
};

/// Minimal nu <= deg+1 with S_nu >= 0, over exact rationals.
NewtonGirardResult newton_girard_nu(const RatPolynomial& q);
NewtonGirardResult newton_girard_nu(const IntPolynomial& q);

struct NewtonGirardResultF {
    int nu = 0;
    double value = 0.0;
};

/// Floating variant; accepts S_nu >= -1e-9 as nonnegative.
NewtonGirardResultF newton_girard_nu(const std::vector<double>& ascending_coeffs);

/// Fejer-kernel partial sum P(z) = 1/2 + sum_{v=1..K} (1 - v/(K+1)) z^v,
/// Horner-evaluated; Re P >= 0 on the closed unit disk.
std::complex<double> fejer_value(std::complex<double> z, int k);

/// Exact rational evaluation of the same sum; P(1) = (K+1)/2.
Rational fejer_value_exact(const Rational& x, int k);

} // namespace trh

#endif
