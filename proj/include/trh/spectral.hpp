#ifndef TRH_SPECTRAL_HPP
#define TRH_SPECTRAL_HPP

#include <complex>
#include <vector>

#include "trh/matrix.hpp"
#include "trh/polynomial.hpp"

namespace trh {

struct RootEstimate {
    std::complex<double> value;
    double radius = 0.0; // first-order residual bound |Q(z)| / |Q'(z)|
};

/// All complex roots of an integer polynomial, with multiplicity and
/// per-root error radii.
struct SpectrumEstimate {
    std::vector<RootEstimate> roots;
    int source_degree = 0;
};

/// Maximum modulus over the root multiset of a monic integer polynomial
/// with nonzero constant term (the house of its roots).
struct HouseValue {
    double value = 1.0;
    double radius = 0.0;
    bool certified_gt_one = false; // value - radius > 1

    /// True when the house is provably within tol of 1 from above.
    bool certified_le(double bound) const { return value + radius <= bound; }
};

/// Roots with multiplicity via exact square-free splitting followed by
/// Aberth-Ehrlich simultaneous iteration on each square-free layer.
/// Throws numerical_failure when the iteration fails to reach the
/// requested radii within the iteration cap (never returns silently
/// inaccurate values).
SpectrumEstimate roots(const IntPolynomial& q, double tol = 1e-9);

/// House of the roots of a monic integer polynomial, q(0) != 0.
HouseValue house(const IntPolynomial& q, double tol = 1e-9);

/// Spectral radius of an integer matrix as house(char_poly(A)). For
/// entrywise nonnegative matrices the result is cross-checked against
/// the row-sum bracket min_row_sum <= rho <= max_row_sum.
double spectral_radius(const IntMatrix& a, double tol = 1e-9);

/// Spectral radius of an entrywise nonnegative matrix from the dense
/// eigensolver, validated against the row-sum bracket. Suited to the
/// large Penner transition matrices where the exact characteristic
/// polynomial route is wasteful.
double perron_radius(const IntMatrix& a, double tol = 1e-9);

/// 1 + (1/d) (loglog d / log d)^3, natural logs; requires d >= 3 so the
/// inner log is positive.
double dobrowolsky_floor(int d);

/// 1 + 4^(-s-2) where 2s conjugates are strictly complex.
double sz_floor(int s);

/// 1 + c / (d log(d)^3), the merged small/large-degree house floor.
double combined_floor(int d, double c);

} // namespace trh

#endif
