#ifndef TRH_MATRIX_HPP
#define TRH_MATRIX_HPP

#include <Eigen/Core>

#include <iosfwd>
#include <string>

#include "trh/integer.hpp"
#include "trh/polynomial.hpp"

namespace Eigen {

template <>
struct NumTraits<trh::Integer> {
    using Real = trh::Integer;
    using NonInteger = trh::Integer;
    using Nested = trh::Integer;
    using Literal = long long;
    enum {
        IsComplex = 0,
        IsInteger = 1,
        IsSigned = 1,
        RequireInitialization = 1,
        ReadCost = 8,
        AddCost = 30,
        MulCost = 60
    };
    static inline trh::Integer epsilon() { return trh::Integer(0); }
    static inline trh::Integer dummy_precision() { return trh::Integer(0); }
    static inline int digits10() { return 0; }
};

} // namespace Eigen

namespace trh {

/// Square matrix over arbitrary-precision integers; the carrier of
/// homology actions f_* and of Penner transition matrices.
using IntMatrix = Eigen::Matrix<Integer, Eigen::Dynamic, Eigen::Dynamic>;

/// Parse the plain text matrix format: first non-comment line is the
/// dimension m, followed by m rows of m whitespace-separated decimal
/// integers. Lines starting with '#' are skipped. Errors carry 1-based
/// line/column positions.
IntMatrix parse_matrix(std::istream& in);
IntMatrix parse_matrix(const std::string& text);
IntMatrix load_matrix(const std::string& path);

/// Serialize in the same format (no comments, trailing newline).
std::string format_matrix(const IntMatrix& a);

/// Exact determinant by Bareiss fraction-free elimination.
Integer det(const IntMatrix& a);

/// Exact characteristic polynomial det(zI - A), monic of degree m, by
/// the Faddeev-LeVerrier recurrence (all interior divisions are exact).
IntPolynomial char_poly(const IntMatrix& a);

/// Exact A^nu by binary powering; nu >= 0.
IntMatrix matrix_power(const IntMatrix& a, std::uint64_t nu);

/// Exact Tr(A^nu), nu >= 1. Independent of the power-sum route: used as
/// the oracle against it.
Integer trace_power_direct(const IntMatrix& a, std::uint64_t nu);

/// Standard symplectic form: g diagonal blocks of [[0,1],[-1,0]].
IntMatrix standard_symplectic_form(int g);

/// A^T J A == J test against the standard form. Odd dimension is a
/// contract violation.
bool is_symplectic(const IntMatrix& a);

/// Companion matrix of a monic polynomial; char_poly(companion(p)) == p.
IntMatrix companion(const IntPolynomial& p);

/// Block-diagonal direct sum.
IntMatrix direct_sum(const IntMatrix& a, const IntMatrix& b);

} // namespace trh

#endif
