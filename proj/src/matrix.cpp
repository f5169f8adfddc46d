#include "trh/matrix.hpp"

#include <cctype>
#include <fstream>
#include <sstream>
#include <vector>

namespace trh {

namespace {

struct Token {
    std::string text;
    int line;
    int column;
};

// Tokenize one content line into integer tokens, validating characters.
std::vector<Token> tokenize_line(const std::string& line, int line_no) {
    std::vector<Token> out;
    std::size_t i = 0;
    while (i < line.size()) {
        if (std::isspace(static_cast<unsigned char>(line[i]))) { ++i; continue; }
        const std::size_t start = i;
        while (i < line.size() && !std::isspace(static_cast<unsigned char>(line[i]))) ++i;
        out.push_back({line.substr(start, i - start), line_no, static_cast<int>(start) + 1});
    }
    return out;
}

Integer parse_int_token(const Token& t) {
    const std::string& s = t.text;
    std::size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
    if (i == s.size())
        throw parse_error("expected an integer, got '" + s + "'", t.line, t.column);
    for (std::size_t j = i; j < s.size(); ++j)
        if (!std::isdigit(static_cast<unsigned char>(s[j])))
            throw parse_error("non-integer token '" + s + "'", t.line,
                              t.column + static_cast<int>(j));
    return Integer(s);
}

} // namespace

IntMatrix parse_matrix(std::istream& in) {
    std::string line;
    int line_no = 0;
    long long dim = -1;

    auto next_content_line = [&](std::vector<Token>& tokens) -> bool {
        while (std::getline(in, line)) {
            ++line_no;
            if (!line.empty() && line[0] == '#') continue;
            tokens = tokenize_line(line, line_no);
            if (!tokens.empty()) return true;
        }
        return false;
    };

    std::vector<Token> tokens;
    if (!next_content_line(tokens))
        throw parse_error("empty input: expected dimension line", line_no + 1, 1);
    if (tokens.size() != 1)
        throw parse_error("dimension line must hold a single integer", tokens[1].line,
                          tokens[1].column);
    const Integer dim_val = parse_int_token(tokens[0]);
    if (dim_val < Integer(1) || dim_val > Integer(100000))
        throw parse_error("dimension out of range: " + dim_val.str(), tokens[0].line,
                          tokens[0].column);
    dim = dim_val.to_int64();

    IntMatrix a(dim, dim);
    for (long long r = 0; r < dim; ++r) {
        if (!next_content_line(tokens))
            throw parse_error("unexpected end of input: expected row " + std::to_string(r + 1),
                              line_no + 1, 1);
        if (static_cast<long long>(tokens.size()) != dim)
            throw parse_error("row " + std::to_string(r + 1) + " has " +
                                  std::to_string(tokens.size()) + " entries, expected " +
                                  std::to_string(dim),
                              tokens[0].line, tokens[0].column);
        for (long long c = 0; c < dim; ++c)
            a(r, c) = parse_int_token(tokens[static_cast<std::size_t>(c)]);
    }
    if (next_content_line(tokens))
        throw parse_error("trailing content after matrix rows", tokens[0].line,
                          tokens[0].column);
    return a;
}

IntMatrix parse_matrix(const std::string& text) {
    std::istringstream in(text);
    return parse_matrix(in);
}

IntMatrix load_matrix(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw parse_error("cannot open matrix file: " + path, 0, 0);
    return parse_matrix(in);
}

std::string format_matrix(const IntMatrix& a) {
    std::ostringstream os;
    os << a.rows() << "\n";
    for (Eigen::Index r = 0; r < a.rows(); ++r) {
        for (Eigen::Index c = 0; c < a.cols(); ++c) {
            if (c) os << " ";
            os << a(r, c);
        }
        os << "\n";
    }
    return os.str();
}

Integer det(const IntMatrix& a) {
    const Eigen::Index n = a.rows();
    if (n != a.cols()) throw contract_violation("det: matrix must be square");
    if (n == 0) return Integer(1);

    IntMatrix m = a;
    Integer prev(1);
    int sign = 1;
    for (Eigen::Index k = 0; k + 1 < n; ++k) {
        if (m(k, k).is_zero()) {
            Eigen::Index swap_row = -1;
            for (Eigen::Index r = k + 1; r < n; ++r)
                if (!m(r, k).is_zero()) { swap_row = r; break; }
            if (swap_row < 0) return Integer(0);
            m.row(k).swap(m.row(swap_row));
            sign = -sign;
        }
        for (Eigen::Index i = k + 1; i < n; ++i) {
            for (Eigen::Index j = k + 1; j < n; ++j)
                m(i, j) = exact_div(m(k, k) * m(i, j) - m(i, k) * m(k, j), prev);
            m(i, k) = Integer(0);
        }
        prev = m(k, k);
    }
    Integer d = m(n - 1, n - 1);
    return sign < 0 ? -d : d;
}

IntPolynomial char_poly(const IntMatrix& a) {
    const Eigen::Index n = a.rows();
    if (n != a.cols()) throw contract_violation("char_poly: matrix must be square");

    // Faddeev-LeVerrier: N_1 = A, c_k = -tr(N_k)/k, N_{k+1} = A(N_k + c_k I).
    std::vector<Integer> c(static_cast<std::size_t>(n) + 1, Integer(0));
    c[static_cast<std::size_t>(n)] = Integer(1); // monic leading coefficient
    IntMatrix nk = a;
    for (Eigen::Index k = 1; k <= n; ++k) {
        Integer ck = exact_div(-nk.trace(), Integer(static_cast<long long>(k)));
        c[static_cast<std::size_t>(n - k)] = ck;
        if (k < n) {
            IntMatrix shifted = nk;
            for (Eigen::Index i = 0; i < n; ++i) shifted(i, i) += ck;
            nk = a * shifted;
        }
    }
    return IntPolynomial(std::move(c));
}

IntMatrix matrix_power(const IntMatrix& a, std::uint64_t nu) {
    if (a.rows() != a.cols()) throw contract_violation("matrix_power: matrix must be square");
    IntMatrix result = IntMatrix::Identity(a.rows(), a.cols());
    IntMatrix base = a;
    while (nu) {
        if (nu & 1) result = result * base;
        nu >>= 1;
        if (nu) base = base * base;
    }
    return result;
}

Integer trace_power_direct(const IntMatrix& a, std::uint64_t nu) {
    if (nu == 0) throw contract_violation("trace_power_direct: exponent must be >= 1");
    return matrix_power(a, nu).trace();
}

IntMatrix standard_symplectic_form(int g) {
    if (g < 1) throw contract_violation("standard_symplectic_form: g must be >= 1");
    IntMatrix j = IntMatrix::Zero(2 * g, 2 * g);
    for (int b = 0; b < g; ++b) {
        j(2 * b, 2 * b + 1) = Integer(1);
        j(2 * b + 1, 2 * b) = Integer(-1);
    }
    return j;
}

bool is_symplectic(const IntMatrix& a) {
    const Eigen::Index n = a.rows();
    if (n != a.cols()) throw contract_violation("is_symplectic: matrix must be square");
    if (n % 2 != 0)
        throw contract_violation("is_symplectic: dimension must be even, got " +
                                 std::to_string(n));
    const IntMatrix j = standard_symplectic_form(static_cast<int>(n / 2));
    const IntMatrix at = a.transpose();
    const IntMatrix ja = j * a;
    const IntMatrix form = at * ja;
    return form == j;
}

IntMatrix companion(const IntPolynomial& p) {
    if (!p.is_monic()) throw contract_violation("companion: polynomial must be monic");
    const int n = p.degree();
    if (n < 1) throw contract_violation("companion: degree must be >= 1");
    IntMatrix c = IntMatrix::Zero(n, n);
    for (int i = 1; i < n; ++i) c(i, i - 1) = Integer(1);
    for (int i = 0; i < n; ++i) c(i, n - 1) = -p.coeff(i);
    return c;
}

IntMatrix direct_sum(const IntMatrix& a, const IntMatrix& b) {
    IntMatrix out = IntMatrix::Zero(a.rows() + b.rows(), a.cols() + b.cols());
    out.block(0, 0, a.rows(), a.cols()) = a;
    out.block(a.rows(), a.cols(), b.rows(), b.cols()) = b;
    return out;
}

} // namespace trh
