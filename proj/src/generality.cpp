#include "varkit/generality.hpp"

#include <map>
#include <sstream>
#include <stdexcept>

namespace varkit {

namespace {

// Exponent triples of the fixed monomial bases, graded-lex descending.
constexpr int kDeg2[6][3] = {{2, 0, 0}, {1, 1, 0}, {1, 0, 1}, {0, 2, 0}, {0, 1, 1}, {0, 0, 2}};
constexpr int kDeg4[15][3] = {{4, 0, 0}, {3, 1, 0}, {3, 0, 1}, {2, 2, 0}, {2, 1, 1},
                              {2, 0, 2}, {1, 3, 0}, {1, 2, 1}, {1, 1, 2}, {1, 0, 3},
                              {0, 4, 0}, {0, 3, 1}, {0, 2, 2}, {0, 1, 3}, {0, 0, 4}};

std::size_t deg4_index(int a, int b, int c) {
    for (std::size_t i = 0; i < 15; ++i)
        if (kDeg4[i][0] == a && kDeg4[i][1] == b && kDeg4[i][2] == c)
            return i;
    throw std::logic_error("degree-4 exponent lookup failed");
}

}  // namespace

std::array<ConicCoeffs, 3> SectionPhi::block(std::size_t which) const {
    if (which > 1)
        throw std::invalid_argument("SectionPhi::block: index must be 0 or 1");
    std::array<ConicCoeffs, 3> out;
    for (std::size_t r = 0; r < 3; ++r)
        for (std::size_t c = 0; c < 6; ++c)
            out[r][c] = entries[r][6 * which + c];
    return out;
}

SectionPhi random_section(std::uint64_t seed) {
    DeterministicRng rng(seed);
    SectionPhi phi;
    for (auto& row : phi.entries)
        for (auto& e : row)
            e = Rational(rng.next_in(-9, 9));
    return phi;
}

std::string render_section(const SectionPhi& phi) {
    std::ostringstream out;
    for (const auto& row : phi.entries) {
        for (std::size_t c = 0; c < row.size(); ++c) {
            if (c)
                out << ' ';
            out << to_string(row[c]);
        }
        out << '\n';
    }
    return out.str();
}

SectionPhi parse_section(const std::string& text) {
    std::istringstream in(text);
    SectionPhi phi;
    for (std::size_t r = 0; r < 3; ++r)
        for (std::size_t c = 0; c < 12; ++c) {
            std::string token;
            if (!(in >> token))
                throw std::invalid_argument("section matrix: expected 36 entries, ran out at row " +
                                            std::to_string(r + 1));
            try {
                phi.entries[r][c] = Rational(token);
                phi.entries[r][c].canonicalize();
            } catch (const std::exception&) {
                throw std::invalid_argument("section matrix: bad entry '" + token + "'");
            }
        }
    std::string extra;
    if (in >> extra)
        throw std::invalid_argument("section matrix: trailing data '" + extra + "'");
    return phi;
}

std::size_t rational_matrix_rank(const std::vector<std::vector<Rational>>& m) {
    if (m.empty())
        return 0;
    const std::size_t rows = m.size(), cols = m[0].size();
    // Scale each row integral; row spans are unchanged.
    std::vector<std::vector<Integer>> a(rows, std::vector<Integer>(cols));
    for (std::size_t i = 0; i < rows; ++i) {
        if (m[i].size() != cols)
            throw std::invalid_argument("rational_matrix_rank: ragged matrix");
        Integer lcm = 1;
        for (const auto& x : m[i]) {
            Rational c = x;
            c.canonicalize();
            Integer den = c.get_den();
            Integer g;
            mpz_gcd(g.get_mpz_t(), lcm.get_mpz_t(), den.get_mpz_t());
            lcm = lcm / g * den;
        }
        for (std::size_t j = 0; j < cols; ++j) {
            Rational c = m[i][j] * lcm;
            c.canonicalize();
            a[i][j] = c.get_num();
        }
    }
    // Bareiss fraction-free elimination with row pivoting; every division
    // by the previous pivot is exact.
    std::size_t rank = 0;
    Integer prev = 1;
    for (std::size_t col = 0; col < cols && rank < rows; ++col) {
        std::size_t pivot = rank;
        while (pivot < rows && a[pivot][col] == 0)
            ++pivot;
        if (pivot == rows)
            continue;
        std::swap(a[rank], a[pivot]);
        for (std::size_t i = rank + 1; i < rows; ++i) {
            for (std::size_t j = col + 1; j < cols; ++j)
                a[i][j] = (a[i][j] * a[rank][col] - a[i][col] * a[rank][j]) / prev;
            a[i][col] = 0;
        }
        prev = a[rank][col];
        ++rank;
    }
    return rank;
}

std::vector<std::vector<Rational>> conic_multiplication_matrix(const ConicCoeffs& q1,
                                                               const ConicCoeffs& q2,
                                                               const ConicCoeffs& q3) {
    const std::array<const ConicCoeffs*, 3> qs = {&q1, &q2, &q3};
    std::vector<std::vector<Rational>> m(18, std::vector<Rational>(15, Rational(0)));
    for (std::size_t which = 0; which < 3; ++which)
        for (std::size_t mono = 0; mono < 6; ++mono) {
            auto& row = m[which * 6 + mono];
            for (std::size_t j = 0; j < 6; ++j) {
                const Rational& c = (*qs[which])[j];
                if (c == 0)
                    continue;
                const std::size_t col = deg4_index(kDeg2[mono][0] + kDeg2[j][0],
                                                   kDeg2[mono][1] + kDeg2[j][1],
                                                   kDeg2[mono][2] + kDeg2[j][2]);
                row[col] += c;
            }
        }
    return m;
}

bool conics_common_zero_empty(const ConicCoeffs& q1, const ConicCoeffs& q2,
                              const ConicCoeffs& q3) {
    return rational_matrix_rank(conic_multiplication_matrix(q1, q2, q3)) == 15;
}

std::pair<bool, bool> check_disjoint_from_exceptional(const SectionPhi& phi) {
    const auto b0 = phi.block(0);
    const auto b1 = phi.block(1);
    return {conics_common_zero_empty(b0[0], b0[1], b0[2]),
            conics_common_zero_empty(b1[0], b1[1], b1[2])};
}

ConicCoeffs conic_linear_substitution(const ConicCoeffs& q,
                                      const std::array<std::array<Rational, 3>, 3>& A) {
    // Gram matrix of q: x^T Q x with Q symmetric.
    const Rational half(1, 2);
    Rational Q[3][3] = {{q[0], q[1] * half, q[2] * half},
                        {q[1] * half, q[3], q[4] * half},
                        {q[2] * half, q[4] * half, q[5]}};
    Rational R[3][3];
    for (std::size_t i = 0; i < 3; ++i)
        for (std::size_t j = 0; j < 3; ++j) {
            R[i][j] = 0;
            for (std::size_t k = 0; k < 3; ++k)
                for (std::size_t l = 0; l < 3; ++l)
                    R[i][j] += A[k][i] * Q[k][l] * A[l][j];
        }
    ConicCoeffs out = {R[0][0], R[0][1] * 2, R[0][2] * 2, R[1][1], R[1][2] * 2, R[2][2]};
    for (auto& c : out)
        c.canonicalize();
    return out;
}

namespace {

ConicCoeffs monomial_conic(std::size_t index) {
    ConicCoeffs q{};
    q.fill(Rational(0));
    q[index] = 1;
    return q;
}

void write_block(SectionPhi& phi, std::size_t which, const std::array<ConicCoeffs, 3>& qs) {
    for (std::size_t r = 0; r < 3; ++r)
        for (std::size_t c = 0; c < 6; ++c)
            phi.entries[r][6 * which + c] = qs[r][c];
}

}  // namespace

SectionPhi degenerate_phi_block1() {
    SectionPhi phi;
    for (auto& row : phi.entries)
        row.fill(Rational(0));
    // x^2, xy, xz all vanish along x = 0.
    write_block(phi, 0, {monomial_conic(0), monomial_conic(1), monomial_conic(2)});
    write_block(phi, 1, {monomial_conic(0), monomial_conic(3), monomial_conic(5)});
    return phi;
}

SectionPhi degenerate_phi_block2() {
    SectionPhi phi;
    for (auto& row : phi.entries)
        row.fill(Rational(0));
    write_block(phi, 0, {monomial_conic(0), monomial_conic(3), monomial_conic(5)});
    return phi;
}

}  // namespace varkit
