#include "varkit/ktheory.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace varkit {

IntMatrix identity_matrix(std::size_t n) {
    IntMatrix m(n, std::vector<Integer>(n, Integer(0)));
    for (std::size_t i = 0; i < n; ++i)
        m[i][i] = 1;
    return m;
}

IntMatrix matrix_product(const IntMatrix& a, const IntMatrix& b) {
    if (a.empty() || b.empty())
        return {};
    const std::size_t n = a.size(), k = b.size(), p = b[0].size();
    if (a[0].size() != k)
        throw std::invalid_argument("matrix_product: shape mismatch");
    IntMatrix out(n, std::vector<Integer>(p, Integer(0)));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < k; ++j) {
            if (a[i][j] == 0)
                continue;
            for (std::size_t c = 0; c < p; ++c)
                out[i][c] += a[i][j] * b[j][c];
        }
    return out;
}

Integer determinant(const IntMatrix& m) {
    const std::size_t n = m.size();
    for (const auto& row : m)
        if (row.size() != n)
            throw std::invalid_argument("determinant: matrix not square");
    if (n == 0)
        return 1;
    // Bareiss fraction-free elimination; every division is exact.
    IntMatrix a = m;
    Integer prev = 1;
    int sign = 1;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (a[k][k] == 0) {
            std::size_t pivot = k + 1;
            while (pivot < n && a[pivot][k] == 0)
                ++pivot;
            if (pivot == n)
                return 0;
            std::swap(a[k], a[pivot]);
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i) {
            for (std::size_t j = k + 1; j < n; ++j) {
                a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) / prev;
            }
            a[i][k] = 0;
        }
        prev = a[k][k];
    }
    return sign > 0 ? a[n - 1][n - 1] : -a[n - 1][n - 1];
}

namespace {

struct SnfWorker {
    IntMatrix a;
    IntMatrix u;
    IntMatrix v;
    std::size_t rows, cols;

    explicit SnfWorker(const IntMatrix& m) : a(m) {
        rows = a.size();
        cols = rows == 0 ? 0 : a[0].size();
        for (const auto& r : a)
            if (r.size() != cols)
                throw std::invalid_argument("smith_normal_form: ragged matrix");
        u = identity_matrix(rows);
        v = identity_matrix(cols);
    }

    void swap_rows(std::size_t i, std::size_t j) {
        if (i == j)
            return;
        std::swap(a[i], a[j]);
        std::swap(u[i], u[j]);
    }

    void swap_cols(std::size_t i, std::size_t j) {
        if (i == j)
            return;
        for (auto& row : a)
            std::swap(row[i], row[j]);
        for (auto& row : v)
            std::swap(row[i], row[j]);
    }

    void add_row(std::size_t dst, std::size_t src, const Integer& q) {
        // row_dst += q * row_src
        for (std::size_t c = 0; c < cols; ++c)
            a[dst][c] += q * a[src][c];
        for (std::size_t c = 0; c < rows; ++c)
            u[dst][c] += q * u[src][c];
    }

    void add_col(std::size_t dst, std::size_t src, const Integer& q) {
        for (std::size_t r = 0; r < rows; ++r)
            a[r][dst] += q * a[r][src];
        for (std::size_t r = 0; r < cols; ++r)
            v[r][dst] += q * v[r][src];
    }

    void negate_row(std::size_t i) {
        for (auto& x : a[i])
            x = -x;
        for (auto& x : u[i])
            x = -x;
    }

    // Smallest-magnitude nonzero entry of the trailing submatrix, scanning
    // row-major so pivot choice is deterministic.
    bool find_pivot(std::size_t t, std::size_t& pi, std::size_t& pj) const {
        bool found = false;
        Integer best = 0;
        for (std::size_t i = t; i < rows; ++i)
            for (std::size_t j = t; j < cols; ++j) {
                if (a[i][j] == 0)
                    continue;
                Integer mag = abs(a[i][j]);
                if (!found || mag < best) {
                    found = true;
                    best = mag;
                    pi = i;
                    pj = j;
                }
            }
        return found;
    }

    void run() {
        const std::size_t steps = std::min(rows, cols);
        for (std::size_t t = 0; t < steps; ++t) {
            std::size_t pi = t, pj = t;
            if (!find_pivot(t, pi, pj))
                break;
            swap_rows(t, pi);
            swap_cols(t, pj);
            while (true) {
                // Clear column t below the pivot by Euclidean steps.
                bool touched = false;
                for (std::size_t i = t + 1; i < rows; ++i) {
                    while (a[i][t] != 0) {
                        Integer q = a[i][t] / a[t][t];  // truncated division
                        if (q != 0)
                            add_row(i, t, -q);
                        if (a[i][t] != 0) {
                            swap_rows(t, i);  // remainder is strictly smaller
                            touched = true;
                        }
                    }
                }
                for (std::size_t j = t + 1; j < cols; ++j) {
                    while (a[t][j] != 0) {
                        Integer q = a[t][j] / a[t][t];
                        if (q != 0)
                            add_col(j, t, -q);
                        if (a[t][j] != 0) {
                            swap_cols(t, j);
                            touched = true;
                        }
                    }
                }
                if (!touched)
                    break;  // both the row and the column are clear
            }
            if (a[t][t] < 0)
                negate_row(t);
            // Divisibility fix: the pivot must divide the rest of the block.
            bool restart = false;
            for (std::size_t i = t + 1; i < rows && !restart; ++i)
                for (std::size_t j = t + 1; j < cols && !restart; ++j)
                    if (a[i][j] % a[t][t] != 0) {
                        add_row(t, i, 1);
                        restart = true;
                    }
            if (restart)
                --t;  // re-run this pivot; gcd strictly decreases, so this ends
        }
    }
};

}  // namespace

SmithNormalForm smith_normal_form(const IntMatrix& m) {
    SnfWorker w(m);
    w.run();
    SmithNormalForm out{std::move(w.a), std::move(w.u), std::move(w.v)};
#ifndef NDEBUG
    // every certificate self-checks in debug/test builds
    if (!verify_certificate(m, out))
        throw std::logic_error("smith_normal_form produced an invalid certificate");
#endif
    return out;
}

std::vector<Integer> SmithNormalForm::invariant_factors() const {
    std::vector<Integer> out;
    const std::size_t n = diag.size();
    for (std::size_t i = 0; i < n && i < (n ? diag[0].size() : 0); ++i)
        if (diag[i][i] > 1)
            out.push_back(diag[i][i]);
    return out;
}

bool verify_certificate(const IntMatrix& m, const SmithNormalForm& snf) {
    if (matrix_product(matrix_product(snf.U, m), snf.V) != snf.diag)
        return false;
    Integer du = determinant(snf.U);
    Integer dv = determinant(snf.V);
    return (du == 1 || du == -1) && (dv == 1 || dv == -1);
}

FgAbGroup::FgAbGroup(Integer rank, std::vector<Integer> torsion_factors) : rank_(std::move(rank)) {
    if (rank_ < 0)
        throw std::invalid_argument("group rank must be non-negative");
    std::vector<Integer> f;
    for (auto& d : torsion_factors) {
        if (d < 0)
            d = -d;
        if (d == 0)
            throw std::invalid_argument("torsion factor 0 is not a finite factor");
        if (d > 1)
            f.push_back(d);
    }
    if (f.empty())
        return;
    // Renormalize to a divisibility chain via SNF of the diagonal matrix.
    IntMatrix d(f.size(), std::vector<Integer>(f.size(), Integer(0)));
    for (std::size_t i = 0; i < f.size(); ++i)
        d[i][i] = f[i];
    torsion_ = smith_normal_form(d).invariant_factors();
}

bool FgAbGroup::operator==(const FgAbGroup& o) const {
    return rank_ == o.rank_ && torsion_ == o.torsion_;
}

std::string FgAbGroup::render() const {
    std::vector<std::string> parts;
    if (rank_ == 1)
        parts.push_back("Z");
    else if (rank_ > 1)
        parts.push_back("Z^" + to_string(rank_));
    for (const auto& d : torsion_)
        parts.push_back("Z/" + to_string(d));
    if (parts.empty())
        return "0";
    std::string out = parts[0];
    for (std::size_t i = 1; i < parts.size(); ++i)
        out += " (+) " + parts[i];
    return out;
}

FgAbGroup direct_sum(const FgAbGroup& a, const FgAbGroup& b) {
    std::vector<Integer> t = a.torsion();
    t.insert(t.end(), b.torsion().begin(), b.torsion().end());
    return FgAbGroup(a.rank() + b.rank(), std::move(t));
}

std::string ObstructionVerdict::label() const {
    return obstructed ? "Obstructed(" + to_string(factor) + ")" : "NoObstruction";
}

std::string ObstructionVerdict::render() const {
    if (obstructed)
        return label() + ": K0 contains torsion, so no full exceptional collection exists";
    return label() + ": no obstruction from K0 torsion (absence of torsion proves nothing)";
}

ObstructionVerdict fec_obstruction(const FgAbGroup& g) {
    if (g.torsion().empty())
        return ObstructionVerdict{false, 0};
    // In a divisibility chain the first factor is the smallest.
    return ObstructionVerdict{true, g.torsion().front()};
}

}  // namespace varkit
