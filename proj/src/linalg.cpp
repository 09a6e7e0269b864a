#include "sandpile/linalg.hpp"

#include <algorithm>
#include <sstream>

namespace sandpile {

IntMatrix::IntMatrix(int rows, int cols) : rows_(rows), cols_(cols) {
    if (rows < 0 || cols < 0) throw std::invalid_argument("IntMatrix: negative dimension");
    e_.assign(static_cast<size_t>(rows) * cols, Int(0));
}

IntMatrix::IntMatrix(int rows, int cols, std::vector<Int> entries) : rows_(rows), cols_(cols), e_(std::move(entries)) {
    if (rows < 0 || cols < 0) throw std::invalid_argument("IntMatrix: negative dimension");
    if (e_.size() != static_cast<size_t>(rows) * cols)
        throw std::invalid_argument("IntMatrix: entry count does not match dimensions");
}

IntMatrix IntMatrix::identity(int n) {
    IntMatrix m(n, n);
    for (int i = 0; i < n; ++i) m(i, i) = 1;
    return m;
}

IntMatrix IntMatrix::diagonal(const std::vector<Int>& d) {
    IntMatrix m(static_cast<int>(d.size()), static_cast<int>(d.size()));
    for (size_t i = 0; i < d.size(); ++i) m(static_cast<int>(i), static_cast<int>(i)) = d[i];
    return m;
}

IntMatrix IntMatrix::augmented(const std::vector<std::vector<Int>>& extra_cols) const {
    for (const auto& col : extra_cols)
        if (col.size() != static_cast<size_t>(rows_))
            throw std::invalid_argument("augmented: column length does not match row count");
    IntMatrix m(rows_, cols_ + static_cast<int>(extra_cols.size()));
    for (int r = 0; r < rows_; ++r) {
        for (int c = 0; c < cols_; ++c) m(r, c) = (*this)(r, c);
        for (size_t k = 0; k < extra_cols.size(); ++k) m(r, cols_ + static_cast<int>(k)) = extra_cols[k][r];
    }
    return m;
}

SingularMatrixError::SingularMatrixError(int free_rank)
    : std::domain_error("cokernel is infinite: free rank " + std::to_string(free_rank)), free_rank_(free_rank) {}

namespace {

void swap_rows(IntMatrix& a, int i, int j) {
    if (i == j) return;
    for (int c = 0; c < a.cols(); ++c) std::swap(a(i, c), a(j, c));
}

void swap_cols(IntMatrix& a, int i, int j) {
    if (i == j) return;
    for (int r = 0; r < a.rows(); ++r) std::swap(a(r, i), a(r, j));
}

}  // namespace

std::vector<Int> smith_normal_form(IntMatrix a) {
    const int m = a.rows(), n = a.cols();
    const int d = std::min(m, n);
    std::vector<Int> diag(d, Int(0));

    for (int t = 0; t < d; ++t) {
        for (;;) {
            // smallest nonzero |entry| in the trailing submatrix, row-major tie-break
            int pr = -1, pc = -1;
            for (int i = t; i < m; ++i)
                for (int j = t; j < n; ++j) {
                    if (a(i, j) == 0) continue;
                    if (pr < 0 || mpz_cmpabs(a(i, j).get_mpz_t(), a(pr, pc).get_mpz_t()) < 0) {
                        pr = i;
                        pc = j;
                    }
                }
            if (pr < 0) return diag;  // trailing submatrix is zero; remaining diagonal stays 0

            swap_rows(a, t, pr);
            swap_cols(a, t, pc);

            for (int i = t + 1; i < m; ++i) {
                if (a(i, t) == 0) continue;
                Int q = a(i, t) / a(t, t);
                if (q != 0)
                    for (int c = t; c < n; ++c) a(i, c) -= q * a(t, c);
            }
            for (int j = t + 1; j < n; ++j) {
                if (a(t, j) == 0) continue;
                Int q = a(t, j) / a(t, t);
                if (q != 0)
                    for (int r = t; r < m; ++r) a(r, j) -= q * a(r, t);
            }

            bool cleared = true;
            for (int i = t + 1; i < m && cleared; ++i) cleared = (a(i, t) == 0);
            for (int j = t + 1; j < n && cleared; ++j) cleared = (a(t, j) == 0);
            if (!cleared) continue;  // remainders became the new, smaller pivot candidates

            // pivot must divide every remaining entry; if not, pull the
            // offending row up and keep reducing
            int br = -1;
            for (int i = t + 1; i < m && br < 0; ++i)
                for (int j = t + 1; j < n && br < 0; ++j)
                    if (a(i, j) % a(t, t) != 0) br = i;
            if (br >= 0) {
                for (int c = t; c < n; ++c) a(t, c) += a(br, c);
                continue;
            }
            break;
        }
        diag[t] = abs(a(t, t));
    }
    return diag;
}

Int determinant(IntMatrix a) {
    if (a.rows() != a.cols()) throw std::invalid_argument("determinant: matrix is not square");
    const int n = a.rows();
    if (n == 0) return 1;
    Int prev = 1;
    int sign = 1;
    for (int k = 0; k + 1 < n; ++k) {
        if (a(k, k) == 0) {
            int r = -1;
            for (int i = k + 1; i < n && r < 0; ++i)
                if (a(i, k) != 0) r = i;
            if (r < 0) return 0;
            swap_rows(a, k, r);
            sign = -sign;
        }
        for (int i = k + 1; i < n; ++i)
            for (int j = k + 1; j < n; ++j) {
                Int num = a(i, j) * a(k, k) - a(i, k) * a(k, j);
                mpz_divexact(a(i, j).get_mpz_t(), num.get_mpz_t(), prev.get_mpz_t());
            }
        prev = a(k, k);
    }
    return sign > 0 ? a(n - 1, n - 1) : Int(-a(n - 1, n - 1));
}

AbelianGroup AbelianGroup::from_factors(std::vector<Int> factors) {
    for (const Int& f : factors)
        if (f < 1) throw std::invalid_argument("AbelianGroup: factors must be positive");
    std::erase(factors, Int(1));
    // pairwise (gcd, lcm) replacement until every pair divides
    bool changed = true;
    while (changed) {
        changed = false;
        for (size_t i = 0; i < factors.size(); ++i)
            for (size_t j = i + 1; j < factors.size(); ++j) {
                Int g = gcd(factors[i], factors[j]);
                if (g == factors[i] || g == factors[j]) continue;
                Int l = factors[i] / g * factors[j];
                factors[i] = g;
                factors[j] = l;
                changed = true;
            }
    }
    std::erase(factors, Int(1));
    std::sort(factors.begin(), factors.end());
    AbelianGroup out;
    out.invariant_factors = std::move(factors);
    return out;
}

Int AbelianGroup::order() const {
    Int o = 1;
    for (const Int& f : invariant_factors) o *= f;
    return o;
}

std::string AbelianGroup::to_string() const {
    if (invariant_factors.empty()) return "trivial";
    std::ostringstream out;
    size_t i = 0;
    bool first = true;
    while (i < invariant_factors.size()) {
        size_t j = i;
        while (j < invariant_factors.size() && invariant_factors[j] == invariant_factors[i]) ++j;
        if (!first) out << " x ";
        out << "Z_" << invariant_factors[i].get_str();
        if (j - i > 1) out << "^" << (j - i);
        first = false;
        i = j;
    }
    return out.str();
}

AbelianGroup cokernel(const IntMatrix& m) {
    if (m.rows() != m.cols()) throw std::invalid_argument("cokernel: matrix is not square");
    auto diag = smith_normal_form(m);
    int free_rank = 0;
    for (const Int& d : diag)
        if (d == 0) ++free_rank;
    if (free_rank > 0) throw SingularMatrixError(free_rank);
    AbelianGroup g;
    for (Int& d : diag)
        if (d > 1) g.invariant_factors.push_back(std::move(d));
    return g;
}

bool is_full_image(const IntMatrix& m, const std::vector<std::vector<Int>>& extra_cols) {
    if (m.rows() != m.cols()) throw std::invalid_argument("is_full_image: matrix is not square");
    auto diag = smith_normal_form(m.augmented(extra_cols));
    for (const Int& d : diag)
        if (d != 1) return false;
    return true;
}

bool image_contains(const IntMatrix& m, const std::vector<Int>& col) {
    Int det = determinant(m);
    if (det == 0) throw std::invalid_argument("image_contains: matrix is singular");
    auto diag = smith_normal_form(m.augmented({col}));
    Int prod = 1;
    for (const Int& d : diag) prod *= d;
    return prod == abs(det);
}

}  // namespace sandpile
