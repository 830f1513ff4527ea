#include "knotfog/matrix.hpp"

#include <stdexcept>
#include <utility>

namespace knotfog {

namespace {

bool is_zero(const Integer& x) { return x == 0; }
bool is_zero(const LaurentPoly& x) { return x.is_zero(); }

Integer divide(const Integer& a, const Integer& b) {
    Integer q;
    mpz_divexact(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return q;
}
LaurentPoly divide(const LaurentPoly& a, const LaurentPoly& b) { return exact_divide(a, b); }

// Bareiss elimination over an integral domain with exact division. Each
// step k replaces the trailing block by 2x2 minors divided by the previous
// pivot; the final pivot is the determinant.
template <class Ring>
Ring bareiss(std::vector<std::vector<Ring>> m, const Ring& one) {
    const std::size_t n = m.size();
    if (n == 0)
        return one;
    bool negate = false;
    Ring previous = one;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (is_zero(m[k][k])) {
            std::size_t swap = k + 1;
            while (swap < n && is_zero(m[swap][k]))
                ++swap;
            if (swap == n)
                return Ring{};
            std::swap(m[k], m[swap]);
            negate = !negate;
        }
        for (std::size_t i = k + 1; i < n; ++i) {
            for (std::size_t j = k + 1; j < n; ++j)
                m[i][j] = divide(m[k][k] * m[i][j] - m[i][k] * m[k][j], previous);
        }
        previous = m[k][k];
    }
    Ring det = std::move(m[n - 1][n - 1]);
    return negate ? Ring(-det) : det;
}

} // namespace

IntMatrix::IntMatrix(std::initializer_list<std::initializer_list<long>> rows)
    : rows_(rows.size()), cols_(rows.size() == 0 ? 0 : rows.begin()->size()) {
    data_.reserve(rows_ * cols_);
    for (const auto& row : rows) {
        if (row.size() != cols_)
            throw std::invalid_argument("ragged matrix literal");
        for (long v : row)
            data_.emplace_back(v);
    }
}

IntMatrix IntMatrix::identity(std::size_t n) {
    IntMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i)
        m(i, i) = 1;
    return m;
}

IntMatrix IntMatrix::from_rows(const std::vector<std::vector<Integer>>& rows) {
    IntMatrix m(rows.size(), rows.empty() ? 0 : rows.front().size());
    for (std::size_t i = 0; i < rows.size(); ++i) {
        if (rows[i].size() != m.cols_)
            throw std::invalid_argument("ragged matrix rows");
        for (std::size_t j = 0; j < m.cols_; ++j)
            m(i, j) = rows[i][j];
    }
    return m;
}

IntMatrix IntMatrix::transposed() const {
    IntMatrix t(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j)
            t(j, i) = (*this)(i, j);
    return t;
}

IntMatrix operator*(const IntMatrix& a, const IntMatrix& b) {
    if (a.cols_ != b.rows_)
        throw std::invalid_argument("matrix product dimension mismatch");
    IntMatrix c(a.rows_, b.cols_);
    for (std::size_t i = 0; i < a.rows_; ++i)
        for (std::size_t k = 0; k < a.cols_; ++k) {
            const Integer& aik = a(i, k);
            if (aik == 0)
                continue;
            for (std::size_t j = 0; j < b.cols_; ++j)
                c(i, j) += aik * b(k, j);
        }
    return c;
}

IntMatrix operator-(const IntMatrix& a, const IntMatrix& b) {
    if (a.rows_ != b.rows_ || a.cols_ != b.cols_)
        throw std::invalid_argument("matrix difference dimension mismatch");
    IntMatrix c = a;
    for (std::size_t i = 0; i < c.data_.size(); ++i)
        c.data_[i] -= b.data_[i];
    return c;
}

Integer determinant(const IntMatrix& m) {
    if (!m.is_square())
        throw std::invalid_argument("determinant of a non-square matrix");
    std::vector<std::vector<Integer>> rows(m.rows(), std::vector<Integer>(m.cols()));
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j)
            rows[i][j] = m(i, j);
    return bareiss(std::move(rows), Integer(1));
}

LaurentPoly determinant(std::vector<std::vector<LaurentPoly>> m) {
    for (const auto& row : m)
        if (row.size() != m.size())
            throw std::invalid_argument("determinant of a non-square matrix");
    return bareiss(std::move(m), LaurentPoly::constant(1));
}

} // namespace knotfog
