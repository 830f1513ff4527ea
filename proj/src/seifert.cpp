#include "knotfog/seifert.hpp"

#include <random>
#include <stdexcept>
#include <string>

namespace knotfog {

SeifertMatrix::SeifertMatrix(IntMatrix entries) : entries_(std::move(entries)) {
    if (!entries_.is_square())
        throw std::invalid_argument("Seifert matrix must be square");
    if (entries_.rows() % 2 != 0)
        throw std::invalid_argument("Seifert matrix must have even size, got " + std::to_string(entries_.rows()));
}

BasisChange::BasisChange(IntMatrix entries) : entries_(std::move(entries)) {
    if (!entries_.is_square())
        throw std::invalid_argument("basis change must be square");
    const Integer det = determinant(entries_);
    if (det != 1 && det != -1)
        throw std::invalid_argument("basis change is not unimodular (det = " + det.get_str() + ")");
}

bool BasisChange::is_symplectic() const {
    if (size() % 2 != 0)
        return false;
    const IntMatrix j = standard_form(size() / 2);
    return entries_ * j * entries_.transposed() == j;
}

IntMatrix standard_form(std::size_t genus) {
    IntMatrix j(2 * genus, 2 * genus);
    for (std::size_t k = 0; k < genus; ++k) {
        j(2 * k, 2 * k + 1) = 1;
        j(2 * k + 1, 2 * k) = -1;
    }
    return j;
}

SeifertMatrix theta_matrix(std::int64_t n) {
    if (n < 1)
        throw std::invalid_argument("theta_n requires n >= 1, got " + std::to_string(n));
    const std::size_t size = 2 * static_cast<std::size_t>(n);
    IntMatrix v(size, size);
    for (std::size_t i = 0; i < size; ++i) {
        if (i % 2 == 0) {
            if (i > 0)
                v(i, i - 1) = -2;
            v(i, i + 1) = 2;
        } else {
            v(i, i - 1) = 1;
            if (i + 1 < size)
                v(i, i + 1) = -1;
        }
    }
    return SeifertMatrix(std::move(v));
}

LaurentPoly alexander_polynomial(const SeifertMatrix& v) {
    const IntMatrix& m = v.entries();
    const std::size_t n = m.rows();
    std::vector<std::vector<LaurentPoly>> rows(n, std::vector<LaurentPoly>(n));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            rows[i][j] = LaurentPoly(0, {m(i, j), -m(j, i)});
    return determinant(std::move(rows));
}

SeifertMatrix change_basis(const SeifertMatrix& v, const BasisChange& p) {
    if (p.size() != v.size())
        throw std::invalid_argument("basis change of size " + std::to_string(p.size()) +
                                    " applied to Seifert matrix of size " + std::to_string(v.size()));
    return SeifertMatrix(p.entries() * v.entries() * p.entries().transposed());
}

IntersectionForm intersection_form(const SeifertMatrix& v) {
    IntMatrix form = v.entries() - v.entries().transposed();
    const bool standard = form == standard_form(v.size() / 2);
    return {std::move(form), standard};
}

std::int64_t surface_genus(const SeifertMatrix& v) { return static_cast<std::int64_t>(v.size() / 2); }

BasisChange random_symplectic(std::int64_t genus, std::uint64_t seed, std::size_t length) {
    if (genus < 1)
        throw std::invalid_argument("random_symplectic requires genus >= 1");
    const std::size_t g = static_cast<std::size_t>(genus);
    const std::size_t n = 2 * g;
    std::mt19937_64 rng(seed);
    const auto pick = [&rng](std::size_t k) { return static_cast<std::size_t>(rng() % k); };

    IntMatrix p = IntMatrix::identity(n);
    for (std::size_t step = 0; step < length; ++step) {
        IntMatrix gen = IntMatrix::identity(n);
        const long eps = pick(2) == 0 ? 1 : -1;
        const std::size_t kinds = g >= 2 ? 4 : 2;
        const std::size_t i = pick(g);
        switch (pick(kinds)) {
        case 0: // x_i += eps * y_i
            gen(2 * i, 2 * i + 1) = eps;
            break;
        case 1: // y_i += eps * x_i
            gen(2 * i + 1, 2 * i) = eps;
            break;
        case 2: { // x_i += eps * x_j, y_j -= eps * y_i
            std::size_t j = pick(g - 1);
            if (j >= i)
                ++j;
            gen(2 * i, 2 * j) = eps;
            gen(2 * j + 1, 2 * i + 1) = -eps;
            break;
        }
        default: { // swap blocks i and j
            std::size_t j = pick(g - 1);
            if (j >= i)
                ++j;
            for (std::size_t k : {2 * i, 2 * i + 1, 2 * j, 2 * j + 1})
                gen(k, k) = 0;
            gen(2 * i, 2 * j) = 1;
            gen(2 * i + 1, 2 * j + 1) = 1;
            gen(2 * j, 2 * i) = 1;
            gen(2 * j + 1, 2 * i + 1) = 1;
            break;
        }
        }
        p = gen * p;
    }
    return BasisChange(std::move(p));
}

} // namespace knotfog
