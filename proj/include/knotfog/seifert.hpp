#pragma once

#include <cstdint>

#include "knotfog/laurent.hpp"
#include "knotfog/matrix.hpp"

namespace knotfog {

/// Seifert matrix of a genus-g surface: square, size 2g (0 allowed, a disc).
/// Basis order is x1, y1, x2, y2, ...
class SeifertMatrix {
public:
    SeifertMatrix() = default;
    // Throws std::invalid_argument unless the matrix is square of even size.
    explicit SeifertMatrix(IntMatrix entries);

    const IntMatrix& entries() const { return entries_; }
    std::size_t size() const { return entries_.rows(); }

    friend bool operator==(const SeifertMatrix&, const SeifertMatrix&) = default;

private:
    IntMatrix entries_;
};

/// Unimodular change of basis for H_1 of the surface; rows are the new
/// basis vectors in terms of the old ones.
class BasisChange {
public:
    // Throws std::invalid_argument unless square with determinant ±1.
    explicit BasisChange(IntMatrix entries);

    const IntMatrix& entries() const { return entries_; }
    std::size_t size() const { return entries_.rows(); }

    // P J P^T = J for the standard form J of matching size.
    bool is_symplectic() const;

private:
    IntMatrix entries_;
};

struct IntersectionForm {
    IntMatrix form;   // V - V^T
    bool is_standard; // form equals the block-diagonal J
};

// Block-diagonal intersection form with 2x2 blocks [[0,1],[-1,0]].
IntMatrix standard_form(std::size_t genus);

// The Seifert matrix of the ribbon pretzel surface V_n: 2n x 2n, odd rows
// (1-based) carry -2 left of the diagonal and 2 right of it, even rows
// carry 1 and -1. Throws std::invalid_argument for n < 1.
SeifertMatrix theta_matrix(std::int64_t n);

// det(V - t V^T) over Z[t]; the empty matrix yields 1.
LaurentPoly alexander_polynomial(const SeifertMatrix& v);

// P V P^T. Throws std::invalid_argument on a size mismatch.
SeifertMatrix change_basis(const SeifertMatrix& v, const BasisChange& p);

IntersectionForm intersection_form(const SeifertMatrix& v);

// Genus of the surface the matrix was read from (size / 2); this is not a
// claim about the knot genus.
std::int64_t surface_genus(const SeifertMatrix& v);

// Product of `length` pseudo-random symplectic generators (elementary
// transvections inside a block, mixing transvections across two blocks,
// and block swaps), deterministic in `seed`. Throws for genus < 1.
BasisChange random_symplectic(std::int64_t genus, std::uint64_t seed, std::size_t length);

} // namespace knotfog
