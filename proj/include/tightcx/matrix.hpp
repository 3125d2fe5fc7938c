#pragma once

#include <cstddef>
#include <vector>

#include "tightcx/field.hpp"
#include "tightcx/rational.hpp"

namespace tightcx {

/// Dense matrix of exact rationals.  Out-of-range access throws; the
/// shape is fixed at construction and never grows silently.
class Matrix {
public:
    Matrix(std::size_t rows, std::size_t cols)
        : rows_(rows), cols_(cols), a_(rows * cols) {}

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    const Rational& at(std::size_t r, std::size_t c) const;
    void set(std::size_t r, std::size_t c, Rational v);

    Matrix transposed() const;

private:
    std::size_t idx(std::size_t r, std::size_t c) const;
    std::size_t rows_, cols_;
    std::vector<Rational> a_;
};

/// Exact rank of M over the given field.  Over F_p every entry must be
/// p-integral (denominator not divisible by p); otherwise InvalidInput.
std::size_t matrix_rank(const Matrix& m, const FieldSpec& field);

/// dim(span U ∩ span W) = rank(U) + rank(W) − rank(U ∪ W).  The basis
/// vectors are coordinate vectors of one common length; a length mismatch
/// throws InvalidInput.
std::size_t subspace_intersection_dim(const std::vector<std::vector<Rational>>& U,
                                      const std::vector<std::vector<Rational>>& W,
                                      const FieldSpec& field);

} // namespace tightcx
