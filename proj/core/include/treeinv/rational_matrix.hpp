#pragma once

#include <gmpxx.h>

#include <span>
#include <vector>

#include "treeinv/errors.hpp"

namespace treeinv {

/// Dense matrix over the rationals with exact arithmetic throughout.
/// Rectangular shapes are supported; the library's public surfaces use
/// square symmetric instances.
class RationalMatrix {
public:
    RationalMatrix() = default;
    RationalMatrix(int rows, int cols);

    static RationalMatrix identity(int n);

    int rows() const { return rows_; }
    int cols() const { return cols_; }
    bool is_square() const { return rows_ == cols_; }

    mpq_class& operator()(int i, int j) { return entries_[index(i, j)]; }
    const mpq_class& operator()(int i, int j) const { return entries_[index(i, j)]; }

    RationalMatrix transposed() const;
    RationalMatrix scaled(const mpq_class& factor) const;
    bool is_symmetric() const;
    bool is_zero() const;

    std::vector<mpq_class> apply(std::span<const mpq_class> x) const;

    friend RationalMatrix operator*(const RationalMatrix& a, const RationalMatrix& b);
    friend bool operator==(const RationalMatrix& a, const RationalMatrix& b);

private:
    std::size_t index(int i, int j) const;

    int rows_ = 0;
    int cols_ = 0;
    std::vector<mpq_class> entries_;
};

}  // namespace treeinv
