#pragma once

#include <cstdint>
#include <vector>

#include <gmpxx.h>

#include "bireg/field.hpp"

namespace bireg {

// Dense matrix over F_p or Q. Prime-field entries are stored as raw residues.
class Matrix {
public:
    Matrix(Field field, int rows, int cols);

    int rows() const noexcept { return rows_; }
    int cols() const noexcept { return cols_; }
    const Field& field() const noexcept { return field_; }

    Scalar at(int i, int j) const;
    void set(int i, int j, const Scalar& v);
    void add_to(int i, int j, const Scalar& v);
    bool is_zero() const;

    // [A | B]
    static Matrix hconcat(const Matrix& a, const Matrix& b);
    // Columns given as dense vectors.
    static Matrix from_columns(Field field, int rows, const std::vector<std::vector<Scalar>>& cols);

    friend Matrix operator*(const Matrix& a, const Matrix& b);

    long rank() const;
    // Basis of {v : A v = 0}, each of length cols().
    std::vector<std::vector<Scalar>> nullspace() const;
    std::vector<Scalar> column(int j) const;

private:
    Field field_;
    int rows_;
    int cols_;
    std::vector<std::uint32_t> p_;
    std::vector<mpq_class> q_;
};

} // namespace bireg
