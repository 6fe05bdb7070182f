#pragma once

#include <cstddef>
#include <utility>
#include <vector>

#include "wrec/errors.hpp"

namespace wrec {

/// Dense row-major matrix. Entries carry no arithmetic; semiring operations
/// are applied by the algorithms that use it.
template <class T>
class Matrix {
public:
    Matrix() = default;
    Matrix(std::size_t rows, std::size_t cols, const T& fill = T{})
        : rows_(rows), cols_(cols), data_(rows * cols, fill) {}

    /// Builds from nested rows; every row must have the same length.
    static Matrix from_rows(const std::vector<std::vector<T>>& rows) {
        Matrix m(rows.size(), rows.empty() ? 0 : rows.front().size());
        for (std::size_t i = 0; i < rows.size(); ++i) {
            if (rows[i].size() != m.cols_) {
                throw LengthMismatchError("matrix rows have different lengths");
            }
            for (std::size_t j = 0; j < m.cols_; ++j) m(i, j) = rows[i][j];
        }
        return m;
    }

    std::size_t rows() const noexcept { return rows_; }
    std::size_t cols() const noexcept { return cols_; }
    bool is_square() const noexcept { return rows_ == cols_; }

    // vector<bool> proxies are returned as-is, hence the reference aliases.
    typename std::vector<T>::reference operator()(std::size_t i, std::size_t j) {
        return data_[i * cols_ + j];
    }
    typename std::vector<T>::const_reference operator()(std::size_t i, std::size_t j) const {
        return data_[i * cols_ + j];
    }

    bool operator==(const Matrix&) const = default;

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<T> data_;
};

} // namespace wrec
