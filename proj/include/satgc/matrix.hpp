#pragma once

#include <cstddef>
#include <initializer_list>
#include <span>
#include <string>
#include <vector>

#include "satgc/errors.hpp"

namespace satgc {

// Dense row-major matrix of doubles. Plain value type shared by the data
// generator, the autodiff engine, the Granger pipeline and the metrics.
class Matrix {
  public:
    Matrix() = default;

    Matrix(int rows, int cols)
        : rows_(rows), cols_(cols), data_(static_cast<std::size_t>(rows) * cols, 0.0) {
        check_dims(rows, cols);
    }

    Matrix(int rows, int cols, std::vector<double> values)
        : rows_(rows), cols_(cols), data_(std::move(values)) {
        check_dims(rows, cols);
        if (data_.size() != static_cast<std::size_t>(rows) * cols) {
            throw ShapeError("matrix init: " + std::to_string(data_.size()) +
                             " values for shape " + shape_str(rows, cols));
        }
    }

    // Row-of-rows constructor, mainly for tests and small literals.
    Matrix(std::initializer_list<std::initializer_list<double>> rows) {
        rows_ = static_cast<int>(rows.size());
        cols_ = rows_ == 0 ? 0 : static_cast<int>(rows.begin()->size());
        data_.reserve(static_cast<std::size_t>(rows_) * cols_);
        for (const auto& r : rows) {
            if (static_cast<int>(r.size()) != cols_) {
                throw ShapeError("matrix literal with ragged rows");
            }
            data_.insert(data_.end(), r.begin(), r.end());
        }
    }

    static Matrix identity(int n) {
        Matrix m(n, n);
        for (int i = 0; i < n; ++i) m.at(i, i) = 1.0;
        return m;
    }

    int rows() const { return rows_; }
    int cols() const { return cols_; }
    std::size_t size() const { return data_.size(); }
    bool empty() const { return data_.empty(); }

    double& at(int r, int c) { return data_[static_cast<std::size_t>(r) * cols_ + c]; }
    double at(int r, int c) const { return data_[static_cast<std::size_t>(r) * cols_ + c]; }

    std::span<double> row(int r) { return {data_.data() + static_cast<std::size_t>(r) * cols_, static_cast<std::size_t>(cols_)}; }
    std::span<const double> row(int r) const { return {data_.data() + static_cast<std::size_t>(r) * cols_, static_cast<std::size_t>(cols_)}; }

    std::vector<double>& values() { return data_; }
    const std::vector<double>& values() const { return data_; }

    bool same_shape(const Matrix& o) const { return rows_ == o.rows_ && cols_ == o.cols_; }

    std::string shape_str() const { return shape_str(rows_, cols_); }

    static std::string shape_str(int r, int c) {
        return std::to_string(r) + "x" + std::to_string(c);
    }

    bool operator==(const Matrix& o) const {
        return rows_ == o.rows_ && cols_ == o.cols_ && data_ == o.data_;
    }

  private:
    static void check_dims(int rows, int cols) {
        if (rows < 0 || cols < 0) {
            throw ShapeError("negative matrix dimension " + shape_str(rows, cols));
        }
    }

    int rows_ = 0;
    int cols_ = 0;
    std::vector<double> data_;
};

}  // namespace satgc
