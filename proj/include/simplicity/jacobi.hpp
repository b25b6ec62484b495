#pragma once

#include <cstddef>
#include <vector>

namespace simplicity {

/// Dense square matrix, row-major.
class SquareMatrix {
public:
    SquareMatrix() = default;
    explicit SquareMatrix(std::size_t n, double fill = 0.0) : n_(n), data_(n * n, fill) {}

    [[nodiscard]] std::size_t size() const { return n_; }
    double& operator()(std::size_t i, std::size_t j) { return data_[i * n_ + j]; }
    double operator()(std::size_t i, std::size_t j) const { return data_[i * n_ + j]; }
    [[nodiscard]] const std::vector<double>& data() const { return data_; }

    [[nodiscard]] double trace() const;
    [[nodiscard]] bool is_symmetric(double tol = 0.0) const;

private:
    std::size_t n_ = 0;
    std::vector<double> data_;
};

struct JacobiOptions {
    double off_diagonal_tolerance = 1e-13;
    int max_sweeps = 100;
};

struct SymmetricEigen {
    std::vector<double> values;  ///< ascending
    SquareMatrix vectors;        ///< column k is the eigenvector of values[k]
    int sweeps = 0;
};

/// Cyclic Jacobi rotations over the upper triangle in row order until the
/// off-diagonal Frobenius norm drops below the tolerance.
/// Throws std::invalid_argument for non-symmetric input and ConvergenceError
/// at the sweep cap.
SymmetricEigen jacobi_eigen(SquareMatrix a, const JacobiOptions& options = {});

}  // namespace simplicity
