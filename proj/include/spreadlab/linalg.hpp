#pragma once

#include <array>
#include <cstddef>
#include <utility>
#include <vector>

#include "spreadlab/matrix.hpp"

namespace spreadlab {

// Real symmetric matrix. Every constructor leaves entries(i,j) == entries(j,i)
// bit-for-bit: off-diagonal pairs are replaced by their average.
class SymMatrix {
public:
    SymMatrix() = default;
    explicit SymMatrix(std::size_t n) : m_(n, 0.0) {}
    explicit SymMatrix(const SquareMatrix<double>& m);
    explicit SymMatrix(const IntMatrix& m);

    static SymMatrix identity(std::size_t n);

    std::size_t order() const noexcept { return m_.order(); }
    double operator()(std::size_t i, std::size_t j) const { return m_(i, j); }
    void set(std::size_t i, std::size_t j, double value) {
        m_(i, j) = value;
        m_(j, i) = value;
    }

    double trace() const;
    double frobenius_norm() const;
    // Rows/columns `keep` (in that order).
    SymMatrix principal_submatrix(const std::vector<std::size_t>& keep) const;

    const SquareMatrix<double>& dense() const noexcept { return m_; }

private:
    SquareMatrix<double> m_;
};

// Eigenvalues sorted in descending order.
class Spectrum {
public:
    static constexpr double kGroupTolerance = 1e-8;

    Spectrum() = default;
    explicit Spectrum(std::vector<double> values);  // sorts

    const std::vector<double>& values() const noexcept { return values_; }
    std::size_t size() const noexcept { return values_.size(); }
    double largest() const { return values_.front(); }
    double smallest() const { return values_.back(); }
    double spread() const { return values_.empty() ? 0.0 : largest() - smallest(); }
    double sum() const;

    // (value, multiplicity) with consecutive values within `tol` merged.
    std::vector<std::pair<double, int>> groups(double tol = kGroupTolerance) const;

private:
    std::vector<double> values_;
};

struct JacobiOptions {
    double tol = 1e-12;  // relative to the Frobenius norm of the input
    int max_sweeps = 100;
};

// Cyclic Jacobi rotations until the off-diagonal Frobenius norm drops below
// tol * ||m||_F. Throws numeric_error after max_sweeps.
Spectrum eigenvalues_symmetric(const SymMatrix& m, JacobiOptions opts = {});

using Matrix2 = std::array<std::array<double, 2>, 2>;

// Roots (l1 >= l2) of x^2 - tr x + det for a 2x2 matrix with real spectrum.
// The discriminant is evaluated as (a-d)^2 + 4bc; negative -> numeric_error.
std::pair<double, double> eig2_real(const Matrix2& b);

}  // namespace spreadlab
