#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

namespace spreadlab {

// Dense row-major square matrix.
template <class T>
class SquareMatrix {
public:
    SquareMatrix() = default;
    explicit SquareMatrix(std::size_t n, T fill = T{}) : n_(n), data_(n * n, fill) {}

    std::size_t order() const noexcept { return n_; }

    T& operator()(std::size_t i, std::size_t j) { return data_[i * n_ + j]; }
    const T& operator()(std::size_t i, std::size_t j) const { return data_[i * n_ + j]; }

    std::span<T> row(std::size_t i) { return {data_.data() + i * n_, n_}; }
    std::span<const T> row(std::size_t i) const { return {data_.data() + i * n_, n_}; }

    const std::vector<T>& data() const noexcept { return data_; }

    friend bool operator==(const SquareMatrix&, const SquareMatrix&) = default;

private:
    std::size_t n_ = 0;
    std::vector<T> data_;
};

using IntMatrix = SquareMatrix<std::int64_t>;

}  // namespace spreadlab
