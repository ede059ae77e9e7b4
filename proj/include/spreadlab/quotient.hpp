#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "spreadlab/graph.hpp"
#include "spreadlab/linalg.hpp"

namespace spreadlab {

// Ordered list of disjoint nonempty blocks covering 0..n-1.
class Partition {
public:
    Partition(std::size_t n, std::vector<std::vector<int>> blocks);

    // {block, complement}; block must be a nonempty proper subset.
    static Partition two_block(std::size_t n, std::vector<int> block);

    std::size_t universe() const noexcept { return n_; }
    std::size_t block_count() const noexcept { return blocks_.size(); }
    const std::vector<int>& block(std::size_t i) const { return blocks_.at(i); }
    const std::vector<std::vector<int>>& blocks() const noexcept { return blocks_; }

private:
    std::size_t n_;
    std::vector<std::vector<int>> blocks_;
};

// Block-average row sums b_ij = (sum of block (i,j) entries) / n_i, kept exact.
struct QuotientMatrix {
    std::vector<std::size_t> block_sizes;
    IntMatrix block_sums;  // sum of all entries of block (i,j)
    SquareMatrix<Rational> entries;
    bool equitable = false;

    std::size_t order() const noexcept { return block_sizes.size(); }
    Rational operator()(std::size_t i, std::size_t j) const { return entries(i, j); }
    Rational trace() const;
    // Only for order 2.
    Rational determinant() const;
    Matrix2 as_matrix2() const;
};

QuotientMatrix quotient(const IntMatrix& m, const Partition& p);

// The quotient of a symmetric matrix is similar, via diag(sqrt n_i), to a
// symmetric matrix; its eigenvalues are computed from that symmetric form.
Spectrum quotient_spectrum(const QuotientMatrix& b);

struct InterlaceResult {
    bool ok = true;
    std::size_t index = 0;  // 1-based index i of the first violated inequality
    double slack = 0.0;     // amount by which it is violated
};

// Tests lambda_i + tol >= mu_i >= lambda_{n-m+i} - tol for i = 1..m.
InterlaceResult interlaces(const Spectrum& outer, const Spectrum& inner, double tol);

// M with diagonal blocks l_i J + p_i I (size n_i) and off-diagonal blocks s_ij J.
struct BlockSpec {
    std::vector<std::size_t> sizes;
    std::vector<double> l;
    std::vector<double> p;
    SquareMatrix<double> s;  // s(i,j) for i != j; diagonal ignored
};

// sigma(M) = sigma(quotient) joined with p_i repeated n_i - 1 times.
Spectrum block_spectrum(const BlockSpec& spec);
// Expands the block description into the full matrix (used to cross-check).
SymMatrix block_matrix(const BlockSpec& spec);

}  // namespace spreadlab
