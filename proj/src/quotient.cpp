#include "spreadlab/quotient.hpp"

#include <algorithm>
#include <cmath>

#include "spreadlab/error.hpp"

namespace spreadlab {

Partition::Partition(std::size_t n, std::vector<std::vector<int>> blocks) : n_(n), blocks_(std::move(blocks)) {
    std::vector<char> seen(n, 0);
    std::size_t covered = 0;
    for (const auto& b : blocks_) {
        if (b.empty()) throw invalid_argument("partition has an empty block");
        for (int v : b) {
            if (v < 0 || static_cast<std::size_t>(v) >= n)
                throw invalid_argument("partition vertex " + std::to_string(v) + " out of range");
            if (seen[v]++) throw invalid_argument("partition blocks overlap at vertex " + std::to_string(v));
            ++covered;
        }
    }
    if (covered != n) throw invalid_argument("partition does not cover every vertex");
}

Partition Partition::two_block(std::size_t n, std::vector<int> block) {
    std::vector<char> in(n, 0);
    for (int v : block)
        if (v >= 0 && static_cast<std::size_t>(v) < n) in[v] = 1;
    std::vector<int> rest;
    for (std::size_t v = 0; v < n; ++v)
        if (!in[v]) rest.push_back(static_cast<int>(v));
    if (rest.empty()) throw degenerate_error("two-block partition has an empty complement");
    return Partition(n, {std::move(block), std::move(rest)});
}

Rational QuotientMatrix::trace() const {
    Rational t = 0;
    for (std::size_t i = 0; i < order(); ++i) t += entries(i, i);
    return t;
}

Rational QuotientMatrix::determinant() const {
    if (order() != 2) throw invalid_argument("determinant() is only provided for 2x2 quotients");
    return entries(0, 0) * entries(1, 1) - entries(0, 1) * entries(1, 0);
}

Matrix2 QuotientMatrix::as_matrix2() const {
    if (order() != 2) throw invalid_argument("as_matrix2() needs a 2x2 quotient");
    Matrix2 m{};
    for (std::size_t i = 0; i < 2; ++i)
        for (std::size_t j = 0; j < 2; ++j) m[i][j] = boost::rational_cast<double>(entries(i, j));
    return m;
}

QuotientMatrix quotient(const IntMatrix& m, const Partition& p) {
    if (m.order() != p.universe()) throw invalid_argument("partition size does not match matrix order");
    const std::size_t t = p.block_count();
    QuotientMatrix q;
    q.entries = SquareMatrix<Rational>(t);
    q.block_sums = IntMatrix(t);
    q.equitable = true;
    for (std::size_t i = 0; i < t; ++i) q.block_sizes.push_back(p.block(i).size());
    for (std::size_t i = 0; i < t; ++i) {
        for (std::size_t j = 0; j < t; ++j) {
            std::int64_t total = 0;
            std::optional<std::int64_t> first_row;
            for (int r : p.block(i)) {
                std::int64_t row = 0;
                for (int c : p.block(j)) row += m(r, c);
                total += row;
                if (!first_row) first_row = row;
                else if (*first_row != row) q.equitable = false;
            }
            q.block_sums(i, j) = total;
            q.entries(i, j) = Rational(total, static_cast<std::int64_t>(p.block(i).size()));
        }
    }
    return q;
}

Spectrum quotient_spectrum(const QuotientMatrix& b) {
    const std::size_t t = b.order();
    SymMatrix s(t);
    for (std::size_t i = 0; i < t; ++i) {
        s.set(i, i, boost::rational_cast<double>(b(i, i)));
        for (std::size_t j = i + 1; j < t; ++j) {
            // sqrt(n_i/n_j) b_ij == sqrt(b_ij b_ji) when n_i b_ij = n_j b_ji.
            const double scale = std::sqrt(static_cast<double>(b.block_sizes[i]) / b.block_sizes[j]);
            s.set(i, j, scale * boost::rational_cast<double>(b(i, j)));
        }
    }
    return eigenvalues_symmetric(s);
}

InterlaceResult interlaces(const Spectrum& outer, const Spectrum& inner, double tol) {
    const std::size_t n = outer.size();
    const std::size_t m = inner.size();
    if (m >= n) throw invalid_argument("interlacing needs the inner spectrum to be strictly shorter");
    const auto& lam = outer.values();
    const auto& mu = inner.values();
    for (std::size_t i = 0; i < m; ++i) {
        const double upper = mu[i] - (lam[i] + tol);
        if (upper > 0.0) return {false, i + 1, upper};
        const double lower = (lam[n - m + i] - tol) - mu[i];
        if (lower > 0.0) return {false, i + 1, lower};
    }
    return {};
}

namespace {

void check_spec(const BlockSpec& spec) {
    const std::size_t t = spec.sizes.size();
    if (spec.l.size() != t || spec.p.size() != t || spec.s.order() != t)
        throw invalid_argument("block spec arrays disagree on the number of blocks");
    for (std::size_t i = 0; i < t; ++i) {
        if (spec.sizes[i] == 0) throw invalid_argument("block sizes must be >= 1");
        for (std::size_t j = i + 1; j < t; ++j)
            if (spec.s(i, j) != spec.s(j, i)) throw invalid_argument("block spec is not symmetric");
    }
}

}  // namespace

Spectrum block_spectrum(const BlockSpec& spec) {
    check_spec(spec);
    const std::size_t t = spec.sizes.size();
    // Symmetrised quotient: diagonal l_i n_i + p_i, off-diagonal s_ij sqrt(n_i n_j).
    SymMatrix b(t);
    for (std::size_t i = 0; i < t; ++i) {
        b.set(i, i, spec.l[i] * static_cast<double>(spec.sizes[i]) + spec.p[i]);
        for (std::size_t j = i + 1; j < t; ++j)
            b.set(i, j, spec.s(i, j) * std::sqrt(static_cast<double>(spec.sizes[i]) * spec.sizes[j]));
    }
    std::vector<double> values = eigenvalues_symmetric(b).values();
    for (std::size_t i = 0; i < t; ++i) values.insert(values.end(), spec.sizes[i] - 1, spec.p[i]);
    return Spectrum(std::move(values));
}

SymMatrix block_matrix(const BlockSpec& spec) {
    check_spec(spec);
    std::vector<std::size_t> offset{0};
    for (auto sz : spec.sizes) offset.push_back(offset.back() + sz);
    SymMatrix m(offset.back());
    for (std::size_t bi = 0; bi < spec.sizes.size(); ++bi) {
        for (std::size_t bj = bi; bj < spec.sizes.size(); ++bj) {
            for (std::size_t r = offset[bi]; r < offset[bi + 1]; ++r) {
                for (std::size_t c = offset[bj]; c < offset[bj + 1]; ++c) {
                    if (c < r) continue;
                    double v = bi == bj ? spec.l[bi] + (r == c ? spec.p[bi] : 0.0) : spec.s(bi, bj);
                    m.set(r, c, v);
                }
            }
        }
    }
    return m;
}

}  // namespace spreadlab
