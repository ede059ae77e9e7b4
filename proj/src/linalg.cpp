#include "spreadlab/linalg.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <numeric>

#include "spreadlab/error.hpp"

namespace spreadlab {

SymMatrix::SymMatrix(const SquareMatrix<double>& m) : m_(m) {
    const auto n = order();
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j) set(i, j, 0.5 * (m(i, j) + m(j, i)));
}

SymMatrix::SymMatrix(const IntMatrix& m) : m_(m.order(), 0.0) {
    const auto n = order();
    for (std::size_t i = 0; i < n; ++i) {
        m_(i, i) = static_cast<double>(m(i, i));
        for (std::size_t j = i + 1; j < n; ++j)
            set(i, j, 0.5 * (static_cast<double>(m(i, j)) + static_cast<double>(m(j, i))));
    }
}

SymMatrix SymMatrix::identity(std::size_t n) {
    SymMatrix id(n);
    for (std::size_t i = 0; i < n; ++i) id.set(i, i, 1.0);
    return id;
}

double SymMatrix::trace() const {
    double t = 0.0;
    for (std::size_t i = 0; i < order(); ++i) t += m_(i, i);
    return t;
}

double SymMatrix::frobenius_norm() const {
    double s = 0.0;
    for (double x : m_.data()) s += x * x;
    return std::sqrt(s);
}

SymMatrix SymMatrix::principal_submatrix(const std::vector<std::size_t>& keep) const {
    SymMatrix sub(keep.size());
    for (std::size_t a = 0; a < keep.size(); ++a)
        for (std::size_t b = a; b < keep.size(); ++b) sub.set(a, b, m_(keep[a], keep[b]));
    return sub;
}

Spectrum::Spectrum(std::vector<double> values) : values_(std::move(values)) {
    std::sort(values_.begin(), values_.end(), std::greater<>());
}

double Spectrum::sum() const { return std::accumulate(values_.begin(), values_.end(), 0.0); }

std::vector<std::pair<double, int>> Spectrum::groups(double tol) const {
    std::vector<std::pair<double, int>> out;
    for (double v : values_) {
        if (!out.empty() && std::abs(out.back().first - v) <= tol) {
            ++out.back().second;
        } else {
            out.emplace_back(v, 1);
        }
    }
    return out;
}

Spectrum eigenvalues_symmetric(const SymMatrix& m, JacobiOptions opts) {
    if (!(opts.tol > 0.0)) throw invalid_argument("Jacobi tolerance must be positive");
    const std::size_t n = m.order();
    SquareMatrix<double> a = m.dense();
    const double threshold = opts.tol * m.frobenius_norm();

    auto off_norm = [&] {
        double s = 0.0;
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = i + 1; j < n; ++j) s += 2.0 * a(i, j) * a(i, j);
        return std::sqrt(s);
    };

    int sweep = 0;
    while (off_norm() >= threshold && threshold > 0.0) {
        if (sweep++ >= opts.max_sweeps)
            throw numeric_error("Jacobi eigensolver did not converge in " +
                                std::to_string(opts.max_sweeps) + " sweeps");
        for (std::size_t p = 0; p + 1 < n; ++p) {
            for (std::size_t q = p + 1; q < n; ++q) {
                const double apq = a(p, q);
                if (apq == 0.0) continue;
                // Rotation angle from the standard stable formulation.
                const double theta = (a(q, q) - a(p, p)) / (2.0 * apq);
                const double t = std::copysign(1.0, theta) / (std::abs(theta) + std::sqrt(theta * theta + 1.0));
                const double c = 1.0 / std::sqrt(t * t + 1.0);
                const double s = t * c;
                const double tau = s / (1.0 + c);
                a(p, p) -= t * apq;
                a(q, q) += t * apq;
                a(p, q) = a(q, p) = 0.0;
                for (std::size_t r = 0; r < n; ++r) {
                    if (r == p || r == q) continue;
                    const double arp = a(r, p);
                    const double arq = a(r, q);
                    a(r, p) = a(p, r) = arp - s * (arq + tau * arp);
                    a(r, q) = a(q, r) = arq + s * (arp - tau * arq);
                }
            }
        }
    }
    std::vector<double> values(n);
    for (std::size_t i = 0; i < n; ++i) values[i] = a(i, i);
    return Spectrum(std::move(values));
}

std::pair<double, double> eig2_real(const Matrix2& b) {
    const double half_tr = 0.5 * (b[0][0] + b[1][1]);
    const double diff = b[0][0] - b[1][1];
    const double disc = diff * diff + 4.0 * b[0][1] * b[1][0];
    if (disc < 0.0) {
        // Rounding can push an exactly-zero discriminant slightly negative.
        const double scale = diff * diff + std::abs(4.0 * b[0][1] * b[1][0]);
        if (disc < -1e-14 * scale) throw numeric_error("2x2 matrix has complex eigenvalues");
        return {half_tr, half_tr};
    }
    const double r = 0.5 * std::sqrt(disc);
    return {half_tr + r, half_tr - r};
}

}  // namespace spreadlab
