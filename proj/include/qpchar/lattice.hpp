#ifndef QPCHAR_LATTICE_HPP
#define QPCHAR_LATTICE_HPP

#include <cmath>
#include <stdexcept>
#include <vector>

#include <Eigen/Cholesky>
#include <Eigen/Core>

#include "qpchar/rational.hpp"

namespace qpchar {

/// Exact quadratic function Q(x) = 1/2 x^T A x + b^T x on integer vectors.
template <typename Scalar>
struct QuadraticForm {
    Matrix<Scalar> A;
    Vector<Scalar> b;

    Scalar operator()(const std::vector<int>& x) const
    {
        const auto n = A.rows();
        Scalar quad(0), lin(0);
        for (Eigen::Index i = 0; i < n; ++i) {
            if (x[i] == 0) continue;
            lin += b(i) * Scalar(x[i]);
            for (Eigen::Index r = 0; r < n; ++r)
                if (x[r] != 0) quad += A(i, r) * Scalar(x[i] * x[r]);
        }
        return quad / Scalar(2) + lin;
    }
};

/// Calls visit(x, Q(x)) for every integer x with Q(x) <= bound, where A is
/// positive definite. Bounds per coordinate come from the Cholesky factor in
/// double precision with a safety margin; membership is decided exactly.
/// With nonnegative = true only x >= 0 are visited.
template <typename Visit>
void for_each_lattice_point(const QuadraticForm<Rational>& form, const Rational& bound, bool nonnegative, Visit&& visit)
{
    const auto n = form.A.rows();
    if (n == 0) {
        std::vector<int> x;
        if (Rational(0) <= bound) visit(x, Rational(0));
        return;
    }
    Eigen::MatrixXd A = form.A.template cast<double>();
    Eigen::VectorXd b = form.b.template cast<double>();
    Eigen::LLT<Eigen::MatrixXd> llt(A);
    if (llt.info() != Eigen::Success) throw std::logic_error("quadratic form is not positive definite");
    // Q(x) = 1/2 |R (x - c)|^2 - 1/2 c^T A c with c = -A^{-1} b and A = R^T R.
    Eigen::MatrixXd R = llt.matrixU();
    Eigen::VectorXd c = -llt.solve(b);
    const double radius2 = 2.0 * (to_double(bound) + 0.5 * c.dot(A * c)) + 1e-7 * (1.0 + std::abs(to_double(bound)));
    if (radius2 < 0) return;

    std::vector<int> x(n, 0);
    std::vector<double> partial(n + 1, 0.0);  // partial[i] = sum over rows > i-1 of (R (x - c))_row^2
    auto recurse = [&](auto&& self, Eigen::Index i) -> void {
        double shift = 0;
        for (Eigen::Index j = i + 1; j < n; ++j) shift += R(i, j) * (x[j] - c(j));
        const double room = radius2 - partial[i + 1];
        if (room < 0) return;
        const double half = std::sqrt(room) / R(i, i);
        const double centre = c(i) - shift / R(i, i);
        long lo = static_cast<long>(std::ceil(centre - half - 1e-9));
        long hi = static_cast<long>(std::floor(centre + half + 1e-9));
        if (nonnegative && lo < 0) lo = 0;
        for (long v = lo; v <= hi; ++v) {
            x[i] = static_cast<int>(v);
            const double row = R(i, i) * (v - c(i)) + shift;
            partial[i] = partial[i + 1] + row * row;
            if (i == 0) {
                Rational value = form(x);
                if (value <= bound) visit(x, value);
            } else {
                self(self, i - 1);
            }
        }
        x[i] = 0;
    };
    recurse(recurse, n - 1);
}

}  // namespace qpchar

#endif  // QPCHAR_LATTICE_HPP
