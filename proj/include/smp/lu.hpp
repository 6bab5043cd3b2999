#pragma once

#include <cmath>
#include <vector>

#include <Eigen/Core>

#include "smp/errors.hpp"

namespace smp {

inline constexpr double pivot_rtol = 1e-12;

/// Dense LU factorization with partial (row) pivoting, P A = L U.
///
/// Throws SingularMatrix when a pivot falls below pivot_rtol times the
/// largest absolute entry of A.
template <typename Scalar = double>
class PivotedLU {
public:
    using Matrix = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;

    explicit PivotedLU(Matrix a) : lu_(std::move(a)), perm_(std::size_t(lu_.rows()))
    {
        const Eigen::Index n = lu_.rows();
        if (n != lu_.cols())
            throw Error("LU requires a square matrix");
        const Scalar threshold = Scalar(pivot_rtol) * (n > 0 ? lu_.cwiseAbs().maxCoeff() : Scalar(0));
        for (Eigen::Index i = 0; i < n; ++i)
            perm_[std::size_t(i)] = i;

        for (Eigen::Index k = 0; k < n; ++k) {
            Eigen::Index rel;
            const Scalar pivot = lu_.col(k).tail(n - k).cwiseAbs().maxCoeff(&rel);
            const Eigen::Index p = k + rel;
            if (!(pivot > threshold))
                throw SingularMatrix("pivot " + std::to_string(double(pivot)) + " at step " + std::to_string(k)
                                     + " below threshold " + std::to_string(double(threshold)));
            if (p != k) {
                lu_.row(k).swap(lu_.row(p));
                std::swap(perm_[std::size_t(k)], perm_[std::size_t(p)]);
            }
            const Eigen::Index rest = n - k - 1;
            if (rest == 0)
                continue;
            lu_.col(k).tail(rest) /= lu_(k, k);
            lu_.bottomRightCorner(rest, rest).noalias() -= lu_.col(k).tail(rest) * lu_.row(k).tail(rest);
        }
    }

    Eigen::Index size() const noexcept { return lu_.rows(); }

    /// Solves A X = B for all columns of B.
    Matrix solve(const Matrix& b) const
    {
        const Eigen::Index n = size();
        Matrix x(n, b.cols());
        for (Eigen::Index i = 0; i < n; ++i)
            x.row(i) = b.row(perm_[std::size_t(i)]);
        // forward substitution with unit lower L
        for (Eigen::Index i = 1; i < n; ++i)
            x.row(i).noalias() -= lu_.row(i).head(i) * x.topRows(i);
        for (Eigen::Index i = n - 1; i >= 0; --i) {
            const Eigen::Index rest = n - i - 1;
            if (rest > 0)
                x.row(i).noalias() -= lu_.row(i).tail(rest) * x.bottomRows(rest);
            x.row(i) /= lu_(i, i);
        }
        return x;
    }

    Matrix inverse() const { return solve(Matrix::Identity(size(), size())); }

    /// Smallest absolute pivot of U.
    Scalar min_pivot() const { return lu_.diagonal().cwiseAbs().minCoeff(); }

private:
    Matrix lu_;
    std::vector<Eigen::Index> perm_;
};

} // namespace smp
