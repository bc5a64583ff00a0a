#include "mimo/decomp.hpp"

#include <Eigen/Dense>

#include <algorithm>
#include <cmath>
#include <numeric>

namespace mimo {

namespace {

using EigenCMat = Eigen::MatrixXcd;

EigenCMat to_eigen(const ComplexMatrix& a) {
    EigenCMat m(a.rows(), a.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j) m(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) = a(i, j);
    return m;
}

ComplexMatrix from_eigen(const EigenCMat& m) {
    ComplexMatrix a(static_cast<std::size_t>(m.rows()), static_cast<std::size_t>(m.cols()));
    for (Eigen::Index i = 0; i < m.rows(); ++i)
        for (Eigen::Index j = 0; j < m.cols(); ++j)
            a(static_cast<std::size_t>(i), static_cast<std::size_t>(j)) = m(i, j);
    return a;
}

}  // namespace

EigResult hermitian_eig(const ComplexMatrix& a) {
    if (!a.is_square()) throw DimensionError("hermitian_eig: input must be square");
    const ComplexMatrix sym = hermitian_part(a);
    Eigen::SelfAdjointEigenSolver<EigenCMat> solver(to_eigen(sym));
    if (solver.info() != Eigen::Success)
        throw std::runtime_error("hermitian_eig: eigensolver did not converge");

    const std::size_t n = a.rows();
    EigResult result;
    result.eigenvalues.resize(n);
    result.eigenvectors = ComplexMatrix(n, n);
    // Eigen returns ascending order; reverse for descending. Ties keep a
    // deterministic order because the reversal is a fixed permutation.
    for (std::size_t k = 0; k < n; ++k) {
        const Eigen::Index src = static_cast<Eigen::Index>(n - 1 - k);
        result.eigenvalues[k] = solver.eigenvalues()(src);
        for (std::size_t i = 0; i < n; ++i)
            result.eigenvectors(i, k) = solver.eigenvectors()(static_cast<Eigen::Index>(i), src);
    }
    return result;
}

ComplexMatrix cholesky_lower(const ComplexMatrix& a) {
    if (!a.is_square()) throw DimensionError("cholesky_lower: input must be square");
    const std::size_t n = a.rows();
    const ComplexMatrix sym = hermitian_part(a);

    double scale = 0.0;
    for (std::size_t i = 0; i < n; ++i) scale = std::max(scale, std::abs(sym(i, i).real()));
    if (scale == 0.0) scale = 1.0;
    const double floor = 1e-12 * scale;

    ComplexMatrix l(n, n);
    for (std::size_t j = 0; j < n; ++j) {
        double d = sym(j, j).real();
        for (std::size_t k = 0; k < j; ++k) d -= std::norm(l(j, k));
        if (!(d > floor)) {
            throw FactorizationError("cholesky_lower: leading minor " + std::to_string(j + 1) +
                                         " is not positive definite",
                                     j + 1);
        }
        const double ljj = std::sqrt(d);
        l(j, j) = ljj;
        for (std::size_t i = j + 1; i < n; ++i) {
            Complex s = sym(i, j);
            for (std::size_t k = 0; k < j; ++k) s -= l(i, k) * std::conj(l(j, k));
            l(i, j) = s / ljj;
        }
    }
    return l;
}

QrResult qr_positive(const ComplexMatrix& a) {
    if (a.rows() < a.cols()) throw DimensionError("qr_positive: needs rows >= cols");
    const std::size_t m = a.rows(), n = a.cols();

    Eigen::HouseholderQR<EigenCMat> qr(to_eigen(a));
    EigenCMat thin_q = qr.householderQ() * EigenCMat::Identity(static_cast<Eigen::Index>(m),
                                                               static_cast<Eigen::Index>(n));
    EigenCMat r_full = qr.matrixQR().triangularView<Eigen::Upper>();
    EigenCMat r = r_full.topRows(static_cast<Eigen::Index>(n));

    double max_diag = 0.0;
    for (std::size_t i = 0; i < n; ++i)
        max_diag = std::max(max_diag, std::abs(r(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(i))));
    for (std::size_t i = 0; i < n; ++i) {
        if (std::abs(r(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(i))) <= 1e-12 * max_diag)
            throw RankError("qr_positive: input is rank deficient");
    }

    // Rotate phases so the R diagonal is real positive; this pins the unique
    // factorization of a full-rank input.
    for (std::size_t i = 0; i < n; ++i) {
        const Eigen::Index ii = static_cast<Eigen::Index>(i);
        const Complex rii = r(ii, ii);
        const Complex phase = rii / std::abs(rii);
        r.row(ii) *= std::conj(phase);
        thin_q.col(ii) *= phase;
        r(ii, ii) = Complex{std::abs(rii), 0.0};
    }
    return {from_eigen(thin_q), from_eigen(r)};
}

SvdResult svd(const ComplexMatrix& a) {
    Eigen::JacobiSVD<EigenCMat> solver(to_eigen(a), Eigen::ComputeFullU | Eigen::ComputeFullV);
    SvdResult out;
    out.u = from_eigen(solver.matrixU());
    out.v = from_eigen(solver.matrixV());
    out.singular_values.assign(solver.singularValues().data(),
                               solver.singularValues().data() + solver.singularValues().size());
    return out;
}

RealVector singular_values(const ComplexMatrix& a) {
    Eigen::JacobiSVD<EigenCMat> solver(to_eigen(a));
    return {solver.singularValues().data(),
            solver.singularValues().data() + solver.singularValues().size()};
}

ComplexMatrix gmd_rotation(const ComplexMatrix& a) {
    if (!a.is_square()) throw DimensionError("gmd_rotation: input must be square");
    const std::size_t k_dim = a.rows();

    SvdResult decomposition = svd(a);
    const RealVector& sigma = decomposition.singular_values;
    if (sigma.back() <= 1e-12 * sigma.front())
        throw RankError("gmd_rotation: input is singular");

    double log_mean = 0.0;
    for (double s : sigma) log_mean += std::log(s);
    const double geo_mean = std::exp(log_mean / static_cast<double>(k_dim));

    // Working upper-triangular factor, initially diag(sigma). Each step pins
    // R(k,k) = geo_mean with one right and one left real Givens rotation; only
    // the right rotations and permutations touch V.
    ComplexMatrix r = ComplexMatrix::diagonal(sigma);
    ComplexMatrix v = decomposition.v;

    auto swap_symmetric = [&](std::size_t p, std::size_t q) {
        if (p == q) return;
        for (std::size_t i = 0; i < k_dim; ++i) std::swap(r(i, p), r(i, q));
        for (std::size_t i = 0; i < k_dim; ++i) std::swap(r(p, i), r(q, i));
        for (std::size_t i = 0; i < k_dim; ++i) std::swap(v(i, p), v(i, q));
    };

    for (std::size_t k = 0; k + 1 < k_dim; ++k) {
        // Pair one diagonal entry >= geo_mean with one <= it; the max and min
        // of the remaining block always qualify.
        std::size_t p = k;
        for (std::size_t i = k + 1; i < k_dim; ++i)
            if (r(i, i).real() > r(p, p).real()) p = i;
        swap_symmetric(k, p);
        std::size_t q = k + 1;
        for (std::size_t i = k + 2; i < k_dim; ++i)
            if (r(i, i).real() < r(q, q).real()) q = i;
        swap_symmetric(k + 1, q);

        const double d1 = r(k, k).real();
        const double d2 = r(k + 1, k + 1).real();
        double c = 1.0, s = 0.0;
        if (d1 - d2 > 1e-15 * d1) {
            const double c2 = std::clamp((geo_mean * geo_mean - d2 * d2) / (d1 * d1 - d2 * d2), 0.0, 1.0);
            c = std::sqrt(c2);
            s = std::sqrt(1.0 - c2);
        }

        // Right rotation on columns (k, k+1) of R and V.
        for (std::size_t i = 0; i < k_dim; ++i) {
            const Complex rk = r(i, k), rk1 = r(i, k + 1);
            r(i, k) = c * rk + s * rk1;
            r(i, k + 1) = -s * rk + c * rk1;
        }
        for (std::size_t i = 0; i < k_dim; ++i) {
            const Complex vk = v(i, k), vk1 = v(i, k + 1);
            v(i, k) = c * vk + s * vk1;
            v(i, k + 1) = -s * vk + c * vk1;
        }

        // Left rotation on rows (k, k+1) re-triangularizes and sets R(k,k).
        const double ct = d1 * c / geo_mean;
        const double st = d2 * s / geo_mean;
        for (std::size_t j = 0; j < k_dim; ++j) {
            const Complex rk = r(k, j), rk1 = r(k + 1, j);
            r(k, j) = ct * rk + st * rk1;
            r(k + 1, j) = -st * rk + ct * rk1;
        }
        r(k, k) = geo_mean;
        r(k + 1, k) = 0.0;
    }
    return v;
}

ComplexMatrix hpd_inverse(const ComplexMatrix& a) {
    const ComplexMatrix l_inv = lower_triangular_inverse(cholesky_lower(a));
    return l_inv.adjoint() * l_inv;
}

ComplexMatrix lower_triangular_inverse(const ComplexMatrix& l) {
    if (!l.is_square()) throw DimensionError("lower_triangular_inverse: input must be square");
    const std::size_t n = l.rows();
    ComplexMatrix x(n, n);
    for (std::size_t j = 0; j < n; ++j) {
        if (l(j, j) == Complex{0.0, 0.0})
            throw FactorizationError("lower_triangular_inverse: zero diagonal entry", j + 1);
        x(j, j) = 1.0 / l(j, j);
        for (std::size_t i = j + 1; i < n; ++i) {
            Complex s = 0.0;
            for (std::size_t k = j; k < i; ++k) s += l(i, k) * x(k, j);
            x(i, j) = -s / l(i, i);
        }
    }
    return x;
}

double hpd_log_det(const ComplexMatrix& a) {
    const ComplexMatrix l = cholesky_lower(a);
    double log_det = 0.0;
    for (std::size_t i = 0; i < l.rows(); ++i) log_det += 2.0 * std::log(l(i, i).real());
    return log_det;
}

}  // namespace mimo
