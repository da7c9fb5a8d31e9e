#pragma once

#include <algorithm>
#include <cmath>
#include <vector>

#include <illume/hermitian.hpp>

namespace illume::test {

inline double max_abs_diff(const ComplexMatrix& a, const ComplexMatrix& b) {
    return (a - b).cwiseAbs().maxCoeff();
}

inline ComplexMatrix diag(std::initializer_list<double> values) {
    Eigen::VectorXd d(static_cast<Eigen::Index>(values.size()));
    Eigen::Index i = 0;
    for (double v : values) {
        d(i++) = v;
    }
    return d.cast<Complex>().asDiagonal().toDenseMatrix();
}

/// (|00> + |11> + ...)/sqrt(d)
inline PureState maximally_entangled(std::size_t d) {
    ComplexVector v = ComplexVector::Zero(static_cast<Eigen::Index>(d * d));
    for (std::size_t i = 0; i < d; ++i) {
        v(static_cast<Eigen::Index>(i * d + i)) = 1.0;
    }
    return PureState::normalized(v);
}

using RealMatrix = std::vector<std::vector<double>>;

/// Cyclic Jacobi rotations on a real symmetric matrix; eigenvalues ascending.
/// Kept separate from the library's solver so tests have an independent reference.
inline std::vector<double> jacobi_eigenvalues(RealMatrix a) {
    const std::size_t n = a.size();
    for (int sweep = 0; sweep < 100; ++sweep) {
        double off = 0.0;
        for (std::size_t p = 0; p < n; ++p) {
            for (std::size_t q = p + 1; q < n; ++q) {
                off += a[p][q] * a[p][q];
            }
        }
        if (off < 1e-30) {
            break;
        }
        for (std::size_t p = 0; p < n; ++p) {
            for (std::size_t q = p + 1; q < n; ++q) {
                if (a[p][q] == 0.0) {
                    continue;
                }
                const double theta = (a[q][q] - a[p][p]) / (2.0 * a[p][q]);
                const double t = (theta >= 0 ? 1.0 : -1.0) /
                                 (std::abs(theta) + std::sqrt(theta * theta + 1.0));
                const double c = 1.0 / std::sqrt(t * t + 1.0);
                const double s = t * c;
                for (std::size_t k = 0; k < n; ++k) {
                    const double akp = a[k][p];
                    const double akq = a[k][q];
                    a[k][p] = c * akp - s * akq;
                    a[k][q] = s * akp + c * akq;
                }
                for (std::size_t k = 0; k < n; ++k) {
                    const double apk = a[p][k];
                    const double aqk = a[q][k];
                    a[p][k] = c * apk - s * aqk;
                    a[q][k] = s * apk + c * aqk;
                }
            }
        }
    }
    std::vector<double> ev(n);
    for (std::size_t i = 0; i < n; ++i) {
        ev[i] = a[i][i];
    }
    std::sort(ev.begin(), ev.end());
    return ev;
}

inline double jacobi_trace_norm(const RealMatrix& a) {
    double sum = 0.0;
    for (double v : jacobi_eigenvalues(a)) {
        sum += std::abs(v);
    }
    return sum;
}

/// Conventional Omega for a real probe against diag(lambda), as a dense real matrix.
inline RealMatrix omega_c_real(double p0, double eta, const std::vector<double>& lambda,
                               const std::vector<double>& mu) {
    const double p1 = 1.0 - p0;
    const double gamma = p1 * (1.0 - eta) - p0;
    const std::size_t d = lambda.size();
    RealMatrix m(d, std::vector<double>(d, 0.0));
    for (std::size_t i = 0; i < d; ++i) {
        for (std::size_t j = 0; j < d; ++j) {
            m[i][j] = p1 * eta * mu[i] * mu[j];
        }
        m[i][i] += gamma * lambda[i];
    }
    return m;
}

/// Quantum Omega for sum_i mu_i |ii> against diag(lambda) on the first factor.
inline RealMatrix omega_q_real(double p0, double eta, const std::vector<double>& lambda,
                               const std::vector<double>& mu) {
    const double p1 = 1.0 - p0;
    const double gamma = p1 * (1.0 - eta) - p0;
    const std::size_t d = lambda.size();
    RealMatrix m(d * d, std::vector<double>(d * d, 0.0));
    for (std::size_t i = 0; i < d; ++i) {
        for (std::size_t j = 0; j < d; ++j) {
            m[i * d + i][j * d + j] = p1 * eta * mu[i] * mu[j];
        }
    }
    // rho_E (x) rho_B with rho_B = diag(mu^2).
    for (std::size_t i = 0; i < d; ++i) {
        for (std::size_t k = 0; k < d; ++k) {
            m[i * d + k][i * d + k] += gamma * lambda[i] * mu[k] * mu[k];
        }
    }
    return m;
}

} // namespace illume::test
