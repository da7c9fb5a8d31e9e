#include "illume/hermitian.hpp"

#include <cmath>
#include <string>

#include "illume/error.hpp"
#include "illume/tolerances.hpp"

namespace illume {
namespace {

Eigen::Index idx(std::size_t i) { return static_cast<Eigen::Index>(i); }

void require_square(const ComplexMatrix& m) {
    if (m.rows() != m.cols() || m.rows() == 0) {
        throw DimensionError("operator must be a non-empty square matrix, got " +
                             std::to_string(m.rows()) + "x" + std::to_string(m.cols()));
    }
}

void require_same_dim(std::size_t a, std::size_t b, const char* what) {
    if (a != b) {
        throw DimensionError(std::string(what) + ": dimension " + std::to_string(a) +
                             " != " + std::to_string(b));
    }
}

ComplexMatrix hermitian_part(const ComplexMatrix& m) {
    return (m + m.adjoint()) * 0.5;
}

} // namespace

// -- PureState ---------------------------------------------------------------

PureState::PureState(ComplexVector v) : v_(std::move(v)) {
    if (v_.size() == 0) {
        throw DimensionError("pure state must have dimension >= 1");
    }
    const double norm = v_.norm();
    if (!std::isfinite(norm) || std::abs(norm - 1.0) > Tolerances::state_norm) {
        throw InvalidArgument("pure state is not normalised (norm " + std::to_string(norm) +
                              ")");
    }
}

PureState PureState::normalized(ComplexVector v) {
    const double norm = v.norm();
    if (!(norm > 0.0) || !std::isfinite(norm)) {
        throw InvalidArgument("cannot normalise a zero or non-finite vector");
    }
    v /= norm;
    return PureState(std::move(v));
}

PureState PureState::basis(std::size_t dim, std::size_t index) {
    if (index >= dim) {
        throw DimensionError("basis index out of range");
    }
    ComplexVector v = ComplexVector::Zero(idx(dim));
    v(idx(index)) = 1.0;
    return PureState(std::move(v));
}

PureState tensor(const PureState& a, const PureState& b) {
    const auto na = a.vector().size();
    const auto nb = b.vector().size();
    ComplexVector v(na * nb);
    for (Eigen::Index i = 0; i < na; ++i) {
        v.segment(i * nb, nb) = a.vector()(i) * b.vector();
    }
    return PureState::normalized(std::move(v));
}

// -- HermitianOperator -------------------------------------------------------

HermitianOperator::HermitianOperator(ComplexMatrix m) : m_(std::move(m)) {
    require_square(m_);
    if (!m_.allFinite()) {
        throw InvalidArgument("operator has non-finite entries");
    }
    const double asym = (m_ - m_.adjoint()).cwiseAbs().maxCoeff();
    if (asym > Tolerances::construction) {
        throw InvalidArgument("operator is not Hermitian (max |A - A^dagger| = " +
                              std::to_string(asym) + ")");
    }
    m_ = hermitian_part(m_);
}

HermitianOperator HermitianOperator::zero(std::size_t dim) {
    return HermitianOperator(ComplexMatrix::Zero(idx(dim), idx(dim)));
}

HermitianOperator HermitianOperator::identity(std::size_t dim) {
    return HermitianOperator(ComplexMatrix::Identity(idx(dim), idx(dim)));
}

HermitianOperator HermitianOperator::diagonal(const Eigen::VectorXd& d) {
    return HermitianOperator(d.cast<Complex>().asDiagonal().toDenseMatrix());
}

HermitianOperator HermitianOperator::projector(const PureState& psi) {
    return HermitianOperator(psi.vector() * psi.vector().adjoint(), Trusted{});
}

double HermitianOperator::expectation(const PureState& psi) const {
    require_same_dim(dim(), psi.dim(), "expectation");
    return psi.vector().dot(m_ * psi.vector()).real();
}

HermitianOperator& HermitianOperator::operator+=(const HermitianOperator& o) {
    require_same_dim(dim(), o.dim(), "operator sum");
    m_ += o.m_;
    return *this;
}

HermitianOperator& HermitianOperator::operator-=(const HermitianOperator& o) {
    require_same_dim(dim(), o.dim(), "operator difference");
    m_ -= o.m_;
    return *this;
}

HermitianOperator& HermitianOperator::operator*=(double s) {
    m_ *= s;
    return *this;
}

HermitianOperator operator+(HermitianOperator a, const HermitianOperator& b) { return a += b; }
HermitianOperator operator-(HermitianOperator a, const HermitianOperator& b) { return a -= b; }
HermitianOperator operator*(double s, HermitianOperator a) { return a *= s; }

// -- DensityMatrix -----------------------------------------------------------

DensityMatrix::DensityMatrix(HermitianOperator op) : op_(std::move(op)) {
    const double tr = op_.trace();
    if (std::abs(tr - 1.0) > Tolerances::construction) {
        throw InvalidArgument("density matrix trace is " + std::to_string(tr) + ", expected 1");
    }
    const double smallest = eigenvalues(op_).minCoeff();
    if (smallest < -Tolerances::construction) {
        throw InvalidArgument("density matrix has negative eigenvalue " +
                              std::to_string(smallest));
    }
}

DensityMatrix DensityMatrix::pure(const PureState& psi) {
    return DensityMatrix(HermitianOperator::projector(psi));
}

DensityMatrix DensityMatrix::maximally_mixed(std::size_t dim) {
    return DensityMatrix((1.0 / static_cast<double>(dim)) * HermitianOperator::identity(dim));
}

// -- Spectral ----------------------------------------------------------------

ComplexMatrix EigenDecomposition::reconstruct() const {
    return eigenvectors * eigenvalues.cast<Complex>().asDiagonal() * eigenvectors.adjoint();
}

EigenDecomposition eig(const HermitianOperator& op) {
    Eigen::SelfAdjointEigenSolver<ComplexMatrix> solver(op.matrix(), Eigen::ComputeEigenvectors);
    if (solver.info() != Eigen::Success) {
        const double residual =
            (op.matrix() * solver.eigenvectors() -
             solver.eigenvectors() * solver.eigenvalues().cast<Complex>().asDiagonal())
                .cwiseAbs()
                .maxCoeff();
        throw ConvergenceError(op.dim(), residual);
    }
    // Eigen sorts ascending.
    return {solver.eigenvalues().reverse(), solver.eigenvectors().rowwise().reverse()};
}

Eigen::VectorXd eigenvalues(const HermitianOperator& op) {
    Eigen::SelfAdjointEigenSolver<ComplexMatrix> solver(op.matrix(), Eigen::EigenvaluesOnly);
    if (solver.info() != Eigen::Success) {
        throw ConvergenceError(op.dim(), std::nan(""));
    }
    return solver.eigenvalues().reverse();
}

double trace_norm(const HermitianOperator& op) {
    return eigenvalues(op).cwiseAbs().sum();
}

// -- Bipartite ---------------------------------------------------------------

HermitianOperator tensor(const HermitianOperator& a, const HermitianOperator& b) {
    const auto na = a.matrix().rows();
    const auto nb = b.matrix().rows();
    ComplexMatrix out(na * nb, na * nb);
    for (Eigen::Index i = 0; i < na; ++i) {
        for (Eigen::Index j = 0; j < na; ++j) {
            out.block(i * nb, j * nb, nb, nb) = a.matrix()(i, j) * b.matrix();
        }
    }
    return HermitianOperator(std::move(out), HermitianOperator::Trusted{});
}

HermitianOperator partial_trace_first(const HermitianOperator& op, std::size_t dim_a,
                                      std::size_t dim_b) {
    if (dim_a == 0 || dim_b == 0 || op.dim() != dim_a * dim_b) {
        throw DimensionError("partial trace: operator dimension " + std::to_string(op.dim()) +
                             " != " + std::to_string(dim_a) + " x " + std::to_string(dim_b));
    }
    const auto nb = idx(dim_b);
    ComplexMatrix out = ComplexMatrix::Zero(nb, nb);
    for (Eigen::Index a = 0; a < idx(dim_a); ++a) {
        out += op.matrix().block(a * nb, a * nb, nb, nb);
    }
    return HermitianOperator(std::move(out), HermitianOperator::Trusted{});
}

HermitianOperator reduced_second(const PureState& psi, std::size_t dim_a, std::size_t dim_b) {
    if (psi.dim() != dim_a * dim_b) {
        throw DimensionError("reduced state: vector dimension " + std::to_string(psi.dim()) +
                             " != " + std::to_string(dim_a) + " x " + std::to_string(dim_b));
    }
    // psi[a * dim_b + b] viewed as a dim_b x dim_a column-major matrix M(b, a);
    // rho_B = M M^dagger.
    const Eigen::Map<const ComplexMatrix> m(psi.vector().data(), idx(dim_b), idx(dim_a));
    return HermitianOperator(hermitian_part(m * m.adjoint()));
}

// -- Random ------------------------------------------------------------------

PureState haar_random_state(std::size_t dim, std::uint64_t seed) {
    CounterRng rng(seed);
    return haar_random_state(dim, rng);
}

PureState haar_random_state(std::size_t dim, CounterRng& rng) {
    if (dim == 0) {
        throw DimensionError("haar_random_state: dim must be >= 1");
    }
    ComplexVector v(idx(dim));
    for (Eigen::Index i = 0; i < v.size(); ++i) {
        v(i) = rng.complex_normal();
    }
    return PureState::normalized(std::move(v));
}

HermitianOperator random_hermitian(std::size_t dim, CounterRng& rng) {
    ComplexMatrix g(idx(dim), idx(dim));
    for (Eigen::Index j = 0; j < g.cols(); ++j) {
        for (Eigen::Index i = 0; i < g.rows(); ++i) {
            g(i, j) = rng.complex_normal();
        }
    }
    return HermitianOperator(hermitian_part(g));
}

ComplexMatrix random_unitary(std::size_t dim, CounterRng& rng) {
    return eig(random_hermitian(dim, rng)).eigenvectors;
}

DensityMatrix random_density(std::size_t dim, std::size_t rank, CounterRng& rng) {
    if (rank == 0 || rank > dim) {
        throw DimensionError("random_density: rank must be in [1, dim]");
    }
    ComplexMatrix g(idx(dim), idx(rank));
    for (Eigen::Index j = 0; j < g.cols(); ++j) {
        for (Eigen::Index i = 0; i < g.rows(); ++i) {
            g(i, j) = rng.complex_normal();
        }
    }
    ComplexMatrix rho = g * g.adjoint();
    rho /= rho.trace().real();
    return DensityMatrix(HermitianOperator(hermitian_part(rho)));
}

} // namespace illume
