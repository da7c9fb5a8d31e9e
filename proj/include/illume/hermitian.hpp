#pragma once

#include <complex>
#include <cstddef>
#include <cstdint>

#include <Eigen/Dense>

#include "illume/rng.hpp"

namespace illume {

using Complex = std::complex<double>;
using ComplexVector = Eigen::VectorXcd;
using ComplexMatrix = Eigen::MatrixXcd;

/// Unit-norm state vector.
class PureState {
  public:
    /// Throws InvalidArgument unless |v| = 1 within Tolerances::state_norm.
    explicit PureState(ComplexVector v);

    /// Rescales v to unit norm; v must be nonzero.
    static PureState normalized(ComplexVector v);
    static PureState basis(std::size_t dim, std::size_t index);

    std::size_t dim() const { return static_cast<std::size_t>(v_.size()); }
    const ComplexVector& vector() const { return v_; }
    Complex operator[](std::size_t i) const { return v_(static_cast<Eigen::Index>(i)); }

  private:
    ComplexVector v_;
};

PureState tensor(const PureState& a, const PureState& b);

/// Dense Hermitian matrix. Construction checks Hermiticity and then
/// symmetrises exactly, so every instance is Hermitian to the last bit.
class HermitianOperator {
  public:
    explicit HermitianOperator(ComplexMatrix m);

    static HermitianOperator zero(std::size_t dim);
    static HermitianOperator identity(std::size_t dim);
    static HermitianOperator diagonal(const Eigen::VectorXd& d);
    static HermitianOperator projector(const PureState& psi);

    std::size_t dim() const { return static_cast<std::size_t>(m_.rows()); }
    const ComplexMatrix& matrix() const { return m_; }
    Complex operator()(std::size_t i, std::size_t j) const {
        return m_(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j));
    }
    double trace() const { return m_.trace().real(); }
    /// <psi|H|psi>
    double expectation(const PureState& psi) const;

    HermitianOperator& operator+=(const HermitianOperator& o);
    HermitianOperator& operator-=(const HermitianOperator& o);
    HermitianOperator& operator*=(double s);

  private:
    struct Trusted {};
    HermitianOperator(ComplexMatrix m, Trusted) : m_(std::move(m)) {}
    friend HermitianOperator tensor(const HermitianOperator&, const HermitianOperator&);
    friend HermitianOperator partial_trace_first(const HermitianOperator&, std::size_t,
                                                 std::size_t);

    ComplexMatrix m_;
};

HermitianOperator operator+(HermitianOperator a, const HermitianOperator& b);
HermitianOperator operator-(HermitianOperator a, const HermitianOperator& b);
HermitianOperator operator*(double s, HermitianOperator a);

/// Positive semidefinite, unit-trace Hermitian operator.
class DensityMatrix {
  public:
    /// Throws InvalidArgument unless trace = 1 within 1e-10 and every
    /// eigenvalue is >= -1e-10.
    explicit DensityMatrix(HermitianOperator op);

    static DensityMatrix pure(const PureState& psi);
    static DensityMatrix maximally_mixed(std::size_t dim);

    std::size_t dim() const { return op_.dim(); }
    const HermitianOperator& op() const { return op_; }
    operator const HermitianOperator&() const { return op_; }

  private:
    HermitianOperator op_;
};

/// Eigenvalues in descending order; eigenvectors are the matching columns.
struct EigenDecomposition {
    Eigen::VectorXd eigenvalues;
    ComplexMatrix eigenvectors;

    std::size_t dim() const { return static_cast<std::size_t>(eigenvalues.size()); }
    ComplexVector vector(std::size_t k) const {
        return eigenvectors.col(static_cast<Eigen::Index>(k));
    }
    /// sum_k e_k |v_k><v_k|
    ComplexMatrix reconstruct() const;
};

EigenDecomposition eig(const HermitianOperator& op);
/// Descending eigenvalues only; cheaper than eig().
Eigen::VectorXd eigenvalues(const HermitianOperator& op);

/// Sum of absolute eigenvalues.
double trace_norm(const HermitianOperator& op);

/// Kronecker product, index (i_a, i_b) -> i_a * dim(b) + i_b.
HermitianOperator tensor(const HermitianOperator& a, const HermitianOperator& b);

/// tr_A over the first factor of a (dimA x dimB)-dimensional operator.
HermitianOperator partial_trace_first(const HermitianOperator& op, std::size_t dim_a,
                                      std::size_t dim_b);

/// Reduced state on the second factor of a bipartite pure state, without
/// forming the full projector.
HermitianOperator reduced_second(const PureState& psi, std::size_t dim_a, std::size_t dim_b);

PureState haar_random_state(std::size_t dim, std::uint64_t seed);
PureState haar_random_state(std::size_t dim, CounterRng& rng);

/// GUE-like Hermitian matrix with complex Gaussian entries.
HermitianOperator random_hermitian(std::size_t dim, CounterRng& rng);
/// Unitary from the eigenvectors of a random Hermitian matrix.
ComplexMatrix random_unitary(std::size_t dim, CounterRng& rng);
/// G G^dagger / tr, G a dim x rank Ginibre matrix.
DensityMatrix random_density(std::size_t dim, std::size_t rank, CounterRng& rng);

} // namespace illume
