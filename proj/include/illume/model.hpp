#pragma once

#include <optional>
#include <vector>

#include "illume/hermitian.hpp"

namespace illume {

/// Background state rho_E = sum_i lambda_i |theta_i><theta_i|, lambda sorted descending.
class EnvironmentState {
  public:
    /// Spectrum in the computational basis. Sorted descending on construction.
    explicit EnvironmentState(std::vector<double> spectrum);
    /// basis.col(i) is the eigenvector paired with spectrum[i] as given;
    /// columns are permuted along with the sort.
    EnvironmentState(std::vector<double> spectrum, ComplexMatrix basis);

    static EnvironmentState maximally_mixed(std::size_t dim);

    std::size_t dim() const { return spectrum_.size(); }
    const std::vector<double>& spectrum() const { return spectrum_; }
    const ComplexMatrix& basis() const { return basis_; }
    PureState theta(std::size_t i) const;
    /// Smallest eigenvalue, with values below the zero tolerance reported as 0.
    double lambda_min() const;
    bool has_zero_eigenvalue() const;
    const DensityMatrix& density() const { return density_; }

    /// Same spectrum in the basis U|theta_i>.
    EnvironmentState rotated(const ComplexMatrix& unitary) const;

  private:
    std::vector<double> spectrum_;
    ComplexMatrix basis_;
    DensityMatrix density_;
};

/// Detection problem: target absent with probability p0, reflectivity eta.
class Scenario {
  public:
    Scenario(double p0, double eta, EnvironmentState env);

    double p0() const { return p0_; }
    double p1() const { return 1.0 - p0_; }
    double eta() const { return eta_; }
    const EnvironmentState& env() const { return env_; }
    std::size_t dim() const { return env_.dim(); }

    Scenario with_eta(double eta) const { return {p0_, eta, env_}; }

  private:
    double p0_;
    double eta_;
    EnvironmentState env_;
};

struct DerivedParams {
    /// p1 (1 - eta) - p0
    double gamma;
    /// eta p1 / |gamma|, only when gamma < 0.
    std::optional<double> alpha;
    double lambda_d;
    /// (sum_i 1/lambda_i)^-1, zero when any eigenvalue is zero.
    double lambda_h;
};

DerivedParams derived_params(const Scenario& s);
double harmonic_lambda(const std::vector<double>& spectrum);

/// E0(rho) = rho_E
DensityMatrix channel_absent(const Scenario& s, const DensityMatrix& probe);
/// E1(rho) = eta rho + (1 - eta) rho_E
DensityMatrix channel_present(const Scenario& s, const DensityMatrix& probe);

/// p1 E1(rho) - p0 E0(rho) = p1 eta rho + gamma rho_E
HermitianOperator omega_c(const Scenario& s, const DensityMatrix& probe);
HermitianOperator omega_c(const Scenario& s, const PureState& probe);

/// p1 eta rho_AB + gamma rho_E (x) rho_B for a probe on d x d.
HermitianOperator omega_q(const Scenario& s, const PureState& probe);
HermitianOperator omega_q(const Scenario& s, const DensityMatrix& probe);

/// Hypothesis states (rho0, rho1) for a conventional probe.
std::pair<DensityMatrix, DensityMatrix> hypotheses_c(const Scenario& s, const PureState& probe);
/// Hypothesis states (rho_E (x) rho_B, eta rho_AB + (1-eta) rho_E (x) rho_B).
std::pair<DensityMatrix, DensityMatrix> hypotheses_q(const Scenario& s, const PureState& probe);

} // namespace illume
