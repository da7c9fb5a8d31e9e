#include "illume/model.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>

#include "illume/error.hpp"
#include "illume/tolerances.hpp"

namespace illume {
namespace {

Eigen::Index idx(std::size_t i) { return static_cast<Eigen::Index>(i); }

std::vector<double> checked_spectrum(std::vector<double> spectrum) {
    if (spectrum.empty()) {
        throw InvalidArgument("environment spectrum is empty");
    }
    double sum = 0.0;
    for (double& l : spectrum) {
        if (!std::isfinite(l) || l < -Tolerances::zero_eigenvalue) {
            throw InvalidArgument("environment eigenvalue " + std::to_string(l) +
                                  " is negative or non-finite");
        }
        l = std::max(l, 0.0);
        sum += l;
    }
    if (std::abs(sum - 1.0) > Tolerances::construction) {
        throw InvalidArgument("environment spectrum sums to " + std::to_string(sum) +
                              ", expected 1");
    }
    return spectrum;
}

DensityMatrix build_density(const std::vector<double>& spectrum, const ComplexMatrix& basis) {
    Eigen::VectorXd lam(idx(spectrum.size()));
    for (std::size_t i = 0; i < spectrum.size(); ++i) {
        lam(idx(i)) = spectrum[i];
    }
    ComplexMatrix rho = basis * lam.cast<Complex>().asDiagonal() * basis.adjoint();
    return DensityMatrix(HermitianOperator((rho + rho.adjoint()) * 0.5));
}

void require_dim(std::size_t got, std::size_t want, const char* what) {
    if (got != want) {
        throw DimensionError(std::string(what) + ": probe dimension " + std::to_string(got) +
                             " does not match " + std::to_string(want));
    }
}

void require_probability(double v, const char* name) {
    if (!(v >= 0.0 && v <= 1.0)) {
        throw InvalidArgument(std::string(name) + " must lie in [0, 1], got " +
                              std::to_string(v));
    }
}

} // namespace

// -- EnvironmentState --------------------------------------------------------

EnvironmentState::EnvironmentState(std::vector<double> spectrum)
    : EnvironmentState(spectrum, ComplexMatrix::Identity(idx(spectrum.size()),
                                                          idx(spectrum.size()))) {}

EnvironmentState::EnvironmentState(std::vector<double> spectrum, ComplexMatrix basis)
    : spectrum_(checked_spectrum(std::move(spectrum))),
      basis_(std::move(basis)),
      density_(DensityMatrix::maximally_mixed(1)) {
    const auto d = idx(spectrum_.size());
    if (basis_.rows() != d || basis_.cols() != d) {
        throw DimensionError("environment basis must be " + std::to_string(d) + "x" +
                             std::to_string(d));
    }
    const double off = (basis_.adjoint() * basis_ - ComplexMatrix::Identity(d, d))
                           .cwiseAbs()
                           .maxCoeff();
    if (!(off <= Tolerances::reconstruction)) {
        throw InvalidArgument("environment basis is not orthonormal (deviation " +
                              std::to_string(off) + ")");
    }

    std::vector<std::size_t> order(spectrum_.size());
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(),
                     [&](std::size_t a, std::size_t b) { return spectrum_[a] > spectrum_[b]; });
    std::vector<double> sorted(spectrum_.size());
    ComplexMatrix permuted(d, d);
    for (std::size_t i = 0; i < order.size(); ++i) {
        sorted[i] = spectrum_[order[i]];
        permuted.col(idx(i)) = basis_.col(idx(order[i]));
    }
    spectrum_ = std::move(sorted);
    basis_ = std::move(permuted);
    density_ = build_density(spectrum_, basis_);
}

EnvironmentState EnvironmentState::maximally_mixed(std::size_t dim) {
    return EnvironmentState(std::vector<double>(dim, 1.0 / static_cast<double>(dim)));
}

PureState EnvironmentState::theta(std::size_t i) const {
    if (i >= dim()) {
        throw DimensionError("environment eigenvector index out of range");
    }
    return PureState::normalized(basis_.col(idx(i)));
}

double EnvironmentState::lambda_min() const {
    const double l = spectrum_.back();
    return l <= Tolerances::zero_eigenvalue ? 0.0 : l;
}

bool EnvironmentState::has_zero_eigenvalue() const {
    return spectrum_.back() <= Tolerances::zero_eigenvalue;
}

EnvironmentState EnvironmentState::rotated(const ComplexMatrix& unitary) const {
    return EnvironmentState(spectrum_, unitary * basis_);
}

// -- Scenario ----------------------------------------------------------------

Scenario::Scenario(double p0, double eta, EnvironmentState env)
    : p0_(p0), eta_(eta), env_(std::move(env)) {
    require_probability(p0, "p0");
    require_probability(eta, "eta");
}

double harmonic_lambda(const std::vector<double>& spectrum) {
    double inverse_sum = 0.0;
    for (double l : spectrum) {
        if (l <= Tolerances::zero_eigenvalue) {
            return 0.0;
        }
        inverse_sum += 1.0 / l;
    }
    return 1.0 / inverse_sum;
}

DerivedParams derived_params(const Scenario& s) {
    DerivedParams out{};
    out.gamma = s.p1() * (1.0 - s.eta()) - s.p0();
    if (out.gamma < -Tolerances::boundary) {
        out.alpha = s.eta() * s.p1() / -out.gamma;
    }
    out.lambda_d = s.env().lambda_min();
    out.lambda_h = harmonic_lambda(s.env().spectrum());
    return out;
}

// -- Channels ----------------------------------------------------------------

DensityMatrix channel_absent(const Scenario& s, const DensityMatrix& probe) {
    require_dim(probe.dim(), s.dim(), "channel_absent");
    return s.env().density();
}

DensityMatrix channel_present(const Scenario& s, const DensityMatrix& probe) {
    require_dim(probe.dim(), s.dim(), "channel_present");
    return DensityMatrix(s.eta() * probe.op() + (1.0 - s.eta()) * s.env().density().op());
}

HermitianOperator omega_c(const Scenario& s, const DensityMatrix& probe) {
    require_dim(probe.dim(), s.dim(), "omega_c");
    const double gamma = derived_params(s).gamma;
    return s.p1() * s.eta() * probe.op() + gamma * s.env().density().op();
}

HermitianOperator omega_c(const Scenario& s, const PureState& probe) {
    require_dim(probe.dim(), s.dim(), "omega_c");
    const double gamma = derived_params(s).gamma;
    return s.p1() * s.eta() * HermitianOperator::projector(probe) +
           gamma * s.env().density().op();
}

HermitianOperator omega_q(const Scenario& s, const PureState& probe) {
    const std::size_t d = s.dim();
    require_dim(probe.dim(), d * d, "omega_q");
    const double gamma = derived_params(s).gamma;
    return s.p1() * s.eta() * HermitianOperator::projector(probe) +
           gamma * tensor(s.env().density().op(), reduced_second(probe, d, d));
}

HermitianOperator omega_q(const Scenario& s, const DensityMatrix& probe) {
    const std::size_t d = s.dim();
    require_dim(probe.dim(), d * d, "omega_q");
    const double gamma = derived_params(s).gamma;
    return s.p1() * s.eta() * probe.op() +
           gamma * tensor(s.env().density().op(), partial_trace_first(probe.op(), d, d));
}

std::pair<DensityMatrix, DensityMatrix> hypotheses_c(const Scenario& s, const PureState& probe) {
    const auto rho = DensityMatrix::pure(probe);
    return {channel_absent(s, rho), channel_present(s, rho)};
}

std::pair<DensityMatrix, DensityMatrix> hypotheses_q(const Scenario& s, const PureState& probe) {
    const std::size_t d = s.dim();
    require_dim(probe.dim(), d * d, "hypotheses_q");
    DensityMatrix absent(tensor(s.env().density().op(), reduced_second(probe, d, d)));
    DensityMatrix present(s.eta() * HermitianOperator::projector(probe) +
                          (1.0 - s.eta()) * absent.op());
    return {absent, present};
}

} // namespace illume
