#pragma once

namespace illume {

/// Numerical policy shared by every module. Absolute tolerances.
struct Tolerances {
    /// Hermiticity and density-matrix checks at construction.
    static constexpr double construction = 1e-10;
    /// Eigendecomposition reconstruction and orthonormality of bases.
    static constexpr double reconstruction = 1e-8;
    /// Unit norm of a pure state.
    static constexpr double state_norm = 1e-12;
    /// Environment eigenvalues at or below this are exactly zero.
    static constexpr double zero_eigenvalue = 1e-12;
    /// Parameters this close to a region boundary are labelled III.
    static constexpr double boundary = 1e-12;
    /// Eigenvalues of p1*rho1 - p0*rho0 within this of zero go to the "absent" projector.
    static constexpr double projector = 1e-12;
    /// Negative eigenvalue counting in the lemma checks.
    static constexpr double lemma = 1e-10;
    /// Hand-typed spectra are accepted (then renormalised) when the sum is this close to 1.
    static constexpr double input_spectrum_sum = 1e-6;
};

} // namespace illume
