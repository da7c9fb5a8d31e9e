#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace illume {

class Error : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

/// Malformed or out-of-range input (bad probabilities, non-Hermitian matrix, ...).
class InvalidArgument : public Error {
  public:
    using Error::Error;
};

class DimensionError : public InvalidArgument {
  public:
    using InvalidArgument::InvalidArgument;
};

/// A request the configuration cannot serve (e.g. quantum search above the dimension cap).
class ConfigurationError : public Error {
  public:
    using Error::Error;
};

class ConvergenceError : public Error {
  public:
    ConvergenceError(std::size_t dim, double residual)
        : Error("eigensolver did not converge (dim=" + std::to_string(dim) +
                ", residual=" + std::to_string(residual) + ")"),
          dim_(dim), residual_(residual) {}

    std::size_t dim() const noexcept { return dim_; }
    double residual() const noexcept { return residual_; }

  private:
    std::size_t dim_;
    double residual_;
};

} // namespace illume
