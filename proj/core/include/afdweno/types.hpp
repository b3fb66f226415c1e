#pragma once

#include <Eigen/Core>

#include <stdexcept>
#include <string>

namespace afdweno {

/// Largest number of conserved components of any supported system
/// (the ten-moment closure has six).
inline constexpr int kMaxComponents = 6;

/// Per-point state vector. Fixed capacity, no heap allocation.
using StateVector =
    Eigen::Matrix<double, Eigen::Dynamic, 1, Eigen::ColMajor, kMaxComponents, 1>;

/// Square matrix acting on state vectors (Jacobians, eigenvector matrices).
using StateMatrix = Eigen::Matrix<double, Eigen::Dynamic, Eigen::Dynamic, Eigen::ColMajor,
                                  kMaxComponents, kMaxComponents>;

enum class Direction { x, y };

/// Raised when a state violates the admissibility constraints of its system
/// (negative density or pressure, superluminal velocity, ...).
class DomainError : public std::runtime_error {
 public:
  explicit DomainError(const std::string& what) : std::runtime_error(what) {}
};

/// Raised on programming errors: bad stencil sizes, unsupported orders, etc.
class UsageError : public std::invalid_argument {
 public:
  explicit UsageError(const std::string& what) : std::invalid_argument(what) {}
};

}  // namespace afdweno
