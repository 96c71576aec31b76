#pragma once

#include <cstddef>
#include <functional>
#include <stdexcept>
#include <string>

#include <Eigen/Core>

namespace edg {

using Index = std::size_t;
using Point = Eigen::Vector2d;
using Tensor2 = Eigen::Matrix2d;

using ScalarFunction = std::function<double(const Point&)>;
using VectorFunction = std::function<Eigen::Vector2d(const Point&)>;
using TensorFunction = std::function<Tensor2(const Point&)>;

/// Base class for every failure raised by the library.
class Error : public std::runtime_error {
 public:
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

/// Invalid geometry or topology (degenerate cells, nonconforming meshes, bad files).
class MeshError : public Error {
 public:
  using Error::Error;
};

/// Numerical breakdown: singular local systems, failed factorizations, non-SPD data.
class NumericalError : public Error {
 public:
  using Error::Error;
};

/// Skeleton unknown layout: continuous across vertices (EDG) or independent per edge (HDG).
enum class Method { EDG, HDG };

inline const char* to_string(Method m) { return m == Method::EDG ? "edg" : "hdg"; }

}  // namespace edg
