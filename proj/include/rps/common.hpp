#pragma once

#include <Eigen/Dense>

#include <stdexcept>
#include <string>
#include <vector>

namespace rps {

using VertexId = int;
using FaceId = int;
using EdgeId = int;
using HalfedgeId = int;

inline constexpr int kNone = -1;

// Default coordinate tolerance. Every geometric routine takes an explicit
// eps argument that defaults to this value.
inline constexpr double kEpsCoord = 1e-6;

using Vec3 = Eigen::Vector3d;
using Mat3 = Eigen::Matrix3d;

// Root of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Error carrying a module-specific enumerated code.
template <class Code>
class CodedError : public Error {
 public:
  CodedError(Code code, const std::string& what) : Error(what), code_(code) {}
  Code code() const noexcept { return code_; }

 private:
  Code code_;
};

}  // namespace rps
