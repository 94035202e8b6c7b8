#pragma once

#include <complex>
#include <cstddef>
#include <initializer_list>
#include <utility>
#include <vector>

#include <Eigen/Dense>

#include "rmo/errors.hpp"

namespace rmo {

using Complex = std::complex<double>;
using Matrix = Eigen::MatrixXcd;
using Vector = Eigen::VectorXcd;
using RealVector = Eigen::VectorXd;

/// Ambient coordinates: one complex matrix per manifold factor. Vectors are
/// stored as n x 1 matrices. Non-product manifolds use exactly one block.
class Ambient {
 public:
  Ambient() = default;
  explicit Ambient(Matrix block) { blocks_.push_back(std::move(block)); }
  explicit Ambient(std::vector<Matrix> blocks) : blocks_(std::move(blocks)) {}
  Ambient(std::initializer_list<Matrix> blocks) : blocks_(blocks) {}

  [[nodiscard]] std::size_t size() const { return blocks_.size(); }
  [[nodiscard]] const Matrix& operator[](std::size_t i) const { return blocks_[i]; }
  [[nodiscard]] Matrix& operator[](std::size_t i) { return blocks_[i]; }
  [[nodiscard]] const std::vector<Matrix>& blocks() const { return blocks_; }
  [[nodiscard]] auto begin() const { return blocks_.begin(); }
  [[nodiscard]] auto end() const { return blocks_.end(); }

  /// Zero coordinates with the same block shapes.
  [[nodiscard]] Ambient zeros_like() const {
    std::vector<Matrix> out;
    out.reserve(blocks_.size());
    for (const auto& b : blocks_) out.push_back(Matrix::Zero(b.rows(), b.cols()));
    return Ambient(std::move(out));
  }

  [[nodiscard]] bool same_shape(const Ambient& other) const {
    if (other.size() != size()) return false;
    for (std::size_t i = 0; i < size(); ++i) {
      if (blocks_[i].rows() != other[i].rows() || blocks_[i].cols() != other[i].cols()) {
        return false;
      }
    }
    return true;
  }

  /// Total number of real coordinates.
  [[nodiscard]] Eigen::Index real_size() const {
    Eigen::Index n = 0;
    for (const auto& b : blocks_) n += 2 * b.size();
    return n;
  }

  Ambient& operator+=(const Ambient& o) {
    check_shape(o);
    for (std::size_t i = 0; i < size(); ++i) blocks_[i] += o[i];
    return *this;
  }
  Ambient& operator-=(const Ambient& o) {
    check_shape(o);
    for (std::size_t i = 0; i < size(); ++i) blocks_[i] -= o[i];
    return *this;
  }
  Ambient& operator*=(double s) {
    for (auto& b : blocks_) b *= s;
    return *this;
  }

  /// this += s * o
  Ambient& axpy(double s, const Ambient& o) {
    check_shape(o);
    for (std::size_t i = 0; i < size(); ++i) blocks_[i] += s * o[i];
    return *this;
  }

  friend Ambient operator+(Ambient a, const Ambient& b) { return a += b; }
  friend Ambient operator-(Ambient a, const Ambient& b) { return a -= b; }
  friend Ambient operator*(double s, Ambient a) { return a *= s; }
  friend Ambient operator*(Ambient a, double s) { return a *= s; }
  friend Ambient operator-(Ambient a) { return a *= -1.0; }

  friend bool operator==(const Ambient& a, const Ambient& b) {
    if (!a.same_shape(b)) return false;
    for (std::size_t i = 0; i < a.size(); ++i) {
      if (a[i] != b[i]) return false;
    }
    return true;
  }

 private:
  void check_shape(const Ambient& o) const {
    if (!same_shape(o)) throw ShapeMismatchError("ambient coordinates have different shapes");
  }

  std::vector<Matrix> blocks_;
};

/// Euclidean real inner product Re(trace(a^H b)) summed over blocks.
inline double real_dot(const Ambient& a, const Ambient& b) {
  if (!a.same_shape(b)) throw ShapeMismatchError("real_dot: shape mismatch");
  double s = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    s += (a[i].array().conjugate() * b[i].array()).real().sum();
  }
  return s;
}

inline double frobenius_norm(const Ambient& a) {
  double s = 0.0;
  for (const auto& b : a) s += b.squaredNorm();
  return std::sqrt(s);
}

}  // namespace rmo
