#pragma once

#include <memory>
#include <utility>

#include "rmo/geometry/ambient.hpp"

namespace rmo {

/// A manifold point in ambient coordinates. Copies share storage, so carrying
/// the base point inside every tangent is cheap.
class Point {
 public:
  Point() : coords_(std::make_shared<const Ambient>()) {}
  explicit Point(Ambient coords) : coords_(std::make_shared<const Ambient>(std::move(coords))) {}
  explicit Point(Matrix block) : Point(Ambient(std::move(block))) {}

  [[nodiscard]] const Ambient& coords() const { return *coords_; }
  [[nodiscard]] const Matrix& block(std::size_t i = 0) const { return (*coords_)[i]; }
  [[nodiscard]] std::size_t size() const { return coords_->size(); }

  /// Same storage, or bitwise-equal coordinates.
  [[nodiscard]] bool same_as(const Point& other) const {
    return coords_ == other.coords_ || *coords_ == *other.coords_;
  }

 private:
  std::shared_ptr<const Ambient> coords_;
};

/// A tangent vector together with the point it is attached to.
struct Tangent {
  Ambient coords;
  Point base;

  [[nodiscard]] const Matrix& block(std::size_t i = 0) const { return coords[i]; }

  Tangent& operator+=(const Tangent& o) {
    coords += o.coords;
    return *this;
  }
  Tangent& operator-=(const Tangent& o) {
    coords -= o.coords;
    return *this;
  }
  Tangent& operator*=(double s) {
    coords *= s;
    return *this;
  }
  Tangent& axpy(double s, const Tangent& o) {
    coords.axpy(s, o.coords);
    return *this;
  }

  friend Tangent operator+(Tangent a, const Tangent& b) { return a += b; }
  friend Tangent operator-(Tangent a, const Tangent& b) { return a -= b; }
  friend Tangent operator*(double s, Tangent a) { return a *= s; }
  friend Tangent operator*(Tangent a, double s) { return a *= s; }
  friend Tangent operator-(Tangent a) { return a *= -1.0; }
};

}  // namespace rmo
