#pragma once

#include <charconv>
#include <optional>
#include <string>
#include <vector>

#include "rmo/errors.hpp"

namespace rmo {

enum class ManifoldKind { ComplexCircle, ComplexSphere, Oblique, Stiefel, Grassmann, HPD, Product };

inline std::string to_string(ManifoldKind k) {
  switch (k) {
    case ManifoldKind::ComplexCircle: return "ComplexCircle";
    case ManifoldKind::ComplexSphere: return "ComplexSphere";
    case ManifoldKind::Oblique: return "Oblique";
    case ManifoldKind::Stiefel: return "Stiefel";
    case ManifoldKind::Grassmann: return "Grassmann";
    case ManifoldKind::HPD: return "HPD";
    case ManifoldKind::Product: return "Product";
  }
  return "?";
}

/// Describes one geometry. Build through the named factories, which validate
/// the invariants; nested products are flattened.
class ManifoldHandle {
 public:
  /// Unit-modulus vectors in C^n.
  static ManifoldHandle complex_circle(int n) {
    require_positive(n, "complex_circle: n");
    return ManifoldHandle(ManifoldKind::ComplexCircle, {n, 1});
  }

  /// Vectors in C^n with norm `radius`.
  static ManifoldHandle complex_sphere(int n, double radius = 1.0) {
    require_positive(n, "complex_sphere: n");
    if (!(radius > 0.0)) throw InvalidArgumentError("complex_sphere: radius must be positive");
    ManifoldHandle h(ManifoldKind::ComplexSphere, {n, 1});
    h.radius_ = radius;
    return h;
  }

  /// n x p matrices with unit-norm columns.
  static ManifoldHandle oblique(int n, int p) {
    require_positive(n, "oblique: n");
    require_positive(p, "oblique: p");
    return ManifoldHandle(ManifoldKind::Oblique, {n, p});
  }

  /// n x p matrices with orthonormal columns.
  static ManifoldHandle stiefel(int n, int p) {
    require_positive(n, "stiefel: n");
    require_positive(p, "stiefel: p");
    if (p > n) throw InvalidArgumentError("stiefel: p must not exceed n");
    return ManifoldHandle(ManifoldKind::Stiefel, {n, p});
  }

  /// p-dimensional subspaces of C^n, represented by orthonormal bases.
  static ManifoldHandle grassmann(int n, int p) {
    require_positive(n, "grassmann: n");
    require_positive(p, "grassmann: p");
    if (p > n) throw InvalidArgumentError("grassmann: p must not exceed n");
    return ManifoldHandle(ManifoldKind::Grassmann, {n, p});
  }

  /// n x n Hermitian positive definite matrices, affine-invariant metric.
  static ManifoldHandle hpd(int n) {
    require_positive(n, "hpd: n");
    return ManifoldHandle(ManifoldKind::HPD, {n, n});
  }

  static ManifoldHandle product(const std::vector<ManifoldHandle>& factors) {
    ManifoldHandle h(ManifoldKind::Product, {});
    for (const auto& f : factors) {
      if (f.kind() == ManifoldKind::Product) {
        h.factors_.insert(h.factors_.end(), f.factors_.begin(), f.factors_.end());
      } else {
        h.factors_.push_back(f);
      }
    }
    if (h.factors_.size() < 2) throw InvalidArgumentError("product: needs at least two factors");
    return h;
  }

  [[nodiscard]] ManifoldKind kind() const { return kind_; }
  [[nodiscard]] const std::vector<int>& dims() const { return dims_; }
  [[nodiscard]] int rows() const { return dims_.at(0); }
  [[nodiscard]] int cols() const { return dims_.at(1); }
  [[nodiscard]] std::optional<double> radius() const { return radius_; }
  [[nodiscard]] const std::vector<ManifoldHandle>& factors() const { return factors_; }
  [[nodiscard]] bool is_product() const { return kind_ == ManifoldKind::Product; }

  /// Number of ambient blocks a point carries.
  [[nodiscard]] std::size_t block_count() const { return is_product() ? factors_.size() : 1; }

  /// The handle governing block i.
  [[nodiscard]] const ManifoldHandle& factor(std::size_t i) const {
    return is_product() ? factors_.at(i) : *this;
  }

  /// Real dimension of the manifold.
  [[nodiscard]] int dimension() const {
    switch (kind_) {
      case ManifoldKind::ComplexCircle: return rows();
      case ManifoldKind::ComplexSphere: return 2 * rows() - 1;
      case ManifoldKind::Oblique: return (2 * rows() - 1) * cols();
      case ManifoldKind::Stiefel: return 2 * rows() * cols() - cols() * cols();
      case ManifoldKind::Grassmann: return 2 * cols() * (rows() - cols());
      case ManifoldKind::HPD: return rows() * rows();
      case ManifoldKind::Product: {
        int d = 0;
        for (const auto& f : factors_) d += f.dimension();
        return d;
      }
    }
    return 0;
  }

  /// Number of real ambient coordinates.
  [[nodiscard]] int ambient_real_size() const {
    if (!is_product()) return 2 * rows() * cols();
    int d = 0;
    for (const auto& f : factors_) d += f.ambient_real_size();
    return d;
  }

  [[nodiscard]] std::string describe() const {
    if (is_product()) {
      std::string s = "Product(";
      for (std::size_t i = 0; i < factors_.size(); ++i) {
        if (i) s += ", ";
        s += factors_[i].describe();
      }
      return s + ")";
    }
    std::string s = to_string(kind_) + "(" + std::to_string(rows());
    if (kind_ != ManifoldKind::ComplexCircle && kind_ != ManifoldKind::ComplexSphere &&
        kind_ != ManifoldKind::HPD) {
      s += "x" + std::to_string(cols());
    }
    if (radius_) {
      char buf[32];
      const auto r = std::to_chars(buf, buf + sizeof buf, *radius_);
      s += ", r=" + std::string(buf, r.ptr);
    }
    return s + ")";
  }

  friend bool operator==(const ManifoldHandle&, const ManifoldHandle&) = default;

 private:
  ManifoldHandle(ManifoldKind kind, std::vector<int> dims) : kind_(kind), dims_(std::move(dims)) {}

  static void require_positive(int v, const char* what) {
    if (v <= 0) throw InvalidArgumentError(std::string(what) + " must be positive");
  }

  ManifoldKind kind_;
  std::vector<int> dims_;
  std::optional<double> radius_;
  std::vector<ManifoldHandle> factors_;
};

}  // namespace rmo
