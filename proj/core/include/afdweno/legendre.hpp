#pragma once

// Legendre-basis polynomials on the unit zone [-1/2, 1/2], pointwise stencil
// fits, and the squared-derivative smoothness indicator.

#include <array>
#include <span>
#include <string_view>

namespace afdweno {

inline constexpr int kMaxDegree = 8;

/// Polynomial p(xi) = sum_k c_k L_k(xi) in local unit coordinates.
class ModalPolynomial {
 public:
  ModalPolynomial() = default;
  explicit ModalPolynomial(int degree);
  ModalPolynomial(std::initializer_list<double> coeffs);

  int degree() const { return degree_; }
  double operator[](int k) const { return coeffs_[k]; }
  double& operator[](int k) { return coeffs_[k]; }
  std::span<const double> coeffs() const { return {coeffs_.data(), std::size_t(degree_ + 1)}; }

  /// this += scale * other; the degree grows to cover other.
  void add_scaled(const ModalPolynomial& other, double scale);
  ModalPolynomial& operator*=(double s);

 private:
  std::array<double, kMaxDegree + 1> coeffs_{};
  int degree_ = 0;
};

/// L_k(xi), 0 <= k <= 8.
double eval_legendre(int k, double xi);

/// n-th xi-derivative of p at xi. Derivatives beyond the degree are zero.
double eval_poly(const ModalPolynomial& p, int n, double xi);

/// Stencils used by the zone-centred (CENTER_*) and zone-boundary (ZB_*)
/// interpolations.
enum class StencilId {
  center_l3,
  center_c3,
  center_r3,
  center_c5,
  center_c7,
  center_c9,
  zb_l3,
  zb_r3,
  zb_c4,
  zb_c6,
  zb_c8,
};

struct StencilSpec {
  StencilId id;
  int first_offset;  // zone offset of the first node relative to the anchor
  int size;          // number of nodes = degree + 1
  bool boundary;     // ZB_*: anchor is the zone left of the boundary

  int degree() const { return size - 1; }
  int last_offset() const { return first_offset + size - 1; }
  /// Unit coordinate of node j (0-based) in the polynomial's frame.
  double node(int j) const {
    return boundary ? double(first_offset + j) - 0.5 : double(first_offset + j);
  }
};

const StencilSpec& stencil_spec(StencilId id);
std::string_view stencil_name(StencilId id);

/// Exact pointwise interpolant through `values` (ordered by ascending offset).
/// Throws UsageError if values.size() != stencil size.
ModalPolynomial fit_stencil(StencilId id, std::span<const double> values);

/// sum_{m>=1} integral over [-1/2,1/2] of (d^m p / dxi^m)^2.
double smoothness_indicator(const ModalPolynomial& p);

}  // namespace afdweno
