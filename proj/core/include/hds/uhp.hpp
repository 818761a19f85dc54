#pragma once

#include <complex>
#include <initializer_list>
#include <vector>

#include "hds/field.hpp"

namespace hds {

// Point of H^m (m = 0, 1, 2). A full point has one coordinate per embedding; a reduced
// point zhat_j drops coordinate j.
class UHPoint {
 public:
  UHPoint() = default;
  UHPoint(std::initializer_list<cplx> zs) : UHPoint(std::vector<cplx>(zs)) {}
  explicit UHPoint(std::vector<cplx> zs);

  std::size_t size() const { return z_.size(); }
  bool empty() const { return z_.empty(); }
  cplx operator[](std::size_t i) const { return z_[i]; }
  const std::vector<cplx>& coords() const { return z_; }
  double imag_product() const;

 private:
  std::vector<cplx> z_;
};

// Embedding index of the i-th coordinate of a point with coordinate j removed.
inline int hat_embedding(int j, std::size_t i) { return static_cast<int>(i) < j ? static_cast<int>(i) : static_cast<int>(i) + 1; }

UHPoint insert_coordinate(const UHPoint& zhat, int j, cplx zj);
UHPoint drop_coordinate(const UHPoint& z, int j);

// Componentwise maps on a reduced point (coordinates k != j).
UHPoint act_hat(const ModMatrix& A, const UHPoint& zhat, int j);
UHPoint act_full(const ModMatrix& A, const UHPoint& z);
UHPoint translate_hat(const UHPoint& zhat, const OFElem& q, int j);
UHPoint neg_conj(const UHPoint& z);   // -conj(z)
UHPoint inv_conj(const UHPoint& z);   // 1 / conj(z)
UHPoint unit_scale_hat(const UHPoint& zhat, const OFElem& u, int j);  // eps_k x_k + i |eps_k| y_k

}  // namespace hds
