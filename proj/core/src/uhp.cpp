#include "hds/uhp.hpp"

#include <cmath>
#include <string>

namespace hds {

UHPoint::UHPoint(std::vector<cplx> zs) : z_(std::move(zs)) {
  for (const auto& z : z_)
    if (!(z.imag() > 0.0) || !std::isfinite(z.real()) || !std::isfinite(z.imag()))
      throw DomainError("point is not in the upper half plane: Im = " + std::to_string(z.imag()));
}

double UHPoint::imag_product() const {
  double p = 1.0;
  for (const auto& z : z_) p *= z.imag();
  return p;
}

UHPoint insert_coordinate(const UHPoint& zhat, int j, cplx zj) {
  std::vector<cplx> out(zhat.coords());
  out.insert(out.begin() + j, zj);
  return UHPoint(std::move(out));
}

UHPoint drop_coordinate(const UHPoint& z, int j) {
  std::vector<cplx> out(z.coords());
  out.erase(out.begin() + j);
  return UHPoint(std::move(out));
}

UHPoint act_hat(const ModMatrix& A, const UHPoint& zhat, int j) {
  std::vector<cplx> out;
  for (std::size_t i = 0; i < zhat.size(); ++i) out.push_back(A.act(hat_embedding(j, i), zhat[i]));
  return UHPoint(std::move(out));
}

UHPoint act_full(const ModMatrix& A, const UHPoint& z) {
  std::vector<cplx> out;
  for (std::size_t k = 0; k < z.size(); ++k) out.push_back(A.act(static_cast<int>(k), z[k]));
  return UHPoint(std::move(out));
}

UHPoint translate_hat(const UHPoint& zhat, const OFElem& q, int j) {
  std::vector<cplx> out;
  for (std::size_t i = 0; i < zhat.size(); ++i) out.push_back(zhat[i] + q.embed(hat_embedding(j, i)));
  return UHPoint(std::move(out));
}

UHPoint neg_conj(const UHPoint& z) {
  std::vector<cplx> out;
  for (const auto& w : z.coords()) out.push_back(-std::conj(w));
  return UHPoint(std::move(out));
}

UHPoint inv_conj(const UHPoint& z) {
  std::vector<cplx> out;
  for (const auto& w : z.coords()) out.push_back(1.0 / std::conj(w));
  return UHPoint(std::move(out));
}

UHPoint unit_scale_hat(const UHPoint& zhat, const OFElem& u, int j) {
  std::vector<cplx> out;
  for (std::size_t i = 0; i < zhat.size(); ++i) {
    double e = u.embed(hat_embedding(j, i));
    out.emplace_back(e * zhat[i].real(), std::abs(e) * zhat[i].imag());
  }
  return UHPoint(std::move(out));
}

}  // namespace hds
