#include "orelim/bivar.hpp"

#include <algorithm>
#include <sstream>

#include "orelim/error.hpp"

namespace orelim {
namespace {

void require_same(const BivarOrePoly& f, const BivarOrePoly& g, const char* where) {
  if (!f.same_ring(g))
    fail(ErrorCode::RingMismatch, std::string(where) + ": operands live in different rings");
}

}  // namespace

BivarOrePoly::BivarOrePoly(Automorphism sigma1, Automorphism sigma2)
    : sigma1_(std::move(sigma1)), sigma2_(std::move(sigma2)) {
  if (!sigma1_.ctx().same_field(sigma2_.ctx()))
    fail(ErrorCode::ContextMismatch, "sigma1 and sigma2 act on different fields");
}

BivarOrePoly::BivarOrePoly(Automorphism sigma1, Automorphism sigma2, std::vector<OrePoly> coeffs)
    : BivarOrePoly(std::move(sigma1), std::move(sigma2)) {
  c_ = std::move(coeffs);
  for (const auto& a : c_)
    if (!(a.sigma() == sigma1_))
      fail(ErrorCode::RingMismatch, "x2-coefficient is not in A[x1; sigma1]");
  normalize();
}

BivarOrePoly BivarOrePoly::constant(const Automorphism& sigma1, const Automorphism& sigma2,
                                   FieldElem c) {
  return BivarOrePoly(sigma1, sigma2, {OrePoly::constant(sigma1, c)});
}

BivarOrePoly BivarOrePoly::x1_pow(const Automorphism& sigma1, const Automorphism& sigma2,
                                  std::size_t i) {
  return BivarOrePoly(sigma1, sigma2, {OrePoly::monomial(sigma1, sigma1.ctx().one(), i)});
}

BivarOrePoly BivarOrePoly::x2_pow(const Automorphism& sigma1, const Automorphism& sigma2,
                                  std::size_t j) {
  std::vector<OrePoly> c(j + 1, OrePoly(sigma1));
  c[j] = OrePoly::constant(sigma1, sigma1.ctx().one());
  return BivarOrePoly(sigma1, sigma2, std::move(c));
}

void BivarOrePoly::normalize() {
  while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
}

int BivarOrePoly::degree_x1() const noexcept {
  int d = kNegInfDegree;
  for (const auto& a : c_) d = std::max(d, a.degree());
  return d;
}

OrePoly BivarOrePoly::coeff_x2(std::size_t i) const {
  return i < c_.size() ? c_[i] : OrePoly(sigma1_);
}

OrePoly BivarOrePoly::leading_x2() const {
  return c_.empty() ? OrePoly(sigma1_) : c_.back();
}

BivarOrePoly BivarOrePoly::operator-() const {
  BivarOrePoly r(sigma1_, sigma2_);
  for (const auto& a : c_) r.c_.push_back(-a);
  return r;
}

BivarOrePoly operator+(const BivarOrePoly& f, const BivarOrePoly& g) {
  require_same(f, g, "bivariate add");
  BivarOrePoly r(f.sigma1_, f.sigma2_);
  const std::size_t n = std::max(f.c_.size(), g.c_.size());
  for (std::size_t i = 0; i < n; ++i) r.c_.push_back(f.coeff_x2(i) + g.coeff_x2(i));
  r.normalize();
  return r;
}

BivarOrePoly operator-(const BivarOrePoly& f, const BivarOrePoly& g) {
  require_same(f, g, "bivariate sub");
  BivarOrePoly r(f.sigma1_, f.sigma2_);
  const std::size_t n = std::max(f.c_.size(), g.c_.size());
  for (std::size_t i = 0; i < n; ++i) r.c_.push_back(f.coeff_x2(i) - g.coeff_x2(i));
  r.normalize();
  return r;
}

BivarOrePoly operator*(const BivarOrePoly& f, const BivarOrePoly& g) {
  require_same(f, g, "bivariate mul");
  BivarOrePoly r(f.sigma1_, f.sigma2_);
  if (f.is_zero() || g.is_zero()) return r;
  r.c_.assign(f.c_.size() + g.c_.size() - 1, OrePoly(f.sigma1_));
  for (std::size_t i = 0; i < f.c_.size(); ++i) {
    if (f.c_[i].is_zero()) continue;
    const Automorphism twist(f.sigma2_.field(),
                             static_cast<std::uint64_t>(i) * f.sigma2_.exponent());
    for (std::size_t j = 0; j < g.c_.size(); ++j) {
      if (g.c_[j].is_zero()) continue;
      r.c_[i + j] = r.c_[i + j] + f.c_[i] * g.c_[j].map_coeffs(twist);
    }
  }
  r.normalize();
  return r;
}

BivarOrePoly BivarOrePoly::shift_left(std::size_t k) const {
  BivarOrePoly r(sigma1_, sigma2_);
  if (c_.empty()) return r;
  const Automorphism twist(sigma2_.field(), static_cast<std::uint64_t>(k) * sigma2_.exponent());
  r.c_.assign(k, OrePoly(sigma1_));
  for (const auto& a : c_) r.c_.push_back(a.map_coeffs(twist));
  return r;
}

std::string BivarOrePoly::to_string() const {
  if (c_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (std::size_t i = c_.size(); i-- > 0;) {
    const OrePoly& a = c_[i];
    if (a.is_zero()) continue;
    if (!first) os << " + ";
    first = false;
    const std::string inner = a.to_string("x1");
    if (i == 0) {
      os << inner;
      continue;
    }
    const bool bare_monic = a.degree() >= 1 && a.coeffs().size() > 0 &&
                            a.leading() == a.ctx().one() &&
                            std::all_of(a.coeffs().begin(), a.coeffs().end() - 1,
                                        [](FieldElem c) { return c.packed == 0; });
    if (inner == "1") {
      // bare power of x2
    } else if (a.degree() == 0 && inner.find('+') == std::string::npos) {
      os << inner << '*';
    } else if (bare_monic) {
      os << inner << '*';
    } else {
      os << '(' << inner << ")*";
    }
    os << "x2";
    if (i > 1) os << '^' << i;
  }
  return os.str();
}

}  // namespace orelim
