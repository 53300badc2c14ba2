#include "orelim/ore_poly.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

#include "orelim/error.hpp"

namespace orelim {

void require_same_ring(const OrePoly& f, const OrePoly& g, const char* where) {
  if (!f.same_ring(g))
    fail(ErrorCode::RingMismatch, std::string(where) + ": operands live in different rings");
}

OrePoly::OrePoly(Automorphism sigma, std::vector<FieldElem> coeffs)
    : sigma_(std::move(sigma)), c_(std::move(coeffs)) {
  for (auto c : c_)
    if (!ctx().contains(c)) fail(ErrorCode::ContextMismatch, "coefficient outside field");
  normalize();
}

OrePoly OrePoly::constant(const Automorphism& sigma, FieldElem c) {
  return OrePoly(sigma, {c});
}

OrePoly OrePoly::monomial(const Automorphism& sigma, FieldElem c, std::size_t k) {
  std::vector<FieldElem> v(k + 1, FieldElem{});
  v[k] = c;
  return OrePoly(sigma, std::move(v));
}

void OrePoly::normalize() noexcept {
  while (!c_.empty() && c_.back().packed == 0) c_.pop_back();
}

OrePoly OrePoly::operator-() const {
  OrePoly r(sigma_);
  r.c_.reserve(c_.size());
  for (auto c : c_) r.c_.push_back(ctx().neg(c));
  return r;
}

OrePoly operator+(const OrePoly& f, const OrePoly& g) {
  require_same_ring(f, g, "add");
  const FieldCtx& k = f.ctx();
  OrePoly r(f.sigma_);
  r.c_.resize(std::max(f.c_.size(), g.c_.size()));
  for (std::size_t i = 0; i < r.c_.size(); ++i) r.c_[i] = k.add(f.coeff(i), g.coeff(i));
  r.normalize();
  return r;
}

OrePoly operator-(const OrePoly& f, const OrePoly& g) {
  require_same_ring(f, g, "sub");
  const FieldCtx& k = f.ctx();
  OrePoly r(f.sigma_);
  r.c_.resize(std::max(f.c_.size(), g.c_.size()));
  for (std::size_t i = 0; i < r.c_.size(); ++i) r.c_[i] = k.sub(f.coeff(i), g.coeff(i));
  r.normalize();
  return r;
}

OrePoly operator*(const OrePoly& f, const OrePoly& g) {
  require_same_ring(f, g, "mul");
  OrePoly r(f.sigma_);
  if (f.is_zero() || g.is_zero()) return r;
  const FieldCtx& k = f.ctx();
  const unsigned ord = f.sigma_.order();
  r.c_.assign(f.c_.size() + g.c_.size() - 1, k.zero());
  // sigma^i(g) only depends on i mod ord
  std::vector<std::vector<FieldElem>> twisted(std::min<std::size_t>(ord, f.c_.size()));
  for (std::size_t s = 0; s < twisted.size(); ++s) {
    twisted[s].reserve(g.c_.size());
    for (auto b : g.c_) twisted[s].push_back(f.sigma_.power_apply(static_cast<std::int64_t>(s), b));
  }
  for (std::size_t i = 0; i < f.c_.size(); ++i) {
    const FieldElem a = f.c_[i];
    if (a.packed == 0) continue;
    const auto& tg = twisted[i % ord];
    for (std::size_t j = 0; j < tg.size(); ++j) r.c_[i + j] = k.add(r.c_[i + j], k.mul(a, tg[j]));
  }
  r.normalize();
  return r;
}

OrePoly operator*(FieldElem c, const OrePoly& f) {
  OrePoly r(f.sigma_);
  if (c.packed == 0) return r;
  r.c_.reserve(f.c_.size());
  for (auto a : f.c_) r.c_.push_back(f.ctx().mul(c, a));
  r.normalize();
  return r;
}

OrePoly OrePoly::map_coeffs(const Automorphism& tau) const {
  if (!tau.ctx().same_field(ctx()))
    fail(ErrorCode::ContextMismatch, "twist by an automorphism of another field");
  OrePoly r(sigma_);
  r.c_.reserve(c_.size());
  for (auto a : c_) r.c_.push_back(tau(a));
  return r;
}

std::string OrePoly::to_string(const std::string& var) const {
  if (c_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (std::size_t i = c_.size(); i-- > 0;) {
    if (c_[i].packed == 0) continue;
    if (!first) os << " + ";
    first = false;
    const std::string coef = ctx().to_string(c_[i]);
    if (i == 0) {
      os << coef;
      continue;
    }
    if (coef != "1") {
      if (coef.find('+') != std::string::npos)
        os << '(' << coef << ")*";
      else
        os << coef << '*';
    }
    os << var;
    if (i > 1) os << '^' << i;
  }
  return os.str();
}

DivMod right_divmod(const OrePoly& a, const OrePoly& b) {
  require_same_ring(a, b, "right_divmod");
  if (b.is_zero()) fail(ErrorCode::DivisionByZero, "right division by the zero polynomial");
  const FieldCtx& k = a.ctx();
  const Automorphism& s = a.sigma();
  const int db = b.degree();
  const FieldElem lb = b.leading();
  OrePoly r = a;
  std::vector<FieldElem> qc(r.degree() >= db ? r.degree() - db + 1 : 0);
  while (!r.is_zero() && r.degree() >= db) {
    // (c x^d)(lb x^db) has leading coefficient c sigma^d(lb)
    const int d = r.degree() - db;
    const FieldElem c = k.div(r.leading(), s.power_apply(d, lb));
    qc[d] = c;
    const int before = r.degree();
    r = r - OrePoly::monomial(s, c, d) * b;
    if (r.degree() >= before) throw std::logic_error("right_divmod: leading term did not cancel");
  }
  return {OrePoly(s, std::move(qc)), std::move(r)};
}

DivMod left_divmod(const OrePoly& a, const OrePoly& b) {
  require_same_ring(a, b, "left_divmod");
  if (b.is_zero()) fail(ErrorCode::DivisionByZero, "left division by the zero polynomial");
  const FieldCtx& k = a.ctx();
  const Automorphism& s = a.sigma();
  const int db = b.degree();
  const FieldElem lb = b.leading();
  OrePoly r = a;
  std::vector<FieldElem> qc(r.degree() >= db ? r.degree() - db + 1 : 0);
  while (!r.is_zero() && r.degree() >= db) {
    // (lb x^db)(c x^d) has leading coefficient lb sigma^db(c)
    const int d = r.degree() - db;
    const FieldElem c = s.power_apply(-db, k.div(r.leading(), lb));
    qc[d] = c;
    const int before = r.degree();
    r = r - b * OrePoly::monomial(s, c, d);
    if (r.degree() >= before) throw std::logic_error("left_divmod: leading term did not cancel");
  }
  return {OrePoly(s, std::move(qc)), std::move(r)};
}

OrePoly make_monic(const OrePoly& f) {
  if (f.is_zero()) fail(ErrorCode::ZeroPolynomial, "make_monic of the zero polynomial");
  return f.ctx().inv(f.leading()) * f;
}

OrePoly gcrd(const OrePoly& f, const OrePoly& g) {
  require_same_ring(f, g, "gcrd");
  if (f.is_zero() && g.is_zero()) fail(ErrorCode::BothZero, "gcrd of two zero polynomials");
  OrePoly a = f, b = g;
  while (!b.is_zero()) {
    OrePoly r = right_divmod(a, b).remainder;
    a = std::move(b);
    b = std::move(r);
  }
  return make_monic(a);
}

}  // namespace orelim
