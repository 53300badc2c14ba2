#include "orelim/field.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <numeric>
#include <random>
#include <sstream>
#include <tuple>
#include <utility>

#include "orelim/error.hpp"

namespace orelim {

using detail::addmod;
using detail::invmod;
using detail::mulmod;
using detail::powmod;
using detail::submod;

bool is_prime(std::uint64_t n) noexcept {
  if (n < 2) return false;
  for (std::uint64_t small : {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37}) {
    if (n % small == 0) return n == small;
  }
  std::uint64_t d = n - 1;
  int s = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++s;
  }
  // This base set is deterministic for all 64-bit n.
  for (std::uint64_t a : {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37}) {
    std::uint64_t x = powmod(a, d, n);
    if (x == 1 || x == n - 1) continue;
    bool composite = true;
    for (int r = 1; r < s; ++r) {
      x = mulmod(x, x, n);
      if (x == n - 1) {
        composite = false;
        break;
      }
    }
    if (composite) return false;
  }
  return true;
}

namespace {

constexpr std::uint64_t kMaxOrder = std::uint64_t{1} << 63;
constexpr std::uint64_t kLogTableLimit = std::uint64_t{1} << 16;

// Dense polynomials over GF(p), low coefficient first.
using Gfp = std::vector<std::uint64_t>;

void trim(Gfp& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

// a mod f for monic f.
Gfp gfp_rem(Gfp a, const Gfp& f, std::uint64_t p) {
  trim(a);
  const std::size_t df = f.size() - 1;
  while (a.size() > df) {
    const std::uint64_t c = a.back();
    const std::size_t shift = a.size() - 1 - df;
    for (std::size_t j = 0; j < df; ++j)
      a[shift + j] = submod(a[shift + j], mulmod(c, f[j], p), p);
    a.pop_back();
    trim(a);
  }
  return a;
}

Gfp gfp_mulmod(const Gfp& a, const Gfp& b, const Gfp& f, std::uint64_t p) {
  if (a.empty() || b.empty()) return {};
  Gfp c(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j)
      c[i + j] = addmod(c[i + j], mulmod(a[i], b[j], p), p);
  return gfp_rem(std::move(c), f, p);
}

Gfp gfp_powmod(Gfp base, std::uint64_t e, const Gfp& f, std::uint64_t p) {
  Gfp r{1};
  base = gfp_rem(std::move(base), f, p);
  while (e) {
    if (e & 1) r = gfp_mulmod(r, base, f, p);
    base = gfp_mulmod(base, base, f, p);
    e >>= 1;
  }
  return r;
}

Gfp gfp_gcd(Gfp a, Gfp b, std::uint64_t p) {
  trim(a);
  trim(b);
  while (!b.empty()) {
    // make b monic so gfp_rem applies
    const std::uint64_t inv = invmod(b.back(), p);
    for (auto& c : b) c = mulmod(c, inv, p);
    a = gfp_rem(std::move(a), b, p);
    std::swap(a, b);
  }
  return a;
}

std::vector<std::uint64_t> prime_factors(std::uint64_t n) {
  std::vector<std::uint64_t> out;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) {
      out.push_back(d);
      while (n % d == 0) n /= d;
    }
  }
  if (n > 1) out.push_back(n);
  return out;
}

// Rabin's test for a monic f of degree m over GF(p).
bool gfp_irreducible(const Gfp& f, std::uint64_t p) {
  const std::size_t m = f.size() - 1;
  if (m == 1) return true;
  const Gfp t{0, 1};
  std::vector<Gfp> frob(m + 1);  // frob[k] = t^(p^k) mod f
  frob[0] = t;
  for (std::size_t k = 1; k <= m; ++k) frob[k] = gfp_powmod(frob[k - 1], p, f, p);
  if (frob[m] != t) return false;
  for (std::uint64_t r : prime_factors(m)) {
    Gfp h = frob[m / r];
    h.resize(std::max<std::size_t>(h.size(), 2), 0);
    h[1] = submod(h[1], 1, p);
    trim(h);
    if (gfp_gcd(h, f, p).size() != 1) return false;
  }
  return true;
}

Gfp lowest_irreducible(std::uint64_t p, unsigned m) {
  Gfp f(m + 1, 0);
  f[m] = 1;
  if (m == 1) return f;
  for (std::uint64_t v = 0;; ++v) {
    std::uint64_t x = v;
    for (unsigned i = 0; i < m; ++i) {
      f[i] = x % p;
      x /= p;
    }
    if (f[0] == 0) continue;
    if (gfp_irreducible(f, p)) return f;
  }
}

std::uint64_t checked_order(std::uint64_t p, unsigned m) {
  std::uint64_t q = 1;
  for (unsigned i = 0; i < m; ++i) {
    if (q > (kMaxOrder - 1) / p) return 0;
    q *= p;
  }
  return q;
}

}  // namespace

FieldPtr FieldCtx::create(std::uint64_t p, unsigned m,
                          std::optional<std::vector<std::uint64_t>> modulus) {
  if (m == 0) fail(ErrorCode::DegreeMismatch, "field degree must be at least 1");
  if (!is_prime(p)) fail(ErrorCode::NotPrime, std::to_string(p) + " is not prime");
  if (checked_order(p, m) == 0)
    fail(ErrorCode::FieldTooLarge,
         "GF(" + std::to_string(p) + "^" + std::to_string(m) + ") exceeds 2^63 elements");
  Gfp f;
  if (modulus) {
    f = *modulus;
    if (f.size() != m + 1)
      fail(ErrorCode::DegreeMismatch, "modulus degree does not match field degree");
    for (auto& c : f) c %= p;
    if (f.back() != 1) fail(ErrorCode::DegreeMismatch, "modulus must be monic");
    if (!gfp_irreducible(f, p))
      fail(ErrorCode::ReducibleModulus, "modulus is reducible over GF(" + std::to_string(p) + ")");
  } else {
    f = lowest_irreducible(p, m);
  }
  return FieldPtr(new FieldCtx(p, m, std::move(f)));
}

FieldCtx::FieldCtx(std::uint64_t p, unsigned m, std::vector<std::uint64_t> modulus)
    : p_(p), m_(m), order_(checked_order(p, m)), modulus_(std::move(modulus)) {
  if (p_ == 2) {
    for (unsigned i = 0; i < m_; ++i)
      if (modulus_[i]) binary_reduction_ |= std::uint64_t{1} << i;
  }
  gen_ = m_ == 1 ? FieldElem{(p_ - modulus_[0]) % p_} : FieldElem{p_};
  if (p_ != 2 && order_ > 2 && order_ <= kLogTableLimit) build_log_tables();
  build_frobenius_tables();
}

bool FieldCtx::same_field(const FieldCtx& other) const noexcept {
  return this == &other || (p_ == other.p_ && m_ == other.m_ && modulus_ == other.modulus_);
}

void FieldCtx::unpack(FieldElem a, std::uint64_t* out) const noexcept {
  std::uint64_t v = a.packed;
  if (p_ == 2) {
    for (unsigned i = 0; i < m_; ++i) out[i] = (v >> i) & 1;
    return;
  }
  for (unsigned i = 0; i < m_; ++i) {
    out[i] = v % p_;
    v /= p_;
  }
}

FieldElem FieldCtx::pack(const std::uint64_t* digits) const noexcept {
  std::uint64_t v = 0;
  if (p_ == 2) {
    for (unsigned i = 0; i < m_; ++i) v |= (digits[i] & 1) << i;
    return {v};
  }
  for (unsigned i = m_; i-- > 0;) v = v * p_ + digits[i];
  return {v};
}

FieldElem FieldCtx::from_int(std::int64_t v) const noexcept {
  const auto p = static_cast<std::int64_t>(p_);  // p < 2^63 by construction
  std::int64_t r = v % p;
  if (r < 0) r += p;
  return {static_cast<std::uint64_t>(r)};
}

FieldElem FieldCtx::from_coeffs(std::span<const std::uint64_t> coeffs) const {
  FieldElem r = zero();
  for (std::size_t i = coeffs.size(); i-- > 0;)
    r = add(mul(r, gen_), FieldElem{coeffs[i] % p_});
  return r;
}

std::vector<std::uint64_t> FieldCtx::coeffs(FieldElem a) const {
  std::vector<std::uint64_t> out(m_);
  unpack(a, out.data());
  return out;
}

FieldElem FieldCtx::add(FieldElem a, FieldElem b) const noexcept {
  if (p_ == 2) return {a.packed ^ b.packed};
  if (m_ == 1) return {addmod(a.packed, b.packed, p_)};
  std::uint64_t x = a.packed, y = b.packed, res = 0, place = 1;
  for (unsigned i = 0; i < m_; ++i) {
    std::uint64_t d = x % p_ + y % p_;
    if (d >= p_) d -= p_;
    res += d * place;
    place *= p_;
    x /= p_;
    y /= p_;
  }
  return {res};
}

FieldElem FieldCtx::neg(FieldElem a) const noexcept {
  if (p_ == 2) return a;
  if (m_ == 1) return {a.packed ? p_ - a.packed : 0};
  std::uint64_t x = a.packed, res = 0, place = 1;
  for (unsigned i = 0; i < m_; ++i) {
    const std::uint64_t d = x % p_;
    res += (d ? p_ - d : 0) * place;
    place *= p_;
    x /= p_;
  }
  return {res};
}

FieldElem FieldCtx::sub(FieldElem a, FieldElem b) const noexcept {
  if (p_ == 2) return {a.packed ^ b.packed};
  if (m_ == 1) return {submod(a.packed, b.packed, p_)};
  return add(a, neg(b));
}

FieldElem FieldCtx::mul_slow(FieldElem a, FieldElem b) const noexcept {
  if (m_ == 1) return {mulmod(a.packed, b.packed, p_)};
  std::uint64_t da[64], db[64], prod[128] = {};
  unpack(a, da);
  unpack(b, db);
  for (unsigned i = 0; i < m_; ++i) {
    if (da[i] == 0) continue;
    for (unsigned j = 0; j < m_; ++j)
      prod[i + j] = addmod(prod[i + j], mulmod(da[i], db[j], p_), p_);
  }
  for (unsigned k = 2 * m_ - 2; k >= m_; --k) {
    const std::uint64_t c = prod[k];
    if (c == 0) continue;
    for (unsigned j = 0; j < m_; ++j)
      prod[k - m_ + j] = submod(prod[k - m_ + j], mulmod(c, modulus_[j], p_), p_);
    prod[k] = 0;
  }
  return pack(prod);
}

FieldElem FieldCtx::mul(FieldElem a, FieldElem b) const noexcept {
  if (p_ == 2) {
    std::uint64_t r = 0, x = a.packed, y = b.packed;
    const std::uint64_t top = std::uint64_t{1} << m_;
    while (y) {
      if (y & 1) r ^= x;
      y >>= 1;
      x <<= 1;
      if (x & top) x ^= top | binary_reduction_;
    }
    return {r};
  }
  if (!exp_table_.empty()) {
    if (a.packed == 0 || b.packed == 0) return zero();
    return {exp_table_[log_table_[a.packed] + log_table_[b.packed]]};
  }
  return mul_slow(a, b);
}

FieldElem FieldCtx::pow(FieldElem a, std::uint64_t e) const noexcept {
  FieldElem r = one();
  while (e) {
    if (e & 1) r = mul(r, a);
    a = mul(a, a);
    e >>= 1;
  }
  return r;
}

FieldElem FieldCtx::inv(FieldElem a) const {
  if (a.packed == 0) fail(ErrorCode::ZeroElement, "inverse of zero");
  if (!exp_table_.empty()) return {exp_table_[(order_ - 1) - log_table_[a.packed]]};
  if (m_ == 1) return {invmod(a.packed, p_)};
  return pow(a, order_ - 2);
}

void FieldCtx::build_log_tables() {
  const std::uint64_t q = order_;
  const auto factors = prime_factors(q - 1);
  auto slow_pow = [&](FieldElem a, std::uint64_t e) {
    FieldElem r = one();
    while (e) {
      if (e & 1) r = mul_slow(r, a);
      a = mul_slow(a, a);
      e >>= 1;
    }
    return r;
  };
  FieldElem g{0};
  for (std::uint64_t c = 2; c < q; ++c) {
    bool primitive = true;
    for (auto r : factors) {
      if (slow_pow(FieldElem{c}, (q - 1) / r) == one()) {
        primitive = false;
        break;
      }
    }
    if (primitive) {
      g = FieldElem{c};
      break;
    }
  }
  exp_table_.assign(2 * (q - 1), 0);
  log_table_.assign(q, 0);
  FieldElem x = one();
  for (std::uint64_t i = 0; i < q - 1; ++i) {
    exp_table_[i] = static_cast<std::uint32_t>(x.packed);
    exp_table_[i + q - 1] = static_cast<std::uint32_t>(x.packed);
    log_table_[x.packed] = static_cast<std::uint32_t>(i);
    x = mul_slow(x, g);
  }
}

void FieldCtx::build_frobenius_tables() {
  frobenius_digits_.assign(m_, std::vector<std::uint64_t>(std::size_t{m_} * m_, 0));
  frobenius_images_.assign(m_, std::vector<FieldElem>(m_));
  std::uint64_t pe = 1;
  for (unsigned e = 0; e < m_; ++e) {
    FieldElem ti = one();
    for (unsigned i = 0; i < m_; ++i) {
      const FieldElem img = pow(ti, pe);
      frobenius_images_[e][i] = img;
      unpack(img, &frobenius_digits_[e][std::size_t{i} * m_]);
      ti = mul(ti, gen_);
    }
    if (e + 1 < m_) pe *= p_;
  }
}

FieldElem FieldCtx::frobenius(FieldElem a, std::uint64_t e) const noexcept {
  e %= m_;
  if (e == 0) return a;
  const auto& images = frobenius_images_[e];
  if (p_ == 2) {
    std::uint64_t r = 0, v = a.packed;
    for (unsigned i = 0; v; ++i, v >>= 1)
      if (v & 1) r ^= images[i].packed;
    return {r};
  }
  std::uint64_t da[64], out[64] = {};
  unpack(a, da);
  const auto& table = frobenius_digits_[e];
  for (unsigned i = 0; i < m_; ++i) {
    if (da[i] == 0) continue;
    const std::uint64_t* row = &table[std::size_t{i} * m_];
    for (unsigned j = 0; j < m_; ++j)
      out[j] = addmod(out[j], mulmod(da[i], row[j], p_), p_);
  }
  return pack(out);
}

std::vector<FieldElem> FieldCtx::prime_basis() const {
  std::vector<FieldElem> basis;
  basis.reserve(m_);
  FieldElem x = one();
  for (unsigned i = 0; i < m_; ++i) {
    basis.push_back(x);
    x = m_ == 1 ? x : mul(x, gen_);
  }
  return basis;
}

std::string FieldCtx::to_string(FieldElem a) const {
  const auto c = coeffs(a);
  std::ostringstream os;
  bool first = true;
  for (unsigned i = m_; i-- > 0;) {
    if (c[i] == 0) continue;
    if (!first) os << " + ";
    first = false;
    if (i == 0) {
      os << c[i];
      continue;
    }
    if (c[i] != 1) os << c[i] << '*';
    os << 't';
    if (i > 1) os << '^' << i;
  }
  if (first) os << '0';
  return os.str();
}

std::string FieldCtx::spec() const {
  std::ostringstream os;
  os << "GF(" << p_ << '^' << m_ << "; modulus = ";
  bool first = true;
  for (unsigned i = 0; i <= m_; ++i) {
    const auto c = modulus_[i];
    if (c == 0) continue;
    if (!first) os << " + ";
    first = false;
    if (i == 0) {
      os << c;
      continue;
    }
    if (c != 1) os << c << '*';
    os << 't';
    if (i > 1) os << '^' << i;
  }
  os << ')';
  return os.str();
}

// ---------------------------------------------------------------------------

Automorphism::Automorphism(FieldPtr field, std::uint64_t e)
    : field_(std::move(field)), e_(static_cast<unsigned>(e % field_->degree())) {}

unsigned Automorphism::order() const noexcept {
  const unsigned m = field_->degree();
  return m / std::gcd(e_, m);
}

FieldElem Automorphism::power_apply(std::int64_t k, FieldElem a) const noexcept {
  const auto ord = static_cast<std::int64_t>(order());
  const std::int64_t kk = ((k % ord) + ord) % ord;
  return field_->frobenius(a, static_cast<std::uint64_t>(kk) * e_);
}

Automorphism Automorphism::compose(const Automorphism& other) const {
  if (!field_->same_field(*other.field_))
    fail(ErrorCode::ContextMismatch, "composing automorphisms of different fields");
  return Automorphism(field_, e_ + other.e_);
}

Automorphism Automorphism::inverse() const {
  return Automorphism(field_, field_->degree() - e_);
}

FieldElem apply_aut(const Automorphism& sigma, FieldElem a) {
  if (!sigma.ctx().contains(a))
    fail(ErrorCode::ContextMismatch, "element does not belong to the automorphism's field");
  return sigma(a);
}

FieldElem sigma_norm(const Automorphism& sigma, FieldElem a) {
  const FieldCtx& f = sigma.ctx();
  if (!f.contains(a)) fail(ErrorCode::ContextMismatch, "element outside field");
  if (a.packed == 0) fail(ErrorCode::ZeroElement, "sigma_norm of zero");
  FieldElem norm = a, x = a;
  for (unsigned i = 1; i < sigma.order(); ++i) {
    x = sigma(x);
    norm = f.mul(norm, x);
  }
  return norm;
}

// ---------------------------------------------------------------------------

Embedding::Embedding(FieldPtr from, FieldPtr to, FieldElem image_of_gen)
    : from_(std::move(from)), to_(std::move(to)), image_of_gen_(image_of_gen) {
  const unsigned m = from_->degree(), big = to_->degree();
  columns_ = GfpMatrix(to_->characteristic(), big, m);
  FieldElem x = to_->one();
  for (unsigned i = 0; i < m; ++i) {
    powers_.push_back(x);
    const auto c = to_->coeffs(x);
    for (unsigned r = 0; r < big; ++r) columns_(r, i) = c[r];
    x = to_->mul(x, image_of_gen_);
  }
}

FieldElem Embedding::operator()(FieldElem a) const {
  if (!from_->contains(a)) fail(ErrorCode::ContextMismatch, "element outside embedding source");
  const auto c = from_->coeffs(a);
  FieldElem r = to_->zero();
  for (std::size_t i = 0; i < c.size(); ++i) {
    if (c[i] == 0) continue;
    r = to_->add(r, to_->mul(to_->from_int(static_cast<std::int64_t>(c[i])), powers_[i]));
  }
  return r;
}

std::optional<FieldElem> Embedding::preimage(FieldElem b) const {
  if (!to_->contains(b)) fail(ErrorCode::ContextMismatch, "element outside embedding target");
  auto x = columns_.solve(to_->coeffs(b));
  if (!x) return std::nullopt;
  return from_->from_coeffs(*x);
}

namespace {

// Commutative polynomials over an extension field, low coefficient first.
struct PolyOver {
  const FieldCtx& f;
  using P = std::vector<FieldElem>;

  void trim(P& a) const {
    while (!a.empty() && a.back().packed == 0) a.pop_back();
  }
  P rem(P a, const P& b) const {
    trim(a);
    const FieldElem lead_inv = f.inv(b.back());
    const std::size_t db = b.size() - 1;
    while (a.size() > db) {
      const FieldElem c = f.mul(a.back(), lead_inv);
      const std::size_t shift = a.size() - 1 - db;
      for (std::size_t j = 0; j <= db; ++j)
        a[shift + j] = f.sub(a[shift + j], f.mul(c, b[j]));
      trim(a);
    }
    return a;
  }
  P quot(P a, const P& b) const {
    trim(a);
    const FieldElem lead_inv = f.inv(b.back());
    const std::size_t db = b.size() - 1;
    if (a.size() <= db) return {};
    P q(a.size() - db, f.zero());
    while (a.size() > db) {
      const FieldElem c = f.mul(a.back(), lead_inv);
      const std::size_t shift = a.size() - 1 - db;
      q[shift] = c;
      for (std::size_t j = 0; j <= db; ++j)
        a[shift + j] = f.sub(a[shift + j], f.mul(c, b[j]));
      a.pop_back();
      trim(a);
    }
    return q;
  }
  P mulmod(const P& a, const P& b, const P& g) const {
    if (a.empty() || b.empty()) return {};
    P c(a.size() + b.size() - 1, f.zero());
    for (std::size_t i = 0; i < a.size(); ++i)
      for (std::size_t j = 0; j < b.size(); ++j) c[i + j] = f.add(c[i + j], f.mul(a[i], b[j]));
    return rem(std::move(c), g);
  }
  P powmod(P a, std::uint64_t e, const P& g) const {
    P r{f.one()};
    a = rem(std::move(a), g);
    while (e) {
      if (e & 1) r = mulmod(r, a, g);
      a = mulmod(a, a, g);
      e >>= 1;
    }
    return r;
  }
  P gcd(P a, P b) const {
    trim(a);
    trim(b);
    while (!b.empty()) {
      a = rem(std::move(a), b);
      std::swap(a, b);
    }
    if (!a.empty()) {
      const FieldElem li = f.inv(a.back());
      for (auto& c : a) c = f.mul(c, li);
    }
    return a;
  }
};

// Some root of g, which must split into distinct linear factors over f.
FieldElem find_root(const FieldCtx& f, std::vector<FieldElem> g) {
  PolyOver ops{f};
  ops.trim(g);
  std::mt19937_64 rng(0x0e11u);
  std::uniform_int_distribution<std::uint64_t> pick(0, f.order() - 1);
  while (g.size() > 2) {
    std::vector<FieldElem> h(g.size() - 1);
    for (auto& c : h) c = FieldElem{pick(rng)};
    ops.trim(h);
    if (h.size() < 2) continue;
    std::vector<FieldElem> w;
    if (f.characteristic() == 2) {
      // absolute trace of h: roots split by their GF(2) value
      std::vector<FieldElem> x = ops.rem(h, g);
      w = x;
      for (unsigned i = 1; i < f.degree(); ++i) {
        x = ops.mulmod(x, x, g);
        w.resize(std::max(w.size(), x.size()), f.zero());
        for (std::size_t k = 0; k < x.size(); ++k) w[k] = f.add(w[k], x[k]);
        ops.trim(w);
      }
    } else {
      w = ops.powmod(h, (f.order() - 1) / 2, g);
      if (w.empty()) w.push_back(f.zero());
      w[0] = f.sub(w[0], f.one());
      ops.trim(w);
    }
    auto d = ops.gcd(w, g);
    if (d.size() <= 1 || d.size() >= g.size()) continue;
    auto other = ops.quot(g, d);
    g = d.size() <= other.size() ? std::move(d) : std::move(other);
  }
  return f.neg(f.div(g[0], g[1]));
}

}  // namespace

Extension extend_field(const FieldPtr& base, unsigned target_degree) {
  const unsigned m = base->degree();
  if (target_degree == 0 || target_degree % m != 0)
    fail(ErrorCode::NotAnExtension, "GF(" + std::to_string(base->characteristic()) + "^" +
                                        std::to_string(m) + ") is not a subfield of degree " +
                                        std::to_string(target_degree));
  if (target_degree == m) return {base, Embedding(base, base, base->gen())};

  using Key = std::tuple<std::uint64_t, std::vector<std::uint64_t>, unsigned>;
  static std::mutex mu;
  static std::map<Key, Extension> cache;
  Key key{base->characteristic(), base->modulus(), target_degree};
  {
    std::lock_guard lock(mu);
    if (auto it = cache.find(key); it != cache.end()) return it->second;
  }

  FieldPtr big = FieldCtx::create(base->characteristic(), target_degree);
  std::vector<FieldElem> g;
  for (auto c : base->modulus()) g.push_back(big->from_int(static_cast<std::int64_t>(c)));
  FieldElem root = find_root(*big, g);
  FieldElem least = root, conj = root;
  for (unsigned i = 1; i < m; ++i) {
    conj = big->frobenius(conj, 1);
    least = std::min(least, conj);
  }
  Extension ext{big, Embedding(base, big, least)};

  std::lock_guard lock(mu);
  return cache.emplace(std::move(key), std::move(ext)).first->second;
}

std::string_view to_string(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::NotPrime: return "NotPrime";
    case ErrorCode::ReducibleModulus: return "ReducibleModulus";
    case ErrorCode::DegreeMismatch: return "DegreeMismatch";
    case ErrorCode::FieldTooLarge: return "FieldTooLarge";
    case ErrorCode::ContextMismatch: return "ContextMismatch";
    case ErrorCode::ZeroElement: return "ZeroElement";
    case ErrorCode::NotAnExtension: return "NotAnExtension";
    case ErrorCode::RingMismatch: return "RingMismatch";
    case ErrorCode::DivisionByZero: return "DivisionByZero";
    case ErrorCode::BothZero: return "BothZero";
    case ErrorCode::ZeroPolynomial: return "ZeroPolynomial";
    case ErrorCode::IndexOutOfRange: return "IndexOutOfRange";
    case ErrorCode::EqualRows: return "EqualRows";
    case ErrorCode::BothConstant: return "BothConstant";
    case ErrorCode::BadEvaluation: return "BadEvaluation";
    case ErrorCode::PlanFailure: return "PlanFailure";
    case ErrorCode::SingularMooreSystem: return "SingularMooreSystem";
    case ErrorCode::ParseError: return "ParseError";
  }
  return "Unknown";
}

}  // namespace orelim
