#include "sicgen/cyclo.hpp"

#include <cmath>
#include <map>
#include <mutex>
#include <numbers>
#include <numeric>

namespace sic {
namespace {

// Integer polynomials, lowest degree first, no trailing zeros.
using ZPoly = std::vector<mpz_class>;

void trim(ZPoly& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}

// Exact division of integer polynomials; remainder must come out zero.
ZPoly divide_exact(ZPoly num, const ZPoly& den) {
  ZPoly q(num.size() >= den.size() ? num.size() - den.size() + 1 : 0, mpz_class(0));
  while (num.size() >= den.size() && !num.empty()) {
    mpz_class c = num.back() / den.back();
    std::size_t shift = num.size() - den.size();
    q[shift] = c;
    for (std::size_t i = 0; i < den.size(); ++i) num[shift + i] -= c * den[i];
    trim(num);
  }
  if (!num.empty()) throw std::logic_error("cyclotomic division left a remainder");
  return q;
}

ZPoly cyclotomic(int n, std::map<int, ZPoly>& memo) {
  auto it = memo.find(n);
  if (it != memo.end()) return it->second;
  ZPoly num(n + 1, mpz_class(0));
  num[0] = -1;
  num[n] = 1;  // x^n - 1
  for (int d = 1; d < n; ++d) {
    if (n % d == 0) num = divide_exact(std::move(num), cyclotomic(d, memo));
  }
  memo[n] = num;
  return num;
}

std::map<int, ZPoly>& cyclotomic_memo() {
  static std::map<int, ZPoly> memo{{1, ZPoly{mpz_class(-1), mpz_class(1)}}};
  return memo;
}

std::mutex& cache_mutex() {
  static std::mutex m;
  return m;
}

}  // namespace

CycloContext::CycloContext(int n) : n_(n) {
  if (n < 1) throw std::invalid_argument("conductor must be positive");
  poly_ = cyclotomic(n, cyclotomic_memo());
  phi_ = static_cast<int>(poly_.size()) - 1;

  // x^phi mod Phi = -(low-order part), since Phi is monic.
  std::vector<Rational> head(phi_);
  for (int i = 0; i < phi_; ++i) head[i] = rational(-poly_[i], 1);
  reduce_.push_back(head);
  for (int k = 1; k <= phi_ - 2; ++k) {
    const auto& prev = reduce_.back();
    std::vector<Rational> next(phi_, Rational(0));
    for (int i = 0; i + 1 < phi_; ++i) next[i + 1] = prev[i];
    if (prev[phi_ - 1] != 0) {
      const auto& h = reduce_.front();
      for (int i = 0; i < phi_; ++i) next[i] += prev[phi_ - 1] * h[i];
    }
    reduce_.push_back(next);
  }

  zeta_pow_.resize(n_);
  std::vector<Rational> cur(phi_, Rational(0));
  cur[0] = 1;
  for (int j = 0; j < n_; ++j) {
    zeta_pow_[j] = cur;
    std::vector<Rational> next(phi_, Rational(0));
    for (int i = 0; i + 1 < phi_; ++i) next[i + 1] = cur[i];
    if (cur[phi_ - 1] != 0) {
      const auto& h = reduce_.front();
      for (int i = 0; i < phi_; ++i) next[i] += cur[phi_ - 1] * h[i];
    }
    cur = next;
  }
}

std::shared_ptr<const CycloContext> CycloContext::get(int n) {
  static std::map<int, std::shared_ptr<const CycloContext>> cache;
  std::lock_guard<std::mutex> lock(cache_mutex());
  auto it = cache.find(n);
  if (it != cache.end()) return it->second;
  auto ctx = std::shared_ptr<const CycloContext>(new CycloContext(n));
  cache.emplace(n, ctx);
  return ctx;
}

const std::vector<Rational>& CycloContext::root_power(long j) const {
  long r = j % n_;
  if (r < 0) r += n_;
  return zeta_pow_[static_cast<std::size_t>(r)];
}

Complex CycloContext::unit_root(long j) const {
  long r = j % n_;
  if (r < 0) r += n_;
  double angle = 2.0 * std::numbers::pi_v<double> * static_cast<double>(r) / n_;
  return {std::cos(angle), std::sin(angle)};
}

Cyclo Cyclo::zero(std::shared_ptr<const CycloContext> ctx) {
  Cyclo z;
  z.ctx_ = std::move(ctx);
  z.c_.assign(z.ctx_->degree(), Rational(0));
  return z;
}

Cyclo Cyclo::one(std::shared_ptr<const CycloContext> ctx) {
  return from_rational(std::move(ctx), Rational(1));
}

Cyclo Cyclo::from_rational(std::shared_ptr<const CycloContext> ctx, const Rational& r) {
  Cyclo z = zero(std::move(ctx));
  z.c_[0] = r;
  return z;
}

Cyclo Cyclo::root(std::shared_ptr<const CycloContext> ctx, int m, long k) {
  if (m < 1 || ctx->conductor() % m != 0)
    throw std::domain_error("root order does not divide the conductor");
  long step = ctx->conductor() / m;
  Cyclo z;
  z.c_ = ctx->root_power(step * k);
  z.ctx_ = std::move(ctx);
  return z;
}

Cyclo Cyclo::sqrt_int(std::shared_ptr<const CycloContext> ctx, int m) {
  // Positive real embeddings: sqrt2 = zeta8 + zeta8^-1, sqrt3 = zeta12 + zeta12^-1.
  switch (m) {
    case 2: {
      Cyclo a = root(ctx, 8, 1), b = root(ctx, 8, -1);
      return a + b;
    }
    case 3: {
      Cyclo a = root(ctx, 12, 1), b = root(ctx, 12, -1);
      return a + b;
    }
    case 6:
      return sqrt_int(ctx, 2) * sqrt_int(ctx, 3);
    default:
      throw std::domain_error("sqrt_int supports m in {2,3,6}");
  }
}

Cyclo Cyclo::from_coeffs(std::shared_ptr<const CycloContext> ctx,
                         std::vector<Rational> coeffs) {
  if (static_cast<int>(coeffs.size()) != ctx->degree())
    throw std::invalid_argument("coefficient count must equal the field degree");
  Cyclo z;
  z.ctx_ = std::move(ctx);
  z.c_ = std::move(coeffs);
  return z;
}

void Cyclo::require_same_field(const Cyclo& o) const {
  if (!ctx_ || !o.ctx_ || ctx_->conductor() != o.ctx_->conductor())
    throw std::invalid_argument("operands belong to different cyclotomic fields");
}

Cyclo Cyclo::operator+(const Cyclo& o) const {
  require_same_field(o);
  Cyclo z = *this;
  for (std::size_t i = 0; i < z.c_.size(); ++i) z.c_[i] += o.c_[i];
  return z;
}

Cyclo Cyclo::operator-(const Cyclo& o) const {
  require_same_field(o);
  Cyclo z = *this;
  for (std::size_t i = 0; i < z.c_.size(); ++i) z.c_[i] -= o.c_[i];
  return z;
}

Cyclo Cyclo::operator-() const {
  Cyclo z = *this;
  for (auto& x : z.c_) x = -x;
  return z;
}

Cyclo Cyclo::operator*(const Cyclo& o) const {
  require_same_field(o);
  int phi = ctx_->degree();
  std::vector<Rational> prod(2 * phi - 1, Rational(0));
  for (int i = 0; i < phi; ++i) {
    if (c_[i] == 0) continue;
    for (int j = 0; j < phi; ++j) {
      if (o.c_[j] == 0) continue;
      prod[i + j] += c_[i] * o.c_[j];
    }
  }
  Cyclo z = zero(ctx_);
  for (int i = 0; i < phi; ++i) z.c_[i] = prod[i];
  const auto& rows = ctx_->reduction_rows();
  for (int k = phi; k <= 2 * phi - 2; ++k) {
    if (prod[k] == 0) continue;
    const auto& row = rows[k - phi];
    for (int i = 0; i < phi; ++i) z.c_[i] += prod[k] * row[i];
  }
  return z;
}

namespace {

// Rational polynomials for the extended Euclid behind inv().
using QPoly = std::vector<Rational>;

void qtrim(QPoly& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}

QPoly qmul(const QPoly& a, const QPoly& b) {
  if (a.empty() || b.empty()) return {};
  QPoly r(a.size() + b.size() - 1, Rational(0));
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
  return r;
}

QPoly qsub(QPoly a, const QPoly& b) {
  if (a.size() < b.size()) a.resize(b.size(), Rational(0));
  for (std::size_t i = 0; i < b.size(); ++i) a[i] -= b[i];
  qtrim(a);
  return a;
}

// Returns {quotient, remainder} of a / b.
std::pair<QPoly, QPoly> qdivmod(QPoly a, const QPoly& b) {
  QPoly q;
  qtrim(a);
  if (b.empty()) throw std::domain_error("polynomial division by zero");
  if (a.size() >= b.size()) q.assign(a.size() - b.size() + 1, Rational(0));
  while (a.size() >= b.size() && !a.empty()) {
    Rational c = a.back() / b.back();
    std::size_t shift = a.size() - b.size();
    q[shift] = c;
    for (std::size_t i = 0; i < b.size(); ++i) a[shift + i] -= c * b[i];
    qtrim(a);
  }
  return {q, a};
}

}  // namespace

Cyclo Cyclo::inv() const {
  if (is_zero()) throw std::domain_error("division by zero in Q(zeta_n)");
  int phi = ctx_->degree();
  QPoly a(c_.begin(), c_.end());
  qtrim(a);
  QPoly b(phi + 1);
  const auto& poly = ctx_->cyclotomic_poly();
  for (int i = 0; i <= phi; ++i) b[i] = rational(poly[i], 1);

  // Extended Euclid: s*a + t*Phi = gcd = nonzero constant.
  QPoly r0 = a, r1 = b;
  QPoly s0{Rational(1)}, s1{};
  while (!r1.empty()) {
    auto [q, r2] = qdivmod(r0, r1);
    QPoly s2 = qsub(s0, qmul(q, s1));
    r0 = std::move(r1);
    r1 = std::move(r2);
    s0 = std::move(s1);
    s1 = std::move(s2);
  }
  if (r0.size() != 1) throw std::logic_error("element not invertible mod Phi_n");
  Rational scale = Rational(1) / r0[0];
  auto [q, rem] = qdivmod(qmul(s0, {scale}), b);
  (void)q;
  std::vector<Rational> coeffs(phi, Rational(0));
  for (std::size_t i = 0; i < rem.size(); ++i) coeffs[i] = rem[i];
  return from_coeffs(ctx_, std::move(coeffs));
}

Cyclo Cyclo::conj() const {
  // Substitute zeta -> zeta^(n-1) using the precomputed power table.
  int phi = ctx_->degree();
  long n = ctx_->conductor();
  Cyclo z = zero(ctx_);
  for (int k = 0; k < phi; ++k) {
    if (c_[k] == 0) continue;
    const auto& row = ctx_->root_power(static_cast<long>(k) * (n - 1));
    for (int i = 0; i < phi; ++i) z.c_[i] += c_[k] * row[i];
  }
  return z;
}

Cyclo Cyclo::abs_sq() const { return *this * conj(); }

Cyclo Cyclo::pow(long k) const {
  if (k < 0) return inv().pow(-k);
  Cyclo result = one(ctx_);
  Cyclo base = *this;
  while (k > 0) {
    if (k & 1) result = result * base;
    base = base * base;
    k >>= 1;
  }
  return result;
}

bool Cyclo::is_zero() const {
  for (const auto& x : c_)
    if (x != 0) return false;
  return true;
}

std::optional<Rational> Cyclo::as_rational() const {
  for (std::size_t i = 1; i < c_.size(); ++i)
    if (c_[i] != 0) return std::nullopt;
  return c_[0];
}

Complex Cyclo::embed() const {
  Complex acc{0.0, 0.0};
  for (std::size_t k = 0; k < c_.size(); ++k) {
    if (c_[k] == 0) continue;
    acc += c_[k].get_d() * ctx_->unit_root(static_cast<long>(k));
  }
  return acc;
}

bool Cyclo::operator==(const Cyclo& o) const {
  if (!ctx_ || !o.ctx_ || ctx_->conductor() != o.ctx_->conductor()) return false;
  return c_ == o.c_;
}

}  // namespace sic
