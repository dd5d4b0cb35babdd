#include "matfac/cyclo.hpp"

#include <numeric>

#include "matfac/errors.hpp"

namespace mfac {

namespace {

using IntPoly = std::vector<Integer>;
using QPoly = std::vector<Rational>;

void trim(IntPoly& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}

void trim(QPoly& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}

// Exact quotient of a by a monic b; throws if the remainder is nonzero.
IntPoly divide_monic_exact(IntPoly a, const IntPoly& b) {
  trim(a);
  int db = static_cast<int>(b.size()) - 1;
  if (static_cast<int>(a.size()) - 1 < db) throw Error("cyclotomic division underflow");
  IntPoly q(a.size() - b.size() + 1);
  for (int i = static_cast<int>(a.size()) - 1; i >= db; --i) {
    Integer c = a[i];
    if (c == 0) continue;
    q[i - db] = c;
    for (int j = 0; j <= db; ++j) a[i - db + j] -= c * b[j];
  }
  trim(a);
  if (!a.empty()) throw Error("cyclotomic division left a remainder");
  return q;
}

QPoly qmul(const QPoly& a, const QPoly& b) {
  if (a.empty() || b.empty()) return {};
  QPoly r(a.size() + b.size() - 1);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
  }
  trim(r);
  return r;
}

QPoly qsub(const QPoly& a, const QPoly& b) {
  QPoly r(std::max(a.size(), b.size()));
  for (std::size_t i = 0; i < a.size(); ++i) r[i] += a[i];
  for (std::size_t i = 0; i < b.size(); ++i) r[i] -= b[i];
  trim(r);
  return r;
}

// Polynomial long division over Q; b nonzero.
void qdivmod(QPoly a, const QPoly& b, QPoly& q, QPoly& r) {
  trim(a);
  q.assign(a.size() >= b.size() ? a.size() - b.size() + 1 : 0, Rational(0));
  const Rational& lead = b.back();
  while (!a.empty() && a.size() >= b.size()) {
    std::size_t shift = a.size() - b.size();
    Rational c = a.back() / lead;
    q[shift] = c;
    for (std::size_t j = 0; j < b.size(); ++j) a[shift + j] -= c * b[j];
    a.pop_back();
    trim(a);
  }
  trim(q);
  r = a;
}

}  // namespace

int euler_phi(int m) {
  if (m < 1) throw std::invalid_argument("euler_phi: m must be positive");
  int result = m;
  int n = m;
  for (int p = 2; p * p <= n; ++p) {
    if (n % p == 0) {
      while (n % p == 0) n /= p;
      result -= result / p;
    }
  }
  if (n > 1) result -= result / n;
  return result;
}

std::vector<Integer> cyclotomic_polynomial(int m) {
  if (m < 1) throw std::invalid_argument("cyclotomic_polynomial: m must be positive");
  IntPoly p(m + 1, Integer(0));
  p[0] = -1;
  p[m] = 1;
  for (int k = 1; k < m; ++k) {
    if (m % k == 0) p = divide_monic_exact(p, cyclotomic_polynomial(k));
  }
  return p;
}

struct CycloField::Data {
  int m;
  int deg;
  IntPoly modulus;
  // reduce[j] = x^(deg + j) mod Phi_m, for 0 <= j < deg - 1.
  std::vector<IntPoly> reduce;
};

CycloField::CycloField(int m) {
  if (m < 1) throw std::invalid_argument("CycloField: conductor must be positive");
  if (m == 1) {
    static const std::shared_ptr<const Data> rationals = [] {
      auto d = std::make_shared<Data>();
      d->m = 1;
      d->deg = 1;
      d->modulus = {Integer(-1), Integer(1)};
      return std::shared_ptr<const Data>(d);
    }();
    data_ = rationals;
    return;
  }
  auto d = std::make_shared<Data>();
  d->m = m;
  d->modulus = cyclotomic_polynomial(m);
  d->deg = static_cast<int>(d->modulus.size()) - 1;
  IntPoly cur(d->deg, Integer(0));
  // x^deg = -(modulus without its leading term)
  for (int i = 0; i < d->deg; ++i) cur[i] = -d->modulus[i];
  for (int j = 0; j + 1 < d->deg; ++j) {
    d->reduce.push_back(cur);
    // multiply by x and reduce
    IntPoly next(d->deg, Integer(0));
    Integer top = cur[d->deg - 1];
    for (int i = d->deg - 1; i >= 1; --i) next[i] = cur[i - 1];
    for (int i = 0; i < d->deg; ++i) next[i] -= top * d->modulus[i];
    cur = next;
  }
  data_ = d;
}

int CycloField::conductor() const { return data_->m; }
int CycloField::degree() const { return data_->deg; }
const std::vector<Integer>& CycloField::modulus() const { return data_->modulus; }

bool CycloField::operator==(const CycloField& o) const {
  return data_ == o.data_ || data_->m == o.data_->m;
}

CycloElem CycloField::zero() const {
  return CycloElem(*this, std::vector<Rational>(degree(), Rational(0)));
}

CycloElem CycloField::one() const { return from_int(1); }

CycloElem CycloField::from_rational(const Rational& q) const {
  std::vector<Rational> c(degree(), Rational(0));
  c[0] = q;
  return CycloElem(*this, std::move(c));
}

CycloElem CycloField::from_int(long v) const { return from_rational(Rational(v)); }

CycloElem CycloField::zeta() const { return zeta_pow(1); }

CycloElem CycloField::zeta_pow(long k) const {
  int m = conductor();
  long e = ((k % m) + m) % m;
  std::vector<Rational> c(e + 1, Rational(0));
  c[e] = 1;
  return CycloElem(*this, std::move(c));
}

CycloElem CycloField::root_of_unity(int d, long power) const {
  if (d < 1 || conductor() % d != 0) {
    throw FieldMismatch("field Q(zeta_" + std::to_string(conductor()) +
                        ") has no primitive " + std::to_string(d) + "-th root of unity");
  }
  return zeta_pow((conductor() / d) * power);
}

CycloElem::CycloElem() : field_(1), coeffs_(1, Rational(0)) {}

CycloElem::CycloElem(const CycloField& field, std::vector<Rational> coeffs)
    : field_(field), coeffs_(std::move(coeffs)) {
  const int deg = field_.degree();
  if (static_cast<int>(coeffs_.size()) > deg) {
    const auto& md = *field_.data_;
    // Reduce from the top using x^deg = -(lower part of modulus).
    for (int i = static_cast<int>(coeffs_.size()) - 1; i >= deg; --i) {
      if (coeffs_[i] == 0) continue;
      Rational c = coeffs_[i];
      coeffs_[i] = 0;
      for (int j = 0; j < deg; ++j) coeffs_[i - deg + j] -= c * md.modulus[j];
    }
  }
  coeffs_.resize(deg, Rational(0));
}

void CycloElem::check_field(const CycloElem& o) const {
  if (field_ != o.field_) {
    throw FieldMismatch("operands from Q(zeta_" + std::to_string(field_.conductor()) +
                        ") and Q(zeta_" + std::to_string(o.field_.conductor()) + ")");
  }
}

bool CycloElem::is_zero() const {
  for (const auto& c : coeffs_)
    if (c != 0) return false;
  return true;
}

bool CycloElem::is_one() const {
  if (coeffs_[0] != 1) return false;
  for (std::size_t i = 1; i < coeffs_.size(); ++i)
    if (coeffs_[i] != 0) return false;
  return true;
}

bool CycloElem::is_rational() const {
  for (std::size_t i = 1; i < coeffs_.size(); ++i)
    if (coeffs_[i] != 0) return false;
  return true;
}

CycloElem CycloElem::operator-() const {
  CycloElem r = *this;
  for (auto& c : r.coeffs_) c = -c;
  return r;
}

CycloElem& CycloElem::operator+=(const CycloElem& o) {
  check_field(o);
  for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
  return *this;
}

CycloElem& CycloElem::operator-=(const CycloElem& o) {
  check_field(o);
  for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] -= o.coeffs_[i];
  return *this;
}

CycloElem& CycloElem::operator*=(const CycloElem& o) {
  check_field(o);
  const int deg = field_.degree();
  if (deg == 1) {
    coeffs_[0] *= o.coeffs_[0];
    return *this;
  }
  std::vector<Rational> prod(2 * deg - 1, Rational(0));
  for (int i = 0; i < deg; ++i) {
    if (coeffs_[i] == 0) continue;
    for (int j = 0; j < deg; ++j) {
      if (o.coeffs_[j] == 0) continue;
      prod[i + j] += coeffs_[i] * o.coeffs_[j];
    }
  }
  const auto& table = field_.data_->reduce;
  for (int k = deg; k < 2 * deg - 1; ++k) {
    if (prod[k] == 0) continue;
    const auto& row = table[k - deg];
    for (int j = 0; j < deg; ++j)
      if (row[j] != 0) prod[j] += prod[k] * row[j];
  }
  prod.resize(deg);
  coeffs_ = std::move(prod);
  return *this;
}

CycloElem& CycloElem::operator*=(const Rational& q) {
  for (auto& c : coeffs_) c *= q;
  return *this;
}

CycloElem CycloElem::inverse() const {
  if (is_zero()) throw DivisionByZero("inverse of zero in Q(zeta_" +
                                      std::to_string(field_.conductor()) + ")");
  if (is_rational()) return field_.from_rational(1 / coeffs_[0]);
  // Extended Euclid: track s with s * a == r (mod modulus).
  QPoly r0(field_.modulus().begin(), field_.modulus().end());
  QPoly r1(coeffs_.begin(), coeffs_.end());
  trim(r1);
  QPoly s0, s1{Rational(1)};
  while (!r1.empty()) {
    QPoly q, rem;
    qdivmod(r0, r1, q, rem);
    QPoly s2 = qsub(s0, qmul(q, s1));
    r0 = std::move(r1);
    r1 = std::move(rem);
    s0 = std::move(s1);
    s1 = std::move(s2);
  }
  // r0 is a nonzero constant since the modulus is irreducible.
  if (r0.size() != 1) throw Error("cyclotomic inverse: non-constant gcd");
  Rational scale = 1 / r0[0];
  for (auto& c : s0) c *= scale;
  return CycloElem(field_, s0);
}

CycloElem CycloElem::pow(long e) const {
  if (e < 0) return inverse().pow(-e);
  CycloElem result = field_.one();
  CycloElem base = *this;
  while (e > 0) {
    if (e & 1) result *= base;
    e >>= 1;
    if (e) base *= base;
  }
  return result;
}

bool CycloElem::operator==(const CycloElem& o) const {
  return field_ == o.field_ && coeffs_ == o.coeffs_;
}

std::string CycloElem::basis_string(const std::string& symbol) const {
  std::string out;
  bool first = true;
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    const Rational& c = coeffs_[i];
    if (c == 0) continue;
    Rational mag = abs(c);
    std::string body;
    if (i == 0) {
      body = mag.get_str();
    } else {
      std::string pw = symbol + (i == 1 ? "" : "^" + std::to_string(i));
      body = (mag == 1) ? pw : mag.get_str() + "*" + pw;
    }
    if (first) {
      out = (c < 0 ? "-" : "") + body;
      first = false;
    } else {
      out += (c < 0 ? " - " : " + ") + body;
    }
  }
  return first ? "0" : out;
}

CycloElem operator+(CycloElem a, const CycloElem& b) { return a += b; }
CycloElem operator-(CycloElem a, const CycloElem& b) { return a -= b; }
CycloElem operator*(const CycloElem& a, const CycloElem& b) {
  CycloElem r = a;
  r *= b;
  return r;
}
CycloElem operator*(CycloElem a, const Rational& q) { return a *= q; }

CycloElem embed(const CycloElem& a, int m2) {
  int m = a.field().conductor();
  if (m2 < 1 || m2 % m != 0) {
    throw FieldMismatch("cannot embed Q(zeta_" + std::to_string(m) + ") into Q(zeta_" +
                        std::to_string(m2) + ")");
  }
  int step = m2 / m;
  CycloField target(m2);
  const auto& c = a.coeffs();
  std::vector<Rational> out((c.size() - 1) * step + 1, Rational(0));
  for (std::size_t i = 0; i < c.size(); ++i) out[i * step] = c[i];
  return CycloElem(target, std::move(out));
}

int root_order(const CycloElem& a) {
  if (a.is_zero()) return 0;
  int bound = 2 * a.field().conductor();
  CycloElem p = a;
  for (int k = 1; k <= bound; ++k) {
    if (p.is_one()) return k;
    p *= a;
  }
  return 0;
}

bool is_primitive_root(const CycloElem& a, int d) { return d >= 1 && root_order(a) == d; }

}  // namespace mfac
