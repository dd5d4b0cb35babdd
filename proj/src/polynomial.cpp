#include "matfac/polynomial.hpp"

#include <algorithm>
#include <set>

#include "matfac/errors.hpp"

namespace mfac {

Ring::Ring(CycloField field, std::vector<std::string> vars) {
  std::set<std::string> seen;
  for (const auto& v : vars) {
    if (v.empty()) throw std::invalid_argument("empty variable name");
    if (!seen.insert(v).second) throw std::invalid_argument("duplicate variable '" + v + "'");
  }
  data_ = std::make_shared<const Data>(Data{std::move(field), std::move(vars)});
}

std::optional<std::size_t> Ring::index_of(const std::string& name) const {
  const auto& v = data_->vars;
  auto it = std::find(v.begin(), v.end(), name);
  if (it == v.end()) return std::nullopt;
  return static_cast<std::size_t>(it - v.begin());
}

Polynomial Ring::zero() const { return Polynomial(*this); }

Polynomial Ring::one() const { return constant(1); }

Polynomial Ring::constant(const CycloElem& c) const {
  if (c.field() != field()) throw FieldMismatch("constant from a different field");
  Polynomial p(*this);
  p.add_term(Exponents(nvars(), 0), c);
  return p;
}

Polynomial Ring::constant(long v) const { return constant(field().from_int(v)); }

Polynomial Ring::var(const std::string& name) const {
  auto idx = index_of(name);
  if (!idx) throw std::invalid_argument("unknown variable '" + name + "'");
  return var(*idx);
}

Polynomial Ring::var(std::size_t index) const {
  Exponents e(nvars(), 0);
  e.at(index) = 1;
  Polynomial p(*this);
  p.add_term(e, field().one());
  return p;
}

bool Ring::operator==(const Ring& o) const {
  return data_ == o.data_ || (data_->field == o.data_->field && data_->vars == o.data_->vars);
}

unsigned total_degree(const Exponents& e) {
  unsigned s = 0;
  for (auto x : e) s += x;
  return s;
}

bool GrlexGreater::operator()(const Exponents& a, const Exponents& b) const {
  unsigned da = total_degree(a), db = total_degree(b);
  if (da != db) return da > db;
  return a > b;
}

Polynomial::Polynomial(Ring ring) : ring_(std::move(ring)) {}

void Polynomial::check_ring(const Polynomial& o) const {
  if (ring_ != o.ring_) throw RingMismatch("polynomials from different rings");
}

bool Polynomial::is_constant() const {
  return terms_.empty() || (terms_.size() == 1 && mfac::total_degree(terms_.begin()->first) == 0);
}

CycloElem Polynomial::constant_term() const {
  return coefficient(Exponents(ring_.nvars(), 0));
}

CycloElem Polynomial::coefficient(const Exponents& e) const {
  auto it = terms_.find(e);
  return it == terms_.end() ? ring_.field().zero() : it->second;
}

unsigned Polynomial::total_degree() const {
  return terms_.empty() ? 0 : mfac::total_degree(terms_.begin()->first);
}

void Polynomial::add_term(const Exponents& e, const CycloElem& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(e, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

Polynomial Polynomial::operator-() const {
  Polynomial r = *this;
  for (auto& [e, c] : r.terms_) c = -c;
  return r;
}

Polynomial& Polynomial::operator+=(const Polynomial& o) {
  check_ring(o);
  for (const auto& [e, c] : o.terms_) add_term(e, c);
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& o) {
  check_ring(o);
  for (const auto& [e, c] : o.terms_) add_term(e, -c);
  return *this;
}

Polynomial& Polynomial::operator*=(const Polynomial& o) {
  *this = *this * o;
  return *this;
}

Polynomial& Polynomial::operator*=(const CycloElem& c) {
  if (c.is_zero()) {
    terms_.clear();
    return *this;
  }
  for (auto& [e, v] : terms_) v *= c;
  return *this;
}

Polynomial Polynomial::pow(unsigned e) const {
  Polynomial result = ring_.one();
  Polynomial base = *this;
  while (e > 0) {
    if (e & 1) result *= base;
    e >>= 1;
    if (e) base *= base;
  }
  return result;
}

Polynomial Polynomial::truncated(unsigned n) const {
  Polynomial r(ring_);
  for (const auto& [e, c] : terms_)
    if (mfac::total_degree(e) < n) r.terms_.emplace_hint(r.terms_.end(), e, c);
  return r;
}

bool Polynomial::operator==(const Polynomial& o) const {
  return ring_ == o.ring_ && terms_ == o.terms_;
}

std::vector<bool> Polynomial::support() const {
  std::vector<bool> s(ring_.nvars(), false);
  for (const auto& [e, c] : terms_)
    for (std::size_t i = 0; i < e.size(); ++i)
      if (e[i]) s[i] = true;
  return s;
}

Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }

namespace {

Polynomial multiply(const Polynomial& a, const Polynomial& b, unsigned limit) {
  if (a.ring() != b.ring()) throw RingMismatch("polynomials from different rings");
  Polynomial r(a.ring());
  const std::size_t n = a.ring().nvars();
  Exponents e(n);
  for (const auto& [ea, ca] : a.terms()) {
    unsigned da = total_degree(ea);
    for (const auto& [eb, cb] : b.terms()) {
      if (da + total_degree(eb) >= limit) continue;
      for (std::size_t i = 0; i < n; ++i) e[i] = ea[i] + eb[i];
      r.add_term(e, ca * cb);
    }
  }
  return r;
}

}  // namespace

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  return multiply(a, b, ~0u);
}

Polynomial operator*(Polynomial a, const CycloElem& c) { return a *= c; }
Polynomial operator*(const CycloElem& c, Polynomial a) { return a *= c; }

Polynomial mul_truncated(const Polynomial& a, const Polynomial& b, unsigned n) {
  return multiply(a, b, n);
}

unsigned order_of(const Polynomial& f) {
  if (f.is_zero()) throw std::invalid_argument("order of the zero polynomial");
  return total_degree(f.terms().rbegin()->first);
}

Polynomial reduce_mod_vars(const Polynomial& f, const std::vector<std::string>& kill) {
  std::vector<std::size_t> idx;
  for (const auto& v : kill) {
    auto i = f.ring().index_of(v);
    if (!i) throw std::invalid_argument("unknown variable '" + v + "'");
    idx.push_back(*i);
  }
  Polynomial r(f.ring());
  for (const auto& [e, c] : f.terms()) {
    bool keep = std::none_of(idx.begin(), idx.end(), [&](std::size_t i) { return e[i] > 0; });
    if (keep) r.add_term(e, c);
  }
  return r;
}

std::optional<Polynomial> try_exact_divide(const Polynomial& a, const Polynomial& b) {
  if (a.ring() != b.ring()) throw RingMismatch("polynomials from different rings");
  if (b.is_zero()) throw DivisionByZero("polynomial division by zero");
  const std::size_t n = a.ring().nvars();
  const auto& [lb_exp, lb_coeff] = *b.terms().begin();
  CycloElem lb_inv = lb_coeff.inverse();
  Polynomial rem = a;
  Polynomial quot(a.ring());
  Exponents qe(n);
  while (!rem.is_zero()) {
    const auto& [le, lc] = *rem.terms().begin();
    for (std::size_t i = 0; i < n; ++i) {
      if (le[i] < lb_exp[i]) return std::nullopt;
      qe[i] = le[i] - lb_exp[i];
    }
    CycloElem qc = lc * lb_inv;
    Polynomial t(a.ring());
    t.add_term(qe, qc);
    quot.add_term(qe, qc);
    rem -= t * b;
  }
  return quot;
}

Polynomial exact_divide(const Polynomial& a, const Polynomial& b) {
  auto q = try_exact_divide(a, b);
  if (!q) throw Error("polynomial division is not exact");
  return *q;
}

bool monomial_coprime(const std::vector<Polynomial>& list) {
  for (const auto& p : list) {
    if (!p.is_monomial()) {
      throw Undecidable("coprimality is only decided for single-term polynomials");
    }
  }
  for (std::size_t i = 0; i < list.size(); ++i) {
    const auto& ei = list[i].terms().begin()->first;
    for (std::size_t j = i + 1; j < list.size(); ++j) {
      if (list[i].ring() != list[j].ring()) throw RingMismatch("polynomials from different rings");
      const auto& ej = list[j].terms().begin()->first;
      for (std::size_t v = 0; v < ei.size(); ++v)
        if (ei[v] > 0 && ej[v] > 0) return false;
    }
  }
  return true;
}

Polynomial jet_inverse(const Polynomial& a, unsigned n) {
  CycloElem c = a.constant_term();
  if (c.is_zero()) throw DivisionByZero("jet inverse of a non-unit");
  CycloElem ci = c.inverse();
  // a = c (1 - u); a^{-1} = c^{-1} sum u^k.
  Polynomial u = a.ring().one() - a * ci;
  Polynomial sum = a.ring().one();
  Polynomial power = a.ring().one();
  for (unsigned k = 1; k < n; ++k) {
    power = mul_truncated(power, u, n);
    if (power.is_zero()) break;
    sum += power;
  }
  return sum.truncated(n) * ci;
}

Jet::Jet(const Polynomial& p, unsigned precision)
    : poly_(p.truncated(precision)), precision_(precision) {}

void Jet::check(const Jet& o) const {
  if (precision_ != o.precision_) throw std::invalid_argument("jets of different precision");
  if (poly_.ring() != o.poly_.ring()) throw RingMismatch("jets from different rings");
}

Jet Jet::operator+(const Jet& o) const {
  check(o);
  return Jet(poly_ + o.poly_, precision_);
}

Jet Jet::operator-(const Jet& o) const {
  check(o);
  return Jet(poly_ - o.poly_, precision_);
}

Jet Jet::operator*(const Jet& o) const {
  check(o);
  return Jet(mul_truncated(poly_, o.poly_, precision_), precision_);
}

Jet Jet::inverse() const { return Jet(jet_inverse(poly_, precision_), precision_); }

bool Jet::operator==(const Jet& o) const {
  return precision_ == o.precision_ && poly_ == o.poly_;
}

}  // namespace mfac
