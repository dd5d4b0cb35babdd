#pragma once

#include <gmpxx.h>

#include <memory>
#include <string>
#include <vector>

namespace mfac {

using Integer = mpz_class;
using Rational = mpq_class;

// Coefficients of the m-th cyclotomic polynomial, lowest degree first.
std::vector<Integer> cyclotomic_polynomial(int m);

int euler_phi(int m);

class CycloElem;

// The field Q(zeta_m), represented as Q[x] / Phi_m(x).
class CycloField {
 public:
  explicit CycloField(int m = 1);

  int conductor() const;
  int degree() const;
  const std::vector<Integer>& modulus() const;

  CycloElem zero() const;
  CycloElem one() const;
  CycloElem from_rational(const Rational& q) const;
  CycloElem from_int(long v) const;
  // The generator zeta_m.
  CycloElem zeta() const;
  CycloElem zeta_pow(long k) const;
  // zeta_m^((m/d) * power): a d-th root of unity, primitive when
  // gcd(power, d) = 1. Requires d | m.
  CycloElem root_of_unity(int d, long power = 1) const;
  bool has_roots_of_order(int d) const { return conductor() % d == 0; }

  bool operator==(const CycloField& o) const;
  bool operator!=(const CycloField& o) const { return !(*this == o); }

 private:
  friend class CycloElem;
  struct Data;
  std::shared_ptr<const Data> data_;
};

class CycloElem {
 public:
  CycloElem();  // zero of Q
  CycloElem(const CycloField& field, std::vector<Rational> coeffs);

  const CycloField& field() const { return field_; }
  const std::vector<Rational>& coeffs() const { return coeffs_; }

  bool is_zero() const;
  bool is_one() const;
  bool is_rational() const;
  bool is_unit() const { return !is_zero(); }
  // Only meaningful when is_rational().
  const Rational& rational_part() const { return coeffs_[0]; }

  CycloElem operator-() const;
  CycloElem& operator+=(const CycloElem& o);
  CycloElem& operator-=(const CycloElem& o);
  CycloElem& operator*=(const CycloElem& o);
  CycloElem& operator*=(const Rational& q);

  CycloElem inverse() const;
  CycloElem pow(long e) const;

  bool operator==(const CycloElem& o) const;
  bool operator!=(const CycloElem& o) const { return !(*this == o); }

  // Basis-coordinate form such as "1/2 + 3*z^2"; symbol names zeta_m.
  std::string basis_string(const std::string& symbol = "z") const;

 private:
  void check_field(const CycloElem& o) const;
  CycloField field_;
  std::vector<Rational> coeffs_;
};

CycloElem operator+(CycloElem a, const CycloElem& b);
CycloElem operator-(CycloElem a, const CycloElem& b);
CycloElem operator*(const CycloElem& a, const CycloElem& b);
CycloElem operator*(CycloElem a, const Rational& q);

// Image of a under zeta_m -> zeta_m2^(m2/m).
CycloElem embed(const CycloElem& a, int m2);

// Multiplicative order of a root of unity, or 0 if a is not one (checked up
// to the field's conductor times two).
int root_order(const CycloElem& a);

bool is_primitive_root(const CycloElem& a, int d);

}  // namespace mfac
