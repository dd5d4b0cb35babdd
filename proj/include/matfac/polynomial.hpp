#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "matfac/cyclo.hpp"

namespace mfac {

class Polynomial;

// Polynomial ring K[x_1..x_n] over K = Q(zeta_m) with a fixed variable order.
class Ring {
 public:
  Ring(CycloField field, std::vector<std::string> vars);

  const CycloField& field() const { return data_->field; }
  const std::vector<std::string>& vars() const { return data_->vars; }
  std::size_t nvars() const { return data_->vars.size(); }
  std::optional<std::size_t> index_of(const std::string& name) const;

  Polynomial zero() const;
  Polynomial one() const;
  Polynomial constant(const CycloElem& c) const;
  Polynomial constant(long v) const;
  Polynomial var(const std::string& name) const;
  Polynomial var(std::size_t index) const;

  bool operator==(const Ring& o) const;
  bool operator!=(const Ring& o) const { return !(*this == o); }

 private:
  struct Data {
    CycloField field;
    std::vector<std::string> vars;
  };
  std::shared_ptr<const Data> data_;
};

using Exponents = std::vector<std::uint32_t>;

unsigned total_degree(const Exponents& e);

// Graded lexicographic order, larger monomials first.
struct GrlexGreater {
  bool operator()(const Exponents& a, const Exponents& b) const;
};

class Polynomial {
 public:
  using TermMap = std::map<Exponents, CycloElem, GrlexGreater>;

  explicit Polynomial(Ring ring);

  const Ring& ring() const { return ring_; }
  const TermMap& terms() const { return terms_; }
  std::size_t num_terms() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  bool is_monomial() const { return terms_.size() == 1; }
  CycloElem constant_term() const;
  CycloElem coefficient(const Exponents& e) const;
  // Max total degree; 0 for the zero polynomial.
  unsigned total_degree() const;

  // Adds c * x^e in place.
  void add_term(const Exponents& e, const CycloElem& c);

  Polynomial operator-() const;
  Polynomial& operator+=(const Polynomial& o);
  Polynomial& operator-=(const Polynomial& o);
  Polynomial& operator*=(const Polynomial& o);
  Polynomial& operator*=(const CycloElem& c);
  Polynomial pow(unsigned e) const;

  // Drops every term of total degree >= n.
  Polynomial truncated(unsigned n) const;

  bool operator==(const Polynomial& o) const;
  bool operator!=(const Polynomial& o) const { return !(*this == o); }

  // Variables (by index) occurring with positive exponent.
  std::vector<bool> support() const;

 private:
  void check_ring(const Polynomial& o) const;
  Ring ring_;
  TermMap terms_;
};

Polynomial operator+(Polynomial a, const Polynomial& b);
Polynomial operator-(Polynomial a, const Polynomial& b);
Polynomial operator*(const Polynomial& a, const Polynomial& b);
Polynomial operator*(Polynomial a, const CycloElem& c);
Polynomial operator*(const CycloElem& c, Polynomial a);

// Product truncated at total degree n; avoids forming high terms.
Polynomial mul_truncated(const Polynomial& a, const Polynomial& b, unsigned n);

// Minimal total degree of a term. Throws for zero.
unsigned order_of(const Polynomial& f);

// Sets the listed variables to zero.
Polynomial reduce_mod_vars(const Polynomial& f, const std::vector<std::string>& kill);

// Quotient a / b when b divides a exactly; nullopt otherwise.
std::optional<Polynomial> try_exact_divide(const Polynomial& a, const Polynomial& b);
Polynomial exact_divide(const Polynomial& a, const Polynomial& b);

// Pairwise gcd 1 test for single-term polynomials. Throws Undecidable for any
// non-monomial input.
bool monomial_coprime(const std::vector<Polynomial>& list);

// A polynomial truncated at total degree < precision.
class Jet {
 public:
  Jet(const Polynomial& p, unsigned precision);

  const Polynomial& poly() const { return poly_; }
  unsigned precision() const { return precision_; }

  Jet operator+(const Jet& o) const;
  Jet operator-(const Jet& o) const;
  Jet operator*(const Jet& o) const;
  Jet inverse() const;
  bool operator==(const Jet& o) const;

 private:
  void check(const Jet& o) const;
  Polynomial poly_;
  unsigned precision_;
};

// Inverse of a unit modulo total degree n.
Polynomial jet_inverse(const Polynomial& a, unsigned n);

// Two disjoint variable subsets of a ring.
struct VarSplit {
  std::vector<std::string> left;
  std::vector<std::string> right;
};

}  // namespace mfac
