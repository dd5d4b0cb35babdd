#include "matfac/matfac.hpp"

#include <algorithm>

namespace mfac {

namespace {

void check_entries(const PolyMatrix& m, const Ring& ring) {
  if (m.zero().ring() != ring) throw RingMismatch("matrix over a different ring");
  for (const auto& p : m.data())
    if (p.ring() != ring) throw RingMismatch("matrix entry over a different ring");
}

std::vector<PolyMatrix> tuple_to_index(const std::vector<PolyMatrix>& maps) {
  std::vector<PolyMatrix> r;
  if (maps.empty()) return r;
  r.push_back(maps.back());
  for (std::size_t t = 0; t + 1 < maps.size(); ++t) r.push_back(maps[t]);
  return r;
}

}  // namespace

MatFac::MatFac(Ring ring, int d, Polynomial f, const std::vector<PolyMatrix>& maps)
    : MatFac(std::move(ring), d, std::move(f), tuple_to_index(maps), true) {}

MatFac MatFac::from_indexed(Ring ring, int d, Polynomial f, std::vector<PolyMatrix> by_index) {
  return MatFac(std::move(ring), d, std::move(f), std::move(by_index), true);
}

MatFac::MatFac(Ring ring, int d, Polynomial f, std::vector<PolyMatrix> by_index, bool)
    : ring_(std::move(ring)), d_(d), rank_(0), f_(std::move(f)), maps_(std::move(by_index)) {
  if (d_ < 2) throw std::invalid_argument("a matrix factorization needs d >= 2");
  if (static_cast<int>(maps_.size()) != d_) {
    throw ShapeMismatch("expected " + std::to_string(d_) + " maps, got " +
                        std::to_string(maps_.size()));
  }
  if (f_.ring() != ring_) throw RingMismatch("target polynomial over a different ring");
  rank_ = maps_[0].rows();
  for (const auto& m : maps_) {
    if (m.rows() != rank_ || m.cols() != rank_) {
      throw ShapeMismatch("maps must all be " + std::to_string(rank_) + "x" +
                          std::to_string(rank_) + ", got " + m.shape());
    }
    check_entries(m, ring_);
  }
}

std::vector<PolyMatrix> MatFac::tuple() const {
  std::vector<PolyMatrix> r;
  for (int t = 1; t <= d_; ++t) r.push_back(phi(t));
  return r;
}

bool MatFac::operator==(const MatFac& o) const {
  return ring_ == o.ring_ && d_ == o.d_ && f_ == o.f_ && maps_ == o.maps_;
}

std::vector<int> ValidationReport::failing() const {
  std::vector<int> r;
  for (std::size_t k = 0; k < holds.size(); ++k)
    if (!holds[k]) r.push_back(static_cast<int>(k));
  return r;
}

PolyMatrix cyclic_product(const MatFac& x, long k, int len) {
  PolyMatrix p = poly_identity(x.ring(), x.rank());
  for (int t = 0; t < len; ++t) p = p * x.phi(k + t);
  return p;
}

namespace {

ValidationReport run_validation(const MatFac& x, std::optional<unsigned> n) {
  ValidationReport rep;
  rep.precision = n;
  PolyMatrix target = poly_scalar(x.ring(), x.rank(), x.f());
  if (n) target = truncate(target, *n);
  for (int k = 0; k < x.d(); ++k) {
    PolyMatrix p = poly_identity(x.ring(), x.rank());
    for (int t = 0; t < x.d(); ++t) p = n ? mul_truncated(p, x.phi(k + t), *n) : p * x.phi(k + t);
    rep.holds.push_back(p == target);
  }
  rep.pass = std::all_of(rep.holds.begin(), rep.holds.end(), [](bool b) { return b; });
  return rep;
}

}  // namespace

ValidationReport validate(const MatFac& x) { return run_validation(x, std::nullopt); }

ValidationReport validate_mod(const MatFac& x, unsigned n) { return run_validation(x, n); }

MatFac shift(const MatFac& x, long i) {
  std::vector<PolyMatrix> maps;
  for (int k = 0; k < x.d(); ++k) maps.push_back(x.phi(k + i));
  return MatFac::from_indexed(x.ring(), x.d(), x.f(), std::move(maps));
}

MatFac direct_sum(const MatFac& a, const MatFac& b) {
  if (a.ring() != b.ring()) throw RingMismatch("direct sum over different rings");
  if (a.d() != b.d()) throw RingMismatch("direct sum of factorizations with different d");
  if (a.f() != b.f()) throw RingMismatch("direct sum of factorizations of different elements");
  std::vector<PolyMatrix> maps;
  for (int k = 0; k < a.d(); ++k) maps.push_back(block_diagonal(a.ring(), {a.phi(k), b.phi(k)}));
  return MatFac::from_indexed(a.ring(), a.d(), a.f(), std::move(maps));
}

MatFac zero_factorization(const Ring& ring, int d, const Polynomial& f) {
  return MatFac::from_indexed(ring, d, f, std::vector<PolyMatrix>(d, poly_zero(ring, 0, 0)));
}

bool is_reduced(const MatFac& x) {
  return std::all_of(x.by_index().begin(), x.by_index().end(),
                     [](const PolyMatrix& m) { return has_zero_constant_terms(m); });
}

MatFac projective(const Ring& ring, int d, const Polynomial& f, int i) {
  if (i < 0 || i >= d) throw std::invalid_argument("projective index out of range");
  std::vector<PolyMatrix> maps(d, poly_identity(ring, 1));
  maps[0] = poly_scalar(ring, 1, f);  // tuple slot of phi_1
  return shift(MatFac(ring, d, f, maps), i);
}

MatFac reduce_mod_vars(const MatFac& x, const std::vector<std::string>& kill) {
  std::vector<PolyMatrix> maps;
  for (const auto& m : x.by_index()) maps.push_back(reduce_mod_vars(m, kill));
  return MatFac::from_indexed(x.ring(), x.d(), reduce_mod_vars(x.f(), kill), std::move(maps));
}

MatFac scale_all(const MatFac& x, const CycloElem& c) {
  std::vector<PolyMatrix> maps;
  for (const auto& m : x.by_index()) maps.push_back(m.scaled(c));
  return MatFac::from_indexed(x.ring(), x.d(), x.f(), std::move(maps));
}

PresentationMatrix cokernel_presentation(const MatFac& x, long k, int len) {
  if (len < 1 || len > x.d()) throw std::invalid_argument("product length out of range 1..d");
  return {cyclic_product(x, k, len), x.f(), k, len};
}

std::vector<bool> support(const MatFac& x) {
  std::vector<bool> s(x.ring().nvars(), false);
  for (const auto& m : x.by_index()) {
    auto ms = support(m);
    for (std::size_t i = 0; i < s.size(); ++i) s[i] = s[i] || ms[i];
  }
  return s;
}

unsigned default_precision(const std::vector<const MatFac*>& xs) {
  unsigned best = 0;
  for (const MatFac* x : xs)
    for (const auto& m : x->by_index()) best = std::max(best, max_total_degree(m));
  return best + 1;
}

Morphism::Morphism(MatFac source, MatFac target, std::vector<PolyMatrix> comps)
    : source_(std::move(source)), target_(std::move(target)), comps_(std::move(comps)) {
  if (source_.ring() != target_.ring()) throw RingMismatch("morphism between different rings");
  if (source_.d() != target_.d()) throw RingMismatch("morphism between different d");
  if (source_.f() != target_.f()) {
    throw RingMismatch("morphism between factorizations of different elements");
  }
  if (static_cast<int>(comps_.size()) != source_.d()) {
    throw ShapeMismatch("morphism needs " + std::to_string(source_.d()) + " components");
  }
  for (const auto& c : comps_) {
    if (c.rows() != target_.rank() || c.cols() != source_.rank()) {
      throw ShapeMismatch("morphism component " + c.shape() + ", expected " +
                          std::to_string(target_.rank()) + "x" + std::to_string(source_.rank()));
    }
  }
}

bool Morphism::operator==(const Morphism& o) const {
  return source_ == o.source_ && target_ == o.target_ && comps_ == o.comps_;
}

Scaled scale_by_units(const MatFac& x, const std::vector<CycloElem>& units) {
  const int d = x.d();
  if (static_cast<int>(units.size()) != d) throw ShapeMismatch("need one unit per map");
  const CycloField& k = x.ring().field();
  CycloElem prod = k.one();
  for (const auto& c : units) prod *= c;
  if (!prod.is_one()) throw HypothesisError("product of scaling units is not 1");
  // units[t] scales phi_{t+1}
  auto unit = [&](long idx) -> const CycloElem& { return units[x.index(idx - 1)]; };
  std::vector<PolyMatrix> maps;
  for (int idx = 0; idx < d; ++idx) maps.push_back(x.phi(idx).scaled(unit(idx)));
  MatFac scaled = MatFac::from_indexed(x.ring(), d, x.f(), std::move(maps));
  std::vector<PolyMatrix> comps;
  CycloElem gamma = k.one();
  for (int idx = 0; idx < d; ++idx) {
    if (idx > 0) gamma *= unit(idx);
    comps.push_back(poly_scalar(x.ring(), x.rank(), x.ring().constant(gamma)));
  }
  return {scaled, Morphism(scaled, x, std::move(comps))};
}

}  // namespace mfac
