#include "doctest.h"
#include "matfac/morphism.hpp"
#include "oracles.hpp"

using namespace mfac;
using oracle::M;
using oracle::P;

TEST_SUITE("morphism") {
  static Ring ring() { return Ring(CycloField(3), {"x", "y"}); }

  TEST_CASE("identity, zero and scalars are morphisms") {
    Ring r = ring();
    MatFac x = oracle::rank_one(r, {"x", "y", "x*y"});
    CHECK(is_morphism(identity(x)));
    CHECK(is_isomorphism(identity(x)));
    CHECK(is_morphism(zero_morphism(x, shift(x, 1))));
    CHECK_FALSE(is_isomorphism(zero_morphism(x, x)));
    CHECK(is_morphism(scalar_morphism(x, r.field().zeta())));
  }

  TEST_CASE("the intertwining identity is checked per index") {
    Ring r = ring();
    MatFac x = oracle::rank_one(r, {"x", "y"});
    // alpha = (1, 2): alpha_0 phi_1 = x, phi_1 alpha_1 = 2x, fails at 1.
    Morphism a(x, x, {poly_scalar(r, 1, r.constant(1)), poly_scalar(r, 1, r.constant(2))});
    CHECK_FALSE(is_morphism(a));
    CHECK(morphism_failures(a) == std::vector<int>{0, 1});
  }

  TEST_CASE("composition, sums and shifts") {
    Ring r = ring();
    MatFac x = oracle::rank_one(r, {"x", "y", "x"});
    Morphism c = scalar_morphism(x, r.field().zeta());
    CHECK(compose(c, c) == scalar_morphism(x, r.field().zeta_pow(2)));
    CHECK(add(c, identity(x)) == scalar_morphism(x, r.field().zeta() + r.field().one()));
    CHECK(is_morphism(shift(c, 1)));
    CHECK(shift(c, 1).source() == shift(x, 1));
    CHECK(is_morphism(direct_sum(c, identity(x))));
  }

  TEST_CASE("exact and jet inverses") {
    Ring r(CycloField(1), {"x", "y"});
    MatFac x = oracle::rank_one(r, {"x", "y"});
    // A non-constant automorphism of X (+) X over the unit 1 + x.
    MatFac xx = direct_sum(x, x);
    Morphism a(xx, xx, {M(r, {{"1 + x", "0"}, {"0", "1"}}), M(r, {{"1 + x", "0"}, {"0", "1"}})});
    CHECK(is_morphism(a));
    CHECK(is_isomorphism(a));
    unsigned prec = 99;
    Morphism inv = inverse_witness(a, 4, &prec);
    CHECK(prec == 4);
    CHECK(is_morphism_mod(compose(inv, a), 4));
    Morphism b(xx, xx, {M(r, {{"1", "y"}, {"0", "1"}}), M(r, {{"1", "y"}, {"0", "1"}})});
    CHECK(is_morphism(b));
    Morphism binv = inverse_witness(b, 3, &prec);
    CHECK(prec == 0);
    CHECK(compose(binv, b) == identity(xx));
  }

  TEST_CASE("jet hom spaces contain the known morphisms") {
    Ring r = ring();
    MatFac x = oracle::rank_one(r, {"x", "y", "x*y"});
    JetHomBasis h = hom_space_jets(x, x, 2);
    CHECK(h.basis.size() >= 1);
    CHECK(in_span(h, identity(x).comps()));
    CHECK(in_span(h, scalar_morphism(x, r.field().zeta()).comps()));
    Morphism notmor(x, x, {poly_scalar(r, 1, r.one()), poly_scalar(r, 1, r.one()), poly_scalar(r, 1, r.constant(2))});
    CHECK_FALSE(in_span(h, notmor.comps()));
  }

  TEST_CASE("isomorphism search") {
    Ring r = ring();
    MatFac x = oracle::rank_one(r, {"x", "y", "x^2"});
    JetHomBasis self = hom_space_jets(x, x, 1);
    IsoSearch s = search_isomorphism(self, 1, 1, r.field());
    CHECK(s.verdict == IsoVerdict::candidate);
    REQUIRE(s.witness.has_value());
    JetHomBasis cross = hom_space_jets(x, shift(x, 1), 1);
    CHECK(search_isomorphism(cross, 1, 1, r.field()).verdict == IsoVerdict::refuted);
    CHECK(search_isomorphism(self, 1, 2, r.field()).verdict == IsoVerdict::refuted);
  }

  TEST_CASE("conjugating a component keeps the morphism property") {
    Ring r(CycloField(1), {"x", "y"});
    MatFac x = direct_sum(oracle::rank_one(r, {"x", "y"}), oracle::rank_one(r, {"x", "y"}));
    Morphism id = identity(x);
    PolyMatrix a = M(r, {{"1", "x"}, {"0", "1"}}), b = M(r, {{"1", "0"}, {"y", "1"}});
    Conjugated c = conjugate_component(id, 0, a, b, 3);
    CHECK(c.precision == 0);
    CHECK(is_morphism(c.morphism));
    CHECK(is_morphism(c.source_change));
    CHECK(is_morphism(c.target_change));
    CHECK(validate(c.morphism.source()).pass);
  }

  TEST_CASE("splitting an idempotent of a direct sum") {
    Ring r(CycloField(1), {"x", "y"});
    MatFac a = oracle::rank_one(r, {"x", "y"}), b = oracle::rank_one(r, {"y", "x"});
    MatFac s = direct_sum(a, b);
    Morphism e(s, s, {M(r, {{"1", "0"}, {"0", "0"}}), M(r, {{"1", "0"}, {"0", "0"}})});
    REQUIRE(is_morphism(e));
    Splitting sp = split_idempotent(s, e, 2);
    CHECK(sp.rank == 1);
    CHECK(sp.image.rank() == 1);
    CHECK(sp.complement.rank() == 1);
    CHECK(sp.off_diagonal_vanishes);
    CHECK(validate(sp.image).pass);
    CHECK(validate(sp.complement).pass);
    CHECK(is_isomorphism(sp.witness));
  }
}
