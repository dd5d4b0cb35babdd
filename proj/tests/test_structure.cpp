#include "doctest.h"
#include "matfac/structure.hpp"
#include "oracles.hpp"

using namespace mfac;
using oracle::P;

TEST_SUITE("structure") {
  static Ring ring() { return Ring(CycloField(3), {"x1", "x2", "x0", "y1", "y2", "y0", "w1", "w2", "w0"}); }

  TEST_CASE("supports") {
    Ring r = ring();
    MatFac x = oracle::rank_one(r, {"x1", "x2", "x0"}), y = oracle::rank_one(r, {"y1", "x2*y2", "y0"});
    CHECK(support_vars(x) == std::vector<std::string>{"x1", "x2", "x0"});
    CHECK_FALSE(disjoint_support(x, y));
    CHECK(disjoint_support(x, oracle::rank_one(r, {"y1", "y2", "y0"})));
  }

  TEST_CASE("reduction requires disjoint variables") {
    Ring r = ring();
    CycloElem z = r.field().zeta();
    MatFac x = oracle::rank_one(r, {"x1", "x2", "x0"}), y = oracle::rank_one(r, {"y1", "x2*y2", "y0"});
    CHECK_THROWS_AS(reduce_tensor_witness(x, y, Side::left, z), HypothesisError);
  }

  TEST_CASE("plain reduction witnesses") {
    Ring r = ring();
    CycloElem z = r.field().zeta();
    MatFac x = oracle::rank_two(r, "x1", "x2", {"x0"}), y = oracle::rank_one(r, {"y1", "y2", "y0"});
    for (Side s : {Side::left, Side::right}) {
      ReductionWitness w = reduce_tensor_witness(x, y, s, z);
      CHECK(w.verified);
      CHECK(is_morphism(w.plain_witness));
      CHECK(is_isomorphism(w.plain_witness));
      CHECK(validate(w.plain).pass);
    }
  }

  TEST_CASE("morphism blocks of reduced tensors") {
    Ring r = ring();
    CycloElem z = r.field().zeta();
    MatFac x = oracle::rank_one(r, {"x1", "x2", "x0"}), y = oracle::rank_one(r, {"y1", "y2", "y0"});
    MatFac t = tensor(x, y, z);
    Morphism a = add(identity(t), scalar_morphism(t, z));
    BlockMorphisms bx = reduce_morphism_blocks_x(a, x, y, y, z);
    CHECK(bx.blocks.size() == 3);
    CHECK(bx.all_morphisms);
    CHECK(bx.reassembles);
    BlockMorphisms by = reduce_morphism_blocks_y(a, x, x, y, z);
    CHECK(by.all_morphisms);
    CHECK(by.reassembles);
  }

  TEST_CASE("summand bounds") {
    DecompBound b = summand_bound(2, 4, 3, false, false);
    CHECK(b.r == 2);
    CHECK(b.bound == 6);
    CHECK(b.min_summand_rank == 4);
    DecompBound a = summand_bound(2, 4, 3, true, true);
    CHECK(a.bound == 2);
    CHECK(a.min_summand_rank == 12);
    CHECK(summand_bound(3, 3, 2, true, false).bound == 6);
  }

  TEST_CASE("shift refutations") {
    Ring r = ring();
    for (const auto& s : jet_refute_shift_iso(oracle::rank_one(r, {"x1", "x2", "x0"}))) CHECK(s.refuted);
    // (x, x, x) is shift symmetric.
    for (const auto& s : jet_refute_shift_iso(oracle::rank_one(r, {"x1", "x1", "x1"}))) CHECK_FALSE(s.refuted);
  }

  TEST_CASE("certificates") {
    Ring r = ring();
    CycloElem z = r.field().zeta();
    CertOutcome cx = coprime_rank_one_cert(oracle::rank_one(r, {"x1^2", "x2", "x0"}));
    CertOutcome cy = coprime_rank_one_cert(oracle::rank_one(r, {"y1", "y2", "y0"}));
    REQUIRE(cx.cert);
    REQUIRE(cy.cert);
    CHECK(check_certificate(*cx.cert));
    StrongIndCert c = propagate_strong_ind(*cx.cert, *cy.cert, z);
    CHECK(c.kind == StrongIndCert::Kind::propagation);
    CHECK(check_certificate(c));
    CHECK(c.subject == tensor(cx.cert->subject, cy.cert->subject, z));
    CHECK(strong_ind_consequences(c).size() == 3 + 3);
    // Tampering is detected.
    StrongIndCert bad = c;
    bad.subject = shift(c.subject, 1);
    CHECK_FALSE(check_certificate(bad));
    CHECK_THROWS_AS(propagate_strong_ind(*cx.cert, *cx.cert, z), HypothesisError);
  }

  TEST_CASE("certificate refusals") {
    Ring r = ring();
    CHECK_FALSE(coprime_rank_one_cert(oracle::rank_one(r, {"x1*x2", "x2", "x0"})).cert);
    CHECK_FALSE(coprime_rank_one_cert(oracle::rank_one(r, {"x1^2", "x1^3", "x2"})).cert);
    CHECK_THROWS_AS(coprime_rank_one_cert(oracle::rank_one(r, {"x1 + x2", "x2", "x0"})), Undecidable);
    CHECK_THROWS_AS(coprime_rank_one_cert(oracle::rank_two(r, "x1", "x2", {"x0"})), HypothesisError);
    CHECK_THROWS_AS(coprime_rank_one_cert(projective(r, 3, P(r, "x1"), 0)), HypothesisError);
  }

  TEST_CASE("spot checks") {
    Ring r = ring();
    CHECK(certificate_spot_check(oracle::rank_one(r, {"x1", "x2", "x0"})).pass());
    SpotCheck s = certificate_spot_check(oracle::rank_one(r, {"x1^3", "x2", "x0"}));
    CHECK(s.precision == 3);
    CHECK(s.pass());
    CHECK_FALSE(certificate_spot_check(oracle::rank_one(r, {"x1", "x1", "x1"})).cross_shifts_vanish);
  }

  TEST_CASE("indecomposability theorems") {
    Ring r = ring();
    CycloElem z = r.field().zeta();
    MatFac x = oracle::rank_one(r, {"x1", "x2", "x0"});
    MatFac y = oracle::rank_one(r, {"y1", "y1", "y1"});
    IndecompReport a = coprime_symmetric_indecomposable(x, y, identity(y), z);
    CHECK(a.accepted);
    CHECK(a.hypotheses.size() >= 3);
    IndecompReport b = rank_one_asymmetric_indecomposable(x, oracle::rank_one(r, {"y1", "y2", "y0"}), z);
    CHECK(b.accepted);
    IndecompReport c = rank_one_asymmetric_indecomposable(oracle::rank_one(r, {"x1", "x1", "x1"}),
                                                          oracle::rank_one(r, {"y1", "y2", "y0"}), z);
    CHECK_FALSE(c.accepted);
    CHECK_FALSE(c.refusal.empty());
  }

  TEST_CASE("isomorphism refutation is sound on isomorphic pairs") {
    Ring r = ring();
    CycloElem z = r.field().zeta();
    MatFac x = oracle::rank_one(r, {"x1", "x2", "x0"}), y = oracle::rank_one(r, {"y1", "y2", "y0"});
    MatFac t = tensor(x, y, z);
    CHECK(refute_isomorphism(t, t, 1).verdict == IsoVerdict::candidate);
    CHECK(refute_isomorphism(tensor(shift(x, 1), y, z), shift(t, 1), 1).verdict == IsoVerdict::candidate);
    CHECK(refute_isomorphism(t, shift(t, 1), 1).verdict == IsoVerdict::refuted);
  }
}
