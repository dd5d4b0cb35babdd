#include "matfac/runner.hpp"

#include <fstream>
#include <numeric>
#include <sstream>

#include "matfac/knorrer.hpp"
#include "matfac/parser.hpp"

namespace mfac {

namespace {

// Bad arguments or an unresolved reference inside a command.
class CommandError : public Error {
 public:
  using Error::Error;
};

struct Outcome {
  std::string status;  // pass | fail | refused | inconclusive
  std::string summary;
  Json details = Json::object();
};

Outcome verdict(bool ok, std::string pass_text, std::string fail_text, Json details = Json::object()) {
  return {ok ? "pass" : "fail", ok ? std::move(pass_text) : std::move(fail_text), std::move(details)};
}

class Command {
 public:
  Command(ProblemDoc& doc, const RunOptions& opts, const Json& cmd)
      : doc_(doc), opts_(opts), args_(cmd.contains("args") ? cmd["args"] : empty_) {
    if (cmd.contains("as")) as_ = cmd["as"].get<std::string>();
  }

  ProblemDoc& doc() { return doc_; }
  const Json& args() const { return args_; }
  const std::optional<std::string>& as() const { return as_; }
  bool has(const std::string& key) const { return args_.contains(key); }

  std::string str(const std::string& key) const {
    if (!has(key)) throw CommandError("missing argument '" + key + "'");
    if (!args_[key].is_string()) throw CommandError("argument '" + key + "' must be a string");
    return args_[key].get<std::string>();
  }
  long integer(const std::string& key, std::optional<long> fallback = std::nullopt) const {
    if (!has(key)) {
      if (fallback) return *fallback;
      throw CommandError("missing argument '" + key + "'");
    }
    if (!args_[key].is_number_integer()) throw CommandError("argument '" + key + "' must be an integer");
    return args_[key].get<long>();
  }
  bool flag(const std::string& key, bool fallback) const {
    if (!has(key)) return fallback;
    if (!args_[key].is_boolean()) throw CommandError("argument '" + key + "' must be true or false");
    return args_[key].get<bool>();
  }

  MatFac fact(const std::string& key) const {
    std::string name = str(key);
    const MatFac* x = find_named(doc_.factorizations, name);
    if (!x) throw CommandError("unresolved factorization '" + name + "'");
    return *x;
  }
  MorphismEntry morph(const std::string& key) const {
    std::string name = str(key);
    const MorphismEntry* m = find_named(doc_.morphisms, name);
    if (!m) throw CommandError("unresolved morphism '" + name + "'");
    return *m;
  }
  SumOfProducts sum(const std::string& key) const {
    std::string name = str(key);
    const SumOfProducts* s = find_named(doc_.sums, name);
    if (!s) throw CommandError("unresolved sum '" + name + "'");
    return *s;
  }

  // The --precision flag wins over a command's own precision, which wins
  // over the default.
  unsigned precision(unsigned fallback) const {
    if (opts_.precision) return *opts_.precision;
    if (has("precision")) {
      long p = integer("precision");
      if (p < 0) throw CommandError("precision must be non-negative");
      return static_cast<unsigned>(p);
    }
    return fallback;
  }

  CycloElem root(int order) const {
    const CycloField& k = doc_.ring.field();
    if (!k.has_roots_of_order(order)) {
      throw HypothesisError("Q(zeta_" + std::to_string(k.conductor()) + ") has no primitive " +
                            std::to_string(order) + "-th root of unity");
    }
    if (std::gcd(opts_.zeta_power, static_cast<long>(order)) != 1) {
      throw HypothesisError("--zeta " + std::to_string(opts_.zeta_power) + " does not give a primitive " +
                            std::to_string(order) + "-th root");
    }
    return k.root_of_unity(order, opts_.zeta_power);
  }

  std::string name_for(const std::string& suffix = "") const { return *as_ + suffix; }

  void store(const std::string& name, const MatFac& x) {
    claim_name(name);
    doc_.factorizations.emplace_back(name, x);
  }
  void store(const std::string& name, const std::string& source, const std::string& target, const Morphism& m) {
    claim_name(name);
    doc_.morphisms.push_back({name, MorphismEntry{source, target, m}});
  }

 private:
  void claim_name(const std::string& name) const {
    if (doc_.name_taken(name)) throw CommandError("name '" + name + "' is already in use");
  }

  static inline const Json empty_ = Json::object();
  ProblemDoc& doc_;
  const RunOptions& opts_;
  const Json& args_;
  std::optional<std::string> as_;
};

std::string field_text(const Ring& r, const CycloElem& c) { return to_string(c, zeta_symbol(r)); }

Json stats_json(const ModuleStats& s) {
  return Json{{"mu", s.mu},
              {"rank_R", s.rank_r},
              {"e_R", s.e_r},
              {"ord_f", s.ord_f},
              {"ratio", s.ratio().get_str()},
              {"ulrich", s.ulrich},
              {"det_sign", s.det_sign},
              {"irreducible_asserted", s.irreducible_asserted}};
}

Json claims_json(const std::vector<Claim>& cs) {
  Json out = Json::array();
  for (const auto& c : cs) out.push_back(Json{{"name", c.name}, {"statement", c.statement}, {"basis", c.citation}});
  return out;
}

Json cert_json(const StrongIndCert& c) {
  Json j{{"kind", c.kind == StrongIndCert::Kind::axiom ? "axiom" : "propagation"},
         {"d", c.subject.d()},
         {"rank", c.subject.rank()}};
  if (c.kind == StrongIndCert::Kind::axiom) {
    Json es = Json::array();
    for (const auto& e : c.entries) es.push_back(to_string(e));
    j["entries"] = es;
    j["basis"] = "rank one, pairwise coprime monomial entries";
  } else {
    j["left_vars"] = c.left_vars;
    j["right_vars"] = c.right_vars;
    j["zeta"] = field_text(c.subject.ring(), *c.zeta);
    j["basis"] = "tensor of strongly indecomposable factors in disjoint variables";
    j["left"] = cert_json(*c.left);
    j["right"] = cert_json(*c.right);
  }
  return j;
}

Json indices(const std::vector<bool>& holds, bool value) {
  Json out = Json::array();
  for (std::size_t k = 0; k < holds.size(); ++k)
    if (holds[k] == value) out.push_back(k);
  return out;
}

std::string join(const Json& arr) {
  std::string s;
  for (const auto& v : arr) s += (s.empty() ? "" : ", ") + v.dump();
  return s;
}

Outcome validation_outcome(const ValidationReport& r, const std::string& what) {
  Json failing = indices(r.holds, false);
  Json d{{"holds", r.holds}, {"failing", failing}};
  if (r.precision) d["precision"] = *r.precision;
  return verdict(r.pass, what + ": all " + std::to_string(r.holds.size()) + " cyclic products equal f*I",
                 what + ": cyclic product fails at index " + join(failing), d);
}

Outcome op_validate(Command& c) {
  MatFac x = c.fact("x");
  ValidationReport r = c.has("precision") ? validate_mod(x, c.precision(0)) : validate(x);
  return validation_outcome(r, c.str("x"));
}

Outcome built(Command& c, const MatFac& x, const std::string& what) {
  if (c.as()) c.store(c.name_for(), x);
  Outcome o = validation_outcome(validate(x), what);
  o.details["rank"] = x.rank();
  o.details["d"] = x.d();
  if (c.flag("show", false)) o.details["factorization"] = factorization_to_json(x);
  return o;
}

Outcome op_tensor(Command& c) {
  MatFac x = c.fact("x"), y = c.fact("y");
  MatFac t = tensor(x, y, c.root(x.d()));
  return built(c, t, c.str("x") + " (x) " + c.str("y"));
}

Outcome op_shift(Command& c) {
  MatFac x = c.fact("x");
  long i = c.integer("i", 1);
  return built(c, shift(x, i), "T^" + std::to_string(i) + " " + c.str("x"));
}

Outcome op_scale(Command& c) {
  MatFac x = c.fact("x");
  if (!c.has("units") || !c.args()["units"].is_array()) throw CommandError("'units' must be an array");
  std::vector<CycloElem> units;
  for (const auto& u : c.args()["units"]) {
    if (!u.is_string()) throw CommandError("units must be strings");
    Polynomial p = parse_poly(u.get<std::string>(), c.doc().ring);
    if (!p.is_constant()) throw CommandError("unit '" + u.get<std::string>() + "' is not a constant");
    units.push_back(p.constant_term());
  }
  Scaled s = scale_by_units(x, units);
  bool ok = validate(s.scaled).pass && is_morphism(s.witness) && is_isomorphism(s.witness);
  if (c.as()) {
    c.store(c.name_for(), s.scaled);
    c.store(c.name_for(".witness"), c.name_for(), c.str("x"), s.witness);
  }
  return verdict(ok, "scaled factorization validates, witness is an isomorphism",
                 "scaled factorization or its witness fails", Json{{"rank", s.scaled.rank()}});
}

Outcome op_reduce(Command& c) {
  MatFac x = c.fact("x");
  if (c.has("kill")) {
    std::vector<std::string> kill;
    for (const auto& v : c.args()["kill"]) kill.push_back(v.get<std::string>());
    MatFac r = reduce_mod_vars(x, kill);
    if (c.as()) c.store(c.name_for(), r);
    bool ok = validate(r).pass;
    return verdict(ok, "reduction validates", "reduction fails to validate",
                   Json{{"reduced", is_reduced(r)}, {"f", to_string(r.f())}});
  }
  MatFac y = c.fact("y");
  std::string side = c.has("side") ? c.str("side") : "left";
  if (side != "left" && side != "right") throw CommandError("side must be left or right");
  ReductionWitness w = reduce_tensor_witness(x, y, side == "left" ? Side::left : Side::right, c.root(x.d()));
  if (c.as()) {
    c.store(c.name_for(), w.reduced);
    c.store(c.name_for(".target"), w.target);
    c.store(c.name_for(".plain"), w.plain);
    c.store(c.name_for(".witness"), c.name_for(), c.name_for(".target"), w.witness);
    c.store(c.name_for(".plain_witness"), c.name_for(), c.name_for(".plain"), w.plain_witness);
  }
  Json d{{"side", side}, {"literal", w.literal}, {"rank", w.reduced.rank()}};
  return verdict(w.verified, "reduced tensor is isomorphic to the twisted shift sum (" + side + ")",
                 "reduction witness fails (" + side + ")", d);
}

Outcome op_det_check(Command& c) {
  MatFac x = c.fact("x"), y = c.fact("y");
  DetReport r = det_check(x, y, c.root(x.d()));
  Json dets = Json::array();
  for (const auto& p : r.dets) dets.push_back(to_string(p));
  Json d{{"expected", to_string(r.expected)}, {"dets", dets}, {"failing", indices(r.holds, false)}};
  return verdict(r.pass, "det Phi_k equals the expected power for every k",
                 "det Phi_k differs at index " + join(d["failing"]), d);
}

Outcome op_knorrer(Command& c) {
  MatFac x = c.fact("x"), y = c.fact("y");
  const int d = x.d();
  OmegaContext ctx = d % 2 ? context_from_zeta(c.root(d), d) : make_context(c.root(2 * d), d);
  SymmetricDecomposition dec = decompose_symmetric(x, y, ctx);
  bool ok = dec.verified && validate(dec.z).pass && validate(dec.sum).pass;
  if (c.as()) {
    c.store(c.name_for(".Z"), dec.z);
    c.store(c.name_for(".sum"), dec.sum);
    c.store(c.name_for(".tensor"), dec.tensor);
    c.store(c.name_for(".witness"), c.name_for(".tensor"), c.name_for(".sum"), dec.witness);
    c.store(c.name_for(".inverse"), c.name_for(".sum"), c.name_for(".tensor"), dec.inverse);
    for (int i = 0; i < d; ++i)
      c.store(c.name_for(".projection" + std::to_string(i)), c.name_for(".tensor"), c.name_for(".tensor"),
              knorrer_projection(dec, i));
  }
  const Ring& r = x.ring();
  Json dj{{"omega", field_text(r, ctx.omega)}, {"zeta", field_text(r, ctx.zeta)}, {"Z", factorization_to_json(dec.z)}};
  return verdict(ok, "X (x) Y is isomorphic to Z (+) TZ (+) ... (+) T^" + std::to_string(d - 1) + " Z",
                 "decomposition witness fails", dj);
}

Outcome op_split(Command& c) {
  MatFac x = c.fact("x");
  MorphismEntry e = c.morph("e");
  unsigned n = c.precision(default_precision({&x}));
  Splitting s = split_idempotent(x, e.morphism, n);
  auto valid = [&](const MatFac& m) { return s.precision ? validate_mod(m, s.precision).pass : validate(m).pass; };
  bool additive = s.image.rank() + s.complement.rank() == x.rank();
  bool ok = s.off_diagonal_vanishes && additive && valid(s.image) && valid(s.complement);
  if (c.as()) {
    c.store(c.name_for(".image"), s.image);
    c.store(c.name_for(".complement"), s.complement);
  }
  Json d{{"image_rank", s.image.rank()}, {"complement_rank", s.complement.rank()}, {"precision", s.precision},
         {"rank_additive", additive}, {"off_diagonal_vanishes", s.off_diagonal_vanishes}};
  return verdict(ok,
                 "split into ranks " + std::to_string(s.image.rank()) + " and " + std::to_string(s.complement.rank()),
                 "splitting fails", d);
}

Outcome op_hom_jets(Command& c) {
  MatFac x = c.fact("x"), y = c.fact("y");
  unsigned n = c.precision(default_precision({&x, &y}));
  JetHomBasis h = hom_space_jets(x, y, n);
  Json d{{"precision", h.precision}, {"equation_degree", h.equation_degree}, {"dimension", h.basis.size()}};
  return {"pass", "jet hom space has dimension " + std::to_string(h.basis.size()) + " at precision " + std::to_string(n), d};
}

Outcome op_refute_iso(Command& c) {
  MatFac x = c.fact("x"), y = c.fact("y");
  IsoSearch s = refute_isomorphism(x, y, c.precision(1));
  bool refuted = s.verdict == IsoVerdict::refuted;
  Json d{{"verdict", refuted ? "refuted" : "candidate"}, {"obstruction", s.obstruction}};
  if (c.has("expect")) {
    bool want = c.str("expect") == "refuted";
    return verdict(refuted == want, "verdict matches expectation", "verdict differs from expectation", d);
  }
  if (refuted) return {"pass", "no isomorphism: " + c.str("x") + " and " + c.str("y") + " differ", d};
  return {"inconclusive", "an invertible jet morphism exists; no refutation", d};
}

Outcome op_certify(Command& c) {
  std::vector<std::string> names;
  if (c.has("terms")) {
    for (const auto& t : c.args()["terms"]) names.push_back(t.get<std::string>());
  } else {
    names.push_back(c.str("x"));
  }
  if (names.empty()) throw CommandError("nothing to certify");
  std::optional<StrongIndCert> acc;
  for (const auto& name : names) {
    const MatFac* x = find_named(c.doc().factorizations, name);
    if (!x) throw CommandError("unresolved factorization '" + name + "'");
    CertOutcome o = coprime_rank_one_cert(*x);
    if (!o.cert) return {"refused", name + ": " + o.refusal, Json::object()};
    acc = acc ? propagate_strong_ind(*acc, *o.cert, c.root(x->d())) : *o.cert;
  }
  bool ok = check_certificate(*acc);
  Json d{{"certificate", cert_json(*acc)}, {"claims", claims_json(strong_ind_consequences(*acc))}};
  bool spot = c.flag("spot_check", acc->subject.rank() <= 3 && acc->subject.d() <= 3);
  if (spot) {
    SpotCheck s = certificate_spot_check(acc->subject, c.precision(0));
    d["spot_check"] = Json{{"precision", s.precision},
                           {"endomorphisms_scalar", s.endomorphisms_scalar},
                           {"cross_shifts_vanish", s.cross_shifts_vanish}};
    ok = ok && s.pass();
  }
  if (c.as()) c.store(c.name_for(), acc->subject);
  return verdict(ok, "strongly indecomposable, certificate checked", "certificate check fails", d);
}

Outcome op_bound(Command& c) {
  DecompBound b;
  if (c.has("x")) {
    MatFac x = c.fact("x"), y = c.fact("y");
    unsigned n = c.precision(1);
    auto asym = [&](const MatFac& m) {
      for (const auto& r : jet_refute_shift_iso(m, n))
        if (!r.refuted) return false;
      return true;
    };
    b = summand_bound(x.rank(), y.rank(), x.d(), asym(x), asym(y));
  } else {
    b = summand_bound(static_cast<std::size_t>(c.integer("n")), static_cast<std::size_t>(c.integer("m")),
                      static_cast<int>(c.integer("d")), c.flag("x_asymmetric", false), c.flag("y_asymmetric", false));
  }
  Json d{{"n", b.n}, {"m", b.m}, {"d", b.d}, {"gcd", b.r}, {"bound", b.bound},
         {"min_summand_rank", b.min_summand_rank}, {"asymmetric", b.asymmetric}, {"basis", b.basis}};
  return {"pass", "summand bound " + std::to_string(b.bound), d};
}

Outcome op_indecomposable(Command& c) {
  MatFac x = c.fact("x"), y = c.fact("y");
  std::string mode = c.str("mode");
  IndecompReport r;
  if (mode == "coprime-symmetric") {
    r = coprime_symmetric_indecomposable(x, y, c.morph("shift_iso").morphism, c.root(x.d()));
  } else if (mode == "rank-one-asymmetric") {
    r = rank_one_asymmetric_indecomposable(x, y, c.root(x.d()), c.precision(1));
  } else {
    throw CommandError("mode must be coprime-symmetric or rank-one-asymmetric");
  }
  Json d{{"hypotheses", r.hypotheses}, {"claim", claims_json({r.claim})[0]}};
  if (!r.accepted) return {"refused", r.refusal, d};
  return {"pass", r.claim.statement, d};
}

Outcome op_ulrich(Command& c) {
  SumOfProducts s = c.sum("sum");
  bool irreducible = c.flag("irreducible", false);
  CycloElem zeta = c.root(s.k());
  BuildReport build{s.row(0), 2, 0, 0, false, {}, false};
  ModuleStats st;
  Json d = Json::object();
  bool ok = true;
  if (c.flag("indecomposable", false)) {
    IndecomposableUlrich u = indecomposable_ulrich(s, zeta, irreducible);
    build = u.build;
    st = u.stats;
    ok = check_certificate(u.cert);
    d["certificate"] = cert_json(u.cert);
    d["claims"] = claims_json(u.claims);
    if (u.complexity_bound) d["ulrich_complexity_at_most"] = *u.complexity_bound;
  } else {
    UlrichBuild u = build_ulrich(s, zeta, irreducible);
    build = u.build;
    st = u.stats;
    d["ulrich_guaranteed"] = u.guaranteed;
  }
  if (c.has("l")) {
    st = mcm_stats(build.x, static_cast<int>(c.integer("l")), irreducible);
    d["l"] = c.integer("l");
  }
  ok = ok && build.pass;
  d["rank"] = build.x.rank();
  d["k"] = build.k;
  d["expected_rank"] = build.expected_rank;
  d["det_exponent"] = build.expected_det_exponent;
  d["stats"] = stats_json(st);
  if (c.as()) c.store(c.name_for(), build.x);
  std::string text = "mu = " + std::to_string(st.mu) + ", rank_R = " + std::to_string(st.rank_r) +
                     ", e_R = " + std::to_string(st.e_r) + (st.ulrich ? ", Ulrich" : ", not Ulrich");
  return verdict(ok, text, "construction identities fail: " + text, d);
}

Outcome op_extension(Command& c) {
  MatFac x = c.fact("x");
  ExtensionReport r = extension_ses(x, c.flag("irreducible", false), c.integer("k", 1));
  Json d{{"L", stats_json(r.l_stats)}, {"M", stats_json(r.m_stats)}, {"N", stats_json(r.n_stats)},
         {"squares_commute", r.squares_commute}};
  return verdict(r.squares_commute,
                 "0 -> L -> M -> N -> 0 with mu/e ratios " + r.l_stats.ratio().get_str() + ", " +
                     r.m_stats.ratio().get_str() + ", " + r.n_stats.ratio().get_str(),
                 "commuting squares fail", d);
}

Outcome op_projective_tensor(Command& c) {
  MatFac p = c.fact("p"), y = c.fact("y");
  ProjectiveTensorReport r = is_projective_tensor(p, y, c.root(p.d()), c.precision(0));
  if (c.as()) {
    c.store(c.name_for(".sum"), r.sum);
  }
  Json d{{"shifts", r.shifts}, {"precision", r.precision}, {"rank", r.sum.rank()}};
  return verdict(r.verified, "P (x) Y is a sum of " + std::to_string(r.shifts.size()) + " projective generators",
                 "projective splitting fails", d);
}

Outcome op_morphism_check(Command& c) {
  MorphismEntry m = c.morph("a");
  bool mor = is_morphism(m.morphism);
  bool iso = mor && is_isomorphism(m.morphism);
  Json d{{"morphism", mor}, {"isomorphism", iso}, {"failing", morphism_failures(m.morphism)}};
  bool want_iso = c.flag("isomorphism", false);
  return verdict(mor && (iso || !want_iso), want_iso ? "isomorphism" : "morphism",
                 mor ? "not an isomorphism" : "intertwining fails at index " + join(d["failing"]), d);
}

Outcome op_report(Command& c, Json& machine) {
  machine["document"] = serialize(c.doc());
  return {"pass", "document emitted", Json::object()};
}

Outcome dispatch(const std::string& op, Command& c, Json& machine) {
  if (op == "validate") return op_validate(c);
  if (op == "tensor") return op_tensor(c);
  if (op == "shift") return op_shift(c);
  if (op == "scale") return op_scale(c);
  if (op == "reduce") return op_reduce(c);
  if (op == "det-check") return op_det_check(c);
  if (op == "knorrer") return op_knorrer(c);
  if (op == "split-idempotent") return op_split(c);
  if (op == "hom-jets") return op_hom_jets(c);
  if (op == "refute-iso") return op_refute_iso(c);
  if (op == "certify") return op_certify(c);
  if (op == "bound") return op_bound(c);
  if (op == "indecomposable") return op_indecomposable(c);
  if (op == "ulrich") return op_ulrich(c);
  if (op == "extension-ses") return op_extension(c);
  if (op == "projective-tensor") return op_projective_tensor(c);
  if (op == "morphism-check") return op_morphism_check(c);
  if (op == "report") return op_report(c, machine);
  throw CommandError("unknown op '" + op + "'");
}

const char* overall(int code) { return code == 0 ? "pass" : code == 1 ? "fail" : "error"; }

}  // namespace

RunResult run_document(ProblemDoc doc, const RunOptions& opts) {
  RunResult out;
  out.machine = Json::object();
  Json options{{"precision", opts.precision ? Json(*opts.precision) : Json(nullptr)}, {"zeta", opts.zeta_power}};
  Json results = Json::array();
  std::ostringstream human;
  bool failed = false, errored = false;
  Json machine_extra = Json::object();
  const Json cmds = doc.commands;
  for (std::size_t i = 0; i < cmds.size() && !errored; ++i) {
    const Json& cmd = cmds[i];
    const std::string op = cmd["op"].get<std::string>();
    Outcome o;
    try {
      Command c(doc, opts, cmd);
      if (c.as() && c.as()->empty()) throw CommandError("'as' must be non-empty");
      o = dispatch(op, c, machine_extra);
    } catch (const HypothesisError& e) {
      o = {"refused", e.what(), Json::object()};
    } catch (const Undecidable& e) {
      o = {"refused", e.what(), Json::object()};
    } catch (const std::exception& e) {
      o = {"error", e.what(), Json::object()};
      errored = true;
    }
    failed = failed || o.status == "fail";
    Json r{{"index", i}, {"op", op}};
    if (cmd.contains("as")) r["as"] = cmd["as"];
    r["status"] = o.status;
    r["summary"] = o.summary;
    r["details"] = o.details;
    results.push_back(std::move(r));
    human << "[" << i + 1 << "] " << op << ": " << o.status << " - " << o.summary << "\n";
  }
  out.exit_code = errored ? 2 : failed ? 1 : 0;
  out.machine["status"] = overall(out.exit_code);
  out.machine["exit_code"] = out.exit_code;
  out.machine["options"] = options;
  out.machine["results"] = results;
  if (machine_extra.contains("document")) out.machine["document"] = machine_extra["document"];
  out.human = "matfac: " + std::to_string(results.size()) + " of " + std::to_string(cmds.size()) +
              " commands run, status " + overall(out.exit_code) + "\n" + human.str();
  return out;
}

RunResult run_text(const std::string& text, const RunOptions& opts) {
  try {
    return run_document(parse_document_text(text), opts);
  } catch (const DocumentError& e) {
    RunResult r;
    r.exit_code = 2;
    r.machine = Json{{"status", "error"}, {"exit_code", 2}, {"error", Json{{"where", e.where()}, {"message", e.what()}}}};
    r.human = std::string("matfac: document error: ") + e.what() + "\n";
    return r;
  }
}

RunResult run_file(const std::string& path, const RunOptions& opts) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    RunResult r;
    r.exit_code = 2;
    r.machine = Json{{"status", "error"}, {"exit_code", 2}, {"error", Json{{"where", ""}, {"message", "cannot read " + path}}}};
    r.human = "matfac: cannot read " + path + "\n";
    return r;
  }
  std::stringstream buf;
  buf << in.rdbuf();
  return run_text(buf.str(), opts);
}

}  // namespace mfac
