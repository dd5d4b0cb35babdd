#include "matfac/document.hpp"

#include "matfac/parser.hpp"

namespace mfac {

namespace {

const char* const kSections[] = {"ring", "polynomials", "factorizations", "morphisms", "sums", "commands"};

const Json& member(const Json& obj, const std::string& key, const std::string& where) {
  auto it = obj.find(key);
  if (it == obj.end()) throw DocumentError(where, "missing field '" + key + "'");
  return *it;
}

void expect(bool ok, const std::string& where, const std::string& what) {
  if (!ok) throw DocumentError(where, what);
}

long get_int(const Json& j, const std::string& where) {
  expect(j.is_number_integer(), where, "expected an integer");
  return j.get<long>();
}

const Json& get_object(const Json& j, const std::string& where) {
  expect(j.is_object(), where, "expected an object");
  return j;
}

Polynomial parse_at(const std::string& text, const Ring& ring, const std::string& where) {
  try {
    return parse_poly(text, ring);
  } catch (const ParseError& e) {
    throw DocumentError(where, e.what());
  }
}

PolyMatrix parse_matrix(const Json& j, const Ring& ring, const std::string& where) {
  expect(j.is_array(), where, "expected a matrix (array of rows)");
  const std::size_t rows = j.size();
  std::size_t cols = 0;
  for (std::size_t r = 0; r < rows; ++r) {
    expect(j[r].is_array(), where + "/" + std::to_string(r), "expected a row (array of strings)");
    if (r == 0) cols = j[r].size();
    expect(j[r].size() == cols, where + "/" + std::to_string(r), "ragged matrix row");
  }
  PolyMatrix m = poly_zero(ring, rows, cols);
  for (std::size_t r = 0; r < rows; ++r)
    for (std::size_t c = 0; c < cols; ++c) {
      std::string at = where + "/" + std::to_string(r) + "/" + std::to_string(c);
      expect(j[r][c].is_string(), at, "matrix entries must be strings");
      m(r, c) = parse_at(j[r][c].get<std::string>(), ring, at);
    }
  return m;
}

void check_name(const ProblemDoc& doc, const std::string& name, const std::string& where) {
  expect(!name.empty(), where, "empty name");
  expect(!doc.name_taken(name), where, "duplicate name '" + name + "'");
}

MatFac parse_factorization(const ProblemDoc& doc, const Json& j, const std::string& where) {
  get_object(j, where);
  const Ring& ring = doc.ring;
  try {
    if (j.contains("entries")) {
      const Json& e = j["entries"];
      expect(e.is_array() && e.size() >= 2, where + "/entries", "expected at least two entries");
      std::vector<PolyMatrix> maps;
      Polynomial f = ring.one();
      for (std::size_t t = 0; t < e.size(); ++t) {
        std::string at = where + "/entries/" + std::to_string(t);
        expect(e[t].is_string(), at, "entries must be strings");
        Polynomial p = parse_at(e[t].get<std::string>(), ring, at);
        f *= p;
        maps.push_back(poly_scalar(ring, 1, p));
      }
      if (j.contains("d")) expect(get_int(j["d"], where + "/d") == static_cast<long>(e.size()), where + "/d", "d disagrees with the number of entries");
      if (j.contains("f")) {
        Polynomial declared = resolve_polynomial(doc, j["f"], where + "/f");
        expect(declared == f, where + "/f", "declared f differs from the product of the entries");
      }
      return MatFac(ring, static_cast<int>(e.size()), f, maps);
    }
    long d = get_int(member(j, "d", where), where + "/d");
    expect(d >= 2, where + "/d", "d must be at least 2");
    Polynomial f = resolve_polynomial(doc, member(j, "f", where), where + "/f");
    const Json& maps = member(j, "maps", where);
    expect(maps.is_array(), where + "/maps", "expected an array of matrices");
    std::vector<PolyMatrix> ms;
    for (std::size_t t = 0; t < maps.size(); ++t) ms.push_back(parse_matrix(maps[t], ring, where + "/maps/" + std::to_string(t)));
    return MatFac(ring, static_cast<int>(d), f, ms);
  } catch (const DocumentError&) {
    throw;
  } catch (const std::exception& e) {
    throw DocumentError(where, e.what());
  }
}

MorphismEntry parse_morphism(const ProblemDoc& doc, const Json& j, const std::string& where) {
  get_object(j, where);
  const Json& src = member(j, "source", where);
  const Json& tgt = member(j, "target", where);
  expect(src.is_string() && tgt.is_string(), where, "source and target must be factorization names");
  const MatFac* x = find_named(doc.factorizations, src.get<std::string>());
  const MatFac* y = find_named(doc.factorizations, tgt.get<std::string>());
  expect(x != nullptr, where + "/source", "unknown factorization '" + src.get<std::string>() + "'");
  expect(y != nullptr, where + "/target", "unknown factorization '" + tgt.get<std::string>() + "'");
  const Json& comps = member(j, "components", where);
  expect(comps.is_array(), where + "/components", "expected an array of matrices");
  std::vector<PolyMatrix> ms;
  for (std::size_t t = 0; t < comps.size(); ++t) ms.push_back(parse_matrix(comps[t], doc.ring, where + "/components/" + std::to_string(t)));
  try {
    return {src.get<std::string>(), tgt.get<std::string>(), Morphism(*x, *y, std::move(ms))};
  } catch (const std::exception& e) {
    throw DocumentError(where, e.what());
  }
}

SumOfProducts parse_sum(const ProblemDoc& doc, const Json& j, const std::string& where) {
  get_object(j, where);
  const Json& terms = member(j, "terms", where);
  expect(terms.is_array() && !terms.empty(), where + "/terms", "expected a non-empty array of terms");
  SumOfProducts s{doc.ring, 2, {}, {}, std::nullopt};
  for (std::size_t i = 0; i < terms.size(); ++i) {
    std::string at = where + "/terms/" + std::to_string(i);
    expect(terms[i].is_array(), at, "a term is an array of factor strings");
    std::vector<Polynomial> row;
    for (std::size_t t = 0; t < terms[i].size(); ++t) {
      std::string a = at + "/" + std::to_string(t);
      expect(terms[i][t].is_string(), a, "factors must be strings");
      row.push_back(parse_at(terms[i][t].get<std::string>(), doc.ring, a));
    }
    s.factors.push_back(std::move(row));
  }
  s.d = j.contains("d") ? static_cast<int>(get_int(j["d"], where + "/d")) : static_cast<int>(s.factors[0].size());
  if (j.contains("partition")) {
    const Json& p = j["partition"];
    expect(p.is_array(), where + "/partition", "expected an array of group sizes per term");
    for (std::size_t i = 0; i < p.size(); ++i) {
      expect(p[i].is_array(), where + "/partition/" + std::to_string(i), "expected group sizes");
      std::vector<int> g;
      for (const auto& v : p[i]) g.push_back(static_cast<int>(get_int(v, where + "/partition/" + std::to_string(i))));
      s.partition.push_back(std::move(g));
    }
  }
  if (j.contains("target")) s.target = resolve_polynomial(doc, j["target"], where + "/target");
  try {
    check_sum_of_products(s);
  } catch (const std::exception& e) {
    throw DocumentError(where, e.what());
  }
  return s;
}

Ring parse_ring(const Json& j) {
  get_object(j, "/ring");
  long m = get_int(member(j, "conductor", "/ring"), "/ring/conductor");
  expect(m >= 1 && m <= 1000, "/ring/conductor", "conductor must lie in 1..1000");
  const Json& vars = member(j, "vars", "/ring");
  expect(vars.is_array(), "/ring/vars", "expected an array of variable names");
  std::vector<std::string> names;
  for (const auto& v : vars) {
    expect(v.is_string(), "/ring/vars", "variable names must be strings");
    names.push_back(v.get<std::string>());
  }
  try {
    return Ring(CycloField(static_cast<int>(m)), names);
  } catch (const std::exception& e) {
    throw DocumentError("/ring", e.what());
  }
}

}  // namespace

bool ProblemDoc::name_taken(const std::string& name) const {
  return find_named(polynomials, name) || find_named(factorizations, name) || find_named(morphisms, name) ||
         find_named(sums, name);
}

Polynomial resolve_polynomial(const ProblemDoc& doc, const Json& j, const std::string& where) {
  expect(j.is_string(), where, "expected a polynomial string or name");
  const std::string text = j.get<std::string>();
  if (const Polynomial* p = find_named(doc.polynomials, text)) return *p;
  return parse_at(text, doc.ring, where);
}

ProblemDoc parse_document(const Json& j) {
  expect(j.is_object(), "", "document must be a JSON object");
  for (auto it = j.begin(); it != j.end(); ++it) {
    bool known = false;
    for (const char* s : kSections) known = known || it.key() == s;
    expect(known, "/" + it.key(), "unknown section");
  }
  ProblemDoc doc(parse_ring(member(j, "ring", "")));
  if (j.contains("polynomials")) {
    const Json& ps = get_object(j["polynomials"], "/polynomials");
    for (auto it = ps.begin(); it != ps.end(); ++it) {
      std::string at = "/polynomials/" + it.key();
      check_name(doc, it.key(), at);
      expect(it->is_string(), at, "expected a polynomial string");
      doc.polynomials.emplace_back(it.key(), parse_at(it->get<std::string>(), doc.ring, at));
    }
  }
  if (j.contains("factorizations")) {
    const Json& fs = get_object(j["factorizations"], "/factorizations");
    for (auto it = fs.begin(); it != fs.end(); ++it) {
      std::string at = "/factorizations/" + it.key();
      check_name(doc, it.key(), at);
      doc.factorizations.emplace_back(it.key(), parse_factorization(doc, *it, at));
    }
  }
  if (j.contains("morphisms")) {
    const Json& ms = get_object(j["morphisms"], "/morphisms");
    for (auto it = ms.begin(); it != ms.end(); ++it) {
      std::string at = "/morphisms/" + it.key();
      check_name(doc, it.key(), at);
      doc.morphisms.emplace_back(it.key(), parse_morphism(doc, *it, at));
    }
  }
  if (j.contains("sums")) {
    const Json& ss = get_object(j["sums"], "/sums");
    for (auto it = ss.begin(); it != ss.end(); ++it) {
      std::string at = "/sums/" + it.key();
      check_name(doc, it.key(), at);
      doc.sums.emplace_back(it.key(), parse_sum(doc, *it, at));
    }
  }
  if (j.contains("commands")) {
    const Json& cs = j["commands"];
    expect(cs.is_array(), "/commands", "expected an array of commands");
    for (std::size_t i = 0; i < cs.size(); ++i) {
      std::string at = "/commands/" + std::to_string(i);
      expect(cs[i].is_object(), at, "a command is an object");
      expect(cs[i].contains("op") && cs[i]["op"].is_string(), at, "command needs an 'op' string");
      if (cs[i].contains("args")) expect(cs[i]["args"].is_object(), at + "/args", "args must be an object");
      if (cs[i].contains("as")) expect(cs[i]["as"].is_string(), at + "/as", "'as' must be a name");
    }
    doc.commands = cs;
  }
  return doc;
}

ProblemDoc parse_document_text(const std::string& text) {
  Json j;
  try {
    j = Json::parse(text);
  } catch (const Json::parse_error& e) {
    throw DocumentError("", "JSON syntax error at byte " + std::to_string(e.byte));
  }
  return parse_document(j);
}

Json matrix_to_json(const PolyMatrix& m) {
  Json rows = Json::array();
  for (std::size_t r = 0; r < m.rows(); ++r) {
    Json row = Json::array();
    for (std::size_t c = 0; c < m.cols(); ++c) row.push_back(to_string(m(r, c)));
    rows.push_back(std::move(row));
  }
  return rows;
}

Json factorization_to_json(const MatFac& x) {
  Json maps = Json::array();
  for (const auto& m : x.tuple()) maps.push_back(matrix_to_json(m));
  return Json{{"d", x.d()}, {"f", to_string(x.f())}, {"maps", std::move(maps)}};
}

Json morphism_to_json(const Morphism& a, const std::string& source, const std::string& target) {
  Json comps = Json::array();
  for (const auto& c : a.comps()) comps.push_back(matrix_to_json(c));
  return Json{{"source", source}, {"target", target}, {"components", std::move(comps)}};
}

Json serialize(const ProblemDoc& doc) {
  Json out;
  out["ring"] = Json{{"conductor", doc.ring.field().conductor()}, {"vars", doc.ring.vars()}};
  Json ps = Json::object();
  for (const auto& [n, p] : doc.polynomials) ps[n] = to_string(p);
  out["polynomials"] = std::move(ps);
  Json fs = Json::object();
  for (const auto& [n, x] : doc.factorizations) fs[n] = factorization_to_json(x);
  out["factorizations"] = std::move(fs);
  Json ms = Json::object();
  for (const auto& [n, m] : doc.morphisms) ms[n] = morphism_to_json(m.morphism, m.source, m.target);
  out["morphisms"] = std::move(ms);
  Json ss = Json::object();
  for (const auto& [n, s] : doc.sums) {
    Json terms = Json::array();
    for (const auto& row : s.factors) {
      Json r = Json::array();
      for (const auto& q : row) r.push_back(to_string(q));
      terms.push_back(std::move(r));
    }
    Json e{{"d", s.d}, {"terms", std::move(terms)}};
    if (!s.partition.empty()) e["partition"] = s.partition;
    if (s.target) e["target"] = to_string(*s.target);
    ss[n] = std::move(e);
  }
  out["sums"] = std::move(ss);
  out["commands"] = doc.commands;
  return out;
}

}  // namespace mfac
