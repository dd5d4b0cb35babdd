#pragma once

#include <string>
#include <utility>
#include <vector>

#include "json.hpp"
#include "matfac/ulrich.hpp"

namespace mfac {

using Json = nlohmann::ordered_json;

template <class T>
using NamedList = std::vector<std::pair<std::string, T>>;

template <class T>
const T* find_named(const NamedList<T>& list, const std::string& name) {
  for (const auto& [n, v] : list)
    if (n == name) return &v;
  return nullptr;
}

template <class T>
void put_named(NamedList<T>& list, const std::string& name, T value) {
  for (auto& [n, v] : list)
    if (n == name) {
      v = std::move(value);
      return;
    }
  list.emplace_back(name, std::move(value));
}

// Malformed document; `where` is a JSON-pointer-like path.
class DocumentError : public Error {
 public:
  DocumentError(const std::string& where, const std::string& what)
      : Error(where.empty() ? what : where + ": " + what), where_(where) {}
  const std::string& where() const { return where_; }

 private:
  std::string where_;
};

struct MorphismEntry {
  std::string source, target;
  Morphism morphism;
};

struct ProblemDoc {
  Ring ring;
  NamedList<Polynomial> polynomials;
  NamedList<MatFac> factorizations;
  NamedList<MorphismEntry> morphisms;
  NamedList<SumOfProducts> sums;
  Json commands = Json::array();

  explicit ProblemDoc(Ring r) : ring(std::move(r)) {}
  bool name_taken(const std::string& name) const;
};

ProblemDoc parse_document(const Json& j);
ProblemDoc parse_document_text(const std::string& text);
Json serialize(const ProblemDoc& doc);

Json matrix_to_json(const PolyMatrix& m);
Json factorization_to_json(const MatFac& x);
Json morphism_to_json(const Morphism& a, const std::string& source, const std::string& target);

// A polynomial field: either the name of a declared polynomial or an
// expression in the grammar.
Polynomial resolve_polynomial(const ProblemDoc& doc, const Json& j, const std::string& where);

}  // namespace mfac
