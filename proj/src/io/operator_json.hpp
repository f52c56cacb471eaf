#pragma once

#include <cstdint>
#include <optional>
#include <string>

#include "catalog/catalog.hpp"
#include "core/linalg.hpp"
#include "core/symbol.hpp"
#include "json.hpp"

namespace symcan {

using ojson = nlohmann::ordered_json;

constexpr int kSchemaVersion = 1;

struct OperatorFile {
  std::string source;
  SymbolOperator op;
  std::optional<QMatrix> t;
  Role role = Role::Operator;
  nlohmann::json metadata;
};

// Parses an operator document. Errors carry "source:line:col: message" and
// the Parse (syntax) or Validation (content) code.
OperatorFile parse_operator_json(const std::string& text, const std::string& source = "<input>",
                                 SymbolOperator::ZeroPolicy zero = SymbolOperator::ZeroPolicy::Reject);
// "catalog:name?k=v&..." or a path to a JSON document.
OperatorFile load_operator(const std::string& spec);

ojson to_json(const Rational& q);
ojson to_json(const QVector& v);
ojson to_json(const QMatrix& m);
ojson to_json(const Subspace& s);  // list of basis columns
ojson to_json(const MultiIndex& a);
ojson operator_to_json(const SymbolOperator& op, const std::optional<QMatrix>& t = std::nullopt);

Rational rational_from_json(const nlohmann::json& j);
QVector qvector_from_json(const nlohmann::json& j);
QMatrix qmatrix_from_json(const nlohmann::json& j, std::size_t rows, std::size_t cols);
SymbolOperator operator_from_json(const nlohmann::json& j);

std::uint64_t fnv1a64(const std::string& bytes);
// FNV-1a of the compact dump, as 16 lowercase hex digits.
std::string digest(const ojson& j);

std::string read_file(const std::string& path);

}  // namespace symcan
