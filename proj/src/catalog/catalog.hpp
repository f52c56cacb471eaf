#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "core/symbol.hpp"

namespace symcan {

using CatalogParams = std::map<std::string, long>;

enum class Role { Operator, Constraint };

struct ParamSpec {
  std::string name;
  long default_value;
  long min_value;
  long max_value;
};

struct CatalogEntry {
  std::string name;
  Role role;
  std::vector<ParamSpec> params;
  std::string summary;
};

struct CatalogItem {
  std::string name;
  CatalogParams params;  // fully resolved, defaults filled in
  Role role;
  SymbolOperator op;
  std::optional<QMatrix> constraint;  // T for partial cancellation, if the entry has one
};

const std::vector<CatalogEntry>& catalog_entries();
const CatalogEntry& catalog_entry(const std::string& name);

// Throws Validation on unknown names, unknown or out-of-range parameters and
// failed independence conditions.
CatalogItem catalog_get(const std::string& name, const CatalogParams& params = {});

// "name?k=v&..." (the part after "catalog:").
CatalogItem catalog_from_query(const std::string& query);
std::string catalog_query(const std::string& name, const CatalogParams& params);

// Direct constructors. Parameters are validated as in catalog_get.
SymbolOperator gradient(std::size_t n);
SymbolOperator divergence(std::size_t n);
SymbolOperator laplacian(std::size_t n);
SymbolOperator higher_order_div(std::size_t n, unsigned k);
SymbolOperator exterior_d(std::size_t n, std::size_t degree);
SymbolOperator hodge_pair(std::size_t n, std::size_t degree);
SymbolOperator sym_gradient_sk(std::size_t n, unsigned k);
SymbolOperator saint_venant_k(std::size_t n, unsigned k);
SymbolOperator curl_div(std::size_t n);
SymbolOperator quaternion();
SymbolOperator split_laplacian(std::size_t n, std::size_t degree);
SymbolOperator hyperbolic_example();
SymbolOperator strange_r4();

// A(xi)[v]_i = (eta_i . xi)(w_i . v), i = 1..n+m-1. Requires the etas to be
// n-wise and the ws m-wise linearly independent.
SymbolOperator defigueiredo(std::size_t n, std::size_t m, const std::vector<QVector>& etas,
                            const std::vector<QVector>& ws);
SymbolOperator defigueiredo(std::size_t n, std::size_t m);

// A(xi)[v]_i = a_i(xi)(w_i . v), i = 1..m+1, a_i(xi) = |eta_i|^2|xi|^2 - (eta_i . xi)^2.
SymbolOperator quadratic_collection(std::size_t n, std::size_t m, const std::vector<QVector>& etas,
                                    const std::vector<QVector>& ws);
SymbolOperator quadratic_collection(std::size_t n, std::size_t m);

// (1, t, t^2, ..., t^{dim-1})
QVector moment_curve(std::size_t dim, const Rational& t);
// Every subset of `size` vectors is linearly independent.
bool all_subsets_independent(const std::vector<QVector>& vs, std::size_t size);

// Sorted multisets of {0..n-1} of the given size, lexicographic.
std::vector<std::vector<std::size_t>> multisets(std::size_t n, std::size_t size);

struct GroundTruth {
  std::string name;
  CatalogParams params;
  std::optional<bool> elliptic;
  std::optional<bool> canceling;
  std::optional<bool> cocanceling;
  // "identity" when the joint kernel is the line through Id in the matrix space.
  std::optional<std::string> joint_kernel;
  std::string statement;
};

const std::vector<GroundTruth>& ground_truth();

}  // namespace symcan
