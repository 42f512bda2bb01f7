#pragma once

// Machine-readable formats. All writers emit deterministically ordered
// objects so that equal values print byte-for-byte equal; every format here
// round-trips through its reader.

#include "json.hpp"
#include "lightleaves/decomp.hpp"
#include "lightleaves/grothendieck.hpp"
#include "lightleaves/hecke.hpp"

namespace lightleaves {

using Json = nlohmann::ordered_json;

long long toInt64(const Int& v);

// {"name", "coxeter_matrix", "cartan_matrix"}; 0 encodes infinity.
Json systemToJson(const CoxeterSystem& sys);
CoxeterSystem systemFromJson(const Json& j);
CoxeterSystem systemFromFile(const std::string& path);

Json wordToJson(const Word& w);
Word wordFromJson(const Json& j);

Json rootToJson(const Root& r);
Root rootFromJson(const Json& j);

// {"bits", "symbols", "endpoint_word", "contents"}; contents entries are
// null (Zero) or root coordinate arrays.
Json recordToJson(const SubexpressionRecord& rec);
SubexpressionRecord recordFromJson(const Expression& expr, const Json& j);

// {"sign": 1 | -1 | "±", "factors": [{"root", "exp"}]} with roots sorted.
Json monomialToJson(const SignedRootMonomial& m);
SignedRootMonomial monomialFromJson(const Json& j);

// {"basis": "Delta" | "L", "coeffs": [{"element", "c"}]}.
Json grVectorToJson(const CoxeterSystem& sys, const GrothendieckVector& v);
GrothendieckVector grVectorFromJson(const CoxeterSystem& sys, const Json& j);

// Rows {"y","u","lo","hi","settled"} plus "oracle"/"status" when a report is
// supplied.
Json boundsToJson(const DecompositionBounds& bounds, const OracleReport* report = nullptr);

// KL cache file: {"format_version", "system", "entries": [{"w", "terms":
// [{"y", "coeffs": [[exp, c]]}]}]}.
Json klCacheToJson(const KLCache& cache, const CoxeterSystem& sys);
void klCacheFromJson(const Json& j, const CoxeterSystem& sys, KLCache& cache);
void saveKLCache(const KLCache& cache, const CoxeterSystem& sys, const std::string& path);
// Missing file is fine (fresh cache); a present file must match the system.
void loadKLCache(const std::string& path, const CoxeterSystem& sys, KLCache& cache);

}  // namespace lightleaves
