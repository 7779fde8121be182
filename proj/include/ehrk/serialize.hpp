#pragma once

// JSON and CSV forms of the library's values and reports.

#include <string>
#include <vector>

#include <json.hpp>

#include "ehrk/ehrhart.hpp"
#include "ehrk/explorer.hpp"
#include "ehrk/factorizer.hpp"
#include "ehrk/polyring.hpp"
#include "ehrk/simplex.hpp"

namespace ehrk {

using Json = nlohmann::json;

/// {"coeffs":[c0,c1,...]}
Json to_json(const IntPoly& f);
/// {"r":[...],"x":[...]}
Json to_json(const SupportedQ& q);
/// {"c":[...],"rho":[...],"desirable":bool}
Json to_json(const SDivision& d);
/// [{"d":3,"multiplicity":2},...]
Json to_json(const CyclotomicMultiset& m);
/// [{"e":1,"gamma":3},...]
Json to_json(const GeomFactorization& f);
/// {"num":[...],"den":[...]}; entries beyond 64 bits are decimal strings.
Json to_json(const RationalPoly& p);
Json to_json(const SearchRecord& r);
Json to_json(const FibReport& r);
Json to_json(const VerificationReport& r);
Json to_json(const Table1Diff& d);

IntPoly int_poly_from_json(const Json& j);
SupportedQ supported_q_from_json(const Json& j);
GeomFactorization geom_factorization_from_json(const Json& j);

/// r,x,reflexive,ell,kronecker,cyclotomics,hstar_factorization,g_factorization,family_tag
std::string csv_header();
std::string to_csv_row(const SearchRecord& r);

/// Header plus one row per record, newline-terminated.
std::string records_to_csv(const std::vector<SearchRecord>& records);
/// One JSON object per line.
std::string records_to_jsonl(const std::vector<SearchRecord>& records);

}  // namespace ehrk
