#include "ehrk/serialize.hpp"

#include <limits>

namespace ehrk {

namespace {

Json big_to_json(const BigInt& v) {
  if (v >= std::numeric_limits<Int>::min() && v <= std::numeric_limits<Int>::max()) return static_cast<Int>(v);
  return v.str();
}

std::string tuple_text(const std::vector<Int>& v) {
  std::string out = "(";
  for (std::size_t i = 0; i < v.size(); ++i) out += (i ? "," : "") + std::to_string(v[i]);
  return out + ")";
}

std::string csv_quote(const std::string& s) {
  if (s.find_first_of(",\"") == std::string::npos) return s;
  std::string out = "\"";
  for (char ch : s) out += ch == '"' ? std::string("\"\"") : std::string(1, ch);
  return out + "\"";
}

}  // namespace

Json to_json(const IntPoly& f) { return {{"coeffs", f.coeffs()}}; }

Json to_json(const SupportedQ& q) { return {{"r", q.r()}, {"x", q.x()}}; }

Json to_json(const SDivision& d) { return {{"c", d.c}, {"rho", d.rho}, {"desirable", d.desirable}}; }

Json to_json(const CyclotomicMultiset& m) {
  Json out = Json::array();
  for (const auto& f : m) out.push_back({{"d", f.d}, {"multiplicity", f.multiplicity}});
  return out;
}

Json to_json(const GeomFactorization& f) {
  Json out = Json::array();
  for (const auto& g : f.factors) out.push_back({{"e", g.exponent}, {"gamma", g.length}});
  return out;
}

Json to_json(const RationalPoly& p) {
  Json num = Json::array(), den = Json::array();
  for (const auto& c : p.coeffs) {
    num.push_back(big_to_json(boost::multiprecision::numerator(c)));
    den.push_back(big_to_json(boost::multiprecision::denominator(c)));
  }
  return {{"num", num}, {"den", den}};
}

Json to_json(const SearchRecord& r) {
  Json out = to_json(r.q);
  out["reflexive"] = r.reflexive;
  out["ell"] = r.ell;
  out["kronecker"] = r.kronecker;
  out["cyclotomics"] = r.cyclotomics ? to_json(*r.cyclotomics) : Json(nullptr);
  out["hstar_factorization"] = r.geom_fact_hstar ? to_json(*r.geom_fact_hstar) : Json(nullptr);
  out["g_factorization"] = r.geom_fact_g ? to_json(*r.geom_fact_g) : Json(nullptr);
  out["family_tag"] = r.family_tag;
  return out;
}

Json to_json(const FibReport& r) {
  return {{"n", r.n},
          {"identities_ok", r.identities_ok},
          {"factorization_ok", r.factorization_ok},
          {"shift_ok", r.shift_ok},
          {"boundary_ok", r.boundary_ok},
          {"stability_ok", r.stability_ok},
          {"u_table", r.u_table}};
}

Json to_json(const VerificationReport& r) { return {{"checks", r.checks}, {"failures", r.failures}, {"ok", r.ok()}}; }

Json to_json(const Table1Diff& d) {
  auto list = [](const std::vector<SupportedQ>& qs) {
    Json out = Json::array();
    for (const auto& q : qs) out.push_back(to_json(q));
    return out;
  };
  return {{"matched", list(d.matched)}, {"missing", list(d.missing)}, {"extra", list(d.extra)}};
}

IntPoly int_poly_from_json(const Json& j) { return IntPoly(j.at("coeffs").get<std::vector<Coeff>>()); }

SupportedQ supported_q_from_json(const Json& j) {
  return SupportedQ(j.at("r").get<std::vector<Int>>(), j.at("x").get<std::vector<Int>>());
}

GeomFactorization geom_factorization_from_json(const Json& j) {
  std::vector<GeomSeries> fs;
  for (const auto& item : j) fs.push_back({item.at("e").get<Int>(), item.at("gamma").get<Int>()});
  return GeomFactorization(std::move(fs));
}

std::string csv_header() {
  return "r,x,reflexive,ell,kronecker,cyclotomics,hstar_factorization,g_factorization,family_tag";
}

std::string to_csv_row(const SearchRecord& r) {
  std::string row;
  row += csv_quote(tuple_text(r.q.r())) + ',';
  row += csv_quote(tuple_text(r.q.x())) + ',';
  row += std::string(r.reflexive ? "true" : "false") + ',';
  row += std::to_string(r.ell) + ',';
  row += std::string(r.kronecker ? "true" : "false") + ',';
  row += (r.cyclotomics ? csv_quote(to_string(*r.cyclotomics)) : "") + ',';
  row += (r.geom_fact_hstar ? csv_quote(to_string(*r.geom_fact_hstar)) : "none") + ',';
  row += (r.geom_fact_g ? csv_quote(to_string(*r.geom_fact_g)) : "none") + ',';
  row += r.family_tag;
  return row;
}

std::string records_to_csv(const std::vector<SearchRecord>& records) {
  std::string out = csv_header() + '\n';
  for (const auto& r : records) out += to_csv_row(r) + '\n';
  return out;
}

std::string records_to_jsonl(const std::vector<SearchRecord>& records) {
  std::string out;
  for (const auto& r : records) out += to_json(r).dump() + '\n';
  return out;
}

}  // namespace ehrk
