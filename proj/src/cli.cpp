#include "ehrk/cli.hpp"

#include <fstream>
#include <functional>
#include <map>
#include <optional>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "ehrk/ehrhart.hpp"
#include "ehrk/explorer.hpp"
#include "ehrk/factorizer.hpp"
#include "ehrk/serialize.hpp"
#include "ehrk/simplex.hpp"

namespace ehrk {

namespace {

enum class Format { Text, Json, Csv };

struct Options {
  Format format = Format::Text;
  std::string out_path;
  bool full_scale = false;
  std::string qspec;
  std::string poly;
  bool of_g = false;
  bool all = false;
  bool table1 = false;
  bool no_geomfact = false;
  bool show_table = false;
  std::optional<Int> rmax, xmax, kmax, cmax, nmax, smax, amax;
  Int t = 1;
};

Int pick(const std::optional<Int>& given, bool full, Int desk, Int large) { return given ? *given : (full ? large : desk); }

std::string join(const std::vector<Coeff>& v) {
  std::string out;
  for (std::size_t i = 0; i < v.size(); ++i) out += (i ? "," : "") + std::to_string(v[i]);
  return out;
}

void emit_poly(std::ostream& os, const Options& o, const IntPoly& f) {
  switch (o.format) {
    case Format::Text: os << to_string(f) << '\n'; break;
    case Format::Json: os << to_json(f).dump() << '\n'; break;
    case Format::Csv: os << "coeffs\n\"" << join(f.coeffs()) << "\"\n"; break;
  }
}

void emit_records(std::ostream& os, const Options& o, const std::vector<SearchRecord>& records) {
  if (o.format == Format::Json)
    os << records_to_jsonl(records);
  else
    os << records_to_csv(records);
}

int emit_verification(std::ostream& os, const Options& o, const VerificationReport& rep) {
  if (o.format == Format::Json) {
    os << to_json(rep).dump() << '\n';
  } else {
    for (const auto& f : rep.failures) os << "  " << f << '\n';
    if (rep.ok())
      os << "OK: " << rep.checks << " checks\n";
    else
      os << "FAIL: " << rep.failures.size() << " of " << rep.checks << " checks\n";
  }
  return rep.ok() ? 0 : 1;
}

IntPoly poly_argument(const Options& o) {
  if (!o.poly.empty()) return parse_coeff_list(o.poly);
  SupportedQ q = parse_qspec(o.qspec);
  return o.of_g ? g_poly(q) : hstar(q);
}

int cmd_division(std::ostream& os, const Options& o) {
  SupportedQ q = parse_qspec(o.qspec);
  std::vector<SDivision> divs;
  if (o.all)
    divs = bounded_desirable_divisions(q);
  else
    divs.push_back(desirable_division(q));
  for (const auto& d : divs) {
    if (o.format == Format::Json) {
      os << to_json(d).dump() << '\n';
      continue;
    }
    os << "c=(" << join(d.c) << ") rho=(" << join(d.rho) << ")\n";
  }
  return 0;
}

int cmd_kronecker(std::ostream& os, const Options& o) {
  auto res = is_kronecker(poly_argument(o));
  if (o.format == Format::Json) {
    Json j{{"kronecker", res.kronecker}};
    j["cyclotomics"] = res.factors ? to_json(*res.factors) : Json(nullptr);
    os << j.dump() << '\n';
  } else {
    os << (res.kronecker ? "true " + to_string(*res.factors) : std::string("false")) << '\n';
  }
  return 0;
}

int cmd_factor(std::ostream& os, const Options& o) {
  auto fact = find_geometric_factorization(poly_argument(o));
  if (o.format == Format::Json)
    os << (fact ? to_json(*fact) : Json(nullptr)).dump() << '\n';
  else
    os << (fact ? to_string(*fact) : "none") << '\n';
  return 0;
}

int cmd_ehrhart(std::ostream& os, const Options& o) {
  SupportedQ q = parse_qspec(o.qspec);
  auto L = ehrhart_from_hstar(hstar(q), q.dimension());
  if (o.format == Format::Json)
    os << to_json(L).dump() << '\n';
  else
    os << to_string(L) << '\n';
  return 0;
}

int cmd_count(std::ostream& os, const Options& o) {
  SupportedQ q = parse_qspec(o.qspec);
  Int n = count_lattice_points(q, o.t);
  if (o.format == Format::Json)
    os << Json{{"t", o.t}, {"count", n}}.dump() << '\n';
  else
    os << n << '\n';
  return 0;
}

int cmd_search2(std::ostream& os, const Options& o) {
  const Int r_max = pick(o.rmax, o.full_scale, 20, 40), x_max = pick(o.xmax, o.full_scale, 60, 100);
  auto records = o.no_geomfact ? find_kronecker_without_geomfact(r_max, x_max) : search_two_support(r_max, x_max);
  if (!o.table1) {
    emit_records(os, o, records);
    return 0;
  }
  Table1Diff diff = diff_table1(records, r_max, x_max);
  if (o.format == Format::Json) {
    os << to_json(diff).dump() << '\n';
  } else {
    for (const auto& q : diff.matched) os << "matched " << to_string(q) << '\n';
    for (const auto& q : diff.missing) os << "missing " << to_string(q) << '\n';
    for (const auto& q : diff.extra) os << "extra " << to_string(q) << '\n';
    const std::size_t checks = diff.matched.size() + diff.missing.size() + diff.extra.size();
    if (diff.exact())
      os << "OK: " << checks << " checks\n";
    else
      os << "FAIL: " << diff.missing.size() << " missing, " << diff.extra.size() << " extra\n";
  }
  return diff.exact() ? 0 : 1;
}

int cmd_search3(std::ostream& os, const Options& o) {
  emit_records(os, o, search_three_support(pick(o.smax, o.full_scale, 7, 11), pick(o.xmax, o.full_scale, 25, 50)));
  return 0;
}

int cmd_fib(std::ostream& os, const Options& o) {
  auto reports = verify_fibonacci(pick(o.nmax, o.full_scale, 5, 7));
  bool ok = true;
  for (const auto& r : reports) {
    ok = ok && r.all_ok();
    if (o.format == Format::Json) {
      Json j = to_json(r);
      if (!o.show_table) j.erase("u_table");
      os << j.dump() << '\n';
      continue;
    }
    os << "n=" << r.n << " identities=" << r.identities_ok << " factorization=" << r.factorization_ok
       << " shift=" << r.shift_ok << " boundary=" << r.boundary_ok << " stability=" << r.stability_ok << '\n';
    if (o.show_table)
      for (const auto& row : r.u_table) os << "  " << join(row) << '\n';
  }
  if (o.format != Format::Json) {
    if (ok)
      os << "OK: " << reports.size() << " checks\n";
    else
      os << "FAIL: fibonacci report has a false flag\n";
  }
  return ok ? 0 : 1;
}

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact h*- and g-polynomials of the simplices conv(e_1, ..., e_n, -q)"};
  app.require_subcommand(1);
  app.fallthrough();
  Options o;
  std::map<std::string, Format> formats{{"text", Format::Text}, {"json", Format::Json}, {"csv", Format::Csv}};
  app.add_option("--format", o.format, "Output format")->transform(CLI::CheckedTransformer(formats, CLI::ignore_case));
  app.add_option("--out", o.out_path, "Write output to this file");
  app.add_flag("--full-scale", o.full_scale, "Use the large search bounds");

  std::function<int(std::ostream&, const Options&)> action;
  auto q_command = [&](const std::string& name, const std::string& help, auto fn, bool required = true) {
    auto* sub = app.add_subcommand(name, help);
    auto* opt = sub->add_option("q", o.qspec, "q-vector, e.g. \"2^7,5^5\" or \"2,2,5\"");
    if (required) opt->required();
    sub->callback([&action, fn] { action = fn; });
    return sub;
  };
  auto plain_command = [&](const std::string& name, const std::string& help, auto fn) {
    auto* sub = app.add_subcommand(name, help);
    sub->callback([&action, fn] { action = fn; });
    return sub;
  };

  q_command("hstar", "h*-polynomial", [](std::ostream& os, const Options& opt) {
    emit_poly(os, opt, hstar(parse_qspec(opt.qspec)));
    return 0;
  });
  q_command("g", "g-polynomial", [](std::ostream& os, const Options& opt) {
    emit_poly(os, opt, g_poly(parse_qspec(opt.qspec)));
    return 0;
  });
  q_command("ell", "length of the universal geometric factor", [](std::ostream& os, const Options& opt) {
    Int l = ell(parse_qspec(opt.qspec));
    if (opt.format == Format::Json)
      os << Json{{"ell", l}}.dump() << '\n';
    else
      os << l << '\n';
    return 0;
  });
  q_command("reflexive", "reflexivity test", [](std::ostream& os, const Options& opt) {
    bool r = is_reflexive(parse_qspec(opt.qspec));
    if (opt.format == Format::Json)
      os << Json{{"reflexive", r}}.dump() << '\n';
    else
      os << (r ? "true" : "false") << '\n';
    return 0;
  });
  q_command("division", "canonical desirable s-division", cmd_division)->add_flag("--all", o.all, "List every bounded desirable division");
  for (const char* name : {"kronecker", "factor"}) {
    auto* sub = q_command(name, std::string(name) == "factor" ? "geometric factorization" : "Kronecker test",
                          std::string(name) == "factor" ? cmd_factor : cmd_kronecker, false);
    sub->add_option("--poly", o.poly, "Coefficients ascending, e.g. \"1,2,2,1\"");
    sub->add_flag("--g", o.of_g, "Use g instead of h*");
  }
  q_command("ehrhart", "Ehrhart polynomial from h*", cmd_ehrhart);
  q_command("count", "lattice points of the t-th dilate by enumeration", cmd_count)->add_option("--t", o.t, "Dilation factor");

  auto* s2 = plain_command("search2", "two-support search", cmd_search2);
  s2->add_option("--rmax", o.rmax);
  s2->add_option("--xmax", o.xmax);
  s2->add_flag("--table1", o.table1, "Diff exceptional records against the stored table");
  s2->add_flag("--no-geomfact", o.no_geomfact, "Only Kronecker records whose h* has no geometric factorization");
  auto* s3 = plain_command("search3", "three-support search", cmd_search3);
  s3->add_option("--smax", o.smax);
  s3->add_option("--xmax", o.xmax);
  auto* c2 = plain_command("classify2odd", "classification sweep for r = (2, 2k-1)", [](std::ostream& os, const Options& opt) {
    return emit_verification(os, opt,
                             verify_classification_2odd(pick(opt.kmax, opt.full_scale, 10, 20), pick(opt.cmax, opt.full_scale, 12, 30)));
  });
  c2->add_option("--kmax", o.kmax);
  c2->add_option("--cmax", o.cmax);
  auto* fib = plain_command("fib", "Fibonacci-family checks", cmd_fib);
  fib->add_option("--nmax", o.nmax);
  fib->add_flag("--table", o.show_table, "Print the u tables");
  auto* fam = plain_command("families", "family theorem checks", [](std::ostream& os, const Options& opt) {
    FamilyBounds b;
    b.a_max = pick(opt.amax, opt.full_scale, b.a_max, 10);
    b.k_max = pick(opt.kmax, opt.full_scale, b.k_max, 8);
    b.c_max = pick(opt.cmax, opt.full_scale, b.c_max, 10);
    b.n_max = pick(opt.nmax, opt.full_scale, b.n_max, 7);
    b.c532_max = pick(opt.cmax, opt.full_scale, b.c532_max, 10);
    return emit_verification(os, opt, verify_family_theorems(b));
  });
  fam->add_option("--amax", o.amax);
  fam->add_option("--kmax", o.kmax);
  fam->add_option("--cmax", o.cmax);
  fam->add_option("--nmax", o.nmax);
  auto* pos = plain_command("positivity", "Ehrhart positivity sweep", [](std::ostream& os, const Options& opt) {
    return emit_verification(os, opt, verify_ehrhart_positivity(pick(opt.rmax, opt.full_scale, 8, 15), pick(opt.xmax, opt.full_scale, 10, 24)));
  });
  pos->add_option("--rmax", o.rmax);
  pos->add_option("--xmax", o.xmax);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e, out, err);
    return code == 0 ? 0 : 2;
  }

  try {
    if (o.out_path.empty()) return action(out, o);
    std::ostringstream buffer;
    int code = action(buffer, o);
    std::ofstream file(o.out_path, std::ios::binary);
    if (!file) {
      err << "cannot open " << o.out_path << '\n';
      return 2;
    }
    file << buffer.str();
    return code;
  } catch (const std::exception& e) {
    err << e.what() << '\n';
    return 2;
  }
}

}  // namespace ehrk
