#include "ehrk/explorer.hpp"

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <exception>
#include <mutex>
#include <sstream>
#include <thread>

#include "ehrk/ehrhart.hpp"
#include "ehrk/sequences.hpp"
#include "ehrk/table1_data.hpp"

namespace ehrk {

namespace {

unsigned resolve_workers(unsigned workers) { return workers == 0 ? default_worker_count() : workers; }

// Runs f(i) for i < units across workers; slot i of the result holds f(i), so
// the output never depends on scheduling.
template <class F>
auto parallel_collect(std::size_t units, unsigned workers, F f) -> std::vector<decltype(f(std::size_t{0}))> {
  std::vector<decltype(f(std::size_t{0}))> slots(units);
  std::atomic<std::size_t> next{0};
  std::exception_ptr failure;
  std::mutex failure_mutex;
  auto body = [&] {
    try {
      for (std::size_t i; (i = next.fetch_add(1)) < units;) slots[i] = f(i);
    } catch (...) {
      std::lock_guard lock(failure_mutex);
      if (!failure) failure = std::current_exception();
      next = units;
    }
  };
  const unsigned count = std::max(1u, std::min<unsigned>(workers, static_cast<unsigned>(std::max<std::size_t>(units, 1))));
  if (count == 1) {
    body();
  } else {
    std::vector<std::jthread> pool;
    for (unsigned w = 0; w < count; ++w) pool.emplace_back(body);
  }
  if (failure) std::rethrow_exception(failure);
  return slots;
}

template <class T>
std::vector<T> flatten(std::vector<std::vector<T>> chunks) {
  std::vector<T> out;
  for (auto& chunk : chunks) std::move(chunk.begin(), chunk.end(), std::back_inserter(out));
  return out;
}

void sort_records(std::vector<SearchRecord>& records) {
  std::sort(records.begin(), records.end(), [](const SearchRecord& a, const SearchRecord& b) { return a.q < b.q; });
}

CyclotomicMultiset series_cyclotomics(Int length) {
  CyclotomicMultiset out;
  for (Int d = 2; d <= length; ++d)
    if (length % d == 0) out.push_back({d, 1});
  return out;
}

std::string describe(const SupportedQ& q) { return "(" + to_string(q) + ")"; }

bool table2_rows_match(const std::vector<std::vector<Int>>& a, const std::vector<std::vector<Int>>& b) {
  const std::size_t rows = std::min(a.size(), b.size());
  for (std::size_t i = 0; i < rows; ++i) {
    const std::size_t cols = std::min(a[i].size(), b[i].size());
    if (!std::equal(a[i].begin(), a[i].begin() + static_cast<std::ptrdiff_t>(cols), b[i].begin())) return false;
  }
  return true;
}

}  // namespace

unsigned default_worker_count() {
  if (const char* env = std::getenv("EHRK_THREADS")) {
    char* end = nullptr;
    long v = std::strtol(env, &end, 10);
    if (end != env && *end == '\0' && v > 0) return static_cast<unsigned>(v);
  }
  return std::max(1u, std::thread::hardware_concurrency());
}

SearchRecord classify_q(const SupportedQ& q) {
  SearchRecord rec{q, is_reflexive(q), ell(q), false, std::nullopt, std::nullopt, std::nullopt, "none"};
  const IntPoly g = g_poly(q);
  auto kron = is_kronecker(g);
  rec.kronecker = kron.kronecker;
  if (!rec.kronecker) return rec;
  rec.cyclotomics = merge(*kron.factors, series_cyclotomics(rec.ell));
  rec.geom_fact_g = find_geometric_factorization(g);
  rec.geom_fact_hstar = find_geometric_factorization(hstar(q));
  auto family = match_family(q);
  rec.family_tag = family ? std::string(to_string(*family)) : "exceptional";
  return rec;
}

std::vector<SearchRecord> search_two_support(Int r_max, Int x_max, unsigned workers) {
  if (r_max < 2 || x_max < 1) throw Error(Errc::InvalidParameters, "two-support search needs r_max >= 2, x_max >= 1");
  struct Unit {
    Int r1, r2, x1;
  };
  std::vector<Unit> units;
  for (Int r1 = 1; r1 <= r_max; ++r1)
    for (Int r2 = r1 + 1; r2 <= r_max; ++r2) {
      if (std::gcd(r1, r2) != 1) continue;
      for (Int x1 = 1; x1 <= x_max; ++x1) units.push_back({r1, r2, x1});
    }
  auto chunks = parallel_collect(units.size(), resolve_workers(workers), [&](std::size_t i) {
    const auto [r1, r2, x1] = units[i];
    const Int L = r1 * r2;
    std::vector<SearchRecord> out;
    for (Int x2 = 1; x2 <= x_max; ++x2)
      if ((1 + x1 * r1 + x2 * r2) % L == 0) out.push_back(classify_q(SupportedQ({r1, r2}, {x1, x2})));
    return out;
  });
  auto records = flatten(std::move(chunks));
  sort_records(records);
  return records;
}

std::vector<SearchRecord> find_kronecker_without_geomfact(Int r_max, Int x_max, unsigned workers) {
  auto records = search_two_support(r_max, x_max, workers);
  std::erase_if(records, [](const SearchRecord& r) { return !(r.kronecker && !r.geom_fact_hstar); });
  return records;
}

std::vector<SearchRecord> search_three_support(Int s_max, Int x_max, unsigned workers) {
  if (s_max < 2 || x_max < 1) throw Error(Errc::InvalidParameters, "three-support search needs s_max >= 2, x_max >= 1");
  struct Unit {
    Int s1, s2, s3, x1;
  };
  std::vector<Unit> units;
  for (Int s1 = 2; s1 <= s_max; ++s1)
    for (Int s2 = 2; s2 < s1; ++s2)
      for (Int s3 = 2; s3 < s2; ++s3) {
        if (std::gcd(s1, s2) != 1 || std::gcd(s1, s3) != 1 || std::gcd(s2, s3) != 1) continue;
        for (Int x1 = 1; x1 <= x_max; ++x1) units.push_back({s1, s2, s3, x1});
      }
  auto chunks = parallel_collect(units.size(), resolve_workers(workers), [&](std::size_t i) {
    const auto [s1, s2, s3, x1] = units[i];
    const Int r1 = s2 * s3, r2 = s1 * s3, r3 = s1 * s2, L = s1 * s2 * s3;
    std::vector<SearchRecord> out;
    for (Int x2 = 1; x2 <= x_max; ++x2)
      for (Int x3 = 1; x3 <= x_max; ++x3) {
        if ((1 + x1 * r1 + x2 * r2 + x3 * r3) % L != 0) continue;
        auto rec = classify_q(SupportedQ({r1, r2, r3}, {x1, x2, x3}));
        if (rec.kronecker) out.push_back(std::move(rec));
      }
    return out;
  });
  auto records = flatten(std::move(chunks));
  sort_records(records);
  return records;
}

VerificationReport verify_classification_2odd(Int k_max, Int c_max, unsigned workers) {
  if (k_max < 2 || c_max < 1) throw Error(Errc::InvalidParameters, "classification sweep needs k_max >= 2, c_max >= 1");
  struct Unit {
    Int k, c1;
  };
  std::vector<Unit> units;
  for (Int k = 2; k <= k_max; ++k)
    for (Int c1 = 1; c1 <= c_max; ++c1) units.push_back({k, c1});
  auto chunks = parallel_collect(units.size(), resolve_workers(workers), [&](std::size_t i) {
    const auto [k, c1] = units[i];
    std::vector<std::string> failures;
    for (Int c2 = 0; c2 <= c_max; ++c2) {
      bool predicted = classify_2_2km1(k, c1, c2);
      bool found = find_geometric_factorization(g_two_support_fast(2, k, c1, c2)).has_value();
      if (predicted != found) {
        std::ostringstream os;
        os << "k=" << k << " c1=" << c1 << " c2=" << c2 << ": predicate " << predicted << ", search " << found;
        failures.push_back(os.str());
      }
    }
    return failures;
  });
  VerificationReport report;
  report.checks = static_cast<Int>(units.size()) * (c_max + 1);
  report.failures = flatten(std::move(chunks));
  return report;
}

VerificationReport verify_family_theorems(const FamilyBounds& bounds) {
  VerificationReport report;
  auto check = [&](const FamilyInstance& inst) {
    ++report.checks;
    const IntPoly g = g_poly(inst.q);
    std::string label = std::string(to_string(inst.family)) + " " + describe(inst.q);
    if (inst.expected.expand() != g)
      report.failures.push_back(label + ": expected " + to_string(inst.expected) + ", g = " + to_string(g));
    else if (!is_kronecker(g).kronecker)
      report.failures.push_back(label + ": g is not Kronecker");
  };
  for (Int a = 2; a <= bounds.a_max; ++a)
    for (Int c1 = 1; c1 <= bounds.c_max; ++c1)
      for (Int xa = 1; xa <= bounds.c_max; ++xa) check(family_case0(a, a * c1 - 1, xa));
  for (Int a = 2; a <= bounds.a_max; ++a)
    for (Int k = 1; k <= bounds.k_max; ++k)
      for (Int c = 1; c <= bounds.c_max; ++c)
        if ((k * a - 1) * c - k >= 1) check(family_case1(a, k, c));
  for (Int a = 2; a <= bounds.a_max; ++a)
    for (Int c = 1; c <= bounds.c_max; ++c)
      if ((a - 1) * c - 1 >= 1) check(family_case2(a, c));
  for (Int a = 2; a <= bounds.a_max; ++a)
    for (Int c = 1; c <= bounds.c_max; ++c) check(family_case3(a, c));
  check(family_532(1, 1));
  for (int which = 2; which <= 3; ++which)
    for (Int c = 1; c <= bounds.c532_max; ++c) check(family_532(which, c));
  for (Int n = 0; n <= bounds.n_max; ++n) check(fibonacci_instance(n));
  return report;
}

VerificationReport verify_ehrhart_positivity(Int r_max, Int x_max, unsigned workers) {
  if (r_max < 1 || x_max < 1) throw Error(Errc::InvalidParameters, "positivity sweep needs r_max >= 1, x_max >= 1");
  struct Unit {
    Int r1, r2;  // r2 == 0 for a single support value
  };
  std::vector<Unit> units;
  for (Int r1 = 1; r1 <= r_max; ++r1) {
    units.push_back({r1, 0});
    for (Int r2 = r1 + 1; r2 <= r_max; ++r2) units.push_back({r1, r2});
  }
  auto chunks = parallel_collect(units.size(), resolve_workers(workers), [&](std::size_t i) {
    const auto [r1, r2] = units[i];
    std::vector<std::string> failures;
    for (Int x1 = 1; x1 <= x_max; ++x1) {
      if (r2 == 0) {
        SupportedQ q({r1}, {x1});
        if (!is_ehrhart_positive(q)) failures.push_back(describe(q));
        continue;
      }
      for (Int x2 = 1; x2 <= x_max; ++x2) {
        SupportedQ q({r1, r2}, {x1, x2});
        if (!is_ehrhart_positive(q)) failures.push_back(describe(q));
      }
    }
    return failures;
  });
  VerificationReport report;
  for (const auto& u : units) report.checks += u.r2 == 0 ? x_max : x_max * x_max;
  report.failures = flatten(std::move(chunks));
  return report;
}

std::vector<std::vector<Int>> fib_u_table(Int n) {
  const Int lo = fib_sequence(n), hi = fib_sequence(n + 1);
  // r = (a_{n+1}, a_n) gives s = (a_n, a_{n+1})
  const std::vector<Int> s{lo, hi};
  std::vector<std::vector<Int>> table(static_cast<std::size_t>(lo), std::vector<Int>(static_cast<std::size_t>(hi)));
  for (Int i1 = 0; i1 < lo; ++i1)
    for (Int i2 = 0; i2 < hi; ++i2) {
      const std::vector<Int> idx{i1, i2};
      const Int alpha = crt_alpha(s, idx);
      table[static_cast<std::size_t>(i1)][static_cast<std::size_t>(i2)] = 3 * alpha - hi * (alpha / lo) - lo * (alpha / hi);
    }
  return table;
}

std::vector<FibReport> verify_fibonacci(Int n_max, unsigned workers) {
  if (n_max < 1) throw Error(Errc::InvalidParameters, "fibonacci sweep needs n_max >= 1");
  auto tables = parallel_collect(static_cast<std::size_t>(n_max + 1), resolve_workers(workers),
                                 [](std::size_t n) { return fib_u_table(static_cast<Int>(n)); });
  std::vector<FibReport> reports;
  for (Int n = 1; n <= n_max; ++n) {
    FibReport rep;
    rep.n = n;
    const Int prev = fib_sequence(n - 1), lo = fib_sequence(n), hi = fib_sequence(n + 1);
    const FamilyInstance inst = fibonacci_instance(n);

    bool ids = 1 + lo * lo + hi * hi == 3 * lo * hi && std::gcd(lo, hi) == 1;
    if (n >= 2) ids = ids && 1 + prev * prev == lo * fib_sequence(n - 2);
    ids = ids && is_reflexive(inst.q) && ell(inst.q) == 3;
    const auto& table = tables[static_cast<std::size_t>(n)];
    for (Int i1 = 0; i1 < lo && ids; ++i1)
      for (Int i2 = 0; i2 < hi; ++i2) {
        const Int closed = 3 * i1 + prev * mod_floor(lo * (i1 - i2), hi) - lo * mod_floor(prev * (i1 - i2), lo);
        if (closed != table[static_cast<std::size_t>(i1)][static_cast<std::size_t>(i2)]) {
          ids = false;
          break;
        }
      }
    rep.identities_ok = ids;
    rep.factorization_ok = g_poly(inst.q) == inst.expected.expand();

    rep.shift_ok = true;
    for (Int i1 = 0; i1 + 1 < lo; ++i1)
      for (Int i2 = 0; i2 + 1 < hi; ++i2)
        if (table[static_cast<std::size_t>(i1 + 1)][static_cast<std::size_t>(i2 + 1)] !=
            table[static_cast<std::size_t>(i1)][static_cast<std::size_t>(i2)] + 3)
          rep.shift_ok = false;

    rep.boundary_ok = true;
    for (Int i = 0; i < lo; ++i) {
      const Int expect = i == 0 ? 0 : i + beatty_floor(i) + 1;
      if (table[static_cast<std::size_t>(i)][0] != expect) rep.boundary_ok = false;
    }
    for (Int i = 0; i < hi; ++i)
      if (table[0][static_cast<std::size_t>(i)] != 2 * i - beatty_floor(i)) rep.boundary_ok = false;

    rep.stability_ok = table2_rows_match(tables[static_cast<std::size_t>(n - 1)], table);
    rep.u_table = table;
    reports.push_back(std::move(rep));
  }
  return reports;
}

const std::vector<Table1Row>& table1_rows() {
  static const std::vector<Table1Row> rows = [] {
    std::vector<Table1Row> out;
    std::istringstream in(detail::kTable1Csv);
    std::string line;
    std::getline(in, line);
    while (std::getline(in, line)) {
      if (line.empty()) continue;
      std::istringstream fields(line);
      Table1Row row;
      char comma;
      fields >> row.r1 >> comma >> row.r2 >> comma >> row.x1 >> comma >> row.x2 >> comma >> row.column;
      out.push_back(std::move(row));
    }
    return out;
  }();
  return rows;
}

Table1Diff diff_table1(const std::vector<SearchRecord>& records, Int r_max, Int x_max) {
  std::vector<SupportedQ> expected;
  for (const auto& row : table1_rows())
    if (std::max(row.r1, row.r2) <= r_max && row.x1 <= x_max && row.x2 <= x_max)
      expected.emplace_back(std::vector<Int>{row.r1, row.r2}, std::vector<Int>{row.x1, row.x2});
  std::vector<SupportedQ> found;
  for (const auto& rec : records)
    if (rec.family_tag == "exceptional") found.push_back(rec.q);
  std::sort(expected.begin(), expected.end());
  std::sort(found.begin(), found.end());
  Table1Diff diff;
  std::set_intersection(found.begin(), found.end(), expected.begin(), expected.end(), std::back_inserter(diff.matched));
  std::set_difference(expected.begin(), expected.end(), found.begin(), found.end(), std::back_inserter(diff.missing));
  std::set_difference(found.begin(), found.end(), expected.begin(), expected.end(), std::back_inserter(diff.extra));
  return diff;
}

}  // namespace ehrk
