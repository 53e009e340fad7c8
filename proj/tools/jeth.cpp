// jeth: exact Hilbert-series calculator for the principal component of the
// first-order jet scheme over the 2x2 determinantal variety.
//
// Subcommands: hvector, report, classical, verify, sweep.
// Exit codes: 0 success, 2 usage or parameter error, 3 verification failure,
// 4 resource-guard refusal.

#include <algorithm>
#include <atomic>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "jeth/exactmath.hpp"
#include "jeth/guards.hpp"
#include "jeth/hilbert.hpp"
#include "jeth/jetcomplex.hpp"
#include "jeth/oracle.hpp"

namespace {

using jeth::BigInt;
using jeth::Guards;
using jeth::HVector;
using ordered_json = nlohmann::ordered_json;

constexpr int kExitOk = 0;
constexpr int kExitUsage = 2;
constexpr int kExitVerifyFail = 3;
constexpr int kExitGuard = 4;

struct CommonOpts {
  int m = 0;
  int n = 0;
  std::string format = "text";
  int threads = 1;
  long long seed = 0;  // reserved for sampling-based tooling
  Guards guards;
};

void add_common(CLI::App* cmd, CommonOpts& o, bool with_mn = true) {
  if (with_mn) {
    cmd->add_option("--m", o.m, "number of rows m")->required()->envname("JETH_M");
    cmd->add_option("--n", o.n, "number of columns n")->required()->envname("JETH_N");
  }
  cmd->add_option("--format", o.format, "output format")
      ->check(CLI::IsMember({"text", "json"}))
      ->envname("JETH_FORMAT");
  cmd->add_option("--threads", o.threads, "worker threads for facet scans")
      ->check(CLI::PositiveNumber)
      ->envname("JETH_THREADS");
  cmd->add_option("--seed", o.seed, "seed for sampling-based tooling")
      ->envname("JETH_SEED");
  cmd->add_option("--max-facets", o.guards.max_facets, "facet enumeration guard")
      ->envname("JETH_MAX_FACETS");
  cmd->add_option("--max-faces", o.guards.max_faces, "face enumeration guard")
      ->envname("JETH_MAX_FACES");
  cmd->add_option("--max-paths", o.guards.max_paths, "path enumeration guard")
      ->envname("JETH_MAX_PATHS");
}

ordered_json to_json(const std::vector<BigInt>& v) {
  ordered_json a = ordered_json::array();
  for (const auto& x : v) a.push_back(x.str());
  return a;
}

std::string join_row(const std::vector<std::string>& row,
                     const std::vector<std::size_t>& width) {
  std::string line;
  for (std::size_t c = 0; c < row.size(); ++c) {
    line += row[c];
    if (c + 1 < row.size())
      line += std::string(width[c] - row[c].size() + 2, ' ');
  }
  return line;
}

// Aligned, header-first table.
void print_table(const std::vector<std::string>& header,
                 const std::vector<std::vector<std::string>>& rows) {
  std::vector<std::size_t> width(header.size());
  for (std::size_t c = 0; c < header.size(); ++c) width[c] = header[c].size();
  for (const auto& r : rows)
    for (std::size_t c = 0; c < r.size(); ++c)
      width[c] = std::max(width[c], r[c].size());
  std::cout << join_row(header, width) << "\n";
  for (const auto& r : rows) std::cout << join_row(r, width) << "\n";
}

void emit_json(const ordered_json& j) { std::cout << j.dump(2) << "\n"; }

struct Check {
  std::string name;
  bool pass = false;
  std::string detail;
};

ordered_json checks_json(const std::vector<Check>& checks) {
  ordered_json arr = ordered_json::array();
  for (const auto& c : checks) {
    ordered_json e;
    e["name"] = c.name;
    e["status"] = c.pass ? "pass" : "fail";
    e["detail"] = c.detail;
    arr.push_back(e);
  }
  return arr;
}

const Check* first_failure(const std::vector<Check>& checks) {
  for (const auto& c : checks)
    if (!c.pass) return &c;
  return nullptr;
}

// ---- verify engine (shared by cmd_verify and cmd_sweep) ----

struct VerifyData {
  std::vector<Check> checks;
  HVector closed;
  jeth::HilbertSeries canonical;
  std::vector<HVector> methods;  // closed, shelling, paths, lemmas
};

VerifyData run_verify(int m, int n, const std::string& level, const Guards& guards,
                      int threads) {
  jeth::require_jet_params(m, n);
  BigInt nfacets = jeth::facet_count(m, n);
  if (nfacets > guards.max_facets)
    throw jeth::GuardError("max_facets", nfacets.str(),
                           "verify: " + nfacets.str() +
                               " facets exceed the guard of " +
                               std::to_string(guards.max_facets));
  if (level == "deep") {
    // Deep requires guard headroom up front for the face oracle.
    BigInt faces = nfacets * (BigInt(1) << (2 * (m + n - 1)));
    if (faces > guards.max_faces)
      throw jeth::GuardError("max_faces", faces.str(),
                             "verify --level deep: " + faces.str() +
                                 " face encodings exceed the guard of " +
                                 std::to_string(guards.max_faces));
  }

  VerifyData out;
  auto closed = jeth::h_closed(m, n);
  auto shelling = jeth::h_shelling(m, n, guards, threads);
  auto paths = jeth::h_paths(m, n);
  auto lemmas = jeth::h_lemma_sums(m, n);
  out.closed = closed;
  out.methods = {closed, shelling, paths, lemmas};

  bool four = closed == shelling && closed == paths && closed == lemmas;
  out.checks.push_back({"hvector_four_way", four,
                        four ? closed.str()
                             : "closed=" + closed.str() + " shelling=" +
                                   shelling.str() + " paths=" + paths.str() +
                                   " lemmas=" + lemmas.str()});

  BigInt msum = jeth::jet_multiplicity_sum(m, n);
  BigInt mclosed = jeth::jet_multiplicity(m, n);
  BigInt mh = closed.sum();
  bool mult = msum == mclosed && mclosed == mh;
  out.checks.push_back({"multiplicity_triple", mult,
                        msum.str() + " = " + mclosed.str() + " = " + mh.str()});

  bool ainv_ok = true;
  std::string ainv_detail;
  try {
    int a = jeth::a_invariant(m, n);
    ainv_ok = a == -2 * n;
    ainv_detail = std::to_string(a);
  } catch (const jeth::InternalError& e) {
    ainv_ok = false;
    ainv_detail = e.what();
  }
  out.checks.push_back({"a_invariant", ainv_ok, ainv_detail});

  bool gor_ok = true;
  std::string gor_detail;
  try {
    bool g = jeth::is_gorenstein(m, n);
    gor_ok = g == (m == n);
    gor_detail = g ? "true" : "false";
  } catch (const jeth::InternalError& e) {
    gor_ok = false;
    gor_detail = e.what();
  }
  out.checks.push_back({"gorenstein", gor_ok, gor_detail});

  out.canonical = jeth::canonical_module_series(m, n);
  auto mirrored = jeth::poly_reverse(closed.to_polynomial(), 2 * (m + n - 1));
  int lowest = 0;
  while (lowest <= out.canonical.numerator.degree() &&
         out.canonical.numerator.coeff(lowest) == 0)
    ++lowest;
  bool canon = out.canonical.numerator == mirrored && lowest == 2 * n;
  out.checks.push_back({"canonical_reversal", canon,
                        "lowest nonzero degree " + std::to_string(lowest)});

  if (level == "deep") {
    auto facets = jeth::enumerate_facets(m, n, guards);
    auto fvec = jeth::oracle::f_vector(facets, guards.max_faces);
    auto hf = jeth::oracle::h_from_f(fvec, 2 * (m + n - 1));
    bool fok = hf == closed;
    out.checks.push_back({"f_vector_oracle", fok,
                          fok ? hf.str() : hf.str() + " != " + closed.str()});

    auto order = jeth::shelling_order(m, n, jeth::TieBreak::Canonical, guards);
    bool sh = jeth::oracle::verify_shelling(order);
    out.checks.push_back({"shelling_valid", sh, sh ? "shelling" : "not a shelling"});

    auto alt = jeth::shelling_order(m, n, jeth::TieBreak::ReversedSteps, guards);
    bool sha = jeth::oracle::verify_shelling(alt);
    out.checks.push_back(
        {"shelling_valid_alt", sha, sha ? "shelling" : "not a shelling"});

    bool corners_ok = true;
    std::string corners_detail = std::to_string(order.size()) + " facets";
    for (std::size_t t = 0; t < order.size(); ++t) {
      if (jeth::corners_fast(order[t]) != jeth::corners_bruteforce(t, order)) {
        corners_ok = false;
        corners_detail = "mismatch at position " + std::to_string(t);
        break;
      }
    }
    out.checks.push_back({"corners_fast_slow", corners_ok, corners_detail});

    auto table = jeth::corner_table(m, n, guards);
    bool table_ok = true;
    std::string table_detail = "all leaders";
    int kmax = table.max_k() + 1;
    for (int i = 1; i <= m && table_ok; ++i)
      for (int j = 1; j <= n && table_ok; ++j) {
        if (i == m && j == n) continue;
        for (int k = 0; k <= kmax; ++k) {
          if (table.count(i, j, k) != jeth::corner_count_closed(m, n, i, j, k)) {
            table_ok = false;
            table_detail = "C(" + std::to_string(i) + "," + std::to_string(j) +
                           ")^" + std::to_string(k) + ": table " +
                           table.count(i, j, k).str() + " vs closed " +
                           jeth::corner_count_closed(m, n, i, j, k).str();
            break;
          }
        }
      }
    out.checks.push_back({"corner_table_lemmas", table_ok, table_detail});
  }
  return out;
}

// ---- subcommands ----

int cmd_hvector(const CommonOpts& o, const std::string& method) {
  jeth::require_jet_params(o.m, o.n);
  std::vector<std::pair<std::string, HVector>> results;
  if (method == "closed" || method == "all")
    results.emplace_back("closed", jeth::h_closed(o.m, o.n));
  if (method == "shelling" || method == "all")
    results.emplace_back("shelling", jeth::h_shelling(o.m, o.n, o.guards, o.threads));
  if (method == "paths" || method == "all")
    results.emplace_back("paths", jeth::h_paths(o.m, o.n));
  if (method == "lemmas" || method == "all")
    results.emplace_back("lemmas", jeth::h_lemma_sums(o.m, o.n));

  bool agree = true;
  for (const auto& [name, hv] : results)
    if (!(hv == results.front().second)) agree = false;

  if (o.format == "json") {
    ordered_json j;
    j["m"] = o.m;
    j["n"] = o.n;
    if (agree) j["h_vector"] = to_json(results.front().second.h);
    if (method == "all") {
      ordered_json ms;
      for (const auto& [name, hv] : results) ms[name] = to_json(hv.h);
      j["methods"] = ms;
      std::vector<Check> checks{{"hvector_four_way", agree,
                                 agree ? results.front().second.str()
                                       : "methods disagree"}};
      j["checks"] = checks_json(checks);
    }
    emit_json(j);
  } else {
    std::vector<std::vector<std::string>> rows;
    for (const auto& [name, hv] : results) rows.push_back({name, hv.str()});
    print_table({"method", "h_vector"}, rows);
    if (method == "all")
      std::cout << "agreement: " << (agree ? "PASS" : "FAIL") << "\n";
  }
  if (!agree) {
    std::cerr << "verification failed: hvector_four_way: methods disagree\n";
    return kExitVerifyFail;
  }
  return kExitOk;
}

int cmd_report(const CommonOpts& o) {
  jeth::require_jet_params(o.m, o.n);
  auto series = jeth::jet_hilbert_series(o.m, o.n);
  auto canonical = jeth::canonical_module_series(o.m, o.n);
  int dim = 2 * (o.m + o.n - 1);
  BigInt mult = jeth::jet_multiplicity(o.m, o.n);
  int ainv = jeth::a_invariant(o.m, o.n);
  bool gor = jeth::is_gorenstein(o.m, o.n);

  if (o.format == "json") {
    ordered_json j;
    j["m"] = o.m;
    j["n"] = o.n;
    j["dimension"] = dim;
    j["h_vector"] = to_json(series.numerator.coeffs);
    j["multiplicity"] = mult.str();
    j["a_invariant"] = ainv;
    j["gorenstein"] = gor;
    j["canonical_numerator"] = to_json(canonical.numerator.coeffs);
    emit_json(j);
  } else {
    HVector hv{series.numerator.coeffs};
    HVector cn{canonical.numerator.coeffs};
    print_table({"field", "value"},
                {{"m", std::to_string(o.m)},
                 {"n", std::to_string(o.n)},
                 {"dimension", std::to_string(dim)},
                 {"h_vector", hv.str()},
                 {"multiplicity", mult.str()},
                 {"a_invariant", std::to_string(ainv)},
                 {"gorenstein", gor ? "true" : "false"},
                 {"canonical_numerator", cn.str()}});
  }
  return kExitOk;
}

int cmd_classical(const CommonOpts& o, int r, std::optional<long long> k) {
  if (!(1 <= r && r <= o.m && o.m <= o.n))
    throw jeth::ParameterError(
        "parameters must satisfy 1 <= r <= m <= n, got r=" + std::to_string(r) +
        " m=" + std::to_string(o.m) + " n=" + std::to_string(o.n));
  auto series = jeth::classical_series(r, o.m, o.n);
  BigInt mult = jeth::classical_multiplicity(r, o.m, o.n);
  std::optional<long long> components;
  if (k) components = jeth::component_count(r, *k);
  std::vector<Check> checks;
  if (r == 2 && o.m > 2) {
    auto jet = jeth::jet_hilbert_series(o.m, o.n);
    bool sq = series.numerator * series.numerator == jet.numerator &&
              2 * series.pole_order == jet.pole_order;
    checks.push_back({"squared_series", sq,
                      "classical r=2 squared vs jet numerator, pole orders " +
                          std::to_string(series.pole_order) + " and " +
                          std::to_string(jet.pole_order)});
  }

  if (o.format == "json") {
    ordered_json j;
    j["m"] = o.m;
    j["n"] = o.n;
    j["r"] = r;
    j["dimension"] = series.pole_order;
    j["h_vector"] = to_json(series.numerator.coeffs);
    j["multiplicity"] = mult.str();
    if (components) j["components"] = *components;
    if (!checks.empty()) j["checks"] = checks_json(checks);
    emit_json(j);
  } else {
    HVector hv{series.numerator.coeffs};
    std::vector<std::vector<std::string>> rows{
        {"m", std::to_string(o.m)},
        {"n", std::to_string(o.n)},
        {"r", std::to_string(r)},
        {"dimension", std::to_string(series.pole_order)},
        {"h_vector", hv.str()},
        {"multiplicity", mult.str()}};
    if (components) rows.push_back({"components", std::to_string(*components)});
    for (const auto& c : checks)
      rows.push_back({c.name, c.pass ? "pass" : "fail"});
    print_table({"field", "value"}, rows);
  }
  if (const Check* f = first_failure(checks)) {
    std::cerr << "verification failed: " << f->name << ": " << f->detail << "\n";
    return kExitVerifyFail;
  }
  return kExitOk;
}

int cmd_verify(const CommonOpts& o, const std::string& level) {
  auto data = run_verify(o.m, o.n, level, o.guards, o.threads);
  if (o.format == "json") {
    ordered_json j;
    j["m"] = o.m;
    j["n"] = o.n;
    j["dimension"] = 2 * (o.m + o.n - 1);
    j["h_vector"] = to_json(data.closed.h);
    j["multiplicity"] = data.closed.sum().str();
    j["a_invariant"] = -2 * o.n;
    j["gorenstein"] = o.m == o.n;
    if (level == "deep") {
      j["canonical_numerator"] = to_json(data.canonical.numerator.coeffs);
      ordered_json ms;
      const char* names[] = {"closed", "shelling", "paths", "lemmas"};
      for (std::size_t i = 0; i < data.methods.size(); ++i)
        ms[names[i]] = to_json(data.methods[i].h);
      j["methods"] = ms;
    }
    j["checks"] = checks_json(data.checks);
    emit_json(j);
  } else {
    std::vector<std::vector<std::string>> rows;
    for (const auto& c : data.checks)
      rows.push_back({c.name, c.pass ? "pass" : "fail", c.detail});
    print_table({"check", "status", "detail"}, rows);
  }
  if (const Check* f = first_failure(data.checks)) {
    std::cerr << "verification failed: " << f->name << ": " << f->detail << "\n";
    return kExitVerifyFail;
  }
  return kExitOk;
}

int cmd_sweep(const CommonOpts& o, int max_m, int max_n, const std::string& level) {
  if (!(3 <= max_m && max_m <= max_n))
    throw jeth::ParameterError("sweep requires 3 <= max_m <= max_n, got max_m=" +
                               std::to_string(max_m) + " max_n=" +
                               std::to_string(max_n));
  struct Cell {
    int m, n;
    std::string status;  // pass / fail / guard
    std::string detail;
  };
  std::vector<Cell> cells;
  for (int m = 3; m <= max_m; ++m)
    for (int n = m; n <= max_n; ++n) cells.push_back({m, n, "", ""});

  auto run_cell = [&](Cell& c) {
    try {
      auto data = run_verify(c.m, c.n, level, o.guards, 1);
      if (const Check* f = first_failure(data.checks)) {
        c.status = "fail";
        c.detail = f->name + ": " + f->detail;
      } else {
        c.status = "pass";
      }
    } catch (const jeth::GuardError& e) {
      c.status = "guard";
      c.detail = e.what();
    } catch (const jeth::Error& e) {
      c.status = "fail";
      c.detail = e.what();
    }
  };

  if (o.threads <= 1) {
    for (auto& c : cells) run_cell(c);
  } else {
    std::atomic<std::size_t> next{0};
    std::vector<std::thread> pool;
    for (int w = 0; w < o.threads; ++w)
      pool.emplace_back([&] {
        for (std::size_t i = next.fetch_add(1); i < cells.size();
             i = next.fetch_add(1))
          run_cell(cells[i]);
      });
    for (auto& th : pool) th.join();
  }

  if (o.format == "json") {
    ordered_json j;
    j["max_m"] = max_m;
    j["max_n"] = max_n;
    j["level"] = level;
    ordered_json arr = ordered_json::array();
    for (const auto& c : cells) {
      ordered_json e;
      e["m"] = c.m;
      e["n"] = c.n;
      e["status"] = c.status;
      if (!c.detail.empty() && c.status != "pass") e["detail"] = c.detail;
      arr.push_back(e);
    }
    j["cells"] = arr;
    emit_json(j);
  } else {
    std::vector<std::string> header{"m\\n"};
    for (int n = 3; n <= max_n; ++n) header.push_back(std::to_string(n));
    std::vector<std::vector<std::string>> rows;
    for (int m = 3; m <= max_m; ++m) {
      std::vector<std::string> row{std::to_string(m)};
      for (int n = 3; n <= max_n; ++n) {
        std::string s = "-";
        for (const auto& c : cells)
          if (c.m == m && c.n == n) {
            if (c.status == "pass") s = "PASS";
            else if (c.status == "fail") s = "FAIL";
            else s = "GUARD";
          }
        row.push_back(s);
      }
      rows.push_back(row);
    }
    print_table(header, rows);
  }

  bool any_fail = false, any_guard = false;
  for (const auto& c : cells) {
    if (c.status == "fail") any_fail = true;
    if (c.status == "guard") any_guard = true;
  }
  if (any_fail) {
    for (const auto& c : cells)
      if (c.status == "fail") {
        std::cerr << "verification failed at m=" << c.m << " n=" << c.n << ": "
                  << c.detail << "\n";
        break;
      }
    return kExitVerifyFail;
  }
  if (any_guard) {
    for (const auto& c : cells)
      if (c.status == "guard") {
        std::cerr << "guard refusal at m=" << c.m << " n=" << c.n << ": "
                  << c.detail << "\n";
        break;
      }
    return kExitGuard;
  }
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact Hilbert series of principal jet components of 2x2 "
               "determinantal varieties"};
  app.require_subcommand(1);

  CommonOpts hv_opts;
  std::string hv_method = "all";
  auto* hv = app.add_subcommand("hvector", "h-vector by one or all methods");
  add_common(hv, hv_opts);
  hv->add_option("--method", hv_method, "closed|shelling|paths|lemmas|all")
      ->check(CLI::IsMember({"closed", "shelling", "paths", "lemmas", "all"}))
      ->envname("JETH_METHOD");

  CommonOpts rep_opts;
  auto* rep = app.add_subcommand("report", "full invariant report");
  add_common(rep, rep_opts);

  CommonOpts cls_opts;
  int cls_r = 1;
  long long cls_k = 0;
  auto* cls = app.add_subcommand("classical", "classical determinantal report");
  add_common(cls, cls_opts);
  cls->add_option("--r", cls_r, "minor size r")->required()->envname("JETH_R");
  auto* cls_k_opt =
      cls->add_option("--k", cls_k, "also report the component count of the (k-1)-jet scheme")
          ->envname("JETH_K");

  CommonOpts ver_opts;
  std::string ver_level = "fast";
  auto* ver = app.add_subcommand("verify", "run cross-checks");
  add_common(ver, ver_opts);
  ver->add_option("--level", ver_level, "fast|deep")
      ->check(CLI::IsMember({"fast", "deep"}))
      ->envname("JETH_LEVEL");

  CommonOpts sw_opts;
  int sw_max_m = 0, sw_max_n = 0;
  std::string sw_level = "fast";
  auto* sw = app.add_subcommand("sweep", "verify a grid of (m,n)");
  add_common(sw, sw_opts, /*with_mn=*/false);
  sw->add_option("--max-m", sw_max_m, "largest m")->required();
  sw->add_option("--max-n", sw_max_n, "largest n")->required();
  sw->add_option("--level", sw_level, "fast|deep")
      ->check(CLI::IsMember({"fast", "deep"}))
      ->envname("JETH_LEVEL");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    if (hv->parsed()) return cmd_hvector(hv_opts, hv_method);
    if (rep->parsed()) return cmd_report(rep_opts);
    if (cls->parsed())
      return cmd_classical(cls_opts, cls_r,
                           *cls_k_opt ? std::optional<long long>(cls_k)
                                      : std::nullopt);
    if (ver->parsed()) return cmd_verify(ver_opts, ver_level);
    if (sw->parsed()) return cmd_sweep(sw_opts, sw_max_m, sw_max_n, sw_level);
  } catch (const jeth::ParameterError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const jeth::GuardError& e) {
    std::cerr << "guard refusal (" << e.guard() << ", workload " << e.workload()
              << "): " << e.what() << "\n";
    return kExitGuard;
  } catch (const jeth::Error& e) {
    std::cerr << "verification failed: " << e.what() << "\n";
    return kExitVerifyFail;
  }
  return kExitUsage;
}
