/*
   Copyright 2026 The xhermite authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

// Command-line front end: construction (gen), per-partition verification
// certificates (check), batch scans (scan, veselov), and the weighted-L2
// experiments (ortho, density).
//
// Exit codes: 0 all checks passed, 1 a verification failed, 2 usage error.

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <random>
#include <sstream>
#include <string>

#include <nlohmann/json.hpp>

#include "xhermite/monodromy.hpp"
#include "xhermite/orthogonality.hpp"
#include "xhermite/scan.hpp"

namespace {

constexpr const char* kVersion = "0.1.0";

constexpr int kExitPass = 0;
constexpr int kExitCheckFailed = 1;
constexpr int kExitUsage = 2;

using nlohmann::json;
using namespace xhermite;

struct Options {
  std::string partition;
  int max_size = 1;
  int max_index = -1;
  int count = 5;
  int jobs = 0;
  double tol = 1e-8;
  unsigned digits = 64;
  std::string out_path;
  std::string format = "text";
  std::string filter = "all";
  std::string function = "one";
  std::string degrees = "0,4,8";
  std::string member_poly;
};

void emit(const Options& opt, const std::string& payload) {
  if (opt.out_path.empty()) {
    std::cout << payload;
    if (!payload.empty() && payload.back() != '\n') std::cout << "\n";
  } else {
    std::ofstream out(opt.out_path);
    if (!out) throw std::runtime_error("cannot open output file " + opt.out_path);
    out << payload;
  }
}

json run_meta(const Options& opt) {
  return json{{"version", kVersion}, {"tolerance", opt.tol}, {"digits", opt.digits}};
}

// deterministic per-partition polynomial stream for spot checks
Poly seeded_poly(std::mt19937& rng, int max_degree) {
  std::uniform_int_distribution<int> deg(0, max_degree);
  std::uniform_int_distribution<int> coef(-9, 9);
  std::vector<Rational> cs(static_cast<size_t>(deg(rng)) + 1);
  for (auto& c : cs) c = Rational(coef(rng));
  return Poly(std::move(cs));
}

int cmd_gen(const Options& opt) {
  const Partition lam = Partition::parse(opt.partition);
  const Poly h = h_lambda(lam);
  const KSet K = k_sequence(lam);
  if (opt.format == "json") {
    json elements = json::array();
    for (int i = 0; i <= opt.max_index; ++i) {
      if (K.contains(i)) continue;
      elements.push_back({{"i", i}, {"poly", h_lambda_i(lam, i).str()}});
    }
    json j{{"partition", lam.str()}, {"h_lambda", h.str()}, {"elements", elements}};
    emit(opt, j.dump(2));
  } else {
    std::ostringstream out;
    out << "H_lambda = " << h.str() << "\n";
    for (int i = 0; i <= opt.max_index; ++i) {
      if (K.contains(i)) continue;
      out << "H_lambda_" << i << " = " << h_lambda_i(lam, i).str() << "\n";
    }
    emit(opt, out.str());
  }
  return kExitPass;
}

int cmd_member(const Options& opt) {
  const Partition lam = Partition::parse(opt.partition);
  const Poly p = Poly::parse(opt.member_poly);
  const Membership m = membership(lam, p);
  json j = membership_json(lam, p, m);
  j.update(run_meta(opt));
  emit(opt, j.dump(2));
  return kExitPass;
}

int cmd_check(const Options& opt) {
  const Partition lam = Partition::parse(opt.partition);
  const NumericContext ctx{opt.digits, opt.tol};

  MonodromyChecks checks = run_monodromy_checks(lam, ctx);
  json cert = monodromy_certificate(checks);
  cert.update(run_meta(opt));

  // membership agreement between the exact solve and the numeric constraints
  std::mt19937 rng(0x5eed);
  bool membership_ok = true;
  int agreements = 0;
  if (lam.sum() >= 1) {
    const auto profiles = root_profiles(lam, ctx);
    const Poly& h = cached_h_lambda(lam);
    for (int t = 0; t < 10; ++t) {
      Poly p = t % 2 ? h * h * seeded_poly(rng, 3) : seeded_poly(rng, lam.sum() + 5);
      const bool exact = membership(lam, p).member;
      const bool numeric = constraint_membership(lam, p, profiles, ctx.tol, ctx).member;
      membership_ok = membership_ok && (exact == numeric);
      ++agreements;
    }
  }
  cert["membership_agreement"] = {{"checked", agreements}, {"all_agree", membership_ok}};

  // H^2 p must always embed with an exact certificate
  bool embed_ok = true;
  for (int t = 0; t < 5; ++t) {
    try {
      embed_ok = embed_ok && eta_squared_embed(lam, seeded_poly(rng, 5)).certificate.member;
    } catch (const std::logic_error&) {
      embed_ok = false;
    }
  }
  cert["eta_squared_embeds"] = embed_ok;

  const bool pass = checks.pass && membership_ok && embed_ok;
  cert["pass"] = pass;
  if (!pass && !checks.failure.empty()) cert["failure"] = checks.failure;
  emit(opt, cert.dump(2));
  if (!pass) std::cerr << "check failed: " << (checks.failure.empty() ? "membership/embedding disagreement" : checks.failure) << "\n";
  return pass ? kExitPass : kExitCheckFailed;
}

PartitionFilter parse_filter(const std::string& name) {
  if (name == "all") return PartitionFilter::All;
  if (name == "even") return PartitionFilter::Even;
  throw CLI::ValidationError("--filter must be 'all' or 'even'");
}

int cmd_scan(const Options& opt) {
  const NumericContext ctx{opt.digits, opt.tol};
  const auto rows = scan_partitions(opt.max_size, parse_filter(opt.filter), ctx, opt.jobs);

  bool all_pass = true;
  for (const auto& row : rows) all_pass = all_pass && row.pass;

  if (opt.format == "json") {
    json j = run_meta(opt);
    j["rows"] = json::array();
    for (const auto& row : rows) j["rows"].push_back(scan_row_json(row));
    j["pass"] = all_pass;
    emit(opt, j.dump(2));
  } else if (opt.format == "csv") {
    std::ostringstream out;
    out << "partition,size,origin_multiplicity,multiple_off_origin,worst_nu,triangular,dg_ok,pass\n";
    for (const auto& row : rows) {
      out << '"' << row.lam.str() << '"' << ',' << row.lam.sum() << ','
          << row.census.origin_multiplicity << ',' << row.census.multiple_root_off_origin << ','
          << row.census.worst_nu << ',' << row.census.all_triangular << ',' << row.dg_ok << ','
          << row.pass << "\n";
    }
    emit(opt, out.str());
  } else {
    std::ostringstream out;
    for (const auto& row : rows) {
      out << (row.lam.str().empty() ? "()" : row.lam.str()) << ": origin_m=" << row.census.origin_multiplicity
          << " off_origin_multiple=" << (row.census.multiple_root_off_origin ? "yes" : "no")
          << " worst_nu=" << row.census.worst_nu << " dg=" << (row.dg_ok ? "ok" : "FAIL")
          << " constraints=" << (row.constraint_count_ok ? "ok" : "FAIL")
          << (row.pass ? "" : "  <-- FAILED") << (row.error.empty() ? "" : ("  error: " + row.error))
          << "\n";
    }
    out << (all_pass ? "all partitions pass" : "FAILURES present") << "\n";
    emit(opt, out.str());
  }
  return all_pass ? kExitPass : kExitCheckFailed;
}

int cmd_veselov(const Options& opt) {
  const auto rows = veselov_scan(opt.max_size);
  if (opt.format == "json") {
    json j = json::array();
    for (const auto& row : rows) {
      j.push_back({{"partition", row.lam.str()},
                   {"origin_multiplicity", row.origin_multiplicity},
                   {"has_multiple_root", row.has_multiple_root},
                   {"multiple_root_off_origin", row.multiple_root_off_origin},
                   {"worst_nu", row.worst_nu},
                   {"triangular", row.all_triangular}});
    }
    emit(opt, j.dump(2));
  } else {
    std::ostringstream out;
    for (const auto& row : rows) {
      out << (row.lam.str().empty() ? "()" : row.lam.str()) << ": origin_m=" << row.origin_multiplicity
          << (row.has_multiple_root ? " MULTIPLE" : "")
          << (row.multiple_root_off_origin ? " OFF-ORIGIN" : "") << " worst_nu=" << row.worst_nu
          << (row.all_triangular ? "" : " NON-TRIANGULAR") << "\n";
    }
    emit(opt, out.str());
  }
  for (const auto& row : rows) {
    if (!row.all_triangular || row.multiple_root_off_origin) return kExitCheckFailed;
  }
  return kExitPass;
}

int cmd_ortho(const Options& opt) {
  const Partition lam = Partition::parse(opt.partition);
  QuadOptions qopts;
  qopts.digits = opt.digits;
  const GramReport report = gram_matrix(lam, opt.count, qopts);  // WeightSpec rejects odd shapes

  if (opt.format == "json") {
    json j = run_meta(opt);
    j["partition"] = lam.str();
    j["indices"] = report.indices;
    j["max_offdiag_rel"] = report.max_offdiag_rel;
    j["nodes"] = report.quadrature_nodes_used;
    j["converged"] = report.all_converged;
    json rows = json::array();
    for (const auto& row : report.matrix) {
      json r = json::array();
      for (const auto& v : row) r.push_back(v.str(0, std::ios_base::scientific));
      rows.push_back(r);
    }
    j["matrix"] = rows;
    emit(opt, j.dump(2));
  } else {
    emit(opt, gram_csv(report));
  }
  std::cerr << "max_offdiag_rel = " << report.max_offdiag_rel
            << (report.all_converged ? "" : "  (quadrature did not fully converge)") << "\n";
  return kExitPass;
}

RealFn named_function(const std::string& name) {
  if (name == "one") return [](const BigFloat&) { return BigFloat(1); };
  if (name == "x") return [](const BigFloat& x) { return x; };
  if (name == "x2") return [](const BigFloat& x) { return x * x; };
  if (name == "abs") return [](const BigFloat& x) { return abs(x); };
  if (name == "runge") return [](const BigFloat& x) { return BigFloat(1) / (1 + x * x); };
  if (name == "gauss") return [](const BigFloat& x) { return exp(-x * x / 2); };
  throw CLI::ValidationError("unknown function '" + name + "' (one|x|x2|abs|runge|gauss)");
}

int cmd_density(const Options& opt) {
  const Partition lam = Partition::parse(opt.partition);
  std::vector<int> caps;
  {
    std::stringstream ss(opt.degrees);
    std::string tok;
    while (std::getline(ss, tok, ',')) caps.push_back(std::stoi(tok));
  }
  QuadOptions qopts;
  qopts.digits = opt.digits;
  const RealFn f = named_function(opt.function);
  const DensityReport report = density_demo(lam, f, caps, qopts);

  json j = run_meta(opt);
  j.update(density_json(report));
  j["f"] = opt.function;
  emit(opt, j.dump(2));
  std::cerr << "final error = " << report.points.back().error.str(6, std::ios_base::scientific)
            << (report.all_converged ? "" : "  (quadrature did not fully converge)") << "\n";
  return kExitPass;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exceptional Hermite polynomial construction and verification"};
  app.set_version_flag("--version", std::string("xhermite ") + kVersion);
  app.require_subcommand(1);

  Options opt;
  app.add_option("-t,--tol", opt.tol, "relative tolerance for numeric checks")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  app.add_option("--digits", opt.digits, "working precision in decimal digits")
      ->envname("XHERMITE_DIGITS")
      ->check(CLI::Range(32u, 4096u))
      ->capture_default_str();
  app.add_option("-o,--out", opt.out_path, "output file (default: stdout)");
  app.add_option("--format", opt.format, "output format")
      ->check(CLI::IsMember({"text", "json", "csv"}))
      ->capture_default_str();
  app.fallthrough();

  auto* gen = app.add_subcommand("gen", "print H_lambda and the extended Wronskians");
  gen->add_option("-p,--partition", opt.partition, "partition, e.g. 2,1");
  gen->add_option("-i,--max-index", opt.max_index, "also print elements up to this index");

  auto* check = app.add_subcommand("check", "verify one partition and write a certificate");
  check->add_option("-p,--partition", opt.partition, "partition to verify");
  check->add_option("--member", opt.member_poly,
                    "emit a membership certificate for this polynomial instead, e.g. \"x^2\"");

  auto* scan = app.add_subcommand("scan", "verify all partitions up to a size");
  scan->add_option("-n,--max-size", opt.max_size, "largest partition size")->required();
  scan->add_option("--filter", opt.filter, "all|even")->capture_default_str();
  scan->add_option("-j,--jobs", opt.jobs, "worker threads (0 = default)");

  auto* veselov = app.add_subcommand("veselov", "exact multiple-root census");
  veselov->add_option("-n,--max-size", opt.max_size, "largest partition size")->required();

  auto* ortho = app.add_subcommand("ortho", "Gram matrix of the exceptional family");
  ortho->add_option("-p,--partition", opt.partition, "even partition");
  ortho->add_option("-k,--count", opt.count, "number of basis elements")->capture_default_str();

  auto* density = app.add_subcommand("density", "projection error decay experiment");
  density->add_option("-p,--partition", opt.partition, "even partition");
  density->add_option("-f,--function", opt.function, "target function name")->capture_default_str();
  density->add_option("-D,--degrees", opt.degrees, "comma-separated degree caps")->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e);  // --help / --version
    app.exit(e);
    return kExitUsage;
  }

  try {
    set_working_digits(opt.digits);
    if (gen->parsed()) return cmd_gen(opt);
    if (check->parsed()) return opt.member_poly.empty() ? cmd_check(opt) : cmd_member(opt);
    if (scan->parsed()) return cmd_scan(opt);
    if (veselov->parsed()) return cmd_veselov(opt);
    if (ortho->parsed()) return cmd_ortho(opt);
    if (density->parsed()) return cmd_density(opt);
  } catch (const CLI::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const PrecisionError& e) {
    std::cerr << "precision error: " << e.what() << "\n";
    return kExitCheckFailed;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitCheckFailed;
  }
  return kExitUsage;
}
