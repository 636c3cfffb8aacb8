// regover: expansion and verification front end for regular-overpartition
// generating functions, congruence claims, and Ramanujan-Kolberg
// certificates.
//
// Exit codes: 0 = everything verified, 1 = a mathematical check failed,
// 2 = usage or input error.

#include <cstdio>
#include <ctime>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "regover/arith.hpp"
#include "regover/congruence.hpp"
#include "regover/enumerate.hpp"
#include "regover/errors.hpp"
#include "regover/kernels.hpp"
#include "regover/qseries.hpp"
#include "regover/radu.hpp"
#include "regover/version.hpp"

namespace {

using nlohmann::json;
using namespace regover;

constexpr int kExitOk = 0;
constexpr int kExitVerificationFailed = 1;
constexpr int kExitUsage = 2;

struct Output {
  std::string format = "table";
  std::string json_out;
};

struct Config {
  long max_terms = 200000;
  long bound_small_step = 500;
  long bound_large_step = 100;
};

Config load_config(const std::string& path) {
  Config cfg;
  if (path.empty()) return cfg;
  std::ifstream in(path);
  if (!in) throw Error("cannot open config file: " + path);
  json doc = json::parse(in);
  cfg.max_terms = doc.value("max_terms", cfg.max_terms);
  cfg.bound_small_step = doc.value("bound_small_step", cfg.bound_small_step);
  cfg.bound_large_step = doc.value("bound_large_step", cfg.bound_large_step);
  return cfg;
}

std::string timestamp_utc() {
  char buf[32];
  std::time_t now = std::time(nullptr);
  std::tm tm{};
  gmtime_r(&now, &tm);
  std::strftime(buf, sizeof(buf), "%Y-%m-%dT%H:%M:%SZ", &tm);
  return buf;
}

json make_doc(const std::string& command, json parameters) {
  json doc;
  doc["tool"] = "regover";
  doc["version"] = REGOVER_VERSION;
  doc["command"] = command;
  doc["parameters"] = std::move(parameters);
  doc["generated_at"] = timestamp_utc();
  return doc;
}

void emit(const json& doc, const Output& out) {
  if (out.format == "json") std::cout << doc.dump(2) << "\n";
  if (!out.json_out.empty()) {
    std::ofstream f(out.json_out);
    if (!f) throw Error("cannot write " + out.json_out);
    f << doc.dump(2) << "\n";
  }
}

void add_output_options(CLI::App* cmd, Output& out) {
  cmd->add_option("--format", out.format, "table, json or csv")
      ->check(CLI::IsMember({"table", "json", "csv"}));
  cmd->add_option("--json-out", out.json_out,
                  "also write the JSON result document to this file");
}

FamilyParams make_family(const std::string& kind, long l, long mu) {
  FamilyParams fam;
  if (kind == "Rbar") {
    fam = {FamilyKind::Rbar, l, mu};
    if (mu == 0)
      throw Error("family Rbar needs both l and mu");
  } else if (kind == "RbarStar") {
    fam = {FamilyKind::RbarStar, l, 0};
  } else {
    throw Error("unknown family kind: " + kind + " (Rbar | RbarStar)");
  }
  fam.validate();
  return fam;
}

//----------------------------------------------------------------------------
// expand
//----------------------------------------------------------------------------

int cmd_expand(const std::string& kind, long l, long mu, long terms, long mod,
               const Config& cfg, const Output& out) {
  const FamilyParams fam = make_family(kind, l, mu);
  if (terms < 0 || terms > cfg.max_terms)
    throw Error("terms outside [0, max_terms]; raise max_terms in the config "
                "file if needed");
  json rows = json::array();
  std::vector<std::string> printed(terms + 1);
  if (mod > 0) {
    const ModSeries s = gf_family(ModCoeffs(mod), fam, terms);
    for (long n = 0; n <= terms; ++n) {
      printed[n] = std::to_string(s[n]);
      rows.push_back({n, s[n]});
    }
  } else {
    const Series s = gf_family(fam, terms);
    for (long n = 0; n <= terms; ++n) {
      printed[n] = s[n].get_str();
      rows.push_back({n, printed[n]});
    }
  }
  json params = {{"family", fam.name()}, {"terms", terms}};
  if (mod > 0) params["mod"] = mod;
  json doc = make_doc("expand", params);
  doc["rows"] = rows;
  doc["ok"] = true;
  if (out.format == "csv") {
    std::cout << "n,coefficient\n";
    for (long n = 0; n <= terms; ++n)
      std::cout << n << "," << printed[n] << "\n";
  } else if (out.format == "table") {
    for (long n = 0; n <= terms; ++n)
      std::cout << n << " " << printed[n] << "\n";
  }
  emit(doc, out);
  return kExitOk;
}

//----------------------------------------------------------------------------
// identity
//----------------------------------------------------------------------------

int cmd_identity(const std::string& name, long l, long mu, long terms,
                 const Config& cfg, const Output& out) {
  if (terms < 0 || terms > cfg.max_terms) throw Error("terms out of range");
  const IdentityId id = parse_identity(name, l, mu);
  const IdentityCheck res = check_identity(id, terms);
  json doc = make_doc("identity", {{"identity", identity_name(id)},
                                   {"terms", terms}});
  doc["pass"] = res.pass;
  if (!res.pass) doc["first_mismatch"] = res.first_mismatch;
  doc["ok"] = res.pass;
  if (out.format != "json") {
    std::cout << identity_name(id) << " through q^" << terms << ": "
              << (res.pass ? "pass" : "FAIL") << "\n";
    if (!res.pass)
      std::cout << "first mismatch at q^" << res.first_mismatch << "\n";
  }
  emit(doc, out);
  return res.pass ? kExitOk : kExitVerificationFailed;
}

//----------------------------------------------------------------------------
// sevenway
//----------------------------------------------------------------------------

int cmd_sevenway(long l, long mu, long nmax, long list_weight,
                 const Output& out) {
  const SevenWayReport rep = verify_seven_way(l, mu, nmax);
  json doc = make_doc("sevenway", {{"l", l}, {"mu", mu}, {"nmax", nmax}});
  doc["compared"] = json::array();
  for (auto c : rep.compared) doc["compared"].push_back(class_name(c));
  doc["skipped"] = json::array();
  for (const auto& [c, why] : rep.skipped)
    doc["skipped"].push_back({{"class", class_name(c)}, {"reason", why}});
  json entries = json::array();
  for (const auto& e : rep.entries)
    entries.push_back({{"class", class_name(e.cls)},
                       {"weight_arg", e.weight_arg},
                       {"n", e.n},
                       {"class_count", e.class_count},
                       {"rbar_count", e.rbar_count},
                       {"match", e.match}});
  doc["entries"] = entries;
  doc["mismatches"] = rep.mismatches;
  doc["ok"] = rep.all_match;
  if (out.format != "json") {
    std::cout << "Rbar(" << l << "," << mu << ") vs classes, n <= " << nmax
              << "\n";
    for (auto c : rep.compared)
      std::cout << "  compared " << class_name(c) << "\n";
    for (const auto& [c, why] : rep.skipped)
      std::cout << "  skipped  " << class_name(c) << " (" << why << ")\n";
    for (const auto& e : rep.entries)
      if (!e.match)
        std::cout << "  MISMATCH " << class_name(e.cls) << "(" << e.weight_arg
                  << ") = " << e.class_count << " vs Rbar(" << e.n
                  << ") = " << e.rbar_count << "\n";
    std::cout << (rep.all_match ? "all counts match" : "MISMATCHES FOUND")
              << "\n";
    if (list_weight >= 0) {
      const ClassSpec spec{PartitionClass::Rbar, l, mu};
      std::cout << "Rbar members of weight " << list_weight << ":\n";
      for (const auto& p : list_class(spec, list_weight))
        std::cout << "  " << render(p) << "\n";
    }
  }
  emit(doc, out);
  return rep.all_match ? kExitOk : kExitVerificationFailed;
}

//----------------------------------------------------------------------------
// congruence batch
//----------------------------------------------------------------------------

int cmd_congruence(const std::string& claims_path, long bound_override,
                   const Config& cfg, const Output& out) {
  std::vector<CongruenceClaim> claims;
  if (claims_path.empty()) {
    claims = builtin_claims();
    for (auto& c : claims)
      c.bound = (c.m <= 24) ? cfg.bound_small_step : cfg.bound_large_step;
  } else {
    std::ifstream in(claims_path);
    if (!in) throw Error("cannot open claims file: " + claims_path);
    json doc = json::parse(in);
    claims = claims_from_json(doc);
  }
  if (bound_override >= 0)
    for (auto& c : claims) c.bound = bound_override;

  const auto results = verify_batch(claims);
  long passed = 0;
  json jres = json::array();
  for (std::size_t i = 0; i < claims.size(); ++i) {
    if (results[i].pass) ++passed;
    jres.push_back(result_to_json(claims[i], results[i]));
  }
  const bool ok = passed == static_cast<long>(claims.size());
  json doc = make_doc(
      "congruence",
      {{"claims_file", claims_path.empty() ? "builtin" : claims_path},
       {"bound_override", bound_override}});
  doc["results"] = jres;
  doc["summary"] = {{"total", claims.size()}, {"passed", passed}};
  doc["ok"] = ok;
  if (out.format != "json") {
    for (std::size_t i = 0; i < claims.size(); ++i) {
      std::cout << (results[i].pass ? "pass " : "FAIL ") << claims[i].label
                << " (bound " << claims[i].bound << ")";
      if (!results[i].pass)
        std::cout << "  counterexample n=" << results[i].fail_n
                  << " index=" << results[i].fail_index
                  << " residue=" << results[i].residue;
      std::cout << "\n";
    }
    std::cout << passed << "/" << claims.size() << " claims verified\n";
    if (claims_path.empty() && !ok)
      std::cout << "note: the builtin claims are proved results; a failure "
                   "indicates a computation error, not a disproof\n";
  }
  emit(doc, out);
  return ok ? kExitOk : kExitVerificationFailed;
}

//----------------------------------------------------------------------------
// classify-mod4
//----------------------------------------------------------------------------

int cmd_classify_mod4(long l, long mu, long nmax, const Output& out) {
  const ModSeries series = gf_family(ModCoeffs(4), {FamilyKind::Rbar, l, mu},
                                     nmax);
  long series_mismatches = 0, delta_mismatches = 0;
  long first_bad = -1;
  int case_index = classify_mod4(l, mu, 1).case_index;
  for (long n = 1; n <= nmax; ++n) {
    const Mod4Class cls = classify_mod4(l, mu, n);
    if (static_cast<long>(series[n]) != cls.predicted) {
      ++series_mismatches;
      if (first_bad < 0) first_bad = n;
    }
    const DivisorStats ds = divisor_stats(n, l, mu);
    const int delta_pred = (ds.delta % 2 != 0) ? 2 : 0;
    if (delta_pred != cls.predicted) ++delta_mismatches;
  }
  const bool ok = series_mismatches == 0 && delta_mismatches == 0;
  json doc = make_doc("classify-mod4", {{"l", l}, {"mu", mu}, {"nmax", nmax}});
  doc["case"] = case_index;
  doc["series_mismatches"] = series_mismatches;
  doc["divisor_parity_mismatches"] = delta_mismatches;
  if (first_bad >= 0) doc["first_mismatch_n"] = first_bad;
  doc["ok"] = ok;
  if (out.format != "json") {
    std::cout << "mod-4 classification of Rbar(" << l << "," << mu
              << "), case " << case_index << ", n <= " << nmax << "\n"
              << "  vs series residues:   " << series_mismatches
              << " mismatches\n"
              << "  vs divisor parity:    " << delta_mismatches
              << " mismatches\n";
  }
  emit(doc, out);
  return ok ? kExitOk : kExitVerificationFailed;
}

//----------------------------------------------------------------------------
// mod8
//----------------------------------------------------------------------------

int cmd_mod8(long p, long bound, bool check_base, long base_terms,
             const Output& out) {
  const auto admissible = mod8_admissible(p);
  json doc = make_doc("mod8", {{"p", p}, {"bound", bound}});
  doc["admissible"] = admissible;
  bool ok = true;
  json jres = json::array();
  for (long r : admissible) {
    const Mod8FamilyResult res = verify_mod8_family(p, r, bound);
    ok = ok && res.pass;
    json jr = {{"r", r}, {"pass", res.pass}};
    if (!res.pass) jr["counterexample_n"] = res.fail_n;
    jres.push_back(jr);
  }
  doc["results"] = jres;
  if (check_base) {
    const IdentityCheck base = verify_rstar6_mod8_cube(base_terms);
    doc["base_congruence"] = {{"terms", base_terms}, {"pass", base.pass}};
    ok = ok && base.pass;
  }
  doc["ok"] = ok;
  if (out.format != "json") {
    std::cout << "p = " << p << ", admissible r:";
    for (long r : admissible) std::cout << " " << r;
    std::cout << "\n";
    for (const auto& jr : jres)
      std::cout << "  r = " << jr["r"] << ": "
                << (jr["pass"].get<bool>() ? "pass" : "FAIL") << "\n";
    if (check_base)
      std::cout << "  base cube congruence mod 8: "
                << (doc["base_congruence"]["pass"].get<bool>() ? "pass"
                                                               : "FAIL")
                << "\n";
  }
  emit(doc, out);
  return ok ? kExitOk : kExitVerificationFailed;
}

//----------------------------------------------------------------------------
// certify / witness
//----------------------------------------------------------------------------

int cmd_certify(const std::string& path, const Output& out) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open certificate file: " + path);
  const json doc_in = json::parse(in);
  const CertificateInput input = certificate_input_from_json(doc_in);
  const RaduCertificate cert =
      certify(input.tuple, input.modulus, input.family, input.stated_floor_nu);
  json doc = make_doc("certify", {{"file", path}});
  doc["certificate"] = certificate_to_json(cert);
  doc["ok"] = cert.overall;
  if (out.format != "json") {
    std::cout << "certificate for " << input.family.name() << " mod "
              << input.modulus << ", progression " << input.tuple.m << "n+"
              << input.tuple.t << "\n";
    for (const auto& c : cert.conditions.conditions)
      std::cout << "  condition " << c.index << ": "
                << (c.pass ? "pass" : "FAIL") << " (" << c.detail << ")\n";
    std::cout << "  orbit P(t) = {";
    for (std::size_t i = 0; i < cert.orbit.size(); ++i)
      std::cout << (i ? "," : "") << cert.orbit[i];
    std::cout << "}\n";
    if (cert.conditions.all_pass) {
      std::cout << "  positivity over divisors of N: "
                << (cert.positivity ? "pass" : "FAIL") << "\n";
      if (cert.positivity) {
        std::cout << "  nu = " << cert.nu.get_str()
                  << ", floor " << cert.floor_nu;
        if (cert.stated_floor_nu)
          std::cout << " (stated " << *cert.stated_floor_nu << ")";
        std::cout << "\n  finite check to n <= " << cert.finite.bound << ": "
                  << (cert.finite.pass ? "pass" : "FAIL") << "\n";
      }
    }
    std::cout << "overall: " << (cert.overall ? "pass" : "FAIL") << "\n";
  }
  emit(doc, out);
  return cert.overall ? kExitOk : kExitVerificationFailed;
}

int cmd_witness(const std::string& id, long terms, const Output& out) {
  const WitnessSpec spec = builtin_witness(id);
  const WitnessResult res = verify_witness(spec, terms);
  const bool ok = res.pass && res.rhs_divisible;
  json doc = make_doc("witness", {{"id", id}, {"terms", terms}});
  doc["pass"] = res.pass;
  doc["rhs_divisible_by"] = spec.common_factor;
  doc["rhs_divisible"] = res.rhs_divisible;
  doc["compare_from"] = res.compare_from;
  doc["compare_to"] = res.compare_to;
  if (!res.pass) doc["first_mismatch"] = res.first_mismatch;
  doc["ok"] = ok;
  if (out.format != "json") {
    std::cout << "witness " << id << " for " << spec.family.name() << " a("
              << spec.m << "n+" << spec.t << "):\n"
              << "  identity through q^" << res.compare_to << ": "
              << (res.pass ? "pass" : "FAIL") << "\n"
              << "  right side divisible by " << spec.common_factor << ": "
              << (res.rhs_divisible ? "yes" : "NO") << "\n";
    if (!res.pass)
      std::cout << "  first mismatch at q^" << res.first_mismatch << "\n";
  }
  emit(doc, out);
  return ok ? kExitOk : kExitVerificationFailed;
}

//----------------------------------------------------------------------------
// scan
//----------------------------------------------------------------------------

int cmd_scan(const std::string& conjecture, long lmax, long nmax,
             const Output& out) {
  if (conjecture != "r49")
    throw Error("unknown conjecture id: " + conjecture + " (available: r49)");
  const ScanReport rep = scan_conjecture(lmax, nmax);
  json doc = make_doc("scan", {{"conjecture", conjecture},
                               {"lmax", lmax},
                               {"nmax", nmax}});
  json rows = json::array();
  for (const auto& row : rep.rows) {
    json jr = {{"l", row.ell},
               {"k", row.k},
               {"status", row.pass ? "no counterexample" : "counterexample"}};
    if (!row.pass)
      jr["counterexample"] = {{"n", row.fail_n},
                              {"index", row.fail_index},
                              {"residue", row.residue}};
    rows.push_back(jr);
  }
  doc["rows"] = rows;
  doc["progressions"] = rep.rows.size();
  doc["counterexample_found"] = rep.counterexample_found;
  doc["ok"] = !rep.counterexample_found;
  if (out.format != "json") {
    for (const auto& row : rep.rows) {
      std::cout << "l=" << row.ell << " k=" << row.k << ": ";
      if (row.pass)
        std::cout << "no counterexample for n <= " << nmax << "\n";
      else
        std::cout << "COUNTEREXAMPLE at n=" << row.fail_n
                  << " (index " << row.fail_index << ", residue "
                  << row.residue << ")\n";
    }
    std::cout << rep.rows.size() << " progressions scanned\n";
  }
  emit(doc, out);
  return rep.counterexample_found ? kExitVerificationFailed : kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"regular-overpartition congruence verification toolkit"};
  app.require_subcommand(1);

  std::string config_path;
  bool serial = false;
  app.add_option("--config", config_path,
                 "JSON config with max_terms and default bounds");
  app.add_flag("--serial", serial, "run the serial kernels only");

  // expand
  auto* expand = app.add_subcommand("expand", "coefficient table of a family");
  std::string x_kind;
  long x_l = 0, x_mu = 0, x_terms = 20, x_mod = 0;
  Output x_out;
  expand->add_option("kind", x_kind, "Rbar | RbarStar")->required();
  expand->add_option("l", x_l, "ell")->required();
  expand->add_option("mu", x_mu, "mu (Rbar only)");
  expand->add_option("--terms", x_terms, "expand through q^terms");
  expand->add_option("--mod", x_mod, "reduce coefficients modulo this");
  add_output_options(expand, x_out);

  // identity
  auto* identity = app.add_subcommand("identity", "check a series identity");
  std::string i_name;
  long i_l = 0, i_mu = 0, i_terms = 200;
  Output i_out;
  identity->add_option("name", i_name,
                       "lemma31 | lemma32 | sellers_dissection | iterated_phi")
      ->required();
  identity->add_option("--l", i_l, "ell for iterated_phi");
  identity->add_option("--mu", i_mu, "mu for iterated_phi");
  identity->add_option("--terms", i_terms, "compare through q^terms");
  add_output_options(identity, i_out);

  // sevenway
  auto* sevenway =
      app.add_subcommand("sevenway", "compare the seven partition classes");
  long s_l = 0, s_mu = 0, s_nmax = 20, s_list = -1;
  Output s_out;
  sevenway->add_option("l", s_l, "ell")->required();
  sevenway->add_option("mu", s_mu, "mu")->required();
  sevenway->add_option("--nmax", s_nmax, "compare for n <= nmax");
  sevenway->add_option("--list", s_list,
                       "debug: list Rbar members of this weight (<= 30)");
  add_output_options(sevenway, s_out);

  // congruence
  auto* congruence =
      app.add_subcommand("congruence", "verify a batch of AP congruences");
  std::string c_file;
  long c_bound = -1;
  Output c_out;
  congruence->add_option("--claims", c_file,
                         "claims JSON file (default: builtin corpus)");
  congruence->add_option("--bound", c_bound, "override every claim's bound");
  add_output_options(congruence, c_out);

  // classify-mod4
  auto* classify =
      app.add_subcommand("classify-mod4", "mod-4 characterization check");
  long m4_l = 0, m4_mu = 0, m4_nmax = 500;
  Output m4_out;
  classify->add_option("l", m4_l, "ell")->required();
  classify->add_option("mu", m4_mu, "mu")->required();
  classify->add_option("--nmax", m4_nmax, "check n <= nmax");
  add_output_options(classify, m4_out);

  // mod8
  auto* mod8 = app.add_subcommand("mod8", "mod-8 quadratic-residue family");
  long m8_p = 5, m8_bound = 200, m8_terms = 200;
  bool m8_base = false;
  Output m8_out;
  mod8->add_option("--p", m8_p, "prime >= 5")->required();
  mod8->add_option("--bound", m8_bound, "check n <= bound");
  mod8->add_flag("--check-base", m8_base,
                 "also verify the underlying cube congruence mod 8");
  mod8->add_option("--terms", m8_terms, "truncation for --check-base");
  add_output_options(mod8, m8_out);

  // certify
  auto* certify_cmd =
      app.add_subcommand("certify", "evaluate a Radu certificate file");
  std::string r_file;
  Output r_out;
  certify_cmd->add_option("file", r_file, "certificate JSON")->required();
  add_output_options(certify_cmd, r_out);

  // witness
  auto* witness = app.add_subcommand("witness", "check a witness identity");
  std::string w_id = "cong-1";
  long w_terms = 200;
  Output w_out;
  witness->add_option("--id", w_id, "witness id (cong-1)");
  witness->add_option("--terms", w_terms, "compare through q^terms");
  add_output_options(witness, w_out);

  // scan
  auto* scan = app.add_subcommand("scan", "conjecture scan");
  std::string sc_id = "r49";
  long sc_lmax = 8, sc_nmax = 60;
  Output sc_out;
  scan->add_option("--conjecture", sc_id, "conjecture id (r49)");
  scan->add_option("--lmax", sc_lmax, "scan 2 <= l <= lmax");
  scan->add_option("--nmax", sc_nmax, "check n <= nmax per progression");
  add_output_options(scan, sc_out);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (serial) kernels::set_mode(kernels::Mode::serial);
    const Config cfg = load_config(config_path);
    if (expand->parsed())
      return cmd_expand(x_kind, x_l, x_mu, x_terms, x_mod, cfg, x_out);
    if (identity->parsed())
      return cmd_identity(i_name, i_l, i_mu, i_terms, cfg, i_out);
    if (sevenway->parsed())
      return cmd_sevenway(s_l, s_mu, s_nmax, s_list, s_out);
    if (congruence->parsed())
      return cmd_congruence(c_file, c_bound, cfg, c_out);
    if (classify->parsed())
      return cmd_classify_mod4(m4_l, m4_mu, m4_nmax, m4_out);
    if (mod8->parsed())
      return cmd_mod8(m8_p, m8_bound, m8_base, m8_terms, m8_out);
    if (certify_cmd->parsed()) return cmd_certify(r_file, r_out);
    if (witness->parsed()) return cmd_witness(w_id, w_terms, w_out);
    if (scan->parsed()) return cmd_scan(sc_id, sc_lmax, sc_nmax, sc_out);
    std::cerr << "no subcommand\n";
    return kExitUsage;
  } catch (const nlohmann::json::exception& e) {
    std::cerr << "input parse error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }
}
