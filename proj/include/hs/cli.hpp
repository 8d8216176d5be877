#pragma once

// Command-line front end: flag parsing, dispatch and JSON/text reports.

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <cstdint>
#include <functional>
#include <ostream>
#include <string>
#include <vector>

#include "hs/casebook.hpp"
#include "hs/hilbert.hpp"
#include "hs/parse.hpp"
#include "hs/schinzel.hpp"

namespace hs::cli {

using Json = nlohmann::ordered_json;

inline constexpr const char* kSchemaVersion = "1";

enum ExitCode : int { kOk = 0, kNegative = 1, kUsage = 2, kBudget = 3, kInternal = 4 };

struct JobSpec {
  std::string command;
  std::string ring = "zz";
  std::string t = "t";
  std::string y;
  std::string polys;
  std::string poly;
  std::string guard;
  std::string window = "0;1";
  std::string case_name = "all";
  unsigned h = 3;
  std::uint64_t budget_members = 10'000;
  std::size_t hits = 5;
  std::size_t samples = 25;
  std::string seed = "0";
  bool trace = false;
  bool json = false;
  bool text = false;
};

inline std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::string cur;
  for (char c : s) {
    if (c == sep) {
      out.push_back(cur);
      cur.clear();
    } else {
      cur += c;
    }
  }
  out.push_back(cur);
  return out;
}

inline std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t\n\r");
  if (b == std::string::npos) return "";
  const auto e = s.find_last_not_of(" \t\n\r");
  return s.substr(b, e - b + 1);
}

inline std::vector<std::string> name_list(const std::string& s) {
  std::vector<std::string> out;
  if (trim(s).empty()) return out;
  for (const auto& part : split(s, ',')) out.push_back(trim(part));
  return out;
}

/// "P11,P12;P21,P22" -> {{P11,P12},{P21,P22}}.
inline std::vector<std::vector<std::string>> family_texts(const std::string& s, const std::string& flag) {
  if (trim(s).empty()) throw InvalidArgument(flag + " is required", flag);
  std::vector<std::vector<std::string>> out;
  for (const auto& fam : split(s, ';')) {
    std::vector<std::string> members;
    for (const auto& m : split(fam, ',')) {
      if (trim(m).empty()) throw SyntaxError(0, "empty polynomial in " + flag);
      members.push_back(trim(m));
    }
    out.push_back(std::move(members));
  }
  return out;
}

template <CoefficientRing R>
std::vector<Family<R>> parse_families(const std::vector<std::vector<std::string>>& texts, const VarSet& vars,
                                      const R& ring) {
  std::vector<Family<R>> out;
  for (const auto& fam : texts) {
    Family<R> f;
    for (const auto& m : fam) f.push_back(parse_poly(m, vars, ring));
    out.push_back(std::move(f));
  }
  return out;
}

template <CoefficientRing R>
Json poly_list(const std::vector<MultiPoly<R>>& ps) {
  Json a = Json::array();
  for (const auto& p : ps) a.push_back(p.to_string());
  return a;
}

template <CoefficientRing R>
Json elem_list(const R& ring, const std::vector<typename R::Elem>& xs) {
  Json a = Json::array();
  for (const auto& x : xs) a.push_back(ring.to_string(x));
  return a;
}

inline Json string_list(const std::vector<std::string>& xs) {
  Json a = Json::array();
  for (const auto& x : xs) a.push_back(x);
  return a;
}

/// Calls f with the ring descriptor named by the tag ("zz" or "fq_u:q").
template <class F>
Json with_ring(const std::string& tag, F&& f) {
  if (tag == "zz") return f(IntegerRing{});
  if (tag.rfind("fq_u:", 0) == 0) {
    const std::string q = tag.substr(5);
    if (q.empty() || !std::all_of(q.begin(), q.end(), [](unsigned char c) { return std::isdigit(c); }) ||
        q.size() > 10) {
      throw InvalidArgument("bad ring tag '" + tag + "'", tag);
    }
    return f(FqPolyRing(std::stoull(q)));
  }
  throw InvalidArgument("unknown ring '" + tag + "' (expected zz or fq_u:<prime>)", tag);
}

// ---------------------------------------------------------------------------
// Subcommands

template <SearchRing R>
Json delta_json(const DeltaCertificate<R>& d, const R& ring) {
  Json j;
  j["delta"] = ring.to_string(d.delta);
  j["witnesses"] = poly_list(d.witnesses);
  return j;
}

inline Json run_delta(const JobSpec& job, Json& trace) {
  (void)trace;
  return with_ring(job.ring, [&](const auto& ring) {
    const VarSet vars(name_list(job.t), name_list(job.y));
    auto fams = parse_families(family_texts(job.polys, "--polys"), vars, ring);
    Family<std::decay_t<decltype(ring)>> family;
    for (auto& f : fams) family.insert(family.end(), f.begin(), f.end());
    return delta_json(compute_delta(family), ring);
  });
}

inline Json run_fixed_divisors(const JobSpec& job, Json& trace) {
  return with_ring(job.ring, [&](const auto& ring) {
    const VarSet vars(name_list(job.t), name_list(job.y));
    const std::string text = job.poly.empty() ? job.polys : job.poly;
    if (trim(text).empty()) throw InvalidArgument("--poly is required", "--poly");
    const auto p = parse_poly(text, vars, ring);
    const auto r = fixed_prime_divisors(p);
    Json j;
    j["polynomial"] = p.to_string();
    j["content"] = ring.to_string(r.content);
    j["content_prime_divisors"] = elem_list(ring, r.content_prime_divisors);
    j["search_bound"] = r.search_bound.get_str();
    j["fixed_primes"] = elem_list(ring, r.fixed_prime_list());
    Json cleared = Json::array();
    for (const auto& c : r.cleared) {
      Json e;
      e["prime"] = ring.to_string(c.prime);
      e["witness"] = elem_list(ring, c.witness);
      cleared.push_back(e);
    }
    j["cleared"] = cleared;
    for (const auto& f : r.fixed_primes) {
      for (const auto& line : f.log) trace.push_back("mod " + ring.to_string(f.prime) + ": " + line);
    }
    return j;
  });
}

template <SearchRing R>
Json certificate_json(const ProgressionCertificate<R>& c) {
  Json j;
  j["variables"] = string_list(c.vars.names());
  j["prefix"] = elem_list(c.ring, c.prefix);
  j["omega"] = c.ring.to_string(c.omega);
  j["alpha"] = c.ring.to_string(c.alpha);
  j["guard"] = c.guard.to_string();
  j["bezout_guard"] = c.bezout_guard.to_string();
  j["target"] = c.target;
  return j;
}

template <SearchRing R>
Json certification_json(const ProgressionReport<R>& r) {
  Json j;
  j["passed"] = r.passed;
  j["checked"] = std::to_string(r.checked);
  j["skipped"] = std::to_string(r.skipped);
  if (r.failure) {
    j["failure"] = {{"index", r.failure->index},
                    {"family", std::to_string(r.failure->family + 1)},
                    {"witness", r.failure->witness}};
  }
  return j;
}

inline Json run_copsch(const JobSpec& job, Json& trace) {
  return with_ring(job.ring, [&](const auto& ring) {
    using R = std::decay_t<decltype(ring)>;
    const VarSet vars(name_list(job.t), {});
    const auto fams = parse_families(family_texts(job.polys, "--families"), vars, ring);
    std::optional<MultiPoly<R>> guard;
    if (!trim(job.guard).empty()) guard = parse_poly(job.guard, vars, ring);
    Json j;
    ProgressionCertificate<R> cert;
    if (vars.size() == 1) {
      auto r = copsch_search_univar(fams, guard);
      j["mode"] = "univariate";
      j["m"] = ring.to_string(r.m);
      Json ds = Json::array();
      for (const auto& d : r.deltas) ds.push_back(delta_json(d, ring));
      j["deltas"] = ds;
      cert = std::move(r.cert);
    } else {
      cert = copsch_search_multivar(fams, guard);
      j["mode"] = "multivariate";
    }
    j["certificate"] = certificate_json(cert);
    const auto check = certify_progression(cert, fams, job.samples);
    j["certification"] = certification_json(check);
    for (const auto& line : cert.trace) trace.push_back(line);
    for (const auto& line : check.log) trace.push_back(line);
    if (!check.passed) check.require_valid();
    return j;
  });
}

inline Json run_gcd_set(const JobSpec& job, Json& trace) {
  (void)trace;
  return with_ring(job.ring, [&](const auto& ring) {
    using R = std::decay_t<decltype(ring)>;
    const auto ts = name_list(job.t);
    if (ts.size() != 1) throw InvalidArgument("gcd-set needs exactly one t-variable", "--t");
    const VarSet vars(ts, name_list(job.y));
    const auto fams = parse_families(family_texts(job.polys, "--polys"), vars, ring);
    Family<R> family;
    for (const auto& f : fams) family.insert(family.end(), f.begin(), f.end());
    const VarSet wvars = vars.without({vars.index(ts.front())});
    std::vector<MultiPoly<R>> window;
    for (const auto& w : split(job.window, ';')) window.push_back(parse_poly(trim(w), wvars, ring));
    const auto r = value_gcd_set(family, vars.index(ts.front()), window);
    Json j;
    j["window"] = string_list(r.window);
    j["gcds"] = poly_list(r.gcds);
    j["distinct"] = poly_list(r.distinct);
    j["stable"] = r.stable;
    if (r.violating_pair) {
      j["violating_pair"] = Json::array({r.violating_pair->first.to_string(), r.violating_pair->second.to_string()});
      j["violating_gcd"] = r.violating_gcd->to_string();
    }
    return j;
  });
}

inline Json hilbert_json(const HilbertReport& r) {
  Json j;
  j["input_irreducibility"] = r.input_irreducibility;
  j["members_checked"] = std::to_string(r.members_checked);
  j["budget_exhausted"] = r.budget_exhausted;
  Json levels = Json::array();
  for (const auto& l : r.levels) {
    Json e;
    e["variable"] = l.variable;
    e["prefix"] = elem_list(IntegerRing{}, l.prefix);
    e["primes"] = elem_list(IntegerRing{}, l.primes);
    e["omega"] = l.omega.get_str();
    e["alpha"] = l.alpha.get_str();
    e["dead"] = l.dead;
    levels.push_back(e);
  }
  j["levels"] = levels;
  Json hits = Json::array();
  for (const auto& h : r.hits) {
    Json e;
    e["m"] = elem_list(IntegerRing{}, h.m);
    e["guard_value"] = h.guard_value.get_str();
    Json vs = Json::array();
    for (const auto& v : h.verdicts) {
      vs.push_back({{"specialized", v.specialized},
                    {"content", v.content.get_str()},
                    {"primitive", v.primitive},
                    {"irreducible", v.irreducible},
                    {"evidence", v.evidence},
                    {"certificate_hash", v.certificate_hash}});
    }
    e["verdicts"] = vs;
    hits.push_back(e);
  }
  j["hits"] = hits;
  return j;
}

inline Json run_hilbert(const JobSpec& job, Json& trace) {
  if (job.ring != "zz") throw InvalidArgument("hilbert supports only the ring zz", job.ring);
  const IntegerRing Z;
  const VarSet vars(name_list(job.t), name_list(job.y.empty() ? "y" : job.y));
  std::vector<ZMultiPoly> polys;
  for (const auto& fam : family_texts(job.polys, "--polys")) {
    for (const auto& m : fam) polys.push_back(parse_poly(m, vars, Z));
  }
  std::optional<ZMultiPoly> guard;
  if (!trim(job.guard).empty()) guard = parse_poly(job.guard, vars, Z);
  HilbertBudget budget{job.hits, job.budget_members, job.trace};
  const auto r = hilbert_search(polys, guard, budget);
  for (const auto& line : r.trace) trace.push_back(line);
  return hilbert_json(r);
}

inline Json case_json(const CaseReport& r) {
  Json j;
  j["name"] = r.name;
  j["verdict"] = r.pass() ? "pass" : "fail";
  j["anchor"] = r.anchor;
  Json ev = Json::array();
  for (const auto& e : r.evidence) ev.push_back({{"label", e.label}, {"detail", e.detail}, {"pass", e.pass}});
  j["evidence"] = ev;
  return j;
}

inline Json run_casebook(const JobSpec& job, Json& trace, bool& all_pass) {
  (void)trace;
  const std::vector<std::string> known{"fixed-gallery", "density", "gcd-instability", "zsqrt5", "all"};
  if (std::find(known.begin(), known.end(), job.case_name) == known.end()) {
    throw InvalidArgument("unknown case '" + job.case_name + "'", job.case_name);
  }
  std::vector<CaseReport> reports;
  const bool all = job.case_name == "all";
  if (all || job.case_name == "fixed-gallery") reports.push_back(verify_fixed_divisor_gallery());
  if (all || job.case_name == "density") reports.push_back(verify_density_example(job.h));
  if (all || job.case_name == "gcd-instability") reports.push_back(verify_gcd_instability(default_instability_samples()));
  if (all || job.case_name == "zsqrt5") reports.push_back(verify_zsqrt5_failure());
  Json j;
  Json arr = Json::array();
  all_pass = true;
  for (const auto& r : reports) {
    arr.push_back(case_json(r));
    all_pass = all_pass && r.pass();
  }
  j["verdict"] = all_pass ? "pass" : "fail";
  j["reports"] = arr;
  return j;
}

// ---------------------------------------------------------------------------
// Output

inline void render_text(const Json& j, std::ostream& out, int indent) {
  const std::string pad(static_cast<std::size_t>(indent), ' ');
  auto scalar = [](const Json& v) { return v.is_string() ? v.get<std::string>() : v.dump(); };
  if (j.is_object()) {
    for (const auto& [k, v] : j.items()) {
      if (v.is_structured() && !v.empty()) {
        out << pad << k << ":\n";
        render_text(v, out, indent + 2);
      } else {
        out << pad << k << ": " << (v.is_structured() ? std::string(v.is_array() ? "[]" : "{}") : scalar(v)) << "\n";
      }
    }
  } else if (j.is_array()) {
    for (const auto& v : j) {
      if (v.is_structured()) {
        out << pad << "-\n";
        render_text(v, out, indent + 2);
      } else {
        out << pad << "- " << scalar(v) << "\n";
      }
    }
  } else {
    out << pad << scalar(j) << "\n";
  }
}

inline const char* status_name(int code) {
  switch (code) {
    case kOk: return "ok";
    case kNegative: return "negative";
    case kUsage: return "usage";
    case kBudget: return "budget";
    default: return "internal";
  }
}

inline int exit_code_for(const Error& e) {
  switch (e.kind()) {
    case ErrorKind::input: return kUsage;
    case ErrorKind::math_negative: return kNegative;
    case ErrorKind::budget: return kBudget;
    default: return kInternal;
  }
}

inline Json command_echo(const JobSpec& job) {
  Json c;
  c["name"] = job.command;
  c["ring"] = job.ring;
  c["t"] = string_list(name_list(job.t));
  c["y"] = string_list(name_list(job.y));
  if (!job.polys.empty()) c["polys"] = job.polys;
  if (!job.poly.empty()) c["poly"] = job.poly;
  if (!job.guard.empty()) c["guard"] = job.guard;
  if (job.command == "gcd-set") c["window"] = job.window;
  if (job.command == "casebook") {
    c["case"] = job.case_name;
    c["h"] = std::to_string(job.h);
  }
  if (job.command == "hilbert") {
    c["hits"] = std::to_string(job.hits);
    c["budget_members"] = std::to_string(job.budget_members);
  }
  if (job.command == "copsch") c["samples"] = std::to_string(job.samples);
  c["seed"] = job.seed;
  return c;
}

/// Runs one CLI invocation; args excludes the program name.
inline int run_command(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  JobSpec job;
  CLI::App app{"Exact polynomial specialization toolkit", "hs"};
  app.require_subcommand(1, 1);
  app.set_version_flag("--version", std::string("hs schema ") + kSchemaVersion);

  auto common = [&](CLI::App* sub) {
    sub->add_option("--ring", job.ring, "coefficient ring: zz or fq_u:<prime>")->capture_default_str();
    sub->add_option("--t", job.t, "comma-separated t-variables")->capture_default_str();
    sub->add_option("--y", job.y, "comma-separated y-variables");
    sub->add_option("--polys,--families", job.polys, "polynomials: members split by ',', families by ';'");
    sub->add_option("--guard", job.guard, "guard polynomial in the t-variables");
    sub->add_option("--seed", job.seed, "echoed; all computations are deterministic")->capture_default_str();
    sub->add_flag("--trace", job.trace, "include the search trace");
    auto* j = sub->add_flag("--json", job.json, "JSON output (default)");
    auto* t = sub->add_flag("--text", job.text, "human-readable output");
    j->excludes(t);
  };
  auto* delta = app.add_subcommand("delta", "Bezout parameter of a univariate family");
  common(delta);
  auto* fixed = app.add_subcommand("fixed-divisors", "fixed prime divisors of a polynomial in (t, y)");
  common(fixed);
  fixed->add_option("--poly", job.poly, "the polynomial");
  auto* copsch = app.add_subcommand("copsch", "coprime specialization with a progression certificate");
  common(copsch);
  copsch->add_option("--samples", job.samples, "progression members to re-check")->capture_default_str();
  auto* gcdset = app.add_subcommand("gcd-set", "gcds of the values of a family over a window of points");
  common(gcdset);
  gcdset->add_option("--window", job.window, "';'-separated points, polynomials in the y-variables")
      ->capture_default_str();
  auto* hilbert = app.add_subcommand("hilbert", "specializations keeping irreducibility and primitivity");
  common(hilbert);
  hilbert->add_option("--hits", job.hits, "number of hits to find")->capture_default_str();
  hilbert->add_option("--budget-members", job.budget_members, "progression members to test")->capture_default_str();
  auto* casebook = app.add_subcommand("casebook", "re-verify the worked examples");
  casebook->set_help_flag("--help", "Print this help message and exit");
  common(casebook);
  casebook->add_option("--case", job.case_name, "fixed-gallery | density | gcd-instability | zsqrt5 | all")
      ->capture_default_str();
  casebook->add_option("--h", job.h, "number of primes in the density example")->capture_default_str();

  Json report;
  report["schema_version"] = kSchemaVersion;
  try {
    std::vector<std::string> rev(args.rbegin(), args.rend());
    app.parse(rev);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kOk;
  } catch (const CLI::CallForVersion&) {
    out << std::string("hs schema ") + kSchemaVersion << "\n";
    return kOk;
  } catch (const CLI::ParseError& e) {
    report["status"] = status_name(kUsage);
    report["exit_code"] = std::to_string(static_cast<int>(kUsage));
    report["error"] = {{"code", "UsageError"}, {"message", e.what()}, {"witness", ""}};
    out << report.dump(2) << "\n";
    err << "usage error: " << e.what() << "\n";
    return kUsage;
  }
  job.command = app.get_subcommands().front()->get_name();

  Json trace = Json::array();
  int code = kOk;
  Json result;
  Json error;
  try {
    if (job.command == "delta") result = run_delta(job, trace);
    else if (job.command == "fixed-divisors") result = run_fixed_divisors(job, trace);
    else if (job.command == "copsch") result = run_copsch(job, trace);
    else if (job.command == "gcd-set") result = run_gcd_set(job, trace);
    else if (job.command == "hilbert") result = run_hilbert(job, trace);
    else {
      bool pass = true;
      result = run_casebook(job, trace, pass);
      if (!pass) code = kNegative;
    }
  } catch (const SyntaxError& e) {
    code = kUsage;
    error = {{"code", e.code()}, {"message", e.what()}, {"witness", e.witness()}};
  } catch (const Error& e) {
    code = exit_code_for(e);
    error = {{"code", e.code()}, {"message", e.what()}, {"witness", e.witness()}};
  } catch (const std::exception& e) {
    code = kInternal;
    error = {{"code", "InternalError"}, {"message", e.what()}, {"witness", ""}};
  }

  report["command"] = command_echo(job);
  report["status"] = status_name(code);
  report["exit_code"] = std::to_string(code);
  if (!error.is_null()) {
    report["error"] = error;
    err << error["code"].get<std::string>() << ": " << error["message"].get<std::string>() << "\n";
  } else {
    report["result"] = result;
  }
  if (job.trace) report["trace"] = trace;

  if (job.text) {
    render_text(report, out, 0);
  } else {
    out << report.dump(2) << "\n";
  }
  return code;
}

}  // namespace hs::cli
