#pragma once

// Command-line driver for the qed-cert tool.
//
// Every subcommand is implemented against the library headers and returns a
// CommandResult {exit_code, stdout text, stderr text} so the whole surface is
// testable in-process.  Exit codes are a total function of the result status:
//
//   0  ok / Equivalent
//   1  Obstructed / violation
//   2  Unknown
//   3  usage error (bad flags, unreadable arguments)
//
// With --json the result is wrapped in the envelope
//   {"status": ..., "result": ..., "violations": [...]}
// with that key order; without it, results go to stdout and diagnostics to
// stderr, never interleaved.

#include <algorithm>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <future>
#include <map>
#include <set>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "qed/certificate.hpp"
#include "qed/chains.hpp"
#include "qed/descriptor_io.hpp"
#include "qed/errors.hpp"
#include "qed/exact_complex.hpp"
#include "qed/invariants.hpp"
#include "qed/kodaira_group.hpp"
#include "qed/orbifold.hpp"
#include "qed/quaternion.hpp"
#include "qed/quotient_search.hpp"
#include "qed/t_chain.hpp"

namespace qed::cli {

struct CommandResult {
  int exit_code = 0;
  std::string out;
  std::string err;
};

namespace detail {

using json = nlohmann::ordered_json;

// Flag or argument problems that should surface as usage errors (exit 3)
// rather than as mathematical violations.
struct usage_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Per-command result before serialization to text or JSON.
struct RunOutcome {
  std::string status = "ok";  // ok | Equivalent | Obstructed | Unknown | violation
  std::string text;           // human-readable stdout payload
  json result;                // machine-readable payload for --json
  std::vector<std::string> violations;
};

inline int exit_for_status(const std::string& s) {
  if (s == "ok" || s == "Equivalent") return 0;
  if (s == "Obstructed" || s == "violation") return 1;
  if (s == "Unknown") return 2;
  return 3;
}

inline std::string envelope(const RunOutcome& oc) {
  json j;
  j["status"] = oc.status;
  j["result"] = oc.result;
  j["violations"] = oc.violations;
  return j.dump(2) + "\n";
}

inline std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw usage_error("cannot read file: " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

inline std::string trim(const std::string& s) {
  size_t b = s.find_first_not_of(" \t\r\n");
  if (b == std::string::npos) return "";
  size_t e = s.find_last_not_of(" \t\r\n");
  return s.substr(b, e - b + 1);
}

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

inline long long parse_integer(const std::string& s, const std::string& what) {
  const std::string t = trim(s);
  try {
    size_t pos = 0;
    long long v = std::stoll(t, &pos, 10);
    if (pos != t.size() || t.empty()) throw std::invalid_argument("trailing text");
    return v;
  } catch (const std::exception&) {
    throw usage_error("cannot parse " + what + ": '" + s + "'");
  }
}

// --bound flag wins over the QED_CERT_SEARCH_BOUND environment variable,
// which wins over the built-in default of 512.
inline long long resolve_search_bound(bool flag_set, long long flag_value) {
  if (flag_set) return flag_value;
  if (const char* env = std::getenv("QED_CERT_SEARCH_BOUND")) {
    long long v = parse_integer(env, "QED_CERT_SEARCH_BOUND");
    if (v < 1) throw usage_error("QED_CERT_SEARCH_BOUND must be a positive integer");
    return v;
  }
  return 512;
}

// ---------------------------------------------------------------------------
// Small pretty-printers shared by the orbifold subcommand.

inline std::string generator_symbol(long long signed_index, long long genus) {
  long long i = signed_index < 0 ? -signed_index : signed_index;
  if (i <= 2 * genus)
    return (i % 2 != 0) ? "a" + std::to_string((i + 1) / 2) : "b" + std::to_string(i / 2);
  return "x" + std::to_string(i - 2 * genus);
}

inline std::string word_string(const std::vector<long long>& word, long long genus) {
  std::string out;
  size_t i = 0;
  while (i < word.size()) {
    size_t j = i;
    while (j < word.size() && word[j] == word[i]) ++j;
    long long run = static_cast<long long>(j - i);
    long long exp = word[i] < 0 ? -run : run;
    if (!out.empty()) out += " ";
    out += generator_symbol(word[i], genus);
    if (exp != 1) out += "^" + std::to_string(exp);
    i = j;
  }
  return out.empty() ? "1" : out;
}

inline std::string cycle_string(const orb::Perm& p) {
  std::string out;
  std::vector<bool> seen(p.size(), false);
  for (size_t s = 0; s < p.size(); ++s) {
    if (seen[s] || p[s] == static_cast<int>(s)) {
      seen[s] = true;
      continue;
    }
    out += "(";
    size_t c = s;
    bool first = true;
    while (!seen[c]) {
      seen[c] = true;
      if (!first) out += " ";
      out += std::to_string(c + 1);
      first = false;
      c = static_cast<size_t>(p[c]);
    }
    out += ")";
  }
  return out.empty() ? "()" : out;
}

// ---------------------------------------------------------------------------
// classify

inline RunOutcome do_classify(const std::string& file) {
  SurfaceDescriptor d = parse_descriptor(read_file(file));
  RunOutcome oc;
  std::ostringstream out;
  out << "kodaira-dimension: " << kodaira_dim_name(d.kod) << "\n"
      << "class: " << surface_class_name(d.class_tag) << "\n"
      << "b1: " << d.b1 << "\n"
      << "q: " << d.q << "\n"
      << "pg: " << d.pg << "\n"
      << "k2: " << d.k2 << "\n"
      << "e: " << d.e << "\n"
      << "chi: " << chi(d) << "\n"
      << "minimal: " << (d.minimal ? "true" : "false") << "\n"
      << "smooth: " << (d.smooth() ? "true" : "false") << "\n"
      << "hash: " << descriptor_hash_hex(d) << "\n"
      << "descriptor: " << serialize_descriptor(d) << "\n";
  oc.text = out.str();
  oc.result = json{{"kodaira_dimension", kodaira_dim_name(d.kod)},
                   {"class", surface_class_name(d.class_tag)},
                   {"b1", d.b1},
                   {"q", d.q},
                   {"pg", d.pg},
                   {"k2", d.k2},
                   {"e", d.e},
                   {"chi", chi(d)},
                   {"minimal", d.minimal},
                   {"smooth", d.smooth()},
                   {"hash", descriptor_hash_hex(d)},
                   {"descriptor", serialize_descriptor(d)}};
  return oc;
}

// ---------------------------------------------------------------------------
// chain

inline RunOutcome do_chain(const std::string& from_file, const std::string& to_file,
                           long long bound) {
  SurfaceDescriptor a = parse_descriptor(read_file(from_file));
  SurfaceDescriptor b = parse_descriptor(read_file(to_file));
  EquivalenceResult r = decide_equivalence(a, b, bound);
  RunOutcome oc;
  oc.status = equivalence_outcome_name(r.outcome);
  oc.result = json{{"outcome", oc.status}, {"reason", r.reason}};
  if (r.outcome == EquivalenceResult::Outcome::Equivalent) {
    std::string cert_text = serialize_certificate(r.certificate);
    oc.text = cert_text;
    oc.result["steps"] = r.certificate.steps.size();
    oc.result["certificate"] = cert_text;
  } else {
    oc.text = oc.status + ": " + r.reason + "\n";
  }
  return oc;
}

// ---------------------------------------------------------------------------
// verify (single files and --dir batches; batch entries run in parallel and
// are reported in input order)

struct FileReport {
  std::string file;
  bool ok = false;
  std::vector<std::string> violations;
};

inline FileReport verify_one_certificate(const std::string& path) {
  FileReport r;
  r.file = path;
  std::string text;
  try {
    text = read_file(path);
  } catch (const std::exception& e) {
    r.violations.push_back(e.what());
    return r;
  }
  try {
    Certificate cert = parse_certificate(text);
    VerifyReport rep = verify_certificate(cert);
    r.ok = rep.ok;
    r.violations = rep.violations;
  } catch (const error& e) {
    r.violations.push_back(std::string(errc_name(e.code())) + ": " + e.what());
  }
  return r;
}

inline RunOutcome do_verify(std::vector<std::string> files, const std::string& dir) {
  namespace fs = std::filesystem;
  if (!dir.empty()) {
    if (!fs::is_directory(dir)) throw usage_error("not a directory: " + dir);
    std::vector<std::string> found;
    for (const auto& entry : fs::directory_iterator(dir))
      if (entry.is_regular_file()) found.push_back(entry.path().string());
    std::sort(found.begin(), found.end());
    files.insert(files.end(), found.begin(), found.end());
  }
  if (files.empty()) throw usage_error("verify requires certificate files or --dir");

  std::vector<std::future<FileReport>> jobs;
  jobs.reserve(files.size());
  for (const auto& f : files)
    jobs.push_back(std::async(std::launch::async, verify_one_certificate, f));

  RunOutcome oc;
  oc.result = json::array();
  bool all_ok = true;
  std::ostringstream out;
  for (auto& job : jobs) {
    FileReport r = job.get();
    all_ok = all_ok && r.ok;
    out << r.file << ": " << (r.ok ? "ok" : "FAIL") << "\n";
    for (const auto& v : r.violations) oc.violations.push_back(r.file + ": " + v);
    oc.result.push_back(json{{"file", r.file}, {"ok", r.ok}, {"violations", r.violations}});
  }
  oc.text = out.str();
  oc.status = all_ok ? "ok" : "violation";
  return oc;
}

// ---------------------------------------------------------------------------
// orbifold

inline RunOutcome do_orbifold(long long genus, const std::string& mult_list, long long bound) {
  std::vector<long long> mults;
  if (!trim(mult_list).empty())
    for (const auto& tok : split(mult_list, ','))
      mults.push_back(parse_integer(tok, "--mult entry"));
  orb::OrbifoldSignature sig = orb::make_signature(genus, std::move(mults));
  RunOutcome oc;

  orb::ExceptionalClass exc = orb::classify_exceptional(sig);
  if (exc.kind != orb::ExceptionalKind::NonExceptional) {
    oc.text = "signature: " + orb::signature_name(sig) + "\n" +
              "exceptional: " + orb::exceptional_class_name(exc) + "\n";
    oc.result = json{{"signature", orb::signature_name(sig)},
                     {"exceptional", orb::exceptional_class_name(exc)}};
    return oc;
  }

  orb::OrbifoldPresentation pres = orb::presentation(sig);
  std::vector<std::string> gen_names;
  for (long long i = 1; i <= pres.num_generators; ++i)
    gen_names.push_back(generator_symbol(i, sig.genus));
  std::vector<std::string> relator_words;
  for (const auto& rel : pres.relators) relator_words.push_back(word_string(rel, sig.genus));

  orb::QuotientWitness w = orb::find_good_quotient(sig, bound);
  orb::WitnessReport rep = orb::verify_quotient_witness(sig, w, bound);

  std::vector<std::string> image_lines;
  for (size_t i = 0; i < w.handle_images.size(); ++i)
    image_lines.push_back(gen_names[i] + " -> " + cycle_string(w.handle_images[i]));
  for (size_t i = 0; i < w.cone_images.size(); ++i)
    image_lines.push_back(gen_names[2 * sig.genus + i] + " -> " + cycle_string(w.cone_images[i]));

  std::ostringstream out;
  out << "signature: " << orb::signature_name(sig) << "\n";
  out << "generators:";
  for (const auto& g : gen_names) out << " " << g;
  out << "\n";
  for (const auto& rw : relator_words) out << "relator: " << rw << "\n";
  out << "group: " << w.group_name << "\n"
      << "order: " << w.target_order << "\n"
      << "degree: " << w.degree << "\n";
  for (const auto& line : image_lines) out << line << "\n";
  out << "witness: " << (rep.ok ? "ok" : "FAIL") << "\n";

  oc.text = out.str();
  oc.result = json{{"signature", orb::signature_name(sig)}, {"generators", gen_names},
                   {"relators", relator_words},        {"group", w.group_name},
                   {"order", w.target_order},          {"degree", w.degree},
                   {"images", image_lines},            {"witness_ok", rep.ok}};
  if (!rep.ok) {
    oc.status = "violation";
    oc.violations = rep.violations;
  }
  return oc;
}

// ---------------------------------------------------------------------------
// quaternion subcommands

inline RunOutcome do_quaternion_construct(long long d) {
  quat::CyclotomicContext ctx = quat::make_context(d);
  quat::RamificationData data = quat::construct_S(ctx);
  RunOutcome oc;
  oc.text = quat::class_tag(data) + "\n";
  std::vector<std::string> prime_names;
  for (const auto& P : data.primes) prime_names.push_back(quat::prime_ideal_name(P));
  oc.result = json{{"tag", quat::class_tag(data)}, {"primes", prime_names}};
  return oc;
}

inline std::vector<quat::PrimeIdeal> parse_prime_list(const std::string& text) {
  std::vector<quat::PrimeIdeal> primes;
  for (const auto& tok : split(text, ',')) {
    auto parts = split(tok, ':');
    if (parts.size() < 2 || parts.size() > 3)
      throw usage_error("cannot parse --primes entry '" + tok + "' (expected p:f or p:f:c)");
    quat::PrimeIdeal P;
    P.p = parse_integer(parts[0], "--primes entry");
    P.f = static_cast<int>(parse_integer(parts[1], "--primes residue degree"));
    P.conjugate_index =
        parts.size() == 3 ? static_cast<int>(parse_integer(parts[2], "--primes conjugate index")) : 0;
    primes.push_back(P);
  }
  std::sort(primes.begin(), primes.end());
  return primes;
}

inline RunOutcome do_quaternion_verify(long long d, const std::string& prime_list) {
  quat::CyclotomicContext ctx = quat::make_context(d);
  quat::RamificationData data{ctx.k, parse_prime_list(prime_list)};
  quat::TorsionReport report = quat::verify_torsion_free(ctx, data);
  RunOutcome oc;
  std::ostringstream out;
  out << "tag: " << quat::class_tag(data) << "\n";
  json levels = json::array();
  for (const auto& lvl : report.levels) {
    if (lvl.split_found) {
      out << "level " << lvl.level << ": witness " << quat::prime_ideal_name(lvl.witness) << "\n";
      levels.push_back(json{{"level", lvl.level},
                            {"split_found", true},
                            {"witness", quat::prime_ideal_name(lvl.witness)}});
    } else {
      out << "level " << lvl.level << ": no splitting prime\n";
      levels.push_back(json{{"level", lvl.level}, {"split_found", false}});
      oc.violations.push_back("level " + std::to_string(lvl.level) + ": no splitting prime");
    }
  }
  out << "torsion-free: " << (report.torsion_free ? "true" : "false") << "\n";
  oc.text = out.str();
  oc.result = json{{"tag", quat::class_tag(data)},
                   {"torsion_free", report.torsion_free},
                   {"levels", levels}};
  if (!report.torsion_free) oc.status = "violation";
  return oc;
}

inline RunOutcome do_quaternion_enumerate(long long d, long long bound) {
  quat::CyclotomicContext ctx = quat::make_context(d);
  std::vector<quat::RamificationData> classes = quat::enumerate_classes(ctx, bound);
  RunOutcome oc;
  std::ostringstream out;
  json tags = json::array();
  for (const auto& cls : classes) {
    out << quat::class_tag(cls) << "\n";
    tags.push_back(quat::class_tag(cls));
  }
  oc.text = out.str();
  oc.result = std::move(tags);
  return oc;
}

// ---------------------------------------------------------------------------
// kodaira subcommands

inline RunOutcome do_kodaira_verify(const std::string& data_file) {
  const std::string body = read_file(data_file);
  kod::KodairaGroupData data;
  std::set<std::string> seen;
  RunOutcome oc;

  std::istringstream in(body);
  std::string line;
  size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (auto hash = line.find('#'); hash != std::string::npos) line = line.substr(0, hash);
    line = trim(line);
    if (line.empty()) continue;
    auto eq = line.find('=');
    if (eq == std::string::npos) {
      oc.violations.push_back("line " + std::to_string(line_no) + ": expected key = value");
      continue;
    }
    const std::string key = trim(line.substr(0, eq));
    const std::string value = trim(line.substr(eq + 1));
    try {
      if (key == "m") {
        data.m = parse_integer(value, "m");
      } else if (key.size() == 6 && key.rfind("alpha", 0) == 0 && key[5] >= '1' && key[5] <= '4') {
        data.alpha[static_cast<size_t>(key[5] - '1')] = ExactComplex::parse(value);
      } else if (key.size() == 5 && key.rfind("beta", 0) == 0 && key[4] >= '1' && key[4] <= '4') {
        data.beta[static_cast<size_t>(key[4] - '1')] = ExactComplex::parse(value);
      } else {
        oc.violations.push_back("line " + std::to_string(line_no) + ": unknown key '" + key + "'");
        continue;
      }
      seen.insert(key);
    } catch (const std::exception& e) {
      oc.violations.push_back("line " + std::to_string(line_no) + ": " + e.what());
    }
  }
  for (const std::string stem : {"alpha", "beta"})
    for (char idx : {'1', '2', '3', '4'})
      if (const std::string key = stem + std::string(1, idx); !seen.count(key))
        oc.violations.push_back("missing field: " + key);
  if (!oc.violations.empty()) {
    oc.status = "violation";
    return oc;
  }

  for (const auto& v : kod::group_data_violations(data)) oc.violations.push_back(v);
  if (!oc.violations.empty()) {
    oc.status = "violation";
    return oc;
  }

  kod::PresentationReport rep = kod::verify_presentation(kod::rescale(data));
  bool conj_invariant = kod::same_group_data(kod::conjugate_data(data), data);
  std::ostringstream out;
  out << "m: " << data.m << "\n"
      << "relations: " << (rep.ok ? "ok" : "FAIL") << "\n"
      << "conjugation-invariant: " << (conj_invariant ? "true" : "false") << "\n";
  oc.text = out.str();
  oc.result = json{{"m", data.m},
                   {"relations_ok", rep.ok},
                   {"conjugation_invariant", conj_invariant}};
  if (!rep.ok) {
    oc.status = "violation";
    oc.violations = rep.violations;
  }
  return oc;
}

inline ExactComplex parse_value_flag(const std::string& text, const std::string& flag) {
  try {
    return ExactComplex::parse(text);
  } catch (const std::exception& e) {
    throw usage_error("cannot parse " + flag + ": " + e.what());
  }
}

inline RunOutcome do_kodaira_fixed_point(const std::string& sigma, const std::string& h0,
                                         const std::string& h1, const std::string& h2) {
  kod::AffineAuto phi{parse_value_flag(sigma, "--sigma"), parse_value_flag(h0, "--h0"),
                      parse_value_flag(h1, "--h1"), parse_value_flag(h2, "--h2")};
  kod::FixedPointSet fps = kod::fixed_point_set(phi);
  RunOutcome oc;
  oc.text = std::string("fixed-point set: ") + kod::fixed_point_set_name(fps) + "\n";
  oc.result = json{{"sigma", phi.sigma.to_string()},
                   {"fixed_point_set", kod::fixed_point_set_name(fps)}};
  return oc;
}

// ---------------------------------------------------------------------------
// tchain

inline RunOutcome do_tchain(long long n, long long d) {
  TChain chain = t_chain(n, d);
  std::vector<std::string> violations = verify_t_chain(chain);
  RunOutcome oc;
  oc.text = serialize_t_chain(chain);
  json nodes = json::array();
  for (const auto& step : chain) nodes.push_back(serialize_t_node(step.node));
  oc.result = json{{"length", chain.size()}, {"nodes", std::move(nodes)}};
  if (!violations.empty()) {
    oc.status = "violation";
    oc.violations = std::move(violations);
  }
  return oc;
}

}  // namespace detail

// Runs one command line (without the leading program name) and captures the
// exit code plus both output streams.
inline CommandResult run_command(const std::vector<std::string>& args) {
  using detail::RunOutcome;

  CLI::App app{"Certificate chains, ramification data, and affine-group checks "
               "for the Q.E.D. equivalence of compact complex surfaces",
               "qed-cert"};
  app.require_subcommand(1);
  bool json_mode = false;
  app.add_flag("--json", json_mode, "emit a machine-readable JSON envelope");

  // classify
  std::string classify_file;
  CLI::App* classify = app.add_subcommand("classify", "classify a surface descriptor file");
  classify->fallthrough();
  classify->add_option("file", classify_file, "descriptor file")->required();

  // chain
  std::string chain_from, chain_to;
  long long chain_bound = 0;
  CLI::App* chain = app.add_subcommand("chain", "decide equivalence and emit a certificate");
  chain->fallthrough();
  chain->add_option("--from", chain_from, "source descriptor file")->required();
  chain->add_option("--to", chain_to, "target descriptor file")->required();
  CLI::Option* chain_bound_opt =
      chain->add_option("--bound", chain_bound, "quotient search order bound");

  // verify
  std::vector<std::string> verify_files;
  std::string verify_dir;
  CLI::App* verify = app.add_subcommand("verify", "verify certificate files");
  verify->fallthrough();
  verify->add_option("files", verify_files, "certificate files");
  verify->add_option("--dir", verify_dir, "verify every file in a directory");

  // orbifold
  long long orb_genus = 0;
  std::string orb_mult;
  long long orb_bound = 0;
  CLI::App* orbifold =
      app.add_subcommand("orbifold", "present an orbifold group and search a finite quotient");
  orbifold->fallthrough();
  orbifold->add_option("--genus", orb_genus, "base curve genus")->required();
  orbifold->add_option("--mult", orb_mult, "comma-separated multiple-fiber orders");
  CLI::Option* orb_bound_opt =
      orbifold->add_option("--bound", orb_bound, "quotient search order bound");

  // quaternion
  CLI::App* quaternion =
      app.add_subcommand("quaternion", "ramification data for quaternionic surface classes");
  quaternion->fallthrough();
  quaternion->require_subcommand(1);
  long long q_construct_d = 0;
  CLI::App* q_construct =
      quaternion->add_subcommand("construct", "construct a torsion-free ramification set");
  q_construct->fallthrough();
  q_construct->add_option("--d", q_construct_d, "squarefree discriminant part")->required();
  long long q_verify_d = 0;
  std::string q_verify_primes;
  CLI::App* q_verify =
      quaternion->add_subcommand("verify", "verify torsion-freeness of a ramification set");
  q_verify->fallthrough();
  q_verify->add_option("--d", q_verify_d, "squarefree discriminant part")->required();
  q_verify->add_option("--primes", q_verify_primes, "comma-separated p:f or p:f:c entries")
      ->required();
  long long q_enum_d = 0;
  long long q_enum_bound = 100;
  CLI::App* q_enum =
      quaternion->add_subcommand("enumerate", "enumerate distinct torsion-free class tags");
  q_enum->fallthrough();
  q_enum->add_option("--d", q_enum_d, "squarefree discriminant part")->required();
  q_enum->add_option("--bound", q_enum_bound, "rational prime bound");

  // kodaira
  CLI::App* kodaira = app.add_subcommand("kodaira", "affine-group data checks");
  kodaira->fallthrough();
  kodaira->require_subcommand(1);
  std::string k_data_file;
  CLI::App* k_verify = kodaira->add_subcommand("verify", "verify a group data file");
  k_verify->fallthrough();
  k_verify->add_option("--data", k_data_file, "group data file")->required();
  std::string k_sigma, k_h0 = "0", k_h1 = "0", k_h2 = "0";
  CLI::App* k_fixed =
      kodaira->add_subcommand("fixed-point", "fixed-point set of an affine automorphism");
  k_fixed->fallthrough();
  k_fixed->add_option("--sigma", k_sigma, "twelfth root of unity")->required();
  k_fixed->add_option("--h0", k_h0, "constant term");
  k_fixed->add_option("--h1", k_h1, "linear coefficient");
  k_fixed->add_option("--h2", k_h2, "second-coordinate translation");

  // tchain
  long long t_n = 0, t_d = 0;
  CLI::App* tchain =
      app.add_subcommand("tchain", "hypersurface-to-projective-space degeneration chain");
  tchain->fallthrough();
  tchain->add_option("--n", t_n, "hypersurface dimension")->required()->check(CLI::PositiveNumber);
  tchain->add_option("--d", t_d, "hypersurface degree")->required()->check(CLI::PositiveNumber);

  CommandResult res;

  std::vector<const char*> argv;
  argv.reserve(args.size() + 1);
  argv.push_back("qed-cert");
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    std::ostringstream out, err;
    int code = app.exit(e, out, err);
    res.out = out.str();
    res.err = err.str();
    res.exit_code = code == 0 ? 0 : 3;
    return res;
  }

  RunOutcome oc;
  try {
    if (app.got_subcommand(classify)) {
      oc = detail::do_classify(classify_file);
    } else if (app.got_subcommand(chain)) {
      long long bound = detail::resolve_search_bound(chain_bound_opt->count() > 0, chain_bound);
      oc = detail::do_chain(chain_from, chain_to, bound);
    } else if (app.got_subcommand(verify)) {
      oc = detail::do_verify(verify_files, verify_dir);
    } else if (app.got_subcommand(orbifold)) {
      long long bound = detail::resolve_search_bound(orb_bound_opt->count() > 0, orb_bound);
      oc = detail::do_orbifold(orb_genus, orb_mult, bound);
    } else if (app.got_subcommand(quaternion)) {
      if (quaternion->got_subcommand(q_construct))
        oc = detail::do_quaternion_construct(q_construct_d);
      else if (quaternion->got_subcommand(q_verify))
        oc = detail::do_quaternion_verify(q_verify_d, q_verify_primes);
      else
        oc = detail::do_quaternion_enumerate(q_enum_d, q_enum_bound);
    } else if (app.got_subcommand(kodaira)) {
      if (kodaira->got_subcommand(k_verify))
        oc = detail::do_kodaira_verify(k_data_file);
      else
        oc = detail::do_kodaira_fixed_point(k_sigma, k_h0, k_h1, k_h2);
    } else {
      oc = detail::do_tchain(t_n, t_d);
    }
  } catch (const detail::usage_error& e) {
    res.exit_code = 3;
    res.err = std::string("error: ") + e.what() + "\n";
    return res;
  } catch (const error& e) {
    oc = RunOutcome{};
    oc.status = "violation";
    oc.violations.push_back(std::string(errc_name(e.code())) + ": " + e.what());
  }

  if (json_mode) {
    res.out = detail::envelope(oc);
  } else {
    res.out = oc.text;
    for (const auto& v : oc.violations) res.err += v + "\n";
  }
  res.exit_code = detail::exit_for_status(oc.status);
  return res;
}

}  // namespace qed::cli
