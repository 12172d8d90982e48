#include <catch2/catch_amalgamated.hpp>

#include <unistd.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "qed/chains.hpp"
#include "qed/cli.hpp"

namespace {

namespace fs = std::filesystem;
using qed::cli::CommandResult;
using qed::cli::run_command;

CommandResult run(std::vector<std::string> args) { return run_command(args); }

// Scratch directory for descriptor/certificate files used by one test case.
struct Scratch {
  fs::path dir;

  Scratch() {
    static int counter = 0;
    dir = fs::temp_directory_path() / ("qed-cli-" + std::to_string(::getpid()) + "-" +
                                       std::to_string(counter++));
    fs::create_directories(dir);
  }
  ~Scratch() {
    std::error_code ec;
    fs::remove_all(dir, ec);
  }

  std::string write(const std::string& name, const std::string& content) const {
    fs::path p = dir / name;
    std::ofstream out(p);
    out << content;
    return p.string();
  }

  std::string descriptor(const std::string& name, const qed::SurfaceDescriptor& d) const {
    return write(name, qed::serialize_descriptor(d) + "\n");
  }
};

std::vector<std::string> lines_of(const std::string& text) {
  std::vector<std::string> out;
  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line)) out.push_back(line);
  return out;
}

std::vector<std::string> top_level_keys(const std::string& json_text) {
  auto j = nlohmann::ordered_json::parse(json_text);
  std::vector<std::string> keys;
  for (const auto& el : j.items()) keys.push_back(el.key());
  return keys;
}

}  // namespace

TEST_CASE("cli rejects bad usage with exit 3") {
  CHECK(run({}).exit_code == 3);
  CHECK(run({"frobnicate"}).exit_code == 3);
  CHECK(run({"classify"}).exit_code == 3);                         // missing positional
  CHECK(run({"chain", "--from", "x"}).exit_code == 3);             // missing --to
  CHECK(run({"verify"}).exit_code == 3);                           // no files, no --dir
  CHECK(run({"quaternion"}).exit_code == 3);                       // missing nested subcommand
  CHECK(run({"tchain", "--n", "0", "--d", "3"}).exit_code == 3);   // positivity check
  CHECK(run({"tchain", "--n", "2", "--d", "nope"}).exit_code == 3);
  CHECK(run({"classify", "--bogus-flag", "f"}).exit_code == 3);    // unknown flag

  CommandResult missing = run({"classify", "/nonexistent/zzz.desc"});
  CHECK(missing.exit_code == 3);
  CHECK(missing.err.find("cannot read file") != std::string::npos);

  CommandResult help = run({"--help"});
  CHECK(help.exit_code == 0);
  CHECK(help.out.find("qed-cert") != std::string::npos);
  CHECK(help.err.empty());
}

TEST_CASE("cli classify reports invariants and classification") {
  Scratch tmp;
  std::string file = tmp.descriptor("enriques.desc", qed::enriques_descriptor());

  CommandResult res = run({"classify", file});
  REQUIRE(res.exit_code == 0);
  CHECK(res.err.empty());
  CHECK(res.out.find("kodaira-dimension: 0") != std::string::npos);
  CHECK(res.out.find("class: Enriques") != std::string::npos);
  CHECK(res.out.find("e: 12") != std::string::npos);
  CHECK(res.out.find("chi: 1") != std::string::npos);
  CHECK(res.out.find("minimal: true") != std::string::npos);
  CHECK(res.out.find("descriptor: surface {") != std::string::npos);

  SECTION("json envelope has the stable key order") {
    CommandResult js = run({"classify", file, "--json"});
    REQUIRE(js.exit_code == 0);
    auto keys = top_level_keys(js.out);
    REQUIRE(keys == std::vector<std::string>{"status", "result", "violations"});
    auto j = nlohmann::ordered_json::parse(js.out);
    CHECK(j["status"] == "ok");
    CHECK(j["result"]["class"] == "Enriques");
    CHECK(j["result"]["e"] == 12);
    CHECK(j["violations"].empty());
  }

  SECTION("json flag may precede the subcommand") {
    CommandResult js = run({"--json", "classify", file});
    REQUIRE(js.exit_code == 0);
    CHECK(nlohmann::ordered_json::parse(js.out)["status"] == "ok");
  }
}

TEST_CASE("cli classify rejects descriptors violating the invariant checks") {
  Scratch tmp;
  std::string text = qed::serialize_descriptor(qed::k3_descriptor());
  REQUIRE(text.find("k2=0") != std::string::npos);
  text.replace(text.find("k2=0"), 4, "k2=1");
  std::string file = tmp.write("bad-noether.desc", text + "\n");

  CommandResult res = run({"classify", file});
  CHECK(res.exit_code == 1);
  CHECK(res.out.empty());
  CHECK(res.err.find("InvariantViolation") != std::string::npos);
  CHECK(res.err.find("noether") != std::string::npos);

  CommandResult js = run({"classify", file, "--json"});
  CHECK(js.exit_code == 1);
  auto j = nlohmann::ordered_json::parse(js.out);
  CHECK(j["status"] == "violation");
  REQUIRE(j["violations"].size() == 1);
}

TEST_CASE("cli chain emits a certificate that round-trips and verifies") {
  Scratch tmp;
  std::string from = tmp.descriptor("enriques.desc", qed::enriques_descriptor());
  std::string to = tmp.descriptor("k3.desc", qed::k3_descriptor());

  CommandResult res = run({"chain", "--from", from, "--to", to});
  REQUIRE(res.exit_code == 0);
  CHECK(res.err.empty());
  REQUIRE(res.out.rfind("qed-certificate v1", 0) == 0);

  qed::Certificate cert = qed::parse_certificate(res.out);
  CHECK(qed::serialize_certificate(cert) == res.out);
  CHECK(qed::verify_certificate(cert).ok);
  CHECK(cert.first == qed::enriques_descriptor());
  CHECK(cert.last == qed::k3_descriptor());

  SECTION("json mode wraps the certificate") {
    CommandResult js = run({"chain", "--from", from, "--to", to, "--json"});
    REQUIRE(js.exit_code == 0);
    auto j = nlohmann::ordered_json::parse(js.out);
    CHECK(j["status"] == "Equivalent");
    CHECK(j["result"]["steps"] == cert.steps.size());
    CHECK(qed::parse_certificate(j["result"]["certificate"].get<std::string>()) == cert);
  }
}

TEST_CASE("cli chain reports obstructions and unknowns with matching exit codes") {
  Scratch tmp;
  std::string kod0 = tmp.descriptor("enriques.desc", qed::enriques_descriptor());
  std::string kod1 = tmp.descriptor("bundle.desc", qed::elliptic_product(2));

  CommandResult res = run({"chain", "--from", kod0, "--to", kod1});
  CHECK(res.exit_code == 1);
  CHECK(res.out == "Obstructed: Siu invariance\n");
  CHECK(res.err.empty());

  qed::SurfaceDescriptor poly{};
  poly.kod = qed::KodairaDim::Two;
  poly.class_tag = qed::SurfaceClass::PolydiskQuotient;
  poly.b1 = 0;
  poly.q = 0;
  poly.pg = 1;
  poly.e = 8;
  poly.k2 = 16;
  poly.minimal = true;
  poly.polydisk_class = std::string("same");
  std::string pa = tmp.descriptor("poly-a.desc", qed::make_descriptor(poly));
  CommandResult unknown = run({"chain", "--from", pa, "--to", pa});
  CHECK(unknown.exit_code == 2);
  CHECK(unknown.out.rfind("Unknown: ", 0) == 0);

  SECTION("json envelope carries the obstruction reason") {
    CommandResult js = run({"chain", "--from", kod0, "--to", kod1, "--json"});
    CHECK(js.exit_code == 1);
    auto j = nlohmann::ordered_json::parse(js.out);
    CHECK(j["status"] == "Obstructed");
    CHECK(j["result"]["reason"] == "Siu invariance");
    CHECK(j["violations"].empty());
  }
}

TEST_CASE("cli chain honours the search bound flag") {
  Scratch tmp;
  std::string from = tmp.descriptor("dolgachev.desc", qed::elliptic_surface(0, {2, 3}, 1));
  std::string to = tmp.descriptor("ref.desc", qed::elliptic_product(4));

  CHECK(run({"chain", "--from", from, "--to", to}).exit_code == 0);
  CommandResult bounded = run({"chain", "--from", from, "--to", to, "--bound", "1"});
  CHECK(bounded.exit_code == 2);
  CHECK(bounded.out.rfind("Unknown: ", 0) == 0);
}

TEST_CASE("cli verify checks certificates singly and in directory batches") {
  Scratch tmp;
  qed::Certificate good0 = qed::chain_kod0(qed::enriques_descriptor());
  qed::Certificate good1 = qed::chain_kod_minus_infty(qed::ruled_product(0));
  std::string tampered = qed::serialize_certificate(good0);
  REQUIRE(tampered.find("Enriques-cover") != std::string::npos);
  tampered.replace(tampered.find("Enriques-cover"), 14, "Kummer");

  std::string f_good0 = tmp.write("a-good.cert", qed::serialize_certificate(good0));
  std::string f_bad = tmp.write("b-bad.cert", tampered);
  std::string f_good1 = tmp.write("c-good.cert", qed::serialize_certificate(good1));

  SECTION("single good file") {
    CommandResult res = run({"verify", f_good0});
    CHECK(res.exit_code == 0);
    CHECK(res.out == f_good0 + ": ok\n");
    CHECK(res.err.empty());
  }

  SECTION("single tampered file fails with diagnostics on stderr") {
    CommandResult res = run({"verify", f_bad});
    CHECK(res.exit_code == 1);
    CHECK(res.out == f_bad + ": FAIL\n");
    CHECK(res.err.find(f_bad + ": ") != std::string::npos);
  }

  SECTION("unreadable file counts as a violation, not a usage error") {
    CommandResult res = run({"verify", (tmp.dir / "missing.cert").string()});
    CHECK(res.exit_code == 1);
    CHECK(res.err.find("cannot read file") != std::string::npos);
  }

  SECTION("directory batch merges results in sorted order") {
    CommandResult res = run({"verify", "--dir", tmp.dir.string()});
    CHECK(res.exit_code == 1);
    auto ls = lines_of(res.out);
    REQUIRE(ls.size() == 3);
    CHECK(ls[0] == f_good0 + ": ok");
    CHECK(ls[1] == f_bad + ": FAIL");
    CHECK(ls[2] == f_good1 + ": ok");

    CommandResult js = run({"verify", "--dir", tmp.dir.string(), "--json"});
    CHECK(js.exit_code == 1);
    auto j = nlohmann::ordered_json::parse(js.out);
    CHECK(j["status"] == "violation");
    REQUIRE(j["result"].size() == 3);
    CHECK(j["result"][0]["ok"] == true);
    CHECK(j["result"][1]["ok"] == false);
    CHECK(j["result"][1]["violations"].size() > 0);
    CHECK(j["result"][2]["file"] == f_good1);
  }

  SECTION("explicit files keep their input order ahead of --dir entries") {
    CommandResult res = run({"verify", f_good1, f_good0});
    auto ls = lines_of(res.out);
    REQUIRE(ls.size() == 2);
    CHECK(ls[0] == f_good1 + ": ok");
    CHECK(ls[1] == f_good0 + ": ok");
  }
}

TEST_CASE("cli orbifold answers exceptional signatures directly") {
  CommandResult res = run({"orbifold", "--genus", "0", "--mult", "4,6"});
  REQUIRE(res.exit_code == 0);
  CHECK(res.out.find("exceptional: CyclicOfOrder(2)") != std::string::npos);

  CommandResult trivial = run({"orbifold", "--genus", "0", "--mult", "2,3"});
  REQUIRE(trivial.exit_code == 0);
  CHECK(trivial.out.find("exceptional: TrivialGroup") != std::string::npos);

  CommandResult js = run({"orbifold", "--genus", "0", "--mult", "4,6", "--json"});
  auto j = nlohmann::ordered_json::parse(js.out);
  CHECK(j["status"] == "ok");
  CHECK(j["result"]["exceptional"] == "CyclicOfOrder(2)");
}

TEST_CASE("cli orbifold prints a presentation and a verified quotient witness") {
  CommandResult res = run({"orbifold", "--genus", "1", "--mult", "2"});
  REQUIRE(res.exit_code == 0);
  CHECK(res.err.empty());
  CHECK(res.out.find("signature: (1; [2])") != std::string::npos);
  CHECK(res.out.find("generators: a1 b1 x1") != std::string::npos);
  CHECK(res.out.find("relator: x1^2") != std::string::npos);
  CHECK(res.out.find("relator: a1 b1 a1^-1 b1^-1 x1") != std::string::npos);
  CHECK(res.out.find("group: Q8") != std::string::npos);
  CHECK(res.out.find("order: 8") != std::string::npos);
  CHECK(res.out.find("a1 -> (") != std::string::npos);
  CHECK(res.out.find("witness: ok") != std::string::npos);

  CommandResult genus2 = run({"orbifold", "--genus", "2"});
  REQUIRE(genus2.exit_code == 0);
  CHECK(genus2.out.find("group: C1") != std::string::npos);

  CommandResult stuck = run({"orbifold", "--genus", "0", "--mult", "2,3,7"});
  CHECK(stuck.exit_code == 1);
  CHECK(stuck.err.find("NotFoundWithinBound") != std::string::npos);
}

TEST_CASE("cli orbifold search bound comes from flag, then env, then default") {
  ::unsetenv("QED_CERT_SEARCH_BOUND");
  CHECK(run({"orbifold", "--genus", "1", "--mult", "2"}).exit_code == 0);

  ::setenv("QED_CERT_SEARCH_BOUND", "1", 1);
  CommandResult env_limited = run({"orbifold", "--genus", "1", "--mult", "2"});
  CHECK(env_limited.exit_code == 1);
  CHECK(env_limited.err.find("NotFoundWithinBound") != std::string::npos);

  ::setenv("QED_CERT_SEARCH_BOUND", "512", 1);
  CHECK(run({"orbifold", "--genus", "1", "--mult", "2"}).exit_code == 0);
  CHECK(run({"orbifold", "--genus", "1", "--mult", "2", "--bound", "1"}).exit_code == 1);

  ::setenv("QED_CERT_SEARCH_BOUND", "banana", 1);
  CHECK(run({"orbifold", "--genus", "1", "--mult", "2"}).exit_code == 3);

  ::unsetenv("QED_CERT_SEARCH_BOUND");
}

TEST_CASE("cli quaternion construct emits the canonical class tag") {
  CommandResult res = run({"quaternion", "construct", "--d", "5"});
  REQUIRE(res.exit_code == 0);
  std::string expected = qed::quat::class_tag(qed::quat::construct_S(qed::quat::make_context(5))) + "\n";
  CHECK(res.out == expected);

  CommandResult bad = run({"quaternion", "construct", "--d", "4"});
  CHECK(bad.exit_code == 1);
  CHECK(bad.err.empty() == false);
}

TEST_CASE("cli quaternion verify checks a prime list for torsion-freeness") {
  qed::quat::RamificationData data = qed::quat::construct_S(qed::quat::make_context(5));
  std::string primes;
  for (const auto& P : data.primes) {
    if (!primes.empty()) primes += ",";
    primes += std::to_string(P.p) + ":" + std::to_string(P.f) + ":" +
              std::to_string(P.conjugate_index);
  }

  CommandResult res = run({"quaternion", "verify", "--d", "5", "--primes", primes});
  REQUIRE(res.exit_code == 0);
  CHECK(res.out.find("tag: " + qed::quat::class_tag(data)) != std::string::npos);
  CHECK(res.out.find("torsion-free: true") != std::string::npos);
  CHECK(res.out.find("level ") != std::string::npos);

  CommandResult odd = run({"quaternion", "verify", "--d", "5", "--primes", "11:1"});
  CHECK(odd.exit_code == 1);
  CHECK(odd.err.find("odd cardinality") != std::string::npos);

  CommandResult garbage = run({"quaternion", "verify", "--d", "5", "--primes", "eleven"});
  CHECK(garbage.exit_code == 3);

  SECTION("json mode reports per-level witnesses") {
    CommandResult js = run({"quaternion", "verify", "--d", "5", "--primes", primes, "--json"});
    REQUIRE(js.exit_code == 0);
    auto j = nlohmann::ordered_json::parse(js.out);
    CHECK(j["status"] == "ok");
    CHECK(j["result"]["torsion_free"] == true);
    CHECK(j["result"]["levels"].size() ==
          qed::quat::quadratic_torsion_levels(qed::quat::make_context(5)).size());
  }
}

TEST_CASE("cli quaternion enumerate lists at least ten distinct tags for d=5") {
  CommandResult res = run({"quaternion", "enumerate", "--d", "5", "--bound", "100"});
  REQUIRE(res.exit_code == 0);
  auto ls = lines_of(res.out);
  CHECK(ls.size() >= 10);
  std::set<std::string> distinct(ls.begin(), ls.end());
  CHECK(distinct.size() == ls.size());
  for (const auto& line : ls) CHECK(line.rfind("d=5 S={", 0) == 0);

  CommandResult js = run({"quaternion", "enumerate", "--d", "5", "--bound", "100", "--json"});
  REQUIRE(js.exit_code == 0);
  auto j = nlohmann::ordered_json::parse(js.out);
  CHECK(j["status"] == "ok");
  CHECK(j["result"].size() == ls.size());
}

TEST_CASE("cli kodaira verify accepts a reference group data file") {
  Scratch tmp;
  qed::kod::KodairaGroupData s0 = qed::kod::s0_data();
  std::ostringstream body;
  body << "# reference affine group data\n\n";
  body << "m = " << s0.m << "\n";
  for (int i = 0; i < 4; ++i) {
    body << "alpha" << (i + 1) << " = " << s0.alpha[static_cast<size_t>(i)].to_string() << "\n";
    body << "beta" << (i + 1) << "  = " << s0.beta[static_cast<size_t>(i)].to_string() << "\n";
  }
  std::string file = tmp.write("s0.data", body.str());

  CommandResult res = run({"kodaira", "verify", "--data", file});
  REQUIRE(res.exit_code == 0);
  CHECK(res.out.find("relations: ok") != std::string::npos);
  CHECK(res.out.find("conjugation-invariant: true") != std::string::npos);

  SECTION("missing and unknown keys are violations") {
    std::string sparse = tmp.write("sparse.data", "m = 1\n");
    CommandResult bad = run({"kodaira", "verify", "--data", sparse});
    CHECK(bad.exit_code == 1);
    CHECK(bad.err.find("missing field: alpha1") != std::string::npos);

    std::string junk = tmp.write("junk.data", body.str() + "alpha9 = 1\n");
    CommandResult unknown = run({"kodaira", "verify", "--data", junk});
    CHECK(unknown.exit_code == 1);
    CHECK(unknown.err.find("unknown key") != std::string::npos);
  }

  SECTION("degenerate data fails the structural checks") {
    qed::kod::KodairaGroupData zeroed = s0;
    zeroed.beta[1] = qed::ExactComplex::zero();
    std::ostringstream zb;
    zb << "m = " << zeroed.m << "\n";
    for (int i = 0; i < 4; ++i) {
      zb << "alpha" << (i + 1) << " = " << zeroed.alpha[static_cast<size_t>(i)].to_string()
         << "\n";
      zb << "beta" << (i + 1) << " = " << zeroed.beta[static_cast<size_t>(i)].to_string() << "\n";
    }
    std::string file2 = tmp.write("degenerate.data", zb.str());
    CommandResult bad = run({"kodaira", "verify", "--data", file2});
    CHECK(bad.exit_code == 1);
    CHECK(!bad.err.empty());
  }
}

TEST_CASE("cli kodaira fixed-point classifies affine automorphisms") {
  CommandResult empty = run({"kodaira", "fixed-point", "--sigma", "1", "--h0", "1"});
  REQUIRE(empty.exit_code == 0);
  CHECK(empty.out == "fixed-point set: empty\n");

  CommandResult line = run({"kodaira", "fixed-point", "--sigma=-1"});
  REQUIRE(line.exit_code == 0);
  CHECK(line.out == "fixed-point set: codimension-one line\n");

  CommandResult whole_plane = run({"kodaira", "fixed-point", "--sigma", "1"});
  REQUIRE(whole_plane.exit_code == 0);
  CHECK(whole_plane.out == "fixed-point set: all of C^2\n");

  CommandResult translated = run({"kodaira", "fixed-point", "--sigma", "I", "--h2", "1"});
  REQUIRE(translated.exit_code == 0);
  CHECK(translated.out == "fixed-point set: empty\n");

  CommandResult not_root = run({"kodaira", "fixed-point", "--sigma", "2"});
  CHECK(not_root.exit_code == 1);
  CHECK(not_root.err.find("InvariantViolation") != std::string::npos);

  CommandResult unparseable = run({"kodaira", "fixed-point", "--sigma", "wibble("});
  CHECK(unparseable.exit_code == 3);

  CommandResult js = run({"kodaira", "fixed-point", "--sigma=-1", "--json"});
  auto j = nlohmann::ordered_json::parse(js.out);
  CHECK(j["status"] == "ok");
  CHECK(j["result"]["fixed_point_set"] == "codimension-one line");
}

TEST_CASE("cli tchain prints the degeneration chain") {
  CommandResult res = run({"tchain", "--n", "2", "--d", "2"});
  REQUIRE(res.exit_code == 0);
  CHECK(res.err.empty());
  CHECK(res.out.find("V2_2") != std::string::npos);
  CHECK(res.out.find("[cone-degeneration]") != std::string::npos);
  CHECK(res.out.find("[vertex-blowup]") != std::string::npos);
  CHECK(res.out.find("[product-collapse]") != std::string::npos);
  auto ls = lines_of(res.out);
  REQUIRE(!ls.empty());
  CHECK(ls.back() == "P2");

  CommandResult js = run({"tchain", "--n", "3", "--d", "4", "--json"});
  REQUIRE(js.exit_code == 0);
  auto j = nlohmann::ordered_json::parse(js.out);
  CHECK(j["status"] == "ok");
  CHECK(j["result"]["length"] == 9);
  CHECK(j["result"]["nodes"][0] == "V3_4");
  CHECK(j["result"]["nodes"][8] == "P3");
}
