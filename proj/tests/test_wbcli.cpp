#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "povswb/order/analysis.hpp"
#include "povswb/wbcli/commands.hpp"
#include "povswb/wbcli/document.hpp"
#include "support/generators.hpp"
#include "support/seq_generators.hpp"

using namespace povswb;
using namespace povswb::wbcli;

namespace {

std::string slurp(const std::filesystem::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

std::vector<std::filesystem::path> corpus_files() {
  std::vector<std::filesystem::path> out;
  for (const auto& e : std::filesystem::directory_iterator(POVSWB_CORPUS_DIR))
    if (e.path().extension() == ".povs") out.push_back(e.path());
  std::sort(out.begin(), out.end());
  return out;
}

Outcome run_on(const std::string& command, const std::string& text, const std::string& format = "json") {
  Options o;
  o.command = command;
  o.file_path = "inline.povs";
  o.file_text = text;
  o.format = format;
  return run(o);
}

// Line and column of the parse error raised by text.
std::pair<std::size_t, std::size_t> error_at(const std::string& text) {
  try {
    parse(text);
  } catch (const ParseError& e) {
    return {e.line(), e.column()};
  }
  return {0, 0};
}

std::string error_message(const std::string& text) {
  try {
    parse(text);
  } catch (const ParseError& e) {
    return e.message();
  }
  return "";
}

}  // namespace

TEST_CASE("parse reads the lexicographic plane") {
  const auto f = parse("space X dim 2\nwedge X.pos := (x1 > 0) | (x1 = 0 & x2 >= 0)");
  REQUIRE(f.spaces.size() == 1);
  CHECK(f.spaces[0].dim == 2);
  CHECK(semilin::set_equal(f.spaces[0].wedge, order::lexicographic(2).positive()));
}

TEST_CASE("& binds tighter than |") {
  const auto f = parse("space X dim 2\nwedge X.pos := x1 > 0 | x1 = 0 & x2 >= 0");
  CHECK(semilin::set_equal(f.spaces[0].wedge, order::lexicographic(2).positive()));
  const auto g = parse("space X dim 2\nwedge X.pos := (x1 > 0 | x1 = 0) & x2 >= 0");
  CHECK(semilin::set_equal(g.spaces[0].wedge, order::orthant(2).positive()));
}

TEST_CASE("atoms may carry terms on both sides and rational coefficients") {
  const auto f = parse("space X dim 2\nwedge X.pos := 2*x1 >= 1/2 x2 & x2 >= 0\nset S in X := x1 + x2 <= 3/2");
  const auto& w = f.spaces[0].wedge;
  CHECK(w.contains({Rational(1), Rational(4)}));
  CHECK_FALSE(w.contains({Rational(1), Rational(5)}));
  CHECK(f.sets[0].set.contains({Rational(1), Rational(1, 2)}));
  CHECK_FALSE(f.sets[0].set.contains({Rational(1), Rational(1)}));
}

TEST_CASE("parse errors carry positions") {
  CHECK(error_message("wedge W := (x1 > 1)").find("non-homogeneous") != std::string::npos);
  CHECK(error_at("wedge W := (x1 > 1)") == std::pair<std::size_t, std::size_t>(1, 13));
  const std::string undeclared = "space X dim 2\nwedge X.pos := x1 >= 0\nmap f : X -> Y matrix [[1,0]]";
  CHECK(error_message(undeclared) == "unknown identifier 'Y'");
  CHECK(error_at(undeclared) == std::pair<std::size_t, std::size_t>(3, 14));
  CHECK(error_message("space X dim 1\nwedge X.pos := x2 >= 0").find("dimension mismatch") != std::string::npos);
  CHECK(error_message("space X dim 2\nwedge X.pos := x1 >= 0\nvector v in X := [1]").find("dimension mismatch") !=
        std::string::npos);
  CHECK(error_message("space X dim 1\nwedge X.pos := x1 >= 0\nmap f : X -> X matrix [[1, 2]]")
            .find("dimension mismatch") != std::string::npos);
  CHECK(error_at("space X dim 2\nwedge X.pos := x1 >= 0 &\n") == std::pair<std::size_t, std::size_t>(2, 25));
  CHECK(error_message("space X dim 2").find("no wedge") != std::string::npos);
  CHECK(error_message("space X dim 1\nspace X dim 2").find("duplicate") != std::string::npos);
  CHECK(error_message("space X dim 1\nwedge X.pos := y >= 0").find("unknown identifier") != std::string::npos);
  CHECK(error_message("space X dim 1\nwedge X.pos := x1 >= 0\nexpect Q alpha = 0").find("unknown identifier") !=
        std::string::npos);
  CHECK(error_at("space X dim 1\nwedge X.pos := x1 >= 0 $") == std::pair<std::size_t, std::size_t>(2, 24));
}

TEST_CASE("sets need not be homogeneous, wedges must be") {
  CHECK_NOTHROW(parse("space X dim 1\nwedge X.pos := x1 >= 0\nset S in X := x1 >= 1"));
  CHECK_THROWS_AS(parse("space X dim 1\nwedge X.pos := x1 >= 1"), ParseError);
}

TEST_CASE("continuation lines and comments") {
  const auto f = parse("# header\nspace X dim 2  # trailing\nwedge X.pos := (x1 > 0)\n  | (x1 = 0\n     & x2 >= 0)\n");
  CHECK(semilin::set_equal(f.spaces[0].wedge, order::lexicographic(2).positive()));
}

TEST_CASE("printed sets parse back to the same set") {
  gen::Rng rng(88);
  for (int i = 0; i < 60; ++i) {
    const std::size_t dim = 1 + static_cast<std::size_t>(i % 3);
    const auto s = semilin::normalize(gen::set(rng, dim, 3, 3, 3, false));
    const std::string text = "space X dim " + std::to_string(dim) + "\nwedge X.pos := true\nset S in X := " + to_dsl(s);
    INFO(text);
    const auto f = parse(text);
    CHECK(semilin::set_equal(f.sets[0].set, s));
  }
}

TEST_CASE("printed sequences parse back to the same sequence") {
  gen::Rng rng(89);
  for (int i = 0; i < 100; ++i) {
    const auto s = gen::sequence(rng, i % 2 == 0);
    INFO(s.to_string());
    const auto back = parse_sequence(s.to_string());
    CHECK(back.to_string() == s.to_string());
    for (seq::Index k = 1; k <= 12; ++k) CHECK((back - s).sign_at(k) == 0);
  }
  CHECK_THROWS_AS(parse_sequence("(3/2)^k"), ParseError);
  CHECK_THROWS_AS(parse_sequence("k^(-0)"), ParseError);
  CHECK_THROWS_AS(parse_sequence("delta(0)"), ParseError);
}

TEST_CASE("every corpus file passes check with all expectations met") {
  const auto files = corpus_files();
  CHECK(files.size() >= 8);
  for (const auto& p : files) {
    INFO(p.string());
    const Outcome out = run_on("check", slurp(p));
    CHECK(out.exit_code == kOk);
    for (const auto& e : out.report["results"]["expectations"]) CHECK(e["ok"] == true);
    CHECK(out.report["violations"].empty());
  }
}

TEST_CASE("failed expectations exit with a property violation") {
  const Outcome out = run_on("check", "space X dim 2\nwedge X.pos := x1 >= 0 & x2 >= 0\nexpect X alpha = 1");
  CHECK(out.exit_code == kPropertyViolation);
  CHECK(out.report["results"]["expectations"][0]["actual"] == "0");
  const Outcome bad = run_on("check", "space X dim 2\nwedge X.pos := (x1 >= 0 & x2 = 0) | (x1 = 0 & x2 >= 0)");
  CHECK(bad.exit_code == kPropertyViolation);
  CHECK(bad.report["results"]["spaces"][0]["wedge"] == false);
}

TEST_CASE("types and closure on the named examples") {
  const Outcome lex = run_on("types", "space X dim 2\nwedge X.pos := (x1 > 0) | (x1 = 0 & x2 >= 0)");
  CHECK(lex.report["results"][0]["alpha"] == 1);
  CHECK(lex.report["results"][0]["lambda"] == 1);
  const Outcome half = run_on("closure", "space H dim 2\nwedge H.pos := (x2 > 0) | (x1 = 0 & x2 = 0)");
  const auto& h = half.report["results"]["spaces"][0];
  CHECK(h["steps"] == 1);
  REQUIRE(h["iterates"].size() == 2);
  CHECK(h["iterates"][1] == "(x2 >= 0)");
  const Outcome ideals = run_on("ideals", "space X dim 2\nwedge X.pos := (x1 > 0) | (x1 = 0 & x2 >= 0)");
  const auto& tower = ideals.report["results"][0]["tower"];
  REQUIRE(tower.size() == 3);
  CHECK(tower[1]["basis"] == Json::parse(R"([["0/1", "1/1"]])"));
  CHECK(ideals.report["results"][0]["lambda"] == 1);
}

TEST_CASE("archimedeanize emits a document that re-parses to an Archimedean quotient") {
  for (const auto& p : corpus_files()) {
    const std::string text = slurp(p);
    if (parse(text).spaces.empty()) continue;
    INFO(p.string());
    const Outcome out = run_on("archimedeanize", text, "text");
    if (out.exit_code != kOk) {
      // Only deliberately broken wedges may fail.
      CHECK(out.exit_code == kPropertyViolation);
      CHECK(text.find("wedge = false") != std::string::npos);
      continue;
    }
    const Outcome again = run_on("check", out.rendered);
    CHECK(again.exit_code == kOk);
    std::size_t quotients = 0;
    for (const auto& s : again.report["results"]["spaces"]) {
      const std::string name = s["name"];
      if (name.size() < 5 || name.substr(name.size() - 5) != "_arch") continue;
      ++quotients;
      CHECK(s["archimedean"] == true);
      CHECK(s["cone"] == true);
    }
    CHECK(quotients == parse(text).spaces.size());
  }
}

TEST_CASE("archimedeanize on the quadrant is the identity quotient") {
  const Outcome out = run_on("archimedeanize", "space P dim 2\nwedge P.pos := x1 >= 0 & x2 >= 0");
  const auto& r = out.report["results"][0];
  CHECK(r["kernel"].empty());
  CHECK(r["projection"] == Json::parse(R"([["1/1", "0/1"], ["0/1", "1/1"]])"));
  CHECK(r["quotient_wedge"] == "(x1 >= 0 & x2 >= 0)");
}

TEST_CASE("factor reports the factorization or the violated hypothesis") {
  const std::string text =
      "space L dim 2\nwedge L.pos := (x1 > 0) | (x1 = 0 & x2 >= 0)\nspace H dim 2\n"
      "wedge H.pos := (x2 > 0) | (x1 = 0 & x2 = 0)\nspace R dim 1\nwedge R.pos := x1 >= 0\n"
      "map first : L -> R matrix [[1, 0]]\nmap across : H -> R matrix [[1, 0]]\nmap zero : L -> R matrix [[0, 0]]";
  Options o;
  o.command = "factor";
  o.file_text = text;
  o.map = "first";
  const Outcome ok = run(o);
  CHECK(ok.exit_code == kOk);
  CHECK(ok.report["results"]["factor"] == Json::parse(R"([["1/1"]])"));
  CHECK(ok.report["results"]["identity_holds"] == true);
  o.map = "zero";
  CHECK(run(o).report["results"]["factor"] == Json::parse(R"([["0/1"]])"));
  o.map = "across";
  const Outcome bad = run(o);
  CHECK(bad.exit_code == kPropertyViolation);
  CHECK(bad.report["results"]["error"] == "the map is not positive");
  o.map = "missing";
  CHECK(run(o).exit_code == kUsageError);
}

TEST_CASE("seq reports regulators and the constant sequence") {
  const Outcome out = run_on("seq", "seq a in c0 := (1/2)^k\nseq b in c0 := k^(-1)\nseq one in linf := 1");
  CHECK(out.exit_code == kOk);
  const auto& s = out.report["results"]["sequences"];
  CHECK(s[0]["witness"]["regulator"] == "(3/4)^k");
  CHECK(s[1]["witness"]["regulator"] == "k^(-1/2)");
  CHECK(s[2]["infinitesimal"] == false);
  CHECK(out.report["results"]["c0_infinitesimal_mod_c00"] == 2);
}

TEST_CASE("reports embed version and input, and repeat byte for byte") {
  const std::string text = slurp(std::filesystem::path(POVSWB_CORPUS_DIR) / "lex_plane.povs");
  const Outcome a = run_on("check", text, "text"), b = run_on("check", text, "text");
  CHECK(a.rendered == b.rendered);
  const Outcome j = run_on("check", text);
  CHECK(j.report["version"] == POVSWB_VERSION);
  CHECK(j.report["input"]["text"] == text);
  CHECK(j.rendered == run_on("check", text).rendered);
}

TEST_CASE("search") {
  Options o;
  o.command = "search";
  o.format = "json";
  o.cases = 0;
  const Outcome empty = run(o);
  CHECK(empty.exit_code == kOk);
  CHECK(empty.report["results"]["table"].empty());

  o.dim = 1;
  o.cases = 50;
  o.seed = 3;
  const Outcome line = run(o);
  CHECK(line.exit_code == kOk);
  std::size_t total = 0;
  for (const auto& row : line.report["results"]["table"]) {
    CHECK(row["alpha"].get<std::size_t>() <= 1);
    total += row["count"].get<std::size_t>();
  }
  CHECK(total == 50);
  CHECK(run(o).rendered == line.rendered);

  o.dim = 5;
  CHECK(run(o).exit_code == kCapacityError);
}

TEST_CASE("search counterexample documents parse and reproduce their types") {
  Options o;
  o.command = "search";
  o.format = "json";
  o.dim = 2;
  o.cases = 30;
  o.seed = 42;
  const Outcome out = run(o);
  REQUIRE(out.exit_code == kOk);
  const auto& cases = out.report["results"]["cases"];
  for (const auto& [name, ce] : out.report["results"]["counterexamples"].items()) {
    for (const auto& doc : ce["documents"]) {
      const auto f = parse(doc.get<std::string>());
      REQUIRE(f.spaces.size() == 1);
      const std::size_t index = std::stoul(f.spaces[0].name.substr(1));
      const auto r = order::analyze(f.space(f.spaces[0].name));
      CHECK(r.alpha_type == std::optional<std::size_t>(cases[index]["alpha"].get<std::size_t>()));
      CHECK(r.lambda_type == std::optional<std::size_t>(cases[index]["lambda"].get<std::size_t>()));
    }
  }
}

TEST_CASE("bad options are usage errors") {
  CHECK(run_on("nonsense", "").exit_code == kUsageError);
  CHECK(run_on("check", "", "yaml").exit_code == kUsageError);
  CHECK(run_on("check", "space X dim 1\nwedge X.pos := x1 >= 1").exit_code == kUsageError);
}
