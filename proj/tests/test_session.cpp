#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "closurelab/session.hpp"

using namespace closurelab;

namespace {

std::string slurp(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  REQUIRE(in.good());
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

} // namespace

TEST_CASE("parsing the canonical example") {
  SessionFile s = parseSession(
      "ring R = F32003[x,y] / (x^2*y); ideal I = (x+y); module M1 = coker [[y]]; "
      "check rational R M1 sop(x+y);");
  REQUIRE(s.rings.size() == 1);
  CHECK(s.rings[0].name == "R");
  CHECK(s.rings[0].ring->ambient()->characteristic() == 32003);
  CHECK(s.rings[0].ring->description() == "F32003[x,y]/(x^2*y)");
  REQUIRE(s.ideals.size() == 1);
  CHECK(s.ideals[0].value.rGenerators().size() == 1);
  REQUIRE(s.modules.size() == 1);
  CHECK(s.modules[0].spec.kind() == ClosureSpec::Kind::ModuleClosurePresented);
  REQUIRE(s.commands.size() == 1);
  CHECK(s.commands[0].kind == Command::Kind::Rational);
  CHECK(s.commands[0].ringName == "R");
  CHECK(s.commands[0].specName == "M1");
  REQUIRE(s.commands[0].sop.size() == 1);
  CHECK(s.commands[0].sop[0].str() == "x + y");
}

TEST_CASE("empty file parses to the empty session") {
  SessionFile s = parseSession("");
  CHECK(s.rings.empty());
  CHECK(s.commands.empty());
  CHECK(runSession(s, {}).empty());
}

TEST_CASE("syntax and semantic errors carry 1-based locations") {
  try {
    parseSession("ideal I = (x+);");
    FAIL("expected SessionError");
  } catch (const SessionError& e) {
    CHECK(e.line == 1); // reported on the offending line even without a ring
  }
  try {
    parseSession("ring R = Q[x,y];\nideal I = (x+);");
    FAIL("expected SessionError");
  } catch (const SessionError& e) {
    CHECK(e.line == 2);
    CHECK(e.column >= 13); // at or just after the dangling '+'
  }
  // ideal declared before any ring
  CHECK_THROWS_AS(parseSession("ideal I = (1);"), SessionError);
  // non-prime characteristic
  try {
    parseSession("ring R = F6[x];");
    FAIL("expected SessionError");
  } catch (const SessionError& e) {
    CHECK(e.message.find("non-prime") != std::string::npos);
  }
  // unknown field spec
  CHECK_THROWS_AS(parseSession("ring R = GF4[x];"), SessionError);
  // matrix rows of unequal length
  CHECK_THROWS_AS(parseSession("ring R = Q[x,y]; module M = coker [[x, y], [x]];"),
                  SessionError);
  // undefined names are parse-time errors
  try {
    parseSession("ring R = Q[x,y];\nideal I = (x);\nclosure I under M9;");
    FAIL("expected SessionError");
  } catch (const SessionError& e) {
    CHECK(e.line == 3);
    CHECK(e.message.find("M9") != std::string::npos);
  }
  CHECK_THROWS_AS(parseSession("ring R = Q[x]; closure Z under trivial;"), SessionError);
  // duplicate names
  CHECK_THROWS_AS(parseSession("ring R = Q[x]; ideal R = (x);"), SessionError);
  // missing required argument
  CHECK_THROWS_AS(parseSession("ring R = Q[x,y]; check colon-capturing trivial(R) sop(x, y);"),
                  SessionError);
  // unknown reproduction name
  CHECK_THROWS_AS(parseSession("reproduce nonesuch;"), SessionError);
  // trailing garbage
  CHECK_THROWS_AS(parseSession("ring R = Q[x]; bogus;"), SessionError);
}

TEST_CASE("parse-render-parse is the identity on the fixture corpus") {
  std::filesystem::path dir(SESSION_FIXTURE_DIR);
  int count = 0;
  for (const auto& entry : std::filesystem::directory_iterator(dir)) {
    if (entry.path().extension() != ".clab") continue;
    INFO("fixture: " << entry.path().filename().string());
    SessionFile once = parseSession(slurp(entry.path()));
    std::string rendered = renderSession(once);
    SessionFile twice = parseSession(rendered);
    CHECK(renderSession(twice) == rendered);
    ++count;
  }
  CHECK(count >= 20);
}

TEST_CASE("closure under the trivial spec echoes the ideal") {
  SessionFile s = parseSession("ring R = Q[x,y]; ideal I = (x^2, x*y); closure I under trivial;");
  Report r = runCommand(s, s.commands[0], {});
  CHECK(r.verdict == "computed");
  REQUIRE(!r.notes.empty());
  CHECK(r.notes[0] == "closure = (x*y, x^2)"); // reduced generators, ascending order
  CHECK(r.notes[1] == "closed: true");
}

TEST_CASE("reports are byte-identical across runs given the seed") {
  SessionFile s = parseSession(
      "ring R = F32003[x,y] / (y^2); module B = ideal (x, y); axioms B samples=8 seed=5;");
  Report a = runCommand(s, s.commands[0], {});
  Report b = runCommand(s, s.commands[0], {});
  CHECK(emitReport(a, ReportFormat::Json) == emitReport(b, ReportFormat::Json));
  CHECK(emitReport(a, ReportFormat::Text) == emitReport(b, ReportFormat::Text));
  CHECK(a.verdict == "pass");
}

TEST_CASE("different seeds sample different ideals but still pass") {
  SessionFile s = parseSession(
      "ring R = F32003[x,y] / (y^2); module B = ideal (x, y); axioms B samples=6;");
  RunOptions optA;
  optA.seed = 1;
  RunOptions optB;
  optB.seed = 2;
  Report a = runCommand(s, s.commands[0], optA);
  Report b = runCommand(s, s.commands[0], optB);
  CHECK(a.verdict == "pass");
  CHECK(b.verdict == "pass");
}

TEST_CASE("exit status contract") {
  Report pass;
  pass.verdict = "pass";
  Report computed;
  computed.verdict = "computed";
  Report fail;
  fail.verdict = "fail";
  CHECK(exitStatusFor({pass, computed}) == 0);
  CHECK(exitStatusFor({pass, fail}) == 1);
  CHECK(exitStatusFor({}) == 0);
}

TEST_CASE("fixture sessions run end to end") {
  std::filesystem::path dir(SESSION_FIXTURE_DIR);
  for (const auto& entry : std::filesystem::directory_iterator(dir)) {
    if (entry.path().extension() != ".clab") continue;
    INFO("fixture: " << entry.path().filename().string());
    SessionFile session = parseSession(slurp(entry.path()));
    std::vector<Report> reports = runSession(session, {});
    for (const Report& r : reports) {
      CHECK((r.verdict == "pass" || r.verdict == "fail" || r.verdict == "computed"));
      // every emitted report serializes in both formats
      CHECK(!emitReport(r, ReportFormat::Text).empty());
      CHECK(!emitReport(r, ReportFormat::Json).empty());
    }
  }
}

TEST_CASE("mutated sessions never crash the parser") {
  // Random single-byte mutations of valid fixtures must either parse or
  // raise a located SessionError; nothing else may escape.
  std::filesystem::path dir(SESSION_FIXTURE_DIR);
  std::vector<std::string> corpus;
  for (const auto& entry : std::filesystem::directory_iterator(dir)) {
    if (entry.path().extension() != ".clab") continue;
    std::string text = slurp(entry.path());
    if (!text.empty()) corpus.push_back(std::move(text));
  }
  REQUIRE(!corpus.empty());
  const std::string alphabet = "()[]{};=,+-*^/ abcxyzRIMB019_#\n";
  SplitMix64 rng(8080);
  int parsed = 0, rejected = 0;
  for (int trial = 0; trial < 400; ++trial) {
    std::string text = corpus[rng.below(corpus.size())];
    size_t pos = rng.below(text.size());
    text[pos] = alphabet[rng.below(alphabet.size())];
    try {
      SessionFile s = parseSession(text);
      renderSession(s);
      ++parsed;
    } catch (const SessionError& e) {
      CHECK(e.line >= 1);
      CHECK(e.column >= 1);
      ++rejected;
    }
  }
  CHECK(parsed + rejected == 400);
  CHECK(rejected > 0); // mutations do break sessions
}

TEST_CASE("the n=inf interpretation is surfaced as an assumption") {
  SessionFile s = parseSession("reproduce y2 n=inf;");
  Report r = runCommand(s, s.commands[0], {});
  CHECK(r.verdict == "pass");
  REQUIRE(!r.bundles.empty());
  bool flagged = false;
  for (const std::string& note : r.bundles[0].assumptions)
    flagged = flagged || note.find("interpreted as B = (y)") != std::string::npos;
  CHECK(flagged);
}

TEST_CASE("rational command reports the power family when asked") {
  SessionFile s = parseSession(
      "ring R = F32003[x,y] / (y^2); module B = ideal (x, y); check rational R B sop(x) tmax=2;");
  Report r = runCommand(s, s.commands[0], {});
  CHECK(r.verdict == "fail"); // the parameter ideal is not closed here
  bool noted = false;
  for (const std::string& note : r.notes)
    noted = noted || note.find("power family closed: t=1:false t=2:false") != std::string::npos;
  CHECK(noted);
}
