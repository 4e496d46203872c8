#include "closurelab/session.hpp"

#include <algorithm>
#include <cctype>
#include <stdexcept>

namespace closurelab {

SessionError::SessionError(std::string msg, int errLine, int errColumn)
    : std::runtime_error(msg + " (line " + std::to_string(errLine) + ", column " +
                         std::to_string(errColumn) + ")"),
      message(std::move(msg)), line(errLine), column(errColumn) {}

const RingDecl* SessionFile::findRing(std::string_view name) const {
  for (const RingDecl& r : rings)
    if (r.name == name) return &r;
  return nullptr;
}

const IdealDecl* SessionFile::findIdeal(std::string_view name) const {
  for (const IdealDecl& d : ideals)
    if (d.name == name) return &d;
  return nullptr;
}

const ModuleDecl* SessionFile::findModule(std::string_view name) const {
  for (const ModuleDecl& d : modules)
    if (d.name == name) return &d;
  return nullptr;
}

// ---------------------------------------------------------------------------
// Parsing

namespace {

const char* const kReproduceNames[] = {"veronese", "x2y", "y2", "xn_y2", "ade", "all"};

struct SessionParser {
  TextCursor c;
  SessionFile out;

  [[noreturn]] void fail(const std::string& msg, int line, int column) const {
    throw SessionError{msg, line, column};
  }
  [[noreturn]] void failHere(const std::string& msg) { throw SessionError{msg, c.line, c.column}; }

  char peek() {
    c.skipSpace();
    return c.done() ? '\0' : c.current();
  }

  bool accept(char ch) {
    if (peek() == ch) {
      c.advance();
      return true;
    }
    return false;
  }

  void expect(char ch) {
    if (!accept(ch)) failHere(std::string("expected '") + ch + "'");
  }

  bool identAhead() {
    char ch = peek();
    return std::isalpha(static_cast<unsigned char>(ch)) || ch == '_';
  }

  std::string parseIdent() {
    if (!identAhead()) failHere("expected identifier");
    std::string name;
    while (!c.done() &&
           (std::isalnum(static_cast<unsigned char>(c.current())) || c.current() == '_')) {
      name += c.current();
      c.advance();
    }
    return name;
  }

  // Command keywords may contain hyphens (colon-capturing, strong-cc-a, ...).
  std::string parseKeyword() {
    std::string word = parseIdent();
    while (peek() == '-') {
      c.advance();
      word += "-" + parseIdent();
    }
    return word;
  }

  long parseInt() {
    c.skipSpace();
    std::string digits;
    while (!c.done() && std::isdigit(static_cast<unsigned char>(c.current()))) {
      digits += c.current();
      c.advance();
    }
    if (digits.empty()) failHere("expected integer");
    return std::stol(digits);
  }

  Polynomial parsePoly(const RingPtr& ring) {
    try {
      return parsePolynomialAt(ring, c);
    } catch (const ParseError& e) {
      throw SessionError{e.message, e.line, e.column};
    }
  }

  std::vector<Polynomial> parsePolyList(const RingPtr& ring) {
    std::vector<Polynomial> polys;
    expect('(');
    if (accept(')')) return polys;
    polys.push_back(parsePoly(ring));
    while (accept(',')) polys.push_back(parsePoly(ring));
    expect(')');
    return polys;
  }

  const RingDecl& currentRing(int line, int column) {
    if (out.rings.empty()) fail("no ring declared yet", line, column);
    return out.rings.back();
  }

  void requireFresh(const std::string& name, int line, int column) {
    if (out.findRing(name) || out.findIdeal(name) || out.findModule(name))
      fail("name '" + name + "' already declared", line, column);
  }

  void parseRingDecl() {
    int line = c.line, column = c.column;
    std::string name = parseIdent();
    requireFresh(name, line, column);
    expect('=');
    int fieldLine = c.line, fieldColumn = c.column;
    std::string field = parseIdent();
    std::uint32_t p = 0;
    if (field == "Q") {
      p = 0;
    } else if (field.size() > 1 && field[0] == 'F' &&
               std::all_of(field.begin() + 1, field.end(),
                           [](char ch) { return std::isdigit(static_cast<unsigned char>(ch)); })) {
      long v = 0;
      try {
        v = std::stol(field.substr(1));
      } catch (const std::out_of_range&) {
        fail("characteristic out of range", fieldLine, fieldColumn);
      }
      if (v < 2 || v >= (1L << 31) || !isPrime(static_cast<std::uint32_t>(v)))
        fail("non-prime characteristic " + field.substr(1), fieldLine, fieldColumn);
      p = static_cast<std::uint32_t>(v);
    } else {
      fail("unknown field spec '" + field + "' (expected Q or F<prime>)", fieldLine, fieldColumn);
    }
    expect('[');
    std::vector<std::string> vars;
    vars.push_back(parseIdent());
    while (accept(',')) vars.push_back(parseIdent());
    expect(']');
    RingPtr ambient;
    try {
      ambient = PolyRing::make(p, vars);
    } catch (const std::invalid_argument& e) {
      fail(e.what(), line, column);
    }
    std::vector<Polynomial> relations;
    if (accept('/')) relations = parsePolyList(ambient);
    expect(';');
    QuotientRingPtr ring;
    try {
      ring = QuotientRing::make(ambient, Ideal::fromGenerators(ambient, relations));
    } catch (const std::invalid_argument& e) {
      fail(e.what(), line, column);
    }
    out.rings.push_back(RingDecl{name, ring});
  }

  void parseIdealDecl() {
    int line = c.line, column = c.column;
    std::string name = parseIdent();
    requireFresh(name, line, column);
    expect('=');
    const RingDecl& ring = currentRing(line, column);
    std::vector<Polynomial> gens = parsePolyList(ring.ring->ambient());
    expect(';');
    out.ideals.push_back(IdealDecl{name, ring.name,
                                   QuotientIdeal::fromPolynomials(ring.ring, std::move(gens))});
  }

  void parseModuleDecl() {
    int line = c.line, column = c.column;
    std::string name = parseIdent();
    requireFresh(name, line, column);
    expect('=');
    const RingDecl& ring = currentRing(line, column);
    int kwLine = c.line, kwColumn = c.column;
    std::string kw = parseIdent();
    if (kw == "coker") {
      int matLine = c.line, matColumn = c.column;
      expect('[');
      std::vector<std::vector<Polynomial>> rows;
      do {
        expect('[');
        std::vector<Polynomial> row;
        if (peek() != ']') {
          row.push_back(parsePoly(ring.ring->ambient()));
          while (accept(',')) row.push_back(parsePoly(ring.ring->ambient()));
        }
        expect(']');
        rows.push_back(std::move(row));
      } while (accept(','));
      expect(']');
      expect(';');
      for (const auto& row : rows)
        if (row.size() != rows[0].size())
          fail("malformed matrix: rows of unequal length", matLine, matColumn);
      try {
        PresentedModule B = PresentedModule::fromMatrix(ring.ring, std::move(rows));
        out.modules.push_back(
            ModuleDecl{name, ring.name, ClosureSpec::moduleClosurePresented(B, "cl_" + name)});
      } catch (const std::invalid_argument& e) {
        fail(e.what(), matLine, matColumn);
      }
    } else if (kw == "ideal") {
      std::vector<Polynomial> gens = parsePolyList(ring.ring->ambient());
      expect(';');
      QuotientIdeal B = QuotientIdeal::fromPolynomials(ring.ring, std::move(gens));
      out.modules.push_back(
          ModuleDecl{name, ring.name, ClosureSpec::moduleClosureIdeal(B, "cl_" + name)});
    } else {
      fail("expected 'coker' or 'ideal'", kwLine, kwColumn);
    }
  }

  // spec-ref := "trivial" [ "(" RING ")" ] | MODULE. Returns the spec name
  // ("trivial" or module name) and binds cmd.ringName. The ring qualifier is
  // disallowed where a parenthesized list follows (test-ideal).
  void parseSpecRef(Command& cmd, bool needRing, bool allowRingQualifier = true) {
    int line = c.line, column = c.column;
    std::string name = parseIdent();
    if (name == "trivial") {
      cmd.specName = "trivial";
      if (allowRingQualifier && accept('(')) {
        int rl = c.line, rc = c.column;
        std::string ringName = parseIdent();
        expect(')');
        if (!out.findRing(ringName)) fail("undefined ring '" + ringName + "'", rl, rc);
        cmd.ringName = ringName;
      } else if (needRing) {
        if (out.rings.size() == 1) {
          cmd.ringName = out.rings[0].name;
        } else {
          fail("ambiguous trivial spec: write trivial(<ring>)", line, column);
        }
      }
      return;
    }
    const ModuleDecl* mod = out.findModule(name);
    if (!mod) fail("undefined module '" + name + "'", line, column);
    cmd.specName = name;
    cmd.ringName = mod->ringName;
  }

  // Named integer arguments: k=0 t=2 a=1 n=inf ...
  void parseArgs(Command& cmd) {
    while (identAhead()) {
      std::string key = parseIdent();
      expect('=');
      if (identAhead()) {
        int vl = c.line, vc = c.column;
        std::string word = parseIdent();
        if (word == "inf" && key == "n") {
          cmd.nIsInfinity = true;
          continue;
        }
        fail("expected integer value for '" + key + "'", vl, vc);
      }
      cmd.args[key] = parseInt();
    }
  }

  void requireArgs(const Command& cmd, std::initializer_list<const char*> keys) {
    for (const char* key : keys)
      if (!cmd.args.count(key))
        fail(std::string("missing argument '") + key + "'", cmd.line, cmd.column);
  }

  std::vector<Polynomial> parseSop(const RingPtr& ambient) {
    int line = c.line, column = c.column;
    std::string kw = parseIdent();
    if (kw != "sop") fail("expected 'sop'", line, column);
    return parsePolyList(ambient);
  }

  const IdealDecl& resolveIdeal(int line, int column, const std::string& name) {
    const IdealDecl* d = out.findIdeal(name);
    if (!d) fail("undefined ideal '" + name + "'", line, column);
    return *d;
  }

  void parseClosureCmd(Command& cmd) {
    int line = c.line, column = c.column;
    cmd.idealName = parseIdent();
    const IdealDecl& ideal = resolveIdeal(line, column, cmd.idealName);
    int ul = c.line, uc = c.column;
    if (parseIdent() != "under") fail("expected 'under'", ul, uc);
    parseSpecRef(cmd, false);
    if (cmd.ringName.empty()) cmd.ringName = ideal.ringName;
    if (cmd.specName != "trivial" && cmd.ringName != ideal.ringName)
      fail("module '" + cmd.specName + "' is not over the ring of ideal '" + cmd.idealName + "'",
           line, column);
    expect(';');
  }

  void parseAxiomsCmd(Command& cmd) {
    parseSpecRef(cmd, true);
    parseArgs(cmd);
    expect(';');
  }

  void parseCheckCmd(Command& cmd) {
    int line = c.line, column = c.column;
    std::string kind = parseKeyword();
    if (kind == "rational") {
      cmd.kind = Command::Kind::Rational;
      int rl = c.line, rc = c.column;
      std::string ringName = parseIdent();
      const RingDecl* ring = out.findRing(ringName);
      if (!ring) fail("undefined ring '" + ringName + "'", rl, rc);
      parseSpecRef(cmd, false);
      if (cmd.specName != "trivial" && cmd.ringName != ringName)
        fail("module '" + cmd.specName + "' is not over ring '" + ringName + "'", rl, rc);
      cmd.ringName = ringName;
      cmd.sop = parseSop(ring->ring->ambient());
      parseArgs(cmd);
      expect(';');
      return;
    }
    if (kind == "residual") {
      cmd.kind = Command::Kind::Residual;
      parseSpecRef(cmd, true);
      int il = c.line, ic = c.column;
      cmd.idealName = parseIdent();
      const IdealDecl& I = resolveIdeal(il, ic, cmd.idealName);
      int jl = c.line, jc = c.column;
      cmd.idealName2 = parseIdent();
      const IdealDecl& J = resolveIdeal(jl, jc, cmd.idealName2);
      if (I.ringName != cmd.ringName || J.ringName != cmd.ringName)
        fail("residual check needs ideals over the module's ring", il, ic);
      expect(';');
      return;
    }
    if (kind == "colon-capturing" || kind == "strong-cc-a" || kind == "strong-cc-b") {
      cmd.kind = kind == "colon-capturing" ? Command::Kind::ColonCapturing
                 : kind == "strong-cc-a"   ? Command::Kind::StrongCCA
                                           : Command::Kind::StrongCCB;
      parseSpecRef(cmd, true);
      const RingDecl* ring = out.findRing(cmd.ringName);
      cmd.sop = parseSop(ring->ring->ambient());
      parseArgs(cmd);
      expect(';');
      if (cmd.kind == Command::Kind::StrongCCA)
        requireArgs(cmd, {"k", "t", "a"});
      else
        requireArgs(cmd, {"k"});
      return;
    }
    fail("unknown check '" + kind + "'", line, column);
  }

  void parseReproduceCmd(Command& cmd) {
    int line = c.line, column = c.column;
    cmd.reproduceName = parseIdent();
    bool known = false;
    for (const char* name : kReproduceNames) known = known || cmd.reproduceName == name;
    if (!known) fail("unknown reproduction '" + cmd.reproduceName + "'", line, column);
    parseArgs(cmd);
    expect(';');
  }

  void parseTestIdealCmd(Command& cmd) {
    parseSpecRef(cmd, false, /*allowRingQualifier=*/false);
    expect('(');
    int il = c.line, ic = c.column;
    std::string first = parseIdent();
    cmd.sampleIdeals.push_back(first);
    const IdealDecl& firstIdeal = resolveIdeal(il, ic, first);
    while (accept(',')) {
      int l = c.line, col = c.column;
      std::string name = parseIdent();
      const IdealDecl& ideal = resolveIdeal(l, col, name);
      if (ideal.ringName != firstIdeal.ringName)
        fail("test-ideal samples must share one ring", l, col);
      cmd.sampleIdeals.push_back(name);
    }
    expect(')');
    expect(';');
    if (cmd.ringName.empty()) cmd.ringName = firstIdeal.ringName;
    if (cmd.specName != "trivial" && cmd.ringName != firstIdeal.ringName)
      fail("test-ideal samples must live over the module's ring", il, ic);
  }

  void parseStatement() {
    int line = c.line, column = c.column;
    std::string kw = parseKeyword();
    if (kw == "ring") {
      parseRingDecl();
      return;
    }
    if (kw == "ideal") {
      parseIdealDecl();
      return;
    }
    if (kw == "module") {
      parseModuleDecl();
      return;
    }
    Command cmd;
    cmd.line = line;
    cmd.column = column;
    if (kw == "closure") {
      cmd.kind = Command::Kind::Closure;
      parseClosureCmd(cmd);
    } else if (kw == "axioms") {
      cmd.kind = Command::Kind::Axioms;
      parseAxiomsCmd(cmd);
    } else if (kw == "check") {
      parseCheckCmd(cmd);
    } else if (kw == "reproduce") {
      cmd.kind = Command::Kind::Reproduce;
      parseReproduceCmd(cmd);
    } else if (kw == "test-ideal") {
      cmd.kind = Command::Kind::TestIdeal;
      parseTestIdealCmd(cmd);
    } else {
      fail("unknown statement '" + kw + "'", line, column);
    }
    out.commands.push_back(std::move(cmd));
  }

  SessionFile run() {
    while (true) {
      c.skipSpace();
      if (c.done()) break;
      parseStatement();
    }
    return std::move(out);
  }
};

} // namespace

SessionFile parseSession(std::string_view text) {
  SessionParser parser{TextCursor{text}, {}};
  return parser.run();
}

// ---------------------------------------------------------------------------
// Rendering

namespace {

std::string polyListStr(const std::vector<Polynomial>& polys) {
  std::string s = "(";
  for (size_t i = 0; i < polys.size(); ++i) {
    if (i) s += ", ";
    s += polys[i].str();
  }
  return s + ")";
}

std::string fieldStr(std::uint32_t p) { return p == 0 ? "Q" : "F" + std::to_string(p); }

std::string specRefStr(const Command& cmd, bool ringQualified) {
  if (cmd.specName != "trivial") return cmd.specName;
  if (ringQualified && !cmd.ringName.empty()) return "trivial(" + cmd.ringName + ")";
  return "trivial";
}

std::string argsStr(const Command& cmd) {
  std::string s;
  for (const auto& [key, value] : cmd.args) s += " " + key + "=" + std::to_string(value);
  if (cmd.nIsInfinity) s += " n=inf";
  return s;
}

std::string sopStr(const Command& cmd) {
  std::string s = "sop(";
  for (size_t i = 0; i < cmd.sop.size(); ++i) {
    if (i) s += ", ";
    s += cmd.sop[i].str();
  }
  return s + ")";
}

} // namespace

std::string commandEcho(const Command& cmd) {
  switch (cmd.kind) {
    case Command::Kind::Closure:
      return "closure " + cmd.idealName + " under " + specRefStr(cmd, false);
    case Command::Kind::Axioms:
      return "axioms " + specRefStr(cmd, true) + argsStr(cmd);
    case Command::Kind::ColonCapturing:
      return "check colon-capturing " + specRefStr(cmd, true) + " " + sopStr(cmd) + argsStr(cmd);
    case Command::Kind::StrongCCA:
      return "check strong-cc-a " + specRefStr(cmd, true) + " " + sopStr(cmd) + argsStr(cmd);
    case Command::Kind::StrongCCB:
      return "check strong-cc-b " + specRefStr(cmd, true) + " " + sopStr(cmd) + argsStr(cmd);
    case Command::Kind::Residual:
      return "check residual " + specRefStr(cmd, true) + " " + cmd.idealName + " " +
             cmd.idealName2;
    case Command::Kind::Rational:
      return "check rational " + cmd.ringName + " " + specRefStr(cmd, false) + " " + sopStr(cmd) +
             argsStr(cmd);
    case Command::Kind::Reproduce:
      return "reproduce " + cmd.reproduceName + argsStr(cmd);
    case Command::Kind::TestIdeal: {
      std::string s = "test-ideal " + specRefStr(cmd, false) + " (";
      for (size_t i = 0; i < cmd.sampleIdeals.size(); ++i) {
        if (i) s += ", ";
        s += cmd.sampleIdeals[i];
      }
      return s + ")";
    }
  }
  return "?";
}

std::string renderSession(const SessionFile& session) {
  std::string s;
  for (const RingDecl& ring : session.rings) {
    s += "ring " + ring.name + " = " + fieldStr(ring.ring->ambient()->characteristic()) + "[";
    const auto& vars = ring.ring->ambient()->variables();
    for (size_t i = 0; i < vars.size(); ++i) {
      if (i) s += ",";
      s += vars[i];
    }
    s += "]";
    if (!ring.ring->defining().generators().empty())
      s += " / " + polyListStr(ring.ring->defining().generators());
    s += ";\n";
    for (const IdealDecl& ideal : session.ideals)
      if (ideal.ringName == ring.name)
        s += "ideal " + ideal.name + " = " + polyListStr(ideal.value.rGenerators()) + ";\n";
    for (const ModuleDecl& mod : session.modules) {
      if (mod.ringName != ring.name) continue;
      s += "module " + mod.name + " = ";
      if (mod.spec.kind() == ClosureSpec::Kind::ModuleClosurePresented) {
        const PresentedModule& B = mod.spec.presentedB();
        s += "coker [";
        for (int i = 0; i < B.rank(); ++i) {
          if (i) s += ", ";
          s += "[";
          for (int j = 0; j < B.relationCount(); ++j) {
            if (j) s += ", ";
            s += B.rows()[static_cast<size_t>(i)][static_cast<size_t>(j)].str();
          }
          s += "]";
        }
        s += "]";
      } else {
        s += "ideal " + polyListStr(mod.spec.idealB().rGenerators());
      }
      s += ";\n";
    }
  }
  for (const Command& cmd : session.commands) s += commandEcho(cmd) + ";\n";
  return s;
}

// ---------------------------------------------------------------------------
// Deterministic sampling

std::uint64_t SplitMix64::next() {
  state += 0x9e3779b97f4a7c15ull;
  std::uint64_t z = state;
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
  return z ^ (z >> 31);
}

std::uint64_t SplitMix64::below(std::uint64_t bound) { return bound == 0 ? 0 : next() % bound; }

QuotientIdeal randomMonomialIdeal(SplitMix64& rng, const QuotientRingPtr& R, int maxDegree,
                                  int maxGenerators) {
  const RingPtr& ambient = R->ambient();
  const int nv = std::min(2, ambient->nvars());
  const std::uint64_t count = 1 + rng.below(static_cast<std::uint64_t>(maxGenerators));
  std::vector<Polynomial> gens;
  for (std::uint64_t g = 0; g < count; ++g) {
    std::vector<int> exps(static_cast<size_t>(ambient->nvars()), 0);
    int total = 0;
    for (int v = 0; v < nv; ++v) {
      exps[static_cast<size_t>(v)] = static_cast<int>(rng.below(static_cast<std::uint64_t>(maxDegree + 1)));
      total += exps[static_cast<size_t>(v)];
    }
    if (total == 0) exps[0] = 1; // keep the sample proper
    gens.push_back(Polynomial::monomial(ambient, Monomial(exps),
                                        FieldScalar::one(ambient->characteristic())));
  }
  return QuotientIdeal::fromPolynomials(R, std::move(gens));
}

// ---------------------------------------------------------------------------
// Running

namespace {

std::string idealDisplay(const QuotientIdeal& I) {
  std::string s = "(";
  std::vector<Polynomial> gens = I.reducedGenerators();
  for (size_t i = 0; i < gens.size(); ++i) {
    if (i) s += ", ";
    s += gens[i].str();
  }
  return s + ")";
}

struct ResolvedSpec {
  ClosureSpec spec;
  QuotientRingPtr ring;
};

ResolvedSpec resolveSpec(const SessionFile& session, const Command& cmd) {
  if (cmd.specName == "trivial") {
    const RingDecl* ring = session.findRing(cmd.ringName);
    if (!ring) throw std::invalid_argument("command lacks a resolvable ring");
    return {ClosureSpec::trivial(), ring->ring};
  }
  const ModuleDecl* mod = session.findModule(cmd.specName);
  if (!mod) throw std::invalid_argument("undefined module '" + cmd.specName + "'");
  const RingDecl* ring = session.findRing(mod->ringName);
  return {mod->spec, ring->ring};
}

void mergeAssumptions(Report& report, const std::vector<std::string>& notes) {
  for (const std::string& note : notes) {
    bool seen = false;
    for (const std::string& have : report.assumptions) seen = seen || have == note;
    if (!seen) report.assumptions.push_back(note);
  }
}

long argOr(const Command& cmd, const std::string& key, long fallback) {
  auto it = cmd.args.find(key);
  return it == cmd.args.end() ? fallback : it->second;
}

} // namespace

Report runCommand(const SessionFile& session, const Command& cmd, const RunOptions& opts) {
  Report report;
  report.command = commandEcho(cmd);
  ClosureSpec spec = ClosureSpec::trivial();
  QuotientRingPtr ring;
  if (cmd.kind != Command::Kind::Reproduce) {
    ResolvedSpec resolved = resolveSpec(session, cmd);
    spec = resolved.spec;
    ring = resolved.ring;
  }

  switch (cmd.kind) {
    case Command::Kind::Closure: {
      const IdealDecl* ideal = session.findIdeal(cmd.idealName);
      QuotientIdeal cl = closureOfIdeal(ideal->value, spec);
      report.verdict = "computed";
      report.notes.push_back("closure = " + idealDisplay(cl));
      report.notes.push_back(std::string("closed: ") +
                             (idealEquality(cl, ideal->value) ? "true" : "false"));
      if (spec.kind() != ClosureSpec::Kind::Trivial)
        report.assumptions.push_back("B assumed maximal Cohen-Macaulay (input data, not verified)");
      break;
    }
    case Command::Kind::Axioms: {
      long seed = argOr(cmd, "seed", opts.seed);
      long samples = argOr(cmd, "samples", opts.samples);
      if (samples < 1) throw std::invalid_argument("axioms: samples must be >= 1");
      SplitMix64 rng(static_cast<std::uint64_t>(seed));
      std::vector<QuotientIdeal> ideals;
      for (long i = 0; i < samples; ++i)
        ideals.push_back(randomMonomialIdeal(rng, ring, 4, 3));
      std::vector<std::pair<QuotientIdeal, QuotientIdeal>> pairs;
      for (size_t i = 0; i + 1 < ideals.size(); ++i)
        pairs.emplace_back(ideals[i], idealSum(ideals[i], ideals[i + 1]));
      report.checks.push_back(checkExtension(spec, ideals));
      report.checks.push_back(checkIdempotence(spec, ideals));
      report.checks.push_back(checkOrderPreservation(spec, pairs));
      report.notes.push_back("seed=" + std::to_string(seed) +
                             " samples=" + std::to_string(samples));
      bool pass = true;
      for (const CheckReport& check : report.checks) pass = pass && check.pass;
      report.verdict = pass ? "pass" : "fail";
      break;
    }
    case Command::Kind::ColonCapturing:
    case Command::Kind::StrongCCA:
    case Command::Kind::StrongCCB: {
      int k = static_cast<int>(argOr(cmd, "k", 0));
      CheckReport check =
          cmd.kind == Command::Kind::ColonCapturing
              ? checkColonCapturing(ring, spec, cmd.sop, k)
          : cmd.kind == Command::Kind::StrongCCA
              ? checkStrongCCA(ring, spec, cmd.sop, k, static_cast<int>(argOr(cmd, "t", 1)),
                               static_cast<int>(argOr(cmd, "a", 0)))
              : checkStrongCCB(ring, spec, cmd.sop, k);
      report.checks.push_back(check);
      report.verdict = check.pass ? "pass" : "fail";
      break;
    }
    case Command::Kind::Residual: {
      const IdealDecl* I = session.findIdeal(cmd.idealName);
      const IdealDecl* J = session.findIdeal(cmd.idealName2);
      CheckReport check = checkResiduality(spec, I->value, J->value);
      report.checks.push_back(check);
      report.verdict = check.pass ? "pass" : "fail";
      break;
    }
    case Command::Kind::Rational: {
      RationalityVerdict verdict = isClRational(ring, spec, cmd.sop);
      report.verdicts.push_back(verdict);
      mergeAssumptions(report, verdict.assumptionNotes);
      if (cmd.args.count("tmax")) {
        auto family = checkPowerFamilyClosed(ring, spec, cmd.sop,
                                             static_cast<int>(cmd.args.at("tmax")));
        std::string note = "power family closed:";
        for (const auto& [t, closed] : family)
          note += " t=" + std::to_string(t) + ":" + (closed ? "true" : "false");
        report.notes.push_back(note);
      }
      report.verdict = verdict.closed ? "pass" : "fail";
      break;
    }
    case Command::Kind::Reproduce: {
      ReproduceParams params;
      params.characteristic = opts.reproduceCharacteristic;
      if (cmd.args.count("n")) params.n = static_cast<int>(cmd.args.at("n"));
      if (cmd.args.count("i")) params.i = static_cast<int>(cmd.args.at("i"));
      if (cmd.args.count("d")) params.d = static_cast<int>(cmd.args.at("d"));
      if (cmd.args.count("tmax")) params.tMax = static_cast<int>(cmd.args.at("tmax"));
      params.nIsInfinity = cmd.nIsInfinity;
      if (cmd.reproduceName == "veronese") {
        report.bundles.push_back(
            reproduceVeronese(static_cast<int>(argOr(cmd, "d", 3)), params.tMax));
      } else if (cmd.reproduceName == "all") {
        for (ReproductionBundle& b : reproduceAll(opts.reproduceCharacteristic))
          report.bundles.push_back(std::move(b));
      } else {
        report.bundles.push_back(reproduceHypersurfaceExample(cmd.reproduceName, params));
      }
      bool pass = true;
      for (const ReproductionBundle& b : report.bundles) pass = pass && b.pass;
      report.verdict = pass ? "pass" : "fail";
      break;
    }
    case Command::Kind::TestIdeal: {
      std::vector<QuotientIdeal> samples;
      for (const std::string& name : cmd.sampleIdeals)
        samples.push_back(session.findIdeal(name)->value);
      QuotientIdeal tau = finitisticTestIdealSample(ring, spec, samples);
      report.notes.push_back("test ideal sample = " + idealDisplay(tau));
      report.notes.push_back(
          "over-approximation: finite sample of the finitistic test ideal intersection");
      report.verdict = "computed";
      if (spec.kind() != ClosureSpec::Kind::Trivial)
        report.assumptions.push_back("B assumed maximal Cohen-Macaulay (input data, not verified)");
      break;
    }
  }
  return report;
}

std::vector<Report> runSession(const SessionFile& session, const RunOptions& opts) {
  std::vector<Report> reports;
  for (const Command& cmd : session.commands) reports.push_back(runCommand(session, cmd, opts));
  return reports;
}

} // namespace closurelab
