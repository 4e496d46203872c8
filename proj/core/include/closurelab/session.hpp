#ifndef CLOSURELAB_SESSION_HPP
#define CLOSURELAB_SESSION_HPP

#include <cstdint>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "closurelab/report.hpp"

namespace closurelab {

/// Session-file diagnostic with 1-based location.
struct SessionError : std::runtime_error {
  SessionError(std::string msg, int errLine, int errColumn);
  std::string message;
  int line;
  int column;
};

struct RingDecl {
  std::string name;
  QuotientRingPtr ring;
};

struct IdealDecl {
  std::string name;
  std::string ringName;
  QuotientIdeal value;
};

struct ModuleDecl {
  std::string name;
  std::string ringName;
  ClosureSpec spec;
};

struct Command {
  enum class Kind {
    Closure,
    Axioms,
    ColonCapturing,
    StrongCCA,
    StrongCCB,
    Residual,
    Rational,
    Reproduce,
    TestIdeal
  };
  Kind kind;
  std::string specName; // module name or "trivial"
  std::string idealName;
  std::string idealName2;
  std::string ringName;
  std::vector<Polynomial> sop;
  std::string reproduceName;
  std::vector<std::string> sampleIdeals;
  std::map<std::string, long> args; // k, t, a, d, n, i, tmax, samples, seed
  bool nIsInfinity = false;
  int line = 1;
  int column = 1;
};

/// Parsed session: ring/ideal/module declarations plus commands, with all
/// name references resolved (undefined names are parse-time errors).
struct SessionFile {
  std::vector<RingDecl> rings;
  std::vector<IdealDecl> ideals;
  std::vector<ModuleDecl> modules;
  std::vector<Command> commands;

  const RingDecl* findRing(std::string_view name) const;
  const IdealDecl* findIdeal(std::string_view name) const;
  const ModuleDecl* findModule(std::string_view name) const;
};

/// Grammar documented in docs/format.md. Throws SessionError.
SessionFile parseSession(std::string_view text);

/// Canonical text; parse(render(parse(s))) equals parse(s).
std::string renderSession(const SessionFile& session);

/// Canonical one-line echo of a command.
std::string commandEcho(const Command& cmd);

struct RunOptions {
  long seed = 0;
  long samples = 50;
  std::uint32_t reproduceCharacteristic = 32003;
};

Report runCommand(const SessionFile& session, const Command& cmd, const RunOptions& opts);
std::vector<Report> runSession(const SessionFile& session, const RunOptions& opts);

/// Deterministic, platform-independent generator for seeded sampling.
struct SplitMix64 {
  std::uint64_t state;
  explicit SplitMix64(std::uint64_t seed) : state(seed) {}
  std::uint64_t next();
  std::uint64_t below(std::uint64_t bound);
};

/// Random monomial ideal supported on the first min(2, nvars) variables.
QuotientIdeal randomMonomialIdeal(SplitMix64& rng, const QuotientRingPtr& R, int maxDegree,
                                  int maxGenerators);

} // namespace closurelab

#endif
