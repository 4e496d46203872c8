// closure-lab: closure operations on ideals and modules over quotient rings,
// cl-rationality decisions, and reproducible worked examples.
//
// Exit status: 0 = pass/computed, 1 = a checked property failed, 2 = input
// error (parse failure, bad arguments, degenerate input).

#include <chrono>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "closurelab/session.hpp"

namespace {

using namespace closurelab;

struct GlobalOptions {
  std::string format = "text";
  std::string outPath;
  long seed = 0;
  long samples = 50;
  bool timing = false;
  std::uint32_t field = 32003;
};

ReportFormat parseFormat(const std::string& format) {
  if (format == "text") return ReportFormat::Text;
  if (format == "json") return ReportFormat::Json;
  throw std::invalid_argument("--format must be text or json");
}

std::string readFile(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::invalid_argument("cannot open " + path);
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

void writeOutput(const GlobalOptions& opts, const std::string& payload) {
  if (opts.outPath.empty()) {
    std::cout << payload;
    return;
  }
  std::ofstream out(opts.outPath, std::ios::binary);
  if (!out) throw std::invalid_argument("cannot write " + opts.outPath);
  out << payload;
}

std::uint32_t fieldFromEnv(std::uint32_t fallback) {
  const char* env = std::getenv("CLOSURE_LAB_FIELD");
  if (!env || !*env) return fallback;
  std::string value(env);
  if (value == "Q" || value == "q" || value == "0") return 0;
  long p = std::stol(value);
  if (p < 2 || !isPrime(static_cast<std::uint32_t>(p)))
    throw std::invalid_argument("CLOSURE_LAB_FIELD must be Q or a prime");
  return static_cast<std::uint32_t>(p);
}

RunOptions runOptionsFrom(const GlobalOptions& opts) {
  RunOptions run;
  run.seed = opts.seed;
  run.samples = opts.samples;
  run.reproduceCharacteristic = opts.field;
  return run;
}

int emitAndFinish(const GlobalOptions& opts, std::vector<Report> reports, double elapsedMs) {
  if (opts.timing)
    for (Report& r : reports) r.timingMs = elapsedMs / static_cast<double>(reports.size());
  std::string payload = reports.size() == 1 ? emitReport(reports[0], parseFormat(opts.format))
                                            : emitReports(reports, parseFormat(opts.format));
  writeOutput(opts, payload);
  return exitStatusFor(reports);
}

int cmdRun(const GlobalOptions& opts, const std::string& path) {
  SessionFile session = parseSession(readFile(path));
  auto start = std::chrono::steady_clock::now();
  std::vector<Report> reports = runSession(session, runOptionsFrom(opts));
  double ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  if (reports.empty()) {
    // An empty session is a valid no-op.
    writeOutput(opts, opts.format == "json" ? emitReports(reports, ReportFormat::Json)
                                            : emitReports(reports, ReportFormat::Text));
    return 0;
  }
  return emitAndFinish(opts, std::move(reports), ms);
}

struct ReproduceArgs {
  bool hasD = false, hasN = false, hasI = false, hasTmax = false;
  long d = 3, i = 0, tmax = 0;
  std::string nRaw;
};

int cmdReproduce(const GlobalOptions& opts, const std::string& name, const ReproduceArgs& args) {
  std::string text = "reproduce " + name;
  if (name == "veronese") text += " d=" + std::to_string(args.d);
  if (args.hasN) {
    if (args.nRaw == "inf")
      text += " n=inf";
    else
      text += " n=" + std::to_string(std::stol(args.nRaw));
  }
  if (args.hasI) text += " i=" + std::to_string(args.i);
  if (args.hasTmax) text += " tmax=" + std::to_string(args.tmax);
  text += ";";
  SessionFile session = parseSession(text);
  auto start = std::chrono::steady_clock::now();
  std::vector<Report> reports = runSession(session, runOptionsFrom(opts));
  double ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  return emitAndFinish(opts, std::move(reports), ms);
}

int cmdAxioms(const GlobalOptions& opts, const std::string& path) {
  SessionFile session = parseSession(readFile(path));
  // Run the three closure axioms for every declared module, plus any axioms
  // commands the file itself contains.
  SessionFile augmented = session;
  augmented.commands.clear();
  for (const ModuleDecl& mod : session.modules) {
    Command cmd;
    cmd.kind = Command::Kind::Axioms;
    cmd.specName = mod.name;
    cmd.ringName = mod.ringName;
    augmented.commands.push_back(cmd);
  }
  for (const Command& cmd : session.commands)
    if (cmd.kind == Command::Kind::Axioms) augmented.commands.push_back(cmd);
  if (augmented.commands.empty())
    throw std::invalid_argument("axioms: no modules declared in " + path);
  auto start = std::chrono::steady_clock::now();
  std::vector<Report> reports = runSession(augmented, runOptionsFrom(opts));
  double ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  return emitAndFinish(opts, std::move(reports), ms);
}

} // namespace

int main(int argc, char** argv) {
  GlobalOptions opts;
  CLI::App app{"closure-lab: module closures, colon-capturing checks, and "
               "cl-rationality decisions over quotient rings"};
  app.require_subcommand(1);
  app.add_option("--format", opts.format, "Output format: text or json")
      ->check(CLI::IsMember({"text", "json"}));
  app.add_option("--out", opts.outPath, "Write the report to a file instead of stdout");
  app.add_option("--seed", opts.seed, "Seed for randomized axiom sampling (default 0)");
  app.add_option("--samples", opts.samples, "Sample count for randomized axiom checks (default 50)");
  app.add_flag("--timing", opts.timing, "Include wall-clock timing in the report");

  std::string runPath;
  CLI::App* run = app.add_subcommand("run", "Run a session file");
  run->add_option("file", runPath, "Session file")->required();

  std::string reproduceName;
  ReproduceArgs rargs;
  CLI::App* reproduce =
      app.add_subcommand("reproduce", "Reproduce a bundled worked example "
                                      "(veronese, x2y, y2, xn_y2, ade, all)");
  reproduce->add_option("name", reproduceName, "Example name")->required();
  reproduce->add_option("--d", rargs.d, "Veronese degree (veronese)");
  reproduce->add_option("--n", rargs.nRaw, "Module index n (y2, xn_y2); 'inf' is accepted for y2");
  reproduce->add_option("--i", rargs.i, "Module index i (xn_y2)");
  reproduce->add_option("--tmax", rargs.tmax, "Power-family evidence bound");

  std::string axiomsPath;
  CLI::App* axioms = app.add_subcommand("axioms", "Check the closure axioms on every module "
                                                  "declared in a session file");
  axioms->add_option("file", axiomsPath, "Session file")->required();

  try {
    app.parse(argc, argv);
    opts.field = fieldFromEnv(opts.field);
    if (run->parsed()) return cmdRun(opts, runPath);
    if (reproduce->parsed()) {
      rargs.hasD = reproduce->count("--d") > 0;
      rargs.hasN = reproduce->count("--n") > 0;
      rargs.hasI = reproduce->count("--i") > 0;
      rargs.hasTmax = reproduce->count("--tmax") > 0;
      return cmdReproduce(opts, reproduceName, rargs);
    }
    if (axioms->parsed()) return cmdAxioms(opts, axiomsPath);
    return 2;
  } catch (const CLI::ParseError& e) {
    return app.exit(e);
  } catch (const SessionError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
}
