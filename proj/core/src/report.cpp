#include "closurelab/report.hpp"

#include <sstream>

#include <json.hpp>

namespace closurelab {

namespace {

using Json = nlohmann::ordered_json;

Json toJson(const CheckReport& r) {
  Json j;
  j["property"] = r.property;
  j["ring"] = r.ring;
  j["spec"] = r.spec;
  j["instance"] = r.instance;
  j["verdict"] = r.pass ? "pass" : "fail";
  j["witness"] = r.witness ? Json(*r.witness) : Json(nullptr);
  return j;
}

Json toJson(const RationalityVerdict& v) {
  Json j;
  j["property"] = "cl-rational";
  j["ring"] = v.ring;
  j["spec"] = v.spec;
  std::string instance = "sop(";
  for (size_t i = 0; i < v.sop.size(); ++i) {
    if (i) instance += ", ";
    instance += v.sop[i];
  }
  instance += ")";
  j["instance"] = instance;
  j["verdict"] = v.closed ? "pass" : "fail";
  j["witness"] = v.witness ? Json(*v.witness) : Json(nullptr);
  if (v.witness) {
    Json cert;
    cert["witness"] = *v.witness;
    cert["in_closure"] = v.witnessInClosure.value_or(false);
    cert["in_ideal"] = v.witnessInIdeal.value_or(false);
    j["witness_membership_certificate"] = cert;
  } else {
    j["witness_membership_certificate"] = nullptr;
  }
  j["closed"] = v.closed;
  j["closure_generators"] = v.closureGenerators;
  j["assumptions"] = v.assumptionNotes;
  return j;
}

Json toJson(const ReproductionBundle& b) {
  Json j;
  j["name"] = b.name;
  j["params"] = b.params;
  j["verdict"] = b.pass ? "pass" : "fail";
  Json checks = Json::array();
  for (const CheckReport& r : b.reports) checks.push_back(toJson(r));
  j["checks"] = checks;
  Json verdicts = Json::array();
  for (const RationalityVerdict& v : b.verdicts) verdicts.push_back(toJson(v));
  j["verdicts"] = verdicts;
  j["assumptions"] = b.assumptions;
  return j;
}

Json toJson(const Report& r) {
  Json j;
  j["tool"] = kToolVersion;
  j["command"] = r.command;
  j["verdict"] = r.verdict;
  Json checks = Json::array();
  for (const CheckReport& c : r.checks) checks.push_back(toJson(c));
  j["checks"] = checks;
  Json verdicts = Json::array();
  for (const RationalityVerdict& v : r.verdicts) verdicts.push_back(toJson(v));
  j["verdicts"] = verdicts;
  Json bundles = Json::array();
  for (const ReproductionBundle& b : r.bundles) bundles.push_back(toJson(b));
  j["bundles"] = bundles;
  j["notes"] = r.notes;
  j["assumptions"] = r.assumptions;
  if (r.timingMs) j["timing_ms"] = *r.timingMs;
  return j;
}

void textCheck(std::ostringstream& out, const CheckReport& r, const char* indent) {
  out << indent << (r.pass ? "[pass] " : "[FAIL] ") << r.property << " :: " << r.ring << " :: "
      << r.spec << " :: " << r.instance;
  if (r.witness && !r.pass) out << " :: witness = " << *r.witness;
  out << "\n";
}

void textVerdict(std::ostringstream& out, const RationalityVerdict& v, const char* indent) {
  out << indent << (v.closed ? "[closed] " : "[open] ") << v.ring << " :: " << v.spec << " :: sop(";
  for (size_t i = 0; i < v.sop.size(); ++i) {
    if (i) out << ", ";
    out << v.sop[i];
  }
  out << ") :: closure = (";
  for (size_t i = 0; i < v.closureGenerators.size(); ++i) {
    if (i) out << ", ";
    out << v.closureGenerators[i];
  }
  out << ")";
  if (v.witness) {
    out << " :: witness = " << *v.witness << " (in closure: "
        << (v.witnessInClosure.value_or(false) ? "yes" : "no") << ", in ideal: "
        << (v.witnessInIdeal.value_or(false) ? "yes" : "no") << ")";
  }
  out << "\n";
}

void textReport(std::ostringstream& out, const Report& r) {
  out << "command: " << r.command << "\n";
  for (const CheckReport& c : r.checks) textCheck(out, c, "  ");
  for (const RationalityVerdict& v : r.verdicts) textVerdict(out, v, "  ");
  for (const ReproductionBundle& b : r.bundles) {
    out << "  bundle " << b.name << " (" << b.params << "): " << (b.pass ? "pass" : "FAIL")
        << "\n";
    for (const CheckReport& c : b.reports) textCheck(out, c, "    ");
    for (const RationalityVerdict& v : b.verdicts) textVerdict(out, v, "    ");
    for (const std::string& a : b.assumptions) out << "    assumption: " << a << "\n";
  }
  for (const std::string& n : r.notes) out << "  note: " << n << "\n";
  for (const std::string& a : r.assumptions) out << "  assumption: " << a << "\n";
  if (r.timingMs) out << "  timing_ms: " << *r.timingMs << "\n";
  out << "verdict: " << r.verdict << "\n";
}

} // namespace

std::string emitReport(const Report& report, ReportFormat format) {
  if (format == ReportFormat::Json) return toJson(report).dump(2) + "\n";
  std::ostringstream out;
  out << kToolVersion << "\n";
  textReport(out, report);
  return out.str();
}

std::string emitReports(const std::vector<Report>& reports, ReportFormat format) {
  if (format == ReportFormat::Json) {
    Json j;
    j["tool"] = kToolVersion;
    Json arr = Json::array();
    for (const Report& r : reports) arr.push_back(toJson(r));
    j["reports"] = arr;
    j["verdict"] = exitStatusFor(reports) == 0 ? "pass" : "fail";
    return j.dump(2) + "\n";
  }
  std::ostringstream out;
  out << kToolVersion << "\n";
  for (const Report& r : reports) textReport(out, r);
  out << "overall: " << (exitStatusFor(reports) == 0 ? "pass" : "fail") << "\n";
  return out.str();
}

int exitStatusFor(const std::vector<Report>& reports) {
  for (const Report& r : reports)
    if (r.verdict == "fail") return 1;
  return 0;
}

} // namespace closurelab
