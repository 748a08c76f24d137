#include "parshift/report.hpp"

#include <json.hpp>

namespace parshift {

std::string to_string(Verdict v) {
  switch (v) {
    case Verdict::Pass: return "pass";
    case Verdict::Fail: return "fail";
    case Verdict::Inconclusive: return "inconclusive";
  }
  return "?";
}

Verdict combine(Verdict a, Verdict b) {
  if (a == Verdict::Fail || b == Verdict::Fail) return Verdict::Fail;
  if (a == Verdict::Inconclusive || b == Verdict::Inconclusive)
    return Verdict::Inconclusive;
  return Verdict::Pass;
}

void Report::fail(const std::string& counterexample) {
  verdict = Verdict::Fail;
  counterexamples.push_back(counterexample);
}

void Report::undecided() {
  if (verdict == Verdict::Pass) verdict = Verdict::Inconclusive;
}

void Report::absorb(const Report& other) {
  verdict = combine(verdict, other.verdict);
  for (const auto& c : other.counterexamples)
    counterexamples.push_back(other.suite.empty() ? c : other.suite + ": " + c);
  for (const auto& [k, v] : other.coverage) coverage[other.suite + "/" + k] = v;
  for (const auto& [k, v] : other.timings_ms) timings_ms[other.suite + "/" + k] = v;
  for (const auto& n : other.notes) notes.push_back(other.suite + ": " + n);
}

std::string Report::to_json() const {
  nlohmann::json j;
  j["suite"] = suite;
  j["verdict"] = to_string(verdict);
  j["params"] = params;
  j["counterexamples"] = counterexamples;
  j["coverage"] = coverage;
  j["timings_ms"] = timings_ms;
  if (!notes.empty()) j["notes"] = notes;
  return j.dump(2);
}

std::string Report::summary_line() const {
  std::string line = "[" + to_string(verdict) + "] " + suite;
  if (!counterexamples.empty())
    line += " (" + std::to_string(counterexamples.size()) + " counterexample(s), e.g. " +
            counterexamples.front() + ")";
  return line;
}

}  // namespace parshift
