#pragma once

#include <map>
#include <string>
#include <vector>

namespace parshift {

enum class Verdict { Pass, Fail, Inconclusive };

std::string to_string(Verdict v);

/// Outcome of one verification suite.  A Fail always carries at least one
/// counterexample.
struct Report {
  std::string suite;
  Verdict verdict = Verdict::Pass;
  std::map<std::string, std::string> params;
  std::vector<std::string> counterexamples;
  std::map<std::string, double> coverage;  // identity name -> fraction
  std::map<std::string, double> timings_ms;
  std::vector<std::string> notes;

  void fail(const std::string& counterexample);
  void undecided();  // degrade Pass to Inconclusive
  /// Merge another suite's outcome into this one (verdicts combine to the
  /// worst of the two, Fail dominating).
  void absorb(const Report& other);

  std::string to_json() const;
  std::string summary_line() const;
};

Verdict combine(Verdict a, Verdict b);

}  // namespace parshift
