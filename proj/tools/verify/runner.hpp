#pragma once

#include <chrono>
#include <exception>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "dioph/hpfloat.hpp"
#include "dioph/verify.hpp"

namespace dioph::verify::detail {

struct Outcome {
  bool passed;
  std::string detail;
};

class Runner {
 public:
  explicit Runner(Suite s) : suite_(s) {}

  template <class F>
  void check(std::string name, F&& body) {
    const auto t0 = std::chrono::steady_clock::now();
    Check c{suite_, std::move(name), false, {}, 0};
    try {
      Outcome o = body();
      c.passed = o.passed;
      c.detail = std::move(o.detail);
    } catch (const std::exception& e) {
      c.passed = false;
      c.detail = std::string("exception: ") + e.what();
    }
    c.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    checks_.push_back(std::move(c));
  }

  std::vector<Check> take() { return std::move(checks_); }

 private:
  Suite suite_;
  std::vector<Check> checks_;
};

/// Collects the first few failures of a loop over many cases.
class Tally {
 public:
  void pass() { ++cases_; }
  template <class... Args>
  void fail(const Args&... what) {
    ++cases_;
    if (failures_++ < 3) {
      if (!first_.str().empty()) first_ << "; ";
      (first_ << ... << what);
    }
  }
  void expect(bool ok, const std::string& what) { ok ? pass() : fail(what); }
  Outcome outcome(const std::string& summary = "") const {
    std::ostringstream s;
    if (!summary.empty()) s << summary << "; ";
    s << cases_ << " cases";
    if (failures_ != 0) s << ", " << failures_ << " failed: " << first_.str();
    return {failures_ == 0 && cases_ != 0, s.str()};
  }

 private:
  unsigned long cases_ = 0;
  unsigned long failures_ = 0;
  std::ostringstream first_;
};

inline std::string show(const HPFloat& v, int digits = 12) { return v.to_string(digits); }

/// b < a is certain
inline bool violated_le(const HPFloat& a, const HPFloat& b) { return certainly_less(b, a); }

std::vector<Check> published_values(const GoldenFile& g, const Options& opt);
std::vector<Check> exact_identities(const GoldenFile& g, const Options& opt);
std::vector<Check> inequalities(const GoldenFile& g, const Options& opt);
std::vector<Check> oracle_equivalence(const GoldenFile& g, const Options& opt);
std::vector<Check> asymptotics(const GoldenFile& g, const Options& opt);
std::vector<Check> golden_properties(const GoldenFile& g, const Options& opt);

}  // namespace dioph::verify::detail
