#pragma once

#include <filesystem>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "dioph/hpfloat.hpp"

namespace dioph::verify {

/// A frozen reference: the accepted range is [value - tolerance, value + tolerance].
struct GoldenEntry {
  double value = 0;
  double tolerance = 0;
  std::string provenance;  // "published", "oracle" or "fit"
  std::string note;

  double lo() const { return value - tolerance; }
  double hi() const { return value + tolerance; }
  bool accepts(double v) const { return lo() <= v && v <= hi(); }
};

class GoldenFile {
 public:
  static GoldenFile load(const std::filesystem::path& path);
  void save(const std::filesystem::path& path) const;

  bool contains(const std::string& id) const { return entries_.count(id) != 0; }
  /// Throws dioph::Error for unknown ids.
  const GoldenEntry& at(const std::string& id) const;
  void set(const std::string& id, GoldenEntry e) { entries_[id] = std::move(e); }
  const std::map<std::string, GoldenEntry>& entries() const { return entries_; }

 private:
  std::map<std::string, GoldenEntry> entries_;
};

/// The first five are the numbered acceptance criteria; golden_properties
/// holds the fitted-constant invariants checked against the golden file.
enum class Suite { published_values = 1, exact_identities, inequalities, oracle_equivalence, asymptotics, golden_properties };

inline constexpr Suite kAllSuites[] = {Suite::published_values, Suite::exact_identities, Suite::inequalities,
                                       Suite::oracle_equivalence, Suite::asymptotics, Suite::golden_properties};

Suite parse_suite(std::string_view name);
std::string to_string(Suite s);
/// 1-5, or 0 for golden_properties
inline int criterion(Suite s) { return s == Suite::golden_properties ? 0 : static_cast<int>(s); }

struct Options {
  Precision bits = default_precision();
  unsigned jobs = 1;
};

struct Check {
  Suite suite;
  std::string name;
  bool passed = false;
  std::string detail;
  double seconds = 0;
};

std::vector<Check> run_suite(Suite s, const GoldenFile& golden, const Options& opt = {});

/// True when v is consistent with a printed value whose digits are all
/// correct, whether the printer truncated or rounded: v lies in
/// [p - 5*10^-(d+1), p + 10^-d) for d printed decimals.
bool matches_printed(const HPFloat& v, std::string_view printed);

/// The one-time oracle run that produces the golden-values file.
GoldenFile fit_golden(const Options& opt = {});

}  // namespace dioph::verify
