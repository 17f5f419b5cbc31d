#include "runner.hpp"

namespace dioph::verify {

std::vector<Check> run_suite(Suite s, const GoldenFile& golden, const Options& opt) {
  switch (s) {
    case Suite::published_values: return detail::published_values(golden, opt);
    case Suite::exact_identities: return detail::exact_identities(golden, opt);
    case Suite::inequalities: return detail::inequalities(golden, opt);
    case Suite::oracle_equivalence: return detail::oracle_equivalence(golden, opt);
    case Suite::asymptotics: return detail::asymptotics(golden, opt);
    case Suite::golden_properties: return detail::golden_properties(golden, opt);
  }
  return {};
}

}  // namespace dioph::verify
