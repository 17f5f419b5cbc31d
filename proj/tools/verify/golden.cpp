#include <fstream>

#include <nlohmann/json.hpp>

#include "dioph/errors.hpp"
#include "dioph/verify.hpp"

namespace dioph::verify {

using nlohmann::json;

GoldenFile GoldenFile::load(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open golden file " + path.string());
  json doc;
  try {
    in >> doc;
  } catch (const json::exception& e) {
    throw ParseError("golden file " + path.string() + ": " + e.what());
  }
  GoldenFile g;
  for (const auto& [id, v] : doc.items()) {
    if (!v.contains("value") || !v.contains("tolerance"))
      throw ParseError("golden entry " + id + " needs value and tolerance");
    GoldenEntry e;
    e.value = v.at("value").get<double>();
    e.tolerance = v.at("tolerance").get<double>();
    e.provenance = v.value("provenance", "");
    e.note = v.value("note", "");
    g.entries_.emplace(id, std::move(e));
  }
  return g;
}

void GoldenFile::save(const std::filesystem::path& path) const {
  json doc = json::object();
  for (const auto& [id, e] : entries_) {
    json v = {{"value", e.value}, {"tolerance", e.tolerance}, {"provenance", e.provenance}};
    if (!e.note.empty()) v["note"] = e.note;
    doc[id] = std::move(v);
  }
  std::ofstream out(path);
  if (!out) throw Error("cannot write golden file " + path.string());
  out << doc.dump(2) << '\n';
}

const GoldenEntry& GoldenFile::at(const std::string& id) const {
  auto it = entries_.find(id);
  if (it == entries_.end()) throw Error("golden file has no entry " + id);
  return it->second;
}

Suite parse_suite(std::string_view name) {
  for (Suite s : kAllSuites)
    if (to_string(s) == name) return s;
  throw ParseError("unknown suite '" + std::string(name) + "'");
}

std::string to_string(Suite s) {
  switch (s) {
    case Suite::published_values: return "paper-values";
    case Suite::exact_identities: return "exact-identities";
    case Suite::inequalities: return "inequalities";
    case Suite::oracle_equivalence: return "oracle-equivalence";
    case Suite::asymptotics: return "asymptotics";
    case Suite::golden_properties: return "golden-properties";
  }
  return "?";
}

bool matches_printed(const HPFloat& v, std::string_view printed) {
  const auto dot = printed.find('.');
  const std::size_t d = dot == std::string_view::npos ? 0 : printed.size() - dot - 1;
  std::string digits(printed);
  if (dot != std::string_view::npos) digits.erase(dot, 1);
  mpz_class scale;
  mpz_ui_pow_ui(scale.get_mpz_t(), 10, d);
  const mpq_class p(mpz_class(digits, 10), scale);
  const mpq_class ulp(1, scale);
  const mpq_class lo = p - ulp / 2, hi = p + ulp;
  return lo <= v.lower_exact() && v.upper_exact() < hi;
}

}  // namespace dioph::verify
