#include "zetalb/baseline.hpp"

#include <fstream>
#include <sstream>

#include "json.hpp"
#include "zetalb/errors.hpp"

namespace zetalb {

std::optional<double> Baseline::ratio(const std::string& key) const {
  auto it = ratios.find(key);
  if (it == ratios.end()) return std::nullopt;
  return it->second;
}

Baseline load_baseline(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("baseline: cannot open " + path);
  std::stringstream buf;
  buf << in.rdbuf();
  try {
    const auto j = nlohmann::json::parse(buf.str());
    Baseline b;
    if (j.contains("ratios")) b.ratios = j.at("ratios").get<std::map<std::string, double>>();
    if (j.contains("paley_wiener_x0")) b.pw_x0 = j.at("paley_wiener_x0").get<std::map<std::string, double>>();
    return b;
  } catch (const nlohmann::json::exception& e) {
    throw ConfigError("baseline: " + path + ": " + e.what());
  }
}

void save_baseline(const Baseline& baseline, const std::string& path) {
  nlohmann::ordered_json j;
  j["ratios"] = baseline.ratios;
  j["paley_wiener_x0"] = baseline.pw_x0;
  std::ofstream out(path);
  if (!out) throw ConfigError("baseline: cannot write " + path);
  out << j.dump(2) << '\n';
}

}  // namespace zetalb
