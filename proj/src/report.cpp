#include "supercong/report.hpp"

#include <fstream>
#include <sstream>

namespace supercong {

namespace {

std::string trim(const std::string& s) {
  const auto begin = s.find_first_not_of(" \t\r");
  if (begin == std::string::npos) return "";
  const auto end = s.find_last_not_of(" \t\r");
  return s.substr(begin, end - begin + 1);
}

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::stringstream in(s);
  std::string item;
  while (std::getline(in, item, sep)) {
    item = trim(item);
    if (!item.empty()) out.push_back(item);
  }
  return out;
}

long long to_integer(const std::string& key, const std::string& value) {
  try {
    std::size_t used = 0;
    const long long x = std::stoll(value, &used);
    if (used != value.size()) throw std::invalid_argument(value);
    return x;
  } catch (const std::exception&) {
    throw ConfigError(key + ": expected an integer, got '" + value + "'");
  }
}

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

std::string csv_value(const nlohmann::ordered_json& v) {
  if (v.is_null()) return "";
  if (v.is_string()) return csv_field(v.get<std::string>());
  return v.dump();
}

}  // namespace

void RunConfig::set(const std::string& key, const std::string& raw) {
  const std::string value = trim(raw);
  if (key == "guard_digits") {
    guard_digits = static_cast<int>(to_integer(key, value));
  } else if (key == "desk_cap") {
    const long long cap = to_integer(key, value);
    if (cap < 0) throw ConfigError("desk_cap must be positive");
    desk_cap = static_cast<std::uint64_t>(cap);
  } else if (key == "workers") {
    workers = static_cast<int>(to_integer(key, value));
  } else if (key == "output_path") {
    output_path = value;
  } else if (key == "output_format") {
    if (value == "json") {
      output_format = OutputFormat::Json;
    } else if (value == "csv") {
      output_format = OutputFormat::Csv;
    } else {
      throw ConfigError("output_format must be json or csv, got '" + value + "'");
    }
  } else if (key == "certificate_paths") {
    certificate_paths = split(value, ',');
  } else if (key == "certificate_grid") {
    certificate_grid = static_cast<long>(to_integer(key, value));
  } else if (key == "cases") {
    cases = parse_case_list(value);
  } else {
    throw ConfigError("unknown key '" + key + "'");
  }
}

void RunConfig::validate() const {
  if (guard_digits < 1) throw ConfigError("guard_digits must be at least 1");
  if (workers < 1) throw ConfigError("workers must be at least 1");
  if (desk_cap < 1000) throw ConfigError("desk_cap must be at least 1000");
  if (certificate_grid < 0) throw ConfigError("certificate_grid must be non-negative");
}

EngineConfig RunConfig::engine() const {
  EngineConfig out;
  out.guard_digits = guard_digits;
  out.desk_cap = desk_cap;
  return out;
}

RunConfig parse_config(const std::string& text) {
  RunConfig config;
  std::stringstream in(text);
  std::string line;
  int number = 0;
  while (std::getline(in, line)) {
    ++number;
    const auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    if (trim(line).empty()) continue;
    const auto eq = line.find('=');
    if (eq == std::string::npos) {
      throw ConfigError("line " + std::to_string(number) + ": expected key = value");
    }
    try {
      config.set(trim(line.substr(0, eq)), line.substr(eq + 1));
    } catch (const std::exception& e) {
      throw ConfigError("line " + std::to_string(number) + ": " + e.what());
    }
  }
  config.validate();
  return config;
}

RunConfig load_config(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot read config file " + path);
  std::ostringstream buffer;
  buffer << in.rdbuf();
  try {
    return parse_config(buffer.str());
  } catch (const ConfigError& e) {
    throw ConfigError(path + ": " + e.what());
  }
}

std::vector<TheoremCase> parse_case_list(const std::string& text) {
  std::vector<TheoremCase> out;
  for (const auto& item : split(text, ',')) {
    const auto parts = split(item, ':');
    if (parts.size() < 2 || parts.size() > 3) {
      throw ConfigError("case '" + item + "' is not TAG:p or TAG:p:r");
    }
    const auto tag = parse_tag(parts[0]);
    if (!tag) throw ConfigError("unknown case tag '" + parts[0] + "'");
    TheoremCase c;
    c.tag = *tag;
    const long long p = to_integer("p", parts[1]);
    if (p < 2) throw ConfigError("case '" + item + "': p must be a prime");
    c.p = static_cast<std::uint64_t>(p);
    if (parts.size() == 3) {
      c.r = static_cast<long>(to_integer("r", parts[2]));
    } else if (c.uses_r()) {
      throw ConfigError("case '" + item + "' needs r");
    } else {
      c.r = 1;
    }
    out.push_back(c);
  }
  return out;
}

std::vector<TheoremCase> default_battery() {
  std::vector<TheoremCase> out;
  using T = CaseTag;
  for (auto [p, r] : {std::pair{3, 3}, {3, 5}, {7, 3}, {11, 3}, {19, 3}, {7, 5}}) {
    out.push_back({T::GammaClosedForm, static_cast<std::uint64_t>(p), r});
  }
  for (auto [p, r] : {std::pair{3, 5}, {3, 7}, {7, 5}}) {
    out.push_back({T::PowerDescent, static_cast<std::uint64_t>(p), r});
  }
  for (auto [p, r] : {std::pair{3, 3}, {7, 3}, {3, 5}, {11, 3}}) {
    out.push_back({T::GeneralOddPower, static_cast<std::uint64_t>(p), r});
  }
  for (std::uint64_t p : {5, 13, 17, 29}) out.push_back({T::VanHamme, p, 1});
  for (std::uint64_t p : {5, 13, 17}) out.push_back({T::SwisherOneMod4, p, 1});
  for (std::uint64_t p : {3, 7, 11, 19}) out.push_back({T::SwisherThreeMod4, p, 1});
  for (auto [p, r] : {std::pair{3, 3}, {3, 5}, {7, 3}}) {
    for (T tag : {T::RatioQuarterHalf, T::RatioOneQuarter, T::RatioQuarterQuarter,
                  T::RatioQuarterQuarterVariant, T::RatioHalfQuarter}) {
      out.push_back({tag, static_cast<std::uint64_t>(p), r});
    }
  }
  for (auto [p, r] : {std::pair{3, 3}, {3, 5}, {7, 3}}) {
    out.push_back({T::BoundaryValuation, static_cast<std::uint64_t>(p), r});
  }
  out.push_back({T::GeneralOneMod4, 5, 2});
  out.push_back({T::GeneralEvenPower, 3, 2});
  return out;
}

bool asserted_failure(const CongruenceReport& r) {
  if (!r.error.empty()) return true;
  return !r.skipped && !r.informational && !r.holds;
}

nlohmann::ordered_json to_json(const CongruenceReport& r, bool timing) {
  using nlohmann::ordered_json;
  auto opt = [](const auto& v) -> ordered_json {
    if (v) return *v;
    return nullptr;
  };
  ordered_json j;
  j["case"] = tag_name(r.c.tag);
  j["p"] = r.c.p;
  j["r"] = r.c.uses_r() ? ordered_json(r.c.r) : ordered_json(nullptr);
  j["t"] = opt(r.c.t_parameter());
  j["modulus_exponent"] = r.modulus_exponent;
  j["truncation"] = opt(r.truncation);
  j["lhs"] = r.lhs;
  j["rhs"] = r.rhs;
  j["holds"] = r.holds;
  j["excess_valuation"] = opt(r.excess_valuation);
  j["wall_ms"] = timing ? ordered_json(r.wall_ms) : ordered_json(nullptr);
  j["skipped"] = r.skipped;
  j["informational"] = r.informational;
  j["note"] = r.note;
  j["strong_modulus_exponent"] = opt(r.strong_modulus_exponent);
  j["strong_holds"] = opt(r.strong_holds);
  j["strong_excess_valuation"] = opt(r.strong_excess_valuation);
  j["error"] = r.error.empty() ? ordered_json(nullptr) : ordered_json(r.error);
  return j;
}

std::string render_json(const std::vector<CongruenceReport>& reports, bool timing) {
  nlohmann::ordered_json array = nlohmann::ordered_json::array();
  for (const auto& r : reports) array.push_back(to_json(r, timing));
  return array.dump(2) + "\n";
}

std::string render_csv(const std::vector<CongruenceReport>& reports, bool timing) {
  const nlohmann::ordered_json header = to_json(CongruenceReport{}, timing);
  std::string out;
  bool first = true;
  for (const auto& item : header.items()) {
    out += (first ? "" : ",") + item.key();
    first = false;
  }
  out += "\n";
  for (const auto& r : reports) {
    first = true;
    const nlohmann::ordered_json row = to_json(r, timing);
    for (const auto& item : row.items()) {
      out += (first ? "" : ",") + csv_value(item.value());
      first = false;
    }
    out += "\n";
  }
  return out;
}

std::string render(const std::vector<CongruenceReport>& reports, OutputFormat format,
                   bool timing) {
  return format == OutputFormat::Json ? render_json(reports, timing)
                                      : render_csv(reports, timing);
}

std::string summary_line(const CongruenceReport& r) {
  std::string out = r.c.describe() + ": ";
  if (!r.error.empty()) return out + "error: " + r.error;
  if (r.skipped) return out + r.note;
  if (r.c.tag == CaseTag::BoundaryValuation) {
    return out + (r.holds ? "holds" : "FAILS") + " (minimum valuation " + r.lhs + ", bound " +
           r.rhs + ")";
  }
  const std::string mod =
      "mod " + std::to_string(r.c.p) + "^" + std::to_string(r.modulus_exponent);
  out += (r.holds ? "holds " : "FAILS ") + mod + " (lhs " + r.lhs + ", rhs " + r.rhs + ")";
  if (r.strong_holds) {
    out += "; strengthened mod " + std::to_string(r.c.p) + "^" +
           std::to_string(*r.strong_modulus_exponent) + ": " +
           (*r.strong_holds ? "holds" : "FAILS");
  }
  if (r.informational) out += " [informational]";
  return out;
}

}  // namespace supercong
