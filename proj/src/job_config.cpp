#include "conic/job_config.hpp"

#include <fstream>
#include <regex>

#include "conic/errors.hpp"

namespace conic {

namespace {
constexpr long long kMaxSafeInteger = (1LL << 53) - 1;
}

nlohmann::json integer_to_json(const Integer& k) {
  if (abs(k) <= Integer(std::to_string(kMaxSafeInteger))) return nlohmann::json(k.get_si());
  return nlohmann::json(k.get_str());
}

Integer integer_from_json(const nlohmann::json& j) {
  if (j.is_number_integer()) {
    return j.is_number_unsigned() ? Integer(std::to_string(j.get<unsigned long long>()))
                                  : Integer(std::to_string(j.get<long long>()));
  }
  if (j.is_string()) {
    static const std::regex kDecimal("[+-]?[0-9]+");
    const auto& s = j.get_ref<const std::string&>();
    if (!std::regex_match(s, kDecimal)) throw InputError("not a decimal integer: \"" + s + "\"");
    return Integer(s[0] == '+' ? s.substr(1) : s);
  }
  throw InputError("expected an integer, got " + j.dump());
}

nlohmann::json coords_to_json(const IntVector& coords) {
  nlohmann::json out = nlohmann::json::array();
  for (const auto& c : coords) out.push_back(integer_to_json(c));
  return out;
}

IntVector coords_from_json(const nlohmann::json& j, const char* field) {
  if (!j.is_array()) throw InputError(std::string("field \"") + field + "\" must be an array");
  IntVector out;
  for (const auto& v : j) out.push_back(integer_from_json(v));
  return out;
}

JobConfig parse_job_config(const nlohmann::json& j) {
  if (!j.is_object()) throw InputError("job config must be a JSON object");
  for (const char* key : {"min_poly", "a", "b", "c"}) {
    if (!j.contains(key)) throw InputError(std::string("missing field \"") + key + "\"");
  }
  JobConfig cfg;
  cfg.min_poly = coords_from_json(j.at("min_poly"), "min_poly");
  cfg.a = coords_from_json(j.at("a"), "a");
  cfg.b = coords_from_json(j.at("b"), "b");
  cfg.c = coords_from_json(j.at("c"), "c");
  if (cfg.min_poly.size() < 2) throw InputError("min_poly needs at least two coefficients");
  if (cfg.min_poly.back() != 1) throw InputError("min_poly must end with leading coefficient 1");
  const std::size_t n = cfg.min_poly.size() - 1;
  using Field = std::pair<const char*, const IntVector*>;
  for (const auto& [name, v] : {Field{"a", &cfg.a}, Field{"b", &cfg.b}, Field{"c", &cfg.c}}) {
    if (v->size() != n) {
      throw InputError(std::string("field \"") + name + "\" must have " + std::to_string(n) +
                       " coordinates");
    }
  }
  if (j.contains("oracle_degree_bound") && !j.at("oracle_degree_bound").is_null()) {
    const auto& m = j.at("oracle_degree_bound");
    if (!m.is_number_integer() || m.get<long long>() < 1 || m.get<long long>() > 64) {
      throw InputError("oracle_degree_bound must be a positive integer");
    }
    cfg.oracle_degree_bound = static_cast<int>(m.get<long long>());
  }
  return cfg;
}

JobConfig load_job_config(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open config file " + path.string());
  nlohmann::json j;
  try {
    in >> j;
  } catch (const nlohmann::json::parse_error& e) {
    throw InputError("malformed JSON in " + path.string() + ": " + e.what());
  }
  return parse_job_config(j);
}

nlohmann::json job_config_to_json(const JobConfig& config) {
  nlohmann::json j{{"min_poly", coords_to_json(config.min_poly)},
                   {"a", coords_to_json(config.a)},
                   {"b", coords_to_json(config.b)},
                   {"c", coords_to_json(config.c)}};
  if (config.oracle_degree_bound) j["oracle_degree_bound"] = *config.oracle_degree_bound;
  return j;
}

ConicInput make_conic_input(const JobConfig& config) {
  NumberRingPtr ring = NumberRing::make(config.min_poly);
  return ConicInput::make(ring, ring->element(config.a), ring->element(config.b),
                          ring->element(config.c));
}

}  // namespace conic
