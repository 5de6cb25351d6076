#include "gravotto/serialize.hpp"

#include <array>
#include <charconv>
#include <set>

#include "json.hpp"

namespace gravotto {

namespace {

using ordered_json = nlohmann::ordered_json;

double require_number(const nlohmann::json& object, const char* key) {
  if (!object.contains(key))
    throw ArgumentError(std::string("metric json is missing field '") + key +
                        "'");
  const auto& value = object.at(key);
  if (!value.is_number())
    throw ArgumentError(std::string("metric field '") + key +
                        "' must be a number");
  return value.get<double>();
}

void require_only_keys(const nlohmann::json& object,
                       const std::set<std::string>& allowed) {
  for (const auto& [key, value] : object.items())
    if (!allowed.contains(key))
      throw ArgumentError("unknown metric field '" + key + "'");
}

void put_optional(ordered_json& object, const char* key,
                  const std::optional<double>& value) {
  if (value)
    object[key] = *value;
  else
    object[key] = nullptr;
}

std::string csv_optional(const std::optional<double>& value) {
  return value ? format_double(*value) : std::string{};
}

}  // namespace

std::string format_double(double value) {
  std::array<char, 32> buffer;
  const auto result =
      std::to_chars(buffer.data(), buffer.data() + buffer.size(), value);
  return std::string(buffer.data(), result.ptr);
}

std::string to_json(const Metric& metric) {
  ordered_json object;
  if (const auto* uniform = std::get_if<UniformField>(&metric)) {
    object["kind"] = "uniform";
    object["g"] = uniform->g;
  } else if (const auto* rn = std::get_if<ReissnerNordstrom>(&metric)) {
    object["kind"] = "rn";
    object["r_s"] = rn->r_s;
    object["r_q"] = rn->r_q;
  } else {
    object["kind"] = "desitter";
    object["a"] = std::get<DeSitter>(metric).a;
  }
  return object.dump();
}

Metric metric_from_json(std::string_view text) {
  nlohmann::json object;
  try {
    object = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw ArgumentError(std::string("metric json does not parse: ") +
                        e.what());
  }
  if (!object.is_object() || !object.contains("kind") ||
      !object.at("kind").is_string())
    throw ArgumentError(
        "metric json must be an object with a string field 'kind'");
  const std::string kind = object.at("kind").get<std::string>();
  Metric metric;
  if (kind == "uniform") {
    require_only_keys(object, {"kind", "g"});
    metric = UniformField{require_number(object, "g")};
  } else if (kind == "rn") {
    require_only_keys(object, {"kind", "r_s", "r_q"});
    metric = ReissnerNordstrom{require_number(object, "r_s"),
                               require_number(object, "r_q")};
  } else if (kind == "desitter") {
    require_only_keys(object, {"kind", "a"});
    metric = DeSitter{require_number(object, "a")};
  } else {
    throw ArgumentError("metric kind '" + kind +
                        "' is not one of uniform|rn|desitter");
  }
  validate_metric(metric);
  return metric;
}

std::string to_json(const CycleReport& report) {
  ordered_json object;
  object["w1"] = report.w1;
  object["q2"] = report.q2;
  object["w3"] = report.w3;
  object["q4"] = report.q4;
  object["chi"] = report.chi;
  object["gap_b"] = report.gap_b;
  object["p_a"] = report.p_a;
  object["p_b"] = report.p_b;
  put_optional(object, "cop", report.cop);
  put_optional(object, "cop_carnot", report.cop_carnot);
  object["operable"] = report.operable;
  object["bound"] = report.bound;
  object["units"] = std::string(kUnitsNote);
  return object.dump();
}

std::string to_csv(const CycleReport& report) {
  std::string out =
      "w1,q2,w3,q4,chi,gap_b,p_a,p_b,cop,cop_carnot,operable,bound\n";
  out += format_double(report.w1) + ',' + format_double(report.q2) + ',' +
         format_double(report.w3) + ',' + format_double(report.q4) + ',' +
         format_double(report.chi) + ',' + format_double(report.gap_b) + ',' +
         format_double(report.p_a) + ',' + format_double(report.p_b) + ',' +
         csv_optional(report.cop) + ',' + csv_optional(report.cop_carnot) +
         ',' + (report.operable ? "true" : "false") + ',' +
         format_double(report.bound) + '\n';
  return out;
}

std::string to_json(const TrajectoryLedger& ledger) {
  ordered_json object;
  object["seed"] = ledger.seed;
  object["n"] = ledger.n;
  object["generator"] = ledger.generator;
  object["mean_w1"] = ledger.mean_w1;
  object["mean_q2"] = ledger.mean_q2;
  object["mean_w3"] = ledger.mean_w3;
  object["mean_q4"] = ledger.mean_q4;
  object["se_w1"] = ledger.se_w1;
  object["se_q2"] = ledger.se_q2;
  object["se_w3"] = ledger.se_w3;
  object["se_q4"] = ledger.se_q4;
  object["units"] = std::string(kUnitsNote);
  return object.dump();
}

std::string to_csv(const TrajectoryLedger& ledger) {
  std::string out =
      "seed,n,generator,mean_w1,mean_q2,mean_w3,mean_q4,se_w1,se_q2,se_w3,"
      "se_q4\n";
  out += std::to_string(ledger.seed) + ',' + std::to_string(ledger.n) + ',' +
         ledger.generator + ',' + format_double(ledger.mean_w1) + ',' +
         format_double(ledger.mean_q2) + ',' + format_double(ledger.mean_w3) +
         ',' + format_double(ledger.mean_q4) + ',' +
         format_double(ledger.se_w1) + ',' + format_double(ledger.se_q2) +
         ',' + format_double(ledger.se_w3) + ',' +
         format_double(ledger.se_q4) + '\n';
  return out;
}

}  // namespace gravotto
