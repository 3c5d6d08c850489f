#pragma once

// Machine-readable command reports, schema "hallkit-report v1".

#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

namespace hallkit {

inline constexpr const char* kReportSchema = "hallkit-report v1";

enum class Status { pass, fail, error };

std::string to_string(Status s);
Status status_from_string(const std::string& s);

struct Witness {
  std::string label;
  nlohmann::json value;

  friend bool operator==(const Witness&, const Witness&) = default;
};

struct Report {
  std::string command;
  nlohmann::json inputs = nlohmann::json::object();
  nlohmann::json results = nlohmann::json::object();
  Status status = Status::pass;
  std::vector<Witness> witnesses;
  std::optional<std::string> message;

  friend bool operator==(const Report&, const Report&) = default;
};

nlohmann::json to_json(const Report& r);
// Throws hallkit::Error on a missing field or unknown schema.
Report report_from_json(const nlohmann::json& j);

// Compact JSON, or an aligned human-readable rendering when `pretty`.
std::string render(const Report& r, bool pretty);

}  // namespace hallkit
