#include "hallkit/report.hpp"

#include <algorithm>

#include "hallkit/error.hpp"

namespace hallkit {

using nlohmann::json;

std::string to_string(Status s) {
  switch (s) {
    case Status::pass: return "pass";
    case Status::fail: return "fail";
    case Status::error: return "error";
  }
  return "error";
}

Status status_from_string(const std::string& s) {
  if (s == "pass") return Status::pass;
  if (s == "fail") return Status::fail;
  if (s == "error") return Status::error;
  throw Error("unknown report status '" + s + "'");
}

json to_json(const Report& r) {
  json j;
  j["schema"] = kReportSchema;
  j["command"] = r.command;
  j["inputs"] = r.inputs;
  j["results"] = r.results;
  j["status"] = to_string(r.status);
  json w = json::array();
  for (const auto& x : r.witnesses) w.push_back({{"label", x.label}, {"value", x.value}});
  j["witnesses"] = std::move(w);
  if (r.message) j["message"] = *r.message;
  return j;
}

Report report_from_json(const json& j) {
  try {
    if (j.at("schema").get<std::string>() != kReportSchema) throw Error("unsupported report schema");
    Report r;
    r.command = j.at("command").get<std::string>();
    r.inputs = j.at("inputs");
    r.results = j.at("results");
    r.status = status_from_string(j.at("status").get<std::string>());
    for (const auto& w : j.at("witnesses")) r.witnesses.push_back({w.at("label").get<std::string>(), w.at("value")});
    if (j.contains("message")) r.message = j.at("message").get<std::string>();
    if (r.status != Status::pass && r.witnesses.empty() && !r.message) {
      throw Error("failing report carries neither witness nor message");
    }
    return r;
  } catch (const json::exception& e) {
    throw Error(std::string("malformed report: ") + e.what());
  }
}

namespace {

std::string scalar(const json& v) { return v.is_string() ? v.get<std::string>() : v.dump(); }

void append_section(std::string& out, const std::string& title, const json& obj) {
  if (!obj.is_object() || obj.empty()) return;
  out += title + ":\n";
  std::size_t width = 0;
  for (const auto& [k, v] : obj.items()) width = std::max(width, k.size());
  for (const auto& [k, v] : obj.items()) {
    out += "  " + k + std::string(width - k.size(), ' ') + "  ";
    if (v.is_array() && !v.empty() && v.front().is_object()) {
      out += "\n";
      for (const auto& row : v) out += "    - " + row.dump() + "\n";
    } else {
      out += scalar(v) + "\n";
    }
  }
}

}  // namespace

std::string render(const Report& r, bool pretty) {
  if (!pretty) return to_json(r).dump() + "\n";
  std::string out = "command: " + r.command + "\nstatus:  " + to_string(r.status) + "\n";
  if (r.message) out += "message: " + *r.message + "\n";
  append_section(out, "inputs", r.inputs);
  append_section(out, "results", r.results);
  if (!r.witnesses.empty()) {
    out += "witnesses:\n";
    for (const auto& w : r.witnesses) out += "  " + w.label + ": " + scalar(w.value) + "\n";
  }
  return out;
}

}  // namespace hallkit
