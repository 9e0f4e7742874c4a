#include "qgp/reports.hpp"

#include <sstream>

namespace qgp {

bool CheckReport::all_pass() const {
  for (const auto& item : items)
    if (!item.pass) return false;
  return true;
}

nlohmann::json CheckReport::to_json() const {
  nlohmann::json j;
  j["check"] = check;
  j["params"] = nlohmann::json::object();
  for (const auto& [key, value] : params) j["params"][key] = value;
  j["status"] = all_pass() ? "pass" : "fail";
  j["items"] = nlohmann::json::array();
  for (const auto& item : items) {
    nlohmann::json ji;
    ji["name"] = item.name;
    if (!item.window.empty()) ji["window"] = item.window;
    ji["status"] = item.pass ? "pass" : "fail";
    if (!item.witness.empty()) ji["witness"] = item.witness;
    j["items"].push_back(ji);
  }
  if (!data.is_null()) j["data"] = data;
  return j;
}

std::string CheckReport::to_json_string() const { return to_json().dump(2) + "\n"; }

std::string csv_escape(const std::string& field) {
  if (field.find_first_of(",\"\n") == std::string::npos) return field;
  std::string out = "\"";
  for (char c : field) {
    if (c == '"') out += '"';
    out += c;
  }
  out += '"';
  return out;
}

std::string CheckReport::to_csv() const {
  std::ostringstream os;
  os << "name,window,status,witness\n";
  for (const auto& item : items) {
    os << csv_escape(item.name) << "," << csv_escape(item.window) << ","
       << (item.pass ? "pass" : "fail") << "," << csv_escape(item.witness) << "\n";
  }
  return os.str();
}

}  // namespace qgp
