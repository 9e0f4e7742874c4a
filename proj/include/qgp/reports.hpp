#pragma once
/**
 * @file reports.hpp
 * @brief Deterministic check reports shared by the verifiers and the CLI.
 *
 * JSON schema: {"check", "params", "status": "pass"|"fail",
 *               "items": [{"name", "window"?, "status", "witness"?}], "data"?}.
 * All scalars cross the boundary as exact fraction strings.
 */

#include <json.hpp>

#include <map>
#include <string>
#include <vector>

namespace qgp {

struct CheckItem {
  std::string name;
  std::string window;   // what was checked, e.g. "monomials of degree <= 4 (70)"
  bool pass = false;
  std::string witness;  // first counterexample, empty when passing

  static CheckItem passed(std::string name, std::string window) {
    return {std::move(name), std::move(window), true, ""};
  }
  static CheckItem failed(std::string name, std::string window, std::string witness) {
    return {std::move(name), std::move(window), false, std::move(witness)};
  }
};

struct CheckReport {
  std::string check;
  std::map<std::string, std::string> params;  // canonically ordered
  std::vector<CheckItem> items;
  nlohmann::json data;  // optional structured payload (null when absent)

  bool all_pass() const;
  void add(CheckItem item) { items.push_back(std::move(item)); }

  /// Canonical JSON (sorted keys, stable across runs).
  nlohmann::json to_json() const;
  std::string to_json_string() const;
  /// Items as CSV: name,window,status,witness.
  std::string to_csv() const;
};

/// CSV field quoting (RFC-style: quote when a comma/quote/newline appears).
std::string csv_escape(const std::string& field);

}  // namespace qgp
