#pragma once

// Machine-readable command output. Keys are emitted in insertion order so a
// given command and input always serialize to the same bytes.

#include <string>
#include <vector>

#include <json.hpp>

namespace dpc::cli {

using Json = nlohmann::ordered_json;

struct OutputEnvelope {
  std::string command;
  Json parameters = Json::object();
  long precision_bits = 0;
  Json results = Json::object();
  std::vector<std::string> warnings;

  friend bool operator==(const OutputEnvelope&, const OutputEnvelope&) = default;
};

[[nodiscard]] Json to_json(const OutputEnvelope& envelope);
/// Throws nlohmann::json::exception on a malformed document.
[[nodiscard]] OutputEnvelope envelope_from_json(const Json& doc);
/// Two-space indented JSON with a trailing newline.
[[nodiscard]] std::string serialize(const OutputEnvelope& envelope);

}  // namespace dpc::cli
