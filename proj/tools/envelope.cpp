#include "envelope.hpp"

namespace dpc::cli {

Json to_json(const OutputEnvelope& envelope) {
  Json doc;
  doc["command"] = envelope.command;
  doc["parameters"] = envelope.parameters;
  doc["precision_bits"] = envelope.precision_bits;
  doc["results"] = envelope.results;
  doc["warnings"] = envelope.warnings;
  return doc;
}

OutputEnvelope envelope_from_json(const Json& doc) {
  OutputEnvelope envelope;
  envelope.command = doc.at("command").get<std::string>();
  envelope.parameters = doc.at("parameters");
  envelope.precision_bits = doc.at("precision_bits").get<long>();
  envelope.results = doc.at("results");
  envelope.warnings = doc.at("warnings").get<std::vector<std::string>>();
  return envelope;
}

std::string serialize(const OutputEnvelope& envelope) { return to_json(envelope).dump(2) + "\n"; }

}  // namespace dpc::cli
