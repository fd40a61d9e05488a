#include "report.hpp"

#include <fstream>
#include <iostream>

#include "altseq/rng.hpp"
#include "formats.hpp"

namespace altseq::cli {

OrderedJson tagged(const Rational& value, const std::string& source) {
  OrderedJson v;
  v["value"] = value.str();
  v["decimal"] = value.to_double();
  v["source"] = source;
  return v;
}

OrderedJson tagged(double value, const std::string& source) {
  OrderedJson v;
  v["value"] = value;
  v["source"] = source;
  return v;
}

OrderedJson tagged(std::int64_t value, const std::string& source) {
  OrderedJson v;
  v["value"] = value;
  v["source"] = source;
  return v;
}

OrderedJson make_report(const std::vector<std::string>& command_echo,
                        const std::string& input_digest, OrderedJson results,
                        std::optional<OrderedJson> generator) {
  OrderedJson report;
  report["version"] = std::string(kToolVersion);
  report["command"] = command_echo;
  report["input_digest"] = input_digest;
  if (generator) report["generator"] = *generator;
  report["results"] = std::move(results);
  return report;
}

OrderedJson generator_metadata(std::uint64_t master_seed) {
  OrderedJson g;
  g["rng"] = std::string(kRngName);
  g["rng_version"] = std::string(kRngVersion);
  g["stream_derivation"] = std::string(kStreamDerivation);
  g["master_seed"] = master_seed;
  return g;
}

void emit_text(const std::string& text, const std::string& out_file) {
  if (out_file.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream out(out_file, std::ios::binary);
  if (!out) throw FileError("cannot write '" + out_file + "'");
  out << text;
}

void emit_report(const OrderedJson& report, const std::string& out_file) {
  emit_text(report.dump(2) + "\n", out_file);
}

}  // namespace altseq::cli
