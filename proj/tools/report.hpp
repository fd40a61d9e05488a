#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "altseq/rational.hpp"

namespace altseq::cli {

inline constexpr std::string_view kToolVersion = "0.1.0";

using OrderedJson = nlohmann::ordered_json;

/// Value-with-provenance: every numeric result carries where it came from.
OrderedJson tagged(const Rational& value, const std::string& source);
OrderedJson tagged(double value, const std::string& source);
OrderedJson tagged(std::int64_t value, const std::string& source);

/// Assembles the envelope around a results object. Volatile data (wall
/// time) deliberately stays out: reports are byte-stable for fixed inputs.
OrderedJson make_report(const std::vector<std::string>& command_echo,
                        const std::string& input_digest, OrderedJson results,
                        std::optional<OrderedJson> generator = std::nullopt);

OrderedJson generator_metadata(std::uint64_t master_seed);

/// Serializes to `out_file` or stdout; 2-space indentation, trailing newline.
void emit_report(const OrderedJson& report, const std::string& out_file);

void emit_text(const std::string& text, const std::string& out_file);

}  // namespace altseq::cli
