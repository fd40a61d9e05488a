#include "formats.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <vector>

#include <json.hpp>

namespace altseq::cli {

namespace {

using nlohmann::json;

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw FileError("cannot open '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

json parse_json(const std::string& bytes, const std::string& path) {
  json doc = json::parse(bytes, nullptr, false);
  if (doc.is_discarded()) throw FileError("'" + path + "' is not valid JSON");
  return doc;
}

// Numeric literal -> exact rational: "num/den" and decimal strings parse
// directly, JSON numbers go through their shortest decimal form so 0.25
// means exactly 1/4.
Rational value_to_rational(const json& v, const std::string& where) {
  try {
    if (v.is_string()) return Rational::from_string(v.get<std::string>());
    if (v.is_number_integer()) return Rational(v.get<long long>());
    if (v.is_number_float()) {
      char buf[64];
      std::snprintf(buf, sizeof(buf), "%.17g", v.get<double>());
      return Rational::from_string(buf);
    }
  } catch (const std::exception& e) {
    throw FileError(where + ": " + e.what());
  }
  throw FileError(where + ": expected a number or a \"num/den\" string");
}

ParsedDistribution from_rationals(std::vector<Rational> probs, std::string digest) {
  ParsedDistribution out{Distribution<Rational>(std::move(probs)),
                         Distribution<double>::uniform(1), std::move(digest), false, 0};
  out.real = to_double_dist(out.exact);
  return out;
}

}  // namespace

std::string fnv1a_hex(const std::string& bytes) {
  std::uint64_t h = 1469598103934665603ULL;
  for (unsigned char c : bytes) {
    h ^= c;
    h *= 1099511628211ULL;
  }
  char buf[32];
  std::snprintf(buf, sizeof(buf), "fnv1a:%016llx", static_cast<unsigned long long>(h));
  return buf;
}

ParsedDistribution load_distribution(const std::string& spec) {
  if (spec.rfind("uniform:", 0) == 0) {
    int q = 0;
    try {
      q = std::stoi(spec.substr(8));
    } catch (const std::exception&) {
      throw FileError("bad distribution spec '" + spec + "' (want uniform:q or a file)");
    }
    if (q < 1) throw FileError("uniform:q needs q >= 1");
    ParsedDistribution out = from_rationals(
        std::vector<Rational>(static_cast<std::size_t>(q), Rational(1, q)), fnv1a_hex(spec));
    out.is_uniform = true;
    out.uniform_q = q;
    return out;
  }

  const std::string bytes = read_file(spec);
  const json doc = parse_json(bytes, spec);
  if (!doc.is_object() || !doc.contains("p") || !doc["p"].is_array())
    throw FileError("'" + spec + "': expected an object {\"p\": [...]} ");
  std::vector<Rational> probs;
  std::size_t index = 0;
  for (const auto& v : doc["p"]) {
    probs.push_back(value_to_rational(v, spec + ": p[" + std::to_string(index) + "]"));
    ++index;
  }
  try {
    return from_rationals(std::move(probs), fnv1a_hex(bytes));
  } catch (const std::invalid_argument& e) {
    throw FileError("'" + spec + "': " + e.what());
  }
}

ParsedMatrix load_matrix(const std::string& path) {
  const std::string bytes = read_file(path);
  const json doc = parse_json(bytes, path);
  if (!doc.is_object() || !doc.contains("P") || !doc["P"].is_array())
    throw FileError("'" + path + "': expected an object {\"P\": [[...], ...]}");

  std::vector<std::vector<double>> rows;
  std::size_t r = 0;
  for (const auto& row : doc["P"]) {
    if (!row.is_array())
      throw FileError("'" + path + "': P[" + std::to_string(r) + "] is not an array");
    std::vector<double> values;
    std::size_t c = 0;
    double sum = 0.0;
    for (const auto& v : row) {
      const Rational exact = value_to_rational(
          v, path + ": P[" + std::to_string(r) + "][" + std::to_string(c) + "]");
      values.push_back(exact.to_double());
      sum += values.back();
      ++c;
    }
    if (std::abs(sum - 1.0) > 1e-12)
      throw FileError("'" + path + "': row " + std::to_string(r + 1) + " sums to " +
                      std::to_string(sum) + ", expected 1");
    rows.push_back(std::move(values));
    ++r;
  }
  try {
    return ParsedMatrix{make_markov(rows), fnv1a_hex(bytes)};
  } catch (const std::invalid_argument& e) {
    throw FileError("'" + path + "': " + e.what());
  }
}

}  // namespace altseq::cli
