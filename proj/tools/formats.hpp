#pragma once

#include <stdexcept>
#include <string>

#include "altseq/distribution.hpp"
#include "altseq/markov.hpp"
#include "altseq/rational.hpp"

namespace altseq::cli {

/// Problem with an input file (missing, malformed, non-stochastic...).
/// Mapped to exit code 2.
struct FileError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct ParsedDistribution {
  Distribution<Rational> exact;
  Distribution<double> real;
  std::string digest;  // fnv1a over the file bytes or the inline spec
  bool is_uniform = false;
  int uniform_q = 0;
};

/// Accepts "uniform:q" or a path to a JSON file {"p": [v1, ..., vq]} where
/// each v is a decimal or a "num/den" string. Values are kept exact.
ParsedDistribution load_distribution(const std::string& spec);

struct ParsedMatrix {
  MarkovModel model;
  std::string digest;
};

/// JSON file {"P": [[...], ...]} with the same numeric literal rules.
ParsedMatrix load_matrix(const std::string& path);

std::string fnv1a_hex(const std::string& bytes);

}  // namespace altseq::cli
