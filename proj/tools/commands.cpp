#include "commands.hpp"

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <thread>

#include "altseq/calibration.hpp"
#include "altseq/distribution.hpp"
#include "altseq/montecarlo.hpp"
#include "altseq/perm_stats.hpp"
#include "altseq/verify.hpp"
#include "altseq/word_stats.hpp"
#include "formats.hpp"
#include "report.hpp"

namespace altseq::cli {

namespace {

// p^n stays inside 128-bit rationals only while n*log2(max denominator)
// leaves headroom; beyond that the mean falls back to double precision.
bool exact_mean_fits(const Distribution<Rational>& mu, std::int64_t n) {
  double max_den_bits = 0;
  for (const Rational& p : mu.probs())
    max_den_bits = std::max(max_den_bits, std::log2(static_cast<double>(p.den())));
  return static_cast<double>(n) * max_den_bits <= 110.0;
}

std::string model_digest(const SimulateArgs& args) {
  std::string spec = "model=" + args.model + ";n=" + std::to_string(args.n) +
                     ";trials=" + std::to_string(args.trials);
  return fnv1a_hex(spec);
}

OrderedJson summary_json(const SummaryStats& stats, bool include_samples) {
  OrderedJson s;
  s["count"] = tagged(static_cast<std::int64_t>(stats.count), "simulation");
  s["mean"] = tagged(stats.mean, "simulation");
  s["variance"] = tagged(stats.variance, "simulation");
  s["min"] = tagged(stats.min, "simulation");
  s["max"] = tagged(stats.max, "simulation");
  s["degenerate"] = stats.degenerate;
  s["center"] = tagged(stats.center, stats.scale_source == "empirical" ? "simulation" : "closed_form");
  s["scale"] = tagged(stats.scale, stats.scale_source == "empirical" ? "simulation" : "closed_form");
  s["scale_source"] = stats.scale_source;
  if (stats.ks) s["ks_normal"] = tagged(*stats.ks, "simulation");
  OrderedJson hist = OrderedJson::array();
  for (const auto& [las, count] : stats.histogram) hist.push_back({las, count});
  s["histogram"] = OrderedJson{{"value", hist}, {"source", "simulation"}};
  if (include_samples) {
    OrderedJson arr = OrderedJson::array();
    for (auto v : stats.raw) arr.push_back(v);
    s["samples"] = arr;
  }
  return s;
}

Calibration load_calibration(const std::string& path) {
  Calibration cal;
  if (path.empty()) return cal;
  const std::string bytes = [&] {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw FileError("cannot open '" + path + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
  }();
  const auto doc = nlohmann::json::parse(bytes, nullptr, false);
  if (doc.is_discarded() || !doc.is_object())
    throw FileError("'" + path + "' is not a JSON object");
  for (const auto& [key, value] : doc.items()) {
    if (key == "clt_n") cal.clt_n = value.get<std::int64_t>();
    else if (key == "clt_trials") cal.clt_trials = value.get<std::int64_t>();
    else if (key == "clt_perm_ks_max") cal.clt_perm_ks_max = value.get<double>();
    else if (key == "clt_word_ks_max") cal.clt_word_ks_max = value.get<double>();
    else if (key == "lln_n") cal.lln_n = value.get<std::int64_t>();
    else if (key == "lln_sigma_multiple") cal.lln_sigma_multiple = value.get<double>();
    else if (key == "lil_n_max") cal.lil_n_max = value.get<std::uint64_t>();
    else if (key == "oracle_fuzz_cases") cal.oracle_fuzz_cases = value.get<std::int64_t>();
    else if (key == "oracle_fuzz_n") cal.oracle_fuzz_n = value.get<std::int64_t>();
    else if (key == "osc_points_per_q") cal.osc_points_per_q = value.get<int>();
    else if (key == "markov_fuzz_chains") cal.markov_fuzz_chains = value.get<int>();
    else if (key == "repro_trials") cal.repro_trials = value.get<std::int64_t>();
    else throw FileError("'" + path + "': unknown calibration key '" + key + "'");
  }
  return cal;
}

std::string verdict(const CheckResult& r) {
  if (r.skipped) return "SKIP";
  return r.pass ? "PASS" : "FAIL";
}

}  // namespace

int thread_budget() {
  unsigned n = std::thread::hardware_concurrency();
  if (n == 0) n = 1;
  if (const char* cap = std::getenv("ALTSEQ_THREADS")) {
    const long v = std::strtol(cap, nullptr, 10);
    if (v >= 1 && v <= 256) n = std::min<unsigned>(n, static_cast<unsigned>(v));
    if (v > 256) n = 256;
  }
  return static_cast<int>(n);
}

int cmd_exact_perm(const ExactPermArgs& args, const std::vector<std::string>& echo) {
  OrderedJson results;
  results["n"] = args.n;
  results["mean"] = tagged(perm_mean(args.n), "closed_form");
  results["variance"] =
      tagged(perm_variance(args.n), args.n >= 4 ? "closed_form" : "enumeration");
  results["clt_sigma2"] = tagged(perm_clt_sigma2(), "closed_form");
  results["lil_constant"] = tagged(lil_constant(), "closed_form");
  if (args.n <= 10) {
    const auto e = enumerate_permutations(args.n);
    OrderedJson hist = OrderedJson::array();
    for (std::size_t v = 1; v < e.histogram.size(); ++v) {
      OrderedJson row;
      row["las"] = v;
      row["count"] = e.histogram[v];
      hist.push_back(row);
    }
    OrderedJson enumeration;
    enumeration["mean"] = tagged(e.mean, "enumeration");
    enumeration["variance"] = tagged(e.variance, "enumeration");
    enumeration["histogram"] = hist;
    results["enumeration"] = enumeration;
  }
  emit_report(make_report(echo, fnv1a_hex("perm:" + std::to_string(args.n)), results),
              args.out_file);
  return kOk;
}

int cmd_exact_word(const ExactWordArgs& args, const std::vector<std::string>& echo) {
  const ParsedDistribution dist = load_distribution(args.dist);
  OrderedJson results;
  results["q"] = dist.exact.q();
  results["n"] = args.n;
  results["osc"] = tagged(osc(dist.exact), "closed_form");
  const auto [lower, upper] = osc_bounds(dist.exact);
  OrderedJson bounds;
  bounds["lower"] = tagged(lower, "closed_form");
  bounds["upper"] = tagged(upper, "closed_form");
  results["osc_bounds"] = bounds;

  if (exact_mean_fits(dist.exact, args.n))
    results["mean"] = tagged(exact_mean_iid(dist.exact, static_cast<std::uint64_t>(args.n)),
                             "closed_form");
  else
    results["mean"] =
        tagged(exact_mean_iid(dist.real, static_cast<std::uint64_t>(args.n)), "closed_form");

  results["gamma2_double_sum"] = tagged(gamma2_iid(dist.real), "closed_form");
  results["gamma2_series"] = tagged(gamma2_series(dist.real), "closed_form");
  if (dist.is_uniform)
    results["gamma2_uniform_closed"] =
        tagged(gamma2_uniform_closed(dist.uniform_q), "closed_form");

  OrderedJson mixing = OrderedJson::array();
  for (int k = 1; k <= args.mixing_rows; ++k) {
    OrderedJson row;
    row["n"] = k;
    row["bound"] = tagged(mixing_bound(dist.real, static_cast<std::uint64_t>(k)), "closed_form");
    mixing.push_back(row);
  }
  results["mixing_bounds"] = mixing;

  emit_report(make_report(echo, dist.digest, results), args.out_file);
  return kOk;
}

int cmd_exact_markov(const ExactMarkovArgs& args, const std::vector<std::string>& echo) {
  const ParsedMatrix parsed = load_matrix(args.matrix);
  const MarkovModel& model = parsed.model;
  for (int r = 1; r <= model.q; ++r)
    if (model.at(r, r) >= 1.0)
      throw FileError("'" + args.matrix + "': state " + std::to_string(r) +
                      " is an absorbing plateau; gradient analysis needs p_rr < 1");

  OrderedJson results;
  results["q"] = model.q;
  results["irreducible"] = model.irreducible;
  results["aperiodic"] = model.aperiodic;
  OrderedJson pi = OrderedJson::array();
  for (int s = 1; s <= model.q; ++s) pi.push_back(model.stationary_at(s));
  results["stationary"] = OrderedJson{{"value", pi}, {"source", "closed_form"}};

  const AugmentedPair pair = augment_pair(model);
  OrderedJson pair_pi = OrderedJson::array();
  for (int r = 1; r <= model.q; ++r)
    for (int y : {+1, -1}) {
      OrderedJson row;
      row["state"] = "(" + std::to_string(r) + "," + (y > 0 ? std::string("+1") : std::string("-1")) + ")";
      row["value"] = pair.claimed_pi[static_cast<std::size_t>((r - 1) * 2 + (y < 0 ? 1 : 0))];
      pair_pi.push_back(row);
    }
  results["pair_stationary"] = OrderedJson{{"value", pair_pi}, {"source", "closed_form"}};

  const AugmentedTriple triple = augment_triple(model);
  OrderedJson triple_pi = OrderedJson::array();
  for (int r = 1; r <= model.q; ++r)
    for (int yp : {+1, -1})
      for (int y : {+1, -1}) {
        OrderedJson row;
        row["state"] = "(" + std::to_string(r) + "," + (yp > 0 ? "+1" : "-1") + "," +
                       (y > 0 ? "+1" : "-1") + ")";
        row["value"] = triple.claimed_pi[static_cast<std::size_t>(
            (r - 1) * 4 + (yp < 0 ? 2 : 0) + (y < 0 ? 1 : 0))];
        triple_pi.push_back(row);
      }
  results["triple_stationary"] = OrderedJson{{"value", triple_pi}, {"source", "closed_form"}};

  const MarkovOsc parts = osc_markov_parts(model);
  results["osc_plus"] = tagged(parts.plus, "closed_form");
  results["osc_minus"] = tagged(parts.minus, "closed_form");
  results["osc"] = tagged(osc_markov(model), "closed_form");

  emit_report(make_report(echo, parsed.digest, results), args.out_file);
  return kOk;
}

int cmd_simulate(const SimulateArgs& args, const std::vector<std::string>& echo) {
  SimConfig config;
  config.n = args.n;
  config.trials = args.trials;
  config.master_seed = args.seed;
  config.threads = thread_budget();
  config.sample_cap = static_cast<std::size_t>(std::max<std::int64_t>(0, args.sample_cap));
  config.keep_raw = args.keep_samples || args.out_format == "csv";
  if (config.keep_raw)  // raw exports get every trial, not the retention cap
    config.sample_cap = std::max(config.sample_cap, static_cast<std::size_t>(args.trials));

  std::string digest = model_digest(args);
  OrderedJson model_info;
  model_info["name"] = args.model;
  model_info["n"] = args.n;
  model_info["trials"] = args.trials;

  if (args.model == "perm") {
    config.model = Model::permutation;
    config.perm_sampler = args.sampler == "ranks" ? PermSampler::ranks : PermSampler::shuffle;
    model_info["sampler"] = args.sampler;
  } else if (args.model == "word") {
    config.model = Model::word;
    const ParsedDistribution dist = load_distribution(args.dist);
    config.dist = dist.real;
    digest = dist.digest;
    model_info["q"] = dist.real.q();
  } else if (args.model == "markov") {
    config.model = Model::markov;
    const ParsedMatrix parsed = load_matrix(args.matrix);
    config.chain = parsed.model;
    digest = parsed.digest;
    model_info["q"] = parsed.model.q;
  } else {
    throw std::invalid_argument("unknown model '" + args.model + "'");
  }

  const SummaryStats stats = run(config);

  if (args.out_format == "csv") {
    std::string csv;
    csv.reserve(stats.raw.size() * 8);
    for (auto v : stats.raw) {
      csv += std::to_string(v);
      csv += '\n';
    }
    emit_text(csv, args.out_file);
    return kOk;
  }

  OrderedJson results;
  results["model"] = model_info;
  results["summary"] = summary_json(stats, args.keep_samples);
  emit_report(make_report(echo, digest, results, generator_metadata(args.seed)), args.out_file);
  return kOk;
}

int cmd_verify(const VerifyArgs& args, const std::vector<std::string>& echo) {
  const Calibration cal = load_calibration(args.calibration_file);
  const Suite suite = suite_from_string(args.suite);
  const std::vector<CheckResult> checks = run_suite(suite, cal, args.fast);

  if (args.json) {
    OrderedJson rows = OrderedJson::array();
    for (const auto& r : checks) {
      OrderedJson row;
      row["criterion"] = r.criterion;
      row["name"] = r.name;
      row["reference"] = r.reference;
      row["expected"] = r.expected;
      row["observed"] = r.observed;
      row["tolerance"] = r.tolerance;
      row["verdict"] = verdict(r);
      if (!r.note.empty()) row["note"] = r.note;
      rows.push_back(row);
    }
    OrderedJson results;
    results["suite"] = args.suite;
    results["fast"] = args.fast;
    results["checks"] = rows;
    results["all_passed"] = all_passed(checks);
    emit_report(make_report(echo, fnv1a_hex("verify:" + args.suite), results), args.out_file);
  } else {
    std::ostringstream table;
    for (const auto& r : checks) {
      table << "[" << verdict(r) << "] #" << r.criterion << " " << r.name << "\n"
            << "       claim:     " << r.reference << "\n"
            << "       expected:  " << r.expected << "\n"
            << "       observed:  " << (r.observed.empty() ? "-" : r.observed) << "\n"
            << "       tolerance: " << r.tolerance << "\n";
      if (!r.note.empty()) table << "       note:      " << r.note << "\n";
    }
    table << (all_passed(checks) ? "all checks passed" : "FAILURES present") << "\n";
    emit_text(table.str(), args.out_file);
  }
  return all_passed(checks) ? kOk : kVerifyFailed;
}

}  // namespace altseq::cli
