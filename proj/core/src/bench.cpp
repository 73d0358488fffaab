#include "maxcover/bench.hpp"

#include <algorithm>
#include <charconv>
#include <cstdio>
#include <map>
#include <sstream>
#include <thread>

#include "maxcover/rng.hpp"

namespace maxcover {

namespace {

std::size_t parse_positive(std::string_view text, std::string_view what) {
  std::size_t value = 0;
  const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc{} || ptr != text.data() + text.size() || value < 1) {
    throw InvalidArgument(std::string(what) + " must be a positive integer, got '" +
                          std::string(text) + "'");
  }
  return value;
}

}  // namespace

AlgoSpec AlgoSpec::parse(std::string_view text) {
  AlgoSpec spec;
  if (text == "greedy") {
    spec.kind = Kind::Greedy;
    return spec;
  }
  if (text == "exact") {
    spec.kind = Kind::Exact;
    return spec;
  }
  if (text.starts_with("bs:")) {
    spec.kind = Kind::BigStep;
    spec.step = parse_positive(text.substr(3), "big-step size");
    return spec;
  }
  if (text.starts_with("rgreedy:")) {
    spec.kind = Kind::RandomizedGreedy;
    spec.repetitions = parse_positive(text.substr(8), "repetition count");
    return spec;
  }
  if (text.starts_with("bbs:")) {
    spec.kind = Kind::BestOfBigSteps;
    std::string_view rest = text.substr(4);
    while (!rest.empty()) {
      const std::size_t comma = rest.find(',');
      const std::string_view item = rest.substr(0, comma);
      spec.steps.push_back(parse_positive(item, "big-step size"));
      if (comma == std::string_view::npos) break;
      rest = rest.substr(comma + 1);
    }
    if (spec.steps.empty()) throw InvalidArgument("bbs step list must be non-empty");
    return spec;
  }
  throw InvalidArgument("unknown algorithm '" + std::string(text) +
                        "'; expected greedy, bs:<p>, rgreedy:<N>, bbs:<p1,p2,...>, or exact");
}

std::string AlgoSpec::tag() const {
  switch (kind) {
    case Kind::Greedy:
      return "greedy";
    case Kind::Exact:
      return "exact";
    case Kind::BigStep:
      return "bs:" + std::to_string(step);
    case Kind::RandomizedGreedy:
      return "rgreedy:" + std::to_string(repetitions);
    case Kind::BestOfBigSteps: {
      std::string out = "bbs:";
      for (std::size_t i = 0; i < steps.size(); ++i) {
        if (i > 0) out += ',';
        out += std::to_string(steps[i]);
      }
      return out;
    }
  }
  return {};
}

Solution run_algorithm(const AlgoSpec& algo, const Instance& instance, std::size_t k,
                       std::uint64_t cost_limit, std::uint64_t seed) {
  switch (algo.kind) {
    case AlgoSpec::Kind::Greedy:
      return greedy_solve(instance, k);
    case AlgoSpec::Kind::BigStep:
      return big_step_solve(instance, k, algo.step, cost_limit);
    case AlgoSpec::Kind::RandomizedGreedy:
      return randomized_greedy_solve(instance, k, algo.repetitions, seed);
    case AlgoSpec::Kind::BestOfBigSteps:
      return best_of_big_steps(instance, k, algo.steps, cost_limit);
    case AlgoSpec::Kind::Exact:
      return exact_solve(instance, k, cost_limit);
  }
  throw InvalidArgument("unhandled algorithm kind");
}

namespace {

struct ProblemOutcome {
  std::size_t covered_a = 0;
  std::size_t covered_b = 0;
};

ProblemOutcome solve_problem(const GenSpec& spec, const AlgoSpec& algo_a, const AlgoSpec& algo_b,
                             std::uint64_t cost_limit, std::uint32_t index) {
  const Instance instance = generate_instance(spec, index);
  ProblemOutcome outcome;
  outcome.covered_a =
      run_algorithm(algo_a, instance, spec.k, cost_limit, mix_seed(spec.seed, index, 0)).covered;
  outcome.covered_b =
      run_algorithm(algo_b, instance, spec.k, cost_limit, mix_seed(spec.seed, index, 1)).covered;
  return outcome;
}

[[noreturn]] void rethrow_annotated(const CostLimitExceeded& e, const GenSpec& spec,
                                    std::uint32_t index) {
  throw CostLimitExceeded::annotate(
      e, "family " + spec.family_tag() + ", problem " + std::to_string(index));
}

}  // namespace

ComparisonStats run_comparison(const GenSpec& spec, const AlgoSpec& algo_a,
                               const AlgoSpec& algo_b, std::uint64_t cost_limit,
                               unsigned threads) {
  spec.validate();

  const std::uint32_t problems = spec.num_problems;
  std::vector<ProblemOutcome> outcomes(problems);

  if (threads <= 1 || problems < 2) {
    for (std::uint32_t i = 0; i < problems; ++i) {
      try {
        outcomes[i] = solve_problem(spec, algo_a, algo_b, cost_limit, i);
      } catch (const CostLimitExceeded& e) {
        rethrow_annotated(e, spec, i);
      }
    }
  } else {
    // Block partition per worker; solutions are pure functions of the
    // problem index, so scheduling cannot affect the reduced tallies.
    const unsigned worker_count = std::min<unsigned>(threads, problems);
    std::vector<std::exception_ptr> failures(worker_count);
    std::vector<std::thread> workers;
    workers.reserve(worker_count);
    for (unsigned w = 0; w < worker_count; ++w) {
      workers.emplace_back([&, w] {
        const std::uint32_t begin =
            static_cast<std::uint32_t>(std::uint64_t{problems} * w / worker_count);
        const std::uint32_t end =
            static_cast<std::uint32_t>(std::uint64_t{problems} * (w + 1) / worker_count);
        try {
          for (std::uint32_t i = begin; i < end; ++i) {
            outcomes[i] = solve_problem(spec, algo_a, algo_b, cost_limit, i);
          }
        } catch (...) {
          failures[w] = std::current_exception();
        }
      });
    }
    for (auto& worker : workers) worker.join();
    for (unsigned w = 0; w < worker_count; ++w) {
      if (failures[w]) {
        try {
          std::rethrow_exception(failures[w]);
        } catch (const CostLimitExceeded& e) {
          rethrow_annotated(
              e, spec,
              static_cast<std::uint32_t>(std::uint64_t{problems} * w / worker_count));
        }
      }
    }
  }

  ComparisonStats stats;
  stats.spec = spec;
  stats.algo_a = algo_a.tag();
  stats.algo_b = algo_b.tag();
  std::uint64_t total_a = 0;
  std::uint64_t total_b = 0;
  for (const ProblemOutcome& o : outcomes) {
    total_a += o.covered_a;
    total_b += o.covered_b;
    if (o.covered_a > o.covered_b) {
      ++stats.wins_a;
    } else if (o.covered_b > o.covered_a) {
      ++stats.wins_b;
    } else {
      ++stats.ties;
    }
  }
  stats.mean_coverage_a = static_cast<double>(total_a) / problems;
  stats.mean_coverage_b = static_cast<double>(total_b) / problems;
  return stats;
}

namespace {

std::string format_mean(double value) {
  char buffer[64];
  std::snprintf(buffer, sizeof buffer, "%.4f", value);
  return buffer;
}

std::string csv_field(const std::string& value) {
  if (value.find(',') == std::string::npos && value.find('"') == std::string::npos) return value;
  std::string quoted = "\"";
  for (const char c : value) {
    if (c == '"') quoted += '"';
    quoted += c;
  }
  quoted += '"';
  return quoted;
}

std::vector<std::string> stats_row(const ComparisonStats& s) {
  return {std::to_string(s.spec.universe_size),
          std::to_string(s.spec.num_sets),
          std::to_string(s.spec.avg_set_size),
          std::to_string(s.spec.k),
          std::to_string(s.spec.num_problems),
          s.algo_a,
          std::to_string(s.wins_a),
          s.algo_b,
          std::to_string(s.wins_b),
          std::to_string(s.ties),
          format_mean(s.mean_coverage_a),
          format_mean(s.mean_coverage_b)};
}

const char* const kStatsHeader[] = {"universe", "sets",   "avg_size", "k",
                                    "problems", "algo_a", "wins_a",   "algo_b",
                                    "wins_b",   "ties",   "mean_cov_a", "mean_cov_b"};
constexpr std::size_t kStatsColumns = sizeof kStatsHeader / sizeof kStatsHeader[0];

}  // namespace

std::string render_stats(std::span<const ComparisonStats> stats, StatsFormat format) {
  if (format == StatsFormat::Csv) {
    std::string out;
    for (std::size_t c = 0; c < kStatsColumns; ++c) {
      if (c > 0) out += ',';
      out += kStatsHeader[c];
    }
    out += '\n';
    for (const ComparisonStats& s : stats) {
      const auto row = stats_row(s);
      for (std::size_t c = 0; c < row.size(); ++c) {
        if (c > 0) out += ',';
        out += csv_field(row[c]);
      }
      out += '\n';
    }
    return out;
  }

  // Aligned text: same columns, padded; algorithm names left-aligned,
  // numbers right-aligned.
  std::vector<std::vector<std::string>> rows;
  rows.reserve(stats.size());
  for (const ComparisonStats& s : stats) rows.push_back(stats_row(s));

  std::size_t width[kStatsColumns];
  for (std::size_t c = 0; c < kStatsColumns; ++c) {
    width[c] = std::string_view(kStatsHeader[c]).size();
    for (const auto& row : rows) width[c] = std::max(width[c], row[c].size());
  }

  const auto left_aligned = [](std::size_t c) { return c == 5 || c == 7; };
  std::string out;
  const auto append_row = [&](const auto& cells, bool header) {
    for (std::size_t c = 0; c < kStatsColumns; ++c) {
      const std::string_view cell = cells[c];
      const std::size_t pad = width[c] - cell.size();
      if (c > 0) out += "  ";
      if (header || left_aligned(c)) {
        out += cell;
        if (c + 1 < kStatsColumns) out.append(pad, ' ');
      } else {
        out.append(pad, ' ');
        out += cell;
      }
    }
    while (!out.empty() && out.back() == ' ') out.pop_back();
    out += '\n';
  };

  append_row(kStatsHeader, true);
  for (const auto& row : rows) append_row(row, false);
  return out;
}

std::vector<BenchFamily> parse_bench_config(std::string_view text) {
  struct PendingFamily {
    std::map<std::string, std::pair<std::string, std::size_t>> values;  // key -> (value, line)
    std::size_t start_line = 0;
  };

  std::vector<PendingFamily> pending;
  std::size_t line_number = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const std::size_t nl = text.find('\n', pos);
    const std::size_t end = nl == std::string_view::npos ? text.size() : nl;
    ++line_number;
    std::string_view line = text.substr(pos, end - pos);
    pos = nl == std::string_view::npos ? text.size() + 1 : nl + 1;

    while (!line.empty() && (line.back() == '\r' || line.back() == ' ' || line.back() == '\t'))
      line.remove_suffix(1);
    while (!line.empty() && (line.front() == ' ' || line.front() == '\t')) line.remove_prefix(1);
    if (line.empty() || line.front() == '#') continue;

    if (line == "[family]") {
      pending.push_back({{}, line_number});
      continue;
    }
    if (line.front() == '[') {
      throw ConfigError(line_number, "unknown section '" + std::string(line) + "'");
    }

    const std::size_t eq = line.find('=');
    if (eq == std::string_view::npos) {
      throw ConfigError(line_number, "expected key=value, got '" + std::string(line) + "'");
    }
    if (pending.empty()) {
      throw ConfigError(line_number, "key outside a [family] section");
    }
    const std::string key(line.substr(0, eq));
    const std::string value(line.substr(eq + 1));
    auto& family = pending.back();
    if (family.values.count(key)) {
      throw ConfigError(line_number, "duplicate key '" + key + "'");
    }
    family.values[key] = {value, line_number};
  }

  if (pending.empty()) throw ConfigError(line_number, "config contains no [family] section");

  const auto parse_u32_value = [](const std::string& value, std::size_t line,
                                  const std::string& key) {
    std::uint64_t parsed = 0;
    const auto [ptr, ec] = std::from_chars(value.data(), value.data() + value.size(), parsed);
    if (ec != std::errc{} || ptr != value.data() + value.size() || parsed > 0xFFFFFFFFull) {
      throw ConfigError(line, key + " must be a non-negative integer, got '" + value + "'");
    }
    return static_cast<std::uint32_t>(parsed);
  };

  std::vector<BenchFamily> families;
  families.reserve(pending.size());
  for (const auto& p : pending) {
    static const char* const kKeys[] = {"universe", "sets",  "avg_size", "k",
                                        "problems", "seed",  "algo_a",   "algo_b"};
    for (const char* key : kKeys) {
      if (!p.values.count(key)) {
        throw ConfigError(p.start_line, std::string("family is missing key '") + key + "'");
      }
    }
    for (const auto& [key, value] : p.values) {
      bool known = false;
      for (const char* k : kKeys) known |= key == k;
      if (!known) throw ConfigError(value.second, "unknown key '" + key + "'");
    }

    BenchFamily family;
    const auto& v = p.values;
    family.spec.universe_size = parse_u32_value(v.at("universe").first, v.at("universe").second,
                                                "universe");
    family.spec.num_sets = parse_u32_value(v.at("sets").first, v.at("sets").second, "sets");
    family.spec.avg_set_size =
        parse_u32_value(v.at("avg_size").first, v.at("avg_size").second, "avg_size");
    family.spec.k = parse_u32_value(v.at("k").first, v.at("k").second, "k");
    family.spec.num_problems =
        parse_u32_value(v.at("problems").first, v.at("problems").second, "problems");
    {
      const std::string& value = v.at("seed").first;
      std::uint64_t seed = 0;
      const auto [ptr, ec] = std::from_chars(value.data(), value.data() + value.size(), seed);
      if (ec != std::errc{} || ptr != value.data() + value.size()) {
        throw ConfigError(v.at("seed").second,
                          "seed must be a non-negative integer, got '" + value + "'");
      }
      family.spec.seed = seed;
    }
    try {
      family.spec.validate();
      family.algo_a = AlgoSpec::parse(v.at("algo_a").first);
      family.algo_b = AlgoSpec::parse(v.at("algo_b").first);
    } catch (const Error& e) {
      throw ConfigError(p.start_line, e.what());
    }
    families.push_back(std::move(family));
  }
  return families;
}

}  // namespace maxcover
