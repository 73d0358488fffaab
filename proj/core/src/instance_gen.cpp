#include "maxcover/instance_gen.hpp"

#include <limits>

#include "maxcover/rng.hpp"

namespace maxcover {

void GenSpec::validate() const {
  if (universe_size < 1) throw InvalidSpec("universe size must be >= 1");
  if (num_sets < 1) throw InvalidSpec("set count must be >= 1");
  if (avg_set_size < 1 || avg_set_size > universe_size) {
    throw InvalidSpec("average set size must be in [1, universe size]");
  }
  if (k < 1) throw InvalidSpec("k must be >= 1");
  if (num_problems < 1) throw InvalidSpec("problem count must be >= 1");
}

std::string GenSpec::family_tag() const {
  return "u" + std::to_string(universe_size) + "n" + std::to_string(num_sets) + "m" +
         std::to_string(avg_set_size) + "k" + std::to_string(k);
}

Instance generate_instance(const GenSpec& spec, std::uint32_t problem_index) {
  spec.validate();
  if (problem_index >= spec.num_problems) {
    throw InvalidSpec("problem index " + std::to_string(problem_index) + " >= problem count " +
                      std::to_string(spec.num_problems));
  }

  const bool always = spec.avg_set_size >= spec.universe_size;
  const std::uint64_t threshold =
      always ? 0
             : static_cast<std::uint64_t>((static_cast<unsigned __int128>(spec.avg_set_size)
                                           << 64) /
                                          spec.universe_size);

  SplitMix64 rng(mix_seed(spec.seed, problem_index));
  std::vector<std::vector<std::uint32_t>> sets(spec.num_sets);
  for (auto& elements : sets) {
    do {
      elements.clear();
      for (std::uint32_t e = 0; e < spec.universe_size; ++e) {
        if (always || rng.next() < threshold) elements.push_back(e);
      }
    } while (elements.empty());
  }

  return Instance(spec.universe_size, sets);
}

std::string instance_file_name(std::string_view family_tag, std::uint32_t problem_index) {
  return std::string(family_tag) + "_" + std::to_string(problem_index) + ".mcp";
}

}  // namespace maxcover
