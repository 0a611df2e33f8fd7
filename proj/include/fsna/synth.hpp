#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "fsna/graph.hpp"
#include "fsna/ingestion.hpp"

namespace fsna {

struct SynthOptions {
  std::size_t nodes = 10;
  double density = 0.5;    // probability of each ordered tie
  double vagueness = 0.2;  // spread as a fraction of the room to each bound
  std::uint64_t seed = 1;
  double scale_max = 1.0;
};

/// Throws std::domain_error for density or vagueness outside [0, 1] or a
/// nonpositive scale.
void validate(const SynthOptions& options);

/// Labels "n01", "n02", ... padded to a common width.
std::vector<std::string> synthetic_labels(std::size_t n);

/// Random directed fuzzy network. Output depends only on the options.
FuzzyDigraph synthesize(const SynthOptions& options);

/// Responses document for the same kind of network: each answered pair gets
/// a pointer trajectory wandering around the committed position on the arc.
ResponseSet synthesize_responses(const SynthOptions& options, std::size_t samples_per_answer = 25);

}  // namespace fsna
