#pragma once

#include <cstdint>
#include <optional>

#include "lll/graph.hpp"

namespace lll {

struct LabelMode {
  // All labels p when set; otherwise labels are num/den with den drawn from
  // 1..max_denominator and num from 0..den.
  std::optional<Rational> uniform;
  int max_denominator = 64;
};

// Chordal-by-construction generator: vertices are added one at a time, each
// attached to a random subset of one existing clique, so the reverse of the
// insertion order is a perfect elimination ordering. Deterministic per seed
// (raw mt19937_64 draws only, so output is identical across platforms).
// Vertices are named v0..v{n-1}.
LabeledGraph random_chordal(int n, std::uint64_t seed,
                            const LabelMode& labels = {});

}  // namespace lll
