#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "scatter/maps.hpp"
#include "scatter/point_set.hpp"
#include "scatter/rational.hpp"

namespace scatter {

// Every nonexpanding self-map of the block set either has a finite image or
// shifts every block past all earlier ones; anything else disqualifies the
// map outright.
enum class MapVerdict { finite_image, forward_shifting, neither };

struct Dichotomy {
  MapVerdict verdict = MapVerdict::neither;
  std::uint32_t blocks = 0;               // tested window
  std::size_t image_cardinality = 0;      // |f(set(blocks))|
  std::size_t image_cardinality_next = 0; // |f(set(blocks + 1))|
  std::vector<Rat> escape_witnesses;      // image points outside the full set
  std::vector<std::uint32_t> collision_blocks;  // n with f(F_n) meeting F_1..F_n
  std::vector<Rat> collision_points;
  std::string note;
};
Dichotomy classify_map(const MapExpr& m, std::uint32_t blocks);
std::string render_dichotomy(const Dichotomy& d);

// Structural invariants of the block construction, checked exactly over the
// first `blocks` blocks: grid steps a_n/k_n strictly decrease, inter-block
// distances strictly decrease, and diam F_n <= a_n < dist(F_n, F_{n+1}).
struct InvariantRow {
  std::uint32_t n = 0;
  Rat step;  // a_n / k_n
  Rat diam;  // (k_n - 1) * step
  Rat a;
  Rat gap;   // dist(F_n, F_{n+1})
  bool ok = false;
};
struct CounterexampleReport {
  std::uint32_t blocks = 0;
  bool pass = false;
  std::vector<InvariantRow> rows;
};
CounterexampleReport check_counterexample_invariants(std::uint32_t blocks);
std::string render_counterexample_report(const CounterexampleReport& rep);

// Smallest n >= 2 whose block cardinality k_n exceeds m * (k_1 + ... + k_{n-1});
// exists for every m because k_n = n * (k_1 + ... + k_{n-1}).
struct CountingRefutation {
  std::uint32_t m = 0;
  std::uint32_t n = 0;
  Int block_size;  // k_n
  Int bound;       // m * sum of earlier sizes
};
CountingRefutation counting_refutation(std::uint32_t m);

// Full refutation of a candidate system on the block set: classifies each
// map, lists uncovered points of set(blocks) and the counting deficits
// k_n vs (#shifting maps) * prefix + (finite-image residue).
struct DeficitRow {
  std::uint32_t n = 0;
  Int block_size;
  Int bound;
  bool exceeded = false;
};
struct RefutationReport {
  std::uint32_t blocks = 0;
  std::vector<Dichotomy> verdicts;
  std::vector<Rat> uncovered;
  std::vector<DeficitRow> deficits;
  std::size_t shifting_maps = 0;
  std::size_t residue = 0;  // total finite-image cardinality
  bool refuted = false;
  std::string note;
};
RefutationReport refute_candidate_ifs(const std::vector<MapExpr>& maps, std::uint32_t blocks);
std::string render_refutation(const RefutationReport& rep);

}  // namespace scatter
