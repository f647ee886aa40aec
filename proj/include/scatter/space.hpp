#pragma once

#include <cstdint>
#include <iosfwd>
#include <memory>
#include <string>
#include <vector>

#include "scatter/context.hpp"
#include "scatter/ordinal.hpp"
#include "scatter/point_set.hpp"
#include "scatter/rational.hpp"

namespace scatter {

// The compact scattered subsets of [0,1] this library can build:
//   K            the nested construction K_0 = {0}, K_{a+1} = {0} u U s_n(K_a)
//   L            the layered construction with block ordinals from the ladder
//   CounterexampleK  the grid-block set {0} u U F_n that no IFS realizes
//   BadEmbedding     copies of K_alpha planted on the counterexample grid
//   Copies       finitely many translated copies of a base space
// K and L use s_n(x) = x/r^n + 1/r^n with r > 3, inside ambient delta.
enum class SpaceKind { K, L, CounterexampleK, BadEmbedding, Copies };

struct Truncation {
  std::uint32_t max_block = 1;  // keep blocks s_n / F_n with n <= max_block
  std::uint32_t max_depth = 0;  // nesting depth budget; both shrink by 1 per descent
};

struct SpaceSpec {
  SpaceKind kind = SpaceKind::K;
  Ordinal alpha;
  Rat r = Rat(4);
  Ordinal delta;
  // Copies only:
  std::shared_ptr<SpaceSpec> base;
  std::uint32_t copies = 0;
  Rat gap;

  static SpaceSpec K_space(Ordinal alpha, Rat r, Ordinal delta);
  static SpaceSpec L_space(Ordinal alpha, Rat r, Ordinal delta);
  static SpaceSpec counterexample();
  static SpaceSpec bad_embedding_space(Ordinal alpha, Rat r, Ordinal delta);
  static SpaceSpec copies_of(SpaceSpec base, std::uint32_t n, Rat gap);

  // alpha <= delta + 1 for K and BadEmbedding, alpha <= delta for L, r > 3,
  // copies >= 1 with positive gap.  Throws std::invalid_argument.
  void validate() const;
};

// Block path from the root: (n1, ..., nk) descends into block n1, then n2, ...
// The empty address names the 0-point of the root.
using Address = std::vector<std::uint32_t>;

struct RankedPoint {
  Rat x;
  Ordinal rank;  // Cantor-Bendixson rank of x in the full space
};

// Finite lower approximation: every union cut to n <= N, descent budget
// (N, D) shrinking to (N-1, D-1) per block; an exhausted budget leaves only
// the block's image of 0.  Monotone in both coordinates, always a subset of
// the full set.
PointSet materialize(const SpaceSpec& spec, const Truncation& t);
std::vector<RankedPoint> materialize_ranked(const SpaceSpec& spec, const Truncation& t);

// Exact membership in the full (untruncated) set; kinds K, L and
// CounterexampleK.  Decides by locating the unique block containing x and
// recursing on s_n^{-1}(x); the block ordinal strictly decreases.
bool member(const SpaceSpec& spec, const Rat& x);

// Cantor-Bendixson rank of the 0-point reached by following `address`.
Ordinal rank_of(const SpaceSpec& spec, const Address& address);

// Cantor-Bendixson height of the whole space.
Ordinal height_of(const SpaceSpec& spec);

// Successor height <=> the space is an IFS-attractor in some metric space.
bool is_topological_attractor(const SpaceSpec& spec);

struct AttractorClassification {
  Ordinal height;
  OrdinalKind height_kind;
  bool topological_attractor;
  std::string note;
};
AttractorClassification classify_attractor(const SpaceSpec& spec);

// Exact maximum of the full set (block-1 recursion), used for scaling.
Rat supremum_point(const SpaceSpec& spec);

// --- The grid-block counterexample ---------------------------------------
// Block parameters: a_n = 1/(3*2^(n-1)); k_1 = 1, k_n = n*(k_1+...+k_{n-1});
// F_n = {i*a_n/k_n : 0 <= i < k_n} shifted by 1/2^(n-1).

Rat counterexample_a(std::uint32_t n);
Int counterexample_k(std::uint32_t n);
Rat counterexample_shift(std::uint32_t n);
Rat counterexample_diam(std::uint32_t n);  // a_n*(k_n-1)/k_n
Rat counterexample_gap(std::uint32_t n);   // dist(F_n, F_{n+1}), parameter-level

struct CounterexampleBlock {
  std::uint32_t n = 0;
  Rat a;
  Int k;
  Rat shift;
  PointSet points;
};
CounterexampleBlock counterexample_block(std::uint32_t n);
PointSet counterexample_set(std::uint32_t blocks);  // {0} u F_1 u ... u F_N
bool counterexample_member(const Rat& x);

// --- Bad embedding and copies ---------------------------------------------

// Each grid point of F_n carries an affine copy of K_alpha shrunk to diameter
// a_n/(3*k_n) and centered there; the scale comes from the full set's
// supremum so enlarging the truncation only adds points.
struct EmbeddedBlocks {
  PointSet points;
  struct Block {
    std::uint32_t n = 0;
    Rat lo, hi;  // hull of the inflated block
  };
  std::vector<Block> blocks;
};
EmbeddedBlocks bad_embedding(const Ordinal& alpha, std::uint32_t blocks, const Truncation& t,
                             const Rat& r, const Ordinal& delta);

// diam(F_n) <= dist(F_n, F_{n+1}) for every consecutive pair present.
bool star_condition(const EmbeddedBlocks& e);

// n translated copies of `copy`, consecutive gaps exactly `gap`; requires
// gap > diameter(copy).
PointSet n_copies(const PointSet& copy, std::uint32_t n, const Rat& gap);

// --- Spec files (JSON) ------------------------------------------------------

struct SpecFile {
  SpaceSpec spec;
  Truncation truncation;
};
SpecFile read_spec_file(std::istream& is);
void write_spec_file(std::ostream& os, const SpaceSpec& spec, const Truncation& t);

}  // namespace scatter
