#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "scatter/maps.hpp"
#include "scatter/point_set.hpp"
#include "scatter/space.hpp"

namespace scatter {

// A finite system of maps, every structural Lipschitz bound < 1, all sharing
// one (r, delta) environment when they carry one.
struct Ifs {
  explicit Ifs(std::vector<MapExpr> maps);
  std::vector<MapExpr> maps;
};

// Union of the maps' images.
PointSet apply(const Ifs& ifs, const PointSet& s);
PointSet iterate(const Ifs& ifs, PointSet start, std::uint32_t steps);

// Exact Hausdorff distance between nonempty finite subsets of the line.
Rat hausdorff(const PointSet& a, const PointSet& b);

struct VerificationReport {
  std::string identity;
  std::optional<Truncation> t_in, t_cover;
  std::vector<Rat> membership_failures;  // image points not in the full set
  std::vector<Rat> uncovered;            // coarser-truncation points missed
  bool pass = false;
  std::string note;
};
std::string render_report(const VerificationReport& report);

// Soundness: every image point of materialize(spec, t_in) belongs to the full
// set.  Coverage: the image reaches every point of the strictly coarser
// materialize(spec, t_cover).  Requires t_cover < t_in in both coordinates.
VerificationReport verify_attractor(const Ifs& ifs, const SpaceSpec& spec, const Truncation& t_in,
                                    const Truncation& t_cover);

// g_alpha maps L_beta onto L_alpha (alpha <= beta <= delta), on truncations.
VerificationReport verify_property_a(const Ordinal& alpha, const Ordinal& beta, const Rat& r,
                                     const Ordinal& delta, const Truncation& t_in,
                                     const Truncation& t_cover);

// f_alpha maps K_{alpha+1} onto K_alpha (alpha <= delta), on truncations.
VerificationReport verify_property_b(const Ordinal& alpha, const Rat& r, const Ordinal& delta,
                                     const Truncation& t_in, const Truncation& t_cover);

// Coverage/soundness against explicit point sets; membership check optional.
VerificationReport verify_covering(const Ifs& ifs, const PointSet& s_in, const PointSet& s_cover,
                                   const std::function<bool(const Rat&)>& member_fn,
                                   std::string identity);

// All |maps|^k ordered k-fold compositions.
Ifs power(const Ifs& ifs, std::uint32_t k);

// The two-map system {x/r, s_1 after f_delta} whose attractor is K_{delta+1};
// contraction ratios 1/r and 1/(r-2).
Ifs ifs_for(const Ordinal& delta, const Rat& r);

// Joins two systems with disjoint attractor hulls into one system for the
// union: raises both to the power k with (max bound)^k < gap/(2*diam), then
// extends each map by the constant image of its home piece's minimum.
// Every returned bound is at most 1/2.
struct UnionResult {
  Ifs ifs;
  std::uint32_t k = 1;
};
UnionResult union_attractor(const Ifs& a, const PointSet& a_piece, const Ifs& b,
                            const PointSet& b_piece);

// Restriction of a system on n translated copies to the first copy: keeps
// f_i composed with the translation h_j whenever f_i sends copy j into the
// hull of copy 0.  Requires pairwise distances > the common diameter and
// all-or-nothing placement of every image.
Ifs restrict_attractor(const Ifs& ifs, const std::vector<PointSet>& pieces,
                       const std::vector<Rat>& offsets);

}  // namespace scatter
