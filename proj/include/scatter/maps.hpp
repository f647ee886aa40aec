#pragma once

#include <cstdint>
#include <memory>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "scatter/context.hpp"
#include "scatter/ordinal.hpp"
#include "scatter/point_set.hpp"
#include "scatter/rational.hpp"

namespace scatter {

struct MapExpr;

struct Affine {
  Rat slope, intercept;
};
struct ScaleShift {
  std::uint32_t n = 1;  // s_n(x) = x/r^n + 1/r^n
};
struct Phi {};  // x/r
struct GMap {
  Ordinal alpha;
};
struct FMap {
  Ordinal alpha;
};
struct PhiTop {};  // s_1 after f_delta
struct Compose {
  std::vector<MapExpr> parts;  // parts[0] applied last: compose(a,b) = a after b
};
// base on [lo, hi], the constant `value` elsewhere; `bound` is the structural
// Lipschitz bound assigned by the constructor, max(lip, lip*diam/gap).
struct ConstOutside {
  std::shared_ptr<const MapExpr> base;
  Rat lo, hi, value, bound;
};

// A self-map of [0,1] built from the construction's pieces.  Non-affine nodes
// carry their (r, delta) context; composing maps from different contexts is
// rejected.
struct MapExpr {
  std::variant<Affine, ScaleShift, Phi, GMap, FMap, PhiTop, Compose, ConstOutside> node;
  ContextPtr ctx;  // null for purely affine trees
};

MapExpr affine(Rat slope, Rat intercept);
MapExpr constant(Rat value);
MapExpr scale_shift(std::uint32_t n, ContextPtr ctx);
MapExpr phi(ContextPtr ctx);
MapExpr g_map(Ordinal alpha, ContextPtr ctx);  // requires alpha <= delta
MapExpr f_map(Ordinal alpha, ContextPtr ctx);  // requires alpha <= delta
MapExpr phi_top(ContextPtr ctx);
MapExpr compose(std::vector<MapExpr> parts);
MapExpr const_outside(MapExpr base, Rat lo, Rat hi, Rat value, Rat bound);

Rat eval(const MapExpr& m, const Rat& x);
PointSet image(const MapExpr& m, const PointSet& s);

// Structural Lipschitz bound: |slope|, 1/r^n, 1/r, r/(r-2) for g and f,
// 1/(r-2) for the top map, products under composition, the stored bound for
// constant extensions.
Rat lipschitz_bound(const MapExpr& m);

// Exact sup of |f(x)-f(y)| / |x-y| over all pairs from the sample.
Rat empirical_lipschitz(const MapExpr& m, const PointSet& sample);

// Smallest integer r > 3 with 1/(r-2) < epsilon, so that the two-map system
// for that r has every contraction ratio below epsilon.
Int smallest_r_for(const Rat& epsilon);

// Text forms: "phi", "phitop", "g(w+1)", "f(2)", "s(3)", "affine(1/2,0)",
// "compose(phi,phi)".
MapExpr parse_map(std::string_view text, ContextPtr ctx);
std::string print_map(const MapExpr& m);

}  // namespace scatter
