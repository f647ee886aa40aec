#include "scatter/hutchinson.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>
#include <utility>

namespace scatter {
namespace {

void require(bool ok, const std::string& what) {
  if (!ok) throw std::invalid_argument(what);
}

// Largest distance from a point of `a` to its nearest neighbour in `b`.
Rat directed_hausdorff(const PointSet& a, const PointSet& b) {
  const auto& bs = b.points();
  Rat worst = 0;
  for (const Rat& x : a.points()) {
    auto it = std::lower_bound(bs.begin(), bs.end(), x);
    Rat best;
    bool have = false;
    if (it != bs.end()) {
      best = *it - x;
      have = true;
    }
    if (it != bs.begin()) {
      Rat d = x - *(it - 1);
      if (!have || d < best) best = d;
      have = true;
    }
    if (best > worst) worst = best;
  }
  return worst;
}

std::string list_to_string(const std::vector<Rat>& xs) {
  if (xs.empty()) return "none";
  std::ostringstream os;
  os << xs.size() << " point" << (xs.size() == 1 ? "" : "s") << ":";
  for (const Rat& x : xs) os << ' ' << fraction_string(x);
  return os.str();
}

VerificationReport check_image(std::string identity, const PointSet& image,
                               const PointSet& cover,
                               const std::function<bool(const Rat&)>& member_fn) {
  VerificationReport rep;
  rep.identity = std::move(identity);
  if (member_fn) {
    for (const Rat& p : image.points())
      if (!member_fn(p)) rep.membership_failures.push_back(p);
  }
  for (const Rat& q : cover.points())
    if (!image.contains(q)) rep.uncovered.push_back(q);
  rep.pass = rep.membership_failures.empty() && rep.uncovered.empty();
  rep.note = rep.pass ? "image is sound and covers the coarser truncation"
                      : "verification failed";
  return rep;
}

void check_truncations(const Truncation& t_in, const Truncation& t_cover) {
  require(t_cover.max_block < t_in.max_block && t_cover.max_depth < t_in.max_depth,
          "coverage truncation must be strictly coarser than the input truncation");
}

}  // namespace

Ifs::Ifs(std::vector<MapExpr> m) : maps(std::move(m)) {
  require(!maps.empty(), "a map system needs at least one map");
  ContextPtr ctx;
  for (const MapExpr& f : maps) {
    require(lipschitz_bound(f) < 1, "every map in a system must have Lipschitz bound < 1");
    if (!f.ctx) continue;
    if (!ctx) {
      ctx = f.ctx;
    } else {
      require(ctx->r() == f.ctx->r() && ctx->delta() == f.ctx->delta(),
              "maps in one system must share the same (r, delta) environment");
    }
  }
}

PointSet apply(const Ifs& ifs, const PointSet& s) {
  std::vector<Rat> out;
  for (const MapExpr& f : ifs.maps) {
    PointSet img = image(f, s);
    out.insert(out.end(), img.points().begin(), img.points().end());
  }
  return PointSet::of(std::move(out));
}

PointSet iterate(const Ifs& ifs, PointSet start, std::uint32_t steps) {
  for (std::uint32_t i = 0; i < steps; ++i) start = apply(ifs, start);
  return start;
}

Rat hausdorff(const PointSet& a, const PointSet& b) {
  require(!a.empty() && !b.empty(), "hausdorff distance needs nonempty sets");
  return std::max(directed_hausdorff(a, b), directed_hausdorff(b, a));
}

std::string render_report(const VerificationReport& report) {
  std::ostringstream os;
  os << "identity: " << report.identity << '\n';
  if (report.t_in)
    os << "input truncation: blocks=" << report.t_in->max_block
       << " depth=" << report.t_in->max_depth << '\n';
  if (report.t_cover)
    os << "coverage truncation: blocks=" << report.t_cover->max_block
       << " depth=" << report.t_cover->max_depth << '\n';
  os << "membership failures: " << list_to_string(report.membership_failures) << '\n';
  os << "uncovered: " << list_to_string(report.uncovered) << '\n';
  os << "result: " << (report.pass ? "PASS" : "FAIL") << " (" << report.note << ")\n";
  return os.str();
}

VerificationReport verify_attractor(const Ifs& ifs, const SpaceSpec& spec, const Truncation& t_in,
                                    const Truncation& t_cover) {
  check_truncations(t_in, t_cover);
  PointSet s_in = materialize(spec, t_in);
  PointSet img = apply(ifs, s_in);
  PointSet cover = materialize(spec, t_cover);
  auto member_fn = [&spec](const Rat& x) { return member(spec, x); };
  VerificationReport rep = check_image(
      "attractor check: union of map images over the materialized set", img, cover, member_fn);
  rep.t_in = t_in;
  rep.t_cover = t_cover;
  return rep;
}

VerificationReport verify_property_a(const Ordinal& alpha, const Ordinal& beta, const Rat& r,
                                     const Ordinal& delta, const Truncation& t_in,
                                     const Truncation& t_cover) {
  require(alpha <= beta, "the retraction g_alpha needs alpha <= beta");
  require(beta <= delta, "beta must not exceed delta");
  check_truncations(t_in, t_cover);
  ContextPtr ctx = make_context(r, delta);
  SpaceSpec src = SpaceSpec::L_space(beta, r, delta);
  SpaceSpec dst = SpaceSpec::L_space(alpha, r, delta);
  PointSet img = image(g_map(alpha, ctx), materialize(src, t_in));
  PointSet cover = materialize(dst, t_cover);
  auto member_fn = [dst](const Rat& x) { return member(dst, x); };
  VerificationReport rep =
      check_image("g[" + print_ordinal(alpha) + "] maps L[" + print_ordinal(beta) + "] onto L[" +
                      print_ordinal(alpha) + "]",
                  img, cover, member_fn);
  rep.t_in = t_in;
  rep.t_cover = t_cover;
  return rep;
}

VerificationReport verify_property_b(const Ordinal& alpha, const Rat& r, const Ordinal& delta,
                                     const Truncation& t_in, const Truncation& t_cover) {
  require(alpha <= delta, "alpha must not exceed delta");
  check_truncations(t_in, t_cover);
  ContextPtr ctx = make_context(r, delta);
  Ordinal succ = alpha + Ordinal::nat(1);
  SpaceSpec src = SpaceSpec::K_space(succ, r, delta);
  SpaceSpec dst = SpaceSpec::K_space(alpha, r, delta);
  PointSet img = image(f_map(alpha, ctx), materialize(src, t_in));
  PointSet cover = materialize(dst, t_cover);
  auto member_fn = [dst](const Rat& x) { return member(dst, x); };
  VerificationReport rep =
      check_image("f[" + print_ordinal(alpha) + "] maps K[" + print_ordinal(succ) + "] onto K[" +
                      print_ordinal(alpha) + "]",
                  img, cover, member_fn);
  rep.t_in = t_in;
  rep.t_cover = t_cover;
  return rep;
}

VerificationReport verify_covering(const Ifs& ifs, const PointSet& s_in, const PointSet& s_cover,
                                   const std::function<bool(const Rat&)>& member_fn,
                                   std::string identity) {
  PointSet img = apply(ifs, s_in);
  return check_image(std::move(identity), img, s_cover, member_fn);
}

Ifs power(const Ifs& ifs, std::uint32_t k) {
  require(k >= 1, "power needs k >= 1");
  if (k == 1) return ifs;
  std::size_t m = ifs.maps.size();
  std::vector<MapExpr> out;
  std::vector<std::size_t> idx(k, 0);
  for (;;) {
    std::vector<MapExpr> parts;
    parts.reserve(k);
    for (std::size_t i : idx) parts.push_back(ifs.maps[i]);
    out.push_back(compose(std::move(parts)));
    std::size_t pos = k;
    while (pos > 0) {
      --pos;
      if (++idx[pos] < m) break;
      idx[pos] = 0;
      if (pos == 0) return Ifs(std::move(out));
    }
  }
}

Ifs ifs_for(const Ordinal& delta, const Rat& r) {
  ContextPtr ctx = make_context(r, delta);
  std::vector<MapExpr> maps;
  maps.push_back(phi(ctx));
  maps.push_back(phi_top(ctx));
  return Ifs(std::move(maps));
}

UnionResult union_attractor(const Ifs& a, const PointSet& a_piece, const Ifs& b,
                            const PointSet& b_piece) {
  require(!a_piece.empty() && !b_piece.empty(), "union pieces must be nonempty");
  Rat gap;
  if (b_piece.min() > a_piece.max()) {
    gap = b_piece.min() - a_piece.max();
  } else if (a_piece.min() > b_piece.max()) {
    gap = a_piece.min() - b_piece.max();
  } else {
    throw std::invalid_argument("union pieces must have disjoint hulls");
  }
  Rat diam = std::max(a_piece.max(), b_piece.max()) - std::min(a_piece.min(), b_piece.min());
  Rat threshold = gap / (2 * diam);

  Rat q = 0;
  for (const MapExpr& f : a.maps) q = std::max(q, lipschitz_bound(f));
  for (const MapExpr& f : b.maps) q = std::max(q, lipschitz_bound(f));

  std::uint32_t k = 1;
  Rat qk = q;
  while (qk >= threshold) {
    ++k;
    qk *= q;
  }

  auto extend = [&](const Ifs& sys, const PointSet& home) {
    Ifs p = power(sys, k);
    std::vector<MapExpr> out;
    out.reserve(p.maps.size());
    for (MapExpr& f : p.maps) {
      Rat lip = lipschitz_bound(f);
      Rat value = eval(f, home.min());
      Rat bound = std::max(lip, lip * home.diameter() / gap);
      out.push_back(const_outside(std::move(f), home.min(), home.max(), value, bound));
    }
    return out;
  };

  std::vector<MapExpr> maps = extend(a, a_piece);
  std::vector<MapExpr> more = extend(b, b_piece);
  maps.insert(maps.end(), std::make_move_iterator(more.begin()),
              std::make_move_iterator(more.end()));
  return UnionResult{Ifs(std::move(maps)), k};
}

Ifs restrict_attractor(const Ifs& ifs, const std::vector<PointSet>& pieces,
                       const std::vector<Rat>& offsets) {
  require(!pieces.empty() && pieces.size() == offsets.size(),
          "restriction needs matching nonempty piece and offset lists");
  require(offsets[0] == 0, "the first piece must carry the zero offset");
  for (const PointSet& p : pieces) require(!p.empty(), "restriction pieces must be nonempty");
  for (std::size_t j = 0; j < pieces.size(); ++j)
    require(pieces[j] == pieces[0].translated(offsets[j]),
            "every piece must be a translate of the first by its offset");
  Rat diam = pieces[0].diameter();
  for (std::size_t i = 0; i < pieces.size(); ++i)
    for (std::size_t j = i + 1; j < pieces.size(); ++j)
      require(set_distance(pieces[i], pieces[j]) > diam,
              "restriction hypothesis violated: piece distance must exceed the diameter");

  Rat lo = pieces[0].min(), hi = pieces[0].max();
  std::vector<MapExpr> out;
  for (const MapExpr& f : ifs.maps) {
    for (std::size_t j = 0; j < pieces.size(); ++j) {
      PointSet img = image(f, pieces[j]);
      bool inside = img.min() >= lo && img.max() <= hi;
      bool outside = img.max() < lo || img.min() > hi;
      if (inside) {
        out.push_back(compose({f, affine(1, offsets[j])}));
      } else if (!outside) {
        throw std::invalid_argument(
            "restriction hypothesis violated: an image straddles the base piece hull");
      }
    }
  }
  require(!out.empty(), "restriction produced no maps into the base piece");
  return Ifs(std::move(out));
}

}  // namespace scatter
