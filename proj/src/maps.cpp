#include "scatter/maps.hpp"

#include <algorithm>
#include <stdexcept>

namespace scatter {

namespace {

const SpaceContext& need_ctx(const MapExpr& m) {
  if (!m.ctx) throw std::logic_error("map requires an (r, delta) context");
  return *m.ctx;
}

void check_alpha(const Ordinal& alpha, const SpaceContext& ctx) {
  if (alpha > ctx.delta())
    throw std::invalid_argument("map level exceeds delta: " + print_ordinal(alpha));
}

bool same_env(const SpaceContext& a, const SpaceContext& b) {
  return a.r() == b.r() && a.delta() == b.delta();
}

Rat eval_g(const SpaceContext& ctx, const Ordinal& alpha, const Rat& x);

Rat eval_g0(const SpaceContext& ctx, const Rat& x) {
  Rat edge = Rat(2) / ctx.r();
  if (x <= edge) return Rat(0);
  return (x - edge) * ctx.r() / (ctx.r() - 2);
}

Rat eval_f(const SpaceContext& ctx, const Ordinal& alpha, const Rat& x) {
  if (alpha.is_zero()) return eval_g0(ctx, x);
  std::uint32_t n = ctx.block_of(x);
  if (n == 0) return x;
  if (alpha.is_successor()) return ctx.s(n, eval_f(ctx, alpha.predecessor(), ctx.s_inv(n, x)));
  return ctx.s(n, eval_g(ctx, ctx.alpha_n(alpha, n), ctx.s_inv(n, x)));
}

Rat eval_g(const SpaceContext& ctx, const Ordinal& alpha, const Rat& x) {
  if (alpha.is_zero()) return eval_g0(ctx, x);
  if (alpha.is_limit()) return eval_f(ctx, alpha, x);
  std::uint32_t n = ctx.block_of(x);
  if (n == 0) return x;
  Ordinal an = ctx.alpha_n(alpha, n);
  const Ordinal& child = an < alpha ? an : alpha.predecessor();
  return ctx.s(n, eval_g(ctx, child, ctx.s_inv(n, x)));
}

}  // namespace

MapExpr affine(Rat slope, Rat intercept) {
  return {Affine{std::move(slope), std::move(intercept)}, nullptr};
}

MapExpr constant(Rat value) { return affine(Rat(0), std::move(value)); }

MapExpr scale_shift(std::uint32_t n, ContextPtr ctx) {
  if (n < 1) throw std::invalid_argument("s_n needs n >= 1");
  MapExpr m{ScaleShift{n}, std::move(ctx)};
  need_ctx(m);
  return m;
}

MapExpr phi(ContextPtr ctx) {
  MapExpr m{Phi{}, std::move(ctx)};
  need_ctx(m);
  return m;
}

MapExpr g_map(Ordinal alpha, ContextPtr ctx) {
  MapExpr m{GMap{std::move(alpha)}, std::move(ctx)};
  check_alpha(std::get<GMap>(m.node).alpha, need_ctx(m));
  return m;
}

MapExpr f_map(Ordinal alpha, ContextPtr ctx) {
  MapExpr m{FMap{std::move(alpha)}, std::move(ctx)};
  check_alpha(std::get<FMap>(m.node).alpha, need_ctx(m));
  return m;
}

MapExpr phi_top(ContextPtr ctx) {
  MapExpr m{PhiTop{}, std::move(ctx)};
  need_ctx(m);
  return m;
}

MapExpr compose(std::vector<MapExpr> parts) {
  if (parts.empty()) throw std::invalid_argument("compose needs at least one map");
  ContextPtr ctx;
  for (const MapExpr& p : parts) {
    if (!p.ctx) continue;
    if (!ctx)
      ctx = p.ctx;
    else if (!same_env(*ctx, *p.ctx))
      throw std::invalid_argument("composed maps disagree on (r, delta)");
  }
  return {Compose{std::move(parts)}, std::move(ctx)};
}

MapExpr const_outside(MapExpr base, Rat lo, Rat hi, Rat value, Rat bound) {
  if (lo > hi) throw std::invalid_argument("const-outside needs lo <= hi");
  ContextPtr ctx = base.ctx;
  return {ConstOutside{std::make_shared<const MapExpr>(std::move(base)), std::move(lo),
                       std::move(hi), std::move(value), std::move(bound)},
          std::move(ctx)};
}

Rat eval(const MapExpr& m, const Rat& x) {
  return std::visit(
      [&](const auto& node) -> Rat {
        using T = std::decay_t<decltype(node)>;
        if constexpr (std::is_same_v<T, Affine>) {
          return node.slope * x + node.intercept;
        } else if constexpr (std::is_same_v<T, ScaleShift>) {
          return need_ctx(m).s(node.n, x);
        } else if constexpr (std::is_same_v<T, Phi>) {
          return x / need_ctx(m).r();
        } else if constexpr (std::is_same_v<T, GMap>) {
          return eval_g(need_ctx(m), node.alpha, x);
        } else if constexpr (std::is_same_v<T, FMap>) {
          return eval_f(need_ctx(m), node.alpha, x);
        } else if constexpr (std::is_same_v<T, PhiTop>) {
          const SpaceContext& ctx = need_ctx(m);
          return ctx.s(1, eval_f(ctx, ctx.delta(), x));
        } else if constexpr (std::is_same_v<T, Compose>) {
          Rat y = x;
          for (auto it = node.parts.rbegin(); it != node.parts.rend(); ++it) y = eval(*it, y);
          return y;
        } else {
          static_assert(std::is_same_v<T, ConstOutside>);
          if (node.lo <= x && x <= node.hi) return eval(*node.base, x);
          return node.value;
        }
      },
      m.node);
}

PointSet image(const MapExpr& m, const PointSet& s) {
  std::vector<Rat> out;
  out.reserve(s.size());
  for (const Rat& x : s) out.push_back(eval(m, x));
  return PointSet::of(std::move(out));
}

Rat lipschitz_bound(const MapExpr& m) {
  return std::visit(
      [&](const auto& node) -> Rat {
        using T = std::decay_t<decltype(node)>;
        if constexpr (std::is_same_v<T, Affine>) {
          return rat_abs(node.slope);
        } else if constexpr (std::is_same_v<T, ScaleShift>) {
          return Rat(1) / need_ctx(m).r_pow(node.n);
        } else if constexpr (std::is_same_v<T, Phi>) {
          return Rat(1) / need_ctx(m).r();
        } else if constexpr (std::is_same_v<T, GMap> || std::is_same_v<T, FMap>) {
          const Rat& r = need_ctx(m).r();
          return r / (r - 2);
        } else if constexpr (std::is_same_v<T, PhiTop>) {
          return Rat(1) / (need_ctx(m).r() - 2);
        } else if constexpr (std::is_same_v<T, Compose>) {
          Rat b(1);
          for (const MapExpr& p : node.parts) b *= lipschitz_bound(p);
          return b;
        } else {
          static_assert(std::is_same_v<T, ConstOutside>);
          return node.bound;
        }
      },
      m.node);
}

Rat empirical_lipschitz(const MapExpr& m, const PointSet& sample) {
  const auto& xs = sample.points();
  if (xs.size() < 2) return Rat(0);
  std::vector<Rat> ys;
  ys.reserve(xs.size());
  for (const Rat& x : xs) ys.push_back(eval(m, x));
  Rat best(0);
  for (std::size_t i = 0; i < xs.size(); ++i)
    for (std::size_t j = i + 1; j < xs.size(); ++j) {
      Rat ratio = rat_abs(ys[i] - ys[j]) / (xs[j] - xs[i]);
      if (ratio > best) best = ratio;
    }
  return best;
}

Int smallest_r_for(const Rat& epsilon) {
  if (epsilon <= 0) throw std::invalid_argument("epsilon must be positive");
  Rat threshold = 2 + 1 / epsilon;  // need r > threshold
  Int floor = numerator(threshold) / denominator(threshold);
  Int r = floor + 1;
  return r < 4 ? Int(4) : r;
}

namespace {

std::vector<std::string_view> split_top_level(std::string_view args) {
  std::vector<std::string_view> out;
  int depth = 0;
  std::size_t start = 0;
  for (std::size_t i = 0; i < args.size(); ++i) {
    char c = args[i];
    if (c == '(') ++depth;
    if (c == ')') --depth;
    if (c == ',' && depth == 0) {
      out.push_back(args.substr(start, i - start));
      start = i + 1;
    }
  }
  out.push_back(args.substr(start));
  return out;
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

// Bare integers print without the /1, matching the accepted input forms.
std::string rat_text(const Rat& x) {
  return denominator(x) == 1 ? numerator(x).str() : fraction_string(x);
}

}  // namespace

MapExpr parse_map(std::string_view text, ContextPtr ctx) {
  std::string_view s = trim(text);
  auto paren = s.find('(');
  std::string name(trim(paren == std::string_view::npos ? s : s.substr(0, paren)));
  std::string_view args;
  if (paren != std::string_view::npos) {
    if (s.back() != ')') throw std::invalid_argument("unbalanced parentheses in map: " + std::string(text));
    args = s.substr(paren + 1, s.size() - paren - 2);
  }
  if (name == "phi") return phi(ctx);
  if (name == "phitop") return phi_top(ctx);
  if (name == "g") return g_map(parse_ordinal(args), ctx);
  if (name == "f") return f_map(parse_ordinal(args), ctx);
  if (name == "s") {
    Ordinal n = parse_ordinal(args);
    return scale_shift(static_cast<std::uint32_t>(n.nat_value()), ctx);
  }
  if (name == "affine") {
    auto parts = split_top_level(args);
    if (parts.size() != 2) throw std::invalid_argument("affine needs two arguments");
    return affine(parse_rational(trim(parts[0])), parse_rational(trim(parts[1])));
  }
  if (name == "compose") {
    std::vector<MapExpr> parts;
    for (std::string_view part : split_top_level(args)) parts.push_back(parse_map(part, ctx));
    return compose(std::move(parts));
  }
  throw std::invalid_argument("unknown map: " + std::string(text));
}

std::string print_map(const MapExpr& m) {
  return std::visit(
      [&](const auto& node) -> std::string {
        using T = std::decay_t<decltype(node)>;
        if constexpr (std::is_same_v<T, Affine>) {
          return "affine(" + rat_text(node.slope) + "," + rat_text(node.intercept) + ")";
        } else if constexpr (std::is_same_v<T, ScaleShift>) {
          return "s(" + std::to_string(node.n) + ")";
        } else if constexpr (std::is_same_v<T, Phi>) {
          return "phi";
        } else if constexpr (std::is_same_v<T, GMap>) {
          return "g(" + print_ordinal(node.alpha) + ")";
        } else if constexpr (std::is_same_v<T, FMap>) {
          return "f(" + print_ordinal(node.alpha) + ")";
        } else if constexpr (std::is_same_v<T, PhiTop>) {
          return "phitop";
        } else if constexpr (std::is_same_v<T, Compose>) {
          std::string out = "compose(";
          for (std::size_t i = 0; i < node.parts.size(); ++i) {
            if (i) out += ',';
            out += print_map(node.parts[i]);
          }
          return out + ")";
        } else {
          static_assert(std::is_same_v<T, ConstOutside>);
          return "extend(" + print_map(*node.base) + ",[" + rat_text(node.lo) + "," +
                 rat_text(node.hi) + "]," + rat_text(node.value) + ")";
        }
      },
      m.node);
}

}  // namespace scatter
