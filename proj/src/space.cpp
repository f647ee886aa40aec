#include "scatter/space.hpp"

#include <algorithm>
#include <istream>
#include <map>
#include <ostream>
#include <tuple>

#include "json.hpp"

namespace scatter {

namespace {

using Json = nlohmann::json;

void require(bool ok, const std::string& what) {
  if (!ok) throw std::invalid_argument(what);
}

void check_truncation(const Truncation& t) {
  require(t.max_block >= 1, "truncation needs max_block >= 1");
}

// Child ordinal when descending into block n of (kind, alpha); flips K to L
// at limit levels.  alpha must be nonzero.
struct Descent {
  bool is_k;
  Ordinal alpha;
};

Descent descend(const SpaceContext& ctx, bool is_k, const Ordinal& alpha, std::uint32_t n) {
  if (is_k && !alpha.is_limit()) return {true, alpha.predecessor()};
  if (alpha.is_limit()) return {false, ctx.alpha_n(alpha, n)};
  Ordinal an = ctx.alpha_n(alpha, n);
  return {false, an < alpha ? an : alpha.predecessor()};
}

class Materializer {
 public:
  explicit Materializer(const SpaceContext& ctx) : ctx_(ctx) {}

  using Ranked = std::vector<RankedPoint>;

  std::shared_ptr<const Ranked> mat(bool is_k, const Ordinal& alpha, std::uint32_t n_budget,
                                    std::uint32_t d_budget) {
    if (is_k && alpha.is_limit()) is_k = false;  // K and L agree at limits
    auto key = std::make_tuple(is_k, alpha, n_budget, d_budget);
    if (auto it = memo_.find(key); it != memo_.end()) return it->second;

    auto out = std::make_shared<Ranked>();
    out->push_back({Rat(0), alpha});
    if (!alpha.is_zero() && n_budget >= 1 && d_budget >= 1) {
      for (std::uint32_t n = 1; n <= n_budget; ++n) {
        Descent d = descend(ctx_, is_k, alpha, n);
        auto sub = mat(d.is_k, d.alpha, n_budget - 1, d_budget - 1);
        for (const RankedPoint& p : *sub) out->push_back({ctx_.s(n, p.x), p.rank});
      }
    }
    std::sort(out->begin(), out->end(),
              [](const RankedPoint& a, const RankedPoint& b) { return a.x < b.x; });
    memo_.emplace(std::move(key), out);
    return out;
  }

 private:
  const SpaceContext& ctx_;
  std::map<std::tuple<bool, Ordinal, std::uint32_t, std::uint32_t>,
           std::shared_ptr<const Ranked>>
      memo_;
};

bool member_rec(const SpaceContext& ctx, bool is_k, const Ordinal& alpha, const Rat& x) {
  if (x == 0) return true;
  if (alpha.is_zero()) return false;
  std::uint32_t n = ctx.block_of(x);
  if (n == 0) return false;
  Descent d = descend(ctx, is_k, alpha, n);
  return member_rec(ctx, d.is_k, d.alpha, ctx.s_inv(n, x));
}

Rat sup_rec(const SpaceContext& ctx, bool is_k, const Ordinal& alpha) {
  if (alpha.is_zero()) return Rat(0);
  Descent d = descend(ctx, is_k, alpha, 1);
  return ctx.s(1, sup_rec(ctx, d.is_k, d.alpha));
}

std::vector<RankedPoint> counterexample_ranked(std::uint32_t blocks) {
  std::vector<RankedPoint> out;
  out.push_back({Rat(0), Ordinal::nat(1)});
  for (std::uint32_t n = blocks; n >= 1; --n)
    for (const Rat& x : counterexample_block(n).points) out.push_back({x, Ordinal()});
  return out;
}

struct RankedEmbedding {
  std::vector<RankedPoint> points;
  std::vector<EmbeddedBlocks::Block> blocks;
};

RankedEmbedding bad_embedding_ranked(const Ordinal& alpha, std::uint32_t blocks,
                                     const Truncation& t, const Rat& r, const Ordinal& delta) {
  check_truncation(t);
  RankedEmbedding out;
  out.points.push_back({Rat(0), add(alpha, Ordinal::nat(1))});
  std::vector<RankedPoint> copy;
  Rat copy_sup(0);
  if (!alpha.is_zero()) {
    copy = materialize_ranked(SpaceSpec::K_space(alpha, r, delta), t);
    copy_sup = supremum_point(SpaceSpec::K_space(alpha, r, delta));
  }
  for (std::uint32_t n = blocks; n >= 1; --n) {
    CounterexampleBlock block = counterexample_block(n);
    EmbeddedBlocks::Block hull{n, block.points.min(), block.points.max()};
    if (alpha.is_zero()) {
      for (const Rat& g : block.points) out.points.push_back({g, Ordinal()});
    } else {
      Rat span = block.a / (3 * block.k);  // copy diameter a_n/(3 k_n)
      Rat scale = span / copy_sup;
      Rat half = span / 2;
      hull.lo = block.points.min() - half;
      hull.hi = block.points.max() - half + copy_sup * scale;
      for (const Rat& g : block.points) {
        Rat lo = g - half;
        for (const RankedPoint& p : copy) out.points.push_back({lo + p.x * scale, p.rank});
      }
    }
    out.blocks.push_back(hull);
  }
  std::sort(out.points.begin(), out.points.end(),
            [](const RankedPoint& a, const RankedPoint& b) { return a.x < b.x; });
  std::sort(out.blocks.begin(), out.blocks.end(),
            [](const auto& a, const auto& b) { return a.n < b.n; });
  return out;
}

std::vector<RankedPoint> copies_ranked(const SpaceSpec& spec, const Truncation& t) {
  std::vector<RankedPoint> base = materialize_ranked(*spec.base, t);
  require(!base.empty(), "empty base for copies");
  Rat diam = base.back().x - base.front().x;
  require(spec.gap > diam, "gap must exceed the copy diameter");
  Rat step = diam + spec.gap;
  std::vector<RankedPoint> out;
  out.reserve(base.size() * spec.copies);
  for (std::uint32_t c = 0; c < spec.copies; ++c) {
    Rat offset = step * c;
    for (const RankedPoint& p : base) out.push_back({p.x + offset, p.rank});
  }
  return out;  // already sorted: copies are disjoint and ascending
}

PointSet strip_ranks(const std::vector<RankedPoint>& ranked) {
  std::vector<Rat> pts;
  pts.reserve(ranked.size());
  for (const RankedPoint& p : ranked) pts.push_back(p.x);
  return PointSet::of(std::move(pts));
}

std::string kind_name(SpaceKind k) {
  switch (k) {
    case SpaceKind::K: return "K";
    case SpaceKind::L: return "L";
    case SpaceKind::CounterexampleK: return "counterexample";
    case SpaceKind::BadEmbedding: return "bad-embedding";
    case SpaceKind::Copies: return "copies";
  }
  throw std::logic_error("unknown kind");
}

SpaceKind kind_from(const std::string& name) {
  if (name == "K") return SpaceKind::K;
  if (name == "L") return SpaceKind::L;
  if (name == "counterexample") return SpaceKind::CounterexampleK;
  if (name == "bad-embedding") return SpaceKind::BadEmbedding;
  if (name == "copies") return SpaceKind::Copies;
  throw std::invalid_argument("unknown space kind: " + name);
}

Json spec_to_json(const SpaceSpec& spec) {
  Json j;
  j["kind"] = kind_name(spec.kind);
  switch (spec.kind) {
    case SpaceKind::K:
    case SpaceKind::L:
    case SpaceKind::BadEmbedding:
      j["alpha"] = print_ordinal(spec.alpha);
      j["r"] = fraction_string(spec.r);
      j["delta"] = print_ordinal(spec.delta);
      break;
    case SpaceKind::CounterexampleK:
      break;
    case SpaceKind::Copies:
      j["n"] = spec.copies;
      j["gap"] = fraction_string(spec.gap);
      j["base"] = spec_to_json(*spec.base);
      break;
  }
  return j;
}

SpaceSpec spec_from_json(const Json& j) {
  SpaceSpec spec;
  spec.kind = kind_from(j.at("kind").get<std::string>());
  switch (spec.kind) {
    case SpaceKind::K:
    case SpaceKind::L:
    case SpaceKind::BadEmbedding:
      spec.alpha = parse_ordinal(j.at("alpha").get<std::string>());
      spec.r = parse_rational(j.at("r").get<std::string>());
      spec.delta = parse_ordinal(j.at("delta").get<std::string>());
      break;
    case SpaceKind::CounterexampleK:
      break;
    case SpaceKind::Copies:
      spec.copies = j.at("n").get<std::uint32_t>();
      spec.gap = parse_rational(j.at("gap").get<std::string>());
      spec.base = std::make_shared<SpaceSpec>(spec_from_json(j.at("base")));
      break;
  }
  spec.validate();
  return spec;
}

}  // namespace

SpaceSpec SpaceSpec::K_space(Ordinal alpha, Rat r, Ordinal delta) {
  SpaceSpec s;
  s.kind = SpaceKind::K;
  s.alpha = std::move(alpha);
  s.r = std::move(r);
  s.delta = std::move(delta);
  s.validate();
  return s;
}

SpaceSpec SpaceSpec::L_space(Ordinal alpha, Rat r, Ordinal delta) {
  SpaceSpec s = K_space(std::move(alpha), std::move(r), std::move(delta));
  s.kind = SpaceKind::L;
  s.validate();
  return s;
}

SpaceSpec SpaceSpec::counterexample() {
  SpaceSpec s;
  s.kind = SpaceKind::CounterexampleK;
  return s;
}

SpaceSpec SpaceSpec::bad_embedding_space(Ordinal alpha, Rat r, Ordinal delta) {
  SpaceSpec s = K_space(std::move(alpha), std::move(r), std::move(delta));
  s.kind = SpaceKind::BadEmbedding;
  return s;
}

SpaceSpec SpaceSpec::copies_of(SpaceSpec base, std::uint32_t n, Rat gap) {
  SpaceSpec s;
  s.kind = SpaceKind::Copies;
  s.base = std::make_shared<SpaceSpec>(std::move(base));
  s.copies = n;
  s.gap = std::move(gap);
  s.validate();
  return s;
}

void SpaceSpec::validate() const {
  switch (kind) {
    case SpaceKind::K:
    case SpaceKind::BadEmbedding:
      require(r > 3, "scale ratio must exceed 3");
      require(alpha <= add(delta, Ordinal::nat(1)), "kind K needs alpha <= delta+1");
      break;
    case SpaceKind::L:
      require(r > 3, "scale ratio must exceed 3");
      require(alpha <= delta, "kind L needs alpha <= delta");
      break;
    case SpaceKind::CounterexampleK:
      break;
    case SpaceKind::Copies:
      require(base != nullptr, "copies need a base spec");
      require(copies >= 1, "copies need n >= 1");
      require(gap > 0, "copies need a positive gap");
      base->validate();
      break;
  }
}

std::vector<RankedPoint> materialize_ranked(const SpaceSpec& spec, const Truncation& t) {
  spec.validate();
  check_truncation(t);
  switch (spec.kind) {
    case SpaceKind::K:
    case SpaceKind::L: {
      SpaceContext ctx(spec.r, spec.delta);
      Materializer m(ctx);
      return *m.mat(spec.kind == SpaceKind::K, spec.alpha, t.max_block, t.max_depth);
    }
    case SpaceKind::CounterexampleK: {
      auto out = counterexample_ranked(t.max_block);
      std::sort(out.begin(), out.end(),
                [](const RankedPoint& a, const RankedPoint& b) { return a.x < b.x; });
      return out;
    }
    case SpaceKind::BadEmbedding:
      return bad_embedding_ranked(spec.alpha, t.max_block, t, spec.r, spec.delta).points;
    case SpaceKind::Copies:
      return copies_ranked(spec, t);
  }
  throw std::logic_error("unknown kind");
}

PointSet materialize(const SpaceSpec& spec, const Truncation& t) {
  return strip_ranks(materialize_ranked(spec, t));
}

bool member(const SpaceSpec& spec, const Rat& x) {
  spec.validate();
  switch (spec.kind) {
    case SpaceKind::K:
    case SpaceKind::L: {
      if (x < 0 || x > 1) return false;
      SpaceContext ctx(spec.r, spec.delta);
      return member_rec(ctx, spec.kind == SpaceKind::K, spec.alpha, x);
    }
    case SpaceKind::CounterexampleK:
      return counterexample_member(x);
    default:
      throw std::domain_error("membership is only decidable for kinds K, L, counterexample");
  }
}

Ordinal rank_of(const SpaceSpec& spec, const Address& address) {
  spec.validate();
  switch (spec.kind) {
    case SpaceKind::K:
    case SpaceKind::L: {
      SpaceContext ctx(spec.r, spec.delta);
      bool is_k = spec.kind == SpaceKind::K;
      Ordinal alpha = spec.alpha;
      for (std::uint32_t n : address) {
        require(n >= 1, "address entries are positive block indices");
        require(!alpha.is_zero(), "address descends below a single point");
        Descent d = descend(ctx, is_k, alpha, n);
        is_k = d.is_k;
        alpha = d.alpha;
      }
      return alpha;
    }
    case SpaceKind::CounterexampleK: {
      if (address.empty()) return Ordinal::nat(1);
      require(address.size() == 2, "counterexample addresses are (block, index) pairs");
      require(address[0] >= 1 && address[1] >= 1 &&
                  Int(address[1]) <= counterexample_k(address[0]),
              "counterexample address out of range");
      return Ordinal();
    }
    case SpaceKind::BadEmbedding: {
      if (address.empty()) return add(spec.alpha, Ordinal::nat(1));
      require(address.size() >= 2, "bad-embedding addresses start with (block, index)");
      require(address[0] >= 1 && address[1] >= 1 &&
                  Int(address[1]) <= counterexample_k(address[0]),
              "bad-embedding address out of range");
      Address rest(address.begin() + 2, address.end());
      return rank_of(SpaceSpec::K_space(spec.alpha, spec.r, spec.delta), rest);
    }
    case SpaceKind::Copies: {
      require(!address.empty(), "copies have no distinguished root point");
      require(address[0] >= 1 && address[0] <= spec.copies, "copy index out of range");
      Address rest(address.begin() + 1, address.end());
      return rank_of(*spec.base, rest);
    }
  }
  throw std::logic_error("unknown kind");
}

Ordinal height_of(const SpaceSpec& spec) {
  spec.validate();
  switch (spec.kind) {
    case SpaceKind::K:
    case SpaceKind::L:
      return spec.alpha;
    case SpaceKind::CounterexampleK:
      return Ordinal::nat(1);
    case SpaceKind::BadEmbedding:
      return add(spec.alpha, Ordinal::nat(1));
    case SpaceKind::Copies:
      return height_of(*spec.base);
  }
  throw std::logic_error("unknown kind");
}

bool is_topological_attractor(const SpaceSpec& spec) {
  return classify(height_of(spec)) == OrdinalKind::successor;
}

AttractorClassification classify_attractor(const SpaceSpec& spec) {
  AttractorClassification c;
  c.height = height_of(spec);
  c.height_kind = classify(c.height);
  c.topological_attractor = c.height_kind == OrdinalKind::successor;
  switch (c.height_kind) {
    case OrdinalKind::zero:
      c.note =
          "height 0: reported false by the successor-height test; note that "
          "finite sets are IFS-attractors in every metric space";
      break;
    case OrdinalKind::successor:
      c.note = "successor height: an IFS-attractor in some metric space";
      break;
    case OrdinalKind::limit:
      c.note = "limit height: not an IFS-attractor in any metric space";
      break;
  }
  return c;
}

Rat supremum_point(const SpaceSpec& spec) {
  spec.validate();
  switch (spec.kind) {
    case SpaceKind::K:
    case SpaceKind::L: {
      SpaceContext ctx(spec.r, spec.delta);
      return sup_rec(ctx, spec.kind == SpaceKind::K, spec.alpha);
    }
    case SpaceKind::CounterexampleK:
      return Rat(1);
    case SpaceKind::BadEmbedding: {
      if (spec.alpha.is_zero()) return Rat(1);
      return Rat(1) + counterexample_a(1) / 6;  // top copy centered at 1
    }
    case SpaceKind::Copies: {
      Rat d = supremum_point(*spec.base);
      require(spec.gap > d, "gap must exceed the copy diameter");
      return d + (d + spec.gap) * (spec.copies - 1);
    }
  }
  throw std::logic_error("unknown kind");
}

Rat counterexample_a(std::uint32_t n) {
  require(n >= 1, "block index starts at 1");
  return Rat(1, 3 * (Int(1) << (n - 1)));
}

Int counterexample_k(std::uint32_t n) {
  require(n >= 1, "block index starts at 1");
  static std::vector<Int> ks{Int(1)};  // ks[i] = k_{i+1}
  static Int partial_sum{1};           // k_1 + ... + k_{ks.size()}
  while (ks.size() < n) {
    Int next = Int(ks.size() + 1) * partial_sum;
    partial_sum += next;
    ks.push_back(std::move(next));
  }
  return ks[n - 1];
}

Rat counterexample_shift(std::uint32_t n) {
  require(n >= 1, "block index starts at 1");
  return Rat(1, Int(1) << (n - 1));
}

Rat counterexample_diam(std::uint32_t n) {
  Int k = counterexample_k(n);
  return counterexample_a(n) * Rat(k - 1, k);
}

Rat counterexample_gap(std::uint32_t n) {
  return counterexample_shift(n) - counterexample_shift(n + 1) - counterexample_diam(n + 1);
}

CounterexampleBlock counterexample_block(std::uint32_t n) {
  CounterexampleBlock b;
  b.n = n;
  b.a = counterexample_a(n);
  b.k = counterexample_k(n);
  b.shift = counterexample_shift(n);
  Rat step = b.a / b.k;
  std::vector<Rat> pts;
  for (Int i = 0; i < b.k; ++i) pts.push_back(b.shift + step * Rat(i));
  b.points = PointSet::of(std::move(pts));
  return b;
}

PointSet counterexample_set(std::uint32_t blocks) {
  require(blocks >= 1, "need at least one block");
  return strip_ranks(counterexample_ranked(blocks));
}

bool counterexample_member(const Rat& x) {
  if (x == 0) return true;
  if (x <= 0 || x > 1) return false;
  std::uint32_t n = 1;
  while (counterexample_shift(n) > x) ++n;
  if (x > counterexample_shift(n) + counterexample_diam(n)) return false;
  Rat offset = (x - counterexample_shift(n)) * Rat(counterexample_k(n)) / counterexample_a(n);
  return denominator(offset) == 1;  // lands on the grid; range already checked
}

EmbeddedBlocks bad_embedding(const Ordinal& alpha, std::uint32_t blocks, const Truncation& t,
                             const Rat& r, const Ordinal& delta) {
  SpaceSpec::bad_embedding_space(alpha, r, delta);  // validates parameters
  RankedEmbedding re = bad_embedding_ranked(alpha, blocks, t, r, delta);
  EmbeddedBlocks out;
  out.points = strip_ranks(re.points);
  out.blocks = std::move(re.blocks);
  return out;
}

bool star_condition(const EmbeddedBlocks& e) {
  for (std::size_t i = 0; i + 1 < e.blocks.size(); ++i) {
    const auto& upper = e.blocks[i];      // F_n sits above F_{n+1}
    const auto& lower = e.blocks[i + 1];
    Rat diam = upper.hi - upper.lo;
    Rat dist = upper.lo - lower.hi;
    if (!(diam <= dist)) return false;
  }
  return true;
}

PointSet n_copies(const PointSet& copy, std::uint32_t n, const Rat& gap) {
  require(!copy.empty(), "empty copy");
  require(n >= 1, "need at least one copy");
  require(gap > copy.diameter(), "gap must exceed the copy diameter");
  Rat step = copy.diameter() + gap;
  std::vector<Rat> pts;
  pts.reserve(copy.size() * n);
  for (std::uint32_t c = 0; c < n; ++c)
    for (const Rat& x : copy) pts.push_back(x + step * c);
  return PointSet::of(std::move(pts));
}

SpecFile read_spec_file(std::istream& is) {
  Json j = Json::parse(is);
  SpecFile f;
  f.spec = spec_from_json(j);
  const Json& t = j.at("truncation");
  f.truncation.max_block = t.at("N").get<std::uint32_t>();
  f.truncation.max_depth = t.at("D").get<std::uint32_t>();
  check_truncation(f.truncation);
  return f;
}

void write_spec_file(std::ostream& os, const SpaceSpec& spec, const Truncation& t) {
  Json j = spec_to_json(spec);
  j["truncation"] = Json{{"N", t.max_block}, {"D", t.max_depth}};
  os << j.dump(2) << "\n";
}

}  // namespace scatter
