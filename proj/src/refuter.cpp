#include "scatter/refuter.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

#include "scatter/space.hpp"

namespace scatter {
namespace {

void require(bool ok, const std::string& what) {
  if (!ok) throw std::invalid_argument(what);
}

const char* verdict_name(MapVerdict v) {
  switch (v) {
    case MapVerdict::finite_image: return "finite-image";
    case MapVerdict::forward_shifting: return "forward-shifting";
    default: return "neither";
  }
}

std::string list_to_string(const std::vector<Rat>& xs, std::size_t cap = 16) {
  if (xs.empty()) return "none";
  std::ostringstream os;
  os << xs.size() << ":";
  for (std::size_t i = 0; i < xs.size() && i < cap; ++i) os << ' ' << fraction_string(xs[i]);
  if (xs.size() > cap) os << " ...";
  return os.str();
}

}  // namespace

Dichotomy classify_map(const MapExpr& m, std::uint32_t blocks) {
  require(blocks >= 1, "classification needs at least one block");
  require(lipschitz_bound(m) <= 1, "the dichotomy applies to nonexpanding maps");
  Dichotomy d;
  d.blocks = blocks;

  PointSet window = counterexample_set(blocks);
  PointSet wider = counterexample_set(blocks + 1);
  PointSet img = image(m, window);
  PointSet img_next = image(m, wider);
  d.image_cardinality = img.size();
  d.image_cardinality_next = img_next.size();

  for (const Rat& p : img.points())
    if (!counterexample_member(p)) d.escape_witnesses.push_back(p);

  std::vector<Rat> prefix;
  prefix.reserve(window.size());
  for (std::uint32_t n = 1; n <= blocks; ++n) {
    CounterexampleBlock block = counterexample_block(n);
    prefix.insert(prefix.end(), block.points.points().begin(), block.points.points().end());
    PointSet seen = PointSet::of(prefix);
    bool hit = false;
    PointSet block_image = image(m, block.points);
    for (const Rat& y : block_image.points()) {
      if (seen.contains(y)) {
        d.collision_points.push_back(y);
        hit = true;
      }
    }
    if (hit) d.collision_blocks.push_back(n);
  }

  if (!d.escape_witnesses.empty()) {
    d.verdict = MapVerdict::neither;
    d.note = "image leaves the set";
  } else if (d.image_cardinality == d.image_cardinality_next) {
    d.verdict = MapVerdict::finite_image;
    d.note = "image cardinality is stable under widening the window";
  } else if (d.collision_blocks.empty()) {
    d.verdict = MapVerdict::forward_shifting;
    d.note = "every block image avoids all earlier blocks";
  } else {
    d.verdict = MapVerdict::neither;
    d.note = "image grows yet meets earlier blocks";
  }
  return d;
}

std::string render_dichotomy(const Dichotomy& d) {
  std::ostringstream os;
  os << "verdict: " << verdict_name(d.verdict) << " (window " << d.blocks << " blocks)\n";
  os << "image cardinality: " << d.image_cardinality << " -> " << d.image_cardinality_next
     << " when widened\n";
  os << "escape witnesses: " << list_to_string(d.escape_witnesses) << '\n';
  if (d.collision_blocks.empty()) {
    os << "collisions: none\n";
  } else {
    os << "collisions in blocks:";
    for (std::uint32_t n : d.collision_blocks) os << ' ' << n;
    os << " at " << list_to_string(d.collision_points) << '\n';
  }
  os << "note: " << d.note << '\n';
  return os.str();
}

CounterexampleReport check_counterexample_invariants(std::uint32_t blocks) {
  require(blocks >= 1, "invariant check needs at least one block");
  CounterexampleReport rep;
  rep.blocks = blocks;
  rep.pass = true;
  for (std::uint32_t n = 1; n <= blocks; ++n) {
    InvariantRow row;
    row.n = n;
    row.a = counterexample_a(n);
    row.step = row.a / Rat(counterexample_k(n));
    row.diam = counterexample_diam(n);
    row.gap = counterexample_gap(n);
    row.ok = row.diam <= row.a && row.a < row.gap;
    if (n >= 2) {
      const InvariantRow& prev = rep.rows.back();
      if (!(row.step < prev.step) || !(row.gap < prev.gap)) row.ok = false;
    }
    if (!row.ok) rep.pass = false;
    rep.rows.push_back(std::move(row));
  }
  return rep;
}

std::string render_counterexample_report(const CounterexampleReport& rep) {
  std::ostringstream os;
  os << "block invariants over " << rep.blocks << " blocks: " << (rep.pass ? "PASS" : "FAIL")
     << '\n';
  for (const InvariantRow& r : rep.rows) {
    os << "  n=" << r.n << " a=" << fraction_string(r.a) << " step=" << fraction_string(r.step)
       << " diam=" << fraction_string(r.diam) << " dist=" << fraction_string(r.gap)
       << (r.ok ? "" : "  <- violated") << '\n';
  }
  return os.str();
}

CountingRefutation counting_refutation(std::uint32_t m) {
  require(m >= 1, "counting refutation needs m >= 1");
  CountingRefutation out;
  out.m = m;
  Int prefix = 0;
  for (std::uint32_t n = 1;; ++n) {
    Int kn = counterexample_k(n);
    if (n >= 2) {
      Int bound = Int(m) * prefix;
      if (kn > bound) {
        out.n = n;
        out.block_size = kn;
        out.bound = bound;
        return out;
      }
    }
    prefix += kn;
  }
}

RefutationReport refute_candidate_ifs(const std::vector<MapExpr>& maps, std::uint32_t blocks) {
  require(!maps.empty(), "refutation needs at least one candidate map");
  require(blocks >= 2, "refutation needs at least two blocks");
  RefutationReport rep;
  rep.blocks = blocks;

  PointSet window = counterexample_set(blocks);
  std::vector<Rat> covered;
  for (const MapExpr& f : maps) {
    rep.verdicts.push_back(classify_map(f, blocks));
    PointSet img = image(f, window);
    covered.insert(covered.end(), img.points().begin(), img.points().end());
  }
  PointSet img_union = PointSet::of(std::move(covered));
  for (const Rat& q : window.points())
    if (!img_union.contains(q)) rep.uncovered.push_back(q);

  for (const Dichotomy& d : rep.verdicts) {
    if (d.verdict == MapVerdict::finite_image)
      rep.residue += d.image_cardinality;
    else
      ++rep.shifting_maps;
  }
  Int prefix = counterexample_k(1);
  for (std::uint32_t n = 2; n <= blocks; ++n) {
    DeficitRow row;
    row.n = n;
    row.block_size = counterexample_k(n);
    row.bound = Int(rep.shifting_maps) * prefix + Int(rep.residue);
    row.exceeded = row.block_size > row.bound;
    prefix += row.block_size;
    rep.deficits.push_back(std::move(row));
  }

  bool counting = std::any_of(rep.deficits.begin(), rep.deficits.end(),
                              [](const DeficitRow& r) { return r.exceeded; });
  rep.refuted = !rep.uncovered.empty() || counting;
  if (!rep.refuted)
    rep.note = "no refutation found in this window";
  else if (!rep.uncovered.empty() && counting)
    rep.note = "coverage fails and a block outgrows what the maps can supply";
  else if (!rep.uncovered.empty())
    rep.note = "coverage fails: listed points have no preimage under any map";
  else
    rep.note = "a block outgrows what the maps can supply";
  return rep;
}

std::string render_refutation(const RefutationReport& rep) {
  std::ostringstream os;
  os << "candidate system on " << rep.blocks << " blocks: "
     << (rep.refuted ? "REFUTED" : "not refuted") << '\n';
  for (std::size_t i = 0; i < rep.verdicts.size(); ++i) {
    os << "map " << (i + 1) << ": " << verdict_name(rep.verdicts[i].verdict) << " ("
       << rep.verdicts[i].note << ")\n";
  }
  os << "shifting maps: " << rep.shifting_maps << ", finite-image residue: " << rep.residue
     << '\n';
  os << "uncovered: " << list_to_string(rep.uncovered) << '\n';
  for (const DeficitRow& r : rep.deficits) {
    os << "  n=" << r.n << " block size " << r.block_size.str() << " vs bound " << r.bound.str()
       << (r.exceeded ? "  <- exceeds" : "") << '\n';
  }
  os << "note: " << rep.note << '\n';
  return os.str();
}

}  // namespace scatter
