// scatterctl: build scattered point sets, query membership, evaluate maps,
// inspect ladder systems, verify attractor identities, refute candidate
// systems, and emit SVG/CSV plots.  Exit codes: 0 pass, 1 fail or
// inconclusive, 2 usage or input error.

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "scatter/hutchinson.hpp"
#include "scatter/ladder.hpp"
#include "scatter/maps.hpp"
#include "scatter/ordinal.hpp"
#include "scatter/point_set.hpp"
#include "scatter/rational.hpp"
#include "scatter/refuter.hpp"
#include "scatter/space.hpp"
#include "scatter/svg.hpp"

namespace {

using namespace scatter;

struct SpaceFlags {
  std::string kind = "K";
  std::string alpha = "0";
  std::string delta;
  std::string r = "4/1";
  std::uint32_t blocks = 4;
  std::uint32_t depth = 4;
  std::uint32_t copies = 0;
  std::string gap = "2/1";
  std::string spec_path;
};

void add_space_flags(CLI::App* cmd, SpaceFlags& f) {
  cmd->add_option("--kind", f.kind, "space kind: K | L | counterexample | bad-embedding")
      ->check(CLI::IsMember({"K", "L", "counterexample", "bad-embedding"}));
  cmd->add_option("--alpha", f.alpha, "level ordinal, e.g. \"w+1\"");
  cmd->add_option("--delta", f.delta, "ambient ordinal (default: alpha)");
  cmd->add_option("--r", f.r, "base ratio > 3, e.g. 4/1");
  cmd->add_option("--blocks", f.blocks, "truncation: blocks per level");
  cmd->add_option("--depth", f.depth, "truncation: recursion depth");
  cmd->add_option("--copies", f.copies, "wrap the space in this many translated copies");
  cmd->add_option("--gap", f.gap, "gap between copies (with --copies)");
  cmd->add_option("--spec", f.spec_path, "read the space from a JSON spec file instead");
}

SpaceSpec spec_from_flags(const SpaceFlags& f) {
  if (!f.spec_path.empty()) {
    std::ifstream in(f.spec_path);
    if (!in) throw std::invalid_argument("cannot open spec file: " + f.spec_path);
    return read_spec_file(in).spec;
  }
  Ordinal alpha = parse_ordinal(f.alpha);
  Ordinal delta = f.delta.empty() ? alpha : parse_ordinal(f.delta);
  Rat r = parse_rational(f.r);
  SpaceSpec spec = [&] {
    if (f.kind == "K") return SpaceSpec::K_space(alpha, r, delta);
    if (f.kind == "L") return SpaceSpec::L_space(alpha, r, delta);
    if (f.kind == "counterexample") return SpaceSpec::counterexample();
    return SpaceSpec::bad_embedding_space(alpha, r, delta);
  }();
  if (f.copies > 0) spec = SpaceSpec::copies_of(std::move(spec), f.copies, parse_rational(f.gap));
  return spec;
}

Truncation truncation_from_flags(const SpaceFlags& f) { return Truncation{f.blocks, f.depth}; }

void write_output(const std::string& path, const std::string& payload) {
  if (path.empty()) {
    std::cout << payload;
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::invalid_argument("cannot open output file: " + path);
  out << payload;
}

std::string format_set(const std::vector<RankedPoint>& ranked, const std::string& format) {
  if (format == "csv") return render_csv(ranked);
  if (format == "svg") return render_svg(ranked);
  std::vector<Rat> xs;
  xs.reserve(ranked.size());
  for (const RankedPoint& p : ranked) xs.push_back(p.x);
  std::ostringstream os;
  write_pointset(os, PointSet::of(std::move(xs)));
  return os.str();
}

std::vector<std::string> split_top_level(const std::string& text) {
  std::vector<std::string> parts;
  std::string cur;
  int depth = 0;
  for (char c : text) {
    if (c == '(') ++depth;
    if (c == ')') --depth;
    if (c == ',' && depth == 0) {
      parts.push_back(cur);
      cur.clear();
    } else {
      cur.push_back(c);
    }
  }
  parts.push_back(cur);
  return parts;
}

std::vector<MapExpr> parse_map_list(const std::string& text, const ContextPtr& ctx) {
  std::vector<MapExpr> maps;
  for (const std::string& part : split_top_level(text)) maps.push_back(parse_map(part, ctx));
  if (maps.empty()) throw std::invalid_argument("empty map list");
  return maps;
}

int run(int argc, char** argv) {
  CLI::App app{"exact scattered-set and IFS-attractor toolkit"};
  app.require_subcommand(1);

  // build-set / plot
  SpaceFlags bs;
  std::string bs_out, bs_format = "txt";
  CLI::App* build = app.add_subcommand("build-set", "materialize a space to a point set");
  add_space_flags(build, bs);
  build->add_option("--out", bs_out, "output path (default: stdout)");
  build->add_option("--format", bs_format, "txt | csv | svg")
      ->check(CLI::IsMember({"txt", "csv", "svg"}));

  SpaceFlags pl;
  std::string pl_out, pl_format = "svg";
  CLI::App* plot = app.add_subcommand("plot", "render a space as an SVG rug plot or CSV");
  add_space_flags(plot, pl);
  plot->add_option("--out", pl_out, "output path (default: stdout)");
  plot->add_option("--format", pl_format, "svg | csv")->check(CLI::IsMember({"svg", "csv"}));

  // member
  SpaceFlags mem;
  std::string mem_x;
  CLI::App* member_cmd = app.add_subcommand("member", "exact membership in the full set");
  add_space_flags(member_cmd, mem);
  member_cmd->add_option("--x", mem_x, "rational point, e.g. 1/16")->required();

  // eval-map
  std::string ev_map, ev_x, ev_r = "4/1", ev_delta = "0";
  CLI::App* eval_cmd = app.add_subcommand("eval-map", "evaluate a map expression at a point");
  eval_cmd->add_option("--map", ev_map, "map text, e.g. \"g(w+1)\" or \"compose(phi,phi)\"")
      ->required();
  eval_cmd->add_option("--x", ev_x, "rational argument")->required();
  eval_cmd->add_option("--r", ev_r, "base ratio > 3");
  eval_cmd->add_option("--delta", ev_delta, "ambient ordinal");

  // ladder
  std::string la_top, la_beta;
  std::uint64_t la_n = 0;
  CLI::App* ladder_cmd = app.add_subcommand("ladder", "rung c_n(beta) of the ladder system");
  ladder_cmd->add_option("--top", la_top, "ladder top ordinal")->required();
  ladder_cmd->add_option("--beta", la_beta, "limit ordinal <= top")->required();
  ladder_cmd->add_option("--n", la_n, "rung index")->required();

  // verify
  CLI::App* verify_cmd = app.add_subcommand("verify", "check an identity on truncations");
  verify_cmd->require_subcommand(1);

  std::string va_delta = "0", va_r = "4/1", va_alpha, va_ifs, va_kind = "K";
  std::uint32_t va_blocks = 6, va_depth = 6;
  CLI::App* v_att = verify_cmd->add_subcommand("attractor", "union of map images equals the set");
  v_att->add_option("--delta", va_delta, "ambient ordinal");
  v_att->add_option("--r", va_r, "base ratio > 3");
  v_att->add_option("--alpha", va_alpha, "space level (default: delta + 1)");
  v_att->add_option("--kind", va_kind, "K | L")->check(CLI::IsMember({"K", "L"}));
  v_att->add_option("--ifs", va_ifs, "comma-separated maps (default: phi,phitop)");
  v_att->add_option("--blocks", va_blocks, "input truncation blocks");
  v_att->add_option("--depth", va_depth, "input truncation depth");

  std::string pa_alpha, pa_beta, pa_r = "4/1", pa_delta;
  std::uint32_t pa_blocks = 4, pa_depth = 4;
  CLI::App* v_pa = verify_cmd->add_subcommand("property-a", "g_alpha maps L_beta onto L_alpha");
  v_pa->add_option("--alpha", pa_alpha)->required();
  v_pa->add_option("--beta", pa_beta)->required();
  v_pa->add_option("--r", pa_r, "base ratio > 3");
  v_pa->add_option("--delta", pa_delta, "ambient ordinal (default: beta)");
  v_pa->add_option("--blocks", pa_blocks, "input truncation blocks");
  v_pa->add_option("--depth", pa_depth, "input truncation depth");

  std::string pb_alpha, pb_r = "4/1", pb_delta;
  std::uint32_t pb_blocks = 4, pb_depth = 4;
  CLI::App* v_pb =
      verify_cmd->add_subcommand("property-b", "f_alpha maps K_{alpha+1} onto K_alpha");
  v_pb->add_option("--alpha", pb_alpha)->required();
  v_pb->add_option("--r", pb_r, "base ratio > 3");
  v_pb->add_option("--delta", pb_delta, "ambient ordinal (default: alpha)");
  v_pb->add_option("--blocks", pb_blocks, "input truncation blocks");
  v_pb->add_option("--depth", pb_depth, "input truncation depth");

  std::uint32_t vc_blocks = 20;
  CLI::App* v_cx = verify_cmd->add_subcommand("counterexample", "block construction invariants");
  v_cx->add_option("--blocks", vc_blocks, "blocks to check");

  // refute
  std::string rf_ifs, rf_r = "4/1", rf_delta = "0";
  std::uint32_t rf_blocks = 3;
  CLI::App* refute_cmd =
      app.add_subcommand("refute", "refute a candidate system on the block set");
  refute_cmd->add_option("--ifs", rf_ifs, "comma-separated candidate maps")->required();
  refute_cmd->add_option("--blocks", rf_blocks, "window size");
  refute_cmd->add_option("--r", rf_r, "base ratio for map context");
  refute_cmd->add_option("--delta", rf_delta, "ambient ordinal for map context");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  if (*build) {
    auto ranked = materialize_ranked(spec_from_flags(bs), truncation_from_flags(bs));
    write_output(bs_out, format_set(ranked, bs_format));
    return 0;
  }
  if (*plot) {
    auto ranked = materialize_ranked(spec_from_flags(pl), truncation_from_flags(pl));
    write_output(pl_out, format_set(ranked, pl_format));
    return 0;
  }
  if (*member_cmd) {
    bool in = member(spec_from_flags(mem), parse_rational(mem_x));
    std::cout << (in ? "member" : "not a member") << '\n';
    return in ? 0 : 1;
  }
  if (*eval_cmd) {
    ContextPtr ctx = make_context(parse_rational(ev_r), parse_ordinal(ev_delta));
    MapExpr m = parse_map(ev_map, ctx);
    std::cout << fraction_string(eval(m, parse_rational(ev_x))) << '\n';
    return 0;
  }
  if (*ladder_cmd) {
    LadderContext ctx(parse_ordinal(la_top));
    std::cout << print_ordinal(ctx.rung(parse_ordinal(la_beta), la_n)) << '\n';
    return 0;
  }
  if (*v_att) {
    if (va_blocks < 2 || va_depth < 2)
      throw std::invalid_argument("attractor check needs --blocks and --depth >= 2");
    Ordinal delta = parse_ordinal(va_delta);
    Rat r = parse_rational(va_r);
    Ordinal alpha = va_alpha.empty() ? delta + Ordinal::nat(1) : parse_ordinal(va_alpha);
    SpaceSpec spec = va_kind == "K" ? SpaceSpec::K_space(alpha, r, delta)
                                    : SpaceSpec::L_space(alpha, r, delta);
    Ifs ifs = va_ifs.empty() ? ifs_for(delta, r)
                             : Ifs(parse_map_list(va_ifs, make_context(r, delta)));
    VerificationReport rep = verify_attractor(ifs, spec, Truncation{va_blocks, va_depth},
                                              Truncation{va_blocks - 1, va_depth - 1});
    std::cout << render_report(rep);
    return rep.pass ? 0 : 1;
  }
  if (*v_pa) {
    if (pa_blocks < 2 || pa_depth < 2)
      throw std::invalid_argument("property check needs --blocks and --depth >= 2");
    Ordinal beta = parse_ordinal(pa_beta);
    Ordinal delta = pa_delta.empty() ? beta : parse_ordinal(pa_delta);
    VerificationReport rep = verify_property_a(parse_ordinal(pa_alpha), beta, parse_rational(pa_r),
                                               delta, Truncation{pa_blocks, pa_depth},
                                               Truncation{pa_blocks - 1, pa_depth - 1});
    std::cout << render_report(rep);
    return rep.pass ? 0 : 1;
  }
  if (*v_pb) {
    if (pb_blocks < 2 || pb_depth < 2)
      throw std::invalid_argument("property check needs --blocks and --depth >= 2");
    Ordinal alpha = parse_ordinal(pb_alpha);
    Ordinal delta = pb_delta.empty() ? alpha : parse_ordinal(pb_delta);
    VerificationReport rep =
        verify_property_b(alpha, parse_rational(pb_r), delta, Truncation{pb_blocks, pb_depth},
                          Truncation{pb_blocks - 1, pb_depth - 1});
    std::cout << render_report(rep);
    return rep.pass ? 0 : 1;
  }
  if (*v_cx) {
    CounterexampleReport rep = check_counterexample_invariants(vc_blocks);
    std::cout << render_counterexample_report(rep);
    return rep.pass ? 0 : 1;
  }
  if (*refute_cmd) {
    ContextPtr ctx = make_context(parse_rational(rf_r), parse_ordinal(rf_delta));
    RefutationReport rep = refute_candidate_ifs(parse_map_list(rf_ifs, ctx), rf_blocks);
    std::cout << render_refutation(rep);
    return rep.refuted ? 0 : 1;
  }
  return 2;
}

}  // namespace

int main(int argc, char** argv) {
  try {
    return run(argc, argv);
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  } catch (const std::domain_error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  } catch (const scatter::ordinal_parse_error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
}
