// Acceptance gate: one self-contained check per criterion, each printing a
// [PASS]/[FAIL] line with its measured runtime.  Exits nonzero if any fails.

#include <sys/wait.h>

#include <chrono>
#include <cstdlib>
#include <functional>
#include <iomanip>
#include <iostream>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "scatter/hutchinson.hpp"
#include "scatter/ladder.hpp"
#include "scatter/maps.hpp"
#include "scatter/ordinal.hpp"
#include "scatter/point_set.hpp"
#include "scatter/refuter.hpp"
#include "scatter/space.hpp"

using namespace scatter;

namespace {

Ordinal o(const char* text) { return parse_ordinal(text); }
Rat q(const char* text) { return parse_rational(text); }

void expect(bool ok, const std::string& what) {
  if (!ok) throw std::runtime_error(what);
}

int run_cli(const std::string& args) {
  std::string cmd = std::string(SCATTERCTL_PATH) + " " + args + " >/dev/null 2>&1";
  int status = std::system(cmd.c_str());
  return WIFEXITED(status) ? WEXITSTATUS(status) : -1;
}

// All nonzero limit ordinals w^3*c3 + w^2*c2 + w*c1 with small coefficients.
std::vector<Ordinal> limit_samples(const Ordinal& top) {
  std::vector<Ordinal> out;
  for (std::uint64_t c3 = 0; c3 <= 1; ++c3)
    for (std::uint64_t c2 = 0; c2 <= 3; ++c2)
      for (std::uint64_t c1 = 0; c1 <= 3; ++c1) {
        if (c3 + c2 + c1 == 0) continue;
        Ordinal beta = Ordinal::omega_pow(o("3"), c3 ? c3 : 1);
        if (!c3) beta = Ordinal();
        if (c2) beta = beta + Ordinal::omega_pow(o("2"), c2);
        if (c1) beta = beta + Ordinal::omega_pow(o("1"), c1);
        if (!beta.is_zero() && beta <= top) out.push_back(beta);
      }
  return out;
}

// --- criteria ---------------------------------------------------------------

void counterexample_invariants() {
  CounterexampleReport rep = check_counterexample_invariants(20);
  expect(rep.pass, "an invariant failed: " + render_counterexample_report(rep));
  expect(rep.rows.size() == 20, "expected twenty rows");
  expect(rep.rows[1].gap - rep.rows[1].a == q("1/108"), "margin at n=2 is not 1/108");
  for (const InvariantRow& row : rep.rows) {
    expect(row.diam <= row.a, "diameter exceeds a_n");
    expect(row.a < row.gap, "a_n does not stay below the distance");
  }
}

void counting() {
  for (std::uint32_t m = 1; m <= 50; ++m) {
    CountingRefutation c = counting_refutation(m);
    expect(c.n == m + 1, "counting_refutation(" + std::to_string(m) + ") != m+1");
    expect(c.block_size > c.bound, "reported block does not exceed the bound");
  }
  std::vector<MapExpr> maps;
  maps.push_back(affine(q("1/2"), Rat(0)));
  maps.push_back(constant(Rat(1)));
  RefutationReport rep = refute_candidate_ifs(maps, 3);
  expect(rep.refuted, "halving system not refuted");
  bool witness = false;
  for (const Rat& x : rep.uncovered) witness |= x == q("7/12");
  expect(witness, "uncovered witness 7/12 missing");
}

void ladder_suite() {
  const char* tops[] = {"w", "w*2", "w^2", "w^2+w", "w^3"};
  for (const char* t : tops) {
    LadderContext ctx(o(t));
    std::vector<Ordinal> betas = limit_samples(ctx.top());
    for (const Ordinal& beta : betas) {
      Ordinal prev;
      for (std::uint64_t n = 1; n <= 32; ++n) {
        Ordinal cur = ctx.rung(beta, n);
        expect(cur < beta, "rung not below beta at " + print_ordinal(beta));
        if (n > 1) expect(prev <= cur, "rung decreased in n at " + print_ordinal(beta));
        prev = cur;
      }
      for (std::uint64_t j : {1, 2, 4, 8, 16}) {
        Ordinal gamma = fundamental_sequence(beta, j);
        bool passed = false;
        for (std::uint64_t n = 1; n <= 32 && !passed; ++n) passed = ctx.rung(beta, n) > gamma;
        expect(passed, "rungs never exceed " + print_ordinal(gamma) + " below " +
                           print_ordinal(beta));
      }
    }
    for (const Ordinal& b1 : betas)
      for (const Ordinal& b2 : betas) {
        if (!(b1 < b2)) continue;
        for (std::uint64_t n = 1; n <= 32; ++n)
          expect(ctx.rung(b1, n) <= ctx.rung(b2, n),
                 "beta-monotonicity fails: " + print_ordinal(b1) + " vs " + print_ordinal(b2));
      }
  }
}

void attractor_verification() {
  for (const char* d : {"0", "1", "2", "w"}) {
    Ordinal delta = o(d);
    SpaceSpec spec = SpaceSpec::K_space(delta + Ordinal::nat(1), Rat(4), delta);
    VerificationReport rep = verify_attractor(ifs_for(delta, Rat(4)), spec, {6, 6}, {5, 5});
    expect(rep.pass, "attractor identity fails at delta=" + std::string(d) + "\n" +
                         render_report(rep));
  }
  ContextPtr c103 = make_context(Rat(103), Ordinal());
  Rat bound = std::max(lipschitz_bound(phi(c103)), lipschitz_bound(phi_top(c103)));
  expect(bound == q("1/101"), "structural bound at r=103 is not 1/101");
  expect(bound < q("1/100"), "bound does not beat epsilon = 1/100");
  expect(smallest_r_for(q("1/100")) == 103, "smallest_r_for(1/100) != 103");
  SpaceSpec k1 = SpaceSpec::K_space(o("1"), Rat(103), Ordinal());
  expect(verify_attractor(ifs_for(Ordinal(), Rat(103)), k1, {4, 4}, {3, 3}).pass,
         "attractor identity fails at r=103");
}

void properties_a_and_b() {
  const char* levels[] = {"0", "1", "2", "w", "w+1", "w+2"};
  Ordinal delta = o("w+2");
  Rat r(4);
  for (const char* a : levels)
    for (const char* b : levels) {
      Ordinal alpha = o(a), beta = o(b);
      if (!(alpha <= beta)) continue;
      VerificationReport rep = verify_property_a(alpha, beta, r, delta, {4, 4}, {3, 3});
      expect(rep.pass, "property A fails at alpha=" + std::string(a) + " beta=" + std::string(b) +
                           "\n" + render_report(rep));
    }
  for (const char* a : levels) {
    VerificationReport rep = verify_property_b(o(a), r, delta, {4, 4}, {3, 3});
    expect(rep.pass, "property B fails at alpha=" + std::string(a) + "\n" + render_report(rep));
  }
}

void lipschitz_bounds() {
  ContextPtr c = make_context(Rat(4), o("1"));
  std::mt19937_64 rng(6281);
  const MapExpr maps[] = {phi(c), g_map(Ordinal(), c), f_map(o("1"), c), phi_top(c)};
  for (const MapExpr& m : maps) {
    std::set<Rat> xs;
    while (xs.size() < 21) {  // 210 distinct pairs
      Int den = Int(rng() % 2048 + 1);
      xs.insert(Rat(Int(rng()) % (den + 1), den));
    }
    PointSet sample = PointSet::of({xs.begin(), xs.end()});
    expect(empirical_lipschitz(m, sample) <= lipschitz_bound(m),
           "empirical ratio exceeds the structural bound for " + print_map(m));
  }
  PointSet upper = PointSet::of({q("3/5"), q("4/5"), q("9/10"), Rat(1)});
  expect(empirical_lipschitz(g_map(Ordinal(), c), upper) == Rat(2),
         "g_0 does not attain r/(r-2) on (2/r, 1]");
  expect(lipschitz_bound(phi_top(c)) == q("1/2"), "top map bound at r=4 is not 1/2");
}

void union_and_restriction() {
  Ifs a({affine(q("1/2"), Rat(0)), constant(Rat(1))});
  PointSet a_piece = iterate(a, PointSet::of({Rat(0)}), 6);
  Ifs b({affine(q("1/2"), q("3/2")), constant(Rat(4))});
  PointSet b_piece = a_piece.translated(Rat(3));
  UnionResult u = union_attractor(a, a_piece, b, b_piece);
  for (const MapExpr& m : u.ifs.maps)
    expect(lipschitz_bound(m) <= q("1/2"), "a union bound exceeds 1/2");

  auto geometric = [](const Rat& x) {
    if (x == 0) return true;
    if (numerator(x) != 1 || x > 1) return false;
    Int den = denominator(x);
    return (den & (den - 1)) == 0;
  };
  auto member_fn = [&](const Rat& x) { return x <= 1 ? geometric(x) : geometric(x - 3); };
  PointSet cover5 = iterate(a, PointSet::of({Rat(0)}), 5);
  VerificationReport joined =
      verify_covering(u.ifs, unite(a_piece, b_piece), unite(cover5, cover5.translated(Rat(3))),
                      member_fn, "union of two pieces");
  expect(joined.pass, "union verification fails\n" + render_report(joined));

  Ifs restricted = restrict_attractor(u.ifs, {a_piece, b_piece}, {Rat(0), Rat(3)});
  VerificationReport single =
      verify_covering(restricted, a_piece, cover5, geometric, "restriction to the base piece");
  expect(single.pass, "restriction verification fails\n" + render_report(single));
}

void hutchinson_convergence() {
  Ifs s({affine(q("1/2"), Rat(0)), constant(Rat(1))});
  std::vector<Rat> geo{Rat(0)};
  Rat p(1);
  for (int j = 0; j <= 20; ++j, p /= 2) geo.push_back(p);
  PointSet target = PointSet::of(std::move(geo));
  PointSet cur = PointSet::of({Rat(0)});
  Rat bound(1);
  for (int k = 1; k <= 12; ++k) {
    cur = apply(s, cur);
    bound /= 2;
    expect(hausdorff(cur, target) <= bound,
           "iterate " + std::to_string(k) + " exceeds 2^-" + std::to_string(k));
  }
}

void classification() {
  expect(is_topological_attractor(SpaceSpec::K_space(o("1"), Rat(4), Ordinal())),
         "height 1 not recognized");
  expect(is_topological_attractor(SpaceSpec::K_space(o("w+1"), Rat(4), o("w"))),
         "height w+1 not recognized");
  const char* limits[] = {"w", "w^2", "w^2*3"};
  for (const char* h : limits) {
    SpaceSpec spec = SpaceSpec::K_space(o(h), Rat(4), o(h));
    expect(height_of(spec) == o(h), "height mismatch");
    expect(!is_topological_attractor(spec),
           "limit height " + std::string(h) + " misclassified");
    AttractorClassification cls = classify_attractor(spec);
    expect(cls.height_kind == OrdinalKind::limit, "kind mismatch");
  }
}

void cli_contract() {
  std::mt19937_64 rng(31415);
  std::function<Ordinal(int)> random_ordinal = [&](int depth) {
    std::uniform_int_distribution<int> nterms(0, 3);
    std::uniform_int_distribution<std::uint64_t> coeff(1, 5);
    int k = nterms(rng);
    if (depth == 0 || k == 0) return Ordinal::nat(rng() % 10);
    Ordinal out;
    for (int i = 0; i < k; ++i)
      out = out + Ordinal::omega_pow(random_ordinal(depth - 1), coeff(rng));
    return out + Ordinal::nat(rng() % 5);
  };
  for (int i = 0; i < 100; ++i) {
    Ordinal a = random_ordinal(2);
    expect(parse_ordinal(print_ordinal(a)) == a, "ordinal round-trip failed");
  }

  SpaceSpec spec = SpaceSpec::K_space(o("2"), Rat(4), o("1"));
  std::ostringstream first;
  write_pointset(first, materialize(spec, {3, 3}));
  std::istringstream is(first.str());
  std::ostringstream second;
  write_pointset(second, read_pointset(is));
  expect(first.str() == second.str(), "pointset file round-trip not byte-identical");

  expect(run_cli("verify attractor --delta 0 --r 4/1 --blocks 4 --depth 4") == 0,
         "pass case exit code != 0");
  expect(run_cli("member --kind K --alpha 1 --delta 0 --x 3/16") == 1,
         "fail case exit code != 1");
  expect(run_cli("member --kind K --alpha 1 --delta 0") == 2, "usage case exit code != 2");
}

struct Criterion {
  int id;
  const char* name;
  double budget_seconds;  // 0 = no stated budget
  std::function<void()> body;
};

}  // namespace

int main() {
  const Criterion criteria[] = {
      {1, "counterexample invariants through n=20", 1.0, counterexample_invariants},
      {2, "counting refutation and the 7/12 witness", 1.0, counting},
      {3, "ladder suite over five tops", 10.0, ladder_suite},
      {4, "attractor verification for delta in {0,1,2,w}", 60.0, attractor_verification},
      {5, "retraction properties across all level pairs", 60.0, properties_a_and_b},
      {6, "empirical vs structural Lipschitz bounds", 5.0, lipschitz_bounds},
      {7, "union and restriction round-trip", 5.0, union_and_restriction},
      {8, "geometric convergence of the halving system", 1.0, hutchinson_convergence},
      {9, "successor-height classification", 1.0, classification},
      {10, "CLI round-trips and exit codes", 0.0, cli_contract},
  };

  int failures = 0;
  for (const Criterion& c : criteria) {
    auto start = std::chrono::steady_clock::now();
    std::string error;
    try {
      c.body();
    } catch (const std::exception& e) {
      error = e.what();
    }
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    bool over_budget = c.budget_seconds > 0 && secs > c.budget_seconds;
    bool pass = error.empty() && !over_budget;
    std::cout << (pass ? "[PASS] " : "[FAIL] ") << c.id << ": " << c.name << " ("
              << std::fixed << std::setprecision(2) << secs << "s)";
    if (!error.empty()) std::cout << "\n       " << error;
    if (over_budget)
      std::cout << "\n       exceeded the " << c.budget_seconds << "s budget";
    std::cout << '\n';
    failures += pass ? 0 : 1;
  }
  if (failures) {
    std::cout << failures << " criterion(s) failed\n";
    return 1;
  }
  std::cout << "all criteria passed\n";
  return 0;
}
