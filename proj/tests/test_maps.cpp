#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <random>

#include "doctest.h"
#include "scatter/context.hpp"
#include "scatter/maps.hpp"
#include "scatter/ordinal.hpp"
#include "scatter/space.hpp"

using namespace scatter;

namespace {

Ordinal o(const char* text) { return parse_ordinal(text); }
Rat q(const char* text) { return parse_rational(text); }

ContextPtr ctx4(const char* delta) { return make_context(Rat(4), o(delta)); }

PointSet random_sample(std::mt19937_64& rng, int n) {
  std::vector<Rat> xs;
  for (int i = 0; i < n; ++i) {
    Int den = Int(rng() % 4096 + 1);
    xs.emplace_back(Int(rng()) % (den + 1), den);
  }
  return PointSet::of(std::move(xs));
}

}  // namespace

TEST_CASE("context helpers") {
  SpaceContext ctx(Rat(4), o("w"));
  CHECK(ctx.s(1, Rat(0)) == q("1/4"));
  CHECK(ctx.s(2, q("1/4")) == q("5/64"));
  CHECK(ctx.s_inv(1, q("3/8")) == q("1/2"));
  CHECK(ctx.block_of(q("3/8")) == 1);
  CHECK(ctx.block_of(q("1/16")) == 2);
  CHECK(ctx.block_of(q("3/16")) == 0);  // gap between blocks 2 and 1
  CHECK(ctx.block_of(Rat(0)) == 0);
  CHECK(ctx.block_of(Rat(1)) == 0);    // above block 1
  CHECK_THROWS_AS(make_context(Rat(3), o("0")), std::invalid_argument);
}

TEST_CASE("g_0 is the two-branch retraction") {
  ContextPtr c = ctx4("0");
  MapExpr g0 = g_map(o("0"), c);
  CHECK(eval(g0, Rat(0)) == 0);
  CHECK(eval(g0, q("1/4")) == 0);
  CHECK(eval(g0, q("1/2")) == 0);
  CHECK(eval(g0, q("3/4")) == q("1/2"));
  CHECK(eval(g0, Rat(1)) == 1);
}

TEST_CASE("f_1 rescales f_0 into each block") {
  ContextPtr c = ctx4("1");
  MapExpr f1 = f_map(o("1"), c);
  CHECK(eval(f1, q("3/8")) == q("1/4"));
  CHECK(eval(f1, q("1/4")) == q("1/4"));
  CHECK(eval(f1, q("3/16")) == q("3/16"));  // identity off the blocks
  CHECK(eval(f1, Rat(0)) == 0);
}

TEST_CASE("phi and the top map") {
  ContextPtr c = ctx4("0");
  CHECK(eval(phi(c), Rat(1)) == q("1/4"));
  CHECK(eval(phi_top(c), Rat(1)) == q("1/2"));
  CHECK(eval(phi_top(c), Rat(0)) == q("1/4"));
  CHECK(eval(scale_shift(2, c), Rat(0)) == q("1/16"));
}

TEST_CASE("the top map collapses the truncated first level") {
  ContextPtr c = ctx4("0");
  SpaceSpec k1 = SpaceSpec::K_space(o("1"), Rat(4), o("0"));
  PointSet pts = materialize(k1, {3, 3});
  PointSet img = image(phi_top(c), pts);
  CHECK(img.size() == 1);
  CHECK(img.contains(q("1/4")));
}

TEST_CASE("g at successor levels uses the ladder children") {
  ContextPtr c = ctx4("1");
  MapExpr g1 = g_map(o("1"), c);
  CHECK(eval(g1, q("5/16")) == q("1/4"));
  CHECK(eval(g1, q("1/4")) == q("1/4"));
  CHECK(eval(g1, q("3/16")) == q("3/16"));
  CHECK(eval(g1, Rat(0)) == 0);

  ContextPtr cw = ctx4("w");
  MapExpr fw = f_map(o("w"), cw);
  CHECK(eval(fw, q("5/16")) == q("5/16"));
  CHECK(eval(fw, Rat(0)) == 0);
  // g at a limit level equals f there.
  CHECK(eval(g_map(o("w"), cw), q("5/16")) == eval(fw, q("5/16")));
}

TEST_CASE("affine, constant, compose, const_outside") {
  MapExpr half = affine(q("1/2"), Rat(0));
  CHECK(eval(half, q("7/12")) == q("7/24"));
  CHECK(eval(constant(Rat(1)), q("1/3")) == 1);
  MapExpr c2 = compose({half, half});
  CHECK(eval(c2, Rat(1)) == q("1/4"));
  ContextPtr c = ctx4("0");
  MapExpr pp = compose({phi(c), phi(c)});
  CHECK(eval(pp, Rat(1)) == q("1/16"));
  // compose applies right to left.
  MapExpr shift_then_halve = compose({half, affine(Rat(1), Rat(1))});
  CHECK(eval(shift_then_halve, Rat(1)) == 1);

  MapExpr ext = const_outside(half, Rat(0), Rat(1), q("1/3"), q("1/2"));
  CHECK(eval(ext, q("1/2")) == q("1/4"));
  CHECK(eval(ext, Rat(2)) == q("1/3"));
  CHECK(lipschitz_bound(ext) == q("1/2"));
}

TEST_CASE("structural Lipschitz bounds") {
  ContextPtr c = ctx4("0");
  CHECK(lipschitz_bound(phi(c)) == q("1/4"));
  CHECK(lipschitz_bound(phi_top(c)) == q("1/2"));
  CHECK(lipschitz_bound(g_map(o("0"), c)) == Rat(2));
  CHECK(lipschitz_bound(scale_shift(3, c)) == q("1/64"));
  CHECK(lipschitz_bound(affine(q("-2/3"), Rat(5))) == q("2/3"));
  CHECK(lipschitz_bound(compose({phi(c), phi(c)})) == q("1/16"));

  ContextPtr c103 = make_context(Rat(103), o("0"));
  CHECK(lipschitz_bound(phi(c103)) == q("1/103"));
  CHECK(lipschitz_bound(phi_top(c103)) == q("1/101"));
}

TEST_CASE("empirical Lipschitz attains the g_0 slope") {
  ContextPtr c = ctx4("0");
  PointSet sample = PointSet::of({q("3/5"), q("4/5"), q("1/2"), Rat(0), Rat(1)});
  CHECK(empirical_lipschitz(g_map(o("0"), c), sample) == Rat(2));
  CHECK(empirical_lipschitz(constant(Rat(1)), sample) == 0);
  CHECK(empirical_lipschitz(phi(c), PointSet::of({q("1/2")})) == 0);
}

TEST_CASE("empirical never exceeds structural") {
  std::mt19937_64 rng(123);
  ContextPtr c = ctx4("w+2");
  const MapExpr maps[] = {phi(c),           phi_top(c),          g_map(o("0"), c),
                          g_map(o("w"), c), f_map(o("w+1"), c),  scale_shift(2, c),
                          affine(q("1/3"), q("1/7")),            compose({phi(c), phi_top(c)})};
  for (const MapExpr& m : maps) {
    PointSet sample = random_sample(rng, 40);
    CHECK(empirical_lipschitz(m, sample) <= lipschitz_bound(m));
  }
}

TEST_CASE("smallest r for a contraction target") {
  CHECK(smallest_r_for(q("1/100")) == 103);
  CHECK(smallest_r_for(q("1/2")) == 5);
  CHECK(smallest_r_for(Rat(1)) == 4);
  CHECK_THROWS_AS(smallest_r_for(Rat(0)), std::invalid_argument);
  // The returned r really beats epsilon, and r - 1 does not.
  for (const char* e : {"1/10", "1/100", "2/7"}) {
    Int r = smallest_r_for(q(e));
    CHECK(Rat(Int(1), r - 2) < q(e));
    CHECK(Rat(Int(1), r - 3) >= q(e));
  }
}

TEST_CASE("map levels are validated against delta") {
  ContextPtr c = ctx4("2");
  CHECK_THROWS_AS(g_map(o("w"), c), std::invalid_argument);
  CHECK_THROWS_AS(f_map(o("3"), c), std::invalid_argument);
  CHECK_NOTHROW(g_map(o("2"), c));
  CHECK_THROWS_AS(compose({phi(ctx4("0")), phi(ctx4("1"))}), std::invalid_argument);
  CHECK_THROWS_AS(scale_shift(0, ctx4("0")), std::invalid_argument);
}

TEST_CASE("map text forms parse and print") {
  ContextPtr c = ctx4("w+1");
  const char* forms[] = {"phi",       "phitop",        "g(w+1)",          "f(2)",
                         "s(3)",      "affine(1/2,0)", "compose(phi,phi)",
                         "affine(-1/3,1)", "compose(g(w),s(2))"};
  for (const char* text : forms) {
    MapExpr m = parse_map(text, c);
    CHECK(print_map(m) == text);
    MapExpr again = parse_map(print_map(m), c);
    CHECK(eval(again, q("1/3")) == eval(m, q("1/3")));
  }
  CHECK_THROWS_AS(parse_map("nope", c), std::invalid_argument);
  CHECK_THROWS_AS(parse_map("g(w", c), std::invalid_argument);
  CHECK_THROWS_AS(parse_map("affine(1)", c), std::invalid_argument);
  CHECK_THROWS_AS(parse_map("", c), std::invalid_argument);
}

TEST_CASE("g maps truncated L_beta into L_alpha pointwise") {
  Rat r(4);
  Ordinal delta = o("w");
  ContextPtr c = make_context(r, delta);
  SpaceSpec lw = SpaceSpec::L_space(o("w"), r, delta);
  SpaceSpec l2 = SpaceSpec::L_space(o("2"), r, delta);
  MapExpr g2 = g_map(o("2"), c);
  PointSet pts = materialize(lw, {4, 4});
  for (const Rat& x : pts.points()) {
    Rat y = eval(g2, x);
    CAPTURE(fraction_string(x));
    CHECK(member(l2, y));
  }
}

TEST_CASE("f maps truncated K_{alpha+1} into K_alpha pointwise") {
  Rat r(4);
  Ordinal delta = o("2");
  ContextPtr c = make_context(r, delta);
  SpaceSpec k3 = SpaceSpec::K_space(o("3"), r, delta);
  SpaceSpec k2 = SpaceSpec::K_space(o("2"), r, delta);
  MapExpr f2 = f_map(o("2"), c);
  PointSet pts = materialize(k3, {4, 4});
  for (const Rat& x : pts.points()) {
    Rat y = eval(f2, x);
    CAPTURE(fraction_string(x));
    CHECK(member(k2, y));
  }
}
