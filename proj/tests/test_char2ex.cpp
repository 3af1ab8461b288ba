#include <algorithm>
#include <map>
#include <set>

#include "doctest.h"
#include "hodgesplit/char2ex.hpp"
#include "hodgesplit/errors.hpp"

using namespace hodgesplit;
using char2ex::AutTriple;
using gf::FieldCtx;

namespace {

// Apply g to an affine point (x, y) of y^2 + y = x^3 over F_4.
std::pair<gf::FieldElement, gf::FieldElement> act(const AutTriple& g, gf::FieldElement x, gf::FieldElement y) {
  const auto u2 = g.u * g.u;
  return {u2 * x + g.r, y + u2 * g.r * g.r * x + g.t};
}

}  // namespace

TEST_CASE("enumerate_group: examples") {
  const auto elems = char2ex::enumerate_group();
  CHECK(elems.size() == 24);
  const auto& k = FieldCtx::f4();
  std::set<std::uint64_t> t_for_r0;
  std::size_t u_one = 0;
  for (const auto& g : elems) {
    CHECK(g.valid());
    if (g.r.is_zero()) t_for_r0.insert(g.t.index());
    if (g.u.is_one()) ++u_one;
  }
  CHECK(t_for_r0 == std::set<std::uint64_t>{0, 1});
  CHECK(u_one == 8);
  CHECK(std::find(elems.begin(), elems.end(), char2ex::identity()) != elems.end());
  CHECK(k.order() == 4);
}

TEST_CASE("compose: examples") {
  const auto inv = char2ex::make_triple(1, 0, 1);
  CHECK(char2ex::compose(inv, inv) == char2ex::identity());
  const auto& k = FieldCtx::f4();
  const AutTriple w{k.generator(), k.zero(), k.zero()};
  CHECK(char2ex::compose(char2ex::compose(w, w), w) == char2ex::identity());
  const auto elems = char2ex::enumerate_group();
  for (const auto& a : elems)
    for (const auto& b : elems) CHECK(std::find(elems.begin(), elems.end(), char2ex::compose(a, b)) != elems.end());
  CHECK_THROWS_AS(char2ex::make_triple(1, 1, 0), PreconditionError);
  CHECK_THROWS_AS(char2ex::make_triple(0, 0, 0), PreconditionError);
}

TEST_CASE("compose agrees with composing the maps on points") {
  // Points over F_4 of y^2 + y = x^3: check (g o h)(P) = g(h(P)) on all of them.
  const auto& k = FieldCtx::f4();
  std::vector<std::pair<gf::FieldElement, gf::FieldElement>> pts;
  for (std::uint64_t a = 0; a < 4; ++a)
    for (std::uint64_t b = 0; b < 4; ++b) {
      const auto x = k.element(a);
      const auto y = k.element(b);
      if ((y * y + y - x * x * x).is_zero()) pts.emplace_back(x, y);
    }
  CHECK(pts.size() == 8);
  const auto elems = char2ex::enumerate_group();
  for (const auto& g : elems) {
    for (const auto& [x, y] : pts) {
      const auto [gx, gy] = act(g, x, y);
      CHECK((gy * gy + gy - gx * gx * gx).is_zero());
    }
    for (const auto& h : elems) {
      const auto gh = char2ex::compose(g, h);
      for (const auto& [x, y] : pts) {
        const auto [hx, hy] = act(h, x, y);
        CHECK(act(gh, x, y) == act(g, hx, hy));
      }
    }
  }
}

TEST_CASE("group axioms and Sylow structure") {
  const auto G = char2ex::group_table();
  CHECK_NOTHROW(G.validate());
  const auto elems = char2ex::enumerate_group();
  std::size_t inv = 0, four = 0;
  for (const auto& g : elems) {
    if (!g.u.is_one()) continue;
    const auto o = char2ex::element_order(g);
    if (o == 2) ++inv;
    if (o == 4) ++four;
  }
  CHECK(inv == 1);
  CHECK(four == 6);
  CHECK(char2ex::element_order(char2ex::make_triple(1, 0, 1)) == 2);
}

TEST_CASE("rep: examples") {
  const auto& k = FieldCtx::f4();
  const auto m = char2ex::rep(char2ex::make_triple(1, 0, 1));
  CHECK(m == linalg::Matrix::from_ints(k, 2, 2, std::vector<long long>{1, 1, 0, 1}));
  CHECK((m * m).is_identity());
  const auto w = k.generator();
  const auto r = char2ex::rep(AutTriple{w, k.zero(), k.zero()});
  CHECK(r(0, 0) == w * w);
  CHECK(r(1, 1) == w);
  CHECK(r(0, 1).is_zero());
  CHECK(r.pow(3).is_identity());
  CHECK_FALSE(r.is_identity());
}

TEST_CASE("rep is not multiplicative on the group") {
  // On the u = 1 subgroup rep(g) = [[1, t], [0, 1]]; t takes the values 0, 1 once each and
  // w, w^2 three times each, so no homomorphism or anti-homomorphism can have these values.
  const auto& k = FieldCtx::f4();
  std::map<std::uint64_t, int> fibre;
  for (const auto& g : char2ex::enumerate_group())
    if (g.u.is_one()) ++fibre[g.t.index()];
  CHECK(fibre[0] == 1);
  CHECK(fibre[1] == 1);
  CHECK(fibre[k.generator().index()] == 3);

  const auto check = char2ex::check_rep_homomorphism();
  CHECK(check.pairs == 576);
  CHECK(check.failures > 0);
  CHECK(check.anti_failures > 0);
  CHECK(check.injective);
  CHECK_FALSE(char2ex::rep_is_homomorphism());
}

TEST_CASE("indecomposability certificate") {
  const auto cert = char2ex::indecomposability_certificate();
  CHECK(cert.v1_line_stable);
  CHECK(cert.witness_1_0_1);
  CHECK(cert.witness_1_1_zeta);
  CHECK(cert.sylow_inconsistent);
  CHECK(cert.stable_lines == 1);
  CHECK(cert.indecomposable);
  for (const auto& g : cert.inconsistent_witnesses) {
    CHECK(g.u.is_one());
    CHECK_FALSE(g.t.is_zero());
  }
  CHECK(cert.inconsistent_witnesses.size() == 7);
}

TEST_CASE("expand_at_infinity") {
  const auto e = char2ex::expand_at_infinity(40);
  CHECK(e.x.valuation() == -2);
  CHECK(e.y.valuation() == -3);
  CHECK(e.checked_to >= 40 - 9);
  const auto& k = FieldCtx::f4();
  // y = s^-3 (1 + s^3 + s^6 + s^12 + s^24 + ...)
  for (long i = -3; i < 30; ++i) {
    const bool on = i == -3 || i == 0 || i == 3 || i == 9 || i == 21;
    CHECK(e.y.coeff(i) == (on ? k.one() : k.zero()));
  }
  CHECK_THROWS_AS(char2ex::expand_at_infinity(15), PreconditionError);
}

TEST_CASE("ramification_order: examples") {
  const auto& k = FieldCtx::f4();
  CHECK(char2ex::ramification_order(AutTriple{k.generator(), k.zero(), k.zero()}, 32) == 1);
  for (std::uint64_t z = 2; z < 4; ++z)
    CHECK(char2ex::ramification_order(AutTriple{k.one(), k.one(), k.element(z)}, 32) == 2);
  CHECK(char2ex::ramification_order(char2ex::make_triple(1, 0, 1), 32) == 4);
  CHECK(char2ex::ramification_order(char2ex::make_triple(1, 0, 1), 64) == 4);
  CHECK(char2ex::involution_closed_form(32) == 4);
  CHECK(char2ex::involution_closed_form(64) == 4);
  CHECK_THROWS_AS(char2ex::ramification_order(char2ex::identity(), 32), PreconditionError);

  // Independent leading term: with u != 1, g(s) = u^2 s + O(s^2).
  for (const auto& g : char2ex::enumerate_group()) {
    if (g.u.is_one()) continue;
    CHECK(char2ex::ramification_order(g, 32) == 1);
  }
}

TEST_CASE("filtration_report") {
  const auto rep = char2ex::filtration_report(32);
  CHECK(rep.group_order == 24);
  CHECK(rep.closed);
  CHECK(rep.associative);
  CHECK(rep.inverses);
  CHECK(rep.sylow2_structure == "Q8");
  CHECK(rep.order1 == 16);
  CHECK(rep.order2 == 6);
  CHECK(rep.order4 == 1);
  CHECK(rep.other_orders == 0);
  CHECK(rep.involution_order == 4);
  CHECK(rep.involution_closed_form == 4);
  CHECK(rep.class_constant);
  std::vector<std::size_t> sizes;
  for (const auto& s : rep.filtration) sizes.push_back(s.size);
  CHECK(sizes == std::vector<std::size_t>{24, 8, 2, 2, 1});
  CHECK_FALSE(rep.second_group_trivial);
  CHECK(rep.discrepancies.size() == 2);

  const auto j = char2ex::to_json(rep);
  CHECK(j.at("group_order") == 24);
  CHECK(j.at("stable_lines") == 1);
  CHECK(j.at("indecomposable") == true);
  CHECK(j.at("filtration").size() == 5);
  CHECK(j.at("filtration")[2].at("size") == 2);
  CHECK(j.at("paper_discrepancies").size() == 2);
}
