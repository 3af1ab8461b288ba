#include "hodgesplit/char2ex.hpp"

#include <algorithm>
#include <map>

#include "hodgesplit/errors.hpp"

namespace hodgesplit::char2ex {

using gf::FieldCtx;

namespace {

const FieldCtx& f4() { return FieldCtx::f4(); }

std::size_t index_of(const std::vector<AutTriple>& elems, const AutTriple& g) {
  for (std::size_t i = 0; i < elems.size(); ++i)
    if (elems[i] == g) return i;
  throw InconsistencyError("element " + g.to_string() + " is not in the group");
}

}  // namespace

bool AutTriple::valid() const { return !u.is_zero() && (t * t + t + r * r * r).is_zero(); }

std::string AutTriple::to_string() const {
  return "(" + u.to_string() + "," + r.to_string() + "," + t.to_string() + ")";
}

AutTriple make_triple(std::uint64_t u, std::uint64_t r, std::uint64_t t) {
  const AutTriple g{f4().element(u), f4().element(r), f4().element(t)};
  if (!g.valid()) throw PreconditionError(g.to_string() + " is not an automorphism");
  return g;
}

AutTriple identity() { return {f4().one(), f4().zero(), f4().zero()}; }

std::vector<AutTriple> enumerate_group() {
  std::vector<AutTriple> out;
  for (std::uint64_t u = 1; u < 4; ++u)
    for (std::uint64_t r = 0; r < 4; ++r)
      for (std::uint64_t t = 0; t < 4; ++t) {
        const AutTriple g{f4().element(u), f4().element(r), f4().element(t)};
        if (g.valid()) out.push_back(g);
      }
  return out;
}

AutTriple compose(const AutTriple& g, const AutTriple& h) {
  const auto u2 = g.u * g.u;
  const AutTriple out{g.u * h.u, u2 * h.r + g.r, h.t + u2 * g.r * g.r * h.r + g.t};
  if (!out.valid()) throw InconsistencyError("composite " + out.to_string() + " is not an automorphism");
  return out;
}

AutTriple inverse(const AutTriple& g) {
  for (const auto& h : enumerate_group())
    if (compose(g, h) == identity()) return h;
  throw InconsistencyError(g.to_string() + " has no inverse");
}

std::size_t element_order(const AutTriple& g) {
  AutTriple power = g;
  for (std::size_t k = 1; k <= 24; ++k) {
    if (power == identity()) return k;
    power = compose(power, g);
  }
  throw InconsistencyError(g.to_string() + " has no finite order dividing 24");
}

modrep::FiniteGroup group_table() {
  const auto elems = enumerate_group();
  modrep::FiniteGroup G;
  G.identity = index_of(elems, identity());
  G.mul.assign(elems.size(), std::vector<std::size_t>(elems.size()));
  for (std::size_t a = 0; a < elems.size(); ++a)
    for (std::size_t b = 0; b < elems.size(); ++b) G.mul[a][b] = index_of(elems, compose(elems[a], elems[b]));
  return G;
}

Matrix rep(const AutTriple& g) {
  Matrix m(f4(), 2, 2);
  const auto u2 = g.u * g.u;
  m(0, 0) = u2;
  m(0, 1) = u2 * g.t;
  m(1, 1) = g.u;
  return m;
}

HomomorphismCheck check_rep_homomorphism() {
  HomomorphismCheck out;
  const auto elems = enumerate_group();
  for (const auto& g : elems) {
    for (const auto& h : elems) {
      ++out.pairs;
      const Matrix lhs = rep(compose(g, h));
      if (!(lhs == rep(g) * rep(h))) {
        if (!out.first_failure) out.first_failure = std::make_pair(g, h);
        ++out.failures;
      }
      if (!(lhs == rep(h) * rep(g))) ++out.anti_failures;
    }
  }
  std::size_t trivial = 0;
  for (const auto& g : elems)
    if (rep(g).is_identity()) ++trivial;
  out.injective = trivial == 1;
  return out;
}

bool rep_is_homomorphism() { return check_rep_homomorphism().holds(); }

IndecomposabilityCertificate indecomposability_certificate() {
  IndecomposabilityCertificate cert;
  const auto elems = enumerate_group();
  const auto& k = f4();

  cert.v1_line_stable = true;
  for (const auto& g : elems) cert.v1_line_stable = cert.v1_line_stable && rep(g)(1, 0).is_zero();

  // A line other than span(v1) is span(alpha v1 + v2).  It is g-stable iff (1 - u) alpha = u t.
  // With u = 1 this reads 0 = t, which no extension of F_4 can repair when t != 0.
  bool sylow_bad = false;
  for (const auto& g : elems) {
    const auto lhs = k.one() - g.u;
    const auto rhs = g.u * g.t;
    if (lhs.is_zero() && !rhs.is_zero()) {
      cert.inconsistent_witnesses.push_back(g);
      sylow_bad = true;
    }
  }
  cert.sylow_inconsistent = sylow_bad;
  auto witnessed = [&](const AutTriple& g) {
    for (const auto& w : cert.inconsistent_witnesses)
      if (w == g) return true;
    return false;
  };
  cert.witness_1_0_1 = witnessed(make_triple(1, 0, 1));
  cert.witness_1_1_zeta = true;
  for (std::uint64_t z = 0; z < 4; ++z) {
    const auto zeta = k.element(z);
    if ((zeta * zeta + zeta).is_zero()) continue;  // zeta in F_2
    cert.witness_1_1_zeta = cert.witness_1_1_zeta && witnessed(AutTriple{k.one(), k.one(), zeta});
  }

  std::vector<linalg::Vector> lines{{k.one(), k.zero()}};
  for (std::uint64_t a = 0; a < 4; ++a) lines.push_back({k.element(a), k.one()});
  for (const auto& v : lines) {
    bool stable = true;
    for (const auto& g : elems) {
      const auto w = rep(g) * v;
      stable = stable && (w[0] * v[1] - w[1] * v[0]).is_zero();
    }
    if (stable) ++cert.stable_lines;
  }
  cert.indecomposable = cert.v1_line_stable && !cert.inconsistent_witnesses.empty() && cert.stable_lines == 1;
  return cert;
}

Expansion expand_at_infinity(long prec) {
  if (prec < 16) throw PreconditionError("expansion at infinity needs prec >= 16");
  const auto& k = f4();
  LaurentSeries w = LaurentSeries::zero(k, prec);
  for (long e = 3; e < prec; e *= 2) w = w + LaurentSeries::monomial(k, e, prec);

  const auto one = LaurentSeries::monomial(k, 0, prec);
  const auto y = (one + w).shifted(-3);
  const auto x = y.shifted(1);
  const auto lhs = y * y + y;
  const auto rhs = pow(x, 3);
  const auto diff = lhs - rhs;
  if (!diff.is_zero()) throw InconsistencyError("y^2 + y != x^3 in the expansion at infinity");
  return {x, y, diff.precision()};
}

std::optional<long> ramification_order(const AutTriple& g, long prec) {
  if (g == identity()) throw PreconditionError("ramification order of the identity is infinite");
  const auto e = expand_at_infinity(prec);
  const auto u2 = g.u * g.u;
  const long p = e.x.precision();
  const auto gx = e.x.scaled(u2) + LaurentSeries::monomial(g.r, 0, p);
  const auto gy = e.y + e.x.scaled(u2 * g.r * g.r) + LaurentSeries::monomial(g.t, 0, p);
  const auto s = e.x * invert(e.y);
  const auto diff = gx * invert(gy) - s;
  if (diff.is_zero()) return std::nullopt;
  return diff.valuation();
}

long involution_closed_form(long prec) {
  const auto e = expand_at_infinity(prec);
  return pow(e.x, -2).valuation();
}

FiltrationReport filtration_report(long prec) {
  FiltrationReport rep;
  const auto elems = enumerate_group();
  rep.group_order = elems.size();

  rep.closed = true;
  for (const auto& a : elems)
    for (const auto& b : elems) rep.closed = rep.closed && std::find(elems.begin(), elems.end(), compose(a, b)) != elems.end();
  const auto G = group_table();
  rep.associative = true;
  for (std::size_t a = 0; a < G.order(); ++a)
    for (std::size_t b = 0; b < G.order(); ++b)
      for (std::size_t c = 0; c < G.order(); ++c)
        rep.associative = rep.associative && G.mul[G.mul[a][b]][c] == G.mul[a][G.mul[b][c]];
  rep.inverses = true;
  for (const auto& g : elems) {
    bool found = false;
    for (const auto& h : elems) found = found || (compose(g, h) == identity() && compose(h, g) == identity());
    rep.inverses = rep.inverses && found;
  }

  std::size_t sylow_size = 0;
  for (const auto& g : elems) {
    if (!g.u.is_one()) continue;
    ++sylow_size;
    const auto o = element_order(g);
    if (o == 2) ++rep.sylow_involutions;
    if (o == 4) ++rep.sylow_order_four;
  }
  if (sylow_size == 8 && rep.sylow_involutions == 1 && rep.sylow_order_four == 6) {
    rep.sylow2_structure = "Q8";
  } else {
    rep.sylow2_structure = "order " + std::to_string(sylow_size) + " with " + std::to_string(rep.sylow_involutions) +
                           " involutions";
  }

  std::map<std::size_t, long> ord;
  for (std::size_t i = 0; i < elems.size(); ++i) {
    if (elems[i] == identity()) continue;
    const auto o = ramification_order(elems[i], prec);
    if (!o) throw PrecisionError("ramification order of " + elems[i].to_string() + " not visible at this precision");
    ord[i] = *o;
    switch (*o) {
      case 1: ++rep.order1; break;
      case 2: ++rep.order2; break;
      case 4: ++rep.order4; break;
      default: ++rep.other_orders; break;
    }
  }
  const auto involution = make_triple(1, 0, 1);
  rep.involution_order = ord.at(index_of(elems, involution));
  rep.involution_closed_form = involution_closed_form(prec);

  rep.class_constant = true;
  for (std::size_t i = 0; i < elems.size(); ++i) {
    if (elems[i] == identity()) continue;
    for (const auto& h : elems) {
      const auto conj = compose(compose(h, elems[i]), inverse(h));
      rep.class_constant = rep.class_constant && ord.at(index_of(elems, conj)) == ord.at(i);
    }
  }

  for (long i = 0;; ++i) {
    std::size_t size = 1;
    for (const auto& [idx, o] : ord)
      if (o >= i + 1) ++size;
    rep.filtration.push_back({i, size});
    if (size == 1) break;
  }
  rep.second_group_trivial = rep.filtration.size() > 2 && rep.filtration[2].size == 1;

  rep.homomorphism = check_rep_homomorphism();
  rep.indecomposability = indecomposability_certificate();

  if (!rep.second_group_trivial) {
    rep.discrepancies.push_back("claimed ord_O(g(s) - s) = 2 for every g with u = 1; computed " +
                                std::to_string(rep.involution_order) +
                                " at (1,0,1), so G_2 has order " + std::to_string(rep.filtration[2].size) +
                                " instead of 1");
  }
  if (!rep.homomorphism.holds()) {
    rep.discrepancies.push_back("g -> [[u^2, u^2 t], [0, u]] is not multiplicative: " +
                                std::to_string(rep.homomorphism.failures) + " of " +
                                std::to_string(rep.homomorphism.pairs) + " pairs fail, first at " +
                                rep.homomorphism.first_failure->first.to_string() + " o " +
                                rep.homomorphism.first_failure->second.to_string());
  }
  return rep;
}

nlohmann::json to_json(const FiltrationReport& rep) {
  nlohmann::json filt = nlohmann::json::array();
  for (const auto& s : rep.filtration) filt.push_back({{"i", s.i}, {"size", s.size}});
  return {{"group_order", rep.group_order},
          {"sylow2_structure", rep.sylow2_structure},
          {"stable_lines", rep.indecomposability.stable_lines},
          {"indecomposable", rep.indecomposability.indecomposable},
          {"filtration", filt},
          {"ramification_orders", {{"1", rep.order1}, {"2", rep.order2}, {"4", rep.order4}, {"other", rep.other_orders}}},
          {"involution_order", rep.involution_order},
          {"involution_closed_form", rep.involution_closed_form},
          {"rep_homomorphism", rep.homomorphism.holds()},
          {"rep_homomorphism_failures", rep.homomorphism.failures},
          {"paper_discrepancies", rep.discrepancies}};
}

}  // namespace hodgesplit::char2ex
