#include <random>

#include "doctest.h"
#include "hodgesplit/ascover.hpp"
#include "hodgesplit/char2ex.hpp"
#include "hodgesplit/errors.hpp"
#include "hodgesplit/modrep.hpp"

using namespace hodgesplit;
using cohom::CyclicModule;
using gf::FieldCtx;
using linalg::Matrix;
using modrep::BlockMultiset;

namespace {

const FieldCtx& field_for(std::size_t q) { return FieldCtx::prime(q % 2 == 0 ? 2 : (q % 3 == 0 ? 3 : 5)); }

// Jordan type by brute force: sizes of the cyclic submodules generated by a basis
// adapted to ker N^j, computed from nullities rather than ranks of powers.
BlockMultiset nullity_oracle(const CyclicModule& mod) {
  const std::size_t d = mod.dim();
  const Matrix nil = mod.sigma - Matrix::identity(mod.field(), d);
  std::vector<std::size_t> nullity{0};
  Matrix power = Matrix::identity(mod.field(), d);
  while (nullity.back() < d) {
    power = power * nil;
    nullity.push_back(linalg::kernel(power).size());
  }
  nullity.push_back(d);
  BlockMultiset out;
  for (std::size_t j = nullity.size() - 2; j >= 1; --j) {
    // #blocks of size >= j = dim ker N^j - dim ker N^{j-1}
    const std::size_t ge = nullity[j] - nullity[j - 1];
    const std::size_t ge_next = nullity[j + 1] - nullity[j];
    out.sizes.insert(out.sizes.end(), ge - ge_next, j);
  }
  return out;
}

modrep::Representation character(const std::vector<char2ex::AutTriple>& elems, int power) {
  modrep::Representation rho;
  for (const auto& g : elems) {
    Matrix m(FieldCtx::f4(), 1, 1);
    m(0, 0) = g.u.pow(power);
    rho.push_back(m);
  }
  return rho;
}

Matrix direct_sum(const Matrix& a, const Matrix& b) {
  Matrix out(a.ctx(), a.rows() + b.rows(), a.cols() + b.cols());
  for (std::size_t r = 0; r < a.rows(); ++r)
    for (std::size_t c = 0; c < a.cols(); ++c) out(r, c) = a(r, c);
  for (std::size_t r = 0; r < b.rows(); ++r)
    for (std::size_t c = 0; c < b.cols(); ++c) out(a.rows() + r, a.cols() + c) = b(r, c);
  return out;
}

}  // namespace

TEST_CASE("block_decomposition: examples") {
  const auto& f3 = FieldCtx::prime(3);
  CHECK(modrep::block_decomposition(CyclicModule::trivial(f3, 3, 3)).sizes == std::vector<std::size_t>{1, 1, 1});
  for (std::uint32_t p : {2u, 3u, 5u, 7u}) {
    CHECK(modrep::block_decomposition(CyclicModule::free(FieldCtx::prime(p), p)).sizes ==
          std::vector<std::size_t>{p});
  }
  {
    const auto cov = ascover::build(3, 2, ascover::default_precision(3, 2, 6));
    const auto w = ascover::window(cov, 0, -6);
    const CyclicModule mod{w.sigma, 3};
    const auto blocks = modrep::block_decomposition(mod);
    CHECK(blocks == nullity_oracle(mod));
    CHECK(blocks.total() == 6);
  }
  CHECK(modrep::block_decomposition(modrep::block_sum(f3, {2, 3, 1}, 9)).sizes == std::vector<std::size_t>{3, 2, 1});
  CHECK_THROWS_AS(modrep::block_decomposition(CyclicModule::jordan_block(f3, 2, 2)), PreconditionError);
  CHECK_THROWS_AS(modrep::block_decomposition(CyclicModule::trivial(f3, 2, 6)), PreconditionError);
  CHECK_THROWS_AS(modrep::block_sum(f3, {4}, 3), PreconditionError);
}

TEST_CASE("block_decomposition is conjugation invariant and matches the nullity oracle") {
  std::mt19937_64 rng(31);
  for (std::size_t q : {3u, 4u, 5u, 8u, 9u}) {
    const auto& k = field_for(q);
    for (int s = 0; s < 40; ++s) {
      std::vector<std::size_t> sizes;
      for (std::size_t left = 1 + rng() % 8; left > 0;) {
        const std::size_t b = 1 + rng() % std::min(left, q);
        sizes.push_back(b);
        left -= b;
      }
      const auto J = modrep::block_sum(k, sizes, q);
      const auto g = modrep::random_invertible(k, J.dim(), rng);
      const CyclicModule conj{g * J.sigma * linalg::inverse(g), q};
      const auto blocks = modrep::block_decomposition(J);
      REQUIRE(blocks == modrep::block_decomposition(conj));
      REQUIRE(blocks == nullity_oracle(conj));
      std::sort(sizes.begin(), sizes.end(), std::greater<>());
      REQUIRE(blocks.sizes == sizes);
    }
  }
}

TEST_CASE("splits / invariants_additive: examples") {
  const auto& f3 = FieldCtx::prime(3);
  {
    // J_2 with sigma e0 = e0 + e1: the socle is span(e1).
    const auto B = CyclicModule::jordan_block(f3, 2, 3);
    const auto t = modrep::ExactTriple::make(B, {linalg::unit_vector(f3, 2, 1)});
    CHECK_FALSE(modrep::splits(t));
    CHECK_FALSE(modrep::invariants_additive(t));
    CHECK_FALSE(modrep::equivariant_section({B.sigma}, {t.C.sigma}, t.sq.projection).has_value());
  }
  {
    const auto B = CyclicModule::trivial(f3, 2, 3);
    const auto t = modrep::ExactTriple::make(B, {linalg::unit_vector(f3, 2, 0)});
    CHECK(modrep::splits(t));
    CHECK(modrep::invariants_additive(t));
  }
  {
    const auto B = CyclicModule::jordan_block(f3, 3, 3);
    const auto t = modrep::ExactTriple::make(B, {});
    CHECK(t.A.dim() == 0);
    CHECK(modrep::splits(t));
    CHECK(modrep::invariants_additive(t));
  }
  {
    // J_3 over F_3 with A = J_2 = span(e1, e2).
    const auto B = CyclicModule::jordan_block(f3, 3, 3);
    const auto t = modrep::ExactTriple::make(B, {linalg::unit_vector(f3, 3, 1), linalg::unit_vector(f3, 3, 2)});
    CHECK(modrep::block_decomposition(t.A).sizes == std::vector<std::size_t>{2});
    CHECK(modrep::block_decomposition(t.C).sizes == std::vector<std::size_t>{1});
    CHECK_FALSE(modrep::invariants_additive(t));
    CHECK_FALSE(modrep::splits(t));
  }
  {
    const auto B = CyclicModule::jordan_block(f3, 2, 3);
    CHECK_THROWS_AS(modrep::ExactTriple::make(B, {linalg::unit_vector(f3, 2, 0)}), PreconditionError);
  }
}

TEST_CASE("additive fixed points without splitting") {
  // J_3 + J_1 over F_3, A = <e2 + f, e3> = J_2, C = J_2.
  const auto& f3 = FieldCtx::prime(3);
  const auto B = modrep::block_sum(f3, {3, 1}, 3);
  linalg::Vector v = linalg::unit_vector(f3, 4, 1);
  v[3] = f3.one();
  const auto t = modrep::ExactTriple::make(B, {v, linalg::unit_vector(f3, 4, 2)});
  CHECK(modrep::block_decomposition(t.A).sizes == std::vector<std::size_t>{2});
  CHECK(modrep::block_decomposition(t.C).sizes == std::vector<std::size_t>{2});
  CHECK(modrep::invariants_additive(t));
  CHECK_FALSE(modrep::splits(t));
  CHECK_FALSE(modrep::equivariant_section({B.sigma}, {t.C.sigma}, t.sq.projection).has_value());
}

TEST_CASE("random triples: splits <=> equivariant section exists, splits => invariants additive") {
  for (std::size_t q : {3u, 4u, 5u, 8u, 9u}) {
    std::mt19937_64 rng(1000 + q);
    const auto& k = field_for(q);
    std::size_t split = 0, nonsplit = 0;
    for (int s = 0; s < 200; ++s) {
      const auto t = modrep::random_exact_triple(k, q, 8, rng);
      REQUIRE(t.A.dim() + t.C.dim() == t.B.dim());
      const bool sp = modrep::splits(t);
      const bool section = modrep::equivariant_section({t.B.sigma}, {t.C.sigma}, t.sq.projection).has_value();
      REQUIRE(section == sp);
      if (sp) REQUIRE(modrep::invariants_additive(t));
      (sp ? split : nonsplit)++;
    }
    CAPTURE(q);
    CHECK(split > 0);
    CHECK(nonsplit > 0);
  }
}

TEST_CASE("average_section: G = P returns the input") {
  const auto elems = char2ex::enumerate_group();
  const auto G = char2ex::group_table();
  std::vector<std::size_t> all(G.order());
  for (std::size_t i = 0; i < all.size(); ++i) all[i] = i;
  const auto rho = character(elems, 1);
  const auto rho_b = [&] {
    modrep::Representation out;
    for (const auto& m : rho) out.push_back(direct_sum(m, m));
    return out;
  }();
  const auto& k = FieldCtx::f4();
  Matrix proj(k, 1, 2);
  proj(0, 1) = k.one();
  Matrix s(k, 2, 1);
  s(0, 0) = k.generator();
  s(1, 0) = k.one();
  CHECK(modrep::average_section(G, all, s, rho_b, rho, proj) == s);
}

TEST_CASE("average_section on the order 24 group over its Q8") {
  const auto elems = char2ex::enumerate_group();
  const auto G = char2ex::group_table();
  std::vector<std::size_t> P;
  for (std::size_t i = 0; i < elems.size(); ++i)
    if (elems[i].u.is_one()) P.push_back(i);
  REQUIRE(P.size() == 8);
  CHECK(modrep::right_coset_representatives(G, P).size() == 3);
  const auto& k = FieldCtx::f4();

  // B = k_chi1 + k_chi2, projection onto the second summand.  On P both characters are
  // trivial, so (phi, 1) is a P-section for every phi; averaging forces phi = 0.
  const auto chi1 = character(elems, 1);
  const auto chi2 = character(elems, 2);
  modrep::Representation rho_b;
  for (std::size_t i = 0; i < elems.size(); ++i) rho_b.push_back(direct_sum(chi1[i], chi2[i]));
  Matrix proj(k, 1, 2);
  proj(0, 1) = k.one();
  for (std::uint64_t phi = 0; phi < 4; ++phi) {
    Matrix s(k, 2, 1);
    s(0, 0) = k.element(phi);
    s(1, 0) = k.one();
    const auto avg = modrep::average_section(G, P, s, rho_b, chi2, proj);
    CHECK(avg(0, 0).is_zero());
    CHECK(avg(1, 0).is_one());
  }

  // B = k[G/P], the permutation module on the three cosets, A = the diagonal line.
  // P acts trivially, so any linear section is P-equivariant.
  const auto reps = modrep::right_coset_representatives(G, P);
  auto coset_of = [&](std::size_t g) {
    for (std::size_t c = 0; c < reps.size(); ++c)
      for (auto h : P)
        if (G.mul[h][reps[c]] == g) return c;
    return std::size_t{99};
  };
  modrep::Representation perm;
  for (std::size_t g = 0; g < G.order(); ++g) {
    // g sends the coset P r to P r g^{-1}.
    Matrix m(k, 3, 3);
    for (std::size_t c = 0; c < 3; ++c) m(coset_of(G.mul[reps[c]][G.inverse(g)]), c) = k.one();
    perm.push_back(m);
  }
  CHECK_NOTHROW(modrep::check_representation(G, perm));
  const auto sq = modrep::subquotient(k, 3, {{k.one(), k.one(), k.one()}});
  modrep::Representation quot;
  for (const auto& m : perm) quot.push_back(modrep::induce_on_quotient(sq, m));
  const auto avg = modrep::average_section(G, P, sq.lift, perm, quot, sq.projection);
  for (std::size_t g = 0; g < G.order(); ++g) CHECK(perm[g] * avg == avg * quot[g]);
  CHECK((sq.projection * avg).is_identity());
}

TEST_CASE("average_section: Z/6 over F_2 with P = Z/2") {
  const auto& f2 = FieldCtx::prime(2);
  modrep::FiniteGroup G;
  G.mul.assign(6, std::vector<std::size_t>(6));
  for (std::size_t a = 0; a < 6; ++a)
    for (std::size_t b = 0; b < 6; ++b) G.mul[a][b] = (a + b) % 6;
  const std::vector<std::size_t> P{0, 3};
  const auto reg = CyclicModule::free(f2, 6);
  modrep::Representation rho_b{Matrix::identity(f2, 6)};
  for (std::size_t g = 1; g < 6; ++g) rho_b.push_back(rho_b.back() * reg.sigma);

  // A = k[Z/6] (1 + g^2 + g^4): functions constant on Z/3-cosets.
  std::vector<linalg::Vector> span;
  for (std::size_t shift = 0; shift < 2; ++shift) {
    linalg::Vector v = linalg::zero_vector(f2, 6);
    for (std::size_t i = 0; i < 6; i += 2) v[(i + shift) % 6] = f2.one();
    span.push_back(v);
  }
  const auto sq = modrep::subquotient(f2, 6, span);
  modrep::Representation rho_c;
  for (const auto& m : rho_b) rho_c.push_back(modrep::induce_on_quotient(sq, m));

  const auto s = modrep::equivariant_section({rho_b[3]}, {rho_c[3]}, sq.projection);
  REQUIRE(s.has_value());
  const auto avg = modrep::average_section(G, P, *s, rho_b, rho_c, sq.projection);
  for (std::size_t g = 0; g < 6; ++g) CHECK(rho_b[g] * avg == avg * rho_c[g]);
  CHECK((sq.projection * avg).is_identity());

  // Perturb by some C -> A that is not P-linear: the input check must reject it.
  bool rejected = false;
  for (std::size_t i = 0; i < sq.dim_sub() && !rejected; ++i) {
    for (std::size_t j = 0; j < sq.dim_quotient() && !rejected; ++j) {
      Matrix phi(f2, sq.dim_sub(), sq.dim_quotient());
      phi(i, j) = f2.one();
      const Matrix bad = *s + sq.inclusion * phi;
      if (rho_b[3] * bad == bad * rho_c[3]) continue;
      CHECK_THROWS_AS(modrep::average_section(G, P, bad, rho_b, rho_c, sq.projection), PreconditionError);
      rejected = true;
    }
  }
  CHECK(rejected);
}

TEST_CASE("average_section: errors") {
  const auto& f2 = FieldCtx::prime(2);
  modrep::FiniteGroup G;
  G.mul.assign(4, std::vector<std::size_t>(4));
  for (std::size_t a = 0; a < 4; ++a)
    for (std::size_t b = 0; b < 4; ++b) G.mul[a][b] = (a + b) % 4;
  const auto reg = CyclicModule::free(f2, 4);
  modrep::Representation rho{Matrix::identity(f2, 4)};
  for (std::size_t g = 1; g < 4; ++g) rho.push_back(rho.back() * reg.sigma);
  const auto sq = modrep::subquotient(f2, 4, {});
  // Index 2 vanishes in F_2.
  CHECK_THROWS_AS(modrep::average_section(G, {0, 2}, sq.lift, rho, rho, sq.projection), PreconditionError);
  // Not a subgroup.
  CHECK_THROWS_AS(modrep::right_coset_representatives(G, {0, 1}), PreconditionError);

  // Not a section.
  const auto elems = char2ex::enumerate_group();
  const auto G24 = char2ex::group_table();
  std::vector<std::size_t> P;
  for (std::size_t i = 0; i < elems.size(); ++i)
    if (elems[i].u.is_one()) P.push_back(i);
  const auto& k = FieldCtx::f4();
  const auto chi = character(elems, 1);
  modrep::Representation rho_b;
  for (const auto& m : chi) rho_b.push_back(direct_sum(m, m));
  Matrix proj(k, 1, 2);
  proj(0, 1) = k.one();
  Matrix not_section(k, 2, 1);
  not_section(0, 0) = k.one();
  CHECK_THROWS_AS(modrep::average_section(G24, P, not_section, rho_b, chi, proj), PreconditionError);
}
