#include <vector>

#include "doctest.h"
#include "hodgesplit/cohom.hpp"
#include "hodgesplit/errors.hpp"

using namespace hodgesplit;
using cohom::CyclicModule;
using gf::FieldCtx;

namespace {

ascover::LocalCover cover(std::uint32_t p, long n) {
  return ascover::build(p, n, ascover::default_precision(p, n, cohom::default_window(p, n)));
}

// Independent count of J = {a-n <= i <= a-1 : p does not divide i}.
long count_j(std::uint32_t p, long n, long a) {
  long c = 0;
  for (long i = a - n; i <= a - 1; ++i)
    if (i % static_cast<long>(p) != 0) ++c;
  return c;
}

}  // namespace

TEST_CASE("floor_div rounds toward minus infinity") {
  CHECK(cohom::floor_div(-1, 3) == -1);
  CHECK(cohom::floor_div(-3, 3) == -1);
  CHECK(cohom::floor_div(-4, 3) == -2);
  CHECK(cohom::floor_div(5, 3) == 1);
  CHECK(cohom::floor_div(0, 7) == 0);
}

TEST_CASE("periodic_cohomology: examples") {
  for (std::uint32_t p : {2u, 3u, 5u, 7u}) {
    const auto& k = FieldCtx::prime(p);
    const auto triv = CyclicModule::trivial(k, 1, p);
    CHECK(cohom::periodic_cohomology(triv, 0) == 1);
    CHECK(cohom::periodic_cohomology(triv, 1) == 1);
    CHECK(cohom::periodic_cohomology(triv, 2) == 1);

    const auto reg = CyclicModule::free(k, p);
    CHECK(cohom::periodic_cohomology(reg, 0) == 1);
    CHECK(cohom::periodic_cohomology(reg, 1) == 0);
    CHECK(cohom::periodic_cohomology(reg, 2) == 0);
  }
  const auto& f3 = FieldCtx::prime(3);
  const auto j2 = CyclicModule::jordan_block(f3, 2, 3);
  CHECK(cohom::periodic_cohomology(j2, 0) == 1);
  CHECK(cohom::periodic_cohomology(j2, 1) == 1);
}

TEST_CASE("periodic_cohomology: free modules are acyclic") {
  for (std::uint32_t p : {2u, 3u, 5u, 7u}) {
    for (std::size_t r = 1; r <= 3; ++r) {
      const auto mod = CyclicModule::free(FieldCtx::prime(p), p, r);
      CHECK(cohom::periodic_cohomology(mod, 0) == r);
      CHECK(cohom::periodic_cohomology(mod, 1) == 0);
      CHECK(cohom::periodic_cohomology(mod, 2) == 0);
    }
  }
}

TEST_CASE("periodic_cohomology: errors") {
  const auto& f3 = FieldCtx::prime(3);
  CHECK_THROWS_AS(cohom::periodic_cohomology(CyclicModule::jordan_block(f3, 2, 2), 1), PreconditionError);
  CHECK_THROWS_AS(cohom::periodic_cohomology(CyclicModule::trivial(f3, 1, 3), 3), PreconditionError);
}

TEST_CASE("h1_closed_form: examples and range") {
  CHECK(cohom::h1_closed_form(3, 2, 0) == 2);
  CHECK(cohom::h1_closed_form(3, 1, 0) == 1);
  CHECK(cohom::h1_closed_form(5, 3, 1) == 2);
  for (std::uint32_t p : {2u, 3u, 5u, 7u}) {
    for (long n = 1; n <= 12; ++n) {
      if (n % static_cast<long>(p) == 0) continue;
      for (long a = -10; a <= 20; ++a) {
        const long v = cohom::h1_closed_form(p, n, a);
        CHECK(v >= 0);
        CHECK(v <= n);
        CHECK(v == count_j(p, n, a));
      }
    }
  }
}

TEST_CASE("h1_lattice: examples") {
  {
    const auto set = cohom::h1_lattice(cover(3, 2), 0, cohom::default_window(3, 2));
    CHECK(set.dim() == 2);
    CHECK(set.monomial_exponents() == std::vector<long>{-2, -1});
  }
  for (std::uint32_t p : {2u, 3u, 5u, 7u}) {
    CHECK(cohom::h1_lattice(cover(p, 1), 1, cohom::default_window(p, 1)).dim() == 0);
  }
  {
    const auto set = cohom::h1_lattice(cover(5, 3), 1, cohom::default_window(5, 3));
    CHECK(set.dim() == 2);
    CHECK(set.monomial_exponents() == std::vector<long>{-2, -1});
  }
}

TEST_CASE("h1_lattice: representatives are fixed and nonzero modulo the image of L^G") {
  const auto set = cohom::h1_lattice(cover(5, 7), 2, cohom::default_window(5, 7));
  linalg::EchelonBasis image(set.window.field(), set.window.size());
  for (const auto& u : set.subgroup_image) image.insert(u);
  for (const auto& r : set.representatives) {
    CHECK(set.window.is_fixed(r));
    CHECK_FALSE(linalg::is_zero(image.reduce(r)));
  }
}

TEST_CASE("h1_lattice: errors") {
  const auto cov = cover(3, 2);
  CHECK_THROWS_AS(cohom::h1_lattice(cov, 0, 5), PreconditionError);
  const auto thin = ascover::build(3, 2, 10);
  CHECK_THROWS_AS(cohom::h1_lattice(thin, 0, 8), PrecisionError);
}

TEST_CASE("h1_lattice matches the closed form on a grid") {
  for (std::uint32_t p : {2u, 3u, 5u}) {
    for (long n = 1; n <= 7; ++n) {
      if (n % static_cast<long>(p) == 0) continue;
      const auto cov = cover(p, n);
      for (long a = -3; a <= n + 3; ++a) {
        CAPTURE(p);
        CAPTURE(n);
        CAPTURE(a);
        CHECK(static_cast<long>(cohom::h1_lattice(cov, a, cohom::default_window(p, n)).dim()) ==
              cohom::h1_closed_form(p, n, a));
      }
    }
  }
}

TEST_CASE("h1_basis_certificate: examples") {
  {
    const auto cert = cohom::h1_basis_certificate(cover(3, 2), 3, cohom::default_window(3, 2));
    CHECK(cert.basis_exponents == std::vector<long>{1, 2});
    CHECK(cert.vanishing_exponents.empty());
    CHECK(cert.ok());
  }
  {
    const auto cert = cohom::h1_basis_certificate(cover(3, 4), 3, cohom::default_window(3, 4));
    CHECK(cert.basis_exponents == std::vector<long>{-1, 1, 2});
    CHECK(cert.vanishing_exponents == std::vector<long>{0});
    CHECK(cert.quotient_dim == 3);
  }
  {
    const auto cert = cohom::h1_basis_certificate(cover(2, 3), 0, cohom::default_window(2, 3));
    CHECK(cert.basis_exponents == std::vector<long>{-3, -1});
    CHECK(cert.vanishing_exponents == std::vector<long>{-2});
    CHECK(cert.quotient_dim == 2);
  }
  {
    const auto cert = cohom::h1_basis_certificate(cover(5, 3), 0, cohom::default_window(5, 3));
    CHECK(cert.basis_exponents == std::vector<long>{-3, -2, -1});
    CHECK(cert.vanishing_exponents.empty());
  }
}

TEST_CASE("d_image: examples") {
  {
    const auto cov = cover(3, 2);
    const auto d = cohom::d_image(cov, cohom::default_window(3, 2));
    CHECK(d.rank == 1);
    REQUIRE(d.source.monomial_exponents() == std::vector<long>{-2, -1});
    const auto& w = d.target.window;
    // t^-2 -> t^3 * (-2) t^-3 = 1 (mod 3), t^-1 -> -t.
    CHECK(d.images[0] == w.monomial(0));
    auto minus_t = w.monomial(1);
    minus_t[w.index(1)] = -cov.field().one();
    CHECK(d.images[1] == minus_t);
  }
  CHECK(cohom::d_image_rank(cover(3, 1), cohom::default_window(3, 1)) == 0);
  {
    const auto cov = cover(5, 7);
    const auto d = cohom::d_image(cov, cohom::default_window(5, 7));
    CHECK(d.rank == 4);
    const auto src = d.source.monomial_exponents();
    REQUIRE(src == std::vector<long>{-7, -6, -4, -3, -2, -1});
    linalg::EchelonBasis image(cov.field(), d.target.window.size());
    for (const auto& u : d.target.subgroup_image) image.insert(u);
    std::vector<long> surviving;
    for (std::size_t i = 0; i < src.size(); ++i)
      if (!linalg::is_zero(image.reduce(d.images[i]))) surviving.push_back(src[i]);
    CHECK(surviving == std::vector<long>{-6, -4, -3, -1});
  }
}

TEST_CASE("d_image_closed_form: examples") {
  CHECK(cohom::d_image_closed_form(3, 2) == 1);
  CHECK(cohom::d_image_closed_form(2, 3) == 0);
  for (std::uint32_t p : {2u, 3u, 5u, 7u, 11u}) CHECK(cohom::d_image_closed_form(p, 1) == 0);
}

TEST_CASE("d_image_rank matches the closed form on a grid") {
  for (std::uint32_t p : {2u, 3u, 5u}) {
    for (long n = 1; n <= 7; ++n) {
      if (n % static_cast<long>(p) == 0) continue;
      CAPTURE(p);
      CAPTURE(n);
      CHECK(static_cast<long>(cohom::d_image_rank(cover(p, n), cohom::default_window(p, n))) ==
            cohom::d_image_closed_form(p, n));
    }
  }
}
