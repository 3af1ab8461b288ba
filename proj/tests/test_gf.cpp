#include <random>
#include <vector>

#include "doctest.h"
#include "hodgesplit/errors.hpp"
#include "hodgesplit/gf.hpp"

using namespace hodgesplit;
using gf::FieldCtx;
using gf::FieldElement;

namespace {

FieldElement random_element(const FieldCtx& k, std::mt19937_64& rng) {
  std::uniform_int_distribution<std::uint64_t> dist(0, k.order() - 1);
  return k.element(dist(rng));
}

std::vector<const FieldCtx*> sample_fields() {
  return {&FieldCtx::prime(2),          &FieldCtx::prime(3),
          &FieldCtx::prime(5),          &FieldCtx::prime(7),
          &FieldCtx::prime(2147483647), &FieldCtx::f4(),
          &FieldCtx::extension(3, {1, 0, 1}),  // F_9 = F_3[w]/(w^2+1)
          &FieldCtx::extension(2, {1, 1, 0, 1}),
          &FieldCtx::extension(2, {1, 1, 0, 0, 1})};
}

}  // namespace

TEST_CASE("add: small examples") {
  const auto& f3 = FieldCtx::prime(3);
  CHECK(f3.from_int(2) + f3.from_int(2) == f3.one());

  const auto& f4 = FieldCtx::f4();
  const auto w = f4.generator();
  CHECK((w + w).is_zero());

  const auto& f5 = FieldCtx::prime(5);
  CHECK(f5.zero() + f5.from_int(4) == f5.from_int(4));
}

TEST_CASE("add: context mismatch is rejected") {
  const auto& f3 = FieldCtx::prime(3);
  const auto& f5 = FieldCtx::prime(5);
  CHECK_THROWS_AS(f3.one() + f5.one(), ContextMismatch);
  CHECK_THROWS_AS(FieldElement{} * f5.one(), ContextMismatch);
}

TEST_CASE("mul_inv") {
  const auto& f5 = FieldCtx::prime(5);
  CHECK(f5.from_int(2).inv() == f5.from_int(3));

  const auto& f4 = FieldCtx::f4();
  const auto w = f4.generator();
  CHECK(w.inv() == w * w);
  CHECK(w.pow(3).is_one());

  const auto& f7 = FieldCtx::prime(7);
  CHECK(f7.one().inv() == f7.one());
  CHECK_THROWS_AS(f7.zero().inv(), DivisionByZero);
  CHECK_THROWS_AS(f7.one() / f7.zero(), DivisionByZero);
}

TEST_CASE("nth_root") {
  const auto& f7 = FieldCtx::prime(7);
  CHECK(gf::nth_root(f7.one(), 3) == f7.one());

  const auto& f4 = FieldCtx::f4();
  const auto w = f4.generator();
  CHECK_THROWS_AS(gf::nth_root(w * w, 3), NoRootError);

  // 2^2 = 3^2 = 4 in F_5 and 2 comes first in the enumeration.
  const auto& f5 = FieldCtx::prime(5);
  CHECK(gf::nth_root(f5.from_int(4), 2) == f5.from_int(2));

  CHECK_THROWS_AS(gf::nth_root(f5.from_int(4), 5), PreconditionError);
}

TEST_CASE("context construction") {
  CHECK_THROWS_AS(FieldCtx::prime(9), PreconditionError);
  CHECK_THROWS_AS(FieldCtx::prime(1), PreconditionError);
  CHECK_THROWS_AS(FieldCtx::extension(2, {1, 0, 1}), PreconditionError);  // (w+1)^2
  CHECK_THROWS_AS(FieldCtx::extension(3, {2, 0, 1}), PreconditionError);  // w^2 - 1
  CHECK(&FieldCtx::prime(5) == &FieldCtx::prime(5));
  CHECK(&FieldCtx::f4() == &FieldCtx::extension(2, {1, 1, 1}));
  CHECK(FieldCtx::f4().order() == 4);
}

TEST_CASE("enumeration order is a bijection") {
  for (const auto* k : sample_fields()) {
    if (k->order() > 64) continue;
    for (std::uint64_t i = 0; i < k->order(); ++i) CHECK(k->element(i).index() == i);
  }
}

TEST_CASE("field axioms on random triples") {
  std::mt19937_64 rng(20261016);
  for (const auto* k : sample_fields()) {
    CAPTURE(k->name());
    for (int s = 0; s < 1000; ++s) {
      const auto a = random_element(*k, rng);
      const auto b = random_element(*k, rng);
      const auto c = random_element(*k, rng);
      REQUIRE((a + b) + c == a + (b + c));
      REQUIRE((a * b) * c == a * (b * c));
      REQUIRE(a * (b + c) == a * b + a * c);
      REQUIRE(a * b == b * a);
      REQUIRE(a - a == k->zero());
      if (!a.is_zero()) REQUIRE((a * a.inv()).is_one());
    }
  }
}

TEST_CASE("Frobenius is additive") {
  const auto& f4 = FieldCtx::f4();
  for (std::uint64_t i = 0; i < 4; ++i) {
    for (std::uint64_t j = 0; j < 4; ++j) {
      const auto a = f4.element(i);
      const auto b = f4.element(j);
      CHECK((a + b).pow(2) == a.pow(2) + b.pow(2));
    }
  }
  std::mt19937_64 rng(7);
  for (const auto* k : sample_fields()) {
    const auto p = static_cast<std::int64_t>(k->characteristic());
    for (int s = 0; s < 200; ++s) {
      const auto a = random_element(*k, rng);
      const auto b = random_element(*k, rng);
      REQUIRE((a + b).pow(p) == a.pow(p) + b.pow(p));
    }
  }
}

TEST_CASE("nth_root^n == a whenever a root is returned") {
  for (const auto* k : sample_fields()) {
    if (k->order() > 64) continue;
    for (std::uint64_t n = 1; n <= 6; ++n) {
      if (n % k->characteristic() == 0) continue;
      for (std::uint64_t i = 0; i < k->order(); ++i) {
        const auto a = k->element(i);
        try {
          const auto r = gf::nth_root(a, n);
          CHECK(r.pow(static_cast<std::int64_t>(n)) == a);
        } catch (const NoRootError&) {
          for (std::uint64_t j = 0; j < k->order(); ++j) {
            CHECK(k->element(j).pow(static_cast<std::int64_t>(n)) != a);
          }
        }
      }
    }
  }
}
