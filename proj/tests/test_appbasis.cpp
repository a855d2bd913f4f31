#include <random>

#include "doctest.h"
#include "simpade/appbasis.hpp"
#include "support/properties.hpp"

using namespace simpade;
using namespace simpade::testing;

namespace {

PolyMatrix example_B() {
  return matrix(kGF2, {{one2()}, {t2({4, 2, 0})}, {t2({4, 0})}, {t2({4, 3, 0})}});
}

const Shift kN{5, 3, 4, 5};

struct RandomInput {
  PolyMatrix a;
  size_t d;
  Shift s;
};

RandomInput random_input(std::mt19937_64& rng, const Field& f, size_t max_m, size_t max_d) {
  const size_t m = uniform_int(rng, 1, int64_t(max_m));
  const size_t n = uniform_int(rng, 1, int64_t(m));
  const size_t d = uniform_int(rng, 0, int64_t(max_d));
  Shift s(m);
  for (auto& e : s) e = uniform_int(rng, -10, 10);
  return {random_matrix(rng, f, m, n, uniform_int(rng, -1, int64_t(d) + 2)), d, s};
}

}  // namespace

TEST_CASE("empty order and zero input give the identity") {
  Field f(97);
  std::mt19937_64 rng(1);
  const PolyMatrix a = random_matrix(rng, f, 3, 2, 5);
  const Shift s{4, -2, 0};
  for (auto algo : {&m_basis, &popov_basis}) {
    auto r = algo(0, a, s);
    CHECK(r.basis == PolyMatrix::identity(f, 3));
    CHECK(r.degrees == RowDegrees(s.begin(), s.end()));
    r = algo(7, PolyMatrix(f, 3, 2), s);
    CHECK(r.basis == PolyMatrix::identity(f, 3));
  }
  CHECK(pm_basis(0, a, s).basis == PolyMatrix::identity(f, 3));
  CHECK(pm_basis(90, PolyMatrix(f, 3, 2), s).basis == PolyMatrix::identity(f, 3));
  CHECK_THROWS_AS(m_basis(3, a, {1, 2}), DimensionError);
}

TEST_CASE("Hermite-Pade basis of the worked example") {
  const PolyMatrix b = example_B();
  const ApproximantBasis p = popov_basis(5, b, kN);
  CHECK(p.basis == duality_G());
  CHECK(p.degrees == RowDegrees{6, 5, 6, 5});
  CHECK(same_row_space(m_basis(5, b, kN).basis, kN, duality_G(), kN));
  CHECK(same_row_space(pm_basis(5, b, kN).basis, kN, duality_G(), kN));
  CHECK(check_approximant_basis(p, b, 5, kN).empty());
}

TEST_CASE("pm_basis below the base case is m_basis") {
  std::mt19937_64 rng(2);
  Field f(97);
  for (int t = 0; t < 20; ++t) {
    auto in = random_input(rng, f, 4, kDefaultBaseCaseOrder);
    const auto a = m_basis(in.d, in.a, in.s), b = pm_basis(in.d, in.a, in.s);
    CHECK(a.basis == b.basis);
    CHECK(a.degrees == b.degrees);
  }
}

TEST_CASE("pm_basis matches m_basis across the split") {
  std::mt19937_64 rng(3);
  for (uint64_t p : {uint64_t{2}, uint64_t{97}}) {
    Field f(p);
    for (int t = 0; t < 30; ++t) {
      auto in = random_input(rng, f, 4, 80);
      const auto a = m_basis(in.d, in.a, in.s);
      const auto b = pm_basis(in.d, in.a, in.s, 4);
      REQUIRE(check_approximant_basis(b, in.a, in.d, in.s) == "");
      CHECK(popov_canonical(a.basis, in.s) == popov_canonical(b.basis, in.s));
    }
  }
}

TEST_CASE("approximant basis invariants on random inputs") {
  std::mt19937_64 rng(4);
  for (uint64_t p : {uint64_t{2}, uint64_t{97}, uint64_t{1000000007}}) {
    Field f(p);
    for (int t = 0; t < 25; ++t) {
      auto in = random_input(rng, f, 5, 40);
      REQUIRE(check_approximant_basis(pm_basis(in.d, in.a, in.s), in.a, in.d, in.s) == "");
      REQUIRE(check_approximant_basis(popov_basis(in.d, in.a, in.s), in.a, in.d, in.s) == "");
      REQUIRE(check_canonical(rng, in.a, in.d, in.s) == "");
      if (in.a.cols() > 1) {
        const size_t split = uniform_int(rng, 1, int64_t(in.a.cols()) - 1);
        REQUIRE(check_pipeline(in.a, split, in.d, in.s) == "");
        REQUIRE(check_pruned_pipeline(in.a, split, in.d, in.s) == "");
      }
    }
  }
}

TEST_CASE("intersection basis of the two sub-solutions") {
  const PolyMatrix r = intersection_R();
  // The printed matrix is the order-8 basis (first row x^8); its three
  // low-degree rows are the same for every order from 6 up.
  const ApproximantBasis p = popov_basis(8, r, kIntersectionShift);
  CHECK(p.basis == intersection_G());
  CHECK(p.degrees == RowDegrees{3, 3, 0, -1, -1});

  for (size_t d = 6; d <= 10; ++d) {
    const PolyMatrix g = popov_basis(d, r, kIntersectionShift).basis;
    CHECK(g.select_rows({2, 3, 4}) == intersection_G().select_rows({2, 3, 4}));
  }
  for (size_t d : {size_t{7}, size_t{9}}) {
    const NegativePart neg = neg_min_basis(d, r, kIntersectionShift);
    REQUIRE(neg.basis.rows() == 2);
    CHECK(neg.degrees == RowDegrees{-1, -1});
    const PolyMatrix expect = intersection_G().select_rows({3, 4});
    CHECK(same_row_space(neg.basis, kIntersectionShift, expect, kIntersectionShift));
  }
}

TEST_CASE("negative part") {
  Field f(97);
  CHECK(neg_min_basis(1, PolyMatrix::identity(f, 2), {0, 0}).basis.rows() == 0);
  const NegativePart n = negative_rows(PolyMatrix::identity(f, 3), {-1, 0, -4});
  CHECK(n.basis.rows() == 2);
  CHECK(n.degrees == RowDegrees{-1, -4});
}

TEST_CASE("direct-solver matrix on the worked example") {
  const ProblemInstance inst = example1();
  // H = [-S; I; diag(g)], h = -(N | N0 - 1, ..., N0 - 1), d = 9.
  PolyMatrix h(kGF2, 7, 3);
  for (size_t i = 0; i < 3; ++i) {
    h(0, i) = inst.series[i];
    h(1 + i, i) = one2();
    h(4 + i, i) = inst.moduli[i];
  }
  const Shift shift{-5, -3, -4, -5, -4, -4, -4};
  const NegativePart neg = neg_min_basis(9, h, shift);
  REQUIRE(neg.basis.rows() == 2);
  CHECK(gf2_span(neg.basis.column(0)) == gf2_span({t2({4, 0}), t2({3, 1})}));
}
