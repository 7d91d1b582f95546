#include <gtest/gtest.h>

#include "support/helpers.hpp"

using namespace bmpp;
using testing_support::int_points;
using testing_support::monomials;
using testing_support::poly;
using testing_support::polys;
using testing_support::Rng;

namespace {

PointSet<RationalField> columns_example() {
  return int_points(RationalField{}, {{0, 1}, {0, 3}, {1, 0}, {1, 2}, {1, 3}, {1, 4}, {2, 1}, {2, 2}, {3, 1}});
}

bool failed(const VerifyReport& r, const std::string& name) {
  for (const auto& c : r.checks)
    if (c.name == name && !c.passed) return true;
  return false;
}

}  // namespace

TEST(CheckVanishing, Examples) {
  RationalField q;
  auto xi = columns_example();
  auto r = spbm_run(xi, TermOrder::inlex);
  EXPECT_TRUE(check_vanishing<RationalField>(r.G, xi).passed);
  auto one = polys(q, {"1"});
  auto bad = check_vanishing<RationalField>(one, xi);
  EXPECT_FALSE(bad.passed);
  EXPECT_NE(bad.checks[0].detail.find("(0,1)"), std::string::npos) << bad.checks[0].detail;
  std::vector<Polynomial<RationalField>> none;
  EXPECT_TRUE(check_vanishing<RationalField>(none, xi).passed);
}

TEST(CheckReducedGb, Examples) {
  RationalField q;
  auto xi = int_points(q, {{0, 0}, {1, 0}});
  auto good = polys(q, {"y", "x^2-x"});
  auto n = monomials({"1", "x"});
  EXPECT_TRUE(check_reduced_gb<RationalField>(good, n, TermOrder::lex, 2).passed);

  auto dividing = polys(q, {"x^2-x", "x^3"});
  EXPECT_TRUE(failed(check_reduced_gb<RationalField>(dividing, n, TermOrder::lex, 2),
                     "leading monomials pairwise non-divisible"));

  auto gap = monomials({"1", "x^2"});
  EXPECT_TRUE(failed(check_reduced_gb<RationalField>(good, gap, TermOrder::lex, 2), "N is a lower set"));

  auto not_monic = polys(q, {"2y", "x^2-x"});
  EXPECT_TRUE(failed(check_reduced_gb<RationalField>(not_monic, n, TermOrder::lex, 2), "monic"));

  auto tail = polys(q, {"y+x^2", "x^2-x"});
  EXPECT_FALSE(check_reduced_gb<RationalField>(tail, n, TermOrder::lex, 2).passed);

  auto missing = polys(q, {"x^2-x"});
  EXPECT_TRUE(failed(check_reduced_gb<RationalField>(missing, n, TermOrder::lex, 2),
                     "border covered by leading monomials"));
  EXPECT_TRUE(failed(check_reduced_gb<RationalField>(good, n, TermOrder::lex, 3), "#N = #points"));
}

TEST(CheckNewton, F7RowBasis) {
  PrimeField f7(7);
  auto xi = int_points(f7, {{0, 1}, {1, 1}, {2, 1}, {5, 1}, {1, 6}, {2, 6}, {5, 6}, {1, 0}, {1, 4}});
  auto basis = newton_basis_rows(line_cover(xi, Axis::rows));
  EXPECT_TRUE(check_newton<PrimeField>(basis.polys, basis.point_order).passed);
  auto swapped = basis.point_order;
  std::swap(swapped[0], swapped[1]);
  EXPECT_FALSE(check_newton<PrimeField>(basis.polys, swapped).passed);
  std::vector<Point<PrimeField>> few(basis.point_order.begin(), basis.point_order.begin() + 3);
  EXPECT_THROW(check_newton<PrimeField>(basis.polys, few), LengthMismatch);
  EXPECT_TRUE(check_newton_span<PrimeField>(basis.polys, basis.index_order, TermOrder::lex).passed);
  EXPECT_FALSE(check_newton_span<PrimeField>(basis.polys, monomials({"1"}), TermOrder::lex).passed);
}

TEST(OracleDense, Examples) {
  RationalField q;
  auto single = oracle_dense(int_points(q, {{2, -1}}), TermOrder::lex);
  EXPECT_EQ(single.N, monomials({"1"}));
  EXPECT_EQ(single.G, polys(q, {"y+1", "x-2"}));

  auto xi = columns_example();
  auto o = oracle_dense(xi, TermOrder::inlex);
  auto r = spbm_run(xi, TermOrder::inlex);
  EXPECT_EQ(o.G, r.G);
  EXPECT_EQ(o.N, r.N);

  PrimeField f(101);
  Rng rng(71);
  auto big = testing_support::random_point_set(f, 65, rng);
  EXPECT_THROW(oracle_dense(big, TermOrder::lex), CapExceeded);
  EXPECT_NO_THROW(oracle_dense(big, TermOrder::lex, 65));
}

TEST(VerifyResult, CorruptedOutputsAreCaught) {
  RationalField q;
  auto xi = columns_example();
  auto good = spbm_run(xi, TermOrder::inlex);
  ASSERT_TRUE(verify_result(good, xi, TermOrder::inlex).passed);

  auto a = good;
  a.G[1].add_term({0, 0}, q.one());
  EXPECT_FALSE(verify_result(a, xi, TermOrder::inlex).passed);

  auto b = good;
  b.G.pop_back();
  EXPECT_FALSE(verify_result(b, xi, TermOrder::inlex).passed);

  auto c = good;
  std::swap(c.point_permutation[0], c.point_permutation[4]);
  EXPECT_FALSE(verify_result(c, xi, TermOrder::inlex).passed);

  auto d = good;
  d.N.back() = {5, 5};
  EXPECT_FALSE(verify_result(d, xi, TermOrder::inlex).passed);

  auto e = good;
  e.Q.pop_back();
  EXPECT_FALSE(verify_result(e, xi, TermOrder::inlex).passed);

  auto f = good;
  f.point_permutation[0] = 99;
  EXPECT_FALSE(verify_result(f, xi, TermOrder::inlex).passed);

  EXPECT_FALSE(verify_result(good, xi, TermOrder::lex).passed);
}

TEST(VerifyResult, RandomCorruptionsAreCaught) {
  Rng rng(72);
  PrimeField f(13);
  for (int k = 0; k < 100; ++k) {
    auto xi = testing_support::random_point_set(f, 2 + rng() % 20, rng);
    auto o = testing_support::kAllOrders[rng() % 4];
    auto r = gpbm_run(xi, o);
    ASSERT_TRUE(verify_result(r, xi, o).passed);
    auto bad = r;
    auto& g = bad.G[rng() % bad.G.size()];
    auto lm = leading_monomial(g, o);
    std::vector<Exponent> below;
    for (auto e : r.N)
      if (compare(o, e, lm) < 0) below.push_back(e);
    auto n = below[rng() % below.size()];
    g.add_term(n, f.from_int(1 + static_cast<std::int64_t>(rng() % 12)));
    ASSERT_EQ(leading_monomial(g, o), lm);
    EXPECT_FALSE(verify_result(bad, xi, o).passed);
  }
}

TEST(Report, TextAndJson) {
  VerifyReport r;
  r.add("first", true);
  r.add("second", false, "because");
  EXPECT_FALSE(r.passed);
  auto text = r.to_text();
  EXPECT_NE(text.find("[ok]   first"), std::string::npos);
  EXPECT_NE(text.find("[FAIL] second: because"), std::string::npos);
  auto j = report_to_json(r);
  EXPECT_EQ(j["passed"], false);
  ASSERT_EQ(j["checks"].size(), 2u);
  EXPECT_EQ(j["checks"][1]["name"], "second");
  EXPECT_EQ(j["checks"][1]["detail"], "because");
}
