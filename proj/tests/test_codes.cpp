#include <doctest.h>

#include <random>
#include <sstream>

#include "hermcode/bounds.hpp"
#include "hermcode/codes.hpp"

using namespace hermcode;

namespace {

struct Params {
  std::size_t n, d, m, k, dmin;
  std::uint64_t classes;
};

}  // namespace

TEST_CASE("exhaustive parameters on the cone over GF(4)") {
  const FieldCtx ctx(2, 1);
  for (const Params& c : {Params{2, 1, 13, 3, 8, 21}, Params{2, 2, 13, 6, 4, 1365}, Params{3, 1, 37, 4, 24, 85},
                          Params{3, 2, 37, 10, 12, 349525}, Params{4, 1, 181, 5, 128, 341}}) {
    CAPTURE(c.n);
    CAPTURE(c.d);
    const auto cone = make_standard_cone(ctx, c.n);
    const auto code = build_code(ctx, cone, c.d);
    CHECK(code.length() == c.m);
    CHECK(code.generator.rows() == binomial(c.n + c.d, c.d));
    CHECK(projective_count(ctx.q2(), c.k) == c.classes);
    MinDistanceOptions opt;
    opt.threads = 2;
    const auto got = min_distance(ctx, code, MinDistanceMode::ExhaustiveMessages, opt);
    CHECK(got.m == c.m);
    CHECK(got.k == c.k);
    CHECK(got.dmin == c.dmin);
    CHECK(got.dmin_status == DminStatus::Exact);
    CHECK(got.dmin + got.k <= got.m + 1);
    const auto t = theoretical_parameters(static_cast<int>(c.n), static_cast<int>(c.d), 2);
    CHECK(t.m == c.m);
    CHECK(t.k == c.k);
    CHECK(t.dmin == c.dmin);
  }
}

TEST_CASE("forms mode agrees with messages mode") {
  const FieldCtx ctx(2, 1);
  for (auto [n, d] : {std::pair{2u, 1u}, {2u, 2u}, {3u, 1u}}) {
    const auto code = build_code(ctx, make_standard_cone(ctx, n), d);
    const auto a = min_distance(ctx, code, MinDistanceMode::ExhaustiveMessages);
    const auto b = min_distance(ctx, code, MinDistanceMode::ExhaustiveForms);
    CHECK(a.dmin == b.dmin);
    CHECK(a.k == b.k);
  }
}

TEST_CASE("weight distribution") {
  const FieldCtx ctx(2, 1);
  const auto code = build_code(ctx, make_standard_cone(ctx, 2), 2);
  const auto dist = weight_distribution(ctx, code, kDefaultMessageBudget, 3);
  std::uint64_t total = 0;
  for (const auto& [w, c] : dist) total += c;
  CHECK(total == projective_count(4, 6));
  CHECK(dist.begin()->first == 4);
  CHECK(dist.rbegin()->first <= 13);
  CHECK(dist.count(0) == 0);
}

TEST_CASE("sampled codewords respect the minimum distance") {
  const FieldCtx ctx(3, 1);
  const auto code = build_code(ctx, make_standard_cone(ctx, 3), 2);
  const auto t = theoretical_parameters(3, 2, 3);
  REQUIRE(t.dmin.has_value());
  std::mt19937_64 rng(23);
  std::uniform_int_distribution<std::uint32_t> pick(0, 8);
  for (int trial = 0; trial < 300; ++trial) {
    HomogeneousForm f(monomial_basis(3, 2));
    for (auto& c : f.coeffs()) c = FieldElement{pick(rng)};
    const auto w = weight(codeword_of(ctx, code, f));
    if (w > 0) CHECK(w >= *t.dmin);
  }
}

TEST_CASE("witness mode gives the exact minimum distance on extremal forms") {
  const FieldCtx ctx(3, 1);
  const auto code = build_code(ctx, make_standard_cone(ctx, 3), 3);
  MinDistanceOptions opt;
  opt.witnesses.push_back(construct_extremal(ctx, 3, 3).form);
  opt.witnesses.push_back(HomogeneousForm(monomial_basis(3, 3)));
  const auto got = min_distance(ctx, code, MinDistanceMode::WitnessOnly, opt);
  CHECK(got.dmin_status == DminStatus::WitnessUpperBoundOnly);
  CHECK(got.dmin == 144);
  CHECK(got.dmin == theoretical_parameters(3, 3, 3).dmin);
  CHECK(got.k == 20);
  opt.witnesses.erase(opt.witnesses.begin());
  CHECK_THROWS_AS(min_distance(ctx, code, MinDistanceMode::WitnessOnly, opt), std::invalid_argument);
}

TEST_CASE("budget refusal") {
  const FieldCtx ctx(3, 1);
  const auto code = build_code(ctx, make_standard_cone(ctx, 3), 2);
  MinDistanceOptions opt;
  opt.budget = 1000;
  CHECK_THROWS_AS(min_distance(ctx, code, MinDistanceMode::ExhaustiveMessages, opt), BudgetExceeded);
  CHECK_THROWS_AS(min_distance(ctx, code, MinDistanceMode::ExhaustiveForms, opt), BudgetExceeded);
  CHECK_THROWS_AS(weight_distribution(ctx, code, 1000), BudgetExceeded);
  CHECK_THROWS_AS(build_code(ctx, make_standard_cone(ctx, 3), 2, 100), BudgetExceeded);
  try {
    min_distance(ctx, code, MinDistanceMode::ExhaustiveMessages, opt);
  } catch (const BudgetExceeded& e) {
    CHECK(e.budget() == 1000);
    CHECK(e.required() == projective_count(9, 10));
  }
}

TEST_CASE("theoretical parameters") {
  const auto a = theoretical_parameters(3, 3, 3);
  CHECK(a.m == 253);
  CHECK(a.k == 20);
  CHECK(a.dmin == 144);
  CHECK(theoretical_parameters(4, 2, 2).dmin == 128 - 8 * 5);
  CHECK(theoretical_parameters(2, 3, 3).dmin == 27 - 2 * 9);
  const auto five = theoretical_parameters(5, 2, 2);
  CHECK(five.kind == DminKind::LowerBound);
  CHECK(five.m == 661);
  CHECK(five.dmin == 304);
  const auto unknown = theoretical_parameters(5, 3, 3);
  CHECK(unknown.kind == DminKind::Unknown);
  CHECK_FALSE(unknown.dmin.has_value());
  const auto conj = theoretical_parameters(5, 3, 3, true);
  CHECK(conj.kind == DminKind::LowerBound);
  CHECK(conj.provenance == Provenance::Conjecture);
  CHECK(conj.m == 21961);
  CHECK(conj.dmin == 13689);
  CHECK_THROWS_AS(theoretical_parameters(3, 3, 2), std::invalid_argument);
  CHECK_THROWS_AS(theoretical_parameters(1, 1, 2), std::invalid_argument);
  CHECK_THROWS_AS(theoretical_parameters(3, 0, 2), std::invalid_argument);
}

TEST_CASE("generator matrix round trip") {
  const FieldCtx ctx(3, 1);
  const auto code = build_code(ctx, make_standard_cone(ctx, 2), 2);
  std::stringstream io;
  write_generator_matrix(io, ctx, code);
  const auto g = read_generator_matrix(io);
  CHECK(g.n == 2);
  CHECK(g.d == 2);
  CHECK(g.p == 3);
  CHECK(g.e == 1);
  CHECK(g.modulus == ctx.modulus());
  CHECK(g.rows.cols() == code.length());
  CHECK(g.rows.rows() == code_dimension(ctx, code));
  CHECK(rank(ctx, g.rows) == g.rows.rows());
  Matrix both(g.rows.rows() + code.generator.rows(), code.length());
  for (std::size_t r = 0; r < g.rows.rows(); ++r)
    for (std::size_t c = 0; c < code.length(); ++c) both(r, c) = g.rows(r, c);
  for (std::size_t r = 0; r < code.generator.rows(); ++r)
    for (std::size_t c = 0; c < code.length(); ++c) both(g.rows.rows() + r, c) = code.generator(r, c);
  CHECK(rank(ctx, both) == g.rows.rows());
  std::istringstream bad("2 2 3 1 1,0,1 5 2\n1 2 3");
  CHECK_THROWS(read_generator_matrix(bad));
}

TEST_CASE("codeword errors") {
  const FieldCtx ctx(2, 1);
  const auto code = build_code(ctx, make_standard_cone(ctx, 2), 1);
  CHECK_THROWS_AS(codeword_of(ctx, code, HomogeneousForm(monomial_basis(2, 2))), std::invalid_argument);
  CHECK_THROWS_AS(build_code(ctx, make_standard_cone(ctx, 2), 0), std::invalid_argument);
}
