#include <doctest.h>

#include "hermcode/bounds.hpp"
#include "hermcode/json_io.hpp"
#include "oracles.hpp"

using namespace hermcode;

TEST_CASE("bound formulas") {
  CHECK(serre_bound(2, 1, 4) == 5);
  CHECK(serre_bound(2, 3, 4) == 13);
  CHECK(serre_bound(3, 2, 4) == 37);
  CHECK(sorensen_max(1, 2) == 13);
  CHECK(sorensen_max(2, 2) == 23);
  CHECK(sorensen_max(1, 3) == 37);
  CHECK(known_M(2, 2, 3).value == 8);
  CHECK(known_M(3, 2, 2).value == 23);
  CHECK(known_M(4, 1, 2).value == 45);
  CHECK(known_M(4, 2, 2).value == 81);
  CHECK(known_M(5, 1, 2).value == 181);
  CHECK(known_M(4, 3, 7).known());
  CHECK_FALSE(known_M(4, 3, 5).known());
  CHECK_FALSE(known_M(5, 4, 4).known());
  CHECK(n2_bound(2, 3) == 19);
  CHECK(off_hyperplane_margin(3, 2, 2) == 12);
  CHECK(vertex_missing_bound(3, 2, 2) == 18);
  CHECK_THROWS_AS(off_hyperplane_margin(2, 2, 2), std::invalid_argument);
  CHECK_THROWS_AS(vertex_missing_bound(2, 1, 2), std::invalid_argument);
  CHECK_THROWS_AS(sorensen_max(3, 2), std::invalid_argument);
  CHECK_THROWS_AS(known_M(1, 1, 2), std::invalid_argument);
}

TEST_CASE("rank-n cone bound") {
  CHECK(rank_n_bound(3, 1, 2).value == 13);
  CHECK(rank_n_bound(3, 2, 2).value == 25);
  CHECK(rank_n_bound(4, 1, 2).value == 53);
  CHECK(rank_n_bound(4, 2, 2).value == 93);
  CHECK(rank_n_bound(5, 2, 2).value == 357);
  CHECK(rank_n_bound(4, 2, 2).provenance == Provenance::Theorem);
  CHECK_FALSE(rank_n_bound(5, 3, 3).known());
  const auto c = rank_n_bound(5, 3, 3, true);
  CHECK(c.value == 8272);
  CHECK(c.provenance == Provenance::Conjecture);
  CHECK_FALSE(rank_n_bound(6, 4, 4, false).known());
  CHECK_THROWS_AS(rank_n_bound(2, 1, 2), std::invalid_argument);
  for (int n = 3; n <= 4; ++n)
    for (int d = 1; d < 3; ++d) CHECK(*rank_n_bound(n, d, 3).value < *rank_n_bound(n, d + 1, 3).value);
}

TEST_CASE("conjecture agrees with proven values") {
  for (std::int64_t q : {2, 3, 4, 5})
    for (int d = 1; d <= std::min<std::int64_t>(q, 3); ++d) {
      CHECK(conjectured_M(3, d, q).value == sorensen_max(d, q));
      for (int n = 4; n <= 6; ++n)
        if (known_M(n, d, q).known()) CHECK(conjectured_M(n, d, q).value == known_M(n, d, q).value);
    }
}

TEST_CASE("oracle agrees with naive evaluation") {
  const FieldCtx ctx(2, 1);
  struct Case {
    HermitianVariety v;
    std::size_t d;
  };
  for (const auto& c : {Case{make_standard_cone(ctx, 2), 1}, Case{make_standard_cone(ctx, 2), 2},
                        Case{make_standard_cone(ctx, 3), 1}, Case{make_standard_nondegenerate(ctx, 2), 2}}) {
    const auto fast = bruteforce_max_intersection(ctx, c.v, c.d);
    const auto slow = oracle::naive_max(ctx, c.v.points(), c.v.n(), c.d);
    CHECK(fast.max_count == slow.max);
    CHECK(fast.n_maximizers == slow.maximizers);
    CHECK(fast.maximizers.size() == fast.n_maximizers);
    for (auto idx : fast.maximizers)
      CHECK(intersection_count(ctx, form_at_index(ctx, c.v.n(), c.d, idx), c.v.points()) == fast.max_count);
  }
}

TEST_CASE("oracle maxima on small cones") {
  const FieldCtx ctx(2, 1);
  const auto c2 = make_standard_cone(ctx, 2), c3 = make_standard_cone(ctx, 3);
  CHECK(bruteforce_max_intersection(ctx, c2, 1).max_count == 5);
  CHECK(bruteforce_max_intersection(ctx, c2, 2).max_count == 9);
  const auto r = bruteforce_max_intersection(ctx, c3, 1);
  CHECK(r.max_count == 13);
  std::size_t secants = 0;
  const auto u2 = make_standard_nondegenerate(ctx, 2);
  for (const auto& l : enumerate_hyperplanes(ctx, 2)) {
    std::size_t on = 0;
    for (const auto& x : u2.points()) on += incidence(ctx, x, l);
    secants += on == 3;
  }
  CHECK(r.n_maximizers == secants);
}

TEST_CASE("sharded oracle and merge") {
  const FieldCtx ctx(2, 1);
  const auto cone = make_standard_cone(ctx, 2);
  const auto whole = bruteforce_max_intersection(ctx, cone, 2);
  OracleOptions capped;
  capped.threads = 3;
  std::vector<OracleResult> parts;
  for (std::uint64_t i = 0; i < 5; ++i) parts.push_back(bruteforce_max_intersection(ctx, cone, 2, {i, 5}, capped));
  const auto merged = merge_oracle_results(parts);
  CHECK(oracle_to_json(merged) == oracle_to_json(whole));
  std::vector<OracleResult> reversed(parts.rbegin(), parts.rend());
  CHECK(oracle_to_json(merge_oracle_results(reversed)) == oracle_to_json(whole));
  const std::vector<OracleResult> left{parts[0], parts[1]}, right{parts[2], parts[3], parts[4]};
  const std::vector<OracleResult> nested{merge_oracle_results(left), merge_oracle_results(right)};
  CHECK(oracle_to_json(merge_oracle_results(nested)) == oracle_to_json(whole));
  CHECK(oracle_from_json(oracle_to_json(whole)).maximizers == whole.maximizers);

  const std::vector<OracleResult> gap{parts[0], parts[2]};
  CHECK_THROWS_AS(merge_oracle_results(gap), std::invalid_argument);
  auto other = parts[1];
  other.d = 1;
  const std::vector<OracleResult> mixed{parts[0], other};
  CHECK_THROWS_AS(merge_oracle_results(mixed), std::invalid_argument);
  CHECK_THROWS_AS(merge_oracle_results(std::span<const OracleResult>{}), std::invalid_argument);

  OracleOptions small;
  small.max_retained = 1;
  const auto one = bruteforce_max_intersection(ctx, cone, 2, {}, small);
  CHECK(one.maximizers.size() == 1);
  CHECK(one.n_maximizers == whole.n_maximizers);
  OracleOptions tight;
  tight.budget = 100;
  CHECK_THROWS_AS(bruteforce_max_intersection(ctx, cone, 2, {}, tight), BudgetExceeded);
}

TEST_CASE("extremal constructions attain the bounds") {
  for (auto [p, e] : {std::pair{2u, 1u}, {3u, 1u}}) {
    const FieldCtx ctx(p, e);
    const std::int64_t q = ctx.q();
    for (int n = 2; n <= 4; ++n)
      for (int d = 1; d <= q; ++d) {
        const auto w = construct_extremal(ctx, n, d);
        const auto cone = make_standard_cone(ctx, static_cast<std::size_t>(n));
        const auto expected = n == 2 ? n2_bound(d, q) : *rank_n_bound(n, d, q).value;
        CHECK(w.predicted_count == expected);
        CHECK(static_cast<std::int64_t>(intersection_count(ctx, w.form, cone.points())) == expected);
        CHECK(w.factors.size() == static_cast<std::size_t>(d));
        const auto lines = check_union_of_cone_lines(ctx, cone, w.form);
        CHECK(lines.is_union);
        CHECK(static_cast<std::int64_t>(lines.lines) == (expected - 1) / (q * q));
        CHECK(check_cone_with_vertex(ctx, w.form, *cone.vertex()));
      }
  }
  const FieldCtx ctx(2, 1);
  CHECK_THROWS_AS(construct_extremal(ctx, 5, 1), std::invalid_argument);
  CHECK_THROWS_AS(construct_extremal(ctx, 3, 3), std::invalid_argument);
}

TEST_CASE("Serre extremal forms") {
  const FieldCtx ctx(2, 1);
  for (int n = 2; n <= 3; ++n)
    for (int d = 1; d <= 3; ++d) {
      const auto w = construct_serre_extremal(ctx, n, d);
      CHECK(static_cast<std::int64_t>(intersection_count(ctx, w.form, enumerate_points(ctx, static_cast<std::size_t>(n)))) ==
            serre_bound(n, d, 4));
    }
}

TEST_CASE("structural checkers") {
  const FieldCtx ctx(2, 1);
  const auto cone = make_standard_cone(ctx, 3);
  const auto avoid = hyperplane_from(ctx, {FieldElement{0}, FieldElement{0}, FieldElement{0}, FieldElement{1}});
  const std::vector<Hyperplane> one{avoid};
  const auto f = product_of_hyperplanes(ctx, one);
  CHECK(intersection_count(ctx, f, cone.points()) == 9);
  CHECK_FALSE(check_union_of_cone_lines(ctx, cone, f).is_union);
  CHECK_FALSE(check_cone_with_vertex(ctx, f, *cone.vertex()));
  const auto through = hyperplane_from(ctx, {FieldElement{1}, FieldElement{0}, FieldElement{0}, FieldElement{0}});
  const std::vector<Hyperplane> two{through};
  const auto g = product_of_hyperplanes(ctx, two);
  CHECK(check_cone_with_vertex(ctx, g, *cone.vertex()));
  const auto lines = check_union_of_cone_lines(ctx, cone, g);
  CHECK(lines.is_union);
  CHECK(lines.lines == 3);
  CHECK_THROWS_AS(check_union_of_cone_lines(ctx, make_standard_nondegenerate(ctx, 3), g), std::invalid_argument);
}

TEST_CASE("form index matches the enumeration order") {
  const FieldCtx ctx(3, 1);
  enumerate_forms_projective(ctx, 1, 2, {}, [&](std::uint64_t i, const HomogeneousForm& f) {
    CHECK(form_at_index(ctx, 1, 2, i) == f);
  });
}

TEST_CASE("json round trips") {
  const FieldCtx ctx(2, 2);
  CHECK(field_from_json(field_to_json(ctx)) == ctx);
  auto bad = field_to_json(ctx);
  bad["modulus"] = {1, 0, 1, 0, 1};
  CHECK_THROWS(field_from_json(bad));
  const auto f = form_at_index(ctx, 2, 2, 1234);
  CHECK(form_from_json(form_to_json(f)) == f);
  const auto b = bound_to_json(rank_n_bound(5, 3, 3, true));
  CHECK(b["provenance"] == "Conjecture");
}
