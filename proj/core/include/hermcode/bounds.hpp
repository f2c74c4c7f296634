#pragma once

// Intersection bounds between hypersurfaces of degree d ≤ q and Hermitian
// varieties, constructions attaining them, structural checks on maximizers,
// and the exhaustive maximization oracle.

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "hermcode/errors.hpp"
#include "hermcode/forms.hpp"
#include "hermcode/hermitian.hpp"

namespace hermcode {

enum class Provenance { Theorem, Conjecture, BruteForce };

struct BoundValue {
  std::optional<std::int64_t> value;  // empty when the value is not known
  Provenance provenance = Provenance::Theorem;
  std::string source;

  bool known() const noexcept { return value.has_value(); }
};

/// Serre's inequality: d·s^{n-1} + π_{n-2}(s) for a degree-d hypersurface in Pⁿ(GF(s)).
std::int64_t serre_bound(int n, int d, std::int64_t s);

/// Sørensen's bound d(q³ + q² − q) + q + 1 on surfaces meeting the Hermitian surface.
std::int64_t sorensen_max(int d, std::int64_t q);

/// Maximum of |U_n ∩ V(G)| over degree-d hypersurfaces where it is established;
/// Unknown otherwise (n ≥ 4 with d ≥ 4, or d = 3 with q < 7).
BoundValue known_M(int n, int d, std::int64_t q);

/// The conjectured closed form of the same maximum, always tagged Conjecture.
BoundValue conjectured_M(int n, int d, std::int64_t q);

/// max{|U_{n-1}| + (d−1)(q+1)q^{2n−4}, 1 + q²·M_{n−1}(d)} on the rank-n cone.
/// With assume_conjecture an unknown M_{n−1}(d) is replaced by its conjectured value.
BoundValue rank_n_bound(int n, int d, std::int64_t q, bool assume_conjecture = false);

/// dq² + 1, the maximum on the rank-2 cone in the plane.
std::int64_t n2_bound(int d, std::int64_t q);

/// (d−1)(q+1)q^{2n−4}: points of the cone off a vertex-avoiding hyperplane contained in V(F), n ≥ 3.
std::int64_t off_hyperplane_margin(int n, int d, std::int64_t q);

/// d·|U_{n−1}|: cone points on V(F) when the vertex is not on V(F), n ≥ 3.
std::int64_t vertex_missing_bound(int n, int d, std::int64_t q);

struct ExtremalWitness {
  HomogeneousForm form;
  std::int64_t predicted_count = 0;
  std::string description;
  std::vector<Hyperplane> factors;  // linear factors of the form
};

/// A degree-d form on the rank-n cone (n ∈ {2, 3, 4}) meeting it in exactly the
/// maximal number of rational points. Throws std::invalid_argument for d > q or
/// n outside {2, 3, 4}; std::logic_error if the configuration cannot be found.
ExtremalWitness construct_extremal(const FieldCtx& ctx, int n, int d);

/// d hyperplanes of Pⁿ through the codimension-2 flat x_0 = x_1 = 0; attains serre_bound.
ExtremalWitness construct_serre_extremal(const FieldCtx& ctx, int n, int d);

struct OracleOptions {
  std::size_t max_retained = 10'000;
  std::size_t threads = 1;  // 0 picks the hardware default
  std::uint64_t budget = kDefaultEvaluationBudget;  // forms × points in the shard
};

struct OracleResult {
  std::size_t n = 0, d = 0;
  std::uint64_t points = 0;
  std::uint64_t total_forms = 0;
  IndexRange range;
  std::uint64_t max_count = 0;
  std::uint64_t n_maximizers = 0;
  std::vector<std::uint64_t> maximizers;  // projective form indices, ascending, capped
};

/// Exact maximum of |V(F) ∩ points| over all nonzero degree-d forms up to scalars
/// whose projective index lies in the shard, with every maximizer (capped).
OracleResult bruteforce_max_intersection(const FieldCtx& ctx, std::span<const ProjPoint> points, std::size_t n,
                                         std::size_t d, Shard shard = {}, const OracleOptions& options = {});
OracleResult bruteforce_max_intersection(const FieldCtx& ctx, const HermitianVariety& variety, std::size_t d,
                                         Shard shard = {}, const OracleOptions& options = {});

/// Combines partial results over adjacent ranges. Throws std::invalid_argument if the
/// parts do not tile a contiguous range or disagree on the problem.
OracleResult merge_oracle_results(std::span<const OracleResult> parts, std::size_t max_retained = 10'000);

HomogeneousForm form_at_index(const FieldCtx& ctx, std::size_t n, std::size_t d, std::uint64_t index);

struct LineUnionCheck {
  bool is_union = false;
  std::size_t lines = 0;
};

/// Whether V(F) ∩ cone is a nonempty union of full generator lines through the vertex.
LineUnionCheck check_union_of_cone_lines(const FieldCtx& ctx, const HermitianVariety& cone, const HomogeneousForm& f);

/// Whether the rational zero set of f in Pⁿ is a union of full lines through the vertex.
bool check_cone_with_vertex(const FieldCtx& ctx, const HomogeneousForm& f, const ProjPoint& vertex);

const char* to_string(Provenance p) noexcept;

}  // namespace hermcode
