#pragma once

// Functional codes C_d(X): evaluations of degree-d forms at the rational
// points of a variety, with exact parameters computed by enumeration.

#include <cstdint>
#include <iosfwd>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "hermcode/bounds.hpp"
#include "hermcode/errors.hpp"
#include "hermcode/forms.hpp"
#include "hermcode/hermitian.hpp"
#include "hermcode/linalg.hpp"

namespace hermcode {

/// Generator matrix with one row per degree-d monomial (graded-lex order) and
/// one column per rational point of the variety (canonical point order).
struct FunctionalCode {
  std::size_t n = 0, d = 0;
  FieldCtx field;
  Matrix generator;
  std::vector<ProjPoint> points;

  std::size_t length() const noexcept { return generator.cols(); }
};

FunctionalCode build_code(const FieldCtx& ctx, const HermitianVariety& variety, std::size_t d,
                          std::uint64_t budget = kDefaultEvaluationBudget);
/// Same construction over an arbitrary point list in Pⁿ.
FunctionalCode build_code(const FieldCtx& ctx, std::size_t n, std::span<const ProjPoint> points, std::size_t d,
                          std::uint64_t budget = kDefaultEvaluationBudget);

std::size_t code_dimension(const FieldCtx& ctx, const FunctionalCode& code);

enum class DminStatus { Exact, WitnessUpperBoundOnly };
enum class MinDistanceMode { ExhaustiveMessages, ExhaustiveForms, WitnessOnly };

struct CodeParameters {
  std::uint64_t m = 0, k = 0, dmin = 0;
  DminStatus dmin_status = DminStatus::Exact;
};

struct MinDistanceOptions {
  /// Cap on projective message classes (exhaustive_messages) or forms (exhaustive_forms).
  std::uint64_t budget = kDefaultMessageBudget;
  /// Forms evaluated in WitnessOnly mode.
  std::vector<HomogeneousForm> witnesses;
  /// Worker threads for the enumeration; 0 picks the hardware default.
  std::size_t threads = 1;
};

/// Throws BudgetExceeded when an exhaustive mode would exceed the budget and
/// std::invalid_argument when WitnessOnly has no nonzero witness codeword.
CodeParameters min_distance(const FieldCtx& ctx, const FunctionalCode& code, MinDistanceMode mode,
                            const MinDistanceOptions& options = {});

/// Weight → number of nonzero codewords up to scalars.
std::map<std::uint64_t, std::uint64_t> weight_distribution(const FieldCtx& ctx, const FunctionalCode& code,
                                                           std::uint64_t budget = kDefaultMessageBudget,
                                                           std::size_t threads = 1);

/// The codeword of a form: its values at the code's points.
std::vector<FieldElement> codeword_of(const FieldCtx& ctx, const FunctionalCode& code, const HomogeneousForm& f);
std::uint64_t weight(std::span<const FieldElement> word) noexcept;

enum class DminKind { Exact, LowerBound, Unknown };

struct TheoreticalParameters {
  std::uint64_t m = 0, k = 0;
  std::optional<std::uint64_t> dmin;  // empty when Unknown
  DminKind kind = DminKind::Exact;
  Provenance provenance = Provenance::Theorem;
};

/// Closed-form parameters of C_d on the rank-n cone over GF(q²), d ≤ q.
/// Exact for n ∈ {2, 3, 4}; for n ≥ 5 the minimum distance is the lower bound
/// m − (intersection bound), Unknown when that bound is not known.
/// Throws std::invalid_argument for d > q, d < 1 or n < 2.
TheoreticalParameters theoretical_parameters(int n, int d, std::int64_t q, bool assume_conjecture = false);

/// Header `n d p e modulus m k` (modulus as comma-separated coefficients, lowest
/// first), then k rows of m element codes. Rows form a basis of the code.
void write_generator_matrix(std::ostream& out, const FieldCtx& ctx, const FunctionalCode& code);

struct GeneratorFile {
  std::size_t n = 0, d = 0;
  std::uint32_t p = 0, e = 0;
  std::vector<std::uint32_t> modulus;
  Matrix rows;
};
GeneratorFile read_generator_matrix(std::istream& in);

const char* to_string(DminStatus s) noexcept;
const char* to_string(DminKind k) noexcept;

}  // namespace hermcode
