// Oracle checks on transform outputs, saturation, and the iteration driver.
#pragma once

#include <gmpxx.h>

#include <string>
#include <vector>

#include "cstar/hilbert.hpp"
#include "cstar/report.hpp"
#include "cstar/star.hpp"

namespace cstar {

/// Fixed names, in report order.
inline const std::vector<std::string>& star_check_names() {
  static const std::vector<std::string> names{
      "composition_zero", "homogeneity",   "acyclicity",         "colon_equality",
      "top_minimality",   "rank_accounting", "colon_length_count"};
  return names;
}

/// Extra check present only when the top module vanished.
inline constexpr const char* kPositiveDepthCheck = "positive_depth";

/// dim_k (M : Q)/M against rank F_n * dim_k R/Q, both from Hilbert series.
CheckResult colon_length_check(const SubmoduleGB& m, const SopData& sop,
                               std::size_t rank_fn);

/// F_0 / m' has positive depth: m' : (irrelevant ideal) = m'.
bool depth_positive_check(const SubmoduleGB& m);

VerificationReport verify_star(const FreeComplex& f, const SopData& sop,
                               const StarComplex& star);

struct Saturation {
  SubmoduleGB module;
  std::size_t iterations = 0;  // colon steps that enlarged the module
};
/// Iterates m <- m : j until stable. Throws IterationLimit after max_iter
/// enlarging steps without reaching a fixpoint.
Saturation saturate(const SubmoduleGB& m, const std::vector<Polynomial>& j,
                    std::size_t max_iter);

struct DriverRound {
  StarComplex star;
  VerificationReport report;
  /// Im ∗φ_1 equals the k-fold colon of the original M by Q.
  bool oracle_match = false;
};

struct DriverResult {
  std::vector<DriverRound> rounds;
  std::string stop_reason;  // empty for rounds = 0
};

/// Applies the transform up to `rounds` times. A failed precondition in the
/// first round throws PreconditionFailed; later ones end the run.
DriverResult star_iteration_driver(const FreeComplex& f, const SopData& sop,
                                   std::size_t rounds);

}  // namespace cstar
