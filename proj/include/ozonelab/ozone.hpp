#pragma once

// Ozone groups: a lower bound generated by eta-maps of normal elements and an
// upper bound of candidate maps fixing the computed center, plus skew
// recognition and filtered skew realization checks.

#include "ozonelab/automorphism.hpp"
#include "ozonelab/central.hpp"

#include <optional>
#include <string>
#include <vector>

namespace ozonelab::ozone {

/// Largest number of diagonal tuples the upper-bound search will enumerate.
inline constexpr double kMaxDiagonalCandidates = 1e7;

struct Witness {
    FreeElt element;
    int degree = 0;
    GradedAutomorphism eta;
};

struct OzoneReport {
    FiniteGroupTable lower;
    FiniteGroupTable upper;
    bool exact = false;
    int conductor = 1;
    int max_degree = 0;
    std::vector<std::string> candidate_names;
    std::vector<Witness> witnesses;
    std::optional<long> rank;

    /// Invariant factors of the exact group (or of the lower bound when not exact).
    std::vector<long> factors() const;
    std::size_t order() const { return exact ? upper.order() : lower.order(); }
};

/// Conductor used when none is given. When the letter counts of the words in
/// Z_{<=D} span a full-rank lattice L, every diagonal map fixing Z has entries
/// in mu_e for e the exponent of Z^n / L, and the result is 2 * lcm(session
/// conductor, e); otherwise 2 * lcm(session conductor, 2).
int default_conductor(const Algebra& A, const central::GradedSubspace& Z, int D);

/// All diagonal maps with entries in the N-th roots of unity that preserve the
/// relations and fix Z_d pointwise for d <= D. Throws SearchSpaceTooLarge.
FiniteGroupTable diagonal_upper_bound(const Algebra& A, const central::GradedSubspace& Z, int N, int D);

/// True when g fixes every vector of Z_d, d <= Z.max_degree().
bool fixes_center(const Algebra& A, const GradedAutomorphism& g, const central::GradedSubspace& Z);

/// Lower and upper bounds for Oz(A) relative to diagonal maps over mu_N and the
/// supplied candidates. Throws ContradictsDivisibility if the lower bound
/// outgrows the supplied rank.
OzoneReport ozone_sandwich(const Algebra& A, const central::GradedSubspace& Z,
                           const std::vector<GradedAutomorphism>& candidates, int N, int D,
                           std::optional<long> rank = std::nullopt);

/// |Oz| divides rank (advisory when the report is not exact).
bool divisibility_check(const OzoneReport& report, long rank);

struct SkewParameters {
    /// p[i][j] with t_j t_i = p[i][j] t_i t_j.
    std::vector<std::vector<CycNum>> p;
    std::vector<GradedAutomorphism> etas;
    /// dims of A agree with 1/(1-t)^n and ordered monomials in the t_i span A_d, d <= max_degree
    bool pbw = false;
    int max_degree = 0;
};

/// Recognizes A as a skew polynomial ring in the given degree-one elements.
/// Throws NotDegreeOneGenerated or NotSkew.
SkewParameters skew_recognition(const Algebra& A, const std::vector<FreeElt>& basis, int max_degree);

struct RealizationPair {
    int i = 0;
    int j = 0;
    bool ok = false;
};

struct RealizationResult {
    bool ok = false;
    std::vector<RealizationPair> pairs;
};

/// For every i < j, t_j t_i - p[i][j] t_i t_j lies in the span of words in t_1..t_{j-1}.
RealizationResult filtered_realization_check(const Algebra& A, const std::vector<FreeElt>& t,
                                             const std::vector<std::vector<CycNum>>& p);

}  // namespace ozonelab::ozone
