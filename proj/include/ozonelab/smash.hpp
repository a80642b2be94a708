#pragma once

// Smash products A # kG for finite groups of graded automorphisms.

#include "ozonelab/automorphism.hpp"
#include "ozonelab/central.hpp"
#include "ozonelab/hilbert.hpp"

#include <map>
#include <mutex>
#include <optional>
#include <string>
#include <vector>

namespace ozonelab::smash {

using cyclo::CycNum;
using nc::Algebra;
using nc::FreeElt;
using ozone::FiniteGroupTable;
using ozone::GradedAutomorphism;

/// Sum of a_g # g, keyed by the group element index in the table.
struct SmashElt {
    std::map<std::size_t, FreeElt> components;

    bool is_zero() const;
    friend bool operator==(const SmashElt& a, const SmashElt& b);
};

class SmashAlgebra : public central::GradedRing {
public:
    SmashAlgebra(const Algebra& A, FiniteGroupTable G);

    const Algebra& algebra() const noexcept { return A_; }
    const FiniteGroupTable& group() const noexcept { return G_; }
    std::string element_name(std::size_t g) const;

    SmashElt make(const FreeElt& a, std::size_t g) const;
    SmashElt multiply(const SmashElt& u, const SmashElt& v) const;
    std::string to_string(const SmashElt& u) const;

    /// Coordinates: index g * dim(A_d) + i for a_g's coefficient on the i-th normal word.
    la::SparseVec coords(const SmashElt& u, int d) const;
    SmashElt element(int d, const la::SparseVec& v) const;

    int max_degree() const override { return A_.max_degree(); }
    std::size_t dim(int d) const override { return G_.order() * A_.dim(d); }
    la::SparseVec multiply(int d1, const la::SparseVec& a, int d2, const la::SparseVec& b) const override;
    la::SparseVec one() const override;
    std::string describe(int d, const la::SparseVec& v) const override;

private:
    const std::vector<la::SparseVec>& action(std::size_t g, int d) const;

    const Algebra& A_;
    FiniteGroupTable G_;
    mutable std::map<std::pair<std::size_t, int>, std::vector<la::SparseVec>> actions_;
    mutable std::mutex mutex_;
};

struct SmashCenterPiece {
    la::Subspace space;
    /// false when the constructive route was skipped (nonabelian group)
    bool cross_checked = false;
};

/// Center of A # kG in degree d by the direct commutant, compared with the span
/// of f # g over f in (A^G)_d twisted by g. Throws CrossCheckFailure.
SmashCenterPiece smash_center_degree(const SmashAlgebra& S, int d);
central::GradedSubspace smash_center(const SmashAlgebra& S, int max_degree);

struct SmashPresentation {
    central::GradedSubspace pieces;
    central::SubalgebraGens gens;
    central::RelationSet relations;
};

SmashPresentation smash_center_presentation(const SmashAlgebra& S, int max_degree, const std::string& prefix = "s");

struct RankCheck {
    mpz_class computed;
    mpz_class expected;
    bool ok = false;
};

/// rk of A # kG over its center, |G| * (hA / hZbar)(1), against rank_A * |G|.
/// Throws SeriesUnavailable when hZbar is missing.
RankCheck rank_multiplicativity_check(const hilbert::HilbertSeries& hA, std::size_t group_order,
                                      const std::optional<hilbert::HilbertSeries>& hZbar, long rank_A);

}  // namespace ozonelab::smash
