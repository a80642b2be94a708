#pragma once

// Graded automorphisms given by their images on generators, and finite
// groups of them.

#include "ozonelab/ncalg.hpp"

#include <string>
#include <unordered_map>
#include <vector>

namespace ozonelab::ozone {

using cyclo::CycNum;
using nc::Algebra;
using nc::FreeElt;

class GradedAutomorphism {
public:
    enum class Kind { Diagonal, PermutationDiagonal, Linear };

    GradedAutomorphism() = default;
    static GradedAutomorphism identity(const Algebra& A);
    static GradedAutomorphism diagonal(const Algebra& A, const std::vector<CycNum>& scalars);
    /// Normalizes and classifies the images; performs no verification.
    static GradedAutomorphism from_images(const Algebra& A, std::vector<FreeElt> images);

    Kind kind() const noexcept { return kind_; }
    const std::vector<FreeElt>& images() const noexcept { return images_; }
    /// For the diagonal and permutation kinds: generator i maps to scalars()[i] * x_{permutation()[i]}.
    const std::vector<CycNum>& scalars() const noexcept { return scalars_; }
    const std::vector<int>& permutation() const noexcept { return permutation_; }
    bool is_identity() const noexcept { return identity_; }
    bool verified() const noexcept { return verified_; }
    const std::string& key() const noexcept { return key_; }

    std::string name;

    FreeElt apply(const Algebra& A, const FreeElt& f) const;
    /// Images of the basis words of A_d as coordinate columns.
    std::vector<la::SparseVec> matrix_columns(const Algebra& A, int d) const;
    CycNum trace(const Algebra& A, int d) const;
    /// this o inner
    GradedAutomorphism compose(const Algebra& A, const GradedAutomorphism& inner) const;

    std::string to_string(const Algebra& A) const;

    friend bool operator==(const GradedAutomorphism& a, const GradedAutomorphism& b) { return a.key_ == b.key_; }
    friend bool operator!=(const GradedAutomorphism& a, const GradedAutomorphism& b) { return a.key_ != b.key_; }

private:
    friend GradedAutomorphism verify_automorphism(const Algebra&, std::vector<FreeElt>, const std::string&);
    void finish(const Algebra& A);
    FreeElt apply_word(const Algebra& A, const nc::Word& w) const;

    Kind kind_ = Kind::Linear;
    std::vector<FreeElt> images_;
    std::vector<CycNum> scalars_;
    std::vector<int> permutation_;
    bool identity_ = false;
    bool verified_ = false;
    std::string key_;
};

/// Checks that the images define a graded algebra automorphism: homogeneous
/// of the generator weights, every relation maps to zero, and bijective on
/// each generator degree. Throws NotAutomorphism naming the first failure.
GradedAutomorphism verify_automorphism(const Algebra& A, std::vector<FreeElt> images, const std::string& name = "");
/// Parses images given as expressions, one per generator name.
GradedAutomorphism verify_automorphism(const Algebra& A, const std::vector<std::pair<std::string, std::string>>& images,
                                       const std::string& name = "");

class FiniteGroupTable {
public:
    static constexpr std::size_t kDefaultCap = 20000;

    FiniteGroupTable() = default;
    /// Group generated by the given automorphisms. Throws BudgetExceeded past the cap.
    static FiniteGroupTable closure(const Algebra& A, const std::vector<GradedAutomorphism>& generators,
                                    std::size_t cap = kDefaultCap);

    std::size_t order() const noexcept { return elements_.size(); }
    const std::vector<GradedAutomorphism>& elements() const noexcept { return elements_; }
    const GradedAutomorphism& element(std::size_t i) const { return elements_.at(i); }
    std::size_t identity() const noexcept { return 0; }
    std::size_t multiply(std::size_t a, std::size_t b) const { return table_[a * elements_.size() + b]; }
    std::size_t power(std::size_t a, long k) const;
    std::size_t element_order(std::size_t a) const;
    std::optional<std::size_t> find(const GradedAutomorphism& g) const;

    bool is_abelian() const;
    /// Invariant factors in descending order; empty for the trivial group.
    /// Throws NonAbelianGroup when the group is not abelian.
    std::vector<long> invariant_factors() const;
    bool contains(const FiniteGroupTable& other) const;
    bool same_elements(const FiniteGroupTable& other) const;

private:
    std::vector<GradedAutomorphism> elements_;
    std::vector<std::size_t> table_;
    std::unordered_map<std::string, std::size_t> index_;
};

std::string factors_string(const std::vector<long>& factors);

}  // namespace ozonelab::ozone
