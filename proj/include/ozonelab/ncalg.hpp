#pragma once

// Finitely presented connected graded algebras: free algebra elements,
// presentations, truncated overlap completion and normal-word bases.

#include "ozonelab/cyclo.hpp"
#include "ozonelab/exactla.hpp"
#include "ozonelab/hilbert.hpp"

#include <map>
#include <mutex>
#include <optional>
#include <string>
#include <unordered_map>
#include <unordered_set>
#include <vector>

namespace ozonelab::nc {

using cyclo::CycNum;

/// A word is a string whose characters are generator indices.
using Word = std::string;

struct Generator {
    std::string name;
    int weight = 1;
};

class FreeElt {
public:
    using Terms = std::map<Word, CycNum>;

    FreeElt() = default;
    static FreeElt word(const Word& w, const CycNum& c = CycNum(1));
    static FreeElt scalar(const CycNum& c) { return word(Word(), c); }
    static FreeElt generator(int index, const CycNum& c = CycNum(1)) { return word(Word(1, static_cast<char>(index)), c); }

    const Terms& terms() const noexcept { return terms_; }
    bool is_zero() const noexcept { return terms_.empty(); }
    std::size_t size() const noexcept { return terms_.size(); }
    CycNum coeff(const Word& w) const;

    void add_term(const Word& w, const CycNum& c);

    FreeElt& operator+=(const FreeElt& rhs);
    FreeElt& operator-=(const FreeElt& rhs);
    FreeElt& operator*=(const CycNum& c);
    friend FreeElt operator+(FreeElt a, const FreeElt& b) { return a += b; }
    friend FreeElt operator-(FreeElt a, const FreeElt& b) { return a -= b; }
    friend FreeElt operator*(FreeElt a, const CycNum& c) { return a *= c; }
    friend FreeElt operator*(const CycNum& c, FreeElt a) { return a *= c; }
    /// Concatenation product in the free algebra.
    friend FreeElt operator*(const FreeElt& a, const FreeElt& b);
    FreeElt operator-() const;

    friend bool operator==(const FreeElt& a, const FreeElt& b);
    friend bool operator!=(const FreeElt& a, const FreeElt& b) { return !(a == b); }

    /// Weighted degree when homogeneous; nullopt for zero; -1 when inhomogeneous.
    std::optional<int> degree(const std::vector<int>& weights) const;
    /// Every coefficient lifted to conductor n.
    FreeElt lifted(int n) const;

    /// Serializes in the relation-expression grammar using generator names.
    std::string to_string(const std::vector<Generator>& gens) const;

private:
    Terms terms_;
};

int word_degree(const Word& w, const std::vector<int>& weights);
std::string word_string(const Word& w, const std::vector<Generator>& gens);

struct AlgebraPresentation {
    std::string label;
    std::vector<Generator> generators;
    std::vector<FreeElt> relations;
    std::optional<hilbert::HilbertSeries> declared_hilbert;
    /// Optional Z^n-grading: generator index -> multidegree vector.
    std::optional<std::vector<std::vector<int>>> multidegree_map;
    /// Named scalar parameters kept for re-serialization.
    std::vector<std::pair<std::string, CycNum>> params;

    std::vector<int> weights() const;
    int max_weight() const;
    std::optional<int> generator_index(const std::string& name) const;
    /// Session conductor: lcm of all relation coefficient conductors.
    int conductor() const;
    /// Throws InvalidPresentation or InconsistentPresentation.
    void validate() const;
};

/// Parses a free-algebra expression such as "x*y - q*y*x - z^2" over the
/// given generators and named parameters. Scalar literals follow the cyclo
/// grammar; an identifier zN that is not otherwise bound is a root of unity.
FreeElt parse_element(std::string_view text, const std::vector<Generator>& gens,
                      const std::map<std::string, CycNum>& params = {});

/// Degree-lexicographic order: weighted degree first, then left-to-right
/// comparison of letters by precedence rank.
class MonomialOrder {
public:
    MonomialOrder() = default;
    /// precedence lists generator indices from smallest to largest.
    MonomialOrder(std::vector<int> weights, const std::vector<int>& precedence);

    bool less(const Word& a, const Word& b) const;
    int degree(const Word& w) const { return word_degree(w, weights_); }
    const std::vector<int>& weights() const noexcept { return weights_; }
    const std::vector<int>& precedence() const noexcept { return precedence_; }

private:
    std::vector<int> weights_;
    std::vector<int> precedence_;
    std::vector<int> rank_;
};

struct Rule {
    Word lhs;
    FreeElt rhs;  // normal words strictly below lhs
};

class RewriteSystem {
public:
    static constexpr std::size_t kDefaultRuleCap = 10000;

    /// Truncated overlap completion up to degree max_degree.
    /// Throws InconsistentPresentation or BudgetExceeded.
    static RewriteSystem complete(const AlgebraPresentation& pres, const std::vector<int>& precedence,
                                  int max_degree, std::size_t rule_cap = kDefaultRuleCap);

    RewriteSystem(const RewriteSystem& other);
    RewriteSystem& operator=(const RewriteSystem& other);

    int completed_to() const noexcept { return max_degree_; }
    const MonomialOrder& order() const noexcept { return order_; }
    const std::vector<Rule>& rules() const noexcept { return rules_; }

    bool is_normal_word(const Word& w) const;
    /// Throws DegreeOutOfRange when a term exceeds completed_to().
    FreeElt normal_form(const FreeElt& f) const;
    FreeElt normal_form_word(const Word& w) const;
    FreeElt multiply(const FreeElt& a, const FreeElt& b) const;
    /// Largest word of a nonzero element under the order.
    Word leading_word(const FreeElt& f) const;

private:
    RewriteSystem() = default;

    std::optional<std::size_t> find_rule(const Word& w, std::size_t& position) const;
    const FreeElt& nf_word_locked(const Word& w) const;
    FreeElt nf_locked(const FreeElt& f) const;
    void add_rule(Rule r);

    MonomialOrder order_;
    int max_degree_ = 0;
    std::vector<Rule> rules_;
    std::unordered_map<Word, std::size_t> by_lhs_;
    std::vector<std::size_t> lhs_lengths_;
    mutable std::unordered_map<Word, FreeElt> memo_;
    mutable std::recursive_mutex mutex_;
};

class GradedBasis {
public:
    GradedBasis() = default;
    GradedBasis(const RewriteSystem& rs, int num_generators, int max_degree);

    int max_degree() const noexcept { return static_cast<int>(words_.size()) - 1; }
    const std::vector<Word>& words(int d) const;
    std::size_t dim(int d) const { return words(d).size(); }
    std::optional<std::size_t> index(int d, const Word& w) const;
    std::vector<long> dims() const;

    /// Compares dims with a series; returns the first disagreeing degree.
    std::optional<int> certify(const hilbert::HilbertSeries& h) const;

private:
    std::vector<std::vector<Word>> words_;
    std::vector<std::unordered_map<Word, std::size_t>> index_;
};

/// A presentation together with its completed rewriting system and basis.
class Algebra {
public:
    Algebra(AlgebraPresentation pres, int max_degree, std::optional<std::vector<int>> precedence = std::nullopt,
            std::size_t rule_cap = RewriteSystem::kDefaultRuleCap);

    const AlgebraPresentation& presentation() const noexcept { return pres_; }
    const RewriteSystem& rewrite_system() const noexcept { return rs_; }
    const GradedBasis& basis() const noexcept { return basis_; }
    int max_degree() const noexcept { return rs_.completed_to(); }
    int conductor() const noexcept { return conductor_; }
    int num_generators() const noexcept { return static_cast<int>(pres_.generators.size()); }
    int weight(int g) const { return pres_.generators.at(static_cast<std::size_t>(g)).weight; }
    const std::vector<int>& weights() const noexcept { return weights_; }
    std::size_t dim(int d) const { return basis_.dim(d); }
    /// Whether declared_hilbert agrees with dims (true when none is declared).
    bool certified() const noexcept { return !certification_failure_; }
    std::optional<int> certification_failure() const noexcept { return certification_failure_; }

    FreeElt generator(int g) const { return FreeElt::generator(g); }
    FreeElt parse(std::string_view text) const;
    FreeElt normal_form(const FreeElt& f) const { return rs_.normal_form(f); }
    FreeElt multiply(const FreeElt& a, const FreeElt& b) const { return rs_.multiply(a, b); }
    FreeElt power(const FreeElt& a, int e) const;
    /// Homogeneous degree of f (after normal form); throws InvalidPresentation when inhomogeneous.
    std::optional<int> degree(const FreeElt& f) const;

    /// Coordinates of the normal form of f in the basis of A_d.
    la::SparseVec coords(const FreeElt& f, int d) const;
    la::Vector dense_coords(const FreeElt& f, int d) const;
    FreeElt element(int d, const la::SparseVec& v) const;
    FreeElt element(int d, const la::Vector& v) const;

    std::string to_string(const FreeElt& f) const { return f.to_string(pres_.generators); }

    /// Throws DegreeOutOfRange unless d <= max_degree().
    void require_degree(int d) const;

private:
    AlgebraPresentation pres_;
    RewriteSystem rs_;
    GradedBasis basis_;
    std::vector<int> weights_;
    int conductor_;
    std::optional<int> certification_failure_;
};

/// Precedence from a list of generator names (smallest first); throws InvalidPresentation.
std::vector<int> parse_precedence(const AlgebraPresentation& pres, const std::vector<std::string>& names);

AlgebraPresentation tensor_product(const AlgebraPresentation& a, const AlgebraPresentation& b);

/// A[t; sigma] where sigma sends generator i to images[i], each a scalar
/// multiple of a generator of equal weight. Throws NonGradedTwist.
AlgebraPresentation ore_extension(const AlgebraPresentation& a, const std::vector<FreeElt>& images,
                                  int t_weight, const std::string& t_name = "t");

}  // namespace ozonelab::nc
