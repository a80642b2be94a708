#pragma once

// Centers, twisted centralizers, fixed rings, subalgebra generators and
// relations, all computed degree by degree.

#include "ozonelab/automorphism.hpp"
#include "ozonelab/ncalg.hpp"

#include <map>
#include <memory>
#include <string>
#include <vector>

namespace ozonelab::central {

using cyclo::CycNum;
using nc::Algebra;
using nc::FreeElt;
using ozone::GradedAutomorphism;

/// Per-degree subspaces in normal-word coordinates, degrees 0..max_degree().
struct GradedSubspace {
    std::vector<la::Subspace> pieces;

    int max_degree() const { return static_cast<int>(pieces.size()) - 1; }
    const la::Subspace& operator[](int d) const { return pieces.at(static_cast<std::size_t>(d)); }
    std::vector<long> dims() const;
};

/// Minimal interface of a graded algebra with finite-dimensional pieces.
class GradedRing {
public:
    virtual ~GradedRing() = default;
    virtual int max_degree() const = 0;
    virtual std::size_t dim(int d) const = 0;
    virtual la::SparseVec multiply(int d1, const la::SparseVec& a, int d2, const la::SparseVec& b) const = 0;
    virtual la::SparseVec one() const = 0;
    virtual std::string describe(int d, const la::SparseVec& v) const = 0;
};

class AlgebraRing : public GradedRing {
public:
    explicit AlgebraRing(const Algebra& A) : A_(A) {}
    int max_degree() const override { return A_.max_degree(); }
    std::size_t dim(int d) const override { return A_.dim(d); }
    la::SparseVec multiply(int d1, const la::SparseVec& a, int d2, const la::SparseVec& b) const override;
    la::SparseVec one() const override;
    std::string describe(int d, const la::SparseVec& v) const override;

private:
    const Algebra& A_;
};

/// Z(A)_d. Throws DegreeOutOfRange unless d + max weight <= completed degree.
la::Subspace center_degree(const Algebra& A, int d);
GradedSubspace center(const Algebra& A, int max_degree);
bool is_central(const Algebra& A, const FreeElt& f);

/// {f in A_d : x f = f phi(x) for every generator x}.
la::Subspace twisted_centralizer(const Algebra& A, const GradedAutomorphism& phi, int d);
/// eta_f with f eta_f(x) = x f. Throws NotNormal or NotAutomorphism.
GradedAutomorphism eta_of_normal(const Algebra& A, const FreeElt& f);
/// True when f is homogeneous and x f lies in f A for every generator x.
bool is_normal(const Algebra& A, const FreeElt& f);

/// (A^G)_d with the Molien cross-check; G is closed under composition first.
/// Throws MolienMismatch.
la::Subspace fixed_ring_degree(const Algebra& A, const std::vector<GradedAutomorphism>& G, int d);
GradedSubspace fixed_ring(const Algebra& A, const std::vector<GradedAutomorphism>& G, int max_degree);
/// (1/|G|) sum_g trace(g | A_d) for a closed group G.
CycNum molien_average(const Algebra& A, const std::vector<GradedAutomorphism>& G, int d);

struct SubGen {
    std::string name;
    int degree = 0;
    la::SparseVec coords;
    std::string repr;
};

struct SubalgebraGens {
    std::vector<SubGen> gens;
    /// dim of the span of products of generators in each degree
    std::vector<long> closure_dims;

    std::vector<int> degrees() const;
    std::vector<std::string> names() const;
};

/// New generators in each degree: the earliest basis vectors of pieces_d
/// outside the span of products of earlier generators.
SubalgebraGens subalgebra_generators(const GradedRing& R, const GradedSubspace& pieces, int max_degree,
                                     const std::string& prefix = "t");
/// Wraps user-named elements as generators and computes their closure dims.
SubalgebraGens named_generators(const GradedRing& R, std::vector<SubGen> gens, int max_degree);
/// True when the generators lie in the pieces and their products span every piece up to max_degree.
bool generates(const GradedRing& R, const SubalgebraGens& gens, const GradedSubspace& pieces, int max_degree);

/// Commutative polynomial in the generators: exponent vector -> coefficient.
struct Relation {
    int degree = 0;
    std::map<std::vector<int>, CycNum> terms;

    std::string to_string(const std::vector<std::string>& names) const;
    /// Coefficients on the given monomials.
    std::vector<CycNum> coefficients(const std::vector<std::vector<int>>& monomials) const;
    /// True when the coefficients on the given monomials are proportional to `expected`
    /// and the relation has no other terms.
    bool proportional_to(const std::vector<std::vector<int>>& monomials, const std::vector<CycNum>& expected) const;
};

struct RelationSet {
    std::vector<std::string> names;
    std::vector<int> degrees;
    std::vector<Relation> relations;
    int max_degree = 0;

    std::vector<Relation> at_degree(int d) const;
};

/// Kernel of the evaluation map on commutative monomials, degree by degree,
/// modulo monomial multiples of lower-degree relations. Throws NonCommutingGenerators.
RelationSet find_relations(const GradedRing& R, const SubalgebraGens& gens, int max_degree);
/// Evaluates a relation in R (generators multiplied in index order).
la::SparseVec evaluate(const GradedRing& R, const SubalgebraGens& gens, const Relation& rel);

}  // namespace ozonelab::central
