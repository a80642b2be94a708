#pragma once

// Built-in algebra families with bundled expectations, and the corpus runner
// that recomputes every expectation from scratch.

#include "ozonelab/ncalg.hpp"
#include "ozonelab/ozone.hpp"
#include "ozonelab/specfile.hpp"

#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace ozonelab::families {

using cyclo::CycNum;
using spec::AutoSpec;

enum class Family { Skew, Heisenberg, HeisenbergPrime, Bq, Sklyanin, SklyaninS3, DownUp, Tensor, Ore };

std::string family_name(Family f);

using ImageList = std::vector<std::pair<std::string, std::string>>;

struct NamedElement {
    std::string name;
    std::string expr;
};

struct NormalWitness {
    std::string name;
    std::string expr;
    /// Expected eta images; empty when only normality is claimed.
    ImageList eta;
};

/// A polynomial relation among named generators, up to a scalar.
struct RelationExpectation {
    int degree = 0;
    std::vector<std::vector<int>> monomials;
    std::vector<std::string> coefficients;
};

struct SmashGenerator {
    std::string name;
    std::string expr;
    /// Group element as generator images; empty for the identity.
    ImageList group_element;
};

struct SmashExpectation {
    std::vector<SmashGenerator> generators;
    std::vector<int> degrees;
    RelationExpectation relation;
};

struct FixedRingExpectation {
    std::vector<NamedElement> generators;
    RelationExpectation relation;
    std::string series;
    long rank = 0;
};

struct SkewExpectation {
    std::vector<std::string> basis;
    /// p[i][j] for i < j, row-major over the upper triangle.
    std::vector<std::string> upper;
};

struct RealizationExpectation {
    std::string label;
    std::vector<std::string> t;
    /// p[i][j] for i < j, row-major over the upper triangle.
    std::vector<std::string> upper;
};

struct ExpectedResults {
    std::string citation;
    std::optional<std::vector<long>> ozone_factors;
    /// Expected Oz as the group generated by these maps.
    std::vector<AutoSpec> ozone_generators;
    std::optional<std::vector<int>> center_degrees;
    std::vector<NamedElement> central;
    std::vector<NormalWitness> normal;
    std::optional<std::string> hz;
    std::optional<long> rank;
    /// Relation among the central witnesses, in their listed order.
    std::optional<RelationExpectation> center_relation;
    std::optional<SmashExpectation> smash;
    std::optional<FixedRingExpectation> fixed;
    std::optional<SkewExpectation> skew;
    std::vector<RealizationExpectation> realizations;
    /// No non-identity candidate admits a nonzero normal element up to this degree.
    std::optional<int> no_noncentral_normal_upto;
};

struct OreData {
    nc::AlgebraPresentation base;
    std::vector<std::string> sigma;
    int order = 1;
    /// Whether Z(B) = Z(A)^<sigma>[t^n] is expected degree by degree.
    bool prediction_holds = true;
};

struct FamilySpec {
    std::string id;
    Family family = Family::Skew;
    std::vector<std::pair<std::string, std::string>> params;
    nc::AlgebraPresentation presentation;
    std::vector<std::string> order;
    std::vector<AutoSpec> autos;
    int max_degree = 4;
    /// Completion degree when more than max_degree + max weight is needed.
    std::optional<int> completion_degree;
    std::optional<int> conductor;
    bool pi = true;
    std::optional<OreData> ore;
    std::optional<ExpectedResults> expected;

    spec::SpecFile to_spec_file() const;
    /// Algebra completed far enough for center work in degrees <= max_degree.
    nc::Algebra build() const;
};

/// Generators named x, y, z for n <= 3 and x1..xn otherwise.
std::vector<std::string> default_names(int n);

/// k<x_1..x_n>/(x_j x_i - p[i][j] x_i x_j). Throws NotAntisymmetric.
FamilySpec make_skew(const std::vector<std::vector<CycNum>>& p, const std::string& id = "skew",
                     std::vector<std::string> names = {});
/// Throws BadOrder unless q is a primitive root of unity of order >= 2 and != 3.
FamilySpec make_heisenberg(const CycNum& q, const std::string& id = "heisenberg");
FamilySpec make_heisenberg_prime(const CycNum& q, const std::string& id = "heisenberg_prime");
/// Throws BadOrder unless q is a root of unity of order not 1 or 3.
FamilySpec make_bq(const CycNum& q, const std::string& id = "bq");
/// Throws DegenerateParameters for [a:b:c] with two zero entries or a^3 = b^3 = c^3.
FamilySpec make_sklyanin(const CycNum& a, const CycNum& b, const CycNum& c, const std::string& id = "sklyanin");
/// Throws DegenerateParameters when alpha^3 = 1.
FamilySpec make_sklyanin_s3(const CycNum& alpha, const std::string& id = "sklyanin_s3");
/// omega1, omega2 are the roots of w^2 - alpha w - beta. Throws DegenerateParameters
/// when beta = 0 or the roots do not match.
FamilySpec make_downup(const CycNum& alpha, const CycNum& beta, const CycNum& omega1, const CycNum& omega2,
                       const std::string& id = "downup");
FamilySpec make_tensor(const FamilySpec& a, const FamilySpec& b, const std::string& id = "tensor");
/// A[t; sigma] with sigma given by images of the generators of A and of finite order n.
FamilySpec make_ore(const FamilySpec& a, const std::vector<std::string>& sigma, int order, int t_weight = 1,
                    const std::string& id = "ore");

/// The built-in corpus.
std::vector<FamilySpec> corpus();
std::vector<std::string> corpus_ids();
/// Throws InvalidPresentation for an unknown id.
FamilySpec find_case(const std::string& id);

struct CheckResult {
    std::string name;
    bool passed = false;
    std::string detail;
    std::string citation;
};

struct CaseReport {
    std::string id;
    std::string family;
    std::vector<long> dims;
    std::vector<long> center_dims;
    std::vector<int> center_degrees;
    std::vector<std::string> center_generators;
    std::string ozone_factors;
    std::size_t ozone_order = 0;
    bool ozone_exact = false;
    std::vector<std::string> witnesses;
    std::vector<std::string> relations;
    std::optional<std::string> rank;
    std::vector<CheckResult> checks;
    std::string error;

    bool passed() const;
};

struct CorpusReport {
    std::vector<CaseReport> cases;

    bool passed() const;
    std::size_t failures() const;
};

struct CorpusOptions {
    bool smash = true;
    /// Worker threads; 0 means hardware concurrency.
    unsigned threads = 0;
};

CaseReport run_case(const FamilySpec& spec, const CorpusOptions& options = {});
/// Runs the selected built-in cases; an empty selection yields an empty report.
CorpusReport run_corpus(const std::vector<std::string>& selection, const CorpusOptions& options = {});

}  // namespace ozonelab::families
