#include "ozonelab/central.hpp"

#include "ozonelab/errors.hpp"

#include <algorithm>
#include <functional>

namespace ozonelab::central {

std::vector<long> GradedSubspace::dims() const {
    std::vector<long> out;
    for (const auto& p : pieces) out.push_back(static_cast<long>(p.dim()));
    return out;
}

namespace {

la::SparseVec from_map(const std::map<std::size_t, CycNum>& m) {
    la::SparseVec v;
    for (const auto& [i, c] : m) v.push(i, c);
    return v;
}

void require_twist_degree(const Algebra& A, int d) {
    int need = d + A.presentation().max_weight();
    if (need > A.max_degree())
        throw DegreeOutOfRange("degree " + std::to_string(d) + " needs completion to " + std::to_string(need) +
                               ", have " + std::to_string(A.max_degree()));
}

}  // namespace

// ---------------------------------------------------------------- AlgebraRing

la::SparseVec AlgebraRing::multiply(int d1, const la::SparseVec& a, int d2, const la::SparseVec& b) const {
    A_.require_degree(d1 + d2);
    const auto& w1 = A_.basis().words(d1);
    const auto& w2 = A_.basis().words(d2);
    FreeElt fa, fb;
    for (const auto& [i, c] : a.entries()) fa.add_term(w1.at(i), c);
    for (const auto& [j, c] : b.entries()) fb.add_term(w2.at(j), c);
    return A_.coords(fa * fb, d1 + d2);
}

la::SparseVec AlgebraRing::one() const {
    la::SparseVec v;
    v.push(0, CycNum(1));
    return v;
}

std::string AlgebraRing::describe(int d, const la::SparseVec& v) const {
    return A_.to_string(A_.element(d, v));
}

// ---------------------------------------------------------------- centers

la::Subspace twisted_centralizer(const Algebra& A, const GradedAutomorphism& phi, int d) {
    if (d < 0) throw DegreeOutOfRange("negative degree");
    require_twist_degree(A, d);
    const auto& words = A.basis().words(d);
    const int n = A.num_generators();
    std::vector<std::size_t> offset(static_cast<std::size_t>(n) + 1, 0);
    for (int g = 0; g < n; ++g) offset[static_cast<std::size_t>(g) + 1] = offset[static_cast<std::size_t>(g)] + A.dim(d + A.weight(g));
    std::vector<la::SparseVec> cols;
    cols.reserve(words.size());
    for (const auto& w : words) {
        std::map<std::size_t, CycNum> col;
        FreeElt fw = FreeElt::word(w);
        for (int g = 0; g < n; ++g) {
            FreeElt lhs = FreeElt::generator(g) * fw;
            FreeElt rhs = fw * phi.images()[static_cast<std::size_t>(g)];
            la::SparseVec v = A.coords(lhs - rhs, d + A.weight(g));
            for (const auto& [i, c] : v.entries()) col.emplace(offset[static_cast<std::size_t>(g)] + i, c);
        }
        cols.push_back(from_map(col));
    }
    return la::kernel_from_columns(cols, offset.back());
}

la::Subspace center_degree(const Algebra& A, int d) {
    return twisted_centralizer(A, GradedAutomorphism::identity(A), d);
}

GradedSubspace center(const Algebra& A, int max_degree) {
    GradedSubspace z;
    for (int d = 0; d <= max_degree; ++d) z.pieces.push_back(center_degree(A, d));
    return z;
}

bool is_central(const Algebra& A, const FreeElt& f) {
    FreeElt g = A.normal_form(f);
    if (g.is_zero()) return true;
    auto d = A.degree(g);
    require_twist_degree(A, *d);
    for (int x = 0; x < A.num_generators(); ++x) {
        FreeElt gx = FreeElt::generator(x);
        if (A.multiply(gx, g) != A.multiply(g, gx)) return false;
    }
    return true;
}

namespace {

std::optional<std::vector<FreeElt>> solve_eta(const Algebra& A, const FreeElt& f, int d) {
    std::vector<FreeElt> images;
    for (int x = 0; x < A.num_generators(); ++x) {
        int e = A.weight(x);
        std::vector<la::SparseVec> cols;
        for (const auto& b : A.basis().words(e)) cols.push_back(A.coords(f * FreeElt::word(b), d + e));
        la::SparseVec rhs = A.coords(FreeElt::generator(x) * f, d + e);
        auto sol = la::solve_columns(cols, A.dim(d + e), rhs);
        if (!sol) return std::nullopt;
        images.push_back(A.element(e, *sol));
    }
    return images;
}

}  // namespace

GradedAutomorphism eta_of_normal(const Algebra& A, const FreeElt& f) {
    FreeElt g = A.normal_form(f);
    if (g.is_zero()) throw NotNormal("zero element");
    auto d = A.degree(g);
    require_twist_degree(A, *d);
    auto images = solve_eta(A, g, *d);
    if (!images) throw NotNormal(A.to_string(g) + " is not normal");
    return ozone::verify_automorphism(A, std::move(*images), "eta(" + A.to_string(g) + ")");
}

bool is_normal(const Algebra& A, const FreeElt& f) {
    FreeElt g = A.normal_form(f);
    if (g.is_zero()) return false;
    auto d = A.degree(g);
    require_twist_degree(A, *d);
    return solve_eta(A, g, *d).has_value();
}

// ---------------------------------------------------------------- fixed rings

CycNum molien_average(const Algebra& A, const std::vector<GradedAutomorphism>& G, int d) {
    CycNum sum;
    for (const auto& g : G) sum += g.trace(A, d);
    return sum / CycNum(static_cast<long>(G.size()));
}

namespace {

la::Subspace fixed_by(const Algebra& A, const std::vector<GradedAutomorphism>& gens, int d) {
    std::vector<la::SparseVec> rows;
    std::size_t n = A.dim(d);
    std::vector<la::SparseVec> all_cols;
    std::size_t offset = 0;
    for (const auto& g : gens) {
        if (g.is_identity()) continue;
        auto cols = g.matrix_columns(A, d);
        for (std::size_t j = 0; j < n; ++j) {
            std::map<std::size_t, CycNum> col;
            for (const auto& [i, c] : cols[j].entries()) col.emplace(offset + i, c);
            col[offset + j] -= CycNum(1);
            if (col[offset + j].is_zero()) col.erase(offset + j);
            if (all_cols.size() <= j) all_cols.resize(n);
            for (const auto& [i, c] : col) all_cols[j].push(i, c);
        }
        offset += n;
    }
    if (offset == 0) return la::Subspace::full(n);
    return la::kernel_from_columns(all_cols, offset);
}

}  // namespace

la::Subspace fixed_ring_degree(const Algebra& A, const std::vector<GradedAutomorphism>& G, int d) {
    A.require_degree(d);
    auto group = ozone::FiniteGroupTable::closure(A, G);
    la::Subspace s = fixed_by(A, G, d);
    CycNum avg = molien_average(A, group.elements(), d);
    if (!avg.is_rational() || avg.rational_value() != static_cast<long>(s.dim()))
        throw MolienMismatch("degree " + std::to_string(d) + ": fixed space has dimension " + std::to_string(s.dim()) +
                             " but the trace average is " + avg.to_string());
    return s;
}

GradedSubspace fixed_ring(const Algebra& A, const std::vector<GradedAutomorphism>& G, int max_degree) {
    A.require_degree(max_degree);
    auto group = ozone::FiniteGroupTable::closure(A, G);
    GradedSubspace out;
    for (int d = 0; d <= max_degree; ++d) {
        la::Subspace s = fixed_by(A, G, d);
        CycNum avg = molien_average(A, group.elements(), d);
        if (!avg.is_rational() || avg.rational_value() != static_cast<long>(s.dim()))
            throw MolienMismatch("degree " + std::to_string(d) + ": fixed space has dimension " +
                                 std::to_string(s.dim()) + " but the trace average is " + avg.to_string());
        out.pieces.push_back(std::move(s));
    }
    return out;
}

// ---------------------------------------------------------------- generators

std::vector<int> SubalgebraGens::degrees() const {
    std::vector<int> out;
    for (const auto& g : gens) out.push_back(g.degree);
    return out;
}

std::vector<std::string> SubalgebraGens::names() const {
    std::vector<std::string> out;
    for (const auto& g : gens) out.push_back(g.name);
    return out;
}

namespace {

// Span of products of the given generators in degree d, given spans in lower degrees.
la::Subspace products_in_degree(const GradedRing& R, const std::vector<SubGen>& gens,
                                const std::vector<la::Subspace>& closure, int d) {
    std::vector<la::SparseVec> vecs;
    for (const auto& g : gens) {
        if (g.degree < 1 || g.degree > d) continue;
        for (const auto& c : closure[static_cast<std::size_t>(d - g.degree)].rows())
            vecs.push_back(R.multiply(g.degree, g.coords, d - g.degree, c));
    }
    return la::Subspace::span_sparse(std::move(vecs), R.dim(d));
}

}  // namespace

SubalgebraGens subalgebra_generators(const GradedRing& R, const GradedSubspace& pieces, int max_degree,
                                     const std::string& prefix) {
    if (max_degree > R.max_degree() || max_degree > pieces.max_degree())
        throw DegreeOutOfRange("generator search beyond computed degree");
    SubalgebraGens out;
    std::vector<la::Subspace> closure;
    closure.push_back(la::Subspace::span_sparse({R.one()}, R.dim(0)));
    out.closure_dims.push_back(1);
    for (int d = 1; d <= max_degree; ++d) {
        la::Subspace span = products_in_degree(R, out.gens, closure, d);
        for (const auto& row : pieces[d].rows()) {
            if (span.contains(row)) continue;
            SubGen g;
            g.name = prefix + std::to_string(out.gens.size() + 1);
            g.degree = d;
            g.coords = row;
            g.repr = R.describe(d, row);
            out.gens.push_back(g);
            span = span.sum(la::Subspace::span_sparse({row}, R.dim(d)));
        }
        out.closure_dims.push_back(static_cast<long>(span.dim()));
        closure.push_back(std::move(span));
    }
    return out;
}

SubalgebraGens named_generators(const GradedRing& R, std::vector<SubGen> gens, int max_degree) {
    if (max_degree > R.max_degree()) throw DegreeOutOfRange("closure beyond computed degree");
    SubalgebraGens out;
    out.gens = std::move(gens);
    for (auto& g : out.gens)
        if (g.repr.empty()) g.repr = R.describe(g.degree, g.coords);
    std::vector<la::Subspace> closure;
    closure.push_back(la::Subspace::span_sparse({R.one()}, R.dim(0)));
    out.closure_dims.push_back(1);
    for (int d = 1; d <= max_degree; ++d) {
        la::Subspace span = products_in_degree(R, out.gens, closure, d);
        std::vector<la::SparseVec> rows = span.rows();
        for (const auto& g : out.gens)
            if (g.degree == d) rows.push_back(g.coords);
        span = la::Subspace::span_sparse(std::move(rows), R.dim(d));
        out.closure_dims.push_back(static_cast<long>(span.dim()));
        closure.push_back(std::move(span));
    }
    return out;
}

bool generates(const GradedRing& R, const SubalgebraGens& gens, const GradedSubspace& pieces, int max_degree) {
    for (const auto& g : gens.gens)
        if (g.degree <= max_degree && !pieces[g.degree].contains(g.coords)) return false;
    SubalgebraGens closed = named_generators(R, gens.gens, max_degree);
    for (int d = 0; d <= max_degree; ++d)
        if (closed.closure_dims[static_cast<std::size_t>(d)] != static_cast<long>(pieces[d].dim())) return false;
    return true;
}

// ---------------------------------------------------------------- relations

namespace {

// Exponent vectors of total weighted degree d, in descending lexicographic order.
std::vector<std::vector<int>> monomials_of_degree(const std::vector<int>& degs, int d) {
    std::vector<std::vector<int>> out;
    std::vector<int> e(degs.size(), 0);
    std::function<void(std::size_t, int)> rec = [&](std::size_t i, int left) {
        if (i == degs.size()) {
            if (left == 0) out.push_back(e);
            return;
        }
        for (int k = left / degs[i]; k >= 0; --k) {
            e[i] = k;
            rec(i + 1, left - k * degs[i]);
        }
        e[i] = 0;
    };
    if (!degs.empty()) rec(0, d);
    return out;
}

class MonomialEvaluator {
public:
    MonomialEvaluator(const GradedRing& R, const SubalgebraGens& gens) : R_(R), gens_(gens) {}

    const la::SparseVec& value(const std::vector<int>& e) {
        if (auto it = memo_.find(e); it != memo_.end()) return it->second;
        std::size_t i = 0;
        while (i < e.size() && e[i] == 0) ++i;
        la::SparseVec v;
        if (i == e.size()) {
            v = R_.one();
        } else {
            std::vector<int> rest = e;
            --rest[i];
            int dr = 0;
            for (std::size_t k = 0; k < rest.size(); ++k) dr += rest[k] * gens_.gens[k].degree;
            const la::SparseVec& r = value(rest);
            v = R_.multiply(gens_.gens[i].degree, gens_.gens[i].coords, dr, r);
        }
        return memo_.emplace(e, std::move(v)).first->second;
    }

private:
    const GradedRing& R_;
    const SubalgebraGens& gens_;
    std::map<std::vector<int>, la::SparseVec> memo_;
};

std::string monomial_string(const std::vector<int>& e, const std::vector<std::string>& names) {
    std::string out;
    for (std::size_t i = 0; i < e.size(); ++i) {
        if (e[i] == 0) continue;
        if (!out.empty()) out += "*";
        out += names[i];
        if (e[i] > 1) out += "^" + std::to_string(e[i]);
    }
    return out;
}

}  // namespace

std::string Relation::to_string(const std::vector<std::string>& names) const {
    if (terms.empty()) return "0";
    std::string out;
    bool first = true;
    for (auto it = terms.rbegin(); it != terms.rend(); ++it) {
        const auto& [e, c] = *it;
        std::string mono = monomial_string(e, names);
        bool negative = false;
        std::string coeff;
        if (c.is_rational()) {
            cyclo::Rational r = c.rational_value();
            negative = r < 0;
            if (negative) r = -r;
            coeff = (r == 1 && !mono.empty()) ? "" : r.get_str();
        } else {
            coeff = "(" + c.to_string() + ")";
        }
        std::string term = coeff;
        if (!mono.empty()) term += (coeff.empty() ? "" : "*") + mono;
        if (first) out = negative ? "-" + term : term;
        else out += (negative ? " - " : " + ") + term;
        first = false;
    }
    return out;
}

std::vector<CycNum> Relation::coefficients(const std::vector<std::vector<int>>& monomials) const {
    std::vector<CycNum> out;
    for (const auto& m : monomials) {
        auto it = terms.find(m);
        out.push_back(it == terms.end() ? CycNum() : it->second);
    }
    return out;
}

bool Relation::proportional_to(const std::vector<std::vector<int>>& monomials, const std::vector<CycNum>& expected) const {
    if (monomials.size() != expected.size()) return false;
    for (const auto& [e, c] : terms)
        if (std::find(monomials.begin(), monomials.end(), e) == monomials.end()) return false;
    auto mine = coefficients(monomials);
    std::optional<CycNum> lambda;
    for (std::size_t i = 0; i < mine.size(); ++i) {
        if (expected[i].is_zero() != mine[i].is_zero()) return false;
        if (expected[i].is_zero()) continue;
        CycNum r = mine[i] / expected[i];
        if (!lambda) lambda = r;
        else if (*lambda != r) return false;
    }
    return lambda.has_value();
}

std::vector<Relation> RelationSet::at_degree(int d) const {
    std::vector<Relation> out;
    for (const auto& r : relations)
        if (r.degree == d) out.push_back(r);
    return out;
}

RelationSet find_relations(const GradedRing& R, const SubalgebraGens& gens, int max_degree) {
    if (max_degree > R.max_degree()) throw DegreeOutOfRange("relation search beyond computed degree");
    const std::size_t n = gens.gens.size();
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j) {
            const auto& a = gens.gens[i];
            const auto& b = gens.gens[j];
            if (a.degree + b.degree > R.max_degree()) continue;
            if (!(R.multiply(a.degree, a.coords, b.degree, b.coords) == R.multiply(b.degree, b.coords, a.degree, a.coords)))
                throw NonCommutingGenerators(a.name + " and " + b.name + " do not commute");
        }
    RelationSet out;
    out.names = gens.names();
    out.degrees = gens.degrees();
    out.max_degree = max_degree;
    MonomialEvaluator eval(R, gens);
    for (int d = 1; d <= max_degree; ++d) {
        auto monos = monomials_of_degree(out.degrees, d);
        if (monos.empty()) continue;
        std::map<std::vector<int>, std::size_t> index;
        for (std::size_t k = 0; k < monos.size(); ++k) index.emplace(monos[k], k);
        std::vector<la::SparseVec> cols;
        cols.reserve(monos.size());
        for (const auto& m : monos) cols.push_back(eval.value(m));
        la::Subspace ker = la::kernel_from_columns(cols, R.dim(d));
        if (ker.dim() == 0) continue;
        // monomial multiples of lower relations
        std::vector<la::SparseVec> multiples;
        for (const auto& rel : out.relations) {
            for (const auto& mu : monomials_of_degree(out.degrees, d - rel.degree)) {
                std::map<std::size_t, CycNum> v;
                for (const auto& [e, c] : rel.terms) {
                    std::vector<int> s = e;
                    for (std::size_t k = 0; k < s.size(); ++k) s[k] += mu[k];
                    v.emplace(index.at(s), c);
                }
                multiples.push_back(from_map(v));
            }
        }
        la::Subspace span = la::Subspace::span_sparse(std::move(multiples), monos.size());
        for (const auto& row : ker.rows()) {
            la::SparseVec rest = span.reduce(row);
            if (rest.empty()) continue;
            rest.scale(rest.lead_value().inverse());
            Relation rel;
            rel.degree = d;
            for (const auto& [k, c] : rest.entries()) rel.terms.emplace(monos[k], c);
            out.relations.push_back(rel);
            span = span.sum(la::Subspace::span_sparse({rest}, monos.size()));
        }
    }
    return out;
}

la::SparseVec evaluate(const GradedRing& R, const SubalgebraGens& gens, const Relation& rel) {
    MonomialEvaluator eval(R, gens);
    std::map<std::size_t, CycNum> acc;
    for (const auto& [e, c] : rel.terms)
        for (const auto& [i, v] : eval.value(e).entries()) acc[i] += c * v;
    la::SparseVec out;
    for (const auto& [i, v] : acc) out.push(i, v);
    return out;
}

}  // namespace ozonelab::central
