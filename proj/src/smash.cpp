#include "ozonelab/smash.hpp"

#include "ozonelab/errors.hpp"

namespace ozonelab::smash {

bool SmashElt::is_zero() const {
    for (const auto& [g, a] : components)
        if (!a.is_zero()) return false;
    return true;
}

bool operator==(const SmashElt& a, const SmashElt& b) {
    auto strip = [](const SmashElt& u) {
        std::map<std::size_t, FreeElt> m;
        for (const auto& [g, f] : u.components)
            if (!f.is_zero()) m.emplace(g, f);
        return m;
    };
    return strip(a) == strip(b);
}

SmashAlgebra::SmashAlgebra(const Algebra& A, FiniteGroupTable G) : A_(A), G_(std::move(G)) {
    if (G_.order() == 0) throw InvalidPresentation("empty group");
}

std::string SmashAlgebra::element_name(std::size_t g) const {
    if (g == G_.identity()) return "e";
    const auto& el = G_.element(g);
    return el.name.empty() ? "g" + std::to_string(g) : el.name;
}

SmashElt SmashAlgebra::make(const FreeElt& a, std::size_t g) const {
    SmashElt u;
    FreeElt f = A_.normal_form(a);
    if (!f.is_zero()) u.components.emplace(g, f);
    return u;
}

SmashElt SmashAlgebra::multiply(const SmashElt& u, const SmashElt& v) const {
    SmashElt out;
    for (const auto& [g, a] : u.components)
        for (const auto& [h, b] : v.components) {
            FreeElt prod = A_.multiply(a, G_.element(g).apply(A_, b));
            out.components[G_.multiply(g, h)] += prod;
        }
    for (auto it = out.components.begin(); it != out.components.end();)
        it = it->second.is_zero() ? out.components.erase(it) : std::next(it);
    return out;
}

std::string SmashAlgebra::to_string(const SmashElt& u) const {
    std::string out;
    for (const auto& [g, a] : u.components) {
        if (a.is_zero()) continue;
        if (!out.empty()) out += " + ";
        out += "(" + A_.to_string(a) + ")#" + element_name(g);
    }
    return out.empty() ? "0" : out;
}

la::SparseVec SmashAlgebra::coords(const SmashElt& u, int d) const {
    const std::size_t n = A_.dim(d);
    la::SparseVec out;
    for (const auto& [g, a] : u.components) {
        la::SparseVec v = A_.coords(a, d);
        for (const auto& [i, c] : v.entries()) out.push(g * n + i, c);
    }
    return out;
}

SmashElt SmashAlgebra::element(int d, const la::SparseVec& v) const {
    const std::size_t n = A_.dim(d);
    const auto& words = A_.basis().words(d);
    SmashElt u;
    for (const auto& [k, c] : v.entries()) u.components[k / n].add_term(words[k % n], c);
    return u;
}

const std::vector<la::SparseVec>& SmashAlgebra::action(std::size_t g, int d) const {
    std::lock_guard<std::mutex> lock(mutex_);
    auto key = std::make_pair(g, d);
    if (auto it = actions_.find(key); it != actions_.end()) return it->second;
    return actions_.emplace(key, G_.element(g).matrix_columns(A_, d)).first->second;
}

la::SparseVec SmashAlgebra::multiply(int d1, const la::SparseVec& a, int d2, const la::SparseVec& b) const {
    A_.require_degree(d1 + d2);
    const std::size_t n1 = A_.dim(d1), n2 = A_.dim(d2), n = A_.dim(d1 + d2);
    const auto& w1 = A_.basis().words(d1);
    const auto& w2 = A_.basis().words(d2);
    // group b by component
    std::map<std::size_t, la::SparseVec> bparts;
    for (const auto& [k, c] : b.entries()) bparts[k / n2].push(k % n2, c);
    std::map<std::size_t, la::SparseVec> aparts;
    for (const auto& [k, c] : a.entries()) aparts[k / n1].push(k % n1, c);
    std::map<std::size_t, CycNum> acc;
    for (const auto& [g, av] : aparts) {
        const auto& act = action(g, d2);
        for (const auto& [h, bv] : bparts) {
            // g(b) in coordinates
            std::map<std::size_t, CycNum> gb;
            for (const auto& [j, c] : bv.entries())
                for (const auto& [r, v] : act[j].entries()) gb[r] += c * v;
            std::size_t gh = G_.multiply(g, h);
            for (const auto& [i, ca] : av.entries())
                for (const auto& [r, cb] : gb) {
                    if (cb.is_zero()) continue;
                    FreeElt prod = A_.multiply(FreeElt::word(w1[i]), FreeElt::word(w2[r]));
                    for (const auto& [w, c] : prod.terms()) {
                        auto idx = A_.basis().index(d1 + d2, w);
                        acc[gh * n + *idx] += ca * cb * c;
                    }
                }
        }
    }
    la::SparseVec out;
    for (const auto& [k, c] : acc)
        if (!c.is_zero()) out.push(k, c);
    return out;
}

la::SparseVec SmashAlgebra::one() const {
    la::SparseVec v;
    v.push(G_.identity(), CycNum(1));
    return v;
}

std::string SmashAlgebra::describe(int d, const la::SparseVec& v) const { return to_string(element(d, v)); }

// ---------------------------------------------------------------- centers

namespace {

la::Subspace direct_commutant(const SmashAlgebra& S, int d) {
    const Algebra& A = S.algebra();
    const auto& G = S.group();
    const std::size_t dimS = S.dim(d);
    std::vector<la::SparseVec> cols(dimS);
    std::size_t offset = 0;
    auto append = [&](std::size_t col, const la::SparseVec& v) {
        for (const auto& [i, c] : v.entries()) cols[col].push(offset + i, c);
    };
    for (int x = 0; x < A.num_generators(); ++x) {
        int e = A.weight(x);
        la::SparseVec xe = S.coords(S.make(FreeElt::generator(x), G.identity()), e);
        for (std::size_t k = 0; k < dimS; ++k) {
            la::SparseVec u;
            u.push(k, CycNum(1));
            la::SparseVec c = S.multiply(e, xe, d, u);
            c.axpy(CycNum(-1), S.multiply(d, u, e, xe));
            append(k, c);
        }
        offset += S.dim(d + e);
    }
    for (std::size_t h = 1; h < G.order(); ++h) {
        la::SparseVec he;
        he.push(h, CycNum(1));
        for (std::size_t k = 0; k < dimS; ++k) {
            la::SparseVec u;
            u.push(k, CycNum(1));
            la::SparseVec c = S.multiply(0, he, d, u);
            c.axpy(CycNum(-1), S.multiply(d, u, 0, he));
            append(k, c);
        }
        offset += dimS;
    }
    if (offset == 0) return la::Subspace::full(dimS);
    return la::kernel_from_columns(cols, offset);
}

la::Subspace constructive_span(const SmashAlgebra& S, int d) {
    const Algebra& A = S.algebra();
    const auto& G = S.group();
    const std::size_t n = A.dim(d);
    la::Subspace invariant = central::fixed_ring_degree(A, G.elements(), d);
    std::vector<la::SparseVec> vecs;
    for (std::size_t g = 0; g < G.order(); ++g) {
        la::Subspace tc = central::twisted_centralizer(A, G.element(g), d).intersect(invariant);
        for (const auto& row : tc.rows()) {
            la::SparseVec v;
            for (const auto& [i, c] : row.entries()) v.push(g * n + i, c);
            vecs.push_back(std::move(v));
        }
    }
    return la::Subspace::span_sparse(std::move(vecs), S.dim(d));
}

}  // namespace

SmashCenterPiece smash_center_degree(const SmashAlgebra& S, int d) {
    const Algebra& A = S.algebra();
    if (d + A.presentation().max_weight() > A.max_degree())
        throw DegreeOutOfRange("smash center in degree " + std::to_string(d) + " needs completion to " +
                               std::to_string(d + A.presentation().max_weight()));
    SmashCenterPiece out;
    out.space = direct_commutant(S, d);
    if (S.group().is_abelian()) {
        la::Subspace span = constructive_span(S, d);
        if (!(span == out.space))
            throw CrossCheckFailure("smash center in degree " + std::to_string(d) + ": commutant has dimension " +
                                    std::to_string(out.space.dim()) + ", normal-element span has dimension " +
                                    std::to_string(span.dim()));
        out.cross_checked = true;
    }
    return out;
}

central::GradedSubspace smash_center(const SmashAlgebra& S, int max_degree) {
    central::GradedSubspace out;
    for (int d = 0; d <= max_degree; ++d) out.pieces.push_back(smash_center_degree(S, d).space);
    return out;
}

SmashPresentation smash_center_presentation(const SmashAlgebra& S, int max_degree, const std::string& prefix) {
    SmashPresentation out;
    out.pieces = smash_center(S, max_degree);
    out.gens = central::subalgebra_generators(S, out.pieces, max_degree, prefix);
    out.relations = central::find_relations(S, out.gens, max_degree);
    return out;
}

RankCheck rank_multiplicativity_check(const hilbert::HilbertSeries& hA, std::size_t group_order,
                                      const std::optional<hilbert::HilbertSeries>& hZbar, long rank_A) {
    if (!hZbar) throw SeriesUnavailable("the Hilbert series of the smash center is required");
    hilbert::HilbertSeries hAbar = hA.times({mpz_class(static_cast<unsigned long>(group_order))});
    RankCheck out;
    out.computed = hilbert::rank_at_one(hAbar, *hZbar).rank;
    out.expected = mpz_class(rank_A) * static_cast<unsigned long>(group_order);
    out.ok = out.computed == out.expected;
    return out;
}

}  // namespace ozonelab::smash
