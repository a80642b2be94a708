#include "ozonelab/ozone.hpp"

#include "ozonelab/errors.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <numeric>
#include <set>

namespace ozonelab::ozone {

std::vector<long> OzoneReport::factors() const {
    return exact ? upper.invariant_factors() : lower.invariant_factors();
}

bool fixes_center(const Algebra& A, const GradedAutomorphism& g, const central::GradedSubspace& Z) {
    if (g.is_identity()) return true;
    for (int d = 1; d <= Z.max_degree(); ++d) {
        for (const auto& row : Z[d].rows()) {
            FreeElt f = A.element(d, row);
            if (g.apply(A, f) != f) return false;
        }
    }
    return true;
}

namespace {

using Counts = std::vector<int>;
using Tuple = std::vector<int>;

Counts letter_counts(const nc::Word& w, std::size_t n) {
    Counts c(n, 0);
    for (char ch : w) ++c[static_cast<unsigned char>(ch)];
    return c;
}

int residue(const Tuple& a, const Counts& c, int N) {
    long s = 0;
    for (std::size_t i = 0; i < a.size(); ++i) s += static_cast<long>(a[i]) * c[i];
    return static_cast<int>(((s % N) + N) % N);
}

bool preserves_relations(const Algebra& A, const Tuple& a, int N) {
    const std::size_t n = a.size();
    for (const auto& rel : A.presentation().relations) {
        std::set<int> residues;
        for (const auto& [w, c] : rel.terms()) residues.insert(residue(a, letter_counts(w, n), N));
        if (residues.size() <= 1) continue;
        FreeElt image;
        for (const auto& [w, c] : rel.terms())
            image += FreeElt::word(w, c * CycNum::zeta_power(N, residue(a, letter_counts(w, n), N)));
        if (!A.normal_form(image).is_zero()) return false;
    }
    return true;
}

std::set<Tuple> generated_subgroup(const std::vector<Tuple>& gens, std::size_t n, int N) {
    std::set<Tuple> group{Tuple(n, 0)};
    std::vector<Tuple> frontier{Tuple(n, 0)};
    while (!frontier.empty()) {
        std::vector<Tuple> next;
        for (const auto& t : frontier)
            for (const auto& g : gens) {
                Tuple s(n);
                for (std::size_t i = 0; i < n; ++i) s[i] = (t[i] + g[i]) % N;
                if (group.insert(s).second) next.push_back(s);
            }
        frontier = std::move(next);
    }
    return group;
}

GradedAutomorphism diagonal_from_tuple(const Algebra& A, const Tuple& a, int N) {
    std::vector<CycNum> scalars;
    for (int e : a) scalars.push_back(CycNum::zeta_power(N, e));
    auto g = GradedAutomorphism::diagonal(A, scalars);
    return g;
}

// Generating set for the diagonal solution group, as tuples of exponents.
std::vector<Tuple> diagonal_generators(const Algebra& A, const central::GradedSubspace& Z, int N, int D) {
    const std::size_t n = static_cast<std::size_t>(A.num_generators());
    if (N < 1) throw InvalidPresentation("conductor must be positive");
    if (std::pow(static_cast<double>(N), static_cast<double>(n)) > kMaxDiagonalCandidates)
        throw SearchSpaceTooLarge(std::to_string(N) + "^" + std::to_string(n) + " diagonal candidates");
    if (D > Z.max_degree()) throw DegreeOutOfRange("center pieces computed only to degree " + std::to_string(Z.max_degree()));

    std::set<Counts> constraints;
    for (int d = 1; d <= D; ++d) {
        const auto& words = A.basis().words(d);
        for (const auto& row : Z[d].rows())
            for (const auto& [i, c] : row.entries()) constraints.insert(letter_counts(words[i], n));
    }
    std::vector<Counts> cons(constraints.begin(), constraints.end());

    std::vector<Tuple> solutions;
    Tuple a(n, 0);
    while (true) {
        bool ok = std::all_of(cons.begin(), cons.end(), [&](const Counts& c) { return residue(a, c, N) == 0; });
        if (ok && preserves_relations(A, a, N)) solutions.push_back(a);
        std::size_t k = 0;
        while (k < n && ++a[k] == N) a[k++] = 0;
        if (k == n) break;
    }

    std::vector<Tuple> gens;
    std::set<Tuple> group = generated_subgroup(gens, n, N);
    for (const auto& s : solutions) {
        if (group.count(s)) continue;
        gens.push_back(s);
        group = generated_subgroup(gens, n, N);
    }
    return gens;
}

// Exponent of Z^n / span(rows), or nullopt when the span has rank < n.
std::optional<long> lattice_exponent(std::vector<std::vector<mpz_class>> rows, std::size_t n) {
    std::size_t top = 0;
    for (std::size_t col = 0; col < n; ++col) {
        while (true) {
            std::size_t best = rows.size();
            for (std::size_t r = top; r < rows.size(); ++r)
                if (rows[r][col] != 0 && (best == rows.size() || abs(rows[r][col]) < abs(rows[best][col]))) best = r;
            if (best == rows.size()) return std::nullopt;
            std::swap(rows[top], rows[best]);
            bool done = true;
            for (std::size_t r = top + 1; r < rows.size(); ++r) {
                if (rows[r][col] == 0) continue;
                mpz_class q;
                mpz_fdiv_q(q.get_mpz_t(), rows[r][col].get_mpz_t(), rows[top][col].get_mpz_t());
                for (std::size_t k = col; k < n; ++k) rows[r][k] -= q * rows[top][k];
                if (rows[r][col] != 0) done = false;
            }
            if (done) break;
        }
        ++top;
    }
    // inverse of the triangular basis over Q; the exponent is the lcm of its denominators
    std::vector<std::vector<mpq_class>> inv(n, std::vector<mpq_class>(n));
    for (std::size_t i = n; i-- > 0;) {
        for (std::size_t j = 0; j < n; ++j) {
            mpq_class v = (i == j) ? mpq_class(1) : mpq_class(0);
            for (std::size_t k = i + 1; k < n; ++k) v -= mpq_class(rows[i][k]) * inv[k][j];
            v /= mpq_class(rows[i][i]);
            inv[i][j] = v;
        }
    }
    mpz_class e = 1;
    for (const auto& row : inv)
        for (const auto& v : row) mpz_lcm(e.get_mpz_t(), e.get_mpz_t(), v.get_den_mpz_t());
    if (!e.fits_slong_p()) return std::nullopt;
    return e.get_si();
}

}  // namespace

int default_conductor(const Algebra& A, const central::GradedSubspace& Z, int D) {
    const std::size_t n = static_cast<std::size_t>(A.num_generators());
    std::set<Counts> constraints;
    for (int d = 1; d <= std::min(D, Z.max_degree()); ++d) {
        const auto& words = A.basis().words(d);
        for (const auto& row : Z[d].rows())
            for (const auto& [i, c] : row.entries()) constraints.insert(letter_counts(words[i], n));
    }
    std::vector<std::vector<mpz_class>> rows;
    for (const auto& c : constraints) rows.emplace_back(c.begin(), c.end());
    auto e = lattice_exponent(std::move(rows), n);
    if (!e || *e > 1000) return 2 * std::lcm(A.conductor(), 2);
    return 2 * std::lcm(A.conductor(), static_cast<int>(*e));
}

FiniteGroupTable diagonal_upper_bound(const Algebra& A, const central::GradedSubspace& Z, int N, int D) {
    std::vector<GradedAutomorphism> gens;
    for (const auto& t : diagonal_generators(A, Z, N, D)) gens.push_back(diagonal_from_tuple(A, t, N));
    return FiniteGroupTable::closure(A, gens);
}

OzoneReport ozone_sandwich(const Algebra& A, const central::GradedSubspace& Z,
                           const std::vector<GradedAutomorphism>& candidates, int N, int D,
                           std::optional<long> rank) {
    OzoneReport report;
    report.conductor = N;
    report.max_degree = D;
    report.rank = rank;

    std::vector<GradedAutomorphism> upper_gens;
    for (const auto& t : diagonal_generators(A, Z, N, D)) upper_gens.push_back(diagonal_from_tuple(A, t, N));
    for (const auto& c : candidates) {
        if (!c.verified()) throw UnverifiedAutomorphism(c.name.empty() ? c.to_string(A) : c.name);
        report.candidate_names.push_back(c.name.empty() ? c.to_string(A) : c.name);
        if (fixes_center(A, c, Z)) upper_gens.push_back(c);
    }
    report.upper = FiniteGroupTable::closure(A, upper_gens);

    std::vector<GradedAutomorphism> targets = report.upper.elements();
    for (const auto& c : candidates)
        if (!report.upper.find(c)) targets.push_back(c);

    const int top = std::min(D, A.max_degree() - A.presentation().max_weight());
    std::vector<GradedAutomorphism> etas;
    for (const auto& phi : targets) {
        if (phi.is_identity()) continue;
        for (int d = 1; d <= top; ++d) {
            la::Subspace tc = central::twisted_centralizer(A, phi, d);
            if (tc.dim() == 0) continue;
            FreeElt f = A.element(d, tc.rows().front());
            GradedAutomorphism eta = central::eta_of_normal(A, f);
            report.witnesses.push_back({f, d, eta});
            etas.push_back(eta);
            break;
        }
        if (rank) {
            FiniteGroupTable partial = FiniteGroupTable::closure(A, etas);
            if (static_cast<long>(partial.order()) > *rank)
                throw ContradictsDivisibility("lower bound of order " + std::to_string(partial.order()) +
                                              " exceeds rank " + std::to_string(*rank));
        }
    }
    report.lower = FiniteGroupTable::closure(A, etas);
    report.exact = report.upper.contains(report.lower) && report.lower.contains(report.upper);
    return report;
}

bool divisibility_check(const OzoneReport& report, long rank) {
    if (rank <= 0) return false;
    return rank % static_cast<long>(report.order()) == 0;
}

// ---------------------------------------------------------------- skew recognition

SkewParameters skew_recognition(const Algebra& A, const std::vector<FreeElt>& basis, int max_degree) {
    for (int g = 0; g < A.num_generators(); ++g)
        if (A.weight(g) != 1) throw NotDegreeOneGenerated("generator of weight " + std::to_string(A.weight(g)));
    A.require_degree(std::max(2, max_degree));
    const std::size_t n = basis.size();
    if (n != A.dim(1)) throw NotDegreeOneGenerated("expected " + std::to_string(A.dim(1)) + " degree-one elements");
    std::vector<la::SparseVec> one;
    for (const auto& b : basis) {
        FreeElt f = A.normal_form(b);
        if (f.is_zero() || A.degree(f) != 1) throw NotDegreeOneGenerated("candidates must be nonzero of degree one");
        one.push_back(A.coords(f, 1));
    }
    if (la::Subspace::span_sparse(one, A.dim(1)).dim() != n)
        throw NotDegreeOneGenerated("candidates do not span the degree-one piece");

    SkewParameters out;
    out.max_degree = max_degree;
    for (std::size_t k = 0; k < n; ++k) {
        try {
            out.etas.push_back(central::eta_of_normal(A, basis[k]));
        } catch (const NotNormal&) {
            throw NotSkew("candidate " + std::to_string(k + 1) + " (" + A.to_string(basis[k]) + ") is not normal");
        }
    }
    out.p.assign(n, std::vector<CycNum>(n, CycNum(1)));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j) {
            la::SparseVec ij = A.coords(A.multiply(basis[i], basis[j]), 2);
            la::SparseVec ji = A.coords(A.multiply(basis[j], basis[i]), 2);
            if (ij.empty()) throw NotSkew("zero product of candidates");
            CycNum p = ji.get(ij.lead()) / ij.lead_value();
            la::SparseVec check = ij;
            check.scale(p);
            if (!(check == ji))
                throw NotSkew("candidates " + std::to_string(i + 1) + " and " + std::to_string(j + 1) + " do not skew-commute");
            out.p[i][j] = p;
            out.p[j][i] = p.inverse();
        }

    // ordered monomials t_1^{a_1} ... t_n^{a_n} against 1/(1-t)^n
    bool pbw = true;
    for (int d = 0; d <= max_degree && pbw; ++d) {
        std::vector<la::SparseVec> vals;
        std::vector<int> e(n, 0);
        std::function<void(std::size_t, int)> rec = [&](std::size_t i, int left) {
            if (i + 1 == n) {
                e[i] = left;
                FreeElt m = FreeElt::scalar(CycNum(1));
                for (std::size_t k = 0; k < n; ++k)
                    for (int r = 0; r < e[k]; ++r) m = A.multiply(m, basis[k]);
                vals.push_back(A.coords(m, d));
                return;
            }
            for (int k = left; k >= 0; --k) {
                e[i] = k;
                rec(i + 1, left - k);
            }
        };
        if (n > 0) rec(0, d);
        long expected = static_cast<long>(vals.size());
        pbw = static_cast<long>(A.dim(d)) == expected &&
              static_cast<long>(la::Subspace::span_sparse(vals, A.dim(d)).dim()) == expected;
    }
    out.pbw = pbw;
    return out;
}

// ---------------------------------------------------------------- filtered realizations

RealizationResult filtered_realization_check(const Algebra& A, const std::vector<FreeElt>& t,
                                             const std::vector<std::vector<CycNum>>& p) {
    const std::size_t n = t.size();
    if (p.size() != n) throw DimensionMismatch("parameter matrix size");
    std::vector<FreeElt> ts;
    std::vector<int> deg;
    for (const auto& x : t) {
        FreeElt f = A.normal_form(x);
        auto d = A.degree(f);
        if (!d || *d < 1) throw InvalidPresentation("realization generators must be nonzero and homogeneous");
        ts.push_back(f);
        deg.push_back(*d);
    }
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j) A.require_degree(deg[i] + deg[j]);

    // span of all words in t_0..t_{m-1} of degree e
    std::map<std::pair<std::size_t, int>, la::Subspace> spans;
    auto span_of = [&](std::size_t m, int e) -> const la::Subspace& {
        auto key = std::make_pair(m, e);
        if (auto it = spans.find(key); it != spans.end()) return it->second;
        std::vector<la::SparseVec> vals;
        std::function<void(const FreeElt&, int)> rec = [&](const FreeElt& prefix, int left) {
            if (left == 0) {
                vals.push_back(A.coords(prefix, e));
                return;
            }
            for (std::size_t k = 0; k < m; ++k)
                if (deg[k] <= left) rec(A.multiply(prefix, ts[k]), left - deg[k]);
        };
        rec(FreeElt::scalar(CycNum(1)), e);
        return spans.emplace(key, la::Subspace::span_sparse(std::move(vals), A.dim(e))).first->second;
    };

    RealizationResult out;
    out.ok = true;
    for (std::size_t j = 1; j < n; ++j)
        for (std::size_t i = 0; i < j; ++i) {
            int e = deg[i] + deg[j];
            FreeElt diff = A.multiply(ts[j], ts[i]) - A.multiply(ts[i], ts[j]) * p[i][j];
            bool ok = span_of(j, e).contains(A.coords(diff, e));
            out.pairs.push_back({static_cast<int>(i), static_cast<int>(j), ok});
            out.ok = out.ok && ok;
        }
    return out;
}

}  // namespace ozonelab::ozone
