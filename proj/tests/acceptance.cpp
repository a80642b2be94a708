// Acceptance suite: one PASS/FAIL line per criterion, nonzero exit on any failure.

#include "ozonelab/central.hpp"
#include "ozonelab/errors.hpp"
#include "ozonelab/families.hpp"
#include "ozonelab/hilbert.hpp"
#include "ozonelab/ozone.hpp"
#include "ozonelab/smash.hpp"
#include "support/oracle.hpp"

#include <functional>
#include <iostream>
#include <sstream>

using namespace ozonelab;
using central::AlgebraRing;
using cyclo::CycNum;
using families::CaseReport;
using families::FamilySpec;
using hilbert::HilbertSeries;
using nc::Algebra;
using ozone::FiniteGroupTable;
using ozone::GradedAutomorphism;

namespace {

class Criterion {
public:
    void expect(bool ok, const std::string& what) {
        if (!ok) failures_.push_back(what);
    }
    const std::vector<std::string>& failures() const { return failures_; }

private:
    std::vector<std::string> failures_;
};

std::string join(const std::vector<long>& v) {
    std::ostringstream s;
    for (std::size_t i = 0; i < v.size(); ++i) s << (i ? "," : "") << v[i];
    return "(" + s.str() + ")";
}

Algebra center_algebra(const FamilySpec& f, int D) {
    std::optional<std::vector<int>> prec;
    if (!f.order.empty()) prec = nc::parse_precedence(f.presentation, f.order);
    return Algebra(f.presentation, D + f.presentation.max_weight(), prec);
}

std::vector<GradedAutomorphism> autos(const Algebra& A, const FamilySpec& f) {
    std::vector<GradedAutomorphism> out;
    for (const auto& a : f.autos) out.push_back(ozone::verify_automorphism(A, a.images, a.name));
    return out;
}

std::string expr_of(const FamilySpec& f, const std::string& name) {
    for (const auto& c : f.expected->central)
        if (c.name == name) return c.expr;
    for (const auto& n : f.expected->normal)
        if (n.name == name) return n.expr;
    throw InvalidPresentation("no witness named " + name + " in " + f.id);
}

// Every check whose name starts with one of the prefixes exists and passed.
void expect_checks(Criterion& c, const CaseReport& r, const std::vector<std::string>& prefixes) {
    for (const auto& p : prefixes) {
        bool found = false;
        for (const auto& k : r.checks) {
            if (k.name.rfind(p, 0) != 0) continue;
            found = true;
            c.expect(k.passed, r.id + ": " + k.name + " (" + k.detail + ")");
        }
        c.expect(found, r.id + ": missing check '" + p + "'");
    }
}

void expect_case(Criterion& c, const std::string& id, const std::vector<std::string>& prefixes) {
    auto r = families::run_case(families::find_case(id));
    c.expect(r.error.empty(), id + ": " + r.error);
    expect_checks(c, r, prefixes);
}

ozone::OzoneReport sandwich(const FamilySpec& f, int D, int N, std::optional<long> rank = std::nullopt) {
    Algebra A = center_algebra(f, D);
    auto Z = central::center(A, D);
    return ozone::ozone_sandwich(A, Z, autos(A, f), N, D, rank);
}

// ---------------------------------------------------------------- criteria

void quantum_planes(Criterion& c) {
    for (int n : {3, 4}) {
        auto f = families::find_case(n == 3 ? "skew_q3" : "skew_q4");
        auto rep = sandwich(f, 2 * n, 2 * n);
        c.expect(rep.exact, "k_q[x,y], n=" + std::to_string(n) + ": sandwich not exact");
        c.expect(rep.factors() == std::vector<long>{n, n}, "k_q[x,y]: factors " + join(rep.factors()));
        auto rk = hilbert::rank_at_one(HilbertSeries::polynomial_ring(2), HilbertSeries().over(n, 2));
        c.expect(rk.rank == n * n, "rank " + rk.rank.get_str());
        c.expect(ozone::divisibility_check(rep, rk.rank.get_si()), "divisibility");
        c.expect(static_cast<long>(rep.order()) == rk.rank.get_si(), "order differs from rank");
    }
}

void heisenberg(Criterion& c) {
    auto f = families::find_case("heisenberg_m1");
    Algebra A = center_algebra(f, 6);
    AlgebraRing R(A);
    auto Z = central::center(A, 6);
    auto gens = central::subalgebra_generators(R, Z, 6);
    c.expect(gens.degrees() == std::vector<int>{2, 2, 2, 3}, "H_-1 center generator degrees");
    c.expect(central::is_central(A, A.parse(expr_of(f, "t4"))), "Omega z is not central");
    auto rep = ozone::ozone_sandwich(A, Z, {}, 2, 4);
    c.expect(rep.exact && rep.order() == 2, "H_-1 ozone group is not exact of order 2");
    for (const char* id : {"heisenberg_i", "heisenberg_prime_i"}) {
        auto g = families::find_case(id);
        auto r = sandwich(g, g.max_degree, 8);
        c.expect(r.exact && r.factors() == std::vector<long>{4}, std::string(id) + ": factors " + join(r.factors()));
    }
}

void bq(Criterion& c) {
    auto f = families::find_case("bq_m1");
    Algebra A = center_algebra(f, 4);
    c.expect(central::is_central(A, A.parse("2*x*y*z + y^3 - x^3")), "B_-1: 2xyz + y^3 - x^3 not central");
    auto rep = ozone::ozone_sandwich(A, central::center(A, 4), {}, 6, 4);
    c.expect(rep.exact && rep.order() == 1, "B_-1: ozone group is not exactly trivial");
    auto g = families::find_case("bq_z6");
    Algebra B = center_algebra(g, 6);
    auto ZB = central::center(B, 6);
    auto upper = ozone::diagonal_upper_bound(B, ZB, 12, 6);
    c.expect(upper.is_abelian() && upper.invariant_factors() == std::vector<long>{3, 3},
             "B_z6: diagonal ozone group " + join(upper.is_abelian() ? upper.invariant_factors() : std::vector<long>{}));
    auto rb = ozone::ozone_sandwich(B, ZB, {}, 12, 6);
    c.expect(rb.exact && rb.factors() == std::vector<long>{3, 3}, "B_z6: sandwich");
    c.expect(central::is_central(B, B.parse(expr_of(g, "Omega"))), "B_z6: Omega not central");
}

void sklyanin_111(Criterion& c) {
    auto f = families::find_case("sklyanin_111m1");
    Algebra A = center_algebra(f, 6);
    AlgebraRing R(A);
    auto Z = central::center(A, 6);
    c.expect(central::subalgebra_generators(R, Z, 6).degrees() == std::vector<int>{2, 2, 2, 3},
             "S(1,1,-1): center generator degrees");
    std::vector<central::SubGen> named;
    for (const char* n : {"t1", "t2", "t3", "g"}) {
        auto e = A.parse(expr_of(f, n));
        int d = *A.degree(e);
        named.push_back({n, d, A.coords(e, d), A.to_string(e)});
    }
    auto gens = central::named_generators(R, named, 6);
    c.expect(central::generates(R, gens, Z, 6), "S(1,1,-1): t1, t2, t3, g do not generate the center");
    auto rels = central::find_relations(R, gens, 6);
    auto at6 = rels.at_degree(6);
    c.expect(rels.relations.size() == 1 && at6.size() == 1, "S(1,1,-1): expected exactly one relation");
    if (at6.size() == 1)
        c.expect(at6[0].proportional_to({{3, 0, 0, 0}, {0, 3, 0, 0}, {0, 0, 3, 0}, {1, 1, 1, 0}, {0, 0, 0, 2}},
                                        {1, 1, 1, -5, -1}),
                 "S(1,1,-1): relation " + at6[0].to_string(rels.names));
    auto rk = hilbert::rank_at_one(HilbertSeries::polynomial_ring(3), HilbertSeries::parse(*f.expected->hz));
    c.expect(rk.rank == 4, "S(1,1,-1): rank " + rk.rank.get_str());
    Algebra A3 = center_algebra(f, 3);
    c.expect(ozone::diagonal_upper_bound(A3, central::center(A3, 3), 6, 3).order() == 1,
             "S(1,1,-1): diagonal upper bound at N=6, D=3 is not trivial");
    expect_case(c, "sklyanin_111m1", {"no non-central normal elements up to degree 4"});
}

void sklyanin_skew(Criterion& c) {
    auto f = families::find_case("sklyanin_10m1");
    Algebra A = center_algebra(f, 4);
    std::vector<nc::FreeElt> basis;
    for (const auto& b : f.expected->skew->basis) basis.push_back(A.parse(b));
    auto sp = ozone::skew_recognition(A, basis, 4);
    const CycNum xi = CycNum::zeta(3);
    c.expect(sp.pbw, "S(1,0,-1): not PBW in X, Y, Z");
    c.expect(sp.p[0][1] == xi && sp.p[1][2] == xi && sp.p[0][2] == xi.inverse(), "S(1,0,-1): skew parameters");
    auto g = families::find_case("sklyanin_10z6");
    Algebra B = center_algebra(g, 4);
    for (const char* n : {"x3", "Omega1", "Omega2"})
        c.expect(central::is_central(B, B.parse(expr_of(g, n))), std::string("S(1,0,z6): ") + n + " not central");
    auto rep = ozone::ozone_sandwich(B, central::center(B, 4), autos(B, g), 6, 4);
    c.expect(rep.exact && rep.factors() == std::vector<long>{3}, "S(1,0,z6): factors " + join(rep.factors()));
}

void sklyanin_s3(Criterion& c) {
    auto f = families::find_case("sklyanin_s3_m1");
    Algebra A = center_algebra(f, 4);
    auto tau = ozone::verify_automorphism(A, {{"x", "z"}, {"y", "x"}, {"z", "y"}}, "tau");
    auto rho = ozone::verify_automorphism(A, {{"x", "z3*x"}, {"y", "z3*y"}, {"z", "z3*z"}}, "rho");
    auto omega = A.parse("x*y + y*z + z*x");
    auto phi = A.parse("x*y + z3*y*z + z3^2*z*x");
    c.expect(central::is_normal(A, omega) && central::is_normal(A, phi), "S_-1: Omega or Phi not normal");
    auto eo = central::eta_of_normal(A, omega);
    auto ep = central::eta_of_normal(A, phi);
    // tau^{-m} with m = 2 is tau
    c.expect(eo == tau, "S_-1: eta_Omega = " + eo.to_string(A));
    c.expect(ep == rho.compose(A, tau), "S_-1: eta_Phi = " + ep.to_string(A));
    auto G = FiniteGroupTable::closure(A, {eo, ep, tau, rho});
    c.expect(G.is_abelian() && G.invariant_factors() == std::vector<long>{3, 3}, "S_-1: closure is not (3,3)");
}

void heisenberg_invariants(Criterion& c) {
    auto f = families::find_case("heisenberg_m1");
    Algebra A = center_algebra(f, 6);
    auto rep = ozone::ozone_sandwich(A, central::center(A, 6), {}, 2, 6);
    const auto& G = rep.upper.elements();
    auto F = central::fixed_ring(A, G, 6);
    for (int d = 0; d <= 6; ++d)
        c.expect(central::molien_average(A, G, d) == CycNum(F.dims()[static_cast<std::size_t>(d)]),
                 "H_-1: Molien mismatch in degree " + std::to_string(d));
    auto rk = hilbert::rank_at_one(HilbertSeries::polynomial_ring(3), HilbertSeries::parse(f.expected->fixed->series));
    c.expect(rk.rank == 2 && static_cast<long>(rep.order()) == 2, "H_-1: rank over A' is " + rk.rank.get_str());
    auto rc = smash::rank_multiplicativity_check(HilbertSeries::polynomial_ring(3), rep.order(),
                                                 HilbertSeries::parse(*f.expected->hz), 4);
    c.expect(rc.ok && rc.computed == 8, "H_-1: rank of A # k Oz over Z is " + rc.computed.get_str());
    smash::SmashAlgebra S(A, rep.upper);
    auto pres = smash::smash_center_presentation(S, 4);
    auto degrees = pres.gens.degrees();
    std::sort(degrees.begin(), degrees.end());
    c.expect(degrees == std::vector<int>{1, 2, 2, 2}, "H_-1: smash center generator degrees");
    expect_case(c, "heisenberg_m1",
                {"smash center generators", "smash center relation in degree 4", "fixed ring generators",
                 "fixed ring relation", "rank over the fixed ring equals |Oz|", "rank of A # k Oz over Z(A)"});
}

void down_up(Criterion& c) {
    auto f = families::find_case("downup_01");
    Algebra A = center_algebra(f, 4);
    AlgebraRing R(A);
    auto Z = central::center(A, 4);
    auto rep = ozone::ozone_sandwich(A, Z, {}, 4, 4);
    c.expect(rep.exact && rep.order() == 2, "A(0,1): Oz not exact of order 2");
    auto w = A.parse("x*y - y*x");
    c.expect(central::is_normal(A, w), "A(0,1): xy - yx not normal");
    if (central::is_normal(A, w)) {
        auto eta = central::eta_of_normal(A, w);
        c.expect(!eta.is_identity() && rep.upper.find(eta).has_value(), "A(0,1): eta_{xy-yx} does not generate Oz");
    }
    c.expect(central::subalgebra_generators(R, Z, 4).degrees() == std::vector<int>{2, 2, 2}, "A(0,1): center degrees");
    auto rk = hilbert::rank_at_one(HilbertSeries::parse("1/((1-t)^2*(1-t^2))"), HilbertSeries::parse("1/(1-t^2)^3"));
    c.expect(rk.rank == 4, "A(0,1): rank");
    expect_case(c, "downup_01", {"smash center relation in degree 4", "ozone sandwich is exact"});
    auto g = families::find_case("downup_0m1");
    auto r2 = sandwich(g, 8, 4);
    c.expect(r2.exact && r2.factors() == std::vector<long>{4, 2}, "A(0,-1): factors " + join(r2.factors()));
    auto rk2 = hilbert::rank_at_one(HilbertSeries::parse("1/((1-t)^2*(1-t^2))"), HilbertSeries::parse(*g.expected->hz));
    c.expect(rk2.rank == 16, "A(0,-1): rank " + rk2.rank.get_str());
    expect_case(c, "downup_0m1", {"center relation in degree 16"});
}

void realizations(Criterion& c) {
    auto f = families::find_case("downup_2m1");
    Algebra A = center_algebra(f, 4);
    c.expect(central::is_central(A, A.parse("x*y - y*x")), "A(2,-1): z not central");
    std::vector<nc::FreeElt> t{A.parse("x"), A.parse("x*y - y*x"), A.parse("y")};
    std::vector<std::vector<CycNum>> p(3, std::vector<CycNum>(3, CycNum(1)));
    c.expect(ozone::filtered_realization_check(A, t, p).ok, "A(2,-1): realization in x, z, y");
    expect_case(c, "downup_2m1", {"filtered realization"});
    auto g = families::find_case("downup_01");
    c.expect(g.expected->realizations.size() == 2, "A(0,1): expected two realizations");
    expect_case(c, "downup_01", {"filtered realization"});
}

void cross_cutting(Criterion& c) {
    auto report = families::run_corpus(families::corpus_ids());
    for (const auto& r : report.cases) {
        c.expect(r.passed(), r.id + ": case failed" + (r.error.empty() ? "" : " (" + r.error + ")"));
        for (const auto& k : r.checks) c.expect(k.passed, r.id + ": " + k.name + " (" + k.detail + ")");
        const auto f = families::find_case(r.id);
        if (f.pi && f.expected && !f.ore) expect_checks(c, r, {"smash center cross-check", "Molien identity for the ozone group"});
        if (f.pi && f.expected && f.expected->rank) expect_checks(c, r, {"ozone order divides the rank"});
        expect_checks(c, r, {"dimensions match the declared series"});
        std::optional<std::vector<int>> prec;
        if (!f.order.empty()) prec = nc::parse_precedence(f.presentation, f.order);
        Algebra A(f.presentation, 6, prec);
        c.expect(A.basis().dims() == oracle::dims(f.presentation, 6), r.id + ": dims disagree with the oracle");
    }
    for (const auto& r : report.cases) {
        if (r.id == "tensor_q3_t") c.expect(r.ozone_exact && r.ozone_order == 9, "tensor: ozone order");
        if (r.id == "ore_swap") expect_checks(c, r, {"center equals Z(A)^<sigma>[t^n]"});
        if (r.id == "ore_diag") expect_checks(c, r, {"center differs from Z(A)^<sigma>[t^n]"});
        bool has_eta = false;
        for (const auto& k : r.checks) has_eta = has_eta || k.name.rfind("eta is multiplicative", 0) == 0;
        if (!families::find_case(r.id).expected->normal.empty())
            c.expect(has_eta, r.id + ": no eta multiplicativity check");
    }
}

}  // namespace

int main() {
    const std::vector<std::pair<std::string, std::function<void(Criterion&)>>> criteria = {
        {"quantum planes: exact (n,n), rank n^2, divisibility with equality", quantum_planes},
        {"Heisenberg: center degrees, Omega z central, ozone orders 2 and 4", heisenberg},
        {"B_q: central Omega, trivial ozone at -1, (3,3) at z6", bq},
        {"S(1,1,-1): center, single degree-6 relation, rank 4, trivial ozone", sklyanin_111},
        {"S(1,0,xi): skew parameters, central witnesses, ozone (3)", sklyanin_skew},
        {"S_-1: normal Omega and Phi, closure (3,3)", sklyanin_s3},
        {"H_-1: fixed ring, smash center, ranks 2 and 8", heisenberg_invariants},
        {"down-up A(0,1) and A(0,-1)", down_up},
        {"filtered skew realizations", realizations},
        {"cross-cutting corpus properties", cross_cutting},
    };
    int failed = 0;
    for (std::size_t i = 0; i < criteria.size(); ++i) {
        Criterion c;
        try {
            criteria[i].second(c);
        } catch (const std::exception& e) {
            c.expect(false, std::string("exception: ") + e.what());
        }
        bool ok = c.failures().empty();
        failed += ok ? 0 : 1;
        std::cout << (ok ? "PASS" : "FAIL") << " criterion " << i + 1 << ": " << criteria[i].first << "\n";
        for (const auto& f : c.failures()) std::cout << "    " << f << "\n";
    }
    std::cout << (criteria.size() - static_cast<std::size_t>(failed)) << "/" << criteria.size() << " criteria passed\n";
    return failed == 0 ? 0 : 1;
}
