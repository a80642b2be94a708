#include "ozonelab/families.hpp"

#include "ozonelab/central.hpp"
#include "ozonelab/errors.hpp"
#include "ozonelab/smash.hpp"

#include <algorithm>
#include <atomic>
#include <map>
#include <numeric>
#include <thread>

namespace ozonelab::families {

namespace {

using nc::Algebra;
using nc::FreeElt;
using ozone::FiniteGroupTable;
using ozone::GradedAutomorphism;

constexpr const char* kSkewCitation = "skew polynomial rings: Oz is generated by the eta-maps of the generators";
constexpr const char* kDivisibilityCitation = "the order of the ozone group divides the rank over the center";
constexpr const char* kRankCitation = "rank over the center is (h_A / h_Z)(1)";
constexpr const char* kSmashCitation = "center of A # k Oz is spanned by a # g with a fixed by Oz and eta_a = g";
constexpr const char* kMolienCitation = "Molien: dim (A^G)_d is the average trace of G on A_d";
constexpr const char* kEtaCitation = "eta_{fg} = eta_g o eta_f for normal f, g in a domain";
constexpr const char* kOreCitation = "center of A[t; sigma] is Z(A)^<sigma>[t^n] when no power of sigma is X-inner";
constexpr const char* kRealizationCitation = "filtered skew polynomial realization";
constexpr const char* kBasisCitation = "declared Hilbert series";

std::string lit(const CycNum& c) { return "(" + c.to_string() + ")"; }

std::string word_power(const std::string& name, int e) {
    return e == 1 ? name : name + "^" + std::to_string(e);
}

nc::AlgebraPresentation presentation(const std::string& label, const std::vector<std::string>& names,
                                     const std::vector<std::string>& relations,
                                     const std::vector<std::pair<std::string, CycNum>>& params,
                                     const std::string& hilbert) {
    nc::AlgebraPresentation p;
    p.label = label;
    for (const auto& n : names) p.generators.push_back({n, 1});
    p.params = params;
    std::map<std::string, CycNum> scalars(params.begin(), params.end());
    for (const auto& r : relations) p.relations.push_back(nc::parse_element(r, p.generators, scalars));
    p.declared_hilbert = hilbert::HilbertSeries::parse(hilbert);
    p.validate();
    return p;
}

std::vector<std::pair<std::string, std::string>> params_text(const std::vector<std::pair<std::string, CycNum>>& ps) {
    std::vector<std::pair<std::string, std::string>> out;
    for (const auto& [k, v] : ps) out.emplace_back(k, v.to_string());
    return out;
}

std::optional<int> order_of(const CycNum& q) {
    if (q.is_zero()) return std::nullopt;
    return cyclo::root_order(q);
}

CycNum cube(const CycNum& a) { return a * a * a; }

std::vector<long> cyclic_product(long a, long b) {
    long g = std::gcd(a, b);
    std::vector<long> out;
    if (a / g * b > 1) out.push_back(a / g * b);
    if (g > 1) out.push_back(g);
    return out;
}

}  // namespace

std::string family_name(Family f) {
    switch (f) {
        case Family::Skew: return "skew";
        case Family::Heisenberg: return "heisenberg";
        case Family::HeisenbergPrime: return "heisenberg_prime";
        case Family::Bq: return "bq";
        case Family::Sklyanin: return "sklyanin";
        case Family::SklyaninS3: return "sklyanin_s3";
        case Family::DownUp: return "downup";
        case Family::Tensor: return "tensor";
        case Family::Ore: return "ore";
    }
    return "unknown";
}

std::vector<std::string> default_names(int n) {
    static const std::vector<std::string> xyz = {"x", "y", "z"};
    if (n <= 3) return std::vector<std::string>(xyz.begin(), xyz.begin() + n);
    std::vector<std::string> out;
    for (int i = 1; i <= n; ++i) out.push_back("x" + std::to_string(i));
    return out;
}

spec::SpecFile FamilySpec::to_spec_file() const {
    spec::SpecFile s;
    s.presentation = presentation;
    s.conductor = conductor;
    s.order = order;
    s.autos = autos;
    s.params = params;
    for (const auto& r : presentation.relations) s.relation_texts.push_back(r.to_string(presentation.generators));
    return s;
}

Algebra FamilySpec::build() const {
    int top = completion_degree.value_or(max_degree + presentation.max_weight());
    std::optional<std::vector<int>> precedence;
    if (!order.empty()) precedence = nc::parse_precedence(presentation, order);
    return Algebra(presentation, top, precedence);
}

// ---------------------------------------------------------------- constructors

FamilySpec make_skew(const std::vector<std::vector<CycNum>>& p, const std::string& id, std::vector<std::string> names) {
    const int n = static_cast<int>(p.size());
    if (n == 0) throw NotAntisymmetric("empty parameter matrix");
    for (const auto& row : p)
        if (static_cast<int>(row.size()) != n) throw NotAntisymmetric("parameter matrix is not square");
    for (int i = 0; i < n; ++i) {
        if (!p[i][i].is_one()) throw NotAntisymmetric("diagonal entry " + std::to_string(i + 1) + " is not 1");
        for (int j = 0; j < n; ++j)
            if (p[i][j].is_zero() || !(p[i][j] * p[j][i]).is_one())
                throw NotAntisymmetric("p[" + std::to_string(i + 1) + "][" + std::to_string(j + 1) +
                                       "] * p[" + std::to_string(j + 1) + "][" + std::to_string(i + 1) + "] != 1");
    }
    if (names.empty()) names = default_names(n);
    if (static_cast<int>(names.size()) != n) throw InvalidPresentation("one name per generator is required");

    FamilySpec f;
    f.id = id;
    f.family = Family::Skew;
    std::vector<std::string> rels;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) {
            rels.push_back(names[j] + "*" + names[i] + " - " + lit(p[i][j]) + "*" + names[i] + "*" + names[j]);
            f.params.emplace_back("p" + std::to_string(i + 1) + std::to_string(j + 1), p[i][j].to_string());
            if (!cyclo::root_order(p[i][j])) f.pi = false;
        }
    f.presentation = presentation(id, names, rels, {}, "1/((1-t)^" + std::to_string(n) + ")");
    ExpectedResults e;
    e.citation = kSkewCitation;
    for (int i = 0; i < n; ++i) {
        AutoSpec a;
        a.name = "eta_" + names[i];
        for (int j = 0; j < n; ++j) a.images.emplace_back(names[j], lit(p[i][j]) + "*" + names[j]);
        e.ozone_generators.push_back(std::move(a));
        e.normal.push_back({names[i], names[i], e.ozone_generators.back().images});
    }
    f.expected = std::move(e);
    return f;
}

FamilySpec make_heisenberg(const CycNum& q, const std::string& id) {
    auto l = order_of(q);
    if (!l || *l < 2 || *l == 3) throw BadOrder("q must be a primitive root of unity of order at least 2, other than 3");
    FamilySpec f;
    f.id = id;
    f.family = Family::Heisenberg;
    std::vector<std::pair<std::string, CycNum>> ps = {{"q", q}};
    f.params = params_text(ps);
    f.presentation = presentation(id, {"x", "y", "z"}, {"z*x - q*x*z", "y*z - q*z*y", "x*y - q*y*x - z^2"}, ps,
                                  "1/((1-t)^3)");
    ExpectedResults e;
    e.citation = "quantum Heisenberg algebra: center generated by x^l, y^l, z^l and Omega z; Oz is Z_l, times Z_3 when 3 | l";
    e.central = {{"t1", word_power("x", *l)},
                 {"t2", word_power("y", *l)},
                 {"t3", word_power("z", *l)},
                 {"t4", "(x*y - " + lit(q.pow(-2)) + "*y*x)*z"}};
    std::vector<int> degrees = {*l, *l, *l, 3};
    std::sort(degrees.begin(), degrees.end());
    e.center_degrees = degrees;
    e.ozone_factors = *l % 3 == 0 ? cyclic_product(*l, 3) : cyclic_product(*l, 1);
    f.max_degree = std::max(4, *l);
    f.expected = std::move(e);
    return f;
}

FamilySpec make_heisenberg_prime(const CycNum& q, const std::string& id) {
    auto l = order_of(q);
    if (!l || *l < 2 || *l == 3) throw BadOrder("q must be a primitive root of unity of order at least 2, other than 3");
    FamilySpec f;
    f.id = id;
    f.family = Family::HeisenbergPrime;
    std::vector<std::pair<std::string, CycNum>> ps = {{"q", q}};
    f.params = params_text(ps);
    f.presentation = presentation(id, {"x", "y", "z"}, {"x*z - q*z*x", "z*y - q*y*z", "x*y - q*y*x - z^2"}, ps,
                                  "1/((1-t)^3)");
    ExpectedResults e;
    e.citation = "twisted quantum Heisenberg algebra: Oz is cyclic of order l";
    e.central = {{"t1", word_power("x", *l)},
                 {"t2", word_power("y", *l)},
                 {"t3", word_power("z", *l)},
                 {"t4", "(x*y - " + lit(q.pow(2)) + "*y*x)*" + word_power("z", *l - 1)}};
    e.center_degrees = std::vector<int>{*l, *l, *l, *l + 1};
    e.ozone_factors = cyclic_product(*l, 1);
    f.max_degree = *l + 1;
    f.expected = std::move(e);
    return f;
}

FamilySpec make_bq(const CycNum& q, const std::string& id) {
    auto n = order_of(q);
    if (!n || *n == 1 || *n == 3) throw BadOrder("q must be a root of unity of order other than 1 and 3");
    FamilySpec f;
    f.id = id;
    f.family = Family::Bq;
    std::vector<std::pair<std::string, CycNum>> ps = {{"q", q}};
    f.params = params_text(ps);
    f.presentation = presentation(id, {"x", "y", "z"},
                                  {"x*y - q*y*x", "z*x - q*x*z - y^2", "z*y - " + lit(q.inverse()) + "*y*z - x^2"}, ps,
                                  "1/((1-t)^3)");
    CycNum cy = q * (q.pow(-2) - q).inverse();
    CycNum cx = (q.pow(2) - q.inverse()).inverse();
    ExpectedResults e;
    e.citation = "B_q: Omega is central; Oz is trivial when 3 does not divide n and (Z_3)^2 otherwise";
    e.central = {{"Omega", "x*y*z - " + lit(cy) + "*y^3 - " + lit(cx) + "*x^3"},
                 {"xn", word_power("x", *n)},
                 {"yn", word_power("y", *n)},
                 {"zn", word_power("z", *n)}};
    std::vector<int> degrees = {3, *n, *n, *n};
    std::sort(degrees.begin(), degrees.end());
    e.center_degrees = degrees;
    e.ozone_factors = *n % 3 == 0 ? std::vector<long>{3, 3} : std::vector<long>{};
    f.max_degree = std::max(4, *n);
    f.expected = std::move(e);
    return f;
}

FamilySpec make_sklyanin(const CycNum& a, const CycNum& b, const CycNum& c, const std::string& id) {
    int zeros = static_cast<int>(a.is_zero()) + static_cast<int>(b.is_zero()) + static_cast<int>(c.is_zero());
    if (zeros >= 2) throw DegenerateParameters("two of a, b, c vanish");
    if (cube(a) == cube(b) && cube(b) == cube(c)) throw DegenerateParameters("a^3 = b^3 = c^3");
    FamilySpec f;
    f.id = id;
    f.family = Family::Sklyanin;
    std::vector<std::pair<std::string, CycNum>> ps = {{"a", a}, {"b", b}, {"c", c}};
    f.params = params_text(ps);
    f.presentation = presentation(id, {"x", "y", "z"},
                                  {"a*x*y + b*y*x + c*z^2", "a*y*z + b*z*y + c*x^2", "a*z*x + b*x*z + c*y^2"}, ps,
                                  "1/((1-t)^3)");
    ExpectedResults e;
    e.citation = "Sklyanin algebras: the cubic element g is central";
    CycNum c1 = c * (cube(c) - cube(b)), c2 = b * (cube(c) - cube(a)), c3 = a * (cube(b) - cube(c)),
           c4 = c * (cube(a) - cube(c));
    if (!(c1.is_zero() && c2.is_zero() && c3.is_zero() && c4.is_zero()))
        e.central.push_back({"g", lit(c1) + "*y^3 + " + lit(c2) + "*y*x*z + " + lit(c3) + "*x*y*z + " + lit(c4) + "*x^3"});
    f.expected = std::move(e);
    return f;
}

FamilySpec make_sklyanin_s3(const CycNum& alpha, const std::string& id) {
    if (alpha.is_zero()) throw DegenerateParameters("alpha = 0");
    if (cube(alpha).is_one()) throw DegenerateParameters("alpha^3 = 1");
    FamilySpec f;
    f.id = id;
    f.family = Family::SklyaninS3;
    std::vector<std::pair<std::string, CycNum>> ps = {{"alpha", alpha}};
    f.params = params_text(ps);
    f.presentation = presentation(id, {"x", "y", "z"}, {"y*x - alpha*z^2", "x*z - alpha*y^2", "z*y - alpha*x^2"}, ps,
                                  "1/((1-t)^3)");
    f.autos = {{"tau", {{"x", "z"}, {"y", "x"}, {"z", "y"}}}, {"rho", {{"x", "z3*x"}, {"y", "z3*y"}, {"z", "z3*z"}}}};
    ExpectedResults e;
    e.citation = "S_alpha: Omega and Phi are normal; Oz = <tau, rho> = Z_3 x Z_3";
    e.normal = {{"Omega", "x*y + y*z + z*x", {}}, {"Phi", "x*y + z3*y*z + z3^2*z*x", {}}};
    if (alpha == CycNum(-1)) {
        e.normal[0].eta = {{"x", "z"}, {"y", "x"}, {"z", "y"}};
        e.normal[1].eta = {{"x", "z3*z"}, {"y", "z3*x"}, {"z", "z3*y"}};
        e.ozone_factors = std::vector<long>{3, 3};
        e.ozone_generators = f.autos;
    }
    f.max_degree = 6;
    f.expected = std::move(e);
    return f;
}

FamilySpec make_downup(const CycNum& alpha, const CycNum& beta, const CycNum& omega1, const CycNum& omega2,
                       const std::string& id) {
    if (beta.is_zero()) throw DegenerateParameters("beta = 0");
    if (omega1 + omega2 != alpha || omega1 * omega2 != -beta)
        throw DegenerateParameters("omega1, omega2 are not the roots of w^2 - alpha w - beta");
    FamilySpec f;
    f.id = id;
    f.family = Family::DownUp;
    std::vector<std::pair<std::string, CycNum>> ps = {{"alpha", alpha}, {"beta", beta}};
    f.params = params_text(ps);
    f.params.emplace_back("omega1", omega1.to_string());
    f.params.emplace_back("omega2", omega2.to_string());
    f.presentation = presentation(id, {"x", "y"}, {"x^2*y - alpha*x*y*x - beta*y*x^2", "x*y^2 - alpha*y*x*y - beta*y^2*x"},
                                  ps, "1/((1-t)^2*(1-t^2))");
    auto o1 = order_of(omega1), o2 = order_of(omega2);
    f.pi = o1 && o2 && omega1 != omega2;
    std::string w1 = "x*y - " + lit(omega1) + "*y*x";
    ExpectedResults e;
    e.citation = "down-up algebras: Omega_i = xy - omega_i yx are normal; iterated Ore realizations";
    e.normal = {{"Omega1", w1, {{"x", lit(omega2) + "*x"}, {"y", lit(omega2.inverse()) + "*y"}}},
                {"Omega2", "x*y - " + lit(omega2) + "*y*x", {{"x", lit(omega1) + "*x"}, {"y", lit(omega1.inverse()) + "*y"}}}};
    e.realizations = {
        {"x < Omega1 < y", {"x", w1, "y"}, {lit(omega2.inverse()), lit(omega1.inverse()), lit(omega2.inverse())}},
        {"y < Omega1 < x", {"y", w1, "x"}, {lit(omega2), lit(omega1), lit(omega2)}}};
    f.max_degree = 4;
    f.expected = std::move(e);
    return f;
}

FamilySpec make_tensor(const FamilySpec& a, const FamilySpec& b, const std::string& id) {
    FamilySpec f;
    f.id = id;
    f.family = Family::Tensor;
    f.presentation = nc::tensor_product(a.presentation, b.presentation);
    f.presentation.label = id;
    f.params = a.params;
    f.params.insert(f.params.end(), b.params.begin(), b.params.end());
    f.pi = a.pi && b.pi;
    f.max_degree = std::max(a.max_degree, b.max_degree);
    if (a.expected && b.expected && a.expected->ozone_factors && b.expected->ozone_factors) {
        ExpectedResults e;
        e.citation = "Oz of a tensor product is the product of the ozone groups";
        std::vector<long> all = *a.expected->ozone_factors;
        all.insert(all.end(), b.expected->ozone_factors->begin(), b.expected->ozone_factors->end());
        e.ozone_factors = all;
        f.expected = std::move(e);
    }
    return f;
}

FamilySpec make_ore(const FamilySpec& a, const std::vector<std::string>& sigma, int order, int t_weight,
                    const std::string& id) {
    if (sigma.size() != a.presentation.generators.size())
        throw NonGradedTwist("twist must give an image for every generator");
    if (order < 1) throw InvalidPresentation("order of the twist must be positive");
    std::map<std::string, CycNum> scalars(a.presentation.params.begin(), a.presentation.params.end());
    std::vector<FreeElt> images;
    for (const auto& s : sigma) images.push_back(nc::parse_element(s, a.presentation.generators, scalars));
    FamilySpec f;
    f.id = id;
    f.family = Family::Ore;
    f.presentation = nc::ore_extension(a.presentation, images, t_weight);
    f.presentation.label = id;
    if (a.presentation.declared_hilbert) f.presentation.declared_hilbert = a.presentation.declared_hilbert->over(t_weight);
    f.params = a.params;
    f.pi = a.pi;
    f.max_degree = 6;
    f.ore = OreData{a.presentation, sigma, order, true};
    return f;
}

// ---------------------------------------------------------------- corpus

std::vector<FamilySpec> corpus() {
    const CycNum w3 = CycNum::zeta(3), w4 = CycNum::zeta(4), w6 = CycNum::zeta(6);
    std::vector<FamilySpec> out;

    {
        FamilySpec f = make_skew({{1, w3}, {w3.inverse(), 1}}, "skew_q3");
        f.max_degree = 4;
        f.conductor = 3;
        auto& e = *f.expected;
        e.ozone_factors = std::vector<long>{3, 3};
        e.center_degrees = std::vector<int>{3, 3};
        e.central = {{"x3", "x^3"}, {"y3", "y^3"}};
        e.hz = "1/((1-t^3)^2)";
        e.rank = 9;
        out.push_back(std::move(f));
    }
    {
        FamilySpec f = make_skew({{1, w4}, {w4.inverse(), 1}}, "skew_q4");
        f.max_degree = 4;
        f.conductor = 4;
        auto& e = *f.expected;
        e.ozone_factors = std::vector<long>{4, 4};
        e.center_degrees = std::vector<int>{4, 4};
        e.central = {{"x4", "x^4"}, {"y4", "y^4"}};
        e.hz = "1/((1-t^4)^2)";
        e.rank = 16;
        out.push_back(std::move(f));
    }
    {
        FamilySpec f = make_skew({{1, 1, 1}, {1, 1, 1}, {1, 1, 1}}, "skew_comm3");
        f.max_degree = 3;
        auto& e = *f.expected;
        e.ozone_factors = std::vector<long>{};
        e.center_degrees = std::vector<int>{1, 1, 1};
        e.hz = "1/((1-t)^3)";
        e.rank = 1;
        out.push_back(std::move(f));
    }
    {
        // yx = w xy, zy = w yz, xz = w zx
        FamilySpec f = make_skew({{1, w3, w3.inverse()}, {w3.inverse(), 1, w3}, {w3, w3.inverse(), 1}}, "skew_cy3");
        f.max_degree = 4;
        auto& e = *f.expected;
        e.citation = "skew polynomial ring of CY type: Oz(S_p) = (Z_n)^2";
        e.ozone_factors = std::vector<long>{3, 3};
        e.center_degrees = std::vector<int>{3, 3, 3, 3};
        e.central = {{"x3", "x^3"}, {"y3", "y^3"}, {"z3", "z^3"}, {"xyz", "x*y*z"}};
        e.hz = "(1-t^9)/((1-t^3)^4)";
        e.rank = 9;
        out.push_back(std::move(f));
    }
    {
        FamilySpec f = make_heisenberg(CycNum(-1), "heisenberg_m1");
        f.max_degree = 6;
        f.conductor = 2;
        auto& e = *f.expected;
        e.hz = "(1-t^6)/((1-t^2)^3*(1-t^3))";
        e.rank = 4;
        e.center_relation = RelationExpectation{6, {{0, 0, 0, 2}, {1, 1, 1, 0}, {0, 0, 3, 0}}, {"1", "4", "-1"}};
        e.normal = {{"z", "z", {{"x", "-x"}, {"y", "-y"}, {"z", "z"}}}};
        ImageList phi = {{"x", "-x"}, {"y", "-y"}, {"z", "z"}};
        e.smash = SmashExpectation{{{"s1", "x^2", {}}, {"s2", "y^2", {}}, {"s3", "z", phi}, {"s4", "y*x - x*y", phi}},
                                   {2, 2, 1, 2},
                                   {4, {{0, 0, 4, 0}, {1, 1, 0, 0}, {0, 0, 0, 2}}, {"1", "-4", "-1"}}};
        e.fixed = FixedRingExpectation{{{"u1", "x^2"}, {"u2", "y^2"}, {"u3", "z"}, {"u4", "y*x - x*y"}},
                                       {4, {{0, 0, 4, 0}, {1, 1, 0, 0}, {0, 0, 0, 2}}, {"1", "-4", "-1"}},
                                       "(1-t^4)/((1-t)*(1-t^2)^3)",
                                       2};
        out.push_back(std::move(f));
    }
    {
        FamilySpec f = make_heisenberg(w4, "heisenberg_i");
        f.max_degree = 4;
        out.push_back(std::move(f));
    }
    {
        FamilySpec f = make_heisenberg_prime(w4, "heisenberg_prime_i");
        f.max_degree = 5;
        out.push_back(std::move(f));
    }
    {
        FamilySpec f = make_bq(CycNum(-1), "bq_m1");
        f.max_degree = 4;
        f.conductor = 6;
        out.push_back(std::move(f));
    }
    {
        FamilySpec f = make_bq(w6, "bq_z6");
        f.max_degree = 6;
        out.push_back(std::move(f));
    }
    {
        FamilySpec f = make_sklyanin(1, 1, -1, "sklyanin_111m1");
        f.order = {"z", "y", "x"};
        f.max_degree = 6;
        f.conductor = 6;
        auto& e = *f.expected;
        e.citation = "S(1,1,-1): center k[t1,t2,t3,g]/(t1^3+t2^3+t3^3-5t1t2t3-g^2), rank 4, Oz trivial";
        NamedElement g_general = e.central.front();
        g_general.name = "g_abc";
        e.central = {{"t1", "x^2"}, {"t2", "y^2"}, {"t3", "z^2"}, {"g", "x^3 - y^3 - x*y*z + y*x*z"}, g_general};
        e.center_degrees = std::vector<int>{2, 2, 2, 3};
        e.center_relation = RelationExpectation{
            6, {{3, 0, 0, 0}, {0, 3, 0, 0}, {0, 0, 3, 0}, {1, 1, 1, 0}, {0, 0, 0, 2}}, {"1", "1", "1", "-5", "-1"}};
        e.hz = "(1-t^6)/((1-t^2)^3*(1-t^3))";
        e.rank = 4;
        e.ozone_factors = std::vector<long>{};
        e.no_noncentral_normal_upto = 4;
        out.push_back(std::move(f));
    }
    {
        FamilySpec f = make_sklyanin(1, 0, -1, "sklyanin_10m1");
        f.autos = {{"cyc", {{"x", "y"}, {"y", "z"}, {"z", "x"}}}};
        f.max_degree = 4;
        auto& e = *f.expected;
        e.citation = "S(1,0,-1) is skew in X, Y, Z with YX = xi XY, ZY = xi YZ, XZ = xi ZX";
        e.skew = SkewExpectation{{"x + y + z", "x + z3*y + z3^2*z", "x + z3^2*y + z3*z"}, {"z3", "z3^2", "z3"}};
        e.ozone_factors = std::vector<long>{3, 3};
        out.push_back(std::move(f));
    }
    {
        FamilySpec f = make_sklyanin(1, 0, w6, "sklyanin_10z6");
        f.autos = {{"cyc", {{"x", "y"}, {"y", "z"}, {"z", "x"}}}};
        f.max_degree = 4;
        auto& e = *f.expected;
        e.citation = "S(1,0,omega): x^3, Omega_1, Omega_2 are central and Oz = Z_3";
        CycNum xi = -w6;
        e.central.push_back({"x3", "x^3"});
        e.central.push_back({"Omega1", "x*z*y + y*x*z + z*y*x"});
        e.central.push_back({"Omega2", "x^2*y + x^2*z + " + lit(xi) + "*(z^2*x + y^2*x) + " + lit(xi * xi) +
                                           "*(z^2*y + y^2*z)"});
        e.ozone_factors = std::vector<long>{3};
        out.push_back(std::move(f));
    }
    out.push_back(make_sklyanin_s3(CycNum(-1), "sklyanin_s3_m1"));
    {
        FamilySpec f = make_downup(0, 1, 1, -1, "downup_01");
        f.conductor = 4;
        f.max_degree = 4;
        auto& e = *f.expected;
        e.citation = "A(0,1): Z = k[x^2, y^2, xy+yx], rank 4, Oz = Z_2 generated by eta_{xy-yx}";
        e.ozone_factors = std::vector<long>{2};
        e.center_degrees = std::vector<int>{2, 2, 2};
        e.central = {{"t1", "x^2"}, {"t2", "y^2"}, {"t3", "x*y + y*x"}};
        e.hz = "1/((1-t^2)^3)";
        e.rank = 4;
        ImageList mu = {{"x", "-x"}, {"y", "-y"}};
        e.smash = SmashExpectation{
            {{"t1", "x^2", {}}, {"t2", "y^2", {}}, {"t3", "x*y + y*x", {}}, {"t4", "x*y - y*x", mu}},
            {2, 2, 2, 2},
            {4, {{0, 0, 0, 2}, {0, 0, 2, 0}, {1, 1, 0, 0}}, {"1", "-1", "4"}}};
        out.push_back(std::move(f));
    }
    {
        FamilySpec f = make_downup(0, -1, w4, -w4, "downup_0m1");
        f.conductor = 4;
        f.max_degree = 8;
        f.completion_degree = 17;
        auto& e = *f.expected;
        e.citation = "A(0,-1): Z generated by x^4, y^4, Omega_1 Omega_2, Omega_1^4; rank 16; Oz = Z_4 x Z_2";
        e.ozone_factors = std::vector<long>{4, 2};
        e.center_degrees = std::vector<int>{4, 4, 4, 8};
        std::string o1 = "(x*y - z4*y*x)", o2 = "(x*y + z4*y*x)";
        e.central = {{"x4", "x^4"}, {"y4", "y^4"}, {"O12", o1 + "*" + o2}, {"O14", o1 + "^4"}};
        e.hz = "(1-t^16)/((1-t^4)^3*(1-t^8))";
        e.rank = 16;
        e.center_relation =
            RelationExpectation{16, {{0, 0, 0, 2}, {0, 0, 2, 1}, {0, 0, 4, 0}, {1, 1, 0, 1}}, {"1", "-2", "1", "16"}};
        e.normal.push_back({"x2", "x^2", {{"x", "x"}, {"y", "-y"}}});
        e.normal.push_back({"y2", "y^2", {{"x", "-x"}, {"y", "y"}}});
        out.push_back(std::move(f));
    }
    {
        FamilySpec f = make_downup(2, -1, 1, 1, "downup_2m1");
        f.max_degree = 4;
        auto& e = *f.expected;
        e.citation = "A(2,-1): z = xy - yx is central and A = k[x][z][y; delta]";
        e.central = {{"z", "x*y - y*x"}};
        out.push_back(std::move(f));
    }
    {
        FamilySpec a = make_skew({{1, w3}, {w3.inverse(), 1}}, "skew_q3");
        a.expected->ozone_factors = std::vector<long>{3, 3};
        FamilySpec b = make_skew({{1}}, "poly_t", {"t"});
        b.expected->ozone_factors = std::vector<long>{};
        FamilySpec f = make_tensor(a, b, "tensor_q3_t");
        f.max_degree = 4;
        f.expected->citation = "Oz(A (x) k[t]) = Oz(A): exact order 9";
        out.push_back(std::move(f));
    }
    {
        FamilySpec a = make_skew({{1, -1}, {-1, 1}}, "skew_m1");
        FamilySpec f = make_ore(a, {"y", "x"}, 2, 1, "ore_swap");
        out.push_back(std::move(f));
    }
    {
        FamilySpec a = make_skew({{1, -1}, {-1, 1}}, "skew_m1");
        FamilySpec f = make_ore(a, {"-x", "-y"}, 2, 1, "ore_diag");
        f.ore->prediction_holds = false;
        out.push_back(std::move(f));
    }
    return out;
}

std::vector<std::string> corpus_ids() {
    std::vector<std::string> out;
    for (const auto& f : corpus()) out.push_back(f.id);
    return out;
}

FamilySpec find_case(const std::string& id) {
    for (auto& f : corpus())
        if (f.id == id) return f;
    throw InvalidPresentation("unknown case '" + id + "'");
}

// ---------------------------------------------------------------- runner

bool CaseReport::passed() const {
    if (!error.empty()) return false;
    return std::all_of(checks.begin(), checks.end(), [](const CheckResult& c) { return c.passed; });
}

bool CorpusReport::passed() const {
    return std::all_of(cases.begin(), cases.end(), [](const CaseReport& c) { return c.passed(); });
}

std::size_t CorpusReport::failures() const {
    return static_cast<std::size_t>(std::count_if(cases.begin(), cases.end(), [](const CaseReport& c) { return !c.passed(); }));
}

namespace {

class Runner {
public:
    Runner(const FamilySpec& spec, const CorpusOptions& options, CaseReport& report)
        : spec_(spec), options_(options), r_(report), A_(spec.build()), R_(A_) {
        static const ExpectedResults none;
        e_ = spec.expected ? &*spec.expected : &none;
    }

    void run() {
        D_ = spec_.max_degree;
        basis();
        candidates();
        witnesses();
        if (spec_.pi) {
            center();
            sandwich();
            relations();
        }
        skew();
        realizations();
        ore();
    }

private:
    void check(const std::string& name, bool ok, const std::string& detail = "", const std::string& citation = "") {
        r_.checks.push_back({name, ok, detail, citation.empty() ? e_->citation : citation});
    }

    template <class F>
    void guarded(const std::string& name, F&& f, const std::string& citation = "") {
        try {
            f();
        } catch (const Error& err) {
            check(name, false, err.what(), citation);
        }
    }

    FreeElt parse(const std::string& s) const { return A_.parse(s); }

    GradedAutomorphism automorphism(const ImageList& images, const std::string& name) const {
        return ozone::verify_automorphism(A_, images, name);
    }

    std::vector<central::SubGen> subgens(const std::vector<NamedElement>& els) const {
        std::vector<central::SubGen> out;
        for (const auto& n : els) {
            FreeElt f = parse(n.expr);
            auto d = A_.degree(f);
            if (!d) throw ZeroInput(n.name + " is zero");
            out.push_back({n.name, *d, A_.coords(f, *d), n.expr});
        }
        return out;
    }

    void relation_check(const std::string& what, const central::GradedRing& R, const central::SubalgebraGens& gens,
                        const RelationExpectation& rel) {
        central::RelationSet rs = central::find_relations(R, gens, rel.degree);
        auto at = rs.at_degree(rel.degree);
        std::vector<CycNum> coeffs;
        for (const auto& c : rel.coefficients) coeffs.push_back(cyclo::parse_scalar(c));
        std::string shown;
        for (const auto& x : at) {
            shown += (shown.empty() ? "" : "; ") + x.to_string(rs.names);
            r_.relations.push_back(what + ": " + x.to_string(rs.names));
        }
        bool lower_free = true;
        for (const auto& x : rs.relations)
            if (x.degree < rel.degree) lower_free = false;
        check(what + " relation in degree " + std::to_string(rel.degree),
              lower_free && at.size() == 1 && at.front().proportional_to(rel.monomials, coeffs), shown);
    }

    void basis() {
        auto dims = A_.basis().dims();
        r_.dims.assign(dims.begin(), dims.begin() + std::min<std::size_t>(dims.size(), static_cast<std::size_t>(D_) + 1));
        if (A_.presentation().declared_hilbert) {
            auto fail = A_.certification_failure();
            check("dimensions match the declared series", !fail,
                  fail ? "first disagreement in degree " + std::to_string(*fail) : "", kBasisCitation);
        }
    }

    void candidates() {
        for (const auto& a : spec_.autos) {
            try {
                autos_.push_back(automorphism(a.images, a.name));
            } catch (const Error& err) {
                check("automorphism " + a.name, false, err.what());
            }
        }
    }

    void witnesses() {
        const int budget = A_.max_degree() - A_.presentation().max_weight();
        for (const auto& c : e_->central) {
            guarded("central witness " + c.name, [&] {
                FreeElt f = parse(c.expr);
                auto d = A_.degree(f);
                if (d && *d > budget) {
                    check("central witness " + c.name, false, "degree beyond the completed range");
                    return;
                }
                check("central witness " + c.name, central::is_central(A_, f), c.expr);
            });
        }
        std::vector<std::pair<FreeElt, GradedAutomorphism>> normals;
        for (const auto& n : e_->normal) {
            guarded("normal witness " + n.name, [&] {
                FreeElt f = parse(n.expr);
                GradedAutomorphism eta = central::eta_of_normal(A_, f);
                normals.emplace_back(f, eta);
                r_.witnesses.push_back(n.name + " = " + n.expr + " : " + eta.to_string(A_));
                bool ok = true;
                std::string detail = eta.to_string(A_);
                if (!n.eta.empty()) ok = eta == automorphism(n.eta, n.name);
                check("normal witness " + n.name, ok, detail);
            });
        }
        eta_products(normals, "witness");
    }

    void eta_products(const std::vector<std::pair<FreeElt, GradedAutomorphism>>& normals, const std::string& what) {
        const int budget = A_.max_degree() - A_.presentation().max_weight();
        bool ok = true;
        int tested = 0;
        for (std::size_t i = 0; i < normals.size(); ++i)
            for (std::size_t j = 0; j < normals.size(); ++j) {
                const auto& [f, ef] = normals[i];
                const auto& [g, eg] = normals[j];
                if (*A_.degree(f) + *A_.degree(g) > budget) continue;
                FreeElt fg = A_.multiply(f, g);
                if (fg.is_zero()) continue;
                ++tested;
                if (!(central::eta_of_normal(A_, fg) == eg.compose(A_, ef))) ok = false;
            }
        if (tested > 0)
            check("eta is multiplicative on " + what + " products", ok, std::to_string(tested) + " products", kEtaCitation);
    }

    void center() {
        Z_ = central::center(A_, D_);
        r_.center_dims = Z_.dims();
        gens_ = central::subalgebra_generators(R_, Z_, D_);
        r_.center_degrees = gens_.degrees();
        for (const auto& g : gens_.gens) r_.center_generators.push_back(g.name + " = " + g.repr);
        if (e_->center_degrees) {
            auto got = r_.center_degrees;
            auto want = *e_->center_degrees;
            std::sort(got.begin(), got.end());
            std::sort(want.begin(), want.end());
            check("center generator degrees", got == want, degrees_string(got));
            std::vector<NamedElement> lead(e_->central.begin(), e_->central.begin() + std::min(e_->central.size(), want.size()));
            guarded("central witnesses generate the center", [&] {
                auto named = central::named_generators(R_, subgens(lead), D_);
                auto nd = named.degrees();
                std::sort(nd.begin(), nd.end());
                if (nd == want)
                    check("central witnesses generate the center", central::generates(R_, named, Z_, D_),
                          "complete up to degree " + std::to_string(D_));
            });
        }
        if (e_->hz) {
            auto hz = hilbert::HilbertSeries::parse(*e_->hz);
            check("center dimensions fit " + *e_->hz, hilbert::fit_series(Z_.dims(), hz), dims_string(Z_.dims()));
            if (A_.presentation().declared_hilbert) {
                guarded("rank over the center", [&] {
                    auto rk = hilbert::rank_at_one(*A_.presentation().declared_hilbert, hz);
                    r_.rank = rk.rank.get_str();
                    rank_ = rk.rank.get_si();
                    check("rank over the center", !e_->rank || rk.rank == *e_->rank, r_.rank.value(), kRankCitation);
                });
            }
        }
    }

    void sandwich() {
        guarded("ozone sandwich", [&] {
            int N = spec_.conductor.value_or(ozone::default_conductor(A_, Z_, D_));
            std::optional<long> rk = rank_ ? rank_ : e_->rank;
            oz_ = ozone::ozone_sandwich(A_, Z_, autos_, N, D_, rk);
            const auto& rep = *oz_;
            r_.ozone_exact = rep.exact;
            r_.ozone_order = rep.order();
            r_.ozone_factors = ozone::factors_string(rep.factors());
            for (const auto& w : rep.witnesses)
                r_.witnesses.push_back("degree " + std::to_string(w.degree) + ": " + A_.to_string(w.element) + " : " +
                                       w.eta.to_string(A_));
            check("ozone sandwich is exact", rep.exact,
                  "lower " + std::to_string(rep.lower.order()) + ", upper " + std::to_string(rep.upper.order()) +
                      ", N = " + std::to_string(N) + ", D = " + std::to_string(D_));
            if (e_->ozone_factors)
                check("ozone invariant factors", rep.exact && rep.factors() == *e_->ozone_factors, r_.ozone_factors);
            if (!e_->ozone_generators.empty()) {
                std::vector<GradedAutomorphism> gs;
                for (const auto& a : e_->ozone_generators) gs.push_back(automorphism(a.images, a.name));
                FiniteGroupTable expected = FiniteGroupTable::closure(A_, gs);
                check("ozone group equals the expected generated group", rep.exact && expected.same_elements(rep.upper),
                      "expected order " + std::to_string(expected.order()));
                if (spec_.family == Family::Skew && spec_.pi && !e_->rank)
                    rank_ = static_cast<long>(expected.order());
            }
            if (rk || rank_) {
                long rank = rank_ ? *rank_ : *rk;
                check("ozone order divides the rank", ozone::divisibility_check(rep, rank),
                      std::to_string(rep.order()) + " | " + std::to_string(rank), kDivisibilityCitation);
            }
            std::vector<std::pair<FreeElt, GradedAutomorphism>> ws;
            for (const auto& w : rep.witnesses) ws.emplace_back(w.element, w.eta);
            eta_products(ws, "sandwich witness");
            const auto& G = rep.upper;
            guarded("Molien identity for the ozone group", [&] {
                central::fixed_ring(A_, G.elements(), D_);
                check("Molien identity for the ozone group", true, "degrees 0.." + std::to_string(D_), kMolienCitation);
            });
            if (spec_.family == Family::Skew && spec_.pi && rep.exact) {
                guarded("fixed ring of Oz equals the center", [&] {
                    auto F = central::fixed_ring(A_, G.elements(), D_);
                    bool ok = true;
                    for (int d = 0; d <= D_; ++d) ok = ok && F[d] == Z_[d];
                    check("fixed ring of Oz equals the center", ok, "", kSkewCitation);
                });
            }
            if (options_.smash && G.is_abelian()) smash(G);
            if (e_->fixed) fixed(G);
        });
        if (e_->no_noncentral_normal_upto) no_normals(*e_->no_noncentral_normal_upto);
    }

    void smash(const FiniteGroupTable& G) {
        guarded("smash center cross-check", [&] {
            smash::SmashAlgebra S(A_, G);
            central::GradedSubspace pieces;
            for (int d = 0; d <= D_; ++d) pieces.pieces.push_back(smash::smash_center_degree(S, d).space);
            check("smash center cross-check", true, "degrees 0.." + std::to_string(D_), kSmashCitation);
            if (!e_->smash) return;
            const auto& se = *e_->smash;
            std::vector<central::SubGen> gs;
            for (const auto& g : se.generators) {
                std::size_t idx = G.identity();
                if (!g.group_element.empty()) {
                    auto found = G.find(automorphism(g.group_element, g.name));
                    if (!found) throw CrossCheckFailure("group element of " + g.name + " is not in Oz");
                    idx = *found;
                }
                FreeElt a = parse(g.expr);
                int d = *A_.degree(a);
                smash::SmashElt u = S.make(a, idx);
                gs.push_back({g.name, d, S.coords(u, d), S.to_string(u)});
            }
            int top = std::min(D_, se.relation.degree);
            auto named = central::named_generators(S, gs, top);
            check("smash center generators", central::generates(S, named, pieces, top) && named.degrees() == se.degrees,
                  "complete up to degree " + std::to_string(top), kSmashCitation);
            relation_check("smash center", S, named, se.relation);
        }, kSmashCitation);
    }

    void fixed(const FiniteGroupTable& G) {
        guarded("fixed ring of Oz", [&] {
            const auto& fe = *e_->fixed;
            auto F = central::fixed_ring(A_, G.elements(), D_);
            auto named = central::named_generators(R_, subgens(fe.generators), D_);
            check("fixed ring generators", central::generates(R_, named, F, D_), dims_string(F.dims()), kMolienCitation);
            auto h = hilbert::HilbertSeries::parse(fe.series);
            check("fixed ring dimensions fit " + fe.series, hilbert::fit_series(F.dims(), h), dims_string(F.dims()));
            relation_check("fixed ring", R_, named, fe.relation);
            auto rk = hilbert::rank_at_one(*A_.presentation().declared_hilbert, h);
            check("rank over the fixed ring equals |Oz|",
                  rk.rank == fe.rank && rk.rank == static_cast<unsigned long>(G.order()), rk.rank.get_str(), kRankCitation);
            if (e_->hz && e_->rank) {
                auto rc = smash::rank_multiplicativity_check(*A_.presentation().declared_hilbert, G.order(),
                                                             hilbert::HilbertSeries::parse(*e_->hz), *e_->rank);
                check("rank of A # k Oz over Z(A) is |Oz| rk_Z(A)", rc.ok, rc.computed.get_str(), kRankCitation);
            }
        });
    }

    void no_normals(int top) {
        guarded("no non-central normal elements", [&] {
            central::GradedSubspace empty;
            for (int d = 0; d <= top; ++d) empty.pieces.emplace_back(A_.dim(d));
            int N = spec_.conductor.value_or(ozone::default_conductor(A_, Z_, D_));
            FiniteGroupTable diag = ozone::diagonal_upper_bound(A_, empty, N, top);
            std::vector<GradedAutomorphism> cls = diag.elements();
            cls.insert(cls.end(), autos_.begin(), autos_.end());
            std::string found;
            for (const auto& phi : cls) {
                if (phi.is_identity()) continue;
                for (int d = 1; d <= top && found.empty(); ++d)
                    if (central::twisted_centralizer(A_, phi, d).dim() > 0)
                        found = phi.to_string(A_) + " in degree " + std::to_string(d);
            }
            check("no non-central normal elements up to degree " + std::to_string(top), found.empty(),
                  found.empty() ? std::to_string(cls.size()) + " candidate maps over mu_" + std::to_string(N) : found);
        });
    }

    void relations() {
        if (!e_->center_relation) return;
        const auto& rel = *e_->center_relation;
        guarded("center relation", [&] {
            std::size_t k = rel.monomials.empty() ? 0 : rel.monomials.front().size();
            std::vector<NamedElement> lead(e_->central.begin(), e_->central.begin() + std::min(k, e_->central.size()));
            auto named = central::named_generators(R_, subgens(lead), std::min(rel.degree, A_.max_degree()));
            relation_check("center", R_, named, rel);
        });
    }

    void skew() {
        if (!e_->skew) return;
        guarded("skew recognition", [&] {
            std::vector<FreeElt> basis;
            for (const auto& b : e_->skew->basis) basis.push_back(parse(b));
            auto sp = ozone::skew_recognition(A_, basis, D_);
            std::size_t k = 0;
            bool ok = sp.pbw;
            std::string shown;
            for (std::size_t i = 0; i < basis.size(); ++i)
                for (std::size_t j = i + 1; j < basis.size(); ++j, ++k) {
                    shown += (shown.empty() ? "" : ", ") + ("p" + std::to_string(i + 1) + std::to_string(j + 1)) + " = " +
                             sp.p[i][j].to_string();
                    if (k >= e_->skew->upper.size() || sp.p[i][j] != cyclo::parse_scalar(e_->skew->upper[k])) ok = false;
                }
            check("skew recognition parameters", ok, shown);
        });
    }

    void realizations() {
        for (const auto& re : e_->realizations) {
            if (re.t.empty()) continue;
            guarded("filtered realization " + re.label, [&] {
                std::vector<FreeElt> t;
                for (const auto& s : re.t) t.push_back(parse(s));
                const std::size_t n = t.size();
                std::vector<std::vector<CycNum>> p(n, std::vector<CycNum>(n, CycNum(1)));
                std::size_t k = 0;
                for (std::size_t i = 0; i < n; ++i)
                    for (std::size_t j = i + 1; j < n; ++j) p[i][j] = cyclo::parse_scalar(re.upper.at(k++));
                auto res = ozone::filtered_realization_check(A_, t, p);
                check("filtered realization " + re.label, res.ok, "", kRealizationCitation);
            });
        }
    }

    void ore() {
        if (!spec_.ore) return;
        guarded("Ore extension center", [&] {
            const auto& od = *spec_.ore;
            const int tw = A_.weight(A_.num_generators() - 1);
            Algebra base(od.base, D_ + od.base.max_weight());
            std::vector<std::pair<std::string, std::string>> images;
            for (std::size_t i = 0; i < od.sigma.size(); ++i) images.emplace_back(od.base.generators[i].name, od.sigma[i]);
            GradedAutomorphism sigma = ozone::verify_automorphism(base, images, "sigma");
            FreeElt t = FreeElt::generator(A_.num_generators() - 1);
            bool all_equal = true;
            std::string detail;
            for (int d = 0; d <= D_; ++d) {
                std::vector<la::SparseVec> predicted;
                for (int k = 0; k * od.order * tw <= d; ++k) {
                    int e = d - k * od.order * tw;
                    la::Subspace zs = central::center_degree(base, e).intersect(central::fixed_ring_degree(base, {sigma}, e));
                    FreeElt tk = A_.power(t, k * od.order);
                    for (const auto& row : zs.rows()) predicted.push_back(A_.coords(A_.multiply(base.element(e, row), tk), d));
                }
                la::Subspace pred = la::Subspace::span_sparse(std::move(predicted), A_.dim(d));
                const la::Subspace& got = Z_[d];
                if (!(pred == got)) {
                    all_equal = false;
                    if (detail.empty())
                        detail = "degree " + std::to_string(d) + ": center " + std::to_string(got.dim()) + ", predicted " +
                                 std::to_string(pred.dim());
                }
            }
            if (od.prediction_holds)
                check("center equals Z(A)^<sigma>[t^n]", all_equal, detail, kOreCitation);
            else
                check("center differs from Z(A)^<sigma>[t^n] for an X-inner twist", !all_equal, detail, kOreCitation);
        });
    }

    static std::string degrees_string(const std::vector<int>& v) {
        std::string s = "[";
        for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + std::to_string(v[i]);
        return s + "]";
    }
    static std::string dims_string(const std::vector<long>& v) {
        std::string s;
        for (std::size_t i = 0; i < v.size(); ++i) s += (i ? " " : "") + std::to_string(v[i]);
        return s;
    }

    const FamilySpec& spec_;
    const CorpusOptions& options_;
    CaseReport& r_;
    const ExpectedResults* e_ = nullptr;
    Algebra A_;
    central::AlgebraRing R_;
    int D_ = 0;
    std::vector<GradedAutomorphism> autos_;
    central::GradedSubspace Z_;
    central::SubalgebraGens gens_;
    std::optional<ozone::OzoneReport> oz_;
    std::optional<long> rank_;
};

}  // namespace

CaseReport run_case(const FamilySpec& spec, const CorpusOptions& options) {
    CaseReport r;
    r.id = spec.id;
    r.family = family_name(spec.family);
    try {
        Runner(spec, options, r).run();
    } catch (const Error& err) {
        r.error = err.what();
    } catch (const std::exception& err) {
        r.error = std::string("internal error: ") + err.what();
    }
    return r;
}

CorpusReport run_corpus(const std::vector<std::string>& selection, const CorpusOptions& options) {
    CorpusReport out;
    if (selection.empty()) return out;
    std::vector<FamilySpec> specs;
    for (const auto& id : selection) specs.push_back(find_case(id));
    out.cases.resize(specs.size());
    unsigned threads = options.threads ? options.threads : std::max(1u, std::thread::hardware_concurrency());
    threads = std::min<unsigned>(threads, static_cast<unsigned>(specs.size()));
    std::atomic<std::size_t> next{0};
    auto work = [&] {
        for (std::size_t i = next++; i < specs.size(); i = next++) out.cases[i] = run_case(specs[i], options);
    };
    if (threads <= 1) {
        work();
    } else {
        std::vector<std::thread> pool;
        for (unsigned k = 0; k < threads; ++k) pool.emplace_back(work);
        for (auto& t : pool) t.join();
    }
    return out;
}

}  // namespace ozonelab::families
