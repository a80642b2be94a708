#include "cli.hpp"

#include "ozonelab/central.hpp"
#include "ozonelab/errors.hpp"
#include "ozonelab/families.hpp"
#include "ozonelab/hilbert.hpp"
#include "ozonelab/ozone.hpp"
#include "ozonelab/smash.hpp"
#include "ozonelab/specfile.hpp"

#include <CLI11.hpp>
#include <openssl/evp.h>

#include <algorithm>
#include <fstream>
#include <iomanip>
#include <optional>
#include <ostream>
#include <sstream>

namespace ozonelab::cli {

namespace {

using nc::Algebra;
using nc::FreeElt;
using ozone::FiniteGroupTable;
using ozone::GradedAutomorphism;

const char* kBasisCitation = "declared Hilbert series";
const char* kCenterCitation = "center computed degree by degree; complete up to the degree bound only";
const char* kOzoneCitation = "Oz(A): graded automorphisms fixing the center, sandwiched by eta-maps of normal elements";
const char* kDivisibilityCitation = "the order of the ozone group divides the rank over the center";
const char* kMolienCitation = "Molien: dim (A^G)_d is the average trace of G on A_d";
const char* kSmashCitation = "center of A # kG is spanned by a # g with a fixed by G and eta_a = g";
const char* kRankCitation = "rank over the center is (h_A / h_Z)(1)";

std::string status(bool ok) { return ok ? "pass" : "fail"; }

std::vector<std::string> split_list(const std::string& s) {
    std::vector<std::string> out;
    std::stringstream ss(s);
    std::string item;
    while (std::getline(ss, item, ',')) {
        auto b = item.find_first_not_of(' ');
        auto e = item.find_last_not_of(' ');
        if (b != std::string::npos) out.push_back(item.substr(b, e - b + 1));
    }
    return out;
}

Json factors_json(const FiniteGroupTable& G) {
    Json j;
    j["order"] = G.order();
    if (G.is_abelian()) {
        j["abelian"] = true;
        j["factors"] = G.invariant_factors();
    } else {
        j["abelian"] = false;
    }
    return j;
}

Json images_json(const Algebra& A, const GradedAutomorphism& g) {
    Json j = Json::object();
    for (int i = 0; i < A.num_generators(); ++i)
        j[A.presentation().generators[static_cast<std::size_t>(i)].name] = A.to_string(g.images()[static_cast<std::size_t>(i)]);
    return j;
}

std::vector<std::pair<std::string, std::string>> images_from_json(const Json& j) {
    std::vector<std::pair<std::string, std::string>> out;
    for (auto it = j.begin(); it != j.end(); ++it) out.emplace_back(it.key(), it.value().get<std::string>());
    return out;
}

std::pair<std::size_t, std::size_t> line_col(const std::string& text, std::size_t pos) {
    std::size_t line = 1, col = 1;
    for (std::size_t i = 0; i < pos && i < text.size(); ++i) {
        if (text[i] == '\n') {
            ++line;
            col = 1;
        } else {
            ++col;
        }
    }
    return {line, col};
}

struct Options {
    std::string format = "table";
    std::string spec_path;
    int max_degree = -1;
    std::optional<int> conductor;
    std::string order;
    std::string extra_autos;
    std::optional<long> rank;
    std::string ha, hz;
    std::vector<std::string> cases;
    std::string report_path;
    std::string family_id;
    std::string output;
};

class Session {
public:
    Session(const Options& o, int default_degree) : o_(o) {
        text_ = spec::read_file(o.spec_path);
        try {
            spec_ = spec::parse_spec(text_);
        } catch (const SyntaxError& e) {
            auto [line, col] = line_col(text_, e.position());
            throw SyntaxError(o.spec_path + ":" + std::to_string(line) + ":" + std::to_string(col) + ": " + e.detail(),
                              e.position());
        }
        if (!o.extra_autos.empty()) {
            autos_text_ = spec::read_file(o.extra_autos);
            auto extra = spec::parse_autos(autos_text_);
            spec_.autos.insert(spec_.autos.end(), extra.begin(), extra.end());
        }
        D_ = o.max_degree >= 0 ? o.max_degree : default_degree;
        if (D_ < 0) throw InvalidPresentation("--max-degree must be nonnegative");
        order_ = o.order.empty() ? spec_.order : split_list(o.order);
    }

    int D() const { return D_; }
    const spec::SpecFile& spec() const { return spec_; }

    Algebra algebra(int completion) const {
        std::optional<std::vector<int>> precedence;
        if (!order_.empty()) precedence = nc::parse_precedence(spec_.presentation, order_);
        return Algebra(spec_.presentation, completion, precedence);
    }
    int center_completion() const { return D_ + spec_.presentation.max_weight(); }

    std::vector<GradedAutomorphism> autos(const Algebra& A) const {
        std::vector<GradedAutomorphism> out;
        for (const auto& a : spec_.autos) out.push_back(ozone::verify_automorphism(A, a.images, a.name));
        return out;
    }

    int conductor(const Algebra& A, const central::GradedSubspace& Z) const {
        return o_.conductor ? *o_.conductor : ozone::default_conductor(A, Z, D_);
    }

    std::string digest(const std::string& command) const {
        std::ostringstream ss;
        ss << command << "\nmax_degree=" << D_ << "\nconductor=" << (o_.conductor ? std::to_string(*o_.conductor) : "")
           << "\norder=" << o_.order << "\nrank=" << (o_.rank ? std::to_string(*o_.rank) : "") << "\n"
           << text_ << "\n" << autos_text_;
        return sha256_hex(ss.str());
    }

    Json parameters() const {
        Json j;
        j["max_degree"] = D_;
        if (o_.conductor) j["conductor"] = *o_.conductor;
        j["order"] = order_;
        return j;
    }

private:
    const Options& o_;
    std::string text_;
    std::string autos_text_;
    spec::SpecFile spec_;
    int D_ = 0;
    std::vector<std::string> order_;
};

Json generators_json(const central::SubalgebraGens& gens) {
    Json arr = Json::array();
    for (const auto& g : gens.gens) {
        Json j;
        j["name"] = g.name;
        j["degree"] = g.degree;
        j["element"] = g.repr;
        arr.push_back(j);
    }
    return arr;
}

Json relations_json(const central::RelationSet& rs) {
    Json arr = Json::array();
    for (const auto& r : rs.relations) {
        Json j;
        j["degree"] = r.degree;
        j["relation"] = r.to_string(rs.names);
        arr.push_back(j);
    }
    return arr;
}

// ---------------------------------------------------------------- commands

Report cmd_basis(const Options& o) {
    Session s(o, 6);
    Algebra A = s.algebra(s.D());
    Report r;
    r.command = "basis";
    r.input_digest = s.digest(r.command);
    const auto& pres = A.presentation();
    r.payload["parameters"] = s.parameters();
    r.payload["label"] = pres.label;
    r.payload["conductor"] = A.conductor();
    Json gens = Json::array();
    for (const auto& g : pres.generators) gens.push_back({{"name", g.name}, {"weight", g.weight}});
    r.payload["generators"] = gens;
    r.payload["rules"] = A.rewrite_system().rules().size();
    r.payload["dims"] = A.basis().dims();
    Json words = Json::array();
    for (int d = 0; d <= s.D(); ++d) {
        Json row = Json::array();
        for (const auto& w : A.basis().words(d)) row.push_back(w.empty() ? "1" : nc::word_string(w, pres.generators));
        words.push_back({{"degree", d}, {"words", row}});
    }
    r.payload["normal_words"] = words;
    if (pres.declared_hilbert) {
        r.payload["declared_series"] = pres.declared_hilbert->to_string();
        auto fail = A.certification_failure();
        r.payload["first_disagreement"] = fail ? Json(*fail) : Json(nullptr);
        r.checks.push_back({"dimensions match the declared series", status(!fail), kBasisCitation});
    } else {
        r.checks.push_back({"dimensions match the declared series", "skipped", kBasisCitation});
    }
    return r;
}

Report cmd_center(const Options& o) {
    Session s(o, 4);
    Algebra A = s.algebra(s.center_completion());
    central::AlgebraRing R(A);
    auto Z = central::center(A, s.D());
    auto gens = central::subalgebra_generators(R, Z, s.D());
    auto rels = central::find_relations(R, gens, s.D());
    Report r;
    r.command = "center";
    r.input_digest = s.digest(r.command);
    r.payload["parameters"] = s.parameters();
    r.payload["dims"] = Z.dims();
    r.payload["generators"] = generators_json(gens);
    r.payload["relations"] = relations_json(rels);
    r.payload["complete_up_to"] = s.D();
    bool ok = true;
    for (const auto& g : gens.gens) ok = ok && central::is_central(A, A.element(g.degree, g.coords));
    r.checks.push_back({"generators are central", status(ok), kCenterCitation});
    return r;
}

struct OzoneRun {
    central::GradedSubspace Z;
    ozone::OzoneReport report;
    int N = 0;
};

OzoneRun run_ozone(const Session& s, const Algebra& A, std::optional<long> rank) {
    OzoneRun out;
    out.Z = central::center(A, s.D());
    out.N = s.conductor(A, out.Z);
    out.report = ozone::ozone_sandwich(A, out.Z, s.autos(A), out.N, s.D(), rank);
    return out;
}

Report cmd_ozone(const Options& o) {
    Session s(o, 4);
    Algebra A = s.algebra(s.center_completion());
    OzoneRun run = run_ozone(s, A, o.rank);
    const auto& rep = run.report;
    Report r;
    r.command = "ozone";
    r.input_digest = s.digest(r.command);
    r.payload["parameters"] = s.parameters();
    r.payload["conductor"] = run.N;
    r.payload["exact"] = rep.exact;
    r.payload["order"] = rep.order();
    r.payload["factors"] = ozone::factors_string(rep.factors());
    r.payload["lower"] = factors_json(rep.lower);
    r.payload["upper"] = factors_json(rep.upper);
    Json elements = Json::array();
    for (const auto& g : rep.upper.elements()) elements.push_back(images_json(A, g));
    r.payload["upper"]["elements"] = elements;
    r.payload["candidates"] = rep.candidate_names;
    Json ws = Json::array();
    bool witnesses_ok = true;
    for (const auto& w : rep.witnesses) {
        ws.push_back({{"degree", w.degree}, {"element", A.to_string(w.element)}, {"eta", images_json(A, w.eta)}});
        witnesses_ok = witnesses_ok && central::eta_of_normal(A, w.element) == w.eta;
    }
    r.payload["witnesses"] = ws;
    r.checks.push_back({"sandwich is exact", status(rep.exact), kOzoneCitation});
    r.checks.push_back({"witnesses re-verify", status(witnesses_ok), kOzoneCitation});
    if (o.rank) {
        r.payload["rank"] = *o.rank;
        r.checks.push_back({"order divides the rank", status(ozone::divisibility_check(rep, *o.rank)), kDivisibilityCitation});
    }
    return r;
}

Report cmd_fixed(const Options& o) {
    Session s(o, 4);
    Algebra A = s.algebra(s.center_completion());
    std::vector<GradedAutomorphism> gens = s.autos(A);
    std::string source = "supplied automorphisms";
    if (gens.empty()) {
        gens = run_ozone(s, A, std::nullopt).report.upper.elements();
        source = "ozone upper bound";
    }
    FiniteGroupTable G = FiniteGroupTable::closure(A, gens);
    central::AlgebraRing R(A);
    auto F = central::fixed_ring(A, G.elements(), s.D());
    auto fg = central::subalgebra_generators(R, F, s.D(), "u");
    Report r;
    r.command = "fixed";
    r.input_digest = s.digest(r.command);
    r.payload["parameters"] = s.parameters();
    r.payload["group_source"] = source;
    r.payload["group"] = factors_json(G);
    r.payload["dims"] = F.dims();
    Json mol = Json::array();
    for (int d = 0; d <= s.D(); ++d) mol.push_back(central::molien_average(A, G.elements(), d).to_string());
    r.payload["molien"] = mol;
    r.payload["generators"] = generators_json(fg);
    r.payload["relations"] = relations_json(central::find_relations(R, fg, s.D()));
    r.checks.push_back({"Molien identity in every degree", "pass", kMolienCitation});
    return r;
}

Report cmd_smash(const Options& o) {
    Session s(o, 4);
    Algebra A = s.algebra(s.center_completion());
    OzoneRun run = run_ozone(s, A, std::nullopt);
    smash::SmashAlgebra S(A, run.report.upper);
    auto pres = smash::smash_center_presentation(S, s.D());
    bool crossed = S.group().is_abelian();
    Report r;
    r.command = "smash";
    r.input_digest = s.digest(r.command);
    r.payload["parameters"] = s.parameters();
    r.payload["group"] = factors_json(S.group());
    r.payload["ozone_exact"] = run.report.exact;
    r.payload["dims"] = pres.pieces.dims();
    r.payload["generators"] = generators_json(pres.gens);
    r.payload["relations"] = relations_json(pres.relations);
    r.checks.push_back({"commutant agrees with the normal-element span", crossed ? "pass" : "skipped", kSmashCitation});
    r.checks.push_back({"ozone sandwich is exact", status(run.report.exact), kOzoneCitation});
    return r;
}

Report cmd_rank(const Options& o) {
    auto hA = hilbert::HilbertSeries::parse(o.ha);
    auto hZ = hilbert::HilbertSeries::parse(o.hz);
    auto rk = hilbert::rank_at_one(hA, hZ);
    Report r;
    r.command = "rank";
    r.input_digest = sha256_hex("rank\n" + o.ha + "\n" + o.hz);
    r.payload["ha"] = hA.to_string();
    r.payload["hz"] = hZ.to_string();
    r.payload["rank"] = rk.rank.get_str();
    r.payload["pi_degree"] = rk.pi_degree ? Json(rk.pi_degree->get_str()) : Json(nullptr);
    r.checks.push_back({"rank is a positive integer", status(rk.rank > 0), kRankCitation});
    return r;
}

Report cmd_corpus(const Options& o) {
    std::vector<std::string> ids = o.cases.empty() ? families::corpus_ids() : o.cases;
    auto rep = families::run_corpus(ids);
    Report r;
    r.command = "corpus";
    std::string joined;
    for (const auto& id : ids) joined += id + "\n";
    r.input_digest = sha256_hex("corpus\n" + joined);
    Json cases = Json::array();
    for (const auto& c : rep.cases) {
        Json j;
        j["id"] = c.id;
        j["family"] = c.family;
        j["passed"] = c.passed();
        j["dims"] = c.dims;
        j["center_dims"] = c.center_dims;
        j["center_degrees"] = c.center_degrees;
        j["center_generators"] = c.center_generators;
        j["ozone_factors"] = c.ozone_factors;
        j["ozone_order"] = c.ozone_order;
        j["ozone_exact"] = c.ozone_exact;
        j["rank"] = c.rank ? Json(*c.rank) : Json(nullptr);
        j["witnesses"] = c.witnesses;
        j["relations"] = c.relations;
        Json checks = Json::array();
        for (const auto& k : c.checks) checks.push_back({{"name", k.name}, {"passed", k.passed}, {"detail", k.detail}});
        j["checks"] = checks;
        if (!c.error.empty()) j["error"] = c.error;
        cases.push_back(j);
        const auto& expected = families::find_case(c.id).expected;
        r.checks.push_back({c.id, status(c.passed()), expected ? expected->citation : ""});
    }
    r.payload["cases"] = cases;
    r.payload["passed"] = rep.cases.size() - rep.failures();
    r.payload["failed"] = rep.failures();
    return r;
}

Report cmd_families_list() {
    Report r;
    r.command = "families list";
    r.input_digest = sha256_hex("families list");
    Json arr = Json::array();
    for (const auto& f : families::corpus()) {
        Json p = Json::object();
        for (const auto& [k, v] : f.params) p[k] = v;
        arr.push_back({{"id", f.id}, {"family", families::family_name(f.family)}, {"params", p},
                       {"max_degree", f.max_degree}, {"citation", f.expected ? f.expected->citation : ""}});
    }
    r.payload["cases"] = arr;
    return r;
}

Report cmd_verify(const Options& o) {
    Json j = Json::parse(spec::read_file(o.report_path));
    Report in = Report::from_json(j);
    Options so = o;
    const Json& params = in.payload.at("parameters");
    so.max_degree = params.at("max_degree").get<int>();
    if (params.contains("conductor")) so.conductor = params.at("conductor").get<int>();
    std::string order;
    for (const auto& n : params.at("order")) order += (order.empty() ? "" : ",") + n.get<std::string>();
    so.order = order;
    if (in.payload.contains("rank")) so.rank = in.payload.at("rank").get<long>();
    Session s(so, 4);
    Report r;
    r.command = "verify";
    r.input_digest = s.digest("verify");
    r.payload["report_command"] = in.command;
    r.checks.push_back({"input digest matches", status(s.digest(in.command) == in.input_digest), ""});
    if (in.command == "basis") {
        Algebra A = s.algebra(s.D());
        r.checks.push_back({"dimensions reproduce", status(Json(A.basis().dims()) == in.payload.at("dims")), kBasisCitation});
    } else if (in.command == "center") {
        Algebra A = s.algebra(s.center_completion());
        bool ok = true;
        for (const auto& g : in.payload.at("generators")) {
            FreeElt f = A.parse(g.at("element").get<std::string>());
            ok = ok && !f.is_zero() && A.degree(f) == g.at("degree").get<int>() && central::is_central(A, f);
        }
        r.checks.push_back({"embedded generators are central", status(ok), kCenterCitation});
    } else if (in.command == "ozone") {
        Algebra A = s.algebra(s.center_completion());
        bool ok = true;
        for (const auto& w : in.payload.at("witnesses")) {
            FreeElt f = A.parse(w.at("element").get<std::string>());
            GradedAutomorphism eta = central::eta_of_normal(A, f);
            ok = ok && eta == ozone::verify_automorphism(A, images_from_json(w.at("eta")));
        }
        r.checks.push_back({"embedded witnesses are normal with the stored eta", status(ok), kOzoneCitation});
        for (const auto& e : in.payload.at("upper").at("elements")) {
            auto Z = central::center(A, s.D());
            ok = ok && ozone::fixes_center(A, ozone::verify_automorphism(A, images_from_json(e)), Z);
        }
        r.checks.push_back({"embedded upper-bound maps fix the center", status(ok), kOzoneCitation});
    } else {
        r.checks.push_back({"no embedded witnesses for this command", "skipped", ""});
    }
    return r;
}

void render(std::ostream& out, const Json& j, int indent) {
    const std::string pad(static_cast<std::size_t>(indent), ' ');
    auto scalar = [](const Json& v) { return v.is_string() ? v.get<std::string>() : v.dump(); };
    auto flat = [&](const Json& arr) {
        return std::all_of(arr.begin(), arr.end(), [](const Json& v) { return !v.is_structured(); });
    };
    for (auto it = j.begin(); it != j.end(); ++it) {
        const Json& v = it.value();
        if (!v.is_structured()) {
            out << pad << it.key() << ": " << scalar(v) << "\n";
        } else if (v.is_array() && flat(v)) {
            out << pad << it.key() << ": ";
            for (std::size_t i = 0; i < v.size(); ++i) out << (i ? ", " : "") << scalar(v[i]);
            out << "\n";
        } else if (v.is_array()) {
            out << pad << it.key() << ":\n";
            for (const auto& item : v) {
                if (item.is_object()) {
                    out << pad << "  -\n";
                    render(out, item, indent + 4);
                } else {
                    out << pad << "  - " << scalar(item) << "\n";
                }
            }
        } else {
            out << pad << it.key() << ":\n";
            render(out, v, indent + 2);
        }
    }
}

}  // namespace

// ---------------------------------------------------------------- report

Json Report::to_json() const {
    Json j;
    j["version"] = kVersion;
    j["input_digest"] = input_digest;
    j["command"] = command;
    j["payload"] = payload;
    Json cs = Json::array();
    for (const auto& c : checks) cs.push_back({{"name", c.name}, {"status", c.status}, {"citation", c.citation}});
    j["checks"] = cs;
    return j;
}

Report Report::from_json(const Json& j) {
    Report r;
    r.command = j.at("command").get<std::string>();
    r.input_digest = j.at("input_digest").get<std::string>();
    r.payload = j.at("payload");
    for (const auto& c : j.at("checks"))
        r.checks.push_back({c.at("name").get<std::string>(), c.at("status").get<std::string>(),
                            c.at("citation").get<std::string>()});
    return r;
}

std::string Report::to_table() const {
    std::ostringstream out;
    out << "ozonelab " << kVersion << "  " << command << "\n";
    out << "input digest: " << input_digest << "\n";
    render(out, payload, 0);
    if (!checks.empty()) {
        out << "checks:\n";
        for (const auto& c : checks) {
            out << "  [" << c.status << "] " << c.name;
            if (!c.citation.empty()) out << "  (" << c.citation << ")";
            out << "\n";
        }
    }
    return out.str();
}

bool Report::all_passed() const {
    return std::none_of(checks.begin(), checks.end(), [](const Check& c) { return c.status == "fail"; });
}

std::string sha256_hex(const std::string& bytes) {
    unsigned char md[EVP_MAX_MD_SIZE];
    unsigned int len = 0;
    EVP_Digest(bytes.data(), bytes.size(), md, &len, EVP_sha256(), nullptr);
    std::ostringstream ss;
    for (unsigned int i = 0; i < len; ++i) ss << std::hex << std::setw(2) << std::setfill('0') << static_cast<int>(md[i]);
    return ss.str();
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    Options o;
    CLI::App app{"Exact center and ozone-group computations for graded algebras", "ozonelab"};
    app.require_subcommand(1);
    app.set_version_flag("--version", kVersion);
    app.add_option("--format", o.format, "Output format")->check(CLI::IsMember({"table", "json"}));
    app.fallthrough();

    auto spec_opts = [&](CLI::App* c, bool conductor, bool autos) {
        c->add_option("spec", o.spec_path, "Algebra spec file")->required();
        c->add_option("--max-degree", o.max_degree, "Degree bound D")->check(CLI::NonNegativeNumber);
        c->add_option("--order", o.order, "Generator precedence, smallest first (comma list)");
        if (conductor) c->add_option("--conductor", o.conductor, "Conductor N of the diagonal search")->check(CLI::PositiveNumber);
        if (autos) c->add_option("--extra-autos", o.extra_autos, "File of [[autos]] entries");
    };
    auto* basis = app.add_subcommand("basis", "Normal words and dimensions");
    spec_opts(basis, false, false);
    auto* center = app.add_subcommand("center", "Center generators and relations");
    spec_opts(center, false, false);
    auto* oz = app.add_subcommand("ozone", "Ozone group sandwich");
    spec_opts(oz, true, true);
    oz->add_option("--rank", o.rank, "Rank over the center for the divisibility check")->check(CLI::PositiveNumber);
    auto* fixed = app.add_subcommand("fixed", "Fixed ring of the supplied automorphisms (or of the ozone group)");
    spec_opts(fixed, true, true);
    auto* sm = app.add_subcommand("smash", "Center of the smash product with the ozone group");
    spec_opts(sm, true, true);
    auto* rank = app.add_subcommand("rank", "Rank from Hilbert series");
    rank->add_option("--ha", o.ha, "Hilbert series of A")->required();
    rank->add_option("--hz", o.hz, "Hilbert series of the center")->required();
    auto* corpus = app.add_subcommand("corpus", "Run the built-in corpus");
    corpus->add_option("--case", o.cases, "Case id (repeatable)");
    auto* fam = app.add_subcommand("families", "Built-in families");
    fam->require_subcommand(1);
    auto* fam_list = fam->add_subcommand("list", "List the built-in cases");
    auto* fam_emit = fam->add_subcommand("emit", "Write the spec file of a built-in case");
    fam_emit->add_option("id", o.family_id, "Case id")->required();
    fam_emit->add_option("-o,--output", o.output, "Output path");
    auto* verify = app.add_subcommand("verify", "Re-validate the witnesses embedded in a JSON report");
    verify->add_option("report", o.report_path, "Report file")->required();
    verify->add_option("spec", o.spec_path, "Algebra spec file the report was made from")->required();

    std::vector<std::string> argv_storage = {"ozonelab"};
    argv_storage.insert(argv_storage.end(), args.begin(), args.end());
    std::vector<char*> argv;
    for (auto& a : argv_storage) argv.push_back(a.data());
    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e, out, err);
        return code == 0 ? 0 : static_cast<int>(ErrorClass::Input);
    }

    try {
        if (fam_emit->parsed()) {
            std::string text = spec::emit_spec(families::find_case(o.family_id).to_spec_file());
            if (o.output.empty()) {
                out << text;
            } else {
                std::ofstream f(o.output, std::ios::binary);
                if (!f) throw InvalidPresentation("cannot write '" + o.output + "'");
                f << text;
            }
            return 0;
        }
        Report r;
        if (basis->parsed()) r = cmd_basis(o);
        else if (center->parsed()) r = cmd_center(o);
        else if (oz->parsed()) r = cmd_ozone(o);
        else if (fixed->parsed()) r = cmd_fixed(o);
        else if (sm->parsed()) r = cmd_smash(o);
        else if (rank->parsed()) r = cmd_rank(o);
        else if (corpus->parsed()) r = cmd_corpus(o);
        else if (fam_list->parsed()) r = cmd_families_list();
        else if (verify->parsed()) r = cmd_verify(o);
        if (o.format == "json") out << r.to_json().dump(2) << "\n";
        else out << r.to_table();
        if (r.command == "corpus") return r.all_passed() ? 0 : 1;
        if (r.command == "verify") return r.all_passed() ? 0 : static_cast<int>(ErrorClass::CrossCheck);
        return 0;
    } catch (const Error& e) {
        err << "error: " << e.what() << "\n";
        return e.exit_code();
    } catch (const Json::exception& e) {
        err << "error: malformed report: " << e.what() << "\n";
        return static_cast<int>(ErrorClass::Input);
    } catch (const std::exception& e) {
        err << "internal error: " << e.what() << "\n";
        return static_cast<int>(ErrorClass::CrossCheck);
    }
}

}  // namespace ozonelab::cli
