#include "ozonelab/ncalg.hpp"

#include "ozonelab/errors.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <set>

namespace ozonelab::nc {

// ---------------------------------------------------------------- FreeElt

FreeElt FreeElt::word(const Word& w, const CycNum& c) {
    FreeElt f;
    f.add_term(w, c);
    return f;
}

CycNum FreeElt::coeff(const Word& w) const {
    auto it = terms_.find(w);
    return it == terms_.end() ? CycNum() : it->second;
}

void FreeElt::add_term(const Word& w, const CycNum& c) {
    if (c.is_zero()) return;
    auto [it, inserted] = terms_.try_emplace(w, c);
    if (inserted) return;
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
}

FreeElt& FreeElt::operator+=(const FreeElt& rhs) {
    for (const auto& [w, c] : rhs.terms_) add_term(w, c);
    return *this;
}

FreeElt& FreeElt::operator-=(const FreeElt& rhs) {
    for (const auto& [w, c] : rhs.terms_) add_term(w, -c);
    return *this;
}

FreeElt& FreeElt::operator*=(const CycNum& c) {
    if (c.is_zero()) {
        terms_.clear();
        return *this;
    }
    for (auto& [w, v] : terms_) v *= c;
    return *this;
}

FreeElt operator*(const FreeElt& a, const FreeElt& b) {
    FreeElt r;
    for (const auto& [u, c] : a.terms_)
        for (const auto& [v, d] : b.terms_) r.add_term(u + v, c * d);
    return r;
}

FreeElt FreeElt::operator-() const {
    FreeElt r = *this;
    for (auto& [w, v] : r.terms_) v = -v;
    return r;
}

bool operator==(const FreeElt& a, const FreeElt& b) {
    if (a.terms_.size() != b.terms_.size()) return false;
    auto i = a.terms_.begin();
    auto j = b.terms_.begin();
    for (; i != a.terms_.end(); ++i, ++j)
        if (i->first != j->first || i->second != j->second) return false;
    return true;
}

std::optional<int> FreeElt::degree(const std::vector<int>& weights) const {
    if (terms_.empty()) return std::nullopt;
    int d = word_degree(terms_.begin()->first, weights);
    for (const auto& [w, c] : terms_)
        if (word_degree(w, weights) != d) return -1;
    return d;
}

FreeElt FreeElt::lifted(int n) const {
    FreeElt r;
    for (const auto& [w, c] : terms_) {
        int m = std::lcm(n, c.conductor());
        r.terms_.emplace(w, c.lifted(m));
    }
    return r;
}

int word_degree(const Word& w, const std::vector<int>& weights) {
    int d = 0;
    for (char c : w) d += weights.at(static_cast<unsigned char>(c));
    return d;
}

std::string word_string(const Word& w, const std::vector<Generator>& gens) {
    std::string out;
    for (std::size_t i = 0; i < w.size();) {
        std::size_t j = i;
        while (j < w.size() && w[j] == w[i]) ++j;
        if (!out.empty()) out += "*";
        out += gens.at(static_cast<unsigned char>(w[i])).name;
        if (j - i > 1) out += "^" + std::to_string(j - i);
        i = j;
    }
    return out;
}

std::string FreeElt::to_string(const std::vector<Generator>& gens) const {
    if (terms_.empty()) return "0";
    std::vector<int> weights;
    for (const auto& g : gens) weights.push_back(g.weight);
    std::vector<const Terms::value_type*> order;
    for (const auto& t : terms_) order.push_back(&t);
    std::stable_sort(order.begin(), order.end(), [&](auto* a, auto* b) {
        int da = word_degree(a->first, weights), db = word_degree(b->first, weights);
        if (da != db) return da < db;
        return a->first < b->first;
    });
    std::string out;
    bool first = true;
    for (const auto* t : order) {
        const auto& [w, c] = *t;
        std::string ws = word_string(w, gens);
        bool negative = false;
        std::string coeff;
        if (c.is_rational()) {
            cyclo::Rational r = c.rational_value();
            negative = r < 0;
            if (negative) r = -r;
            coeff = (r == 1 && !ws.empty()) ? "" : r.get_str();
        } else {
            coeff = "(" + c.to_string() + ")";
        }
        std::string term = coeff;
        if (!ws.empty()) term += (coeff.empty() ? "" : "*") + ws;
        if (first) out = negative ? "-" + term : term;
        else out += (negative ? " - " : " + ") + term;
        first = false;
    }
    return out;
}

// ---------------------------------------------------------------- presentation

std::vector<int> AlgebraPresentation::weights() const {
    std::vector<int> w;
    w.reserve(generators.size());
    for (const auto& g : generators) w.push_back(g.weight);
    return w;
}

int AlgebraPresentation::max_weight() const {
    int m = 0;
    for (const auto& g : generators) m = std::max(m, g.weight);
    return m;
}

std::optional<int> AlgebraPresentation::generator_index(const std::string& name) const {
    for (std::size_t i = 0; i < generators.size(); ++i)
        if (generators[i].name == name) return static_cast<int>(i);
    return std::nullopt;
}

int AlgebraPresentation::conductor() const {
    int n = 1;
    for (const auto& r : relations)
        for (const auto& [w, c] : r.terms()) n = std::lcm(n, c.conductor());
    return n;
}

void AlgebraPresentation::validate() const {
    if (generators.empty()) throw InvalidPresentation("no generators");
    if (generators.size() > 64) throw InvalidPresentation("at most 64 generators are supported");
    std::set<std::string> names;
    for (const auto& g : generators) {
        if (g.weight < 1) throw InvalidPresentation("generator " + g.name + " has weight below 1");
        if (!names.insert(g.name).second) throw InvalidPresentation("duplicate generator name " + g.name);
    }
    auto w = weights();
    for (std::size_t i = 0; i < relations.size(); ++i) {
        const auto& r = relations[i];
        for (const auto& [word, c] : r.terms())
            for (char ch : word)
                if (static_cast<unsigned char>(ch) >= generators.size())
                    throw InvalidPresentation("relation " + std::to_string(i + 1) + " uses an unknown generator");
        auto d = r.degree(w);
        if (!d) continue;
        if (*d < 0) throw InvalidPresentation("relation " + std::to_string(i + 1) + " is not homogeneous: " + r.to_string(generators));
        if (*d == 0) throw InconsistentPresentation("relation " + std::to_string(i + 1) + " is a nonzero scalar, forcing 1 = 0");
        if (*d < 2) throw InvalidPresentation("relation " + std::to_string(i + 1) + " has degree below 2");
    }
    if (multidegree_map && multidegree_map->size() != generators.size())
        throw InvalidPresentation("multidegree map does not cover every generator");
}

// ---------------------------------------------------------------- parsing

namespace {

class ElementParser {
public:
    ElementParser(std::string_view text, const std::vector<Generator>& gens,
                  const std::map<std::string, CycNum>& params)
        : text_(text), gens_(gens), params_(params) {}

    FreeElt parse() {
        FreeElt v = expr();
        skip_ws();
        if (pos_ != text_.size()) throw SyntaxError("unexpected character '" + std::string(1, text_[pos_]) + "'", pos_);
        return v;
    }

private:
    void skip_ws() {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    }
    bool accept(char c) {
        skip_ws();
        if (pos_ < text_.size() && text_[pos_] == c) {
            ++pos_;
            return true;
        }
        return false;
    }
    long integer() {
        skip_ws();
        std::size_t start = pos_;
        while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
        if (start == pos_) throw SyntaxError("expected integer", start);
        if (pos_ - start > 9) throw SyntaxError("integer literal too long", start);
        return std::stol(std::string(text_.substr(start, pos_ - start)));
    }

    FreeElt expr() {
        FreeElt v = term();
        while (true) {
            if (accept('+')) v += term();
            else if (accept('-')) v -= term();
            else return v;
        }
    }

    FreeElt term() {
        FreeElt v = unary();
        while (true) {
            if (accept('*')) {
                v = v * unary();
            } else if (accept('/')) {
                std::size_t at = pos_;
                FreeElt d = unary();
                if (d.is_zero()) throw DivisionByZero("division by zero at position " + std::to_string(at));
                if (d.size() != 1 || !d.terms().begin()->first.empty())
                    throw SyntaxError("division by a non-scalar", at);
                v *= d.terms().begin()->second.inverse();
            } else {
                return v;
            }
        }
    }

    FreeElt unary() {
        if (accept('-')) return -unary();
        return power();
    }

    FreeElt power() {
        FreeElt base = atom();
        if (!accept('^')) return base;
        long e = integer();
        FreeElt r = FreeElt::scalar(CycNum(1));
        for (long i = 0; i < e; ++i) r = r * base;
        return r;
    }

    FreeElt atom() {
        skip_ws();
        if (pos_ >= text_.size()) throw SyntaxError("unexpected end of input", pos_);
        char c = text_[pos_];
        if (c == '(') {
            ++pos_;
            FreeElt v = expr();
            if (!accept(')')) throw SyntaxError("expected ')'", pos_);
            return v;
        }
        if (std::isdigit(static_cast<unsigned char>(c))) return FreeElt::scalar(CycNum(cyclo::Rational(integer())));
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
            std::size_t start = pos_;
            while (pos_ < text_.size() &&
                   (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_' || text_[pos_] == '\''))
                ++pos_;
            std::string name(text_.substr(start, pos_ - start));
            for (std::size_t i = 0; i < gens_.size(); ++i)
                if (gens_[i].name == name) return FreeElt::generator(static_cast<int>(i));
            if (auto it = params_.find(name); it != params_.end()) return FreeElt::scalar(it->second);
            if (name.size() >= 2 && name[0] == 'z' &&
                std::all_of(name.begin() + 1, name.end(), [](char ch) { return std::isdigit(static_cast<unsigned char>(ch)); })) {
                if (name.size() > 8) throw SyntaxError("root order too large", start);
                int n = std::stoi(name.substr(1));
                if (n < 1) throw SyntaxError("root order must be positive", start);
                return FreeElt::scalar(CycNum::zeta(n));
            }
            throw SyntaxError("unknown identifier '" + name + "'", start);
        }
        throw SyntaxError("unexpected character '" + std::string(1, c) + "'", pos_);
    }

    std::string_view text_;
    const std::vector<Generator>& gens_;
    const std::map<std::string, CycNum>& params_;
    std::size_t pos_ = 0;
};

}  // namespace

FreeElt parse_element(std::string_view text, const std::vector<Generator>& gens,
                      const std::map<std::string, CycNum>& params) {
    return ElementParser(text, gens, params).parse();
}

// ---------------------------------------------------------------- order

MonomialOrder::MonomialOrder(std::vector<int> weights, const std::vector<int>& precedence)
    : weights_(std::move(weights)), precedence_(precedence), rank_(weights_.size(), -1) {
    if (precedence.size() != weights_.size()) throw InvalidPresentation("order must list every generator exactly once");
    for (std::size_t i = 0; i < precedence.size(); ++i) {
        int g = precedence[i];
        if (g < 0 || static_cast<std::size_t>(g) >= weights_.size() || rank_[static_cast<std::size_t>(g)] != -1)
            throw InvalidPresentation("order must list every generator exactly once");
        rank_[static_cast<std::size_t>(g)] = static_cast<int>(i);
    }
}

bool MonomialOrder::less(const Word& a, const Word& b) const {
    int da = degree(a), db = degree(b);
    if (da != db) return da < db;
    std::size_t n = std::min(a.size(), b.size());
    for (std::size_t i = 0; i < n; ++i) {
        int ra = rank_[static_cast<unsigned char>(a[i])], rb = rank_[static_cast<unsigned char>(b[i])];
        if (ra != rb) return ra < rb;
    }
    return a.size() < b.size();
}

// ---------------------------------------------------------------- rewriting

RewriteSystem::RewriteSystem(const RewriteSystem& other)
    : order_(other.order_),
      max_degree_(other.max_degree_),
      rules_(other.rules_),
      by_lhs_(other.by_lhs_),
      lhs_lengths_(other.lhs_lengths_) {
    std::lock_guard lock(other.mutex_);
    memo_ = other.memo_;
}

RewriteSystem& RewriteSystem::operator=(const RewriteSystem& other) {
    if (this == &other) return *this;
    std::scoped_lock lock(mutex_, other.mutex_);
    order_ = other.order_;
    max_degree_ = other.max_degree_;
    rules_ = other.rules_;
    by_lhs_ = other.by_lhs_;
    lhs_lengths_ = other.lhs_lengths_;
    memo_ = other.memo_;
    return *this;
}

void RewriteSystem::add_rule(Rule r) {
    std::size_t len = r.lhs.size();
    by_lhs_.emplace(r.lhs, rules_.size());
    if (std::find(lhs_lengths_.begin(), lhs_lengths_.end(), len) == lhs_lengths_.end()) {
        lhs_lengths_.push_back(len);
        std::sort(lhs_lengths_.begin(), lhs_lengths_.end());
    }
    rules_.push_back(std::move(r));
}

std::optional<std::size_t> RewriteSystem::find_rule(const Word& w, std::size_t& position) const {
    for (std::size_t pos = 0; pos < w.size(); ++pos) {
        for (std::size_t len : lhs_lengths_) {
            if (pos + len > w.size()) break;
            auto it = by_lhs_.find(w.substr(pos, len));
            if (it != by_lhs_.end()) {
                position = pos;
                return it->second;
            }
        }
    }
    return std::nullopt;
}

bool RewriteSystem::is_normal_word(const Word& w) const {
    std::size_t pos;
    return !find_rule(w, pos).has_value();
}

const FreeElt& RewriteSystem::nf_word_locked(const Word& w) const {
    if (auto it = memo_.find(w); it != memo_.end()) return it->second;
    std::size_t pos = 0;
    auto rule = find_rule(w, pos);
    FreeElt result;
    if (!rule) {
        result = FreeElt::word(w);
    } else {
        const Rule& r = rules_[*rule];
        Word prefix = w.substr(0, pos);
        Word suffix = w.substr(pos + r.lhs.size());
        for (const auto& [u, c] : r.rhs.terms()) {
            const FreeElt& part = nf_word_locked(prefix + u + suffix);
            for (const auto& [v, e] : part.terms()) result.add_term(v, c * e);
        }
    }
    return memo_.emplace(w, std::move(result)).first->second;
}

FreeElt RewriteSystem::nf_locked(const FreeElt& f) const {
    FreeElt out;
    for (const auto& [w, c] : f.terms()) {
        const FreeElt& part = nf_word_locked(w);
        for (const auto& [v, e] : part.terms()) out.add_term(v, c * e);
    }
    return out;
}

FreeElt RewriteSystem::normal_form(const FreeElt& f) const {
    for (const auto& [w, c] : f.terms()) {
        int d = order_.degree(w);
        if (d > max_degree_)
            throw DegreeOutOfRange("degree " + std::to_string(d) + " exceeds completed degree " + std::to_string(max_degree_));
    }
    std::lock_guard lock(mutex_);
    return nf_locked(f);
}

FreeElt RewriteSystem::normal_form_word(const Word& w) const {
    return normal_form(FreeElt::word(w));
}

FreeElt RewriteSystem::multiply(const FreeElt& a, const FreeElt& b) const {
    return normal_form(a * b);
}

Word RewriteSystem::leading_word(const FreeElt& f) const {
    if (f.is_zero()) throw ZeroInput("leading word of zero");
    const Word* best = nullptr;
    for (const auto& [w, c] : f.terms())
        if (!best || order_.less(*best, w)) best = &w;
    return *best;
}

RewriteSystem RewriteSystem::complete(const AlgebraPresentation& pres, const std::vector<int>& precedence,
                                      int max_degree, std::size_t rule_cap) {
    pres.validate();
    RewriteSystem rs;
    rs.order_ = MonomialOrder(pres.weights(), precedence);
    rs.max_degree_ = max_degree;

    std::map<int, std::vector<FreeElt>> pending;  // candidate elements by degree
    auto weights = pres.weights();
    for (const auto& r : pres.relations) {
        auto d = r.degree(weights);
        if (d && *d <= max_degree) pending[*d].push_back(r);
    }

    auto queue_overlaps = [&](std::size_t i, std::size_t j) {
        // suffix of lhs_i equal to prefix of lhs_j
        const Word& a = rs.rules_[i].lhs;
        const Word& b = rs.rules_[j].lhs;
        for (std::size_t k = 1; k < std::min(a.size(), b.size()) + 0; ++k) {
            if (a.compare(a.size() - k, k, b, 0, k) != 0) continue;
            Word left = a.substr(0, a.size() - k);
            Word right = b.substr(k);
            int deg = rs.order_.degree(a) + rs.order_.degree(right);
            if (deg > max_degree) continue;
            // a*right = left*b; the S-element is rhs_i*right - left*rhs_j
            FreeElt s = rs.rules_[i].rhs * FreeElt::word(right) - FreeElt::word(left) * rs.rules_[j].rhs;
            pending[deg].push_back(std::move(s));
        }
    };

    while (!pending.empty()) {
        auto node = pending.extract(pending.begin());
        int d = node.key();
        rs.memo_.clear();
        std::vector<FreeElt> reduced;
        std::set<Word> support;
        for (const auto& f : node.mapped()) {
            FreeElt g = rs.nf_locked(f);
            if (g.is_zero()) continue;
            for (const auto& [w, c] : g.terms()) support.insert(w);
            reduced.push_back(std::move(g));
        }
        if (reduced.empty()) continue;
        // columns sorted descending so that pivots are leading words
        std::vector<Word> cols(support.begin(), support.end());
        std::sort(cols.begin(), cols.end(), [&](const Word& a, const Word& b) { return rs.order_.less(b, a); });
        std::unordered_map<Word, std::size_t> col_of;
        for (std::size_t i = 0; i < cols.size(); ++i) col_of.emplace(cols[i], i);
        std::vector<la::SparseVec> rows;
        for (const auto& g : reduced) {
            std::vector<std::pair<std::size_t, CycNum>> entries;
            for (const auto& [w, c] : g.terms()) entries.emplace_back(col_of.at(w), c);
            std::sort(entries.begin(), entries.end(), [](const auto& x, const auto& y) { return x.first < y.first; });
            la::SparseVec v;
            for (auto& [i, c] : entries) v.push(i, std::move(c));
            rows.push_back(std::move(v));
        }
        la::Echelon e = la::rref_sparse(std::move(rows), cols.size());
        if (e.pivots.empty()) continue;
        std::size_t first_new = rs.rules_.size();
        for (std::size_t r = 0; r < e.rows.size(); ++r) {
            Rule rule;
            rule.lhs = cols[e.pivots[r]];
            if (rule.lhs.empty()) throw InconsistentPresentation("completion forces 1 = 0");
            for (const auto& [i, c] : e.rows[r].entries())
                if (i != e.pivots[r]) rule.rhs.add_term(cols[i], -c);
            rs.add_rule(std::move(rule));
            if (rs.rules_.size() > rule_cap)
                throw BudgetExceeded("rule count exceeds cap of " + std::to_string(rule_cap));
        }
        (void)d;
        for (std::size_t i = first_new; i < rs.rules_.size(); ++i) {
            for (std::size_t j = 0; j <= i; ++j) {
                queue_overlaps(i, j);
                if (i != j) queue_overlaps(j, i);
            }
        }
    }
    rs.memo_.clear();
    return rs;
}

// ---------------------------------------------------------------- basis

GradedBasis::GradedBasis(const RewriteSystem& rs, int num_generators, int max_degree) {
    const auto& order = rs.order();
    words_.assign(static_cast<std::size_t>(max_degree) + 1, {});
    index_.assign(static_cast<std::size_t>(max_degree) + 1, {});
    words_[0].push_back(Word());
    for (int d = 1; d <= max_degree; ++d) {
        auto& out = words_[static_cast<std::size_t>(d)];
        for (int g = 0; g < num_generators; ++g) {
            int w = order.weights()[static_cast<std::size_t>(g)];
            if (w > d) continue;
            for (const Word& u : words_[static_cast<std::size_t>(d - w)]) {
                Word cand = u + static_cast<char>(g);
                // u is normal, so only suffixes of cand can be reducible
                if (rs.is_normal_word(cand)) out.push_back(std::move(cand));
            }
        }
        std::sort(out.begin(), out.end(), [&](const Word& a, const Word& b) { return order.less(a, b); });
    }
    for (std::size_t d = 0; d < words_.size(); ++d)
        for (std::size_t i = 0; i < words_[d].size(); ++i) index_[d].emplace(words_[d][i], i);
}

const std::vector<Word>& GradedBasis::words(int d) const {
    if (d < 0 || d > max_degree())
        throw DegreeOutOfRange("degree " + std::to_string(d) + " exceeds basis degree " + std::to_string(max_degree()));
    return words_[static_cast<std::size_t>(d)];
}

std::optional<std::size_t> GradedBasis::index(int d, const Word& w) const {
    if (d < 0 || d > max_degree()) return std::nullopt;
    const auto& m = index_[static_cast<std::size_t>(d)];
    auto it = m.find(w);
    if (it == m.end()) return std::nullopt;
    return it->second;
}

std::vector<long> GradedBasis::dims() const {
    std::vector<long> out;
    for (const auto& w : words_) out.push_back(static_cast<long>(w.size()));
    return out;
}

std::optional<int> GradedBasis::certify(const hilbert::HilbertSeries& h) const {
    auto c = h.expand(max_degree());
    for (int d = 0; d <= max_degree(); ++d)
        if (c[static_cast<std::size_t>(d)] != static_cast<long>(dim(d))) return d;
    return std::nullopt;
}

// ---------------------------------------------------------------- Algebra

namespace {

std::vector<int> default_precedence(std::size_t n) {
    std::vector<int> p(n);
    std::iota(p.begin(), p.end(), 0);
    return p;
}

AlgebraPresentation lifted_presentation(AlgebraPresentation pres) {
    int n = pres.conductor();
    for (auto& r : pres.relations) r = r.lifted(n);
    return pres;
}

}  // namespace

Algebra::Algebra(AlgebraPresentation pres, int max_degree, std::optional<std::vector<int>> precedence,
                 std::size_t rule_cap)
    : pres_(lifted_presentation(std::move(pres))),
      rs_(RewriteSystem::complete(pres_, precedence ? *precedence : default_precedence(pres_.generators.size()),
                                  max_degree, rule_cap)),
      basis_(rs_, static_cast<int>(pres_.generators.size()), max_degree),
      weights_(pres_.weights()),
      conductor_(pres_.conductor()) {
    if (pres_.declared_hilbert) certification_failure_ = basis_.certify(*pres_.declared_hilbert);
}

FreeElt Algebra::parse(std::string_view text) const {
    std::map<std::string, CycNum> params(pres_.params.begin(), pres_.params.end());
    return normal_form(parse_element(text, pres_.generators, params));
}

FreeElt Algebra::power(const FreeElt& a, int e) const {
    FreeElt r = FreeElt::scalar(CycNum(1));
    for (int i = 0; i < e; ++i) r = multiply(r, a);
    return r;
}

std::optional<int> Algebra::degree(const FreeElt& f) const {
    auto d = f.degree(weights_);
    if (d && *d < 0) throw InvalidPresentation("element is not homogeneous");
    return d;
}

void Algebra::require_degree(int d) const {
    if (d > max_degree())
        throw DegreeOutOfRange("degree " + std::to_string(d) + " exceeds completed degree " + std::to_string(max_degree()));
}

la::SparseVec Algebra::coords(const FreeElt& f, int d) const {
    require_degree(d);
    FreeElt g = normal_form(f);
    std::vector<std::pair<std::size_t, CycNum>> entries;
    for (const auto& [w, c] : g.terms()) {
        auto i = basis_.index(d, w);
        if (!i) throw DimensionMismatch("element has a term outside degree " + std::to_string(d));
        entries.emplace_back(*i, c);
    }
    std::sort(entries.begin(), entries.end(), [](const auto& x, const auto& y) { return x.first < y.first; });
    la::SparseVec v;
    for (auto& [i, c] : entries) v.push(i, std::move(c));
    return v;
}

la::Vector Algebra::dense_coords(const FreeElt& f, int d) const {
    return coords(f, d).to_dense(dim(d));
}

FreeElt Algebra::element(int d, const la::SparseVec& v) const {
    const auto& words = basis_.words(d);
    FreeElt f;
    for (const auto& [i, c] : v.entries()) f.add_term(words.at(i), c);
    return f;
}

FreeElt Algebra::element(int d, const la::Vector& v) const {
    return element(d, la::SparseVec::from_dense(v));
}

std::vector<int> parse_precedence(const AlgebraPresentation& pres, const std::vector<std::string>& names) {
    std::vector<int> out;
    for (const auto& n : names) {
        auto i = pres.generator_index(n);
        if (!i) throw InvalidPresentation("order names unknown generator '" + n + "'");
        out.push_back(*i);
    }
    std::vector<int> sorted = out;
    std::sort(sorted.begin(), sorted.end());
    if (sorted != default_precedence(pres.generators.size()))
        throw InvalidPresentation("order must list every generator exactly once");
    return out;
}

// ---------------------------------------------------------------- constructions

namespace {

FreeElt shift_letters(const FreeElt& f, int offset) {
    FreeElt out;
    for (const auto& [w, c] : f.terms()) {
        Word v = w;
        for (char& ch : v) ch = static_cast<char>(static_cast<unsigned char>(ch) + offset);
        out.add_term(v, c);
    }
    return out;
}

}  // namespace

AlgebraPresentation tensor_product(const AlgebraPresentation& a, const AlgebraPresentation& b) {
    AlgebraPresentation out;
    out.label = a.label + "_x_" + b.label;
    out.generators = a.generators;
    out.relations = a.relations;
    out.params = a.params;
    int offset = static_cast<int>(a.generators.size());
    std::set<std::string> used;
    for (const auto& g : a.generators) used.insert(g.name);
    for (const auto& g : b.generators) {
        Generator h = g;
        while (used.count(h.name)) h.name += "_2";
        used.insert(h.name);
        out.generators.push_back(h);
    }
    for (const auto& r : b.relations) out.relations.push_back(shift_letters(r, offset));
    for (const auto& p : b.params)
        if (std::none_of(out.params.begin(), out.params.end(), [&](const auto& q) { return q.first == p.first; }))
            out.params.push_back(p);
    for (int i = 0; i < offset; ++i)
        for (std::size_t j = 0; j < b.generators.size(); ++j) {
            Word ba{static_cast<char>(offset + static_cast<int>(j)), static_cast<char>(i)};
            Word ab{static_cast<char>(i), static_cast<char>(offset + static_cast<int>(j))};
            out.relations.push_back(FreeElt::word(ba) - FreeElt::word(ab));
        }
    if (a.declared_hilbert && b.declared_hilbert) out.declared_hilbert = *a.declared_hilbert * *b.declared_hilbert;
    if (a.multidegree_map && b.multidegree_map) {
        std::size_t na = a.multidegree_map->empty() ? 0 : a.multidegree_map->front().size();
        std::size_t nb = b.multidegree_map->empty() ? 0 : b.multidegree_map->front().size();
        std::vector<std::vector<int>> m;
        for (const auto& v : *a.multidegree_map) {
            auto x = v;
            x.resize(na + nb, 0);
            m.push_back(x);
        }
        for (const auto& v : *b.multidegree_map) {
            std::vector<int> x(na, 0);
            x.insert(x.end(), v.begin(), v.end());
            m.push_back(x);
        }
        out.multidegree_map = m;
    }
    return out;
}

AlgebraPresentation ore_extension(const AlgebraPresentation& a, const std::vector<FreeElt>& images, int t_weight,
                                  const std::string& t_name) {
    if (images.size() != a.generators.size()) throw NonGradedTwist("twist must give an image for every generator");
    if (t_weight < 1) throw InvalidPresentation("weight of the new generator must be positive");
    AlgebraPresentation out = a;
    out.label = a.label + "_ore";
    std::string name = t_name;
    while (a.generator_index(name)) name += "_";
    out.generators.push_back({name, t_weight});
    char t = static_cast<char>(a.generators.size());
    for (std::size_t i = 0; i < images.size(); ++i) {
        const FreeElt& img = images[i];
        if (img.size() != 1 || img.terms().begin()->first.size() != 1)
            throw NonGradedTwist("image of " + a.generators[i].name + " is not a scalar multiple of a generator");
        const auto& [w, c] = *img.terms().begin();
        std::size_t j = static_cast<unsigned char>(w[0]);
        if (j >= a.generators.size() || a.generators[j].weight != a.generators[i].weight)
            throw NonGradedTwist("image of " + a.generators[i].name + " changes the weight");
        // t*x - sigma(x)*t
        FreeElt rel = FreeElt::word(Word{t, static_cast<char>(i)}) - FreeElt::word(Word{w[0], t}, c);
        out.relations.push_back(rel);
    }
    if (a.declared_hilbert) out.declared_hilbert = a.declared_hilbert->over(t_weight);
    if (a.multidegree_map) {
        auto m = *a.multidegree_map;
        for (auto& v : m) v.push_back(0);
        std::vector<int> tv(m.empty() ? 1 : m.front().size(), 0);
        tv.back() = 1;
        m.push_back(tv);
        out.multidegree_map = m;
    }
    return out;
}

}  // namespace ozonelab::nc
