#include "ozonelab/hilbert.hpp"

#include "ozonelab/errors.hpp"

#include <cctype>
#include <sstream>

namespace ozonelab::hilbert {

namespace {

void trim(Poly& p) {
    while (!p.empty() && p.back() == 0) p.pop_back();
}

Poly mul(const Poly& a, const Poly& b) {
    if (a.empty() || b.empty()) return {};
    Poly r(a.size() + b.size() - 1, mpz_class(0));
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i] == 0) continue;
        for (std::size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
    }
    trim(r);
    return r;
}

Poly add(Poly a, const Poly& b, int sign) {
    if (a.size() < b.size()) a.resize(b.size(), mpz_class(0));
    for (std::size_t i = 0; i < b.size(); ++i) a[i] += sign * b[i];
    trim(a);
    return a;
}

Poly one_minus_t_power(int k) {
    Poly p(static_cast<std::size_t>(k) + 1, mpz_class(0));
    p[0] = 1;
    p[static_cast<std::size_t>(k)] = -1;
    return p;
}

// Exact division by (1 - t^k); nullopt when it does not divide.
std::optional<Poly> divide_one_minus(const Poly& p, int k) {
    if (p.empty()) return Poly{};
    // p = (1 - t^k) q  <=>  q_i = p_i + q_{i-k}
    std::size_t n = p.size();
    if (n <= static_cast<std::size_t>(k)) return std::nullopt;
    Poly q(n - static_cast<std::size_t>(k), mpz_class(0));
    for (std::size_t i = 0; i < q.size(); ++i) {
        q[i] = p[i];
        if (i >= static_cast<std::size_t>(k)) q[i] += q[i - static_cast<std::size_t>(k)];
    }
    // check the top k coefficients
    for (std::size_t i = q.size(); i < n; ++i) {
        mpz_class expect = (i >= static_cast<std::size_t>(k)) ? mpz_class(-q[i - static_cast<std::size_t>(k)]) : mpz_class(0);
        if (p[i] != expect) return std::nullopt;
    }
    return q;
}

mpz_class value_at_one(const Poly& p) {
    mpz_class s = 0;
    for (const auto& c : p) s += c;
    return s;
}

// (1 - t) multiplicity of p and the quotient's value at 1.
std::pair<int, mpz_class> order_at_one(Poly p) {
    int m = 0;
    while (!p.empty() && value_at_one(p) == 0) {
        p = *divide_one_minus(p, 1);
        ++m;
    }
    return {m, value_at_one(p)};
}

std::string poly_string(const Poly& p) {
    if (p.empty()) return "0";
    std::ostringstream out;
    bool first = true;
    for (std::size_t i = 0; i < p.size(); ++i) {
        if (p[i] == 0) continue;
        mpz_class mag = abs(p[i]);
        bool neg = p[i] < 0;
        if (first) {
            if (neg) out << "-";
        } else {
            out << (neg ? " - " : " + ");
        }
        if (i == 0) {
            out << mag.get_str();
        } else {
            if (mag != 1) out << mag.get_str() << "*";
            out << "t";
            if (i > 1) out << "^" << i;
        }
        first = false;
    }
    return out.str();
}

// Parsed subexpression: a polynomial times a product of (1 - t^k) factors.
struct Factored {
    Poly poly{mpz_class(1)};
    std::map<int, int> factors;

    Poly expanded() const {
        Poly p = poly;
        for (const auto& [k, m] : factors)
            for (int i = 0; i < m; ++i) p = mul(p, one_minus_t_power(k));
        return p;
    }

    static Factored leaf(Poly p) {
        Factored f;
        trim(p);
        // recognise 1 - t^k
        if (p.size() >= 2 && p.front() == 1 && p.back() == -1) {
            bool inner_zero = true;
            for (std::size_t i = 1; i + 1 < p.size(); ++i) inner_zero = inner_zero && p[i] == 0;
            if (inner_zero) {
                f.factors[static_cast<int>(p.size() - 1)] = 1;
                return f;
            }
        }
        f.poly = std::move(p);
        return f;
    }
};

Factored product(const Factored& a, const Factored& b) {
    Factored r;
    r.poly = mul(a.poly, b.poly);
    r.factors = a.factors;
    for (const auto& [k, m] : b.factors) r.factors[k] += m;
    return r;
}

class SeriesParser {
public:
    explicit SeriesParser(std::string_view text) : text_(text) {}

    HilbertSeries parse() {
        Factored num = expr();
        std::map<int, int> den;
        while (accept('/')) {
            std::size_t at = pos_;
            Factored d = power();
            if (d.poly != Poly{mpz_class(1)})
                throw SyntaxError("denominator must be a product of (1-t^k) factors", at);
            for (const auto& [k, m] : d.factors) den[k] += m;
        }
        skip_ws();
        if (pos_ != text_.size()) throw SyntaxError("unexpected character '" + std::string(1, text_[pos_]) + "'", pos_);
        return HilbertSeries(num.expanded(), den);
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

    Factored expr() {
        Factored v = term();
        while (true) {
            int sign;
            if (accept('+')) sign = 1;
            else if (accept('-')) sign = -1;
            else return v;
            Factored rhs = term();
            v = Factored::leaf(add(v.expanded(), rhs.expanded(), sign));
        }
    }

    Factored term() {
        Factored v = power();
        while (accept('*')) v = product(v, power());
        return v;
    }

    Factored power() {
        Factored base = factor();
        if (!accept('^')) return base;
        long e = integer();
        Factored r;
        for (long i = 0; i < e; ++i) r = product(r, base);
        return r;
    }

    Factored factor() {
        skip_ws();
        if (pos_ >= text_.size()) throw SyntaxError("unexpected end of input", pos_);
        char c = text_[pos_];
        if (c == '(') {
            ++pos_;
            Factored v = expr();
            if (!accept(')')) throw SyntaxError("expected ')'", pos_);
            return v;
        }
        if (c == '-') {
            ++pos_;
            Factored v = power();
            for (auto& x : v.poly) x = -x;
            return Factored::leaf(v.expanded());
        }
        if (c == 't') {
            ++pos_;
            return Factored::leaf(Poly{mpz_class(0), mpz_class(1)});
        }
        if (std::isdigit(static_cast<unsigned char>(c))) return Factored::leaf(Poly{mpz_class(integer())});
        throw SyntaxError("unexpected character '" + std::string(1, c) + "'", pos_);
    }

    std::string_view text_;
    std::size_t pos_ = 0;
};

}  // namespace

HilbertSeries::HilbertSeries() : numerator_{mpz_class(1)} {}

HilbertSeries::HilbertSeries(Poly numerator, std::map<int, int> denominator)
    : numerator_(std::move(numerator)), denominator_(std::move(denominator)) {
    trim(numerator_);
    for (const auto& [k, m] : denominator_)
        if (k < 1 || m < 0) throw SyntaxError("invalid denominator factor", 0);
    reduce();
}

void HilbertSeries::reduce() {
    for (auto it = denominator_.begin(); it != denominator_.end();) {
        while (it->second > 0) {
            auto q = divide_one_minus(numerator_, it->first);
            if (!q) break;
            numerator_ = std::move(*q);
            --it->second;
        }
        if (it->second == 0) it = denominator_.erase(it);
        else ++it;
    }
}

HilbertSeries HilbertSeries::parse(std::string_view text) {
    return SeriesParser(text).parse();
}

HilbertSeries HilbertSeries::polynomial_ring(int n) {
    std::map<int, int> den;
    if (n > 0) den[1] = n;
    return HilbertSeries(Poly{mpz_class(1)}, den);
}

std::vector<mpz_class> HilbertSeries::expand(int max_degree) const {
    std::vector<mpz_class> c(static_cast<std::size_t>(max_degree) + 1, mpz_class(0));
    for (std::size_t i = 0; i < numerator_.size() && i < c.size(); ++i) c[i] = numerator_[i];
    for (const auto& [k, m] : denominator_)
        for (int rep = 0; rep < m; ++rep)
            for (std::size_t i = static_cast<std::size_t>(k); i < c.size(); ++i) c[i] += c[i - static_cast<std::size_t>(k)];
    return c;
}

std::string HilbertSeries::to_string() const {
    std::string num = poly_string(numerator_);
    if (denominator_.empty()) return num;
    std::vector<std::string> parts;
    for (const auto& [k, m] : denominator_) {
        std::string f = k == 1 ? "(1-t)" : "(1-t^" + std::to_string(k) + ")";
        if (m > 1) f += "^" + std::to_string(m);
        parts.push_back(f);
    }
    bool single_term = numerator_.size() <= 1 || num.find_first_of("+-", 1) == std::string::npos;
    std::string out = single_term ? num : "(" + num + ")";
    out += "/";
    if (parts.size() == 1) {
        out += parts.front();
    } else {
        out += "(";
        for (std::size_t i = 0; i < parts.size(); ++i) out += (i ? "*" : "") + parts[i];
        out += ")";
    }
    return out;
}

HilbertSeries operator*(const HilbertSeries& a, const HilbertSeries& b) {
    std::map<int, int> den = a.denominator_;
    for (const auto& [k, m] : b.denominator_) den[k] += m;
    return HilbertSeries(mul(a.numerator_, b.numerator_), den);
}

HilbertSeries HilbertSeries::times(const Poly& p) const {
    return HilbertSeries(mul(numerator_, p), denominator_);
}

HilbertSeries HilbertSeries::over(int k, int m) const {
    std::map<int, int> den = denominator_;
    den[k] += m;
    return HilbertSeries(numerator_, den);
}

RankReport rank_at_one(const HilbertSeries& hA, const HilbertSeries& hZ) {
    if (hA.numerator().empty() || hZ.numerator().empty()) throw PoleAtOne("zero series");
    auto [ordA, valA] = order_at_one(hA.numerator());
    auto [ordZ, valZ] = order_at_one(hZ.numerator());
    // hA/hZ = numA * denZ / (numZ * denA); each (1 - t^k) contributes one (1 - t) and a factor k at t = 1.
    int top = ordA, bottom = ordZ;
    mpz_class num = valA, den = valZ;
    for (const auto& [k, m] : hZ.denominator()) {
        top += m;
        for (int i = 0; i < m; ++i) num *= k;
    }
    for (const auto& [k, m] : hA.denominator()) {
        bottom += m;
        for (int i = 0; i < m; ++i) den *= k;
    }
    if (top != bottom)
        throw PoleAtOne("(1-t) multiplicities differ: " + std::to_string(top) + " vs " + std::to_string(bottom));
    mpq_class ratio(num, den);
    ratio.canonicalize();
    if (ratio.get_den() != 1 || ratio <= 0)
        throw NonIntegerRank("ratio at t=1 is " + ratio.get_str());
    RankReport report{ratio.get_num(), std::nullopt};
    mpz_class root = sqrt(report.rank);
    if (root * root == report.rank) report.pi_degree = root;
    return report;
}

bool fit_series(const std::vector<long>& dims, const HilbertSeries& tmpl) {
    if (dims.empty()) return true;
    auto c = tmpl.expand(static_cast<int>(dims.size()) - 1);
    for (std::size_t i = 0; i < dims.size(); ++i)
        if (c[i] != dims[i]) return false;
    return true;
}

}  // namespace ozonelab::hilbert
