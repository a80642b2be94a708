#include "ozonelab/cyclo.hpp"

#include "ozonelab/errors.hpp"

#include <cctype>
#include <map>
#include <mutex>
#include <numeric>
#include <ostream>

namespace ozonelab::cyclo {

namespace {

using Poly = std::vector<Rational>;

void trim(Poly& p) {
    while (!p.empty() && p.back() == 0) p.pop_back();
}

// Quotient and remainder of a by b over Q; b must be nonzero after trimming.
std::pair<Poly, Poly> divmod(Poly a, const Poly& b) {
    trim(a);
    Poly q;
    if (a.size() < b.size()) return {q, a};
    q.assign(a.size() - b.size() + 1, Rational(0));
    const Rational& lead = b.back();
    for (std::size_t i = a.size(); i-- >= b.size();) {
        if (a[i] == 0) continue;
        Rational c = a[i] / lead;
        std::size_t shift = i - (b.size() - 1);
        q[shift] = c;
        for (std::size_t j = 0; j < b.size(); ++j) a[shift + j] -= c * b[j];
    }
    trim(a);
    trim(q);
    return {q, a};
}

Poly mul(const Poly& a, const Poly& b) {
    if (a.empty() || b.empty()) return {};
    Poly r(a.size() + b.size() - 1, Rational(0));
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i] == 0) continue;
        for (std::size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
    }
    return r;
}

Poly sub(Poly a, const Poly& b) {
    if (a.size() < b.size()) a.resize(b.size(), Rational(0));
    for (std::size_t i = 0; i < b.size(); ++i) a[i] -= b[i];
    trim(a);
    return a;
}

Poly to_rational_poly(const std::vector<long long>& p) {
    Poly r;
    r.reserve(p.size());
    for (long long c : p) r.emplace_back(static_cast<long>(c));
    return r;
}

std::string rational_string(const Rational& r) {
    return r.get_str();
}

}  // namespace

int euler_phi(int n) {
    int result = n;
    for (int p = 2; p * p <= n; ++p) {
        if (n % p == 0) {
            while (n % p == 0) n /= p;
            result -= result / p;
        }
    }
    if (n > 1) result -= result / n;
    return result;
}

int lcm_conductor(int a, int b) {
    return std::lcm(a, b);
}

const std::vector<long long>& cyclotomic_polynomial(int n) {
    static std::mutex mutex;
    static std::map<int, std::vector<long long>> cache;
    {
        std::lock_guard lock(mutex);
        if (auto it = cache.find(n); it != cache.end()) return it->second;
    }
    // x^n - 1 divided by Phi_d for every proper divisor d.
    std::vector<long long> p(static_cast<std::size_t>(n) + 1, 0);
    p[0] = -1;
    p[static_cast<std::size_t>(n)] = 1;
    for (int d = 1; d < n; ++d) {
        if (n % d != 0) continue;
        const auto& f = cyclotomic_polynomial(d);
        // exact division by a monic polynomial
        std::vector<long long> q(p.size() - f.size() + 1, 0);
        for (std::size_t i = p.size(); i-- >= f.size();) {
            long long c = p[i];
            std::size_t shift = i - (f.size() - 1);
            q[shift] = c;
            if (c == 0) continue;
            for (std::size_t j = 0; j < f.size(); ++j) p[shift + j] -= c * f[j];
        }
        p = std::move(q);
    }
    std::lock_guard lock(mutex);
    return cache.emplace(n, std::move(p)).first->second;
}

CycNum::CycNum() : conductor_(1), coeffs_{Rational(0)} {}

CycNum::CycNum(long value) : conductor_(1), coeffs_{Rational(value)} {}

CycNum::CycNum(const Rational& value, int conductor)
    : conductor_(conductor), coeffs_(static_cast<std::size_t>(euler_phi(conductor)), Rational(0)) {
    coeffs_[0] = value;
    coeffs_[0].canonicalize();
}

CycNum::CycNum(int conductor, std::vector<Rational> coeffs)
    : conductor_(conductor), coeffs_() {
    reduce_from(std::move(coeffs));
}

void CycNum::reduce_from(Poly poly) {
    const auto& phi_poly = cyclotomic_polynomial(conductor_);
    const std::size_t deg = phi_poly.size() - 1;
    for (std::size_t i = poly.size(); i-- > deg;) {
        if (poly[i] == 0) continue;
        Rational c = poly[i];
        std::size_t shift = i - deg;
        for (std::size_t j = 0; j <= deg; ++j) {
            if (phi_poly[j] != 0) poly[shift + j] -= c * static_cast<long>(phi_poly[j]);
        }
    }
    poly.resize(deg, Rational(0));
    coeffs_ = std::move(poly);
}

CycNum CycNum::zeta(int n) {
    return zeta_power(n, 1);
}

CycNum CycNum::zeta_power(int n, long k) {
    if (n < 1) throw InvalidPresentation("root of unity order must be positive");
    long e = ((k % n) + n) % n;
    Poly p(static_cast<std::size_t>(e) + 1, Rational(0));
    p[static_cast<std::size_t>(e)] = 1;
    return CycNum(n, std::move(p));
}

CycNum CycNum::from_powers(int n, const std::vector<Rational>& coeffs) {
    Poly p(static_cast<std::size_t>(n), Rational(0));
    for (std::size_t i = 0; i < coeffs.size(); ++i) {
        Rational c = coeffs[i];
        c.canonicalize();
        p[i % static_cast<std::size_t>(n)] += c;
    }
    return CycNum(n, std::move(p));
}

bool CycNum::is_zero() const {
    for (const auto& c : coeffs_)
        if (c != 0) return false;
    return true;
}

bool CycNum::is_rational() const {
    for (std::size_t i = 1; i < coeffs_.size(); ++i)
        if (coeffs_[i] != 0) return false;
    return true;
}

bool CycNum::is_one() const {
    return is_rational() && coeffs_[0] == 1;
}

Rational CycNum::rational_value() const {
    return coeffs_[0];
}

CycNum CycNum::lifted(int m) const {
    if (m == conductor_) return *this;
    if (m % conductor_ != 0) throw InvalidPresentation("cannot lift conductor " + std::to_string(conductor_) + " to " + std::to_string(m));
    std::size_t step = static_cast<std::size_t>(m / conductor_);
    Poly p((coeffs_.size() - 1) * step + 1, Rational(0));
    for (std::size_t i = 0; i < coeffs_.size(); ++i) p[i * step] = coeffs_[i];
    return CycNum(m, std::move(p));
}

namespace {

// Solves sum_k c_k * basis[k] = target over Q; nullopt when inconsistent.
std::optional<std::vector<Rational>> solve_rational(const std::vector<std::vector<Rational>>& basis,
                                                    const std::vector<Rational>& target) {
    std::size_t rows = target.size(), cols = basis.size();
    std::vector<std::vector<Rational>> m(rows, std::vector<Rational>(cols + 1));
    for (std::size_t i = 0; i < rows; ++i) {
        for (std::size_t j = 0; j < cols; ++j) m[i][j] = basis[j][i];
        m[i][cols] = target[i];
    }
    std::vector<std::size_t> pivot_cols;
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols && r < rows; ++c) {
        std::size_t p = r;
        while (p < rows && m[p][c] == 0) ++p;
        if (p == rows) continue;
        std::swap(m[p], m[r]);
        Rational inv = 1 / m[r][c];
        for (auto& v : m[r]) v *= inv;
        for (std::size_t i = 0; i < rows; ++i) {
            if (i == r || m[i][c] == 0) continue;
            Rational f = m[i][c];
            for (std::size_t j = c; j <= cols; ++j) m[i][j] -= f * m[r][j];
        }
        pivot_cols.push_back(c);
        ++r;
    }
    for (std::size_t i = r; i < rows; ++i)
        if (m[i][cols] != 0) return std::nullopt;
    std::vector<Rational> x(cols);
    for (std::size_t i = 0; i < pivot_cols.size(); ++i) x[pivot_cols[i]] = m[i][cols];
    return x;
}

}  // namespace

CycNum CycNum::canonical() const {
    if (is_rational()) return CycNum(coeffs_[0]);
    for (int m = 1; m < conductor_; ++m) {
        if (conductor_ % m != 0) continue;
        std::vector<std::vector<Rational>> basis;
        for (int k = 0; k < euler_phi(m); ++k)
            basis.push_back(zeta_power(m, k).lifted(conductor_).coeffs_);
        if (auto c = solve_rational(basis, coeffs_)) return CycNum(m, std::move(*c));
    }
    return *this;
}

namespace {

// Brings two values into a common conductor.
int align(CycNum& a, CycNum& b) {
    if (a.conductor() == b.conductor()) return a.conductor();
    int m = std::lcm(a.conductor(), b.conductor());
    a = a.lifted(m);
    b = b.lifted(m);
    return m;
}

}  // namespace

CycNum& CycNum::operator+=(const CycNum& rhs) {
    if (rhs.is_rational()) {
        coeffs_[0] += rhs.coeffs_[0];
        return *this;
    }
    if (is_rational() && rhs.conductor_ != conductor_) {
        Rational c = coeffs_[0];
        *this = rhs;
        coeffs_[0] += c;
        return *this;
    }
    if (rhs.conductor_ == conductor_) {
        for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] += rhs.coeffs_[i];
        return *this;
    }
    CycNum r = rhs;
    align(*this, r);
    return *this += r;
}

CycNum& CycNum::operator-=(const CycNum& rhs) {
    if (rhs.is_rational()) {
        coeffs_[0] -= rhs.coeffs_[0];
        return *this;
    }
    if (is_rational() && rhs.conductor_ != conductor_) {
        Rational c = coeffs_[0];
        *this = -rhs;
        coeffs_[0] += c;
        return *this;
    }
    if (rhs.conductor_ == conductor_) {
        for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] -= rhs.coeffs_[i];
        return *this;
    }
    CycNum r = rhs;
    align(*this, r);
    return *this -= r;
}

CycNum& CycNum::operator*=(const CycNum& rhs) {
    if (rhs.is_rational()) {
        const Rational& c = rhs.coeffs_[0];
        for (auto& v : coeffs_) v *= c;
        return *this;
    }
    if (is_rational()) {
        Rational c = coeffs_[0];
        *this = rhs;
        for (auto& v : coeffs_) v *= c;
        return *this;
    }
    if (rhs.conductor_ != conductor_) {
        CycNum r = rhs;
        align(*this, r);
        return *this *= r;
    }
    reduce_from(mul(coeffs_, rhs.coeffs_));
    return *this;
}

CycNum CycNum::inverse() const {
    if (is_zero()) throw DivisionByZero("inverse of zero");
    if (is_rational()) return CycNum(Rational(1) / coeffs_[0], conductor_);
    // Extended Euclid: s*a + t*phi = g with g a nonzero constant.
    Poly modulus = to_rational_poly(cyclotomic_polynomial(conductor_));
    Poly a = coeffs_;
    trim(a);
    Poly r0 = modulus, r1 = a;
    Poly s0{}, s1{Rational(1)};
    while (r1.size() > 1) {
        auto [q, r] = divmod(r0, r1);
        Poly s2 = sub(s0, mul(q, s1));
        r0 = std::move(r1);
        r1 = std::move(r);
        s0 = std::move(s1);
        s1 = std::move(s2);
    }
    // r1 is a nonzero constant since Phi_N is irreducible.
    Rational g = r1.at(0);
    for (auto& c : s1) c /= g;
    return CycNum(conductor_, std::move(s1));
}

CycNum& CycNum::operator/=(const CycNum& rhs) {
    if (rhs.is_zero()) throw DivisionByZero("division by zero");
    return *this *= rhs.inverse();
}

CycNum CycNum::operator-() const {
    CycNum r = *this;
    for (auto& c : r.coeffs_) c = -c;
    return r;
}

CycNum CycNum::pow(long exponent) const {
    if (exponent < 0) return inverse().pow(-exponent);
    CycNum result(Rational(1), conductor_);
    CycNum base = *this;
    while (exponent > 0) {
        if (exponent & 1) result *= base;
        exponent >>= 1;
        if (exponent) base *= base;
    }
    return result;
}

bool operator==(const CycNum& a, const CycNum& b) {
    if (a.conductor_ == b.conductor_) return a.coeffs_ == b.coeffs_;
    bool ra = a.is_rational(), rb = b.is_rational();
    if (ra || rb) return ra && rb && a.coeffs_[0] == b.coeffs_[0];
    CycNum x = a, y = b;
    align(x, y);
    return x.coeffs_ == y.coeffs_;
}

std::string CycNum::to_string() const {
    if (!is_rational()) {
        CycNum c = canonical();
        if (c.conductor_ != conductor_) return c.to_string();
    }
    std::string out;
    bool first = true;
    for (std::size_t i = 0; i < coeffs_.size(); ++i) {
        const Rational& c = coeffs_[i];
        if (c == 0) continue;
        bool negative = c < 0;
        Rational mag = negative ? Rational(-c) : c;
        std::string term;
        if (i == 0) {
            term = rational_string(mag);
        } else {
            std::string mono = "z" + std::to_string(conductor_);
            if (i > 1) mono += "^" + std::to_string(i);
            term = (mag == 1) ? mono : rational_string(mag) + "*" + mono;
        }
        if (first) {
            out = negative ? "-" + term : term;
        } else {
            out += negative ? " - " : " + ";
            out += term;
        }
        first = false;
    }
    return first ? "0" : out;
}

std::ostream& operator<<(std::ostream& os, const CycNum& x) {
    return os << x.to_string();
}

std::optional<int> root_order(const CycNum& x) {
    if (x.is_zero()) throw ZeroInput("root_order of zero");
    // A root of unity in Q(zeta_N) has order dividing lcm(2, N), hence dividing 2N.
    int bound = 2 * x.conductor();
    for (int d = 1; d <= bound; ++d) {
        if (bound % d != 0) continue;
        if (x.pow(d).is_one()) return d;
    }
    return std::nullopt;
}

namespace {

class ScalarParser {
public:
    explicit ScalarParser(std::string_view text) : text_(text) {}

    CycNum parse() {
        CycNum v = expr();
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

    CycNum expr() {
        CycNum v = term();
        while (true) {
            if (accept('+')) v += term();
            else if (accept('-')) v -= term();
            else return v;
        }
    }

    CycNum term() {
        CycNum v = factor();
        while (true) {
            if (accept('*')) {
                v *= factor();
            } else if (accept('/')) {
                std::size_t at = pos_;
                CycNum d = factor();
                if (d.is_zero()) throw DivisionByZero("division by zero at position " + std::to_string(at));
                v /= d;
            } else {
                return v;
            }
        }
    }

    CycNum factor() {
        skip_ws();
        if (pos_ >= text_.size()) throw SyntaxError("unexpected end of input", pos_);
        char c = text_[pos_];
        if (c == '(') {
            ++pos_;
            CycNum v = expr();
            if (!accept(')')) throw SyntaxError("expected ')'", pos_);
            return v;
        }
        if (c == '-') {
            ++pos_;
            return -factor();
        }
        if (c == 'z') {
            std::size_t at = pos_;
            ++pos_;
            long n = integer();
            if (n < 1) throw SyntaxError("root order must be positive", at);
            long k = 1;
            if (accept('^')) k = integer();
            return CycNum::zeta_power(static_cast<int>(n), k);
        }
        if (std::isdigit(static_cast<unsigned char>(c))) return CycNum(Rational(integer()));
        throw SyntaxError("unexpected character '" + std::string(1, c) + "'", pos_);
    }

    std::string_view text_;
    std::size_t pos_ = 0;
};

}  // namespace

CycNum parse_scalar(std::string_view text) {
    return ScalarParser(text).parse();
}

}  // namespace ozonelab::cyclo
