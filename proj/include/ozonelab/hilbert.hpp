#pragma once

// Hilbert series of the form p(t) / prod_k (1 - t^k)^{m_k}.

#include <gmpxx.h>

#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace ozonelab::hilbert {

using Poly = std::vector<mpz_class>;  // constant term first

class HilbertSeries {
public:
    HilbertSeries();  // the constant series 1
    HilbertSeries(Poly numerator, std::map<int, int> denominator);

    /// Parses e.g. "(1-t^16)/((1-t^4)^3*(1-t^8))". Throws SyntaxError.
    static HilbertSeries parse(std::string_view text);
    /// 1/(1-t)^n
    static HilbertSeries polynomial_ring(int n);

    const Poly& numerator() const noexcept { return numerator_; }
    /// k -> multiplicity of the factor (1 - t^k)
    const std::map<int, int>& denominator() const noexcept { return denominator_; }

    /// Taylor coefficients of degrees 0..max_degree.
    std::vector<mpz_class> expand(int max_degree) const;
    std::string to_string() const;

    friend HilbertSeries operator*(const HilbertSeries& a, const HilbertSeries& b);
    /// Multiplies the numerator by an integer polynomial.
    HilbertSeries times(const Poly& p) const;
    /// Divides by (1 - t^k)^m.
    HilbertSeries over(int k, int m = 1) const;

    friend bool operator==(const HilbertSeries& a, const HilbertSeries& b) {
        return a.numerator_ == b.numerator_ && a.denominator_ == b.denominator_;
    }

private:
    void reduce();

    Poly numerator_;
    std::map<int, int> denominator_;
};

struct RankReport {
    mpz_class rank;
    std::optional<mpz_class> pi_degree;  // square root of rank when it is a perfect square
};

/// (hA / hZ) evaluated at t = 1 after cancelling (1 - t) factors.
/// Throws PoleAtOne or NonIntegerRank.
RankReport rank_at_one(const HilbertSeries& hA, const HilbertSeries& hZ);

/// True iff the template's expansion agrees with dims in every listed degree.
bool fit_series(const std::vector<long>& dims, const HilbertSeries& tmpl);

}  // namespace ozonelab::hilbert
