#pragma once

// Exact arithmetic in cyclotomic fields Q(zeta_N).
//
// A CycNum stores the coefficients of its reduced representative modulo the
// N-th cyclotomic polynomial, so equality within one conductor is plain
// coefficient equality. Values with different conductors are lifted to the
// lcm before any binary operation.

#include <gmpxx.h>

#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace ozonelab::cyclo {

using Rational = mpq_class;

int euler_phi(int n);

/// Coefficients (constant term first) of the n-th cyclotomic polynomial.
const std::vector<long long>& cyclotomic_polynomial(int n);

class CycNum {
public:
    CycNum();
    CycNum(long value);  // NOLINT(google-explicit-constructor)
    explicit CycNum(const Rational& value, int conductor = 1);

    /// A fixed primitive n-th root of unity, exp(2*pi*i/n) under the usual embedding.
    static CycNum zeta(int n);
    static CycNum zeta_power(int n, long k);
    /// Builds sum_i coeffs[i] * zeta_n^i and reduces it.
    static CycNum from_powers(int n, const std::vector<Rational>& coeffs);

    int conductor() const noexcept { return conductor_; }
    const std::vector<Rational>& coeffs() const noexcept { return coeffs_; }

    bool is_zero() const;
    bool is_one() const;
    bool is_rational() const;
    /// Requires is_rational().
    Rational rational_value() const;

    /// Same value, represented in Q(zeta_m); m must be a multiple of conductor().
    CycNum lifted(int m) const;
    /// Same value represented at the smallest conductor whose field contains it.
    CycNum canonical() const;
    CycNum inverse() const;
    CycNum pow(long exponent) const;

    CycNum& operator+=(const CycNum& rhs);
    CycNum& operator-=(const CycNum& rhs);
    CycNum& operator*=(const CycNum& rhs);
    CycNum& operator/=(const CycNum& rhs);

    friend CycNum operator+(CycNum a, const CycNum& b) { return a += b; }
    friend CycNum operator-(CycNum a, const CycNum& b) { return a -= b; }
    friend CycNum operator*(CycNum a, const CycNum& b) { return a *= b; }
    friend CycNum operator/(CycNum a, const CycNum& b) { return a /= b; }
    CycNum operator-() const;

    friend bool operator==(const CycNum& a, const CycNum& b);
    friend bool operator!=(const CycNum& a, const CycNum& b) { return !(a == b); }

    /// Serializes the canonical representative in the scalar literal grammar,
    /// e.g. "1/2 - 3*z12^5".
    std::string to_string() const;

private:
    CycNum(int conductor, std::vector<Rational> coeffs);
    void reduce_from(std::vector<Rational> poly);

    int conductor_;
    std::vector<Rational> coeffs_;
};

std::ostream& operator<<(std::ostream& os, const CycNum& x);

/// Multiplicative order of x, or nullopt when x is not a root of unity.
/// Throws ZeroInput for x == 0.
std::optional<int> root_order(const CycNum& x);

/// Parses the scalar literal grammar:
///   expr := term (('+'|'-') term)*;  term := factor (('*'|'/') factor)*;
///   factor := rational | root | '(' expr ')' | '-' factor;
///   root := 'z' INT ('^' INT)?;  rational := INT ('/' INT)?
/// Throws SyntaxError (with position) or DivisionByZero.
CycNum parse_scalar(std::string_view text);

int lcm_conductor(int a, int b);

}  // namespace ozonelab::cyclo
