#pragma once

// Independent dimension oracle for finitely presented graded algebras.
//
// Works over F_p for a prime p = 1 mod N, with zeta_N sent to a primitive N-th
// root of unity mod p, and computes dim A_d = dim T(V)_d - dim I_d by dense
// Gaussian elimination on the tensor algebra. No rewriting is involved.

#include "ozonelab/ncalg.hpp"

#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <vector>

namespace oracle {

using u64 = std::uint64_t;

inline u64 mulmod(u64 a, u64 b, u64 p) { return static_cast<u64>((static_cast<unsigned __int128>(a) * b) % p); }

inline u64 powmod(u64 a, u64 e, u64 p) {
    u64 r = 1;
    a %= p;
    while (e) {
        if (e & 1) r = mulmod(r, a, p);
        a = mulmod(a, a, p);
        e >>= 1;
    }
    return r;
}

inline bool is_prime(u64 n) {
    if (n < 2) return false;
    for (u64 d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

inline std::vector<u64> prime_factors(u64 n) {
    std::vector<u64> out;
    for (u64 d = 2; d * d <= n; ++d) {
        if (n % d) continue;
        out.push_back(d);
        while (n % d == 0) n /= d;
    }
    if (n > 1) out.push_back(n);
    return out;
}

class PrimeField {
public:
    explicit PrimeField(int N) : N_(static_cast<u64>(N)) {
        p_ = (u64{1} << 30) / N_ * N_ + 1;
        while (!is_prime(p_)) p_ += N_;
        auto qs = prime_factors(N_);
        for (u64 a = 2;; ++a) {
            u64 h = powmod(a, (p_ - 1) / N_, p_);
            bool primitive = true;
            for (u64 q : qs) primitive = primitive && powmod(h, N_ / q, p_) != 1;
            if (primitive) {
                omega_ = h;
                break;
            }
        }
    }

    u64 p() const { return p_; }
    u64 inv(u64 a) const { return powmod(a, p_ - 2, p_); }

    u64 reduce(const mpz_class& z) const {
        mpz_class r = z % mpz_class(static_cast<unsigned long>(p_));
        if (r < 0) r += static_cast<unsigned long>(p_);
        return r.get_ui();
    }
    u64 reduce(const mpq_class& q) const { return mulmod(reduce(q.get_num()), inv(reduce(q.get_den())), p_); }

    u64 image(const ozonelab::cyclo::CycNum& c) const {
        u64 n = static_cast<u64>(c.conductor());
        if (N_ % n) throw std::logic_error("oracle: scalar outside the chosen field");
        u64 zeta = powmod(omega_, N_ / n, p_);
        u64 acc = 0, pw = 1;
        for (const auto& a : c.coeffs()) {
            acc = (acc + mulmod(reduce(a), pw, p_)) % p_;
            pw = mulmod(pw, zeta, p_);
        }
        return acc;
    }

private:
    u64 N_;
    u64 p_ = 0;
    u64 omega_ = 0;
};

/// Words of each weighted degree 0..max_degree as index strings.
inline std::vector<std::vector<std::string>> words_by_degree(const std::vector<int>& weights, int max_degree) {
    std::vector<std::vector<std::string>> out(static_cast<std::size_t>(max_degree) + 1);
    out[0].push_back("");
    for (int d = 1; d <= max_degree; ++d)
        for (std::size_t g = 0; g < weights.size(); ++g) {
            int prev = d - weights[g];
            if (prev < 0) continue;
            for (const auto& w : out[static_cast<std::size_t>(prev)]) out[static_cast<std::size_t>(d)].push_back(w + char(g));
        }
    return out;
}

/// Graded dimensions of the presented algebra in degrees 0..max_degree.
inline std::vector<long> dims(const ozonelab::nc::AlgebraPresentation& pres, int max_degree) {
    const std::vector<int> weights = pres.weights();
    PrimeField F(2 * pres.conductor());
    const u64 p = F.p();
    auto words = words_by_degree(weights, max_degree);

    struct Rel {
        int degree;
        std::vector<std::pair<std::string, u64>> terms;
    };
    std::vector<Rel> rels;
    for (const auto& r : pres.relations) {
        Rel rel{-1, {}};
        for (const auto& [w, c] : r.terms()) {
            rel.degree = ozonelab::nc::word_degree(w, weights);
            rel.terms.emplace_back(w, F.image(c));
        }
        if (rel.degree > 0) rels.push_back(std::move(rel));
    }

    std::vector<long> out;
    for (int d = 0; d <= max_degree; ++d) {
        const auto& basis = words[static_cast<std::size_t>(d)];
        std::unordered_map<std::string, std::size_t> index;
        for (std::size_t i = 0; i < basis.size(); ++i) index[basis[i]] = i;
        const std::size_t n = basis.size();
        std::vector<std::vector<u64>> pivots(n);
        std::size_t rank = 0;
        auto insert = [&](std::vector<u64> row) {
            for (std::size_t c = 0; c < n; ++c) {
                if (!row[c]) continue;
                if (pivots[c].empty()) {
                    u64 s = F.inv(row[c]);
                    for (auto& x : row) x = mulmod(x, s, p);
                    pivots[c] = std::move(row);
                    ++rank;
                    return;
                }
                u64 f = row[c];
                const auto& pr = pivots[c];
                for (std::size_t k = c; k < n; ++k)
                    if (pr[k]) row[k] = (row[k] + p - mulmod(f, pr[k], p)) % p;
            }
        };
        for (const auto& rel : rels) {
            for (int left = 0; left + rel.degree <= d; ++left) {
                int right = d - rel.degree - left;
                for (const auto& u : words[static_cast<std::size_t>(left)])
                    for (const auto& v : words[static_cast<std::size_t>(right)]) {
                        std::vector<u64> row(n, 0);
                        for (const auto& [w, c] : rel.terms) {
                            auto& x = row[index.at(u + w + v)];
                            x = (x + c) % p;
                        }
                        insert(std::move(row));
                    }
            }
        }
        out.push_back(static_cast<long>(n - rank));
    }
    return out;
}

}  // namespace oracle
