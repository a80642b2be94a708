#include "ozonelab/automorphism.hpp"

#include "ozonelab/errors.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <numeric>

namespace ozonelab::ozone {

GradedAutomorphism GradedAutomorphism::identity(const Algebra& A) {
    return diagonal(A, std::vector<CycNum>(static_cast<std::size_t>(A.num_generators()), CycNum(1)));
}

GradedAutomorphism GradedAutomorphism::diagonal(const Algebra& A, const std::vector<CycNum>& scalars) {
    if (scalars.size() != static_cast<std::size_t>(A.num_generators()))
        throw DimensionMismatch("diagonal map needs one scalar per generator");
    std::vector<FreeElt> images;
    for (std::size_t i = 0; i < scalars.size(); ++i) images.push_back(FreeElt::generator(static_cast<int>(i), scalars[i]));
    return from_images(A, std::move(images));
}

GradedAutomorphism GradedAutomorphism::from_images(const Algebra& A, std::vector<FreeElt> images) {
    GradedAutomorphism g;
    g.images_ = std::move(images);
    g.finish(A);
    return g;
}

void GradedAutomorphism::finish(const Algebra& A) {
    const std::size_t n = static_cast<std::size_t>(A.num_generators());
    if (images_.size() != n) throw DimensionMismatch("automorphism needs one image per generator");
    for (auto& img : images_) img = A.normal_form(img);
    scalars_.clear();
    permutation_.clear();
    bool monomial = true;
    for (const auto& img : images_) {
        if (img.size() != 1 || img.terms().begin()->first.size() != 1) {
            monomial = false;
            break;
        }
        permutation_.push_back(static_cast<unsigned char>(img.terms().begin()->first[0]));
        scalars_.push_back(img.terms().begin()->second);
    }
    if (monomial) {
        std::vector<int> sorted = permutation_;
        std::sort(sorted.begin(), sorted.end());
        for (std::size_t i = 0; i < n; ++i) monomial = monomial && sorted[i] == static_cast<int>(i);
    }
    if (!monomial) {
        kind_ = Kind::Linear;
        scalars_.clear();
        permutation_.clear();
        identity_ = false;
    } else {
        bool diag = true;
        for (std::size_t i = 0; i < n; ++i) diag = diag && permutation_[i] == static_cast<int>(i);
        kind_ = diag ? Kind::Diagonal : Kind::PermutationDiagonal;
        identity_ = diag && std::all_of(scalars_.begin(), scalars_.end(), [](const CycNum& c) { return c.is_one(); });
    }
    key_.clear();
    for (const auto& img : images_) key_ += img.to_string(A.presentation().generators) + "|";
}

FreeElt GradedAutomorphism::apply_word(const Algebra& A, const nc::Word& w) const {
    if (kind_ != Kind::Linear) {
        CycNum c(1);
        nc::Word out = w;
        for (char& ch : out) {
            std::size_t i = static_cast<unsigned char>(ch);
            c *= scalars_[i];
            ch = static_cast<char>(permutation_[i]);
        }
        if (kind_ == Kind::Diagonal && A.rewrite_system().is_normal_word(out)) return FreeElt::word(out, c);
        return A.normal_form(FreeElt::word(out, c));
    }
    FreeElt r = FreeElt::scalar(CycNum(1));
    for (char ch : w) r = A.multiply(r, images_[static_cast<unsigned char>(ch)]);
    return r;
}

FreeElt GradedAutomorphism::apply(const Algebra& A, const FreeElt& f) const {
    FreeElt g = A.normal_form(f);
    FreeElt out;
    for (const auto& [w, c] : g.terms()) out += apply_word(A, w) * c;
    return out;
}

std::vector<la::SparseVec> GradedAutomorphism::matrix_columns(const Algebra& A, int d) const {
    std::vector<la::SparseVec> cols;
    for (const auto& w : A.basis().words(d)) cols.push_back(A.coords(apply_word(A, w), d));
    return cols;
}

CycNum GradedAutomorphism::trace(const Algebra& A, int d) const {
    CycNum t;
    const auto& words = A.basis().words(d);
    for (std::size_t i = 0; i < words.size(); ++i) t += A.coords(apply_word(A, words[i]), d).get(i);
    return t;
}

GradedAutomorphism GradedAutomorphism::compose(const Algebra& A, const GradedAutomorphism& inner) const {
    std::vector<FreeElt> images;
    images.reserve(images_.size());
    for (const auto& img : inner.images_) images.push_back(apply(A, img));
    GradedAutomorphism g = from_images(A, std::move(images));
    g.verified_ = verified_ && inner.verified_;
    return g;
}

std::string GradedAutomorphism::to_string(const Algebra& A) const {
    const auto& gens = A.presentation().generators;
    std::string out;
    for (std::size_t i = 0; i < images_.size(); ++i) {
        if (i) out += ", ";
        out += gens[i].name + " -> " + images_[i].to_string(gens);
    }
    return out;
}

GradedAutomorphism verify_automorphism(const Algebra& A, std::vector<FreeElt> images, const std::string& name) {
    const auto& pres = A.presentation();
    if (images.size() != pres.generators.size()) throw NotAutomorphism("expected one image per generator");
    GradedAutomorphism g;
    g.images_ = std::move(images);
    for (std::size_t i = 0; i < g.images_.size(); ++i) {
        auto d = A.degree(A.normal_form(g.images_[i]));
        if (!d || *d != pres.generators[i].weight)
            throw NotAutomorphism("image of " + pres.generators[i].name + " is not homogeneous of weight " +
                                  std::to_string(pres.generators[i].weight));
    }
    g.finish(A);
    g.name = name;
    for (std::size_t r = 0; r < pres.relations.size(); ++r) {
        const auto& rel = pres.relations[r];
        if (auto d = A.degree(rel); d) A.require_degree(*d);
        FreeElt image;
        for (const auto& [w, c] : rel.terms()) image += g.apply_word(A, w) * c;
        if (!A.normal_form(image).is_zero())
            throw NotAutomorphism("relation " + std::to_string(r + 1) + " (" + rel.to_string(pres.generators) +
                                  ") is not preserved");
    }
    std::vector<int> weights = pres.weights();
    std::sort(weights.begin(), weights.end());
    weights.erase(std::unique(weights.begin(), weights.end()), weights.end());
    for (int e : weights) {
        auto cols = g.matrix_columns(A, e);
        auto s = la::Subspace::span_sparse(cols, A.dim(e));
        if (s.dim() != A.dim(e)) throw NotAutomorphism("map is not bijective in degree " + std::to_string(e));
    }
    g.verified_ = true;
    return g;
}

GradedAutomorphism verify_automorphism(const Algebra& A, const std::vector<std::pair<std::string, std::string>>& images,
                                       const std::string& name) {
    const auto& pres = A.presentation();
    std::vector<FreeElt> out;
    for (std::size_t i = 0; i < pres.generators.size(); ++i) out.push_back(FreeElt::generator(static_cast<int>(i)));
    for (const auto& [gen, expr] : images) {
        auto i = pres.generator_index(gen);
        if (!i) throw InvalidPresentation("automorphism names unknown generator '" + gen + "'");
        out[static_cast<std::size_t>(*i)] = A.parse(expr);
    }
    return verify_automorphism(A, std::move(out), name);
}

// ---------------------------------------------------------------- groups

FiniteGroupTable FiniteGroupTable::closure(const Algebra& A, const std::vector<GradedAutomorphism>& generators,
                                           std::size_t cap) {
    FiniteGroupTable t;
    GradedAutomorphism e = GradedAutomorphism::identity(A);
    e.name = "id";
    t.index_.emplace(e.key(), 0);
    t.elements_.push_back(e);
    std::vector<GradedAutomorphism> gens;
    for (const auto& g : generators)
        if (!g.is_identity()) gens.push_back(g);
    std::deque<std::size_t> queue{0};
    while (!queue.empty()) {
        std::size_t i = queue.front();
        queue.pop_front();
        for (const auto& g : gens) {
            GradedAutomorphism h = t.elements_[i].compose(A, g);
            if (t.index_.count(h.key())) continue;
            if (t.elements_.size() >= cap)
                throw BudgetExceeded("group closure exceeds " + std::to_string(cap) + " elements");
            t.index_.emplace(h.key(), t.elements_.size());
            queue.push_back(t.elements_.size());
            t.elements_.push_back(std::move(h));
        }
    }
    const std::size_t n = t.elements_.size();
    t.table_.assign(n * n, 0);
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = 0; b < n; ++b) {
            GradedAutomorphism h = t.elements_[a].compose(A, t.elements_[b]);
            auto it = t.index_.find(h.key());
            if (it == t.index_.end()) throw CrossCheckFailure("group closure is not closed under composition");
            t.table_[a * n + b] = it->second;
        }
    return t;
}

std::size_t FiniteGroupTable::power(std::size_t a, long k) const {
    std::size_t r = identity();
    for (long i = 0; i < k; ++i) r = multiply(r, a);
    return r;
}

std::size_t FiniteGroupTable::element_order(std::size_t a) const {
    std::size_t r = a, k = 1;
    while (r != identity()) {
        r = multiply(r, a);
        ++k;
    }
    return k;
}

std::optional<std::size_t> FiniteGroupTable::find(const GradedAutomorphism& g) const {
    auto it = index_.find(g.key());
    if (it == index_.end()) return std::nullopt;
    return it->second;
}

bool FiniteGroupTable::is_abelian() const {
    const std::size_t n = order();
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = a + 1; b < n; ++b)
            if (multiply(a, b) != multiply(b, a)) return false;
    return true;
}

std::vector<long> FiniteGroupTable::invariant_factors() const {
    if (!is_abelian()) throw NonAbelianGroup("group of order " + std::to_string(order()) + " is not abelian");
    long n = static_cast<long>(order());
    std::vector<long> primes;
    for (long p = 2, m = n; m > 1; ++p) {
        if (m % p) continue;
        primes.push_back(p);
        while (m % p == 0) m /= p;
    }
    // p-part exponents, largest first
    std::vector<std::vector<int>> parts;
    for (long p : primes) {
        std::vector<long> counts{1};  // counts[k] = #{g : g^{p^k} = 1}
        long pk = 1;
        long ppart = 1;
        for (long m = n; m % p == 0; m /= p) ppart *= p;
        while (counts.back() < ppart) {
            pk *= p;
            long c = 0;
            for (std::size_t g = 0; g < order(); ++g)
                if (power(g, pk) == identity()) ++c;
            counts.push_back(c);
        }
        std::vector<int> at_least;  // at_least[k-1] = number of factors of order >= p^k
        for (std::size_t k = 1; k < counts.size(); ++k) {
            long ratio = counts[k] / counts[k - 1];
            int r = 0;
            while (ratio > 1) {
                ratio /= p;
                ++r;
            }
            at_least.push_back(r);
        }
        std::vector<int> exps;
        for (std::size_t k = 0; k < at_least.size(); ++k) {
            int next = k + 1 < at_least.size() ? at_least[k + 1] : 0;
            for (int i = 0; i < at_least[k] - next; ++i) exps.push_back(static_cast<int>(k + 1));
        }
        std::sort(exps.rbegin(), exps.rend());
        parts.push_back(exps);
    }
    std::size_t len = 0;
    for (const auto& e : parts) len = std::max(len, e.size());
    std::vector<long> factors(len, 1);
    for (std::size_t i = 0; i < primes.size(); ++i)
        for (std::size_t j = 0; j < parts[i].size(); ++j)
            for (int k = 0; k < parts[i][j]; ++k) factors[j] *= primes[i];
    return factors;
}

bool FiniteGroupTable::contains(const FiniteGroupTable& other) const {
    for (const auto& g : other.elements_)
        if (!index_.count(g.key())) return false;
    return true;
}

bool FiniteGroupTable::same_elements(const FiniteGroupTable& other) const {
    return order() == other.order() && contains(other);
}

std::string factors_string(const std::vector<long>& factors) {
    std::string out = "(";
    for (std::size_t i = 0; i < factors.size(); ++i) out += (i ? "," : "") + std::to_string(factors[i]);
    return out + ")";
}

}  // namespace ozonelab::ozone
