#ifndef LEXPLUS_PIECE_HPP
#define LEXPLUS_PIECE_HPP

#include <algorithm>
#include <vector>

#include "lexplus/monomial.hpp"

namespace lexplus {

/// dim A_d = C(n+d-1, d) for the polynomial ring in n variables.
inline long long ambient_dim(int n, int d) {
    if (d < 0) return 0;
    if (n == 0) return d == 0 ? 1 : 0;
    long long v = 1;
    for (int i = 1; i <= d; ++i) v = v * (n - 1 + i) / i;
    return v;
}

/// All monomials of degree d in n variables, in descending lex order.
inline std::vector<Monomial> monomials_of_degree(int n, int d) {
    std::vector<Monomial> out;
    if (n == 0) {
        if (d == 0) out.push_back(Monomial(std::vector<int>{}));
        return out;
    }
    std::vector<int> exps(static_cast<std::size_t>(n), 0);
    // Descending lex: largest exponent on the smallest index first.
    auto rec = [&](auto&& self, int var, int rest) -> void {
        if (var == n) {
            if (rest == 0) out.push_back(Monomial(exps));
            return;
        }
        if (var == n - 1) {
            exps[static_cast<std::size_t>(var)] = rest;
            out.push_back(Monomial(exps));
            exps[static_cast<std::size_t>(var)] = 0;
            return;
        }
        for (int e = rest; e >= 0; --e) {
            exps[static_cast<std::size_t>(var)] = e;
            self(self, var + 1, rest - e);
        }
        exps[static_cast<std::size_t>(var)] = 0;
    };
    rec(rec, 0, d);
    return out;
}

/// The monomials of one fixed degree of a monomial K-vector space,
/// stored in descending lex order.
class GradedPiece {
public:
    GradedPiece(int n, int degree) : n_(n), degree_(degree) {
        detail::require(n >= 0 && degree >= 0, "bad graded piece parameters");
    }

    GradedPiece(int n, int degree, std::vector<Monomial> members)
        : n_(n), degree_(degree), members_(std::move(members)) {
        for (const auto& m : members_) {
            detail::require(m.n() == n_, "graded piece member in the wrong ring");
            detail::require(m.degree() == degree_, "graded piece member of the wrong degree");
        }
        std::sort(members_.begin(), members_.end(), LexDescending{});
        members_.erase(std::unique(members_.begin(), members_.end()), members_.end());
    }

    static GradedPiece full(int n, int d) { return GradedPiece(n, d, monomials_of_degree(n, d)); }

    int n() const { return n_; }
    int degree() const { return degree_; }
    long long dim() const { return static_cast<long long>(members_.size()); }
    bool empty() const { return members_.empty(); }
    bool is_full() const { return dim() == ambient_dim(n_, degree_); }
    const std::vector<Monomial>& members() const { return members_; }

    bool contains(const Monomial& m) const {
        return std::binary_search(members_.begin(), members_.end(), m, LexDescending{});
    }

    bool contains_piece(const GradedPiece& other) const {
        for (const auto& m : other.members_)
            if (!contains(m)) return false;
        return true;
    }

    bool operator==(const GradedPiece& o) const {
        return n_ == o.n_ && degree_ == o.degree_ && members_ == o.members_;
    }

    /// m_1 * V: every member multiplied by every variable; one degree up.
    GradedPiece multiply() const {
        std::vector<Monomial> out;
        out.reserve(members_.size() * static_cast<std::size_t>(n_));
        for (const auto& m : members_)
            for (int i = 1; i <= n_; ++i) out.push_back(m.times_variable(i));
        return GradedPiece(n_, degree_ + 1, std::move(out));
    }

private:
    int n_;
    int degree_;
    std::vector<Monomial> members_;
};

inline GradedPiece multiply_piece(const GradedPiece& v) { return v.multiply(); }

inline GradedPiece unite(const GradedPiece& a, const GradedPiece& b) {
    detail::require(a.n() == b.n() && a.degree() == b.degree(), "uniting incompatible pieces");
    std::vector<Monomial> all = a.members();
    all.insert(all.end(), b.members().begin(), b.members().end());
    return GradedPiece(a.n(), a.degree(), std::move(all));
}

/// Iterated multiplication: m_j * V = (m_1)^j V.
inline GradedPiece multiply_times(const GradedPiece& v, int j) {
    GradedPiece out = v;
    for (int t = 0; t < j; ++t) out = out.multiply();
    return out;
}

/// The degree-d piece of the pure-powers ideal of the given sequence.
inline GradedPiece pure_powers_piece(const DegreeSequence& degs, int d) {
    std::vector<Monomial> out;
    for (auto& m : monomials_of_degree(degs.n(), d)) {
        for (int i = 1; i <= degs.r(); ++i) {
            if (m.exponent(i) >= degs.cap(i)) {
                out.push_back(m);
                break;
            }
        }
    }
    return GradedPiece(degs.n(), d, std::move(out));
}

// -- slice decomposition ------------------------------------------------------
//
// V = (+)_{i=0}^{d} V_[d-i] x_n^i. Slices are indexed by their own degree:
// slices(V)[j] is the coefficient space (in the first n-1 variables) of
// x_n^{d-j}, a piece of degree j. This is the paper-side convention V_[j];
// it is fixed here once and used everywhere.

inline std::vector<GradedPiece> slices(const GradedPiece& v) {
    int n = v.n(), d = v.degree();
    detail::require(n >= 1, "cannot slice a piece over zero variables");
    std::vector<std::vector<Monomial>> buckets(static_cast<std::size_t>(d + 1));
    for (const auto& m : v.members()) {
        int t = m.exponent(n);  // power of x_n
        std::vector<int> e(m.exponents().begin(), m.exponents().end() - 1);
        buckets[static_cast<std::size_t>(d - t)].push_back(Monomial(std::move(e)));
    }
    std::vector<GradedPiece> out;
    out.reserve(static_cast<std::size_t>(d + 1));
    for (int j = 0; j <= d; ++j)
        out.emplace_back(n - 1, j, std::move(buckets[static_cast<std::size_t>(j)]));
    return out;
}

inline GradedPiece unslice(const std::vector<GradedPiece>& parts, int n, int d) {
    detail::require(static_cast<int>(parts.size()) == d + 1, "wrong number of slices");
    std::vector<Monomial> out;
    for (int j = 0; j <= d; ++j) {
        const auto& part = parts[static_cast<std::size_t>(j)];
        detail::require(part.n() == n - 1 && part.degree() == j, "slice with wrong shape");
        for (const auto& m : part.members()) {
            std::vector<int> e = m.exponents();
            e.push_back(d - j);
            out.push_back(Monomial(std::move(e)));
        }
    }
    return GradedPiece(n, d, std::move(out));
}

/// The dimension sequence: partial sums of slice dimensions starting from
/// the x_n^0 slice, (dim V_[d], dim V_[d] + dim V_[d-1], ..., dim V).
using DimensionSequence = std::vector<long long>;

inline DimensionSequence dimension_sequence(const GradedPiece& v) {
    auto parts = slices(v);
    DimensionSequence out;
    long long acc = 0;
    for (int j = v.degree(); j >= 0; --j) {
        acc += parts[static_cast<std::size_t>(j)].dim();
        out.push_back(acc);
    }
    return out;
}

/// Pointwise comparison of equal-length dimension sequences.
inline bool pointwise_leq(const DimensionSequence& a, const DimensionSequence& b) {
    detail::require(a.size() == b.size(), "comparing dimension sequences of different length");
    for (std::size_t i = 0; i < a.size(); ++i)
        if (a[i] > b[i]) return false;
    return true;
}

}  // namespace lexplus

#endif
