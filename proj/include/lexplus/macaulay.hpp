#ifndef LEXPLUS_MACAULAY_HPP
#define LEXPLUS_MACAULAY_HPP

#include <map>
#include <tuple>
#include <vector>

#include "lexplus/ideal.hpp"
#include "lexplus/lpp.hpp"

namespace lexplus {

/// Binomial coefficient, 0 outside the triangle.
inline long long binom(long long a, long long b) {
    if (b < 0 || a < 0 || b > a) return 0;
    b = std::min(b, a - b);
    long long v = 1;
    for (long long i = 1; i <= b; ++i) v = v * (a - b + i) / i;
    return v;
}

/// The bracket [h; d]: the dimension of the degree-d piece of
/// K[x_{n-h+1},...,x_n] / (x_i^{a_i} : n-h+1 <= i <= n), and 0 when h = 0.
/// Counts exponent vectors of length h with entry i strictly below
/// a_{n-h+i}, summing to d. Depends on n through which caps apply.
inline long long bracket(int h, int d, const DegreeSequence& degs) {
    detail::require(h >= 0 && h <= degs.n(), "bracket: variable count out of range");
    detail::require(d >= 1, "bracket: degree must be at least 1");
    if (h == 0) return 0;
    int n = degs.n();
    // ways[s] = number of partial exponent vectors with sum s
    std::vector<long long> ways(static_cast<std::size_t>(d + 1), 0);
    ways[0] = 1;
    for (int t = 1; t <= h; ++t) {
        int var = n - h + t;
        // exponent never exceeds d, so an infinite cap behaves like d+1
        int cap = static_cast<int>(degs.cap_or(var, d + 1));
        std::vector<long long> next(static_cast<std::size_t>(d + 1), 0);
        for (int s = 0; s <= d; ++s) {
            if (ways[static_cast<std::size_t>(s)] == 0) continue;
            for (int e = 0; e < cap && s + e <= d; ++e)
                next[static_cast<std::size_t>(s + e)] += ways[static_cast<std::size_t>(s)];
        }
        ways = std::move(next);
    }
    return ways[static_cast<std::size_t>(d)];
}

/// The (a,n)-Macaulay representation of k in base d:
/// k = [k_d; d] + [k_{d-1}; d-1] + ... + [k_1; 1] with
/// k_d >= ... >= k_1 >= 0 and the multiplicity constraint
/// #{t : k_t = i} <= a_{n-i} - 1 for 0 <= i < n (no constraint when
/// a_{n-i} is infinite), and <= 1 for i = n.
struct MacaulayRep {
    int base;                               // d
    std::vector<std::pair<int, int>> terms; // (k_t, t) for t = d down to 1
    DegreeSequence degs;

    long long evaluate() const {
        long long v = 0;
        for (auto [kt, t] : terms) v += bracket(kt, t, degs);
        return v;
    }

    /// [k_d; d+1] + ... + [k_1; 2], the bound k^<d>.
    long long shifted_value() const {
        long long v = 0;
        for (auto [kt, t] : terms) v += bracket(kt, t + 1, degs);
        return v;
    }
};

namespace detail {

/// How many times the value v may appear among the k_t.
inline long long rep_value_budget(int v, const DegreeSequence& degs) {
    int n = degs.n();
    if (v == n) return 1;
    int idx = n - v;  // constraint a_{n-v} - 1
    if (!degs.has_cap(idx)) return -1;  // unbounded
    return degs.cap(idx) - 1;
}

struct RepSearch {
    const DegreeSequence& degs;
    std::map<std::tuple<int, int, int, long long>, bool> memo;

    /// Can positions s, s-1, ..., 1 be filled with values <= vcur (where
    /// vcur has already been used `used` times) so the brackets sum to rem?
    bool feasible(int s, int vcur, int used, long long rem) {
        if (rem < 0) return false;
        if (s == 0) return rem == 0;
        auto key = std::make_tuple(s, vcur, used, rem);
        auto it = memo.find(key);
        if (it != memo.end()) return it->second;
        bool ok = false;
        for (int j = vcur; j >= 0 && !ok; --j) {
            int uses = (j == vcur) ? used + 1 : 1;
            long long budget = rep_value_budget(j, degs);
            if (budget >= 0 && uses > budget) continue;
            long long b = (j >= 1) ? bracket(j, s, degs) : 0;
            if (b > rem) continue;
            ok = feasible(s - 1, j, uses, rem - b);
        }
        memo[key] = ok;
        return ok;
    }
};

}  // namespace detail

/// Computes the unique (a,n)-Macaulay representation, greedily from t = d
/// downward: take the largest feasible k_t whose remainder stays
/// representable under the multiplicity constraint.
inline MacaulayRep macaulay_rep(long long k, int d, const DegreeSequence& degs) {
    detail::require(d >= 1, "macaulay_rep: base degree must be at least 1");
    long long top = bracket(degs.n(), d, degs);
    if (k < 1 || k > top)
        throw error("macaulay_rep: k = " + std::to_string(k) + " is not in range 1.." +
                    std::to_string(top));
    detail::RepSearch search{degs, {}};
    MacaulayRep rep{d, {}, degs};
    long long rem = k;
    int vprev = degs.n();
    int used = 0;
    for (int t = d; t >= 1; --t) {
        bool placed = false;
        for (int j = vprev; j >= 0 && !placed; --j) {
            int uses = (j == vprev) ? used + 1 : 1;
            long long budget = detail::rep_value_budget(j, degs);
            if (budget >= 0 && uses > budget) continue;
            long long b = (j >= 1) ? bracket(j, t, degs) : 0;
            if (b > rem) continue;
            if (!search.feasible(t - 1, j, uses, rem - b)) continue;
            rep.terms.emplace_back(j, t);
            rem -= b;
            used = uses;
            vprev = j;
            placed = true;
        }
        if (!placed)
            throw error("macaulay_rep: no representation exists (violated invariant)");
    }
    if (rem != 0) throw error("macaulay_rep: representation does not evaluate back");
    return rep;
}

/// k^<d> with respect to the degree sequence: the maximal value of the
/// next quotient dimension when the current one is k.
inline long long growth(long long k, int d, const DegreeSequence& degs) {
    if (k == 0) return 0;
    return macaulay_rep(k, d, degs).shifted_value();
}

/// The Kruskal-Katona shift h^(d), via the greedy binomial representation
/// h = C(h_d, d) + C(h_{d-1}, d-1) + ...: the shadow bound f_{d} <= f_{d-1}^(d).
inline long long classical_growth(long long h, int d) {
    detail::require(h >= 0 && d >= 1, "classical_growth: bad arguments");
    long long out = 0;
    long long rem = h;
    for (int t = d; t >= 1 && rem > 0; --t) {
        long long ht = t - 1;  // largest a with C(a, t) <= rem
        while (binom(ht + 1, t) <= rem) ++ht;
        out += binom(ht, t + 1);
        rem -= binom(ht, t);
    }
    detail::require(rem == 0, "classical Macaulay representation failed");
    return out;
}

/// The classical Macaulay growth bound k^<d> for quotients of a free
/// polynomial ring (no pure powers): sum C(h_t + 1, t + 1) over the same
/// binomial representation. Agrees with growth() for an empty degree
/// sequence, and dominates growth() for every degree sequence.
inline long long classical_macaulay_growth(long long k, int d) {
    detail::require(k >= 0 && d >= 1, "classical_macaulay_growth: bad arguments");
    long long out = 0;
    long long rem = k;
    for (int t = d; t >= 1 && rem > 0; --t) {
        long long ht = t - 1;
        while (binom(ht + 1, t) <= rem) ++ht;
        out += binom(ht + 1, t + 1);
        rem -= binom(ht, t);
    }
    detail::require(rem == 0, "classical Macaulay representation failed");
    return out;
}

struct AdmissibleResult {
    bool ok = true;
    int violating_degree = -1;  // set when !ok
};

/// Checks H(d+1) <= H(d)^<d> for all d >= 1 inside the support, plus the
/// in-range conditions H(d) <= [n; d].
inline AdmissibleResult is_admissible_hf(const HilbertFunction& h, const DegreeSequence& degs) {
    detail::require(h.at(0) <= 1, "Hilbert function must start with H(0) <= 1");
    detail::require(h.at(1) <= degs.n(), "H(1) exceeds the variable count");
    for (int d = 0; d <= h.dmax(); ++d)
        detail::require(h.at(d) >= 0, "Hilbert function values must be nonnegative");
    if (h.at(0) == 0) {
        for (int d = 1; d <= h.dmax(); ++d)
            if (h.at(d) != 0) return {false, d};
        return {};
    }
    for (int d = 1; d <= h.dmax(); ++d)
        if (h.at(d) > bracket(degs.n(), d, degs)) return {false, d};
    for (int d = 1; d < h.dmax(); ++d)
        if (h.at(d + 1) > growth(h.at(d), d, degs)) return {false, d};
    return {};
}

/// Builds the lex-plus-powers ideal whose quotient realizes an admissible
/// Hilbert function: each piece is the lpp piece of the right codimension,
/// and beyond the support the ideal continues with no new generators.
inline MonomialIdeal realize_hf(const HilbertFunction& h, const DegreeSequence& degs) {
    auto adm = is_admissible_hf(h, degs);
    if (!adm.ok)
        throw inadmissible_error("Hilbert function is not admissible", adm.violating_degree);
    return lpp_ideal_of_hf(h, degs);
}

}  // namespace lexplus

#endif
