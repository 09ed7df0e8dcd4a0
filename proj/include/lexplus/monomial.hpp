#ifndef LEXPLUS_MONOMIAL_HPP
#define LEXPLUS_MONOMIAL_HPP

#include <algorithm>
#include <compare>
#include <cctype>
#include <limits>
#include <numeric>
#include <string>
#include <vector>

#include "lexplus/errors.hpp"

namespace lexplus {

/// A degree sequence a_1 <= ... <= a_r together with the ambient variable
/// count n. Entries beyond r are understood as infinite (no cap on that
/// variable); they are simply absent. r = 0 means no caps at all.
class DegreeSequence {
public:
    DegreeSequence(std::vector<int> degrees, int n) : degrees_(std::move(degrees)), n_(n) {
        detail::require(n_ >= 1, "ambient variable count must be positive");
        detail::require(static_cast<int>(degrees_.size()) <= n_,
                        "degree sequence longer than the variable count");
        for (std::size_t i = 0; i < degrees_.size(); ++i) {
            detail::require(degrees_[i] > 0, "degree sequence entries must be positive");
            if (i > 0)
                detail::require(degrees_[i - 1] <= degrees_[i],
                                "degree sequence must be nondecreasing at index " + std::to_string(i + 1));
        }
    }

    int n() const { return n_; }
    int r() const { return static_cast<int>(degrees_.size()); }
    const std::vector<int>& degrees() const { return degrees_; }

    /// True when x_i carries a finite cap, i.e. i <= r. 1-based.
    bool has_cap(int i) const { return i >= 1 && i <= r(); }
    int cap(int i) const {
        detail::require(has_cap(i), "variable x" + std::to_string(i) + " has no finite cap");
        return degrees_[static_cast<std::size_t>(i - 1)];
    }
    long long cap_or(int i, long long fallback) const {
        return has_cap(i) ? degrees_[static_cast<std::size_t>(i - 1)] : fallback;
    }

    /// Artinian configuration: every variable capped.
    bool artinian() const { return r() == n_; }

    /// Socle degree of A/(pure powers), sum (a_i - 1). Requires r = n.
    int socle_degree() const {
        detail::require(artinian(), "socle degree requires a full degree sequence (r = n)");
        int s = 0;
        for (int a : degrees_) s += a - 1;
        return s;
    }

    /// The barred sequence for the subring in the first n-1 variables:
    /// drop the last entry when r = n, keep everything otherwise.
    DegreeSequence restricted() const {
        detail::require(n_ >= 2, "cannot restrict below one variable");
        std::vector<int> d = degrees_;
        if (artinian()) d.pop_back();
        return DegreeSequence(std::move(d), n_ - 1);
    }

    /// Same caps in a larger ring.
    DegreeSequence widened(int n) const {
        detail::require(n >= n_, "widened() cannot shrink the ring");
        return DegreeSequence(degrees_, n);
    }

    bool operator==(const DegreeSequence& o) const { return n_ == o.n_ && degrees_ == o.degrees_; }

private:
    std::vector<int> degrees_;
    int n_;
};

/// True when b_i >= a_i for every i (absent entries are infinite).
inline bool dominates(const DegreeSequence& b, const DegreeSequence& a) {
    if (b.n() != a.n()) return false;
    if (b.r() > a.r()) return false;  // b has a finite cap where a has none
    for (int i = 1; i <= b.r(); ++i)
        if (b.cap(i) < a.cap(i)) return false;
    return true;
}

/// A monomial as a dense exponent vector of fixed length n.
class Monomial {
public:
    explicit Monomial(std::vector<int> exponents) : e_(std::move(exponents)) {
        for (int v : e_) detail::require(v >= 0, "negative exponent in monomial");
    }

    static Monomial one(int n) { return Monomial(std::vector<int>(static_cast<std::size_t>(n), 0)); }
    static Monomial variable(int n, int i) {
        detail::require(i >= 1 && i <= n, "variable index out of range");
        auto m = one(n);
        m.e_[static_cast<std::size_t>(i - 1)] = 1;
        return m;
    }

    int n() const { return static_cast<int>(e_.size()); }
    int degree() const { return std::accumulate(e_.begin(), e_.end(), 0); }
    int exponent(int i) const { return e_[static_cast<std::size_t>(i - 1)]; }  // 1-based
    const std::vector<int>& exponents() const { return e_; }

    bool divides(const Monomial& m) const {
        if (n() != m.n()) throw error("monomials live in different rings");
        for (int i = 0; i < n(); ++i)
            if (e_[i] > m.e_[i]) return false;
        return true;
    }

    Monomial times(const Monomial& m) const {
        if (n() != m.n()) throw error("monomials live in different rings");
        std::vector<int> v = e_;
        for (int i = 0; i < n(); ++i) v[i] += m.e_[i];
        return Monomial(std::move(v));
    }

    Monomial times_variable(int i) const {
        std::vector<int> v = e_;
        v.at(static_cast<std::size_t>(i - 1)) += 1;
        return Monomial(std::move(v));
    }

    /// this / gcd(this, g) — the colon quotient used by (J : g).
    Monomial colon_by(const Monomial& g) const {
        if (n() != g.n()) throw error("monomials live in different rings");
        std::vector<int> v = e_;
        for (int i = 0; i < n(); ++i) v[i] = std::max(0, v[i] - g.e_[i]);
        return Monomial(std::move(v));
    }

    bool operator==(const Monomial& m) const { return e_ == m.e_; }
    bool operator!=(const Monomial& m) const { return e_ != m.e_; }

private:
    std::vector<int> e_;
};

inline Monomial lcm(const Monomial& a, const Monomial& b) {
    if (a.n() != b.n()) throw error("monomials live in different rings");
    std::vector<int> v(a.exponents());
    for (int i = 0; i < a.n(); ++i) v[i] = std::max(v[i], b.exponents()[i]);
    return Monomial(std::move(v));
}

inline Monomial gcd(const Monomial& a, const Monomial& b) {
    if (a.n() != b.n()) throw error("monomials live in different rings");
    std::vector<int> v(a.exponents());
    for (int i = 0; i < a.n(); ++i) v[i] = std::min(v[i], b.exponents()[i]);
    return Monomial(std::move(v));
}

/// Total order on monomials: lower total degree first, then lexicographic
/// within a degree, induced by x1 > x2 > ... > xn. Within equal degree the
/// lex-larger monomial compares greater.
inline std::strong_ordering lex_compare(const Monomial& u, const Monomial& v) {
    if (u.n() != v.n()) throw error("lex_compare: monomials live in different rings");
    if (u.degree() != v.degree()) return u.degree() <=> v.degree();
    for (int i = 0; i < u.n(); ++i) {
        int a = u.exponents()[i], b = v.exponents()[i];
        if (a != b) return a <=> b;
    }
    return std::strong_ordering::equal;
}

inline bool lex_less(const Monomial& u, const Monomial& v) { return lex_compare(u, v) < 0; }
inline bool lex_greater(const Monomial& u, const Monomial& v) { return lex_compare(u, v) > 0; }

struct LexDescending {
    bool operator()(const Monomial& u, const Monomial& v) const { return lex_greater(u, v); }
};

// -- text grammar ------------------------------------------------------------
//
// Monomial: `x<i>^<e>` factors joined by `*`, `^1` omissible, `1` for the
// empty monomial; variables 1-indexed. Example: x1^2*x3.

inline std::string format_monomial(const Monomial& m) {
    if (m.degree() == 0) return "1";
    std::string out;
    for (int i = 1; i <= m.n(); ++i) {
        int e = m.exponent(i);
        if (e == 0) continue;
        if (!out.empty()) out += "*";
        out += "x" + std::to_string(i);
        if (e > 1) out += "^" + std::to_string(e);
    }
    return out;
}

namespace detail {

inline long long parse_uint(const std::string& s, std::size_t& pos) {
    if (pos >= s.size() || !std::isdigit(static_cast<unsigned char>(s[pos])))
        throw parse_error("expected a digit", pos);
    long long value = 0;
    while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) {
        value = value * 10 + (s[pos] - '0');
        if (value > std::numeric_limits<int>::max())
            throw parse_error("number too large", pos);
        ++pos;
    }
    return value;
}

}  // namespace detail

/// Parses one monomial in the text grammar. n is the ambient variable count.
inline Monomial parse_monomial(const std::string& text, int n) {
    std::size_t pos = 0;
    auto skip_ws = [&] { while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos; };
    skip_ws();
    if (pos >= text.size()) throw parse_error("empty monomial", pos);

    std::vector<int> exps(static_cast<std::size_t>(n), 0);
    if (text[pos] == '1') {
        ++pos;
        skip_ws();
        if (pos != text.size()) throw parse_error("trailing characters after '1'", pos);
        return Monomial(std::move(exps));
    }
    while (true) {
        if (pos >= text.size() || text[pos] != 'x')
            throw parse_error("expected 'x'", pos);
        ++pos;
        std::size_t at = pos;
        long long index = detail::parse_uint(text, pos);
        if (index < 1 || index > n)
            throw parse_error("variable index out of range 1.." + std::to_string(n), at);
        long long e = 1;
        if (pos < text.size() && text[pos] == '^') {
            ++pos;
            at = pos;
            e = detail::parse_uint(text, pos);
            if (e < 1) throw parse_error("exponent must be positive", at);
        }
        exps[static_cast<std::size_t>(index - 1)] += static_cast<int>(e);
        skip_ws();
        if (pos >= text.size()) break;
        if (text[pos] != '*') throw parse_error("expected '*' between factors", pos);
        ++pos;
        skip_ws();
    }
    return Monomial(std::move(exps));
}

/// Largest variable index mentioned in a piece of ideal text; 0 when none.
/// Used to infer n when the caller did not fix it.
inline int scan_max_variable_index(const std::string& text) {
    int best = 0;
    for (std::size_t i = 0; i + 1 < text.size(); ++i) {
        if (text[i] == 'x' && std::isdigit(static_cast<unsigned char>(text[i + 1]))) {
            std::size_t pos = i + 1;
            long long idx = detail::parse_uint(text, pos);
            best = std::max(best, static_cast<int>(idx));
        }
    }
    return best;
}

}  // namespace lexplus

#endif
