#ifndef LEXPLUS_IDEAL_HPP
#define LEXPLUS_IDEAL_HPP

#include <algorithm>
#include <optional>
#include <string>
#include <vector>

#include "lexplus/piece.hpp"

namespace lexplus {

/// A monomial ideal, stored by its minimal monomial generators.
/// Generators are kept as an antichain under divisibility, sorted by
/// degree and then descending lex; every constructor minimalizes.
class MonomialIdeal {
public:
    explicit MonomialIdeal(int n, std::vector<Monomial> generators = {}) : n_(n), gens_(std::move(generators)) {
        detail::require(n_ >= 1, "ideal needs at least one variable");
        for (const auto& g : gens_)
            detail::require(g.n() == n_, "generator in the wrong ring");
        minimalize();
    }

    static MonomialIdeal zero(int n) { return MonomialIdeal(n); }
    static MonomialIdeal unit(int n) { return MonomialIdeal(n, {Monomial::one(n)}); }
    static MonomialIdeal maximal(int n) {
        std::vector<Monomial> g;
        for (int i = 1; i <= n; ++i) g.push_back(Monomial::variable(n, i));
        return MonomialIdeal(n, std::move(g));
    }

    int n() const { return n_; }
    const std::vector<Monomial>& gens() const { return gens_; }
    bool is_zero() const { return gens_.empty(); }
    bool is_unit() const { return gens_.size() == 1 && gens_[0].degree() == 0; }

    int max_gen_degree() const {
        int d = 0;
        for (const auto& g : gens_) d = std::max(d, g.degree());
        return d;
    }

    bool contains(const Monomial& m) const {
        for (const auto& g : gens_)
            if (g.divides(m)) return true;
        return false;
    }

    bool contains_ideal(const MonomialIdeal& other) const {
        for (const auto& g : other.gens_)
            if (!contains(g)) return false;
        return true;
    }

    bool operator==(const MonomialIdeal& o) const { return n_ == o.n_ && gens_ == o.gens_; }
    bool operator!=(const MonomialIdeal& o) const { return !(*this == o); }

    /// The degree-d slice of the ideal: all degree-d multiples of generators.
    GradedPiece piece(int d) const {
        detail::require(d >= 0, "graded piece of negative degree");
        std::vector<Monomial> out;
        for (auto& m : monomials_of_degree(n_, d))
            if (contains(m)) out.push_back(std::move(m));
        return GradedPiece(n_, d, std::move(out));
    }

    /// For each variable, the least exponent k with x_i^k in the ideal,
    /// or nullopt when no power of x_i belongs to it.
    std::optional<std::vector<int>> artinian_caps() const {
        std::vector<int> caps(static_cast<std::size_t>(n_), -1);
        for (const auto& g : gens_) {
            int support = 0, var = 0;
            for (int i = 1; i <= n_; ++i)
                if (g.exponent(i) > 0) { ++support; var = i; }
            if (support == 0) {  // unit ideal
                std::fill(caps.begin(), caps.end(), 0);
                return caps;
            }
            if (support == 1) {
                auto& c = caps[static_cast<std::size_t>(var - 1)];
                int e = g.exponent(var);
                if (c < 0 || e < c) c = e;
            }
        }
        for (int c : caps)
            if (c < 0) return std::nullopt;
        return caps;
    }

private:
    void minimalize() {
        // Canonical listing: degree ascending, lex descending within a degree.
        std::sort(gens_.begin(), gens_.end(), [](const Monomial& a, const Monomial& b) {
            if (a.degree() != b.degree()) return a.degree() < b.degree();
            return lex_greater(a, b);
        });
        gens_.erase(std::unique(gens_.begin(), gens_.end()), gens_.end());
        std::vector<Monomial> keep;
        for (const auto& g : gens_) {
            bool redundant = false;
            for (const auto& k : keep)
                if (k.divides(g)) { redundant = true; break; }
            if (!redundant) keep.push_back(g);
        }
        gens_ = std::move(keep);
    }

    int n_;
    std::vector<Monomial> gens_;
};

inline MonomialIdeal pure_powers_ideal(const DegreeSequence& degs) {
    std::vector<Monomial> g;
    for (int i = 1; i <= degs.r(); ++i) {
        std::vector<int> e(static_cast<std::size_t>(degs.n()), 0);
        e[static_cast<std::size_t>(i - 1)] = degs.cap(i);
        g.push_back(Monomial(std::move(e)));
    }
    return MonomialIdeal(degs.n(), std::move(g));
}

inline MonomialIdeal sum(const MonomialIdeal& a, const MonomialIdeal& b) {
    detail::require(a.n() == b.n(), "ideal sum across different rings");
    std::vector<Monomial> g = a.gens();
    g.insert(g.end(), b.gens().begin(), b.gens().end());
    return MonomialIdeal(a.n(), std::move(g));
}

inline MonomialIdeal intersect(const MonomialIdeal& a, const MonomialIdeal& b) {
    detail::require(a.n() == b.n(), "ideal intersection across different rings");
    if (a.is_zero() || b.is_zero()) return MonomialIdeal::zero(a.n());
    std::vector<Monomial> g;
    g.reserve(a.gens().size() * b.gens().size());
    for (const auto& u : a.gens())
        for (const auto& v : b.gens()) g.push_back(lcm(u, v));
    return MonomialIdeal(a.n(), std::move(g));
}

/// (J : I) = intersection over generators g of I of (J : g), where
/// (J : g) is generated by m / gcd(m, g) for the generators m of J.
inline MonomialIdeal ideal_colon(const MonomialIdeal& j, const MonomialIdeal& i) {
    detail::require(j.n() == i.n(), "colon across different rings");
    if (i.is_zero()) return MonomialIdeal::unit(j.n());
    bool first = true;
    MonomialIdeal out = MonomialIdeal::unit(j.n());
    for (const auto& g : i.gens()) {
        std::vector<Monomial> q;
        q.reserve(j.gens().size());
        for (const auto& m : j.gens()) q.push_back(m.colon_by(g));
        MonomialIdeal jg(j.n(), std::move(q));
        out = first ? jg : intersect(out, jg);
        first = false;
    }
    return out;
}

/// Reads generators off a run of consecutive graded pieces: a new generator
/// in degree d is a member of pieces[d] that is not a multiple of anything
/// in pieces[d-1]. pieces[d] must be the full degree-d slice of the ideal
/// for every represented degree.
inline MonomialIdeal ideal_from_pieces(int n, const std::vector<GradedPiece>& pieces) {
    std::vector<Monomial> gens;
    for (std::size_t d = 0; d < pieces.size(); ++d) {
        detail::require(pieces[d].degree() == static_cast<int>(d) && pieces[d].n() == n,
                        "ideal_from_pieces: pieces must cover degrees 0..dmax in order");
        if (d == 0) {
            if (!pieces[0].empty()) return MonomialIdeal::unit(n);
            continue;
        }
        GradedPiece grown = pieces[d - 1].multiply();
        for (const auto& m : pieces[d].members())
            if (!grown.contains(m)) gens.push_back(m);
    }
    return MonomialIdeal(n, std::move(gens));
}

// -- Hilbert functions --------------------------------------------------------

/// H(A/I; d) for d = 0..dmax. By library convention a Hilbert function
/// always measures the quotient, never the ideal.
struct HilbertFunction {
    std::vector<long long> values;

    HilbertFunction() = default;
    explicit HilbertFunction(std::vector<long long> v) : values(std::move(v)) {}

    int dmax() const { return static_cast<int>(values.size()) - 1; }
    long long at(int d) const {
        return (d >= 0 && d <= dmax()) ? values[static_cast<std::size_t>(d)] : 0;
    }

    bool operator==(const HilbertFunction& o) const { return values == o.values; }
};

inline HilbertFunction hilbert_function(const MonomialIdeal& ideal, int dmax) {
    detail::require(dmax >= 0, "dmax must be nonnegative");
    std::vector<long long> v;
    v.reserve(static_cast<std::size_t>(dmax + 1));
    for (int d = 0; d <= dmax; ++d)
        v.push_back(ambient_dim(ideal.n(), d) - ideal.piece(d).dim());
    return HilbertFunction(std::move(v));
}

/// Default window: Artinian quotients run to their first vanishing value;
/// anything else needs an explicit dmax.
inline HilbertFunction hilbert_function(const MonomialIdeal& ideal) {
    auto caps = ideal.artinian_caps();
    detail::require(caps.has_value(),
                    "Hilbert function of a non-Artinian quotient needs an explicit dmax");
    int bound = 0;
    for (int c : *caps) bound += std::max(0, c - 1);
    auto h = hilbert_function(ideal, bound + 1);
    while (h.values.size() >= 2 && h.values.back() == 0 && h.values[h.values.size() - 2] == 0)
        h.values.pop_back();
    return h;
}

/// e(A/I), the K-dimension of an Artinian quotient.
inline long long multiplicity(const MonomialIdeal& ideal) {
    auto caps = ideal.artinian_caps();
    if (!caps) throw error("multiplicity infinite: quotient is not Artinian");
    long long e = 0;
    for (long long v : hilbert_function(ideal).values) e += v;
    return e;
}

// -- ideal text ---------------------------------------------------------------

inline MonomialIdeal parse_ideal(const std::string& text, int n) {
    std::vector<Monomial> gens;
    std::size_t start = 0;
    auto flush = [&](std::size_t end) {
        std::string tok = text.substr(start, end - start);
        std::size_t a = tok.find_first_not_of(" \t\r");
        if (a == std::string::npos) return;  // blank segment
        try {
            gens.push_back(parse_monomial(tok, n));
        } catch (const parse_error& e) {
            throw parse_error("bad monomial in ideal text", start + e.offset());
        }
    };
    for (std::size_t i = 0; i < text.size(); ++i) {
        if (text[i] == ',' || text[i] == '\n') {
            flush(i);
            start = i + 1;
        }
    }
    flush(text.size());
    return MonomialIdeal(n, std::move(gens));
}

inline std::string format_ideal(const MonomialIdeal& ideal) {
    if (ideal.is_zero()) return "0";
    std::string out;
    for (const auto& g : ideal.gens()) {
        if (!out.empty()) out += ", ";
        out += format_monomial(g);
    }
    return out;
}

}  // namespace lexplus

#endif
