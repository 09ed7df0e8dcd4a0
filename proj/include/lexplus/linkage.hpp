#ifndef LEXPLUS_LINKAGE_HPP
#define LEXPLUS_LINKAGE_HPP

#include <algorithm>
#include <vector>

#include "lexplus/ideal.hpp"

namespace lexplus {

/// The K[x1]-module profile of a two-variable ideal containing
/// (x1^a1, x2^a2): I = (+)_i x1^{d_i} K[x1] . x2^i with offsets
/// d_0 >= d_1 >= ... recorded for i = 0..a2-1 (they vanish from a2 on).
struct TwoVarProfile {
    std::vector<int> offsets;

    bool is_spp() const {
        for (std::size_t i = 0; i + 1 < offsets.size(); ++i)
            if (offsets[i + 1] + 1 < offsets[i]) return false;
        return true;
    }
};

inline TwoVarProfile two_var_profile(const MonomialIdeal& ideal, const DegreeSequence& degs) {
    detail::require(ideal.n() == 2 && degs.n() == 2 && degs.r() == 2,
                    "two_var_profile: needs two capped variables");
    detail::require(ideal.contains_ideal(pure_powers_ideal(degs)),
                    "two_var_profile: ideal must contain the pure powers");
    int a1 = degs.cap(1), a2 = degs.cap(2);
    TwoVarProfile profile;
    profile.offsets.reserve(static_cast<std::size_t>(a2));
    for (int i = 0; i < a2; ++i) {
        int best = a1;  // x1^{a1} x2^i always belongs
        for (const auto& g : ideal.gens())
            if (g.exponent(2) <= i) best = std::min(best, g.exponent(1));
        profile.offsets.push_back(best);
    }
    return profile;
}

inline MonomialIdeal two_var_reassemble(const TwoVarProfile& profile, const DegreeSequence& degs) {
    int a2 = degs.cap(2);
    std::vector<Monomial> gens;
    for (int i = 0; i < a2; ++i)
        gens.push_back(Monomial({profile.offsets[static_cast<std::size_t>(i)], i}));
    gens.push_back(Monomial({0, a2}));
    return MonomialIdeal(2, std::move(gens));
}

/// The closed form of the link in two variables: (a : I) is generated by
/// x1^{a1 - d_i} x2^{a2 - 1 - i} for i = 0..a2-1, together with x2^{a2}
/// (redundant exactly when d_0 = a1).
inline MonomialIdeal two_var_link(const MonomialIdeal& ideal, const DegreeSequence& degs) {
    TwoVarProfile profile = two_var_profile(ideal, degs);
    int a1 = degs.cap(1), a2 = degs.cap(2);
    std::vector<Monomial> gens;
    for (int i = 0; i < a2; ++i)
        gens.push_back(Monomial({a1 - profile.offsets[static_cast<std::size_t>(i)], a2 - 1 - i}));
    gens.push_back(Monomial({0, a2}));
    return MonomialIdeal(2, std::move(gens));
}

/// The link I^l = (a : I) with respect to the full pure-powers ideal.
inline MonomialIdeal link(const MonomialIdeal& ideal, const DegreeSequence& degs) {
    detail::require(degs.artinian(), "link: the degree sequence must cap every variable");
    detail::require(ideal.n() == degs.n(), "link: mismatched ring");
    detail::require(ideal.contains_ideal(pure_powers_ideal(degs)),
                    "link: ideal must contain the pure powers");
    return ideal_colon(pure_powers_ideal(degs), ideal);
}

/// H(R/I; d) = H(R; d) - H(R/I^l; s-d) for 0 <= d <= min(s, dmax),
/// with R = A/a and s the socle degree of R.
inline bool duality_check(const MonomialIdeal& ideal, const DegreeSequence& degs,
                          int dmax = -1) {
    int s = degs.socle_degree();
    int top = dmax < 0 ? s : std::min(s, dmax);
    MonomialIdeal linked = link(ideal, degs);
    HilbertFunction hr = hilbert_function(pure_powers_ideal(degs), s);
    HilbertFunction hi = hilbert_function(ideal, s);
    HilbertFunction hl = hilbert_function(linked, s);
    for (int d = 0; d <= top; ++d)
        if (hi.at(d) != hr.at(d) - hl.at(s - d)) return false;
    return true;
}

/// type(R/IR): the number of monomials m outside I killed into I by every
/// variable, computed modulo the pure powers (which sit inside I).
inline long long socle_type(const MonomialIdeal& ideal, const DegreeSequence& degs) {
    detail::require(degs.artinian(), "socle_type: the degree sequence must cap every variable");
    detail::require(ideal.contains_ideal(pure_powers_ideal(degs)),
                    "socle_type: ideal must contain the pure powers");
    int s = degs.socle_degree();
    long long count = 0;
    for (int d = 0; d <= s; ++d) {
        for (const auto& m : monomials_of_degree(ideal.n(), d)) {
            if (ideal.contains(m)) continue;
            bool socle = true;
            for (int i = 1; i <= ideal.n() && socle; ++i)
                if (!ideal.contains(m.times_variable(i))) socle = false;
            if (socle) ++count;
        }
    }
    return count;
}

/// mu(I^l R): minimal generators of the linked ideal counted in R = A/a,
/// i.e. monomials of I^l outside both a and m_1 . (I^l one degree down).
inline long long link_mu(const MonomialIdeal& ideal, const DegreeSequence& degs) {
    MonomialIdeal linked = link(ideal, degs);
    int s = degs.socle_degree();
    long long mu = 0;
    GradedPiece below(linked.n(), 0);
    for (int d = 0; d <= s; ++d) {
        GradedPiece here = linked.piece(d);
        GradedPiece covered = (d == 0) ? GradedPiece(linked.n(), 0)
                                       : unite(below.multiply(), pure_powers_piece(degs, d));
        for (const auto& m : here.members())
            if (!covered.contains(m)) ++mu;
        below = std::move(here);
    }
    return mu;
}

/// Proposition "type equals mu of the link" as a boolean check.
inline bool link_mu_check(const MonomialIdeal& ideal, const DegreeSequence& degs) {
    return socle_type(ideal, degs) == link_mu(ideal, degs);
}

}  // namespace lexplus

#endif
