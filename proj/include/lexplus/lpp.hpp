#ifndef LEXPLUS_LPP_HPP
#define LEXPLUS_LPP_HPP

#include <algorithm>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "lexplus/ideal.hpp"

namespace lexplus {

/// The top D monomials of A_d in descending lex order.
inline GradedPiece lex_segment(int d, long long D, int n) {
    detail::require(D >= 0 && D <= ambient_dim(n, d), "lex_segment: dimension out of range");
    auto all = monomials_of_degree(n, d);
    all.erase(all.begin() + static_cast<std::ptrdiff_t>(D), all.end());
    return GradedPiece(n, d, std::move(all));
}

/// The lpp piece of dimension D in degree d: the degree-d slice of the
/// pure-powers ideal together with the top D - dim(a_d) lex monomials
/// outside it.
inline GradedPiece lpp_piece(int d, long long D, const DegreeSequence& degs) {
    int n = degs.n();
    GradedPiece base = pure_powers_piece(degs, d);
    detail::require(D >= base.dim(), "lpp_piece: dimension below the pure-powers slice");
    detail::require(D <= ambient_dim(n, d), "lpp_piece: dimension exceeds the ambient space");
    std::vector<Monomial> members = base.members();
    long long want = D - base.dim();
    for (auto& m : monomials_of_degree(n, d)) {
        if (want == 0) break;
        if (!base.contains(m)) {
            members.push_back(std::move(m));
            --want;
        }
    }
    return GradedPiece(n, d, std::move(members));
}

inline bool is_lpp_piece(const GradedPiece& v, const DegreeSequence& degs) {
    GradedPiece base = pure_powers_piece(degs, v.degree());
    if (v.dim() < base.dim()) return false;
    return v == lpp_piece(v.degree(), v.dim(), degs);
}

/// Truncation-of-an-spp-ideal test, via the slice characterization:
/// V containing a_d is spp iff every slice is spp for the barred sequence
/// and the slices are stable under multiplication from degree
/// max(d - a_n + 1, 0) upward.
inline bool is_spp_piece(const GradedPiece& v, const DegreeSequence& degs) {
    int n = v.n(), d = v.degree();
    detail::require(n == degs.n(), "is_spp_piece: mismatched ring");
    if (!v.contains_piece(pure_powers_piece(degs, d))) return false;
    if (n == 1 || d == 0) return true;
    DegreeSequence bar = degs.restricted();
    auto parts = slices(v);
    for (const auto& part : parts)
        if (!is_spp_piece(part, bar)) return false;
    int lo = degs.has_cap(n) ? std::max(d - degs.cap(n) + 1, 0) : 0;
    for (int j = lo; j < d; ++j) {
        if (!parts[static_cast<std::size_t>(j + 1)].contains_piece(
                parts[static_cast<std::size_t>(j)].multiply()))
            return false;
    }
    return true;
}

namespace detail {

/// Degrees that decide a predicate for the whole ideal: past the largest
/// generator degree every piece is m_1 * (previous piece) + a, which
/// preserves spp-ness and lpp-ness.
inline int stabilizing_degree(const MonomialIdeal& ideal, const DegreeSequence& degs) {
    int d = ideal.max_gen_degree();
    for (int a : degs.degrees()) d = std::max(d, a);
    return d;
}

}  // namespace detail

/// Borel-fixedness: every generator stays in the ideal when a variable is
/// swapped for a lex-larger one. Checking generators settles the ideal.
inline bool is_strongly_stable(const MonomialIdeal& ideal) {
    for (const auto& g : ideal.gens()) {
        for (int i = 2; i <= ideal.n(); ++i) {
            if (g.exponent(i) == 0) continue;
            for (int j = 1; j < i; ++j) {
                std::vector<int> e = g.exponents();
                e[static_cast<std::size_t>(i - 1)] -= 1;
                e[static_cast<std::size_t>(j - 1)] += 1;
                if (!ideal.contains(Monomial(std::move(e)))) return false;
            }
        }
    }
    return true;
}

inline bool is_spp(const MonomialIdeal& ideal, const DegreeSequence& degs) {
    if (!ideal.contains_ideal(pure_powers_ideal(degs))) return false;
    int top = detail::stabilizing_degree(ideal, degs);
    for (int d = 1; d <= top; ++d)
        if (!is_spp_piece(ideal.piece(d), degs)) return false;
    return true;
}

inline bool is_lpp(const MonomialIdeal& ideal, const DegreeSequence& degs) {
    if (!ideal.contains_ideal(pure_powers_ideal(degs))) return false;
    int top = detail::stabilizing_degree(ideal, degs);
    for (int d = 0; d <= top; ++d) {
        GradedPiece p = ideal.piece(d);
        if (!(p == lpp_piece(d, p.dim(), degs))) return false;
    }
    return true;
}

/// V+: adds the lex-largest monomial missing from V, the identity on the
/// full space. Defined only for pieces of the shape (lex segment) + a_d,
/// which is asserted, not silently extended.
inline GradedPiece plus(const GradedPiece& v, const DegreeSequence& degs) {
    detail::require(is_lpp_piece(v, degs), "plus: piece is not of the form lex segment + a_d");
    if (v.is_full()) return v;
    for (auto& m : monomials_of_degree(v.n(), v.degree())) {
        if (!v.contains(m)) {
            std::vector<Monomial> members = v.members();
            members.push_back(std::move(m));
            return GradedPiece(v.n(), v.degree(), std::move(members));
        }
    }
    throw error("plus: unreachable");
}

/// V-: drops the lex-smallest member outside a_d, the identity on a_d.
inline GradedPiece minus(const GradedPiece& v, const DegreeSequence& degs) {
    GradedPiece base = pure_powers_piece(degs, v.degree());
    detail::require(v.contains_piece(base), "minus: piece does not contain a_d");
    const auto& members = v.members();
    for (auto it = members.rbegin(); it != members.rend(); ++it) {
        if (!base.contains(*it)) {
            std::vector<Monomial> keep;
            keep.reserve(members.size() - 1);
            for (const auto& m : members)
                if (!(m == *it)) keep.push_back(m);
            return GradedPiece(v.n(), v.degree(), std::move(keep));
        }
    }
    return v;  // v == a_d
}

/// The segment test: V is spp, every slice V_[i] is lpp for the barred
/// sequence, and V_[i+j] sits inside m_j (V_[i])+ + a_{i+j} for all j.
inline bool is_segment(const GradedPiece& v, const DegreeSequence& degs) {
    int n = v.n(), d = v.degree();
    if (!v.contains_piece(pure_powers_piece(degs, d))) return false;
    if (n == 1) return is_spp_piece(v, degs);
    if (!is_spp_piece(v, degs)) return false;
    DegreeSequence bar = degs.restricted();
    auto parts = slices(v);
    for (const auto& part : parts)
        if (!is_lpp_piece(part, bar)) return false;
    for (int i = 0; i <= d; ++i) {
        const auto& vi = parts[static_cast<std::size_t>(i)];
        if (vi.is_full()) continue;  // containment is automatic
        GradedPiece acc = plus(vi, bar);
        for (int j = i + 1; j <= d; ++j) {
            acc = acc.multiply();
            GradedPiece target = unite(acc, pure_powers_piece(bar, j));
            if (!target.contains_piece(parts[static_cast<std::size_t>(j)])) return false;
        }
    }
    return true;
}

/// Replaces every slice by the lpp piece of the same dimension.
inline GradedPiece slicewise_lpp(const GradedPiece& v, const DegreeSequence& degs) {
    int n = v.n(), d = v.degree();
    if (n == 1) return v;
    DegreeSequence bar = degs.restricted();
    auto parts = slices(v);
    for (auto& part : parts) part = lpp_piece(part.degree(), part.dim(), bar);
    return unslice(parts, n, d);
}

/// The sigma operator: transforms an spp piece with lpp slices into the
/// unique segment of the same dimension, by repeatedly applying the
/// exchange (V_[i])+ / (V_[j])- at a violation with minimal j - i. Each
/// exchange strictly decreases the dimension sequence, so the loop stops.
inline GradedPiece sigma(const GradedPiece& v, const DegreeSequence& degs) {
    int n = v.n(), d = v.degree();
    detail::require(n == degs.n(), "sigma: mismatched ring");
    detail::require(v.contains_piece(pure_powers_piece(degs, d)), "sigma: piece must contain a_d");
    if (n == 1) return v;
    detail::require(is_spp_piece(v, degs), "sigma: piece must be spp");
    DegreeSequence bar = degs.restricted();
    auto parts = slices(v);
    for (const auto& part : parts)
        detail::require(is_lpp_piece(part, bar), "sigma: every slice must be lpp");

    long long guard = 0;
    const long long guard_max = 1000000;
    while (true) {
        // locate a violation with minimal gap j - i, then smallest i
        int vi = -1, vj = -1;
        for (int gap = 1; gap <= d && vi < 0; ++gap) {
            for (int i = 0; i + gap <= d; ++i) {
                const auto& pi = parts[static_cast<std::size_t>(i)];
                if (pi.is_full()) continue;
                GradedPiece target =
                    unite(multiply_times(plus(pi, bar), gap), pure_powers_piece(bar, i + gap));
                if (!target.contains_piece(parts[static_cast<std::size_t>(i + gap)])) {
                    vi = i;
                    vj = i + gap;
                    break;
                }
            }
        }
        if (vi < 0) break;
        parts[static_cast<std::size_t>(vi)] = plus(parts[static_cast<std::size_t>(vi)], bar);
        parts[static_cast<std::size_t>(vj)] = minus(parts[static_cast<std::size_t>(vj)], bar);
        detail::require(++guard < guard_max, "sigma: exchange loop failed to terminate");
    }
    return unslice(parts, n, d);
}

// -- lpp assembly from a Hilbert function -------------------------------------

/// Assembles the lpp ideal whose quotient has the prescribed Hilbert
/// function, degree by degree, and asserts that the pieces form an ideal.
/// Failure of the assembly is exactly inadmissibility of H.
inline MonomialIdeal lpp_ideal_of_hf(const HilbertFunction& h, const DegreeSequence& degs) {
    int n = degs.n();
    detail::require(h.at(0) <= 1, "quotient Hilbert function must have H(0) <= 1");
    if (h.at(0) == 0) {
        for (int d = 1; d <= h.dmax(); ++d)
            if (h.at(d) != 0) throw inadmissible_error("unit quotient must vanish everywhere", d);
        return MonomialIdeal::unit(n);
    }
    std::vector<GradedPiece> pieces;
    for (int d = 0; d <= h.dmax(); ++d) {
        long long dim = ambient_dim(n, d) - h.at(d);
        if (h.at(d) < 0 || dim < pure_powers_piece(degs, d).dim())
            throw inadmissible_error("Hilbert value out of range", d);
        pieces.push_back(lpp_piece(d, dim, degs));
    }
    for (int d = 0; d < h.dmax(); ++d) {
        GradedPiece grown = unite(pieces[static_cast<std::size_t>(d)].multiply(),
                                  pure_powers_piece(degs, d + 1));
        if (!pieces[static_cast<std::size_t>(d + 1)].contains_piece(grown))
            throw inadmissible_error("growth condition fails", d);
    }
    return ideal_from_pieces(n, pieces);
}

/// The two-variable lex-plus-powers realization of a Hilbert function
/// (Proposition in the n = 2 case): direct degree-wise assembly; the
/// linkage stitching is kept as an independent oracle in the tests.
inline MonomialIdeal two_var_lpp(const HilbertFunction& h, const DegreeSequence& degs) {
    detail::require(degs.n() == 2, "two_var_lpp: two variables only");
    return lpp_ideal_of_hf(h, degs);
}

namespace detail {

/// Exact lpp replacement for an ideal in two variables, used by the spp
/// stabilization slices. New generators of the lex-plus-powers ideal of
/// the same Hilbert function stop by K + d_head, where K is the largest
/// x2-exponent and d_head the largest x1-exponent among the generators.
inline MonomialIdeal two_var_lpp_of_ideal(const MonomialIdeal& p, const DegreeSequence& caps) {
    require(p.n() == 2 && caps.n() == 2, "two_var_lpp_of_ideal: two variables only");
    if (p.is_zero() || p.is_unit()) return p;
    int e1 = 0, e2 = 0;
    for (const auto& g : p.gens()) {
        e1 = std::max(e1, g.exponent(1));
        e2 = std::max(e2, g.exponent(2));
    }
    int window = e1 + e2 + 2;
    MonomialIdeal out = lpp_ideal_of_hf(hilbert_function(p, window), caps);
    require(out.max_gen_degree() <= window - 2,
            "two_var_lpp_of_ideal: generator appeared at the window boundary");
    return out;
}

}  // namespace detail

// -- spp stabilization ---------------------------------------------------------

namespace detail {

/// First pair (i, j), j < i, ordered lexicographically by (i, j), for which
/// some monomial u in I \ a with x_i | u has x_j u / x_i outside I.
inline std::optional<std::pair<int, int>> spp_violation(const MonomialIdeal& ideal,
                                                        const DegreeSequence& degs) {
    int n = ideal.n();
    int top = stabilizing_degree(ideal, degs);
    for (int i = 2; i <= n; ++i) {
        for (int j = 1; j < i; ++j) {
            for (int d = 1; d <= top; ++d) {
                GradedPiece piece = ideal.piece(d);
                GradedPiece powers = pure_powers_piece(degs, d);
                for (const auto& u : piece.members()) {
                    if (powers.contains(u) || u.exponent(i) == 0) continue;
                    std::vector<int> e = u.exponents();
                    e[static_cast<std::size_t>(i - 1)] -= 1;
                    e[static_cast<std::size_t>(j - 1)] += 1;
                    if (!ideal.contains(Monomial(std::move(e)))) return std::make_pair(i, j);
                }
            }
        }
    }
    return std::nullopt;
}

/// The caps of the two-variable subring on x_j, x_i (j < i). The sequence
/// is sorted because j < i implies a_j <= a_i, and infinite entries only
/// occur at the tail.
inline DegreeSequence pair_caps(const DegreeSequence& degs, int j, int i) {
    std::vector<int> caps;
    if (degs.has_cap(j)) caps.push_back(degs.cap(j));
    if (degs.has_cap(i)) caps.push_back(degs.cap(i));
    return DegreeSequence(std::move(caps), 2);
}

}  // namespace detail

/// Produces an spp ideal with the same Hilbert function: repeatedly pick a
/// violating variable pair (j < i), decompose I = (+)_q I_q . q over
/// monomials q in the remaining variables, replace every two-variable
/// slice I_q by the (a_j, a_i)-lpp ideal with its Hilbert function, and
/// reassemble; the total order on such ideals makes the loop terminate.
inline MonomialIdeal stabilize_spp(const MonomialIdeal& ideal, const DegreeSequence& degs) {
    detail::require(ideal.n() == degs.n(), "stabilize_spp: mismatched ring");
    detail::require(ideal.contains_ideal(pure_powers_ideal(degs)),
                    "stabilize_spp: ideal must contain the pure-powers ideal");
    int n = ideal.n();
    MonomialIdeal current = ideal;
    for (int round = 0; round < 10000; ++round) {
        auto viol = detail::spp_violation(current, degs);
        if (!viol) {
            int window = std::max(detail::stabilizing_degree(ideal, degs),
                                  detail::stabilizing_degree(current, degs)) + 1;
            detail::require(hilbert_function(current, window) == hilbert_function(ideal, window),
                            "stabilize_spp: Hilbert function drifted");
            return current;
        }
        auto [i, j] = *viol;  // j < i
        DegreeSequence caps2 = detail::pair_caps(degs, j, i);

        // q-parts of the generators, closed under lcm, always including 1
        auto strip = [&](const Monomial& g) {
            std::vector<int> e = g.exponents();
            e[static_cast<std::size_t>(j - 1)] = 0;
            e[static_cast<std::size_t>(i - 1)] = 0;
            return Monomial(std::move(e));
        };
        std::vector<Monomial> lattice{Monomial::one(n)};
        auto push_unique = [&](const Monomial& q) {
            for (const auto& m : lattice)
                if (m == q) return false;
            lattice.push_back(q);
            return true;
        };
        for (const auto& g : current.gens()) push_unique(strip(g));
        for (std::size_t a = 0; a < lattice.size(); ++a)
            for (std::size_t b = a + 1; b < lattice.size(); ++b)
                push_unique(lcm(lattice[a], lattice[b]));

        std::vector<Monomial> gens;
        for (const auto& q : lattice) {
            std::vector<Monomial> slice_gens;
            for (const auto& g : current.gens()) {
                if (!strip(g).divides(q)) continue;
                slice_gens.push_back(Monomial(std::vector<int>{g.exponent(j), g.exponent(i)}));
            }
            MonomialIdeal slice(2, std::move(slice_gens));
            MonomialIdeal replaced = detail::two_var_lpp_of_ideal(slice, caps2);
            for (const auto& w : replaced.gens()) {
                std::vector<int> e = q.exponents();
                e[static_cast<std::size_t>(j - 1)] = w.exponent(1);
                e[static_cast<std::size_t>(i - 1)] = w.exponent(2);
                gens.push_back(Monomial(std::move(e)));
            }
        }
        current = MonomialIdeal(n, std::move(gens));
    }
    throw error("stabilize_spp: did not reach a fixpoint");
}

// -- Clements-Lindstrom --------------------------------------------------------

struct ClCertificateEntry {
    int degree;
    DimensionSequence delta_before;  // of the input piece
    DimensionSequence delta_after;   // of the lpp piece
};

struct ClResult {
    MonomialIdeal ideal;
    std::vector<ClCertificateEntry> certificate;
};

namespace detail {

inline ClResult clements_lindstrom_artinian(const MonomialIdeal& ideal, const DegreeSequence& degs) {
    int n = ideal.n();
    int window = degs.socle_degree() + 1;
    MonomialIdeal spp = stabilize_spp(ideal, degs);
    std::vector<GradedPiece> pieces;
    std::vector<ClCertificateEntry> cert;
    for (int d = 0; d <= window; ++d) {
        GradedPiece pd = spp.piece(d);
        GradedPiece sd = (n == 1) ? pd : sigma(slicewise_lpp(pd, degs), degs);
        // Theorem (i) as a runtime check: the segment of this dimension is
        // exactly the lpp piece.
        require(sd == lpp_piece(d, pd.dim(), degs),
                "clements_lindstrom: sigma output is not the lpp piece");
        cert.push_back({d, dimension_sequence(ideal.piece(d)), dimension_sequence(sd)});
        pieces.push_back(std::move(sd));
    }
    for (int d = 0; d < window; ++d) {
        GradedPiece grown = unite(pieces[static_cast<std::size_t>(d)].multiply(),
                                  pure_powers_piece(degs, d + 1));
        require(pieces[static_cast<std::size_t>(d + 1)].contains_piece(grown),
                "clements_lindstrom: pieces failed to form an ideal");
    }
    MonomialIdeal out = ideal_from_pieces(n, pieces);
    require(hilbert_function(out, window) == hilbert_function(ideal, window),
            "clements_lindstrom: Hilbert function drifted");
    return {std::move(out), std::move(cert)};
}

}  // namespace detail

/// The lex-plus-powers ideal with the Hilbert function of I, together with
/// the per-degree dimension-sequence certificate. When r < n the trailing
/// variables are capped by dmax + 2 first, large enough to be invisible
/// below the inspection window; dmax defaults generously and widens itself
/// if a generator shows up near the boundary.
inline ClResult clements_lindstrom(const MonomialIdeal& ideal, const DegreeSequence& degs,
                                   int dmax = -1) {
    detail::require(ideal.n() == degs.n(), "clements_lindstrom: mismatched ring");
    detail::require(ideal.contains_ideal(pure_powers_ideal(degs)),
                    "clements_lindstrom: ideal must contain the pure-powers ideal");
    int n = ideal.n();
    if (ideal.is_unit()) return {ideal, {}};
    if (n == 1) return {ideal, {}};
    if (degs.artinian()) return detail::clements_lindstrom_artinian(ideal, degs);

    int window = dmax;
    if (window < 0) {
        int base = ideal.max_gen_degree() + 4;
        for (int a : degs.degrees()) base += a - 1;
        window = base;
    }
    window = std::max(window, detail::stabilizing_degree(ideal, degs) + 1);
    for (int attempt = 0; attempt < 4; ++attempt) {
        int pad = window + 2;
        std::vector<int> full_degs = degs.degrees();
        full_degs.resize(static_cast<std::size_t>(n), pad);
        DegreeSequence padded(std::move(full_degs), n);
        MonomialIdeal padded_ideal = sum(ideal, pure_powers_ideal(padded));
        ClResult res = detail::clements_lindstrom_artinian(padded_ideal, padded);

        bool boundary = false;
        std::vector<Monomial> keep;
        for (const auto& g : res.ideal.gens()) {
            if (g.degree() <= window - 1)
                keep.push_back(g);
            else if (g.degree() < pad)
                boundary = true;  // a real generator too close to the pads
        }
        if (boundary) {
            window *= 2;
            continue;
        }
        MonomialIdeal out(n, std::move(keep));
        detail::require(hilbert_function(out, window) == hilbert_function(ideal, window),
                        "clements_lindstrom: Hilbert function drifted in the window");
        detail::require(is_lpp(out, degs), "clements_lindstrom: stripped result is not lpp");
        res.certificate.resize(static_cast<std::size_t>(window));
        return {std::move(out), std::move(res.certificate)};
    }
    throw error("clements_lindstrom: window kept growing; supply an explicit dmax");
}

/// Minimal growth (the lemma turned into a check): the lpp ideal grows no
/// faster than I, degree-wise, as ideals: dim(m_1 L_d + a_{d+1}) <=
/// dim(m_1 I_d + a_{d+1}) for all d <= dmax.
inline bool minimal_growth_check(const MonomialIdeal& ideal, const DegreeSequence& degs, int dmax) {
    MonomialIdeal lpp = clements_lindstrom(ideal, degs, std::max(dmax + 2, 4)).ideal;
    for (int d = 0; d <= dmax; ++d) {
        GradedPiece a_next = pure_powers_piece(degs, d + 1);
        long long lhs = unite(lpp.piece(d).multiply(), a_next).dim();
        long long rhs = unite(ideal.piece(d).multiply(), a_next).dim();
        if (lhs > rhs) return false;
    }
    return true;
}

/// Moves an lpp ideal to a dominating degree sequence: I already contains
/// the larger pure powers, so the b-lpp ideal with the same Hilbert
/// function exists; rerun the construction with b.
inline MonomialIdeal relax_degrees(const MonomialIdeal& ideal, const DegreeSequence& a,
                                   const DegreeSequence& b) {
    detail::require(is_lpp(ideal, a), "relax_degrees: input must be lpp for the original sequence");
    detail::require(dominates(b, a), "relax_degrees: target sequence does not dominate the original");
    return clements_lindstrom(ideal, b).ideal;
}

}  // namespace lexplus

#endif
