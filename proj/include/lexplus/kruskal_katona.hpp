#ifndef LEXPLUS_KRUSKAL_KATONA_HPP
#define LEXPLUS_KRUSKAL_KATONA_HPP

#include <algorithm>
#include <cstdint>
#include <set>
#include <vector>

#include "lexplus/macaulay.hpp"

namespace lexplus {

/// Face counts (f_0, ..., f_{r-1}) of a simplicial complex; f_{-1} = 1 is
/// implicit and never stored.
struct FVector {
    std::vector<long long> f;

    FVector() = default;
    explicit FVector(std::vector<long long> entries) : f(std::move(entries)) {
        for (long long v : f) detail::require(v >= 0, "f-vector entries must be nonnegative");
        if (!f.empty()) detail::require(f[0] >= 1, "f-vector needs f0 >= 1");
    }

    bool operator==(const FVector& o) const { return f == o.f; }
};

struct KkResult {
    bool ok = true;
    int violating_index = -1;
};

/// Kruskal-Katona: f is the f-vector of a simplicial complex iff
/// f_{d+1} <= f_d^{(d+1)} for d = 0..r-2.
inline KkResult kk_valid(const FVector& fv) {
    for (std::size_t d = 0; d + 1 < fv.f.size(); ++d) {
        if (fv.f[d + 1] > classical_growth(fv.f[d], static_cast<int>(d) + 1))
            return {false, static_cast<int>(d) + 1};
    }
    return {};
}

/// A simplicial complex on vertices 1..n, stored by its facets.
class SimplicialComplex {
public:
    SimplicialComplex(int n, std::vector<std::vector<int>> facets) : n_(n) {
        detail::require(n_ >= 0 && n_ <= 62, "vertex count out of range");
        for (auto& face : facets) {
            std::sort(face.begin(), face.end());
            face.erase(std::unique(face.begin(), face.end()), face.end());
            for (int v : face)
                detail::require(v >= 1 && v <= n_, "facet vertex out of range");
        }
        // keep only maximal faces
        for (std::size_t a = 0; a < facets.size(); ++a) {
            bool maximal = true;
            for (std::size_t b = 0; b < facets.size() && maximal; ++b) {
                if (a == b) continue;
                bool inside = std::includes(facets[b].begin(), facets[b].end(),
                                            facets[a].begin(), facets[a].end());
                if (inside && (facets[a].size() < facets[b].size() || b < a)) maximal = false;
            }
            if (maximal) facets_.push_back(facets[a]);
        }
        std::sort(facets_.begin(), facets_.end());
        facets_.erase(std::unique(facets_.begin(), facets_.end()), facets_.end());
    }

    int n() const { return n_; }
    const std::vector<std::vector<int>>& facets() const { return facets_; }

    /// All faces as vertex bitmasks (the empty face included).
    std::set<std::uint64_t> faces() const {
        std::set<std::uint64_t> out;
        out.insert(0);
        for (const auto& facet : facets_) {
            detail::require(facet.size() <= 25, "facet too large to expand");
            std::uint64_t full = 0;
            for (int v : facet) full |= std::uint64_t(1) << (v - 1);
            for (std::uint64_t sub = full;; sub = (sub - 1) & full) {
                out.insert(sub);
                if (sub == 0) break;
            }
        }
        return out;
    }

    bool operator==(const SimplicialComplex& o) const { return n_ == o.n_ && facets_ == o.facets_; }

private:
    int n_;
    std::vector<std::vector<int>> facets_;
};

inline FVector complex_to_fvector(const SimplicialComplex& complex) {
    std::vector<long long> counts;
    for (auto face : complex.faces()) {
        int size = 0;
        for (; face; face &= face - 1) ++size;
        if (size == 0) continue;  // implicit f_{-1}
        if (static_cast<std::size_t>(size) > counts.size()) counts.resize(static_cast<std::size_t>(size), 0);
        ++counts[static_cast<std::size_t>(size - 1)];
    }
    return FVector(std::move(counts));
}

/// The Stanley-Reisner ideal: squarefree generators from the minimal
/// non-faces of the complex.
inline MonomialIdeal stanley_reisner(const SimplicialComplex& complex) {
    int n = complex.n();
    detail::require(n >= 1, "stanley_reisner: empty vertex set");
    auto faces = complex.faces();
    auto is_face = [&](std::uint64_t s) { return faces.count(s) > 0; };
    std::vector<Monomial> gens;
    for (std::uint64_t s = 1; s < (std::uint64_t(1) << n); ++s) {
        if (is_face(s)) continue;
        bool minimal = true;
        for (std::uint64_t bit = s; bit && minimal; bit &= bit - 1) {
            std::uint64_t lowest = bit & (~bit + 1);
            if (!is_face(s & ~lowest)) minimal = false;
        }
        if (!minimal) continue;
        std::vector<int> e(static_cast<std::size_t>(n), 0);
        for (int v = 1; v <= n; ++v)
            if (s & (std::uint64_t(1) << (v - 1))) e[static_cast<std::size_t>(v - 1)] = 1;
        gens.push_back(Monomial(std::move(e)));
    }
    return MonomialIdeal(n, std::move(gens));
}

/// The complex of a squarefree monomial ideal: faces are the squarefree
/// monomials outside the ideal.
inline SimplicialComplex complex_of(const MonomialIdeal& ideal) {
    int n = ideal.n();
    detail::require(n <= 25, "complex_of: too many variables to expand");
    for (const auto& g : ideal.gens())
        for (int i = 1; i <= n; ++i)
            detail::require(g.exponent(i) <= 1, "complex_of: ideal is not squarefree");
    std::vector<std::uint64_t> face_masks;
    for (std::uint64_t s = 0; s < (std::uint64_t(1) << n); ++s) {
        std::vector<int> e(static_cast<std::size_t>(n), 0);
        for (int v = 1; v <= n; ++v)
            if (s & (std::uint64_t(1) << (v - 1))) e[static_cast<std::size_t>(v - 1)] = 1;
        if (!ideal.contains(Monomial(std::move(e)))) face_masks.push_back(s);
    }
    std::vector<std::vector<int>> facets;
    for (auto s : face_masks) {
        bool maximal = true;
        for (auto t : face_masks)
            if (t != s && (s & t) == s) { maximal = false; break; }
        if (!maximal || s == 0) continue;
        std::vector<int> face;
        for (int v = 1; v <= n; ++v)
            if (s & (std::uint64_t(1) << (v - 1))) face.push_back(v);
        facets.push_back(std::move(face));
    }
    return SimplicialComplex(n, std::move(facets));
}

/// f-vector through the Hilbert function of A / (J_Delta + (x1^2..xn^2)):
/// f_{i-1} = H(i). Must agree with the direct face count.
inline FVector fvector_via_hilbert(const SimplicialComplex& complex) {
    int n = complex.n();
    detail::require(n >= 1, "fvector_via_hilbert: empty vertex set");
    DegreeSequence squares(std::vector<int>(static_cast<std::size_t>(n), 2), n);
    MonomialIdeal ideal = sum(stanley_reisner(complex), pure_powers_ideal(squares));
    HilbertFunction h = hilbert_function(ideal, n);
    std::vector<long long> f(h.values.begin() + 1, h.values.end());
    while (!f.empty() && f.back() == 0) f.pop_back();
    return FVector(std::move(f));
}

/// Realizes an admissible f-vector: realize H = (1, f, 0) by a
/// (2,...,2)-lpp ideal on n = f0 vertices, strip the pure squares, and
/// return the complex of the squarefree remainder.
inline SimplicialComplex realize_fvector(const FVector& fv) {
    auto valid = kk_valid(fv);
    if (!valid.ok)
        throw inadmissible_error("f-vector fails the Kruskal-Katona criterion",
                                 valid.violating_index);
    detail::require(!fv.f.empty(), "realize_fvector: empty f-vector");
    int n = static_cast<int>(fv.f[0]);
    DegreeSequence squares(std::vector<int>(static_cast<std::size_t>(n), 2), n);
    std::vector<long long> h{1};
    h.insert(h.end(), fv.f.begin(), fv.f.end());
    h.push_back(0);
    MonomialIdeal ideal = realize_hf(HilbertFunction(std::move(h)), squares);
    std::vector<Monomial> squarefree;
    for (const auto& g : ideal.gens()) {
        bool sf = true;
        for (int i = 1; i <= n && sf; ++i)
            if (g.exponent(i) > 1) sf = false;
        if (sf) squarefree.push_back(g);
    }
    SimplicialComplex complex = complex_of(MonomialIdeal(n, std::move(squarefree)));
    detail::require(complex_to_fvector(complex) == fv, "realize_fvector: face counts drifted");
    return complex;
}

}  // namespace lexplus

#endif
