#ifndef LEXPLUS_EGH_HPP
#define LEXPLUS_EGH_HPP

#include <chrono>
#include <cmath>
#include <cstdlib>
#include <functional>
#include <future>
#include <numeric>
#include <string>
#include <thread>
#include <vector>

#include "lexplus/linkage.hpp"
#include "lexplus/lpp.hpp"
#include "lexplus/macaulay.hpp"

namespace lexplus {

/// The Cayley-Bacharach parameters of (a, D): b is the unique integer with
/// sum_{i<=b}(a_i - 1) <= D < sum_{i<=b+1}(a_i - 1), and
/// delta = sum_{i<=b+1}(a_i - 1) - D + 1 when b < n, else 1.
struct CBParameters {
    int D = 0;
    int b = 0;
    long long delta = 1;
};

inline CBParameters cb_parameters(const DegreeSequence& degs, int D) {
    detail::require(degs.artinian(), "cb_parameters: the degree sequence must cap every variable");
    int s = degs.socle_degree();
    detail::require(D >= degs.cap(1) && D <= s,
                    "cb_parameters: D out of range a_1 .. sum(a_i - 1)");
    int n = degs.n();
    int b = 0, partial = 0;
    while (b < n && partial + degs.cap(b + 1) - 1 <= D) {
        partial += degs.cap(b + 1) - 1;
        ++b;
    }
    CBParameters out;
    out.D = D;
    out.b = b;
    out.delta = (b < n) ? static_cast<long long>(partial + degs.cap(b + 1) - 1) - D + 1 : 1;
    return out;
}

/// e <= prod a_i - delta * prod_{i >= b+2} a_i, the sharp multiplicity
/// bound for an almost complete intersection cut by a degree-D form.
inline long long cb_bound(const DegreeSequence& degs, int D) {
    CBParameters p = cb_parameters(degs, D);
    long long all = 1;
    for (int a : degs.degrees()) all *= a;
    long long tail = 1;
    for (int i = p.b + 2; i <= degs.n(); ++i) tail *= degs.cap(i);
    return all - p.delta * tail;
}

/// The extremal lpp almost complete intersection: a + (h) with
/// h = x1^{a1-1} ... xb^{ab-1} x_{b+1}^{D - sum_{i<=b}(a_i-1)}.
inline MonomialIdeal francisco_ideal(const DegreeSequence& degs, int D) {
    CBParameters p = cb_parameters(degs, D);
    int n = degs.n();
    std::vector<int> e(static_cast<std::size_t>(n), 0);
    int spent = 0;
    for (int i = 1; i <= p.b; ++i) {
        e[static_cast<std::size_t>(i - 1)] = degs.cap(i) - 1;
        spent += degs.cap(i) - 1;
    }
    if (p.b < n) e[static_cast<std::size_t>(p.b)] = D - spent;
    Monomial h(std::move(e));
    detail::require(h.degree() == D, "francisco_ideal: extra generator has the wrong degree");
    MonomialIdeal out = sum(pure_powers_ideal(degs), MonomialIdeal(n, {h}));
    detail::require(is_lpp(out, degs), "francisco_ideal: constructed ideal is not lpp");
    return out;
}

/// The closed-form link of the extremal ideal:
/// (x1, ..., xb, x_{b+1}^delta, x_{b+2}^{a_{b+2}}, ..., xn^{an}).
inline MonomialIdeal francisco_link(const DegreeSequence& degs, int D) {
    CBParameters p = cb_parameters(degs, D);
    int n = degs.n();
    std::vector<Monomial> gens;
    for (int i = 1; i <= p.b; ++i) gens.push_back(Monomial::variable(n, i));
    if (p.b < n) {
        std::vector<int> e(static_cast<std::size_t>(n), 0);
        e[static_cast<std::size_t>(p.b)] = static_cast<int>(p.delta);
        gens.push_back(Monomial(std::move(e)));
    }
    for (int i = p.b + 2; i <= n; ++i) {
        std::vector<int> e(static_cast<std::size_t>(n), 0);
        e[static_cast<std::size_t>(i - 1)] = degs.cap(i);
        gens.push_back(Monomial(std::move(e)));
    }
    return MonomialIdeal(n, std::move(gens));
}

/// EGH in one degree for a monomial ideal containing a: by uniqueness of
/// lpp pieces the existential collapses to a single inequality, growth of
/// the lpp piece of dimension dim I_d against dim I_{d+1}.
inline bool egh_check(const MonomialIdeal& ideal, const DegreeSequence& degs, int d) {
    detail::require(ideal.contains_ideal(pure_powers_ideal(degs)),
                    "egh_check: ideal must contain the pure powers");
    GradedPiece v = lpp_piece(d, ideal.piece(d).dim(), degs);
    GradedPiece grown = unite(v.multiply(), pure_powers_piece(degs, d + 1));
    return grown.dim() <= ideal.piece(d + 1).dim();
}

/// Minimal generators of I counted in R = A/(x1^a1, x2^a2): generators
/// outside the pure powers. Two of them never share the exponent pair
/// (i, j) on x1, x2, and those pairs live in [0,a1) x [0,a2).
inline long long mu_in_r(const MonomialIdeal& ideal, const DegreeSequence& degs) {
    long long mu = 0;
    for (const auto& g : ideal.gens())
        if (g.exponent(1) < degs.cap(1) && g.exponent(2) < degs.cap(2)) ++mu;
    return mu;
}

/// mu(I R) <= a1 * a2 for ideals in three variables containing two pure
/// powers: the generator-count bound, with generators counted beyond the
/// complete intersection.
inline bool mu_bound_check(const MonomialIdeal& ideal, const DegreeSequence& degs) {
    detail::require(ideal.n() == 3, "mu_bound_check: three variables only");
    detail::require(degs.r() >= 2, "mu_bound_check: needs caps on x1 and x2");
    DegreeSequence two({degs.cap(1), degs.cap(2)}, 3);
    detail::require(ideal.contains_ideal(pure_powers_ideal(two)),
                    "mu_bound_check: ideal must contain (x1^a1, x2^a2)");
    return mu_in_r(ideal, two) <= static_cast<long long>(degs.cap(1)) * degs.cap(2);
}

// -- exhaustive enumeration and the scan harness -------------------------------

/// Walks every monomial ideal containing the pure powers whose generators
/// have degree at most maxgen, as upward-closed monomial sets chosen
/// degree by degree. Enumeration order is deterministic.
class IdealEnumerator {
public:
    IdealEnumerator(DegreeSequence degs, int maxgen) : degs_(std::move(degs)), maxgen_(maxgen) {
        detail::require(maxgen_ >= 1, "enumeration needs maxgen >= 1");
    }

    /// Upper bound on the number of ideals: the per-degree choice count is
    /// largest along the path that picks nothing, i.e. against the bare
    /// pure-powers closure.
    double estimate() const {
        double total = 1;
        GradedPiece prev(degs_.n(), 0);
        for (int d = 1; d <= maxgen_; ++d) {
            GradedPiece forced = unite(prev.multiply(), pure_powers_piece(degs_, d));
            long long free_count = ambient_dim(degs_.n(), d) - forced.dim();
            total *= std::pow(2.0, static_cast<double>(free_count));
            if (total > 1e18) return total;
            prev = std::move(forced);
        }
        return total;
    }

    void run(const std::function<void(const MonomialIdeal&)>& visit) const {
        GradedPiece empty(degs_.n(), 0);
        std::vector<GradedPiece> chosen;
        descend(1, empty, chosen, visit);
    }

private:
    void descend(int d, const GradedPiece& prev, std::vector<GradedPiece>& chosen,
                 const std::function<void(const MonomialIdeal&)>& visit) const {
        if (d > maxgen_) {
            std::vector<GradedPiece> pieces;
            pieces.emplace_back(degs_.n(), 0);
            pieces.insert(pieces.end(), chosen.begin(), chosen.end());
            visit(ideal_from_pieces(degs_.n(), pieces));
            return;
        }
        GradedPiece forced = unite(prev.multiply(), pure_powers_piece(degs_, d));
        std::vector<Monomial> free_monos;
        for (auto& m : monomials_of_degree(degs_.n(), d))
            if (!forced.contains(m)) free_monos.push_back(std::move(m));
        detail::require(free_monos.size() <= 62, "enumeration layer too wide");
        for (std::uint64_t mask = 0; mask < (std::uint64_t(1) << free_monos.size()); ++mask) {
            std::vector<Monomial> members = forced.members();
            for (std::size_t bit = 0; bit < free_monos.size(); ++bit)
                if (mask & (std::uint64_t(1) << bit)) members.push_back(free_monos[bit]);
            GradedPiece piece(degs_.n(), d, std::move(members));
            chosen.push_back(piece);
            descend(d + 1, piece, chosen, visit);
            chosen.pop_back();
        }
    }

    DegreeSequence degs_;
    int maxgen_;
};

/// True when the ideal is the lex-least representative of its orbit under
/// variable permutations (used only when every a_i is equal, so that all
/// permutations fix a).
inline bool is_canonical_under_symmetry(const MonomialIdeal& ideal) {
    int n = ideal.n();
    std::vector<int> perm(static_cast<std::size_t>(n));
    std::iota(perm.begin(), perm.end(), 0);
    auto key = [&](const MonomialIdeal& m) { return format_ideal(m); };
    std::string self = key(ideal);
    while (std::next_permutation(perm.begin(), perm.end())) {
        std::vector<Monomial> gens;
        for (const auto& g : ideal.gens()) {
            std::vector<int> e(static_cast<std::size_t>(n));
            for (int i = 0; i < n; ++i) e[static_cast<std::size_t>(perm[static_cast<std::size_t>(i)])] = g.exponents()[static_cast<std::size_t>(i)];
            gens.push_back(Monomial(std::move(e)));
        }
        if (key(MonomialIdeal(n, std::move(gens))) < self) return false;
    }
    return true;
}

struct ScanOptions {
    int maxgen = 2;
    int dmin = 0;
    int dmax = 3;
    double budget = 1e7;        // refuse larger estimated enumerations
    bool symmetry = true;       // orbit reduction when all a_i are equal
    bool parallel = true;
};

struct ScanReport {
    long long instances = 0;
    std::vector<std::string> violations;
    long long elapsed_ms = 0;

    void merge(const ScanReport& other) {
        instances += other.instances;
        violations.insert(violations.end(), other.violations.begin(), other.violations.end());
    }
};

namespace detail {

inline void scan_one(const MonomialIdeal& ideal, const DegreeSequence& degs,
                     const ScanOptions& opt, ScanReport& report) {
    ++report.instances;
    auto flag = [&](const std::string& what) {
        report.violations.push_back(what + ": " + format_ideal(ideal));
    };
    for (int d = opt.dmin; d <= opt.dmax; ++d)
        if (!egh_check(ideal, degs, d)) flag("egh d=" + std::to_string(d));
    if (!minimal_growth_check(ideal, degs, opt.dmax)) flag("minimal-growth");
    if (degs.artinian()) {
        MonomialIdeal linked = link(ideal, degs);
        if (link(linked, degs) != ideal) flag("involution");
        if (!duality_check(ideal, degs)) flag("duality");
        if (ideal.n() == 2 && two_var_link(ideal, degs) != linked) flag("closed-form-link");
    }
    if (ideal.n() == 3 && degs.r() >= 2)
        if (!mu_bound_check(ideal, degs)) flag("mu-bound");
}

}  // namespace detail

/// Enumerates every monomial ideal containing a within the generator
/// budget and runs the whole battery of checks on each; the expected
/// violation list is empty.
inline ScanReport egh_scan(const DegreeSequence& degs, const ScanOptions& opt = {}) {
    auto started = std::chrono::steady_clock::now();
    if (opt.dmin > opt.dmax) return {};  // empty degree range, empty report
    IdealEnumerator enumerator(degs, opt.maxgen);
    double estimate = enumerator.estimate();
    if (estimate > opt.budget)
        throw error("egh_scan: estimated " + std::to_string(estimate) +
                    " states exceeds the budget " + std::to_string(opt.budget) +
                    " (override with --budget or LEXPLUS_BUDGET)");

    bool all_equal = degs.artinian() && degs.r() >= 1 &&
                     std::all_of(degs.degrees().begin(), degs.degrees().end(),
                                 [&](int a) { return a == degs.cap(1); });
    bool reduce = opt.symmetry && all_equal;

    std::vector<MonomialIdeal> batch;
    enumerator.run([&](const MonomialIdeal& ideal) {
        if (reduce && !is_canonical_under_symmetry(ideal)) return;
        batch.push_back(ideal);
    });

    ScanReport report;
    unsigned workers = opt.parallel ? std::max(1u, std::thread::hardware_concurrency()) : 1u;
    if (workers <= 1 || batch.size() < 16) {
        for (const auto& ideal : batch) detail::scan_one(ideal, degs, opt, report);
    } else {
        // partitions are independent; the report merge is commutative
        std::vector<std::future<ScanReport>> parts;
        std::size_t chunk = (batch.size() + workers - 1) / workers;
        for (unsigned w = 0; w < workers; ++w) {
            std::size_t lo = w * chunk, hi = std::min(batch.size(), lo + chunk);
            if (lo >= hi) break;
            parts.push_back(std::async(std::launch::async, [&, lo, hi] {
                ScanReport local;
                for (std::size_t k = lo; k < hi; ++k)
                    detail::scan_one(batch[k], degs, opt, local);
                return local;
            }));
        }
        for (auto& f : parts) report.merge(f.get());
    }
    std::sort(report.violations.begin(), report.violations.end());
    report.elapsed_ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                            std::chrono::steady_clock::now() - started)
                            .count();
    return report;
}

}  // namespace lexplus

#endif
