// lexplus: command-line front door for the lex-plus-powers toolkit.
//
// Subcommands: bound, rep, hf, lpp, cl, sigma, stabilize, link, francisco,
// cb-bound, egh-scan, fvector, mu-check. Exit codes: 0 success, 1 domain
// error, 2 usage error. Output is buffered and emitted once; --json
// switches to a stable schema with a version field.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "lexplus/lexplus.hpp"

namespace {

using nlohmann::json;
using namespace lexplus;

constexpr int kSchemaVersion = 1;

std::vector<int> parse_degs(const std::string& text) {
    std::vector<int> out;
    std::stringstream ss(text);
    std::string tok;
    while (std::getline(ss, tok, ',')) {
        if (tok.empty()) throw error("--degs: empty entry at position " + std::to_string(out.size() + 1));
        try {
            std::size_t used = 0;
            int v = std::stoi(tok, &used);
            if (used != tok.size()) throw std::invalid_argument(tok);
            out.push_back(v);
        } catch (const std::exception&) {
            throw error("--degs: bad entry '" + tok + "' at position " + std::to_string(out.size() + 1));
        }
    }
    if (out.empty()) throw error("--degs: no entries");
    return out;
}

struct Context {
    std::string degs_text;
    int n = 0;  // 0 = infer

    DegreeSequence degree_sequence(int inferred_n = 0) const {
        std::vector<int> degs = degs_text.empty() ? std::vector<int>{} : parse_degs(degs_text);
        int nn = n > 0 ? n : std::max(static_cast<int>(degs.size()), inferred_n);
        if (nn <= 0) throw error("cannot infer the variable count; pass --n");
        return DegreeSequence(std::move(degs), nn);
    }

    MonomialIdeal ideal(const std::string& text) const {
        int nn = n > 0 ? n : std::max(scan_max_variable_index(text),
                                      static_cast<int>(degs_text.empty() ? 0 : parse_degs(degs_text).size()));
        if (nn <= 0) throw error("cannot infer the variable count; pass --n");
        return parse_ideal(text, nn);
    }
};

json hf_json(const HilbertFunction& h) {
    json out = json::array();
    for (auto v : h.values) out.push_back(v);
    return out;
}

std::string hf_text(const HilbertFunction& h) {
    std::string out;
    for (auto v : h.values) {
        if (!out.empty()) out += " ";
        out += std::to_string(v);
    }
    return out;
}

json certificate_json(const std::vector<ClCertificateEntry>& cert) {
    json out = json::array();
    for (const auto& entry : cert) {
        json row;
        row["degree"] = entry.degree;
        row["delta_before"] = entry.delta_before;
        row["delta_after"] = entry.delta_after;
        out.push_back(row);
    }
    return out;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"lex-plus-powers toolkit: Macaulay growth bounds, Clements-Lindstrom "
                 "lpp construction, monomial linkage, Kruskal-Katona f-vectors"};
    app.require_subcommand(1);
    app.failure_message(CLI::FailureMessage::help);

    Context ctx;
    bool as_json = false;
    app.add_option("--degs", ctx.degs_text, "degree sequence a1,a2,... (nondecreasing)");
    app.add_option("--n", ctx.n, "ambient variable count (inferred when omitted)");
    app.add_flag("--json", as_json, "emit JSON instead of a human table");

    long long arg_k = 0;
    int arg_d = 0;
    std::string arg_ideal;
    int arg_dmax = -1;
    int arg_degree = -1;
    bool flag_table = false;
    int scan_maxgen = 2;
    int scan_dmax = 3;
    double scan_budget = -1;
    bool scan_no_symmetry = false, scan_serial = false;
    std::vector<long long> fvec_entries;
    std::string facet_file;

    auto* cmd_bound = app.add_subcommand("bound", "growth bound k^<d> for the degree sequence");
    cmd_bound->add_option("k", arg_k)->required();
    cmd_bound->add_option("d", arg_d)->required();

    auto* cmd_rep = app.add_subcommand("rep", "Macaulay representation of k in base d");
    cmd_rep->add_option("k", arg_k)->required();
    cmd_rep->add_option("d", arg_d)->required();

    auto* cmd_hf = app.add_subcommand("hf", "Hilbert function of the quotient by a monomial ideal");
    cmd_hf->add_option("ideal", arg_ideal)->required();
    cmd_hf->add_option("--dmax", arg_dmax, "last degree (required for non-Artinian quotients)");

    auto* cmd_lpp = app.add_subcommand("lpp", "lex-plus-powers ideal with the same Hilbert function");
    cmd_lpp->add_option("ideal", arg_ideal)->required();
    auto* cmd_cl = app.add_subcommand("cl", "Clements-Lindstrom construction with certificate");
    cmd_cl->add_option("ideal", arg_ideal)->required();
    cmd_cl->add_option("--dmax", arg_dmax, "inspection window when not every variable is capped");

    auto* cmd_sigma = app.add_subcommand("sigma", "unique segment of the given degree piece");
    cmd_sigma->add_option("monomials", arg_ideal, "monomials of one degree")->required();
    cmd_sigma->add_option("-d,--degree", arg_degree, "degree of the piece")->required();

    auto* cmd_stab = app.add_subcommand("stabilize", "strongly-stable-plus-powers ideal, same Hilbert function");
    cmd_stab->add_option("ideal", arg_ideal)->required();

    auto* cmd_link = app.add_subcommand("link", "link (a : I) with respect to the pure powers");
    cmd_link->add_option("ideal", arg_ideal)->required();
    cmd_link->add_flag("--table", flag_table, "also print the duality table");

    auto* cmd_fran = app.add_subcommand("francisco", "extremal almost complete intersection for degree D");
    cmd_fran->add_option("D", arg_d)->required();

    auto* cmd_cb = app.add_subcommand("cb-bound", "Cayley-Bacharach multiplicity bound for degree D");
    cmd_cb->add_option("D", arg_d)->required();

    auto* cmd_scan = app.add_subcommand("egh-scan", "exhaustive verification over all small ideals");
    cmd_scan->add_option("--maxgen", scan_maxgen, "largest generator degree enumerated");
    cmd_scan->add_option("--dmax", scan_dmax, "largest degree checked");
    cmd_scan->add_option("--budget", scan_budget, "state-count guard (default 1e7, env LEXPLUS_BUDGET)");
    cmd_scan->add_flag("--no-symmetry", scan_no_symmetry, "disable orbit reduction");
    cmd_scan->add_flag("--serial", scan_serial, "disable the parallel partitions");

    auto* cmd_fv = app.add_subcommand("fvector", "Kruskal-Katona f-vector tools");
    auto* fv_check = cmd_fv->add_subcommand("check", "test the Kruskal-Katona criterion");
    fv_check->add_option("entries", fvec_entries)->required();
    auto* fv_build = cmd_fv->add_subcommand("build", "construct a complex with the given f-vector");
    fv_build->add_option("entries", fvec_entries)->required();
    auto* fv_of = cmd_fv->add_subcommand("of", "f-vector of the complex in a facet file");
    fv_of->add_option("file", facet_file, "one facet per line, vertices separated by spaces")->required();
    cmd_fv->require_subcommand(1);

    auto* cmd_mu = app.add_subcommand("mu-check", "generator-count bound in three variables");
    cmd_mu->add_option("ideal", arg_ideal)->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    std::ostringstream out;
    try {
        if (*cmd_bound) {
            out << growth(arg_k, arg_d, ctx.degree_sequence()) << "\n";
        } else if (*cmd_rep) {
            MacaulayRep rep = macaulay_rep(arg_k, arg_d, ctx.degree_sequence());
            if (as_json) {
                json terms = json::array();
                for (auto [kt, t] : rep.terms) terms.push_back(json::array({kt, t}));
                json payload{{"version", kSchemaVersion}, {"k", arg_k}, {"d", arg_d}, {"terms", terms}};
                out << payload.dump() << "\n";
            } else {
                out << arg_k << " =";
                bool first = true;
                for (auto [kt, t] : rep.terms) {
                    out << (first ? " " : " + ") << "[" << kt << "; " << t << "]";
                    first = false;
                }
                out << "   (bound " << rep.shifted_value() << ")\n";
            }
        } else if (*cmd_hf) {
            MonomialIdeal ideal = ctx.ideal(arg_ideal);
            HilbertFunction h = arg_dmax >= 0 ? hilbert_function(ideal, arg_dmax) : hilbert_function(ideal);
            if (as_json)
                out << json{{"version", kSchemaVersion}, {"values", hf_json(h)}}.dump() << "\n";
            else
                out << hf_text(h) << "\n";
        } else if (*cmd_lpp || *cmd_cl) {
            MonomialIdeal ideal = ctx.ideal(arg_ideal);
            DegreeSequence degs = ctx.degree_sequence(ideal.n());
            ClResult res = clements_lindstrom(ideal, degs, arg_dmax);
            if (as_json) {
                json payload{{"version", kSchemaVersion}, {"ideal", format_ideal(res.ideal)}};
                if (*cmd_cl) payload["certificate"] = certificate_json(res.certificate);
                out << payload.dump() << "\n";
            } else {
                out << format_ideal(res.ideal) << "\n";
            }
        } else if (*cmd_sigma) {
            MonomialIdeal spanned = ctx.ideal(arg_ideal);
            DegreeSequence degs = ctx.degree_sequence(spanned.n());
            std::vector<Monomial> members;
            for (const auto& g : spanned.gens()) {
                if (g.degree() != arg_degree)
                    throw error("sigma: every monomial must have degree " + std::to_string(arg_degree));
                members.push_back(g);
            }
            GradedPiece piece = unite(GradedPiece(degs.n(), arg_degree, std::move(members)),
                                      pure_powers_piece(degs, arg_degree));
            GradedPiece segment = sigma(slicewise_lpp(piece, degs), degs);
            std::string text;
            for (const auto& m : segment.members()) {
                if (!text.empty()) text += ", ";
                text += format_monomial(m);
            }
            if (as_json)
                out << json{{"version", kSchemaVersion}, {"segment", text}}.dump() << "\n";
            else
                out << text << "\n";
        } else if (*cmd_stab) {
            MonomialIdeal ideal = ctx.ideal(arg_ideal);
            DegreeSequence degs = ctx.degree_sequence(ideal.n());
            MonomialIdeal spp = stabilize_spp(ideal, degs);
            if (as_json)
                out << json{{"version", kSchemaVersion}, {"ideal", format_ideal(spp)}}.dump() << "\n";
            else
                out << format_ideal(spp) << "\n";
        } else if (*cmd_link) {
            MonomialIdeal ideal = ctx.ideal(arg_ideal);
            DegreeSequence degs = ctx.degree_sequence(ideal.n());
            MonomialIdeal linked = link(ideal, degs);
            int s = degs.socle_degree();
            if (as_json) {
                json payload{{"version", kSchemaVersion}, {"link", format_ideal(linked)}};
                if (flag_table) {
                    HilbertFunction hi = hilbert_function(ideal, s);
                    HilbertFunction hl = hilbert_function(linked, s);
                    json table = json::array();
                    for (int d = 0; d <= s; ++d)
                        table.push_back(json::array({d, hi.at(d), hl.at(s - d)}));
                    payload["table"] = table;
                }
                out << payload.dump() << "\n";
            } else {
                out << format_ideal(linked) << "\n";
                if (flag_table) {
                    HilbertFunction hi = hilbert_function(ideal, s);
                    HilbertFunction hl = hilbert_function(linked, s);
                    out << "d H(R/I;d) H(R/I^l;s-d)\n";
                    for (int d = 0; d <= s; ++d)
                        out << d << " " << hi.at(d) << " " << hl.at(s - d) << "\n";
                }
            }
        } else if (*cmd_fran) {
            DegreeSequence degs = ctx.degree_sequence();
            MonomialIdeal ideal = francisco_ideal(degs, arg_d);
            MonomialIdeal linked = francisco_link(degs, arg_d);
            if (as_json) {
                json payload{{"version", kSchemaVersion},
                             {"ideal", format_ideal(ideal)},
                             {"link", format_ideal(linked)},
                             {"multiplicity", multiplicity(ideal)},
                             {"bound", cb_bound(degs, arg_d)}};
                out << payload.dump() << "\n";
            } else {
                out << "ideal: " << format_ideal(ideal) << "\n";
                out << "link: " << format_ideal(linked) << "\n";
                out << "multiplicity: " << multiplicity(ideal) << "\n";
            }
        } else if (*cmd_cb) {
            out << cb_bound(ctx.degree_sequence(), arg_d) << "\n";
        } else if (*cmd_scan) {
            DegreeSequence degs = ctx.degree_sequence();
            ScanOptions opt;
            opt.maxgen = scan_maxgen;
            opt.dmax = scan_dmax;
            opt.symmetry = !scan_no_symmetry;
            opt.parallel = !scan_serial;
            if (scan_budget > 0)
                opt.budget = scan_budget;
            else if (const char* env = std::getenv("LEXPLUS_BUDGET"))
                opt.budget = std::atof(env);
            ScanReport report = egh_scan(degs, opt);
            json payload{{"version", kSchemaVersion},
                         {"instances", report.instances},
                         {"violations", report.violations},
                         {"elapsed_ms", report.elapsed_ms}};
            out << payload.dump() << "\n";
            if (!report.violations.empty()) {
                std::cout << out.str();
                return 1;
            }
        } else if (*cmd_fv) {
            if (*fv_check) {
                FVector f(fvec_entries);
                KkResult res = kk_valid(f);
                if (res.ok) {
                    out << "valid\n";
                } else {
                    std::cout << "invalid at d=" << res.violating_index << "\n";
                    return 1;
                }
            } else if (*fv_build) {
                SimplicialComplex complex = realize_fvector(FVector(fvec_entries));
                if (as_json) {
                    json facets = json::array();
                    for (const auto& facet : complex.facets()) facets.push_back(facet);
                    json payload{{"version", kSchemaVersion},
                                 {"f", fvec_entries},
                                 {"facets", facets},
                                 {"stanley_reisner", format_ideal(stanley_reisner(complex))}};
                    out << payload.dump() << "\n";
                } else {
                    for (const auto& facet : complex.facets()) {
                        std::string line;
                        for (int v : facet) line += (line.empty() ? "" : " ") + std::to_string(v);
                        out << line << "\n";
                    }
                }
            } else if (*fv_of) {
                std::ifstream in(facet_file);
                if (!in) throw error("cannot open facet file " + facet_file);
                std::vector<std::vector<int>> facets;
                int max_vertex = 0;
                std::string line;
                while (std::getline(in, line)) {
                    std::istringstream ls(line);
                    std::vector<int> facet;
                    int v;
                    while (ls >> v) {
                        facet.push_back(v);
                        max_vertex = std::max(max_vertex, v);
                    }
                    if (!facet.empty()) facets.push_back(std::move(facet));
                }
                int nn = ctx.n > 0 ? ctx.n : max_vertex;
                SimplicialComplex complex(nn, std::move(facets));
                FVector f = complex_to_fvector(complex);
                if (as_json)
                    out << json{{"version", kSchemaVersion}, {"f", f.f}}.dump() << "\n";
                else {
                    std::string text;
                    for (auto v : f.f) text += (text.empty() ? "" : " ") + std::to_string(v);
                    out << text << "\n";
                }
            }
        } else if (*cmd_mu) {
            MonomialIdeal ideal = ctx.ideal(arg_ideal);
            DegreeSequence degs = ctx.degree_sequence(ideal.n());
            bool ok = mu_bound_check(ideal, degs);
            long long mu = mu_in_r(ideal, DegreeSequence({degs.cap(1), degs.cap(2)}, ideal.n()));
            long long bound = static_cast<long long>(degs.cap(1)) * degs.cap(2);
            if (as_json)
                out << json{{"version", kSchemaVersion}, {"mu", mu}, {"bound", bound}, {"ok", ok}}.dump()
                    << "\n";
            else
                out << "mu = " << mu << ", bound = " << bound << (ok ? "" : "  VIOLATION") << "\n";
            if (!ok) {
                std::cout << out.str();
                return 1;
            }
        }
    } catch (const error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    std::cout << out.str();
    return 0;
}
