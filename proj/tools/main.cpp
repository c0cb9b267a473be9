// Command-line front end: construct/verify/convert the JSON formats, run the
// randomized and exact covering searches, and print bound/partition tables.
// Exit codes: 0 = all checks passed, 1 = a verdict failed, 2 = bad
// parameters, guard violations, or malformed input.

#include <chrono>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "bollobas/acceptance.hpp"
#include "bollobas/bounds.hpp"
#include "bollobas/chains.hpp"
#include "bollobas/constructions.hpp"
#include "bollobas/covering.hpp"
#include "bollobas/json_io.hpp"
#include "bollobas/partitions.hpp"

namespace {

using namespace bollobas;

std::string read_input(const std::string& path) {
    if (path == "-") {
        std::ostringstream ss;
        ss << std::cin.rdbuf();
        return ss.str();
    }
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open file: " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void write_output(const std::string& path, const std::string& text) {
    if (path == "-") {
        std::cout << text << "\n";
        return;
    }
    write_text_file(path, text);
}

std::string tuple_str(const std::vector<int>& idx) {
    std::string s = "(";
    for (size_t i = 0; i < idx.size(); ++i) {
        if (i) s += ",";
        s += std::to_string(idx[i]);
    }
    return s + ")";
}

Surjection parse_phi(const std::string& spec, int k, int t) {
    if (spec.empty()) return Surjection::canonical(k, t);
    std::vector<int> image;
    std::stringstream ss(spec);
    std::string item;
    while (std::getline(ss, item, ',')) image.push_back(std::stoi(item));
    return Surjection::of(t, std::move(image));
}

int cmd_construct(const std::string& kind, int a, int b, int k, int n, const std::string& out) {
    FamilySystem sys;
    if (kind == "classical-pairs") {
        sys = classical_pairs(a, b);
    } else if (kind == "sharpness-k2") {
        sys = sharpness_k2(k, n);
    } else if (kind == "modular-k2") {
        sys = modular_k2(k, n);
    } else {
        throw std::invalid_argument("construct: unknown kind \"" + kind + "\"");
    }
    write_output(out, emit_family_json(sys, 2));
    std::cerr << "construct " << kind << ": k=" << sys.k << " m=" << sys.m << " n=" << sys.n
              << "\n";
    return 0;
}

int cmd_verify(const std::string& in, int t_override, int jobs, bool guard_override) {
    FamilyFile file = parse_family_json(read_input(in));
    int t = t_override > 0 ? t_override : file.t;
    VerifyOptions opts;
    opts.guard_override = guard_override;
    opts.jobs = jobs;
    TupleVerdict v = is_bollobas_tuple(file.sys, t, opts);
    if (!v.valid()) {
        const TupleViolation& viol = *v.violation;
        std::cout << "verify: INVALID "
                  << (viol.kind == ViolationKind::forbidden_nonempty ? "forbidden-nonempty"
                                                                     : "missing-nonempty")
                  << " at tuple " << tuple_str(viol.indices) << " (k=" << file.sys.k << ", t=" << t
                  << ", m=" << file.sys.m << ", n=" << file.sys.n << ")\n";
        return 1;
    }
    std::cout << "verify: valid (k=" << file.sys.k << ", t=" << t << ", m=" << file.sys.m
              << ", n=" << file.sys.n << ")\n";
    Rational sum = bollobas_sum_unchecked(file.sys, t, Surjection::canonical(file.sys.k, t));
    std::cout << "sum (canonical phi): " << sum.to_string() << "\n";
    if (!sum.leq_one()) {
        std::cout << "sum: EXCEEDS 1 — this contradicts the inequality; please report\n";
        return 1;
    }
    return 0;
}

int cmd_sum(const std::string& in, int t_override, const std::string& phi_spec, bool profile) {
    FamilyFile file = parse_family_json(read_input(in));
    int t = t_override > 0 ? t_override : file.t;
    Surjection phi = parse_phi(phi_spec, file.sys.k, t);
    Rational sum = bollobas_sum(file.sys, t, phi);  // validates the system
    if (profile) {
        // derived-set size profiles, one line per sigma
        for_each_index_sequence(file.sys.m, t - 1, [&](const IndexSequence& sigma) {
            auto blocks = derived_sets(file.sys, t, phi, sigma);
            std::cout << "sigma=" << tuple_str(sigma.entries) << " sizes=[";
            for (size_t j = 0; j < blocks.size(); ++j)
                std::cout << (j ? "," : "") << blocks[j].count();
            std::cout << "]\n";
        });
    }
    std::cout << sum.to_string() << "\n";
    return sum.leq_one() ? 0 : 1;
}

int cmd_cover_verify(const std::string& in, bool guard_override) {
    PartiteCover cover = parse_cover_json(read_input(in));
    VerifyOptions opts;
    opts.guard_override = guard_override;
    CoverVerdict v = verify_cover(cover, opts);
    if (!v.valid()) {
        const CoverViolation& viol = *v.violation;
        if (viol.kind == CoverViolationKind::bad_block)
            std::cout << "cover verify: INVALID bad-block " << viol.block << " contains edge "
                      << tuple_str(viol.edge) << " outside H\n";
        else
            std::cout << "cover verify: INVALID uncovered edge " << tuple_str(viol.edge) << "\n";
        return 1;
    }
    std::cout << "cover verify: valid (k=" << cover.k << ", t=" << cover.t << ", n=" << cover.n
              << ", blocks=" << cover.blocks.size() << ")\n";
    return 0;
}

int cmd_cover_random(int k, int t, int n, uint64_t seed, int max_attempts,
                     const std::string& out) {
    RandomCoverResult r = random_cover(k, t, n, seed, max_attempts);
    if (r.below_analytic_threshold)
        std::cerr << "note: n < k*S(k,t); the analytic bound may not apply at this size\n";
    if (!r.success()) {
        std::cout << "cover random: FAILED after " << r.attempts << " attempts; last draw left "
                  << r.last_uncovered << " edges uncovered\n";
        return 1;
    }
    std::cerr << "cover random: success on attempt " << r.attempts << " with "
              << r.cover->blocks.size() << " blocks (N=" << r.copies_per_subset << ", requested "
              << r.blocks_requested << ")\n";
    write_output(out, emit_cover_json(*r.cover));
    return 0;
}

int cmd_cover_exact(int k, int t, int n, bool guard_override, const std::string& out) {
    BetaOptions opts;
    opts.guard_override = guard_override;
    MinCoverResult mc = exact_min_cover(k, t, n, opts);
    std::cout << "cover exact: f_{" << k << "," << t << "}(" << n << ") = " << mc.m << "\n";
    if (out != "") write_output(out, emit_cover_json(mc.certificate));
    return 0;
}

int cmd_cover_from_tuple(const std::string& in, int t_override, const std::string& out) {
    FamilyFile file = parse_family_json(read_input(in));
    int t = t_override > 0 ? t_override : file.t;
    PartiteCover cover = tuple_to_cover(file.sys, t);
    std::cerr << "cover from-tuple: " << cover.blocks.size() << " blocks covering H_{" << cover.k
              << "," << cover.t << "}(" << cover.n << ")\n";
    write_output(out, emit_cover_json(cover));
    return 0;
}

int cmd_cover_to_tuple(const std::string& in, const std::string& out) {
    PartiteCover cover = parse_cover_json(read_input(in));
    FamilySystem sys = cover_to_tuple(cover);
    std::cerr << "cover to-tuple: system with k=" << sys.k << ", m=" << sys.m << ", n=" << sys.n
              << "\n";
    write_output(out, emit_family_json(sys, cover.t));
    return 0;
}

int cmd_partitions(int k, int t, int s) {
    std::cout << "s,stirling,min_f,argmin\n";
    int lo = (s > 0) ? s : t;
    int hi = (s > 0) ? s : k;
    for (int cur = lo; cur <= hi; ++cur) {
        uint64_t best = ~uint64_t{0};
        const SetPartition* argmin = nullptr;
        std::vector<SetPartition> all = enumerate_partitions(k, cur);
        for (const SetPartition& pi : all) {
            uint64_t v = f_pi(pi, t);
            if (v < best) {
                best = v;
                argmin = &pi;
            }
        }
        std::cout << cur << "," << stirling2(k, cur) << "," << best << ",\""
                  << (argmin ? argmin->to_string() : "") << "\"\n";
    }
    return 0;
}

int cmd_chains_verify(const std::string& in, bool guard_override) {
    FamilyFile file = parse_family_json(read_input(in));
    if (file.t != file.sys.k)
        std::cerr << "note: chain analysis treats the system as a (k,k)-tuple\n";
    ChainContext ctx = make_chain_context(file.sys, true, guard_override);
    DisjointnessReport rep = verify_disjointness(ctx, guard_override);
    bool counts_ok = true;
    for (const SigmaSummary& s : rep.per_sigma) {
        std::cout << "sigma=" << tuple_str(s.sigma.entries) << " sizes=[";
        for (size_t i = 0; i < s.block_sizes.size(); ++i)
            std::cout << (i ? "," : "") << s.block_sizes[i];
        std::cout << "] formula=" << s.formula.to_string()
                  << " enumerated=" << s.enumerated.to_string()
                  << (s.has_empty_block ? " [empty derived block]" : "") << "\n";
        counts_ok = counts_ok && s.formula == s.enumerated;
    }
    Rational sum = bollobas_sum_unchecked(ctx.sys, ctx.sys.k, Surjection::identity(ctx.sys.k));
    Rational scaled = sum * factorial(static_cast<unsigned>(ctx.n));
    bool total_ok = scaled == Rational(rep.total_enumerated, BigUint(1));
    std::cout << "total chain permutations: " << rep.total_enumerated.to_string() << " of "
              << factorial(static_cast<unsigned>(ctx.n)).to_string() << " (n! * sum = "
              << scaled.to_string() << ")\n";
    if (!rep.disjoint()) {
        std::cout << "chains: COLLISION between sigma=" << tuple_str(rep.collision->sigma1.entries)
                  << " and sigma=" << tuple_str(rep.collision->sigma2.entries) << "\n";
        return 1;
    }
    std::cout << "chains: disjoint" << (counts_ok ? ", counts match" : ", COUNT MISMATCH")
              << (total_ok ? ", total matches n! * sum" : ", TOTAL MISMATCH") << "\n";
    return (counts_ok && total_ok) ? 0 : 1;
}

int cmd_bounds(int k, int t, long long n, bool csv) {
    std::vector<NamedBound> rows;
    BoundReport beta = beta_bounds(k, t, n);
    BoundReport cover = f_bounds(k, t, n);
    rows.insert(rows.end(), beta.bounds.begin(), beta.bounds.end());
    rows.insert(rows.end(), cover.bounds.begin(), cover.bounds.end());
    if (t == 2 && k >= 3 && n >= 2) {
        CliqueCoverFormulas cc = clique_cover_formulas(n, k);
        rows.push_back({"clique_cover_orlin", BoundDirection::lower, static_cast<double>(cc.orlin),
                        "", std::to_string(cc.orlin)});
        if (cc.has_hypergraph_lb)
            rows.push_back(
                {"clique_cover_hypergraph_lb", BoundDirection::lower, cc.hypergraph_lb, "large n", ""});
    }
    if (csv) {
        std::cout << "bound,direction,value,validity\n";
        for (const NamedBound& b : rows)
            std::cout << b.name << "," << (b.direction == BoundDirection::lower ? "lower" : "upper")
                      << "," << b.value << "," << b.validity << "\n";
    } else {
        std::cout << "bounds for k=" << k << ", t=" << t << ", n=" << n << "\n";
        for (const NamedBound& b : rows) {
            std::cout << "  " << b.name << " ("
                      << (b.direction == BoundDirection::lower ? "lower" : "upper") << "): " << b.value;
            if (!b.exact.empty()) std::cout << " = " << b.exact;
            if (!b.validity.empty()) std::cout << "  [" << b.validity << "]";
            std::cout << "\n";
        }
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact verification and search for Bollobas set-pair systems, "
                 "k-partite hypergraph covers, and the associated bounds"};
    app.require_subcommand(1);

    // construct
    std::string kind, out = "-", in = "-";
    int a = 1, b = 1, k = 3, n = 12, t_override = 0, jobs = 1, s_filter = 0;
    bool guard_override = false;
    auto* construct = app.add_subcommand("construct", "emit a named construction as JSON");
    construct->add_option("--kind", kind, "classical-pairs | sharpness-k2 | modular-k2")->required();
    construct->add_option("--a", a, "side size a (classical-pairs)");
    construct->add_option("--b", b, "side size b (classical-pairs)");
    construct->add_option("--k", k, "number of families");
    construct->add_option("--n", n, "ground parameter");
    construct->add_option("-o,--output", out, "output path (- = stdout)");

    auto* verify = app.add_subcommand("verify", "check the (k,t) intersection condition");
    verify->add_option("-i,--input", in, "family JSON (- = stdin)");
    verify->add_option("--t", t_override, "override the t stored in the file");
    verify->add_option("--jobs", jobs, "worker threads for the scan");
    verify->add_flag("--guard-override", guard_override, "ignore enumeration size guards");

    std::string phi_spec;
    auto* sum = app.add_subcommand("sum", "exact inequality sum for a validated system");
    sum->add_option("-i,--input", in, "family JSON (- = stdin)");
    sum->add_option("--t", t_override, "override the t stored in the file");
    sum->add_option("--phi", phi_spec, "surjection image, comma-separated 0-based (default canonical)");
    bool profile = false;
    sum->add_flag("--profile", profile, "also print the derived-set size profile per sigma");

    auto* cover = app.add_subcommand("cover", "covering-side operations");
    cover->require_subcommand(1);
    uint64_t seed = 1;
    int max_attempts = 1000;
    auto* cv = cover->add_subcommand("verify", "verify a claimed cover of H_{k,t}(n)");
    cv->add_option("-i,--input", in, "cover JSON (- = stdin)");
    cv->add_flag("--guard-override", guard_override, "ignore enumeration size guards");
    auto* cr = cover->add_subcommand("random", "randomized covering construction");
    cr->add_option("--k", k)->required();
    cr->add_option("--t", t_override)->required();
    cr->add_option("--n", n)->required();
    cr->add_option("--seed", seed, "master RNG seed");
    cr->add_option("--max-attempts", max_attempts, "retry cap");
    cr->add_option("-o,--output", out, "output path (- = stdout)");
    auto* ce = cover->add_subcommand("exact", "exact minimum cover by backtracking");
    ce->add_option("--k", k)->required();
    ce->add_option("--t", t_override)->required();
    ce->add_option("--n", n)->required();
    ce->add_flag("--guard-override", guard_override, "lift the search guards");
    ce->add_option("-o,--output", out, "certificate path (omit to skip)");
    auto* cf = cover->add_subcommand("from-tuple", "convert a tuple system to a cover");
    cf->add_option("-i,--input", in, "family JSON (- = stdin)");
    cf->add_option("--t", t_override, "override the t stored in the file");
    cf->add_option("-o,--output", out, "output path (- = stdout)");
    auto* ct = cover->add_subcommand("to-tuple", "convert a cover to a tuple system");
    ct->add_option("-i,--input", in, "cover JSON (- = stdin)");
    ct->add_option("-o,--output", out, "output path (- = stdout)");

    auto* parts = app.add_subcommand("partitions", "CSV of partition-count and min-f statistics");
    parts->add_option("--k", k)->required();
    parts->add_option("--t", t_override)->required();
    parts->add_option("--s", s_filter, "restrict to partitions with s parts");

    auto* chains = app.add_subcommand("chains", "chain-family analysis of a (k,k)-tuple");
    chains->require_subcommand(1);
    auto* chv = chains->add_subcommand("verify", "disjointness and per-sigma counts");
    chv->add_option("-i,--input", in, "family JSON (- = stdin)");
    chv->add_flag("--guard-override", guard_override, "lift the n! guard");

    long long bounds_n = 0;
    bool csv = false;
    auto* bounds = app.add_subcommand("bounds", "closed-form bound table");
    bounds->add_option("--k", k)->required();
    bounds->add_option("--t", t_override)->required();
    bounds->add_option("--n", bounds_n)->required();
    bounds->add_flag("--csv", csv, "emit CSV");

    auto* selftest = app.add_subcommand("selftest", "run the full acceptance battery");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    auto started = std::chrono::steady_clock::now();
    auto elapsed = [&] {
        return std::chrono::duration<double>(std::chrono::steady_clock::now() - started).count();
    };
    auto finish = [&](int code) {
        std::cerr << app.get_subcommands().front()->get_name() << ": exit " << code << " ["
                  << elapsed() << " s]\n";
        return code;
    };

    try {
        if (construct->parsed()) {
            if (kind == "classical-pairs") return finish(cmd_construct(kind, a, b, 0, 0, out));
            return finish(cmd_construct(kind, 0, 0, k, n, out));
        }
        if (verify->parsed()) return finish(cmd_verify(in, t_override, jobs, guard_override));
        if (sum->parsed()) return finish(cmd_sum(in, t_override, phi_spec, profile));
        if (cover->parsed()) {
            if (cv->parsed()) return finish(cmd_cover_verify(in, guard_override));
            if (cr->parsed())
                return finish(cmd_cover_random(k, t_override, n, seed, max_attempts, out));
            if (ce->parsed())
                return finish(cmd_cover_exact(k, t_override, n, guard_override,
                                              out == "-" ? std::string() : out));
            if (cf->parsed()) return finish(cmd_cover_from_tuple(in, t_override, out));
            if (ct->parsed()) return finish(cmd_cover_to_tuple(in, out));
        }
        if (parts->parsed()) return finish(cmd_partitions(k, t_override, s_filter));
        if (chains->parsed() && chv->parsed()) return finish(cmd_chains_verify(in, guard_override));
        if (bounds->parsed()) return finish(cmd_bounds(k, t_override, bounds_n, csv));
        if (selftest->parsed())
            return finish(bollobas::acceptance::run_all(std::cout) ? 0 : 1);
    } catch (const GuardError& e) {
        std::cerr << "guard: " << e.what() << "\n";
        return finish(2);
    } catch (const ParseError& e) {
        std::cerr << "input: " << e.what() << "\n";
        return finish(2);
    } catch (const std::invalid_argument& e) {
        std::cerr << "parameters: " << e.what() << "\n";
        return finish(2);
    } catch (const std::domain_error& e) {
        std::cerr << "parameters: " << e.what() << "\n";
        return finish(2);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return finish(2);
    }
    return finish(2);
}
