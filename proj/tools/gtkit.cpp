#include <cstdint>
#include <iostream>
#include <string>
#include <utility>
#include <vector>

#include <CLI11.hpp>

#include "gtkit/json_io.hpp"
#include "gtkit/parallel.hpp"
#include "gtkit/variety_lab.hpp"

using namespace gtkit;

namespace {

struct CommonOpts {
    std::string field = "q";
    std::uint32_t prime = kDefaultPrime;
    std::string order;
    std::uint64_t budget_pairs = 0;
    double budget_seconds = 0.0;
    std::string out;
};

// The --field default is q everywhere except `verify --claim gl4`, which runs
// modularly unless the caller overrides it; run_verify applies that switch.
CLI::Option* add_common(CLI::App* sub, CommonOpts& c, bool with_budget = true) {
    CLI::Option* field = sub->add_option("--field", c.field, "coefficient field")
                             ->check(CLI::IsMember({"q", "fp"}))
                             ->capture_default_str();
    sub->add_option("--prime", c.prime, "modulus for --field fp (an odd prime)")
        ->capture_default_str();
    sub->add_option("--order", c.order, "monomial order")
        ->check(CLI::IsMember({"degrevlex", "lex"}));
    if (with_budget) {
        sub->add_option("--budget-pairs", c.budget_pairs, "S-pair cap per basis run")
            ->check(CLI::PositiveNumber);
        sub->add_option("--budget-seconds", c.budget_seconds, "wall-clock cap per run")
            ->check(CLI::PositiveNumber);
    }
    sub->add_option("--out", c.out, "write the result here instead of stdout");
    return field;
}

Budget make_budget(const CommonOpts& c) {
    Budget b = Budget::defaults();
    if (c.budget_pairs > 0) b.max_pairs = c.budget_pairs;
    if (c.budget_seconds > 0.0) b.max_seconds = c.budget_seconds;
    return b;
}

void emit(const json& j, const std::string& out) {
    if (out.empty()) {
        std::cout << j.dump(2) << "\n";
    } else {
        save_json_file(out, j);
    }
}

template <typename Fn>
int with_field(const CommonOpts& c, Fn&& fn) {
    if (c.field == "fp") {
        PrimeField f(c.prime);
        return fn(f);
    }
    QField f;
    return fn(f);
}

std::vector<Rational> default_beta(int n, int k) {
    if (k < 1 || n < k) throw DomainError("need 1 <= k <= n");
    return std::vector<Rational>(static_cast<std::size_t>(n * k - k * (k - 1) / 2),
                                 Rational(0));
}

std::vector<Rational> load_beta(const std::string& beta_file, int n, int k) {
    if (beta_file.empty()) return default_beta(n, k);
    return beta_from_json(load_json_file(beta_file));
}

// ---- gen ---------------------------------------------------------------------

int run_gen(const CommonOpts& c, const std::string& family, int n, int k,
            const std::string& beta_file) {
    return with_field(c, [&](const auto& field) {
        using F = std::decay_t<decltype(field)>;
        const MonomialOrder ord = system_order(json::object(), c.order);
        GTSystem<F> sys;
        if (family == "gamma") {
            sys = gamma_bar_system(n, field, ord);
        } else if (family == "chi") {
            sys = chi_system(n, field, ord);
        } else if (family == "sigma") {
            sys = sigma_system(n, field, ord);
        } else {
            if (k < 1) throw DomainError("gen --family partial requires --k");
            sys = partial_system(n, k, load_beta(beta_file, n, k), field, false, ord);
        }
        json j = system_to_json(sys.ring, sys.generators);
        j["family"] = family;
        j["n"] = n;
        if (family == "partial") {
            j["k"] = k;
            json jb = json::array();
            for (const auto& b : sys.beta) jb.push_back(rational_to_json(b));
            j["beta"] = std::move(jb);
        }
        emit(j, c.out);
        return 0;
    });
}

// ---- gb / dim / member / quotient ----------------------------------------------

int run_gb(const CommonOpts& c, const std::string& system_file) {
    return with_field(c, [&](const auto& field) {
        using F = std::decay_t<decltype(field)>;
        const json jin = load_json_file(system_file);
        auto sys = system_from_json(jin, field, system_order(jin, c.order));
        Ideal<F> ideal(sys.ring, sys.generators);
        json j = system_to_json(sys.ring, ideal.groebner(make_budget(c)));
        j["reduced_groebner"] = true;
        j["field"] = field.name();
        emit(j, c.out);
        return 0;
    });
}

int run_dim(const CommonOpts& c, const std::string& system_file) {
    return with_field(c, [&](const auto& field) {
        using F = std::decay_t<decltype(field)>;
        const json jin = load_json_file(system_file);
        auto sys = system_from_json(jin, field, system_order(jin, c.order));
        Ideal<F> ideal(sys.ring, sys.generators);
        const auto dim = krull_dimension(ideal, make_budget(c));
        json names = json::array();
        for (int id : dim.witness) names.push_back(sys.ring->name(id));
        emit(json{{"field", field.name()},
                  {"krull_dim", dim.krull_dim},
                  {"witness", std::move(names)}},
             c.out);
        return 0;
    });
}

int run_member(const CommonOpts& c, const std::string& system_file,
               const std::string& poly_text, bool radical) {
    return with_field(c, [&](const auto& field) {
        using F = std::decay_t<decltype(field)>;
        const json jin = load_json_file(system_file);
        auto sys = system_from_json(jin, field, system_order(jin, c.order));
        Ideal<F> ideal(sys.ring, sys.generators);
        const Budget budget = make_budget(c);
        const auto p = parse_polynomial(sys.ring, poly_text);
        json j;
        j["field"] = field.name();
        j["poly"] = poly_text;
        j["mode"] = radical ? "radical" : "ideal";
        if (radical) {
            j["member"] = radical_membership(p, ideal, budget);
            j["normal_form"] = nullptr;
        } else {
            const auto nf = ideal.normal_form(p, budget);
            j["member"] = nf.is_zero();
            j["normal_form"] = to_string(nf);
        }
        emit(j, c.out);
        return 0;
    });
}

int run_quotient(const CommonOpts& c, const std::string& system_file,
                 const std::string& poly_text) {
    return with_field(c, [&](const auto& field) {
        using F = std::decay_t<decltype(field)>;
        const json jin = load_json_file(system_file);
        auto sys = system_from_json(jin, field, system_order(jin, c.order));
        Ideal<F> ideal(sys.ring, sys.generators);
        const auto p = parse_polynomial(sys.ring, poly_text);
        auto quo = quotient(ideal, p, make_budget(c));
        json j = system_to_json(sys.ring, quo.generators());
        j["field"] = field.name();
        j["quotient_divisor"] = poly_text;
        emit(j, c.out);
        return 0;
    });
}

// ---- regseq / equidim / koszul --------------------------------------------------

int run_regseq(const CommonOpts& c, const std::string& system_file,
               int permutations, std::uint64_t seed) {
    return with_field(c, [&](const auto& field) {
        const json jin = load_json_file(system_file);
        auto sys = system_from_json(jin, field, system_order(jin, c.order));
        const Budget budget = make_budget(c);
        const auto cert = is_regular_sequence(sys.ring, sys.generators, budget);
        json j = to_json(cert);
        j["field"] = field.name();
        if (permutations > 0) {
            const auto inv = check_permutation_invariance(sys.ring, sys.generators,
                                                          permutations, seed, budget);
            j["permutation_invariance"] = {{"exhaustive", inv.exhaustive},
                                           {"orderings_checked", inv.orderings_checked},
                                           {"regular_count", inv.regular_count},
                                           {"all_regular", inv.all_regular},
                                           {"failures", inv.failures}};
        }
        emit(j, c.out);
        return cert.verdict == RegularityVerdict::Budget ? 2 : 0;
    });
}

int run_equidim(const CommonOpts& c, const std::string& system_file) {
    return with_field(c, [&](const auto& field) {
        const json jin = load_json_file(system_file);
        auto sys = system_from_json(jin, field, system_order(jin, c.order));
        const auto cert = equidimensional_by_ci(sys.ring, sys.generators, make_budget(c));
        json j = to_json(cert);
        j["field"] = field.name();
        emit(j, c.out);
        return cert.regularity.verdict == RegularityVerdict::Budget ? 2 : 0;
    });
}

int run_koszul(const CommonOpts& c, const std::string& system_file, int max_degree,
               int piece) {
    return with_field(c, [&](const auto& field) {
        using F = std::decay_t<decltype(field)>;
        const json jin = load_json_file(system_file);
        auto sys = system_from_json(jin, field, system_order(jin, c.order));
        const Budget budget = make_budget(c);
        if (piece == 0) {
            const auto rep = ci_oracle(sys.ring, sys.generators, max_degree, budget);
            emit(json{{"field", field.name()},
                      {"max_degree", rep.max_degree},
                      {"homology_found", rep.homology_found},
                      {"at_p", rep.at_p},
                      {"at_d", rep.at_d},
                      {"note", CIOracleReport::kScopeNote}},
                 c.out);
            return 0;
        }
        KoszulComplex<F> complex(sys.ring, sys.generators);
        json reports = json::array();
        for (int d = 0; d <= max_degree; ++d) {
            const auto r = complex.graded_piece(piece, d, budget);
            reports.push_back({{"p", r.p},
                               {"d", r.d},
                               {"dim_piece", r.dim_piece},
                               {"rank_d_p", r.rank_d_p},
                               {"rank_d_p1", r.rank_d_p1},
                               {"homology_dim", r.homology_dim}});
        }
        emit(json{{"field", field.name()}, {"piece", piece}, {"reports", std::move(reports)}},
             c.out);
        return 0;
    });
}

// ---- phi / fiber-probe -----------------------------------------------------------

int run_phi(const std::string& matrix_file, int k, const std::string& out) {
    const auto m = matrix_from_json(load_json_file(matrix_file));
    if (k == 0) k = m.n;
    const auto sig = phi_k(m, k);
    json levels = json::array();
    bool all_zero = true;
    for (std::size_t i = 0; i < sig.chi.size(); ++i) {
        json coeffs = json::array();
        for (const auto& x : sig.chi[i]) {
            if (!x.is_zero()) all_zero = false;
            coeffs.push_back(rational_to_json(x));
        }
        levels.push_back({{"level", sig.n - sig.k + 1 + static_cast<int>(i)},
                          {"coefficients", std::move(coeffs)}});
    }
    json j = {{"n", sig.n}, {"k", sig.k}, {"levels", std::move(levels)}, {"all_zero", all_zero}};
    if (sig.k == m.n) j["strongly_nilpotent"] = strongly_nilpotent(m);
    emit(j, out);
    return 0;
}

int run_fiber_probe(int n, int k, int trials, std::uint64_t seed, const std::string& out) {
    const auto rep = jacobian_rank_probe(n, k, trials, seed);
    json j = to_json(rep);
    json ranks = json::array();
    for (const auto& s : rep.samples) ranks.push_back(s.rank);
    j["ranks"] = std::move(ranks);
    emit(j, out);
    return 0;
}

// ---- verify -----------------------------------------------------------------------

int verdict_rank(Verdict v) {
    switch (v) {
        case Verdict::VerifiedExact: return 0;
        case Verdict::VerifiedModular: return 1;
        case Verdict::InconclusiveBudget: return 2;
        case Verdict::Failed: return 3;
    }
    return 3;
}

int emit_report(const VerificationReport& rep, const std::string& out) {
    json j = report_skeleton(rep.claim, rep.config);
    j["verdict"] = to_string(rep.verdict);
    j["artifacts"] = rep.artifacts;
    if (!rep.failure.is_null()) j["failure"] = rep.failure;
    j["timing"] = {{"wall_seconds", rep.wall_seconds}};
    const auto errors = validate_report(j);
    if (!errors.empty()) throw Error("internal: malformed report: " + errors.front());
    emit(j, out);
    switch (rep.verdict) {
        case Verdict::VerifiedExact:
        case Verdict::VerifiedModular: return 0;
        case Verdict::InconclusiveBudget: return 2;
        case Verdict::Failed: return 1;
    }
    return 1;
}

// All four levels plus the level-free identity layer, worst verdict wins.
int run_zelobenko_suite(const CommonOpts& c, int jobs) {
    const Budget budget = make_budget(c);
    Stopwatch sw;
    QField q;
    PrimeField fp(c.prime);
    std::vector<VerificationReport> parts(5);
    run_parallel(parts.size(), jobs, [&](std::size_t i) {
        if (i < 3) {
            parts[i] = verify_zelobenko(static_cast<int>(i) + 1, q, budget);
        } else if (i == 3) {
            parts[i] = verify_zelobenko(4, fp, budget);
        } else {
            parts[i] = verify_newton_identities(5, budget);
        }
    });

    VerificationReport suite;
    suite.claim = "zelobenko";
    suite.config = {{"mode", "suite"},
                    {"exact_levels", "1..3"},
                    {"modular_level", 4},
                    {"modular_field", fp.name()},
                    {"newton_max_level", 5},
                    {"budget", budget_to_json(budget)}};
    Verdict worst = Verdict::VerifiedExact;
    json jlevels = json::array();
    for (int i = 0; i < 4; ++i) {
        const auto& p = parts[static_cast<std::size_t>(i)];
        jlevels.push_back({{"level", i + 1},
                           {"field", i == 3 ? fp.name() : q.name()},
                           {"verdict", to_string(p.verdict)},
                           {"artifacts", p.artifacts}});
    }
    suite.artifacts["levels"] = std::move(jlevels);
    suite.artifacts["newton"] = {{"verdict", to_string(parts[4].verdict)},
                                 {"artifacts", parts[4].artifacts}};
    for (std::size_t i = 0; i < parts.size(); ++i) {
        if (verdict_rank(parts[i].verdict) > verdict_rank(worst)) worst = parts[i].verdict;
        if (parts[i].verdict == Verdict::Failed && suite.failure.is_null()) {
            suite.failure = parts[i].failure;
            suite.failure["suite_part"] =
                i < 4 ? json(static_cast<int>(i) + 1) : json("newton");
        }
    }
    suite.verdict = worst;
    suite.wall_seconds = sw.seconds();
    return emit_report(suite, c.out);
}

int run_verify(CommonOpts c, bool field_given, const std::string& claim, int n, int k,
               const std::string& beta_file, bool long_run, int trials,
               std::uint64_t seed, int jobs) {
    if (!field_given) c.field = claim == "gl4" ? "fp" : "q";
    if (claim == "zelobenko" && n == 0) return run_zelobenko_suite(c, jobs);
    const Budget budget = make_budget(c);
    return with_field(c, [&](const auto& field) {
        VerificationReport rep;
        if (claim == "ovsienko") {
            if (n == 0) throw DomainError("verify --claim ovsienko requires --n");
            rep = verify_ovsienko(n, field, budget, long_run);
        } else if (claim == "weak") {
            if (n == 0) throw DomainError("verify --claim weak requires --n");
            rep = verify_weak(n, field, budget);
        } else if (claim == "components") {
            if (n == 0) throw DomainError("verify --claim components requires --n");
            rep = enumerate_regular_components(n, field, budget);
        } else if (claim == "zelobenko") {
            rep = verify_zelobenko(n, field, budget);
        } else if (claim == "partial") {
            if (n == 0 || k == 0)
                throw DomainError("verify --claim partial requires --n and --k");
            rep = verify_partial(n, k, load_beta(beta_file, n, k), field, trials, seed,
                                 budget);
        } else {
            rep = verify_gl4_decomposition(field, budget, long_run);
        }
        return emit_report(rep, c.out);
    });
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{std::string(kToolName) +
                 " computes with Gelfand-Tsetlin polynomial systems: generation, "
                 "Groebner bases, dimension, regular sequences, Koszul homology, "
                 "moment-map fibers, and scripted verification claims."};
    app.set_version_flag("--version", std::string(kToolVersion));
    app.require_subcommand(1);
    app.footer(
        "Field policy: every subcommand defaults to exact rational arithmetic; the\n"
        "single exception is `verify --claim gl4`, which defaults to --field fp\n"
        "--prime 32003 and stays exact only under an explicit --field q.\n"
        "Budgets: GTKIT_BUDGET_SECONDS overrides the default wall-clock cap;\n"
        "explicit --budget-seconds wins over the environment.\n"
        "Exit codes: 0 success/verified, 1 failed with counterexample,\n"
        "2 budget exhausted or inconclusive, 3 usage or input error.");

    CommonOpts gen_c, gb_c, dim_c, member_c, quotient_c, regseq_c, equidim_c, koszul_c,
        verify_c;
    std::string gen_family;
    int gen_n = 0, gen_k = 0;
    std::string gen_beta;
    auto* gen = app.add_subcommand("gen", "emit a generator system as JSON");
    gen->add_option("--family", gen_family, "system family")
        ->required()
        ->check(CLI::IsMember({"gamma", "sigma", "chi", "partial"}));
    gen->add_option("--n", gen_n, "matrix size")->required();
    gen->add_option("--k", gen_k, "levels kept (partial family)");
    gen->add_option("--beta", gen_beta,
                    "JSON array of target values for the partial family; "
                    "defaults to all zeros");
    add_common(gen, gen_c, false);

    std::string gb_file;
    auto* gb = app.add_subcommand("gb", "reduced Groebner basis of a system file");
    gb->add_option("--system", gb_file, "system JSON file")->required();
    add_common(gb, gb_c);

    std::string dim_file;
    auto* dim = app.add_subcommand("dim", "Krull dimension of a system file");
    dim->add_option("--system", dim_file, "system JSON file")->required();
    add_common(dim, dim_c);

    std::string member_file, member_poly;
    bool member_radical = false;
    auto* member = app.add_subcommand("member", "ideal or radical membership of a polynomial");
    member->add_option("--system", member_file, "system JSON file")->required();
    member->add_option("--poly", member_poly, "polynomial text")->required();
    member->add_flag("--radical", member_radical, "test the radical instead of the ideal");
    add_common(member, member_c);

    std::string quotient_file, quotient_poly;
    auto* quot = app.add_subcommand("quotient", "ideal quotient (I : f) as a system file");
    quot->add_option("--system", quotient_file, "system JSON file")->required();
    quot->add_option("--poly", quotient_poly, "divisor polynomial text")->required();
    add_common(quot, quotient_c);

    std::string regseq_file;
    int regseq_perms = 0;
    std::uint64_t regseq_seed = 1;
    auto* regseq = app.add_subcommand("regseq", "regular-sequence certificate for a system");
    regseq->add_option("--system", regseq_file, "system JSON file")->required();
    regseq->add_option("--permutations", regseq_perms,
                       "also check this many generator orderings");
    regseq->add_option("--seed", regseq_seed, "ordering sample seed")->capture_default_str();
    add_common(regseq, regseq_c);

    std::string equidim_file;
    auto* equidim = app.add_subcommand(
        "equidim", "equidimensionality certificate via complete intersection");
    equidim->add_option("--system", equidim_file, "system JSON file")->required();
    add_common(equidim, equidim_c);

    std::string koszul_file;
    int koszul_maxdeg = 0, koszul_piece = 0;
    auto* koszul = app.add_subcommand("koszul", "degreewise Koszul homology screen");
    koszul->add_option("--system", koszul_file, "system JSON file")->required();
    koszul->add_option("--max-degree", koszul_maxdeg, "internal degree bound")->required();
    koszul->add_option("--piece", koszul_piece,
                       "report one homological degree across all internal degrees");
    add_common(koszul, koszul_c);

    std::string phi_matrix, phi_out;
    int phi_k_opt = 0;
    auto* phi = app.add_subcommand(
        "phi", "characteristic coefficients of the leading principal submatrices");
    phi->add_option("--matrix", phi_matrix, "JSON matrix file (integers or \"p/q\")")
        ->required();
    phi->add_option("--k", phi_k_opt, "levels kept, counted from the bottom; default all");
    phi->add_option("--out", phi_out, "write the result here instead of stdout");

    int fp_n = 0, fp_k = 0, fp_trials = 20;
    std::uint64_t fp_seed = 1;
    std::string fp_out;
    auto* fiber = app.add_subcommand("fiber-probe",
                                     "Jacobian rank statistics at random rational points");
    fiber->add_option("--n", fp_n, "matrix size")->required();
    fiber->add_option("--k", fp_k, "levels kept")->required();
    fiber->add_option("--trials", fp_trials, "sample count")->capture_default_str();
    fiber->add_option("--seed", fp_seed, "sample seed")->capture_default_str();
    fiber->add_option("--out", fp_out, "write the result here instead of stdout");

    std::string verify_claim, verify_beta;
    int verify_n = 0, verify_k = 0, verify_trials = 20;
    std::uint64_t verify_seed = 1;
    bool verify_long = false;
    int verify_jobs = default_worker_count();
    auto* verify = app.add_subcommand("verify", "run a named verification claim");
    verify->add_option("--claim", verify_claim, "claim name")
        ->required()
        ->check(CLI::IsMember(
            {"ovsienko", "weak", "components", "zelobenko", "partial", "gl4"}));
    verify->add_option("--n", verify_n, "matrix size or level");
    verify->add_option("--k", verify_k, "levels kept (partial claim)");
    verify->add_option("--beta", verify_beta,
                       "JSON array of target values for the partial claim; "
                       "defaults to all zeros");
    verify->add_flag("--long", verify_long, "run the expensive full profile");
    verify->add_option("--trials", verify_trials, "Jacobian probe samples (partial claim)")
        ->capture_default_str();
    verify->add_option("--seed", verify_seed, "probe seed")->capture_default_str();
    verify->add_option("--jobs", verify_jobs, "worker pool size")->capture_default_str();
    CLI::Option* verify_field = add_common(verify, verify_c);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 3;
    }

    try {
        if (gen->parsed()) return run_gen(gen_c, gen_family, gen_n, gen_k, gen_beta);
        if (gb->parsed()) return run_gb(gb_c, gb_file);
        if (dim->parsed()) return run_dim(dim_c, dim_file);
        if (member->parsed())
            return run_member(member_c, member_file, member_poly, member_radical);
        if (quot->parsed()) return run_quotient(quotient_c, quotient_file, quotient_poly);
        if (regseq->parsed())
            return run_regseq(regseq_c, regseq_file, regseq_perms, regseq_seed);
        if (equidim->parsed()) return run_equidim(equidim_c, equidim_file);
        if (koszul->parsed())
            return run_koszul(koszul_c, koszul_file, koszul_maxdeg, koszul_piece);
        if (phi->parsed()) return run_phi(phi_matrix, phi_k_opt, phi_out);
        if (fiber->parsed()) return run_fiber_probe(fp_n, fp_k, fp_trials, fp_seed, fp_out);
        if (verify->parsed())
            return run_verify(verify_c, verify_field->count() > 0, verify_claim, verify_n,
                              verify_k, verify_beta, verify_long, verify_trials,
                              verify_seed, verify_jobs);
        return 3;
    } catch (const BudgetExceeded& e) {
        std::cerr << "budget exhausted: " << e.what() << "\n";
        return 2;
    } catch (const DomainError& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return 3;
    } catch (const ParseError& e) {
        std::cerr << "input error: " << e.what() << "\n";
        return 3;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}
