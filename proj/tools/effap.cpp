#include <CLI11.hpp>

#include <chrono>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <random>

#include "effap/json_io.hpp"

using namespace effap;

namespace {

struct Cli {
    RunConfig cfg;
    std::string output = "json";
    std::chrono::steady_clock::time_point started = std::chrono::steady_clock::now();

    void emit(const std::string& command, const Json& inputs, const Json& results,
              const Json& ledger = Json(nullptr)) const {
        Json rep{{"command", command}, {"inputs", inputs}, {"results", results}};
        if (!ledger.is_null()) rep["ledger"] = ledger;
        double ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - started).count();
        if (output == "text") {
            std::cout << rep.dump(2) << "\n";
            std::cout << "timing_ms: " << ms << "\n";
        } else {
            // timing goes to stderr so the JSON report stays byte-stable
            std::cout << rep.dump(2) << std::endl;
        }
        std::cerr << "[effap] " << command << " took " << ms << " ms\n";
    }
};

ApproxTarget target_from(const std::string& minpoly, const std::string& near, unsigned bits,
                         const RunConfig& cfg) {
    IntPoly f = IntPoly::parse(minpoly);
    return make_target_real_near(f, parse_rat(near), bits, cfg);
}

FamilySpec family_from_file(const std::string& path, const RunConfig& cfg) {
    std::ifstream in(path);
    if (!in) throw ParameterViolation("cannot open family file: " + path);
    Json j = Json::parse(in);
    return family_from_json(j, cfg);
}

int run_suite(Cli& cli, int pairs, std::uint64_t seed) {
    Json ledger = Json::array();
    bool all = true;
    std::mt19937_64 rng(seed);

    {  // product-size inequality on random pairs
        std::uniform_int_distribution<int> dd(0, 20);
        std::uniform_int_distribution<long> cc(-100, 100);
        bool ok = true;
        for (int i = 0; i < pairs * 50; ++i) {
            std::vector<BigInt> u(static_cast<size_t>(dd(rng)) + 1), v(static_cast<size_t>(dd(rng)) + 1);
            for (auto& x : u) x = cc(rng);
            for (auto& x : v) x = cc(rng);
            IntPoly a(std::move(u)), b(std::move(v));
            if (a.is_zero() || b.is_zero()) continue;
            ok = ok && check_gelfond(a, b).holds;
        }
        ledger.push_back(Json{{"name", "product_size_inequality"}, {"pass", ok}});
        all = all && ok;
    }
    {  // binomial bound, exhaustive N <= 64
        bool ok = true;
        for (unsigned N = 1; N <= 64; ++N) ok = ok && check_binom_bound(N, cli.cfg);
        ledger.push_back(Json{{"name", "binomial_bound_N_le_64"}, {"pass", ok}});
        all = all && ok;
    }
    {  // height axioms
        auto rep = check_height_axioms(pairs, seed, cli.cfg);
        ledger.push_back(Json{{"name", "height_axioms"},
                              {"pass", rep.all_hold},
                              {"rational", rep.rational_checked},
                              {"sums", rep.sum_checked},
                              {"moduli", rep.modulus_checked}});
        all = all && rep.all_hold;
    }
    {  // Wronskian vs exact rank on triples
        std::uniform_int_distribution<long> cc(-6, 6);
        bool ok = true;
        int done = 0;
        while (done < pairs) {
            std::vector<IntPoly> polys;
            for (int j = 0; j < 3; ++j) {
                std::vector<BigInt> v(static_cast<size_t>(2 + done % 6) + 1);
                for (auto& x : v) x = cc(rng);
                polys.emplace_back(std::move(v));
            }
            bool anyzero = false;
            for (const auto& p : polys) anyzero = anyzero || p.is_zero();
            if (anyzero) continue;
            int maxdeg = std::max({polys[0].degree(), polys[1].degree(), polys[2].degree()});
            IntMat cols(static_cast<size_t>(maxdeg) + 1, IntVec(3, BigInt(0)));
            for (size_t j = 0; j < 3; ++j)
                for (size_t i = 0; i < polys[j].coeffs().size(); ++i) cols[i][j] = polys[j][i];
            bool dependent = !kernel_basis(cols, 3).empty();
            ok = ok && (wronskian(polys).is_zero() == dependent);
            ++done;
        }
        ledger.push_back(Json{{"name", "wronskian_iff_rank"}, {"pass", ok}});
        all = all && ok;
    }
    cli.emit("suite", Json{{"pairs", pairs}, {"seed", seed}}, Json{{"all_pass", all}}, ledger);
    return all ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    Cli cli;
    CLI::App app{"effective irrationality measures and Thue-equation bounds, exact arithmetic throughout"};
    app.require_subcommand(1);
    app.add_option("--output", cli.output, "json|text")->check(CLI::IsMember({"json", "text"}));
    app.add_option("--prec-start", cli.cfg.prec_start, "starting precision in bits");
    app.add_option("--prec-cap", cli.cfg.prec_cap, "precision cap in bits");
    app.add_option("--seed", cli.cfg.seed, "seed for randomized suites");
    app.add_option("--box-cap", cli.cfg.search_box_cap, "search box cap");
    if (const char* cap = std::getenv("EFFAP_PREC_CAP")) cli.cfg.prec_cap = static_cast<unsigned>(std::stoul(cap));

    // measure
    auto* measure = app.add_subcommand("measure", "constants pipeline");
    measure->require_subcommand(1);
    std::string minpoly, near = "0", eps = "sqrt2-1", p0 = "0", q0 = "1", eta = "1/20", family_path,
                variant = "bombieri", kappa_in, log2c_in;
    unsigned e_in = 10, d_in = 23, depth = 15, bits_in = 512;
    bool liouville = false;

    auto* mc = measure->add_subcommand("compute", "kappa and C from an anchor p0/q0");
    mc->add_option("--minpoly", minpoly)->required();
    mc->add_option("--near", near, "rational hint selecting the real root")->required();
    mc->add_option("--e", e_in);
    mc->add_option("--epsilon", eps);
    mc->add_option("--p0", p0)->required();
    mc->add_option("--q0", q0);

    auto* mw = measure->add_subcommand("worksheet", "full constants ledger for a family");
    mw->add_option("--family", family_path)->required();
    mw->add_option("--eta", eta);

    auto* mcor = measure->add_subcommand("corollary", "specialized constants");
    mcor->add_option("--variant", variant)->check(CLI::IsMember({"bombieri", "circular"}));
    mcor->add_option("--d", d_in);
    mcor->add_option("--eta", eta);

    auto* mv = measure->add_subcommand("validate", "convergent validation of a (C, kappa) pair");
    mv->add_option("--minpoly", minpoly)->required();
    mv->add_option("--near", near)->required();
    mv->add_option("--depth", depth);
    mv->add_option("--bits", bits_in);
    mv->add_flag("--liouville", liouville, "use the explicit Liouville pair");
    mv->add_option("--kappa", kappa_in, "rational kappa");
    mv->add_option("--log2C", log2c_in, "rational log2 of C");

    // top-level validate: alias of measure validate
    auto* val = app.add_subcommand("validate", "convergent validation (alias of measure validate)");
    val->add_option("--minpoly", minpoly)->required();
    val->add_option("--near", near)->required();
    val->add_option("--depth", depth);
    val->add_option("--bits", bits_in);
    val->add_flag("--liouville", liouville);
    val->add_option("--kappa", kappa_in);
    val->add_option("--log2C", log2c_in);

    // aux
    auto* aux = app.add_subcommand("aux", "auxiliary polynomial construction");
    unsigned k_in = 2;
    aux->add_option("--minpoly", minpoly)->required();
    aux->add_option("--near", near)->required();
    aux->add_option("--k", k_in);
    aux->add_option("--e", e_in);
    aux->add_option("--epsilon", eps);

    // roots
    auto* roots = app.add_subcommand("roots", "certified root isolation / family portrait");
    unsigned rbits = 96;
    roots->add_option("--minpoly", minpoly);
    roots->add_option("--family", family_path);
    roots->add_option("--bits", rbits);

    // thue
    auto* thue = app.add_subcommand("thue", "Thue equation bounds and searches");
    thue->require_subcommand(1);
    std::string a_str = "-4", m_str = "1", form = "bombieri";
    long box = 100;
    unsigned threads = 4;
    auto* tb = thue->add_subcommand("bound", "solution size bound");
    tb->add_option("--d", d_in)->required();
    tb->add_option("--a", a_str)->required();
    tb->add_option("--m", m_str);
    auto* ts = thue->add_subcommand("search", "exhaustive box search");
    ts->add_option("--d", d_in)->required();
    ts->add_option("--a", a_str)->required();
    ts->add_option("--m", m_str);
    ts->add_option("--box", box);
    ts->add_option("--form", form)->check(CLI::IsMember({"bombieri", "circular"}));
    ts->add_option("--threads", threads);

    // count
    auto* count = app.add_subcommand("count", "solution counting for the circular form");
    count->require_subcommand(1);
    auto* cl = count->add_subcommand("ledger", "certified counting arithmetic");
    cl->add_option("--d", d_in)->required();
    cl->add_option("--a", a_str)->required();
    auto* cs = count->add_subcommand("search", "exhaustive search oracle");
    cs->add_option("--d", d_in)->required();
    cs->add_option("--a", a_str)->required();
    cs->add_option("--box", box);

    // suite
    auto* suite = app.add_subcommand("suite", "seeded randomized property suites");
    int pairs = 50;
    suite->add_option("--pairs", pairs);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& err) {
        int code = app.exit(err);
        return code == 0 ? 0 : 3;
    }

    try {
        if (mc->parsed()) {
            ApproxTarget t = target_from(minpoly, near, 128, cli.cfg);
            auto out = compute_measure(t, e_in, EpsilonSpec::parse(eps), parse_bigint(p0),
                                       parse_bigint(q0), cli.cfg);
            cli.emit("measure compute",
                     Json{{"minpoly", minpoly}, {"near", near}, {"e", e_in}, {"epsilon", eps},
                          {"p0", p0}, {"q0", q0}},
                     measure_outcome_json(out));
            return 0;
        }
        if (mw->parsed()) {
            FamilySpec fam = family_from_file(family_path, cli.cfg);
            Worksheet w = effective_lower_worksheet(fam, parse_rat(eta), cli.cfg);
            Json res = worksheet_json(w);
            cli.emit("measure worksheet", Json{{"family", family_path}, {"eta", eta}}, res,
                     ledger_json(w.ledger));
            return 0;
        }
        if (mcor->parsed()) {
            auto c = corollary_constants(
                variant == "bombieri" ? CorollaryVariant::Bombieri : CorollaryVariant::Circular, d_in,
                parse_rat(eta), cli.cfg);
            cli.emit("measure corollary", Json{{"variant", variant}, {"d", d_in}, {"eta", eta}},
                     corollary_json(c));
            return 0;
        }
        if (mv->parsed() || val->parsed()) {
            ApproxTarget t = target_from(minpoly, near, 128, cli.cfg);
            Interval log2C;
            Interval kap;
            if (liouville || kappa_in.empty()) {
                auto [lc, kd] = liouville_pair(t, bits_in);
                log2C = lc;
                kap = Interval(kd, bits_in);
            } else {
                kap = Interval(parse_rat(kappa_in), bits_in);
                log2C = Interval(log2c_in.empty() ? Rat(0) : parse_rat(log2c_in), bits_in);
            }
            auto v = check_measure_on_convergents(t, log2C, kap, static_cast<int>(depth), bits_in, cli.cfg);
            cli.emit("measure validate",
                     Json{{"minpoly", minpoly}, {"near", near}, {"depth", depth}, {"bits", bits_in},
                          {"kappa", rat_string(kap.lo())}, {"log2C", rat_string(log2C.hi())}},
                     validation_json(v));
            return v.min_slack_ge_1 ? 0 : 1;
        }
        if (aux->parsed()) {
            ApproxTarget t = target_from(minpoly, near, 128, cli.cfg);
            AuxPoly a = construct_aux_poly(t, k_in, e_in, EpsilonSpec::parse(eps), cli.cfg);
            cli.emit("aux",
                     Json{{"minpoly", minpoly}, {"near", near}, {"k", k_in}, {"e", e_in},
                          {"epsilon", eps}},
                     aux_json(a));
            return 0;
        }
        if (roots->parsed()) {
            if (!family_path.empty()) {
                FamilySpec fam = family_from_file(family_path, cli.cfg);
                RootPortrait p = localize_roots(fam, rbits, cli.cfg);
                cli.emit("roots", Json{{"family", family_path}, {"bits", rbits}}, portrait_json(p));
                return 0;
            }
            if (minpoly.empty()) throw ParameterViolation("roots needs --minpoly or --family");
            IntPoly f = IntPoly::parse(minpoly);
            // a monic (t-a) t^(d-1) +- 1 shape doubles as a family portrait
            int d = f.degree();
            if (d >= 3 && f.is_monic() && abs(f[0]) == 1) {
                bool shape = true;
                for (int i = 1; i + 1 < d; ++i) shape = shape && f[static_cast<size_t>(i)] == 0;
                if (shape && f[static_cast<size_t>(d - 1)] != 0) {
                    FamilySpec fam = make_family(IntPoly::constant(f[0]),
                                                 IntPoly::monomial(BigInt(1), static_cast<unsigned>(d - 1)),
                                                 BigInt(-f[static_cast<size_t>(d - 1)]), cli.cfg);
                    if (hypothesis_check(fam, cli.cfg).holds) {
                        RootPortrait p = localize_roots(fam, rbits, cli.cfg);
                        cli.emit("roots", Json{{"minpoly", minpoly}, {"bits", rbits}}, portrait_json(p));
                        return 0;
                    }
                }
            }
            auto rs = isolate_roots(f, rbits, cli.cfg);
            cli.emit("roots", Json{{"minpoly", minpoly}, {"bits", rbits}},
                     Json{{"roots", rootboxes_json(rs)}});
            return 0;
        }
        if (tb->parsed()) {
            auto inst = ThueInstance::bombieri(d_in, parse_bigint(a_str), parse_bigint(m_str));
            auto b = thue_bound(inst, cli.cfg);
            cli.emit("thue bound", Json{{"d", d_in}, {"a", a_str}, {"m", m_str}},
                     solution_bound_json(b));
            return 0;
        }
        if (ts->parsed()) {
            auto inst = form == "bombieri"
                            ? ThueInstance::bombieri(d_in, parse_bigint(a_str), parse_bigint(m_str))
                            : ThueInstance::circular(d_in, parse_bigint(a_str));
            auto sols = exhaustive_search(inst, box, cli.cfg, threads);
            cli.emit("thue search",
                     Json{{"d", d_in}, {"a", a_str}, {"m", m_str}, {"box", box}, {"form", form}},
                     Json{{"solutions", solutions_json(sols)}, {"hash", solution_set_hash(sols)}});
            return 0;
        }
        if (cl->parsed()) {
            auto led = count_bound(d_in, parse_bigint(a_str), cli.cfg);
            cli.emit("count ledger", Json{{"d", d_in}, {"a", a_str}}, count_ledger_json(led),
                     ledger_json(led.ledger));
            return led.hypothesis_ok && led.arithmetic_certified ? 0 : 1;
        }
        if (cs->parsed()) {
            auto inst = ThueInstance::circular(d_in, parse_bigint(a_str));
            auto sols = exhaustive_search(inst, box, cli.cfg);
            cli.emit("count search", Json{{"d", d_in}, {"a", a_str}, {"box", box}},
                     Json{{"solutions", solutions_json(sols)}, {"count", sols.size()},
                          {"hash", solution_set_hash(sols)}});
            return 0;
        }
        if (suite->parsed()) {
            return run_suite(cli, pairs, cli.cfg.seed);
        }
    } catch (const HypothesisViolation& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const UndecidableAtPrecision& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const ParameterViolation& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 3;
}
