#include "polycert/cli.hpp"

#include <chrono>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "polycert/criteria.hpp"
#include "polycert/decompose.hpp"
#include "polycert/oracle.hpp"
#include "polycert/parse.hpp"
#include "polycert/stress.hpp"

namespace polycert {

namespace {

using nlohmann::json;

struct Report {
    std::string command;
    json input = json::object();
    std::string field = "Q";
    std::string conclusion;
    json witnesses = json::object();
    std::optional<json> evidence;
    std::optional<json> certificate;
    int exit_code = 0;
};

void fill_outcome(Report& r, const CheckOutcome& o) {
    if (o.ok()) {
        r.conclusion = conclusion_name(o.certificate->conclusion);
        r.witnesses = o.certificate->witnesses;
        r.certificate = o.certificate->to_json();
        r.exit_code = 0;
    } else {
        r.conclusion = "not-certified";
        r.witnesses = {{"reason", o.reason}};
        r.exit_code = 1;
    }
}

void emit(const Report& r, bool as_json, long ms, std::ostream& out) {
    if (as_json) {
        json j = {{"command", r.command}, {"input", r.input},   {"field", r.field},
                  {"conclusion", r.conclusion}, {"witnesses", r.witnesses},
                  {"timing-ms", ms}};
        if (r.evidence) j["evidence"] = *r.evidence;
        if (r.certificate) j["certificate"] = *r.certificate;
        out << j.dump(2) << "\n";
        return;
    }
    out << r.command << ": " << r.conclusion << "\n";
    if (!r.witnesses.empty()) out << "  witnesses: " << r.witnesses.dump() << "\n";
    if (r.evidence) out << "  evidence: " << r.evidence->dump() << "\n";
}

json factorization_json(const FactorizationResult& fr) {
    json factors = json::array();
    for (const auto& [f, m] : fr.factors)
        factors.push_back({{"factor", f.to_string()}, {"multiplicity", m}});
    return {{"unit", fr.unit.to_string()},
            {"factors", factors},
            {"candidates-tested", fr.candidates_tested},
            {"total-degree-cap", fr.total_degree_cap}};
}

// Over a finite field the claimed prime element is cheap to cross-check.
void cross_check_prime(const MultiPoly& q) {
    if (q.domain()->kind == DomainKind::Rational) return; // caller's assertion
    try {
        FactorizationResult fr = factor_exhaustive(q, 100'000);
        if (!fr.irreducible())
            throw NotPrime("q = " + q.to_string() + " is not irreducible over " +
                           q.domain()->name());
    } catch (const BudgetExceeded&) {
        // too large to cross-check cheaply; trust the caller
    }
}

} // namespace

int run_command(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"exact irreducibility certificates and decompositions for "
                 "multivariate polynomials"};
    app.require_subcommand(1);
    app.set_help_flag("--help", "print usage"); // frees -h/--h for mignotte's h(x)
    bool as_json = false;
    app.add_flag("--json", as_json, "emit the JSON report on standard output");

    Report report;
    auto add_field = [&](CLI::App* sub, std::string& spec) {
        sub->add_option("--field", spec, "coefficient field: Q, Fp:<p>, Fpk:<p>:<k>")
            ->capture_default_str();
        sub->fallthrough();
    };

    // --- eisenstein ---------------------------------------------------
    {
        auto sub = app.add_subcommand("eisenstein", "Eisenstein criterion for a prime q");
        auto opt = std::make_shared<std::string>();
        auto q = std::make_shared<std::string>();
        auto mv = std::make_shared<std::string>("y");
        auto fs = std::make_shared<std::string>("Q");
        sub->add_option("poly", *opt, "polynomial")->required();
        sub->add_option("--q", *q, "prime element of the coefficient ring")->required();
        sub->add_option("--main-var", *mv, "main variable")->capture_default_str();
        add_field(sub, *fs);
        sub->callback([&report, opt, q, mv, fs] {
            FieldPtr F = parse_field_spec(*fs);
            MultiPoly P = parse_poly(*opt, F);
            MultiPoly Q = parse_poly(*q, F);
            cross_check_prime(Q);
            report.command = "eisenstein";
            report.field = F->name();
            report.input = {{"poly", *opt}, {"q", *q}, {"main-var", *mv}};
            fill_outcome(report, eisenstein(MainVarView::of(P, *mv), Q));
        });
    }

    // --- certify-nhip --------------------------------------------------
    {
        auto sub = app.add_subcommand("certify-nhip", "NHIP certificate for a univariate a");
        auto a = std::make_shared<std::string>();
        auto fs = std::make_shared<std::string>("Q");
        sub->add_option("a", *a, "univariate polynomial")->required();
        add_field(sub, *fs);
        sub->callback([&report, a, fs] {
            FieldPtr F = parse_field_spec(*fs);
            report.command = "certify-nhip";
            report.field = F->name();
            report.input = {{"a", *a}};
            fill_outcome(report, certify_nhip(parse_poly(*a, F)));
        });
    }

    // --- certify-hip / prop-abs-irred -----------------------------------
    for (const char* name : {"certify-hip", "prop-abs-irred"}) {
        auto sub = app.add_subcommand(
            name, std::string(name) == "certify-hip"
                      ? "HIP certificate for p = a(x) c(x,y) + b(x) over Q"
                      : "absolute irreducibility of p = a c + b via a "
                        "multiplicity-one factor of a");
        auto a = std::make_shared<std::string>();
        auto c = std::make_shared<std::string>();
        auto b = std::make_shared<std::string>();
        auto mv = std::make_shared<std::string>("y");
        auto fs = std::make_shared<std::string>("Q");
        sub->add_option("--a", *a)->required();
        sub->add_option("--c", *c)->required();
        sub->add_option("--b", *b)->required();
        sub->add_option("--main-var", *mv)->capture_default_str();
        add_field(sub, *fs);
        std::string cmd = name;
        sub->callback([&report, a, c, b, mv, fs, cmd] {
            FieldPtr F = parse_field_spec(*fs);
            MultiPoly A = parse_poly(*a, F), C = parse_poly(*c, F), B = parse_poly(*b, F);
            report.command = cmd;
            report.field = F->name();
            report.input = {{"a", *a}, {"c", *c}, {"b", *b}, {"main-var", *mv}};
            MainVarView cv = MainVarView::of(C, *mv);
            fill_outcome(report, cmd == "certify-hip" ? certify_hip(A, cv, B)
                                                      : check_prop_abs_irred(A, cv, B));
        });
    }

    // --- gen-eisenstein --------------------------------------------------
    {
        auto sub = app.add_subcommand("gen-eisenstein",
                                      "Eisenstein after a triangular coordinate change");
        auto poly = std::make_shared<std::string>();
        auto map = std::make_shared<std::string>();
        auto f = std::make_shared<std::string>();
        auto fs = std::make_shared<std::string>("Q");
        sub->add_option("poly", *poly)->required();
        sub->add_option("--map", *map, "shear-x or slide-y")
            ->required()
            ->check(CLI::IsMember({"shear-x", "slide-y"}));
        sub->add_option("--f", *f, "slide polynomial f(x) for slide-y");
        add_field(sub, *fs);
        sub->callback([&report, poly, map, f, fs] {
            FieldPtr F = parse_field_spec(*fs);
            MultiPoly P = parse_poly(*poly, F);
            TriangularMap phi = *map == "shear-x"
                                    ? TriangularMap::shear_x()
                                    : TriangularMap::slide_y(parse_poly(*f, F));
            report.command = "gen-eisenstein";
            report.field = F->name();
            report.input = {{"poly", *poly}, {"map", *map}, {"f", *f}};
            fill_outcome(report, check_generalized_eisenstein(P, phi));
        });
    }

    // --- near-separated --------------------------------------------------
    {
        auto sub = app.add_subcommand("near-separated",
                                      "f1(x)f2(y) - f2(x)f1(y) + r absolute irreducibility");
        auto f1 = std::make_shared<std::string>();
        auto f2 = std::make_shared<std::string>();
        auto r = std::make_shared<std::string>();
        auto fs = std::make_shared<std::string>("Q");
        sub->add_option("--f1", *f1)->required();
        sub->add_option("--f2", *f2)->required();
        sub->add_option("--r", *r, "nonzero constant")->required();
        add_field(sub, *fs);
        sub->callback([&report, f1, f2, r, fs] {
            FieldPtr F = parse_field_spec(*fs);
            MultiPoly R = parse_poly(*r, F);
            if (!R.is_constant()) throw SyntaxError("--r must be a constant", 0);
            report.command = "near-separated";
            report.field = F->name();
            report.input = {{"f1", *f1}, {"f2", *f2}, {"r", *r}};
            fill_outcome(report, check_near_separated(parse_poly(*f1, F), parse_poly(*f2, F),
                                                      R.constant_value()));
        });
    }

    // --- cor-auto ----------------------------------------------------------
    {
        auto sub = app.add_subcommand("cor-auto",
                                      "(y - f(x)) H(x,y) + r absolute irreducibility via "
                                      "the top-weight coefficient sum");
        auto h = std::make_shared<std::string>();
        auto f = std::make_shared<std::string>();
        auto r = std::make_shared<std::string>();
        auto fs = std::make_shared<std::string>("Q");
        sub->add_option("--cofactor", *h, "H(x,y)")->required();
        sub->add_option("--f", *f, "univariate f(x)")->required();
        sub->add_option("--r", *r, "nonzero constant")->required();
        add_field(sub, *fs);
        sub->callback([&report, h, f, r, fs] {
            FieldPtr F = parse_field_spec(*fs);
            MultiPoly R = parse_poly(*r, F);
            if (!R.is_constant()) throw SyntaxError("--r must be a constant", 0);
            report.command = "cor-auto";
            report.field = F->name();
            report.input = {{"cofactor", *h}, {"f", *f}, {"r", *r}};
            fill_outcome(report,
                         check_cor_auto(MainVarView::of(parse_poly(*h, F), "y"),
                                        parse_poly(*f, F), R.constant_value()));
        });
    }

    // --- mignotte-a / mignotte-b ------------------------------------------
    {
        auto sub = app.add_subcommand("mignotte-a",
                                      "h(x) prod(y - f_i(x)) + g(x) absolute irreducibility");
        sub->set_help_flag("--help", "print usage");
        auto h = std::make_shared<std::string>();
        auto g = std::make_shared<std::string>();
        auto f = std::make_shared<std::vector<std::string>>();
        auto fs = std::make_shared<std::string>("Q");
        sub->add_option("--h", *h)->required();
        sub->add_option("--g", *g)->required();
        sub->add_option("--f", *f, "repeatable: the f_i(x)")->required();
        add_field(sub, *fs);
        sub->callback([&report, h, g, f, fs] {
            FieldPtr F = parse_field_spec(*fs);
            std::vector<MultiPoly> fl;
            for (const auto& s : *f) fl.push_back(parse_poly(s, F));
            report.command = "mignotte-a";
            report.field = F->name();
            report.input = {{"h", *h}, {"g", *g}, {"f", *f}};
            fill_outcome(report, check_mignotte_a(parse_poly(*h, F), parse_poly(*g, F), fl));
        });
    }
    {
        auto sub = app.add_subcommand("mignotte-b",
                                      "h(x) prod(y - f_i(x)) + r absolute irreducibility");
        sub->set_help_flag("--help", "print usage");
        auto h = std::make_shared<std::string>();
        auto r = std::make_shared<std::string>();
        auto f = std::make_shared<std::vector<std::string>>();
        auto fs = std::make_shared<std::string>("Q");
        sub->add_option("--h", *h)->required();
        sub->add_option("--r", *r, "nonzero constant")->required();
        sub->add_option("--f", *f, "repeatable: the f_i(x)")->required();
        add_field(sub, *fs);
        sub->callback([&report, h, r, f, fs] {
            FieldPtr F = parse_field_spec(*fs);
            std::vector<MultiPoly> fl;
            for (const auto& s : *f) fl.push_back(parse_poly(s, F));
            MultiPoly R = parse_poly(*r, F);
            if (!R.is_constant()) throw SyntaxError("--r must be a constant", 0);
            report.command = "mignotte-b";
            report.field = F->name();
            report.input = {{"h", *h}, {"r", *r}, {"f", *f}};
            fill_outcome(report, check_mignotte_b(fl, parse_poly(*h, F), R.constant_value()));
        });
    }

    // --- decompose ----------------------------------------------------------
    {
        auto sub = app.add_subcommand("decompose",
                                      "find all F = (y - f(x)) H(x,y) + r decompositions");
        auto poly = std::make_shared<std::string>();
        auto allow_const = std::make_shared<bool>(false);
        auto fs = std::make_shared<std::string>("Q");
        sub->add_option("poly", *poly)->required();
        sub->add_flag("--allow-constant-f", *allow_const, "admit constant f solutions");
        add_field(sub, *fs);
        sub->callback([&report, poly, allow_const, fs] {
            FieldPtr F = parse_field_spec(*fs);
            report.command = "decompose";
            report.field = F->name();
            report.input = {{"poly", *poly}, {"allow-constant-f", *allow_const}};
            std::vector<Decomposition> ds;
            try {
                ds = find_decompositions(parse_poly(*poly, F), *allow_const);
            } catch (const DegenerateFamily& e) {
                report.conclusion = "degenerate-family";
                report.witnesses = {{"reason", e.what()}};
                report.exit_code = 1;
                return;
            }
            json sols = json::array();
            for (const auto& d : ds)
                sols.push_back({{"f", d.f.to_string()},
                                {"r", d.r.to_string()},
                                {"H", d.H.to_string()}});
            report.witnesses = {{"solutions", sols}};
            report.conclusion = ds.empty() ? "no-decomposition" : "decomposed";
            report.exit_code = ds.empty() ? 1 : 0;
        });
    }

    // --- factor ---------------------------------------------------------------
    {
        auto sub = app.add_subcommand("factor", "exhaustive factorization over F_q");
        auto poly = std::make_shared<std::string>();
        auto pow = std::make_shared<unsigned>(1);
        auto budget = std::make_shared<uint64_t>(kDefaultOracleBudget);
        auto fs = std::make_shared<std::string>("Q");
        sub->add_option("poly", *poly)->required();
        sub->add_option("--pow", *pow, "raise the input to this power first")
            ->capture_default_str();
        sub->add_option("--budget", *budget, "candidate budget")->capture_default_str();
        add_field(sub, *fs);
        sub->callback([&report, poly, pow, budget, fs] {
            FieldPtr F = parse_field_spec(*fs);
            MultiPoly P = parse_poly(*poly, F).pow(*pow);
            report.command = "factor";
            report.field = F->name();
            report.input = {{"poly", *poly}, {"pow", *pow}};
            FactorizationResult fr = factor_exhaustive(P, *budget);
            report.conclusion = fr.irreducible() ? "irreducible" : "factored";
            report.witnesses = factorization_json(fr);
            report.exit_code = 0;
        });
    }

    // --- simple-roots -----------------------------------------------------------
    {
        auto sub = app.add_subcommand("simple-roots",
                                      "count simple roots in the algebraic closure");
        auto poly = std::make_shared<std::string>();
        auto brute = std::make_shared<bool>(false);
        auto fs = std::make_shared<std::string>("Q");
        sub->add_option("poly", *poly)->required();
        sub->add_flag("--brute", *brute,
                      "cross-check with exhaustive extension-field scanning (F_p only)");
        add_field(sub, *fs);
        sub->callback([&report, poly, brute, fs] {
            FieldPtr F = parse_field_spec(*fs);
            MultiPoly P = parse_poly(*poly, F);
            report.command = "simple-roots";
            report.field = F->name();
            report.input = {{"poly", *poly}};
            int n = simple_root_count(P);
            report.witnesses = {{"count", n}};
            if (*brute) {
                int m = simple_root_count_bruteforce(P);
                report.witnesses["brute-count"] = m;
                report.witnesses["agreement"] = (n == m);
            }
            report.conclusion = std::to_string(n) + " simple roots";
            report.exit_code = 0;
        });
    }

    // --- stress -----------------------------------------------------------------
    {
        auto sub = app.add_subcommand("stress",
                                      "randomized HIP compositions against the mod-p oracle");
        auto seed = std::make_shared<uint64_t>(1);
        auto instances = std::make_shared<unsigned>(100);
        auto comps = std::make_shared<unsigned>(10);
        auto budget = std::make_shared<uint64_t>(50'000);
        sub->add_option("--seed", *seed)->capture_default_str();
        sub->add_option("--instances", *instances)->capture_default_str();
        sub->add_option("--compositions", *comps)->capture_default_str();
        sub->add_option("--budget", *budget)->capture_default_str();
        sub->fallthrough();
        sub->callback([&report, seed, instances, comps, budget] {
            StressReport r = run_hip_stress(*seed, *instances, *comps, *budget);
            report.command = "stress";
            report.field = "Q";
            report.input = {{"seed", *seed},
                            {"instances", *instances},
                            {"compositions", *comps},
                            {"budget", *budget}};
            report.witnesses = {{"irreducible", r.irreducible_count},
                                {"inconclusive", r.inconclusive_count}};
            json ev = json::array();
            for (const auto& o : r.outcomes)
                if (!o.irreducible)
                    ev.push_back({{"composed", o.composed},
                                  {"p", o.p},
                                  {"h1", o.h1},
                                  {"h2", o.h2},
                                  {"oracle-log", o.oracle_log}});
            report.evidence = ev;
            report.conclusion = "stress-complete";
            report.exit_code = 0;
        });
    }

    // --- verify ------------------------------------------------------------------
    {
        auto sub = app.add_subcommand("verify", "replay an emitted certificate");
        auto path = std::make_shared<std::string>();
        sub->add_option("file", *path, "certificate JSON file, or - for stdin")->required();
        sub->fallthrough();
        sub->callback([&report, path] {
            json j;
            if (*path == "-") {
                std::stringstream ss;
                ss << std::cin.rdbuf();
                j = json::parse(ss.str());
            } else {
                std::ifstream in(*path);
                if (!in) throw SyntaxError("cannot open " + *path, 0);
                j = json::parse(in);
            }
            if (j.contains("certificate")) j = j["certificate"];
            Certificate cert = Certificate::from_json(j);
            bool ok = replay_certificate(cert);
            report.command = "verify";
            report.field = cert.field->name();
            report.input = {{"criterion", criterion_name(cert.id)}};
            report.conclusion = ok ? "certificate-valid" : "certificate-invalid";
            report.witnesses = {{"replayed", ok}};
            report.exit_code = ok ? 0 : 1;
        });
    }

    auto t0 = std::chrono::steady_clock::now();
    try {
        std::vector<std::string> argv = args;
        std::reverse(argv.begin(), argv.end()); // CLI11 consumes back-to-front
        app.parse(argv);
    } catch (const CLI::CallForHelp& e) {
        out << app.help();
        return 0;
    } catch (const CLI::ParseError& e) {
        err << "usage error: " << e.what() << "\n";
        return 2;
    } catch (const BudgetExceeded& e) {
        err << "budget exceeded: " << e.what() << "\n";
        return 3;
    } catch (const CharPositiveUnsupported& e) {
        err << "CharPositiveUnsupported: " << e.what() << "\n";
        return 1;
    } catch (const CharPInseparable& e) {
        err << "CharPInseparable: " << e.what() << "\n";
        return 1;
    } catch (const DegenerateReduction& e) {
        err << "DegenerateReduction: " << e.what() << "\n";
        return 1;
    } catch (const MissingNHIPCertificate& e) {
        err << "MissingNHIPCertificate: " << e.what() << "\n";
        return 1;
    } catch (const NoAdmissiblePrime& e) {
        err << "NoAdmissiblePrime: " << e.what() << "\n";
        return 1;
    } catch (const nlohmann::json::exception& e) {
        err << "malformed JSON: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        // SyntaxError, UnknownField, ReservedVariable, NotPrime, domain errors
        err << "error: " << e.what() << "\n";
        return 2;
    }
    auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                  std::chrono::steady_clock::now() - t0)
                  .count();
    emit(report, as_json, static_cast<long>(ms), out);
    return report.exit_code;
}

} // namespace polycert
