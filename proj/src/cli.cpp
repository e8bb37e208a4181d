#include "zorbit/cli.hpp"

#include <algorithm>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>

#include <CLI11.hpp>

#include "zorbit/acceptance.hpp"
#include "zorbit/chars.hpp"
#include "zorbit/counterex.hpp"
#include "zorbit/models.hpp"
#include "zorbit/orbits.hpp"
#include "zorbit/resolve.hpp"
#include "zorbit/sweep.hpp"
#include "zorbit/tableaux.hpp"

namespace zorbit {

namespace {

struct UsageError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

struct Result {
    json body;
    bool pass = true;
    std::string text;  // printed verbatim instead of body when set

    Result(json b, bool ok = true) : body(std::move(b)), pass(ok) {}
};

std::string cell(const json& v) {
    if (v.is_string()) return v.get<std::string>();
    if (v.is_array() && std::all_of(v.begin(), v.end(), [](const json& x) { return x.is_primitive(); })) {
        std::string s;
        for (std::size_t i = 0; i < v.size(); ++i) s += (i ? " " : "") + cell(v[i]);
        return s;
    }
    return v.dump();
}

void emit(const json& j, bool tsv, std::ostream& out) {
    if (!tsv) {
        out << j.dump(2) << '\n';
        return;
    }
    for (auto it = j.begin(); it != j.end(); ++it)
        if (it.key() != "rows") out << it.key() << '\t' << cell(it.value()) << '\n';
    if (!j.contains("rows") || j["rows"].empty()) return;
    const json& rows = j["rows"];
    out << '\n';
    std::vector<std::string> keys;
    for (auto it = rows[0].begin(); it != rows[0].end(); ++it) keys.push_back(it.key());
    for (std::size_t k = 0; k < keys.size(); ++k) out << (k ? "\t" : "") << keys[k];
    out << '\n';
    for (const auto& row : rows) {
        for (std::size_t k = 0; k < keys.size(); ++k) out << (k ? "\t" : "") << cell(row.value(keys[k], json()));
        out << '\n';
    }
}

WeylKind kind_of(Family f, int n) {
    if (n < 1) throw SpecError("n must be positive");
    if (f == Family::B && n % 2 == 0) throw SpecError("type B needs n odd");
    if ((f == Family::C || f == Family::D) && n % 2) throw SpecError("types C and D need n even");
    return WeylKind::make(f == Family::A ? 0 : (f == Family::C ? -1 : 1), n);
}

Perm parse_perm(const std::string& text, const WeylKind& k) {
    Perm p = Perm::parse(text);
    if (p.size() != k.m) throw UsageError("permutation has " + std::to_string(p.size()) + " letters, expected " + std::to_string(k.m));
    if (!in_weyl(p, k)) throw SpecError("[" + p.str() + "] is not in the Weyl group");
    return p;
}

json perm_rows(const std::vector<Perm>& ps) {
    json rows = json::array();
    for (const auto& p : ps) rows.push_back({{"perm", p.str()}});
    return rows;
}

std::vector<int> parse_ints(const std::string& text) {
    std::istringstream is(text);
    std::vector<int> out;
    std::string tok;
    while (is >> tok) {
        std::size_t used = 0;
        int v = 0;
        try {
            v = std::stoi(tok, &used);
        } catch (const std::exception&) {
            throw UsageError("not an integer: '" + tok + "'");
        }
        if (used != tok.size()) throw UsageError("not an integer: '" + tok + "'");
        out.push_back(v);
    }
    return out;
}

Matrix parse_matrix(const std::string& text, Field f) {
    json j;
    try {
        j = json::parse(text);
    } catch (const json::exception& e) {
        throw UsageError(std::string("matrix is not valid JSON: ") + e.what());
    }
    return matrix_from_json(j, f);
}

}  // namespace

int dispatch(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    CLI::App app{"zorbit: centralizer orbits of two-column nilpotents in classical flag varieties"};
    app.require_subcommand(1);
    app.fallthrough();

    std::string format = "json", field_name = "q";
    std::uint64_t prime = 0;
    std::uint64_t seed = 20240601;
    int threads = 0;
    app.add_option("--format", format, "json or tsv")->check(CLI::IsMember({"json", "tsv"}));
    app.add_option("--field", field_name, "q (rationals) or fp")->check(CLI::IsMember({"q", "fp"}));
    app.add_option("--p", prime, "prime for --field fp");
    app.add_option("--seed", seed, "seed for sampling (default 20240601)");
    app.add_option("--threads", threads, "OpenMP threads for sweeps (0: default)");

    std::string family_name, perm_text, v_text, u_text, w_text, tag_text = "G", matrix_text, cols_text, group = "G";
    std::string primes_text = "3 5 7 11";
    int n = 0, r = 0, m_max = 3, rank = -1, samples = 50, bw_samples = 3;
    bool exhaustive = false, pretty = false, small = false;

    std::function<Result()> action;
    auto field = [&]() {
        if (field_name == "q") {
            if (prime) throw UsageError("--p needs --field fp");
            return Field::rationals();
        }
        if (!prime) throw UsageError("--field fp needs --p");
        return Field::prime(prime);
    };
    auto family = [&]() { return parse_family(family_name); };
    auto spec = [&]() { return ModelSpec::make(family(), n, r); };
    auto rational_only = [&]() {
        if (!field().is_rational()) throw UsageError("this command works over the rationals only");
    };

    auto add_family = [&](CLI::App* c, bool with_r) {
        c->add_option("--family", family_name, "A, B, C or D")->required();
        c->add_option("--n", n, "size")->required();
        if (with_r) c->add_option("--r", r, "rank of e")->required();
    };

    // weyl
    auto* weyl = app.add_subcommand("weyl", "Weyl group combinatorics");
    weyl->require_subcommand(1);
    auto* wlen = weyl->add_subcommand("len", "inversions, type length and Coxeter length");
    add_family(wlen, false);
    wlen->add_option("--perm", perm_text)->required();
    wlen->callback([&] {
        action = [&] {
            WeylKind k = kind_of(family(), n);
            Perm p = parse_perm(perm_text, k);
            return Result{{{"perm", p.str()}, {"inversions", p.inversions()}, {"length", type_length(p, k)}, {"coxeter_length", coxeter_length(p, k)}}};
        };
    });
    auto* wcheck = weyl->add_subcommand("check", "membership in the Weyl group");
    add_family(wcheck, false);
    wcheck->add_option("--perm", perm_text)->required();
    wcheck->callback([&] {
        action = [&] {
            WeylKind k = kind_of(family(), n);
            Perm p = Perm::parse(perm_text);
            bool in = p.size() == n && in_weyl(p, k);
            return Result{{{"perm", p.str()}, {"in_weyl", in}, {"check", check_of(p).str()}}};
        };
    });
    auto* wdec = weyl->add_subcommand("decompose", "w = tau nu with tau in W_P, nu^-1 in W^P");
    add_family(wdec, true);
    wdec->add_option("--perm", perm_text)->required();
    wdec->callback([&] {
        action = [&] {
            ModelSpec s = spec();
            Perm w = parse_perm(perm_text, s.weyl());
            auto d = coset_decompose(w, s);
            int lw = type_length(w, s.weyl()), lt = type_length(d.tau, s.weyl()), ln = type_length(d.nu, s.weyl());
            return Result{{{"w", w.str()}, {"tau", d.tau.str()}, {"nu", d.nu.str()}, {"len_w", lw}, {"len_tau", lt}, {"len_nu", ln},
                           {"additive", lw == lt + ln}},
                          lw == lt + ln};
        };
    });
    auto* wbru = weyl->add_subcommand("bruhat", "u <= w in the Bruhat order");
    add_family(wbru, false);
    wbru->add_option("--u", u_text)->required();
    wbru->add_option("--w", w_text)->required();
    wbru->callback([&] {
        action = [&] {
            WeylKind k = kind_of(family(), n);
            Perm u = parse_perm(u_text, k), w = parse_perm(w_text, k);
            return Result{{{"u", u.str()}, {"w", w.str()}, {"leq", bruhat_leq(u, w, k)}}};
        };
    });

    // models
    auto* models = app.add_subcommand("models", "matrix models");
    models->require_subcommand(1);
    auto* mdim = models->add_subcommand("lie-dim", "dimension of a Lie algebra");
    add_family(mdim, true);
    mdim->add_option("--tag", tag_text, "G, B, T, P, L, Z, H or Bw:<perm>");
    mdim->callback([&] {
        action = [&] {
            ModelSpec s = spec();
            Field f = field();
            Tag t;
            Perm w;
            if (tag_text.rfind("Bw:", 0) == 0) {
                t = Tag::BorelConj;
                w = parse_perm(tag_text.substr(3), s.weyl());
            } else {
                t = parse_tag(tag_text);
            }
            return Result{{{"spec", s.str()}, {"tag", tag_text}, {"field", f.name()}, {"dim", lie_basis(t, s, f, w).dim()}}};
        };
    });
    auto* mmem = models->add_subcommand("member", "group membership of a matrix");
    add_family(mmem, true);
    mmem->add_option("--tag", tag_text, "G, B, T, P, L, Z, H or Bw:<perm>");
    mmem->add_option("--matrix", matrix_text, "JSON rows")->required();
    mmem->callback([&] {
        action = [&] {
            ModelSpec s = spec();
            Matrix g = parse_matrix(matrix_text, field());
            if (g.rows() != static_cast<std::size_t>(s.ambient()) || g.cols() != g.rows())
                throw UsageError("matrix must be " + std::to_string(s.ambient()) + "x" + std::to_string(s.ambient()));
            Perm w;
            Tag t;
            if (tag_text.rfind("Bw:", 0) == 0) {
                t = Tag::BorelConj;
                w = parse_perm(tag_text.substr(3), s.weyl());
            } else {
                t = parse_tag(tag_text);
            }
            return Result{{{"spec", s.str()}, {"tag", tag_text}, {"member", member(g, t, s, w)}}};
        };
    });
    auto* mchi = models->add_subcommand("chi", "chi sequence of an order-two nilpotent over GF(2)");
    mchi->add_option("--matrix", matrix_text, "JSON rows over GF(2)");
    mchi->add_option("--n", n, "size, with --rank");
    mchi->add_option("--rank", rank, "use the standard block form of this rank");
    mchi->add_option("--m", m_max, "largest m");
    mchi->callback([&] {
        action = [&] {
            Field f2 = Field::prime(2);
            Matrix N;
            if (!matrix_text.empty()) N = parse_matrix(matrix_text, f2);
            else if (rank >= 0 && n > 0) N = standard_order_two(n, rank, f2);
            else throw UsageError("give --matrix or --n with --rank");
            return Result{{{"chi", chi_sequence(N, m_max)}}};
        };
    });
    auto* mdick = models->add_subcommand("dickson", "Dickson invariant over GF(2)");
    mdick->add_option("--matrix", matrix_text, "JSON rows over GF(2)")->required();
    mdick->callback([&] {
        action = [&] { return Result{{{"dickson", dickson(parse_matrix(matrix_text, Field::prime(2)))}}}; };
    });

    // orbits
    auto* orbits = app.add_subcommand("orbits", "orbit parametrisation");
    orbits->require_subcommand(1);
    auto* ocount = orbits->add_subcommand("count", "number of orbits");
    add_family(ocount, true);
    ocount->callback([&] {
        action = [&] {
            ModelSpec s = spec();
            if (s.family == Family::A) {
                auto h = hook_identity(n, r);
                return Result{{{"count", h.count}, {"components", h.components}, {"factor", h.factor}, {"identity_holds", h.holds}}, h.holds};
            }
            return Result{{{"count", count_orbits(s)}, {"wp", enumerate_WP(s).size()}, {"u_params", u_factor(s)}}};
        };
    });
    auto* owp = orbits->add_subcommand("enumerate-wp", "minimal coset representatives");
    add_family(owp, true);
    owp->callback([&] {
        action = [&] {
            auto wp = enumerate_WP(spec());
            return Result{{{"count", wp.size()}, {"rows", perm_rows(wp)}}};
        };
    });
    auto* ocls = orbits->add_subcommand("classify", "parameter u of x B_r in GL_r / B_r");
    add_family(ocls, true);
    ocls->add_option("--matrix", matrix_text, "invertible r x r matrix as JSON rows")->required();
    ocls->callback([&] {
        action = [&] {
            ModelSpec s = spec();
            if (s.family == Family::A) throw UsageError("classify is for families B, C and D");
            Matrix x = parse_matrix(matrix_text, field());
            if (x.rows() != static_cast<std::size_t>(r) || x.cols() != x.rows()) throw UsageError("matrix must be r x r");
            if (x.det().is_zero()) throw UsageError("matrix is singular");
            return Result{{{"u", classify_orbit_u(x, s).str()}}};
        };
    });

    // resolve
    auto* resolve = app.add_subcommand("resolve", "representative correction and hypothesis report");
    resolve->require_subcommand(0, 1);
    resolve->add_option("--family", family_name);
    resolve->add_option("--n", n);
    resolve->add_option("--r", r);
    resolve->add_option("--v", v_text);
    resolve->add_option("--samples", samples, "sampled elements for hypothesis 2");
    auto one_report = [&] {
        rational_only();
        ModelSpec s = spec();
        ModelContext ctx(s);
        ReportConfig cfg;
        cfg.samples = samples;
        cfg.seed = seed;
        auto rep = hypothesis_report(parse_perm(v_text, s.weyl()), ctx, cfg);
        return Result{to_json(rep), rep.ok()};
    };
    auto* rone = resolve->add_subcommand("one", "report for one v");
    add_family(rone, true);
    rone->add_option("--v", v_text)->required();
    rone->add_option("--samples", samples);
    rone->callback([&] { action = one_report; });
    auto* rall = resolve->add_subcommand("exhaustive", "reports for every v");
    add_family(rall, true);
    rall->add_option("--samples", samples);
    rall->callback([&] {
        action = [&] {
            rational_only();
            ModelSpec s = spec();
            ModelContext ctx(s);
            ReportConfig cfg;
            cfg.samples = samples;
            cfg.seed = seed;
            json rows = json::array();
            bool all = true;
            for (const auto& rep : resolve_sweep(ctx, cfg)) {
                rows.push_back({{"v", rep.v.str()},
                                {"w", rep.w.str()},
                                {"codim", rep.codim},
                                {"len_w", rep.len_w},
                                {"a", rep.cond_a},
                                {"b", rep.cond_b},
                                {"h1", rep.hypotheses[0]},
                                {"h2", rep.hypotheses[1]},
                                {"h3", rep.hypotheses[2]},
                                {"h4", rep.hypotheses[3]},
                                {"ok", rep.ok()}});
                all = all && rep.ok();
            }
            return Result{{{"spec", s.str()}, {"all_ok", all}, {"rows", rows}}, all};
        };
    });
    resolve->callback([&] {
        if (resolve->get_subcommands().empty()) {
            if (family_name.empty() || n == 0 || v_text.empty()) throw CLI::ValidationError("resolve needs --family, --n, --r and --v");
            action = one_report;
        }
    });

    // chars
    auto* chars = app.add_subcommand("chars", "characters of the tori");
    chars->require_subcommand(1);
    auto* cdom = chars->add_subcommand("dominance", "2 rho_H - rho_G restricted to T_H");
    add_family(cdom, true);
    cdom->callback([&] {
        action = [&] {
            auto d = dominance_character(spec());
            return Result{{{"weight", d.weight}, {"dominant", d.dominant}}};
        };
    });
    auto* crho = chars->add_subcommand("rho", "2 rho of G or H");
    add_family(crho, true);
    crho->add_option("--group", group, "G or H")->check(CLI::IsMember({"G", "H"}));
    crho->callback([&] {
        action = [&] {
            ModelSpec s = spec();
            GroupPart g = group == "G" ? GroupPart::G : GroupPart::H;
            return Result{{{"root_system", root_system(g, s).str()}, {"two_rho", two_rho(g, s)}}};
        };
    });

    // tableau
    auto* tab = app.add_subcommand("tableau", "two-column standard tableaux");
    tab->require_subcommand(1);
    auto* tenum = tab->add_subcommand("enumerate", "all tableaux with r entries in the second column");
    tenum->add_option("--n", n)->required();
    tenum->add_option("--r", r)->required();
    tenum->callback([&] {
        action = [&] {
            if (r < 0 || 2 * r > n) throw SpecError("need 0 <= r <= n/2");
            json rows = json::array();
            for (const auto& t : enumerate_tableaux(n, r)) {
                std::string p;
                for (std::size_t i = 0; i < t.p.size(); ++i) p += (i ? " " : "") + std::to_string(t.p[i]);
                rows.push_back({{"cols", p}, {"w", tableau_to_w(t).w.str()}, {"separated", separated(t)}});
            }
            return Result{{{"count", rows.size()}, {"rows", rows}}};
        };
    });
    auto* tw = tab->add_subcommand("to-w", "the permutation w_tau");
    tw->add_option("--n", n)->required();
    tw->add_option("--cols", cols_text, "second column p_1 < ... < p_r")->required();
    tw->add_flag("--pretty", pretty, "print the tableau diagram");
    tw->callback([&] {
        action = [&] {
            TwoColTableau t{n, parse_ints(cols_text)};
            if (!t.valid()) throw SpecError("not a standard two-column tableau");
            auto tw = tableau_to_w(t);
            auto d = tableau_dims(t);
            Result res{{{"q", tw.q}, {"s", tw.s}, {"w", tw.w.str()}, {"dims", {{"dim_HB", d.dim_HB}, {"len_w", d.len_w}}}, {"separated", separated(t)}}};
            if (pretty) res.text = render(t);
            return res;
        };
    });

    // counterexample
    auto* cex = app.add_subcommand("counterexample", "discontinuity of phi in type D, n = 2r = 4");
    cex->callback([&] {
        action = [&] {
            auto rep = verify_noncontinuity();
            return Result{to_json(rep), rep.ok()};
        };
    });

    // verify
    auto* verify = app.add_subcommand("verify", "exact verifications");
    verify->require_subcommand(1);
    auto* vdim = verify->add_subcommand("dim-formula", "codim of Z cap wB against the length formula");
    add_family(vdim, true);
    vdim->add_flag("--exhaustive", exhaustive, "all w instead of a sample");
    vdim->add_option("--samples", samples, "sample size without --exhaustive");
    vdim->callback([&] {
        action = [&] {
            rational_only();
            ModelSpec s = spec();
            ModelContext ctx(s);
            std::vector<DimFormulaRow> rows;
            if (exhaustive) {
                rows = dim_formula_sweep(ctx);
            } else {
                auto ws = enumerate_weyl(s.weyl());
                std::mt19937_64 rng(seed);
                std::shuffle(ws.begin(), ws.end(), rng);
                ws.resize(std::min<std::size_t>(ws.size(), static_cast<std::size_t>(std::max(samples, 0))));
                std::sort(ws.begin(), ws.end());
                for (const auto& w : ws)
                    rows.push_back({w, static_cast<long>(dim_orbit_oracle(w, ctx).codim), dimension_formula_rhs(w, ctx)});
            }
            json out = json::array();
            bool all = true;
            for (const auto& row : rows) {
                out.push_back({{"w", row.w.str()}, {"codim", row.codim}, {"rhs", row.rhs}, {"pass", row.ok()}});
                all = all && row.ok();
            }
            return Result{{{"spec", s.str()}, {"checked", rows.size()}, {"all_pass", all}, {"rows", out}}, all};
        };
    });
    auto* vlen = verify->add_subcommand("lengths", "type length against Coxeter length");
    vlen->add_option("--family", family_name);
    vlen->add_option("--n", n);
    vlen->callback([&] {
        action = [&] {
            std::vector<WeylKind> kinds;
            if (!family_name.empty()) {
                if (n <= 0) throw UsageError("--family needs --n");
                kinds.push_back(kind_of(family(), n));
            } else {
                for (int d = 1; d <= 8; ++d) {
                    kinds.push_back(WeylKind::make(1, d));
                    if (d % 2 == 0) kinds.push_back(WeylKind::make(-1, d));
                }
            }
            json rows = json::array();
            bool all = true;
            for (const auto& k : kinds) {
                long bad = 0, count = 0;
                for (const auto& u : enumerate_weyl(k)) {
                    ++count;
                    bad += type_length(u, k) != coxeter_length(u, k);
                }
                int m = k.m / 2;
                int want = k.eps == 0 ? k.m * (k.m - 1) / 2 : (k.eps == -1 || k.m % 2 ? m * m : m * m - m);
                int got = type_length(longest_element(k), k);
                bool ok = bad == 0 && got == want;
                all = all && ok;
                rows.push_back({{"eps", k.eps}, {"d", k.m}, {"elements", count}, {"mismatches", bad}, {"longest", got}, {"expected", want}, {"pass", ok}});
            }
            return Result{{{"all_pass", all}, {"rows", rows}}, all};
        };
    });
    auto* vsm = verify->add_subcommand("smoothness-dims", "Lie dimensions over Q and GF(p)");
    add_family(vsm, true);
    vsm->add_option("--primes", primes_text, "odd primes");
    vsm->add_option("--bw-samples", bw_samples, "sampled Borel conjugates");
    vsm->callback([&] {
        action = [&] {
            ModelSpec s = spec();
            std::vector<std::uint64_t> primes;
            for (int p : parse_ints(primes_text)) {
                if (p < 2) throw UsageError("bad prime " + std::to_string(p));
                primes.push_back(static_cast<std::uint64_t>(p));
            }
            json rows = json::array();
            bool all = true;
            for (const auto& row : lie_constancy_sweep(s, primes, bw_samples, seed)) {
                json j{{"tag", row.tag}, {"Q", row.dim_q}};
                for (const auto& [p, d] : row.dim_p) j["GF(" + std::to_string(p) + ")"] = d;
                j["pass"] = row.ok();
                all = all && row.ok();
                rows.push_back(j);
            }
            return Result{{{"spec", s.str()}, {"all_pass", all}, {"rows", rows}}, all};
        };
    });
    auto* vall = verify->add_subcommand("all", "the acceptance suite");
    vall->add_flag("--small", small, "desk-scale sizes (the only sizes available)");
    vall->callback([&] {
        action = [&] {
            AcceptanceConfig cfg;
            cfg.threads = threads;
            cfg.seed = seed;
            json rows = json::array();
            bool all = true;
            for (const auto& c : run_acceptance(cfg)) {
                rows.push_back({{"id", c.id}, {"criterion", c.name}, {"pass", c.pass}, {"detail", c.detail}, {"seconds", c.seconds}});
                all = all && c.pass;
            }
            return Result{{{"all_pass", all}, {"rows", rows}}, all};
        };
    });

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        out << app.help();
        return 0;
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) {
            app.exit(e, out, err);
            return 0;
        }
        err << "error: " << e.what() << '\n';
        return 2;
    }
    if (!action) {
        err << "error: incomplete command\n";
        return 2;
    }
    try {
        set_threads(threads);
        Result res = action();
        if (!res.text.empty()) out << res.text;
        else emit(res.body, format == "tsv", out);
        return res.pass ? 0 : 1;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return 2;
    }
}

}  // namespace zorbit
