#include "wittswan/cli.hpp"

#include <filesystem>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "wittswan/verify.hpp"

namespace wittswan {

namespace {

std::vector<int> parse_int_list(const std::string& text, const char* what) {
    std::vector<int> out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        if (item.empty()) continue;
        size_t used = 0;
        int v = 0;
        try {
            v = std::stoi(item, &used);
        } catch (...) {
            used = 0;
        }
        if (used != item.size())
            throw std::invalid_argument(std::string(what) + ": bad integer '" + item + "'");
        out.push_back(v);
    }
    if (out.empty())
        throw std::invalid_argument(std::string(what) + ": empty list");
    return out;
}

int do_swan(int p, int m, const std::string& payload, bool strict,
            const std::string& cache_dir, std::ostream& out) {
    WittCtx ctx = load_or_build(p, m, resolve_cache_dir(cache_dir));
    SwanCertificate cert =
        swan_conductor(char_from_witt(witt_from_text(payload, ctx)));
    out << swan_to_json(cert).dump() << "\n";
    return strict && !cert.certified ? 2 : 0;
}

int do_rsw(int p, int m, const std::string& payload, const std::string& cache_dir,
           std::ostream& out) {
    WittCtx ctx = load_or_build(p, m, resolve_cache_dir(cache_dir));
    RswClass r = rsw_class(char_from_witt(witt_from_text(payload, ctx)));
    out << rsw_to_json(r).dump() << "\n";
    return 0;
}

int do_lambda(int p, int m, int d, const std::string& payload,
              const std::string& cache_dir, std::ostream& out) {
    WittCtx ctx = load_or_build(p, m, resolve_cache_dir(cache_dir));
    SymmetricChart chart = SymmetricChart::make(ctx, d);
    WittVector<SFraction> lam =
        lambda_pushforward(witt_from_text(payload, ctx), chart);
    Json j;
    j["components"] = witt_sfrac_to_json(lam);
    j["v_exceptional"] = ord_to_json(v_witt_exceptional(lam));
    out << j.dump() << "\n";
    return 0;
}

int do_sympow(int p, int m, int d, const std::string& payload, bool strict,
              const std::string& cache_dir, std::ostream& out, std::ostream& err) {
    WittCtx ctx = load_or_build(p, m, resolve_cache_dir(cache_dir));
    SymmetricChart chart = SymmetricChart::make(ctx, d);
    SwanCertificate up =
        swan_conductor(char_from_witt(witt_from_text(payload, ctx)));
    if (!up.certified) {
        err << "error: upstream conductor is uncertified, bounds [" << up.lower
            << ", " << up.upper << "]\n";
        return 1;
    }
    SymSwanCertificate down = sympow_swan(up, chart);
    out << sympow_to_json(down).dump() << "\n";
    return strict && !down.certified ? 2 : 0;
}

int do_blprod(int p, int m, const std::string& payload_a,
              const std::string& payload_b, bool strict,
              const std::string& cache_dir, std::ostream& out, std::ostream& err) {
    WittCtx ctx = load_or_build(p, m, resolve_cache_dir(cache_dir));
    SwanCertificate c1 =
        swan_conductor(char_from_witt(witt_from_text(payload_a, ctx)));
    SwanCertificate c2 =
        swan_conductor(char_from_witt(witt_from_text(payload_b, ctx)));
    if (!c1.certified || !c2.certified) {
        err << "error: upstream conductor is uncertified ("
            << (c1.certified ? "beta" : "alpha") << ")\n";
        return 1;
    }
    ProdSwanCertificate cert = blprod_swan(c1, c2, ProductChart::make(ctx));
    out << blprod_to_json(cert).dump() << "\n";
    return strict && !cert.certified ? 2 : 0;
}

int do_omega_basis(int p, int d, long i, const std::string& cache_dir,
                   std::ostream& out) {
    WittCtx ctx = load_or_build(p, 0, resolve_cache_dir(cache_dir));
    SymmetricChart chart = SymmetricChart::make(ctx, d);
    OmegaForm w = omega_basis(chart, i);
    Json j;
    j["i"] = i;
    j["p"] = p;
    j["d"] = d;
    j["coeffs"] = omega_to_json(w);
    j["v_log_exceptional"] = ord_to_json(v_log_exceptional(w));
    out << j.dump() << "\n";
    return 0;
}

int do_verify(const std::string& suite, const VerifyConfig& cfg,
              const std::string& format, const std::string& cache_dir,
              std::ostream& out) {
    if (format != "table" && format != "records")
        throw std::invalid_argument("verify: format must be 'table' or 'records'");
    ContextPool pool(resolve_cache_dir(cache_dir));
    VerifyRun run = run_verify(suite, cfg, pool);
    out << (format == "records" ? render_records(suite, cfg, run)
                                : render_table(suite, cfg, run));
    return verify_exit_code(run, cfg.strict);
}

int do_cache(const std::string& action, int p, int m, const std::string& cache_dir,
             std::ostream& out) {
    std::string dir = resolve_cache_dir(cache_dir);
    if (action == "build") {
        WittCtx ctx = WittContext::build(p, m);
        save_context(*ctx, dir);
        out << "cache file written: " << cache_file_path(dir, p, m) << "\n";
        return 0;
    }
    if (action == "inspect") {
        WittCtx ctx = load_context(p, m, dir);
        std::vector<std::string> xy = ctx->xy_names();
        std::vector<std::string> x = ctx->x_names();
        out << "cache file: " << cache_file_path(dir, p, m) << "\n";
        out << "p " << ctx->p << "  m " << ctx->len - 1 << "  length " << ctx->len
            << "\n";
        auto show = [&](const char* label, const ZPoly& f,
                        const std::vector<std::string>& vars) {
            out << label << ": " << f.terms().size()
                << (f.terms().size() == 1 ? " term" : " terms");
            if (f.terms().size() <= 12) out << "  = " << f.str(vars);
            out << "\n";
        };
        for (int n = 0; n < ctx->len; ++n)
            show(("S_" + std::to_string(n)).c_str(), ctx->sum[n], xy);
        for (int n = 0; n < ctx->len; ++n)
            show(("P_" + std::to_string(n)).c_str(), ctx->prod[n], xy);
        for (int n = 0; n < ctx->len; ++n)
            show(("N_" + std::to_string(n)).c_str(), ctx->neg[n], x);
        return 0;
    }
    if (action == "clear") {
        namespace fs = std::filesystem;
        long removed = 0;
        std::error_code ec;
        for (const auto& entry : fs::directory_iterator(dir, ec)) {
            if (!entry.is_regular_file()) continue;
            std::string name = entry.path().filename().string();
            if (name.rfind("w_p", 0) == 0 && name.size() > 4 &&
                name.substr(name.size() - 4) == ".txt") {
                fs::remove(entry.path());
                ++removed;
            }
        }
        out << "cache cleared: " << removed << " file(s) removed from " << dir
            << "\n";
        return 0;
    }
    throw std::invalid_argument("cache: unknown action '" + action + "'");
}

} // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out,
            std::ostream& err) {
    CLI::App app{"Swan conductors of Artin-Schreier-Witt characters over "
                 "F_p((t)), with the symmetric-power and product conductor "
                 "calculus at exceptional valuations"};
    app.require_subcommand(1);

    int p = 2, m = 0, d = 2;
    long i_index = 1, genus = 0, deg_mod = 0;
    std::string alpha, beta, cache_dir;
    bool strict = false;

    auto add_common = [&](CLI::App* sub, bool with_m) {
        sub->add_option("--p", p, "prime of the base field")->required();
        if (with_m)
            sub->add_option("--m", m, "Witt length is m+1")->default_val(0);
        sub->add_option("--cache-dir", cache_dir,
                        "universal-polynomial cache directory");
    };

    CLI::App* swan = app.add_subcommand("swan", "Swan conductor certificate");
    add_common(swan, true);
    swan->add_option("--alpha", alpha, "Witt vector payload")->required();
    swan->add_flag("--strict", strict, "exit 2 when the result is uncertified");

    CLI::App* rsw = app.add_subcommand(
        "rsw", "filtration level and differential witness of a character");
    add_common(rsw, true);
    rsw->add_option("--alpha", alpha, "Witt vector payload")->required();

    CLI::App* lambda = app.add_subcommand(
        "lambda", "pushforward of a character to the symmetric-power chart");
    add_common(lambda, true);
    lambda->add_option("--d", d, "symmetric-power degree")->default_val(2);
    lambda->add_option("--alpha", alpha, "Witt vector payload")->required();

    CLI::App* sympow = app.add_subcommand(
        "sympow-swan", "conductor at the exceptional valuation of the "
                       "symmetric power");
    add_common(sympow, true);
    sympow->add_option("--d", d, "symmetric-power degree")->default_val(2);
    sympow->add_option("--alpha", alpha, "Witt vector payload")->required();
    sympow->add_flag("--strict", strict, "exit 2 when the result is uncertified");

    CLI::App* blprod = app.add_subcommand(
        "blprod-swan", "conductor of an external sum at the blown-up product");
    add_common(blprod, true);
    blprod->add_option("--alpha", alpha, "first Witt vector payload")->required();
    blprod->add_option("--beta", beta, "second Witt vector payload")->required();
    blprod->add_flag("--strict", strict, "exit 2 when the result is uncertified");

    CLI::App* omega = app.add_subcommand(
        "omega-basis", "log-differential basis form on the symmetric chart");
    add_common(omega, false);
    omega->add_option("--d", d, "symmetric-power degree")->default_val(2);
    omega->add_option("--i", i_index, "basis index")->default_val(1);

    CLI::App* mindeg =
        app.add_subcommand("min-degree", "smallest admissible divisor degree");
    mindeg->add_option("--genus", genus, "curve genus")->required();
    mindeg->add_option("--deg-mod", deg_mod, "degree of the modulus")->required();

    std::string suite = "all", p_list = "2,3", d_list = "2,3", format = "table";
    VerifyConfig cfg;
    CLI::App* verify =
        app.add_subcommand("verify", "run a property-verification suite");
    verify->add_option("suite", suite,
                       "witt-ring, fmd-hom, thm-witt, cor-witt2, anbasis, "
                       "blprod, dprod, or all");
    verify->add_option("--p", p_list, "comma-separated primes")->default_val("2,3");
    verify->add_option("--m", cfg.m_max, "largest m (Witt length m+1)")
        ->default_val(2);
    verify->add_option("--d", d_list, "comma-separated symmetric-power degrees")
        ->default_val("2,3");
    verify->add_option("--max-sw", cfg.max_sw, "largest upstream conductor")
        ->default_val(5);
    verify->add_option("--seed", cfg.seed, "seed for the sampled grids")
        ->default_val(7);
    verify->add_flag("--strict", cfg.strict,
                     "fail the run on uncertified results");
    verify->add_option("--format", format, "table or records")
        ->default_val("table");
    verify->add_option("--cache-dir", cache_dir,
                       "universal-polynomial cache directory");

    std::string cache_action;
    CLI::App* cache =
        app.add_subcommand("cache", "manage the universal-polynomial cache");
    cache->add_option("action", cache_action, "build, inspect, or clear")
        ->required()
        ->check(CLI::IsMember({"build", "inspect", "clear"}));
    cache->add_option("--p", p, "prime");
    cache->add_option("--m", m, "Witt length is m+1")->default_val(0);
    cache->add_option("--cache-dir", cache_dir, "cache directory");

    std::vector<std::string> argv_store;
    argv_store.push_back("wittswan");
    argv_store.insert(argv_store.end(), args.begin(), args.end());
    std::vector<const char*> argv;
    argv.reserve(argv_store.size());
    for (const auto& a : argv_store) argv.push_back(a.c_str());

    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e, out, err);
    } catch (const CLI::ParseError& e) {
        app.exit(e, out, err);
        return 1;
    }

    try {
        if (swan->parsed()) return do_swan(p, m, alpha, strict, cache_dir, out);
        if (rsw->parsed()) return do_rsw(p, m, alpha, cache_dir, out);
        if (lambda->parsed()) return do_lambda(p, m, d, alpha, cache_dir, out);
        if (sympow->parsed())
            return do_sympow(p, m, d, alpha, strict, cache_dir, out, err);
        if (blprod->parsed())
            return do_blprod(p, m, alpha, beta, strict, cache_dir, out, err);
        if (omega->parsed())
            return do_omega_basis(p, d, i_index, cache_dir, out);
        if (mindeg->parsed()) {
            out << min_degree_bound(genus, deg_mod) << "\n";
            return 0;
        }
        if (verify->parsed()) {
            cfg.primes = parse_int_list(p_list, "--p");
            cfg.ds = parse_int_list(d_list, "--d");
            return do_verify(suite, cfg, format, cache_dir, out);
        }
        if (cache->parsed())
            return do_cache(cache_action, p, m, cache_dir, out);
        err << "error: no subcommand given\n";
        return 1;
    } catch (const CacheError& e) {
        err << "error: " << e.what() << "\n";
        return 1;
    } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        err << "internal error: " << e.what() << "\n";
        return 2;
    }
}

} // namespace wittswan
