// wgcalc: exact Weingarten / monotone-Hurwitz / Jucys-Murphy calculator.
// Exit codes: 0 success, 1 verification failure, 2 usage error, 3 bounds.

#include <CLI11.hpp>

#include <iostream>
#include <random>

#include "wgcalc/analysis.hpp"
#include "wgcalc/cache.hpp"
#include "wgcalc/hurwitz.hpp"
#include "wgcalc/io.hpp"
#include "wgcalc/jmops.hpp"
#include "wgcalc/reference_tables.hpp"
#include "wgcalc/weingarten.hpp"

using namespace wgcalc;

namespace {

struct CliOptions {
    RunConfig cfg;
    // wg
    std::string profile = "bt";
    int wg_k = -1;
    std::string pairing;
    int series_order = -1;
    // hurwitz
    std::string genus;
    int n_parts = 0;
    std::string mu_list;
    std::string method = "recursion";
    // jack
    std::string partition_list;
    // verify / sweep
    std::string suite;
    int verify_k = 4;
    std::string g_list = "0,1/2,1,3/2";
    int n_max = 3;
    int max_size = 8;
    std::string b_list = "1,2,-2";
};

std::vector<Rational> parse_b_list(const std::string& s) {
    std::vector<Rational> out;
    std::stringstream ss(s);
    std::string item;
    while (std::getline(ss, item, ','))
        if (!item.empty()) out.push_back(rat_from_string(item));
    return out;
}

std::vector<int> parse_g2_list(const std::string& s) {
    std::vector<int> out;
    std::stringstream ss(s);
    std::string item;
    while (std::getline(ss, item, ','))
        if (!item.empty()) out.push_back(parse_genus2(item));
    return out;
}

int run_wg(const CliOptions& opt) {
    Profile profile = profile_from_name(opt.profile);
    if (!opt.pairing.empty()) {
        PairPartition m = PairPartition::parse(opt.pairing);
        if (m.k() > opt.cfg.k_max)
            throw ParameterOutOfRange("pairing level exceeds the configured bound");
        const RatFrac& value = wg_solve(m.k(), profile).value(m);
        if (opt.cfg.format == "json") {
            Json out{{"pairing", m.str()},
                     {"coset_type", to_json(m.coset_type())},
                     {"num", to_json(value.num())},
                     {"den", to_json(value.den())}};
            std::cout << out.dump(1) << "\n";
        } else {
            std::cout << "Wg[" << opt.profile << "](" << m.str() << ") = " << value.str() << "\n";
        }
        return 0;
    }
    int k = opt.wg_k;
    if (k < 0) throw CLI::ValidationError("wg", "one of --k or --pairing is required");
    if (k > opt.cfg.k_max) throw ParameterOutOfRange("level exceeds the configured bound");
    const auto& table = wg_solve(k, profile);

    if (opt.series_order >= 0) {
        bool deformed_t = b_edge_carries_M(profile);
        Json jrows = Json::array();
        for (const auto& [ty, value] : table.classes) {
            RatFrac f = value;
            if (deformed_t)
                f = substitute(f, {{Var::M, RatFrac(var_N(), MPoly(1) - var_t())}});
            TruncSeries s = series_at_infinity(f, opt.series_order);
            if (opt.cfg.format == "json") {
                Json coeffs = Json::array();
                for (const auto& c : s.coeff) coeffs.push_back(to_json(c));
                jrows.push_back(Json{{"coset_type", to_json(ty)}, {"coeffs", coeffs}});
            } else {
                std::cout << "coset-type " << ty.str() << ", coefficients of N^0..N^-"
                          << opt.series_order << ":\n";
                for (int r = 0; r <= s.order(); ++r)
                    std::cout << "  [N^-" << r << "] " << s.at(r).str() << "\n";
            }
        }
        if (opt.cfg.format == "json") std::cout << jrows.dump(1) << "\n";
        return 0;
    }

    if (opt.cfg.format == "json") {
        Json jrows = Json::array();
        for (const auto& [ty, value] : table.classes)
            jrows.push_back(Json{{"coset_type", to_json(ty)},
                                 {"num", to_json(value.num())},
                                 {"den", to_json(value.den())}});
        std::cout << jrows.dump(1) << "\n";
    } else {
        for (const auto& [ty, value] : table.classes)
            std::cout << "coset-type " << ty.str() << ": " << value.str() << "\n";
    }
    return 0;
}

int run_hurwitz(const CliOptions& opt) {
    int g2 = parse_genus2(opt.genus);
    std::vector<int> mu = parse_int_list(opt.mu_list);
    if (static_cast<int>(mu.size()) != opt.n_parts)
        throw CLI::ValidationError("hurwitz", "n does not match the number of parts in mu");
    Partition sorted(mu);
    if (sorted.size() > opt.cfg.mu_max)
        throw ParameterOutOfRange("|mu| exceeds the configured bound");

    ResultCache cache(opt.cfg.cache_dir);
    std::string key = "hurwitz/" + opt.method + "/g2=" + std::to_string(g2) + "/mu=" +
                      [&] {
                          std::string s;
                          for (int part : sorted.parts()) s += std::to_string(part) + ".";
                          return s;
                      }();
    MPoly value;
    if (auto hit = cache.load(key)) {
        value = mpoly_from_json(*hit);
    } else {
        if (opt.method == "recursion") {
            value = hurwitz_H2(g2, sorted);
        } else if (opt.method == "enum") {
            int r = sorted.size() + g2 - 2 + sorted.length();
            if (r > opt.cfg.r_max)
                throw ParameterOutOfRange("enumeration length exceeds the configured r_max");
            // direct enumeration branches like (2|mu|)^r; refuse hopeless keys
            if (2 * sorted.size() + r > 18)
                throw ParameterOutOfRange(
                    "key too large for direct enumeration; use --method recursion");
            value = hurwitz_H2_enum(g2, sorted);
        } else if (opt.method == "jack") {
            int r = sorted.size() + g2 - 2 + sorted.length();
            if (r < 0) {
                value = MPoly(0);
            } else {
                // connected numbers through the log of the Jack-side series:
                // log(Z) cell (k, r) holds sum H p_mu/((b+1)^n prod m_j!)
                ZSeries z = z_truncated_jack(sorted.size(), std::max(r, 1));
                ZSeries logz = zs_log(z, z.kmax, z.rmax);
                MPoly bp1 = var_b() + 1;
                Integer mults = 1;
                for (int v = 1; v <= sorted.size(); ++v) {
                    int m = sorted.multiplicity(v);
                    if (m > 1) mults *= factorial(m);
                }
                RatFrac c = logz.cell(sorted.size(), r).coeff(sorted) *
                            RatFrac(bp1.pow(sorted.length()) * MPoly(Rational(mults)));
                value = c.as_polynomial();
            }
        } else if (opt.method == "all") {
            value = hurwitz_H2(g2, sorted);
            MPoly via_enum = hurwitz_H2_enum(g2, sorted);
            if (value != via_enum) {
                std::cerr << "method cross-check failed: recursion vs enumeration\n";
                return 1;
            }
        } else {
            throw CLI::ValidationError("hurwitz", "unknown method " + opt.method);
        }
        cache.store(key, to_json(value));
    }

    if (opt.cfg.format == "json")
        std::cout << to_json(value).dump(1) << "\n";
    else if (opt.cfg.format == "csv")
        std::cout << hurwitz_csv_row(g2, sorted, value) << "\n";
    else
        std::cout << "H[g=" << genus_string(g2) << ", mu=" << sorted.str()
                  << "] = " << value.str() << "\n";
    return 0;
}

int run_jack(const CliOptions& opt) {
    Partition la(parse_int_list(opt.partition_list));
    if (la.size() > opt.cfg.jack_bound)
        throw DegreeBoundExceeded("|lambda| exceeds the configured Jack degree bound");
    SymFunc J = jack(la);
    if (opt.cfg.format == "json")
        std::cout << to_json(J).dump(1) << "\n";
    else
        std::cout << "J_" << la.str() << " = " << J.str() << "\n";
    return 0;
}

int run_verify_jm(const CliOptions& opt) {
    int kmax = opt.verify_k;
    if (opt.cfg.expensive && kmax < 5) kmax = 5;
    if (kmax > 5) throw ParameterOutOfRange("jm suite supports k <= 5");
    if (kmax == 5 && !opt.cfg.expensive)
        throw ParameterOutOfRange("k = 5 requires --expensive (multi-minute run)");
    int failures = 0;
    Json records = Json::array();
    for (int k = 1; k <= kmax; ++k) {
        for (const auto& res : verify_suite(k)) {
            if (opt.cfg.format == "json") {
                Json rec{{"check", res.name},
                         {"k", k},
                         {"status", res.pass ? "pass" : "fail"},
                         {"class", res.theorem ? "theorem" : "conjecture"}};
                if (!res.witness.empty()) rec["witness"] = res.witness;
                records.push_back(rec);
            } else {
                std::cout << (res.pass ? "pass" : "FAIL") << "  [k=" << k << "] " << res.name
                          << (res.theorem ? " (theorem)" : "")
                          << (res.witness.empty() ? "" : "  -- " + res.witness) << "\n";
            }
            if (!res.pass) ++failures;
        }
    }
    if (opt.cfg.format == "json")
        std::cout << records.dump(1) << "\n";
    else
        std::cout << (failures ? "FAIL" : "pass") << "  jm suite up to k = " << kmax << "\n";
    return failures ? 1 : 0;
}

int run_verify_virasoro(const CliOptions& opt) {
    int kmax = std::min(opt.cfg.mu_max, 4);
    int failures = 0;
    for (int m = 1; m <= 3; ++m) {
        ZSeries res = virasoro_residual(m, kmax);
        bool ok = res.cells.empty();
        std::cout << (ok ? "pass" : "FAIL") << "  L_" << m
                  << " annihilates the truncation (k_max = " << kmax << ")\n";
        if (!ok) ++failures;
    }
    std::mt19937 rng(20240817);
    std::uniform_int_distribution<int> coin(0, 2), coef(-4, 4);
    ZSeries s;
    s.exact = true;
    for (int k = 0; k <= 3; ++k)
        for (int r = 0; r <= 3; ++r) {
            SymFunc f;
            for (const auto& mu : partitions_max_length(3, 3))
                if (coin(rng) == 0) f.add_term(mu, RatFrac(Rational(coef(rng))));
            if (!f.is_zero()) s.add_cell(k, r, f);
        }
    for (int m = 1; m <= 4; ++m) {
        for (int n = m + 1; n <= 4; ++n) {
            ZSeries lhs = apply_virasoro({m, true}, apply_virasoro({n, true}, s));
            ZSeries rhs = apply_virasoro({n, true}, apply_virasoro({m, true}, s));
            ZSeries comm = apply_virasoro({m + n, true}, s);
            for (auto& [kr, f] : comm.cells) f *= RatFrac(Rational(m - n));
            ZSeries diff = lhs;
            for (const auto& [kr, f] : rhs.cells) diff.add_cell(kr.first, kr.second, -f);
            bool ok = true;
            for (const auto& [kr, f] : diff.cells)
                if (!(f == comm.cell(kr.first, kr.second))) ok = false;
            for (const auto& [kr, f] : comm.cells)
                if (!(f == diff.cell(kr.first, kr.second))) ok = false;
            std::cout << (ok ? "pass" : "FAIL") << "  [L_" << m << ", L_" << n << "] = ("
                      << m - n << ") L_" << m + n << "\n";
            if (!ok) ++failures;
        }
    }
    return failures ? 1 : 0;
}

int run_verify_tables(const CliOptions& opt) {
    int failures = 0;
    for (const auto& row : reference_tables_all()) {
        Partition mu(row.mu);
        MPoly scale(1);
        for (int part : mu.parts()) scale *= MPoly(part);
        MPoly computed = hurwitz_H2(row.g2, mu) * scale;
        bool ok = computed == row.scaled_value;
        if (!ok || opt.cfg.format == "text")
            std::cout << (ok ? "pass" : "FAIL") << "  g=" << genus_string(row.g2) << " mu="
                      << mu.str() << "\n";
        if (opt.cfg.format == "csv")
            std::cout << hurwitz_csv_row(row.g2, mu, computed) << "\n";
        if (!ok) ++failures;
    }
    std::cout << (failures ? "FAIL" : "pass") << "  table reproduction\n";
    return failures ? 1 : 0;
}

int run_sweep(const CliOptions& opt, bool quiet_rows) {
    SweepReport rep =
        sweep(parse_g2_list(opt.g_list), opt.n_max, opt.max_size, parse_b_list(opt.b_list));
    if (opt.cfg.format == "csv" || !quiet_rows) {
        std::cout << "g,n,mu,b,real_rooted,interlacing_pass,witness\n";
        for (const auto& row : rep.rows) {
            if (row.skipped) continue;
            std::string mu_str;
            for (int i = 0; i < row.mu.length(); ++i) {
                if (i) mu_str += " ";
                mu_str += std::to_string(row.mu.parts()[i]);
            }
            std::cout << genus_string(row.g2) << "," << row.mu.length() << "," << mu_str << ","
                      << to_string(row.b) << "," << (row.real_rooted ? 1 : 0) << ","
                      << (row.interlacing ? 1 : 0) << "," << row.witness << "\n";
        }
    }
    std::cout << (rep.failures ? "FAIL" : "pass") << "  " << rep.checked << " root checks, "
              << rep.failures << " failures\n";
    return rep.failures ? 1 : 0;
}

} // namespace

int main(int argc, char** argv) {
    CliOptions opt;
    opt.cfg = load_config_from_env();

    CLI::App app{"exact Weingarten calculus, bt-monotone Hurwitz numbers, and "
                 "b-deformed Jucys-Murphy operators"};
    app.require_subcommand(1);
    app.fallthrough(); // global options may follow the subcommand
    app.add_option("--format", opt.cfg.format, "output format: text|json|csv");
    app.add_option("--cache-dir", opt.cfg.cache_dir, "result cache directory");
    app.add_flag("--expensive", opt.cfg.expensive, "enable multi-minute verifications (k = 5)");

    auto* wg = app.add_subcommand("wg", "Weingarten function values and expansions");
    wg->add_option("--profile", opt.profile, "graph profile: o|a|b|bt")->capture_default_str();
    wg->add_option("--k", opt.wg_k, "level: all values of P_k");
    wg->add_option("--pairing", opt.pairing, "single pair partition, e.g. \"(1 3|2 4)\"");
    wg->add_option("--series", opt.series_order, "expand to this order in 1/N");

    auto* hw = app.add_subcommand("hurwitz", "connected bt-monotone Hurwitz numbers");
    hw->add_option("g", opt.genus, "genus, e.g. 0, 1/2, 1, 3/2")->required();
    hw->add_option("n", opt.n_parts, "number of parts")->required();
    hw->add_option("mu", opt.mu_list, "comma-separated parts, e.g. 2,1")->required();
    hw->add_option("--method", opt.method, "recursion|enum|jack|all")->capture_default_str();

    auto* jk = app.add_subcommand("jack", "Jack function in the power-sum basis");
    jk->add_option("--partition", opt.partition_list, "comma-separated parts")->required();

    auto* vf = app.add_subcommand("verify", "verification suites");
    vf->add_option("suite", opt.suite, "jm|virasoro|tables|roots")->required();
    vf->add_option("--k", opt.verify_k, "Jucys-Murphy level bound")->capture_default_str();
    vf->add_option("--g", opt.g_list, "genus list for roots")->capture_default_str();
    vf->add_option("--n", opt.n_max, "max number of parts for roots")->capture_default_str();
    vf->add_option("--max-size", opt.max_size, "max |mu| for roots")->capture_default_str();
    vf->add_option("--b", opt.b_list, "b values for roots")->capture_default_str();

    auto* jmv = app.add_subcommand("jm-verify", "alias of `verify jm`");
    jmv->add_option("--k", opt.verify_k, "level bound")->capture_default_str();

    auto* sw = app.add_subcommand("sweep", "real-rootedness and interlacing sweep");
    sw->add_option("--g", opt.g_list, "genus list, e.g. 0,1/2,1")->capture_default_str();
    sw->add_option("--n-max", opt.n_max, "max number of parts")->capture_default_str();
    sw->add_option("--max-size", opt.max_size, "max |mu|")->capture_default_str();
    sw->add_option("--b", opt.b_list, "comma-separated rational b values")->capture_default_str();

    auto* ca = app.add_subcommand("cache", "result cache maintenance");
    std::string cache_action = "ls";
    ca->add_option("action", cache_action, "ls|gc")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int rc = app.exit(e);
        return rc == 0 ? 0 : 2;
    }

    try {
        opt.cfg.validate();
        if (wg->parsed()) return run_wg(opt);
        if (hw->parsed()) return run_hurwitz(opt);
        if (jk->parsed()) return run_jack(opt);
        if (jmv->parsed()) return run_verify_jm(opt);
        if (vf->parsed()) {
            if (opt.suite == "jm") return run_verify_jm(opt);
            if (opt.suite == "virasoro") return run_verify_virasoro(opt);
            if (opt.suite == "tables") return run_verify_tables(opt);
            if (opt.suite == "roots") return run_sweep(opt, true);
            throw CLI::ValidationError("verify", "unknown suite " + opt.suite);
        }
        if (sw->parsed()) return run_sweep(opt, false);
        if (ca->parsed()) {
            ResultCache cache(opt.cfg.cache_dir);
            if (cache_action == "ls") {
                for (const auto& key : cache.list()) std::cout << key << "\n";
                return 0;
            }
            if (cache_action == "gc") {
                std::cout << "removed " << cache.gc() << " invalid records\n";
                return 0;
            }
            throw CLI::ValidationError("cache", "unknown action " + cache_action);
        }
    } catch (const CLI::Error& e) {
        std::cerr << e.what() << "\n";
        return 2;
    } catch (const ParameterOutOfRange& e) {
        std::cerr << "bounds: " << e.what() << "\n";
        return 3;
    } catch (const DegreeBoundExceeded& e) {
        std::cerr << "bounds: " << e.what() << "\n";
        return 3;
    } catch (const ParseError& e) {
        std::cerr << "usage: " << e.what() << "\n";
        return 2;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 2;
}
