// ktjurina: k-th Milnor and Tjurina numbers of weighted homogeneous
// isolated hypersurface singularities.
//
// Exit codes: 0 all requested checks pass, 1 a check failed or the input was
// rejected, 2 usage error, 3 some requested check is pending (missing data).

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <ktjurina/ktjurina.hpp>

namespace {

using namespace ktjurina;

struct CommonOptions {
    std::string polynomial;
    std::string weights;
    std::string total;
    unsigned kmax = 8;
    std::string format = "table";
    std::string checks;
    std::optional<std::int64_t> bound;
    std::size_t threads = 1;
    std::string gap_data;
    std::string family_table;
};

WeightSystem resolve_weights(const WPolynomial& f, const CommonOptions& o) {
    if (o.weights.empty()) {
        auto inferred = infer_weights(f);
        if (!inferred) throw error("cannot infer weights for " + f.to_string() + ": " + inferred.reason);
        return *inferred.weights;
    }
    auto w = parse_rational_list(o.weights);
    if (w.size() != f.nvars())
        throw error("expected " + std::to_string(f.nvars()) + " weights, got " + std::to_string(w.size()));
    Rational total;
    if (!o.total.empty()) {
        total = parse_rational(o.total);
    } else {
        // weighted degree of the first term
        const auto& m = f.terms().begin()->first;
        total = 0;
        for (std::size_t i = 0; i < w.size(); ++i) total += w[i] * m.exponents[i];
    }
    for (const auto& x : w)
        if (x <= 0) throw inadmissible_weights("weights must be positive");
    if (total <= 0) throw inadmissible_weights("total weight must be positive");
    return WeightSystem::from_rationals(w, total);
}

json read_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw error("cannot open " + path);
    return json::parse(in);
}

struct Tables {
    std::optional<GapTable> gaps;
    std::optional<FamilyTable> families;
};

Tables load_tables(const CommonOptions& o) {
    Tables t;
    if (!o.gap_data.empty()) t.gaps = gap_table_from_json(read_json_file(o.gap_data));
    if (!o.family_table.empty()) t.families = family_table_from_json(read_json_file(o.family_table));
    return t;
}

AnalysisRequest make_request(const WPolynomial& f, const WeightSystem& ws, const CommonOptions& o, const Tables& t) {
    AnalysisRequest req;
    req.f = f;
    req.ws = ws;
    req.kmax = o.kmax;
    req.oracle.quotient.threads = o.threads;
    req.oracle.hard_bound = o.bound;
    req.gaps = t.gaps ? &*t.gaps : nullptr;
    req.families = t.families ? &*t.families : nullptr;
    if (!o.checks.empty()) {
        req.checks.clear();
        std::stringstream ss(o.checks);
        for (std::string item; std::getline(ss, item, ',');) req.checks.insert(check_from_string(item));
    } else {
        // all available
        req.checks = {Check::oracle, Check::theorem_b, Check::koszul};
        if (t.gaps) req.checks.insert(Check::theorem_c);
        if (t.families) req.checks.insert(Check::theorem_d);
    }
    return req;
}

int exit_code_for(const std::vector<InvariantReport>& reports) {
    bool pending = false;
    for (const auto& r : reports)
        for (const auto& v : r.verdicts) {
            if (v.status == Verdict::Status::fail) return 1;
            if (v.status == Verdict::Status::pending) pending = true;
        }
    return pending ? 3 : 0;
}

void print_failures(const std::vector<InvariantReport>& reports) {
    for (const auto& r : reports)
        for (const auto& v : r.verdicts)
            if (v.status == Verdict::Status::fail)
                std::cerr << "FAIL " << r.polynomial << ' ' << v.check << '/' << v.name
                          << (v.index ? " index=" + std::to_string(*v.index) : std::string()) << ' ' << v.detail << '\n';
}

int run_analyze(const CommonOptions& o) {
    const auto f = parse_polynomial(o.polynomial);
    const auto ws = resolve_weights(f, o);
    const auto tables = load_tables(o);
    const auto report = analyze(make_request(f, ws, o, tables));
    std::cout << emit(report, format_from_string(o.format));
    print_failures({report});
    return exit_code_for({report});
}

int run_verify(const CommonOptions& o) {
    const auto tables = load_tables(o);
    const auto format = format_from_string(o.format);
    std::vector<InvariantReport> reports;
    for (const auto& entry : standard_corpus()) {
        const auto f = parse_polynomial(entry.polynomial);
        const auto ws = *infer_weights(f).weights;
        reports.push_back(analyze(make_request(f, ws, o, tables)));
    }
    if (format == Format::json) {
        json all = json::array();
        for (const auto& r : reports) all.push_back(report_to_json(r));
        std::cout << all.dump(2) << '\n';
    } else if (format == Format::csv) {
        std::cout << "polynomial,check,name,status,index\n";
        for (const auto& r : reports)
            for (const auto& v : r.verdicts)
                std::cout << '"' << r.polynomial << "\"," << v.check << ',' << v.name << ',' << to_string(v.status) << ','
                          << (v.index ? std::to_string(*v.index) : std::string()) << '\n';
    } else {
        for (const auto& r : reports) {
            std::size_t pass = 0;
            for (const auto& v : r.verdicts) pass += v.status == Verdict::Status::pass;
            std::cout << std::left << std::setw(22) << r.polynomial << std::setw(16) << r.ws.to_string() << pass << '/'
                      << r.verdicts.size() << " checks pass" << (r.all_pass() ? "" : "  <--") << '\n';
        }
    }
    print_failures(reports);
    return exit_code_for(reports);
}

int run_series(const CommonOptions& o, std::size_t terms) {
    const auto f = parse_polynomial(o.polynomial);
    const auto ws = resolve_weights(f, o);
    const auto tables = load_tables(o);
    OracleOptions oracle;
    oracle.quotient.threads = o.threads;
    oracle.hard_bound = o.bound;

    const auto hilbert = hilbert_from_euler(f, ws);
    const auto ing = weight_ingredients(f, ws);
    // The formula with Z_inf = 0 and no gap numbers: the part fixed by the weights.
    const auto leading = assemble_theorem_c(ing);
    std::vector<Integer> mu, tau;
    for (unsigned k = 0; k <= terms; ++k) {
        mu.emplace_back(mu_oracle(f, ws, k, oracle));
        tau.emplace_back(tau_oracle(f, ws, k, oracle));
    }
    const auto lead_mu = expand(leading.milnor, terms);
    const auto lead_tau = expand(leading.tjurina, terms);

    std::optional<HilbertPoincarePair> theorem_c, theorem_d;
    if (tables.gaps && tables.gaps->count(f.to_string()))
        theorem_c = assemble_theorem_c(extract_ingredients(f, ws, *tables.gaps));
    if (tables.families && tables.families->count(f.to_string()))
        theorem_d = assemble_theorem_d(tables.families->at(f.to_string()), ing.mu0);

    auto coeffs = [](const std::vector<Integer>& v) {
        json a = json::array();
        for (const auto& c : v) a.push_back(json_integer(c));
        return a;
    };
    bool failed = false;
    auto pair_json = [&](const std::optional<HilbertPoincarePair>& p) {
        if (!p) return json{{"status", "pending"}};
        const auto m = verify_against_oracle(p->milnor, [&](std::size_t k) { return mu[k]; }, terms);
        const auto a = verify_against_oracle(p->tjurina, [&](std::size_t k) { return tau[k]; }, terms);
        failed = failed || !m.pass || !a.pass;
        return json{{"milnor", json_series(p->milnor)},
                    {"tjurina", json_series(p->tjurina)},
                    {"milnor_verdict", m.to_string()},
                    {"tjurina_verdict", a.to_string()}};
    };
    std::vector<Integer> res_mu, res_tau;
    for (std::size_t k = 0; k <= terms; ++k) {
        res_mu.push_back(mu[k] - lead_mu[k]);
        res_tau.push_back(tau[k] - lead_tau[k]);
    }
    json out{{"polynomial", f.to_string()},
             {"weights", ws.to_string()},
             {"milnor_algebra", json_series(hilbert)},
             {"milnor_algebra_expansion", coeffs(expand(hilbert, static_cast<std::size_t>(oracle_bound(ws, 0, oracle))))},
             {"mu_oracle", coeffs(mu)},
             {"tau_oracle", coeffs(tau)},
             {"weight_part", {{"milnor", json_series(leading.milnor)}, {"tjurina", json_series(leading.tjurina)}}},
             {"residual_mu", coeffs(res_mu)},
             {"residual_tau", coeffs(res_tau)},
             {"theorem_c", pair_json(theorem_c)},
             {"theorem_d", pair_json(theorem_d)}};

    if (o.format == "json") {
        std::cout << out.dump(2) << '\n';
    } else {
        auto line = [](const std::vector<Integer>& v) {
            std::string s;
            for (const auto& c : v) s += (s.empty() ? "" : " ") + c.str();
            return s;
        };
        std::cout << "f = " << f.to_string() << "   weights " << ws.to_string() << "\n"
                  << "Hilbert series of O/J(f): " << hilbert.to_string() << "\n"
                  << "mu_k  (oracle):  " << line(mu) << "\n"
                  << "tau_k (oracle):  " << line(tau) << "\n"
                  << "weight part M(t): " << leading.milnor.to_string() << "\n"
                  << "weight part A(t): " << leading.tjurina.to_string() << "\n"
                  << "residual mu_k:   " << line(res_mu) << "\n"
                  << "residual tau_k:  " << line(res_tau) << "\n";
        for (const auto& [name, p] : {std::pair{"theorem_c", &theorem_c}, std::pair{"theorem_d", &theorem_d}}) {
            const auto j = pair_json(*p);
            if (!*p) {
                std::cout << name << ": pending (no data supplied)\n";
                continue;
            }
            std::cout << name << " M(t) = " << (*p)->milnor.to_string() << "  [" << j["milnor_verdict"].get<std::string>()
                      << "]\n"
                      << name << " A(t) = " << (*p)->tjurina.to_string() << "  ["
                      << j["tjurina_verdict"].get<std::string>() << "]\n";
        }
    }
    return failed ? 1 : 0;
}

int run_koszul(const CommonOptions& o) {
    const auto f = parse_polynomial(o.polynomial);
    const auto ws = resolve_weights(f, o);
    const auto kc = build_koszul(f, ws);
    const std::int64_t bound = o.bound ? *o.bound : default_hard_bound(ws, 0);
    const auto rows = homology_table(kc, bound);
    bool exact = true;
    for (const auto& r : rows)
        for (std::size_t p = 1; p < r.ranks.size(); ++p) exact = exact && r.ranks[p] == 0;

    if (o.format == "json") {
        json shifts = json::array();
        for (std::size_t p = 0; p <= kc.n(); ++p) shifts.push_back(kc.module(p).generator_shifts);
        json table = json::array();
        for (const auto& r : rows) table.push_back({{"degree", r.degree}, {"homology", r.ranks}});
        std::cout << json{{"polynomial", f.to_string()},
                          {"weights", ws.to_string()},
                          {"shifts", shifts},
                          {"rows", table},
                          {"regular_sequence", exact}}
                         .dump(2)
                  << '\n';
    } else {
        std::cout << "f = " << f.to_string() << "   weights " << ws.to_string() << "\n";
        for (std::size_t p = 0; p <= kc.n(); ++p) {
            std::cout << "F_" << p << " shifts:";
            for (auto s : kc.module(p).generator_shifts) std::cout << ' ' << s;
            std::cout << '\n';
        }
        std::cout << std::setw(6) << "d";
        for (std::size_t p = 0; p <= kc.n(); ++p) std::cout << std::setw(6) << ("H_" + std::to_string(p));
        std::cout << '\n';
        for (const auto& r : rows) {
            bool any = false;
            for (auto x : r.ranks) any = any || x;
            if (!any) continue;
            std::cout << std::setw(6) << r.degree;
            for (auto x : r.ranks) std::cout << std::setw(6) << x;
            std::cout << '\n';
        }
        std::cout << (exact ? "partials form a regular sequence up to degree " : "higher homology found below degree ")
                  << bound << '\n';
    }
    return exact ? 0 : 1;
}

int run_families(const CommonOptions& o) {
    const auto tables = load_tables(o);
    if (!tables.families) {
        std::cout << "families: pending (no family table supplied; pass --table FILE)\n";
        return 3;
    }
    std::vector<InvariantReport> reports;
    for (const auto& [key, fd] : *tables.families) {
        (void)key;
        const auto ws = infer_weights(fd.representative);
        if (!ws) throw error("cannot infer weights for family representative " + fd.representative.to_string());
        AnalysisRequest req = make_request(fd.representative, *ws.weights, o, tables);
        req.checks = {Check::theorem_d};
        reports.push_back(analyze(req));
        const auto& r = reports.back();
        std::cout << "family " << fd.family_id << "  " << r.polynomial << "  " << r.ws.to_string() << '\n';
        if (r.theorem_d) {
            std::cout << "  M(t) = " << r.theorem_d->milnor.to_string() << '\n'
                      << "  A(t) = " << r.theorem_d->tjurina.to_string() << '\n';
        }
        for (const auto& v : r.verdicts) std::cout << "  [" << to_string(v.status) << "] " << v.name << ' ' << v.detail << '\n';
    }
    print_failures(reports);
    return exit_code_for(reports);
}

void add_weight_options(CLI::App* cmd, CommonOptions& o) {
    cmd->add_option("--weights", o.weights, "comma-separated weights w1,...,wn (integers or rationals like 3/2)");
    cmd->add_option("--total", o.total, "total weight W (default: weighted degree of f)");
    cmd->add_option("--bound", o.bound, "override the weighted-degree bound");
    cmd->add_option("--threads", o.threads, "worker threads for degree pieces")->check(CLI::Range(1, 256));
}

void add_data_options(CLI::App* cmd, CommonOptions& o) {
    cmd->add_option("--gap-data", o.gap_data, "JSON file with gap numbers, Z_inf and H_L per polynomial");
    cmd->add_option("--families", o.family_table, "JSON table of three-variable families");
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"k-th Milnor and Tjurina numbers of weighted homogeneous singularities"};
    app.require_subcommand(1);
    CommonOptions o;
    std::size_t terms = 12;

    auto* analyze_cmd = app.add_subcommand("analyze", "profiles of mu_k, tau_k and verification verdicts");
    analyze_cmd->add_option("polynomial", o.polynomial, "e.g. \"x^2 + y^3\"")->required();
    add_weight_options(analyze_cmd, o);
    add_data_options(analyze_cmd, o);
    analyze_cmd->add_option("--kmax", o.kmax, "largest k")->check(CLI::Range(0u, max_kmax));
    analyze_cmd->add_option("--format", o.format, "json|csv|table")->check(CLI::IsMember({"json", "csv", "table"}));
    analyze_cmd->add_option("--checks", o.checks, "comma list of oracle,theorem_b,theorem_c,theorem_d,koszul");

    auto* series_cmd = app.add_subcommand("series", "Hilbert-Poincare series and their expansions");
    series_cmd->add_option("polynomial", o.polynomial)->required();
    add_weight_options(series_cmd, o);
    add_data_options(series_cmd, o);
    series_cmd->add_option("-K,--terms", terms, "number of expansion terms")->check(CLI::Range(0u, max_kmax));
    series_cmd->add_option("--format", o.format, "json|table")->check(CLI::IsMember({"json", "table"}));

    auto* koszul_cmd = app.add_subcommand("koszul", "homology of the graded Koszul complex on the partials");
    koszul_cmd->add_option("polynomial", o.polynomial)->required();
    add_weight_options(koszul_cmd, o);
    koszul_cmd->add_option("--format", o.format, "json|table")->check(CLI::IsMember({"json", "table"}));

    auto* verify_cmd = app.add_subcommand("verify", "regression run over the built-in corpus");
    verify_cmd->add_option("--kmax", o.kmax, "largest k")->check(CLI::Range(0u, max_kmax));
    verify_cmd->add_option("--threads", o.threads, "worker threads for degree pieces")->check(CLI::Range(1, 256));
    verify_cmd->add_option("--format", o.format, "json|csv|table")->check(CLI::IsMember({"json", "csv", "table"}));
    verify_cmd->add_option("--checks", o.checks, "comma list of checks");
    add_data_options(verify_cmd, o);

    auto* families_cmd = app.add_subcommand("families", "series of the three-variable families from a table");
    families_cmd->add_option("--table", o.family_table, "JSON family table");
    families_cmd->add_option("--kmax", o.kmax, "largest k")->check(CLI::Range(0u, max_kmax));
    families_cmd->add_option("--threads", o.threads)->check(CLI::Range(1, 256));

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (*analyze_cmd) return run_analyze(o);
        if (*series_cmd) return run_series(o, terms);
        if (*koszul_cmd) return run_koszul(o);
        if (*verify_cmd) return run_verify(o);
        if (*families_cmd) return run_families(o);
    } catch (const parse_error& e) {
        std::cerr << "parse error: " << e.what() << '\n';
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    }
    return 2;
}
