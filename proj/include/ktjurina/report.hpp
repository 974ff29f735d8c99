#pragma once

/*
 * End-to-end analysis of one singularity: oracle profiles for k = 0..kmax,
 * closed forms, assembled series, and the verdicts of each requested check.
 * Also the JSON readers for transcribed gap data and family tables, and the
 * json / csv / table writers.
 */

#include <cstddef>
#include <cstdint>
#include <iomanip>
#include <map>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "error.hpp"
#include "gradedlin.hpp"
#include "invariants.hpp"
#include "koszul.hpp"
#include "parse.hpp"
#include "series.hpp"
#include "wpoly.hpp"

namespace ktjurina {

enum class Check { oracle, theorem_b, theorem_c, theorem_d, koszul };

inline const std::vector<std::pair<Check, std::string>>& check_names() {
    static const std::vector<std::pair<Check, std::string>> names{
        {Check::oracle, "oracle"},       {Check::theorem_b, "theorem_b"}, {Check::theorem_c, "theorem_c"},
        {Check::theorem_d, "theorem_d"}, {Check::koszul, "koszul"},
    };
    return names;
}

inline std::string to_string(Check c) {
    for (const auto& [k, name] : check_names())
        if (k == c) return name;
    return "?";
}

inline Check check_from_string(const std::string& s) {
    for (const auto& [k, name] : check_names())
        if (name == s) return k;
    throw error("unknown check '" + s + "'");
}

using FamilyTable = std::map<std::string, FamilyData3>;

inline constexpr unsigned max_kmax = 64;

struct AnalysisRequest {
    WPolynomial f;
    WeightSystem ws;
    unsigned kmax = 8;
    std::set<Check> checks{Check::oracle, Check::theorem_b, Check::koszul};
    OracleOptions oracle;
    const GapTable* gaps = nullptr;
    const FamilyTable* families = nullptr;
};

struct ProfileRow {
    unsigned k = 0;
    std::size_t mu = 0;      // oracle
    std::size_t tau = 0;     // oracle
    std::size_t jet = 0;     // oracle
    std::size_t tangent = 0; // tau - jet
    Integer jet_closed;
    std::optional<Integer> theorem_b_mu; // present for k <= m0
    std::optional<Integer> theorem_b_tau;
};

struct Verdict {
    std::string check;
    std::string name;
    enum class Status { pass, fail, pending } status = Status::pass;
    std::string detail;
    std::optional<std::size_t> index; // first failing k or degree
    std::optional<Integer> expected;
    std::optional<Integer> actual;
};

inline std::string to_string(Verdict::Status s) {
    switch (s) {
    case Verdict::Status::pass: return "pass";
    case Verdict::Status::fail: return "fail";
    case Verdict::Status::pending: return "pending";
    }
    return "?";
}

struct InvariantReport {
    std::string polynomial;
    WeightSystem ws;
    std::size_t n = 0;
    Integer mu0;
    MultiplicityData mult;
    unsigned kmax = 0;
    std::vector<ProfileRow> profiles;
    RationalFunctionSeries milnor_algebra_series;
    std::optional<HilbertPoincarePair> theorem_c;
    std::optional<HilbertPoincarePair> theorem_d;
    std::vector<Verdict> verdicts;

    bool all_pass() const {
        for (const auto& v : verdicts)
            if (v.status != Verdict::Status::pass) return false;
        return true;
    }
};

namespace detail {

inline Verdict sequence_verdict(std::string check, std::string name, const VerificationReport& r) {
    Verdict v{std::move(check), std::move(name)};
    if (!r.pass) {
        v.status = Verdict::Status::fail;
        v.index = r.first_mismatch;
        v.expected = r.expected;
        v.actual = r.actual;
        v.detail = r.to_string();
    }
    return v;
}

inline std::vector<Integer> column(const std::vector<ProfileRow>& rows, std::size_t ProfileRow::*field) {
    std::vector<Integer> out;
    for (const auto& r : rows) out.emplace_back(r.*field);
    return out;
}

inline void add_series_verdicts(InvariantReport& rep, const std::string& check, const HilbertPoincarePair& s) {
    const std::size_t K = rep.kmax;
    rep.verdicts.push_back(sequence_verdict(check, "milnor_series_vs_oracle",
                                            verify_against_oracle(s.milnor, [&](std::size_t k) { return Integer(rep.profiles[k].mu); }, K)));
    rep.verdicts.push_back(sequence_verdict(check, "tjurina_series_vs_oracle",
                                            verify_against_oracle(s.tjurina, [&](std::size_t k) { return Integer(rep.profiles[k].tau); }, K)));
    const RationalFunctionSeries shift(IntPoly::monomial(2), IntPoly::one_minus_t_pow(rep.n + 1));
    Verdict id{check, "difference_identity"};
    if (!(s.tjurina == s.milnor - shift)) {
        id.status = Verdict::Status::fail;
        id.detail = "A(t) != M(t) - t^2/(1-t)^(n+1)";
    }
    rep.verdicts.push_back(std::move(id));
}

} // namespace detail

inline InvariantReport analyze(const AnalysisRequest& req) {
    if (req.kmax > max_kmax) throw error("kmax must not exceed " + std::to_string(max_kmax));
    const auto& f = req.f;
    const auto& ws = req.ws;
    if (f.is_zero()) throw error("the zero polynomial has no singularity invariants");
    if (!is_weighted_homogeneous(f, ws))
        throw not_weighted_homogeneous(f.to_string() + " is not weighted homogeneous of type " + ws.to_string());

    ClosedFormContext ctx(f, ws);
    InvariantReport rep;
    rep.polynomial = f.to_string();
    rep.ws = ws;
    rep.n = f.nvars();
    rep.mu0 = ctx.mu0;
    rep.mult = ctx.mult;
    rep.kmax = req.kmax;
    rep.milnor_algebra_series = hilbert_from_euler(ws);

    for (unsigned k = 0; k <= req.kmax; ++k) {
        ProfileRow row;
        row.k = k;
        row.mu = mu_oracle(f, ws, k, req.oracle);
        row.tau = tau_oracle(f, ws, k, req.oracle);
        row.jet = jet_oracle(f, ws, k, req.oracle);
        row.tangent = row.tau - row.jet;
        row.jet_closed = jet_dim_closed(rep.n, ctx.mult.m0, k);
        if (k <= ctx.mult.m0) {
            row.theorem_b_mu = theorem_b_mu(ctx, k);
            row.theorem_b_tau = theorem_b_tau(ctx, k);
        }
        rep.profiles.push_back(std::move(row));
    }
    const auto mu = detail::column(rep.profiles, &ProfileRow::mu);
    const auto tau = detail::column(rep.profiles, &ProfileRow::tau);
    const auto n = static_cast<std::int64_t>(rep.n);

    if (req.checks.count(Check::oracle)) {
        rep.verdicts.push_back(detail::sequence_verdict("oracle", "milnor_orlik",
                                                        verify_sequence({Integer(rep.profiles[0].mu)}, [&](std::size_t) { return rep.mu0; })));
        rep.verdicts.push_back(detail::sequence_verdict("oracle", "tau0_equals_mu0",
                                                        verify_sequence({tau[0]}, [&](std::size_t) { return mu[0]; })));
        Verdict mono{"oracle", "tau_le_mu_nondecreasing"};
        for (std::size_t k = 0; k < mu.size(); ++k) {
            const bool bad = tau[k] > mu[k] || (k && (mu[k] < mu[k - 1] || tau[k] < tau[k - 1]));
            if (bad) {
                mono.status = Verdict::Status::fail;
                mono.index = k;
                mono.detail = "tau/mu profile not monotone or tau > mu at k = " + std::to_string(k);
                break;
            }
        }
        rep.verdicts.push_back(std::move(mono));
        rep.verdicts.push_back(detail::sequence_verdict(
            "oracle", "difference_law", verify_sequence(detail::column(rep.profiles, &ProfileRow::tau),
                                                        [&](std::size_t k) { return mu[k] - binom(static_cast<std::int64_t>(k) - 2 + n, n); })));
        std::vector<Integer> jet_closed;
        for (const auto& r : rep.profiles) jet_closed.push_back(r.jet_closed);
        rep.verdicts.push_back(detail::sequence_verdict(
            "oracle", "jet_closed_form",
            verify_sequence(jet_closed, [&](std::size_t k) { return Integer(rep.profiles[k].jet); })));
    }

    if (req.checks.count(Check::theorem_b)) {
        std::vector<Integer> bmu, btau;
        for (const auto& r : rep.profiles) {
            if (!r.theorem_b_mu) break;
            bmu.push_back(*r.theorem_b_mu);
            btau.push_back(*r.theorem_b_tau);
        }
        rep.verdicts.push_back(detail::sequence_verdict("theorem_b", "mu_closed_form",
                                                        verify_sequence(bmu, [&](std::size_t k) { return mu[k]; })));
        rep.verdicts.push_back(detail::sequence_verdict("theorem_b", "tau_closed_form",
                                                        verify_sequence(btau, [&](std::size_t k) { return tau[k]; })));
    }

    if (req.checks.count(Check::koszul)) {
        const auto kc = build_koszul(f, ws);
        const std::int64_t bound = oracle_bound(ws, 0, req.oracle);
        Verdict squares{"koszul", "boundary_squares_to_zero"};
        Verdict exact{"koszul", "higher_homology_vanishes"};
        std::vector<Integer> h0;
        for (std::int64_t d = 0; d <= bound; ++d) {
            for (std::size_t p = 1; p < kc.n(); ++p)
                if (squares.status == Verdict::Status::pass && !kc.boundary_squares_to_zero(p, d)) {
                    squares.status = Verdict::Status::fail;
                    squares.index = static_cast<std::size_t>(d);
                    squares.detail = "d_" + std::to_string(p) + " o d_" + std::to_string(p + 1) + " != 0 in degree " + std::to_string(d);
                }
            for (std::size_t p = 1; p <= kc.n(); ++p)
                if (exact.status == Verdict::Status::pass && kc.homology_rank(p, d) != 0) {
                    exact.status = Verdict::Status::fail;
                    exact.index = static_cast<std::size_t>(d);
                    exact.detail = "H_" + std::to_string(p) + " nonzero in degree " + std::to_string(d);
                }
            h0.emplace_back(kc.homology_rank(0, d));
        }
        rep.verdicts.push_back(std::move(squares));
        rep.verdicts.push_back(std::move(exact));
        rep.verdicts.push_back(detail::sequence_verdict(
            "koszul", "euler_series_vs_h0",
            verify_against_oracle(rep.milnor_algebra_series, [&](std::size_t d) { return h0[d]; }, h0.size() - 1)));
        std::map<std::int64_t, std::size_t> hf;
        for (const auto& [d, dim] : milnor_hilbert_profile(f, ws, req.oracle)) hf[d] = dim;
        rep.verdicts.push_back(detail::sequence_verdict(
            "koszul", "euler_series_vs_milnor_profile",
            verify_against_oracle(rep.milnor_algebra_series,
                                  [&](std::size_t d) {
                                      auto it = hf.find(static_cast<std::int64_t>(d));
                                      return Integer(it == hf.end() ? 0 : it->second);
                                  },
                                  static_cast<std::size_t>(bound))));
        Verdict at_one{"koszul", "euler_series_at_one"};
        const auto v = rep.milnor_algebra_series.value_at_one();
        if (!v || *v != Rational(rep.mu0)) {
            at_one.status = Verdict::Status::fail;
            at_one.expected = rep.mu0;
            at_one.detail = "Hilbert series of the Milnor algebra does not evaluate to mu0 at t = 1";
        }
        rep.verdicts.push_back(std::move(at_one));
    }

    if (req.checks.count(Check::theorem_c)) {
        if (req.gaps && req.gaps->count(rep.polynomial)) {
            rep.theorem_c = assemble_theorem_c(extract_ingredients(f, ws, *req.gaps));
            detail::add_series_verdicts(rep, "theorem_c", *rep.theorem_c);
        } else {
            rep.verdicts.push_back({"theorem_c", "series_vs_oracle", Verdict::Status::pending,
                                    "gap data (L_i, Z_inf, H_L) not supplied for this polynomial"});
        }
    }

    if (req.checks.count(Check::theorem_d)) {
        const FamilyData3* fd = nullptr;
        if (req.families) {
            auto it = req.families->find(rep.polynomial);
            if (it != req.families->end()) fd = &it->second;
        }
        if (fd && rep.n == 3) {
            rep.theorem_d = assemble_theorem_d(*fd, rep.mu0);
            detail::add_series_verdicts(rep, "theorem_d", *rep.theorem_d);
        } else {
            rep.verdicts.push_back({"theorem_d", "series_vs_oracle", Verdict::Status::pending,
                                    "no three-variable family table entry for this polynomial"});
        }
    }
    return rep;
}

// ---------------------------------------------------------------------------
// JSON

using json = nlohmann::ordered_json;

// Integers beyond 2^53 - 1 become decimal strings.
inline json json_integer(const Integer& v) {
    static const Integer limit = (Integer(1) << 53) - 1;
    if (abs(v) <= limit) return static_cast<std::int64_t>(v);
    return v.str();
}

inline json json_series(const RationalFunctionSeries& s) {
    json num = json::array(), den = json::array();
    for (const auto& c : s.numerator().coefficients()) num.push_back(json_integer(c));
    for (const auto& c : s.denominator().coefficients()) den.push_back(json_integer(c));
    return {{"numerator", num}, {"denominator", den}};
}

inline Integer integer_from_json(const json& j) {
    if (j.is_string()) return Integer(j.get<std::string>());
    if (j.is_number_integer()) return Integer(j.get<std::int64_t>());
    throw error("expected an integer in JSON, got " + j.dump());
}

inline RationalFunctionSeries series_from_json(const json& j) {
    std::vector<Integer> num, den;
    for (const auto& c : j.at("numerator")) num.push_back(integer_from_json(c));
    for (const auto& c : j.at("denominator")) den.push_back(integer_from_json(c));
    return {IntPoly(std::move(num)), IntPoly(std::move(den))};
}

/*
 * {"entries": [{"polynomial": "...", "gap_numbers": [..],
 *               "z_inf": <series>, "h": [<series>, ...]}]}
 * where <series> is {"numerator": [c0, c1, ...], "denominator": [...]}.
 */
inline GapTable gap_table_from_json(const json& j) {
    GapTable table;
    for (const auto& e : j.at("entries")) {
        GapData g;
        for (const auto& L : e.at("gap_numbers")) g.gap_numbers.push_back(L.get<std::int64_t>());
        if (e.contains("z_inf")) g.z_inf = series_from_json(e.at("z_inf"));
        if (e.contains("h"))
            for (const auto& h : e.at("h")) g.h_series.push_back(series_from_json(h));
        table[parse_polynomial(e.at("polynomial").get<std::string>()).to_string()] = std::move(g);
    }
    return table;
}

// {"families": [{"id": 1..7, "representative": "...", "l": <series>}]}
inline FamilyTable family_table_from_json(const json& j) {
    FamilyTable table;
    for (const auto& e : j.at("families")) {
        FamilyData3 fd;
        fd.family_id = e.at("id").get<int>();
        if (fd.family_id < 1 || fd.family_id > 7) throw error("family ids run from 1 to 7");
        fd.representative = parse_polynomial(e.at("representative").get<std::string>(), 3);
        fd.l_series = series_from_json(e.at("l"));
        table[fd.representative.to_string()] = std::move(fd);
    }
    return table;
}

inline json report_to_json(const InvariantReport& r) {
    json weights = json::array();
    for (auto w : r.ws.weights()) weights.push_back(w);
    json mi = json::array(), mij = json::array();
    for (auto m : r.mult.mi) mi.push_back(m);
    for (const auto& row : r.mult.mij) mij.push_back(row);

    json profiles = json::array();
    for (const auto& p : r.profiles) {
        json row{{"k", p.k},
                 {"mu", p.mu},
                 {"tau", p.tau},
                 {"jet", p.jet},
                 {"tangent", p.tangent},
                 {"source", "oracle"},
                 {"closed_form",
                  {{"jet", json_integer(p.jet_closed)},
                   {"theorem_b_valid", p.theorem_b_mu.has_value()},
                   {"theorem_b_mu", p.theorem_b_mu ? json_integer(*p.theorem_b_mu) : json(nullptr)},
                   {"theorem_b_tau", p.theorem_b_tau ? json_integer(*p.theorem_b_tau) : json(nullptr)}}}};
        profiles.push_back(std::move(row));
    }

    json series{{"milnor_algebra", json_series(r.milnor_algebra_series)}};
    auto pair_json = [](const std::optional<HilbertPoincarePair>& p) {
        if (!p) return json(nullptr);
        return json{{"milnor", json_series(p->milnor)}, {"tjurina", json_series(p->tjurina)}};
    };
    series["theorem_c"] = pair_json(r.theorem_c);
    series["theorem_d"] = pair_json(r.theorem_d);

    json verdicts = json::array();
    for (const auto& v : r.verdicts) {
        verdicts.push_back({{"check", v.check},
                            {"name", v.name},
                            {"status", to_string(v.status)},
                            {"index", v.index ? json(*v.index) : json(nullptr)},
                            {"expected", v.expected ? json_integer(*v.expected) : json(nullptr)},
                            {"actual", v.actual ? json_integer(*v.actual) : json(nullptr)},
                            {"detail", v.detail}});
    }

    return {{"schema", "ktjurina.report/1"},
            {"polynomial", r.polynomial},
            {"weights", {{"w", weights}, {"total", r.ws.total()}}},
            {"n", r.n},
            {"mu0", json_integer(r.mu0)},
            {"multiplicities", {{"m0", r.mult.m0}, {"mi", mi}, {"mij", mij}, {"c", r.mult.c}, {"wmax", r.mult.wmax}}},
            {"kmax", r.kmax},
            {"profiles", profiles},
            {"series", series},
            {"verdicts", verdicts},
            {"all_pass", r.all_pass()}};
}

enum class Format { json, csv, table };

inline Format format_from_string(const std::string& s) {
    if (s == "json") return Format::json;
    if (s == "csv") return Format::csv;
    if (s == "table") return Format::table;
    throw error("unknown format '" + s + "'");
}

inline std::string emit(const InvariantReport& r, Format format) {
    std::ostringstream os;
    auto opt = [](const std::optional<Integer>& v) { return v ? v->str() : std::string(); };
    switch (format) {
    case Format::json:
        os << report_to_json(r).dump(2) << '\n';
        break;
    case Format::csv:
        os << "k,mu,tau,jet,tangent,jet_closed,theorem_b_mu,theorem_b_tau\n";
        for (const auto& p : r.profiles)
            os << p.k << ',' << p.mu << ',' << p.tau << ',' << p.jet << ',' << p.tangent << ',' << p.jet_closed << ','
               << opt(p.theorem_b_mu) << ',' << opt(p.theorem_b_tau) << '\n';
        break;
    case Format::table: {
        os << "f       = " << r.polynomial << "\n"
           << "weights = " << r.ws.to_string() << "\n"
           << "mu0     = " << r.mu0 << "   m0 = " << r.mult.m0 << "   c = " << r.mult.c << "\n\n";
        const int w = 10;
        os << std::setw(4) << "k" << std::setw(w) << "mu_k" << std::setw(w) << "tau_k" << std::setw(w) << "jet_k"
           << std::setw(w) << "tangent" << std::setw(w) << "B:mu_k" << std::setw(w) << "B:tau_k" << '\n';
        for (const auto& p : r.profiles)
            os << std::setw(4) << p.k << std::setw(w) << p.mu << std::setw(w) << p.tau << std::setw(w) << p.jet
               << std::setw(w) << p.tangent << std::setw(w) << (p.theorem_b_mu ? opt(p.theorem_b_mu) : "-")
               << std::setw(w) << (p.theorem_b_tau ? opt(p.theorem_b_tau) : "-") << '\n';
        os << "\nHilbert series of O/J(f): " << r.milnor_algebra_series.to_string() << "\n\n";
        for (const auto& v : r.verdicts) {
            os << "  [" << to_string(v.status) << "] " << v.check << '/' << v.name;
            if (!v.detail.empty()) os << ": " << v.detail;
            os << '\n';
        }
        break;
    }
    }
    return os.str();
}

} // namespace ktjurina
