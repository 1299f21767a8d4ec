// dtq: batch front end for the quiver DT calculator.
//
// Subcommands: series, dt, framed, check {wallcross, framed-pbw, stabilize,
// oracle}.  Inputs are JSON files (quiver, stability); reports go to stdout,
// diagnostics to stderr.  Exit codes: 0 success, 1 check failure, 2 input or
// precondition error.

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

#include "dtq/engine.hpp"
#include "dtq/fq.hpp"
#include "dtq/json_io.hpp"

using namespace dtq;

namespace {

struct InputError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

Json load_json(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw InputError("cannot open '" + path + "'");
    try {
        return Json::parse(in);
    } catch (const Json::parse_error& e) {
        throw InputError("malformed JSON in '" + path + "': " + e.what());
    }
}

DimVector parse_dimvec(const std::string& s) {
    try {
        return dimvec_from_key(s);
    } catch (const ParseError& e) {
        throw InputError(e.what());
    }
}

Stability load_stability(const std::string& path, std::size_t n) {
    if (path.empty()) return Stability::trivial(n);
    try {
        Stability z = stability_from_json(load_json(path));
        if (z.charges.size() != n)
            throw InputError("stability in '" + path + "' has " +
                             std::to_string(z.charges.size()) + " charges, quiver has " +
                             std::to_string(n) + " vertices");
        return z;
    } catch (const ParseError& e) {
        throw InputError(e.what());
    }
}

std::string rat_str(const Rational& r) { return r.str(); }

Json slope_json(const Slope& mu) {
    return mu.is_plus() ? Json(rat_str(mu.value()) + "+") : Json(rat_str(mu.value()));
}

// slopes to process: every slope realized on the box, or a single one
std::vector<Slope> slope_set(const std::string& mu_filter, const Stability& z,
                             const DimVector& box) {
    if (mu_filter == "all") return slopes_on_box(z, box);
    try {
        return {Slope(rational_from_string(mu_filter))};
    } catch (const ParseError&) {
        throw InputError("slope filter must be 'all' or a rational, got '" + mu_filter + "'");
    }
}

void emit_expansions_csv(std::ostream& os,
                         const std::vector<std::pair<DimVector, RatFunc>>& rows, int N) {
    os << "d;t_exponent;coefficient\n";
    for (const auto& [d, f] : rows)
        for (const auto& [e, c] : f.expand_ascending(N))
            os << dimvec_key(d) << ";" << e << ";" << rat_str(c) << "\n";
}

int finish_report(const Json& report, const std::string& format, int N,
                  const std::vector<std::pair<DimVector, RatFunc>>& expansion_rows,
                  const std::string& table_text, bool ok) {
    if (format == "json") {
        std::cout << report.dump(2) << "\n";
    } else if (format == "csv") {
        std::cout << "# display expansion to t-exponent " << N << " (presentation only)\n";
        emit_expansions_csv(std::cout, expansion_rows, N);
    } else {
        std::cout << table_text;
    }
    return ok ? 0 : 1;
}

int cmd_series(const std::string& quiver_path, const std::string& stability_path,
               const std::string& box_str, bool semistable, const std::string& format, int N) {
    Quiver q = quiver_from_json(load_json(quiver_path));
    DimVector box = parse_dimvec(box_str);
    check_dim(q, box, "series");
    Stability z = load_stability(stability_path, q.num_vertices());
    GradedSeries s = semistable ? count_semistable_series(q, z, box) : count_stack_series(q, box);

    std::vector<std::pair<DimVector, RatFunc>> rows(s.coeffs.begin(), s.coeffs.end());
    std::ostringstream table;
    table << (semistable ? "semistable stacky counts" : "stacky counts") << " (box "
          << dimvec_key(box) << ")\n";
    for (const auto& [d, c] : rows) table << "  c_" << dimvec_key(d) << " = " << c.to_string() << "\n";
    return finish_report(series_to_json(s), format, N, rows, table.str(), true);
}

int cmd_dt(const std::string& quiver_path, const std::string& stability_path,
           const std::string& box_str, const std::string& mu_filter, const std::string& format,
           int N) {
    Quiver q = quiver_from_json(load_json(quiver_path));
    DimVector box = parse_dimvec(box_str);
    check_dim(q, box, "dt");
    Stability z = load_stability(stability_path, q.num_vertices());

    Json entries = Json::array();
    std::vector<std::pair<DimVector, RatFunc>> rows;
    std::ostringstream table;
    table << "DT invariants (box " << dimvec_key(box) << ")\n";
    for (const Slope& mu : slope_set(mu_filter, z, box)) {
        DTPackage p = dt_invariants(q, z, mu, box);
        for (const auto& [d, v] : p.entries) {
            Json e;
            e["dim_vector"] = d;
            e["slope"] = slope_json(mu);
            if (v.polynomial)
                e["omega"] = laurent_to_json(*v.polynomial);
            else
                e["omega"] = ratfunc_to_json(v.omega);
            e["polynomial"] = v.polynomial.has_value();
            e["palindromic"] = v.palindromic;
            entries.push_back(e);
            rows.emplace_back(d, v.omega);
            table << "  Omega_" << dimvec_key(d) << " = " << v.omega.to_string()
                  << "  polynomial: " << (v.polynomial ? "yes" : "no")
                  << ", palindromic: " << (v.palindromic ? "yes" : "no") << "\n";
        }
    }
    Json report;
    report["box"] = box;
    report["entries"] = entries;
    return finish_report(report, format, N, rows, table.str(), true);
}

int cmd_framed(const std::string& quiver_path, const std::string& stability_path,
               const std::string& box_str, const std::string& framing_str,
               const std::string& mu_filter, const std::string& format, int N) {
    Quiver q = quiver_from_json(load_json(quiver_path));
    DimVector box = parse_dimvec(box_str);
    check_dim(q, box, "framed");
    DimVector f = parse_dimvec(framing_str);
    check_dim(q, f, "framed");
    Stability z = load_stability(stability_path, q.num_vertices());

    Json entries = Json::array();
    std::vector<std::pair<DimVector, RatFunc>> rows;
    std::ostringstream table;
    table << "framed moduli classes (framing " << dimvec_key(f) << ", box " << dimvec_key(box)
          << ")\n";
    for (const Slope& mu : slope_set(mu_filter, z, box)) {
        auto chi = framed_vir_table(q, f, z, mu, box);
        for (const auto& d : lambda_mu(z, mu, box)) {
            auto it = chi.find(d);
            RatFunc value = it == chi.end() ? RatFunc() : it->second;
            Json e;
            e["dim_vector"] = d;
            e["slope"] = slope_json(mu);
            e["chi_vir"] = ratfunc_to_json(value);
            e["dim"] = dot(f, d) - euler_form(q, d, d);
            e["empty"] = value.is_zero();
            entries.push_back(e);
            rows.emplace_back(d, value);
            table << "  chi_" << dimvec_key(d) << " = " << value.to_string()
                  << (value.is_zero() ? "  (empty)" : "") << "\n";
        }
    }
    Json report;
    report["framing"] = f;
    report["box"] = box;
    report["entries"] = entries;
    return finish_report(report, format, N, rows, table.str(), true);
}

Json residuals_json(const std::vector<Residual>& rs) {
    Json out = Json::array();
    for (const auto& r : rs)
        out.push_back(Json{{"dim_vector", r.d}, {"value", ratfunc_to_json(r.value)}});
    return out;
}

int cmd_wallcross(const std::string& quiver_path, const std::string& stability_path,
                  const std::string& stability2_path, const std::string& box_str,
                  const std::string& format, int N) {
    Quiver q = quiver_from_json(load_json(quiver_path));
    DimVector box = parse_dimvec(box_str);
    check_dim(q, box, "wallcross");
    Stability z1 = load_stability(stability_path, q.num_vertices());
    Stability z2 = load_stability(stability2_path, q.num_vertices());
    WallcrossReport r = wallcross_check(q, z1, z2, box);

    Json report;
    report["residuals1"] = residuals_json(r.residuals1);
    report["residuals2"] = residuals_json(r.residuals2);
    report["ok"] = r.ok();
    std::vector<std::pair<DimVector, RatFunc>> rows;
    for (const auto& x : r.residuals1) rows.emplace_back(x.d, x.value);
    for (const auto& x : r.residuals2) rows.emplace_back(x.d, x.value);
    std::ostringstream table;
    table << "wall-crossing check: " << (r.ok() ? "pass" : "FAIL") << " ("
          << r.residuals1.size() + r.residuals2.size() << " nonzero residuals)\n";
    return finish_report(report, format, N, rows, table.str(), r.ok());
}

int cmd_framed_pbw(const std::string& quiver_path, const std::string& stability_path,
                   const std::string& box_str, const std::string& framing_str,
                   const std::string& mu_filter, const std::string& format, int N) {
    Quiver q = quiver_from_json(load_json(quiver_path));
    DimVector box = parse_dimvec(box_str);
    check_dim(q, box, "framed-pbw");
    DimVector f = parse_dimvec(framing_str);
    check_dim(q, f, "framed-pbw");
    Stability z = load_stability(stability_path, q.num_vertices());

    Json per_slope = Json::array();
    std::vector<std::pair<DimVector, RatFunc>> rows;
    bool ok = true;
    for (const Slope& mu : slope_set(mu_filter, z, box)) {
        FramedPbwReport r = framed_pbw_check(q, f, z, mu, box);
        ok = ok && r.ok();
        per_slope.push_back(Json{{"slope", slope_json(mu)},
                                 {"residuals", residuals_json(r.residuals)},
                                 {"ok", r.ok()}});
        for (const auto& x : r.residuals) rows.emplace_back(x.d, x.value);
    }
    Json report;
    report["framing"] = f;
    report["slopes"] = per_slope;
    report["ok"] = ok;
    std::ostringstream table;
    table << "framed factorization check: " << (ok ? "pass" : "FAIL") << "\n";
    return finish_report(report, format, N, rows, table.str(), ok);
}

int cmd_stabilize(const std::string& quiver_path, const std::string& stability_path,
                  const std::string& dim_str, const std::string& framings_str,
                  const std::string& format, int N) {
    Quiver q = quiver_from_json(load_json(quiver_path));
    DimVector d = parse_dimvec(dim_str);
    check_dim(q, d, "stabilize");
    Stability z = load_stability(stability_path, q.num_vertices());
    Slope mu = is_zero(d) ? Slope(Rational(0)) : slope(z, d);

    std::vector<DimVector> framings;
    std::istringstream fs(framings_str);
    std::string part;
    while (std::getline(fs, part, ':')) framings.push_back(parse_dimvec(part));
    if (framings.empty()) throw InputError("--framings needs a colon-separated list");
    for (const auto& f : framings) check_dim(q, f, "stabilize");

    StabilizationReport r = stabilization_profile(q, z, mu, d, framings);
    Json rows = Json::array();
    std::ostringstream table;
    table << "stabilization profile for d = " << dimvec_key(d) << ":\n";
    for (const auto& row : r.rows) {
        Json e;
        e["framing"] = row.framing;
        if (row.first_disagreement)
            e["first_disagreement"] = *row.first_disagreement;
        else
            e["first_disagreement"] = nullptr;
        rows.push_back(e);
        table << "  f = " << dimvec_key(row.framing) << ": "
              << (row.first_disagreement ? std::to_string(*row.first_disagreement)
                                         : std::string("exact"))
              << "\n";
    }
    table << "strictly increasing: " << (r.strictly_increasing ? "yes" : "NO") << "\n";
    Json report;
    report["dim_vector"] = d;
    report["rows"] = rows;
    report["strictly_increasing"] = r.strictly_increasing;
    return finish_report(report, format, N, {}, table.str(), r.strictly_increasing);
}

int cmd_oracle(const std::string& quiver_path, const std::string& stability_path,
               const std::string& box_str, const std::string& q_str, const std::string& format,
               int N) {
    Quiver q = quiver_from_json(load_json(quiver_path));
    DimVector box = parse_dimvec(box_str);
    check_dim(q, box, "oracle");
    Stability z = load_stability(stability_path, q.num_vertices());
    std::vector<int> q_list;
    for (auto v : parse_dimvec(q_str)) q_list.push_back(static_cast<int>(v));

    OracleReport r = oracle_check(q, z, box, q_list);
    Json rows = Json::array();
    std::ostringstream table;
    table << "finite-field oracle:\n";
    for (const auto& row : r.rows) {
        rows.push_back(Json{{"dim_vector", row.d},
                            {"q", row.q},
                            {"ss_points", std::to_string(row.ss_points)},
                            {"group_order", row.group_order.str()},
                            {"ratio", rat_str(row.ratio)},
                            {"predicted", rat_str(row.predicted)},
                            {"match", row.match}});
        table << "  d = " << dimvec_key(row.d) << ", q = " << row.q << ": " << rat_str(row.ratio)
              << " vs " << rat_str(row.predicted) << (row.match ? "  ok" : "  MISMATCH") << "\n";
    }
    table << (r.all_match() ? "all matched\n" : "MISMATCHES FOUND\n");
    Json report;
    report["rows"] = rows;
    report["all_match"] = r.all_match();
    return finish_report(report, format, N, {}, table.str(), r.all_match());
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact refined DT calculator for quivers"};
    app.require_subcommand(1);

    std::string quiver_path, stability_path, stability2_path, box_str, framing_str, dim_str,
        framings_str, q_str, mu_filter = "all", format = "json";
    bool semistable = false;
    int N = 10;

    auto add_common = [&](CLI::App* c, bool needs_box = true) {
        c->add_option("--quiver", quiver_path, "quiver JSON file")->required();
        c->add_option("--stability", stability_path, "stability JSON file (default: trivial)");
        if (needs_box) c->add_option("--box", box_str, "truncation box, e.g. 3,3")->required();
        c->add_option("--format", format, "json|csv|table")
            ->check(CLI::IsMember({"json", "csv", "table"}));
        c->add_option("-N", N, "display expansion order for csv output");
    };

    CLI::App* series = app.add_subcommand("series", "stacky count series");
    add_common(series);
    series->add_flag("--semistable", semistable, "semistable series via the HN recursion");

    CLI::App* dt = app.add_subcommand("dt", "DT invariants");
    add_common(dt);
    dt->add_option("--mu", mu_filter, "slope filter: 'all' or a rational");

    CLI::App* framed = app.add_subcommand("framed", "framed moduli classes");
    add_common(framed);
    framed->add_option("--framing", framing_str, "framing vector, e.g. 1,0")->required();
    framed->add_option("--mu", mu_filter, "slope filter: 'all' or a rational");

    CLI::App* check = app.add_subcommand("check", "verification reports");
    check->require_subcommand(1);

    CLI::App* wallcross = check->add_subcommand("wallcross", "two-chamber factorization");
    add_common(wallcross);
    wallcross->add_option("--stability2", stability2_path, "second stability JSON file")
        ->required();

    CLI::App* pbw = check->add_subcommand("framed-pbw", "framed factorization identity");
    add_common(pbw);
    pbw->add_option("--framing", framing_str, "framing vector")->required();
    pbw->add_option("--mu", mu_filter, "slope filter: 'all' or a rational");

    CLI::App* stab = check->add_subcommand("stabilize", "framed stabilization profile");
    add_common(stab, false);
    stab->add_option("--dim", dim_str, "dimension vector")->required();
    stab->add_option("--framings", framings_str, "colon-separated framings, e.g. 1:2:3")
        ->required();

    CLI::App* oracle = check->add_subcommand("oracle", "finite-field brute-force comparison");
    add_common(oracle);
    oracle->add_option("--q", q_str, "comma-separated field sizes from {4,9,25}")->required();

    CLI11_PARSE(app, argc, argv);

    try {
        if (series->parsed())
            return cmd_series(quiver_path, stability_path, box_str, semistable, format, N);
        if (dt->parsed())
            return cmd_dt(quiver_path, stability_path, box_str, mu_filter, format, N);
        if (framed->parsed())
            return cmd_framed(quiver_path, stability_path, box_str, framing_str, mu_filter,
                              format, N);
        if (wallcross->parsed())
            return cmd_wallcross(quiver_path, stability_path, stability2_path, box_str, format,
                                 N);
        if (pbw->parsed())
            return cmd_framed_pbw(quiver_path, stability_path, box_str, framing_str, mu_filter,
                                  format, N);
        if (stab->parsed())
            return cmd_stabilize(quiver_path, stability_path, dim_str, framings_str, format, N);
        if (oracle->parsed())
            return cmd_oracle(quiver_path, stability_path, box_str, q_str, format, N);
    } catch (const NonGenericError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const BudgetError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
