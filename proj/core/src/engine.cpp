#include "dtq/engine.hpp"

#include <algorithm>
#include <sstream>

namespace dtq {

namespace {

std::string vec_str(const DimVector& d) {
    std::ostringstream os;
    for (std::size_t i = 0; i < d.size(); ++i) {
        if (i) os << ",";
        os << d[i];
    }
    return os.str();
}

// d <= box ascending by |d| then lex, including 0.
std::vector<DimVector> box_grid(const DimVector& box) {
    std::vector<DimVector> out{DimVector(box.size(), 0)};
    DimVector d(box.size(), 0);
    for (;;) {
        std::size_t i = 0;
        while (i < d.size() && d[i] == box[i]) d[i++] = 0;
        if (i == d.size()) break;
        ++d[i];
        out.push_back(d);
    }
    std::sort(out.begin(), out.end(), [](const DimVector& a, const DimVector& b) {
        auto ta = total(a), tb = total(b);
        if (ta != tb) return ta < tb;
        return a < b;
    });
    return out;
}

std::int64_t rep_space_dim(const Quiver& q, const DimVector& d) {
    std::int64_t s = 0;
    for (const auto& [a, b] : q.arrows)
        s += d[static_cast<std::size_t>(a)] * d[static_cast<std::size_t>(b)];
    return s;
}

}  // namespace

NonGenericError::NonGenericError(DimVector d_, DimVector e_, std::int64_t p)
    : std::runtime_error("stability is not generic on the box: <(" + vec_str(d_) + "),(" +
                         vec_str(e_) + ")> = " + std::to_string(p)),
      d(std::move(d_)),
      e(std::move(e_)),
      pairing(p) {}

RatFunc gauge_group_order(const DimVector& d) {
    RatFunc g(1);
    for (auto di : d)
        for (std::int64_t j = 0; j < di; ++j)
            g *= RatFunc::q_power(static_cast<int>(di)) - RatFunc::q_power(static_cast<int>(j));
    return g;
}

GradedSeries count_stack_series(const Quiver& q, const DimVector& box) {
    check_dim(q, box, "count_stack_series");
    GradedSeries s(box, SeriesTag::count);
    for (const auto& d : box_grid(box))
        s.set(d, RatFunc::q_power(static_cast<int>(rep_space_dim(q, d))) / gauge_group_order(d));
    return s;
}

GradedSeries count_semistable_series(const Quiver& q, const SlopeFn& slope_of,
                                     const DimVector& box) {
    check_dim(q, box, "count_semistable_series");
    GradedSeries total_series = count_stack_series(q, box);
    GradedSeries ss(box, SeriesTag::count);
    ss.set(DimVector(box.size(), 0), RatFunc(1));
    for (const auto& d : box_grid(box)) {
        if (is_zero(d)) continue;
        RatFunc c = total_series.at(d);
        for (const auto& h : hn_types(q, slope_of, d)) {
            if (h.parts.size() == 1) continue;  // the trivial type carries css_d itself
            RatFunc term = RatFunc::q_power(static_cast<int>(-h.twist()));
            for (const auto& p : h.parts) term *= ss.at(p);
            c -= term;
        }
        ss.set(d, c);
    }
    return ss;
}

RatFunc bridge_to_virtual(const RatFunc& c, std::int64_t euler_dd) {
    // q -> t^{-2} is t -> 1/t on the count side (q = t^2).
    return (-RatFunc::t_power(-1)).pow(euler_dd) * c.invert_t();
}

GradedSeries vir_series(const Quiver& q, const Stability& zeta, const DimVector& box) {
    GradedSeries css = count_semistable_series(q, zeta, box);
    GradedSeries a(box, SeriesTag::virt);
    for (const auto& [d, c] : css.coeffs) a.set(d, bridge_to_virtual(c, euler_form(q, d, d)));
    return a;
}

GradedSeries vir_series_total(const Quiver& q, const DimVector& box) {
    GradedSeries c = count_stack_series(q, box);
    GradedSeries a(box, SeriesTag::virt);
    for (const auto& [d, v] : c.coeffs) a.set(d, bridge_to_virtual(v, euler_form(q, d, d)));
    return a;
}

DTPackage dt_invariants(const Quiver& q, const Stability& zeta, const Slope& mu,
                        const DimVector& box) {
    auto cert = check_mu_generic(q, zeta, mu, box);
    if (!cert.generic) throw NonGenericError(cert.d, cert.e, cert.pairing);

    auto lam = lambda_mu(zeta, mu, box);
    GradedSeries a = vir_series(q, zeta, box);
    GradedSeries z = GradedSeries::unit(box, SeriesTag::virt);
    for (const auto& d : lam) z.set(d, a.at(d));

    GradedSeries lg = log_pleth(q, z);
    RatFunc norm = RatFunc::t_power(1) - RatFunc::t_power(-1);

    DTPackage pkg{zeta, mu, box, {}};
    for (const auto& d : lam) {
        DTVerdict v;
        v.omega = norm * lg.at(d);
        v.polynomial = v.omega.as_laurent_polynomial();
        v.palindromic = v.omega.is_palindromic();
        pkg.entries.emplace(d, std::move(v));
    }
    return pkg;
}

namespace {

// Ordered twisted product of per-slope virtual semistable factors.
GradedSeries hn_factorization(const Quiver& q, const Stability& zeta, const DimVector& box) {
    GradedSeries a = vir_series(q, zeta, box);
    std::vector<std::pair<Slope, GradedSeries>> parts;
    for (const auto& mu : slopes_on_box(zeta, box)) {
        GradedSeries f = GradedSeries::unit(box, SeriesTag::virt);
        bool any = false;
        for (const auto& d : lambda_mu(zeta, mu, box)) {
            RatFunc c = a.at(d);
            if (!c.is_zero()) any = true;
            f.set(d, c);
        }
        if (any) parts.emplace_back(mu, std::move(f));
    }
    if (parts.empty()) return GradedSeries::unit(box, SeriesTag::virt);
    return ordered_slope_product(q, zeta, parts);
}

// zero-defaulting lookup: vanishing coefficients are not stored
RatFunc table_at(const std::map<DimVector, RatFunc>& table, const DimVector& d) {
    auto it = table.find(d);
    return it == table.end() ? RatFunc() : it->second;
}

std::vector<Residual> series_residuals(const GradedSeries& lhs, const GradedSeries& rhs) {
    std::vector<Residual> out;
    std::map<DimVector, RatFunc> keys = lhs.coeffs;
    for (const auto& [d, c] : rhs.coeffs) keys.emplace(d, RatFunc());
    for (const auto& [d, _] : keys) {
        RatFunc r = lhs.at(d) - rhs.at(d);
        if (!r.is_zero()) out.push_back({d, r});
    }
    return out;
}

}  // namespace

WallcrossReport wallcross_check(const Quiver& q, const Stability& zeta1, const Stability& zeta2,
                                const DimVector& box) {
    GradedSeries total_vir = vir_series_total(q, box);
    WallcrossReport rep;
    rep.residuals1 = series_residuals(hn_factorization(q, zeta1, box), total_vir);
    rep.residuals2 = series_residuals(hn_factorization(q, zeta2, box), total_vir);
    return rep;
}

std::map<DimVector, RatFunc> framed_vir_table(const Quiver& q, const DimVector& f,
                                              const Stability& zeta, const Slope& mu,
                                              const DimVector& box) {
    Quiver qf = framed_quiver(q, f);
    DimVector fbox = box;
    fbox.push_back(1);
    GradedSeries css = count_semistable_series(qf, framed_slope_rule(zeta, mu), fbox);
    RatFunc norm = RatFunc::t_power(1) - RatFunc::t_power(-1);
    std::map<DimVector, RatFunc> out;
    for (const auto& [e, c] : css.coeffs) {
        if (e.back() != 1) continue;
        DimVector d(e.begin(), e.end() - 1);
        out[d] = norm * bridge_to_virtual(c, euler_form(qf, e, e));
    }
    return out;
}

FramedClass framed_vir(const Quiver& q, const DimVector& f, const Stability& zeta,
                       const Slope& mu, const DimVector& d) {
    check_dim(q, f, "framed_vir");
    check_dim(q, d, "framed_vir");
    if (!is_zero(d) && slope(zeta, d) != mu)
        throw std::invalid_argument("framed_vir: d is not of slope mu");
    auto table = framed_vir_table(q, f, zeta, mu, d);
    FramedClass fc;
    fc.framing = f;
    fc.d = d;
    fc.chi_vir = table_at(table, d);
    fc.dim = dot(f, d) - euler_form(q, d, d);
    fc.empty = fc.chi_vir.is_zero();
    return fc;
}

FramedPbwReport framed_pbw_check(const Quiver& q, const DimVector& f, const Stability& zeta,
                                 const Slope& mu, const DimVector& box) {
    auto cert = check_mu_generic(q, zeta, mu, box);
    if (!cert.generic) throw NonGenericError(cert.d, cert.e, cert.pairing);

    auto lam = lambda_mu(zeta, mu, box);
    auto chi = framed_vir_table(q, f, zeta, mu, box);
    RatFunc minus_t = -RatFunc::t_power(1);

    GradedSeries lhs = GradedSeries::unit(box, SeriesTag::virt);
    lhs.set(DimVector(box.size(), 0), table_at(chi, DimVector(box.size(), 0)));
    for (const auto& d : lam) lhs.set(d, minus_t.pow(dot(f, d)) * table_at(chi, d));

    DTPackage dt = dt_invariants(q, zeta, mu, box);
    GradedSeries arg(box, SeriesTag::virt);
    for (const auto& d : lam) {
        long fd = static_cast<long>(dot(f, d));
        arg.set(d, dt.entries.at(d).omega * minus_t.pow(fd) * chi_proj_vir(fd));
    }
    GradedSeries rhs = exp_pleth(q, arg);

    // Compare only within Lambda_mu (plus the unit); the factorization
    // lives in that sub-torus.
    GradedSeries rhs_restricted = GradedSeries::unit(box, SeriesTag::virt);
    rhs_restricted.set(DimVector(box.size(), 0), rhs.at(DimVector(box.size(), 0)));
    for (const auto& d : lam) rhs_restricted.set(d, rhs.at(d));

    FramedPbwReport rep;
    rep.residuals = series_residuals(lhs, rhs_restricted);
    return rep;
}

StabilizationReport stabilization_profile(const Quiver& q, const Stability& zeta, const Slope& mu,
                                          const DimVector& d,
                                          const std::vector<DimVector>& framings) {
    RatFunc target;
    if (is_zero(d)) {
        target = RatFunc(1);
    } else {
        if (slope(zeta, d) != mu)
            throw std::invalid_argument("stabilization_profile: d is not of slope mu");
        target = vir_series(q, zeta, d).at(d);
    }

    RatFunc minus_t = -RatFunc::t_power(1);
    RatFunc unit_norm = chi_cpinf_vir() * (RatFunc::t_power(1) - RatFunc::t_power(-1));

    StabilizationReport rep;
    rep.strictly_increasing = true;
    std::optional<int> prev;
    bool prev_present = false;
    for (const auto& f : framings) {
        auto chi = table_at(framed_vir_table(q, f, zeta, mu, d), d);
        RatFunc approx = minus_t.pow(dot(f, d)) * chi * unit_norm;
        RatFunc diff = approx - target;
        StabilizationReport::Row row;
        row.framing = f;
        row.first_disagreement = diff.order();  // exact lowest t-order of the difference
        // Exact agreement counts as an infinite order; once reached it may persist.
        if (prev_present && row.first_disagreement.has_value()) {
            if (!prev.has_value() || *row.first_disagreement <= *prev)
                rep.strictly_increasing = false;
        }
        prev = row.first_disagreement;
        prev_present = true;
        rep.rows.push_back(std::move(row));
    }
    return rep;
}

}  // namespace dtq
