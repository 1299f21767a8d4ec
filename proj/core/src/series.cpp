#include "dtq/series.hpp"

#include <algorithm>

namespace dtq {

namespace {

void check_compatible(const GradedSeries& f, const GradedSeries& g) {
    if (f.box != g.box) throw SeriesMismatch("series boxes differ");
    if (f.tag != g.tag) throw SeriesMismatch("series tags differ");
}

// Pairwise <,>-null support check (ignoring zero coefficients).
void check_symmetric_support(const Quiver& q, const GradedSeries& f) {
    std::vector<const DimVector*> supp;
    for (const auto& [d, c] : f.coeffs)
        if (!c.is_zero() && !is_zero(d)) supp.push_back(&d);
    for (std::size_t i = 0; i < supp.size(); ++i)
        for (std::size_t j = i + 1; j < supp.size(); ++j)
            if (antisym_form(q, *supp[i], *supp[j]) != 0)
                throw SeriesMismatch("support is not <,>-commutative");
}

long mobius(long n) {
    long m = 1;
    for (long p = 2; p * p <= n; ++p)
        if (n % p == 0) {
            n /= p;
            if (n % p == 0) return 0;
            m = -m;
        }
    if (n > 1) m = -m;
    return m;
}

// x-adic logarithm of F with F_0 = 1, truncated to the box.
GradedSeries x_log(const GradedSeries& f) {
    DimVector zero(f.box.size(), 0);
    GradedSeries u = f;  // F - 1
    u.set(zero, f.at(zero) - RatFunc(1));
    if (!u.at(zero).is_zero()) throw SeriesMismatch("log_pleth: constant term must be 1");

    long kmax = total(f.box);
    GradedSeries acc(f.box, f.tag);  // sum so far
    GradedSeries pw = GradedSeries::unit(f.box, f.tag);
    for (long k = 1; k <= kmax; ++k) {
        pw = mul_untwisted(pw, u);
        RatFunc c = RatFunc(Rational((k % 2 == 1) ? 1 : -1, k));
        for (const auto& [d, v] : pw.coeffs)
            if (!v.is_zero()) acc.set(d, acc.at(d) + c * v);
    }
    return acc;
}

}  // namespace

bool GradedSeries::operator==(const GradedSeries& o) const {
    if (box != o.box || tag != o.tag) return false;
    for (const auto& [d, c] : coeffs)
        if (c != o.at(d)) return false;
    for (const auto& [d, c] : o.coeffs)
        if (c != at(d)) return false;
    return true;
}

GradedSeries mul_untwisted(const GradedSeries& f, const GradedSeries& g) {
    check_compatible(f, g);
    GradedSeries r(f.box, f.tag);
    for (const auto& [d1, c1] : f.coeffs) {
        if (c1.is_zero()) continue;
        for (const auto& [d2, c2] : g.coeffs) {
            if (c2.is_zero()) continue;
            DimVector d = vec_add(d1, d2);
            if (!leq(d, f.box)) continue;
            r.set(d, r.at(d) + c1 * c2);
        }
    }
    return r;
}

GradedSeries mul_twisted(const Quiver& q, const GradedSeries& f, const GradedSeries& g) {
    check_compatible(f, g);
    if (f.tag != SeriesTag::virt) throw SeriesMismatch("mul_twisted requires the virtual tag");
    GradedSeries r(f.box, f.tag);
    RatFunc minus_t = -RatFunc::t_power(1);
    for (const auto& [d1, c1] : f.coeffs) {
        if (c1.is_zero()) continue;
        for (const auto& [d2, c2] : g.coeffs) {
            if (c2.is_zero()) continue;
            DimVector d = vec_add(d1, d2);
            if (!leq(d, f.box)) continue;
            RatFunc tw = minus_t.pow(antisym_form(q, d2, d1));
            r.set(d, r.at(d) + tw * c1 * c2);
        }
    }
    return r;
}

GradedSeries ordered_slope_product(const Quiver& q, const Stability& zeta,
                                   const std::vector<std::pair<Slope, GradedSeries>>& parts) {
    if (parts.empty()) throw SeriesMismatch("ordered_slope_product: no factors");
    for (std::size_t i = 0; i + 1 < parts.size(); ++i)
        if (!(parts[i + 1].first < parts[i].first))
            throw SeriesMismatch("ordered_slope_product: slopes must strictly decrease");
    for (const auto& [mu, s] : parts)
        for (const auto& [d, c] : s.coeffs)
            if (!c.is_zero() && !is_zero(d) && slope(zeta, d) != mu)
                throw SeriesMismatch("ordered_slope_product: support outside the declared slope");
    GradedSeries r = parts.front().second;
    for (std::size_t i = 1; i < parts.size(); ++i) r = mul_twisted(q, r, parts[i].second);
    return r;
}

GradedSeries psi(const GradedSeries& f, long n) {
    GradedSeries r(f.box, f.tag);
    for (const auto& [d, c] : f.coeffs) {
        if (c.is_zero()) continue;
        DimVector nd(d.size());
        for (std::size_t i = 0; i < d.size(); ++i) nd[i] = n * d[i];
        if (!leq(nd, f.box)) continue;
        r.set(nd, c.adams(n));
    }
    return r;
}

GradedSeries exp_pleth(const Quiver& q, const GradedSeries& f) {
    DimVector zero(f.box.size(), 0);
    if (!f.at(zero).is_zero()) throw SeriesMismatch("exp_pleth: constant term must vanish");
    check_symmetric_support(q, f);

    long nmax = 0;
    for (auto b : f.box) nmax = std::max(nmax, static_cast<long>(b));
    GradedSeries s(f.box, f.tag);
    for (long n = 1; n <= std::max(nmax, 1L); ++n) {
        GradedSeries p = psi(f, n);
        RatFunc inv_n = RatFunc(Rational(1, n));
        for (const auto& [d, c] : p.coeffs)
            if (!c.is_zero()) s.set(d, s.at(d) + inv_n * c);
    }

    GradedSeries r = GradedSeries::unit(f.box, f.tag);
    GradedSeries pw = GradedSeries::unit(f.box, f.tag);
    Rational kfact(1);
    long kmax = total(f.box);
    for (long k = 1; k <= kmax; ++k) {
        pw = mul_untwisted(pw, s);
        kfact *= k;
        RatFunc c = RatFunc(Rational(1) / kfact);
        bool any = false;
        for (const auto& [d, v] : pw.coeffs)
            if (!v.is_zero()) {
                r.set(d, r.at(d) + c * v);
                any = true;
            }
        if (!any) break;
    }
    return r;
}

GradedSeries log_pleth(const Quiver& q, const GradedSeries& f) {
    check_symmetric_support(q, f);
    GradedSeries l = x_log(f);
    long nmax = 0;
    for (auto b : f.box) nmax = std::max(nmax, static_cast<long>(b));
    GradedSeries r(f.box, f.tag);
    for (long n = 1; n <= std::max(nmax, 1L); ++n) {
        long m = mobius(n);
        if (m == 0) continue;
        GradedSeries p = psi(l, n);
        RatFunc c = RatFunc(Rational(m, n));
        for (const auto& [d, v] : p.coeffs)
            if (!v.is_zero()) r.set(d, r.at(d) + c * v);
    }
    return r;
}

}  // namespace dtq
