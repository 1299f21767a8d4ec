// Acceptance suite: one pass/fail line per criterion, exact rational
// arithmetic throughout, nonzero exit on any failure.

#include <chrono>
#include <cstdio>
#include <random>
#include <string>

#include "dtq/engine.hpp"
#include "dtq/fq.hpp"
#include "dtq/series.hpp"

using namespace dtq;

namespace {

Quiver jordan() { return Quiver({"1"}, {{"1", "1"}}); }
Quiver mloop(int m) {
    std::vector<std::pair<std::string, std::string>> arrows(static_cast<std::size_t>(m),
                                                            {"1", "1"});
    return Quiver({"1"}, arrows);
}
Quiver a2() { return Quiver({"1", "2"}, {{"1", "2"}}); }
Quiver k2() { return Quiver({"1", "2"}, {{"1", "2"}, {"1", "2"}}); }

Stability chamber(Rational re0, Rational re1) {
    Stability z;
    z.charges = {Charge{std::move(re0), Rational(1)}, Charge{std::move(re1), Rational(1)}};
    return z;
}

RatFunc one() { return RatFunc(1); }
RatFunc tpow(int k) { return RatFunc::t_power(k); }
RatFunc qpow(int k) { return RatFunc::q_power(k); }

// DT invariants merged over every slope realized in the box
std::map<DimVector, RatFunc> dt_all(const Quiver& q, const Stability& z, const DimVector& box) {
    std::map<DimVector, RatFunc> out;
    for (const Slope& mu : slopes_on_box(z, box)) {
        DTPackage p = dt_invariants(q, z, mu, box);
        for (const auto& [d, v] : p.entries)
            if (!v.omega.is_zero()) out[d] = v.omega;
    }
    return out;
}

int failures = 0;

void report(int idx, const char* name, bool ok, double secs, double limit,
            const std::string& detail) {
    bool timed_out = secs > limit;
    bool pass = ok && !timed_out;
    if (!pass) ++failures;
    std::printf("criterion %d (%s): %s [%.2fs, limit %.0fs]%s%s\n", idx, name,
                pass ? "PASS" : "FAIL", secs, limit,
                detail.empty() ? "" : " -- ", detail.c_str());
    std::fflush(stdout);
}

template <class F>
void run(int idx, const char* name, double limit, F f) {
    std::string detail;
    bool ok = false;
    auto t0 = std::chrono::steady_clock::now();
    try {
        ok = f(detail);
    } catch (const std::exception& e) {
        detail = std::string("exception: ") + e.what();
    }
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    report(idx, name, ok, secs, limit, detail);
}

bool crit1(std::string& detail) {
    DTPackage p = dt_invariants(jordan(), Stability::trivial(1), Slope(Rational(0)), {6});
    if (p.entries.at({1}).omega != -tpow(-1)) {
        detail = "Omega_1 != -1/t";
        return false;
    }
    for (std::int64_t d = 2; d <= 6; ++d)
        if (!p.entries.at({d}).omega.is_zero()) {
            detail = "Omega_" + std::to_string(d) + " != 0";
            return false;
        }
    return true;
}

bool crit2(std::string& detail) {
    for (int m = 2; m <= 3; ++m) {
        DTPackage p = dt_invariants(mloop(m), Stability::trivial(1), Slope(Rational(0)), {4});
        RatFunc want1 = RatFunc::monomial(Rational(m % 2 ? -1 : 1), -m);
        if (p.entries.at({1}).omega != want1) {
            detail = "m=" + std::to_string(m) + ": Omega_1 mismatch";
            return false;
        }
        for (std::int64_t d = 1; d <= 4; ++d) {
            const DTVerdict& v = p.entries.at({d});
            if (!v.polynomial.has_value()) {
                detail = "m=" + std::to_string(m) + ": Omega_" + std::to_string(d) +
                         " not a Laurent polynomial";
                return false;
            }
            if (d >= 2 && !v.palindromic) {
                detail = "m=" + std::to_string(m) + ": Omega_" + std::to_string(d) +
                         " not palindromic";
                return false;
            }
        }
    }
    return true;
}

bool crit3(std::string& detail) {
    Stability za = chamber(Rational(-1), Rational(0));  // slope(1,0)=1 > slope(0,1)=0
    Stability zb = chamber(Rational(0), Rational(-1));
    DimVector box{3, 3};
    auto a = dt_all(a2(), za, box);
    std::map<DimVector, RatFunc> wa{{{1, 0}, one()}, {{0, 1}, one()}, {{1, 1}, one()}};
    if (a != wa) {
        detail = "chamber A support/values wrong";
        return false;
    }
    auto b = dt_all(a2(), zb, box);
    std::map<DimVector, RatFunc> wb{{{1, 0}, one()}, {{0, 1}, one()}};
    if (b != wb) {
        detail = "chamber B support/values wrong";
        return false;
    }
    if (!wallcross_check(a2(), za, zb, box).ok()) {
        detail = "wall-crossing residual nonzero";
        return false;
    }
    return true;
}

bool crit4(std::string& detail) {
    Stability z = chamber(Rational(-1), Rational(0));
    auto omega = dt_all(k2(), z, {4, 4});
    if (omega.count({1, 1}) == 0 || omega[{1, 1}] != -(tpow(1) + tpow(-1))) {
        detail = "Omega_(1,1) != -(t + 1/t)";
        return false;
    }
    for (std::int64_t n = 1; n <= 3; ++n) {
        DimVector up{n, n + 1}, down{n + 1, n};
        if (omega.count(up) == 0 || omega[up] != one() || omega.count(down) == 0 ||
            omega[down] != one()) {
            detail = "Omega near the diagonal wrong at n=" + std::to_string(n);
            return false;
        }
    }
    for (std::int64_t n = 2; n <= 4; ++n)
        if (omega.count({n, n}) != 0) {
            detail = "Omega_(" + std::to_string(n) + "," + std::to_string(n) + ") != 0";
            return false;
        }
    return true;
}

bool crit5(std::string& detail) {
    std::vector<int> qs{4, 9};
    struct Case {
        Quiver q;
        Stability z;
        DimVector box;
        const char* name;
    };
    std::vector<Case> cases{
        {jordan(), Stability::trivial(1), {2}, "jordan trivial"},
        {a2(), chamber(Rational(-1), Rational(0)), {2, 2}, "a2 chamber A"},
        {a2(), chamber(Rational(0), Rational(-1)), {2, 2}, "a2 chamber B"},
        {k2(), chamber(Rational(-1), Rational(0)), {2, 2}, "k2 generic"},
        {k2(), Stability::trivial(2), {2, 2}, "k2 trivial"},
    };
    for (const auto& c : cases) {
        OracleReport r = oracle_check(c.q, c.z, c.box, qs);
        if (!r.all_match()) {
            detail = std::string(c.name) + ": oracle mismatch";
            return false;
        }
    }
    return true;
}

bool crit6(std::string& detail) {
    for (int f = 1; f <= 3; ++f)
        if (!framed_pbw_check(jordan(), {f}, Stability::trivial(1), Slope(Rational(0)), {5})
                 .ok()) {
            detail = "jordan f=" + std::to_string(f) + " residual nonzero";
            return false;
        }
    Stability z = chamber(Rational(-1), Rational(0));
    if (!framed_pbw_check(k2(), {1, 0}, z, Slope(Rational(1, 2)), {3, 3}).ok()) {
        detail = "k2 f=(1,0) residual nonzero";
        return false;
    }
    for (std::int64_t d = 1; d <= 5; ++d) {
        FramedClass fc = framed_vir(jordan(), {1}, Stability::trivial(1), Slope(Rational(0)), {d});
        if (fc.chi_vir != (-tpow(-1)).pow(d)) {
            detail = "framed class at d=" + std::to_string(d) + " != (-t)^{-d}";
            return false;
        }
    }
    return true;
}

bool crit7(std::string& detail) {
    std::vector<DimVector> fr1{{1}, {2}, {3}, {4}};
    for (std::int64_t d = 1; d <= 2; ++d) {
        auto rep = stabilization_profile(jordan(), Stability::trivial(1), Slope(Rational(0)), {d},
                                         fr1);
        if (!rep.strictly_increasing) {
            detail = "jordan d=" + std::to_string(d) + " not strictly increasing";
            return false;
        }
    }
    Stability z = chamber(Rational(-1), Rational(0));
    auto rep = stabilization_profile(k2(), z, Slope(Rational(1, 2)), {1, 1},
                                     {{1, 1}, {2, 2}, {3, 3}});
    if (!rep.strictly_increasing) {
        detail = "k2 (1,1) not strictly increasing";
        return false;
    }
    return true;
}

bool crit8(std::string& detail) {
    std::mt19937 rng(2026);
    Quiver sym({"1", "2"}, {{"1", "2"}, {"2", "1"}});
    std::uniform_int_distribution<std::int64_t> pick(0, 3);
    std::uniform_int_distribution<int> coeff(-3, 3), texp(-2, 2);
    auto random_series = [&](const DimVector& box, bool zero_const) {
        GradedSeries s(box, SeriesTag::virt);
        for (int k = 0; k < 4; ++k) {
            DimVector d(box.size());
            for (std::size_t i = 0; i < box.size(); ++i) d[i] = std::min(pick(rng), box[i]);
            if (zero_const && is_zero(d)) continue;
            s.set(d, s.at(d) + RatFunc::monomial(Rational(coeff(rng)), texp(rng)));
        }
        return s;
    };
    for (int i = 0; i < 50; ++i) {
        DimVector box{2 + (i % 2), 2 + ((i / 2) % 2)};
        GradedSeries f = random_series(box, true);
        if (log_pleth(sym, exp_pleth(sym, f)) != f) {
            detail = "EXP/LOG inversion failed";
            return false;
        }
    }
    Quiver q = a2();
    for (int i = 0; i < 50; ++i) {
        DimVector box{2, 2};
        GradedSeries a = random_series(box, false), b = random_series(box, false),
                     c = random_series(box, false);
        if (mul_twisted(q, mul_twisted(q, a, b), c) != mul_twisted(q, a, mul_twisted(q, b, c))) {
            detail = "twisted product associativity failed";
            return false;
        }
    }
    std::uniform_int_distribution<int> re(-3, 3), im(1, 3);
    for (int i = 0; i < 10; ++i) {
        Quiver qq = (i % 2) ? a2() : k2();
        Stability z;
        z.charges = {Charge{Rational(re(rng)), Rational(im(rng))},
                     Charge{Rational(re(rng)), Rational(im(rng))}};
        if (!wallcross_check(qq, z, Stability::trivial(2), {3, 3}).ok()) {
            detail = "HN reassembly residual nonzero";
            return false;
        }
    }
    for (const Quiver& qq : {jordan(), mloop(2), mloop(3), a2(), k2()}) {
        DimVector box(qq.num_vertices(), 3);
        GradedSeries a = vir_series_total(qq, box);
        for (const auto& [d, c] : a.coeffs) {
            RatFunc want = (-tpow(1)).pow(euler_form(qq, d, d));
            for (auto di : d)
                for (std::int64_t j = 1; j <= di; ++j)
                    want /= one() - qpow(static_cast<int>(j));
            if (c != want) {
                detail = "bridged stack series != closed form";
                return false;
            }
        }
    }
    return true;
}

}  // namespace

int main() {
    run(1, "one-loop quiver DT values", 1.0, crit1);
    run(2, "multi-loop integrality and palindromicity", 10.0, crit2);
    run(3, "A2 chambers and wall-crossing", 5.0, crit3);
    run(4, "Kronecker DT values", 30.0, crit4);
    run(5, "finite-field oracle", 120.0, crit5);
    run(6, "framed factorization", 30.0, crit6);
    run(7, "framed stabilization", 30.0, crit7);
    run(8, "algebraic property suites", 60.0, crit8);
    if (failures) {
        std::printf("%d criterion(s) failed\n", failures);
        return 1;
    }
    std::printf("all criteria passed\n");
    return 0;
}
