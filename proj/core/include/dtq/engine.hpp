#ifndef DTQ_ENGINE_HPP
#define DTQ_ENGINE_HPP

#include <optional>

#include "dtq/quiver.hpp"
#include "dtq/ratfunc.hpp"
#include "dtq/series.hpp"
#include "dtq/stability.hpp"

namespace dtq {

struct NonGenericError : std::runtime_error {
    DimVector d, e;
    std::int64_t pairing;
    NonGenericError(DimVector d_, DimVector e_, std::int64_t p);
};

/// Stack count series: c_d = q^{dim X_d} / |G_d(q)|, tag "count".
GradedSeries count_stack_series(const Quiver& q, const DimVector& box);

/// |G_d(q)| = prod_i prod_{j=0}^{d_i-1} (q^{d_i} - q^j) as a RatFunc in q = t^2.
RatFunc gauge_group_order(const DimVector& d);

/// Semistable stacky count series, solved from the HN stratification
/// c_d = sum_{HN types} q^{-(dbar,dbar)} prod_r css_{d^r} by recursion
/// on |d|.  Works for any slope rule (plain or framed).
GradedSeries count_semistable_series(const Quiver& q, const SlopeFn& slope_of,
                                     const DimVector& box);
inline GradedSeries count_semistable_series(const Quiver& q, const Stability& zeta,
                                            const DimVector& box) {
    return count_semistable_series(q, plain_slope_rule(zeta), box);
}

/// Count -> virtual bridge for one coefficient: (-1/t)^{(d,d)} c|_{q -> t^{-2}}.
RatFunc bridge_to_virtual(const RatFunc& c, std::int64_t euler_dd);

/// Virtual semistable series a^{ss}_d, tag "virtual".
GradedSeries vir_series(const Quiver& q, const Stability& zeta, const DimVector& box);

/// Total virtual stack series (maximally degenerate stability).
GradedSeries vir_series_total(const Quiver& q, const DimVector& box);

struct DTVerdict {
    RatFunc omega;
    std::optional<LaurentPoly> polynomial;
    bool palindromic = false;
};

struct DTPackage {
    Stability zeta;
    Slope mu;
    DimVector box;
    std::map<DimVector, DTVerdict> entries;
};

/// DT invariants at slope mu: Omega = (t - 1/t) * LOG of the virtual
/// semistable series restricted to Lambda_mu.  Requires mu-genericity
/// on the box; throws NonGenericError with the offending pair otherwise.
DTPackage dt_invariants(const Quiver& q, const Stability& zeta, const Slope& mu,
                        const DimVector& box);

struct Residual {
    DimVector d;
    RatFunc value;
};

struct WallcrossReport {
    std::vector<Residual> residuals1, residuals2;  // vs the total stack series
    bool ok() const { return residuals1.empty() && residuals2.empty(); }
};

/// Both stability conditions must factor the same total series; the
/// report lists every nonzero residual (empty = pass).
WallcrossReport wallcross_check(const Quiver& q, const Stability& zeta1, const Stability& zeta2,
                                const DimVector& box);

struct FramedClass {
    DimVector framing;
    DimVector d;
    RatFunc chi_vir;       // (t - 1/t) * a^{ss}_{(1,d)} of the framed quiver
    std::int64_t dim = 0;  // f.d - (d,d)
    bool empty = false;
};

/// Weight polynomial of the framed moduli space M_{f,d}, virtually
/// twisted; zero signals an empty space.
FramedClass framed_vir(const Quiver& q, const DimVector& f, const Stability& zeta,
                       const Slope& mu, const DimVector& d);

/// chi_vir of M_{f,d} for every d <= box at once (one framed recursion).
std::map<DimVector, RatFunc> framed_vir_table(const Quiver& q, const DimVector& f,
                                              const Stability& zeta, const Slope& mu,
                                              const DimVector& box);

struct FramedPbwReport {
    std::vector<Residual> residuals;
    bool ok() const { return residuals.empty(); }
};

/// Exact check of the finite-framing factorization:
///   sum_d (-t)^{f.d} chi(M_{f,d})_vir x^d
///     = EXP( sum_d Omega_d (-t)^{f.d} chi(P^{f.d-1})_vir x^d )
/// over Lambda_mu within the box.
FramedPbwReport framed_pbw_check(const Quiver& q, const DimVector& f, const Stability& zeta,
                                 const Slope& mu, const DimVector& box);

struct StabilizationReport {
    struct Row {
        DimVector framing;
        std::optional<int> first_disagreement;  // nullopt = exact agreement
    };
    std::vector<Row> rows;
    bool strictly_increasing = false;
};

/// First t-order at which the normalized finite-framing class disagrees
/// with a^{ss}_d, per framing; asserts the sequence strictly increases.
StabilizationReport stabilization_profile(const Quiver& q, const Stability& zeta, const Slope& mu,
                                          const DimVector& d,
                                          const std::vector<DimVector>& framings);

}  // namespace dtq

#endif
