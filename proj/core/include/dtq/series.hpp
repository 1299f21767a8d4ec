#ifndef DTQ_SERIES_HPP
#define DTQ_SERIES_HPP

#include <map>

#include "dtq/quiver.hpp"
#include "dtq/ratfunc.hpp"
#include "dtq/stability.hpp"

namespace dtq {

enum class SeriesTag { count, virt };

struct SeriesMismatch : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

/// Quantum-torus element at desk scale: dimension-vector-graded series
/// with RatFunc coefficients, truncated to a componentwise box.  Absent
/// keys mean zero; the coefficient at d = 0 is stored explicitly.
struct GradedSeries {
    DimVector box;
    SeriesTag tag = SeriesTag::virt;
    std::map<DimVector, RatFunc> coeffs;

    GradedSeries() = default;
    GradedSeries(DimVector b, SeriesTag t) : box(std::move(b)), tag(t) {
        coeffs[DimVector(box.size(), 0)] = RatFunc();
    }
    static GradedSeries unit(DimVector b, SeriesTag t) {
        GradedSeries s(std::move(b), t);
        s.coeffs[DimVector(s.box.size(), 0)] = RatFunc(1);
        return s;
    }

    RatFunc at(const DimVector& d) const {
        auto it = coeffs.find(d);
        return it == coeffs.end() ? RatFunc() : it->second;
    }
    void set(const DimVector& d, RatFunc v) {
        if (!leq(d, box)) throw SeriesMismatch("coefficient outside the box");
        if (v.is_zero() && !is_zero(d))
            coeffs.erase(d);
        else
            coeffs[d] = std::move(v);
    }
    bool operator==(const GradedSeries& o) const;
};

/// Cauchy product truncated to the common box; commutative.
GradedSeries mul_untwisted(const GradedSeries& f, const GradedSeries& g);

/// Twisted product: (F*G)_d = sum_{d'+d''=d} (-t)^{<d'',d'>} F_{d'} G_{d''}.
/// Associative, not commutative in general; requires tag "virtual".
GradedSeries mul_twisted(const Quiver& q, const GradedSeries& f, const GradedSeries& g);

/// Left-to-right twisted fold of per-slope factors; slopes must be
/// strictly decreasing and each factor supported on its own slope.
GradedSeries ordered_slope_product(const Quiver& q, const Stability& zeta,
                                   const std::vector<std::pair<Slope, GradedSeries>>& parts);

/// Plethystic exponential.  Requires f_0 = 0 and pairwise <,>-null
/// support (the symmetric part of the torus); every monomial t^k x^d is
/// a line element: EXP(c t^k x^d) = (1 - t^k x^d)^{-c}.
GradedSeries exp_pleth(const Quiver& q, const GradedSeries& f);

/// Inverse of exp_pleth on series with F_0 = 1.
GradedSeries log_pleth(const Quiver& q, const GradedSeries& f);

/// Adams operation on series: adams(.,n) on coefficients, d -> n*d on
/// the grading, truncated to the box.
GradedSeries psi(const GradedSeries& f, long n);

}  // namespace dtq

#endif
