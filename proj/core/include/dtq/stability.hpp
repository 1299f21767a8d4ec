#ifndef DTQ_STABILITY_HPP
#define DTQ_STABILITY_HPP

#include <functional>
#include <optional>
#include <vector>

#include "dtq/quiver.hpp"
#include "dtq/ratfunc.hpp"

namespace dtq {

/// Per-vertex central charge; im > 0 keeps every slope finite.
struct Charge {
    Rational re;
    Rational im;
};

struct Stability {
    std::vector<Charge> charges;

    static Stability trivial(std::size_t n) {
        Stability z;
        z.charges.assign(n, Charge{Rational(0), Rational(1)});
        return z;
    }
    void validate() const;
};

/// Exact rational slope, or the symbolic value mu+ ("infinitesimally
/// above mu") used by the framed machinery.  Ordering: mu < mu+ < nu for
/// every rational nu > mu; two symbolic slopes over distinct rationals
/// are incomparable (comparing them throws).
class Slope {
public:
    Slope() : value_(0), plus_(false) {}
    explicit Slope(Rational v, bool plus = false) : value_(std::move(v)), plus_(plus) {}
    static Slope just_above(Rational mu) { return Slope(std::move(mu), true); }

    const Rational& value() const { return value_; }
    bool is_plus() const { return plus_; }

    bool operator==(const Slope& o) const { return value_ == o.value_ && plus_ == o.plus_; }
    bool operator!=(const Slope& o) const { return !(*this == o); }
    bool operator<(const Slope& o) const;
    bool operator>(const Slope& o) const { return o < *this; }
    bool operator<=(const Slope& o) const { return !(o < *this); }
    bool operator>=(const Slope& o) const { return !(*this < o); }

    std::string to_string() const;

private:
    Rational value_;
    bool plus_;
};

/// Slope of a nonzero dimension vector: -Re Z(d) / Im Z(d).
Slope slope(const Stability& zeta, const DimVector& d);

/// Assigns a slope to every nonzero dimension vector; lets the HN
/// machinery run on plain and framed stability alike.
using SlopeFn = std::function<Slope(const DimVector&)>;

inline SlopeFn plain_slope_rule(const Stability& zeta) {
    return [zeta](const DimVector& d) { return slope(zeta, d); };
}

/// Slope rule on framed dimension vectors (underlying entries followed
/// by the framing entry, which must be 0 or 1).  The framing part sits
/// at the symbolic slope mu+, realizing the small-epsilon / large-charge
/// limit exactly.
SlopeFn framed_slope_rule(const Stability& base, const Slope& mu);

/// All nonzero d <= box of slope mu, graded-lex order.
std::vector<DimVector> lambda_mu(const Stability& zeta, const Slope& mu, const DimVector& box);

struct GenericityCertificate {
    bool generic = true;
    // witness of failure:
    DimVector d, e;
    std::int64_t pairing = 0;
};

/// Checks <d,e> = 0 for all pairs from lambda_mu within the box.  The
/// certificate is only valid for the given box.
GenericityCertificate check_mu_generic(const Quiver& q, const Stability& zeta, const Slope& mu,
                                       const DimVector& box);

inline bool is_mu_generic(const Quiver& q, const Stability& zeta, const Slope& mu,
                          const DimVector& box) {
    return check_mu_generic(q, zeta, mu, box).generic;
}

/// Harder-Narasimhan type: nonzero parts with strictly decreasing
/// slopes, summing to the declared total; carries the affine-fibration
/// dimensions f1, f2 and the twist (dbar,dbar) = f1 - f2.
struct HNType {
    std::vector<DimVector> parts;
    std::int64_t f1 = 0;
    std::int64_t f2 = 0;
    std::int64_t twist() const { return f1 - f2; }
};

/// Complete HN-type enumeration for d, including the trivial type (d).
/// Deterministic: graded lexicographic on the flattened part sequence.
std::vector<HNType> hn_types(const Quiver& q, const SlopeFn& slope_of, const DimVector& d);

inline std::vector<HNType> hn_types(const Quiver& q, const Stability& zeta, const DimVector& d) {
    return hn_types(q, plain_slope_rule(zeta), d);
}

/// The twist exponent of an HN type (used as q^{-twist} in the count
/// recursion); recomputed from scratch, independent of the cached fields.
std::int64_t hn_twist(const Quiver& q, const HNType& h);

/// Distinct slopes realized by nonzero vectors within the box, descending.
std::vector<Slope> slopes_on_box(const Stability& zeta, const DimVector& box);

}  // namespace dtq

#endif
