#ifndef DTQ_RATFUNC_HPP
#define DTQ_RATFUNC_HPP

#include <boost/multiprecision/cpp_int.hpp>

#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace dtq {

using Int = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

/// Laurent polynomial in t with integer coefficients; finite support,
/// values nonzero.  Keys are t-exponents (t = q^{1/2}, so even keys are
/// integer powers of q).
using LaurentPoly = std::map<int, Int>;

struct PoleError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct DivisionByZero : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Exact rational function in the formal variable t over the rationals.
///
/// Canonical form: value = t^shift * num(t)/den(t) with num(0) != 0 (or
/// num = 0), den(0) != 0, den monic, gcd(num, den) = 1.  Equality is
/// structural equality of the canonical form.
class RatFunc {
public:
    using Poly = std::vector<Rational>;  // dense, ascending, no trailing zeros

    RatFunc() : shift_(0), num_{}, den_{Rational(1)} {}
    RatFunc(long v) { *this = from_rational(Rational(v)); }
    explicit RatFunc(const Rational& v) { *this = from_rational(v); }

    static RatFunc from_rational(const Rational& v);
    static RatFunc t_power(int k);                       // t^k
    static RatFunc q_power(int k) { return t_power(2 * k); }
    static RatFunc monomial(const Rational& c, int k);   // c * t^k
    static RatFunc from_laurent(const LaurentPoly& p);
    /// num/den as Laurent coefficient maps; den must be nonzero.
    static RatFunc from_fraction(const std::map<int, Rational>& num,
                                 const std::map<int, Rational>& den);

    bool is_zero() const { return num_.empty(); }
    bool is_one() const;

    RatFunc operator-() const;
    RatFunc operator+(const RatFunc& o) const;
    RatFunc operator-(const RatFunc& o) const;
    RatFunc operator*(const RatFunc& o) const;
    RatFunc operator/(const RatFunc& o) const;  // throws DivisionByZero
    RatFunc& operator+=(const RatFunc& o) { return *this = *this + o; }
    RatFunc& operator-=(const RatFunc& o) { return *this = *this - o; }
    RatFunc& operator*=(const RatFunc& o) { return *this = *this * o; }
    RatFunc& operator/=(const RatFunc& o) { return *this = *this / o; }
    RatFunc pow(long e) const;                  // negative e inverts

    bool operator==(const RatFunc& o) const {
        return shift_ == o.shift_ && num_ == o.num_ && den_ == o.den_;
    }
    bool operator!=(const RatFunc& o) const { return !(*this == o); }

    /// t -> t^n substitution, n >= 1.
    RatFunc adams(long n) const;
    /// t -> 1/t substitution (an involutive field automorphism).
    RatFunc invert_t() const;

    /// The integer Laurent polynomial equal to this value, if the
    /// denominator is trivial and all coefficients are integers.
    /// Exact -- no truncation involved.
    std::optional<LaurentPoly> as_laurent_polynomial() const;

    /// True iff the value is fixed by t <-> 1/t.
    bool is_palindromic() const { return *this == invert_t(); }

    /// Ascending Laurent expansion up to and including t-exponent N.
    /// Well defined because den(0) != 0 in canonical form.
    std::vector<std::pair<int, Rational>> expand_ascending(int N) const;

    /// Lowest t-exponent of the ascending expansion; nullopt for 0.
    std::optional<int> order() const {
        if (is_zero()) return std::nullopt;
        return shift_;
    }

    Rational eval_at(const Rational& t0) const;  // throws PoleError

    int shift() const { return shift_; }
    const Poly& num() const { return num_; }
    const Poly& den() const { return den_; }

    std::string to_string() const;  // human-readable, deterministic

    /// Integer-cleared presentation (num, den) as Laurent coefficient
    /// maps with coprime integer coefficients, den leading coeff > 0.
    std::pair<std::map<int, Int>, std::map<int, Int>> integer_form() const;

private:
    int shift_;
    Poly num_;
    Poly den_;
    void normalize();
};

inline RatFunc operator*(long a, const RatFunc& b) { return RatFunc(a) * b; }

/// chi of H(CP^infinity)_vir: t/(q-1), the inverse of (t - 1/t).
RatFunc chi_cpinf_vir();

/// chi of H(P^{n-1})_vir: (-t)^{-(n-1)} (1 + q + ... + q^{n-1}); zero for n = 0.
RatFunc chi_proj_vir(long n);

}  // namespace dtq

#endif
