#ifndef DTQ_TEST_HELPERS_HPP
#define DTQ_TEST_HELPERS_HPP

#include <random>

#include "dtq/quiver.hpp"
#include "dtq/ratfunc.hpp"
#include "dtq/stability.hpp"

namespace dtq::test {

inline Quiver jordan() { return Quiver({"1"}, {{"1", "1"}}); }

inline Quiver mloop(int m) {
    std::vector<std::pair<std::string, std::string>> arrows(static_cast<std::size_t>(m), {"1", "1"});
    return Quiver({"1"}, arrows);
}

inline Quiver a2() { return Quiver({"1", "2"}, {{"1", "2"}}); }

inline Quiver k2() { return Quiver({"1", "2"}, {{"1", "2"}, {"1", "2"}}); }

// chamber with slope(1,0) = 1 > slope(0,1) = 0
inline Stability chamber_a() {
    Stability z;
    z.charges = {Charge{Rational(-1), Rational(1)}, Charge{Rational(0), Rational(1)}};
    return z;
}

// opposite chamber: slope(1,0) = 0 < slope(0,1) = 1
inline Stability chamber_b() {
    Stability z;
    z.charges = {Charge{Rational(0), Rational(1)}, Charge{Rational(-1), Rational(1)}};
    return z;
}

inline RatFunc tpow(int k) { return RatFunc::t_power(k); }
inline RatFunc qpow(int k) { return RatFunc::q_power(k); }

inline RatFunc random_ratfunc(std::mt19937& rng) {
    std::uniform_int_distribution<int> exp(-3, 3), coeff(-4, 4);
    RatFunc num, den;
    for (int i = 0; i < 3; ++i) num += RatFunc::monomial(Rational(coeff(rng)), exp(rng));
    while (den.is_zero())
        for (int i = 0; i < 2; ++i) den += RatFunc::monomial(Rational(coeff(rng)), exp(rng));
    return num / den;
}

}  // namespace dtq::test

#endif
