#include "dtq/ratfunc.hpp"

#include <algorithm>
#include <sstream>

namespace dtq {

namespace {

using Poly = RatFunc::Poly;

void strip_high(Poly& p) {
    while (!p.empty() && p.back() == 0) p.pop_back();
}

// Removes the t^k factor from p, returns k.  p must be nonzero.
int strip_low(Poly& p) {
    std::size_t k = 0;
    while (k < p.size() && p[k] == 0) ++k;
    p.erase(p.begin(), p.begin() + static_cast<std::ptrdiff_t>(k));
    return static_cast<int>(k);
}

Poly mul(const Poly& a, const Poly& b) {
    if (a.empty() || b.empty()) return {};
    Poly r(a.size() + b.size() - 1, Rational(0));
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i] == 0) continue;
        for (std::size_t j = 0; j < b.size(); ++j)
            if (b[j] != 0) r[i + j] += a[i] * b[j];
    }
    strip_high(r);
    return r;
}

Poly add(const Poly& a, const Poly& b) {
    Poly r(std::max(a.size(), b.size()), Rational(0));
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i];
    for (std::size_t i = 0; i < b.size(); ++i) r[i] += b[i];
    strip_high(r);
    return r;
}

Poly neg(Poly a) {
    for (auto& c : a) c = -c;
    return a;
}

// Remainder of a by b (b nonzero), Euclidean division over Q.
Poly rem(Poly a, const Poly& b) {
    while (a.size() >= b.size() && !a.empty()) {
        Rational c = a.back() / b.back();
        std::size_t off = a.size() - b.size();
        for (std::size_t i = 0; i < b.size(); ++i) a[off + i] -= c * b[i];
        a.pop_back();
        strip_high(a);
    }
    return a;
}

Poly make_monic(Poly p) {
    if (p.empty() || p.back() == 1) return p;
    Rational lead = p.back();
    for (auto& c : p) c /= lead;
    return p;
}

Poly poly_gcd(Poly a, Poly b) {
    while (!b.empty()) {
        Poly r = rem(a, b);
        a = std::move(b);
        b = std::move(r);
    }
    return make_monic(a);
}

// Exact quotient a/b when b | a.
Poly quo(Poly a, const Poly& b) {
    Poly q(a.size() >= b.size() ? a.size() - b.size() + 1 : 0, Rational(0));
    while (a.size() >= b.size() && !a.empty()) {
        Rational c = a.back() / b.back();
        std::size_t off = a.size() - b.size();
        q[off] = c;
        for (std::size_t i = 0; i < b.size(); ++i) a[off + i] -= c * b[i];
        a.pop_back();
        strip_high(a);
    }
    strip_high(q);
    return q;
}

Rational eval_poly(const Poly& p, const Rational& x) {
    Rational r(0);
    for (auto it = p.rbegin(); it != p.rend(); ++it) r = r * x + *it;
    return r;
}

Poly reverse_poly(const Poly& p) {
    Poly r(p.rbegin(), p.rend());
    strip_high(r);
    return r;
}

}  // namespace

void RatFunc::normalize() {
    if (den_.empty()) throw DivisionByZero("rational function with zero denominator");
    strip_high(num_);
    if (num_.empty()) {
        shift_ = 0;
        den_ = {Rational(1)};
        return;
    }
    shift_ += strip_low(num_);
    shift_ -= strip_low(den_);
    Poly g = poly_gcd(num_, den_);
    if (g.size() > 1) {
        num_ = quo(num_, g);
        den_ = quo(den_, g);
    }
    if (den_.back() != 1) {
        Rational lead = den_.back();
        for (auto& c : den_) c /= lead;
        for (auto& c : num_) c /= lead;
    }
}

RatFunc RatFunc::from_rational(const Rational& v) {
    RatFunc r;
    if (v != 0) r.num_ = {v};
    r.normalize();
    return r;
}

RatFunc RatFunc::t_power(int k) {
    RatFunc r;
    r.num_ = {Rational(1)};
    r.shift_ = k;
    return r;
}

RatFunc RatFunc::monomial(const Rational& c, int k) {
    RatFunc r;
    if (c != 0) {
        r.num_ = {c};
        r.shift_ = k;
    }
    return r;
}

RatFunc RatFunc::from_laurent(const LaurentPoly& p) {
    RatFunc r;
    for (const auto& [e, c] : p) r += monomial(Rational(c), e);
    return r;
}

RatFunc RatFunc::from_fraction(const std::map<int, Rational>& num,
                               const std::map<int, Rational>& den) {
    RatFunc n, d;
    for (const auto& [e, c] : num) n += monomial(c, e);
    for (const auto& [e, c] : den) d += monomial(c, e);
    return n / d;
}

bool RatFunc::is_one() const {
    return shift_ == 0 && num_.size() == 1 && num_[0] == 1 && den_.size() == 1;
}

RatFunc RatFunc::operator-() const {
    RatFunc r = *this;
    r.num_ = neg(r.num_);
    return r;
}

RatFunc RatFunc::operator+(const RatFunc& o) const {
    if (is_zero()) return o;
    if (o.is_zero()) return *this;
    int s = std::min(shift_, o.shift_);
    Poly a = num_, b = o.num_;
    a.insert(a.begin(), static_cast<std::size_t>(shift_ - s), Rational(0));
    b.insert(b.begin(), static_cast<std::size_t>(o.shift_ - s), Rational(0));
    RatFunc r;
    r.shift_ = s;
    r.num_ = add(mul(a, o.den_), mul(b, den_));
    r.den_ = mul(den_, o.den_);
    r.normalize();
    return r;
}

RatFunc RatFunc::operator-(const RatFunc& o) const { return *this + (-o); }

RatFunc RatFunc::operator*(const RatFunc& o) const {
    RatFunc r;
    r.shift_ = shift_ + o.shift_;
    r.num_ = mul(num_, o.num_);
    r.den_ = mul(den_, o.den_);
    r.normalize();
    return r;
}

RatFunc RatFunc::operator/(const RatFunc& o) const {
    if (o.is_zero()) throw DivisionByZero("division by zero rational function");
    RatFunc r;
    r.shift_ = shift_ - o.shift_;
    r.num_ = mul(num_, o.den_);
    r.den_ = mul(den_, o.num_);
    r.normalize();
    return r;
}

RatFunc RatFunc::pow(long e) const {
    if (e < 0) return (RatFunc(1) / *this).pow(-e);
    RatFunc r(1), base = *this;
    while (e > 0) {
        if (e & 1) r *= base;
        base *= base;
        e >>= 1;
    }
    return r;
}

RatFunc RatFunc::adams(long n) const {
    if (n < 1) throw std::invalid_argument("adams: n must be >= 1");
    auto stretch = [n](const Poly& p) {
        if (p.empty()) return Poly{};
        Poly r((p.size() - 1) * static_cast<std::size_t>(n) + 1, Rational(0));
        for (std::size_t i = 0; i < p.size(); ++i) r[i * static_cast<std::size_t>(n)] = p[i];
        return r;
    };
    RatFunc r;
    r.shift_ = shift_ * static_cast<int>(n);
    r.num_ = stretch(num_);
    r.den_ = stretch(den_);
    r.normalize();
    return r;
}

RatFunc RatFunc::invert_t() const {
    if (is_zero()) return *this;
    RatFunc r;
    r.num_ = reverse_poly(num_);
    r.den_ = reverse_poly(den_);
    r.shift_ = -shift_ - static_cast<int>(num_.size()) + static_cast<int>(den_.size());
    r.normalize();
    return r;
}

std::optional<LaurentPoly> RatFunc::as_laurent_polynomial() const {
    if (den_.size() != 1) return std::nullopt;  // canonical den is monic, so den == 1
    LaurentPoly p;
    for (std::size_t i = 0; i < num_.size(); ++i) {
        if (num_[i] == 0) continue;
        if (denominator(num_[i]) != 1) return std::nullopt;
        p[shift_ + static_cast<int>(i)] = numerator(num_[i]);
    }
    return p;
}

std::vector<std::pair<int, Rational>> RatFunc::expand_ascending(int N) const {
    std::vector<std::pair<int, Rational>> out;
    if (is_zero() || shift_ > N) return out;
    std::size_t terms = static_cast<std::size_t>(N - shift_) + 1;
    std::vector<Rational> c(terms, Rational(0));
    for (std::size_t k = 0; k < terms; ++k) {
        Rational v = k < num_.size() ? num_[k] : Rational(0);
        for (std::size_t j = 1; j <= k && j < den_.size(); ++j) v -= den_[j] * c[k - j];
        c[k] = v / den_[0];
        if (c[k] != 0) out.emplace_back(shift_ + static_cast<int>(k), c[k]);
    }
    return out;
}

Rational RatFunc::eval_at(const Rational& t0) const {
    if (is_zero()) return Rational(0);
    if (t0 == 0 && shift_ < 0) throw PoleError("pole at t = 0");
    Rational d = eval_poly(den_, t0);
    if (d == 0) throw PoleError("pole at the evaluation point");
    Rational v = eval_poly(num_, t0) / d;
    if (shift_ != 0) {
        Rational tp(1);
        int e = shift_ > 0 ? shift_ : -shift_;
        for (int i = 0; i < e; ++i) tp *= t0;
        v = shift_ > 0 ? Rational(v * tp) : Rational(v / tp);
    }
    return v;
}

std::pair<std::map<int, Int>, std::map<int, Int>> RatFunc::integer_form() const {
    Int l = 1, g = 0;
    auto scan = [&](const Poly& p) {
        for (const auto& c : p)
            if (c != 0) l = boost::multiprecision::lcm(l, denominator(c));
    };
    scan(num_);
    scan(den_);
    auto scan2 = [&](const Poly& p) {
        for (const auto& c : p)
            if (c != 0) g = boost::multiprecision::gcd(g, Int(numerator(c) * (l / denominator(c))));
    };
    scan2(num_);
    scan2(den_);
    if (g == 0) g = 1;
    if (!den_.empty() && den_.back() < 0) g = -g;  // unreachable for monic den; kept for safety
    std::map<int, Int> n, d;
    for (std::size_t i = 0; i < num_.size(); ++i)
        if (num_[i] != 0)
            n[shift_ + static_cast<int>(i)] = Int(numerator(num_[i]) * (l / denominator(num_[i]))) / g;
    for (std::size_t i = 0; i < den_.size(); ++i)
        if (den_[i] != 0)
            d[static_cast<int>(i)] = Int(numerator(den_[i]) * (l / denominator(den_[i]))) / g;
    return {std::move(n), std::move(d)};
}

std::string RatFunc::to_string() const {
    if (is_zero()) return "0";
    auto [n, d] = integer_form();
    auto poly_str = [](const std::map<int, Int>& p) {
        std::ostringstream os;
        bool first = true;
        for (const auto& [e, c] : p) {
            if (!first) os << (c > 0 ? " + " : " - ");
            else if (c < 0) os << "-";
            Int a = boost::multiprecision::abs(c);
            if (a != 1 || e == 0) os << a.str();
            if (e != 0) {
                if (a != 1) os << "*";
                os << "t";
                if (e != 1) os << "^" << e;
            }
            first = false;
        }
        return os.str();
    };
    if (d.size() == 1 && d.begin()->first == 0 && d.begin()->second == 1) return poly_str(n);
    return "(" + poly_str(n) + ")/(" + poly_str(d) + ")";
}

RatFunc chi_cpinf_vir() {
    return RatFunc::t_power(1) / (RatFunc::q_power(1) - RatFunc(1));
}

RatFunc chi_proj_vir(long n) {
    if (n <= 0) return RatFunc();
    RatFunc s;
    for (long j = 0; j < n; ++j) s += RatFunc::q_power(static_cast<int>(j));
    return RatFunc(-1).pow(n - 1) * RatFunc::t_power(static_cast<int>(-(n - 1))) * s;
}

}  // namespace dtq
