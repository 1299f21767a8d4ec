#include "dtq/stability.hpp"

#include <algorithm>
#include <map>

namespace dtq {

void Stability::validate() const {
    for (const auto& c : charges)
        if (c.im <= 0) throw std::invalid_argument("stability: Im(zeta_i) must be > 0");
}

bool Slope::operator<(const Slope& o) const {
    if (plus_ && o.plus_ && value_ != o.value_)
        throw std::logic_error("comparison of two distinct symbolic slopes");
    if (value_ != o.value_) return value_ < o.value_;
    return plus_ < o.plus_;
}

std::string Slope::to_string() const {
    std::string s = value_.str();
    if (plus_) s += "+";
    return s;
}

Slope slope(const Stability& zeta, const DimVector& d) {
    if (d.size() != zeta.charges.size())
        throw VertexMismatch("slope: dimension vector size does not match stability");
    if (is_zero(d)) throw std::invalid_argument("slope of the zero dimension vector is undefined");
    Rational re(0), im(0);
    for (std::size_t i = 0; i < d.size(); ++i) {
        re += zeta.charges[i].re * d[i];
        im += zeta.charges[i].im * d[i];
    }
    return Slope(-re / im);
}

SlopeFn framed_slope_rule(const Stability& base, const Slope& mu) {
    if (mu.is_plus()) throw std::invalid_argument("framed_slope_rule: mu must be rational");
    Slope above = Slope::just_above(mu.value());
    return [base, above](const DimVector& d) {
        if (d.empty()) throw std::invalid_argument("framed slope of empty vector");
        std::int64_t delta = d.back();
        if (delta != 0 && delta != 1)
            throw std::invalid_argument("framed slope: framing multiplicity must be 0 or 1");
        if (delta == 1) return above;
        DimVector under(d.begin(), d.end() - 1);
        return slope(base, under);
    };
}

namespace {

// Nonzero vectors <= box, graded-lex (by total, then lexicographic).
std::vector<DimVector> box_vectors(const DimVector& box) {
    std::vector<DimVector> out;
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

void fill_twists(const Quiver& q, HNType& h) {
    h.f1 = 0;
    h.f2 = 0;
    for (std::size_t r = 0; r < h.parts.size(); ++r)
        for (std::size_t rp = r + 1; rp < h.parts.size(); ++rp) {
            h.f1 += dot(h.parts[r], h.parts[rp]);
            for (const auto& [s, t] : q.arrows)
                h.f2 += h.parts[rp][static_cast<std::size_t>(s)] *
                        h.parts[r][static_cast<std::size_t>(t)];
        }
}

}  // namespace

std::vector<DimVector> lambda_mu(const Stability& zeta, const Slope& mu, const DimVector& box) {
    std::vector<DimVector> out;
    for (const auto& d : box_vectors(box))
        if (slope(zeta, d) == mu) out.push_back(d);
    return out;
}

GenericityCertificate check_mu_generic(const Quiver& q, const Stability& zeta, const Slope& mu,
                                       const DimVector& box) {
    auto lam = lambda_mu(zeta, mu, box);
    for (const auto& d : lam)
        for (const auto& e : lam) {
            std::int64_t p = antisym_form(q, d, e);
            if (p != 0) return GenericityCertificate{false, d, e, p};
        }
    return GenericityCertificate{};
}

std::vector<HNType> hn_types(const Quiver& q, const SlopeFn& slope_of, const DimVector& d) {
    if (is_zero(d)) throw std::invalid_argument("hn_types: d must be nonzero");
    std::vector<HNType> out;
    std::vector<DimVector> cand = box_vectors(d);
    std::map<DimVector, Slope> slopes;
    for (const auto& e : cand) slopes.emplace(e, slope_of(e));

    std::vector<DimVector> stack;
    // Enumerates sequences with strictly decreasing slopes; bound is the
    // slope of the previous part (absent for the first part).
    auto rec = [&](auto&& self, const DimVector& rest, const std::optional<Slope>& bound) -> void {
        if (is_zero(rest)) {
            HNType h;
            h.parts = stack;
            fill_twists(q, h);
            out.push_back(std::move(h));
            return;
        }
        for (const auto& e : cand) {
            if (!leq(e, rest)) continue;
            const Slope& s = slopes.at(e);
            if (bound && !(s < *bound)) continue;
            stack.push_back(e);
            self(self, vec_sub(rest, e), s);
            stack.pop_back();
        }
    };
    rec(rec, d, std::nullopt);

    std::sort(out.begin(), out.end(), [](const HNType& a, const HNType& b) {
        std::vector<std::int64_t> fa, fb;
        for (const auto& p : a.parts) fa.insert(fa.end(), p.begin(), p.end());
        for (const auto& p : b.parts) fb.insert(fb.end(), p.begin(), p.end());
        if (fa.size() != fb.size()) return fa.size() < fb.size();
        return fa < fb;
    });
    return out;
}

std::int64_t hn_twist(const Quiver& q, const HNType& h) {
    HNType copy = h;
    fill_twists(q, copy);
    return copy.twist();
}

std::vector<Slope> slopes_on_box(const Stability& zeta, const DimVector& box) {
    std::vector<Slope> out;
    for (const auto& d : box_vectors(box)) {
        Slope s = slope(zeta, d);
        if (std::find(out.begin(), out.end(), s) == out.end()) out.push_back(s);
    }
    std::sort(out.begin(), out.end(), [](const Slope& a, const Slope& b) { return b < a; });
    return out;
}

}  // namespace dtq
