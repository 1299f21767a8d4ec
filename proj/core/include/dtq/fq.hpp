#ifndef DTQ_FQ_HPP
#define DTQ_FQ_HPP

#include <cstdint>
#include <vector>

#include "dtq/quiver.hpp"
#include "dtq/ratfunc.hpp"
#include "dtq/stability.hpp"

namespace dtq {

struct BudgetError : std::runtime_error {
    std::uint64_t required;
    explicit BudgetError(std::uint64_t req)
        : std::runtime_error("enumeration budget exceeded: " + std::to_string(req) +
                             " candidate representations"),
          required(req) {}
};

/// F_q for square prime powers q in {4, 9, 25}; elements are indices
/// 0..q-1 (a + b*x -> a + p*b), arithmetic by precomputed tables.
class GF {
public:
    explicit GF(int q);
    int size() const { return q_; }
    std::uint8_t add(std::uint8_t a, std::uint8_t b) const { return add_[a * q_ + b]; }
    std::uint8_t mul(std::uint8_t a, std::uint8_t b) const { return mul_[a * q_ + b]; }
    std::uint8_t neg(std::uint8_t a) const { return neg_[a]; }
    std::uint8_t inv(std::uint8_t a) const;  // a != 0

private:
    int q_, p_;
    std::vector<std::uint8_t> add_, mul_, neg_, inv_;
};

/// Number of F_q-points of the representation space of Q at d whose
/// representation is zeta-semistable, by brute-force enumeration of
/// representations and of destabilizing subrepresentation candidates.
/// Worker count bounded by the DTQ_THREADS environment variable.
std::int64_t enumerate_ss_count(const Quiver& q, const Stability& zeta, const DimVector& d,
                                int fq);

/// |G_d(F_q)| = prod_i prod_{j=0}^{d_i-1} (q^{d_i} - q^j), exactly.
Int group_order_fq(const DimVector& d, int fq);

/// enumerate_ss_count / |G_d(F_q)|.
Rational stacky_count(const Quiver& q, const Stability& zeta, const DimVector& d, int fq);

struct OracleRow {
    DimVector d;
    int q = 0;
    std::int64_t ss_points = 0;
    Int group_order;
    Rational ratio;
    Rational predicted;
    bool match = false;
};

struct OracleReport {
    std::vector<OracleRow> rows;
    bool all_match() const {
        for (const auto& r : rows)
            if (!r.match) return false;
        return true;
    }
};

/// Brute-force stacky semistable counts vs eval_at of the HN-recursion
/// coefficients at t = sqrt(q), for every d <= box and q in q_list.
OracleReport oracle_check(const Quiver& q, const Stability& zeta, const DimVector& box,
                          const std::vector<int>& q_list);

}  // namespace dtq

#endif
