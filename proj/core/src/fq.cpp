#include "dtq/fq.hpp"

#include <algorithm>
#include <cstdlib>
#include <thread>

#include "dtq/engine.hpp"

namespace dtq {

GF::GF(int q) : q_(q) {
    int c1, c0;  // x^2 + c1 x + c0 irreducible over F_p
    switch (q) {
        case 4: p_ = 2; c1 = 1; c0 = 1; break;
        case 9: p_ = 3; c1 = 0; c0 = 1; break;
        case 25: p_ = 5; c1 = 0; c0 = 2; break;
        default: throw std::invalid_argument("GF: q must be one of 4, 9, 25");
    }
    add_.resize(static_cast<std::size_t>(q_) * q_);
    mul_.resize(static_cast<std::size_t>(q_) * q_);
    neg_.resize(static_cast<std::size_t>(q_));
    inv_.resize(static_cast<std::size_t>(q_));
    auto enc = [this](int a, int b) { return static_cast<std::uint8_t>(a + p_ * b); };
    for (int a = 0; a < p_; ++a)
        for (int b = 0; b < p_; ++b) {
            int u = enc(a, b);
            neg_[static_cast<std::size_t>(u)] = enc((p_ - a) % p_, (p_ - b) % p_);
            for (int c = 0; c < p_; ++c)
                for (int d = 0; d < p_; ++d) {
                    int v = enc(c, d);
                    add_[static_cast<std::size_t>(u) * q_ + v] = enc((a + c) % p_, (b + d) % p_);
                    // (a + bx)(c + dx) with x^2 = -c1 x - c0
                    int lo = (a * c + (p_ - c0 % p_) % p_ * (b * d % p_)) % p_;
                    int hi = (a * d + b * c + (p_ - c1 % p_) % p_ * (b * d % p_)) % p_;
                    mul_[static_cast<std::size_t>(u) * q_ + v] = enc(lo, hi);
                }
        }
    for (int u = 1; u < q_; ++u)
        for (int v = 1; v < q_; ++v)
            if (mul_[static_cast<std::size_t>(u) * q_ + v] == 1) inv_[static_cast<std::size_t>(u)] = static_cast<std::uint8_t>(v);
}

std::uint8_t GF::inv(std::uint8_t a) const {
    if (a == 0) throw std::domain_error("GF: inverse of zero");
    return inv_[a];
}

namespace {

constexpr std::uint64_t kBudget = 100'000'000;  // candidate representations

int thread_count() {
    if (const char* env = std::getenv("DTQ_THREADS")) {
        int n = std::atoi(env);
        if (n > 0) return n;
    }
    unsigned hc = std::thread::hardware_concurrency();
    return hc ? static_cast<int>(hc) : 1;
}

// A subspace of F_q^n in reduced row echelon form.
struct Subspace {
    int n = 0;
    std::vector<std::vector<std::uint8_t>> basis;  // rows, rref
    std::vector<int> pivots;
};

// All k-dimensional subspaces of F_q^n, via rref representatives.
std::vector<Subspace> subspaces(const GF& F, int n, int k) {
    std::vector<Subspace> out;
    if (k == 0) {
        out.push_back(Subspace{n, {}, {}});
        return out;
    }
    std::vector<int> piv(static_cast<std::size_t>(k));
    // iterate over pivot column combinations
    for (int i = 0; i < k; ++i) piv[static_cast<std::size_t>(i)] = i;
    for (;;) {
        std::vector<std::pair<int, int>> free_cells;  // (row, col)
        std::vector<bool> is_piv(static_cast<std::size_t>(n), false);
        for (int c : piv) is_piv[static_cast<std::size_t>(c)] = true;
        for (int r = 0; r < k; ++r)
            for (int c = piv[static_cast<std::size_t>(r)] + 1; c < n; ++c)
                if (!is_piv[static_cast<std::size_t>(c)]) free_cells.emplace_back(r, c);

        std::vector<std::uint8_t> vals(free_cells.size(), 0);
        for (;;) {
            Subspace s;
            s.n = n;
            s.pivots = piv;
            s.basis.assign(static_cast<std::size_t>(k),
                           std::vector<std::uint8_t>(static_cast<std::size_t>(n), 0));
            for (int r = 0; r < k; ++r) s.basis[static_cast<std::size_t>(r)][static_cast<std::size_t>(piv[static_cast<std::size_t>(r)])] = 1;
            for (std::size_t i = 0; i < free_cells.size(); ++i)
                s.basis[static_cast<std::size_t>(free_cells[i].first)][static_cast<std::size_t>(free_cells[i].second)] = vals[i];
            out.push_back(std::move(s));
            std::size_t i = 0;
            while (i < vals.size() && vals[i] == F.size() - 1) vals[i++] = 0;
            if (i == vals.size()) break;
            ++vals[i];
        }
        // next pivot combination
        int r = k - 1;
        while (r >= 0 && piv[static_cast<std::size_t>(r)] == n - k + r) --r;
        if (r < 0) break;
        ++piv[static_cast<std::size_t>(r)];
        for (int j = r + 1; j < k; ++j) piv[static_cast<std::size_t>(j)] = piv[static_cast<std::size_t>(j - 1)] + 1;
    }
    return out;
}

// Is w in the row space?  Reduce against the rref basis and test zero.
bool contains(const GF& F, const Subspace& s, const std::uint8_t* w, int n) {
    std::vector<std::uint8_t> v(w, w + n);
    for (std::size_t r = 0; r < s.basis.size(); ++r) {
        std::uint8_t c = v[static_cast<std::size_t>(s.pivots[r])];
        if (c == 0) continue;
        std::uint8_t nc = F.neg(c);
        for (int j = 0; j < n; ++j)
            v[static_cast<std::size_t>(j)] =
                F.add(v[static_cast<std::size_t>(j)], F.mul(nc, s.basis[r][static_cast<std::size_t>(j)]));
    }
    for (int j = 0; j < n; ++j)
        if (v[static_cast<std::size_t>(j)] != 0) return false;
    return true;
}

struct SubTuple {
    std::vector<const Subspace*> spaces;  // one per vertex
};

}  // namespace

Int group_order_fq(const DimVector& d, int fq) {
    Int g = 1;
    for (auto di : d) {
        Int qd = 1;
        for (std::int64_t j = 0; j < di; ++j) qd *= fq;
        Int qj = 1;
        for (std::int64_t j = 0; j < di; ++j) {
            g *= qd - qj;
            qj *= fq;
        }
    }
    return g;
}

std::int64_t enumerate_ss_count(const Quiver& q, const Stability& zeta, const DimVector& d,
                                int fq) {
    check_dim(q, d, "enumerate_ss_count");
    zeta.validate();
    GF F(fq);

    // entry layout: per arrow, a d_t x d_s matrix, row-major
    std::size_t entries = 0;
    std::vector<std::size_t> arrow_off;
    for (const auto& [s, t] : q.arrows) {
        arrow_off.push_back(entries);
        entries += static_cast<std::size_t>(d[static_cast<std::size_t>(s)] * d[static_cast<std::size_t>(t)]);
    }
    std::uint64_t reps = 1;
    for (std::size_t i = 0; i < entries; ++i) {
        if (reps > kBudget / static_cast<std::uint64_t>(fq)) throw BudgetError(reps * static_cast<std::uint64_t>(fq));
        reps *= static_cast<std::uint64_t>(fq);
    }

    if (is_zero(d)) return 1;

    // destabilizing candidates: proper nonzero e <= d with slope(e) > slope(d)
    Slope mu = slope(zeta, d);
    std::vector<DimVector> destab;
    {
        DimVector e(d.size(), 0);
        for (;;) {
            std::size_t i = 0;
            while (i < e.size() && e[i] == d[i]) e[i++] = 0;
            if (i == e.size()) break;
            ++e[i];
            if (e == d) continue;
            if (slope(zeta, e) > mu) destab.push_back(e);
        }
    }
    if (destab.empty()) return static_cast<std::int64_t>(reps);

    // subspace lists per vertex and dimension
    std::vector<std::vector<std::vector<Subspace>>> sub(d.size());
    for (std::size_t i = 0; i < d.size(); ++i) {
        sub[i].resize(static_cast<std::size_t>(d[i]) + 1);
        for (std::int64_t k = 0; k <= d[i]; ++k)
            sub[i][static_cast<std::size_t>(k)] = subspaces(F, static_cast<int>(d[i]), static_cast<int>(k));
    }

    // flatten candidate subrepresentation supports
    std::vector<SubTuple> tuples;
    for (const auto& e : destab) {
        std::vector<std::size_t> idx(d.size(), 0);
        for (;;) {
            SubTuple t;
            for (std::size_t i = 0; i < d.size(); ++i)
                t.spaces.push_back(&sub[i][static_cast<std::size_t>(e[i])][idx[i]]);
            tuples.push_back(std::move(t));
            std::size_t i = 0;
            while (i < d.size() && idx[i] + 1 == sub[i][static_cast<std::size_t>(e[i])].size()) idx[i++] = 0;
            if (i == d.size()) break;
            ++idx[i];
        }
    }

    auto semistable = [&](const std::vector<std::uint8_t>& m) {
        std::uint8_t image[16];
        for (const auto& t : tuples) {
            bool invariant = true;
            for (std::size_t a = 0; a < q.arrows.size() && invariant; ++a) {
                auto [vs, vt] = q.arrows[a];
                int ns = static_cast<int>(d[static_cast<std::size_t>(vs)]);
                int nt = static_cast<int>(d[static_cast<std::size_t>(vt)]);
                const Subspace& src = *t.spaces[static_cast<std::size_t>(vs)];
                const Subspace& dst = *t.spaces[static_cast<std::size_t>(vt)];
                const std::uint8_t* mat = m.data() + arrow_off[a];
                for (const auto& bvec : src.basis) {
                    for (int r = 0; r < nt; ++r) {
                        std::uint8_t acc = 0;
                        for (int c = 0; c < ns; ++c)
                            acc = F.add(acc, F.mul(mat[r * ns + c], bvec[static_cast<std::size_t>(c)]));
                        image[r] = acc;
                    }
                    if (!contains(F, dst, image, nt)) {
                        invariant = false;
                        break;
                    }
                }
            }
            if (invariant) return false;  // destabilizing subrepresentation found
        }
        return true;
    };

    int nthreads = std::min<std::uint64_t>(static_cast<std::uint64_t>(thread_count()), reps);
    std::vector<std::int64_t> partial(static_cast<std::size_t>(nthreads), 0);
    std::vector<std::thread> workers;
    for (int w = 0; w < nthreads; ++w) {
        std::uint64_t lo = reps * static_cast<std::uint64_t>(w) / static_cast<std::uint64_t>(nthreads);
        std::uint64_t hi = reps * static_cast<std::uint64_t>(w + 1) / static_cast<std::uint64_t>(nthreads);
        workers.emplace_back([&, lo, hi, w] {
            std::vector<std::uint8_t> m(entries, 0);
            std::uint64_t r = lo;
            for (std::size_t i = 0; i < entries; ++i) {
                m[i] = static_cast<std::uint8_t>(r % static_cast<std::uint64_t>(fq));
                r /= static_cast<std::uint64_t>(fq);
            }
            std::int64_t count = 0;
            for (std::uint64_t idx = lo; idx < hi; ++idx) {
                if (semistable(m)) ++count;
                std::size_t i = 0;
                while (i < entries && m[i] == fq - 1) m[i++] = 0;
                if (i < entries) ++m[i];
            }
            partial[static_cast<std::size_t>(w)] = count;
        });
    }
    for (auto& t : workers) t.join();
    std::int64_t totalcount = 0;
    for (auto c : partial) totalcount += c;
    return totalcount;
}

Rational stacky_count(const Quiver& q, const Stability& zeta, const DimVector& d, int fq) {
    return Rational(Int(enumerate_ss_count(q, zeta, d, fq)), group_order_fq(d, fq));
}

OracleReport oracle_check(const Quiver& q, const Stability& zeta, const DimVector& box,
                          const std::vector<int>& q_list) {
    GradedSeries css = count_semistable_series(q, zeta, box);
    OracleReport rep;
    // every d in the box, including those whose semistable count vanishes
    DimVector d(box.size(), 0);
    for (;;) {
        RatFunc c = css.at(d);
        for (int fq : q_list) {
            int t0;
            switch (fq) {
                case 4: t0 = 2; break;
                case 9: t0 = 3; break;
                case 25: t0 = 5; break;
                default: throw std::invalid_argument("oracle_check: q must be one of 4, 9, 25");
            }
            OracleRow row;
            row.d = d;
            row.q = fq;
            row.ss_points = enumerate_ss_count(q, zeta, d, fq);
            row.group_order = group_order_fq(d, fq);
            row.ratio = Rational(Int(row.ss_points), row.group_order);
            row.predicted = c.eval_at(Rational(t0));
            row.match = row.ratio == row.predicted;
            rep.rows.push_back(std::move(row));
        }
        std::size_t i = 0;
        while (i < d.size() && d[i] == box[i]) d[i++] = 0;
        if (i == d.size()) break;
        ++d[i];
    }
    return rep;
}

}  // namespace dtq
