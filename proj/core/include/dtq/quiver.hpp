#ifndef DTQ_QUIVER_HPP
#define DTQ_QUIVER_HPP

#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace dtq {

/// Dimension vector (and framing vector): one nonnegative entry per
/// vertex, aligned with the quiver's declaration order.
using DimVector = std::vector<std::int64_t>;

struct VertexMismatch : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

/// Directed multigraph.  Parallel arrows and loops are allowed; parallel
/// arrows are stored by repetition (only counts matter).  Immutable by
/// convention after construction.
struct Quiver {
    std::vector<std::string> vertices;
    std::vector<std::pair<int, int>> arrows;  // (source index, target index)

    Quiver() = default;
    Quiver(std::vector<std::string> verts,
           const std::vector<std::pair<std::string, std::string>>& named_arrows);

    std::size_t num_vertices() const { return vertices.size(); }
    int vertex_index(const std::string& name) const;

    /// True iff for every ordered pair (i,j) the number of arrows i->j
    /// equals the number j->i.
    bool is_symmetric() const;
};

inline void check_dim(const Quiver& q, const DimVector& d, const char* what) {
    if (d.size() != q.num_vertices())
        throw VertexMismatch(std::string(what) + ": dimension vector has " +
                             std::to_string(d.size()) + " entries, quiver has " +
                             std::to_string(q.num_vertices()) + " vertices");
}

inline std::int64_t total(const DimVector& d) {
    return std::accumulate(d.begin(), d.end(), std::int64_t{0});
}

inline bool leq(const DimVector& a, const DimVector& b) {
    for (std::size_t i = 0; i < a.size(); ++i)
        if (a[i] > b[i]) return false;
    return true;
}

inline bool is_zero(const DimVector& d) {
    for (auto v : d)
        if (v != 0) return false;
    return true;
}

inline DimVector vec_add(const DimVector& a, const DimVector& b) {
    DimVector r(a);
    for (std::size_t i = 0; i < b.size(); ++i) r[i] += b[i];
    return r;
}

inline DimVector vec_sub(const DimVector& a, const DimVector& b) {
    DimVector r(a);
    for (std::size_t i = 0; i < b.size(); ++i) r[i] -= b[i];
    return r;
}

inline std::int64_t dot(const DimVector& a, const DimVector& b) {
    std::int64_t s = 0;
    for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
    return s;
}

/// Euler pairing (d,e) = sum_i d_i e_i - sum_{a in Q_1} d_{s(a)} e_{t(a)}.
std::int64_t euler_form(const Quiver& q, const DimVector& d, const DimVector& e);

/// Antisymmetrized pairing <d,e> = (d,e) - (e,d).
std::int64_t antisym_form(const Quiver& q, const DimVector& d, const DimVector& e);

/// -(d,d) = dim of the stack of d-dimensional representations.
std::int64_t stack_dim(const Quiver& q, const DimVector& d);

/// New quiver with one extra vertex (named by framed_vertex_name) and
/// f_i arrows from it to vertex i.  Original arrows are preserved; the
/// framing vertex is appended last.
Quiver framed_quiver(const Quiver& q, const DimVector& f);

inline const char* framed_vertex_name() { return "∞"; }

}  // namespace dtq

#endif
