#include "dtq/quiver.hpp"

#include <map>
#include <set>

namespace dtq {

Quiver::Quiver(std::vector<std::string> verts,
               const std::vector<std::pair<std::string, std::string>>& named_arrows)
    : vertices(std::move(verts)) {
    std::set<std::string> seen(vertices.begin(), vertices.end());
    if (seen.size() != vertices.size())
        throw std::invalid_argument("duplicate vertex identifier");
    for (const auto& [s, t] : named_arrows)
        arrows.emplace_back(vertex_index(s), vertex_index(t));
}

int Quiver::vertex_index(const std::string& name) const {
    for (std::size_t i = 0; i < vertices.size(); ++i)
        if (vertices[i] == name) return static_cast<int>(i);
    throw VertexMismatch("unknown vertex '" + name + "'");
}

bool Quiver::is_symmetric() const {
    std::map<std::pair<int, int>, int> count;
    for (const auto& [s, t] : arrows) {
        ++count[{s, t}];
        --count[{t, s}];
    }
    for (const auto& [_, c] : count)
        if (c != 0) return false;
    return true;
}

std::int64_t euler_form(const Quiver& q, const DimVector& d, const DimVector& e) {
    check_dim(q, d, "euler_form");
    check_dim(q, e, "euler_form");
    std::int64_t s = dot(d, e);
    for (const auto& [a, b] : q.arrows) s -= d[static_cast<std::size_t>(a)] * e[static_cast<std::size_t>(b)];
    return s;
}

std::int64_t antisym_form(const Quiver& q, const DimVector& d, const DimVector& e) {
    return euler_form(q, d, e) - euler_form(q, e, d);
}

std::int64_t stack_dim(const Quiver& q, const DimVector& d) {
    check_dim(q, d, "stack_dim");
    return -euler_form(q, d, d);
}

Quiver framed_quiver(const Quiver& q, const DimVector& f) {
    check_dim(q, f, "framed_quiver");
    Quiver r;
    r.vertices = q.vertices;
    for (const auto& v : r.vertices)
        if (v == framed_vertex_name())
            throw std::invalid_argument("quiver already contains the framing vertex name");
    r.vertices.push_back(framed_vertex_name());
    r.arrows = q.arrows;
    int inf = static_cast<int>(q.num_vertices());
    for (std::size_t i = 0; i < f.size(); ++i)
        for (std::int64_t l = 0; l < f[i]; ++l)
            r.arrows.emplace_back(inf, static_cast<int>(i));
    return r;
}

}  // namespace dtq
