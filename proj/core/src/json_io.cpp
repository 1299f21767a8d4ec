#include "dtq/json_io.hpp"

#include <sstream>

namespace dtq {

Rational rational_from_string(const std::string& s) {
    if (s.empty()) throw ParseError("empty rational");
    try {
        return Rational(s);
    } catch (const std::exception&) {
        throw ParseError("malformed rational '" + s + "'");
    }
}

std::string dimvec_key(const DimVector& d) {
    std::ostringstream os;
    for (std::size_t i = 0; i < d.size(); ++i) {
        if (i) os << ",";
        os << d[i];
    }
    return os.str();
}

DimVector dimvec_from_key(const std::string& key) {
    DimVector d;
    std::istringstream is(key);
    std::string part;
    while (std::getline(is, part, ',')) {
        try {
            d.push_back(std::stoll(part));
        } catch (const std::exception&) {
            throw ParseError("malformed dimension vector '" + key + "'");
        }
    }
    if (d.empty()) throw ParseError("empty dimension vector");
    return d;
}

Json quiver_to_json(const Quiver& q) {
    Json j;
    j["vertices"] = q.vertices;
    Json arrows = Json::array();
    for (const auto& [s, t] : q.arrows)
        arrows.push_back({q.vertices[static_cast<std::size_t>(s)], q.vertices[static_cast<std::size_t>(t)]});
    j["arrows"] = arrows;
    return j;
}

Quiver quiver_from_json(const Json& j) {
    if (!j.is_object() || !j.contains("vertices") || !j.contains("arrows"))
        throw ParseError("quiver JSON needs 'vertices' and 'arrows'");
    std::vector<std::string> verts = j.at("vertices").get<std::vector<std::string>>();
    std::vector<std::pair<std::string, std::string>> arrows;
    for (const auto& a : j.at("arrows")) {
        if (!a.is_array() || a.size() != 2) throw ParseError("arrow must be a [source, target] pair");
        arrows.emplace_back(a[0].get<std::string>(), a[1].get<std::string>());
    }
    try {
        return Quiver(std::move(verts), arrows);
    } catch (const std::invalid_argument& e) {
        throw ParseError(e.what());
    }
}

Json stability_to_json(const Stability& z) {
    Json j = Json::array();
    for (const auto& c : z.charges) j.push_back({{"re", c.re.str()}, {"im", c.im.str()}});
    return j;
}

Stability stability_from_json(const Json& j) {
    if (!j.is_array()) throw ParseError("stability JSON must be an array of charges");
    Stability z;
    for (const auto& c : j) {
        if (!c.is_object() || !c.contains("re") || !c.contains("im"))
            throw ParseError("charge needs 're' and 'im'");
        z.charges.push_back(Charge{rational_from_string(c.at("re").get<std::string>()),
                                   rational_from_string(c.at("im").get<std::string>())});
    }
    try {
        z.validate();
    } catch (const std::invalid_argument& e) {
        throw ParseError(e.what());
    }
    return z;
}

Json ratfunc_to_json(const RatFunc& f) {
    auto [num, den] = f.integer_form();
    Json jn = Json::object(), jd = Json::object();
    for (const auto& [e, c] : num) jn[std::to_string(e)] = c.str();
    for (const auto& [e, c] : den) jd[std::to_string(e)] = c.str();
    return Json{{"num", jn}, {"den", jd}};
}

RatFunc ratfunc_from_json(const Json& j) {
    if (!j.is_object() || !j.contains("num") || !j.contains("den"))
        throw ParseError("rational function JSON needs 'num' and 'den'");
    auto read = [](const Json& side) {
        std::map<int, Rational> m;
        for (const auto& [k, v] : side.items()) {
            int e;
            try {
                e = std::stoi(k);
            } catch (const std::exception&) {
                throw ParseError("malformed exponent '" + k + "'");
            }
            m[e] = rational_from_string(v.get<std::string>());
        }
        return m;
    };
    try {
        return RatFunc::from_fraction(read(j.at("num")), read(j.at("den")));
    } catch (const DivisionByZero&) {
        throw ParseError("zero denominator");
    }
}

Json laurent_to_json(const LaurentPoly& p) {
    Json j = Json::object();
    for (const auto& [e, c] : p) j[std::to_string(e)] = c.str();
    return j;
}

Json series_to_json(const GradedSeries& s) {
    Json j;
    j["box"] = s.box;
    j["tag"] = s.tag == SeriesTag::count ? "count" : "virtual";
    Json coeffs = Json::object();
    for (const auto& [d, c] : s.coeffs)
        if (!c.is_zero() || is_zero(d)) coeffs[dimvec_key(d)] = ratfunc_to_json(c);
    j["coeffs"] = coeffs;
    return j;
}

GradedSeries series_from_json(const Json& j) {
    if (!j.is_object() || !j.contains("box") || !j.contains("tag") || !j.contains("coeffs"))
        throw ParseError("series JSON needs 'box', 'tag', 'coeffs'");
    std::string tag = j.at("tag").get<std::string>();
    if (tag != "count" && tag != "virtual") throw ParseError("unknown series tag '" + tag + "'");
    GradedSeries s(j.at("box").get<DimVector>(),
                   tag == "count" ? SeriesTag::count : SeriesTag::virt);
    for (const auto& [k, v] : j.at("coeffs").items()) {
        DimVector d = dimvec_from_key(k);
        if (d.size() != s.box.size()) throw ParseError("coefficient key size mismatch");
        try {
            s.set(d, ratfunc_from_json(v));
        } catch (const SeriesMismatch& e) {
            throw ParseError(e.what());
        }
    }
    return s;
}

}  // namespace dtq
