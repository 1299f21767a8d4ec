#ifndef DTQ_JSON_IO_HPP
#define DTQ_JSON_IO_HPP

#include <json.hpp>

#include "dtq/quiver.hpp"
#include "dtq/ratfunc.hpp"
#include "dtq/series.hpp"
#include "dtq/stability.hpp"

namespace dtq {

using Json = nlohmann::json;

struct ParseError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Quiver: {"vertices": ["1","2"], "arrows": [["1","2"],["1","2"]]}
Json quiver_to_json(const Quiver& q);
Quiver quiver_from_json(const Json& j);

// Stability: [{"re":"-1","im":"1"}, ...] aligned with vertex order;
// rationals as strings "p/q" (plain integers allowed).
Json stability_to_json(const Stability& z);
Stability stability_from_json(const Json& j);

// RatFunc: {"num": {"exp": "coeff", ...}, "den": {...}} with integer
// string coefficients.
Json ratfunc_to_json(const RatFunc& f);
RatFunc ratfunc_from_json(const Json& j);

// LaurentPoly: {"exp": "coeff"} keyed by t-exponent.
Json laurent_to_json(const LaurentPoly& p);

// GradedSeries: {"box":[3,3], "tag":"virtual", "coeffs":{"1,1": <RatFunc>}}
Json series_to_json(const GradedSeries& s);
GradedSeries series_from_json(const Json& j);

Rational rational_from_string(const std::string& s);

std::string dimvec_key(const DimVector& d);
DimVector dimvec_from_key(const std::string& key);

}  // namespace dtq

#endif
