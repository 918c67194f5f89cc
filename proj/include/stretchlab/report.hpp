#pragma once

// JSON input parsing and report rendering.

#include "stretchlab/classify.hpp"
#include "stretchlab/curvegraph.hpp"
#include "stretchlab/families.hpp"
#include "stretchlab/matrix.hpp"
#include "stretchlab/search.hpp"
#include "stretchlab/sharpness.hpp"
#include "stretchlab/traintrack.hpp"

#include <json.hpp>

#include <stdexcept>
#include <string>

namespace stretchlab {

using Json = nlohmann::ordered_json;

/// Malformed input; the message names the offending field.
class InputError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// Decimal, scientific ("1e-12"), fraction ("1/4096") or dyadic ("5/2^12") text as an exact rational.
mpq_class parse_rational(const std::string& text);

IntPolynomial parse_polynomial(const Json& j);
IntMatrix parse_matrix(const Json& j);
TrainTrack parse_track(const Json& j);
/// Parses JSON text, reporting syntax errors as InputError.
Json parse_json_text(const std::string& text, const std::string& what);

Json to_json(const IntPolynomial& p);
Json to_json(const IntMatrix& m);
Json to_json(const TrainTrack& t);
/// {"lo": "p/2^k", "hi": "q/2^k", "decimal": "..."}; decimal is the midpoint.
Json to_json(const Interval& i);
Json to_json(const RootEnclosure& e);
Json to_json(const SpectralClass& c);
Json to_json(const PrimitivityReport& r);
Json to_json(const AdmissibilityReport& r);
Json to_json(const ScanResult& r);
Json to_json(const SharpnessExample& e);
Json to_json(const ConvergenceRow& r);
Json to_json(const Candidate& c);
Json to_json(const SearchResult& r);
Json to_json(const WitnessReport& r);
Json to_json(const RadicalReport& r);
Json to_json(const BoundaryComponent& c);

const char* ordering_name(std::strong_ordering o);

/// "key.path = value" lines.
std::string render_text(const Json& j);

}  // namespace stretchlab
