#pragma once

#include <string>

#include "k3/curve.hpp"
#include "k3/grouplaw.hpp"
#include "k3/lattice.hpp"
#include "k3/numberfield.hpp"
#include "k3/surface.hpp"

// Single-header json.hpp vendored at the include root.
#include "json.hpp"

namespace k3 {

using Json = nlohmann::json;

// Polynomials serialize as ascending coefficient lists of exact fraction
// strings.
Json poly_to_json(const UniPoly<Rational>& f);
UniPoly<Rational> poly_from_json(const Json& j);

Json surface_to_json(const SurfaceForm& X);
SurfaceForm surface_from_json(const Json& j);

// Resolves "paper-surface" or a path to a JSON document.
SurfaceForm load_surface(const std::string& preset_or_path);

Json point_to_json(const FiberPoint<Rational>& p);
Json point_to_json(const FiberPoint<NFElem>& p);
// Accepts the JSON schema or a "(a/b, c/d)" tuple string.
FiberPoint<Rational> parse_rational_point(const std::string& text);

Json pattern_to_json(const FactorPattern& pat);
Json certificate_to_json(const NodalityCertificate& cert);
Json irreducibility_to_json(const IrreducibilityReport& rep);
Json singular_report_to_json(const SingularFiberReport& rep);

Json divisor_to_json(const DivisorClass& d);
Json isometry_to_json(const LatticeIsometry& m);
Json sigma4_report_to_json(const Sigma4Report& rep);
Json ambient_check_to_json(const AmbientCheck& chk);

Json halve_result_to_json(const HalveResult& res);

std::string nodality_name(Nodality n);

}  // namespace k3
