#pragma once

// JSON forms of the engine's values.  Every rational is a string "p/q".

#include <string>

#include <json.hpp>

#include "eisenres/arthur.hpp"
#include "eisenres/cfunc.hpp"
#include "eisenres/spectral.hpp"
#include "eisenres/xi_series.hpp"

namespace eisenres {

using Json = nlohmann::ordered_json;

inline constexpr const char* kSchemaVersion = "1.0";

Json to_json(const Rational& q);
Json to_json(const RatVec& v);
Json to_json(const WeightVector& v);
Json to_json(const CorootVector& v);
/// [constant, c_1, ..., c_n]
Json to_json(const LinearForm& f);
/// {"scalar": "p/q", "factors": [{"form": [...], "exp": e}]}
Json to_json(const FactoredRational& f);
/// {"rat": <FactoredRational>, "xi": [{"form": [...], "exp": e}]}
Json to_json(const XiProduct& x);
Json to_json(const SymPoly& p);
Json to_json(const LaurentData& d);
Json to_json(const SL2Multiset& m);

Rational rational_from_json(const Json& j, const std::string& pointer);
RatVec ratvec_from_json(const Json& j, const std::string& pointer);
WeightVector weight_from_json(const Json& j, std::size_t rank, const std::string& pointer);
LinearForm form_from_json(const Json& j, const std::string& pointer);
FactoredRational factored_from_json(const Json& j, const std::string& pointer);
XiProduct xi_product_from_json(const Json& j, const std::string& pointer);

/// {"blocks": [{"a": 2, "d": 1, "class": "tau1"}, ...]}
SpehDatum speh_from_json(const Json& j, const std::string& pointer);
/// "principal" or {"h": ["2", "2"]}; accepts the value of the "kappa" key or
/// an object holding it.
KappaMarking kappa_from_json(const Json& j, const RootSystem& rs, const LeviDatum& levi,
                             const std::string& pointer);

/// The deformation part of a report (without schema_version/command).
Json report_to_json(const SpectralReport& report, const RootSystem& rs);
SpectralReport report_from_json(const Json& j);

Json audit_to_json(const AuditResult& audit, const RootSystem& rs);

}  // namespace eisenres
