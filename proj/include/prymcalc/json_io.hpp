// JSON encodings of the published wire formats.  All rationals and big
// integers travel as exact decimal/fraction strings; object key order is
// fixed so identical inputs serialize byte-identically.
#pragma once

#include "prymcalc/brill_noether.hpp"
#include "prymcalc/certificate.hpp"
#include "prymcalc/picard.hpp"
#include "prymcalc/porteous.hpp"
#include "prymcalc/resolution.hpp"

#include <json.hpp>

namespace prymcalc {

using Json = nlohmann::ordered_json;

Json to_json(const PrymDivisorClass& c);
PrymDivisorClass prym_class_from_json(const Json& j);

Json to_json(const FiberCensus& c);
Json to_json(const DimChainReport& r);
Json to_json(const SlopeReport& r);
Json to_json(const SurfaceInvariants& s);

Json to_json(const GradedFreeResolution& r);
GradedFreeResolution resolution_from_json(const Json& j);

Json to_json(const BignessCertificate& c);
BignessCertificate certificate_from_json(const Json& j);

// {"expanded": ..., "factored": {...}, "d_term": ...}
Json virtual_class_to_json(const VirtualDivisorClass& v, const FactoredClass& f);

}  // namespace prymcalc
