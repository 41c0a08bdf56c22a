#pragma once

// JSON serialization shared by the runner; not installed.

#include <string>
#include <vector>

#include "json.hpp"
#include "monadforge/certificates.hpp"
#include "monadforge/cohomology.hpp"
#include "monadforge/monad.hpp"
#include "monadforge/polarization.hpp"
#include "monadforge/verify.hpp"

namespace monadforge::report {

using Json = nlohmann::ordered_json;

/// A number when it fits in int64, else a decimal string.
Json integer(const Integer& v);
/// "p/q" string.
Json rational(const Rational& v);
Json multidegree(const MultiDegree& d);

Json params(const MonadParams& p);
Json floystad(const FloystadVerdict& v);
Json display(const DisplaySummary& d);
Json cohom_table(const CohomTable& t);
Json vanishing(const VanishingReport& r);
Json verification(const VerificationReport& r);
Json stability(const StabilityCertificate& c);
Json simplicity(const SimplicityCertificate& c);
Json hoppe(const std::vector<HoppeObligation>& obligations);
Json normalization(const Normalization& n);
/// Rows of entry strings.
Json matrix(const LinearMatrix& m);
Json segre(const SegreTable& t);

/// Aligned "key  value" lines; nested objects use dotted keys.
std::string to_text(const Json& j);

} // namespace monadforge::report
