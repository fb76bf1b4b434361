#pragma once

#include "weylkit/admissibility.hpp"
#include "weylkit/bounds.hpp"
#include "weylkit/fracderiv.hpp"
#include "weylkit/pencil.hpp"
#include "weylkit/seminorms.hpp"
#include "weylkit/solvers.hpp"
#include "weylkit/subordination.hpp"
#include "weylkit/translation.hpp"
#include "weylkit/vanishing.hpp"
#include "weylkit/verify.hpp"

#include "json.hpp"

#include <string>

namespace weylkit {

using ordered_json = nlohmann::ordered_json;

// Grid metadata without the sample payload (samples travel as CSV).
ordered_json grid_summary(const GridFunction& g);

ordered_json to_json(const EnvelopeLaw& env);
ordered_json to_json(const WeylReport& r);
ordered_json to_json(const TranslationReport& r);
ordered_json to_json(const VanishingReport& r);
ordered_json to_json(const AdmissibilityReport& r);
ordered_json to_json(const DominationReport& r);
ordered_json to_json(const TransferReport& r);
ordered_json to_json(const SplitVerifyReport& r);
ordered_json to_json(const FamilyEstimateReport& r);
ordered_json to_json(const ConditionPReport& r);
ordered_json to_json(const SolveReport& r);
ordered_json to_json(const IVPReport& r);
ordered_json to_json(const FracDerivResult& r);

/**
 * Two-space pretty print with a trailing newline.  Reports carry no
 * timestamps or environment data, so identical inputs produce byte-identical
 * files.  Non-finite numbers are emitted as the strings "inf", "-inf",
 * "nan" rather than null.
 */
void write_json(const ordered_json& j, const std::string& path);

} // namespace weylkit
