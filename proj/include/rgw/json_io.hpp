#pragma once

#include "rgw/automata.hpp"
#include "rgw/invariants.hpp"
#include "rgw/octal.hpp"
#include "rgw/synthesis.hpp"
#include "rgw/turing.hpp"

#include <json.hpp>

namespace rgw {

nlohmann::json to_json(const VerificationReport& r, const Alphabet& ab);
nlohmann::json to_json(const CrosscheckResult& r, const Alphabet& ab);
nlohmann::json to_json(const OctalCheck& r);
nlohmann::json to_json(const ForcedRun& r, const Alphabet& ab);
nlohmann::json to_json(const CrosscheckRun& r);
nlohmann::json to_json(const SynthesisResult& r, const Alphabet& ab);
nlohmann::json to_json(const TmConfig& c);

} // namespace rgw
