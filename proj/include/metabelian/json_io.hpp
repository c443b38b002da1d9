#pragma once

#include <json.hpp>

#include "metabelian/certificate.hpp"
#include "metabelian/lie.hpp"
#include "metabelian/oracle.hpp"

namespace metabelian {

using ordered_json = nlohmann::ordered_json;

ordered_json to_json(const MagnusElement& m);
ordered_json to_json(const Certificate& cert);
ordered_json to_json(const SearchReport& report);
ordered_json to_json(const KernelReport& report);

/// Endomorphism file format: { "n": int, "images": ["<word>", ...] } with
/// words in the g1/g1^-1/bracket grammar.
IAEndomorphism endomorphism_from_json(const nlohmann::json& j);

}  // namespace metabelian
