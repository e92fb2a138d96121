#pragma once

#include <string>
#include <string_view>

#include "debruijn/rules.hpp"
#include "json.hpp"

namespace debruijn {

/// {"n": 6, "family": "pcr-lz-k", "params": {"k": 1}}
///
/// params by family: k (the *-k families), ks (bands), g (g maps, entry i is
/// g(i+1)), choice (tables, list of state strings), and for jfb
/// {"fsr": "pcr"|"psr"|"csr"|"table", "table": "<hex or binary>"}.
nlohmann::json to_json(const RuleSpec& spec);

/// Throws SpecError on schema or invariant violations.
RuleSpec rule_from_json(const nlohmann::json& j);

/// Builds a family from its name and a params object. Accepts the aliases
/// new1-rule (pcr-last-lz) and new2-rule (pcr-first-eo).
Family family_from_json(int n, std::string_view name, const nlohmann::json& params);

/// Canonical family name for `name`, resolving aliases; empty if unknown.
std::string resolve_family_name(std::string_view name);

/// All canonical family names.
const std::vector<std::string>& family_names();

}  // namespace debruijn
