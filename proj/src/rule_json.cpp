#include "debruijn/rule_json.hpp"

#include <map>

#include "debruijn/errors.hpp"

namespace debruijn {

using nlohmann::json;

namespace {

template <class... Ts>
struct Overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
Overloaded(Ts...) -> Overloaded<Ts...>;

[[noreturn]] void fail(const std::string& message) { throw SpecError({message}); }

const json& require(const json& params, const char* key) {
  if (!params.is_object() || !params.contains(key)) {
    fail(std::string("missing parameter \"") + key + "\"");
  }
  return params.at(key);
}

std::uint64_t get_k(const json& params) {
  const json& k = require(params, "k");
  if (!k.is_number_integer() || k.get<std::int64_t>() < 0) fail("k must be a nonnegative integer");
  return k.get<std::uint64_t>();
}

std::vector<int> get_ints(const json& params, const char* key) {
  const json& v = require(params, key);
  if (!v.is_array()) fail(std::string(key) + " must be an array of integers");
  std::vector<int> out;
  for (const json& e : v) {
    if (!e.is_number_integer()) fail(std::string(key) + " must be an array of integers");
    out.push_back(e.get<int>());
  }
  return out;
}

std::vector<BitWord> get_choice(const json& params) {
  const json& v = require(params, "choice");
  if (!v.is_array()) fail("choice must be an array of state strings");
  std::vector<BitWord> out;
  for (const json& e : v) {
    if (!e.is_string()) fail("choice must be an array of state strings");
    try {
      out.push_back(BitWord::parse(e.get<std::string>()));
    } catch (const Error& err) {
      fail(std::string("bad chosen state: ") + err.what());
    }
  }
  return out;
}

FeedbackFunction get_register(int n, const json& params) {
  const std::string kind = params.is_object() && params.contains("fsr")
                               ? params.at("fsr").get<std::string>()
                               : std::string("pcr");
  try {
    if (kind == "pcr") return FeedbackFunction::pcr(n);
    if (kind == "psr") return FeedbackFunction::psr(n);
    if (kind == "csr") return FeedbackFunction::csr(n);
    if (kind == "table") {
      return FeedbackFunction::table(
          TruthTable::parse(n, require(params, "table").get<std::string>()));
    }
  } catch (const SpecError&) {
    throw;
  } catch (const Error& err) {
    fail(std::string("bad feedback function: ") + err.what());
  }
  fail("unknown fsr kind \"" + kind + "\"");
}

json words(const std::vector<BitWord>& ws) {
  json out = json::array();
  for (const BitWord& w : ws) out.push_back(w.str());
  return out;
}

}  // namespace

const std::vector<std::string>& family_names() {
  static const std::vector<std::string> names = {
      "pcr-lz-k",   "pcr-eo-k",    "pcr-last-lz", "pcr-first-eo", "pcr-bands-lz", "pcr-bands-eo",
      "pcr-g-lz",   "pcr-g-eo",    "pcr-table",   "jfb",          "psr-run-k",    "psr-eo-k",
      "psr-index-s", "psr-index-t", "psr-eo-table", "psr-mixed-k",
  };
  return names;
}

std::string resolve_family_name(std::string_view name) {
  if (name == "new1-rule") return "pcr-last-lz";
  if (name == "new2-rule") return "pcr-first-eo";
  for (const auto& n : family_names()) {
    if (n == name) return n;
  }
  return {};
}

Family family_from_json(int n, std::string_view raw_name, const json& params) {
  const std::string name = resolve_family_name(raw_name);
  if (name.empty()) fail("unknown rule family \"" + std::string(raw_name) + "\"");
  try {
    if (name == "pcr-lz-k") return PcrLzK{get_k(params)};
    if (name == "pcr-eo-k") return PcrEoK{get_k(params)};
    if (name == "pcr-last-lz") return PcrLastLz{};
    if (name == "pcr-first-eo") return PcrFirstEo{};
    if (name == "pcr-bands-lz") return PcrWeightBandsLz{get_ints(params, "ks")};
    if (name == "pcr-bands-eo") return PcrWeightBandsEo{get_ints(params, "ks")};
    if (name == "pcr-g-lz") return PcrGLz{get_ints(params, "g")};
    if (name == "pcr-g-eo") return PcrGEo{get_ints(params, "g")};
    if (name == "pcr-table") return PcrTable{get_choice(params)};
    if (name == "jfb") return Jfb{get_register(n, params)};
    if (name == "psr-run-k") return PsrRunK{get_k(params)};
    if (name == "psr-eo-k") return PsrEoK{get_k(params)};
    if (name == "psr-index-s") return PsrIndexS{};
    if (name == "psr-index-t") return PsrIndexT{};
    if (name == "psr-eo-table") return PsrEoTable{get_choice(params)};
    return PsrMixedK{get_k(params)};
  } catch (const json::exception& err) {
    fail(std::string("malformed params: ") + err.what());
  }
}

json to_json(const RuleSpec& spec) {
  json params = json::object();
  std::visit(Overloaded{
                 [&](const PcrLzK& r) { params["k"] = r.k; },
                 [&](const PcrEoK& r) { params["k"] = r.k; },
                 [&](const PcrWeightBandsLz& r) { params["ks"] = r.ks; },
                 [&](const PcrWeightBandsEo& r) { params["ks"] = r.ks; },
                 [&](const PcrGLz& r) { params["g"] = r.g; },
                 [&](const PcrGEo& r) { params["g"] = r.g; },
                 [&](const PcrTable& r) { params["choice"] = words(r.choice); },
                 [&](const Jfb& r) {
                   params["fsr"] = r.f.name();
                   if (r.f.kind() == RegisterKind::kTable) params["table"] = r.f.truth_table().hex();
                 },
                 [&](const PsrRunK& r) { params["k"] = r.k; },
                 [&](const PsrEoK& r) { params["k"] = r.k; },
                 [&](const PsrEoTable& r) { params["choice"] = words(r.choice); },
                 [&](const PsrMixedK& r) { params["k"] = r.k; },
                 [](const auto&) {},
             },
             spec.family());
  return json{{"n", spec.order()}, {"family", spec.name()}, {"params", params}};
}

RuleSpec rule_from_json(const json& j) {
  if (!j.is_object()) fail("rule spec must be a JSON object");
  if (!j.contains("n") || !j.at("n").is_number_integer()) fail("rule spec needs an integer \"n\"");
  if (!j.contains("family") || !j.at("family").is_string()) {
    fail("rule spec needs a string \"family\"");
  }
  const int n = j.at("n").get<int>();
  if (n < 2 || n > kMaxRuleOrder) {
    fail("order n = " + std::to_string(n) + " outside 2.." + std::to_string(kMaxRuleOrder));
  }
  const json params = j.contains("params") ? j.at("params") : json::object();
  return RuleSpec(n, family_from_json(n, j.at("family").get<std::string>(), params));
}

}  // namespace debruijn
