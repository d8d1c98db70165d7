#include "spectra/report.hpp"

namespace spectra {

std::string_view to_string(Status status) {
  switch (status) {
    case Status::pass: return "pass";
    case Status::fail: return "fail";
    case Status::degenerate: return "degenerate";
    case Status::hypothesis_violated: return "hypothesis-violated";
    case Status::skipped: return "skipped";
  }
  return "fail";
}

Status status_from_string(std::string_view name) {
  for (Status s : {Status::pass, Status::fail, Status::degenerate, Status::hypothesis_violated, Status::skipped})
    if (to_string(s) == name) return s;
  throw Error("unknown check status '" + std::string(name) + "'");
}

void Report::add(std::string name, std::string ref, Status status, std::optional<Json> payload) {
  checks_.push_back({std::move(name), std::move(ref), status, std::move(payload)});
}

void Report::absorb(const Report& other, std::string_view prefix) {
  for (Check check : other.checks_) {
    if (!prefix.empty()) check.name = std::string(prefix) + "/" + check.name;
    checks_.push_back(std::move(check));
  }
}

const Check* Report::find(std::string_view name) const {
  for (const auto& check : checks_)
    if (check.name == name) return &check;
  return nullptr;
}

Summary Report::summary() const {
  Summary s;
  for (const auto& check : checks_) {
    switch (check.status) {
      case Status::pass: ++s.pass; break;
      case Status::fail: ++s.fail; break;
      case Status::degenerate: ++s.degenerate; break;
      case Status::hypothesis_violated: ++s.hypothesis_violated; break;
      case Status::skipped: ++s.skipped; break;
    }
  }
  return s;
}

Check Property::finish() const {
  if (failures_ != 0) {
    Json payload = counterexample_.value_or(Json::object());
    payload["failures"] = failures_;
    payload["instances"] = instances_;
    return {name_, ref_, Status::fail, std::move(payload)};
  }
  if (instances_ == 0) return {name_, ref_, Status::degenerate, Json{{"note", "no instance satisfies the hypothesis"}}};
  return {name_, ref_, Status::pass, std::nullopt};
}

Json to_json(const Check& check) {
  Json out;
  out["name"] = check.name;
  out["paper_ref"] = check.ref;
  out["status"] = std::string(to_string(check.status));
  out["counterexample"] = check.counterexample ? *check.counterexample : Json(nullptr);
  return out;
}

Check check_from_json(const Json& json) {
  Check check;
  check.name = json.at("name").get<std::string>();
  check.ref = json.at("paper_ref").get<std::string>();
  check.status = status_from_string(json.at("status").get<std::string>());
  if (!json.at("counterexample").is_null()) check.counterexample = json.at("counterexample");
  return check;
}

Json to_json(const Summary& summary) {
  Json out;
  out["pass"] = summary.pass;
  out["fail"] = summary.fail;
  out["degenerate"] = summary.degenerate;
  out["hypothesis_violated"] = summary.hypothesis_violated;
  out["skipped"] = summary.skipped;
  return out;
}

Json to_json(const RingElement& x) {
  Json out = Json::array();
  for (std::uint32_t r : x.residues()) out.push_back(r);
  return out;
}

Json to_json(const IndexSet& s) {
  Json out = Json::array();
  for (std::size_t i : s.members()) out.push_back(i);
  return out;
}

}  // namespace spectra
