#include "reflex/report.hpp"

#include <json.hpp>
#include <sstream>

#include "reflex/error.hpp"

namespace reflex {

using json = nlohmann::ordered_json;

int exit_code(Status status) {
  switch (status) {
    case Status::Holds: return 0;
    case Status::Fails: return 3;
    case Status::Inconclusive:
    case Status::NoCounterexample: return 2;
  }
  return 2;
}

Status status_from_string(std::string_view s) {
  for (Status st : {Status::Holds, Status::Fails, Status::Inconclusive, Status::NoCounterexample}) {
    if (to_string(st) == s) return st;
  }
  throw Error("unknown status '" + std::string(s) + "'");
}

Verdict verdict_from_string(std::string_view s, std::string left, std::string right) {
  if (s == "equal") return Verdict::equal();
  if (s == "not-equal") return Verdict::not_equal(std::move(left), std::move(right));
  if (s == "unknown(fuel)") return Verdict::unknown(Cap::Fuel);
  if (s == "unknown(size)") return Verdict::unknown(Cap::Size);
  throw Error("unknown verdict '" + std::string(s) + "'");
}

std::string to_json(const SuiteReport& r) {
  json j;
  j["model"] = r.model;
  j["suite"] = r.suite;
  j["fuel"] = r.fuel.steps;
  j["seed"] = r.seed;
  j["equations"] = json::array();
  for (const auto& e : r.equations) {
    json q;
    q["id"] = e.id;
    q["lhs"] = e.lhs;
    q["rhs"] = e.rhs;
    q["verdict"] = to_string(e.verdict);
    if (e.verdict.is_not_equal()) q["witnesses"] = json::array({e.verdict.left(), e.verdict.right()});
    j["equations"].push_back(std::move(q));
  }
  j["summary"] = {{"status", to_string(r.summary.status)}, {"ids", r.summary.ids}, {"note", r.summary.note}};
  return j.dump(2) + "\n";
}

SuiteReport report_from_json(std::string_view text) {
  try {
    const json j = json::parse(text);
    SuiteReport r;
    r.model = j.at("model").get<std::string>();
    r.suite = j.at("suite").get<std::string>();
    r.fuel.steps = j.at("fuel").get<std::size_t>();
    r.seed = j.at("seed").get<std::uint64_t>();
    for (const auto& q : j.at("equations")) {
      std::string left, right;
      if (q.contains("witnesses")) {
        left = q["witnesses"].at(0).get<std::string>();
        right = q["witnesses"].at(1).get<std::string>();
      }
      r.equations.push_back({q.at("id").get<std::string>(), q.at("lhs").get<std::string>(),
                             q.at("rhs").get<std::string>(),
                             verdict_from_string(q.at("verdict").get<std::string>(), left, right)});
    }
    const auto& s = j.at("summary");
    r.summary.status = status_from_string(s.at("status").get<std::string>());
    r.summary.ids = s.at("ids").get<std::vector<std::string>>();
    r.summary.note = s.at("note").get<std::string>();
    return r;
  } catch (const json::exception& ex) {
    throw Error(std::string("malformed report: ") + ex.what());
  }
}

std::string to_text(const SuiteReport& r) {
  std::ostringstream out;
  out << "model: " << r.model << "\n"
      << "suite: " << r.suite << "\n"
      << "fuel: " << r.fuel.steps << "  seed: " << r.seed << "\n";
  for (const auto& e : r.equations) {
    out << "  [" << to_string(e.verdict) << "] " << e.id << ": " << e.lhs << " = " << e.rhs << "\n";
    if (e.verdict.is_not_equal()) {
      out << "      normal forms: " << e.verdict.left() << "  vs  " << e.verdict.right() << "\n";
    }
  }
  out << "summary: " << to_string(r.summary.status);
  if (!r.summary.ids.empty()) {
    out << " (";
    for (std::size_t n = 0; n < r.summary.ids.size(); ++n) out << (n ? ", " : "") << r.summary.ids[n];
    out << ")";
  }
  out << "\n";
  if (!r.summary.note.empty()) out << "note: " << r.summary.note << "\n";
  return out.str();
}

}  // namespace reflex
