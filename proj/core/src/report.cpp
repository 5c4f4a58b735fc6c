#include "vpk/report.hpp"

#include <algorithm>
#include <sstream>

#include "json.hpp"

namespace vpk {

std::string status_name(Status s) {
  switch (s) {
    case Status::Pass:
      return "pass";
    case Status::Fail:
      return "fail";
    default:
      return "inconclusive";
  }
}

void Report::add(const std::string& id, Status s, Witness w) {
  records.push_back({id, s, std::move(w)});
}

void Report::inconclusive(const std::string& id, Witness w) {
  add(id, Status::Inconclusive, std::move(w));
}

void Report::merge(const Report& other, const std::string& prefix) {
  for (const auto& r : other.records)
    records.push_back({prefix + r.id, r.status, r.witness});
  for (const auto& n : other.notes) notes.push_back(n);
}

long Report::count(Status s) const {
  long n = 0;
  for (const auto& r : records)
    if (r.status == s) ++n;
  return n;
}

void Report::sort_records() {
  std::stable_sort(records.begin(), records.end(),
                   [](const CheckRecord& a, const CheckRecord& b) { return a.id < b.id; });
}

std::string Report::to_json() const {
  nlohmann::ordered_json j;
  j["report_version"] = 1;
  j["command"] = command;
  j["file"] = file;
  j["seed"] = seed;
  j["prng"] = Lcg64::name();
  nlohmann::ordered_json jc = nlohmann::ordered_json::object();
  for (const auto& [k, v] : caps) jc[k] = v;
  j["caps"] = jc;
  if (!notes.empty()) j["notes"] = notes;
  nlohmann::ordered_json arr = nlohmann::ordered_json::array();
  std::vector<CheckRecord> sorted = records;
  std::stable_sort(sorted.begin(), sorted.end(),
                   [](const CheckRecord& a, const CheckRecord& b) { return a.id < b.id; });
  for (const auto& r : sorted) {
    nlohmann::ordered_json jr;
    jr["check"] = r.id;
    jr["status"] = status_name(r.status);
    if (!r.witness.empty()) {
      nlohmann::ordered_json jw = nlohmann::ordered_json::object();
      if (!r.witness.triple.empty()) jw["triple"] = r.witness.triple;
      if (!r.witness.mode.empty()) jw["mode"] = r.witness.mode;
      if (!r.witness.monomial.empty()) jw["monomial"] = r.witness.monomial;
      if (!r.witness.lhs.empty()) jw["lhs"] = r.witness.lhs;
      if (!r.witness.rhs.empty()) jw["rhs"] = r.witness.rhs;
      jr["witness"] = jw;
    }
    arr.push_back(jr);
  }
  j["checks"] = arr;
  nlohmann::ordered_json js;
  js["pass"] = count(Status::Pass);
  js["fail"] = count(Status::Fail);
  js["inconclusive"] = count(Status::Inconclusive);
  j["summary"] = js;
  return j.dump(2) + "\n";
}

std::string Report::to_text(double elapsed_ms) const {
  std::ostringstream os;
  os << "command: " << command;
  if (!file.empty()) os << " " << file;
  os << "\nseed: " << seed << " (prng " << Lcg64::name() << ")\n";
  for (const auto& [k, v] : caps) os << "cap " << k << " = " << v << "\n";
  for (const auto& n : notes) os << "note: " << n << "\n";
  std::vector<CheckRecord> sorted = records;
  std::stable_sort(sorted.begin(), sorted.end(),
                   [](const CheckRecord& a, const CheckRecord& b) { return a.id < b.id; });
  for (const auto& r : sorted) {
    os << "[" << status_name(r.status) << "] " << r.id;
    if (!r.witness.empty()) {
      os << "  --";
      if (!r.witness.triple.empty()) os << " triple=" << r.witness.triple;
      if (!r.witness.mode.empty()) os << " mode=" << r.witness.mode;
      if (!r.witness.monomial.empty()) os << " monomial=" << r.witness.monomial;
      if (!r.witness.lhs.empty()) os << " lhs=" << r.witness.lhs;
      if (!r.witness.rhs.empty()) os << " rhs=" << r.witness.rhs;
    }
    os << "\n";
  }
  os << "summary: " << count(Status::Pass) << " pass, " << count(Status::Fail)
     << " fail, " << count(Status::Inconclusive) << " inconclusive\n";
  if (elapsed_ms >= 0) os << "elapsed_ms: " << static_cast<long>(elapsed_ms) << "\n";
  return os.str();
}

}  // namespace vpk
