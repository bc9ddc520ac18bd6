#include "wha/report.hpp"

#include <json.hpp>

#include <chrono>
#include <exception>
#include <iomanip>
#include <sstream>

namespace wha {

const char* to_string(Status s) {
  switch (s) {
    case Status::pass: return "pass";
    case Status::fail: return "fail";
    case Status::skipped: return "skipped";
    case Status::info: return "info";
  }
  return "?";
}

void Record::fail(std::string why) {
  if (status != Status::fail) witness = std::move(why);
  status = Status::fail;
}

bool Record::expect(bool ok, const std::string& why) {
  if (!ok) fail(why);
  return ok;
}

Record& Report::check(const std::string& name, const std::string& summary, std::vector<std::string> prerequisites,
                      const std::function<void(Record&)>& body) {
  Record r;
  r.name = name;
  r.summary = summary;
  r.prerequisites = std::move(prerequisites);
  for (const auto& p : r.prerequisites) {
    if (!passed(p)) {
      r.status = Status::skipped;
      r.witness = "prerequisite " + p + " did not pass";
      return add(std::move(r));
    }
  }
  auto t0 = std::chrono::steady_clock::now();
  try {
    body(r);
  } catch (const std::exception& e) {
    r.fail(std::string("exception: ") + e.what());
  }
  r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  return add(std::move(r));
}

Record& Report::note(const std::string& name, const std::string& summary, const std::function<void(Record&)>& body) {
  Record r;
  r.name = name;
  r.summary = summary;
  try {
    body(r);
  } catch (const std::exception& e) {
    r.witness = std::string("exception: ") + e.what();
  }
  r.status = Status::info;
  return add(std::move(r));
}

Record& Report::add(Record r) {
  records_.push_back(std::move(r));
  return records_.back();
}

void Report::append(const Report& other, const std::string& prefix) {
  for (Record r : other.records_) {
    r.name = prefix + r.name;
    for (auto& p : r.prerequisites) p = prefix + p;
    if (r.status == Status::skipped) r.witness = "prerequisite " + prefix + r.witness.substr(13);
    records_.push_back(std::move(r));
  }
}

const Record* Report::find(const std::string& name) const {
  for (const auto& r : records_) {
    if (r.name == name) return &r;
  }
  return nullptr;
}

bool Report::passed(const std::string& name) const {
  const Record* r = find(name);
  return r != nullptr && r->status == Status::pass;
}

bool Report::all_passed() const {
  for (const auto& r : records_) {
    if (r.status == Status::fail || r.status == Status::skipped) return false;
  }
  return true;
}

std::vector<std::string> Report::failed() const {
  std::vector<std::string> out;
  for (const auto& r : records_) {
    if (r.status == Status::fail) out.push_back(r.name);
  }
  return out;
}

std::string Report::to_json(bool timings) const {
  nlohmann::ordered_json j;
  j["format_version"] = 1;
  j["instance"] = id_;
  j["passed"] = all_passed();
  auto& recs = j["records"] = nlohmann::ordered_json::array();
  for (const auto& r : records_) {
    nlohmann::ordered_json o;
    o["name"] = r.name;
    o["status"] = to_string(r.status);
    o["summary"] = r.summary;
    if (!r.prerequisites.empty()) o["prerequisites"] = r.prerequisites;
    if (!r.witness.empty()) o["witness"] = r.witness;
    if (!r.facts.empty()) {
      nlohmann::ordered_json f = nlohmann::ordered_json::object();
      for (const auto& [k, v] : r.facts) f[k] = v;
      o["facts"] = f;
    }
    if (timings) o["seconds"] = r.seconds;
    recs.push_back(std::move(o));
  }
  return j.dump(2) + "\n";
}

std::string Report::to_text(bool timings) const {
  std::ostringstream os;
  os << "instance: " << id_ << "\n";
  for (const auto& r : records_) {
    os << std::left << std::setw(8) << to_string(r.status) << r.name;
    if (timings) os << "  (" << std::fixed << std::setprecision(3) << r.seconds << " s)";
    os << "\n";
    for (const auto& [k, v] : r.facts) os << "        " << k << " = " << v << "\n";
    if (!r.witness.empty()) os << "        " << r.witness << "\n";
  }
  os << (all_passed() ? "result: pass" : "result: FAIL") << "\n";
  return os.str();
}

}  // namespace wha
