#ifndef WHA_REPORT_HPP
#define WHA_REPORT_HPP

#include <functional>
#include <string>
#include <utility>
#include <vector>

namespace wha {

enum class Status { pass, fail, skipped, info };

const char* to_string(Status s);

/// One checked identity. Facts are ordered key/value pairs (quotient
/// dimensions, sample coefficients, ...); the witness explains a failure.
struct Record {
  std::string name;
  std::string summary;
  Status status = Status::pass;
  std::vector<std::string> prerequisites;
  std::string witness;
  std::vector<std::pair<std::string, std::string>> facts;
  double seconds = 0.0;

  /// Marks the record failed, keeping the first witness only.
  void fail(std::string why);
  /// fail(why) unless ok; returns ok.
  bool expect(bool ok, const std::string& why);
  void fact(std::string key, std::string value) { facts.emplace_back(std::move(key), std::move(value)); }
  bool passed() const { return status == Status::pass; }
};

/// Ordered collection of records. A check whose prerequisite did not pass is
/// recorded as skipped, so every suite emits the same record list and a
/// single defect surfaces as a single failed record.
class Report {
public:
  explicit Report(std::string id = {}) : id_(std::move(id)) {}

  const std::string& id() const { return id_; }
  void set_id(std::string id) { id_ = std::move(id); }

  /// Runs body unless a prerequisite did not pass. Exceptions thrown by the
  /// body become failures; the report never aborts.
  Record& check(const std::string& name, const std::string& summary, std::vector<std::string> prerequisites,
                const std::function<void(Record&)>& body);
  /// Informational line; never affects all_passed().
  Record& note(const std::string& name, const std::string& summary, const std::function<void(Record&)>& body);
  Record& add(Record r);
  /// Appends every record of other, prefixing names (and prerequisites).
  void append(const Report& other, const std::string& prefix);

  const std::vector<Record>& records() const { return records_; }
  const Record* find(const std::string& name) const;
  bool passed(const std::string& name) const;
  bool all_passed() const;
  std::vector<std::string> failed() const;

  std::string to_json(bool timings = false) const;
  std::string to_text(bool timings = false) const;

private:
  std::string id_;
  std::vector<Record> records_;
};

}  // namespace wha

#endif  // WHA_REPORT_HPP
