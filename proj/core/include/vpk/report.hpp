#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

namespace vpk {

enum class Status { Pass, Fail, Inconclusive };

std::string status_name(Status s);

struct Witness {
  // optional structured fields; empty strings are omitted from output
  std::string triple;
  std::string mode;
  std::string monomial;
  std::string lhs;
  std::string rhs;
  bool empty() const {
    return triple.empty() && mode.empty() && monomial.empty() && lhs.empty() &&
           rhs.empty();
  }
};

struct CheckRecord {
  std::string id;
  Status status = Status::Pass;
  Witness witness;
};

struct Report {
  std::string command;
  std::string file;
  std::uint64_t seed = 0;
  std::map<std::string, long> caps;
  std::vector<std::string> notes;
  std::vector<CheckRecord> records;

  void add(const std::string& id, Status s, Witness w = {});
  void pass(const std::string& id) { add(id, Status::Pass); }
  void fail(const std::string& id, Witness w = {}) { add(id, Status::Fail, std::move(w)); }
  void inconclusive(const std::string& id, Witness w = {});
  void merge(const Report& other, const std::string& prefix = "");

  long count(Status s) const;
  bool all_passed() const { return count(Status::Fail) == 0; }
  void sort_records();  // canonical order: by check id, then status

  // Canonical machine-readable form; excludes wall-clock timing so identical
  // inputs and seed produce byte-identical output.
  std::string to_json() const;
  std::string to_text(double elapsed_ms = -1.0) const;
};

// The documented PRNG: 64-bit linear congruential generator, Knuth constants.
// All sampling flows from one seed so reports reproduce across platforms.
class Lcg64 {
 public:
  explicit Lcg64(std::uint64_t seed) : state_(seed) {}
  std::uint64_t next() {
    state_ = state_ * 6364136223846793005ULL + 1442695040888963407ULL;
    return state_;
  }
  // uniform in [0, n)
  std::uint64_t below(std::uint64_t n) { return n == 0 ? 0 : (next() >> 16) % n; }
  long range(long lo, long hi) {  // inclusive ends
    return lo + static_cast<long>(below(static_cast<std::uint64_t>(hi - lo + 1)));
  }
  static const char* name() { return "lcg64"; }

 private:
  std::uint64_t state_;
};

}  // namespace vpk
