#ifndef NLAL_REPORT_HPP
#define NLAL_REPORT_HPP

#include <deque>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "nlal/matrix.hpp"
#include "nlal/wedge.hpp"

namespace nlal {

/// One violating instance: the basis tuples it occurred at (1-based, as in
/// all user-facing output) and the nonzero residual.
struct Witness {
  std::vector<std::pair<std::string, std::vector<int>>> args;
  std::vector<std::string> residual;
  std::string note;
};

inline std::vector<int> to_one_based(const IndexTuple& t) {
  std::vector<int> r(t.size());
  for (std::size_t i = 0; i < t.size(); ++i) r[i] = t[i] + 1;
  return r;
}

inline std::vector<std::string> residual_strings(const Vec& v) {
  std::vector<std::string> r(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) r[i] = v[i].str();
  return r;
}

/// Outcome of one named check. Violations are data, not errors; the first few
/// witnesses are kept (deterministically, in enumeration order).
struct CheckResult {
  static constexpr long kMaxWitnesses = 16;

  std::string name;
  bool pass = true;
  long instances = 0;
  long violations = 0;
  std::vector<Witness> witnesses;
  std::string note;

  explicit CheckResult(std::string n = "") : name(std::move(n)) {}

  void count_pass() { ++instances; }

  void count_fail(Witness w) {
    ++instances;
    ++violations;
    pass = false;
    if (static_cast<long>(witnesses.size()) < kMaxWitnesses) witnesses.push_back(std::move(w));
  }

  /// Records a residual-style instance: pass iff the residual vanishes.
  void record(const Vec& residual, std::vector<std::pair<std::string, std::vector<int>>> args) {
    if (is_zero(residual)) {
      count_pass();
    } else {
      count_fail(Witness{std::move(args), residual_strings(residual), ""});
    }
  }
};

struct Report {
  std::string subject;
  // deque: validators hold references to checks while adding more
  std::deque<CheckResult> checks;

  bool pass() const {
    for (const auto& c : checks)
      if (!c.pass) return false;
    return true;
  }

  CheckResult& add(std::string name) {
    checks.emplace_back(std::move(name));
    return checks.back();
  }

  const CheckResult* find(const std::string& name) const {
    for (const auto& c : checks)
      if (c.name == name) return &c;
    return nullptr;
  }

  /// Appends another report's checks under a name prefix.
  void absorb(const Report& r, const std::string& prefix) {
    for (const auto& c : r.checks) {
      checks.push_back(c);
      checks.back().name = prefix + c.name;
    }
  }
};

/// A construction was asked to build on input that fails its validation
/// precondition; carries the failing report.
class ValidationError : public std::runtime_error {
public:
  ValidationError(const std::string& what, Report r)
      : std::runtime_error(what), report(std::move(r)) {}
  Report report;
};

/// Malformed input: wrong shapes, out-of-range indices, bad files. Maps to
/// CLI exit code 2.
class ShapeError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

}  // namespace nlal

#endif
