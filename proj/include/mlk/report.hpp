#pragma once

// Check-report machinery. Every law check returns a CheckReport: the law
// name, a verdict, and on failure the complete list of failing basis tuples
// with both sides of the identity evaluated exactly. Reports are
// deterministic: witnesses are sorted lexicographically by index tuple (ties
// broken by the values), and indices are 1-based to match file formats.

#include <functional>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

#include "mlk/errors.hpp"
#include "mlk/linalg.hpp"
#include "mlk/rational.hpp"

namespace mlk {

struct Witness {
  std::vector<int> indices;  // 1-based basis indices (or documented raw labels)
  Vec lhs, rhs;

  bool operator==(const Witness& o) const = default;
};

struct CheckReport {
  std::string law;
  bool pass = false;
  std::vector<Witness> witnesses;

  static CheckReport passed(std::string law) { return {std::move(law), true, {}}; }
};

// A builder precondition failed; carries the failing check's report so
// callers (and the CLI) can surface exactly which hypothesis broke.
struct HypothesisError : Error {
  HypothesisError(const std::string& context, CheckReport failed)
      : Error(context + ": hypothesis check '" + failed.law + "' failed"),
        report(std::move(failed)) {}
  CheckReport report;
};

class ReportBuilder {
 public:
  explicit ReportBuilder(std::string law) : law_(std::move(law)) {}

  // Records a witness when the two sides differ. Indices arrive 0-based and
  // are stored 1-based.
  void require(std::vector<int> indices, Vec lhs, Vec rhs) {
    if (lhs == rhs) return;
    for (int& i : indices) ++i;
    witnesses_.push_back({std::move(indices), std::move(lhs), std::move(rhs)});
  }

  void require_zero(std::vector<int> indices, Vec lhs) {
    Vec rhs(lhs.size());
    require(std::move(indices), std::move(lhs), std::move(rhs));
  }

  // For index tuples that are not plain basis indices (e.g. a deformation
  // order in front); stored exactly as given.
  void require_raw(std::vector<int> indices, Vec lhs, Vec rhs) {
    if (lhs == rhs) return;
    witnesses_.push_back({std::move(indices), std::move(lhs), std::move(rhs)});
  }

  bool clean() const { return witnesses_.empty(); }

  CheckReport finish() {
    std::sort(witnesses_.begin(), witnesses_.end(), [](const Witness& a, const Witness& b) {
      return std::tie(a.indices, a.lhs, a.rhs) < std::tie(b.indices, b.lhs, b.rhs);
    });
    return {law_, witnesses_.empty(), std::move(witnesses_)};
  }

 private:
  std::string law_;
  std::vector<Witness> witnesses_;
};

// Composite law: run the named sub-checks in order and report the first
// failure as "<outer>/<inner>" with that sub-check's witnesses.
inline CheckReport run_composite(const std::string& outer,
                                 const std::vector<std::function<CheckReport()>>& stages) {
  for (const auto& stage : stages) {
    CheckReport r = stage();
    if (!r.pass) return {outer + "/" + r.law, false, std::move(r.witnesses)};
  }
  return CheckReport::passed(outer);
}

}  // namespace mlk
