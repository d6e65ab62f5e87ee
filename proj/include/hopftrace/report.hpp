#pragma once

#include <functional>
#include <string>
#include <vector>

#include "hopftrace/linear_map.hpp"

namespace hopftrace {

/// Outcome of one named check. `witness` is empty on pass; on failure it
/// names the violated identity and the first offending entry.
struct CheckItem {
  std::string id;
  bool pass = true;
  std::string witness;
};

struct CheckReport {
  std::string subject;
  std::vector<CheckItem> items;

  bool passed() const;
  int fail_count() const;
  void add(CheckItem item) { items.push_back(std::move(item)); }
  void add_pass(const std::string& id) { items.push_back({id, true, ""}); }
  void add_fail(const std::string& id, const std::string& witness) {
    items.push_back({id, false, witness});
  }
  void merge(const CheckReport& other, const std::string& prefix = "");
  void sort_canonical();
};

/// Compares two maps and records the result; a failure witness carries the
/// first differing entry with expected vs actual scalar.
CheckItem check_maps_equal(const std::string& id, const LinearMap& actual,
                           const LinearMap& expected);

/// Suite runner: executes independent check tasks (pure functions) either
/// serially or on a small thread pool; results are canonically sorted before
/// assembly, so parallelism is unobservable in the report.
struct CheckTask {
  std::string key;
  std::function<CheckReport()> run;
};

CheckReport run_tasks(const std::string& subject, std::vector<CheckTask> tasks, bool parallel);

}  // namespace hopftrace
