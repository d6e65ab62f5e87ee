#include "hopftrace/report.hpp"

#include <algorithm>
#include <future>
#include <thread>

namespace hopftrace {

bool CheckReport::passed() const {
  return std::all_of(items.begin(), items.end(), [](const CheckItem& c) { return c.pass; });
}

int CheckReport::fail_count() const {
  return static_cast<int>(std::count_if(items.begin(), items.end(),
                                        [](const CheckItem& c) { return !c.pass; }));
}

void CheckReport::merge(const CheckReport& other, const std::string& prefix) {
  for (const auto& it : other.items)
    items.push_back({prefix.empty() ? it.id : prefix + "/" + it.id, it.pass, it.witness});
}

void CheckReport::sort_canonical() {
  std::stable_sort(items.begin(), items.end(),
                   [](const CheckItem& a, const CheckItem& b) { return a.id < b.id; });
}

CheckItem check_maps_equal(const std::string& id, const LinearMap& actual,
                           const LinearMap& expected) {
  auto diff = LinearMap::first_difference(actual, expected);
  if (!diff) return {id, true, ""};
  if (diff->first < 0)
    return {id, false, "shape mismatch: " + actual.shape_str() + " vs " + expected.shape_str()};
  int r = diff->first, c = diff->second;
  return {id, false,
          "entry (" + std::to_string(r) + "," + std::to_string(c) + "): expected " +
              expected.at(r, c).str() + ", got " + actual.at(r, c).str()};
}

CheckReport run_tasks(const std::string& subject, std::vector<CheckTask> tasks, bool parallel) {
  std::vector<CheckReport> results(tasks.size());
  if (!parallel || tasks.size() < 2) {
    for (std::size_t i = 0; i < tasks.size(); ++i) results[i] = tasks[i].run();
  } else {
    unsigned workers = std::max(2u, std::thread::hardware_concurrency());
    std::atomic<std::size_t> next{0};
    std::vector<std::thread> pool;
    for (unsigned w = 0; w < workers; ++w) {
      pool.emplace_back([&] {
        for (;;) {
          std::size_t i = next.fetch_add(1);
          if (i >= tasks.size()) return;
          results[i] = tasks[i].run();
        }
      });
    }
    for (auto& t : pool) t.join();
  }
  std::vector<std::size_t> order(tasks.size());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t a, std::size_t b) { return tasks[a].key < tasks[b].key; });
  CheckReport out;
  out.subject = subject;
  for (std::size_t i : order) out.merge(results[i], tasks[i].key);
  return out;
}

}  // namespace hopftrace
