#pragma once

#include <map>
#include <string>
#include <vector>

#include "dcat/solver.hpp"
#include "dcat/truncation.hpp"

namespace dcat {

/// Machine-readable verification report: one entry per checked identity with
/// its status, the certified bounds it was checked under, and witness or
/// counterexample text. Field order is stable and serialization is
/// byte-deterministic.
class Report {
 public:
  struct Item {
    std::string id;
    std::string status;  // "pass" | "fail" | "inconclusive"
    std::string detail;
    std::map<std::string, long long> bounds;
  };

  void add(const std::string& id, Answer a, const std::string& detail = "",
           std::map<std::string, long long> bounds = {});
  void add(const std::string& id, bool ok, const std::string& detail = "",
           std::map<std::string, long long> bounds = {});
  void merge(const std::string& prefix, const CheckReport& sub,
             std::map<std::string, long long> bounds = {});
  void merge(const Report& sub);

  const std::vector<Item>& items() const { return items_; }
  bool all_passed() const;
  bool any_failed() const;
  /// 0 all pass, 1 some check failed, 2 inconclusive results only.
  int exit_code() const;

  std::string to_json() const;
  std::string summary_lines() const;  // one "[PASS] id" style line per item

 private:
  std::vector<Item> items_;
};

}  // namespace dcat
