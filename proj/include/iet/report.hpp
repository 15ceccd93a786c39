#pragma once

#include <string>
#include <vector>

namespace iet {

enum class Status { Pass, Fail, Skipped };

inline const char* to_string(Status s) {
  switch (s) {
    case Status::Pass: return "pass";
    case Status::Fail: return "fail";
    case Status::Skipped: return "skipped";
  }
  return "unknown";
}

struct CheckItem {
  std::string id;
  Status status = Status::Pass;
  std::string detail;
};

// Ordered list of named checks. Failures are recorded, never thrown.
class CheckReport {
 public:
  void pass(std::string id, std::string detail = {}) { add(std::move(id), Status::Pass, std::move(detail)); }
  void fail(std::string id, std::string detail = {}) { add(std::move(id), Status::Fail, std::move(detail)); }
  void skip(std::string id, std::string detail = {}) { add(std::move(id), Status::Skipped, std::move(detail)); }
  void expect(bool ok, std::string id, std::string detail = {}) {
    add(std::move(id), ok ? Status::Pass : Status::Fail, std::move(detail));
  }
  void add(std::string id, Status status, std::string detail) {
    items_.push_back({std::move(id), status, std::move(detail)});
  }
  void merge(const CheckReport& other, const std::string& prefix = {}) {
    for (const auto& item : other.items_) items_.push_back({prefix + item.id, item.status, item.detail});
  }

  const std::vector<CheckItem>& items() const { return items_; }
  bool passed() const {
    for (const auto& item : items_) {
      if (item.status == Status::Fail) return false;
    }
    return true;
  }
  std::size_t count(Status s) const {
    std::size_t n = 0;
    for (const auto& item : items_) n += item.status == s;
    return n;
  }
  const CheckItem* first_failure() const {
    for (const auto& item : items_) {
      if (item.status == Status::Fail) return &item;
    }
    return nullptr;
  }

 private:
  std::vector<CheckItem> items_;
};

}  // namespace iet
