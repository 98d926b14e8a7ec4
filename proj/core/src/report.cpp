#include "dcat/report.hpp"

#include <sstream>

namespace dcat {

namespace {

const char* status_of(Answer a) {
  switch (a) {
    case Answer::Yes:
      return "pass";
    case Answer::No:
      return "fail";
    default:
      return "inconclusive";
  }
}

void escape_into(std::ostringstream& os, const std::string& s) {
  os << '"';
  for (char c : s) {
    switch (c) {
      case '"':
        os << "\\\"";
        break;
      case '\\':
        os << "\\\\";
        break;
      case '\n':
        os << "\\n";
        break;
      case '\t':
        os << "\\t";
        break;
      default:
        if (static_cast<unsigned char>(c) < 0x20) {
          char buf[8];
          std::snprintf(buf, sizeof buf, "\\u%04x", c);
          os << buf;
        } else {
          os << c;
        }
    }
  }
  os << '"';
}

}  // namespace

void Report::add(const std::string& id, Answer a, const std::string& detail,
                 std::map<std::string, long long> bounds) {
  items_.push_back({id, status_of(a), detail, std::move(bounds)});
}

void Report::add(const std::string& id, bool ok, const std::string& detail,
                 std::map<std::string, long long> bounds) {
  add(id, ok ? Answer::Yes : Answer::No, detail, std::move(bounds));
}

void Report::merge(const std::string& prefix, const CheckReport& sub,
                   std::map<std::string, long long> bounds) {
  for (const auto& item : sub.items)
    items_.push_back({prefix + "." + item.id, status_of(item.answer), item.detail, bounds});
}

void Report::merge(const Report& sub) {
  for (const auto& item : sub.items_) items_.push_back(item);
}

bool Report::all_passed() const {
  for (const auto& i : items_)
    if (i.status != "pass") return false;
  return true;
}

bool Report::any_failed() const {
  for (const auto& i : items_)
    if (i.status == "fail") return true;
  return false;
}

int Report::exit_code() const {
  if (any_failed()) return 1;
  return all_passed() ? 0 : 2;
}

std::string Report::to_json() const {
  std::ostringstream os;
  os << "{\n  \"checks\": [\n";
  for (size_t i = 0; i < items_.size(); ++i) {
    const Item& it = items_[i];
    os << "    {\"id\": ";
    escape_into(os, it.id);
    os << ", \"status\": ";
    escape_into(os, it.status);
    if (!it.detail.empty()) {
      os << ", \"detail\": ";
      escape_into(os, it.detail);
    }
    if (!it.bounds.empty()) {
      os << ", \"bounds\": {";
      bool first = true;
      for (const auto& [k, v] : it.bounds) {
        if (!first) os << ", ";
        first = false;
        escape_into(os, k);
        os << ": " << v;
      }
      os << "}";
    }
    os << "}";
    if (i + 1 < items_.size()) os << ",";
    os << "\n";
  }
  int pass = 0, fail = 0, inc = 0;
  for (const auto& i : items_) {
    if (i.status == "pass") ++pass;
    else if (i.status == "fail") ++fail;
    else ++inc;
  }
  os << "  ],\n  \"summary\": {\"pass\": " << pass << ", \"fail\": " << fail
     << ", \"inconclusive\": " << inc << "}\n}\n";
  return os.str();
}

std::string Report::summary_lines() const {
  std::ostringstream os;
  for (const auto& i : items_) {
    std::string tag = i.status == "pass" ? "PASS" : i.status == "fail" ? "FAIL" : "INCONCLUSIVE";
    os << "[" << tag << "] " << i.id;
    if (!i.detail.empty()) os << " -- " << i.detail;
    os << "\n";
  }
  return os.str();
}

}  // namespace dcat
