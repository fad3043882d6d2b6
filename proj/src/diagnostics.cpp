#include "mla/diagnostics.hpp"

#include <sstream>

namespace mla {

void Diagnostics::add(std::string law, std::array<int, 3> where, std::string note) {
  valid = false;
  violations.push_back({std::move(law), where, std::move(note)});
}

void Diagnostics::merge(const Diagnostics& other) {
  valid = valid && other.valid;
  violations.insert(violations.end(), other.violations.begin(), other.violations.end());
}

std::string Diagnostics::to_string(std::size_t max_items) const {
  if (valid) return "valid";
  std::ostringstream os;
  os << violations.size() << " violation(s):";
  std::size_t shown = 0;
  for (const auto& v : violations) {
    if (max_items != 0 && shown == max_items) {
      os << "\n  ... (" << violations.size() - shown << " more)";
      break;
    }
    os << "\n  " << v.law << " at (";
    bool first = true;
    for (int w : v.where) {
      if (w < 0) continue;
      if (!first) os << ",";
      os << w;
      first = false;
    }
    os << ")";
    if (!v.note.empty()) os << " " << v.note;
    ++shown;
  }
  return os.str();
}

BudgetError::BudgetError(unsigned long long required_, unsigned long long limit_)
    : std::runtime_error("enumeration budget exceeded: needs about " +
                         std::to_string(required_) + " evaluations, limit " +
                         std::to_string(limit_)),
      required(required_),
      limit(limit_) {}

}  // namespace mla
