#include "halg/report.hpp"

#include <sstream>

namespace halg {

void CheckReport::add(CheckEntry e) { entries_.push_back(std::move(e)); }

void CheckReport::add_flag(const std::string& axiom, bool pass,
                           const std::string& detail) {
  CheckEntry e;
  e.axiom = axiom;
  e.pass = pass;
  e.checked = 1;
  e.failed = pass ? 0 : 1;
  if (!pass && !detail.empty()) {
    e.witness = Witness{detail, "", ""};
  }
  entries_.push_back(std::move(e));
}

void CheckReport::merge(const std::string& prefix, const CheckReport& sub) {
  for (CheckEntry e : sub.entries_) {
    e.axiom = prefix.empty() ? e.axiom : prefix + ":" + e.axiom;
    entries_.push_back(std::move(e));
  }
}

bool CheckReport::pass() const {
  for (const auto& e : entries_) {
    if (!e.pass) return false;
  }
  return true;
}

const CheckEntry* CheckReport::find(const std::string& axiom) const {
  for (const auto& e : entries_) {
    if (e.axiom == axiom) return &e;
  }
  return nullptr;
}

std::string CheckReport::summary() const {
  std::ostringstream os;
  for (const auto& e : entries_) {
    os << (e.pass ? "  ok  " : " FAIL ") << e.axiom;
    if (!e.pass) {
      os << "  (" << e.failed << "/" << e.checked << " indices)";
      if (e.witness) {
        os << "  at " << e.witness->index;
        if (!e.witness->lhs.empty() || !e.witness->rhs.empty()) {
          os << "  lhs=" << e.witness->lhs << "  rhs=" << e.witness->rhs;
        }
      }
    }
    os << "\n";
  }
  return os.str();
}

}  // namespace halg
