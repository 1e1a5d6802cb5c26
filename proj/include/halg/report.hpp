#pragma once

#include <optional>
#include <string>
#include <vector>

namespace halg {

/// First failing basis multi-index of an axiom, with both evaluated sides.
struct Witness {
  std::string index;  // e.g. "c=g h=(12)"
  std::string lhs;
  std::string rhs;
};

struct CheckEntry {
  std::string axiom;
  bool pass = true;
  std::size_t checked = 0;
  std::size_t failed = 0;
  std::optional<Witness> witness;
};

/// Outcome of an axiom suite. Failures are entries, never exceptions.
class CheckReport {
 public:
  void add(CheckEntry e);
  void add_flag(const std::string& axiom, bool pass, const std::string& detail = "");
  void merge(const std::string& prefix, const CheckReport& sub);

  bool pass() const;
  const std::vector<CheckEntry>& entries() const { return entries_; }
  const CheckEntry* find(const std::string& axiom) const;
  std::string summary() const;

 private:
  std::vector<CheckEntry> entries_;
};

}  // namespace halg
