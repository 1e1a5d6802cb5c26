#pragma once

#include <functional>
#include <string>
#include <utility>
#include <vector>

#include "halg/linalg.hpp"
#include "halg/report.hpp"

namespace halg {

/// One quantified basis index of an axiom ("for all c in C...").
struct Axis {
  std::string name;
  std::size_t dim = 0;
  const VectorSpace* space = nullptr;  // optional, for labelled witnesses
};

/// Evaluates an exact identity over all basis multi-indices in lexicographic
/// order. Records the first failing witness and counts all failures.
inline CheckEntry check_identity(
    const std::string& axiom, const std::vector<Axis>& axes,
    const std::function<std::pair<Tensor, Tensor>(const std::vector<std::size_t>&)>&
        eval) {
  CheckEntry entry;
  entry.axiom = axiom;
  std::vector<std::size_t> idx(axes.size(), 0);
  std::size_t total = 1;
  for (const auto& a : axes) total *= a.dim;
  for (std::size_t n = 0; n < total; ++n) {
    auto [lhs, rhs] = eval(idx);
    ++entry.checked;
    if (lhs != rhs) {
      ++entry.failed;
      if (!entry.witness) {
        std::string where;
        for (std::size_t k = 0; k < axes.size(); ++k) {
          if (k) where += " ";
          where += axes[k].name + "=";
          where += axes[k].space ? axes[k].space->label(idx[k])
                                 : std::to_string(idx[k]);
        }
        entry.witness = Witness{where, lhs.str(), rhs.str()};
      }
    }
    // odometer increment
    for (std::size_t k = axes.size(); k-- > 0;) {
      if (++idx[k] < axes[k].dim) break;
      idx[k] = 0;
    }
  }
  entry.pass = entry.failed == 0;
  return entry;
}

}  // namespace halg
