#pragma once

#include <cstddef>
#include <functional>
#include <span>
#include <string>
#include <vector>

#include "trussmaint/graph.hpp"
#include "trussmaint/io.hpp"
#include "trussmaint/truss_index.hpp"

namespace trussmaint {

struct VerifyReport {
  std::size_t steps = 0;
  std::size_t matched = 0;
  std::vector<std::string> mismatches;  // one line per failing step
  bool ok() const { return matched == steps; }
};

using Oracle = std::function<TrussIndex(const Graph&)>;

/// Applies each operation incrementally to (g, idx) and compares the index
/// with oracle(g) after every step. After a mismatch the oracle's index is
/// adopted so later steps are judged on their own. Ids are external; +n
/// interns new vertices into ids. Invalid operations throw GraphError
/// naming the step.
VerifyReport verify_operations(Graph& g, TrussIndex& idx, IdMap& ids, std::span<const Operation> ops,
                               const Oracle& oracle);

/// Applies one operation without checking. Shared by the CLI mutators.
void apply_operation(Graph& g, TrussIndex& idx, IdMap& ids, const Operation& op);

}  // namespace trussmaint
