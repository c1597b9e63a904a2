#pragma once

// The fixed list of facts checked by `k3lat check-paper`.

#include <string>
#include <vector>

namespace k3lat {

struct LedgerItem {
  std::string id;
  std::string claim;
  bool pass = false;
  std::string detail;
};

std::vector<LedgerItem> run_ledger();

}  // namespace k3lat
