#pragma once

#include <string>
#include <vector>

namespace skeinym {

// Named self-check suites behind the `verify` CLI subcommand.  Each runs a
// compact version of one module's invariants and reports a pass flag plus a
// human-readable log.  Unknown suite names throw DomainError.
struct VerifyReport {
  bool passed = false;
  std::string log;
};

VerifyReport run_verify(const std::string& suite);
std::vector<std::string> verify_suites();

}  // namespace skeinym
