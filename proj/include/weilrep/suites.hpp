#pragma once

// Verification suites behind `weilrep verify`.
//
// Each suite is exhaustive when N = 1 and p ≤ 5 and seeded-random otherwise.
// Suites that materialize kernels refuse to run when |V| = p^{2N} > 10^4
// (the product suite applies the cap to V₁ × V₂).

#include <cstddef>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "weilrep/json_io.hpp"

namespace weilrep {

class ResourceError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct Failure {
  std::string check;
  std::string inputs;
  std::string expected;
  std::string actual;
};

struct SuiteReport {
  std::string suite;
  int p = 0;
  int N = 0;
  std::uint64_t seed = 0;
  std::size_t checks_run = 0;
  std::vector<Failure> failures;  // sorted by check id
  double wall_time = 0.0;         // seconds

  bool ok() const { return failures.empty(); }
};

struct SuiteOptions {
  int p = 3;
  int N = 1;
  std::uint64_t seed = 42;
  /// Upper bound on checks per suite (WEILREP_MAX_CHECKS).
  std::optional<std::size_t> max_checks;
};

inline constexpr std::size_t kMaxExhaustiveVectors = 10'000;

/// cayley, heisenberg, weyl-algebra, multiplicativity, egorov, characters,
/// gauss, cocycle, deligne, product.
const std::vector<std::string>& suite_names();

/// Runs one suite, or every suite for "all". Throws std::invalid_argument for
/// an unknown suite or bad p, ResourceError when a cap is exceeded.
std::vector<SuiteReport> run_suites(const std::string& name, const SuiteOptions& options);

/// Single report for one suite; an aggregate with a "suites" array for "all".
Json reports_to_json(const std::string& name, const SuiteOptions& options,
                     const std::vector<SuiteReport>& reports, bool include_timing);

std::string reports_to_csv(const std::vector<SuiteReport>& reports);

/// Reads WEILREP_MAX_CHECKS; unset or empty means no cap.
std::optional<std::size_t> max_checks_from_env();

}  // namespace weilrep
