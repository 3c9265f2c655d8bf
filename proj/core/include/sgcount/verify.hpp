#pragma once

#include <array>
#include <cstdint>
#include <functional>
#include <optional>
#include <set>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "sgcount/bigint.hpp"
#include "sgcount/counting.hpp"
#include "sgcount/node_family.hpp"

namespace sgcount {

/// Identifies one counting path.
enum class Method : std::uint8_t {
  NestedClosed,
  NestedClosedAlt,
  NestedRecursion,
  NestedGenFun,
  Ullrich,
  Bungartz,
  GridOracle,
  DupClosed,
  DupSum,
  DupRecursion,
  DupGenFun,
  DupOracle,
  SigmaSum,
  SigmaLinearClosed,
  SigmaGenFun,
  SigmaOracle,
  CombinationIdentity,
  MullerGronbach,
};

inline constexpr std::array<Method, 18> kAllMethods = {
    Method::NestedClosed,      Method::NestedClosedAlt, Method::NestedRecursion,
    Method::NestedGenFun,      Method::Ullrich,         Method::Bungartz,
    Method::GridOracle,        Method::DupClosed,       Method::DupSum,
    Method::DupRecursion,      Method::DupGenFun,       Method::DupOracle,
    Method::SigmaSum,          Method::SigmaLinearClosed, Method::SigmaGenFun,
    Method::SigmaOracle,       Method::CombinationIdentity, Method::MullerGronbach,
};

std::string_view method_name(Method m);

/// One evaluated path. Identity checks (CombinationIdentity,
/// MullerGronbach) store 1 for pass and 0 for fail.
struct MethodValue {
  Method method;
  std::optional<NodeFamilyId> family;
  BigInt value;
};

/// All counts for one cell, every path that was run, and whether they agree.
struct CountReport {
  CountQuery query;
  BigInt n_nested;
  BigInt n_dup;
  BigInt n_sigma;
  std::vector<MethodValue> values;
  std::set<Method> methods;
  bool agreement = true;
  std::vector<std::string> mismatches;
};

/// Test seam: called with every freshly computed path value before it is
/// compared, so a harness can corrupt one on purpose.
struct VerifyHooks {
  std::function<void(Method, std::optional<NodeFamilyId>, BigInt&)> tamper;
};

/// Runs every applicable path for the cell. Grid oracles run for each
/// family in `families` that forms a nested pairing with the growth.
[[nodiscard]] CountReport make_report(const CountQuery& q, std::span<const NodeFamilyId> families,
                                      const VerifyHooks& hooks = {});

/// The nine built-in growth families plus one non-decreasing custom table.
[[nodiscard]] std::vector<GrowthSpec> default_verify_growths();

struct VerifyOptions {
  std::uint32_t d_min = 1;
  std::uint32_t d_max = 4;
  std::uint32_t mu_min = 0;
  std::uint32_t mu_max = 5;
  std::vector<GrowthSpec> growths = default_verify_growths();
  std::vector<NodeFamilyId> families{kAllNodeFamilies.begin(), kAllNodeFamilies.end()};
  VerifyHooks hooks;
};

struct VerifySummary {
  std::vector<CountReport> reports;
  std::set<Method> exercised;
  bool all_agree = true;

  /// First report with agreement == false, or nullptr.
  [[nodiscard]] const CountReport* first_failure() const;
};

/// make_report over d in d_min..d_max, mu in mu_min..mu_max and every growth.
[[nodiscard]] VerifySummary run_verification(const VerifyOptions& options);

}  // namespace sgcount
