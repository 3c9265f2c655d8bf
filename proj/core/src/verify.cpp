#include "sgcount/verify.hpp"

#include <algorithm>

#include "sgcount/grid.hpp"
#include "sgcount/series.hpp"

namespace sgcount {

std::string_view method_name(Method m) {
  switch (m) {
    case Method::NestedClosed: return "nested_closed";
    case Method::NestedClosedAlt: return "nested_closed_alt";
    case Method::NestedRecursion: return "nested_recursion";
    case Method::NestedGenFun: return "nested_genfun";
    case Method::Ullrich: return "ullrich";
    case Method::Bungartz: return "bungartz";
    case Method::GridOracle: return "grid_oracle";
    case Method::DupClosed: return "dup_closed";
    case Method::DupSum: return "dup_sum";
    case Method::DupRecursion: return "dup_recursion";
    case Method::DupGenFun: return "dup_genfun";
    case Method::DupOracle: return "dup_oracle";
    case Method::SigmaSum: return "sigma_sum";
    case Method::SigmaLinearClosed: return "sigma_linear_closed";
    case Method::SigmaGenFun: return "sigma_genfun";
    case Method::SigmaOracle: return "sigma_oracle";
    case Method::CombinationIdentity: return "combination_identity";
    case Method::MullerGronbach: return "muller_gronbach";
  }
  return "?";
}

CountReport make_report(const CountQuery& q, std::span<const NodeFamilyId> families,
                        const VerifyHooks& hooks) {
  q.validate();
  CountReport report{q, 0, 0, 0, {}, {}, true, {}};

  auto record = [&](Method m, std::optional<NodeFamilyId> family, BigInt value) {
    if (hooks.tamper) hooks.tamper(m, family, value);
    report.methods.insert(m);
    report.values.push_back({m, family, value});
    return value;
  };
  auto expect = [&](std::string_view quantity, const BigInt& reference, Method m,
                    std::optional<NodeFamilyId> family, const BigInt& value) {
    if (value == reference) return;
    report.agreement = false;
    std::string where(method_name(m));
    if (family) where += "[" + std::string(family_name(*family)) + "]";
    report.mismatches.push_back(std::string(quantity) + ": " + where + " = " + to_decimal(value) +
                                ", reference = " + to_decimal(reference));
  };
  auto check = [&](std::string_view quantity, const BigInt& reference, Method m, BigInt value,
                   std::optional<NodeFamilyId> family = std::nullopt) {
    expect(quantity, reference, m, family, record(m, family, std::move(value)));
  };

  const GrowthSpec& g = q.growth;
  const GrowthFamily fam = g.family();

  // N(d, mu): the recursion is the reference.
  report.n_nested = record(Method::NestedRecursion, std::nullopt, count_nested_recursion(q));
  const BigInt& n_ref = report.n_nested;
  if (has_nested_closed(fam)) check("N", n_ref, Method::NestedClosed, count_nested_closed(q));
  if (has_nested_closed_alt(fam)) check("N", n_ref, Method::NestedClosedAlt, count_nested_closed_alt(q));
  check("N", n_ref, Method::NestedGenFun, count_via_genfun(g, q.d, q.mu, CountKind::Nested));
  if (fam == GrowthFamily::Power && g.base() == 2) {
    check("N", n_ref, Method::Ullrich, count_ullrich(q.d, q.mu) * ipow(BigInt(2), q.d));
  }
  if (fam == GrowthFamily::PowerPlusOne && g.base() == 2) {
    check("N", n_ref, Method::Bungartz, count_bungartz(q.d, q.mu));
  }
  for (NodeFamilyId family : families) {
    if (!is_nested_pairing(family, g)) continue;
    const GridSpec spec{q.d, q.mu, family, g, true};
    check("N", n_ref, Method::GridOracle, grid_cardinality_oracle(spec), family);
  }

  // Ndup(d, mu): the multi-index sum is the reference.
  report.n_dup = record(Method::DupSum, std::nullopt, count_dup_sum(q));
  const BigInt& dup_ref = report.n_dup;
  if (has_dup_closed(fam)) check("Ndup", dup_ref, Method::DupClosed, count_dup_closed(q));
  check("Ndup", dup_ref, Method::DupRecursion, count_dup_recursion(q));
  check("Ndup", dup_ref, Method::DupGenFun, count_via_genfun(g, q.d, q.mu, CountKind::WithDuplicates));
  const NodeFamilyId any_family = families.empty() ? NodeFamilyId::Leja : families.front();
  check("Ndup", dup_ref, Method::DupOracle, duplicate_count_oracle({q.d, q.mu, any_family, g, true}));

  // Nsigma(d, mu).
  report.n_sigma = record(Method::SigmaSum, std::nullopt, count_sigma(q));
  const BigInt& sigma_ref = report.n_sigma;
  {
    const auto series = genfun_series(g, q.d, q.mu, CountKind::WithDuplicates);
    const std::uint32_t lo = q.mu + 1 > q.d ? q.mu + 1 - q.d : 0;
    BigInt total = 0;
    for (std::uint32_t k = lo; k <= q.mu; ++k) total += series[k];
    check("Nsigma", sigma_ref, Method::SigmaGenFun, total);
  }
  if (fam == GrowthFamily::Linear) {
    check("Nsigma", sigma_ref, Method::SigmaLinearClosed, count_sigma_linear_closed(q.d, q.mu));
  }
  check("Nsigma", sigma_ref, Method::SigmaOracle, duplicate_count_oracle({q.d, q.mu, any_family, g, false}));

  // Structural identities, stored as 1 (holds) or 0 (fails).
  {
    BigInt sum = 0;
    for_each_index(q.d, q.mu, false, [&](const MultiIndex& i) {
      sum += combination_coefficient(q.d, q.mu, static_cast<std::uint32_t>(i.norm()));
    });
    check("combination coefficients", 1, Method::CombinationIdentity, BigInt(sum == 1 ? 1 : 0));
  }
  if (fam == GrowthFamily::ClenshawCurtis && q.mu >= 2 * q.d) {
    check("Muller-Gronbach", 1, Method::MullerGronbach,
          BigInt(muller_gronbach_poly_check(q.d, q.mu) ? 1 : 0));
  }

  if (!(report.n_sigma >= report.n_dup && report.n_dup >= report.n_nested && report.n_nested >= 1)) {
    report.agreement = false;
    report.mismatches.push_back("ordering Nsigma >= Ndup >= N >= 1 violated");
  }
  return report;
}

std::vector<GrowthSpec> default_verify_growths() {
  return {
      GrowthSpec::power_minus_one(2),
      GrowthSpec::power_minus_one(3),
      GrowthSpec::power(2),
      GrowthSpec::power(3),
      GrowthSpec::power_plus_one(2),
      GrowthSpec::power_plus_one(3),
      GrowthSpec::linear(),
      GrowthSpec::odd(),
      GrowthSpec::clenshaw_curtis(),
      GrowthSpec::custom({1, 2, 2, 4, 5, 7, 8, 10, 13, 13, 15, 18, 20, 21, 24, 26}),
  };
}

const CountReport* VerifySummary::first_failure() const {
  const auto it = std::find_if(reports.begin(), reports.end(), [](const CountReport& r) { return !r.agreement; });
  return it == reports.end() ? nullptr : &*it;
}

VerifySummary run_verification(const VerifyOptions& options) {
  VerifySummary summary;
  for (std::uint32_t d = std::max(1u, options.d_min); d <= options.d_max; ++d) {
    for (std::uint32_t mu = options.mu_min; mu <= options.mu_max; ++mu) {
      for (const GrowthSpec& g : options.growths) {
        CountReport r = make_report({d, mu, g}, options.families, options.hooks);
        summary.exercised.insert(r.methods.begin(), r.methods.end());
        summary.all_agree = summary.all_agree && r.agreement;
        summary.reports.push_back(std::move(r));
      }
    }
  }
  return summary;
}

}  // namespace sgcount
