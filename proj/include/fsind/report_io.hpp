#pragma once

#include <optional>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "fsind/catalog.hpp"
#include "fsind/cosets.hpp"
#include "fsind/indicators.hpp"

namespace fsind {

// Output formats. Runtimes appear only when explicitly passed, so that equal
// inputs give byte-identical output.

/**
 * {"category": {"G_spec", "H_spec"}, "m", "g_order", "h_order",
 *  "double_cosets", "entries": [{"rep", "coset_size", "stab_order", "chi",
 *  "chi_degree", "nu", "path"}], "summary": {"<value>": count}}
 */
nlohmann::json report_to_json(const IndicatorReport& report, const std::string& g_spec, const std::string& h_spec,
                              std::optional<double> runtime_seconds = std::nullopt);

/// Header plus one row per entry: rep,coset_size,stab_order,chi,chi_degree,nu,path.
std::string report_to_csv(const IndicatorReport& report);

nlohmann::json verification_to_json(const VerificationReport& report, bool include_runtime = false);

/// One object per double coset: rep, size, stab_order.
nlohmann::json double_cosets_to_json(const DoubleCosetDecomposition& dc, const PermGroup& h,
                                     const Limits& limits = {});

struct CensusRow {
  std::size_t l = 0;
  std::size_t n = 0;
  Census census;
};
/// Header "l,n,total,null" and one line per row.
std::string census_to_csv(const std::vector<CensusRow>& rows);

}  // namespace fsind
