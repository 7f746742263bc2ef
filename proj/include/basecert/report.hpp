#pragma once

#include <json.hpp>
#include <string>

#include "basecert/basesize.hpp"
#include "basecert/classes.hpp"
#include "basecert/families.hpp"
#include "basecert/props.hpp"

namespace basecert {

using Json = nlohmann::ordered_json;

/// Base-size report for one (G, H) pair. Witnesses are ambient elements in
/// cycle notation. When `pi` is nonempty the Hall and solvability
/// verdicts are included. `extra_m` adds a regular-orbit count for one
/// more tuple length besides the standard five.
struct BasesizeRequest {
  std::string group_label;
  std::string subgroup_label;
  PrimeSet pi;
  unsigned extra_m = 0;
  SearchOptions opts;
};

Json basesize_json(const Subgroup& h, const BasesizeRequest& req);

/// Fixed-point data per conjugacy class with both sides of the
/// ratio identity.
Json fpr_json(const Subgroup& h, const std::string& group_label,
              const std::string& subgroup_label, Exec exec);

/// Prime-order class profile, the exact majorant chain inputs, and the
/// least c at which the probabilistic bound concludes.
Json probbound_json(const Subgroup& h, const std::string& group_label,
                    const std::string& subgroup_label, unsigned c_max, Exec exec);

Json positivity_json(const PositivityCertificate& cert);
Json family_json(const FamilyReport& report);
std::string family_transcript(const FamilyReport& report);

Json props_json(const PropertySuiteReport& report);
std::string props_text(const PropertySuiteReport& report);

}  // namespace basecert
