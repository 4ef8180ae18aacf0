#pragma once

#include "bruhatkit/bruhat.hpp"
#include "bruhatkit/flagdyn.hpp"

#include <json.hpp>

namespace bruhatkit {

using Json = nlohmann::ordered_json;

Json rat_json(const Rat& x);                 // ["num", "den"] string pair
Rat rat_from_json(const Json& j);
Json vec_json(const RatVec& v);
RatVec vec_from_json(const Json& j);

Json root_system_json(const RootSystem& rs);
Json split_element_json(const RootSystem& rs, const SplitElement& h);
SplitElement split_element_from_json(const RootSystem& rs, const Json& j);

Json weyl_summary_json(const WeylGroup& weyl);
Json coset_table_json(const WeylGroup& weyl, const DoubleCosetTable& table,
                      std::size_t membership_limit);
Json decomposition_json(const RootSystem& rs, const WeylGroup& weyl,
                        const GeneralizedDecomposition& gd);
Json components_json(const std::vector<flagdyn::NumericalComponent>& comps);
Json verify_report_json(const flagdyn::VerifyReport& rep);

}  // namespace bruhatkit
