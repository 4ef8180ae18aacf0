#include "bruhatkit/json_io.hpp"

#include <cmath>
#include <stdexcept>

namespace bruhatkit {

namespace {

Json word_json(const WeylGroup::Element& e) {
  Json w = Json::array();
  for (int i : e.word) w.push_back(i + 1);  // 1-based simple reflection indices
  return w;
}

Json subset_json(SimpleSubset s, int rank) {
  Json j = Json::array();
  for (int i : s.indices(rank)) j.push_back(i + 1);
  return j;
}

Json assignment_json(const flagdyn::Assignment& a) {
  Json j = Json::array();
  for (const auto& row : a) j.push_back(row);
  return j;
}

}  // namespace

Json rat_json(const Rat& x) {
  return Json::array({std::to_string(x.numerator()), std::to_string(x.denominator())});
}

Rat rat_from_json(const Json& j) {
  if (!j.is_array() || j.size() != 2) throw std::invalid_argument("bad rational");
  return Rat(std::stoll(j[0].get<std::string>()), std::stoll(j[1].get<std::string>()));
}

Json vec_json(const RatVec& v) {
  Json j = Json::array();
  for (const auto& x : v) j.push_back(rat_json(x));
  return j;
}

RatVec vec_from_json(const Json& j) {
  RatVec v;
  for (const auto& x : j) v.push_back(rat_from_json(x));
  return v;
}

Json root_system_json(const RootSystem& rs) {
  Json j;
  j["series"] = std::string(1, static_cast<char>(rs.series()));
  j["rank"] = rs.rank();
  j["ambient_dim"] = rs.ambient_dim();
  Json roots = Json::array();
  for (const auto& r : rs.roots()) roots.push_back(vec_json(r));
  j["roots"] = roots;
  j["simple_roots"] = rs.simple_indices();
  j["positive_roots"] = rs.positive_indices();
  Json coroots = Json::array();
  for (const auto& c : rs.coroots()) coroots.push_back(vec_json(c));
  j["coroots"] = coroots;
  Json pairing = Json::array();
  for (const auto& row : rs.pairing()) pairing.push_back(vec_json(row));
  j["pairing"] = pairing;
  return j;
}

Json split_element_json(const RootSystem& rs, const SplitElement& h) {
  Json j;
  j["coweight_coords"] = vec_json(h.coweight_coords);
  j["chamber_closure"] = h.chamber_closure_flag;
  j["theta"] = h.chamber_closure_flag ? subset_json(rs.theta_of(h), rs.rank()) : Json::array();
  return j;
}

SplitElement split_element_from_json(const RootSystem& rs, const Json& j) {
  return rs.split_element(vec_from_json(j.at("coweight_coords")));
}

Json weyl_summary_json(const WeylGroup& weyl) {
  Json j;
  j["series"] = std::string(1, static_cast<char>(weyl.root_system().series()));
  j["rank"] = weyl.root_system().rank();
  j["order"] = weyl.order();
  j["longest_length"] = weyl.element(weyl.longest_element()).length;
  j["longest_word"] = word_json(weyl.element(weyl.longest_element()));
  return j;
}

Json coset_table_json(const WeylGroup& weyl, const DoubleCosetTable& table,
                      std::size_t membership_limit) {
  Json j;
  j["left"] = subset_json(table.left, weyl.root_system().rank());
  j["right"] = subset_json(table.right, weyl.root_system().rank());
  j["count"] = table.count();
  Json reps = Json::array();
  for (int c = 0; c < table.count(); ++c) {
    Json r;
    r["word"] = word_json(weyl.element(table.reps[c]));
    r["length"] = weyl.element(table.reps[c]).length;
    r["size"] = table.sizes[c];
    reps.push_back(r);
  }
  j["cosets"] = reps;
  if (weyl.order() <= membership_limit)
    j["membership"] = table.membership;
  return j;
}

Json decomposition_json(const RootSystem& rs, const WeylGroup& weyl,
                        const GeneralizedDecomposition& gd) {
  Json j;
  j["series"] = std::string(1, static_cast<char>(rs.series()));
  j["rank"] = rs.rank();
  j["H"] = split_element_json(rs, gd.h);
  j["theta"] = subset_json(gd.theta, rs.rank());
  Json cells = Json::array();
  for (const auto& cell : gd.cells) {
    Json c;
    c["rep_word"] = word_json(weyl.element(cell.component.coset_rep));
    c["flag_type"] = subset_json(cell.component.flag_type.theta, rs.rank());
    c["fix_dim"] = cell.component.dim;
    c["unstable_dim"] = cell.unstable_dim;
    c["total_dim"] = cell.total_dim;
    cells.push_back(c);
  }
  j["cells"] = cells;
  return j;
}

Json components_json(const std::vector<flagdyn::NumericalComponent>& comps) {
  Json arr = Json::array();
  for (const auto& c : comps) {
    Json e;
    e["id"] = c.id;
    e["assignment"] = assignment_json(c.assignment);
    e["est_dim"] = c.est_dim;
    arr.push_back(e);
  }
  return arr;
}

Json verify_report_json(const flagdyn::VerifyReport& rep) {
  Json j;
  j["n"] = rep.n;
  j["multiplicities"] = rep.mults;
  j["flag_type"] = rep.type.blocks;
  j["seed"] = rep.seed;
  j["trials"] = rep.trials;
  Json comps = Json::array();
  for (std::size_t i = 0; i < rep.components.size(); ++i) {
    Json e;
    e["assignment"] = assignment_json(rep.components[i].assignment);
    e["est_dim"] = rep.components[i].est_dim;
    e["predicted_dim"] = rep.predicted_dims.empty() ? -1 : rep.predicted_dims[i];
    comps.push_back(e);
  }
  j["components"] = comps;
  // -1 marks "no pair to compare" (a single component).
  j["min_pairwise_distance"] =
      std::isfinite(rep.min_pairwise_distance) ? rep.min_pairwise_distance : -1.0;
  j["violations"] = rep.violations;
  return j;
}

}  // namespace bruhatkit
