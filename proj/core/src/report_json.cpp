#include "knotsig/report_json.hpp"

#include <json.hpp>
#include <sstream>

#include "knotsig/region_matrices.hpp"

namespace knotsig {

namespace {

using json = nlohmann::ordered_json;

std::string rstr(const Rat& r) { return rat_to_string(r); }

json scan_row_json(const ScanRow& row, bool has_oracle) {
  json j;
  j["u"] = rstr(row.point.u);
  j["x"] = rstr(row.point.x());
  j["omega"] = {rstr(row.point.omega_re()), rstr(row.point.omega_im())};
  j["kashaev"] = row.kashaev;
  if (has_oracle)
    j["oracle"] = row.oracle;
  else
    j["oracle"] = nullptr;
  return j;
}

std::string dump(const json& j) { return j.dump(2) + "\n"; }

}  // namespace

std::string info_json(const Diagram& d) {
  json j;
  j["name"] = d.name();
  j["crossings"] = d.crossing_count();
  j["edges"] = d.edge_count();
  j["regions"] = d.region_count();
  j["components"] = d.component_count();
  j["writhe"] = d.writhe();
  j["special"] = d.is_special();
  if (d.braid()) {
    j["braid"]["strands"] = d.braid()->strands;
    j["braid"]["letters"] = d.braid()->letters;
  } else {
    j["braid"] = nullptr;
  }
  return dump(j);
}

std::string matrices_json(const Diagram& d, std::optional<std::array<int, 2>> pair) {
  const UPolyMatrix tau = kashaev_matrix(d);
  const LaurentMatrix kau = kauffman_matrix(d);
  const std::array<int, 2> used = pair ? *pair : default_adjacent_pair(d);
  const UPolyMatrix tau_del = delete_adjacent_pair(tau, d, used);
  const LaurentMatrix kau_del = delete_adjacent_pair(kau, d, used);

  json j;
  j["name"] = d.name();
  j["regions"] = json::array();
  for (int r = 0; r < d.region_count(); ++r) {
    json rj;
    rj["id"] = r;
    rj["colour"] = d.regions()[r].colour == 0 ? "white" : "black";
    rj["corners"] = static_cast<int>(d.regions()[r].corners.size());
    j["regions"].push_back(rj);
  }
  auto poly_rows = [](const auto& m, auto to_text) {
    json rows = json::array();
    for (int i = 0; i < m.rows(); ++i) {
      json row = json::array();
      for (int c = 0; c < m.cols(); ++c) row.push_back(to_text(m.at(i, c)));
      rows.push_back(row);
    }
    return rows;
  };
  j["tau"] = poly_rows(tau, [](const IntPoly& p) { return p.to_string(); });
  j["kauffman"] =
      poly_rows(kau, [](const LaurentPoly& p) { return p.to_string(); });
  j["signs"] = sign_diagonal(d);
  j["deleted_pair"] = {used[0], used[1]};
  j["tau_deleted"] =
      poly_rows(tau_del, [](const IntPoly& p) { return p.to_string(); });
  j["kauffman_deleted"] =
      poly_rows(kau_del, [](const LaurentPoly& p) { return p.to_string(); });
  return dump(j);
}

std::string signature_at_json(const Diagram& d, const Rat& x0) {
  const UPolyMatrix tau = kashaev_matrix(d);
  const Inertia in = kashaev_inertia(tau, x0);
  json j;
  j["diagram"] = d.name();
  j["x"] = rstr(x0);
  j["writhe"] = d.writhe();
  j["inertia"]["signature"] = in.signature;
  j["inertia"]["rank"] = in.rank;
  j["inertia"]["nullity"] = in.nullity;
  j["kashaev_invariant"] = in.signature - d.writhe();
  return dump(j);
}

std::string signature_scan_json(const std::string& name,
                                const std::vector<ScanRow>& rows, bool has_oracle) {
  json j;
  j["diagram"] = name;
  j["scan"] = json::array();
  for (const auto& row : rows) j["scan"].push_back(scan_row_json(row, has_oracle));
  return dump(j);
}

std::string signature_scan_csv(const std::vector<ScanRow>& rows, bool has_oracle) {
  std::ostringstream out;
  out << "u, x_num/x_den, kashaev_inv, oracle_2sigma, equal\n";
  for (const auto& row : rows) {
    const Rat x = row.point.x();
    out << rstr(row.point.u) << ", " << x.get_num().get_str() << "/"
        << x.get_den().get_str() << ", " << row.kashaev << ", ";
    if (has_oracle)
      out << row.oracle << ", " << (row.equal ? 1 : 0);
    else
      out << "NA, NA";
    out << "\n";
  }
  return out.str();
}

namespace {

json report_body(const ConjectureReport& r) {
  json j;
  j["diagram"] = r.diagram_name;
  j["identities"]["factorization"] = r.factorization;
  j["identities"]["alexander_sq"] = r.alexander_sq;
  j["identities"]["classical"] = r.classical;
  if (r.at_one)
    j["identities"]["at_one"] = *r.at_one;
  else
    j["identities"]["at_one"] = nullptr;
  j["scan"] = json::array();
  for (const auto& row : r.scan) j["scan"].push_back(scan_row_json(row, true));
  j["applicability"] = r.applicability;
  j["verdict"] = r.verdict;
  return j;
}

}  // namespace

std::string report_json(const ConjectureReport& r) { return dump(report_body(r)); }

std::string verify_json(const std::vector<ConjectureReport>& reports,
                        const std::optional<FuzzSummary>& fuzz, bool all_ok) {
  json j;
  j["reports"] = json::array();
  for (const auto& r : reports) j["reports"].push_back(report_body(r));
  if (fuzz) {
    j["fuzz"]["seed"] = fuzz->seed;
    j["fuzz"]["rewrites"] = fuzz->rewrites;
    j["fuzz"]["factorization_failures"] = fuzz->factorization_failures;
    j["fuzz"]["crossing_sign_failures"] = fuzz->crossing_sign_failures;
    j["fuzz"]["writhe_split_failures"] = fuzz->writhe_split_failures;
    j["fuzz"]["invariance_failures"] = fuzz->invariance_failures;
  } else {
    j["fuzz"] = nullptr;
  }
  j["all_ok"] = all_ok;
  return dump(j);
}

}  // namespace knotsig
