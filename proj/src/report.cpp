#include "twogen/report.hpp"

#include <algorithm>
#include <sstream>

namespace twogen {

std::vector<CheckRecord> records(IdentityReport const& report) {
  std::vector<CheckRecord> out;
  out.reserve(report.results.size());
  for (auto const& r : report.results) {
    out.push_back({r.name, {{"i", r.i}}, r.pass,
                   r.pass ? "residue 1" : "residue " + to_string(r.residue)});
  }
  return out;
}

CheckRecord basis_record(std::size_t n, long folded_rank, bool free_basis) {
  return {"free_basis", {{"n", n}, {"rank", folded_rank}}, free_basis,
          "folded rank " + std::to_string(folded_rank) + " of " +
              std::to_string(n) + " words"};
}

CheckRecord witness_record(std::string const& group, Word const& query,
                           WitnessReport const& report, bool validated) {
  CheckRecord r;
  r.name = "witness";
  r.params = {{"group", group},
              {"word", to_string(query)},
              {"status", to_string(report.status)},
              {"steps", report.steps}};
  r.pass = report.status == WitnessStatus::witness_found && validated;
  if (report.assignment) {
    auto const& a = *report.assignment;
    r.params["degree"] = a.degree;
    r.params["image_order"] = *report.image_order;
    r.certificate = "x -> " + to_cycles(a.x) + ", y -> " + to_cycles(a.y) +
                    " (degree " + std::to_string(a.degree) + ")";
  } else {
    r.certificate = "no witness; absence of a witness proves nothing";
  }
  return r;
}

std::string to_table(std::vector<CheckRecord> const& rs) {
  std::size_t name_w = 4;
  std::size_t param_w = 6;
  std::vector<std::string> params;
  for (auto const& r : rs) {
    params.push_back(r.params.dump());
    name_w = std::max(name_w, r.name.size());
    param_w = std::max(param_w, params.back().size());
  }
  std::ostringstream os;
  auto pad = [](std::string s, std::size_t w) {
    s.resize(std::max(w, s.size()), ' ');
    return s;
  };
  os << pad("name", name_w) << "  " << pad("params", param_w)
     << "  result  certificate\n";
  for (std::size_t i = 0; i < rs.size(); ++i) {
    os << pad(rs[i].name, name_w) << "  " << pad(params[i], param_w) << "  "
       << (rs[i].pass ? "pass  " : "FAIL  ") << "  " << rs[i].certificate
       << "\n";
  }
  return os.str();
}

std::string to_json_lines(std::vector<CheckRecord> const& rs) {
  std::string out;
  for (auto const& r : rs) {
    nlohmann::json j = {{"name", r.name},
                        {"params", r.params},
                        {"pass", r.pass},
                        {"certificate", r.certificate}};
    out += j.dump() + "\n";
  }
  return out;
}

}  // namespace twogen
