#ifndef TWOGEN_REPORT_HPP_
#define TWOGEN_REPORT_HPP_

#include <string>
#include <vector>

#include "json.hpp"
#include "twogen/identities.hpp"
#include "twogen/witness.hpp"

namespace twogen {

// One verified claim.  `certificate` is whatever lets a reader recheck the
// claim: a residue word, a rank, a permutation assignment.
struct CheckRecord {
  std::string name;
  nlohmann::json params = nlohmann::json::object();
  bool pass = false;
  std::string certificate;
};

std::vector<CheckRecord> records(IdentityReport const& report);
CheckRecord basis_record(std::size_t n, long folded_rank, bool free_basis);
CheckRecord witness_record(std::string const& group, Word const& query,
                           WitnessReport const& report, bool validated);

std::string to_table(std::vector<CheckRecord> const& rs);
// One JSON object per line with keys name, params, pass, certificate.
std::string to_json_lines(std::vector<CheckRecord> const& rs);

}  // namespace twogen

#endif  // TWOGEN_REPORT_HPP_
