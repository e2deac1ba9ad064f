#ifndef TWOGEN_IDENTITIES_HPP_
#define TWOGEN_IDENTITIES_HPP_

#include <functional>
#include <string>
#include <vector>

#include "twogen/word.hpp"

namespace twogen {

// The free-group identities that make {x, y} a free basis of the nested
// amalgam/HNN construction, with a = y^x, z = y^(x^-1), t_i = y^i x y^i x^-1:
//
//   conjugate_by_passage   a^(t_i)        = a_i(x,y) a
//   passage_from_yz        y^i z^i        = t_i
//   a_is_y_conj_x          y^x            = x^-1 y x
//   z_conj_x_is_y          z^x            = y
struct IdentityCase {
  std::string name;
  long i = 1;
  Word lhs;
  Word rhs;
};

std::vector<IdentityCase> identity_cases(long i);

struct IdentityResult {
  std::string name;
  long i = 1;
  bool pass = false;
  Word residue;  // lhs * rhs^-1, empty on success
};

struct IdentityReport {
  std::vector<IdentityResult> results;
  bool all_passed() const;
  std::size_t failures() const;
};

// Hook for negative controls: edits a case before it is checked.
using Perturbation = std::function<void(IdentityCase&)>;

IdentityReport check_identities(long i_max, Perturbation const& perturb = {});

// Drops the last letter of a word; the standard negative-control mutation.
Word drop_last_letter(Word const& w);

}  // namespace twogen

#endif  // TWOGEN_IDENTITIES_HPP_
