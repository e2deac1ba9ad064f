#include "twogen/identities.hpp"

#include <stdexcept>

#include "twogen/embedder.hpp"

namespace twogen {

std::vector<IdentityCase> identity_cases(long i) {
  if (i < 1) {
    throw std::invalid_argument("identity index must be >= 1");
  }
  Word x = gen("x");
  Word y = gen("y");
  Word a = conj_y_by_x();
  Word z = conj_y_by_x_inv();
  Word t = passage_word(i);
  Word a_letters{Letter(Generator("x"), -1), Letter(Generator("y"), 1),
                 Letter(Generator("x"), 1)};
  return {
      {"conjugate_by_passage", i, conj(a, t), mul(universal_word(i), a)},
      {"passage_from_yz", i, mul(pow(y, i), pow(z, i)), t},
      {"a_is_y_conj_x", i, conj(y, x), a_letters},
      {"z_conj_x_is_y", i, conj(z, x), y},
  };
}

bool IdentityReport::all_passed() const { return failures() == 0; }

std::size_t IdentityReport::failures() const {
  std::size_t n = 0;
  for (auto const& r : results) {
    n += r.pass ? 0 : 1;
  }
  return n;
}

IdentityReport check_identities(long i_max, Perturbation const& perturb) {
  IdentityReport report;
  for (long i = 1; i <= i_max; ++i) {
    for (auto& c : identity_cases(i)) {
      if (perturb) {
        perturb(c);
      }
      Word residue = mul(c.lhs, inv(c.rhs));
      report.results.push_back({c.name, i, residue.empty(), residue});
    }
  }
  return report;
}

Word drop_last_letter(Word const& w) {
  if (w.empty()) {
    return w;
  }
  return Word(w.letters().first(w.size() - 1));
}

}  // namespace twogen
