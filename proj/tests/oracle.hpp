// Reference computations used to freeze expected values.  Nothing here
// calls into the library's word arithmetic: words over {x, y} are plain
// strings with 'X' = x^-1 and 'Y' = y^-1, reduced with a character stack.
#ifndef TWOGEN_TESTS_ORACLE_HPP_
#define TWOGEN_TESTS_ORACLE_HPP_

#include <cstddef>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "twogen/word.hpp"

namespace oracle {

inline char invert(char c) {
  return static_cast<char>(c >= 'a' ? c - 'a' + 'A' : c - 'A' + 'a');
}

inline std::string reduce(std::string const& w) {
  std::string st;
  for (char c : w) {
    if (!st.empty() && st.back() == invert(c)) {
      st.pop_back();
    } else {
      st.push_back(c);
    }
  }
  return st;
}

inline std::string inv(std::string const& w) {
  std::string out(w.rbegin(), w.rend());
  for (auto& c : out) {
    c = invert(c);
  }
  return out;
}

inline std::string power(std::string const& w, long n) {
  std::string base = n < 0 ? inv(w) : w;
  std::string out;
  for (long k = 0; k < (n < 0 ? -n : n); ++k) {
    out += base;
  }
  return out;
}

// u^h written out without any cancellation.
inline std::string conj_raw(std::string const& u, std::string const& h) {
  return inv(h) + u + h;
}

// y^((x y^i)^2 x^-1) y^-x expanded by concatenation, then reduced.
inline std::string general_by_conjugation(long i) {
  std::string c = power("x" + power("y", i), 2) + "X";
  return reduce(conj_raw("y", c) + conj_raw("Y", "x"));
}

inline std::string tf_by_conjugation(long i) {
  std::string c = power("x" + power("y", i), 2) + "X";
  return reduce(conj_raw("y", c));
}

// x (y^-i x^-1)^2 y (x y^i)^2 x^-2 y^-1 x, letter by letter.
inline std::string general_letter_formula(long i) {
  return "x" + power(power("Y", i) + "X", 2) + "y" +
         power("x" + power("y", i), 2) + "XXYx";
}

inline std::string passage(long i) {
  return power("y", i) + "x" + power("y", i) + "X";
}

// e_i over {a, b}, A = a^-1, B = b^-1.
inline std::string hnn(long i) {
  return std::string("ABa") + power("B", i) + "aBA" + power("b", i) + "Aba" +
         power("B", i) + "abA" + power("b", i);
}

inline std::string to_chars(twogen::Word const& w) {
  std::string out;
  for (auto const& l : w.letters()) {
    char c = l.gen.name.at(0);
    out.push_back(l.sign > 0 ? c : invert(c));
  }
  return out;
}

// The relator displays of the three worked examples, written out by plain
// concatenation and then reduced.
namespace display {

inline std::string conjugator(long i) {
  return power("x" + power("y", i), 2) + "X";
}

inline std::string zinf_display(long k, long l) {
  std::string u = conj_raw("y", conjugator(k));
  std::string v = conj_raw("y", conjugator(l));
  return reduce(inv(u) + inv(v) + u + v);
}

inline std::string rationals_display(long s) {
  return reduce(conj_raw(power("y", s), conjugator(s)) +
                conj_raw("Y", conjugator(s - 1)));
}

inline std::string prufer_factor(long i) {
  return conj_raw("y", conjugator(i)) + conj_raw("Y", "x");
}

inline std::string prufer_first_display(long p) {
  return reduce(power(prufer_factor(1), p));
}

// Second family at the paper's index s, from the relation a_{s+1}^p = a_s.
inline std::string prufer_display(long p, long s) {
  return reduce(power(prufer_factor(s + 1), p) + conj_raw("y", "x") +
                conj_raw("Y", conjugator(s)));
}

}  // namespace display

// Membership in the subgroup generated by `gens` via path search in the
// unfolded wedge of loops: w is in the subgroup iff some closed path at the
// basepoint has a label that freely reduces to w.  Trivial detours are
// found as a Dyck-style reachability closure, so no folding is involved.
class WedgeMembership {
 public:
  explicit WedgeMembership(std::vector<std::string> const& gens) {
    n_ = 1;
    for (auto const& g : gens) {
      std::size_t prev = 0;
      for (std::size_t i = 0; i < g.size(); ++i) {
        std::size_t next = i + 1 == g.size() ? 0 : n_++;
        arcs_.push_back({prev, g[i], next});
        arcs_.push_back({next, invert(g[i]), prev});
        prev = next;
      }
    }
    trivial_.assign(n_, std::vector<bool>(n_, false));
    for (std::size_t v = 0; v < n_; ++v) {
      trivial_[v][v] = true;
    }
    bool changed = true;
    while (changed) {
      changed = false;
      for (auto const& [p, a, p2] : arcs_) {
        for (auto const& [q2, b, q] : arcs_) {
          if (b == invert(a) && trivial_[p2][q2] && !trivial_[p][q]) {
            trivial_[p][q] = true;
            changed = true;
          }
        }
      }
      for (std::size_t k = 0; k < n_; ++k) {
        for (std::size_t i = 0; i < n_; ++i) {
          if (!trivial_[i][k]) {
            continue;
          }
          for (std::size_t j = 0; j < n_; ++j) {
            if (trivial_[k][j] && !trivial_[i][j]) {
              trivial_[i][j] = true;
              changed = true;
            }
          }
        }
      }
    }
  }

  bool contains(std::string const& w) const {
    std::set<std::size_t> at = close({0});
    for (char c : w) {
      std::set<std::size_t> next;
      for (auto const& [p, a, q] : arcs_) {
        if (a == c && at.contains(p)) {
          next.insert(q);
        }
      }
      at = close(next);
    }
    return at.contains(0);
  }

 private:
  struct Arc {
    std::size_t from;
    char label;
    std::size_t to;
  };

  std::set<std::size_t> close(std::set<std::size_t> const& s) const {
    std::set<std::size_t> out;
    for (auto v : s) {
      for (std::size_t u = 0; u < n_; ++u) {
        if (trivial_[v][u]) {
          out.insert(u);
        }
      }
    }
    return out;
  }

  std::size_t n_ = 1;
  std::vector<Arc> arcs_;
  std::vector<std::vector<bool>> trivial_;
};

}  // namespace oracle

#endif  // TWOGEN_TESTS_ORACLE_HPP_
