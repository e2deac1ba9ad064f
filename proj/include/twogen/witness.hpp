#ifndef TWOGEN_WITNESS_HPP_
#define TWOGEN_WITNESS_HPP_

#include <chrono>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "twogen/presentation.hpp"
#include "twogen/word.hpp"

namespace twogen {

// Permutation of {0..n-1} as its image list.  Printed 1-based.
using Perm = std::vector<std::size_t>;

// A homomorphism from F(x, y) to Sym(n).
struct PermAssignment {
  std::size_t degree = 1;
  Perm x;
  Perm y;

  friend bool operator==(PermAssignment const&, PermAssignment const&) = default;
};

enum class WitnessStatus { witness_found, exhausted, timeout };

std::string to_string(WitnessStatus s);

// WITNESS_FOUND means every relator maps to the identity while the queried
// word does not, so the word is nontrivial in the presented group.  The
// search is sound but incomplete: EXHAUSTED or TIMEOUT proves nothing about
// the word.
struct WitnessReport {
  WitnessStatus status = WitnessStatus::exhausted;
  std::optional<PermAssignment> assignment;
  std::optional<long> image_order;
  std::uint64_t steps = 0;
};

struct WitnessOptions {
  std::size_t max_degree = 8;
  // Degrees up to this are searched exhaustively; above it, random pairs.
  std::size_t exhaustive_up_to = 4;
  std::uint64_t max_steps = 20'000'000;
  std::chrono::milliseconds time_limit{60'000};
  std::uint64_t seed = 0x7477'6f67'656eULL;
  // When false, `threads` workers race with distinct seeds and the first
  // hit wins, so the reported assignment may vary between runs.
  bool deterministic = true;
  unsigned threads = 1;
};

// Throws std::invalid_argument if the target still has schemas or mentions
// generators other than x and y.
WitnessReport find_witness(Presentation const& target, Word const& w,
                           WitnessOptions const& options = {});

// Image of w, acting on the right: points are pushed through the letters
// from left to right.
Perm evaluate(Word const& w, PermAssignment const& a);
long order(Perm const& p);
bool is_identity(Perm const& p);
std::string to_cycles(Perm const& p);  // "(1,2)(3,4,5)", "()" for identity

// Recomputes the claims of a WITNESS_FOUND report from scratch.
bool validate_witness(Presentation const& target, Word const& w,
                      WitnessReport const& report);

}  // namespace twogen

#endif  // TWOGEN_WITNESS_HPP_
