#ifndef TWOGEN_BUILTIN_EXAMPLES_HPP_
#define TWOGEN_BUILTIN_EXAMPLES_HPP_

#include <optional>
#include <string>
#include <string_view>

#include "twogen/embedder.hpp"
#include "twogen/presentation.hpp"

namespace twogen {

// Countable groups with infinite presentations shipped with the tool:
//   zinf   - free abelian group of countable rank, [a_k, a_l]
//   Q      - additive rationals, a_s^s = a_{s-1}, a_i <-> 1/i!
//   prufer - quasicyclic p-group, a_1^p and a_s^p = a_{s-1}
enum class Example { zinf, rationals, prufer };

std::optional<Example> example_from_name(std::string_view name);
std::string example_name(Example e);

// DSL source; `p` is only used by prufer.
std::string example_source(Example e, long p = 2);
Presentation example_presentation(Example e, long p = 2);
// zinf and Q are torsion-free; prufer is not.
EmbedMode example_mode(Example e);
// File stem for golden output, e.g. "Q_b5", "prufer_p3_b4".
std::string golden_stem(Example e, long p, long bound);

}  // namespace twogen

#endif  // TWOGEN_BUILTIN_EXAMPLES_HPP_
