#ifndef TWOGEN_EMBEDDER_HPP_
#define TWOGEN_EMBEDDER_HPP_

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "twogen/presentation.hpp"
#include "twogen/word.hpp"

namespace twogen {

// Universal words in the free group on {x, y}.
//
//   a_i(x,y)   = y^((x y^i)^2 x^-1) y^-x              length 4i+10
//   abar_i(x,y) = y^((x y^i)^2 x^-1)                  length 4i+7
//   t_i(x,y)   = y^i x y^i x^-1                       length 2i+2
//
// and, for comparison, the older HNN-construction words over {a, b}
//
//   e_i = a^-1 b^-1 a b^-i a b^-1 a^-1 b^i a^-1 b a b^-i a b a^-1 b^i
//
// of length 4i+12.  All throw std::invalid_argument for i < 1.
Word universal_word(long i);
Word universal_word_tf(long i);
Word passage_word(long i);
Word hnn_word(long i);

// a_i(x,y) written out letter by letter as x (y^-i x^-1)^2 y (x y^i)^2 x^-2 y^-1 x,
// without going through conjugation.  Equal to universal_word(i).
Word universal_word_expanded(long i);

// y^x and y^(x^-1)
Word conj_y_by_x();
Word conj_y_by_x_inv();

enum class EmbedMode { general, torsion_free };

std::string to_string(EmbedMode m);

enum class Simplify { none, cyclic };

struct EmbeddingResult {
  Presentation target;  // over plain generators x, y
  Substitution gamma;   // source generator -> universal word
  EmbedMode mode = EmbedMode::general;
  // The source family, absent when the source declares no generators.
  std::optional<GeneratorDecl> family;
  // One note per concrete target relator, in order.
  std::vector<std::string> provenance;
};

class EmbedError : public std::runtime_error {
 public:
  enum class Kind {
    schemas_present,
    unindexed_generator,
    multiple_families,
    torsion_free_not_asserted,
    schema_refused,
  };
  EmbedError(Kind kind, std::string const& what)
      : std::runtime_error(what), kind_(kind) {}
  Kind kind() const { return kind_; }

 private:
  Kind kind_;
};

// Substitutes the universal words into every relator of a schema-free
// presentation over a single indexed family.  Torsion-free mode requires
// the presentation's torsion_free attribute; the embedding is only claimed
// for groups that really are torsion-free, which is not checked.
EmbeddingResult embed(Presentation const& p, EmbedMode mode,
                      Simplify simplify = Simplify::none);

// Same transformation applied to relator templates.  Concrete relators are
// embedded as in embed(); every schema maps to a schema over {x, y} with
// the same parameter range.  Refuses (EmbedError::Kind::schema_refused)
// when a source exponent changes sign or vanishes over its range, or when a
// parametric power of a universal word has no flat template form.
EmbeddingResult embed_schema(Presentation const& p, EmbedMode mode);

// The universal word for the family index `index` as a template.
SchemaWord universal_schema(Affine const& index, EmbedMode mode);

// Text block listing source generators and their images.
std::string describe_gamma(EmbeddingResult const& r);

}  // namespace twogen

#endif  // TWOGEN_EMBEDDER_HPP_
