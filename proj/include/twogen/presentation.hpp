#ifndef TWOGEN_PRESENTATION_HPP_
#define TWOGEN_PRESENTATION_HPP_

#include <cstddef>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "twogen/affine.hpp"
#include "twogen/word.hpp"

namespace twogen {

// One factor g^e of a relator template.  `index` is set exactly when the
// generator belongs to an indexed family.
struct SchemaLetter {
  std::string name;
  std::optional<Affine> index;
  Affine exponent{1};

  friend bool operator==(SchemaLetter const&, SchemaLetter const&) = default;
};

class SchemaError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Relator template.  Adjacent letters with the same generator and the same
// index expression are always merged, and identically-zero exponents are
// dropped, so structurally equal templates denote equal families.
class SchemaWord {
 public:
  SchemaWord() = default;
  explicit SchemaWord(std::vector<SchemaLetter> letters);

  std::vector<SchemaLetter> const& letters() const { return letters_; }
  bool empty() const { return letters_.empty(); }

  friend bool operator==(SchemaWord const&, SchemaWord const&) = default;

 private:
  std::vector<SchemaLetter> letters_;
};

SchemaWord concat(SchemaWord const& u, SchemaWord const& v);
SchemaWord inverse(SchemaWord const& u);
// Constant exponents expand by repetition.  A parametric exponent is only
// representable when u is a conjugate of a single letter with constant
// exponent; otherwise SchemaError is thrown.
SchemaWord power(SchemaWord const& u, Affine const& exponent);
// Lifts a concrete word (every generator becomes a constant-index letter).
SchemaWord lift(Word const& w);
Word evaluate(SchemaWord const& u, Assignment const& at);
std::string to_string(SchemaWord const& u);

struct RelatorSchema {
  SchemaWord word;
  ParamRange range;

  friend bool operator==(RelatorSchema const&, RelatorSchema const&) = default;
};

std::string to_string(ParamRange const& r);  // `for k, l >= 1`
std::string to_string(RelatorSchema const& s);

// Either a plain generator `x` or an indexed family `a[i] for i >= lo`.
struct GeneratorDecl {
  std::string name;
  std::optional<std::string> param;
  long lo = 1;

  bool is_family() const { return param.has_value(); }
  friend bool operator==(GeneratorDecl const&, GeneratorDecl const&) = default;
};

struct Presentation {
  std::vector<GeneratorDecl> generators;
  std::vector<Word> relators;
  std::vector<RelatorSchema> schemas;
  bool torsion_free_asserted = false;

  GeneratorDecl const* find(std::string const& name) const;
  bool declares(Generator const& g) const;
  std::vector<GeneratorDecl const*> families() const;

  friend bool operator==(Presentation const&, Presentation const&) = default;
};

class PresentationError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Checks the declared-generator and index-range invariants; throws
// PresentationError with a description of the first violation.
void validate(Presentation const& p);

class ParseError : public std::runtime_error {
 public:
  ParseError(std::size_t line, std::size_t column, std::string const& what);
  std::size_t line() const { return line_; }
  std::size_t column() const { return column_; }

 private:
  std::size_t line_;
  std::size_t column_;
};

// Reads the presentation DSL.  Throws ParseError.
Presentation parse(std::string_view text);
// Reads a single word expression over the given declarations (no schema
// parameters).  Plain generators not in `p` are accepted when `p` is empty.
Word parse_word(std::string_view text, Presentation const& p = {});

struct Bounds {
  long cap = 1;
  std::map<std::string, long> per_param;

  long for_param(std::string const& name) const {
    auto it = per_param.find(name);
    return it == per_param.end() ? cap : it->second;
  }
};

struct Instantiation {
  Presentation presentation;
  // Where each relator came from: `rel 0`, `schema 1 s=3`, ...
  std::vector<std::string> origin;
  // Instances that were freely trivial and therefore dropped.
  std::size_t dropped = 0;
};

// Expands every schema.  Unbounded parameters run from their lower bound up
// to the cap; bounded ones are clipped to the cap as well.  Parameter tuples
// are enumerated lexicographically with the first parameter outermost.
Instantiation instantiate(Presentation const& p, Bounds const& bounds);
inline Instantiation instantiate(Presentation const& p, long cap) {
  return instantiate(p, Bounds{cap, {}});
}

enum class Format { dsl, gap };

// DSL output always parses back to an equal Presentation.  GAP output
// requires a schema-free presentation (PresentationError otherwise).
std::string serialize(Presentation const& p, Format format = Format::dsl);
std::string to_gap(Word const& w);

}  // namespace twogen

#endif  // TWOGEN_PRESENTATION_HPP_
