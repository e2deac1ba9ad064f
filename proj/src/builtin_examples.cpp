#include "twogen/builtin_examples.hpp"

#include <stdexcept>

namespace twogen {

std::optional<Example> example_from_name(std::string_view name) {
  if (name == "zinf") {
    return Example::zinf;
  }
  if (name == "Q") {
    return Example::rationals;
  }
  if (name == "prufer") {
    return Example::prufer;
  }
  return std::nullopt;
}

std::string example_name(Example e) {
  switch (e) {
    case Example::zinf:
      return "zinf";
    case Example::rationals:
      return "Q";
    case Example::prufer:
      return "prufer";
  }
  return "?";
}

std::string example_source(Example e, long p) {
  switch (e) {
    case Example::zinf:
      return "gens a[i] for i >= 1;\n"
             "attrs torsion_free;\n"
             "rels [a[k], a[l]] for k, l >= 1;\n";
    case Example::rationals:
      return "gens a[i] for i >= 1;\n"
             "attrs torsion_free;\n"
             "rels a[s]^s a[s-1]^-1 for s >= 2;\n";
    case Example::prufer:
      if (p < 2) {
        throw std::invalid_argument("prufer example needs p >= 2");
      }
      return "let p = " + std::to_string(p) +
             ";\n"
             "gens a[i] for i >= 1;\n"
             "rels a[1]^p;\n"
             "rels a[s]^p a[s-1]^-1 for s >= 2;\n";
  }
  throw std::invalid_argument("unknown example");
}

Presentation example_presentation(Example e, long p) {
  return parse(example_source(e, p));
}

EmbedMode example_mode(Example e) {
  return e == Example::prufer ? EmbedMode::general : EmbedMode::torsion_free;
}

std::string golden_stem(Example e, long p, long bound) {
  std::string stem = example_name(e);
  if (e == Example::prufer) {
    stem += "_p" + std::to_string(p);
  }
  return stem + "_b" + std::to_string(bound);
}

}  // namespace twogen
