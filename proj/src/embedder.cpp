#include "twogen/embedder.hpp"

#include <sstream>

namespace twogen {

namespace {

Word const& x_word() {
  static Word const w = gen("x");
  return w;
}

Word const& y_word() {
  static Word const w = gen("y");
  return w;
}

void require_index(long i) {
  if (i < 1) {
    throw std::invalid_argument("universal word index must be >= 1, got " +
                                std::to_string(i));
  }
}

// (x y^i)^2 x^-1
Word conjugator(long i) {
  return mul(pow(mul(x_word(), pow(y_word(), i)), 2), inv(x_word()));
}

struct SourceShape {
  std::optional<GeneratorDecl> family;
};

SourceShape check_source(Presentation const& p, EmbedMode mode) {
  SourceShape out;
  for (auto const& d : p.generators) {
    if (!d.is_family()) {
      throw EmbedError(EmbedError::Kind::unindexed_generator,
                       "generator " + d.name +
                           " is not part of an indexed family; the embedding "
                           "takes a single family a[i]");
    }
    if (out.family) {
      throw EmbedError(EmbedError::Kind::multiple_families,
                       "more than one indexed family (" + out.family->name +
                           ", " + d.name + "); rename into a single family");
    }
    out.family = d;
  }
  if (mode == EmbedMode::torsion_free && !p.torsion_free_asserted) {
    throw EmbedError(EmbedError::Kind::torsion_free_not_asserted,
                     "torsion-free mode needs 'attrs torsion_free' on the "
                     "source presentation");
  }
  return out;
}

Substitution make_gamma(std::optional<GeneratorDecl> const& family,
                        EmbedMode mode) {
  Substitution gamma;
  if (family) {
    long shift = 1 - family->lo;
    gamma.set_family(family->name, [mode, shift](long j) {
      return mode == EmbedMode::general ? universal_word(j + shift)
                                        : universal_word_tf(j + shift);
    });
  }
  return gamma;
}

Presentation xy_presentation() {
  Presentation t;
  t.generators = {GeneratorDecl{"x", std::nullopt, 1},
                  GeneratorDecl{"y", std::nullopt, 1}};
  return t;
}

void embed_relators(Presentation const& p, EmbeddingResult& r,
                    Simplify simplify) {
  for (std::size_t k = 0; k < p.relators.size(); ++k) {
    auto const& src = p.relators[k];
    for (auto const& g : support(src)) {
      if (auto img = r.gamma.image(g)) {
        r.gamma.set(g, *img);
      }
    }
    Word w = substitute(src, r.gamma);
    if (simplify == Simplify::cyclic) {
      w = cyclic_reduce(w);
    }
    r.target.relators.push_back(std::move(w));
    r.provenance.push_back("rel " + std::to_string(k) + ": image of " +
                           to_string(src));
  }
}

}  // namespace

Word universal_word(long i) {
  require_index(i);
  return mul(conj(y_word(), conjugator(i)), inv(conj_y_by_x()));
}

Word universal_word_tf(long i) {
  require_index(i);
  return conj(y_word(), conjugator(i));
}

Word passage_word(long i) {
  require_index(i);
  Word yi = pow(y_word(), i);
  return mul(mul(yi, x_word()), mul(yi, inv(x_word())));
}

Word hnn_word(long i) {
  require_index(i);
  Generator a("a");
  Generator b("b");
  std::vector<Letter> ls;
  auto put = [&](Generator const& g, long e) {
    for (long k = 0; k < (e < 0 ? -e : e); ++k) {
      ls.emplace_back(g, e < 0 ? -1 : 1);
    }
  };
  put(a, -1), put(b, -1), put(a, 1), put(b, -i);
  put(a, 1), put(b, -1), put(a, -1), put(b, i);
  put(a, -1), put(b, 1), put(a, 1), put(b, -i);
  put(a, 1), put(b, 1), put(a, -1), put(b, i);
  return Word(ls);
}

Word universal_word_expanded(long i) {
  require_index(i);
  Generator x("x");
  Generator y("y");
  std::vector<Letter> ls;
  auto put = [&](Generator const& g, long e) {
    for (long k = 0; k < (e < 0 ? -e : e); ++k) {
      ls.emplace_back(g, e < 0 ? -1 : 1);
    }
  };
  put(x, 1);
  for (int r = 0; r < 2; ++r) {
    put(y, -i), put(x, -1);
  }
  put(y, 1);
  for (int r = 0; r < 2; ++r) {
    put(x, 1), put(y, i);
  }
  put(x, -2), put(y, -1), put(x, 1);
  return Word(ls);
}

Word conj_y_by_x() { return conj(y_word(), x_word()); }

Word conj_y_by_x_inv() { return conj(y_word(), inv(x_word())); }

std::string to_string(EmbedMode m) {
  return m == EmbedMode::general ? "general" : "torsion-free";
}

EmbeddingResult embed(Presentation const& p, EmbedMode mode,
                      Simplify simplify) {
  if (!p.schemas.empty()) {
    throw EmbedError(EmbedError::Kind::schemas_present,
                     "presentation still has relator schemas; instantiate "
                     "with a bound first");
  }
  auto shape = check_source(p, mode);
  EmbeddingResult r{xy_presentation(), make_gamma(shape.family, mode), mode,
                    shape.family, {}};
  embed_relators(p, r, simplify);
  return r;
}

SchemaWord universal_schema(Affine const& index, EmbedMode mode) {
  auto letter = [](char const* n, Affine e) {
    return SchemaLetter{n, std::nullopt, std::move(e)};
  };
  std::vector<SchemaLetter> ls = {
      letter("x", Affine(1)),  letter("y", -index),   letter("x", Affine(-1)),
      letter("y", -index),     letter("x", Affine(-1)), letter("y", Affine(1)),
      letter("x", Affine(1)),  letter("y", index),    letter("x", Affine(1)),
      letter("y", index),      letter("x", Affine(-1)),
  };
  if (mode == EmbedMode::general) {
    ls.push_back(letter("x", Affine(-1)));
    ls.push_back(letter("y", Affine(-1)));
    ls.push_back(letter("x", Affine(1)));
  }
  return SchemaWord(std::move(ls));
}

EmbeddingResult embed_schema(Presentation const& p, EmbedMode mode) {
  auto shape = check_source(p, mode);
  EmbeddingResult r{xy_presentation(), make_gamma(shape.family, mode), mode,
                    shape.family, {}};
  embed_relators(p, r, Simplify::none);
  for (auto const& s : p.schemas) {
    SchemaWord out;
    for (auto const& l : s.word.letters()) {
      auto sign = sign_over(l.exponent, s.range);
      if (sign != SignClass::positive && sign != SignClass::negative) {
        throw EmbedError(EmbedError::Kind::schema_refused,
                         "exponent " + to_string(l.exponent) + " of " +
                             l.name + " is not of constant sign over '" +
                             to_string(s.range) + "' in schema " +
                             to_string(s));
      }
      // check_source guarantees every letter is a family member
      Affine shifted = *l.index + Affine(1 - shape.family->lo);
      try {
        out = concat(out, power(universal_schema(shifted, mode), l.exponent));
      } catch (SchemaError const& e) {
        throw EmbedError(EmbedError::Kind::schema_refused,
                         std::string(e.what()) + " in schema " + to_string(s) +
                             " (" + to_string(mode) + " mode)");
      }
    }
    r.target.schemas.push_back({std::move(out), s.range});
  }
  return r;
}

std::string describe_gamma(EmbeddingResult const& r) {
  std::ostringstream os;
  os << "gamma:\n";
  for (auto const& [g, w] : r.gamma.explicit_images()) {
    os << "  " << to_string(g) << " -> " << to_string(w) << ";\n";
  }
  if (r.family) {
    auto const& f = *r.family;
    Affine idx = Affine::param(*f.param) + Affine(1 - f.lo);
    os << "  " << f.name << "[" << *f.param << "] -> "
       << to_string(universal_schema(idx, r.mode)) << " for " << *f.param
       << " >= " << f.lo << ";\n";
  }
  return os.str();
}

}  // namespace twogen
