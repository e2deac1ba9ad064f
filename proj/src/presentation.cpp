#include "twogen/presentation.hpp"

#include <algorithm>
#include <functional>
#include <set>
#include <sstream>

namespace twogen {

namespace {

bool same_generator(SchemaLetter const& a, SchemaLetter const& b) {
  return a.name == b.name && a.index == b.index;
}

void push_normalized(std::vector<SchemaLetter>& stack, SchemaLetter l) {
  if (l.exponent == Affine(0)) {
    return;
  }
  if (!stack.empty() && same_generator(stack.back(), l)) {
    stack.back().exponent += l.exponent;
    if (stack.back().exponent == Affine(0)) {
      stack.pop_back();
    }
    return;
  }
  stack.push_back(std::move(l));
}

std::string exponent_suffix(Affine const& e) {
  if (e == Affine(1)) {
    return "";
  }
  if (e.is_constant()) {
    return "^" + std::to_string(e.constant());
  }
  if (e.constant() == 0 && e.terms().size() == 1) {
    long c = e.terms().begin()->second;
    if (c == 1 || c == -1) {
      return "^" + to_string(e);
    }
  }
  return "^(" + to_string(e) + ")";
}

std::string letter_text(SchemaLetter const& l) {
  std::string out = l.name;
  if (l.index) {
    out += "[" + to_string(*l.index) + "]";
  }
  return out + exponent_suffix(l.exponent);
}

}  // namespace

SchemaWord::SchemaWord(std::vector<SchemaLetter> letters) {
  for (auto& l : letters) {
    push_normalized(letters_, std::move(l));
  }
}

SchemaWord concat(SchemaWord const& u, SchemaWord const& v) {
  std::vector<SchemaLetter> all = u.letters();
  all.insert(all.end(), v.letters().begin(), v.letters().end());
  return SchemaWord(std::move(all));
}

SchemaWord inverse(SchemaWord const& u) {
  std::vector<SchemaLetter> out(u.letters().rbegin(), u.letters().rend());
  for (auto& l : out) {
    l.exponent = -l.exponent;
  }
  return SchemaWord(std::move(out));
}

SchemaWord power(SchemaWord const& u, Affine const& exponent) {
  if (exponent.is_constant()) {
    long n = exponent.constant();
    SchemaWord base = n < 0 ? inverse(u) : u;
    SchemaWord out;
    for (long k = 0; k < (n < 0 ? -n : n); ++k) {
      out = concat(out, base);
    }
    return out;
  }
  auto const& ls = u.letters();
  std::size_t n = ls.size();
  if (n % 2 == 0) {
    throw SchemaError("parametric power of '" + to_string(u) +
                      "', which is not a conjugate of a single letter");
  }
  std::size_t mid = n / 2;
  for (std::size_t j = 0; j < mid; ++j) {
    auto const& a = ls[j];
    auto const& b = ls[n - 1 - j];
    if (!same_generator(a, b) || !(a.exponent == -b.exponent)) {
      throw SchemaError("parametric power of '" + to_string(u) +
                        "', which is not a conjugate of a single letter");
    }
  }
  if (!ls[mid].exponent.is_constant()) {
    throw SchemaError("parametric power of '" + to_string(u) +
                      "' would have a non-affine exponent");
  }
  std::vector<SchemaLetter> out = ls;
  out[mid].exponent = exponent * ls[mid].exponent.constant();
  return SchemaWord(std::move(out));
}

SchemaWord lift(Word const& w) {
  std::vector<SchemaLetter> out;
  for (auto const& s : syllables(w)) {
    SchemaLetter l{s.gen.name, std::nullopt, Affine(s.exponent)};
    if (s.gen.index) {
      l.index = Affine(*s.gen.index);
    }
    out.push_back(std::move(l));
  }
  return SchemaWord(std::move(out));
}

Word evaluate(SchemaWord const& u, Assignment const& at) {
  std::vector<Letter> raw;
  for (auto const& l : u.letters()) {
    Generator g(l.name);
    if (l.index) {
      g.index = l.index->evaluate(at);
    }
    long e = l.exponent.evaluate(at);
    int sign = e < 0 ? -1 : 1;
    for (long k = 0; k < (e < 0 ? -e : e); ++k) {
      raw.emplace_back(g, sign);
    }
  }
  return reduce(raw);
}

std::string to_string(SchemaWord const& u) {
  if (u.empty()) {
    return "1";
  }
  std::string out;
  for (auto const& l : u.letters()) {
    if (!out.empty()) {
      out += ' ';
    }
    out += letter_text(l);
  }
  return out;
}

std::string to_string(ParamRange const& r) {
  std::string out = "for ";
  std::size_t i = 0;
  while (i < r.params.size()) {
    std::size_t j = i;
    while (j + 1 < r.params.size() && r.params[j + 1].lo == r.params[i].lo &&
           r.params[j + 1].hi == r.params[i].hi) {
      ++j;
    }
    if (i > 0) {
      out += ", ";
    }
    for (std::size_t k = i; k <= j; ++k) {
      out += r.params[k].name;
      if (k < j) {
        out += ", ";
      }
    }
    auto const& b = r.params[i];
    if (b.hi) {
      out += " in " + std::to_string(b.lo) + ".." + std::to_string(*b.hi);
    } else {
      out += " >= " + std::to_string(b.lo);
    }
    i = j + 1;
  }
  return out;
}

std::string to_string(RelatorSchema const& s) {
  return to_string(s.word) + " " + to_string(s.range);
}

GeneratorDecl const* Presentation::find(std::string const& name) const {
  for (auto const& d : generators) {
    if (d.name == name) {
      return &d;
    }
  }
  return nullptr;
}

bool Presentation::declares(Generator const& g) const {
  auto const* d = find(g.name);
  if (d == nullptr || d->is_family() != g.index.has_value()) {
    return false;
  }
  return !g.index || *g.index >= d->lo;
}

std::vector<GeneratorDecl const*> Presentation::families() const {
  std::vector<GeneratorDecl const*> out;
  for (auto const& d : generators) {
    if (d.is_family()) {
      out.push_back(&d);
    }
  }
  return out;
}

void validate(Presentation const& p) {
  std::set<std::string> names;
  for (auto const& d : p.generators) {
    if (!names.insert(d.name).second) {
      throw PresentationError("generator " + d.name + " declared twice");
    }
  }
  for (auto const& r : p.relators) {
    for (auto const& g : support(r)) {
      if (!p.declares(g)) {
        auto const* d = p.find(g.name);
        if (d != nullptr && d->is_family() && g.index) {
          throw PresentationError("index " + std::to_string(*g.index) +
                                  " out of range for family " + d->name +
                                  " (starts at " + std::to_string(d->lo) + ")");
        }
        throw PresentationError("undeclared generator " + to_string(g));
      }
    }
  }
  for (auto const& s : p.schemas) {
    if (s.range.params.empty() || s.range.params.size() > 2) {
      throw PresentationError("a relator schema takes one or two parameters");
    }
    std::set<std::string> seen;
    for (auto const& b : s.range.params) {
      if (!seen.insert(b.name).second) {
        throw PresentationError("parameter " + b.name + " bound twice");
      }
      if (names.contains(b.name)) {
        throw PresentationError("parameter " + b.name +
                                " clashes with a generator name");
      }
      if (b.hi && *b.hi < b.lo) {
        throw PresentationError("empty range for parameter " + b.name);
      }
    }
    for (auto const& l : s.word.letters()) {
      auto const* d = p.find(l.name);
      if (d == nullptr || d->is_family() != l.index.has_value()) {
        throw PresentationError("undeclared generator " + l.name +
                                " in schema " + to_string(s));
      }
      for (auto const* e : {&l.exponent, l.index ? &*l.index : nullptr}) {
        if (e == nullptr) {
          continue;
        }
        for (auto const& [name, c] : e->terms()) {
          if (s.range.find(name) == nullptr) {
            throw PresentationError("unbound parameter " + name +
                                    " in schema " + to_string(s));
          }
        }
      }
      if (l.index) {
        auto iv = bounds_over(*l.index, s.range);
        if (!iv.lo || *iv.lo < d->lo) {
          throw PresentationError("index " + to_string(*l.index) +
                                  " leaves the range of family " + d->name +
                                  " in schema " + to_string(s));
        }
      }
    }
  }
}

ParseError::ParseError(std::size_t line, std::size_t column,
                       std::string const& what)
    : std::runtime_error(std::to_string(line) + ":" + std::to_string(column) +
                         ": " + what),
      line_(line),
      column_(column) {}

Instantiation instantiate(Presentation const& p, Bounds const& bounds) {
  Instantiation out;
  out.presentation.generators = p.generators;
  out.presentation.torsion_free_asserted = p.torsion_free_asserted;
  for (std::size_t i = 0; i < p.relators.size(); ++i) {
    out.presentation.relators.push_back(p.relators[i]);
    out.origin.push_back("rel " + std::to_string(i));
  }
  for (std::size_t si = 0; si < p.schemas.size(); ++si) {
    auto const& s = p.schemas[si];
    Assignment at;
    std::function<void(std::size_t)> walk = [&](std::size_t k) {
      if (k == s.range.params.size()) {
        Word w = evaluate(s.word, at);
        if (w.empty()) {
          ++out.dropped;
          return;
        }
        std::string tag = "schema " + std::to_string(si);
        for (auto const& b : s.range.params) {
          tag += " " + b.name + "=" + std::to_string(at.at(b.name));
        }
        out.presentation.relators.push_back(std::move(w));
        out.origin.push_back(std::move(tag));
        return;
      }
      auto const& b = s.range.params[k];
      long hi = bounds.for_param(b.name);
      if (b.hi) {
        hi = std::min(hi, *b.hi);
      }
      for (long v = b.lo; v <= hi; ++v) {
        at[b.name] = v;
        walk(k + 1);
      }
      at.erase(b.name);
    };
    walk(0);
  }
  return out;
}

namespace {

std::string gap_name(Generator const& g) {
  return g.index ? g.name + std::to_string(*g.index) : g.name;
}

std::string gap_power(Generator const& g, long e) {
  return e == 1 ? gap_name(g) : gap_name(g) + "^" + std::to_string(e);
}

}  // namespace

std::string to_gap(Word const& w) {
  if (w.empty()) {
    return "One(F)";
  }
  auto ss = syllables(w);
  if (ss.size() == 4 && ss[0].gen == ss[2].gen && ss[1].gen == ss[3].gen &&
      ss[0].exponent == -ss[2].exponent && ss[1].exponent == -ss[3].exponent) {
    return "Comm(" + gap_power(ss[2].gen, ss[2].exponent) + "," +
           gap_power(ss[3].gen, ss[3].exponent) + ")";
  }
  std::string out;
  for (auto const& s : ss) {
    if (!out.empty()) {
      out += '*';
    }
    out += gap_power(s.gen, s.exponent);
  }
  return out;
}

std::string serialize(Presentation const& p, Format format) {
  std::ostringstream os;
  if (format == Format::gap) {
    if (!p.schemas.empty()) {
      throw PresentationError(
          "GAP output needs an instantiated presentation; pass a bound");
    }
    std::vector<Generator> gens;
    std::set<Generator> members;
    for (auto const& r : p.relators) {
      for (auto const& g : support(r)) {
        if (g.index) {
          members.insert(g);
        }
      }
    }
    for (auto const& d : p.generators) {
      if (!d.is_family()) {
        gens.emplace_back(d.name);
        continue;
      }
      for (auto const& g : members) {
        if (g.name == d.name) {
          gens.push_back(g);
        }
      }
    }
    os << "F := FreeGroup(";
    for (std::size_t i = 0; i < gens.size(); ++i) {
      os << (i ? "," : "") << '"' << gap_name(gens[i]) << '"';
    }
    os << ");\n";
    for (std::size_t i = 0; i < gens.size(); ++i) {
      os << (i ? " " : "") << gap_name(gens[i]) << " := F." << i + 1 << ";";
    }
    if (!gens.empty()) {
      os << "\n";
    }
    os << "rels := [ ";
    for (std::size_t i = 0; i < p.relators.size(); ++i) {
      os << (i ? ", " : "") << to_gap(p.relators[i]);
    }
    os << (p.relators.empty() ? "];\n" : " ];\n");
    return os.str();
  }

  os << "gens ";
  for (std::size_t i = 0; i < p.generators.size(); ++i) {
    auto const& d = p.generators[i];
    os << (i ? ", " : "") << d.name;
    if (d.is_family()) {
      os << "[" << *d.param << "] for " << *d.param << " >= " << d.lo;
    }
  }
  os << ";\n";
  if (p.torsion_free_asserted) {
    os << "attrs torsion_free;\n";
  }
  for (auto const& r : p.relators) {
    os << "rels " << to_string(r) << ";\n";
  }
  for (auto const& s : p.schemas) {
    os << "rels " << to_string(s) << ";\n";
  }
  return os.str();
}

}  // namespace twogen
