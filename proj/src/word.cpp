#include "twogen/word.hpp"

#include <algorithm>
#include <set>
#include <sstream>

namespace twogen {

std::string to_string(Generator const& g) {
  if (!g.index) {
    return g.name;
  }
  return g.name + "[" + std::to_string(*g.index) + "]";
}

Letter::Letter(Generator g, int s) : gen(std::move(g)), sign(s) {
  if (s != 1 && s != -1) {
    throw std::invalid_argument("letter sign must be +1 or -1");
  }
}

Word::Word(std::span<Letter const> letters) : Word(reduce(letters)) {}

Word::Word(std::initializer_list<Letter> letters)
    : Word(std::span<Letter const>(letters.begin(), letters.size())) {}

Word gen(std::string name) {
  return Word{Letter(Generator(std::move(name)), 1)};
}

Word gen(std::string name, long index) {
  return Word{Letter(Generator(std::move(name), index), 1)};
}

Word reduce(std::span<Letter const> letters) {
  std::vector<Letter> stack;
  stack.reserve(letters.size());
  for (auto const& l : letters) {
    if (!stack.empty() && stack.back().cancels(l)) {
      stack.pop_back();
    } else {
      stack.push_back(l);
    }
  }
  return Word(Word::Reduced{}, std::move(stack));
}

Word mul(Word const& u, Word const& v) {
  std::vector<Letter> all;
  all.reserve(u.size() + v.size());
  all.insert(all.end(), u.letters().begin(), u.letters().end());
  all.insert(all.end(), v.letters().begin(), v.letters().end());
  return reduce(all);
}

Word inv(Word const& u) {
  std::vector<Letter> out;
  out.reserve(u.size());
  for (auto it = u.letters().rbegin(); it != u.letters().rend(); ++it) {
    out.push_back(it->inverse());
  }
  return Word(Word::Reduced{}, std::move(out));
}

Word conj(Word const& u, Word const& h) { return mul(mul(inv(h), u), h); }

Word comm(Word const& u, Word const& v) {
  return mul(mul(inv(u), inv(v)), mul(u, v));
}

Word pow(Word const& u, long n) {
  Word base = n < 0 ? inv(u) : u;
  unsigned long k = n < 0 ? -static_cast<unsigned long>(n) : n;
  Word out;
  // square-and-multiply keeps long powers cheap
  while (k > 0) {
    if (k & 1UL) {
      out = mul(out, base);
    }
    k >>= 1;
    if (k > 0) {
      base = mul(base, base);
    }
  }
  return out;
}

Word cyclic_reduce(Word const& u) {
  auto letters = u.letters();
  std::size_t lo = 0;
  std::size_t hi = letters.size();
  while (hi - lo >= 2 && letters[lo].cancels(letters[hi - 1])) {
    ++lo;
    --hi;
  }
  return Word(Word::Reduced{},
              std::vector<Letter>(letters.begin() + lo, letters.begin() + hi));
}

std::size_t cancellation(Word const& u, Word const& v) {
  std::size_t k = 0;
  while (k < u.size() && k < v.size() &&
         u[u.size() - 1 - k].cancels(v[k])) {
    ++k;
  }
  return k;
}

std::vector<Generator> support(Word const& u) {
  std::set<Generator> seen;
  for (auto const& l : u.letters()) {
    seen.insert(l.gen);
  }
  return {seen.begin(), seen.end()};
}

std::vector<Syllable> syllables(Word const& u) {
  std::vector<Syllable> out;
  for (auto const& l : u.letters()) {
    if (!out.empty() && out.back().gen == l.gen) {
      out.back().exponent += l.sign;
    } else {
      out.push_back({l.gen, l.sign});
    }
  }
  return out;
}

std::string to_string(Word const& u) {
  if (u.empty()) {
    return "1";
  }
  std::ostringstream os;
  bool first = true;
  for (auto const& s : syllables(u)) {
    if (!first) {
      os << ' ';
    }
    first = false;
    os << to_string(s.gen);
    if (s.exponent != 1) {
      os << '^' << s.exponent;
    }
  }
  return os.str();
}

UnmappedGenerator::UnmappedGenerator(Generator const& g)
    : std::runtime_error("no image for generator " + to_string(g)), gen_(g) {}

Substitution& Substitution::set(Generator g, Word image) {
  map_.insert_or_assign(std::move(g), std::move(image));
  return *this;
}

Substitution& Substitution::set_family(std::string name, FamilyRule rule) {
  families_.insert_or_assign(std::move(name), std::move(rule));
  return *this;
}

std::optional<Word> Substitution::image(Generator const& g) const {
  if (auto it = map_.find(g); it != map_.end()) {
    return it->second;
  }
  if (g.index) {
    if (auto it = families_.find(g.name); it != families_.end()) {
      return it->second(*g.index);
    }
  }
  return std::nullopt;
}

Word substitute(Word const& u, Substitution const& s) {
  std::vector<Letter> out;
  std::map<Generator, Word> cache;
  for (auto const& l : u.letters()) {
    auto it = cache.find(l.gen);
    if (it == cache.end()) {
      auto img = s.image(l.gen);
      if (!img) {
        if (s.policy() == Substitution::Policy::error_on_unmapped) {
          throw UnmappedGenerator(l.gen);
        }
        img = Word{Letter(l.gen, 1)};
      }
      it = cache.emplace(l.gen, *std::move(img)).first;
    }
    Word piece = l.sign > 0 ? it->second : inv(it->second);
    out.insert(out.end(), piece.letters().begin(), piece.letters().end());
  }
  return reduce(out);
}

}  // namespace twogen
