#ifndef TWOGEN_WORD_HPP_
#define TWOGEN_WORD_HPP_

#include <compare>
#include <cstddef>
#include <functional>
#include <map>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace twogen {

// A free generator.  Identity is the pair (name, index); `a[3]` has name "a"
// and index 3, `x` has no index.
struct Generator {
  std::string name;
  std::optional<long> index;

  Generator() = default;
  explicit Generator(std::string n) : name(std::move(n)) {}
  Generator(std::string n, long i) : name(std::move(n)), index(i) {}

  friend auto operator<=>(Generator const&, Generator const&) = default;
  friend bool operator==(Generator const&, Generator const&) = default;
};

std::string to_string(Generator const& g);

struct Letter {
  Generator gen;
  int sign = 1;  // +1 or -1

  Letter() = default;
  Letter(Generator g, int s);

  Letter inverse() const { return Letter(gen, -sign); }
  bool cancels(Letter const& other) const {
    return sign == -other.sign && gen == other.gen;
  }

  friend auto operator<=>(Letter const&, Letter const&) = default;
  friend bool operator==(Letter const&, Letter const&) = default;
};

// Freely reduced word.  Every constructor reduces, so a Word never holds an
// adjacent cancelling pair.  The empty word is the identity.
class Word {
 public:
  Word() = default;
  explicit Word(std::span<Letter const> letters);
  Word(std::initializer_list<Letter> letters);

  std::span<Letter const> letters() const { return letters_; }
  std::size_t size() const { return letters_.size(); }
  bool empty() const { return letters_.empty(); }
  Letter const& operator[](std::size_t i) const { return letters_[i]; }
  Letter const& front() const { return letters_.front(); }
  Letter const& back() const { return letters_.back(); }

  friend auto operator<=>(Word const&, Word const&) = default;
  friend bool operator==(Word const&, Word const&) = default;

 private:
  struct Reduced {};
  Word(Reduced, std::vector<Letter> letters) : letters_(std::move(letters)) {}

  std::vector<Letter> letters_;

  friend Word reduce(std::span<Letter const>);
  friend Word inv(Word const&);
  friend Word cyclic_reduce(Word const&);
};

// Single-letter words.
Word gen(std::string name);
Word gen(std::string name, long index);

Word reduce(std::span<Letter const> letters);
Word mul(Word const& u, Word const& v);
Word inv(Word const& u);
// u^h = h^-1 u h
Word conj(Word const& u, Word const& h);
// [u,v] = u^-1 v^-1 u v
Word comm(Word const& u, Word const& v);
Word pow(Word const& u, long n);
// Strips matching inverse letters from both ends; the result is a conjugate.
Word cyclic_reduce(Word const& u);

inline Word operator*(Word const& u, Word const& v) { return mul(u, v); }

// Letter-count of the unreduced concatenation is u.size() + v.size(); this
// returns how many letters cancelled at the junction.
std::size_t cancellation(Word const& u, Word const& v);

// Generators occurring in u, sorted and without repetitions.
std::vector<Generator> support(Word const& u);

// Syllable form: maximal runs of one generator with their summed exponent.
struct Syllable {
  Generator gen;
  long exponent;
};
std::vector<Syllable> syllables(Word const& u);

// DSL text: `x^-1 y a[2]^3`.  The empty word prints as `1`.
std::string to_string(Word const& u);

class UnmappedGenerator : public std::runtime_error {
 public:
  explicit UnmappedGenerator(Generator const& g);
  Generator const& generator() const { return gen_; }

 private:
  Generator gen_;
};

// Homomorphism of free groups given on generators.  Besides the finite map
// a whole indexed family can be sent through a rule, which keeps a
// substitution total on countably many generators.
class Substitution {
 public:
  enum class Policy { error_on_unmapped, identity_on_unmapped };
  using FamilyRule = std::function<Word(long)>;

  explicit Substitution(Policy policy = Policy::error_on_unmapped)
      : policy_(policy) {}

  Substitution& set(Generator g, Word image);
  Substitution& set_family(std::string name, FamilyRule rule);

  std::optional<Word> image(Generator const& g) const;
  Policy policy() const { return policy_; }
  std::map<Generator, Word> const& explicit_images() const { return map_; }
  bool has_family(std::string const& name) const {
    return families_.contains(name);
  }

 private:
  Policy policy_;
  std::map<Generator, Word> map_;
  std::map<std::string, FamilyRule> families_;
};

// Throws UnmappedGenerator under Policy::error_on_unmapped.
Word substitute(Word const& u, Substitution const& s);

}  // namespace twogen

#endif  // TWOGEN_WORD_HPP_
