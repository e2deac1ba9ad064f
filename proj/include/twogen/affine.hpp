#ifndef TWOGEN_AFFINE_HPP_
#define TWOGEN_AFFINE_HPP_

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace twogen {

using Assignment = std::map<std::string, long>;

// c0 + sum(c_p * p) over named integer parameters.  Zero coefficients are
// never stored, so equality is structural.
class Affine {
 public:
  Affine() = default;
  explicit Affine(long c) : constant_(c) {}

  static Affine param(std::string const& name, long coefficient = 1);

  long constant() const { return constant_; }
  long coefficient(std::string const& name) const;
  std::map<std::string, long> const& terms() const { return terms_; }
  bool is_constant() const { return terms_.empty(); }

  // Throws std::out_of_range for a parameter missing from `at`.
  long evaluate(Assignment const& at) const;

  Affine operator-() const;
  Affine& operator+=(Affine const& o);
  Affine& operator-=(Affine const& o) { return *this += -o; }
  Affine& operator*=(long k);

  friend Affine operator+(Affine a, Affine const& b) { return a += b; }
  friend Affine operator-(Affine a, Affine const& b) { return a -= b; }
  friend Affine operator*(Affine a, long k) { return a *= k; }
  friend Affine operator*(long k, Affine a) { return a *= k; }
  friend bool operator==(Affine const&, Affine const&) = default;

 private:
  long constant_ = 0;
  std::map<std::string, long> terms_;
};

// `s-1`, `2*k+l`, `-s`, `0`
std::string to_string(Affine const& a);

struct ParamBound {
  std::string name;
  long lo = 1;
  std::optional<long> hi;  // nullopt: unbounded above

  friend bool operator==(ParamBound const&, ParamBound const&) = default;
};

struct ParamRange {
  std::vector<ParamBound> params;

  ParamBound const* find(std::string const& name) const;
  bool bounded() const;

  friend bool operator==(ParamRange const&, ParamRange const&) = default;
};

// Exact extremes of an affine function over the integer box of a range.
// A missing end means the function is unbounded in that direction.
struct Interval {
  std::optional<long> lo;
  std::optional<long> hi;
};
Interval bounds_over(Affine const& a, ParamRange const& range);

enum class SignClass { positive, negative, zero, indefinite };
SignClass sign_over(Affine const& a, ParamRange const& range);

}  // namespace twogen

#endif  // TWOGEN_AFFINE_HPP_
