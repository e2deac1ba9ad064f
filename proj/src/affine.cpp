#include "twogen/affine.hpp"

#include <sstream>
#include <stdexcept>

namespace twogen {

Affine Affine::param(std::string const& name, long coefficient) {
  Affine a;
  if (coefficient != 0) {
    a.terms_[name] = coefficient;
  }
  return a;
}

long Affine::coefficient(std::string const& name) const {
  auto it = terms_.find(name);
  return it == terms_.end() ? 0 : it->second;
}

long Affine::evaluate(Assignment const& at) const {
  long v = constant_;
  for (auto const& [name, c] : terms_) {
    auto it = at.find(name);
    if (it == at.end()) {
      throw std::out_of_range("no value for parameter " + name);
    }
    v += c * it->second;
  }
  return v;
}

Affine Affine::operator-() const {
  Affine a = *this;
  a *= -1;
  return a;
}

Affine& Affine::operator+=(Affine const& o) {
  constant_ += o.constant_;
  for (auto const& [name, c] : o.terms_) {
    long& slot = terms_[name];
    slot += c;
    if (slot == 0) {
      terms_.erase(name);
    }
  }
  return *this;
}

Affine& Affine::operator*=(long k) {
  constant_ *= k;
  if (k == 0) {
    terms_.clear();
  } else {
    for (auto& [name, c] : terms_) {
      c *= k;
    }
  }
  return *this;
}

std::string to_string(Affine const& a) {
  std::ostringstream os;
  bool first = true;
  for (auto const& [name, c] : a.terms()) {
    if (c < 0) {
      os << '-';
    } else if (!first) {
      os << '+';
    }
    long m = c < 0 ? -c : c;
    if (m != 1) {
      os << m << '*';
    }
    os << name;
    first = false;
  }
  if (first) {
    os << a.constant();
  } else if (a.constant() > 0) {
    os << '+' << a.constant();
  } else if (a.constant() < 0) {
    os << a.constant();
  }
  return os.str();
}

ParamBound const* ParamRange::find(std::string const& name) const {
  for (auto const& p : params) {
    if (p.name == name) {
      return &p;
    }
  }
  return nullptr;
}

bool ParamRange::bounded() const {
  for (auto const& p : params) {
    if (!p.hi) {
      return false;
    }
  }
  return true;
}

Interval bounds_over(Affine const& a, ParamRange const& range) {
  Interval out{a.constant(), a.constant()};
  for (auto const& [name, c] : a.terms()) {
    auto const* p = range.find(name);
    if (p == nullptr) {
      throw std::out_of_range("parameter " + name + " has no range");
    }
    std::optional<long> at_lo = c * p->lo;
    std::optional<long> at_hi;
    if (p->hi) {
      at_hi = c * *p->hi;
    }
    auto const& small = c > 0 ? at_lo : at_hi;
    auto const& large = c > 0 ? at_hi : at_lo;
    out.lo = (out.lo && small) ? std::optional<long>(*out.lo + *small)
                               : std::nullopt;
    out.hi = (out.hi && large) ? std::optional<long>(*out.hi + *large)
                               : std::nullopt;
  }
  return out;
}

SignClass sign_over(Affine const& a, ParamRange const& range) {
  auto iv = bounds_over(a, range);
  if (iv.lo && *iv.lo > 0) {
    return SignClass::positive;
  }
  if (iv.hi && *iv.hi < 0) {
    return SignClass::negative;
  }
  if (iv.lo && iv.hi && *iv.lo == 0 && *iv.hi == 0) {
    return SignClass::zero;
  }
  return SignClass::indefinite;
}

}  // namespace twogen
