#include "twogen/witness.hpp"

#include <algorithm>
#include <array>
#include <atomic>
#include <map>
#include <mutex>
#include <numeric>
#include <random>
#include <stdexcept>
#include <thread>

namespace twogen {

namespace {

// Letter codes: 0 = x, 1 = x^-1, 2 = y, 3 = y^-1.
using Compiled = std::vector<std::uint8_t>;

Compiled compile(Word const& w) {
  Compiled out;
  out.reserve(w.size());
  for (auto const& l : w.letters()) {
    std::uint8_t base = 0;
    if (l.gen == Generator("x")) {
      base = 0;
    } else if (l.gen == Generator("y")) {
      base = 2;
    } else {
      throw std::invalid_argument("witness search is over x and y only; got " +
                                  to_string(l.gen));
    }
    out.push_back(static_cast<std::uint8_t>(base + (l.sign < 0 ? 1 : 0)));
  }
  return out;
}

Perm identity_perm(std::size_t n) {
  Perm p(n);
  std::iota(p.begin(), p.end(), std::size_t{0});
  return p;
}

Perm inverse_perm(Perm const& p) {
  Perm q(p.size());
  for (std::size_t i = 0; i < p.size(); ++i) {
    q[p[i]] = i;
  }
  return q;
}

class Evaluator {
 public:
  Evaluator(Perm const& x, Perm const& y)
      : maps_{x, inverse_perm(x), y, inverse_perm(y)}, n_(x.size()) {}

  bool is_trivial(Compiled const& w) const {
    for (std::size_t p = 0; p < n_; ++p) {
      if (image(w, p) != p) {
        return false;
      }
    }
    return true;
  }

  Perm perm(Compiled const& w) const {
    Perm out(n_);
    for (std::size_t p = 0; p < n_; ++p) {
      out[p] = image(w, p);
    }
    return out;
  }

 private:
  std::size_t image(Compiled const& w, std::size_t p) const {
    for (auto c : w) {
      p = maps_[c][p];
    }
    return p;
  }

  std::array<Perm, 4> maps_;
  std::size_t n_;
};

struct Problem {
  std::vector<Compiled> relators;
  Compiled query;
};

// Returns the image of the query when (x, y) is a witness.
std::optional<Perm> test(Problem const& pr, Perm const& x, Perm const& y) {
  Evaluator ev(x, y);
  if (ev.is_trivial(pr.query)) {
    return std::nullopt;
  }
  for (auto const& r : pr.relators) {
    if (!ev.is_trivial(r)) {
      return std::nullopt;
    }
  }
  return ev.perm(pr.query);
}

class Budget {
 public:
  explicit Budget(WitnessOptions const& o)
      : max_steps_(o.max_steps),
        deadline_(std::chrono::steady_clock::now() + o.time_limit) {}

  // False once the budget is spent.
  bool tick() {
    auto n = steps_.fetch_add(1, std::memory_order_relaxed) + 1;
    if (n > max_steps_) {
      return false;
    }
    if ((n & 0xFF) == 0 && std::chrono::steady_clock::now() > deadline_) {
      expired_ = true;
    }
    return !expired_;
  }

  std::uint64_t steps() const {
    return std::min<std::uint64_t>(steps_.load(), max_steps_);
  }

 private:
  std::uint64_t max_steps_;
  std::chrono::steady_clock::time_point deadline_;
  std::atomic<std::uint64_t> steps_{0};
  std::atomic<bool> expired_{false};
};

WitnessReport found(PermAssignment a, Perm const& image, Budget const& b) {
  WitnessReport r;
  r.status = WitnessStatus::witness_found;
  r.assignment = std::move(a);
  r.image_order = order(image);
  r.steps = b.steps();
  return r;
}

}  // namespace

std::string to_string(WitnessStatus s) {
  switch (s) {
    case WitnessStatus::witness_found:
      return "WITNESS_FOUND";
    case WitnessStatus::exhausted:
      return "EXHAUSTED";
    case WitnessStatus::timeout:
      return "TIMEOUT";
  }
  return "?";
}

WitnessReport find_witness(Presentation const& target, Word const& w,
                           WitnessOptions const& options) {
  if (!target.schemas.empty()) {
    throw std::invalid_argument("witness search needs an instantiated target");
  }
  Problem pr;
  for (auto const& r : target.relators) {
    pr.relators.push_back(compile(r));
  }
  pr.query = compile(w);

  Budget budget(options);
  WitnessReport report;
  if (w.empty() || options.max_degree == 0) {
    return report;
  }

  std::size_t exhaustive_top =
      std::min(options.exhaustive_up_to, options.max_degree);
  for (std::size_t n = 1; n <= exhaustive_top; ++n) {
    Perm x = identity_perm(n);
    do {
      Perm y = identity_perm(n);
      do {
        if (!budget.tick()) {
          report.status = WitnessStatus::timeout;
          report.steps = budget.steps();
          return report;
        }
        if (auto img = test(pr, x, y)) {
          return found({n, x, y}, *img, budget);
        }
      } while (std::next_permutation(y.begin(), y.end()));
    } while (std::next_permutation(x.begin(), x.end()));
  }
  if (options.max_degree <= exhaustive_top) {
    report.status = WitnessStatus::exhausted;
    report.steps = budget.steps();
    return report;
  }

  std::mutex mu;
  std::optional<WitnessReport> hit;
  std::atomic<bool> done{false};
  auto worker = [&](std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::size_t lo = exhaustive_top + 1;
    std::size_t span = options.max_degree - exhaustive_top;
    for (std::uint64_t round = 0; !done.load(std::memory_order_relaxed);
         ++round) {
      if (!budget.tick()) {
        return;
      }
      std::size_t n = lo + round % span;
      Perm x = identity_perm(n);
      Perm y = identity_perm(n);
      std::shuffle(x.begin(), x.end(), rng);
      std::shuffle(y.begin(), y.end(), rng);
      if (auto img = test(pr, x, y)) {
        std::lock_guard lock(mu);
        if (!hit) {
          hit = found({n, x, y}, *img, budget);
          done = true;
        }
        return;
      }
    }
  };

  unsigned threads = options.deterministic ? 1 : std::max(1U, options.threads);
  if (threads == 1) {
    worker(options.seed);
  } else {
    std::vector<std::jthread> pool;
    for (unsigned k = 0; k < threads; ++k) {
      pool.emplace_back(worker, options.seed + 0x9e3779b97f4a7c15ULL * k);
    }
  }
  if (hit) {
    return *hit;
  }
  report.status = WitnessStatus::timeout;
  report.steps = budget.steps();
  return report;
}

Perm evaluate(Word const& w, PermAssignment const& a) {
  return Evaluator(a.x, a.y).perm(compile(w));
}

bool is_identity(Perm const& p) {
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (p[i] != i) {
      return false;
    }
  }
  return true;
}

long order(Perm const& p) {
  long l = 1;
  std::vector<bool> seen(p.size(), false);
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (seen[i]) {
      continue;
    }
    long len = 0;
    for (std::size_t j = i; !seen[j]; j = p[j]) {
      seen[j] = true;
      ++len;
    }
    l = std::lcm(l, len);
  }
  return l;
}

std::string to_cycles(Perm const& p) {
  std::string out;
  std::vector<bool> seen(p.size(), false);
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (seen[i] || p[i] == i) {
      continue;
    }
    out += '(';
    for (std::size_t j = i; !seen[j]; j = p[j]) {
      seen[j] = true;
      if (j != i) {
        out += ',';
      }
      out += std::to_string(j + 1);
    }
    out += ')';
  }
  return out.empty() ? "()" : out;
}

bool validate_witness(Presentation const& target, Word const& w,
                      WitnessReport const& report) {
  if (report.status != WitnessStatus::witness_found || !report.assignment) {
    return false;
  }
  auto const& a = *report.assignment;
  auto is_perm = [&](Perm const& p) {
    if (p.size() != a.degree) {
      return false;
    }
    std::vector<bool> hit(p.size(), false);
    for (auto v : p) {
      if (v >= p.size() || hit[v]) {
        return false;
      }
      hit[v] = true;
    }
    return true;
  };
  if (!is_perm(a.x) || !is_perm(a.y)) {
    return false;
  }
  // Multiply whole permutations letter by letter: (p*q)(i) = q(p(i)).
  std::map<Generator, std::pair<Perm, Perm>> images{
      {Generator("x"), {a.x, inverse_perm(a.x)}},
      {Generator("y"), {a.y, inverse_perm(a.y)}}};
  auto image_of = [&](Word const& u) -> std::optional<Perm> {
    Perm acc = identity_perm(a.degree);
    for (auto const& l : u.letters()) {
      auto it = images.find(l.gen);
      if (it == images.end()) {
        return std::nullopt;
      }
      Perm const& step = l.sign > 0 ? it->second.first : it->second.second;
      Perm next(a.degree);
      for (std::size_t i = 0; i < a.degree; ++i) {
        next[i] = step[acc[i]];
      }
      acc = std::move(next);
    }
    return acc;
  };
  for (auto const& r : target.relators) {
    auto img = image_of(r);
    if (!img || !is_identity(*img)) {
      return false;
    }
  }
  auto img = image_of(w);
  if (!img || is_identity(*img)) {
    return false;
  }
  return report.image_order && *report.image_order == order(*img);
}

}  // namespace twogen
