#include "gks/upper_bound.hpp"

#include <cmath>

#include "gks/errors.hpp"

namespace gks {

UpperBoundTable::UpperBoundTable(std::vector<UpperBoundEntry> entries) : entries_(std::move(entries)) {}

const UpperBoundEntry& UpperBoundTable::at(int n) const {
  if (n < 1 || n > n_max()) throw InputError("n outside 1.." + std::to_string(n_max()));
  return entries_[static_cast<std::size_t>(n - 1)];
}

double power_law_bound(int n) { return 5.0 * std::pow(static_cast<double>(n), std::log(5.0) / std::log(30.0)); }

namespace {

class Closure {
 public:
  explicit Closure(int n_max) : n_max_(n_max), best_(static_cast<std::size_t>(n_max) + 1) {}

  bool beats(int n, int k, int depth) const {
    if (n < 1 || n > n_max_) return false;
    const auto& cur = best_[static_cast<std::size_t>(n)];
    return !cur || k < cur->params().k || (k == cur->params().k && depth < cur->depth());
  }

  bool offer(const SpecPtr& spec) {
    const auto& p = spec->params();
    if (!beats(p.n, p.k, spec->depth())) return false;
    best_[static_cast<std::size_t>(p.n)] = spec;
    return true;
  }

  bool product_pass() {
    bool changed = false;
    for (int n1 = 2; n1 <= n_max_ / 2; ++n1) {
      for (int n2 = 2; n1 * n2 <= n_max_; ++n2) {
        const auto& a = best_[static_cast<std::size_t>(n1)];
        const auto& b = best_[static_cast<std::size_t>(n2)];
        if (!a || !b) continue;
        const int depth = std::max(a->depth(), b->depth()) + 1;
        if (beats(n1 * n2, a->params().k * b->params().k, depth)) {
          changed |= offer(StrategySpec::prod(a, b));
        }
      }
    }
    return changed;
  }

  bool pad_pass() {
    bool changed = false;
    SpecPtr source;  // best unpadded derivation at some larger n
    for (int m = n_max_; m >= 1; --m) {
      if (source) {
        const int depth = source->depth() + 1;
        if (beats(m, source->params().k, depth)) changed |= offer(StrategySpec::pad(source, m));
      }
      const auto& here = best_[static_cast<std::size_t>(m)];
      if (!here) continue;
      SpecPtr base = here->kind() == StrategySpec::Kind::pad ? here->children()[0] : here;
      if (!source || base->params().k < source->params().k ||
          (base->params().k == source->params().k && base->depth() < source->depth())) {
        source = base;
      }
    }
    return changed;
  }

  std::vector<UpperBoundEntry> entries() const {
    std::vector<UpperBoundEntry> out;
    for (int n = 1; n <= n_max_; ++n) {
      const auto& s = best_[static_cast<std::size_t>(n)];
      out.push_back({n, s->params().k, s});
    }
    return out;
  }

 private:
  int n_max_;
  std::vector<SpecPtr> best_;
};

}  // namespace

UpperBoundTable upper_bound_table(int n_max, const UpperBoundOptions& options) {
  if (n_max < 1) throw InputError("n_max must be >= 1");
  Closure closure(n_max);

  std::vector<SpecPtr> alice_seeds{StrategySpec::code6()};
  alice_seeds.insert(alice_seeds.end(), options.alice_mode_seeds.begin(), options.alice_mode_seeds.end());
  for (int n = 1; n <= n_max; ++n) closure.offer(StrategySpec::trivial(n));
  // Seeds larger than n_max still count once padded down to n_max; the pad
  // pass carries them further. Products stay capped at n_max.
  auto offer_seed = [&](const SpecPtr& s) {
    if (s->params().n <= n_max) {
      closure.offer(s);
    } else if (s->params().k < n_max) {
      closure.offer(StrategySpec::pad(s, n_max));
    }
  };
  for (int k = 1; (k - 1) * (k - 1) <= n_max; ++k) offer_seed(StrategySpec::blocksq(k));
  for (const auto& s : alice_seeds) {
    if (!s->params().k_alice) throw InputError(s->to_string() + " is not an Alice-mode seed");
    offer_seed(s);
    const auto& p = s->params();
    if (p.k / *p.k_alice >= 1 && p.k < n_max) offer_seed(StrategySpec::amc(s));
  }

  bool changed = true;
  while (changed) {
    changed = closure.product_pass();
    changed |= closure.pad_pass();
  }
  return UpperBoundTable(closure.entries());
}

}  // namespace gks
