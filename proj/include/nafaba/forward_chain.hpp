#pragma once

#include "nafaba/id_set.hpp"

#include <cstddef>
#include <cstdint>
#include <limits>
#include <optional>
#include <vector>

namespace nafaba {

inline constexpr std::size_t kNoReason = std::numeric_limits<std::size_t>::max();

template <class Key>
struct ChainResult {
  IdSet<Key> derived;
  /// Number of one-step expansions that added at least one new key.
  std::size_t rounds = 0;
  /// Some headless rule had its whole body derived.
  bool constraint_fired = false;
  /// Per universe index: the rule that first derived the key, or kNoReason
  /// for initial members and underived keys.
  std::vector<std::size_t> reason;
};

/// Layered forward chaining (counter-based, linear in total rule size).
///
/// Round k fires exactly the rules whose bodies lie in the set reached after
/// round k-1, which makes the layering coincide with iterating the one-step
/// expansion `S -> S ∪ {head(r) | body(r) ⊆ S}`. Within a round, rules fire
/// in index order and the first rule to add a key is recorded as its reason.
///
/// `head_of(rule)` returns `std::optional<Key>` (nullopt = constraint) and
/// `body_of(rule)` returns an iterable range of keys.
template <class Key, class Rules, class HeadOf, class BodyOf>
ChainResult<Key> forward_chain(std::size_t universe, const Rules& rules, const IdSet<Key>& initial,
                               HeadOf&& head_of, BodyOf&& body_of) {
  const std::size_t rule_count = std::size(rules);
  std::vector<std::vector<std::uint32_t>> watchers(universe);
  std::vector<std::uint32_t> missing(rule_count, 0);

  ChainResult<Key> res;
  res.derived = initial;
  res.reason.assign(universe, kNoReason);

  std::vector<std::uint32_t> ready;
  std::size_t r = 0;
  for (const auto& rule : rules) {
    std::uint32_t need = 0;
    for (Key k : body_of(rule)) {
      if (!initial.contains(k)) {
        watchers[id_index(k)].push_back(static_cast<std::uint32_t>(r));
        ++need;
      }
    }
    missing[r] = need;
    if (need == 0)
      ready.push_back(static_cast<std::uint32_t>(r));
    ++r;
  }

  std::vector<Key> frontier;
  std::vector<std::uint32_t> next_ready;
  auto rule_at = [&](std::size_t idx) -> decltype(auto) { return *(std::begin(rules) + idx); };

  while (!ready.empty()) {
    std::sort(ready.begin(), ready.end());
    frontier.clear();
    for (std::uint32_t idx : ready) {
      std::optional<Key> h = head_of(rule_at(idx));
      if (!h) {
        res.constraint_fired = true;
        continue;
      }
      if (res.derived.add(*h)) {
        res.reason[id_index(*h)] = idx;
        frontier.push_back(*h);
      }
    }
    if (frontier.empty())
      break;
    ++res.rounds;
    next_ready.clear();
    for (Key k : frontier)
      for (std::uint32_t w : watchers[id_index(k)])
        if (--missing[w] == 0)
          next_ready.push_back(w);
    ready.swap(next_ready);
  }
  return res;
}

} // namespace nafaba
