#include "feq/amalgamation.hpp"

#include <algorithm>
#include <numeric>

#include "feq/error.hpp"

namespace feq {

namespace {

ListValue sorted_values(const ListValue& xs) {
  ListValue u = unique_values(xs);
  std::sort(u.begin(), u.end());
  return u;
}

std::vector<CollectionKey> keys_of_size(const ListValue& universe, std::size_t key_size) {
  std::vector<CollectionKey> keys;
  if (key_size == 1) {
    for (Elem x : universe) keys.push_back(CollectionKey::single(x));
  } else {
    for (std::size_t i = 0; i < universe.size(); ++i)
      for (std::size_t j = i + 1; j < universe.size(); ++j)
        keys.push_back(CollectionKey::pair(universe[i], universe[j]));
  }
  return keys;
}

ListValue filter_by_key(const ListValue& ys, const CollectionKey& key, KeyKind kind) {
  if (kind == KeyKind::Removed) return filter_list([&](Elem e) { return !key.contains(e); }, ys);
  return filter_list([&](Elem e) { return key.contains(e); }, ys);
}

// Head counts over the nonempty lists; nullopt if there is no strict winner.
std::optional<VoteRound> vote(const Collection& chi) {
  std::map<Elem, std::size_t> score;
  for (const auto& [key, list] : chi.lists)
    if (!list.empty()) ++score[list.front()];
  if (score.empty()) return std::nullopt;
  Elem winner = 0;
  std::size_t best = 0;
  std::size_t runner_up = 0;
  for (const auto& [x, s] : score) {
    if (s > best) {
      runner_up = best;
      best = s;
      winner = x;
    } else if (s > runner_up) {
      runner_up = s;
    }
  }
  if (best == runner_up) return std::nullopt;
  std::size_t with_key = 0;
  for (const auto& [key, list] : chi.lists)
    if (!list.empty() && key.contains(winner)) ++with_key;
  return VoteRound{winner, best, runner_up, with_key};
}

}  // namespace

CollectionKey CollectionKey::pair(Elem x, Elem y) {
  if (x == y) throw Error(ErrorCode::InvalidArgument, "pair key needs two distinct elements");
  return CollectionKey(std::min(x, y), std::max(x, y), true);
}

std::string CollectionKey::to_string() const { return feq::to_string(elements()); }

bool Collection::all_empty() const {
  return std::all_of(lists.begin(), lists.end(), [](const auto& kv) { return kv.second.empty(); });
}

std::size_t Collection::key_size() const {
  return lists.empty() ? 0 : lists.begin()->first.size();
}

std::optional<std::string> Collection::invalid_reason() const {
  if (!std::is_sorted(universe.begin(), universe.end()) ||
      std::adjacent_find(universe.begin(), universe.end()) != universe.end())
    return "universe must be sorted and distinct";
  const std::size_t size = key_size();
  if (size == 0) return universe.size() <= 1 ? std::nullopt
                                             : std::optional<std::string>("collection has no keys");
  if (kind == KeyKind::Kept && size != 2) return "kept-value collections are keyed by pairs";
  const auto expected = keys_of_size(universe, size);
  if (expected.size() != lists.size())
    return "collection has " + std::to_string(lists.size()) + " keys, expected " +
           std::to_string(expected.size());
  for (const auto& key : expected) {
    auto it = lists.find(key);
    if (it == lists.end()) return "missing key " + key.to_string();
    for (Elem e : it->second) {
      const bool in_universe = std::binary_search(universe.begin(), universe.end(), e);
      const bool allowed = kind == KeyKind::Removed ? in_universe && !key.contains(e)
                                                    : key.contains(e);
      if (!allowed)
        return "list for key " + key.to_string() + " contains excluded value " +
               std::to_string(e);
    }
  }
  return std::nullopt;
}

const char* failure_name(AmalgamationFailure f) noexcept {
  switch (f) {
    case AmalgamationFailure::None: return "None";
    case AmalgamationFailure::NoUniqueHead: return "NoUniqueHead";
    case AmalgamationFailure::Inconsistent: return "Inconsistent";
    case AmalgamationFailure::UniverseTooSmall: return "UniverseTooSmall";
    case AmalgamationFailure::MissingSublist: return "MissingSublist";
    case AmalgamationFailure::InvalidExample: return "InvalidExample";
  }
  return "Unknown";
}

Collection decompose(const ListValue& ys, ListValue universe, KeyKind kind,
                     std::size_t key_size) {
  if (key_size != 1 && key_size != 2)
    throw Error(ErrorCode::InvalidArgument, "key size must be 1 or 2");
  std::sort(universe.begin(), universe.end());
  universe.erase(std::unique(universe.begin(), universe.end()), universe.end());
  Collection chi{kind, universe, {}};
  for (const auto& key : keys_of_size(universe, key_size))
    chi.lists.emplace(key, filter_by_key(ys, key, kind));
  return chi;
}

Collection decompose_pi(const ListValue& xs) {
  return decompose(xs, sorted_values(xs), KeyKind::Removed, 1);
}

StepResult is_amalgamable_step(const Collection& chi) {
  if (chi.universe.size() < 3)
    throw Error(ErrorCode::UniverseTooSmall, "amalgamation needs at least three values");
  if (chi.kind == KeyKind::Kept) {
    auto round = vote(chi);
    if (!round) return {};
    return {true, round->winner};
  }
  std::optional<Elem> found;
  for (Elem x0 : chi.universe) {
    bool any = false;
    bool all = true;
    for (const auto& [key, list] : chi.lists) {
      if (key.contains(x0) || list.empty()) continue;
      any = true;
      all = all && list.front() == x0;
    }
    if (any && all) {
      if (found) return {};
      found = x0;
    }
  }
  if (!found) return {};
  return {true, found};
}

Collection delta_step(const Collection& chi, Elem x0) {
  Collection next = chi;
  for (auto& [key, list] : next.lists)
    if (!list.empty() && list.front() == x0) list.erase(list.begin());
  return next;
}

AmalgamationOutcome amal(const Collection& chi, std::vector<VoteRound>* trace) {
  if (auto reason = chi.invalid_reason())
    return AmalgamationOutcome::fail(AmalgamationFailure::Inconsistent, *reason);
  if (chi.all_empty()) return AmalgamationOutcome::success({});
  if (chi.universe.size() < 3)
    return AmalgamationOutcome::fail(AmalgamationFailure::UniverseTooSmall,
                                     "amalgamation needs at least three values");
  Collection cur = chi;
  ListValue out;
  while (!cur.all_empty()) {
    Elem head = 0;
    if (cur.kind == KeyKind::Kept) {
      auto round = vote(cur);
      if (!round)
        return AmalgamationOutcome::fail(AmalgamationFailure::NoUniqueHead,
                                         "no strict majority head at output position " +
                                             std::to_string(out.size()));
      if (trace) trace->push_back(*round);
      head = round->winner;
    } else {
      StepResult step = is_amalgamable_step(cur);
      if (!step.amalgamable)
        return AmalgamationOutcome::fail(AmalgamationFailure::NoUniqueHead,
                                         "no unique head at output position " +
                                             std::to_string(out.size()));
      head = *step.head;
    }
    out.push_back(head);
    cur = delta_step(cur, head);
  }
  if (decompose(out, chi.universe, chi.kind, chi.key_size()) != chi)
    return AmalgamationOutcome::fail(AmalgamationFailure::Inconsistent,
                                     "candidate " + to_string(out) +
                                         " does not reproduce the collection");
  return AmalgamationOutcome::success(std::move(out));
}

Collection two_unique_sublists(const ListValue& xs) {
  ListValue universe = sorted_values(xs);
  if (universe.size() < 3)
    throw Error(ErrorCode::UniverseTooSmall, "need at least three distinct values");
  return decompose(xs, std::move(universe), KeyKind::Kept, 2);
}

SublistTable sublist_outputs(const ListFunction& f, const ListValue& xs) {
  const ListValue universe = sorted_values(xs);
  SublistTable table;
  if (universe.empty()) return table;
  if (universe.size() == 1) {
    table.emplace(CollectionKey::single(universe[0]), f(xs));
    return table;
  }
  for (const auto& key : keys_of_size(universe, 2))
    table.emplace(key, f(filter_by_key(xs, key, KeyKind::Kept)));
  return table;
}

SublistTable resolve_examples(const std::vector<std::pair<ListValue, ListValue>>& examples,
                              const ListValue& xs) {
  const ListValue universe = sorted_values(xs);
  SublistTable table;
  const auto keys = universe.size() == 1 ? keys_of_size(universe, 1)
                                         : keys_of_size(universe, 2);
  for (const auto& key : keys) {
    const ListValue sub = filter_by_key(xs, key, KeyKind::Kept);
    for (const auto& [in, out] : examples) {
      if (in == sub) {
        table.emplace(key, out);
        break;
      }
    }
  }
  return table;
}

AmalgamationOutcome extrapolate_fe(const SublistTable& outputs, const ListValue& xs,
                                   std::vector<VoteRound>* trace) {
  const ListValue universe = sorted_values(xs);
  if (universe.empty()) return AmalgamationOutcome::success({});

  auto lookup = [&](const CollectionKey& key) -> const ListValue* {
    auto it = outputs.find(key);
    return it == outputs.end() ? nullptr : &it->second;
  };
  auto foreign = [](const CollectionKey& key, const ListValue& out) {
    return std::any_of(out.begin(), out.end(), [&](Elem e) { return !key.contains(e); });
  };

  const auto keys = universe.size() == 1 ? keys_of_size(universe, 1)
                                         : keys_of_size(universe, 2);
  for (const auto& key : keys) {
    const ListValue* out = lookup(key);
    if (!out)
      return AmalgamationOutcome::fail(AmalgamationFailure::MissingSublist,
                                       "no output for the sublist keeping " + key.to_string());
    if (foreign(key, *out))
      return AmalgamationOutcome::fail(AmalgamationFailure::Inconsistent,
                                       "output for sublist keeping " + key.to_string() +
                                           " introduces new values");
  }

  if (universe.size() <= 2) return AmalgamationOutcome::success(*lookup(keys.front()));

  if (universe.size() == 3) {
    Collection chi{KeyKind::Removed, universe, {}};
    for (Elem x : universe) {
      ListValue rest = filter_list([&](Elem e) { return e != x; }, universe);
      chi.lists.emplace(CollectionKey::single(x), *lookup(CollectionKey::pair(rest[0], rest[1])));
    }
    return amal(chi, trace);
  }

  Collection chi{KeyKind::Kept, universe, {}};
  for (const auto& key : keys) chi.lists.emplace(key, *lookup(key));
  return amal(chi, trace);
}

AmalgamationOutcome extrapolate_nfe_from_doubleton(const ListValue& example_in,
                                                   const ListValue& example_out,
                                                   const ListValue& xs) {
  if (example_in.size() != 2 || example_in[0] == example_in[1])
    return AmalgamationOutcome::fail(AmalgamationFailure::InvalidExample,
                                     "example input must be two distinct values");
  const Elem x = example_in[0];
  const Elem y = example_in[1];
  for (Elem e : example_out)
    if (e != x && e != y)
      return AmalgamationOutcome::fail(AmalgamationFailure::InvalidExample,
                                       "example output contains foreign value " +
                                           std::to_string(e));
  if (count_of(x, example_out) != count_of(y, example_out))
    return AmalgamationOutcome::fail(AmalgamationFailure::InvalidExample,
                                     "example output repeats its two values unequally");
  const std::size_t k = example_out.size() / 2;

  // Repeated values are made distinct by position; the result is mapped back.
  const bool tagged = has_duplicates(xs);
  ListValue work(xs.size());
  if (tagged) {
    for (const auto& t : enumerate(xs)) work[t.index] = static_cast<Elem>(t.index);
  } else {
    work = xs;
  }
  auto untag = [&](ListValue out) {
    if (!tagged) return out;
    std::vector<TaggedElem> ts;
    ts.reserve(out.size());
    for (Elem id : out) ts.push_back({xs[id], id});
    return unenumerate(ts);
  };

  auto on_doubleton = [&](Elem p, Elem q) {
    return map_list([&](Elem e) { return e == x ? p : q; }, example_out);
  };

  if (work.empty()) return AmalgamationOutcome::success({});
  if (work.size() == 1) return AmalgamationOutcome::success(untag(repeat_elem(k, work[0])));
  if (work.size() == 2) return AmalgamationOutcome::success(untag(on_doubleton(work[0], work[1])));

  SublistTable table;
  for (std::size_t i = 0; i < work.size(); ++i)
    for (std::size_t j = i + 1; j < work.size(); ++j)
      table.emplace(CollectionKey::pair(work[i], work[j]), on_doubleton(work[i], work[j]));
  AmalgamationOutcome outcome = extrapolate_fe(table, work);
  if (outcome.ok()) outcome.result = untag(std::move(outcome.result));
  return outcome;
}

ListValue square_multiplicity_counterexample(const ListValue& xs) {
  ListValue out;
  for (Elem x : unique_values(xs)) {
    const std::size_t c = count_of(x, xs);
    out.insert(out.end(), c * c, x);
  }
  return out;
}

}  // namespace feq
