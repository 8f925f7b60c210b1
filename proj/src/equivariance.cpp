#include "feq/equivariance.hpp"

#include <array>

#include "feq/error.hpp"
#include "feq/nfe.hpp"

namespace feq {

namespace {

std::vector<ListValue> outputs(const ListFunction& f, const std::vector<ListValue>& lists) {
  std::vector<ListValue> out;
  out.reserve(lists.size());
  for (const auto& xs : lists) out.push_back(f(xs));
  return out;
}

Report make_report(const char* law, const Scope& scope) {
  return Report{law, scope, Verdict::Pass, {}, {}};
}

}  // namespace

Report check_map_equivariant(const ListFunction& f, const Scope& scope) {
  Report report = make_report("map", scope);
  const auto lists = lists_in_scope(scope);
  const auto maps = endo_map_universe(scope.alphabet_size);
  const auto images = outputs(f, lists);
  for (std::size_t i = 0; i < lists.size(); ++i) {
    for (const auto& table : maps) {
      const EndoMap psi(table);
      ListValue lhs = map_list(psi, images[i]);
      ListValue rhs = f(map_list(psi, lists[i]));
      if (lhs != rhs) report.add({lists[i], Transform::map(table), std::move(lhs), std::move(rhs)});
    }
  }
  return report;
}

Report check_filter_equivariant(const ListFunction& f, const Scope& scope) {
  Report report = make_report("filter", scope);
  const auto lists = lists_in_scope(scope);
  const auto predicates = predicate_universe(scope.alphabet_size);
  const auto images = outputs(f, lists);
  for (std::size_t i = 0; i < lists.size(); ++i) {
    for (const auto& keep : predicates) {
      const Predicate phi(keep);
      ListValue lhs = filter_list(phi, images[i]);
      ListValue rhs = f(filter_list(phi, lists[i]));
      if (lhs != rhs) report.add({lists[i], Transform::filter(keep), std::move(lhs), std::move(rhs)});
    }
  }
  return report;
}

Report check_tail_equivariant(const ListFunction& f, const Scope& scope) {
  Report report = make_report("tail", scope);
  for (const auto& xs : lists_in_scope(scope)) {
    if (xs.empty()) continue;
    const ListValue image = f(xs);
    if (image.empty()) continue;
    ListValue lhs = f(tail(xs));
    ListValue rhs = tail(image);
    if (lhs != rhs) report.add({xs, Transform::tail(), std::move(lhs), std::move(rhs)});
  }
  return report;
}

Report check_no_new_values(const ListFunction& f, const Scope& scope) {
  Report report = make_report("no_new_values", scope);
  for (const auto& xs : lists_in_scope(scope)) {
    const ListValue image = f(xs);
    ListValue out_values = unique_values(image);
    ListValue in_values = unique_values(xs);
    bool ok = true;
    for (Elem y : out_values) ok = ok && contains(in_values, y);
    if (!ok) report.add({xs, Transform::none(), std::move(out_values), std::move(in_values)});
  }
  return report;
}

Report check_nfe_counts(const ListFunction& f, const Scope& scope) {
  Report report = make_report("nfe_counts", scope);
  const Report map_report = check_map_equivariant(f, scope);
  const Report filter_report = check_filter_equivariant(f, scope);
  if (!map_report.passed() || !filter_report.passed()) {
    report.verdict = Verdict::PreconditionFailed;
    report.note = std::string("function is not ") +
                  (map_report.passed() ? "filter" : "map") + "-equivariant at scope";
    return report;
  }
  const std::size_t k = f(ListValue{0}).size();
  report.note = "k=" + std::to_string(k);
  for (const auto& xs : lists_in_scope(scope)) {
    ListValue image = f(xs);
    ListValue expected = inflate(k, xs);
    bool ok = image.size() == k * xs.size();
    for (Elem x : unique_values(xs)) ok = ok && count_of(x, image) == k * count_of(x, xs);
    if (!ok) report.add({xs, Transform::none(), std::move(image), std::move(expected)});
  }
  return report;
}

namespace {

constexpr std::array<std::pair<Law, const char*>, 6> kLaws{{
    {Law::Map, "map"},
    {Law::Filter, "filter"},
    {Law::Tail, "tail"},
    {Law::NoNewValues, "no_new_values"},
    {Law::NfeCounts, "nfe_counts"},
    {Law::MultisetProfile, "multiset_profile"},
}};

}  // namespace

const char* law_name(Law law) noexcept {
  for (const auto& [l, name] : kLaws)
    if (l == law) return name;
  return "unknown";
}

Law law_from_name(std::string_view name) {
  for (const auto& [l, n] : kLaws)
    if (name == n) return l;
  throw Error(ErrorCode::Parse, "unknown law '" + std::string(name) + "'");
}

Report check_law(const ListFunction& f, Law law, const Scope& scope) {
  switch (law) {
    case Law::Map: return check_map_equivariant(f, scope);
    case Law::Filter: return check_filter_equivariant(f, scope);
    case Law::Tail: return check_tail_equivariant(f, scope);
    case Law::NoNewValues: return check_no_new_values(f, scope);
    case Law::NfeCounts: return check_nfe_counts(f, scope);
    case Law::MultisetProfile: return check_multiset_profile(f, scope);
  }
  throw Error(ErrorCode::InvalidArgument, "unknown law");
}

}  // namespace feq
