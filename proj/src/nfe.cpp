#include "feq/nfe.hpp"

#include "feq/equivariance.hpp"
#include "feq/error.hpp"

namespace feq {

OccurrenceFn::OccurrenceFn(Scope scope, std::vector<std::size_t> table)
    : scope_(scope), table_(std::move(table)) {
  if (table_.size() != std::size_t{scope_.alphabet_size} * (scope_.max_len + 1))
    throw Error(ErrorCode::InvalidArgument, "occurrence table has wrong shape");
}

std::size_t OccurrenceFn::operator()(Elem x, std::size_t n) const {
  if (x >= scope_.alphabet_size || n > scope_.max_len)
    throw Error(ErrorCode::OutOfScope, "occurrence function queried outside its scope");
  return table_[std::size_t{x} * (scope_.max_len + 1) + n];
}

OccurrenceFn compute_occurrence(const ListFunction& f, const Scope& scope) {
  scope.validate();
  std::vector<std::size_t> table;
  table.reserve(std::size_t{scope.alphabet_size} * (scope.max_len + 1));
  for (Elem x = 0; x < scope.alphabet_size; ++x)
    for (unsigned n = 0; n <= scope.max_len; ++n) table.push_back(f(repeat_elem(n, x)).size());
  return OccurrenceFn(scope, std::move(table));
}

Report check_multiset_profile(const ListFunction& f, const Scope& scope) {
  Report report{"multiset_profile", scope, Verdict::Pass, {}, {}};
  if (!check_filter_equivariant(f, scope).passed()) {
    report.verdict = Verdict::PreconditionFailed;
    report.note = "function is not filter-equivariant at scope";
    return report;
  }
  const OccurrenceFn occ = compute_occurrence(f, scope);
  for (const auto& xs : lists_in_scope(scope)) {
    ListValue predicted;
    for (Elem x : unique_values(xs)) {
      const ListValue copies = repeat_elem(occ(x, count_of(x, xs)), x);
      predicted.insert(predicted.end(), copies.begin(), copies.end());
    }
    ListValue image = f(xs);
    if (!same_multiset(image, predicted))
      report.add({xs, Transform::none(), std::move(image), std::move(predicted)});
  }
  return report;
}

}  // namespace feq
