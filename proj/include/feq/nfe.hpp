#ifndef FEQ_NFE_HPP
#define FEQ_NFE_HPP

#include <vector>

#include "feq/function.hpp"
#include "feq/nfe_term.hpp"
#include "feq/scope.hpp"

namespace feq {

/// Tabulated occurrence function: how many copies of x the function emits when
/// its input is n copies of x, for x in the alphabet and n up to max_len.
class OccurrenceFn {
 public:
  OccurrenceFn(Scope scope, std::vector<std::size_t> table);

  /// Throws Error(OutOfScope) outside the tabulated range.
  std::size_t operator()(Elem x, std::size_t n) const;

  const Scope& scope() const { return scope_; }

  friend bool operator==(const OccurrenceFn&, const OccurrenceFn&) = default;

 private:
  Scope scope_;
  std::vector<std::size_t> table_;  // row-major, alphabet x (max_len + 1)
};

OccurrenceFn compute_occurrence(const ListFunction& f, const Scope& scope);

/// Checks that f xs is a rearrangement of concat [repeat (occ x n_x) x] over
/// the distinct x of xs. Requires filter-equivariance at scope.
/// Witness: lhs = f xs, rhs = the predicted multiset in first-occurrence order.
Report check_multiset_profile(const ListFunction& f, const Scope& scope);

}  // namespace feq

#endif  // FEQ_NFE_HPP
