#ifndef FEQ_EQUIVARIANCE_HPP
#define FEQ_EQUIVARIANCE_HPP

#include <string_view>

#include "feq/function.hpp"
#include "feq/scope.hpp"

namespace feq {

// Exhaustive finite-scope checkers. Witnesses are ordered by input list
// (shortlex) and then by the transform's position in its universe.

/// (map psi) . f == f . (map psi) for every endo-map psi of the alphabet.
/// Witness: lhs = map psi (f xs), rhs = f (map psi xs).
Report check_map_equivariant(const ListFunction& f, const Scope& scope);

/// (filter phi) . f == f . (filter phi) for every subset predicate phi.
/// Witness: lhs = filter phi (f xs), rhs = f (filter phi xs).
Report check_filter_equivariant(const ListFunction& f, const Scope& scope);

/// f . tail == tail . f on nonempty xs whose image f xs is nonempty.
/// Witness: lhs = f (tail xs), rhs = tail (f xs).
Report check_tail_equivariant(const ListFunction& f, const Scope& scope);

/// |f xs| is a subset of |xs|. Witness: lhs = |f xs|, rhs = |xs|.
Report check_no_new_values(const ListFunction& f, const Scope& scope);

/// With k = len (f [0]): f xs has k*m copies of each value occurring m times.
/// Requires map- and filter-equivariance at scope; reports
/// PreconditionFailed otherwise. Witness: lhs = f xs, rhs = inflate k xs.
Report check_nfe_counts(const ListFunction& f, const Scope& scope);

enum class Law { Map, Filter, Tail, NoNewValues, NfeCounts, MultisetProfile };

const char* law_name(Law law) noexcept;

/// Throws Error(Parse) for an unknown name.
Law law_from_name(std::string_view name);

Report check_law(const ListFunction& f, Law law, const Scope& scope);

}  // namespace feq

#endif  // FEQ_EQUIVARIANCE_HPP
