#ifndef FEQ_SIMPLICIAL_HPP
#define FEQ_SIMPLICIAL_HPP

#include <cstddef>
#include <string>
#include <vector>

#include "feq/function.hpp"

namespace feq {

/// A permutation of {0..n-1} in one-line notation: output slot j carries
/// input point image()[j].
class Permutation {
 public:
  Permutation() = default;

  /// Throws Error(InvalidPermutation) unless `image` is a bijection.
  explicit Permutation(std::vector<std::size_t> image);

  static Permutation identity(std::size_t n);

  std::size_t size() const { return image_.size(); }
  const std::vector<std::size_t>& image() const { return image_; }

  std::string to_string() const;

  friend bool operator==(const Permutation&, const Permutation&) = default;

 private:
  std::vector<std::size_t> image_;
};

/// A strictly increasing map {0..n-1} -> {0..m-1}.
class Inclusion {
 public:
  /// Throws Error(InvalidInclusion) unless points are strictly increasing
  /// and below target_size.
  Inclusion(std::vector<std::size_t> points, std::size_t target_size);

  static Inclusion identity(std::size_t n);

  std::size_t source_size() const { return points_.size(); }
  std::size_t target_size() const { return target_; }
  const std::vector<std::size_t>& points() const { return points_; }

  /// Each point i becomes the k consecutive points i*k .. i*k+k-1.
  Inclusion expand(unsigned k) const;

  friend bool operator==(const Inclusion&, const Inclusion&) = default;

 private:
  std::vector<std::size_t> points_;
  std::size_t target_;
};

/// outer . inner; requires inner.target_size() == outer.source_size().
Inclusion compose(const Inclusion& outer, const Inclusion& inner);

/// All inclusions n -> m in lexicographic order of their point sets.
std::vector<Inclusion> all_inclusions(std::size_t n, std::size_t m);

/// Deletes every point outside the inclusion's image from the one-line
/// notation, then relabels the survivors order-isomorphically.
Permutation restrict_perm(const Permutation& p, const Inclusion& inclusion);

/// Restriction along the k-fold blockwise expansion of `inclusion`.
/// `p` must act on target_size * k points.
Permutation restrict_perm_k(const Permutation& p, const Inclusion& inclusion, unsigned k);

/// Finite prefix t_0 .. t_N of a k-semi-simplicial permutation candidate.
struct PermFamily {
  unsigned k = 1;
  std::vector<Permutation> members;

  std::size_t bound() const { return members.empty() ? 0 : members.size() - 1; }

  /// Throws Error(InvalidArgument) unless members[n] acts on n*k points.
  void validate() const;

  friend bool operator==(const PermFamily&, const PermFamily&) = default;
};

struct ConeViolation {
  std::size_t n;
  std::size_t m;
  std::vector<std::size_t> inclusion;
  Permutation expected;  // t_n
  Permutation restricted;  // restriction of t_m

  friend bool operator==(const ConeViolation&, const ConeViolation&) = default;
};

struct ConeReport {
  std::vector<ConeViolation> violations;
  bool passed() const { return violations.empty(); }
};

/// Checks t_n == restrict_k(t_m, i) for every n < m <= N and inclusion i.
ConeReport check_cone(const PermFamily& family);

/// Reads t_0 .. t_N off f applied to [0, 1, .., n-1]. The c-th copy of input
/// i in the output (counting left to right) is point i*k + c.
/// Throws Error(NotAnNfe) when some output is not a rearrangement of
/// `inflate k [0..n-1]`.
PermFamily family_of_function(const ListFunction& f, unsigned k, std::size_t bound);

}  // namespace feq

#endif  // FEQ_SIMPLICIAL_HPP
