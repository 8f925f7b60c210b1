#include "feq/simplicial.hpp"

#include <numeric>
#include <sstream>

#include "feq/error.hpp"

namespace feq {

Permutation::Permutation(std::vector<std::size_t> image) : image_(std::move(image)) {
  std::vector<bool> seen(image_.size(), false);
  for (std::size_t v : image_) {
    if (v >= image_.size() || seen[v])
      throw Error(ErrorCode::InvalidPermutation, "not a permutation");
    seen[v] = true;
  }
}

Permutation Permutation::identity(std::size_t n) {
  std::vector<std::size_t> image(n);
  std::iota(image.begin(), image.end(), std::size_t{0});
  return Permutation(std::move(image));
}

std::string Permutation::to_string() const {
  std::ostringstream os;
  os << '[';
  for (std::size_t i = 0; i < image_.size(); ++i) os << (i ? "," : "") << image_[i];
  os << ']';
  return os.str();
}

Inclusion::Inclusion(std::vector<std::size_t> points, std::size_t target_size)
    : points_(std::move(points)), target_(target_size) {
  for (std::size_t i = 0; i < points_.size(); ++i) {
    if (points_[i] >= target_)
      throw Error(ErrorCode::InvalidInclusion, "inclusion point out of range");
    if (i && points_[i - 1] >= points_[i])
      throw Error(ErrorCode::InvalidInclusion, "inclusion must be strictly increasing");
  }
}

Inclusion Inclusion::identity(std::size_t n) {
  std::vector<std::size_t> points(n);
  std::iota(points.begin(), points.end(), std::size_t{0});
  return Inclusion(std::move(points), n);
}

Inclusion Inclusion::expand(unsigned k) const {
  std::vector<std::size_t> points;
  points.reserve(points_.size() * k);
  for (std::size_t p : points_)
    for (unsigned c = 0; c < k; ++c) points.push_back(p * k + c);
  return Inclusion(std::move(points), target_ * k);
}

Inclusion compose(const Inclusion& outer, const Inclusion& inner) {
  if (inner.target_size() != outer.source_size())
    throw Error(ErrorCode::InvalidInclusion, "inclusions do not compose");
  std::vector<std::size_t> points;
  points.reserve(inner.source_size());
  for (std::size_t p : inner.points()) points.push_back(outer.points()[p]);
  return Inclusion(std::move(points), outer.target_size());
}

std::vector<Inclusion> all_inclusions(std::size_t n, std::size_t m) {
  std::vector<Inclusion> out;
  if (n > m) return out;
  std::vector<std::size_t> cur(n);
  std::iota(cur.begin(), cur.end(), std::size_t{0});
  while (true) {
    out.emplace_back(cur, m);
    // next n-subset of m in lexicographic order
    std::size_t i = n;
    while (i > 0 && cur[i - 1] == m - n + (i - 1)) --i;
    if (i == 0) break;
    ++cur[i - 1];
    for (std::size_t j = i; j < n; ++j) cur[j] = cur[j - 1] + 1;
  }
  return out;
}

Permutation restrict_perm(const Permutation& p, const Inclusion& inclusion) {
  if (p.size() != inclusion.target_size())
    throw Error(ErrorCode::InvalidInclusion, "inclusion target does not match permutation size");
  // relabel[v] = position of v within the inclusion's image, or npos
  constexpr std::size_t npos = static_cast<std::size_t>(-1);
  std::vector<std::size_t> relabel(p.size(), npos);
  for (std::size_t i = 0; i < inclusion.points().size(); ++i) relabel[inclusion.points()[i]] = i;
  std::vector<std::size_t> image;
  image.reserve(inclusion.source_size());
  for (std::size_t v : p.image())
    if (relabel[v] != npos) image.push_back(relabel[v]);
  return Permutation(std::move(image));
}

Permutation restrict_perm_k(const Permutation& p, const Inclusion& inclusion, unsigned k) {
  return restrict_perm(p, inclusion.expand(k));
}

void PermFamily::validate() const {
  for (std::size_t n = 0; n < members.size(); ++n)
    if (members[n].size() != n * k)
      throw Error(ErrorCode::InvalidArgument,
                  "family member " + std::to_string(n) + " must act on " +
                      std::to_string(n * k) + " points");
}

ConeReport check_cone(const PermFamily& family) {
  family.validate();
  ConeReport report;
  const std::size_t bound = family.members.size();
  for (std::size_t m = 1; m < bound; ++m) {
    for (std::size_t n = 0; n < m; ++n) {
      for (const Inclusion& inc : all_inclusions(n, m)) {
        Permutation restricted = restrict_perm_k(family.members[m], inc, family.k);
        if (restricted != family.members[n])
          report.violations.push_back(
              {n, m, inc.points(), family.members[n], std::move(restricted)});
      }
    }
  }
  return report;
}

PermFamily family_of_function(const ListFunction& f, unsigned k, std::size_t bound) {
  if (k == 0) throw Error(ErrorCode::InvalidArgument, "inflation factor must be >= 1");
  PermFamily family{k, {}};
  for (std::size_t n = 0; n <= bound; ++n) {
    ListValue input(n);
    std::iota(input.begin(), input.end(), Elem{0});
    const ListValue output = f(input);
    if (output.size() != n * k)
      throw Error(ErrorCode::NotAnNfe, "output on length " + std::to_string(n) +
                                           " has length " + std::to_string(output.size()) +
                                           ", expected " + std::to_string(n * k));
    std::vector<std::size_t> copies_seen(n, 0);
    std::vector<std::size_t> image;
    image.reserve(n * k);
    for (Elem v : output) {
      if (v >= n || copies_seen[v] >= k)
        throw Error(ErrorCode::NotAnNfe,
                    "output on length " + std::to_string(n) + " is not a rearrangement of the "
                    "inflated input");
      image.push_back(std::size_t{v} * k + copies_seen[v]++);
    }
    family.members.emplace_back(std::move(image));
  }
  return family;
}

}  // namespace feq
