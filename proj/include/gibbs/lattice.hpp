#pragma once

#include <cstdint>
#include <set>
#include <string>
#include <vector>

#include "gibbs/errors.hpp"

namespace gibbs {

using Coord = std::int32_t;

// A point of Z^d. Comparison is lexicographic on coordinates, which fixes the
// iteration order of every SiteSet and hence the order in which random draws
// are consumed.
class Site {
 public:
  Site() = default;
  explicit Site(std::vector<Coord> coords) : coords_(std::move(coords)) {}
  static Site origin(int dimension) { return Site(std::vector<Coord>(dimension, 0)); }

  int dimension() const { return static_cast<int>(coords_.size()); }
  Coord operator[](int k) const { return coords_[static_cast<std::size_t>(k)]; }
  const std::vector<Coord>& coords() const { return coords_; }

  // Coordinates are bounded machine integers; going past the guard band is a
  // checked error rather than silent wraparound.
  Site translated(const Site& offset) const;

  std::string to_string() const;

  friend bool operator==(const Site& a, const Site& b) { return a.coords_ == b.coords_; }
  friend bool operator!=(const Site& a, const Site& b) { return !(a == b); }
  friend bool operator<(const Site& a, const Site& b) { return a.coords_ < b.coords_; }

 private:
  std::vector<Coord> coords_;
};

// Finite subset of Z^d with deterministic (lexicographic) iteration.
using SiteSet = std::set<Site>;

int l1_norm(const Site& i);
int l1_distance(const Site& a, const Site& b);

// {j : ||j - i||_1 <= k}; ball(i, 0) = {i}.
SiteSet ball(const Site& i, int k);

// ball(i, k) \ ball(i, k-1), k >= 1.
SiteSet shell(const Site& i, int k);

// |ball(i, k)| in d dimensions: sum_{j=0}^{min(d,k)} 2^j C(d,j) C(k,j).
std::int64_t ball_size(int d, int k);
std::int64_t shell_size(int d, int k);  // ball_size(d,k) - ball_size(d,k-1), k >= 1

std::string to_string(const SiteSet& s);

}  // namespace gibbs
