#include "gibbs/lattice.hpp"

#include <cmath>
#include <cstdlib>
#include <sstream>

namespace gibbs {

namespace {

// Guard band well inside int32 so repeated ball growth cannot wrap.
constexpr Coord kCoordLimit = 1 << 30;

Coord checked_add(Coord a, Coord b) {
  const std::int64_t sum = static_cast<std::int64_t>(a) + static_cast<std::int64_t>(b);
  if (sum > kCoordLimit || sum < -kCoordLimit) {
    throw ContractViolation("site coordinate overflow: " + std::to_string(sum));
  }
  return static_cast<Coord>(sum);
}

// Enumerate all offsets with ||delta||_1 <= k (or == k when exact), applying
// them to the center. One recursion level per dimension.
void enumerate_offsets(const Site& center, int k, bool exact_norm, int dim,
                       std::vector<Coord>& delta, int budget, SiteSet& out) {
  if (dim == center.dimension() - 1) {
    // Last coordinate takes every residue up to the remaining budget.
    const int lo = exact_norm ? budget : 0;
    for (int r = lo; r <= budget; ++r) {
      for (int sign = (r == 0 ? 1 : -1); sign <= 1; sign += 2) {
        delta[static_cast<std::size_t>(dim)] = sign * r;
        std::vector<Coord> c(center.coords());
        for (int q = 0; q < center.dimension(); ++q) {
          c[static_cast<std::size_t>(q)] =
              checked_add(c[static_cast<std::size_t>(q)], delta[static_cast<std::size_t>(q)]);
        }
        out.insert(Site(std::move(c)));
        if (r == 0) break;
      }
    }
    return;
  }
  for (int r = 0; r <= budget; ++r) {
    for (int sign = (r == 0 ? 1 : -1); sign <= 1; sign += 2) {
      delta[static_cast<std::size_t>(dim)] = sign * r;
      enumerate_offsets(center, k, exact_norm, dim + 1, delta, budget - r, out);
      if (r == 0) break;
    }
  }
}

}  // namespace

Site Site::translated(const Site& offset) const {
  if (offset.dimension() != dimension()) {
    throw ContractViolation("dimension mismatch in site translation");
  }
  std::vector<Coord> c(coords_);
  for (int k = 0; k < dimension(); ++k) {
    c[static_cast<std::size_t>(k)] = checked_add(c[static_cast<std::size_t>(k)], offset[k]);
  }
  return Site(std::move(c));
}

std::string Site::to_string() const {
  std::ostringstream os;
  os << '(';
  for (std::size_t k = 0; k < coords_.size(); ++k) {
    if (k > 0) os << ',';
    os << coords_[k];
  }
  os << ')';
  return os.str();
}

int l1_norm(const Site& i) {
  int n = 0;
  for (int k = 0; k < i.dimension(); ++k) n += std::abs(i[k]);
  return n;
}

int l1_distance(const Site& a, const Site& b) {
  if (a.dimension() != b.dimension()) {
    throw ContractViolation("dimension mismatch in l1_distance");
  }
  int n = 0;
  for (int k = 0; k < a.dimension(); ++k) n += std::abs(a[k] - b[k]);
  return n;
}

SiteSet ball(const Site& i, int k) {
  if (k < 0) throw ContractViolation("ball radius must be >= 0");
  SiteSet out;
  if (i.dimension() == 0) throw ContractViolation("ball of a dimensionless site");
  std::vector<Coord> delta(static_cast<std::size_t>(i.dimension()), 0);
  enumerate_offsets(i, k, /*exact_norm=*/false, 0, delta, k, out);
  return out;
}

SiteSet shell(const Site& i, int k) {
  if (k < 1) throw ContractViolation("shell radius must be >= 1");
  SiteSet out;
  std::vector<Coord> delta(static_cast<std::size_t>(i.dimension()), 0);
  enumerate_offsets(i, k, /*exact_norm=*/true, 0, delta, k, out);
  return out;
}

std::int64_t ball_size(int d, int k) {
  if (d < 1) throw ContractViolation("ball_size needs dimension >= 1");
  if (k < 0) throw ContractViolation("ball_size needs radius >= 0");
  // sum_{j=0}^{min(d,k)} 2^j C(d,j) C(k,j): j counts nonzero coordinates.
  std::int64_t total = 0;
  const int jmax = std::min(d, k);
  for (int j = 0; j <= jmax; ++j) {
    std::int64_t term = 1;
    for (int q = 0; q < j; ++q) {
      term *= 2 * (d - q);
      term /= (q + 1);
    }
    // term = 2^j C(d,j); multiply by C(k,j).
    for (int q = 0; q < j; ++q) {
      term *= (k - q);
      term /= (q + 1);
    }
    total += term;
  }
  return total;
}

std::int64_t shell_size(int d, int k) {
  if (k < 1) throw ContractViolation("shell_size needs radius >= 1");
  return ball_size(d, k) - ball_size(d, k - 1);
}

std::string to_string(const SiteSet& s) {
  std::ostringstream os;
  os << '{';
  bool first = true;
  for (const Site& i : s) {
    if (!first) os << ' ';
    os << i.to_string();
    first = false;
  }
  os << '}';
  return os.str();
}

}  // namespace gibbs
