#pragma once

#include <functional>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "gibbs/lattice.hpp"

namespace gibbs {

// One interaction set B with its coupling J_B. Sites are absolute positions.
struct Term {
  std::vector<Site> sites;  // |sites| >= 2, distinct
  double coupling = 0.0;
};

using TermVisitor = std::function<void(const std::vector<Site>& sites, double coupling)>;

// An interval [lower, upper] bracketing a certified scalar.
struct Interval {
  double lower = 0.0;
  double upper = 0.0;
  double width() const { return upper - lower; }
  double mid() const { return 0.5 * (lower + upper); }
};

namespace detail {
class PotentialImpl;
}

// The interaction {J_B} at inverse temperature beta, with certified control of
// the per-site tail strengths S_i^{>k} = sum over B containing i that escape
// the radius-k ball of |J_B|. All strength queries exclude beta.
class InteractionModel {
 public:
  static InteractionModel nearest_neighbor(int dimension, double coupling, double beta);
  static InteractionModel pairwise_exponential(int dimension, double amplitude, double decay,
                                               double beta);
  static InteractionModel pairwise_powerlaw(int dimension, double amplitude, double exponent,
                                            double beta);
  // Base terms are replicated over all translations when translation_invariant
  // is set; otherwise the finite list is the whole interaction.
  static InteractionModel explicit_family(int dimension, std::vector<Term> base_terms,
                                          bool translation_invariant, double beta);

  InteractionModel with_beta(double beta) const;

  int dimension() const;
  double beta() const { return beta_; }
  bool translation_invariant() const;
  // Largest escape radius when the interaction is finite range.
  std::optional<int> finite_range() const;

  // sum_{B : i in B} |J_B|
  double total_strength(const Site& i) const;
  // S_i^{>k}; tail_sum(i, 0) == total_strength(i) since every |B| >= 2
  // escapes the singleton ball.
  double tail_sum(const Site& i, int k) const;
  // w_i(k) = S_i^{>k-1} - S_i^{>k}, the absolute strength of shell k.
  double shell_abs_strength(const Site& i, int k) const;
  // Upper bound on the truncation error of tail_sum (0 when tails are exact).
  double tail_slack() const;

  // Partial sum and certified remainder of sum_k |B_i(k)| w_i(k) (Eq. cn1's
  // inner series). The remainder bound may be +inf when uncertifiable.
  double cn1_partial(const Site& i, int k_max) const;
  double cn1_tail_bound(const Site& i, int k_max) const;

  // Visit every B containing i whose escape radius is exactly k >= 1.
  void for_each_shell_term(const Site& i, int k, const TermVisitor& fn) const;
  // Visit every B meeting `volume` that fits in a radius-`radius` ball around
  // one of its member sites in the volume. Each B is visited once.
  void for_each_term_touching(const SiteSet& volume, int radius, const TermVisitor& fn) const;

  // Stable description of the interaction (used to fingerprint output files).
  std::string describe() const;

 private:
  InteractionModel(std::shared_ptr<const detail::PotentialImpl> impl, double beta);
  std::shared_ptr<const detail::PotentialImpl> impl_;
  double beta_;
};

// --- rate-decomposition ingredients -----------------------------------------

// M_i = 2 exp(beta * total_strength(i))
double big_m(const InteractionModel& m, const Site& i);

// Range distribution: lambda(0) = exp(-2 beta S^{>0});
// lambda(1) = exp(-beta S^{>1}) - exp(-2 beta S^{>0});
// lambda(k>1) = exp(-beta S^{>k}) - exp(-beta S^{>k-1}).
double lambda(const InteractionModel& m, const Site& i, int k);

// CDF alpha_i(k) = sum_{l<=k} lambda_i(l); equals exp(-beta S^{>k}) for k>=1.
double range_cdf(const InteractionModel& m, const Site& i, int k);

// Exact inverse-CDF sample of the range distribution, u in (0,1).
int sample_range(const InteractionModel& m, const Site& i, double u);

// --- conditions and constants ------------------------------------------------

struct GammaOptions {
  int truncation_k = -1;        // -1: grow automatically
  double target_slack = 1e-12;  // certification goal for the k-tail
};

// gamma = 1 - sup over `sites` of sum_{k>=1} |B_i(k)| lambda_i(k), bracketed
// by the certified truncation. Exact supremum for translation-invariant
// models evaluated at any single site.
Interval gamma_interval(const InteractionModel& m, const SiteSet& sites,
                        const GammaOptions& opts = {});

enum class CheckStatus { pass, fail, inconclusive };

std::string to_string(CheckStatus s);

struct ConditionEntry {
  std::string name;
  CheckStatus status = CheckStatus::inconclusive;
  double value = 0.0;  // computed lower value
  double upper = 0.0;  // certified upper value
  std::string note;
};

struct ConditionReport {
  ConditionEntry summability;   // Eq. B3: per-site strength finite
  ConditionEntry ball_series;   // Eq. cn1: ball-weighted shell series finite
  ConditionEntry termination;   // eq:condition2: sum |B(k)| lambda(k) < 1
  ConditionEntry contraction;   // main1: r = beta * sup strength < 1
  Interval gamma;
  double dobrushin_r = 0.0;
  bool all_pass() const;
};

ConditionReport check_conditions(const InteractionModel& m, const SiteSet& sites,
                                 const GammaOptions& opts = {});

struct BetaCriticalResult {
  double beta_c = 0.0;  // window top when no root was found
  bool found = false;
  double lhs_at_result = 0.0;
};

struct BetaCriticalOptions {
  double window_top = 10.0;
  int coarse_points = 1000;
  double relative_tol = 1e-9;
};

// Smallest beta where the betac1 left-hand side first reaches 1
// (translation-invariant models).
BetaCriticalResult beta_critical(const InteractionModel& m, const BetaCriticalOptions& opts = {});

// View of the per-site range distribution (all calls delegate to the free
// functions above; the model is immutable and shareable).
class RangeDistribution {
 public:
  RangeDistribution(const InteractionModel& m, Site i) : m_(m), i_(std::move(i)) {}
  double lambda(int k) const { return gibbs::lambda(m_, i_, k); }
  double cdf(int k) const { return range_cdf(m_, i_, k); }
  double big_m() const { return gibbs::big_m(m_, i_); }
  int sample(double u) const { return sample_range(m_, i_, u); }

 private:
  const InteractionModel& m_;
  Site i_;
};

}  // namespace gibbs
