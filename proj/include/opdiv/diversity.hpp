#ifndef OPDIV_DIVERSITY_HPP_
#define OPDIV_DIVERSITY_HPP_

#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "opdiv/dynamics.hpp"

namespace opdiv {

inline constexpr double kDefaultSnapTolerance = 1e-9;

/// Counts of opinions per bin b_1..b_R; counts[i] is bin i+1.
struct BinHistogram {
  int R = 0;
  std::vector<int> counts;
  int n_f = 0;
};

struct DiversityScore {
  double simpson = 0.0;
  double shannon = 0.0;
};

enum class Measure { Simpson, Shannon };
std::string_view to_string(Measure m);

/**
 * Bins b_i = [(i-1)/R, i/R) for i < R and b_R = [(R-1)/R, 1].
 *
 * An opinion within `snap_tol` of a boundary i/R is moved onto it first, so
 * solver rounding cannot push i/R into bin i.
 */
BinHistogram bin_opinions(std::span<const double> opinions, int R,
                          double snap_tol = kDefaultSnapTolerance);
inline BinHistogram bin_opinions(const OpinionVector& x, int R,
                                 double snap_tol = kDefaultSnapTolerance) {
  return bin_opinions(std::span<const double>(x.values), R, snap_tol);
}

// 1 - sum c_i (c_i - 1) / (n_f (n_f - 1)). Throws TooFewFollowers when n_f < 2.
double simpson_index(const BinHistogram& h);

// -sum p_i ln p_i with p_i = c_i / n_f and 0 ln 0 = 0.
double shannon_index(const BinHistogram& h);

inline DiversityScore score(const BinHistogram& h) { return {simpson_index(h), shannon_index(h)}; }

// Largest attainable index for R = n_f or R = 2; other R throw UnsupportedBinCount.
double max_diversity(int n_f, int R, Measure m);

// {"R":..,"n_f":..,"counts":[..]}
std::string to_json(const BinHistogram& h);

} // namespace opdiv

#endif // OPDIV_DIVERSITY_HPP_
