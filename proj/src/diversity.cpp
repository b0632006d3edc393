#include "opdiv/diversity.hpp"

#include <cmath>

#include <nlohmann/json.hpp>

#include "opdiv/error.hpp"

namespace opdiv {

std::string_view to_string(Measure m) { return m == Measure::Simpson ? "simpson" : "shannon"; }

BinHistogram bin_opinions(std::span<const double> opinions, int R, double snap_tol) {
  if (R < 2) throw Error(ErrorCode::UnsupportedBinCount, "need at least 2 bins");
  BinHistogram h{R, std::vector<int>(R, 0), static_cast<int>(opinions.size())};
  for (double x : opinions) {
    if (!(x >= -snap_tol && x <= 1.0 + snap_tol)) {
      throw Error(ErrorCode::OpinionOutOfRange, "opinion " + std::to_string(x) + " outside [0,1]");
    }
    double scaled = x * R;
    double boundary = std::round(scaled);
    double index = std::abs(x - boundary / R) <= snap_tol ? boundary : std::floor(scaled);
    int bin = static_cast<int>(index);
    bin = bin < 0 ? 0 : (bin >= R ? R - 1 : bin);
    ++h.counts[bin];
  }
  return h;
}

double simpson_index(const BinHistogram& h) {
  if (h.n_f < 2) {
    throw Error(ErrorCode::TooFewFollowers, "Simpson index needs at least 2 opinions");
  }
  double same = 0.0;
  for (int c : h.counts) same += static_cast<double>(c) * (c - 1);
  return 1.0 - same / (static_cast<double>(h.n_f) * (h.n_f - 1));
}

double shannon_index(const BinHistogram& h) {
  if (h.n_f < 1) throw Error(ErrorCode::TooFewFollowers, "Shannon index needs an opinion");
  double entropy = 0.0;
  for (int c : h.counts) {
    if (c == 0) continue;
    double p = static_cast<double>(c) / h.n_f;
    entropy -= p * std::log(p);
  }
  return entropy;
}

double max_diversity(int n_f, int R, Measure m) {
  if (n_f < 2) throw Error(ErrorCode::TooFewFollowers, "bounds need n_f >= 2");
  if (R == n_f) return m == Measure::Simpson ? 1.0 : std::log(static_cast<double>(n_f));
  if (R != 2) {
    throw Error(ErrorCode::UnsupportedBinCount,
                "closed-form maximum exists only for R = 2 or R = n_f, got R = " + std::to_string(R));
  }
  BinHistogram even{2, {n_f / 2, n_f - n_f / 2}, n_f};
  return m == Measure::Simpson ? simpson_index(even) : shannon_index(even);
}

std::string to_json(const BinHistogram& h) {
  nlohmann::ordered_json j;
  j["R"] = h.R;
  j["n_f"] = h.n_f;
  j["counts"] = h.counts;
  return j.dump();
}

} // namespace opdiv
