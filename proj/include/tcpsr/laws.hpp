#pragma once

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "tcpsr/path.hpp"

namespace tcpsr {

/// Result of one of the closed-form send-rate laws. The laws always return a
/// number together with a validity verdict; callers that need the curve
/// beyond its range (plots, comparisons) can ignore `valid`.
struct LawResult {
  enum class Law { Sqrt, LinearUnsat, LinearSat };
  Law law = Law::Sqrt;
  double send_rate = 0.0;      // bit/s
  double w_eff = 0.0;          // packets per RTT
  bool valid = false;
  double validity_bound = 0.0; // the p_min or p_max checked against
};

inline const char* to_string(LawResult::Law l) {
  switch (l) {
    case LawResult::Law::Sqrt: return "sqrt";
    case LawResult::Law::LinearUnsat: return "linear";
    case LawResult::Law::LinearSat: return "linear-sat";
  }
  return "?";
}

namespace detail {
inline LawResult make_law_result(LawResult::Law law, const PathSpec& path,
                                 double w_eff, bool valid, double bound) {
  LawResult r;
  r.law = law;
  r.w_eff = std::max(0.0, w_eff);
  r.valid = valid && w_eff > 0.0;
  r.validity_bound = bound;
  r.send_rate = r.w_eff * path.packet_bits() / path.rtt;
  return r;
}
} // namespace detail

/// Square-root law: W_eff = sqrt(1.5/p), valid for p >= (8/3)/floor(beta)^2.
inline LawResult sqrt_law(const PathSpec& path, double p) {
  if (!(p > 0.0 && p < 1.0)) throw std::invalid_argument("p must lie in (0,1)");
  double bound = sqrt_law_p_min(path);
  return detail::make_law_result(LawResult::Law::Sqrt, path,
                                 std::sqrt(1.5 / p), p >= bound, bound);
}

/// Linear law for an unsaturated path:
/// W_eff = W_R [1 - (W_R/4)(1 + W_R/2) p], valid for p <= 2/W_R^2.
inline LawResult linear_law_unsat(const PathSpec& path, double p) {
  if (!(p > 0.0 && p < 1.0)) throw std::invalid_argument("p must lie in (0,1)");
  if (path.saturated) {
    throw std::invalid_argument(
        "path is saturated (r < 1): use linear_law_sat instead");
  }
  double wr = path.receiver_window;
  double w_eff = wr * (1.0 - wr / 4.0 * (1.0 + wr / 2.0) * p);
  double bound = linear_law_p_max_unsat(path);
  return detail::make_law_result(LawResult::Law::LinearUnsat, path, w_eff,
                                 p <= bound, bound);
}

/// K coefficient of the saturated linear law.
inline double linear_law_sat_k(const PathSpec& path) {
  double b = path.beta_floor;
  double h = std::floor(path.receiver_window / 2.0);
  return (b - h + 2.0) * path.beta - (b - h + 1.0) * (b + h + 2.0) / 2.0 - 1.0;
}

/// Linear law for a saturated path: SR = C(1 - Kp), W_eff = beta(1 - Kp).
/// Side conditions: W_R - floor(beta) > 3 and floor(W_R/2) < floor(beta)
/// (the link neither goes idle before the retransmission nor saturates on
/// fast recovery).
inline LawResult linear_law_sat(const PathSpec& path, double p) {
  if (!(p > 0.0 && p < 1.0)) throw std::invalid_argument("p must lie in (0,1)");
  if (!path.saturated) {
    throw std::invalid_argument("path is not saturated (r >= 1): use linear_law_unsat");
  }
  if (!(path.receiver_window - path.beta_floor > 3)) {
    throw std::invalid_argument(
        "saturated linear law requires W_R - floor(beta) > 3");
  }
  if (!(std::floor(path.receiver_window / 2.0) < path.beta_floor)) {
    throw std::invalid_argument(
        "saturated linear law requires floor(W_R/2) < floor(beta)");
  }
  double k = linear_law_sat_k(path);
  double w_eff = path.beta * (1.0 - k * p);
  double bound = linear_law_p_max_sat(path);
  return detail::make_law_result(LawResult::Law::LinearSat, path, w_eff,
                                 p <= bound, bound);
}

} // namespace tcpsr
