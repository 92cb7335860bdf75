#pragma once

#include <cmath>
#include <stdexcept>
#include <string>

namespace tcpsr {

inline void require_positive(double v, const char* field) {
  if (!(v > 0.0)) {
    throw std::invalid_argument(std::string(field) + " must be strictly positive");
  }
}

/// Network path description plus the per-connection constants derived from it.
/// Rates are in bit/s, sizes in bytes, times in seconds.
struct PathSpec {
  double access_capacity = 0.0;     // C1
  double bottleneck_capacity = 0.0; // C
  double packet_bytes = 0.0;        // P, data payload used for delta
  double ack_bytes = 0.0;           // a, enters the RTT only
  double prop_delay = 0.0;          // D, round-trip propagation
  int receiver_window = 0;          // W_R, packets

  double delta1 = 0.0; // P/C1
  double delta = 0.0;  // P/C
  double rtt = 0.0;    // D + (P+a)(1/C1 + 1/C)
  double beta = 0.0;   // RTT/delta
  int beta_floor = 0;
  double ratio = 0.0;  // floor(beta)/W_R
  bool saturated = false;
  int queue = 0;       // W_R - floor(beta) + 1, defined when saturated

  double packet_bits() const { return packet_bytes * 8.0; }

  /// Bottleneck capacity expressed as a window, i.e. W such that W*P/RTT = C.
  double capacity_window() const { return beta; }
};

namespace detail {

inline PathSpec finish_path(PathSpec p) {
  require_positive(p.access_capacity, "access_capacity");
  require_positive(p.bottleneck_capacity, "bottleneck_capacity");
  require_positive(p.packet_bytes, "packet_bytes");
  require_positive(p.ack_bytes, "ack_bytes");
  require_positive(p.prop_delay, "prop_delay");
  if (p.receiver_window < 2) {
    throw std::invalid_argument("receiver_window must be at least 2");
  }
  p.delta1 = p.packet_bytes * 8.0 / p.access_capacity;
  p.delta = p.packet_bytes * 8.0 / p.bottleneck_capacity;
  p.rtt = p.prop_delay + (p.packet_bytes + p.ack_bytes) * 8.0 *
                             (1.0 / p.access_capacity + 1.0 / p.bottleneck_capacity);
  p.beta = p.rtt / p.delta;
  p.beta_floor = static_cast<int>(std::floor(p.beta));
  p.ratio = static_cast<double>(p.beta_floor) / p.receiver_window;
  p.saturated = p.ratio < 1.0;
  p.queue = p.saturated ? p.receiver_window - p.beta_floor + 1 : 0;
  return p;
}

} // namespace detail

/// Build a PathSpec from raw capacities, sizes, the round-trip propagation
/// delay and the receiver window. The RTT follows from the inputs.
inline PathSpec derive_path(double access_capacity, double bottleneck_capacity,
                            double packet_bytes, double ack_bytes,
                            double prop_delay, int receiver_window) {
  PathSpec p;
  p.access_capacity = access_capacity;
  p.bottleneck_capacity = bottleneck_capacity;
  p.packet_bytes = packet_bytes;
  p.ack_bytes = ack_bytes;
  p.prop_delay = prop_delay;
  p.receiver_window = receiver_window;
  return detail::finish_path(p);
}

/// Build a PathSpec treating the RTT as the primary input; the propagation
/// delay is back-solved so the RTT identity holds exactly.
inline PathSpec derive_path_from_rtt(double access_capacity,
                                     double bottleneck_capacity,
                                     double packet_bytes, double ack_bytes,
                                     double rtt, int receiver_window) {
  require_positive(access_capacity, "access_capacity");
  require_positive(bottleneck_capacity, "bottleneck_capacity");
  require_positive(packet_bytes, "packet_bytes");
  require_positive(ack_bytes, "ack_bytes");
  require_positive(rtt, "rtt");
  double serialization = (packet_bytes + ack_bytes) * 8.0 *
                         (1.0 / access_capacity + 1.0 / bottleneck_capacity);
  double prop = rtt - serialization;
  if (!(prop > 0.0)) {
    throw std::invalid_argument(
        "rtt too small: serialization alone exceeds the requested round trip");
  }
  return derive_path(access_capacity, bottleneck_capacity, packet_bytes,
                     ack_bytes, prop, receiver_window);
}

/// Applicability regimes for the closed-form send-rate laws.
struct Regime {
  enum class Kind { Linear, SquareRoot, Timeout, Overlap, Unmodeled };
  Kind kind = Kind::Unmodeled;
  double p_min = 0.0; // square-root law lower bound, (8/3)/floor(beta)^2
  double p_max = 0.0; // linear law upper bound
};

inline const char* to_string(Regime::Kind k) {
  switch (k) {
    case Regime::Kind::Linear: return "linear";
    case Regime::Kind::SquareRoot: return "sqrt";
    case Regime::Kind::Timeout: return "timeout";
    case Regime::Kind::Overlap: return "overlap(linear)";
    case Regime::Kind::Unmodeled: return "unmodeled";
  }
  return "?";
}

/// Timeouts dominate above this drop probability (about 3% of loss events).
inline constexpr double kTimeoutRegimeBoundary = 0.02;

inline double sqrt_law_p_min(const PathSpec& path) {
  return (8.0 / 3.0) / (static_cast<double>(path.beta_floor) * path.beta_floor);
}

inline double linear_law_p_max_unsat(const PathSpec& path) {
  return 2.0 / (static_cast<double>(path.receiver_window) * path.receiver_window);
}

/// 1/p_max for the saturated linear law. Evaluated as printed; the side
/// conditions of the law itself are checked by linear_law_sat.
inline double linear_law_p_max_sat(const PathSpec& path) {
  double b = path.beta_floor;
  double h = std::floor(path.receiver_window / 2.0);
  double wr = path.receiver_window;
  double inv = (b - h + 2.0) * path.beta + wr + (wr - b + 1.0) * (wr + b) / 2.0 - 1.0;
  return 1.0 / inv;
}

/// Classify which closed-form law applies at drop probability p.
/// When both the linear and square-root conditions hold the result is
/// Overlap; the linear law is the one to apply there.
inline Regime classify_regime(const PathSpec& path, double p) {
  if (!(p > 0.0 && p < 1.0)) {
    throw std::invalid_argument("p must lie in (0,1)");
  }
  Regime r;
  r.p_min = sqrt_law_p_min(path);
  r.p_max = path.saturated ? linear_law_p_max_sat(path) : linear_law_p_max_unsat(path);
  if (p > kTimeoutRegimeBoundary) {
    r.kind = Regime::Kind::Timeout;
    return r;
  }
  bool sqrt_ok = p >= r.p_min;
  bool lin_ok = p <= r.p_max;
  if (sqrt_ok && lin_ok) {
    r.kind = Regime::Kind::Overlap;
  } else if (lin_ok) {
    r.kind = Regime::Kind::Linear;
  } else if (sqrt_ok) {
    r.kind = Regime::Kind::SquareRoot;
  } else {
    r.kind = Regime::Kind::Unmodeled;
  }
  return r;
}

} // namespace tcpsr
