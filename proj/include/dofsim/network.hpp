#pragma once

#include <cstdint>
#include <vector>

#include "dofsim/rng.hpp"

namespace dofsim {

// K-user linear network: transmitter j reaches receivers j and j+1, so the
// potential links are (i,i) for i in [K] and (i,i-1) for i in {2..K}.
// Flat link index, stable across the whole artifact:
//   link (i,i)   -> 2(i-1)
//   link (i,i-1) -> 2i-3
// which is exactly ascending scan order (1,1),(2,1),(2,2),(3,2),(3,3),...
struct NetworkTopology {
  int K = 1;
  bool last_tx_deactivated = false;

  int link_count() const { return 2 * K - 1; }
  static int direct_index(int i) { return 2 * (i - 1); }
  static int cross_index(int i) { return 2 * i - 3; }
};

// One block realization: which potential links survived erasure.
// If the topology deactivates the last transmitter, every consumer sees its
// links as absent; the accessors below apply that rule.
class NetworkRealization {
 public:
  NetworkRealization() = default;
  NetworkRealization(NetworkTopology topo, std::vector<uint8_t> present)
      : topo_(topo), present_(std::move(present)) {}

  const NetworkTopology& topology() const { return topo_; }
  int K() const { return topo_.K; }

  // H_{i,i} != 0
  bool direct(int i) const {
    if (topo_.last_tx_deactivated && i == topo_.K) return false;
    return present_[NetworkTopology::direct_index(i)] != 0;
  }
  // H_{i,i-1} != 0, valid for i >= 2
  bool cross(int i) const { return present_[NetworkTopology::cross_index(i)] != 0; }

  // Checked accessor; (rx,tx) outside the potential link set is a
  // programming error.
  bool link_present(int rx, int tx) const;

  // Tolerant variant: false for any pair outside the potential link set.
  bool link_or_false(int rx, int tx) const {
    if (rx < 1 || rx > topo_.K || tx < 1 || tx > topo_.K) return false;
    if (tx != rx && tx != rx - 1) return false;
    return tx == rx ? direct(rx) : cross(rx);
  }

  const std::vector<uint8_t>& raw_bits() const { return present_; }

 private:
  NetworkTopology topo_;
  std::vector<uint8_t> present_;
};

// Exact integer channel values; erased links are exactly zero.
struct ChannelCoefficients {
  NetworkTopology topo;
  std::vector<int64_t> value;  // per flat link index

  int64_t direct(int i) const {
    if (topo.last_tx_deactivated && i == topo.K) return 0;
    return value[NetworkTopology::direct_index(i)];
  }
  int64_t cross(int i) const { return value[NetworkTopology::cross_index(i)]; }
};

// Each potential link is erased independently with probability p.
// Deterministic in (topology, p, seed); distinct seeds are independent
// streams. Erasure probability outside [0,1] is rejected by config parsing
// before this is reached.
NetworkRealization sample_realization(const NetworkTopology& topo, double p, uint64_t seed);

// Every present link gets an independent nonzero value, which is in generic
// position with overwhelming probability. Deterministic per seed.
ChannelCoefficients sample_coefficients(const NetworkRealization& r, uint64_t seed);

}  // namespace dofsim
