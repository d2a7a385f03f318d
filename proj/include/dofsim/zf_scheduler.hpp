#pragma once

#include <string>
#include <vector>

#include "dofsim/assignment.hpp"
#include "dofsim/network.hpp"
#include "dofsim/partition.hpp"
#include "dofsim/rational.hpp"
#include "dofsim/rng.hpp"

namespace dofsim {

// Local view of an atomic subnetwork: users 1..N, transmitters 0..N.
// Local index x maps to global offset + x (offset = first_user - 1). Every
// link interior to the block is present; transmitters 0 and N exist exactly
// when the flags say so, and a transmit-set mention of a boundary transmitter
// implies its link. `sets` points at a 1-based array indexed by GLOBAL user.
struct SubnetView {
  int N = 0;
  bool tx0_in = false;
  bool txN_in = false;
  int offset = 0;
  const TransmitSet* sets = nullptr;

  // msg, tx in local indices
  bool in_tset(int msg, int tx) const {
    if (tx < 0 || tx > N) return false;
    if (tx == 0 && !tx0_in) return false;
    if (tx == N && !txN_in) return false;
    return sets[offset + msg].contains(offset + tx);
  }
};

SubnetView make_view(const AtomicSubnetwork& sub, const ReducedAssignment& red);

// Delivery decisions b_{i,j}, j in {i-2, i-1, i, i+1} (local indices).
// b_{i,i-1} / b_{i,i} are data beams; b_{i,i-2} / b_{i,i+1} cancel the
// interference the data beam causes at receiver i-1 / i+1.
struct Schedule {
  int N = 0;
  std::vector<uint8_t> flags;  // 4 per message

  void reset(int n) {
    N = n;
    flags.assign(4 * (n + 1), 0);
  }
  bool get(int msg, int tx) const {
    const int c = tx - (msg - 2);
    if (c < 0 || c > 3) return false;
    return flags[4 * msg + c] != 0;
  }
  void set(int msg, int tx) { flags[4 * msg + (tx - (msg - 2))] = 1; }
  bool delivered(int msg) const { return get(msg, msg - 1) || get(msg, msg); }
  int delivered_count() const {
    int d = 0;
    for (int i = 1; i <= N; ++i) d += delivered(i) ? 1 : 0;
    return d;
  }
  std::string dump() const;  // stable text rows for golden tests
};

// Single greedy forward pass deciding which messages are sent and from
// where. Consumes only link-presence and availability booleans; channel
// values only enter the beam construction below.
void schedule_atomic(const SubnetView& view, Schedule& out);

// Channel values of one block in local indexing. cross[i] = H_{i,i-1}
// (cross[1] is the boundary link), direct[i] = H_{i,i}; absent links are 0.
struct SubnetCoefficients {
  int N = 0;
  std::vector<int64_t> cross, direct;  // 1-based

  static SubnetCoefficients from_global(const SubnetView& v, const ChannelCoefficients& c);
  static SubnetCoefficients random(const SubnetView& v, uint64_t seed);
};

// Per-transmitter composition of the transmit signals: data beams with unit
// coefficient plus the cancellation terms of the construction pass.
struct BeamPlan {
  struct Term {
    int message;
    Rat coef;
  };
  std::vector<std::vector<Term>> per_tx;  // index 0..N
};

BeamPlan build_beams(const Schedule& s, const SubnetView& v, const SubnetCoefficients& c);

// Recomputes what every active receiver observes: its own message must have a
// nonzero net coefficient and every other message exactly zero.
bool beams_interference_free(const BeamPlan& plan, const Schedule& s, const SubnetView& v,
                             const SubnetCoefficients& c, std::string* why = nullptr);

// Topology-reduce, split into atomic blocks, run the greedy pass on each,
// total the deliveries. Requires cooperation order <= 2.
int zf_dof(const NetworkRealization& r, const MessageAssignment& a);

// Workspace variant used by the Monte Carlo engine (no allocation per call).
struct ZfWorkspace {
  ReducedAssignment red;
  Partition parts;
  Schedule sched;
};
int zf_dof(const NetworkRealization& r, const MessageAssignment& a, ZfWorkspace& ws);

}  // namespace dofsim
