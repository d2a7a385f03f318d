#pragma once

#include <array>
#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "dofsim/assignment.hpp"
#include "dofsim/network.hpp"
#include "dofsim/zf_scheduler.hpp"

namespace dofsim {

// Ground-truth zero-forcing DoF of one block: maximize |D| over delivered
// sets such that every j in D admits a beam supported on its transmit set
// with zero net coefficient at every other active receiver that hears it and
// a nonzero coefficient at receiver j. Feasibility is checked per message by
// exact integer rank computation (it decomposes because beams are
// message-separable). Guarded to N <= 12.
int brute_force_zf(const SubnetView& v, const SubnetCoefficients& c);

// Best interference-avoidance schedule when every message sits on exactly one
// transmitter: dynamic program over users (conflicts only couple neighbours).
int tdma_optimal(const NetworkRealization& r, const MessageAssignment& a);

// Reference subset search for tdma_optimal, exponential in K.
int tdma_optimal_bruteforce(const NetworkRealization& r, const MessageAssignment& a);

// The three explicit cell-association schemes with their priority rules and
// the block-parity exceptions. `which` selects the strategy:
//   1 -> string (1), 2 -> string (2,1,0), 3 -> string (1,2,1,0).
// The assignment must match the named strategy exactly (for which=2,3 this
// requires K to be a multiple of the string length).
int lemma_scheme_dof(const NetworkRealization& r, const MessageAssignment& a, int which);

// Receiver set A plus the order in which the remaining transmit signals are
// recovered from (Y_A, X_{U_A}); |A| upper-bounds the block's sum DoF.
struct ConverseCertificate {
  std::vector<int> A;
  struct Step {
    int tx;      // local transmitter recovered
    int via_rx;  // receiver in A whose signal is consumed
  };
  std::vector<Step> order;
};

// Case analysis on boundary membership and message availability for blocks of
// size five.
ConverseCertificate converse_bound_n5(const SubnetView& v);

// Replays the certificate: each step must solve exactly one unknown transmit
// signal from one unused received signal plus already-known signals, and at
// the end every transmitter of the block must be known.
bool verify_certificate(const ConverseCertificate& cert, const SubnetView& v);

// ---------------------------------------------------------------------------
// Enumeration / randomized validation harness

// Self-contained local block instance (owns its transmit sets).
struct LocalInstance {
  int N = 0;
  bool tx0_in = false;
  bool txN_in = false;
  std::vector<TransmitSet> sets;  // 1-based

  SubnetView view() const {
    SubnetView v;
    v.N = N;
    v.tx0_in = tx0_in;
    v.txN_in = txN_in;
    v.offset = 0;
    v.sets = sets.data();
    return v;
  }
  std::string describe() const;
  LocalInstance mirrored() const;  // tx j -> N-j, message i -> N+1-i
};

// Every irreducible assignment of a size-N block (transmit sets are runs of
// at most two consecutive transmitters containing one that reaches the
// receiver; every interior transmitter carries a message). Boundary
// membership follows from which transmitters are mentioned.
void enumerate_local_instances(int N, const std::function<void(const LocalInstance&)>& fn);

// Same, but restricted to the domain of the size-five converse: every
// message at exactly two transmitters.
void enumerate_local_instances_pairs(int N, const std::function<void(const LocalInstance&)>& fn);

LocalInstance random_local_instance(int N, SplitMix64& rng);

struct OracleReport {
  long long instances = 0;
  long long mismatches = 0;
  std::string first_counterexample;
  std::array<bool, 4> boundary_seen{false, false, false, false};
  // checked/failed counts per (block size, boundary case); boundary index is
  // 2*tx0_in + txN_in.
  std::array<std::array<long long, 4>, 13> checked{};
  std::array<std::array<long long, 4>, 13> failed{};

  bool ok() const { return mismatches == 0; }
  std::string matrix() const;  // one row per block size, PASS/FAIL per case
};

// Exhaustive greedy == brute-force == |A| sweep over N in {1..max_n} (the
// converse leg at N = 5 only), including certificate replay and the
// mirror-symmetry cross-check.
OracleReport oracle_sandwich_exhaustive(int max_n, uint64_t coef_seed);

// Randomized greedy == brute-force sweep over blocks of size <= max_n.
OracleReport oracle_greedy_random(int max_n, long long count, uint64_t seed);

}  // namespace dofsim
