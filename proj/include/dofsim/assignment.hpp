#pragma once

#include <cstdint>
#include <initializer_list>
#include <string>
#include <utility>
#include <vector>

#include "dofsim/network.hpp"
#include "dofsim/rational.hpp"

namespace dofsim {

// Transmit set of one message. Anything a cooperation-order-2 scheme can use
// lies in {i-2, i-1, i, i+1}, so four slots cover every supported input;
// larger explicit sets are rejected at parse time.
struct TransmitSet {
  uint8_t n = 0;
  int32_t v[4] = {0, 0, 0, 0};

  void add(int t) {
    if (contains(t)) return;
    v[n++] = t;
    // keep sorted
    for (int k = n - 1; k > 0 && v[k] < v[k - 1]; --k) std::swap(v[k], v[k - 1]);
  }
  bool contains(int t) const {
    for (int k = 0; k < n; ++k)
      if (v[k] == t) return true;
    return false;
  }
  int size() const { return n; }
  bool empty() const { return n == 0; }
  const int32_t* begin() const { return v; }
  const int32_t* end() const { return v + n; }
  bool operator==(const TransmitSet& o) const {
    if (n != o.n) return false;
    for (int k = 0; k < n; ++k)
      if (v[k] != o.v[k]) return false;
    return true;
  }
};

TransmitSet make_set(std::initializer_list<int> ts);

struct MessageAssignment {
  int K = 0;
  std::vector<TransmitSet> sets;  // 1-based, sets[1..K]

  const TransmitSet& tset(int i) const { return sets[i]; }
  int cooperation_order() const;
};

// Periodic per-transmitter message-count pattern; sum(S) must equal len(S).
struct TernaryString {
  std::vector<int> s;

  int n() const { return static_cast<int>(s.size()); }
};

// Which canonical cell-association form a string has.
enum class TernaryForm { Identity, TwoFirst, TwoLast, TwoMiddle, Other };
TernaryForm classify_ternary(const TernaryString& S);

// Tile S over the first n*floor(K/n) transmitters (1-based; residue 0 maps to
// S_n), pad with ones, then rebuild the transmit sets: in each block that ends
// at a zero-count transmitter x, the unique y with count 2 gives T_i = {i} for
// i <= y and T_i = {i-1} for y < i <= x; a trailing all-ones block assigns
// each message to its own transmitter. Throws std::invalid_argument for
// strings this reconstruction does not apply to.
MessageAssignment expand_ternary(const TernaryString& S, int K);

// N_j = |{i : j in T_i}|; inverse of expand_ternary for valid strings.
std::vector<int> counts_from_sets(const MessageAssignment& a);

// Cooperative assignment with transmit sets {i-1,i} / {i-2,i-1} / {i,i+1}
// selected by i mod 5, clipped to [K].
MessageAssignment theorem4_assignment(int K);

// Every message at both transmitters that may reach its receiver:
// T_i = {i-1, i} ∩ [K].
MessageAssignment theorem5_assignment(int K);

// Simulation family: a fraction f of messages is assigned forward for
// interference cancellation, the rest to both reachable transmitters for
// coverage. Index 0 in T_1 denotes the (absent) transmitter preceding the
// network and is dropped during topology reduction. Overlapping branch
// conditions resolve first-match-wins in the listed order. Requires K >= 3.
MessageAssignment fraction_assignment(Fraction f, int K);

// Reduced view of an assignment for one realization: users whose messages are
// not enabled are flagged off (empty set), and every transmit-set element that
// cannot help deliver or cancel is removed.
struct ReducedAssignment {
  int K = 0;
  std::vector<TransmitSet> sets;   // 1-based
  std::vector<uint8_t> enabled;    // 1-based

  const TransmitSet& tset(int i) const { return sets[i]; }
};

void topology_reduce(const MessageAssignment& a, const NetworkRealization& r,
                     ReducedAssignment& out);

// Convenience form returning a MessageAssignment (disabled users keep an
// empty transmit set).
MessageAssignment topology_reduce(const MessageAssignment& a, const NetworkRealization& r);

}  // namespace dofsim
