#include "dofsim/partition.hpp"

#include <algorithm>
#include <sstream>

namespace dofsim {

namespace {

// Does transmitter t carry a message for a user in [s..e]?
bool carries_for(const ReducedAssignment& red, int t, int s, int e) {
  const int lo = std::max({s, 1, t - 4});
  const int hi = std::min({e, red.K, t + 4});
  for (int m = lo; m <= hi; ++m)
    if (red.sets[m].contains(t)) return true;
  return false;
}

}  // namespace

void partition_atomic(const NetworkRealization& r, const ReducedAssignment& red,
                      Partition& out) {
  out.subnets.clear();
  out.inactive_users.clear();
  const int K = r.K();
  for (int i = 1; i <= K; ++i)
    if (!red.enabled[i]) out.inactive_users.push_back(i);

  auto emit = [&](int s, int e) {
    AtomicSubnetwork sub;
    sub.first_user = s;
    sub.last_user = e;
    sub.tx0_in = s - 1 >= 1 && r.cross(s) && carries_for(red, s - 1, s, e);
    sub.txN_in = r.direct(e) && carries_for(red, e, s, e);
    out.subnets.push_back(sub);
  };

  // Resolve one candidate block; splits keep the leftmost piece on top so
  // emission stays ordered.
  std::vector<std::pair<int, int>> stack;
  auto resolve = [&](int s0, int e0) {
    stack.clear();
    stack.emplace_back(s0, e0);
    while (!stack.empty()) {
      auto [s, e] = stack.back();
      stack.pop_back();
      int split_at = 0;
      for (int t = s; t < e; ++t) {
        if (!carries_for(red, t, s, e)) {
          split_at = t;
          break;
        }
      }
      if (split_at == 0) {
        emit(s, e);
      } else {
        stack.emplace_back(split_at + 1, e);
        stack.emplace_back(s, split_at);
      }
    }
  };

  int i = 1;
  while (i <= K) {
    if (!red.enabled[i]) {
      ++i;
      continue;
    }
    int j = i;
    while (j + 1 <= K && red.enabled[j + 1] && r.direct(j) && r.cross(j + 1)) ++j;
    resolve(i, j);
    i = j + 1;
  }
}

Partition partition_atomic(const NetworkRealization& r, const MessageAssignment& a) {
  ReducedAssignment red;
  topology_reduce(a, r, red);
  Partition out;
  partition_atomic(r, red, out);
  return out;
}

namespace {

struct BlockSpan {
  int s, e;
};

// Present link from transmitter t to receiver rx?
bool tx_reaches(const NetworkRealization& r, int t, int rx) {
  if (rx != t && rx != t + 1) return false;
  return r.link_or_false(rx, t);
}

// Would splitting [s..e] into [s..m-1] | [m..e] leave the two pieces
// non-interfering? A transmitter carrying a message of one piece must not
// reach a receiver of the other.
bool split_non_interfering(const NetworkRealization& r, const ReducedAssignment& red, int s,
                           int m, int e) {
  for (int x = s; x <= e; ++x) {
    const bool left_msg = x < m;
    for (int t : red.sets[x]) {
      const int lo = left_msg ? m : s;
      const int hi = left_msg ? e : m - 1;
      for (int rx = std::max(lo, t); rx <= std::min(hi, t + 1); ++rx)
        if (tx_reaches(r, t, rx)) return false;
    }
  }
  return true;
}

}  // namespace

bool verify_partition(const Partition& parts, const NetworkRealization& r,
                      const MessageAssignment& a, std::string* why) {
  auto fail = [&](const std::string& msg) {
    if (why) *why = msg;
    return false;
  };
  ReducedAssignment red;
  topology_reduce(a, r, red);
  const int K = r.K();

  // Coverage: blocks are ordered, disjoint, and cover exactly the enabled
  // users; inactive_users is the complement.
  std::vector<uint8_t> in_block(K + 1, 0);
  int prev_end = 0;
  for (const auto& sub : parts.subnets) {
    if (sub.first_user <= prev_end || sub.last_user < sub.first_user || sub.last_user > K)
      return fail("blocks not ordered/disjoint");
    for (int u = sub.first_user; u <= sub.last_user; ++u) {
      if (!red.enabled[u]) return fail("block contains a user with no enabled message");
      in_block[u] = 1;
    }
    prev_end = sub.last_user;
  }
  for (int u : parts.inactive_users) {
    if (u < 1 || u > K || red.enabled[u]) return fail("inactive list names an enabled user");
    if (in_block[u]) return fail("user both inactive and in a block");
    in_block[u] = 1;
  }
  for (int u = 1; u <= K; ++u)
    if (!in_block[u]) return fail("user neither in a block nor reported inactive");

  for (const auto& sub : parts.subnets) {
    const int s = sub.first_user, e = sub.last_user;

    // Membership flags match their definition.
    const bool tx0 = s - 1 >= 1 && r.cross(s) && carries_for(red, s - 1, s, e);
    const bool txN = r.direct(e) && carries_for(red, e, s, e);
    if (tx0 != sub.tx0_in || txN != sub.txN_in) return fail("membership flags wrong");

    // Every interior transmitter connected to a block receiver carries a
    // message for the block.
    for (int t = s; t <= e - 1; ++t) {
      const bool connected = r.link_or_false(t, t) || r.link_or_false(t + 1, t);
      if (connected && !carries_for(red, t, s, e))
        return fail("connected transmitter carries nothing for its block");
    }

    // Relevant links of carrying transmitters are present.
    for (int t = sub.tx_first(); t <= sub.tx_last(); ++t) {
      if (!carries_for(red, t, s, e)) continue;
      for (int rx = std::max(s, t); rx <= std::min(e, t + 1); ++rx)
        if (!r.link_or_false(rx, t)) return fail("erased link inside a block");
    }

    // Minimality: no internal split point leaves both pieces non-interfering.
    for (int m = s + 1; m <= e; ++m)
      if (split_non_interfering(r, red, s, m, e)) return fail("block is splittable");
  }

  // No transmitter carrying a message of one block reaches a receiver of
  // another block.
  std::vector<int> block_of(K + 1, -1);
  for (size_t bi = 0; bi < parts.subnets.size(); ++bi)
    for (int u = parts.subnets[bi].first_user; u <= parts.subnets[bi].last_user; ++u)
      block_of[u] = static_cast<int>(bi);
  for (size_t bi = 0; bi < parts.subnets.size(); ++bi) {
    const auto& sub = parts.subnets[bi];
    for (int x = sub.first_user; x <= sub.last_user; ++x) {
      for (int t : red.sets[x]) {
        for (int rx = t; rx <= t + 1; ++rx) {
          if (rx < 1 || rx > K || !tx_reaches(r, t, rx)) continue;
          if (block_of[rx] >= 0 && block_of[rx] != static_cast<int>(bi))
            return fail("inter-block interference");
        }
      }
    }
  }
  return true;
}

std::string partition_dump(const Partition& parts) {
  std::ostringstream os;
  for (const auto& sub : parts.subnets) {
    os << "users=" << sub.first_user << ".." << sub.last_user << " txs=" << sub.tx_first()
       << ".." << sub.tx_last() << "\n";
  }
  return os.str();
}

}  // namespace dofsim
