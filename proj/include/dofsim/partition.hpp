#pragma once

#include <string>
#include <vector>

#include "dofsim/assignment.hpp"
#include "dofsim/network.hpp"

namespace dofsim {

// Contiguous user block scheduled in isolation. A transmitter belongs to the
// block when it is connected to one of its receivers and carries one of its
// messages; the preceding transmitter is exposed as local index 0.
struct AtomicSubnetwork {
  int first_user = 0;
  int last_user = 0;
  bool tx0_in = false;  // transmitter first_user-1 belongs to the block
  bool txN_in = false;  // transmitter last_user belongs to the block

  int size() const { return last_user - first_user + 1; }
  int tx_first() const { return tx0_in ? first_user - 1 : first_user; }
  int tx_last() const { return txN_in ? last_user : last_user - 1; }
};

struct Partition {
  std::vector<AtomicSubnetwork> subnets;
  std::vector<int> inactive_users;  // users whose messages are not enabled
};

// Three-phase split of a realization under a reduced assignment:
//  (1) group maximal runs of consecutive non-erased links, scanning
//      (1,1),(2,1),(2,2),(3,2),... in ascending flat order;
//  (2) within a group, runs of receivers with enabled messages form
//      candidate blocks;
//  (3) split any block at a transmitter carrying no message for it, until
//      every connected transmitter carries one.
void partition_atomic(const NetworkRealization& r, const ReducedAssignment& red,
                      Partition& out);

Partition partition_atomic(const NetworkRealization& r, const MessageAssignment& a);

// Direct definition check of a partition: blocks are disjoint, ordered, cover
// exactly the enabled users, satisfy the atomic-block invariants, no
// transmitter carrying a message of one block reaches a receiver of another,
// and no block can be split again without breaking those properties.
// On failure, *why (if given) names the first violated condition.
bool verify_partition(const Partition& parts, const NetworkRealization& r,
                      const MessageAssignment& a, std::string* why = nullptr);

// Stable debug format, one line per block: "users=i..j txs=a..b".
std::string partition_dump(const Partition& parts);

}  // namespace dofsim
