#include <stdexcept>
#include <vector>

#include "doctest.h"
#include "dofsim/assignment.hpp"
#include "dofsim/rng.hpp"
#include "dofsim/zf_scheduler.hpp"

using namespace dofsim;

namespace {

MessageAssignment from_lists(std::vector<std::vector<int>> lists) {
  MessageAssignment a;
  a.K = static_cast<int>(lists.size());
  a.sets.assign(a.K + 1, TransmitSet{});
  for (int i = 1; i <= a.K; ++i)
    for (int t : lists[i - 1]) a.sets[i].add(t);
  return a;
}

bool same_sets(const MessageAssignment& a, const MessageAssignment& b) {
  if (a.K != b.K) return false;
  for (int i = 1; i <= a.K; ++i)
    if (!(a.sets[i] == b.sets[i])) return false;
  return true;
}

// The count sequence a string expands to, computed independently of
// expand_ternary.
std::vector<int> tiled_counts(const TernaryString& S, int K) {
  std::vector<int> N(K + 1, 1);
  N[0] = 0;
  const int n = S.n();
  for (int i = 1; i <= n * (K / n); ++i) N[i] = S.s[(i - 1) % n];
  return N;
}

}  // namespace

TEST_CASE("identity string") {
  const auto a = expand_ternary(TernaryString{{1}}, 4);
  CHECK(same_sets(a, from_lists({{1}, {2}, {3}, {4}})));
  CHECK(a.cooperation_order() == 1);
}

TEST_CASE("string (2,1,0) over six users") {
  const auto a = expand_ternary(TernaryString{{2, 1, 0}}, 6);
  CHECK(same_sets(a, from_lists({{1}, {1}, {2}, {4}, {4}, {5}})));
}

TEST_CASE("string (1,2,1,0) over eight users") {
  const auto a = expand_ternary(TernaryString{{1, 2, 1, 0}}, 8);
  CHECK(same_sets(a, from_lists({{1}, {2}, {2}, {3}, {5}, {6}, {6}, {7}})));
}

TEST_CASE("invalid strings are rejected") {
  CHECK_THROWS_AS(expand_ternary(TernaryString{{2, 1}}, 6), std::invalid_argument);
  CHECK_THROWS_AS(expand_ternary(TernaryString{{2, 2, 0, 0}}, 8), std::invalid_argument);
  CHECK_THROWS_AS(expand_ternary(TernaryString{{1, 1, 0}}, 6), std::invalid_argument);
  CHECK_THROWS_AS(expand_ternary(TernaryString{{2, 1, 0}}, 2), std::invalid_argument);
}

TEST_CASE("counts_from_sets basics") {
  CHECK(counts_from_sets(from_lists({{1}, {2}})) == std::vector<int>{0, 1, 1});
  CHECK(counts_from_sets(from_lists({{1}, {1}, {2}})) == std::vector<int>{0, 2, 1, 0});
}

TEST_CASE("string reconstruction round-trips for all four forms") {
  std::vector<TernaryString> forms;
  forms.push_back(TernaryString{{1}});
  for (int ones = 0; ones <= 4; ++ones) {
    TernaryString two_first, two_last;
    two_first.s.push_back(2);
    for (int k = 0; k < ones; ++k) two_first.s.push_back(1);
    two_first.s.push_back(0);
    for (int k = 0; k < ones; ++k) two_last.s.push_back(1);
    two_last.s.push_back(2);
    two_last.s.push_back(0);
    forms.push_back(two_first);
    forms.push_back(two_last);
  }
  for (int a = 1; a <= 3; ++a) {
    for (int b = 1; b <= 3; ++b) {
      TernaryString mid;
      for (int k = 0; k < a; ++k) mid.s.push_back(1);
      mid.s.push_back(2);
      for (int k = 0; k < b; ++k) mid.s.push_back(1);
      mid.s.push_back(0);
      forms.push_back(mid);
    }
  }

  for (const auto& S : forms) {
    CHECK(classify_ternary(S) != TernaryForm::Other);
    for (int K = S.n(); K <= 30; ++K) {
      const auto assignment = expand_ternary(S, K);
      // Counts reproduce the tiled string...
      CHECK(counts_from_sets(assignment) == tiled_counts(S, K));
      // ...and determine the sets: rebuild them from counts alone.
      const auto N = tiled_counts(S, K);
      MessageAssignment rebuilt;
      rebuilt.K = K;
      rebuilt.sets.assign(K + 1, TransmitSet{});
      int start = 1;
      for (int x = 1; x <= K; ++x) {
        if (N[x] != 0) continue;
        int y = 0;
        for (int j = start; j < x; ++j)
          if (N[j] == 2) y = j;
        for (int j = start; j <= y; ++j) rebuilt.sets[j].add(j);
        for (int j = y + 1; j <= x; ++j) rebuilt.sets[j].add(j - 1);
        start = x + 1;
      }
      for (int j = start; j <= K; ++j) rebuilt.sets[j].add(j);
      CHECK(same_sets(assignment, rebuilt));
    }
  }
}

TEST_CASE("mod-5 cooperative assignment") {
  const auto a5 = theorem4_assignment(5);
  CHECK(same_sets(a5, from_lists({{1, 2}, {1, 2}, {3, 4}, {3, 4}, {3, 4}})));
  CHECK(theorem4_assignment(8).sets[7] == make_set({6, 7}));
  CHECK(theorem4_assignment(12).sets[10] == make_set({8, 9}));
  CHECK(theorem4_assignment(1).sets[1] == make_set({1}));
  for (int K : {2, 5, 17, 40}) CHECK(theorem4_assignment(K).cooperation_order() == 2);
}

TEST_CASE("adjacent-pair assignment") {
  CHECK(same_sets(theorem5_assignment(3), from_lists({{1}, {1, 2}, {2, 3}})));
  CHECK(same_sets(theorem5_assignment(1), from_lists({{1}})));
  const auto a = theorem5_assignment(9);
  for (int i = 2; i <= 9; ++i) CHECK(a.sets[i].size() == 2);
  CHECK(a.cooperation_order() == 2);
}

TEST_CASE("fraction family endpoints") {
  const int K = 20;
  const auto f0 = fraction_assignment(Fraction{0, 1}, K);
  CHECK(f0.sets[1] == make_set({0, 1}));
  for (int i = 2; i < K; ++i) CHECK(f0.sets[i] == make_set({i - 1, i}));
  CHECK(f0.sets[K] == make_set({K - 2, K - 1}));

  const auto f1 = fraction_assignment(Fraction{1, 1}, 10);
  int forward = 0;
  for (int i = 1; i <= 10; ++i)
    if (f1.sets[i] == make_set({i, i + 1})) ++forward;
  CHECK(std::abs(forward - 10) <= 2);
}

TEST_CASE("fraction family at f=3/5, K=100") {
  const auto a = fraction_assignment(Fraction{3, 5}, 100);
  int cancellation_role = 0;  // sets not of the both-reachable {i-1,i} shape
  for (int i = 1; i <= 100; ++i)
    if (!(a.sets[i] == make_set({i - 1, i}))) ++cancellation_role;
  CHECK(cancellation_role >= 59);
  CHECK(cancellation_role <= 61);
}

TEST_CASE("fraction family is well formed for every small K and grid f") {
  // The floor/ceil index families can overlap at small K; first-match-wins
  // must still produce valid two-transmitter sets.
  for (int K = 3; K <= 14; ++K) {
    for (int n = 0; n <= 20; ++n) {
      const auto a = fraction_assignment(Fraction{n, 20}, K);
      for (int i = 1; i <= K; ++i) {
        REQUIRE(!a.sets[i].empty());
        CHECK(a.sets[i].size() <= 2);
        for (int t : a.sets[i]) {
          CHECK(t >= 0);
          CHECK(t <= K);
          CHECK(t >= i - 2);
          CHECK(t <= i + 1);
        }
        // At least one transmitter can reach the receiver.
        CHECK((a.sets[i].contains(i - 1) || a.sets[i].contains(i)));
      }
      CHECK(a.cooperation_order() == 2);
    }
  }
}

TEST_CASE("the verbatim piecewise member differs from the mod-5 assignment") {
  const auto piecewise = fraction_assignment(Fraction{3, 5}, 100);
  const auto mod5 = theorem4_assignment(100);
  bool differ = false;
  for (int i = 1; i <= 100; ++i)
    if (!(piecewise.sets[i] == mod5.sets[i])) differ = true;
  CHECK(differ);
}

TEST_CASE("fraction family first-user convention") {
  // 0 < f*K <= 1 puts message 1 on the preceding transmitter pair.
  CHECK(fraction_assignment(Fraction{1, 100}, 100).sets[1] == make_set({0, 1}));
  CHECK(fraction_assignment(Fraction{2, 100}, 100).sets[1] == make_set({1, 2}));
  CHECK(fraction_assignment(Fraction{0, 1}, 100).sets[1] == make_set({0, 1}));
  CHECK_THROWS_AS(fraction_assignment(Fraction{1, 2}, 2), std::invalid_argument);
}

TEST_CASE("topology reduction is the identity on fully connected networks") {
  const NetworkTopology topo{12, false};
  const auto r = sample_realization(topo, 0.0, 1);
  for (const auto& a : {theorem4_assignment(12), theorem5_assignment(12),
                        expand_ternary(TernaryString{{2, 1, 0}}, 12)}) {
    const auto red = topology_reduce(a, r);
    for (int i = 1; i <= 12; ++i) {
      TransmitSet want;
      for (int t : a.sets[i])
        if (t >= 1) want.add(t);  // transmitter 0 does not exist globally
      CHECK(red.sets[i] == want);
    }
  }
}

TEST_CASE("users without an enabled message drop out") {
  const NetworkTopology topo{4, false};
  auto bits = sample_realization(topo, 0.0, 1).raw_bits();
  bits[NetworkTopology::cross_index(3)] = 0;   // (3,2) erased
  bits[NetworkTopology::direct_index(3)] = 0;  // (3,3) erased
  const NetworkRealization r(topo, bits);
  ReducedAssignment red;
  topology_reduce(theorem5_assignment(4), r, red);
  CHECK_FALSE(red.enabled[3]);
  CHECK(red.sets[3].empty());
  CHECK(red.enabled[2]);
  CHECK(red.enabled[4]);
}

TEST_CASE("a transmitter that can neither deliver nor cancel is removed") {
  // T_3={2,3}, (3,2) erased, (3,3) and (4,3) present: transmitter 2 shares no
  // connected receiver with the marked vertex 3, so it goes.
  const NetworkTopology topo{4, false};
  auto bits = sample_realization(topo, 0.0, 1).raw_bits();
  bits[NetworkTopology::cross_index(3)] = 0;
  const NetworkRealization r(topo, bits);
  ReducedAssignment red;
  topology_reduce(theorem5_assignment(4), r, red);
  CHECK(red.enabled[3]);
  CHECK(red.sets[3] == make_set({3}));
}

TEST_CASE("reduction is idempotent and preserves the zero-forcing value") {
  SplitMix64 rng(2024);
  for (int trial = 0; trial < 200; ++trial) {
    const int K = 2 + static_cast<int>(rng.next() % 11);
    const NetworkTopology topo{K, (rng.next() & 1) != 0};
    const auto r = sample_realization(topo, 0.1 + 0.8 * rng.next_unit(), rng.next());
    MessageAssignment a;
    switch (rng.next() % 3) {
      case 0: a = theorem4_assignment(K); break;
      case 1: a = theorem5_assignment(K); break;
      default: a = expand_ternary(TernaryString{{1}}, K); break;
    }
    const auto once = topology_reduce(a, r);
    const auto twice = topology_reduce(once, r);
    for (int i = 1; i <= K; ++i) CHECK(once.sets[i] == twice.sets[i]);
    CHECK(zf_dof(r, a) == zf_dof(r, once));
  }
}
