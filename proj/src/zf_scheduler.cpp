#include "dofsim/zf_scheduler.hpp"

#include <cassert>
#include <sstream>
#include <stdexcept>

namespace dofsim {

SubnetView make_view(const AtomicSubnetwork& sub, const ReducedAssignment& red) {
  SubnetView v;
  v.N = sub.size();
  v.tx0_in = sub.tx0_in;
  v.txN_in = sub.txN_in;
  v.offset = sub.first_user - 1;
  v.sets = red.sets.data();
  return v;
}

std::string Schedule::dump() const {
  std::ostringstream os;
  for (int i = 1; i <= N; ++i) {
    os << "b[" << i << "]=";
    for (int t = i - 2; t <= i + 1; ++t) os << (get(i, t) ? '1' : '0');
    os << "\n";
  }
  return os.str();
}

void schedule_atomic(const SubnetView& v, Schedule& out) {
  out.reset(v.N);
  const int N = v.N;
  if (N <= 0) return;
  auto b = [&](int msg, int tx) { return msg >= 1 && out.get(msg, tx); };

  // Message 1: the preceding transmitter, when usable, never interferes
  // inside the block.
  if (v.tx0_in && v.in_tset(1, 0)) {
    out.set(1, 0);
  } else {
    assert(v.in_tset(1, 1));
    out.set(1, 1);
  }

  // Message 2 via transmitter 1, then via transmitter 2.
  if (N >= 2) {
    if (v.in_tset(2, 1) && !b(1, 1)) {
      if (v.in_tset(2, 0) && v.tx0_in) {
        out.set(2, 1);
        out.set(2, 0);
      }
    } else if (v.in_tset(2, 0) && v.tx0_in && v.in_tset(1, 2)) {
      // Both first messages ride transmitter 1; transmitters 0 and 2 cancel.
      out.set(2, 1);
      out.set(2, 0);
      out.set(1, 2);
      out.set(1, 1);
    }
    if (v.in_tset(2, 2) && !b(2, 1)) {
      if (!b(1, 1)) {
        out.set(2, 2);
      } else if (v.in_tset(1, 2)) {
        out.set(2, 2);
        out.set(1, 2);
      }
    }
  }

  for (int i = 3; i <= N; ++i) {
    // Case 1: send W_i from transmitter i-1.
    if (v.in_tset(i, i - 1) && !b(i - 1, i - 1)) {
      if (!b(i - 1, i - 2)) {
        out.set(i, i - 1);
      } else if (v.in_tset(i, i - 2) && !b(i - 2, i - 2) && !b(i - 2, i - 3)) {
        out.set(i, i - 1);
        out.set(i, i - 2);
      }
    } else if (v.in_tset(i, i - 2) && v.in_tset(i - 1, i) && !b(i - 2, i - 3) &&
               !b(i - 2, i - 2)) {
      // W_{i-1} and W_i both ride transmitter i-1; transmitters i-2 and i
      // cancel them at receivers i-1 and i. All four flags go together.
      out.set(i, i - 1);
      out.set(i, i - 2);
      out.set(i - 1, i);
      out.set(i - 1, i - 1);
    }
    // Case 2: send W_i from transmitter i.
    if (v.in_tset(i, i) && !b(i, i - 1) && !b(i - 2, i - 1)) {
      if (!b(i - 1, i - 1)) {
        out.set(i, i);
      } else if (v.in_tset(i - 1, i)) {
        out.set(i, i);
        out.set(i - 1, i);
      }
    }
  }
}

SubnetCoefficients SubnetCoefficients::from_global(const SubnetView& v,
                                                   const ChannelCoefficients& c) {
  SubnetCoefficients sc;
  sc.N = v.N;
  sc.cross.assign(v.N + 1, 0);
  sc.direct.assign(v.N + 1, 0);
  for (int i = 1; i <= v.N; ++i) {
    const int g = v.offset + i;
    if (i == 1) {
      sc.cross[1] = v.tx0_in && g >= 2 ? c.cross(g) : 0;
    } else {
      sc.cross[i] = c.cross(g);
    }
    sc.direct[i] = (i == v.N && !v.txN_in) ? 0 : c.direct(g);
  }
  return sc;
}

SubnetCoefficients SubnetCoefficients::random(const SubnetView& v, uint64_t seed) {
  SplitMix64 rng(derive_seed(seed, 0x6c6f63ULL));
  SubnetCoefficients sc;
  sc.N = v.N;
  sc.cross.assign(v.N + 1, 0);
  sc.direct.assign(v.N + 1, 0);
  for (int i = 1; i <= v.N; ++i) {
    const int64_t a = rng.next_coefficient();
    const int64_t b = rng.next_coefficient();
    sc.cross[i] = (i == 1 && !v.tx0_in) ? 0 : a;
    sc.direct[i] = (i == v.N && !v.txN_in) ? 0 : b;
  }
  return sc;
}

BeamPlan build_beams(const Schedule& s, const SubnetView& v, const SubnetCoefficients& c) {
  BeamPlan plan;
  plan.per_tx.assign(v.N + 1, {});
  for (int i = 1; i <= v.N; ++i) {
    if (s.get(i, i - 1)) plan.per_tx[i - 1].push_back({i, Rat(1)});
    if (s.get(i, i)) plan.per_tx[i].push_back({i, Rat(1)});
    if (s.get(i, i - 2)) {
      // Data rides transmitter i-1 and is cancelled at receiver i-1.
      assert(c.cross[i - 1] != 0);
      plan.per_tx[i - 2].push_back({i, Rat(-c.direct[i - 1], c.cross[i - 1])});
    }
    if (s.get(i, i + 1)) {
      // Data rides transmitter i and is cancelled at receiver i+1.
      assert(c.direct[i + 1] != 0);
      plan.per_tx[i + 1].push_back({i, Rat(-c.cross[i + 1], c.direct[i + 1])});
    }
  }
  return plan;
}

bool beams_interference_free(const BeamPlan& plan, const Schedule& s, const SubnetView& v,
                             const SubnetCoefficients& c, std::string* why) {
  auto coef_at = [&](int rx, int tx) -> int64_t {
    if (tx == rx - 1) return c.cross[rx];
    if (tx == rx) return rx == v.N ? (v.txN_in ? c.direct[rx] : 0) : c.direct[rx];
    return 0;
  };
  for (int rx = 1; rx <= v.N; ++rx) {
    if (!s.delivered(rx)) continue;
    // Net coefficient per message across the two audible transmitters.
    for (int m = 1; m <= v.N; ++m) {
      Rat net(0);
      for (int tx = rx - 1; tx <= rx; ++tx) {
        if (tx < 0 || tx > v.N) continue;
        const int64_t h = coef_at(rx, tx);
        if (h == 0) continue;
        for (const auto& term : plan.per_tx[tx])
          if (term.message == m) net = net + Rat(h) * term.coef;
      }
      if (m == rx && net.is_zero()) {
        if (why) *why = "receiver " + std::to_string(rx) + " lost its own message";
        return false;
      }
      if (m != rx && !net.is_zero()) {
        if (why)
          *why = "receiver " + std::to_string(rx) + " hears message " + std::to_string(m) +
                 " with net coefficient " + net.str();
        return false;
      }
    }
  }
  return true;
}

int zf_dof(const NetworkRealization& r, const MessageAssignment& a, ZfWorkspace& ws) {
  if (a.cooperation_order() > 2)
    throw std::invalid_argument("zf_dof supports cooperation order at most 2");
  topology_reduce(a, r, ws.red);
  partition_atomic(r, ws.red, ws.parts);
  int total = 0;
  for (const auto& sub : ws.parts.subnets) {
    schedule_atomic(make_view(sub, ws.red), ws.sched);
    total += ws.sched.delivered_count();
  }
  return total;
}

int zf_dof(const NetworkRealization& r, const MessageAssignment& a) {
  ZfWorkspace ws;
  return zf_dof(r, a, ws);
}

}  // namespace dofsim
