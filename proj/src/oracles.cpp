#include "dofsim/oracles.hpp"

#include <algorithm>
#include <bit>
#include <cassert>
#include <sstream>
#include <stdexcept>

namespace dofsim {

namespace {

constexpr int kNeg = -1000000000;

int64_t local_h(const SubnetCoefficients& c, int N, int rx, int tx) {
  if (rx < 1 || rx > N) return 0;
  if (tx == rx - 1) return c.cross[rx];
  if (tx == rx) return c.direct[rx];
  return 0;
}

}  // namespace

int brute_force_zf(const SubnetView& v, const SubnetCoefficients& c) {
  const int N = v.N;
  if (N > 12) throw std::invalid_argument("brute_force_zf is guarded to N <= 12");
  if (N <= 0) return 0;

  // Usable beam support per message.
  std::array<std::array<int, 2>, 13> txs{};
  std::array<int, 13> ntx{};
  for (int j = 1; j <= N; ++j) {
    ntx[j] = 0;
    for (int t = std::max(0, j - 2); t <= std::min(N, j + 1); ++t) {
      if (!v.in_tset(j, t)) continue;
      if (ntx[j] == 2) throw std::invalid_argument("brute_force_zf needs cooperation order <= 2");
      txs[j][ntx[j]++] = t;
    }
  }

  auto h = [&](int rx, int tx) { return local_h(c, N, rx, tx); };

  // Beam feasibility of message j given which window receivers are active:
  // null(C) must contain a vector outside null(d).
  auto feasible = [&](int j, uint32_t subset) -> bool {
    if (ntx[j] == 0) return false;
    const int t0 = txs[j][0];
    if (ntx[j] == 1) {
      if (h(j, t0) == 0) return false;
      for (int rx = std::max(1, j - 2); rx <= std::min(N, j + 2); ++rx) {
        if (rx == j || !((subset >> (rx - 1)) & 1)) continue;
        if (h(rx, t0) != 0) return false;
      }
      return true;
    }
    const int t1 = txs[j][1];
    const int64_t d0 = h(j, t0), d1 = h(j, t1);
    if (d0 == 0 && d1 == 0) return false;
    int64_t r0 = 0, r1 = 0;
    bool have_row = false;
    for (int rx = std::max(1, j - 2); rx <= std::min(N, j + 2); ++rx) {
      if (rx == j || !((subset >> (rx - 1)) & 1)) continue;
      const int64_t a = h(rx, t0), b = h(rx, t1);
      if (a == 0 && b == 0) continue;
      if (!have_row) {
        r0 = a;
        r1 = b;
        have_row = true;
      } else if (static_cast<__int128>(r0) * b - static_cast<__int128>(r1) * a != 0) {
        return false;  // constraint rank 2, nullspace trivial
      }
    }
    if (!have_row) return true;
    // One constraint direction; nullspace spanned by (-r1, r0).
    return static_cast<__int128>(d1) * r0 - static_cast<__int128>(d0) * r1 != 0;
  };

  int best = 0;
  for (uint32_t D = 1; D < (1u << N); ++D) {
    const int cnt = std::popcount(D);
    if (cnt <= best) continue;
    bool ok = true;
    for (int j = 1; j <= N && ok; ++j)
      if ((D >> (j - 1)) & 1) ok = feasible(j, D);
    if (ok) best = cnt;
  }
  return best;
}

// ---------------------------------------------------------------------------
// Cell association (one transmitter per message)

int tdma_optimal(const NetworkRealization& r, const MessageAssignment& a) {
  if (a.cooperation_order() != 1)
    throw std::invalid_argument("tdma_optimal needs cooperation order 1");
  const int K = a.K;
  auto tx_of = [&](int i) { return a.sets[i].empty() ? kNeg : a.sets[i].v[0]; };
  auto deliverable = [&](int i) {
    const int t = tx_of(i);
    return (t == i || t == i - 1) && r.link_or_false(i, t);
  };
  // Both i and i+1 active: they clash when they share a transmitter or an
  // active transmitter reaches the other's receiver.
  auto conflict = [&](int i) {
    const int ti = tx_of(i), tj = tx_of(i + 1);
    if (ti == tj) return true;
    if (ti == i && tj == i + 1) return r.link_or_false(i + 1, i);
    if (ti == i - 1 && tj == i) return r.link_or_false(i, i);
    return false;
  };

  int dp_idle = 0;
  int dp_active = deliverable(1) ? 1 : kNeg;
  for (int i = 2; i <= K; ++i) {
    const int idle = std::max(dp_idle, dp_active);
    int active = kNeg;
    if (deliverable(i)) {
      const int from_idle = dp_idle;
      const int from_active = (dp_active == kNeg || conflict(i - 1)) ? kNeg : dp_active;
      const int prev = std::max(from_idle, from_active);
      if (prev != kNeg) active = prev + 1;
    }
    dp_idle = idle;
    dp_active = active;
  }
  return std::max(dp_idle, dp_active);
}

int tdma_optimal_bruteforce(const NetworkRealization& r, const MessageAssignment& a) {
  if (a.cooperation_order() != 1)
    throw std::invalid_argument("tdma brute force needs cooperation order 1");
  const int K = a.K;
  if (K > 20) throw std::invalid_argument("tdma brute force is guarded to K <= 20");
  int best = 0;
  for (uint32_t D = 0; D < (1u << K); ++D) {
    bool ok = true;
    for (int i = 1; i <= K && ok; ++i) {
      if (!((D >> (i - 1)) & 1)) continue;
      if (a.sets[i].empty()) {
        ok = false;
        break;
      }
      const int ti = a.sets[i].v[0];
      if (!((ti == i || ti == i - 1) && r.link_or_false(i, ti))) {
        ok = false;
        break;
      }
      for (int j = 1; j <= K && ok; ++j) {
        if (j == i || !((D >> (j - 1)) & 1)) continue;
        const int tj = a.sets[j].v[0];
        if (tj == ti) ok = false;                      // shared transmitter
        else if (r.link_or_false(i, tj)) ok = false;   // interference at rx i
      }
    }
    if (ok) best = std::max(best, std::popcount(D));
  }
  return best;
}

// ---------------------------------------------------------------------------
// Explicit cell-association schemes

namespace {

void require_strategy(const MessageAssignment& a, int which) {
  TernaryString s;
  if (which == 1) s.s = {1};
  else if (which == 2) s.s = {2, 1, 0};
  else if (which == 3) s.s = {1, 2, 1, 0};
  else throw std::invalid_argument("lemma_scheme_dof: which must be 1, 2 or 3");
  if (a.K % s.n() != 0)
    throw std::invalid_argument("lemma_scheme_dof: K must be a multiple of the pattern length");
  const MessageAssignment want = expand_ternary(s, a.K);
  for (int i = 1; i <= a.K; ++i)
    if (!(a.sets[i] == want.sets[i]))
      throw std::invalid_argument("lemma_scheme_dof: assignment does not match the strategy");
}

int scheme_identity(const NetworkRealization& r, int K) {
  // Odd users have priority; in a block with an odd user count starting (and
  // ending) on an even index, the even users take priority instead.
  int total = 0;
  int i = 1;
  while (i <= K) {
    if (!r.direct(i)) {
      ++i;
      continue;
    }
    int j = i;
    while (j + 1 <= K && r.direct(j + 1) && r.cross(j + 1)) ++j;
    const int n = j - i + 1;
    const bool swap = (n % 2 == 1) && (i % 2 == 0);
    total += (i % 2 == 1 || swap) ? (n + 1) / 2 : n / 2;
    i = j + 1;
  }
  return total;
}

int scheme_210(const NetworkRealization& r, int K) {
  int total = 0;
  for (int i = 1; i <= K; ++i) {
    const int m = i % 3;
    if (m == 1) {
      if (r.direct(i)) ++total;
    } else if (m == 0) {
      if (r.cross(i)) ++total;
    } else {
      if (r.cross(i) && !r.direct(i - 1) && (!r.direct(i) || !r.cross(i + 1))) ++total;
    }
  }
  return total;
}

int scheme_1210(const NetworkRealization& r, int K) {
  int total = 0;
  for (int g = 0; g < K; g += 4) {
    const bool swap = (!r.direct(g + 1) || !r.cross(g + 2)) && r.direct(g + 2) &&
                      r.cross(g + 3) && r.direct(g + 3) && r.cross(g + 4);
    if (swap) {
      total += 2 + (r.direct(g + 1) ? 1 : 0);
      continue;
    }
    if (r.direct(g + 1)) ++total;
    if (r.cross(g + 3)) ++total;
    if (r.direct(g + 2) && !r.cross(g + 3) && (!r.cross(g + 2) || !r.direct(g + 1))) ++total;
    if (r.cross(g + 4) && (!r.direct(g + 3) || !r.cross(g + 3))) ++total;
  }
  return total;
}

}  // namespace

int lemma_scheme_dof(const NetworkRealization& r, const MessageAssignment& a, int which) {
  require_strategy(a, which);
  if (which == 1) return scheme_identity(r, a.K);
  if (which == 2) return scheme_210(r, a.K);
  return scheme_1210(r, a.K);
}

// ---------------------------------------------------------------------------
// Size-five converse

namespace {

std::vector<int> usable_set(const SubnetView& v, int msg) {
  std::vector<int> out;
  for (int t = std::max(0, msg - 2); t <= std::min(v.N, msg + 1); ++t)
    if (v.in_tset(msg, t)) out.push_back(t);
  return out;
}

std::vector<int> block_members(const SubnetView& v) {
  std::vector<int> out;
  for (int t = 0; t <= v.N; ++t) {
    if (t == 0 && !v.tx0_in) continue;
    if (t == v.N && !v.txN_in) continue;
    bool carries = false;
    for (int m = std::max(1, t - 1); m <= std::min(v.N, t + 2) && !carries; ++m)
      carries = v.in_tset(m, t);
    if (carries) out.push_back(t);
  }
  return out;
}

// Receiver rx hears local transmitter tx inside the block.
bool audible(const SubnetView& v, int rx, int tx) {
  if (tx != rx - 1 && tx != rx) return false;
  if (tx == 0) return v.tx0_in;
  if (tx == v.N && rx == v.N) return v.txN_in;
  return tx >= 0 && tx <= v.N;
}

}  // namespace

ConverseCertificate converse_bound_n5(const SubnetView& v) {
  if (v.N != 5) throw std::invalid_argument("converse_bound_n5 needs a block of size 5");
  auto in = [&](int msg, int tx) { return v.in_tset(msg, tx); };
  auto set_is = [&](int msg, std::initializer_list<int> want) {
    const auto got = usable_set(v, msg);
    return got.size() == want.size() && std::equal(got.begin(), got.end(), want.begin());
  };

  ConverseCertificate cert;
  std::vector<int>& A = cert.A;
  if (v.tx0_in && !v.txN_in) {
    if (!in(5, 3)) {
      if (!in(1, 0)) A = {2, 3, 4};
      else if (!in(3, 3)) A = {1, 2, 4};
      else if (set_is(2, {1, 2})) A = {1, 3, 4};
      else A = {1, 2, 4, 5};
    } else if (!in(4, 3)) {
      if (!in(1, 0)) A = {2, 3, 5};
      else if (!in(3, 3)) A = {1, 2, 5};
      else if (set_is(2, {1, 2})) A = {1, 3, 5};
      else A = {1, 2, 4, 5};
    } else {
      A = {1, 2, 4, 5};
    }
  } else if (!v.tx0_in && v.txN_in) {
    if (!in(1, 2)) {
      if (!in(5, 5)) A = {2, 3, 4};
      else if (!in(3, 2)) A = {2, 4, 5};
      else if (set_is(4, {3, 4})) A = {2, 3, 5};
      else A = {1, 2, 4, 5};
    } else if (!in(2, 2)) {
      if (!in(5, 5)) A = {1, 3, 4};
      else if (!in(3, 2)) A = {1, 4, 5};
      else if (set_is(4, {3, 4})) A = {1, 3, 5};
      else A = {1, 2, 4, 5};
    } else {
      A = {1, 2, 4, 5};
    }
  } else if (v.tx0_in && v.txN_in) {
    A = {1, 2, 4, 5};
  } else {
    if (!in(1, 2)) A = {2, 3, 4};
    else if (!in(2, 2)) A = {1, 3, 4};
    else if (!in(4, 3)) A = {2, 3, 5};
    else if (!in(5, 3)) A = {2, 3, 4};
    else A = {1, 2, 4, 5};
  }

  // Reconstruction order: start from the transmitters that exclusively carry
  // messages of A, then repeatedly spend one received signal in A to solve
  // for one unknown transmit signal.
  const std::vector<int> members = block_members(v);
  std::vector<uint8_t> known(v.N + 1, 0), member(v.N + 1, 0), used(v.N + 1, 0);
  for (int t : members) member[t] = 1;
  auto in_A = [&](int m) { return std::find(A.begin(), A.end(), m) != A.end(); };
  for (int t : members) {
    bool exclusive = true;
    for (int m = std::max(1, t - 1); m <= std::min(v.N, t + 2) && exclusive; ++m)
      if (v.in_tset(m, t) && !in_A(m)) exclusive = false;
    known[t] = exclusive;
  }
  bool progress = true;
  while (progress) {
    progress = false;
    for (int rx : A) {
      if (used[rx]) continue;
      int unknown = -1, n_unknown = 0;
      for (int t = rx - 1; t <= rx; ++t) {
        if (t < 0 || t > v.N || !member[t] || !audible(v, rx, t)) continue;
        if (!known[t]) {
          unknown = t;
          ++n_unknown;
        }
      }
      if (n_unknown == 1) {
        cert.order.push_back({unknown, rx});
        known[unknown] = 1;
        used[rx] = 1;
        progress = true;
      }
    }
  }
  return cert;
}

bool verify_certificate(const ConverseCertificate& cert, const SubnetView& v) {
  for (int rx : cert.A)
    if (rx < 1 || rx > v.N) return false;
  const std::vector<int> members = block_members(v);
  std::vector<uint8_t> known(v.N + 1, 0), member(v.N + 1, 0), used(v.N + 1, 0);
  for (int t : members) member[t] = 1;
  auto in_A = [&](int m) {
    return std::find(cert.A.begin(), cert.A.end(), m) != cert.A.end();
  };
  for (int t : members) {
    bool exclusive = true;
    for (int m = std::max(1, t - 1); m <= std::min(v.N, t + 2) && exclusive; ++m)
      if (v.in_tset(m, t) && !in_A(m)) exclusive = false;
    known[t] = exclusive;
  }
  for (const auto& step : cert.order) {
    if (!in_A(step.via_rx) || used[step.via_rx]) return false;
    if (step.tx < 0 || step.tx > v.N || !member[step.tx] || known[step.tx]) return false;
    if (!audible(v, step.via_rx, step.tx)) return false;
    // Every other audible member transmitter must already be known.
    for (int t = step.via_rx - 1; t <= step.via_rx; ++t) {
      if (t == step.tx || t < 0 || t > v.N) continue;
      if (member[t] && audible(v, step.via_rx, t) && !known[t]) return false;
    }
    known[step.tx] = 1;
    used[step.via_rx] = 1;
  }
  for (int t : members)
    if (!known[t]) return false;
  return true;
}

// ---------------------------------------------------------------------------
// Enumeration and randomized sweeps

std::string LocalInstance::describe() const {
  std::ostringstream os;
  os << "N=" << N << " tx0=" << (tx0_in ? 1 : 0) << " txN=" << (txN_in ? 1 : 0);
  for (int i = 1; i <= N; ++i) {
    os << " T" << i << "={";
    for (int k = 0; k < sets[i].size(); ++k) os << (k ? "," : "") << sets[i].v[k];
    os << "}";
  }
  return os.str();
}

std::string OracleReport::matrix() const {
  std::ostringstream os;
  os << "  N |      tx0-/txN-       tx0-/txN+       tx0+/txN-       tx0+/txN+\n";
  for (int n = 1; n <= 12; ++n) {
    bool any = false;
    for (int b = 0; b < 4; ++b) any = any || checked[n][b] > 0;
    if (!any) continue;
    os << ' ' << (n < 10 ? " " : "") << n << " |";
    for (int b : {0, 1, 2, 3}) {
      std::ostringstream cell;
      if (checked[n][b] == 0) {
        cell << "-";
      } else {
        cell << (failed[n][b] == 0 ? "PASS" : "FAIL") << '(' << checked[n][b] << ')';
      }
      std::string c = cell.str();
      os << std::string(c.size() < 16 ? 16 - c.size() : 1, ' ') << c;
    }
    os << "\n";
  }
  return os.str();
}

LocalInstance LocalInstance::mirrored() const {
  LocalInstance m;
  m.N = N;
  m.sets.assign(N + 1, TransmitSet{});
  for (int i = 1; i <= N; ++i)
    for (int t : sets[N + 1 - i]) m.sets[i].add(N - t);
  m.tx0_in = txN_in;
  m.txN_in = tx0_in;
  return m;
}

namespace {

std::vector<TransmitSet> candidate_sets(int i, int N, bool pairs_only) {
  std::vector<TransmitSet> out;
  auto push = [&](std::initializer_list<int> ts) {
    TransmitSet s;
    for (int t : ts) {
      if (t < 0 || t > N) return;
      s.add(t);
    }
    out.push_back(s);
  };
  if (!pairs_only) {
    push({i - 1});
    push({i});
  }
  push({i - 2, i - 1});
  push({i - 1, i});
  push({i, i + 1});
  return out;
}

bool interior_txs_covered(const LocalInstance& inst) {
  for (int t = 1; t <= inst.N - 1; ++t) {
    bool carried = false;
    for (int m = std::max(1, t - 1); m <= std::min(inst.N, t + 2) && !carried; ++m)
      carried = inst.sets[m].contains(t);
    if (!carried) return false;
  }
  return true;
}

void finish_instance(LocalInstance& inst) {
  inst.tx0_in = inst.sets[1].contains(0) || (inst.N >= 2 && inst.sets[2].contains(0));
  inst.txN_in = inst.sets[inst.N].contains(inst.N) ||
                (inst.N >= 2 && inst.sets[inst.N - 1].contains(inst.N));
}

}  // namespace

void enumerate_local_instances(int N, const std::function<void(const LocalInstance&)>& fn) {
  std::vector<std::vector<TransmitSet>> cands(N + 1);
  for (int i = 1; i <= N; ++i) cands[i] = candidate_sets(i, N, false);
  LocalInstance inst;
  inst.N = N;
  inst.sets.assign(N + 1, TransmitSet{});
  std::vector<size_t> idx(N + 1, 0);
  while (true) {
    for (int i = 1; i <= N; ++i) inst.sets[i] = cands[i][idx[i]];
    if (interior_txs_covered(inst)) {
      finish_instance(inst);
      fn(inst);
    }
    int pos = N;
    while (pos >= 1 && ++idx[pos] == cands[pos].size()) idx[pos--] = 0;
    if (pos < 1) break;
  }
}

void enumerate_local_instances_pairs(int N,
                                     const std::function<void(const LocalInstance&)>& fn) {
  // Raw consecutive pairs, including ones whose boundary mention may be dead
  // (the pair reaches outside the block, or its boundary link is erased);
  // the boundary-link bits are free. Instances must leave every message
  // deliverable and every interior transmitter carrying something.
  std::vector<std::vector<TransmitSet>> cands(N + 1);
  for (int i = 1; i <= N; ++i) {
    for (int lo : {i - 2, i - 1, i}) {
      if (lo < -1 || lo + 1 > N + 1) continue;
      TransmitSet s;
      s.add(lo);
      s.add(lo + 1);
      cands[i].push_back(s);
    }
  }
  LocalInstance inst;
  inst.N = N;
  inst.sets.assign(N + 1, TransmitSet{});
  std::vector<size_t> idx(N + 1, 0);
  while (true) {
    for (int i = 1; i <= N; ++i) inst.sets[i] = cands[i][idx[i]];
    for (int h10 = 0; h10 <= 1; ++h10) {
      for (int hNN = 0; hNN <= 1; ++hNN) {
        inst.tx0_in = h10 != 0 && (inst.sets[1].contains(0) ||
                                   (N >= 2 && inst.sets[2].contains(0)));
        inst.txN_in = hNN != 0 && (inst.sets[N].contains(N) ||
                                   (N >= 2 && inst.sets[N - 1].contains(N)));
        // Skip duplicates where the link bit is irrelevant (no mention).
        if (h10 != 0 && !inst.tx0_in) continue;
        if (hNN != 0 && !inst.txN_in) continue;
        const SubnetView v = inst.view();
        bool enabled = true;
        for (int i = 1; i <= N && enabled; ++i)
          enabled = v.in_tset(i, i - 1) || v.in_tset(i, i);
        if (!enabled || !interior_txs_covered(inst)) continue;
        fn(inst);
      }
    }
    int pos = N;
    while (pos >= 1 && ++idx[pos] == cands[pos].size()) idx[pos--] = 0;
    if (pos < 1) break;
  }
}

LocalInstance random_local_instance(int N, SplitMix64& rng) {
  std::vector<std::vector<TransmitSet>> cands(N + 1);
  for (int i = 1; i <= N; ++i) cands[i] = candidate_sets(i, N, false);
  LocalInstance inst;
  inst.N = N;
  inst.sets.assign(N + 1, TransmitSet{});
  while (true) {
    for (int i = 1; i <= N; ++i) inst.sets[i] = cands[i][rng.next() % cands[i].size()];
    if (interior_txs_covered(inst)) break;
  }
  finish_instance(inst);
  return inst;
}

OracleReport oracle_sandwich_exhaustive(int max_n, uint64_t coef_seed) {
  OracleReport rep;
  Schedule sched;
  auto record_mismatch = [&](const LocalInstance& inst, int greedy, int brute,
                             const std::string& detail) {
    ++rep.mismatches;
    ++rep.failed[inst.N][(inst.tx0_in ? 2 : 0) + (inst.txN_in ? 1 : 0)];
    if (rep.first_counterexample.empty()) {
      rep.first_counterexample = inst.describe() + " greedy=" + std::to_string(greedy) +
                                 " brute=" + std::to_string(brute) + detail + "\n" +
                                 sched.dump();
    }
  };

  // Greedy pass vs exhaustive search, two independent channel draws.
  for (int N = 1; N <= max_n; ++N) {
    enumerate_local_instances(N, [&](const LocalInstance& inst) {
      ++rep.instances;
      const int bc = (inst.tx0_in ? 2 : 0) + (inst.txN_in ? 1 : 0);
      rep.boundary_seen[bc] = true;
      ++rep.checked[inst.N][bc];
      const SubnetView v = inst.view();
      schedule_atomic(v, sched);
      const int greedy = sched.delivered_count();
      const auto c1 = SubnetCoefficients::random(v, derive_seed(coef_seed, rep.instances));
      const auto c2 =
          SubnetCoefficients::random(v, derive_seed(coef_seed ^ 0x5ca1ab1eULL, rep.instances));
      const int brute = brute_force_zf(v, c1);
      const int brute2 = brute_force_zf(v, c2);
      if (greedy != brute || brute != brute2)
        record_mismatch(inst, greedy, brute, " brute2=" + std::to_string(brute2));
    });
  }

  // Converse certificates exist on the two-transmitters-per-message domain.
  if (max_n >= 5) {
    enumerate_local_instances_pairs(5, [&](const LocalInstance& inst) {
      ++rep.instances;
      ++rep.checked[inst.N][(inst.tx0_in ? 2 : 0) + (inst.txN_in ? 1 : 0)];
      const SubnetView v = inst.view();
      schedule_atomic(v, sched);
      const int greedy = sched.delivered_count();
      const auto c = SubnetCoefficients::random(v, derive_seed(coef_seed, rep.instances));
      const int brute = brute_force_zf(v, c);
      const auto cert = converse_bound_n5(v);
      if (greedy != brute || static_cast<int>(cert.A.size()) != brute ||
          !verify_certificate(cert, v)) {
        record_mismatch(inst, greedy, brute, " converse |A|=" + std::to_string(cert.A.size()));
        return;
      }
      const LocalInstance mir = inst.mirrored();
      const auto cert_m = converse_bound_n5(mir.view());
      if (cert_m.A.size() != cert.A.size() || !verify_certificate(cert_m, mir.view()))
        record_mismatch(inst, greedy, brute, " mirror |A|=" + std::to_string(cert_m.A.size()));
    });
  }
  return rep;
}

OracleReport oracle_greedy_random(int max_n, long long count, uint64_t seed) {
  OracleReport rep;
  SplitMix64 rng(derive_seed(seed, 0x67726464ULL));
  Schedule sched;
  for (long long it = 0; it < count; ++it) {
    const int N = 1 + static_cast<int>(rng.next() % max_n);
    const LocalInstance inst = random_local_instance(N, rng);
    ++rep.instances;
    const int bc = (inst.tx0_in ? 2 : 0) + (inst.txN_in ? 1 : 0);
    rep.boundary_seen[bc] = true;
    ++rep.checked[inst.N][bc];
    const SubnetView v = inst.view();
    schedule_atomic(v, sched);
    const int greedy = sched.delivered_count();
    const auto c = SubnetCoefficients::random(v, rng.next());
    const int brute = brute_force_zf(v, c);
    if (greedy != brute) {
      ++rep.mismatches;
      ++rep.failed[inst.N][bc];
      if (rep.first_counterexample.empty()) {
        rep.first_counterexample = inst.describe() + " greedy=" + std::to_string(greedy) +
                                   " brute=" + std::to_string(brute) + "\n" + sched.dump();
      }
    }
  }
  return rep;
}

}  // namespace dofsim
