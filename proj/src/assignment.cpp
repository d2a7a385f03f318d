#include "dofsim/assignment.hpp"

#include <numeric>
#include <stdexcept>

namespace dofsim {

TransmitSet make_set(std::initializer_list<int> ts) {
  TransmitSet s;
  for (int t : ts) s.add(t);
  return s;
}

int MessageAssignment::cooperation_order() const {
  int m = 0;
  for (int i = 1; i <= K; ++i) m = std::max(m, sets[i].size());
  return m;
}

TernaryForm classify_ternary(const TernaryString& S) {
  const auto& s = S.s;
  const int n = S.n();
  if (n == 0) return TernaryForm::Other;
  if (std::accumulate(s.begin(), s.end(), 0) != n) return TernaryForm::Other;
  if (n == 1) return s[0] == 1 ? TernaryForm::Identity : TernaryForm::Other;
  bool all_one_mid = true;
  if (s.back() != 0) return TernaryForm::Other;
  int two_pos = -1;
  for (int k = 0; k + 1 < n; ++k) {
    if (s[k] == 2) {
      if (two_pos >= 0) return TernaryForm::Other;
      two_pos = k;
    } else if (s[k] != 1) {
      all_one_mid = false;
    }
  }
  if (two_pos < 0 || !all_one_mid) return TernaryForm::Other;
  if (two_pos == 0) return TernaryForm::TwoFirst;
  if (two_pos == n - 2) return TernaryForm::TwoLast;
  return TernaryForm::TwoMiddle;
}

MessageAssignment expand_ternary(const TernaryString& S, int K) {
  const int n = S.n();
  if (n == 0) throw std::invalid_argument("ternary string is empty");
  int sum = 0;
  for (int x : S.s) {
    if (x < 0 || x > 2) throw std::invalid_argument("ternary string entries must be 0, 1 or 2");
    sum += x;
  }
  if (sum != n) throw std::invalid_argument("ternary string must sum to its length");
  if (K < n) throw std::invalid_argument("K must be at least the string length");

  // Tile then pad with ones.
  std::vector<int> N(K + 1, 1);
  const int tiled = n * (K / n);
  for (int i = 1; i <= tiled; ++i) N[i] = S.s[(i - 1) % n];

  MessageAssignment a;
  a.K = K;
  a.sets.assign(K + 1, TransmitSet{});

  int block_start = 1;
  for (int i = 1; i <= K; ++i) {
    if (N[i] != 0) continue;
    const int x = i;
    int y = -1;
    for (int j = block_start; j < x; ++j) {
      if (N[j] == 2) {
        if (y >= 0) throw std::invalid_argument("ternary string has two 2s in one block");
        y = j;
      } else if (N[j] != 1) {
        throw std::invalid_argument("ternary string has a 0 inside a block");
      }
    }
    if (y < 0) throw std::invalid_argument("ternary string block lacks a 2 before its 0");
    for (int j = block_start; j <= y; ++j) a.sets[j].add(j);
    for (int j = y + 1; j <= x; ++j) a.sets[j].add(j - 1);
    block_start = x + 1;
  }
  // Trailing block (no zero): every message at its own transmitter.
  for (int j = block_start; j <= K; ++j) {
    if (N[j] != 1) throw std::invalid_argument("trailing ternary block must be all ones");
    a.sets[j].add(j);
  }
  return a;
}

std::vector<int> counts_from_sets(const MessageAssignment& a) {
  std::vector<int> N(a.K + 1, 0);
  for (int i = 1; i <= a.K; ++i)
    for (int t : a.sets[i])
      if (t >= 1 && t <= a.K) ++N[t];
  return N;
}

MessageAssignment theorem4_assignment(int K) {
  if (K < 1) throw std::invalid_argument("K must be positive");
  MessageAssignment a;
  a.K = K;
  a.sets.assign(K + 1, TransmitSet{});
  for (int i = 1; i <= K; ++i) {
    const int r = i % 5;
    int lo, hi;
    if (r == 2 || r == 4) {
      lo = i - 1;
      hi = i;
    } else if (r == 0) {
      lo = i - 2;
      hi = i - 1;
    } else {
      lo = i;
      hi = i + 1;
    }
    for (int t = lo; t <= hi; ++t)
      if (t >= 1 && t <= K) a.sets[i].add(t);
  }
  return a;
}

MessageAssignment theorem5_assignment(int K) {
  if (K < 1) throw std::invalid_argument("K must be positive");
  MessageAssignment a;
  a.K = K;
  a.sets.assign(K + 1, TransmitSet{});
  for (int i = 1; i <= K; ++i) {
    if (i - 1 >= 1) a.sets[i].add(i - 1);
    a.sets[i].add(i);
  }
  return a;
}

MessageAssignment fraction_assignment(Fraction f, int K) {
  if (K < 3) throw std::invalid_argument("fraction family needs K >= 3");
  if (f.den <= 0 || f.num < 0 || f.num > f.den)
    throw std::invalid_argument("fraction f must lie in [0,1]");
  const int64_t a = f.num, b = f.den;

  // i = 1 + n*step family, n in {1 .. nmax4}
  int64_t step = 0, nmax4 = 0;
  if (a * K >= 3 * b) {  // f*K - 2 >= 1, range nonempty
    step = std::max<int64_t>(2, (static_cast<int64_t>(K) * b) / (a * K - b));
    nmax4 = std::min<int64_t>((a * K - 2 * b) / b, (K - 2) / 2);
  }
  // i = 2n family, n in {1 .. nmax5}
  int64_t nmax5 = 0;
  if (2 * a > b) {
    const int64_t num = (2 * a - b) * K;
    nmax5 = (num + 2 * b - 1) / (2 * b) - 1;  // ceil((f - 1/2)K) - 1
  }

  MessageAssignment out;
  out.K = K;
  out.sets.assign(K + 1, TransmitSet{});
  for (int i = 1; i <= K; ++i) {
    TransmitSet& T = out.sets[i];
    if (i == 1 && a > 0 && a * K <= b) {
      T.add(0);
      T.add(1);
    } else if (i == 1 && a * K > b) {
      T.add(1);
      T.add(2);
    } else if (i == K) {
      T.add(K - 2);
      T.add(K - 1);
    } else if (step > 0 && (i - 1) % step == 0 && (i - 1) / step >= 1 &&
               (i - 1) / step <= nmax4) {
      T.add(i);
      T.add(i + 1);
    } else if (i % 2 == 0 && i / 2 <= nmax5) {
      T.add(i);
      T.add(i + 1);
    } else {
      T.add(i - 1);  // i == 1 with f == 0 yields {0,1}
      T.add(i);
    }
  }
  return out;
}

void topology_reduce(const MessageAssignment& a, const NetworkRealization& r,
                     ReducedAssignment& out) {
  const int K = a.K;
  out.K = K;
  out.sets.assign(K + 1, TransmitSet{});
  out.enabled.assign(K + 1, 0);

  for (int i = 1; i <= K; ++i) {
    const TransmitSet& T = a.sets[i];
    bool enabled = false;
    for (int t : T) {
      if ((t == i || t == i - 1) && r.link_or_false(i, t)) {
        enabled = true;
        break;
      }
    }
    if (!enabled) continue;
    out.enabled[i] = 1;

    // Graph on the (sorted) transmit set: consecutive transmitters t, t+1 are
    // joined when both reach their shared receiver t+1; elements i-1 and i
    // are marked when their link to receiver i exists. Components without a
    // mark cannot deliver or cancel and are dropped.
    uint8_t comp[4];
    bool comp_marked[4] = {false, false, false, false};
    uint8_t c = 0;
    for (int k = 0; k < T.size(); ++k) {
      const int t = T.v[k];
      if (k > 0) {
        const int prev = T.v[k - 1];
        const bool edge =
            t == prev + 1 && r.link_or_false(t, prev) && r.link_or_false(t, t);
        if (!edge) ++c;
      }
      comp[k] = c;
      const bool marked = (t == i || t == i - 1) && r.link_or_false(i, t);
      if (marked) comp_marked[c] = true;
    }
    for (int k = 0; k < T.size(); ++k)
      if (comp_marked[comp[k]]) out.sets[i].add(T.v[k]);
  }
}

MessageAssignment topology_reduce(const MessageAssignment& a, const NetworkRealization& r) {
  ReducedAssignment red;
  topology_reduce(a, r, red);
  MessageAssignment out;
  out.K = a.K;
  out.sets = std::move(red.sets);
  return out;
}

}  // namespace dofsim
