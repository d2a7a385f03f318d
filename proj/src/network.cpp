#include "dofsim/network.hpp"

#include <cstdio>
#include <cstdlib>

namespace dofsim {

bool NetworkRealization::link_present(int rx, int tx) const {
  const bool valid = rx >= 1 && rx <= topo_.K && tx >= 1 && tx <= topo_.K &&
                     (tx == rx || tx == rx - 1);
  if (!valid) {
    std::fprintf(stderr, "link_present: (%d,%d) is not a potential link (K=%d)\n", rx, tx,
                 topo_.K);
    std::abort();
  }
  return tx == rx ? direct(rx) : cross(rx);
}

NetworkRealization sample_realization(const NetworkTopology& topo, double p, uint64_t seed) {
  SplitMix64 rng(derive_seed(seed, 0x6c696e6bULL));
  std::vector<uint8_t> present(topo.link_count());
  for (int l = 0; l < topo.link_count(); ++l) {
    present[l] = rng.next_unit() < p ? 0 : 1;
  }
  return NetworkRealization(topo, std::move(present));
}

ChannelCoefficients sample_coefficients(const NetworkRealization& r, uint64_t seed) {
  SplitMix64 rng(derive_seed(seed, 0x636f6566ULL));
  ChannelCoefficients c;
  c.topo = r.topology();
  c.value.assign(c.topo.link_count(), 0);
  for (int l = 0; l < c.topo.link_count(); ++l) {
    // Draw for every slot so values do not depend on the erasure pattern.
    int64_t v = rng.next_coefficient();
    if (r.raw_bits()[l]) c.value[l] = v;
  }
  return c;
}

}  // namespace dofsim
