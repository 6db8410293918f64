#include "gyro/topology.hpp"

#include <algorithm>
#include <stdexcept>
#include <unordered_set>

namespace gyro {

FiniteTopology::FiniteTopology(int carrier_size,
                               const std::vector<Mask>& opens) {
  if (carrier_size < 1 || carrier_size > kMaxCarrier)
    throw std::invalid_argument("carrier size out of range");
  n_ = carrier_size;
  const Mask full = full_mask(n_);
  for (Mask o : opens)
    if (!subset(o, full))
      throw std::invalid_argument("open set " + format_set(o) +
                                  " leaves the carrier");
  // minimal neighborhood of x in the generated topology: the intersection of
  // the given sets containing x (the full carrier when none does)
  min_nbhd_.assign(n_, full);
  for (int x = 0; x < n_; ++x)
    for (Mask o : opens)
      if (contains(o, x)) min_nbhd_[x] &= o;
  enumerate();
}

FiniteTopology FiniteTopology::discrete(int n) {
  FiniteTopology t;
  t.n_ = n;
  t.min_nbhd_.resize(n);
  for (int x = 0; x < n; ++x) t.min_nbhd_[x] = singleton(x);
  t.enumerate();
  return t;
}

FiniteTopology FiniteTopology::indiscrete(int n) {
  FiniteTopology t;
  t.n_ = n;
  t.min_nbhd_.assign(n, full_mask(n));
  t.enumerate();
  return t;
}

FiniteTopology FiniteTopology::from_minimal_neighborhoods(
    int n, std::vector<Mask> nbhd) {
  if (n < 1 || n > kMaxCarrier || static_cast<int>(nbhd.size()) != n)
    throw std::invalid_argument("bad minimal-neighborhood map");
  for (int x = 0; x < n; ++x) {
    if (!contains(nbhd[x], x))
      throw std::invalid_argument("minimal neighborhood misses its point");
    bool ok = true;
    for_each_element(nbhd[x], [&](int y) {
      if (!subset(nbhd[y], nbhd[x])) ok = false;
    });
    if (!ok)
      throw std::invalid_argument(
          "minimal neighborhoods are not nested: point " + std::to_string(x));
  }
  FiniteTopology t;
  t.n_ = n;
  t.min_nbhd_ = std::move(nbhd);
  t.enumerate();
  return t;
}

void FiniteTopology::enumerate() {
  // opens are exactly the unions of minimal neighborhoods
  std::vector<Mask> distinct = min_nbhd_;
  std::sort(distinct.begin(), distinct.end());
  distinct.erase(std::unique(distinct.begin(), distinct.end()),
                 distinct.end());

  std::vector<Mask> out{0};
  std::unordered_set<Mask> seen{0};
  enumerable_ = true;
  for (Mask u : distinct) {
    const std::size_t snapshot = out.size();
    for (std::size_t i = 0; i < snapshot; ++i) {
      const Mask c = out[i] | u;
      if (seen.insert(c).second) out.push_back(c);
    }
    if (out.size() > kEnumerationCap) {
      enumerable_ = false;
      opens_.clear();
      return;
    }
  }
  std::sort(out.begin(), out.end());
  opens_ = std::move(out);
}

bool FiniteTopology::is_open(Mask w) const {
  bool ok = true;
  for_each_element(w, [&](int x) {
    if (!subset(min_nbhd_[x], w)) ok = false;
  });
  return ok;
}

Mask FiniteTopology::interior(Mask s) const {
  Mask r = 0;
  for_each_element(s, [&](int x) {
    if (subset(min_nbhd_[x], s)) r |= singleton(x);
  });
  return r;
}

Mask FiniteTopology::closure(Mask s) const {
  Mask r = 0;
  for (int x = 0; x < n_; ++x)
    if (min_nbhd_[x] & s) r |= singleton(x);
  return r;
}

std::size_t FiniteTopology::open_count() const { return opens().size(); }

const std::vector<Mask>& FiniteTopology::opens() const {
  if (!enumerable_)
    throw std::logic_error(
        "open family too large to enumerate; use minimal neighborhoods");
  return opens_;
}

std::vector<Mask> FiniteTopology::open_neighborhoods(int x) const {
  std::vector<Mask> out;
  for (Mask o : opens())
    if (contains(o, x)) out.push_back(o);
  return out;
}

FiniteTopology product_topology(const FiniteTopology& t1,
                                const FiniteTopology& t2) {
  const int n1 = t1.carrier_size(), n2 = t2.carrier_size();
  if (n1 * n2 > kMaxCarrier)
    throw std::invalid_argument("product carrier exceeds the supported size");
  std::vector<Mask> nbhd(static_cast<std::size_t>(n1) * n2);
  for (int x = 0; x < n1; ++x) {
    for (int y = 0; y < n2; ++y) {
      Mask box = 0;
      for_each_element(t1.minimal_neighborhood(x), [&](int u) {
        for_each_element(t2.minimal_neighborhood(y), [&](int v) {
          box |= singleton(u * n2 + v);
        });
      });
      nbhd[x * n2 + y] = box;
    }
  }
  return FiniteTopology::from_minimal_neighborhoods(n1 * n2, std::move(nbhd));
}

FiniteTopology subspace_topology(const FiniteTopology& t, Mask members) {
  const auto elems = elements(members);
  const int k = static_cast<int>(elems.size());
  std::vector<int> to_sub(t.carrier_size(), -1);
  for (int i = 0; i < k; ++i) to_sub[elems[i]] = i;
  std::vector<Mask> nbhd(k);
  for (int i = 0; i < k; ++i) {
    Mask m = 0;
    for_each_element(t.minimal_neighborhood(elems[i]) & members,
                     [&](int y) { m |= singleton(to_sub[y]); });
    nbhd[i] = m;
  }
  return FiniteTopology::from_minimal_neighborhoods(k, std::move(nbhd));
}

}  // namespace gyro
