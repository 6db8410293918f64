#include "gyro/finite.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <stdexcept>

namespace gyro {

namespace {

std::string pair_witness(int a, int b) {
  return "(" + std::to_string(a) + ", " + std::to_string(b) + ")";
}

std::string triple_witness(int a, int b, int c) {
  return "(" + std::to_string(a) + ", " + std::to_string(b) + ", " +
         std::to_string(c) + ")";
}

}  // namespace

std::vector<int> FiniteGyrogroup::gyr_permutation(int a, int b) const {
  const int* base = gyr_.data() + static_cast<std::size_t>(a * n_ + b) * n_;
  return std::vector<int>(base, base + n_);
}

std::vector<std::vector<int>> FiniteGyrogroup::rows() const {
  std::vector<std::vector<int>> out(n_);
  for (int a = 0; a < n_; ++a)
    out[a].assign(table_.begin() + a * n_, table_.begin() + (a + 1) * n_);
  return out;
}

Mask FiniteGyrogroup::add_sets(Mask a, Mask b) const {
  Mask r = 0;
  for_each_element(a, [&](int x) { r |= add_left(x, b); });
  return r;
}

Mask FiniteGyrogroup::add_left(int a, Mask b) const {
  return image(b, [&](int y) { return add(a, y); });
}

Mask FiniteGyrogroup::add_right(Mask a, int b) const {
  return image(a, [&](int x) { return add(x, b); });
}

Mask FiniteGyrogroup::neg_set(Mask a) const {
  return image(a, [&](int x) { return neg(x); });
}

Mask FiniteGyrogroup::gyr_image(int a, int b, Mask s) const {
  return image(s, [&](int c) { return gyr(a, b, c); });
}

Mask FiniteGyrogroup::coadd_sets(Mask a, Mask b) const {
  Mask r = 0;
  for_each_element(a, [&](int x) {
    for_each_element(b, [&](int y) { r |= singleton(coadd(*this, x, y)); });
  });
  return r;
}

Mask FiniteGyrogroup::cosub_sets(Mask a, Mask b) const {
  Mask r = 0;
  for_each_element(a, [&](int x) {
    for_each_element(b, [&](int y) { r |= singleton(cosub(*this, x, y)); });
  });
  return r;
}

ValidationOutcome validate(const std::vector<std::vector<int>>& input) {
  ValidationOutcome out;
  Report& r = out.report;

  const int n = static_cast<int>(input.size());
  if (n == 0) {
    r.fail("input shape", "empty table");
    return out;
  }
  if (n > kMaxCarrier) {
    r.fail("input shape", "carrier size " + std::to_string(n) +
                              " exceeds the supported maximum of " +
                              std::to_string(kMaxCarrier));
    return out;
  }
  for (int a = 0; a < n; ++a) {
    if (static_cast<int>(input[a].size()) != n) {
      r.fail("input shape", "row " + std::to_string(a) + " has " +
                                std::to_string(input[a].size()) +
                                " entries, expected " + std::to_string(n));
      return out;
    }
    for (int b = 0; b < n; ++b) {
      if (input[a][b] < 0 || input[a][b] >= n) {
        r.fail("input range", "entry [" + std::to_string(a) + "][" +
                                  std::to_string(b) + "] = " +
                                  std::to_string(input[a][b]) +
                                  " outside 0.." + std::to_string(n - 1));
        return out;
      }
    }
  }

  std::vector<std::vector<int>> table = input;

  // G1: locate the two-sided identity; relabel to index 0 when necessary
  int e = -1;
  for (int cand = 0; cand < n; ++cand) {
    bool ok = true;
    for (int a = 0; a < n && ok; ++a)
      ok = table[cand][a] == a && table[a][cand] == a;
    if (ok) {
      e = cand;
      break;
    }
  }
  if (e < 0) {
    r.fail("axiom G1 (identity)", "no two-sided identity element exists");
    return out;
  }
  if (e != 0) {
    std::vector<int> sigma(n);
    std::iota(sigma.begin(), sigma.end(), 0);
    std::swap(sigma[0], sigma[e]);  // involution: old index -> new index
    std::vector<std::vector<int>> relabeled(n, std::vector<int>(n));
    for (int a = 0; a < n; ++a)
      for (int b = 0; b < n; ++b)
        relabeled[sigma[a]][sigma[b]] = sigma[table[a][b]];
    table = std::move(relabeled);
    out.relabeling = sigma;
    r.note("relabeled",
           "identity was at index " + std::to_string(e) + "; swapped with 0");
  }

  auto add = [&](int a, int b) { return table[a][b]; };

  // G2: each element has exactly one two-sided inverse
  std::vector<int> neg(n, -1);
  for (int a = 0; a < n; ++a) {
    int found = -1;
    int count = 0;
    for (int b = 0; b < n; ++b) {
      if (add(a, b) == 0 && add(b, a) == 0) {
        found = b;
        ++count;
      }
    }
    r.count();
    if (count != 1) {
      r.fail("axiom G2 (inverses)",
             "element " + std::to_string(a) +
                 (count == 0 ? " has no two-sided inverse"
                             : " has " + std::to_string(count) +
                                   " two-sided inverses"));
      return out;
    }
    neg[a] = found;
  }

  // gyr[a,b] derived from the table, one permutation per pair
  std::vector<int> gyr(static_cast<std::size_t>(n) * n * n);
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) {
      int* perm = gyr.data() + static_cast<std::size_t>(a * n + b) * n;
      const int nab = neg[add(a, b)];
      for (int c = 0; c < n; ++c) perm[c] = add(nab, add(a, add(b, c)));
    }

  // G3: the derived gyration satisfies the gyroassociative law and is an
  // automorphism (bijective, addition-preserving)
  for (int a = 0; a < n; ++a) {
    for (int b = 0; b < n; ++b) {
      const int* perm = gyr.data() + static_cast<std::size_t>(a * n + b) * n;
      const int ab = add(a, b);
      for (int c = 0; c < n; ++c) {
        r.count();
        if (add(ab, perm[c]) != add(a, add(b, c))) {
          r.fail("axiom G3 (gyroassociative law)", triple_witness(a, b, c));
          return out;
        }
      }
      Mask seen = 0;
      for (int c = 0; c < n; ++c) seen |= singleton(perm[c]);
      r.count();
      if (seen != full_mask(n)) {
        r.fail("axiom G3 (gyration not bijective)", pair_witness(a, b));
        return out;
      }
      for (int c = 0; c < n; ++c) {
        for (int d = 0; d < n; ++d) {
          r.count();
          if (perm[add(c, d)] != add(perm[c], perm[d])) {
            r.fail("axiom G3 (gyration not an automorphism)",
                   pair_witness(a, b) + " at " + pair_witness(c, d));
            return out;
          }
        }
      }
    }
  }

  // G4: left loop property as equality of full permutation tables
  for (int a = 0; a < n; ++a) {
    for (int b = 0; b < n; ++b) {
      const int* lhs =
          gyr.data() + static_cast<std::size_t>(add(a, b) * n + b) * n;
      const int* rhs = gyr.data() + static_cast<std::size_t>(a * n + b) * n;
      for (int c = 0; c < n; ++c) {
        r.count();
        if (lhs[c] != rhs[c]) {
          r.fail("axiom G4 (left loop property)", triple_witness(a, b, c));
          return out;
        }
      }
    }
  }

  // rows and columns are permutations (implied by G1-G4; asserted here as an
  // internal consistency check)
  for (int a = 0; a < n; ++a) {
    Mask row = 0, col = 0;
    for (int b = 0; b < n; ++b) {
      row |= singleton(add(a, b));
      col |= singleton(add(b, a));
    }
    if (row != full_mask(n) || col != full_mask(n))
      throw std::logic_error(
          "translations not bijective despite G1-G4 holding");
  }

  FiniteGyrogroup g;
  g.n_ = n;
  g.table_.resize(static_cast<std::size_t>(n) * n);
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) g.table_[a * n + b] = table[a][b];
  g.neg_ = std::move(neg);
  g.gyr_ = std::move(gyr);
  out.group = std::move(g);
  return out;
}

FiniteGyrogroup require_valid(const std::vector<std::vector<int>>& table) {
  ValidationOutcome out = validate(table);
  if (!out.ok())
    throw std::invalid_argument("not a gyrogroup: " + out.report.check +
                                " at " + out.report.witness);
  return *std::move(out.group);
}

bool is_gyrocommutative(const FiniteGyrogroup& g) {
  const int n = g.size();
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      if (g.add(a, b) != g.gyr(a, b, g.add(b, a))) return false;
  return true;
}

bool is_subgyrogroup(const FiniteGyrogroup& g, Mask h) {
  if (!contains(h, 0)) return false;
  bool ok = true;
  for_each_element(h, [&](int a) {
    if (!contains(h, g.neg(a))) ok = false;
    for_each_element(h, [&](int b) {
      if (!contains(h, g.add(a, b))) ok = false;
    });
  });
  return ok;
}

bool is_L_subgyrogroup(const FiniteGyrogroup& g, Mask h) {
  if (!is_subgyrogroup(g, h)) return false;
  const int n = g.size();
  bool ok = true;
  for (int a = 0; a < n && ok; ++a)
    for_each_element(h, [&](int x) {
      if (g.gyr_image(a, x, h) != h) ok = false;
    });
  return ok;
}

NormalityVerdict normality(const FiniteGyrogroup& g, Mask h) {
  const int n = g.size();
  NormalityVerdict v{true, true};

  for (int a = 0; a < n; ++a) {
    for (int b = 0; b < n; ++b) {
      const Mask left = g.add_left(a, g.add_right(h, b));    // a + (N + b)
      const Mask mid = g.add_left(g.add(a, b), h);           // (a + b) + N
      const Mask right = g.add_right(g.add_left(a, h), b);   // (a + N) + b
      if (!(left == mid && mid == right)) {
        v.coset_criterion = false;
        break;
      }
    }
    if (!v.coset_criterion) break;
  }

  for (int a = 0; a < n && v.gyration_criterion; ++a) {
    for (int b = 0; b < n; ++b) {
      if (!subset(g.gyr_image(a, b, h), h)) {
        v.gyration_criterion = false;
        break;
      }
      const Mask s =
          g.add_left(g.neg(g.add(a, b)), g.add_right(g.add_right(h, a), b));
      if (s != h) {
        v.gyration_criterion = false;
        break;
      }
    }
  }
  return v;
}

bool is_normal(const FiniteGyrogroup& g, Mask h) {
  const NormalityVerdict v = normality(g, h);
  if (!v.agree())
    throw std::logic_error(
        "normality criteria disagree on subgyrogroup " + format_set(h));
  return v.value();
}

SubgyrogroupInfo describe_subgyrogroup(const FiniteGyrogroup& g, Mask h) {
  SubgyrogroupInfo info;
  info.members = h;
  info.is_L = is_L_subgyrogroup(g, h);
  const int n = g.size();
  info.gyr_stable = true;
  for (int a = 0; a < n && info.gyr_stable; ++a)
    for (int b = 0; b < n; ++b)
      if (!subset(g.gyr_image(a, b, h), h)) {
        info.gyr_stable = false;
        break;
      }
  info.is_normal = is_normal(g, h);
  info.criterion_used = NormalityCriterion::both;
  return info;
}

std::vector<SubgyrogroupInfo> enumerate_subgyrogroups(const FiniteGyrogroup& g,
                                                      int bound,
                                                      bool override_bound) {
  const int n = g.size();
  if (n > bound && !override_bound)
    throw std::invalid_argument(
        "carrier size " + std::to_string(n) + " exceeds the subset-scan " +
        "bound " + std::to_string(bound) + "; pass an explicit override");
  std::vector<SubgyrogroupInfo> out;
  const Mask limit = full_mask(n);
  for (Mask h = 1; h <= limit; h += 2) {  // subsets containing 0
    if (is_subgyrogroup(g, h)) out.push_back(describe_subgyrogroup(g, h));
    if (h == limit) break;
  }
  return out;
}

QuotientResult quotient(const FiniteGyrogroup& g, Mask n_mask) {
  if (!is_subgyrogroup(g, n_mask))
    throw std::invalid_argument("quotient by a non-subgyrogroup " +
                                format_set(n_mask));
  if (!is_normal(g, n_mask))
    throw std::invalid_argument("quotient by a non-invariant subgyrogroup " +
                                format_set(n_mask));

  const int n = g.size();
  std::vector<Mask> cosets;
  std::vector<int> proj(n, -1);
  for (int a = 0; a < n; ++a) {
    if (proj[a] >= 0) continue;
    const Mask coset = g.add_left(a, n_mask);
    const int idx = static_cast<int>(cosets.size());
    cosets.push_back(coset);
    for_each_element(coset, [&](int x) {
      if (proj[x] >= 0 && cosets[proj[x]] != coset)
        throw std::logic_error("cosets of an invariant subgyrogroup overlap");
      proj[x] = idx;
    });
  }
  // coset of 0 is N itself and lands at index 0 by the scan order
  if (cosets[0] != n_mask)
    throw std::logic_error("coset of the identity is not the subgyrogroup");

  const int q = static_cast<int>(cosets.size());
  std::vector<std::vector<int>> qtable(q, std::vector<int>(q, -1));
  for (int a = 0; a < n; ++a) {
    for (int b = 0; b < n; ++b) {
      const int i = proj[a], j = proj[b], k = proj[g.add(a, b)];
      if (qtable[i][j] < 0)
        qtable[i][j] = k;
      else if (qtable[i][j] != k)
        throw std::logic_error(
            "induced coset table depends on representatives at " +
            pair_witness(a, b));
    }
  }

  QuotientResult res{require_valid(qtable), std::move(proj),
                     std::move(cosets)};

  // projection is a homomorphism and its kernel is N
  Mask kernel = 0;
  for (int a = 0; a < n; ++a) {
    if (res.projection[a] == 0) kernel |= singleton(a);
    for (int b = 0; b < n; ++b)
      if (res.projection[g.add(a, b)] !=
          res.quotient.add(res.projection[a], res.projection[b]))
        throw std::logic_error("canonical projection is not a homomorphism");
  }
  if (kernel != n_mask)
    throw std::logic_error("kernel of the projection differs from N");

  if (is_gyrocommutative(g) && !is_gyrocommutative(res.quotient))
    throw std::logic_error(
        "quotient of a gyrocommutative gyrogroup is not gyrocommutative");

  return res;
}

CyclicSubgyrogroup cyclic_subgyrogroup(const FiniteGyrogroup& g, int a) {
  CyclicSubgyrogroup out;
  Mask members = singleton(0);
  int value = 0;
  // m.a for m = 1, 2, ... until the orbit returns to 0
  for (int m = 1;; ++m) {
    value = g.add(a, value);
    out.orbit.push_back(value);
    members |= singleton(value);
    if (value == 0) break;
    if (m > g.size())
      throw std::logic_error("scalar orbit failed to close");
  }
  // the negative direction lands inside the same set (cyclic); verified
  Mask neg_side = singleton(0);
  int nvalue = 0;
  const int na = g.neg(a);
  for (int m = 1;; ++m) {
    nvalue = g.add(na, nvalue);
    neg_side |= singleton(nvalue);
    if (nvalue == 0) break;
    if (m > g.size()) throw std::logic_error("scalar orbit failed to close");
  }
  if (neg_side != members)
    throw std::logic_error("orbits of a and -a differ");

  out.order = popcount(members);
  out.info = describe_subgyrogroup(g, members);
  if (!is_subgyrogroup(g, members))
    throw std::logic_error("cyclic orbit is not a subgyrogroup");

  // the induced structure is an associative, commutative group
  const auto elems = elements(members);
  for (int x : elems)
    for (int y : elems) {
      if (g.add(x, y) != g.add(y, x))
        throw std::logic_error("cyclic subgyrogroup is not commutative");
      for (int z : elems)
        if (g.add(g.add(x, y), z) != g.add(x, g.add(y, z)))
          throw std::logic_error("cyclic subgyrogroup is not associative");
    }
  return out;
}

FiniteGyrogroup direct_product(const FiniteGyrogroup& g1,
                               const FiniteGyrogroup& g2) {
  const int n1 = g1.size(), n2 = g2.size();
  if (n1 * n2 > kMaxCarrier)
    throw std::invalid_argument("product carrier " + std::to_string(n1 * n2) +
                                " exceeds " + std::to_string(kMaxCarrier));
  std::vector<std::vector<int>> table(n1 * n2, std::vector<int>(n1 * n2));
  for (int a1 = 0; a1 < n1; ++a1)
    for (int a2 = 0; a2 < n2; ++a2)
      for (int b1 = 0; b1 < n1; ++b1)
        for (int b2 = 0; b2 < n2; ++b2)
          table[a1 * n2 + a2][b1 * n2 + b2] =
              g1.add(a1, b1) * n2 + g2.add(a2, b2);
  return require_valid(table);
}

Report identity_suite_exhaustive(const FiniteGyrogroup& g) {
  const int n = g.size();
  std::vector<Triple<FiniteGyrogroup>> triples;
  triples.reserve(static_cast<std::size_t>(n) * n * n);
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      for (int c = 0; c < n; ++c) triples.push_back({a, b, c});
  SuiteOptions opts;
  opts.scalar_window = n;
  return identity_suite(g, triples, opts);
}

}  // namespace gyro
