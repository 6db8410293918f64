#include "gyro/corpus.hpp"

#include <algorithm>
#include <array>

#include "gyro/analytic.hpp"

namespace gyro::corpus {

namespace {

FiniteGyrogroup cyclic_group(int n) {
  std::vector<std::vector<int>> table(n, std::vector<int>(n));
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) table[a][b] = (a + b) % n;
  return require_valid(table);
}

}  // namespace

FiniteGyrogroup g8() {
  static const std::vector<std::vector<int>> table = {
      {0, 1, 2, 3, 4, 5, 6, 7}, {1, 3, 0, 2, 7, 4, 5, 6},
      {2, 0, 3, 1, 5, 6, 7, 4}, {3, 2, 1, 0, 6, 7, 4, 5},
      {4, 5, 7, 6, 3, 2, 0, 1}, {5, 6, 4, 7, 2, 0, 1, 3},
      {6, 7, 5, 4, 0, 1, 3, 2}, {7, 4, 6, 5, 1, 3, 2, 0}};
  return require_valid(table);
}

FiniteGyrogroup z2() { return cyclic_group(2); }
FiniteGyrogroup z4() { return cyclic_group(4); }
FiniteGyrogroup k4() { return direct_product(z2(), z2()); }

FiniteGyrogroup s3() {
  // permutations of {0,1,2}: e, (01), (02), (12), (012), (021); the table
  // composes p_a after p_b
  static const std::array<std::array<int, 3>, 6> perm = {{{0, 1, 2},
                                                          {1, 0, 2},
                                                          {2, 1, 0},
                                                          {0, 2, 1},
                                                          {1, 2, 0},
                                                          {2, 0, 1}}};
  auto index_of = [&](const std::array<int, 3>& p) {
    for (int i = 0; i < 6; ++i)
      if (perm[i] == p) return i;
    return -1;
  };
  std::vector<std::vector<int>> table(6, std::vector<int>(6));
  for (int a = 0; a < 6; ++a)
    for (int b = 0; b < 6; ++b) {
      std::array<int, 3> c{};
      for (int x = 0; x < 3; ++x) c[x] = perm[a][perm[b][x]];
      table[a][b] = index_of(c);
    }
  return require_valid(table);
}

FiniteGyrogroup g8_z2() { return direct_product(g8(), z2()); }

FiniteTopology g8_coset_topology() {
  return FiniteTopology(8, {mask_of({0, 1, 2, 3}), mask_of({4, 5, 6, 7})});
}

namespace {

FiniteTopology coset_topology(const FiniteGyrogroup& g, Mask subgroup) {
  GeneratedTopology gen = generate_topology(g, {subgroup});
  if (!gen.ok())
    throw std::logic_error("bundled coset topology rejected: " +
                           gen.report.check);
  return std::move(*gen.topology);
}

}  // namespace

std::vector<Instance> bundled_instances() {
  std::vector<Instance> out;
  auto push = [&](const std::string& name, const FiniteGyrogroup& g) {
    out.push_back({name + "/discrete", g, FiniteTopology::discrete(g.size())});
    out.push_back(
        {name + "/indiscrete", g, FiniteTopology::indiscrete(g.size())});
  };
  const FiniteGyrogroup G8 = g8();
  push("g8", G8);
  out.push_back({"g8/coset4", G8, g8_coset_topology()});
  out.push_back({"g8/coset0346", G8, coset_topology(G8, mask_of({0, 3, 4, 6}))});

  push("z2", z2());
  const FiniteGyrogroup Z4 = z4();
  push("z4", Z4);
  out.push_back({"z4/coset02", Z4, coset_topology(Z4, mask_of({0, 2}))});

  const FiniteGyrogroup K4 = k4();
  push("k4", K4);
  out.push_back({"k4/coset01", K4, coset_topology(K4, mask_of({0, 1}))});

  const FiniteGyrogroup S3 = s3();
  push("s3", S3);
  out.push_back({"s3/coset-a3", S3, coset_topology(S3, mask_of({0, 4, 5}))});

  const FiniteGyrogroup G8Z2 = g8_z2();
  push("g8xz2", G8Z2);
  out.push_back({"g8xz2/coset8", G8Z2,
                 coset_topology(G8Z2, mask_of({0, 1, 2, 3, 4, 5, 6, 7}))});
  return out;
}

std::vector<Instance> pairwise_products(int max_carrier) {
  const auto base = bundled_instances();
  std::vector<Instance> out;
  for (std::size_t i = 0; i < base.size(); ++i)
    for (std::size_t j = i; j < base.size(); ++j) {
      if (base[i].group.size() * base[j].group.size() > max_carrier) continue;
      out.push_back(product(base[i], base[j]).instance);
    }
  return out;
}

namespace {

void sweep_instance(const Instance& inst, Report& r) {
  const FiniteGyrogroup& g = inst.group;
  const FiniteTopology& t = inst.topology;
  auto fail = [&](const std::string& what, const std::string& witness) {
    r.fail(inst.name + ": " + what, witness);
  };

  // the full identity catalog must hold exhaustively
  {
    Report ids = identity_suite_exhaustive(g);
    r.checks_run += ids.checks_run;
    if (!ids.pass) {
      fail("identity suite: " + ids.check, ids.witness);
      return;
    }
  }

  const Classification c = classify(g, t);
  r.count();
  if (!c.paratopological) {
    fail("bundled instance is not paratopological", c.paratopological_witness);
    return;
  }

  // inverse continuity at 0 decides continuity everywhere on strongly
  // instances
  if (c.strongly) {
    r.count();
    if (check_topological(g, t) != inverse_continuous_at_zero(g, t)) {
      fail("inverse continuity at 0 vs everywhere", "");
      return;
    }
  }
  // strongly + weak Hausdorff number 1 forces a topological gyrogroup
  // (finite instances are P-spaces)
  if (c.strongly && c.whs == HsValue::one) {
    r.count();
    if (!c.topological) {
      fail("strongly with weak Hausdorff number 1 but not topological", "");
      return;
    }
  }
  // 2-pseudocompact + strongly + weak Hausdorff number 1 => topological
  if (c.two_pseudocompact && c.strongly && c.whs == HsValue::one) {
    r.count();
    if (!c.topological) {
      fail("2-pseudocompact strongly instance with whs 1 not topological",
           "");
      return;
    }
  }
  r.count();
  if (c.whs == HsValue::one && c.hs == HsValue::unbounded) {
    fail("weak Hausdorff number below Hausdorff number violated", "");
    return;
  }
  // finite instances are first-countable, hence omega-balanced
  r.count();
  if (!c.omega_balanced) {
    fail("finite instance not omega-balanced", "");
    return;
  }
  r.count();
  if (!c.topologically_periodic) {
    fail("finite instance not topologically periodic", "");
    return;
  }
  r.count();
  if (!c.two_pseudocompact) {
    fail("finite instance not 2-pseudocompact", "");
    return;
  }
  // cardinal chains on comparable finite values
  if (c.whs == HsValue::one) {
    r.count();
    if (!(1 <= c.cardinals.pseudocharacter &&
          c.cardinals.pseudocharacter <= c.cardinals.character)) {
      fail("cardinal chain whs <= psi <= chi violated", "");
      return;
    }
  }

  if (c.strongly) {
    Report lemmas = strongly_lemmas(g, t);
    r.checks_run += lemmas.checks_run;
    if (!lemmas.pass) {
      fail("strongly lemmas: " + lemmas.check, lemmas.witness);
      return;
    }
    Report base = base_properties(g, t);
    r.checks_run += base.checks_run;
    if (!base.pass) {
      fail("base properties: " + base.check, base.witness);
      return;
    }
  }

  // subgyrogroup sweep: exhaustive within the scan bound, cyclic beyond
  std::vector<SubgyrogroupInfo> subs;
  if (g.size() <= kSubgroupScanBound) {
    subs = enumerate_subgyrogroups(g);
  } else {
    std::vector<Mask> seen;
    for (int a = 0; a < g.size(); ++a) {
      Mask members = singleton(0);
      int v = 0;
      do {
        v = g.add(a, v);
        members |= singleton(v);
      } while (v != 0);
      if (std::find(seen.begin(), seen.end(), members) != seen.end())
        continue;
      seen.push_back(members);
      subs.push_back(cyclic_subgyrogroup(g, a).info);
    }
  }

  const bool gc = is_gyrocommutative(g);
  for (const auto& sub : subs) {
    // dual normality criteria agree (is_normal throws on disagreement; we
    // surface it as a first-class failure instead)
    const NormalityVerdict verdict = normality(g, sub.members);
    r.count();
    if (!verdict.agree()) {
      fail("normality criteria disagree", format_set(sub.members));
      return;
    }
    // gyration stability is equality (bijectivity pins the inclusion)
    for (int a = 0; a < g.size(); ++a)
      for (int b = 0; b < g.size(); ++b) {
        const Mask img = g.gyr_image(a, b, sub.members);
        if (subset(img, sub.members) && img != sub.members) {
          fail("gyration image strictly inside a subgyrogroup",
               format_set(sub.members));
          return;
        }
      }
    r.count();

    // Hausdorff-number monotonicity for the subspace instance
    const Instance k = subgyrogroup_instance(inst, sub.members, "sub");
    const Classification ck = classify(k.group, k.topology);
    if (c.paratopological && ck.paratopological) {
      r.count();
      if (ck.hs == HsValue::unbounded && c.hs == HsValue::one) {
        fail("Hausdorff number grows on a subgyrogroup",
             format_set(sub.members));
        return;
      }
      r.count();
      if (ck.whs == HsValue::unbounded && c.whs == HsValue::one) {
        fail("weak Hausdorff number grows on a subgyrogroup",
             format_set(sub.members));
        return;
      }
    }

    if (verdict.value()) {
      const QuotientResult q = quotient(g, sub.members);
      r.count();
      if (gc && !is_gyrocommutative(q.quotient)) {
        fail("quotient of a gyrocommutative instance not gyrocommutative",
             format_set(sub.members));
        return;
      }
    }
  }
}

}  // namespace

Report corpus_suite() {
  Report r;

  // analytic realizations, seeded for reproducibility
  const AnalyticOptions analytic_opts{.samples = 1000, .seed = 1};
  const MobiusGyrogroup mobius;
  Report disk = analytic_suite(mobius, analytic_opts);
  disk.absorb(mobius_gyr_agreement(mobius, analytic_opts.samples,
                                   analytic_opts.seed));
  r.checks_run += disk.checks_run;
  if (!disk.pass) {
    r.fail("mobius: " + disk.check, disk.witness);
    return r;
  }
  const Report ball =
      analytic_suite(EinsteinGyrogroup{1.0}, analytic_opts);
  r.checks_run += ball.checks_run;
  if (!ball.pass) {
    r.fail("einstein: " + ball.check, ball.witness);
    return r;
  }

  const auto base = bundled_instances();
  for (const auto& inst : base) {
    sweep_instance(inst, r);
    if (!r.pass) return r;
  }
  r.note("instances", std::to_string(base.size()));

  std::size_t product_count = 0;
  for (std::size_t i = 0; i < base.size(); ++i) {
    for (std::size_t j = i; j < base.size(); ++j) {
      if (base[i].group.size() * base[j].group.size() > kMaxCarrier) continue;
      ProductResult p = product(base[i], base[j]);
      r.checks_run += p.preservation.checks_run;
      if (!p.preservation.pass) {
        r.fail(p.instance.name + ": " + p.preservation.check,
               p.preservation.witness);
        return r;
      }
      sweep_instance(p.instance, r);
      if (!r.pass) return r;
      ++product_count;
    }
  }
  r.note("products", std::to_string(product_count));
  return r;
}

}  // namespace gyro::corpus
