#include <algorithm>
#include <stdexcept>

#include "gyro/engine.hpp"

namespace gyro {

namespace {

Mask subordination_image(const FiniteGyrogroup& g, Mask v, int x, int y) {
  return g.add_left(g.neg(g.add(x, y)), g.add_right(g.add_right(v, x), y));
}

bool gyr_invariant(const FiniteGyrogroup& g, Mask u) {
  const int n = g.size();
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y)
      if (g.gyr_image(x, y, u) != u) return false;
  return true;
}

// candidates for the inductive construction: gyration-invariant open
// neighborhoods of 0, largest first so the coarsest witness is preferred
std::vector<Mask> refinement_pool(const FiniteGyrogroup& g,
                                  const FiniteTopology& t, Mask u0) {
  constexpr std::size_t kPoolCap = 4096;
  std::vector<Mask> pool;
  if (t.opens_enumerable() && t.open_neighborhoods(0).size() <= kPoolCap) {
    for (Mask o : t.open_neighborhoods(0))
      if (gyr_invariant(g, o)) pool.push_back(o);
  } else {
    pool.push_back(t.carrier_mask());
    pool.push_back(t.minimal_neighborhood(0));
    if (t.is_open(u0) && gyr_invariant(g, u0)) pool.push_back(u0);
  }
  std::sort(pool.begin(), pool.end(), [](Mask a, Mask b) {
    const int pa = popcount(a), pb = popcount(b);
    return pa != pb ? pa > pb : a < b;
  });
  pool.erase(std::unique(pool.begin(), pool.end()), pool.end());
  return pool;
}

int separation_rank(Separation s) { return static_cast<int>(s); }

int mode_rank(RefineMode m) {
  switch (m) {
    case RefineMode::t0: return separation_rank(Separation::t0);
    case RefineMode::t1: return separation_rank(Separation::t1);
    case RefineMode::t2: return separation_rank(Separation::t2);
  }
  return 0;
}

}  // namespace

RefinementResult projective_refine(const FiniteGyrogroup& g,
                                   const FiniteTopology& t, Mask u0,
                                   RefineMode mode) {
  if (!check_paratopological(g, t).value || !check_strongly(g, t))
    throw std::invalid_argument(
        "projective refinement requires a strongly paratopological instance");
  if (!t.is_open(u0) || !contains(u0, 0))
    throw std::invalid_argument("u0 must be an open neighborhood of 0");

  RefinementResult res;
  Report& r = res.report;
  r.note("mode", to_string(mode));

  if (mode == RefineMode::t1 &&
      weak_hausdorff_number(g, t) != HsValue::one) {
    res.infeasible = true;
    res.infeasibility_reason =
        "mode t1 requires weak Hausdorff number 1, got unbounded";
    r.fail("infeasible", res.infeasibility_reason);
    return res;
  }
  if (mode == RefineMode::t2 && hausdorff_number(g, t) != HsValue::one) {
    res.infeasible = true;
    res.infeasibility_reason =
        "mode t2 requires Hausdorff number 1, got unbounded";
    r.fail("infeasible", res.infeasibility_reason);
    return res;
  }

  const auto pool = refinement_pool(g, t, u0);
  const int n = g.size();

  // largest invariant open neighborhood inside u0 seeds the family
  Mask u0_star = 0;
  for (Mask v : pool)
    if (subset(v, u0)) {
      u0_star = v;
      break;
    }
  if (u0_star == 0)
    throw std::logic_error("no invariant open neighborhood inside u0");
  r.note("u0_star", format_set(u0_star));

  std::vector<Mask> gamma{u0_star};
  auto member = [&](Mask v) {
    return std::find(gamma.begin(), gamma.end(), v) != gamma.end();
  };
  auto add_largest = [&](auto&& pred, const char* reason) {
    for (Mask v : pool)
      if (pred(v)) {
        if (!member(v)) gamma.push_back(v);
        return true;
      }
    res.infeasible = true;
    res.infeasibility_reason = reason;
    return false;
  };

  // grow to the set-theoretic fixed point of the inductive conditions
  for (bool changed = true; changed;) {
    changed = false;
    const std::vector<Mask> snapshot = gamma;
    const std::size_t before = gamma.size();

    for (Mask u : snapshot) {
      bool have = false;
      for (Mask v : gamma)
        if (subset(g.add_sets(v, v), u)) {
          have = true;
          break;
        }
      if (!have &&
          !add_largest([&](Mask v) { return subset(g.add_sets(v, v), u); },
                       "no invariant open V with V + V <= U"))
        return res;
    }

    for (Mask u : snapshot) {
      for (int x = 0; x < n; ++x) {
        for (int y = 0; y < n; ++y) {
          bool have1 = false;
          for (Mask v : gamma)
            if (subset(subordination_image(g, v, x, y), u)) {
              have1 = true;
              break;
            }
          if (!have1 &&
              !add_largest(
                  [&](Mask v) {
                    return subset(subordination_image(g, v, x, y), u);
                  },
                  "subordination clause (1) has no invariant witness"))
            return res;
          const Mask target = subordination_image(g, u, x, y);
          bool have2 = false;
          for (Mask v : gamma)
            if (subset(v, target)) {
              have2 = true;
              break;
            }
          if (!have2 &&
              !add_largest([&](Mask v) { return subset(v, target); },
                           "subordination clause (2) has no invariant witness"))
            return res;
        }
      }
    }

    for (Mask u : snapshot) {
      bool all_ok = true;
      int bad = -1;
      for_each_element(u, [&](int x) {
        for (Mask v : gamma)
          if (subset(g.add_left(x, v), u)) return;
        all_ok = false;
        if (bad < 0) bad = x;
      });
      if (!all_ok) {
        const int x = bad;
        if (!add_largest([&](Mask v) { return subset(g.add_left(x, v), u); },
                         "omega-good clause has no invariant witness"))
          return res;
      }
    }

    if (mode != RefineMode::t0) {
      auto probe = [&](Mask v) {
        return mode == RefineMode::t1 ? g.neg_set(v) : g.cosub_sets(v, v);
      };
      for (Mask u : snapshot) {
        Mask inter = t.carrier_mask();
        for (Mask v : gamma) inter &= probe(v);
        if (!subset(inter, u) &&
            !add_largest([&](Mask v) { return subset(probe(v), u); },
                         "separation clause has no invariant witness"))
          return res;
      }
    }

    // closed under finite intersections (intersections of invariant opens
    // are invariant opens)
    for (std::size_t i = 0; i < gamma.size(); ++i)
      for (std::size_t j = i + 1; j < gamma.size(); ++j) {
        const Mask w = gamma[i] & gamma[j];
        if (!member(w)) gamma.push_back(w);
      }

    if (gamma.size() != before) changed = true;
  }
  std::sort(gamma.begin(), gamma.end());
  res.gamma = gamma;
  r.note("gamma_size", std::to_string(gamma.size()));

  const InvariantCoreResult core = invariant_core(g, t, gamma);
  r.absorb(core.certificate);
  if (!core.certificate.pass) {
    if (core.certificate.check.find("gyrocommutativity") !=
        std::string::npos) {
      res.infeasible = true;
      res.infeasibility_reason =
          "invariant core requires gyrocommutativity without condition (d)";
    }
    return res;
  }
  res.core = core.core;

  res.quotient = quotient(g, core.core);
  const FiniteGyrogroup& h = res.quotient->quotient;
  const auto& proj = res.quotient->projection;

  std::vector<Mask> base;
  for (Mask v : gamma) {
    const Mask image_mask = image(v, [&](int x) { return proj[x]; });
    if (std::find(base.begin(), base.end(), image_mask) == base.end())
      base.push_back(image_mask);
  }
  std::sort(base.begin(), base.end());

  GeneratedTopology gen = generate_topology(h, base);
  r.absorb(gen.report);
  if (!gen.ok()) return res;
  res.quotient_topology = std::move(*gen.topology);
  const FiniteTopology& ht = *res.quotient_topology;

  // projection continuous and open against the generated topology
  for (int x = 0; x < n; ++x) {
    const Mask image_of_nbhd =
        image(t.minimal_neighborhood(x), [&](int y) { return proj[y]; });
    r.count();
    if (!subset(image_of_nbhd, ht.minimal_neighborhood(proj[x]))) {
      r.fail("projection not continuous", std::to_string(x));
      return res;
    }
    r.count();
    if (!ht.is_open(image_of_nbhd)) {
      r.fail("projection not open", std::to_string(x));
      return res;
    }
  }

  const Separation achieved = separation(ht);
  r.count();
  if (separation_rank(achieved) < mode_rank(mode)) {
    r.fail("quotient separation below the requested mode",
           to_string(achieved));
    return res;
  }
  r.note("quotient_separation", to_string(achieved));
  r.note("first_countable", "true (finite)");

  // V0 = p(U) for U in gamma with U + U <= u0_star; the coarsest such U
  Mask chosen = 0;
  bool found = false;
  for (Mask v : gamma) {
    if (subset(g.add_sets(v, v), u0_star) &&
        (!found || popcount(v) > popcount(chosen))) {
      chosen = v;
      found = true;
    }
  }
  if (!found)
    throw std::logic_error("no member with U + U inside u0_star");
  res.v0 = image(chosen, [&](int x) { return proj[x]; });
  r.note("v0", format_set(res.v0));

  Mask preimage = 0;
  for (int x = 0; x < n; ++x)
    if (contains(res.v0, proj[x])) preimage |= singleton(x);
  r.count();
  if (!subset(preimage, u0)) {
    r.fail("preimage of v0 escapes u0", format_set(preimage));
    return res;
  }
  r.note("preimage_of_v0", format_set(preimage));

  res.certified = r.pass;
  return res;
}

ProductResult product(const Instance& a, const Instance& b) {
  ProductResult out{
      Instance{a.name + "x" + b.name, direct_product(a.group, b.group),
               product_topology(a.topology, b.topology)},
      Report{}};
  Report& r = out.preservation;

  const Classification ca = classify(a.group, a.topology);
  const Classification cb = classify(b.group, b.topology);
  const Classification cp = classify(out.instance.group,
                                     out.instance.topology);

  r.count();
  if (ca.paratopological && cb.paratopological && !cp.paratopological) {
    r.fail("product lost joint continuity", cp.paratopological_witness);
    return out;
  }
  if (ca.paratopological && cb.paratopological) {
    r.count();
    if (ca.omega_balanced && cb.omega_balanced && !cp.omega_balanced) {
      r.fail("product lost omega-balance", "");
      return out;
    }
    const auto bound = [](HsValue x, HsValue y) {
      return (x == HsValue::unbounded || y == HsValue::unbounded)
                 ? HsValue::unbounded
                 : HsValue::one;
    };
    r.count();
    if (*cp.hs == HsValue::unbounded &&
        bound(*ca.hs, *cb.hs) == HsValue::one) {
      r.fail("product Hausdorff number exceeds the factor bound", "");
      return out;
    }
    r.count();
    if (*cp.whs == HsValue::unbounded &&
        bound(*ca.whs, *cb.whs) == HsValue::one) {
      r.fail("product weak Hausdorff number exceeds the factor bound", "");
      return out;
    }
  }
  r.note("carrier", std::to_string(out.instance.group.size()));
  return out;
}

ProductResult product(std::span<const Instance> instances) {
  if (instances.empty())
    throw std::invalid_argument("product of an empty family");
  ProductResult acc{instances[0], Report{}};
  acc.preservation.note("factors", std::to_string(instances.size()));
  for (std::size_t i = 1; i < instances.size(); ++i) {
    ProductResult step = product(acc.instance, instances[i]);
    step.preservation.notes.insert(step.preservation.notes.begin(),
                                   acc.preservation.notes.begin(),
                                   acc.preservation.notes.end());
    acc.instance = std::move(step.instance);
    Report merged = std::move(step.preservation);
    merged.checks_run += acc.preservation.checks_run;
    acc.preservation = std::move(merged);
    if (!acc.preservation.pass) break;
  }
  return acc;
}

EmbeddingReport diagonal_embedding(const FiniteGyrogroup& g,
                                   const FiniteTopology& t,
                                   std::span<const RefinementResult> refs) {
  if (refs.empty())
    throw std::invalid_argument("diagonal embedding needs at least one "
                                "refinement quotient");
  for (const auto& ref : refs)
    if (ref.infeasible || !ref.quotient || !ref.quotient_topology)
      throw std::invalid_argument(
          "diagonal embedding over an incomplete refinement");

  EmbeddingReport out;
  Report& r = out.report;
  const int n = g.size();

  long long carrier = 1;
  for (const auto& ref : refs) carrier *= ref.quotient->quotient.size();
  if (carrier > kMaxCarrier)
    throw std::invalid_argument("product of quotients exceeds carrier bound");

  FiniteGyrogroup pg = refs[0].quotient->quotient;
  FiniteTopology pt = *refs[0].quotient_topology;
  for (std::size_t i = 1; i < refs.size(); ++i) {
    pg = direct_product(pg, refs[i].quotient->quotient);
    pt = product_topology(pt, *refs[i].quotient_topology);
  }

  // h(x) in mixed-radix coordinates over the quotients
  std::vector<int> h(n, 0);
  for (const auto& ref : refs) {
    const int q = ref.quotient->quotient.size();
    for (int x = 0; x < n; ++x)
      h[x] = h[x] * q + ref.quotient->projection[x];
  }

  out.homomorphism = true;
  for (int a = 0; a < n && out.homomorphism; ++a)
    for (int b = 0; b < n; ++b) {
      r.count();
      if (h[g.add(a, b)] != pg.add(h[a], h[b])) {
        out.homomorphism = false;
        r.fail("diagonal map is not a homomorphism",
               "(" + std::to_string(a) + ", " + std::to_string(b) + ")");
        break;
      }
    }

  Mask kernel = 0;
  for (int x = 0; x < n; ++x)
    if (h[x] == h[0]) kernel |= singleton(x);
  Mask core_meet = full_mask(n);
  for (const auto& ref : refs) core_meet &= ref.core;
  if (kernel != core_meet)
    throw std::logic_error("kernel differs from the intersection of cores");
  out.injective = kernel == singleton(0);
  if (!out.injective) {
    const Mask nonzero = kernel & ~singleton(0);
    out.kernel_witness = std::to_string(elements(nonzero)[0]);
    r.note("kernel", format_set(kernel));
  }

  out.continuous = true;
  std::vector<Mask> h_nbhd(n);
  for (int x = 0; x < n; ++x)
    h_nbhd[x] = image(t.minimal_neighborhood(x), [&](int y) { return h[y]; });
  for (int x = 0; x < n; ++x) {
    r.count();
    if (!subset(h_nbhd[x], pt.minimal_neighborhood(h[x]))) {
      out.continuous = false;
      r.fail("diagonal map not continuous", std::to_string(x));
      break;
    }
  }

  Mask image_mask = 0;
  for (int x = 0; x < n; ++x) image_mask |= singleton(h[x]);

  out.open_onto_image = true;
  for (int x = 0; x < n && out.open_onto_image; ++x) {
    // h(U(x)) must be open in the subspace: every image point q keeps its
    // subspace neighborhood U_P(q) & image inside h(U(x))
    bool ok = true;
    for_each_element(h_nbhd[x], [&](int q) {
      if (!subset(pt.minimal_neighborhood(q) & image_mask, h_nbhd[x]))
        ok = false;
    });
    r.count();
    if (!ok) {
      out.open_onto_image = false;
      r.fail("diagonal map not open onto its image", std::to_string(x));
    }
  }

  out.image_subgyrogroup = true;
  for_each_element(image_mask, [&](int p) {
    if (!contains(image_mask, pg.neg(p))) out.image_subgyrogroup = false;
    for_each_element(image_mask, [&](int q) {
      if (!contains(image_mask, pg.add(p, q)))
        out.image_subgyrogroup = false;
    });
  });
  r.count();
  if (!out.image_subgyrogroup)
    r.fail("image is not a subgyrogroup of the product", "");

  out.embedding = out.homomorphism && out.injective && out.continuous &&
                  out.open_onto_image && out.image_subgyrogroup;
  r.note("injective", out.injective ? "true" : "false");
  r.note("embedding", out.embedding ? "true" : "false");
  r.note("product_carrier", std::to_string(pg.size()));
  if (!out.injective && r.pass)
    r.note("verdict", "not injective: kernel element " + out.kernel_witness);
  return out;
}

}  // namespace gyro
