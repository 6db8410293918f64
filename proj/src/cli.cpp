#include "gyro/cli.hpp"

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "gyro/analytic.hpp"
#include "gyro/corpus.hpp"
#include "gyro/engine.hpp"
#include "gyro/io.hpp"

namespace gyro {

namespace {

constexpr int kExitPass = 0;
constexpr int kExitFail = 1;
constexpr int kExitUsage = 2;

struct Document {
  std::string command;
  bool pass = true;
  Report report;
  std::vector<std::pair<std::string, std::string>> data;

  void put(const std::string& key, const std::string& value) {
    data.emplace_back(key, value);
  }
  void put(const std::string& key, const char* value) {
    data.emplace_back(key, value);
  }
  void put(const std::string& key, bool value) {
    data.emplace_back(key, value ? "true" : "false");
  }
  void finish(const Report& r) {
    report = r;
    pass = pass && r.pass;
  }
};

std::string fmt(double v) {
  std::ostringstream os;
  os.precision(17);
  os << v;
  return os.str();
}

void print_text(const Document& doc, std::ostream& out) {
  out << "command: " << doc.command << "\n";
  for (const auto& [k, v] : doc.data) out << k << ": " << v << "\n";
  out << "checks_run: " << doc.report.checks_run << "\n";
  if (doc.report.max_deviation > 0.0)
    out << "max_deviation: " << fmt(doc.report.max_deviation) << "\n";
  if (doc.report.vacuous) out << "vacuous: true\n";
  for (const auto& [k, v] : doc.report.notes) out << k << ": " << v << "\n";
  if (!doc.report.pass) {
    out << "failed_check: " << doc.report.check << "\n";
    if (!doc.report.witness.empty())
      out << "witness: " << doc.report.witness << "\n";
  }
  out << "pass: " << (doc.pass ? "true" : "false") << "\n";
}

void print_json(const Document& doc, std::ostream& out) {
  nlohmann::ordered_json j;
  j["command"] = doc.command;
  j["pass"] = doc.pass;
  nlohmann::ordered_json data = nlohmann::ordered_json::object();
  for (const auto& [k, v] : doc.data) data[k] = v;
  j["data"] = data;
  nlohmann::ordered_json rep;
  rep["pass"] = doc.report.pass;
  rep["vacuous"] = doc.report.vacuous;
  rep["checks_run"] = doc.report.checks_run;
  rep["max_deviation"] = doc.report.max_deviation;
  rep["check"] = doc.report.check;
  rep["witness"] = doc.report.witness;
  nlohmann::ordered_json notes = nlohmann::ordered_json::array();
  for (const auto& [k, v] : doc.report.notes)
    notes.push_back({{"key", k}, {"value", v}});
  rep["notes"] = notes;
  j["report"] = rep;
  out << j.dump(2) << "\n";
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open " + path);
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

FiniteGyrogroup load_gyro(const std::string& path, Document& doc) {
  ValidationOutcome outcome = parse_gyro(read_file(path));
  if (!outcome.ok()) {
    doc.pass = false;
    doc.finish(outcome.report);
    throw outcome;  // caught by the dispatcher; exit 1
  }
  if (outcome.relabeling) doc.put("relabeled", true);
  return *std::move(outcome.group);
}

FiniteTopology load_topo(const std::string& path, int carrier,
                         Document& doc) {
  const ParsedTopology parsed = parse_topo(read_file(path), carrier);
  doc.put("topology_opens_given", std::to_string(parsed.given_opens));
  if (parsed.topology.opens_enumerable())
    doc.put("topology_opens_completed",
            std::to_string(parsed.completed_opens));
  if (parsed.completion_added_sets())
    doc.put("topology_completion", "closure added sets");
  return parsed.topology;
}

// labels for distinct gyration permutations, identity first; inputs with
// more distinct gyrations than letters get a count instead of a grid
void describe_gyrations(const FiniteGyrogroup& g, Document& doc) {
  const int n = g.size();
  std::vector<std::vector<int>> distinct;
  std::vector<int> id(n);
  for (int i = 0; i < n; ++i) id[i] = i;
  distinct.push_back(id);

  std::string grid;
  bool overflow = false;
  auto label_of = [&](const std::vector<int>& perm) -> char {
    for (std::size_t i = 0; i < distinct.size(); ++i)
      if (distinct[i] == perm) return i == 0 ? 'I' : char('A' + i - 1);
    distinct.push_back(perm);
    if (distinct.size() > 27) overflow = true;
    return overflow ? '?' : char('A' + distinct.size() - 2);
  };
  for (int a = 0; a < n; ++a) {
    if (a) grid += " ";
    for (int b = 0; b < n; ++b) grid += label_of(g.gyr_permutation(a, b));
  }
  if (overflow) {
    doc.put("gyr_distinct_count", std::to_string(distinct.size()));
    return;
  }
  std::string names = "I=()";
  for (std::size_t i = 1; i < distinct.size(); ++i)
    names += std::string(", ") + char('A' + i - 1) + "=" +
             cycle_notation(distinct[i]);
  doc.put("gyr_distinct", names);
  doc.put("gyr_table", grid);
}

void put_classification(const Classification& c, Document& doc) {
  doc.put("paratopological", c.paratopological);
  if (!c.paratopological) {
    doc.put("paratopological_witness", c.paratopological_witness);
  } else {
    doc.put("strongly", c.strongly);
    doc.put("topological", c.topological);
    doc.put("hs", to_string(*c.hs));
    doc.put("whs", to_string(*c.whs));
    doc.put("omega_balanced", c.omega_balanced);
  }
  doc.put("separation", to_string(c.sep));
  doc.put("topologically_periodic", c.topologically_periodic);
  doc.put("two_pseudocompact", c.two_pseudocompact);
  doc.put("character", std::to_string(c.cardinals.character));
  doc.put("pseudocharacter", std::to_string(c.cardinals.pseudocharacter));
  doc.put("lindelof", std::to_string(c.cardinals.lindelof));
}

std::string join_elements(Mask m) {
  std::string out;
  for_each_element(m, [&](int i) {
    if (!out.empty()) out += " ";
    out += std::to_string(i);
  });
  return out.empty() ? "-" : out;
}

double default_tolerance_from_env() {
  if (const char* env = std::getenv("GYRO_DEFAULT_TOL")) {
    try {
      return std::stod(env);
    } catch (const std::exception&) {
      throw std::runtime_error("GYRO_DEFAULT_TOL is not a number");
    }
  }
  return kDefaultTolerance;
}

RefineMode parse_mode(const std::string& text) {
  if (text == "t0") return RefineMode::t0;
  if (text == "t1") return RefineMode::t1;
  if (text == "t2") return RefineMode::t2;
  throw CLI::ValidationError("--mode", "expected t0, t1 or t2");
}

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out,
            std::ostream& err) {
  CLI::App app{"finite and analytic gyrogroup toolkit"};
  app.require_subcommand(1);
  app.fallthrough();
  bool json = false;
  app.add_flag("--json", json, "emit the report as a single JSON document");

  std::string gyro_path, topo_path, by_set, u0_set, mode_text = "t0";
  std::string model = "mobius";
  std::vector<std::string> base_sets, u0_sets, product_paths, product_topos;
  int generator = 0;
  int bound = kSubgroupScanBound;
  bool force = false;
  std::size_t samples = 1000;
  std::uint64_t seed = 1;
  double light_speed = 1.0;
  double tolerance = kDefaultTolerance;
  try {
    tolerance = default_tolerance_from_env();
  } catch (const std::runtime_error& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  }

  CLI::App* validate_cmd =
      app.add_subcommand("validate", "check the gyrogroup axioms on a table");
  validate_cmd->add_option("table", gyro_path, ".gyro file")->required();

  CLI::App* identities_cmd = app.add_subcommand(
      "identities", "run the exhaustive identity catalog on a table");
  identities_cmd->add_option("table", gyro_path, ".gyro file")->required();

  CLI::App* subs_cmd = app.add_subcommand(
      "subgyrogroups", "enumerate subgyrogroups with L/normality flags");
  subs_cmd->add_option("table", gyro_path, ".gyro file")->required();
  subs_cmd->add_option("--bound", bound, "carrier bound for the subset scan");
  subs_cmd->add_flag("--force", force, "override the scan bound");

  CLI::App* quotient_cmd =
      app.add_subcommand("quotient", "coset gyrogroup by an invariant "
                                     "subgyrogroup");
  quotient_cmd->add_option("table", gyro_path, ".gyro file")->required();
  quotient_cmd->add_option("--by", by_set, "members of N, comma-separated")
      ->required();

  CLI::App* cyclic_cmd =
      app.add_subcommand("cyclic", "cyclic subgyrogroup generated by an "
                                   "element");
  cyclic_cmd->add_option("table", gyro_path, ".gyro file")->required();
  cyclic_cmd->add_option("--gen", generator, "generator index")->required();

  CLI::App* classify_cmd = app.add_subcommand(
      "classify", "full classification of a (table, topology) pair");
  classify_cmd->add_option("table", gyro_path, ".gyro file")->required();
  classify_cmd->add_option("--topo", topo_path, ".topo file")->required();

  CLI::App* gen_cmd = app.add_subcommand(
      "generate-topology", "topology generated by a neighborhood family");
  gen_cmd->add_option("table", gyro_path, ".gyro file")->required();
  gen_cmd->add_option("--base", base_sets,
                      "neighborhood of 0 as comma-separated indices "
                      "(repeatable)")
      ->required();

  CLI::App* refine_cmd = app.add_subcommand(
      "refine", "projective refinement onto a separated first-countable "
                "quotient");
  refine_cmd->add_option("table", gyro_path, ".gyro file")->required();
  refine_cmd->add_option("--topo", topo_path, ".topo file")->required();
  refine_cmd->add_option("--u0", u0_set, "target neighborhood of 0")
      ->required();
  refine_cmd->add_option("--mode", mode_text, "t0, t1 or t2");

  CLI::App* embed_cmd = app.add_subcommand(
      "embed", "diagonal embedding into the product of refinement quotients");
  embed_cmd->add_option("table", gyro_path, ".gyro file")->required();
  embed_cmd->add_option("--topo", topo_path, ".topo file")->required();
  embed_cmd->add_option("--u0", u0_sets,
                        "refinement targets (repeatable; default: the "
                        "gyration-invariant open neighborhoods of 0)");
  embed_cmd->add_option("--mode", mode_text, "t0, t1 or t2");

  CLI::App* product_cmd =
      app.add_subcommand("product", "componentwise product of tables");
  product_cmd->add_option("tables", product_paths, ".gyro files")
      ->required()
      ->expected(-1);
  product_cmd->add_option("--topo", product_topos,
                          "matching .topo files (repeatable)");

  CLI::App* analytic_cmd = app.add_subcommand(
      "analytic", "seeded identity suites on the disk or ball realization");
  analytic_cmd->add_option("--model", model, "mobius or einstein")
      ->check(CLI::IsMember({"mobius", "einstein"}));
  analytic_cmd->add_option("--samples", samples, "number of random triples");
  analytic_cmd->add_option("--seed", seed, "sampler seed");
  analytic_cmd->add_option("--c", light_speed, "light speed (einstein)");
  analytic_cmd->add_option("--tol", tolerance, "comparison tolerance");

  CLI::App* corpus_cmd = app.add_subcommand(
      "corpus", "all invariant suites over the bundled corpus and its "
                "pairwise products");
  (void)corpus_cmd;

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) {
      app.exit(e, out, err);
      return kExitPass;
    }
    app.exit(e, err, err);
    return kExitUsage;
  }

  Document doc;
  try {
    if (*validate_cmd) {
      doc.command = "validate";
      ValidationOutcome outcome = parse_gyro(read_file(gyro_path));
      if (!outcome.ok()) {
        doc.finish(outcome.report);
      } else {
        doc.put("carrier", std::to_string(outcome.group->size()));
        if (outcome.relabeling) doc.put("relabeled", true);
        describe_gyrations(*outcome.group, doc);
        doc.put("gyrocommutative", is_gyrocommutative(*outcome.group));
        doc.finish(outcome.report);
      }
    } else if (*identities_cmd) {
      doc.command = "identities";
      const FiniteGyrogroup g = load_gyro(gyro_path, doc);
      doc.put("carrier", std::to_string(g.size()));
      doc.finish(identity_suite_exhaustive(g));
    } else if (*subs_cmd) {
      doc.command = "subgyrogroups";
      const FiniteGyrogroup g = load_gyro(gyro_path, doc);
      const auto subs = enumerate_subgyrogroups(g, bound, force);
      doc.put("count", std::to_string(subs.size()));
      for (const auto& s : subs)
        doc.put("subgyrogroup",
                format_set(s.members) + " L=" + (s.is_L ? "yes" : "no") +
                    " gyr-stable=" + (s.gyr_stable ? "yes" : "no") +
                    " normal=" + (s.is_normal ? "yes" : "no"));
      doc.finish(Report{});
    } else if (*quotient_cmd) {
      doc.command = "quotient";
      const FiniteGyrogroup g = load_gyro(gyro_path, doc);
      bool zero_added = false;
      const Mask n_mask = parse_index_set(by_set, g.size(), true, &zero_added);
      if (zero_added) doc.put("notice", "identity adjoined to --by");
      const QuotientResult q = quotient(g, n_mask);
      doc.put("by", format_set(n_mask));
      doc.put("quotient_carrier", std::to_string(q.quotient.size()));
      for (std::size_t i = 0; i < q.cosets.size(); ++i)
        doc.put("coset_" + std::to_string(i), format_set(q.cosets[i]));
      std::string projection;
      for (int x = 0; x < g.size(); ++x) {
        if (x) projection += " ";
        projection += std::to_string(q.projection[x]);
      }
      doc.put("projection", projection);
      doc.put("gyrocommutative", is_gyrocommutative(q.quotient));
      doc.finish(Report{});
    } else if (*cyclic_cmd) {
      doc.command = "cyclic";
      const FiniteGyrogroup g = load_gyro(gyro_path, doc);
      if (generator < 0 || generator >= g.size())
        throw std::invalid_argument("generator outside the carrier");
      const CyclicSubgyrogroup cyc = cyclic_subgyrogroup(g, generator);
      doc.put("generator", std::to_string(generator));
      doc.put("order", std::to_string(cyc.order));
      doc.put("members", join_elements(cyc.info.members));
      doc.put("is_L", cyc.info.is_L);
      doc.put("normal", cyc.info.is_normal);
      doc.finish(Report{});
    } else if (*classify_cmd) {
      doc.command = "classify";
      const FiniteGyrogroup g = load_gyro(gyro_path, doc);
      const FiniteTopology t = load_topo(topo_path, g.size(), doc);
      put_classification(classify(g, t), doc);
      doc.finish(Report{});
    } else if (*gen_cmd) {
      doc.command = "generate-topology";
      const FiniteGyrogroup g = load_gyro(gyro_path, doc);
      std::vector<Mask> family;
      for (const auto& text : base_sets) {
        bool added = false;
        family.push_back(parse_index_set(text, g.size(), true, &added));
        if (added)
          doc.put("notice", "identity adjoined to " + format_set(family.back()));
      }
      GeneratedTopology gen = generate_topology(g, family);
      if (gen.ok()) {
        if (gen.topology->opens_enumerable())
          for (Mask o : gen.topology->opens()) doc.put("open", format_set(o));
        put_classification(classify(g, *gen.topology), doc);
      }
      doc.finish(gen.report);
    } else if (*refine_cmd) {
      doc.command = "refine";
      const FiniteGyrogroup g = load_gyro(gyro_path, doc);
      const FiniteTopology t = load_topo(topo_path, g.size(), doc);
      bool added = false;
      const Mask u0 = parse_index_set(u0_set, g.size(), true, &added);
      if (added) doc.put("notice", "identity adjoined to u0");
      const RefinementResult res =
          projective_refine(g, t, u0, parse_mode(mode_text));
      doc.put("u0", format_set(u0));
      if (res.infeasible) {
        doc.put("infeasible", true);
        doc.put("reason", res.infeasibility_reason);
      } else if (res.quotient) {
        doc.put("core", format_set(res.core));
        doc.put("quotient_carrier",
                std::to_string(res.quotient->quotient.size()));
        doc.put("certified", res.certified);
      }
      doc.finish(res.report);
    } else if (*embed_cmd) {
      doc.command = "embed";
      const FiniteGyrogroup g = load_gyro(gyro_path, doc);
      const FiniteTopology t = load_topo(topo_path, g.size(), doc);
      const RefineMode mode = parse_mode(mode_text);
      constexpr std::size_t kTargetCap = 64;
      const bool defaulted = u0_sets.empty();
      std::vector<Mask> targets;
      if (defaulted) {
        // one refinement per gyration-invariant open neighborhood of 0
        if (t.opens_enumerable() &&
            t.open_neighborhoods(0).size() <= kTargetCap) {
          for (Mask o : t.open_neighborhoods(0)) {
            bool invariant = true;
            for (int x = 0; x < g.size() && invariant; ++x)
              for (int y = 0; y < g.size(); ++y)
                if (g.gyr_image(x, y, o) != o) {
                  invariant = false;
                  break;
                }
            if (invariant) targets.push_back(o);
          }
        } else {
          targets.push_back(t.minimal_neighborhood(0));
        }
      } else {
        for (const auto& text : u0_sets)
          targets.push_back(parse_index_set(text, g.size(), true));
      }
      std::vector<RefinementResult> refs;
      bool infeasible = false;
      for (Mask u0 : targets) {
        RefinementResult res = projective_refine(g, t, u0, mode);
        if (res.infeasible) {
          doc.put("infeasible_for", format_set(u0));
          doc.finish(res.report);
          infeasible = true;
          break;
        }
        // quotients with a repeated core add nothing to the diagonal
        if (defaulted) {
          bool seen = false;
          for (const auto& prev : refs)
            if (prev.core == res.core) {
              seen = true;
              break;
            }
          if (seen) continue;
        }
        refs.push_back(std::move(res));
      }
      if (!infeasible && !refs.empty()) {
        const EmbeddingReport emb = diagonal_embedding(g, t, refs);
        doc.put("quotients", std::to_string(refs.size()));
        doc.put("injective", emb.injective);
        doc.put("continuous", emb.continuous);
        doc.put("open_onto_image", emb.open_onto_image);
        doc.put("embedding", emb.embedding);
        if (!emb.injective) doc.put("kernel_witness", emb.kernel_witness);
        doc.finish(emb.report);
      }
    } else if (*product_cmd) {
      doc.command = "product";
      if (!product_topos.empty() &&
          product_topos.size() != product_paths.size())
        throw std::invalid_argument(
            "--topo count must match the number of tables");
      std::vector<Instance> factors;
      for (std::size_t i = 0; i < product_paths.size(); ++i) {
        Document scratch;
        FiniteGyrogroup g = load_gyro(product_paths[i], scratch);
        FiniteTopology t = product_topos.empty()
                               ? FiniteTopology::discrete(g.size())
                               : load_topo(product_topos[i], g.size(), scratch);
        factors.push_back({product_paths[i], std::move(g), std::move(t)});
      }
      const ProductResult prod = product(factors);
      doc.put("factors", std::to_string(factors.size()));
      doc.put("carrier", std::to_string(prod.instance.group.size()));
      doc.put("gyrocommutative", is_gyrocommutative(prod.instance.group));
      if (!product_topos.empty())
        put_classification(
            classify(prod.instance.group, prod.instance.topology), doc);
      doc.finish(prod.preservation);
    } else if (*analytic_cmd) {
      doc.command = "analytic";
      AnalyticOptions opts;
      opts.samples = samples;
      opts.seed = seed;
      doc.put("model", model);
      doc.put("samples", std::to_string(samples));
      doc.put("seed", std::to_string(seed));
      doc.put("tolerance", fmt(tolerance));
      if (model == "mobius") {
        const MobiusGyrogroup g(tolerance);
        Report r = analytic_suite(g, opts);
        r.absorb(mobius_gyr_agreement(g, samples, seed));
        doc.finish(r);
      } else {
        doc.put("c", fmt(light_speed));
        const EinsteinGyrogroup g(light_speed, tolerance);
        doc.finish(analytic_suite(g, opts));
      }
    } else if (*corpus_cmd) {
      doc.command = "corpus";
      doc.finish(corpus::corpus_suite());
    }
  } catch (const ValidationOutcome& outcome) {
    // already folded into the document by load_gyro
  } catch (const ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const CLI::ValidationError& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::runtime_error& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  }

  if (json)
    print_json(doc, out);
  else
    print_text(doc, out);
  return doc.pass ? kExitPass : kExitFail;
}

}  // namespace gyro
