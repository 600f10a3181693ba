#include "gdh/cli.hpp"

#include <chrono>
#include <fstream>
#include <iostream>
#include <optional>
#include <set>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "json.hpp"

#include "gdh/gdh.hpp"
#include "gdh/io.hpp"
#include "gdh/jump.hpp"
#include "gdh/lagrangian.hpp"
#include "gdh/lattice.hpp"
#include "gdh/search.hpp"
#include "gdh/util.hpp"

namespace gdh {

namespace {

using json = nlohmann::ordered_json;

struct Manifest {
  std::string command;
  std::vector<std::pair<std::string, std::string>> inputs;  // path, digest
  std::optional<std::uint64_t> seed;
  double wall_ms = 0.0;
  std::string result_digest;

  json to_json() const {
    json j;
    j["command"] = command;
    json in = json::object();
    for (const auto& [path, digest] : inputs) in[path] = digest;
    j["inputs"] = in;
    if (seed)
      j["seed"] = *seed;
    else
      j["seed"] = nullptr;
    j["version"] = std::string(kVersion);
    j["wall_ms"] = wall_ms;
    j["result_digest"] = result_digest;
    return j;
  }
};

std::string read_file(const std::string& path, Manifest& manifest) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::invalid_argument("cannot open file: " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  std::string data = buf.str();
  manifest.inputs.emplace_back(path, hex64(fnv1a64(data)));
  return data;
}

json gdh_to_json(const Gdh& g) {
  json j;
  j["n"] = g.vertex_count();
  j["edges"] = json::array();
  for (const auto& t : g.edges()) j["edges"].push_back(t);
  return j;
}

json family_to_json(const Family& fam) {
  json j;
  j["family"] = json::array();
  for (const auto& g : fam.members) j["family"].push_back(gdh_to_json(g));
  return j;
}

std::vector<int> parse_int_list(const std::string& csv) {
  std::vector<int> out;
  std::istringstream in(csv);
  std::string tok;
  while (std::getline(in, tok, ','))
    out.push_back(std::stoi(tok));
  return out;
}

std::string describe_map(const std::optional<std::vector<int>>& map) {
  if (!map) return "NONE";
  std::ostringstream s;
  for (std::size_t i = 0; i < map->size(); ++i) {
    if (i) s << ' ';
    s << i << "->" << (*map)[i];
  }
  return s.str();
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out,
            std::ostream& err) {
  static const std::set<std::string> known = {
      "density",     "blowup",    "lagrangian",         "contains",
      "count-copies", "exsearch", "transform",          "certify-jump",
      "catalog",     "degenerate", "construct-langlois"};

  const std::string usage =
      "usage: gdh <subcommand> [options]; subcommands: density, blowup, "
      "lagrangian, contains, count-copies, exsearch, transform, certify-jump, "
      "catalog, degenerate, construct-langlois\n";
  if (args.empty()) {
    err << usage;
    return 2;
  }
  if (args[0] == "--help" || args[0] == "-h" || args[0] == "help") {
    out << usage;
    return 0;
  }
  if (!known.count(args[0])) {
    err << "unknown subcommand '" << args[0] << "'\n" << usage;
    return 2;
  }

  CLI::App app{"extremal computations on generalized directed hypergraphs"};
  app.require_subcommand(1);

  // Shared option storage.
  std::string theory_path, gdh_path, pattern_path, host_path, family_path;
  std::string fine_path, coarse_path, input_path, mode, tlist = "1";
  std::string manifest_path;
  bool as_json = false;
  std::uint64_t seed = 1;
  std::uint64_t budget = 100'000'000;
  int threads = 0, starts = 100, nval = 0, kval = 1, tcap = 0;
  double alpha = 0.0;

  auto add_common = [&](CLI::App* sub, bool with_seed) {
    sub->add_flag("--json", as_json, "emit the JSON mirror of the result");
    sub->add_option("--threads", threads, "worker threads (0 = machine)");
    sub->add_option("--manifest", manifest_path,
                    "write the run manifest to this file instead of stderr");
    if (with_seed) sub->add_option("--seed", seed, "random seed");
  };

  auto* density_cmd = app.add_subcommand("density", "edge density");
  density_cmd->add_option("gdh", gdh_path)->required();
  density_cmd->add_option("--theory", theory_path)->required();
  add_common(density_cmd, false);

  auto* blowup_cmd = app.add_subcommand("blowup", "blow up a graph");
  blowup_cmd->add_option("theory", theory_path)->required();
  blowup_cmd->add_option("gdh", gdh_path)->required();
  blowup_cmd->add_option("--t", tlist, "comma-separated part sizes")
      ->required();
  add_common(blowup_cmd, false);

  auto* lagr_cmd =
      app.add_subcommand("lagrangian", "blowup density of a graph");
  lagr_cmd->add_option("theory", theory_path)->required();
  lagr_cmd->add_option("gdh", gdh_path)->required();
  lagr_cmd->add_option("--starts", starts, "optimizer starts");
  add_common(lagr_cmd, true);

  auto* contains_cmd =
      app.add_subcommand("contains", "find an embedding of one graph in another");
  contains_cmd->add_option("pattern", pattern_path)->required();
  contains_cmd->add_option("host", host_path)->required();
  contains_cmd->add_option("--theory", theory_path)->required();
  add_common(contains_cmd, false);

  auto* copies_cmd =
      app.add_subcommand("count-copies", "count injective homomorphisms and copies");
  copies_cmd->add_option("pattern", pattern_path)->required();
  copies_cmd->add_option("host", host_path)->required();
  copies_cmd->add_option("--theory", theory_path)->required();
  add_common(copies_cmd, false);

  auto* exsearch_cmd =
      app.add_subcommand("exsearch", "exact extremal number by branch and bound");
  exsearch_cmd->add_option("theory", theory_path)->required();
  exsearch_cmd->add_option("family", family_path)->required();
  exsearch_cmd->add_option("--n", nval, "vertex count")->required();
  exsearch_cmd->add_option("--budget", budget, "search node budget");
  add_common(exsearch_cmd, false);

  auto* transform_cmd =
      app.add_subcommand("transform", "move graphs and families between theories");
  transform_cmd->add_option("mode", mode,
                            "min-container | expand | orient-k | project")
      ->required();
  transform_cmd->add_option("fine", fine_path)->required();
  transform_cmd->add_option("coarse", coarse_path)->required();
  transform_cmd->add_option("input", input_path)->required();
  transform_cmd->add_option("--k", kval, "fine edges per coarse edge");
  add_common(transform_cmd, true);

  auto* certify_cmd = app.add_subcommand("certify-jump", "jump certificate");
  certify_cmd->add_option("theory", theory_path)->required();
  certify_cmd->add_option("family", family_path)->required();
  certify_cmd->add_option("--alpha", alpha)->required();
  certify_cmd->add_option("--n", nval, "exhaustive search size")->required();
  certify_cmd->add_option("--budget", budget, "search node budget");
  certify_cmd->add_option("--starts", starts, "optimizer starts");
  add_common(certify_cmd, true);

  auto* catalog_cmd =
      app.add_subcommand("catalog", "jump interval and known nonjumps");
  catalog_cmd->add_option("theory", theory_path)->required();
  add_common(catalog_cmd, false);

  auto* degen_cmd =
      app.add_subcommand("degenerate", "single-edge-blowup witness");
  degen_cmd->add_option("theory", theory_path)->required();
  degen_cmd->add_option("family", family_path)->required();
  degen_cmd->add_option("--t-cap", tcap, "cap on the blowup factor");
  add_common(degen_cmd, false);

  auto* langlois_cmd =
      app.add_subcommand("construct-langlois", "head/body split construction");
  langlois_cmd->add_option("--n", nval, "vertex count")->required();
  add_common(langlois_cmd, false);

  std::vector<const char*> argv;
  argv.push_back("gdh");
  for (const auto& a : args) argv.push_back(a.c_str());

  Manifest manifest;
  manifest.command = "gdh";
  for (const auto& a : args) manifest.command += " " + a;

  std::string payload;
  int status = 0;
  const auto t0 = std::chrono::steady_clock::now();
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());

    std::ostringstream body;
    body.precision(12);

    if (density_cmd->parsed()) {
      const Theory theory = parse_theory(read_file(theory_path, manifest));
      const Gdh g = parse_gdh(read_file(gdh_path, manifest), theory);
      const double d = g.density();
      if (as_json) {
        json j;
        j["n"] = g.vertex_count();
        j["edge_count"] = g.edge_count();
        j["complete_count"] = theory.complete_edge_count(g.vertex_count());
        j["density"] = d;
        body << j.dump() << "\n";
      } else {
        body << "density: " << d << "\n";
      }
    } else if (blowup_cmd->parsed()) {
      const Theory theory = parse_theory(read_file(theory_path, manifest));
      const Gdh g = parse_gdh(read_file(gdh_path, manifest), theory);
      const Gdh result = blowup(g, parse_int_list(tlist));
      body << (as_json ? gdh_to_json(result).dump() + "\n"
                       : serialize_gdh(result));
    } else if (lagr_cmd->parsed()) {
      manifest.seed = seed;
      const Theory theory = parse_theory(read_file(theory_path, manifest));
      const Gdh g = parse_gdh(read_file(gdh_path, manifest), theory);
      OptimizerConfig cfg;
      cfg.starts = starts;
      cfg.seed = seed;
      cfg.threads = threads;
      const LagrangianResult res = blowup_density(g, cfg);
      if (as_json) {
        json j;
        j["value"] = res.value;
        j["argmax"] = res.argmax;
        j["starts_used"] = res.starts_used;
        j["converged"] = res.converged;
        j["uniform_lower_bound"] = uniform_lower_bound(g);
        body << j.dump() << "\n";
      } else {
        body << "value: " << res.value << "\n";
        body << "argmax:";
        for (double w : res.argmax) body << ' ' << w;
        body << "\nconverged: " << (res.converged ? "yes" : "no")
             << "\nstarts: " << res.starts_used << "\n";
      }
    } else if (contains_cmd->parsed()) {
      const Theory theory = parse_theory(read_file(theory_path, manifest));
      const Gdh pattern = parse_gdh(read_file(pattern_path, manifest), theory);
      const Gdh host = parse_gdh(read_file(host_path, manifest), theory);
      const auto map = find_embedding(pattern, host);
      if (as_json) {
        json j;
        j["embedding"] = map ? json(*map) : json(nullptr);
        body << j.dump() << "\n";
      } else {
        body << "embedding: " << describe_map(map) << "\n";
      }
    } else if (copies_cmd->parsed()) {
      const Theory theory = parse_theory(read_file(theory_path, manifest));
      const Gdh pattern = parse_gdh(read_file(pattern_path, manifest), theory);
      const Gdh host = parse_gdh(read_file(host_path, manifest), theory);
      const std::uint64_t homs = count_injective_homs(pattern, host);
      const std::uint64_t aut = automorphism_count(pattern);
      if (as_json) {
        json j;
        j["injective_homs"] = homs;
        j["aut"] = aut;
        j["copies"] = homs / aut;
        body << j.dump() << "\n";
      } else {
        body << "injective_homs: " << homs << "\naut: " << aut
             << "\ncopies: " << homs / aut << "\n";
      }
    } else if (exsearch_cmd->parsed()) {
      const Theory theory = parse_theory(read_file(theory_path, manifest));
      const Family fam = parse_family(read_file(family_path, manifest), theory);
      SearchConfig cfg;
      cfg.budget = budget;
      cfg.threads = threads;
      const SearchResult res = extremal_number(theory, nval, fam, cfg);
      if (!res.exhaustive) status = 3;
      if (as_json) {
        json j;
        j["n"] = res.n;
        j["best_edge_count"] = res.best_edge_count;
        j["exhaustive"] = res.exhaustive;
        j["nodes_explored"] = res.nodes_explored;
        j["density_bound"] = res.density_bound;
        j["witness"] = gdh_to_json(res.witness);
        body << j.dump() << "\n";
      } else {
        body << "n: " << res.n
             << "\nbest_edge_count: " << res.best_edge_count
             << "\nexhaustive: " << (res.exhaustive ? "yes" : "no")
             << "\nnodes_explored: " << res.nodes_explored
             << "\ndensity_bound: " << res.density_bound << "\nwitness:\n"
             << serialize_gdh(res.witness);
      }
    } else if (transform_cmd->parsed()) {
      manifest.seed = seed;
      const Theory fine = parse_theory(read_file(fine_path, manifest));
      const Theory coarse = parse_theory(read_file(coarse_path, manifest));
      const TheoryPair pair(fine, coarse);
      const std::string input = read_file(input_path, manifest);
      if (mode == "min-container") {
        const Gdh result = min_container(parse_gdh(input, fine), pair);
        body << (as_json ? gdh_to_json(result).dump() + "\n"
                         : serialize_gdh(result));
      } else if (mode == "expand") {
        const Gdh result = expand_all(parse_gdh(input, coarse), pair);
        body << (as_json ? gdh_to_json(result).dump() + "\n"
                         : serialize_gdh(result));
      } else if (mode == "orient-k") {
        const Gdh result = orient_k(parse_gdh(input, coarse), pair, kval, seed);
        body << (as_json ? gdh_to_json(result).dump() + "\n"
                         : serialize_gdh(result));
      } else if (mode == "project") {
        const Family result =
            project_family(parse_family(input, coarse), pair, threads);
        body << (as_json ? family_to_json(result).dump() + "\n"
                         : serialize_family(result));
      } else {
        throw std::invalid_argument("unknown transform mode '" + mode + "'");
      }
    } else if (certify_cmd->parsed()) {
      manifest.seed = seed;
      const std::string theory_text = read_file(theory_path, manifest);
      const std::string family_text = read_file(family_path, manifest);
      const Theory theory = parse_theory(theory_text);
      const Family fam = parse_family(family_text, theory);
      SearchConfig scfg;
      scfg.budget = budget;
      scfg.threads = threads;
      OptimizerConfig ocfg;
      ocfg.starts = starts;
      ocfg.seed = seed;
      ocfg.threads = threads;
      const JumpCertificate cert = certify_jump(alpha, fam, nval, scfg, ocfg);
      if (cert.inconclusive) status = 3;
      json j;
      j["alpha"] = cert.alpha;
      j["n_used"] = cert.n_used;
      j["pi_upper"] = cert.pi_upper;
      j["member_blowup_lbs"] = cert.member_blowup_lbs;
      j["valid"] = cert.valid;
      j["inconclusive"] = cert.inconclusive;
      j["reason"] = cert.reason;
      j["theory_digest"] = hex64(fnv1a64(serialize_theory(theory)));
      j["family_digest"] = hex64(fnv1a64(serialize_family(fam)));
      if (as_json) {
        body << j.dump() << "\n";
      } else {
        body << "alpha: " << cert.alpha << "\npi_upper: " << cert.pi_upper
             << "\nmember_blowup_lbs:";
        for (double lb : cert.member_blowup_lbs) body << ' ' << lb;
        body << "\nvalid: " << (cert.valid ? "yes" : "no") << "\n";
        if (!cert.reason.empty()) body << "reason: " << cert.reason << "\n";
      }
    } else if (catalog_cmd->parsed()) {
      const Theory theory = parse_theory(read_file(theory_path, manifest));
      const double sup = jump_interval_sup(theory);
      std::vector<double> nonjumps;
      std::vector<std::pair<std::int64_t, std::int64_t>> fractions;
      std::string note;
      if (theory.arity() == 2) {
        note = "every density in [0,1) is a jump at r = 2";
      } else {
        nonjumps = nonjump_catalog(theory);
        fractions = nonjump_catalog_fractions(theory);
      }
      if (as_json) {
        json j;
        j["jump_interval_sup"] = sup;
        j["nonjumps"] = nonjumps;
        json fr = json::array();
        for (auto [num, den] : fractions)
          fr.push_back(std::to_string(num) + "/" + std::to_string(den));
        j["nonjump_fractions"] = fr;
        j["note"] = note;
        j["theory_digest"] = hex64(fnv1a64(serialize_theory(theory)));
        body << j.dump() << "\n";
      } else {
        body << "jump interval: [0, " << sup << ")\n";
        if (!note.empty()) body << note << "\n";
        body << "nonjumps:";
        for (std::size_t i = 0; i < nonjumps.size(); ++i)
          body << ' ' << fractions[i].first << '/' << fractions[i].second
               << " (" << nonjumps[i] << ")";
        body << "\n";
      }
    } else if (degen_cmd->parsed()) {
      const Theory theory = parse_theory(read_file(theory_path, manifest));
      const Family fam = parse_family(read_file(family_path, manifest), theory);
      const auto witness = degenerate_witness(fam, tcap);
      if (as_json) {
        json j;
        j["found"] = witness.has_value();
        if (witness) {
          j["member_index"] = witness->member_index;
          j["blowup_vector"] = witness->blowup_vector;
        } else {
          j["pi_lower_bound"] = jump_interval_sup(theory);
        }
        j["theory_digest"] = hex64(fnv1a64(serialize_theory(theory)));
        j["family_digest"] = hex64(fnv1a64(serialize_family(fam)));
        body << j.dump() << "\n";
      } else {
        if (witness) {
          body << "degenerate: yes (member " << witness->member_index
               << ", blowup";
          for (int t : witness->blowup_vector) body << ' ' << t;
          body << ")\n";
        } else {
          body << "degenerate: no (density at least "
               << jump_interval_sup(theory) << ")\n";
        }
      }
    } else if (langlois_cmd->parsed()) {
      const Gdh g = langlois_construction(nval);
      body << (as_json ? gdh_to_json(g).dump() + "\n" : serialize_gdh(g));
    }

    payload = body.str();
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "argument error: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  }

  const auto t1 = std::chrono::steady_clock::now();
  manifest.wall_ms =
      std::chrono::duration<double, std::milli>(t1 - t0).count();
  manifest.result_digest = hex64(fnv1a64(payload));

  out << payload;
  if (manifest_path.empty()) {
    err << manifest.to_json().dump() << "\n";
  } else {
    std::ofstream mf(manifest_path);
    mf << manifest.to_json().dump() << "\n";
  }
  return status;
}

}  // namespace gdh
