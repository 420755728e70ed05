// Copyright 2026 The glim Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "glim/cli.hpp"

#include <algorithm>
#include <cstdint>
#include <exception>
#include <map>
#include <optional>
#include <sstream>

#include <CLI11.hpp>
#include <toml.hpp>

#include "glim/experiments/registry.hpp"
#include "glim/generators/ensembles.hpp"
#include "glim/graph/graph_io.hpp"
#include "glim/graph/neighborhood.hpp"
#include "glim/spectral/eigensolvers.hpp"
#include "glim/spectral/identities.hpp"
#include "glim/spectral/operators.hpp"
#include "glim/spectral/spectrum.hpp"

namespace glim::cli {
namespace {

using json = nlohmann::json;

json toml_node_to_json(const toml::node& node) {
  if (const auto* t = node.as_table()) {
    json j = json::object();
    for (const auto& [k, v] : *t) j[std::string(k.str())] = toml_node_to_json(v);
    return j;
  }
  if (const auto* a = node.as_array()) {
    json j = json::array();
    for (const auto& v : *a) j.push_back(toml_node_to_json(v));
    return j;
  }
  if (const auto* s = node.as_string()) return s->get();
  if (const auto* i = node.as_integer()) return i->get();
  if (const auto* f = node.as_floating_point()) return f->get();
  if (const auto* b = node.as_boolean()) return b->get();
  throw std::invalid_argument("unsupported TOML value (dates and times are not parameters)");
}

// Value of a --set k=v pair: JSON when it parses, else a string.
json parse_scalar(const std::string& text) {
  try {
    return json::parse(text);
  } catch (const json::exception&) {
    return text;
  }
}

void emit(const std::string& path, const std::string& contents, std::ostream& out) {
  if (path.empty() || path == "-") {
    out << contents;
  } else {
    write_file_atomic(path, contents);
  }
}

std::string eigen_csv(const std::vector<std::complex<double>>& values) {
  return complex_scatter_csv(values);
}

struct GenOptions {
  std::string ensemble;
  std::size_t n = 0;
  double d = 4.0;
  std::size_t dim = 2;
  double p = 0.5;
  bool simple = false;
  std::optional<std::uint64_t> seed;
  std::string out;
};

int cmd_gen(const GenOptions& o, std::ostream& out) {
  if (!o.seed) throw std::invalid_argument("gen needs --seed");
  EnsembleParams ep;
  ep.n = o.n;
  ep.d = o.d;
  ep.dim = o.dim;
  ep.p = o.p;
  ep.simple = o.simple;
  emit(o.out, to_glim_string(sample_ensemble(o.ensemble, ep, Seed{*o.seed})), out);
  return kExitOk;
}

struct SpecOptions {
  std::string in;
  std::string op = "adjacency";
  std::string out;
  std::string format = "json";
  std::size_t moments = 6;
  std::size_t bins = 100;
  std::size_t top = 10;
  bool dense = false;
  std::optional<std::size_t> extreme;
};

int cmd_spec(const SpecOptions& o, std::ostream& out) {
  if (o.dense && o.extreme) throw std::invalid_argument("--dense and --extreme are exclusive");
  const MarkedGraph g = load_glim(o.in);
  const std::size_t k = o.extreme.value_or(o.top);
  std::optional<SpectrumReport> report;
  json extremes;
  if (o.op == "adjacency") {
    const SparseOperator a = weighted_adjacency(g);
    if (!a.is_hermitian()) throw std::invalid_argument("marks are not Hermitian; use --op nb");
    const bool fits = g.vertex_count() <= kDenseSymmetricLimit;
    if (o.dense && !fits) throw std::invalid_argument("graph above the dense limit");
    if (fits && !o.extreme) {
      report = a.is_real() ? make_spectrum_report(eig_dense_symmetric(a.to_dense_real()),
                                                  o.moments, o.bins)
                           : make_spectrum_report(eig_dense_hermitian(a.to_dense()), o.moments,
                                                  o.bins);
    } else {
      const auto ex = eig_extreme_symmetric(a, k);
      extremes = {{"largest", ex.largest}, {"smallest", ex.smallest},
                  {"residuals", ex.residuals}};
      if (!o.extreme) extremes["note"] = "graph above the dense limit; extreme eigenvalues only";
    }
  } else if (o.op == "nb") {
    const bool fits = g.half_edge_count() <= 4000;
    if (o.dense && !fits) throw std::invalid_argument("operator above the dense limit");
    if (fits && !o.extreme) {
      report = make_spectrum_report(nb_spectrum_dense(g), o.moments);
    } else {
      const auto top = eig_top_nonsymmetric(non_backtracking(g), k);
      json vals = json::array();
      for (auto z : top.values) vals.push_back({z.real(), z.imag()});
      extremes = {{"top", vals}, {"residuals", top.residuals}};
      if (!o.extreme) {
        extremes["note"] = "operator above the dense limit; largest-modulus eigenvalues only";
      }
    }
  } else {
    throw std::invalid_argument("unknown operator '" + o.op + "' (expected adjacency or nb)");
  }
  if (o.format == "csv") {
    if (!report) throw std::invalid_argument("csv output needs the full spectrum");
    emit(o.out, eigen_csv(report->eigenvalues), out);
  } else {
    json j = report ? report->to_json() : extremes;
    j["operator"] = o.op;
    j["source"] = o.in;
    emit(o.out, j.dump(2) + "\n", out);
  }
  return kExitOk;
}

struct CensusOptions {
  std::string in;
  std::uint32_t r = 1;
  std::string out;
  std::string format = "json";
};

int cmd_census(const CensusOptions& o, std::ostream& out) {
  const auto d = neighborhood_distribution(load_glim(o.in), o.r);
  if (o.format == "csv") {
    std::ostringstream s;
    s << "code,size,exact,count,weight\n";
    for (const auto& e : d.entries) {
      s << e.cls.hex() << ',' << e.cls.size << ',' << (e.cls.exact ? 1 : 0) << ',' << e.count
        << ',' << json(e.weight).dump() << '\n';
    }
    emit(o.out, s.str(), out);
  } else {
    emit(o.out, to_json(d).dump(2) + "\n", out);
  }
  return kExitOk;
}

int cmd_nb_scatter(const std::string& in, const std::string& path, std::ostream& out) {
  emit(path, complex_scatter_csv(nb_spectrum_linearized(load_glim(in))), out);
  return kExitOk;
}

struct ExpOptions {
  std::string name;
  std::string config;
  std::optional<std::uint64_t> seed;
  std::optional<double> n, d, eps;
  std::optional<std::size_t> trials;
  std::vector<std::string> sets;
  std::string out;
  std::string format = "json";
  std::size_t jobs = 0;
};

int cmd_exp(const ExpOptions& o, std::ostream& out, std::ostream& err) {
  json params = json::object();
  std::string name = o.name;
  std::string out_path = o.out;
  std::size_t jobs = o.jobs;
  if (!o.config.empty()) {
    json cfg = toml_to_json(read_file(o.config));
    if (cfg.contains("experiment")) {
      const auto cfg_name = cfg["experiment"].get<std::string>();
      if (!name.empty() && name != cfg_name) {
        throw std::invalid_argument("config is for experiment '" + cfg_name + "', not '" +
                                    name + "'");
      }
      name = cfg_name;
      cfg.erase("experiment");
    }
    if (cfg.contains("out")) {
      if (out_path.empty()) out_path = cfg["out"].get<std::string>();
      cfg.erase("out");
    }
    if (cfg.contains("jobs")) {
      if (jobs == 0) jobs = cfg["jobs"].get<std::size_t>();
      cfg.erase("jobs");
    }
    params = cfg;
  }
  if (name.empty()) throw std::invalid_argument("exp needs an experiment name");
  if (o.seed) params["seed"] = *o.seed;
  auto integral = [](double x) {
    return x == static_cast<double>(static_cast<long long>(x)) ? json(static_cast<long long>(x))
                                                               : json(x);
  };
  if (o.n) params["n"] = integral(*o.n);
  if (o.d) params["d"] = integral(*o.d);
  if (o.eps) params["eps"] = *o.eps;
  if (o.trials) params["trials"] = *o.trials;
  for (const auto& kv : o.sets) {
    const auto eq = kv.find('=');
    if (eq == std::string::npos || eq == 0) {
      throw std::invalid_argument("--set expects key=value, got '" + kv + "'");
    }
    params[kv.substr(0, eq)] = parse_scalar(kv.substr(eq + 1));
  }
  RunOptions run;
  run.jobs = jobs;
  const ExperimentReport report = run_experiment(name, params, run);
  if (o.format == "csv") {
    std::ostringstream s;
    s << "check,value,relation,threshold,pass,gating\n";
    for (const auto& c : report.checks) {
      s << c.name << ',' << json(c.value).dump() << ',' << c.relation << ','
        << json(c.threshold).dump() << ',' << (c.pass ? 1 : 0) << ',' << (c.gating ? 1 : 0)
        << '\n';
    }
    emit(out_path, s.str(), out);
  } else if (out_path.empty() || out_path == "-") {
    out << report.to_json().dump(2) << '\n';
  } else {
    write_report(out_path, report);
  }
  err << report.name << ": " << (report.pass() ? "pass" : "fail") << " ("
      << report.wall_clock_s << " s)\n";
  return report.pass() ? kExitOk : kExitVerdictFail;
}

}  // namespace

json toml_to_json(const std::string& text) {
  try {
    return toml_node_to_json(toml::parse(text));
  } catch (const toml::parse_error& e) {
    std::ostringstream s;
    s << "malformed config: " << e.description() << " at line " << e.source().begin.line;
    throw std::invalid_argument(s.str());
  }
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"glim: local limits and spectra of random graphs"};
  app.require_subcommand(1);
  app.set_version_flag("--version", "glim 0.1.0");

  GenOptions gen;
  auto* g = app.add_subcommand("gen", "sample a random graph to a .glim file");
  g->add_option("ensemble", gen.ensemble, "ensemble name")->required();
  g->add_option("--n", gen.n, "vertices (box side for percolation)")->required();
  g->add_option("--d", gen.d, "degree or mean degree");
  g->add_option("--dim", gen.dim, "lattice dimension for percolation");
  g->add_option("--p", gen.p, "edge probability for percolation");
  g->add_flag("--simple", gen.simple, "reject loops and multi-edges (regular models)");
  g->add_option("--seed", gen.seed, "random seed (required)");
  g->add_option("--out", gen.out, "output path, stdout if omitted");

  SpecOptions spec;
  auto* s = app.add_subcommand("spec", "spectrum report of a graph operator");
  s->add_option("graph,--in", spec.in, "input .glim file")->required();
  s->add_option("--op,--operator", spec.op, "adjacency or nb");
  s->add_flag("--dense", spec.dense, "full dense spectrum (error above the dense limit)");
  s->add_option("--extreme", spec.extreme, "only the k extreme eigenvalues, iteratively");
  s->add_option("--out", spec.out, "output path, stdout if omitted");
  s->add_option("--format", spec.format, "json or csv")->check(CLI::IsMember({"json", "csv"}));
  s->add_option("--moments", spec.moments, "highest moment reported");
  s->add_option("--bins", spec.bins, "histogram bins");
  s->add_option("--top", spec.top, "eigenvalues kept when above the dense limit");

  CensusOptions census;
  auto* c = app.add_subcommand("census", "neighborhood distribution of a graph");
  c->add_option("graph,--in", census.in, "input .glim file")->required();
  c->add_option("--r", census.r, "ball radius");
  c->add_option("--out", census.out, "output path, stdout if omitted");
  c->add_option("--format", census.format, "json or csv")->check(CLI::IsMember({"json", "csv"}));

  std::string scatter_in, scatter_out;
  auto* nb = app.add_subcommand("nb-scatter", "non-backtracking spectrum as re,im CSV");
  nb->add_option("graph,--in", scatter_in, "input .glim file")->required();
  nb->add_option("--out", scatter_out, "output path, stdout if omitted");

  ExpOptions exp;
  auto* e = app.add_subcommand("exp", "run a named experiment preset");
  e->add_option("name", exp.name, "experiment name");
  e->add_option("--config", exp.config, "TOML parameter file");
  e->add_option("--seed", exp.seed, "seed (overrides the preset seed)");
  e->add_option("--n", exp.n, "size parameter");
  e->add_option("--d", exp.d, "degree parameter");
  e->add_option("--eps", exp.eps, "tolerance parameter");
  e->add_option("--trials", exp.trials, "number of trials");
  e->add_option("--set", exp.sets, "extra parameter key=value (repeatable)");
  e->add_option("--out", exp.out, "report path, stdout if omitted");
  e->add_option("--format", exp.format, "json or csv")->check(CLI::IsMember({"json", "csv"}));
  e->add_option("--jobs", exp.jobs, "parallel trials (default GLIM_JOBS or all cores)");

  auto* l = app.add_subcommand("list", "list experiment presets");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::CallForVersion&) {
    out << "glim 0.1.0\n";
    return kExitOk;
  } catch (const CLI::ParseError& ex) {
    err << "error: " << ex.what() << "\n";
    return kExitError;
  }

  try {
    if (g->parsed()) return cmd_gen(gen, out);
    if (s->parsed()) return cmd_spec(spec, out);
    if (c->parsed()) return cmd_census(census, out);
    if (nb->parsed()) return cmd_nb_scatter(scatter_in, scatter_out, out);
    if (e->parsed()) return cmd_exp(exp, out, err);
    if (l->parsed()) {
      for (const auto& p : experiment_presets()) out << p.name << "\t" << p.summary << "\n";
      return kExitOk;
    }
  } catch (const std::exception& ex) {
    err << "error: " << ex.what() << "\n";
    return kExitError;
  }
  return kExitError;
}

}  // namespace glim::cli
