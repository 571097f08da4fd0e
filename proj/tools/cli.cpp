// Copyright 2026 The metdim Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "cli.hpp"

#include <CLI11.hpp>
#include <algorithm>
#include <fstream>
#include <iomanip>
#include <istream>
#include <ostream>
#include <sstream>
#include <thread>

#include <json.hpp>

#include "metdim/characterize.hpp"
#include "metdim/distance.hpp"
#include "metdim/enumerate.hpp"
#include "metdim/error.hpp"
#include "metdim/extremal.hpp"
#include "metdim/graph6.hpp"
#include "metdim/metric.hpp"
#include "metdim/report_json.hpp"
#include "metdim/twins.hpp"

namespace metdim::cli {

namespace {

using Json = nlohmann::ordered_json;

struct Options {
  bool json = false;
  std::string input;
  std::size_t beta = 0;
  Distance diameter = 0;
  bool dot = false;
  std::string meta;
  std::size_t n_max = 0;
  unsigned jobs = std::max(1U, std::thread::hardware_concurrency());
  std::string out_path;
  std::string counterexamples_path;
};

std::string_view trim(std::string_view s) {
  const auto* ws = " \t\r\n";
  const auto first = s.find_first_not_of(ws);
  if (first == std::string_view::npos) return {};
  return s.substr(first, s.find_last_not_of(ws) - first + 1);
}

// Calls fn on the graph named by `arg`, or on every graph6 line of `in` when
// arg is "-". Returns the largest status fn returned.
template <typename Fn>
int for_each_input(const std::string& arg, std::istream& in, Fn&& fn) {
  if (arg != "-") return static_cast<int>(fn(parse_graph6(trim(arg))));
  int status = kOk;
  std::string line;
  while (std::getline(in, line)) {
    std::string_view text = trim(line);
    constexpr std::string_view kHeader = ">>graph6<<";
    if (text.substr(0, kHeader.size()) == kHeader) {
      text.remove_prefix(kHeader.size());
    }
    if (text.empty()) continue;
    status = std::max(status, static_cast<int>(fn(parse_graph6(text))));
  }
  return status;
}

std::string join(const std::vector<Vertex>& vs) {
  std::string s;
  for (std::size_t i = 0; i < vs.size(); ++i) {
    if (i > 0) s += ',';
    s += std::to_string(vs[i]);
  }
  return s;
}

void require_connected(const Graph& g) {
  if (!is_connected(g)) throw PreconditionError("graph is not connected");
}

int cmd_dim(const Options& o, std::istream& in, std::ostream& out) {
  return for_each_input(o.input, in, [&](const Graph& g) {
    require_connected(g);
    const auto result = metric_dimension(g, SolverOptions{o.jobs});
    const Distance d = diameter(g);
    if (o.json) {
      out << Json{{"n", g.order()},
                  {"D", d},
                  {"beta", result.beta},
                  {"witness", result.witness}}
                 .dump()
          << '\n';
    } else {
      out << "beta=" << result.beta << " witness={" << join(result.witness)
          << "} diameter=" << d << " n=" << g.order() << '\n';
    }
    return kOk;
  });
}

int cmd_twin(const Options& o, std::istream& in, std::ostream& out) {
  return for_each_input(o.input, in, [&](const Graph& g) {
    require_connected(g);
    const TwinGraph tg = twin_graph(g);
    DiameterRelation rel{0, 0, false};
    if (g.order() > 1) rel = quotient_diameter_relation(g);
    const std::string quotient = serialize_graph6(tg.quotient);
    if (o.json) {
      Json classes = Json::array();
      for (const auto& c : tg.classes) {
        classes.push_back(Json{{"members", c.members},
                               {"kind", std::string(1, kind_symbol(c.kind))}});
      }
      out << Json{{"n", g.order()},
                  {"classes", classes},
                  {"quotient", quotient},
                  {"D", rel.diameter},
                  {"quotient_D", rel.quotient_diameter},
                  {"collapsed", rel.collapsed}}
                 .dump()
          << '\n';
    } else {
      out << "n=" << g.order() << " classes=";
      for (std::size_t i = 0; i < tg.classes.size(); ++i) {
        if (i > 0) out << ' ';
        out << '{' << join(tg.classes[i].members) << '}'
            << kind_symbol(tg.classes[i].kind);
      }
      out << " quotient=" << quotient << " diameter=" << rel.diameter
          << " quotient_diameter=" << rel.quotient_diameter << '\n';
    }
    return kOk;
  });
}

int cmd_check_min(const Options& o, std::istream& in, std::ostream& out) {
  return for_each_input(o.input, in, [&](const Graph& g) {
    const auto verdict = decide_min_order(g);
    out << verdict_json(verdict) << '\n';
    return verdict.accepted ? kOk : kRejected;
  });
}

void emit_graph(const Options& o, const Graph& g, std::string_view name,
                std::ostream& out) {
  if (o.dot) {
    out << to_dot(g, name);
  } else {
    out << serialize_graph6(g) << '\n';
  }
}

int cmd_gen_broom(const Options& o, std::ostream& out) {
  emit_graph(o, build_broom(o.beta, o.diameter), "broom", out);
  return kOk;
}

int cmd_gen_max(const Options& o, std::ostream& out) {
  const MaxGraph mg = build_max_graph(o.beta, o.diameter);
  if (!o.meta.empty()) {
    std::ofstream meta(o.meta);
    if (!meta) throw Error("cannot open " + o.meta);
    meta << max_graph_sidecar_json(mg) << '\n';
  }
  emit_graph(o, mg.graph, "max", out);
  return kOk;
}

std::ofstream open_output(const std::string& path) {
  std::ofstream f(path);
  if (!f) throw Error("cannot open " + path);
  return f;
}

int cmd_verify(const Options& o, std::ostream& out) {
  const VerificationRun run = verify_characterization(o.n_max, o.jobs);
  if (!o.out_path.empty()) {
    auto f = open_output(o.out_path);
    for (const auto& r : run.reports) f << report_json(r) << '\n';
  }
  if (!o.counterexamples_path.empty()) {
    auto f = open_output(o.counterexamples_path);
    for (const auto& g6 : run.summary.counterexamples) f << g6 << '\n';
  }
  const auto& s = run.summary;
  if (o.json) {
    out << summary_json(s) << '\n';
  } else {
    out << "n_max=" << s.n_max << " graphs=" << s.graphs
        << " disagreements=" << s.disagreements << '\n';
    for (const auto& [label, count] : s.by_label) {
      out << "  " << std::left << std::setw(28) << label << std::right
          << count << '\n';
    }
    for (const auto& g6 : s.counterexamples) out << "counterexample " << g6 << '\n';
  }
  return s.disagreements == 0 ? kOk : kCounterexample;
}

int cmd_bounds(const Options& o, std::ostream& out) {
  const BoundsSummary b = verify_bounds(o.n_max, o.jobs);
  if (o.json) {
    out << bounds_json(b) << '\n';
  } else {
    out << "beta  D  graphs  min_n  beta+D  max_n  max_order  ok\n";
    for (const auto& r : b.rows) {
      out << std::setw(4) << r.beta << std::setw(3) << r.diameter
          << std::setw(8) << r.graphs << std::setw(7) << r.min_order
          << std::setw(8) << r.formula_min << std::setw(7) << r.max_order
          << std::setw(11) << r.formula_max << "  "
          << (r.min_ok && r.max_ok ? "yes" : "NO") << '\n';
    }
    out << (b.ok ? "all bounds hold" : "bound violated") << '\n';
  }
  return b.ok ? kOk : kCounterexample;
}

}  // namespace

int run(const std::vector<std::string>& args, std::istream& in,
        std::ostream& out, std::ostream& err) {
  Options o;
  CLI::App app{"Exact metric dimension toolkit", "metdim"};
  app.require_subcommand(1, 1);
  app.add_flag("--json", o.json, "Machine-readable JSON output");

  auto graph_arg = [&](CLI::App* sub) {
    sub->add_option("graph", o.input, "graph6 string, or - for stdin lines")
        ->required();
    sub->fallthrough();
  };
  auto* dim = app.add_subcommand("dim", "Metric dimension, basis, diameter");
  graph_arg(dim);
  dim->add_option("--jobs", o.jobs, "Worker threads")
      ->check(CLI::PositiveNumber);
  graph_arg(app.add_subcommand("twin", "Twin classes and quotient"));
  graph_arg(app.add_subcommand("check-min", "Decide beta = n - D"));

  auto gen = [&](const std::string& name, const std::string& help) {
    auto* sub = app.add_subcommand(name, help);
    sub->add_option("--beta", o.beta, "Metric dimension")->required();
    sub->add_option("--diam", o.diameter, "Diameter")->required();
    sub->add_flag("--dot", o.dot, "Emit DOT instead of graph6");
    sub->fallthrough();
    return sub;
  };
  gen("gen-broom", "Minimum-order witness");
  gen("gen-max", "Maximum-order construction")
      ->add_option("--meta", o.meta, "Write coordinates and basis as JSON");

  auto* verify = app.add_subcommand("verify", "Exhaustive characterization check");
  verify->add_option("--nmax", o.n_max, "Largest order")->required();
  verify->add_option("--jobs", o.jobs, "Worker threads")
      ->check(CLI::PositiveNumber);
  verify->add_option("--out", o.out_path, "JSON-lines report file");
  verify->add_option("--counterexamples", o.counterexamples_path,
                     "graph6 file of disagreeing graphs");
  verify->fallthrough();

  auto* bounds = app.add_subcommand("bounds", "Order bounds per (beta, D)");
  bounds->add_option("--nmax", o.n_max, "Largest order")->required();
  bounds->add_option("--jobs", o.jobs, "Worker threads")
      ->check(CLI::PositiveNumber);
  bounds->fallthrough();

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kUsage;
  }

  const std::string name = app.get_subcommands().front()->get_name();
  try {
    if (name == "dim") return cmd_dim(o, in, out);
    if (name == "twin") return cmd_twin(o, in, out);
    if (name == "check-min") return cmd_check_min(o, in, out);
    if (name == "gen-broom") return cmd_gen_broom(o, out);
    if (name == "gen-max") return cmd_gen_max(o, out);
    if (name == "verify") return cmd_verify(o, out);
    return cmd_bounds(o, out);
  } catch (const Error& e) {
    err << "metdim: " << e.what() << '\n';
  }
  return kInputError;
}

}  // namespace metdim::cli
