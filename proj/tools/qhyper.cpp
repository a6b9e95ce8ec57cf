// Command line driver: runs verification suites and inspects module models.
#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <regex>

#include "qhyper/modules.hpp"
#include "qhyper/suites.hpp"

using namespace qhyper;
using nlohmann::json;

namespace {

json matrix_json(const Matrix& m) {
  json rows = json::array();
  for (int i = 0; i < m.rows(); ++i) {
    json row = json::array();
    const SparseVec r = m.row(i);
    for (int j = 0; j < m.cols(); ++j) row.push_back(r.get(j).to_string());
    rows.push_back(row);
  }
  return rows;
}

json module_json(const ModuleRep& x) {
  json gens = json::object();
  for (Gen g : {Gen::E, Gen::F, Gen::K, Gen::El, Gen::Fl}) gens[gen_name(g)] = matrix_json(x.mat(g));
  return json{{"name", x.name()}, {"dim", x.dim()}, {"labels", x.labels()}, {"generators", gens}};
}

ModuleRep parse_module(const CycloField& f, const std::string& spec) {
  static const std::regex re(R"(\s*([LWMI])\s*\(\s*(\d+)\s*\)\s*)");
  std::smatch m;
  if (!std::regex_match(spec, m, re)) throw ConfigError("module must look like L(r), W(r), M(r) or I(r): " + spec);
  const long r = std::stol(m[2].str());
  switch (m[1].str()[0]) {
    case 'L': return simple_module(f, r);
    case 'W': return weyl_W(f, r);
    case 'M': return coweyl_M(f, r);
    default: return injective_module(f, r);
  }
}

void emit(const std::string& text, const std::string& path) {
  if (path.empty() || path == "-") {
    std::cout << text;
    return;
  }
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write " + path);
  out << text;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact verification suites for the small quantum group and its hyperalgebra"};
  app.require_subcommand(1);

  RunConfig cfg;
  long weight_bound = 0;
  bool quiet = false;
  std::string json_path;
  bool json_flag = false;
  app.add_option("--ell", cfg.ell, "odd order of the root of unity (>= 3)");
  app.add_option("--trunc-degree,--degree", cfg.trunc_degree, "U-degree bound for the smash center");
  app.add_option("--window", cfg.window, "largest block index for annihilator products");
  app.add_option("--weight-bound", weight_bound, "weight bound for the lattice enumeration (default l+3)");
  app.add_option("--seed", cfg.seed, "seed for sampled property checks");
  app.add_option("--suites", cfg.suites, "suites to run")->delimiter(',');
  auto* json_opt = app.add_option("--json", json_path, "write JSON to PATH (stdout if omitted)")->expected(0, 1);
  app.add_flag("--quiet", quiet, "suppress the text table");

  auto* verify = app.add_subcommand("verify", "run verification suites");
  verify->fallthrough();
  std::vector<std::string> positional;
  verify->add_option("suite", positional, "suites (default: all)");

  auto* modules = app.add_subcommand("modules", "list or show module models");
  modules->fallthrough();
  bool list = false;
  long list_bound = -1;
  std::string show;
  modules->add_flag("--list", list, "list module families with dimensions");
  modules->add_option("--max", list_bound, "largest weight listed (default 2l)");
  auto* show_cmd = modules->add_subcommand("show", "print the generator matrices of one module");
  show_cmd->fallthrough();
  show_cmd->add_option("module", show, "L(r), W(r), M(r) or I(r)")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }
  json_flag = json_opt->count() > 0;
  if (app.get_option("--weight-bound")->count() > 0) cfg.weight_bound = weight_bound;
  cfg.suites.insert(cfg.suites.end(), positional.begin(), positional.end());
  cfg.json_path = json_path;

  try {
    validate(cfg);
    if (*modules) {
      const CycloField& f = CycloField::get(cfg.ell);
      if (*show_cmd) {
        const ModuleRep x = parse_module(f, show);
        if (json_flag) {
          emit(module_json(x).dump(2) + "\n", json_path);
        } else {
          std::cout << x.name() << "  dim " << x.dim() << "  labels";
          for (long w : x.labels()) std::cout << ' ' << w;
          std::cout << '\n';
        }
        return 0;
      }
      if (!list) throw ConfigError("modules needs --list or show");
      const long top = list_bound >= 0 ? list_bound : 2L * cfg.ell;
      json rows = json::array();
      for (long m = 0; m <= top; ++m)
        rows.push_back(json{{"m", m},
                            {"L", simple_module(f, m).dim()},
                            {"W", weyl_W(f, m).dim()},
                            {"M", coweyl_M(f, m).dim()},
                            {"I", injective_module(f, m).dim()}});
      if (json_flag) {
        emit(rows.dump(2) + "\n", json_path);
      } else {
        std::cout << "m\tL\tW\tM\tI\n";
        for (const auto& r : rows)
          std::cout << r["m"] << '\t' << r["L"] << '\t' << r["W"] << '\t' << r["M"] << '\t' << r["I"] << '\n';
      }
      return 0;
    }

    const auto reports = run(cfg);
    if (json_flag) emit(render_json(reports), json_path);
    if (!quiet && !(json_flag && (json_path.empty() || json_path == "-"))) std::cout << render_text(reports);
    return exit_status(reports);
  } catch (const ConfigError& e) {
    std::cerr << "configuration error: " << e.what() << '\n';
    return 2;
  }
}
