#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "moymf/analysis.hpp"
#include "moymf/diagram.hpp"
#include "moymf/quotient.hpp"
#include "moymf/reduce.hpp"

using namespace moymf;

namespace {

struct InputError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

Diagram read_diagram(const std::string& path, std::optional<int> level = std::nullopt) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  DiagramOptions opt;
  opt.level = level;
  return parse_diagram(ss.str(), opt);
}

void write_file(const std::string& path, const std::string& text) {
  std::ofstream out(path);
  if (!out) throw InputError("cannot write " + path);
  out << text;
}

int report(const RelationReport& r, const std::string& format) {
  if (format == "json")
    std::cout << r.to_json().dump(2) << "\n";
  else
    std::cout << r.to_text();
  return r.pass ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Koszul matrix factorizations of colored MOY diagrams"};
  app.require_subcommand(1);
  std::string file, format = "text", out, log_path;
  int cutoff = default_cutoff();
  std::optional<int> level;
  bool force = false;

  auto* compile_cmd = app.add_subcommand("compile", "print the Koszul data of a diagram");
  compile_cmd->add_option("file", file)->required();
  compile_cmd->add_option("--out", out, "write to a file instead of stdout");
  compile_cmd->add_option("--format", format)->check(CLI::IsMember({"text", "json"}));

  auto* potential_cmd = app.add_subcommand("potential", "boundary potential");
  potential_cmd->add_option("file", file)->required();

  auto* euler_cmd = app.add_subcommand("euler", "Euler characteristic of a closed diagram");
  euler_cmd->add_option("file", file)->required();
  euler_cmd->add_option("--cutoff", cutoff, "degree cutoff");
  euler_cmd->add_option("--n", level, "override the level");

  auto* poincare_cmd = app.add_subcommand("poincare", "graded dimension of the reduced base ring");
  poincare_cmd->add_option("file", file)->required();
  poincare_cmd->add_option("--cutoff", cutoff, "degree cutoff");

  auto* reduce_cmd = app.add_subcommand("reduce", "exclude internal variables");
  reduce_cmd->add_option("file", file)->required();
  reduce_cmd->add_option("--log", log_path, "write the reduction log as JSON");
  reduce_cmd->add_flag("--force", force, "apply exclusions the regularity check cannot certify");
  reduce_cmd->add_option("--format", format)->check(CLI::IsMember({"text", "json"}));

  std::string relation;
  std::optional<int> n;
  std::vector<int> colors, params;
  auto* verify_cmd = app.add_subcommand("verify", "check one relation");
  verify_cmd->add_option("relation", relation)->required()->check(CLI::IsMember(relation_names()));
  verify_cmd->add_option("--n", n, "level");
  verify_cmd->add_option("--colors", colors, "colors, followed by --n")->delimiter(',');
  verify_cmd->add_option("--params", params, "full parameter list");
  verify_cmd->add_option("--format", format)->check(CLI::IsMember({"text", "json"}));
  verify_cmd->add_flag("--force", force);

  auto* cross_cmd = app.add_subcommand("crosscheck", "euler characteristic against graph evaluation");
  cross_cmd->add_option("file", file)->required();
  cross_cmd->add_option("--format", format)->check(CLI::IsMember({"text", "json"}));

  int qn = 0, qi = 0;
  auto* qbinom_cmd = app.add_subcommand("qbinom", "balanced Gaussian binomial");
  qbinom_cmd->add_option("n", qn)->required();
  qbinom_cmd->add_option("i", qi)->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    ReduceOptions opt;
    opt.cutoff = cutoff;
    opt.force = force;
    if (*compile_cmd) {
      auto c = compile(read_diagram(file));
      std::string text = format == "json" ? to_json(c.mf).dump(2) + "\n" : to_text(c.mf);
      if (out.empty())
        std::cout << text;
      else
        write_file(out, text);
    } else if (*potential_cmd) {
      std::cout << boundary_potential(read_diagram(file)).str() << "\n";
    } else if (*euler_cmd) {
      auto ev = evaluate_diagram(read_diagram(file, level), opt);
      std::cout << euler_characteristic(ev.homology).str() << "\n";
    } else if (*poincare_cmd) {
      auto d = read_diagram(file);
      auto c = compile(d);
      auto red = is_closed(d) ? reduce_closed(c.mf, opt) : reduce_open(c.mf, c.internal_vars(), opt);
      if (red.contractible) {
        std::cout << "0\n";
        return 0;
      }
      auto top = red.mf.base->top_degree(cutoff);
      int limit = top ? *top : cutoff;
      std::cout << red.mf.base->dimension_series(limit).shifted(red.mf.shift).str();
      if (!top) std::cout << " + O(q^" << limit + 1 + red.mf.shift << ")";
      std::cout << "\n";
    } else if (*reduce_cmd) {
      auto d = read_diagram(file);
      auto c = compile(d);
      auto red = is_closed(d) ? reduce_closed(c.mf, opt) : reduce_open(c.mf, c.internal_vars(), opt);
      if (!log_path.empty()) write_file(log_path, to_json(red.log).dump(2) + "\n");
      if (red.contractible)
        std::cout << (format == "json" ? "{\"contractible\": true}\n" : "contractible\n");
      else
        std::cout << (format == "json" ? to_json(red.mf).dump(2) + "\n" : to_text(red.mf));
    } else if (*verify_cmd) {
      std::vector<int> p = params;
      if (p.empty()) {
        p = colors;
        if (n) p.push_back(*n);
      }
      return report(verify_relation(relation, p, opt), format);
    } else if (*cross_cmd) {
      return report(oracle_crosscheck(read_diagram(file), opt), format);
    } else if (*qbinom_cmd) {
      std::cout << qbinomial(qn, qi).str() << "\n";
    }
  } catch (const SyntaxError& e) {
    std::cerr << file << ":" << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 0;
}
