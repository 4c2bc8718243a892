// selfcomp: count, verify, render and the remark experiment from the shell.

#include <CLI11.hpp>

#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include "selfcomp/report.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitBudget = 2;
constexpr int kExitUsage = 3;

struct Options {
  std::int64_t a = -1, b = -1, c = -1;
  std::string method = "all";
  std::optional<std::int64_t> budget;
  std::string format = "text";
  std::string out;
  std::int64_t max_cells = 27;
  std::string parity;
  std::string index;
  std::string grid = "0..4";
  bool timing = false;
};

void emit(const std::string& text, const std::string& out) {
  if (out.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream f(out, std::ios::binary);
  if (!f) throw std::runtime_error("cannot write " + out);
  f << text;
}

selfcomp::Budget budget_of(const Options& o) {
  return o.budget ? selfcomp::Budget::uniform(*o.budget) : selfcomp::Budget{};
}

selfcomp::BoxDims dims_of(const Options& o) {
  if (o.a < 0 || o.b < 0 || o.c < 0) throw std::invalid_argument("--a, --b and --c are required and nonnegative");
  return {o.a, o.b, o.c};
}

int cmd_count(const Options& o) {
  selfcomp::RunConfig cfg{dims_of(o), selfcomp::parse_method(o.method), budget_of(o), selfcomp::parse_format(o.format),
                          o.timing};
  const auto rep = selfcomp::run_count(cfg);
  emit(selfcomp::format_count(rep, cfg.format, cfg.timing), o.out);
  for (const auto& r : rep.methods)
    if (r.status == "budget_exceeded") std::cerr << "error: " << r.message << '\n';
  return selfcomp::count_exit_code(rep, cfg.method);
}

int cmd_verify(const Options& o) {
  std::optional<selfcomp::ParityCase> parity;
  if (!o.parity.empty() && o.parity != "all") parity = selfcomp::parse_parity(o.parity);
  if (o.max_cells < 0) throw std::invalid_argument("--max-cells must be nonnegative");
  const auto rep = selfcomp::run_verify(o.max_cells, parity, budget_of(o));
  emit(selfcomp::format_verify(rep, selfcomp::parse_format(o.format)), o.out);
  return selfcomp::verify_exit_code(rep);
}

int cmd_render(const Options& o) {
  selfcomp::RenderSelector sel;
  if (o.index.empty() || o.index == "reference") {
    sel.kind = selfcomp::RenderSelector::Reference;
  } else if (o.index == "all") {
    sel.kind = selfcomp::RenderSelector::All;
  } else {
    sel.kind = selfcomp::RenderSelector::Index;
    try {
      std::size_t used = 0;
      sel.index = std::stoll(o.index, &used);
      if (used != o.index.size() || sel.index < 0) throw std::invalid_argument("");
    } catch (const std::exception&) {
      throw std::invalid_argument("--index must be a nonnegative integer, 'all' or 'reference'");
    }
  }
  const auto dims = dims_of(o);
  const auto files = selfcomp::render_files(dims, sel, budget_of(o));
  if (files.empty()) {
    std::cout << "no self-complementary plane partitions in a " << selfcomp::box_tag(dims)
              << " box (all sides odd); nothing written\n";
    return kExitOk;
  }
  const std::filesystem::path dir = o.out.empty() ? "." : o.out;
  std::filesystem::create_directories(dir);
  for (const auto& f : files) {
    std::ofstream out(dir / f.filename, std::ios::binary);
    if (!out) throw std::runtime_error("cannot write " + (dir / f.filename).string());
    out << f.svg;
    std::cout << (dir / f.filename).string() << '\n';
  }
  return kExitOk;
}

int cmd_remark(const Options& o) {
  if (o.a < 0 || o.a % 2 != 0 || o.a > 6) throw std::invalid_argument("--a must be even and at most 6");
  const std::int64_t b = o.b < 0 ? 3 : o.b;
  const auto rep = selfcomp::remark_experiment(o.a, b, selfcomp::parse_grid(o.grid));
  emit(selfcomp::format_remark(rep, selfcomp::parse_format(o.format)), o.out);
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact (-1)-enumeration and enumeration of self-complementary plane partitions"};
  app.require_subcommand(1);
  Options o;

  const auto box_flags = [&](CLI::App* sub) {
    sub->add_option("--a", o.a, "first side length");
    sub->add_option("--b", o.b, "second side length");
    sub->add_option("--c", o.c, "third side length");
  };
  const auto common_flags = [&](CLI::App* sub) {
    sub->add_option("--budget", o.budget, "uniform override for every work guard");
    sub->add_option("--format", o.format, "json, csv or text")->check(CLI::IsMember({"json", "csv", "text"}));
    sub->add_option("--out", o.out, "output path (directory for render)");
  };

  auto* count = app.add_subcommand("count", "evaluate one box by the selected methods");
  box_flags(count);
  common_flags(count);
  count->add_option("--method", o.method, "closed, pfaffian, minorsum, paths, bruteforce or all")
      ->check(CLI::IsMember({"closed", "pfaffian", "minorsum", "paths", "bruteforce", "all"}));
  count->add_flag("--timing", o.timing, "include per-method wall time");

  auto* verify = app.add_subcommand("verify", "cross-check every box up to a cell count");
  common_flags(verify);
  verify->add_option("--max-cells", o.max_cells, "largest a*b*c to sweep");
  verify->add_option("--parity", o.parity, "EEE, EOO, OEE, OOO or all");

  auto* render = app.add_subcommand("render", "write lozenge tilings as SVG");
  box_flags(render);
  common_flags(render);
  render->add_option("--index", o.index, "enumeration index, 'all' or 'reference' (default)");

  auto* remark = app.add_subcommand("experiment-remark", "factor univariate slices of the four-parameter Pfaffian");
  remark->add_option("--a", o.a, "matrix size (even, at most 6)")->required();
  remark->add_option("--b", o.b, "odd shape parameter (default 3)");
  remark->add_option("--grid", o.grid, "values for the fixed variables, e.g. 0..4 or 0,2,5");
  remark->add_option("--format", o.format, "json, csv or text")->check(CLI::IsMember({"json", "csv", "text"}));
  remark->add_option("--out", o.out, "output path");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (count->parsed()) return cmd_count(o);
    if (verify->parsed()) return cmd_verify(o);
    if (render->parsed()) return cmd_render(o);
    if (remark->parsed()) return cmd_remark(o);
  } catch (const selfcomp::BudgetExceeded& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitBudget;
  } catch (const std::invalid_argument& e) {
    std::cerr << "usage error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::out_of_range& e) {
    std::cerr << "usage error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
  return kExitUsage;
}
