#include "okbody/errors.hpp"
#include "okbody/problem.hpp"

#include <CLI11.hpp>

#include <filesystem>
#include <fstream>
#include <iostream>

namespace {

constexpr int exit_ok = 0;
constexpr int exit_validation = 2;
constexpr int exit_resource = 3;
constexpr int exit_verdict = 4;

void write_file(const std::filesystem::path& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw okbody::ValidationError("cannot write " + path.string());
  out << text;
}

} // namespace

int main(int argc, char** argv) {
  CLI::App app{"Newton-Okounkov bodies, mixed volumes and related checks"};
  app.require_subcommand(1);

  std::string input, out_path, csv_dir;
  std::optional<unsigned> dmax;
  std::optional<std::uint64_t> seed;
  okbody::RunOptions options;

  for (auto& name : okbody::subcommands) {
    auto* sub = app.add_subcommand(name);
    sub->add_option("input", input, "problem file (JSON)")->required()->check(CLI::ExistingFile);
    sub->add_option("--out", out_path, "report path (default stdout)");
    sub->add_option("--emit-csv", csv_dir, "directory for CSV tables");
    sub->add_option("--dmax", dmax, "override d_max (degree bound for sagbi)");
    sub->add_option("--seed", seed, "override the seed");
    sub->add_option("--threads", options.threads, "worker threads for sampled suites")->check(CLI::PositiveNumber);
    sub->add_option("--cap-points", options.cap_points, "lattice point cap");
    sub->add_option("--cap-dim", options.cap_dim, "dimension cap for L^k");
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? exit_ok : exit_validation;
  }
  options.d_max = dmax;
  options.seed = seed;
  const std::string subcommand = app.get_subcommands().front()->get_name();

  try {
    std::ifstream in(input);
    okbody::Json problem;
    try {
      problem = okbody::Json::parse(in);
    } catch (const okbody::Json::parse_error& e) {
      throw okbody::ValidationError(std::string("invalid JSON: ") + e.what());
    }
    auto result = okbody::run_problem(subcommand, problem, options);
    std::string text = result.report.dump(2) + "\n";
    if (out_path.empty()) std::cout << text;
    else write_file(out_path, text);
    if (!csv_dir.empty()) {
      std::filesystem::create_directories(csv_dir);
      for (auto& t : result.tables)
        write_file(std::filesystem::path(csv_dir) / (t.name + ".csv"), okbody::csv_text(t));
    }
    return result.verdict_failed ? exit_verdict : exit_ok;
  } catch (const okbody::ResourceError& e) {
    std::cerr << "resource cap: " << e.what() << "\n";
    return exit_resource;
  } catch (const okbody::ValidationError& e) {
    std::cerr << "invalid input: " << e.what() << "\n";
    return exit_validation;
  } catch (const okbody::DomainError& e) {
    std::cerr << "invalid input: " << e.what() << "\n";
    return exit_validation;
  } catch (const okbody::Json::exception& e) {
    std::cerr << "invalid input: " << e.what() << "\n";
    return exit_validation;
  } catch (const std::filesystem::filesystem_error& e) {
    std::cerr << "io error: " << e.what() << "\n";
    return exit_validation;
  }
}
