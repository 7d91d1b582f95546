// bmpp: vanishing ideals of points in F^2 from the command line.
//
//   bmpp compute --field q:7 --order tdlex --points pts.csv [--algo auto] [--out text|json]
//   bmpp gen     --field q:23 --n 200 --seed 1 -o pts.csv
//   bmpp bench   --field q:23 --order lex --sizes 100,500 --reps 5 --algos bm,spbm --seed 1 -o bench.csv
//   bmpp verify  --result result.json --points pts.csv [--out text|json]
//
// Exit status: 0 success, 1 failed verification, 2 usage or input error.

#include <fstream>
#include <iostream>
#include <string>
#include <variant>
#include <vector>

#include "CLI11.hpp"
#include "bmpp/bmpp.hpp"

namespace {

constexpr int kOk = 0;
constexpr int kVerifyFailed = 1;
constexpr int kUsage = 2;

struct Options {
  std::string field;
  std::string order = "lex";
  std::string algo = "auto";
  std::string points;
  std::string out = "text";
  std::string output;
  std::string result;
  std::size_t n = 0;
  std::uint64_t seed = 1;
  std::vector<std::size_t> sizes;
  std::size_t reps = 5;
  std::vector<std::string> algos{"bm", "spbm"};
  unsigned jobs = 1;
};

int cmd_compute(const Options& opt) {
  const auto order = bmpp::parse_term_order(opt.order);
  const auto algo = bmpp::parse_algorithm(opt.algo);
  if (opt.out != "text" && opt.out != "json") throw bmpp::BadSpec("--out must be text or json");
  return std::visit(
      [&](const auto& field) {
        auto points = bmpp::read_points_file(field, opt.points);
        const auto resolved = bmpp::resolve(algo, order);
        auto result = bmpp::run_algorithm(resolved, points, order);
        auto report = bmpp::verify_result(result, points, order);
        if (opt.out == "json") {
          std::cout << bmpp::result_to_json(result, field, order, resolved).dump(2) << '\n';
          std::cerr << report.to_text();
        } else {
          std::cout << "field " << field.spec() << ", order " << bmpp::to_string(order) << ", algorithm "
                    << bmpp::to_string(resolved) << ", " << points.size() << " points\n"
                    << bmpp::result_to_text(result, order) << '\n'
                    << report.to_text();
        }
        return report.passed ? kOk : kVerifyFailed;
      },
      bmpp::make_field(opt.field));
}

int cmd_gen(const Options& opt) {
  return std::visit(
      [&](const auto& field) {
        auto points = bmpp::random_points(field, opt.n, opt.seed);
        std::ofstream out(opt.output);
        if (!out) throw bmpp::ParseError("cannot write '" + opt.output + "'");
        bmpp::write_points(points, out);
        return kOk;
      },
      bmpp::make_field(opt.field));
}

int cmd_bench(const Options& opt) {
  bmpp::BenchConfig cfg;
  cfg.order = bmpp::parse_term_order(opt.order);
  for (const auto& a : opt.algos) cfg.algorithms.push_back(bmpp::parse_algorithm(a));
  cfg.sizes = opt.sizes;
  cfg.reps = opt.reps;
  cfg.seed = opt.seed;
  cfg.jobs = opt.jobs;
  return std::visit(
      [&](const auto& field) {
        auto records = bmpp::run_bench(field, cfg);
        std::ofstream out(opt.output);
        if (!out) throw bmpp::ParseError("cannot write '" + opt.output + "'");
        bmpp::write_bench_csv(records, out);
        std::cout << bmpp::bench_summary(records, cfg);
        return kOk;
      },
      bmpp::make_field(opt.field));
}

int cmd_verify(const Options& opt) {
  std::ifstream in(opt.result);
  if (!in) throw bmpp::ParseError("cannot open result file '" + opt.result + "'");
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(in);
  } catch (const nlohmann::json::exception& e) {
    throw bmpp::ParseError(std::string("result is not valid JSON: ") + e.what());
  }
  if (!doc.contains("field") || !doc.contains("order")) throw bmpp::ParseError("result JSON lacks field or order");
  if (opt.out != "text" && opt.out != "json") throw bmpp::BadSpec("--out must be text or json");
  const auto order = bmpp::parse_term_order(doc["order"].get<std::string>());
  return std::visit(
      [&](const auto& field) {
        auto result = bmpp::result_from_json(field, doc);
        auto points = bmpp::read_points_file(field, opt.points);
        auto report = bmpp::verify_result(result, points, order);
        if (opt.out == "json") {
          std::cout << bmpp::report_to_json(report).dump(2) << '\n';
        } else {
          std::cout << report.to_text();
        }
        return report.passed ? kOk : kVerifyFailed;
      },
      bmpp::make_field(doc["field"].get<std::string>()));
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Groebner bases, escaliers and Newton bases of vanishing ideals of points in F^2"};
  app.require_subcommand(1);
  Options opt;

  auto* compute = app.add_subcommand("compute", "compute (G, N, Q) for a point file and verify it");
  compute->add_option("--field", opt.field, "q:<prime> or rational")->required();
  compute->add_option("--order", opt.order, "lex, inlex, tdinlex or tdlex");
  compute->add_option("--algo", opt.algo, "bm, spbm, gpbm or auto");
  compute->add_option("--points", opt.points, "point file, one x,y per line")->required();
  compute->add_option("--out", opt.out, "text or json");

  auto* gen = app.add_subcommand("gen", "write a seeded random set of distinct points");
  gen->add_option("--field", opt.field, "q:<prime> or rational")->required();
  gen->add_option("--n", opt.n, "number of points")->required();
  gen->add_option("--seed", opt.seed, "generator seed");
  gen->add_option("-o,--output", opt.output, "output file")->required();

  auto* bench = app.add_subcommand("bench", "time algorithms on seeded random point sets");
  bench->add_option("--field", opt.field, "q:<prime> or rational")->required();
  bench->add_option("--order", opt.order, "term order");
  bench->add_option("--sizes", opt.sizes, "comma separated point counts")->required()->delimiter(',');
  bench->add_option("--reps", opt.reps, "repetitions per cell")->check(CLI::PositiveNumber);
  bench->add_option("--algos", opt.algos, "comma separated algorithms")->delimiter(',');
  bench->add_option("--seed", opt.seed, "base seed");
  bench->add_option("--jobs", opt.jobs, "worker threads")->check(CLI::PositiveNumber);
  bench->add_option("-o,--output", opt.output, "CSV output file")->required();

  auto* verify = app.add_subcommand("verify", "check a stored JSON result against its point file");
  verify->add_option("--result", opt.result, "result JSON from compute --out json")->required();
  verify->add_option("--points", opt.points, "point file")->required();
  verify->add_option("--out", opt.out, "text or json");

  try {
    app.parse(argc, argv);
  } catch (const CLI::Success& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kUsage;
  }

  try {
    if (*compute) return cmd_compute(opt);
    if (*gen) return cmd_gen(opt);
    if (*bench) return cmd_bench(opt);
    return cmd_verify(opt);
  } catch (const bmpp::Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsage;
  }
}
