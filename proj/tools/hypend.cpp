// hypend: JSON front end over the hypend library.
//
//   hypend request.json
//   echo '{"command":"kp","complement":[[0,0],"inf"],"queries":[[1,0]]}' | hypend
//   hypend --schema input

#include "hypend/cli.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>

int main(int argc, char** argv) {
  CLI::App app{"Hyperbolic ends, Kulkarni-Pinkall forms and Schwarzian calculus"};
  std::string input = "-";
  std::string export_path;
  std::string schema_name;
  double tol = 0.0;
  std::uint64_t seed = 0;
  long long samples = 0;
  app.add_option("request", input, "request document (JSON); '-' reads stdin");
  auto* tol_opt = app.add_option("--tol", tol, "numeric tolerance override");
  auto* seed_opt = app.add_option("--seed", seed, "random seed override");
  auto* samples_opt = app.add_option("--samples", samples, "sample count override");
  app.add_option("--export", export_path, "write the tabular part of the result as CSV");
  app.add_option("--schema", schema_name, "print the published schema and exit")->check(CLI::IsMember({"input", "output"}));

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : hypend::cli::validation_error;
  }

  if (!schema_name.empty()) {
    std::cout << hypend::cli::schema(schema_name) << "\n";
    return 0;
  }

  std::string text;
  if (input == "-") {
    text.assign(std::istreambuf_iterator<char>(std::cin), std::istreambuf_iterator<char>());
  } else {
    std::ifstream in(input);
    if (!in) {
      std::cerr << "hypend: cannot open " << input << "\n";
      return hypend::cli::validation_error;
    }
    std::ostringstream ss;
    ss << in.rdbuf();
    text = ss.str();
  }

  hypend::cli::Overrides ov;
  if (*tol_opt) ov.tol = tol;
  if (*seed_opt) ov.seed = seed;
  if (*samples_opt) ov.samples = samples;

  const hypend::cli::Outcome out = hypend::cli::execute(text, ov);
  std::cout << out.output;
  if (out.exit_code != 0) std::cerr << "hypend: request failed (exit " << out.exit_code << ")\n";

  if (out.exit_code == 0 && !export_path.empty()) {
    if (out.csv.empty()) {
      std::cerr << "hypend: this command has no tabular output; nothing exported\n";
    } else {
      std::ofstream csv(export_path);
      if (!csv) {
        std::cerr << "hypend: cannot write " << export_path << "\n";
        return hypend::cli::internal_error;
      }
      csv << out.csv;
    }
  }
  return out.exit_code;
}
