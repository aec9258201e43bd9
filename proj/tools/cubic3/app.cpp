#include <fstream>
#include <iostream>
#include <memory>
#include <string>

#include <CLI11.hpp>

#include "commands.hpp"

using cubic3::i64;
using cubic3::SetKind;

namespace cubic3::cli {

int run(int argc, const char* const* argv) {
  CLI::App app{"cubic3: irreducible trinomials X^3 - aX + b with square discriminant"};
  app.require_subcommand(1);
  app.fallthrough();

  std::string format_name = "jsonl";
  std::string out_path;
  app.add_option("--format", format_name, "Output format: jsonl (default) or csv")
      ->check(CLI::IsMember({"jsonl", "csv"}));
  app.add_option("--out", out_path, "Write records to PATH instead of stdout");

  i64 n = 0;
  auto* represent = app.add_subcommand("represent", "List N = u^2 + 3v^2 with gcd(u,3v) = 1");
  represent->add_option("N", n, "Integer to represent")->required();

  i64 max_bound = 100;
  auto* admissible = app.add_subcommand("admissible", "List admissible gcd classes D");
  admissible->add_option("--max", max_bound, "Upper bound (default 100)");

  i64 d_points = 1, zmax_points = 100;
  std::string kind_points;
  auto* points = app.add_subcommand("points", "Enumerate a constructed solution set");
  points->add_option("--D", d_points, "Level / gcd class")->required();
  points->add_option("--kind", kind_points,
                     "X1D | X1D_STAR | XD1 | XD1_STAR | YD1 | YD1_STAR")
      ->required();
  points->add_option("--zmax", zmax_points, "z bound (default 100)");

  i64 d_tri = 1, stmax_tri = 20;
  auto* trinomials =
      app.add_subcommand("trinomials", "Emit the trinomial families of gcd class D");
  trinomials->add_option("--D", d_tri, "Gcd class (must be admissible)")->required();
  trinomials->add_option("--st-max", stmax_tri, "Parameter grid half-width (default 20)");

  std::string verify_path;
  auto* verify =
      app.add_subcommand("verify", "Verify {a,b} JSONL records as cyclic cubic trinomials");
  verify->add_option("file", verify_path, "Input path, or - for stdin")->required();

  i64 d_oracle = 1, zmax_oracle = 100;
  std::string kind_oracle;
  auto* oracle =
      app.add_subcommand("oracle", "Diff a constructed set against brute-force search");
  oracle->add_option("--D", d_oracle, "Level / gcd class")->required();
  oracle->add_option("--kind", kind_oracle,
                     "X1D | X1D_STAR | XD1 | XD1_STAR | YD1 | YD1_STAR")
      ->required();
  oracle->add_option("--zmax", zmax_oracle, "z bound (default 100)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUsage;
  }

  const Format fmt = format_name == "csv" ? Format::Csv : Format::Jsonl;
  std::ofstream out_file;
  if (!out_path.empty()) {
    out_file.open(out_path);
    if (!out_file) {
      std::cerr << "cannot open output file: " << out_path << '\n';
      return kExitUsage;
    }
  }
  std::ostream& out = out_path.empty() ? std::cout : out_file;

  try {
    if (represent->parsed()) return cmd_represent(n, fmt, out, std::cerr);
    if (admissible->parsed()) return cmd_admissible(max_bound, fmt, out, std::cerr);
    if (points->parsed() || oracle->parsed()) {
      const bool is_points = points->parsed();
      const std::string& kind_name = is_points ? kind_points : kind_oracle;
      SetKind kind{};
      if (!parse_set_kind(kind_name, kind)) {
        std::cerr << "unknown --kind: " << kind_name << '\n';
        return kExitUsage;
      }
      return is_points ? cmd_points(d_points, kind, zmax_points, fmt, out, std::cerr)
                       : cmd_oracle(d_oracle, kind, zmax_oracle, fmt, out, std::cerr);
    }
    if (trinomials->parsed())
      return cmd_trinomials(d_tri, stmax_tri, fmt, out, std::cerr);
    if (verify->parsed()) {
      if (verify_path == "-") return cmd_verify(std::cin, fmt, out, std::cerr);
      std::ifstream in(verify_path);
      if (!in) {
        std::cerr << "cannot open input file: " << verify_path << '\n';
        return kExitUsage;
      }
      return cmd_verify(in, fmt, out, std::cerr);
    }
  } catch (const std::overflow_error& e) {
    std::cerr << "input exceeds the supported integer range: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::invalid_argument& e) {
    std::cerr << e.what() << '\n';
    return kExitUsage;
  }
  return kExitUsage;
}

}  // namespace cubic3::cli
