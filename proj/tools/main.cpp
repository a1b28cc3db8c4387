#include <fstream>
#include <iostream>

#include <CLI11.hpp>

#include "lzeta/commands.hpp"

int main(int argc, char** argv) {
  CLI::App app{"Mod p Satake parameters, the Emerton-Gee curve and the map between them"};
  lzeta::RunConfig cfg;
  std::string format = "json";
  std::string out_path;

  app.add_option("command", cfg.command, "orbits | satake | curve | map | fibers | llc | verify | export")
      ->required()
      ->check(CLI::IsMember({"orbits", "satake", "curve", "map", "fibers", "llc", "verify", "export"}));
  app.add_option("--p", cfg.p, "prime p >= 5")->capture_default_str();
  app.add_option("--n", cfg.n, "degree of the coefficient field over F_p")->capture_default_str();
  app.add_option("--zeta", cfg.zeta, "central character: basic-even, basic-odd or <c>:<v>");
  app.add_option("--point", cfg.point, "point name, e.g. node-0, ext-left:t=2, comp-1:x=3");
  app.add_option("--format", format, "json, tsv or dot")->capture_default_str();
  app.add_option("--out", out_path, "write the report to a file instead of stdout");
  app.add_option("--seed", cfg.seed, "seed for the sampled twisting characters")->capture_default_str();

  CLI11_PARSE(app, argc, argv);

  try {
    cfg.format = lzeta::parse_format(format);
    const lzeta::RunOutput result = lzeta::run(cfg);
    if (out_path.empty()) {
      std::cout << result.text;
    } else {
      std::ofstream os(out_path, std::ios::binary);
      if (!os) {
        std::cerr << "lzeta: cannot write " << out_path << "\n";
        return 2;
      }
      os << result.text;
    }
    return result.exit_code;
  } catch (const lzeta::Error& e) {
    std::cerr << "lzeta: " << e.what() << "\n";
    return lzeta::exit_code(e.kind());
  }
}
