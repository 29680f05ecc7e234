#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "povswb/wbcli/commands.hpp"

int main(int argc, char** argv) {
  using namespace povswb::wbcli;
  CLI::App app{"Workbench for pre-ordered vector spaces over semi-linear wedges", "povs-wb"};
  app.set_version_flag("--version", std::string(POVSWB_VERSION));
  Options o;
  std::string out_path;
  app.add_option("command", o.command, "check|closure|archimedeanize|ideals|types|factor|seq|search")
      ->required()
      ->check(CLI::IsMember({"check", "closure", "archimedeanize", "ideals", "types", "factor", "seq", "search"}));
  app.add_option("--file", o.file_path, "workbench file");
  app.add_option("--map", o.map, "map name for factor");
  app.add_option("--dim", o.dim, "search dimension")->capture_default_str();
  app.add_option("--cases", o.cases, "search cases")->capture_default_str();
  app.add_option("--seed", o.seed, "search seed")->capture_default_str();
  app.add_option("--cap", o.cap, "iteration cap for closures and towers")->capture_default_str();
  app.add_option("--out", out_path, "write the report here instead of stdout");
  app.add_option("--format", o.format, "report format")
      ->check(CLI::IsMember({"json", "text"}))
      ->capture_default_str();
  CLI11_PARSE(app, argc, argv);

  if (o.command != "search") {
    if (o.file_path.empty()) {
      std::cerr << "povs-wb: " << o.command << " needs --file PATH\n";
      return kUsageError;
    }
    std::ifstream in(o.file_path, std::ios::binary);
    if (!in) {
      std::cerr << "povs-wb: cannot read " << o.file_path << "\n";
      return kUsageError;
    }
    std::ostringstream buf;
    buf << in.rdbuf();
    o.file_text = buf.str();
  }

  const Outcome result = run(o);
  if (result.report.contains("error")) std::cerr << "povs-wb: " << result.report["error"].dump() << "\n";
  if (out_path.empty()) {
    std::cout << result.rendered;
  } else {
    std::ofstream out(out_path, std::ios::binary);
    if (!out) {
      std::cerr << "povs-wb: cannot write " << out_path << "\n";
      return kUsageError;
    }
    out << result.rendered;
  }
  return result.exit_code;
}
