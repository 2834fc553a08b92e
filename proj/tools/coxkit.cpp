#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "coxkit/errors.hpp"
#include "coxkit/parallel.hpp"
#include "coxkit/report.hpp"

namespace {

enum Exit { kPass = 0, kFail = 1, kUsage = 2, kResource = 3 };

std::string render(const coxkit::Report& r, const std::string& format, bool timing) {
  if (format == "json") return r.to_json(timing).dump(2) + "\n";
  if (format == "csv") return coxkit::render_csv(r, timing);
  return coxkit::render_text(r, timing);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"coxkit: exact computations in finite complex reflection groups"};
  app.require_subcommand(1);

  int threads = 1;
  int cap = coxkit::kDefaultGroupCap;
  std::string format = "text";
  std::string out_path;
  bool timing = false;
  app.add_option("--threads", threads, "Worker threads")->check(CLI::PositiveNumber);
  app.add_option("--cap", cap, "Largest group order to enumerate")->check(CLI::PositiveNumber);
  app.add_option("--format", format, "Output format")->check(CLI::IsMember({"json", "csv", "text"}));
  app.add_option("--out", out_path, "Write the report to this file");
  app.add_flag("--timing", timing, "Include wall-clock timing in the report");

  std::string group;
  auto* info = app.add_subcommand("info", "Enumerate a group and print its invariants");
  info->add_option("group", group, "G(m,p,n), An, Bn, Dn, I2(m), a catalog name, or a .json file")->required();

  std::string suite = "all";
  auto* verify = app.add_subcommand("verify", "Run verification suites");
  verify->add_option("group", group, "Group specification")->required();
  verify->add_option("--suite", suite, "Suite to run")
      ->check(CLI::IsMember({"all", "coxeter", "galois", "nc", "hurwitz", "gensets"}));

  std::optional<int> cls;
  auto* nc = app.add_subcommand("nc", "Export noncrossing partition lattices");
  nc->add_option("group", group, "Group specification")->required();
  nc->add_option("--class", cls, "Coxeter class index (default: all)");

  for (auto* sub : {info, verify, nc}) sub->fallthrough();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kUsage;
  }

  try {
    coxkit::set_thread_count(threads);
    coxkit::Report report;
    if (info->parsed()) report = coxkit::cmd_info(group, cap);
    else if (verify->parsed()) report = coxkit::cmd_verify(group, suite, cap);
    else report = coxkit::cmd_nc(group, cls, cap);

    const std::string text = render(report, format, timing);
    if (out_path.empty()) {
      std::cout << text;
    } else {
      std::ofstream f(out_path, std::ios::binary);
      if (!f) throw coxkit::UsageError("cannot write " + out_path);
      f << text;
    }
    return report.passed() ? kPass : kFail;
  } catch (const coxkit::UsageError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const coxkit::ResourceError& e) {
    std::cerr << "resource limit: " << e.what() << "\n";
    return kResource;
  } catch (const coxkit::Error& e) {
    std::cerr << "failure: " << e.what() << "\n";
    return kFail;
  }
}
