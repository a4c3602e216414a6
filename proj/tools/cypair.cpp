#include "cypair/error.hpp"
#include "cypair/registry.hpp"
#include "cypair/report.hpp"
#include "cypair/singclass.hpp"
#include "cypair/verifier.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

using namespace cypair;

namespace {

std::string slurp(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw NotFound("cannot read " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::vector<std::string> split_vars(const std::string& s) {
  std::vector<std::string> out;
  std::string cur;
  for (char ch : s) {
    if (ch == ',' || ch == ' ') {
      if (!cur.empty()) out.push_back(cur);
      cur.clear();
    } else {
      cur += ch;
    }
  }
  if (!cur.empty()) out.push_back(cur);
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"cypair: verify log Calabi-Yau pair computations"};
  app.require_subcommand(1);

  std::string format = "text";
  std::string registry_path;
  int max_jet = 16;
  app.add_option("--format", format, "json or text")->check(CLI::IsMember({"json", "text"}));
  app.add_option("--registry", registry_path, "registry file (default: $CYPAIR_REGISTRY or bundled)");
  app.add_option("--max-jet-order", max_jet, "jet order cap for Milnor numbers")->check(CLI::Range(2, 64));

  auto* verify = app.add_subcommand("verify", "run registry cases");
  std::vector<std::string> ids;
  bool all = false;
  verify->add_option("ids", ids, "case ids");
  verify->add_flag("--all", all, "run every case");

  auto* list = app.add_subcommand("list", "list registry case ids");

  auto* classify = app.add_subcommand("classify", "classify a surface germ at the origin");
  std::string germ_text, vars_text = "x,y,z";
  classify->add_option("--germ", germ_text, "polynomial germ")->required();
  classify->add_option("--vars", vars_text, "comma-separated variables");

  auto* complex = app.add_subcommand("complex", "build a dual complex from a strata file");
  std::string strata_path;
  complex->add_option("--file", strata_path, "strata JSON file")->required();

  CLI11_PARSE(app, argc, argv);

  try {
    auto fmt = report::parse_format(format);
    auto load = [&] {
      return verifier::Registry::load_file(registry_path.empty() ? verifier::Registry::default_path()
                                                                 : registry_path);
    };

    if (*list) {
      for (const auto& id : load().ids()) std::cout << id << "\n";
      return 0;
    }

    if (*verify) {
      auto reg = load();
      if (all) ids = reg.ids();
      if (ids.empty()) {
        std::cerr << "verify: give case ids or --all\n";
        return 2;
      }
      verifier::RunOptions opts;
      opts.max_jet_order = max_jet;
      std::vector<verifier::Verdict> vs;
      for (const auto& id : ids) vs.push_back(verifier::run_case(reg.get(id), opts));
      std::cout << (vs.size() == 1 ? report::verdict(vs[0], fmt) : report::verdicts(vs, fmt));
      bool ok = true;
      for (const auto& v : vs) ok = ok && v.passed();
      return ok ? 0 : 1;
    }

    if (*classify) {
      auto g = Poly::parse(germ_text, Ring(split_vars(vars_text)));
      std::cout << report::germ(singclass::classify(g, max_jet), fmt);
      return 0;
    }

    if (*complex) {
      auto sf = verifier::parse_strata_file(slurp(strata_path));
      auto c = dualcx::build(sf.components, sf.strata);
      std::cout << report::complex(c, sf.ambient_dim, fmt);
      return 0;
    }
  } catch (const NotFound& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 0;
}
