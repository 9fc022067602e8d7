#include "coxcheck/cli.hpp"

#include "coxcheck/certificate.hpp"
#include "coxcheck/gallery.hpp"
#include "coxcheck/instance.hpp"
#include "coxcheck/report.hpp"
#include "json_util.hpp"

#include <CLI11.hpp>

#include <filesystem>
#include <fstream>
#include <ostream>
#include <sstream>

namespace coxcheck::cli {

namespace {

namespace fs = std::filesystem;

struct Loaded {
  std::string label;
  std::string text;
};

std::string read_file(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  if (!in) throw InputError(p.string(), "cannot open file");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

// A path on disk wins; otherwise "examples/NAME", "NAME" and "NAME.json"
// resolve to the bundled gallery.
Loaded load(const std::string& arg) {
  fs::path p(arg);
  std::error_code ec;
  if (fs::is_regular_file(p, ec)) return {arg, read_file(p)};
  std::string stem = p.filename().string();
  if (p.extension() == ".json") stem = p.stem().string();
  if (auto text = find_bundled(stem)) return {stem, std::string(*text)};
  throw InputError(arg, "no such file and no bundled instance of that name (see `coxcheck examples`)");
}

MukaiReport run_pipeline(const InstanceFile& f) { return verify_mukai_inequality(to_construction_input(f)); }

std::string display_name(const InstanceFile& f, const Loaded& l) { return f.name.empty() ? l.label : f.name; }

void write_text_file(const std::string& path, const std::string& body) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw InputError(path, "cannot write file");
  out << body;
}

int cmd_check(const std::string& file, const std::string& json_path, std::ostream& out) {
  Loaded l = load(file);
  InstanceFile f = parse_instance(l.text);
  MukaiReport r = run_pipeline(f);
  if (json_path == "-") {
    out << report_to_json(r, display_name(f, l));
    return exit_code(r);
  }
  out << report_to_text(r, display_name(f, l));
  if (!json_path.empty()) write_text_file(json_path, report_to_json(r, display_name(f, l)));
  return exit_code(r);
}

int cmd_index(const std::string& file, std::ostream& out) {
  Loaded l = load(file);
  InstanceFile f = parse_instance(l.text);
  MukaiReport r = run_pipeline(f);
  out << "instance: " << display_name(f, l) << "\n";
  if (!r.computed) {
    out << "hypotheses not verified:\n";
    for (const auto& c : r.checklist.checks)
      if (c.verdict == Verdict::failed) out << "  " << c.name << ": " << c.witness << "\n";
  } else {
    out << "i_X = " << r.fano_index << "\n";
    out << "rho_X = " << r.rho << "\n";
    out << "n = " << r.n << "\n";
    out << "gamma = " << r.gamma.get_str() << "\n";
    out << "(i_X - 1) rho_X = " << r.lhs << (r.inequality_holds ? " <= " : " > ") << r.n;
    out << (r.equality ? " (equality)" : "") << "\n";
    if (r.factors) {
      out << "factors = [";
      for (std::size_t k = 0; k < r.factors->size(); ++k) out << (k ? "," : "") << (*r.factors)[k];
      out << "]\n";
    }
  }
  for (const auto& c : r.contradictions) out << "contradiction: " << c << "\n";
  return exit_code(r);
}

int cmd_examples(bool as_json, std::ostream& out) {
  jsonio::json list = jsonio::json::array();
  for (const auto& b : bundled_instances()) {
    InstanceFile f = parse_instance(b.text);
    int code = f.expected ? f.expected->exit_code : 0;
    if (as_json)
      list.push_back({{"name", b.name}, {"description", f.description}, {"expected_exit", code}});
    else
      out << b.name << "  [exit " << code << "]  " << f.description << "\n";
  }
  if (as_json) out << list.dump(2) << "\n";
  return exit_ok;
}

int cmd_verify(const std::string& file, std::ostream& out) {
  MukaiReport r = report_from_json(read_file(file));
  CertificateResult c = check_certificate(r);
  out << "checked " << c.checked << " identities, " << c.failures.size() << " failed\n";
  for (const auto& f : c.failures) out << "  " << f << "\n";
  return c.ok() ? exit_ok : exit_contradiction;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact verification of the Mukai inequality for Fano varieties with bunched Cox rings", "coxcheck"};
  app.require_subcommand(1);
  std::string file, json_path;
  bool examples_json = false;

  auto* check = app.add_subcommand("check", "Verify the hypotheses and the inequality, print the full report");
  check->add_option("file", file, "instance file, or the name of a bundled instance")->required();
  check->add_option("--json", json_path, "also write the report as JSON (\"-\": JSON only, on standard output)");
  auto* index = app.add_subcommand("index", "Print i_X, rho_X, n and gamma");
  index->add_option("file", file, "instance file, or the name of a bundled instance")->required();
  auto* examples = app.add_subcommand("examples", "List the bundled instances");
  examples->add_flag("--json", examples_json, "print the listing as JSON");
  auto* verify = app.add_subcommand("verify", "Re-check the witnesses stored in a JSON report");
  verify->add_option("report", file, "report written by `check --json`")->required();

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return exit_input;
  }

  try {
    if (check->parsed()) return cmd_check(file, json_path, out);
    if (index->parsed()) return cmd_index(file, out);
    if (examples->parsed()) return cmd_examples(examples_json, out);
    if (verify->parsed()) return cmd_verify(file, out);
  } catch (const InputError& e) {
    err << "error: " << e.what() << "\n";
    return exit_input;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
    return exit_input;
  } catch (const std::domain_error& e) {
    err << "error: " << e.what() << "\n";
    return exit_input;
  } catch (const std::logic_error& e) {
    err << "internal consistency failure: " << e.what() << "\n";
    return exit_contradiction;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return exit_input;
  }
  return exit_input;
}

}  // namespace coxcheck::cli
