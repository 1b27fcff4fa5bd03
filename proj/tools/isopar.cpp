// Command-line driver: build the quartics, dump frames, run verification suites.
#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <optional>

#include "isopar/cli.hpp"
#include "isopar/forms.hpp"
#include "isopar/geometry.hpp"
#include "isopar/io.hpp"

using namespace isopar;

namespace {

json frame_to_json(const AdaptedFrame& fr) {
  auto list = [](const std::vector<Vec>& vs) {
    json a = json::array();
    for (const auto& v : vs) {
      json row = json::array();
      for (const auto& s : v) row.push_back(scalar_to_json(s));
      a.push_back(std::move(row));
    }
    return a;
  };
  return json{{"ambient_dim", fr.ambient_dim}, {"m1", fr.m1},          {"m2", fr.m2},
              {"orientation", fr.orientation}, {"x", list({fr.x})[0]}, {"normals", list(fr.normals)},
              {"eplus", list(fr.eplus)},       {"eminus", list(fr.eminus)}, {"ezero", list(fr.ezero)}};
}

/// Writes to the file when a path is given, else to stdout. Throws UsageError
/// when the file cannot be opened.
void write_out(const std::string& path, const std::function<void(std::ostream&)>& body) {
  if (path.empty()) {
    body(std::cout);
    return;
  }
  std::ofstream os(path);
  if (!os) throw UsageError("cannot write '" + path + "'");
  body(os);
  if (!os) throw UsageError("write to '" + path + "' failed");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact verification of isoparametric examples"};
  app.require_subcommand(1);

  std::string suite_name, example = "both", format = "text", out_path;
  std::optional<std::uint64_t> seed_flag;
  bool no_timing = false;
  std::size_t samples = 1000;
  auto* suite = app.add_subcommand("suite", "run a verification suite");
  suite->add_option("name", suite_name, "cm|frames|blocks|mirror|thirdform|pq|circ|pencil|all")->required();
  suite->add_option("--example", example, "h45|fkm69|both");
  suite->add_option("--seed", seed_flag, "RNG seed (default: ISOPAR_SEED or 0)");
  suite->add_option("--format", format, "text|json");
  suite->add_option("--out", out_path, "write the report to a file");
  suite->add_option("--samples", samples, "pencil scan sample count");
  suite->add_flag("--no-timing", no_timing, "omit wall-clock fields");

  std::string build_example, build_out;
  auto* build = app.add_subcommand("build", "dump a Cartan-Muenzner polynomial as JSON");
  build->add_option("example", build_example, "h45|fkm69")->required();
  build->add_option("--out", build_out, "output path (default stdout)");

  std::string frame_example, frame_out;
  bool frame_dual = false;
  auto* frame = app.add_subcommand("frame", "dump the adapted frame as JSON");
  frame->add_option("example", frame_example, "h45|fkm69")->required();
  frame->add_flag("--dual", frame_dual, "dual frame on the other focal manifold");
  frame->add_option("--out", frame_out, "output path (default stdout)");

  std::string forms_example;
  auto* forms = app.add_subcommand("forms", "print the extracted p_a and q^a");
  forms->add_option("example", forms_example, "h45|fkm69")->required();

  std::string cm_path;
  unsigned g = 4, m1 = 0, m2 = 0;
  auto* vcm = app.add_subcommand("verify-cm", "check the Cartan-Muenzner equations for a JSON polynomial");
  vcm->add_option("file", cm_path, "polynomial JSON")->required();
  vcm->add_option("--g", g, "degree");
  vcm->add_option("--m1", m1, "multiplicity m1")->required();
  vcm->add_option("--m2", m2, "multiplicity m2")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (*suite) {
      const Format fmt = parse_format(format);
      const Report r = run_suite(suite_name, example, resolve_seed(seed_flag), samples);
      write_out(out_path, [&](std::ostream& os) { emit_report(r, fmt, os, !no_timing); });
      if (!out_path.empty() && fmt == Format::Text) emit_report(r, fmt, std::cout, !no_timing);
      for (const auto& c : r.checks)
        if (c.status == Status::Fail) std::cerr << "failed: " << c.id << ": " << c.detail << '\n';
      return r.exit_code();
    }
    if (*build) {
      const MPoly F = polynomial_for(parse_example(build_example));
      write_out(build_out, [&](std::ostream& os) { os << poly_to_json(F).dump() << '\n'; });
      return 0;
    }
    if (*frame) {
      AdaptedFrame fr = frame_for(parse_example(frame_example));
      if (frame_dual) fr = dual_frame(fr);
      write_out(frame_out, [&](std::ostream& os) { os << frame_to_json(fr).dump(2) << '\n'; });
      return 0;
    }
    if (*forms) {
      const ExampleId id = parse_example(forms_example);
      const auto f = ot_expand(polynomial_for(id), frame_for(id));
      const auto names = f.variable_names();
      for (std::size_t a = 0; a < f.p.size(); ++a) std::cout << "p" << a << " = " << f.p[a].to_string(names) << '\n';
      for (std::size_t a = 0; a < f.q.size(); ++a) std::cout << "q" << a << " = " << f.q[a].to_string(names) << '\n';
      std::cout << "residual " << (f.residual_ok ? "ok" : "MISMATCH") << '\n';
      return f.residual_ok ? 0 : 1;
    }
    if (*vcm) {
      std::ifstream is(cm_path);
      if (!is) throw UsageError("cannot read '" + cm_path + "'");
      json j;
      try {
        is >> j;
      } catch (const json::exception& e) {
        throw ParseError(std::string("invalid JSON: ") + e.what());
      }
      const auto r = verify_cm(poly_from_json(j), g, m1, m2);
      std::cout << (r.gradient_ok ? "PASS" : "FAIL") << " gradient (" << r.gradient_residual_terms << " residual terms)\n"
                << (r.laplacian_ok ? "PASS" : "FAIL") << " laplacian (" << r.laplacian_residual_terms
                << " residual terms)\n";
      return r.pass() ? 0 : 1;
    }
  } catch (const UsageError& e) {
    std::cerr << "usage error: " << e.what() << '\n';
    return 2;
  } catch (const ParseError& e) {
    std::cerr << "input error: " << e.what() << '\n';
    return 2;
  } catch (const DomainError& e) {
    std::cerr << "input error: " << e.what() << '\n';
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
  return 0;
}
