// oscigeo: geodesic periodicity, traces, self-checks and coset utilities for
// the oscillator group and its compact quotients.
//
// Exit codes: 0 ok, 1 verification failure, 2 usage or parse error, 3 I/O error.

#include <cstdlib>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <locale>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"
#include "oscigeo/geodesic.hpp"
#include "oscigeo/quotient.hpp"
#include "oscigeo/suites.hpp"

using namespace oscigeo;

namespace {

constexpr int kOk = 0;
constexpr int kVerifyFailed = 1;
constexpr int kUsage = 2;
constexpr int kIo = 3;

struct IoError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::uint64_t default_seed() {
  if (const char* env = std::getenv("OSCIGEO_SEED")) {
    try {
      return std::stoull(env);
    } catch (const std::exception&) {
      throw ParseError("OSCIGEO_SEED must be a non-negative integer", env);
    }
  }
  return SuiteOptions{}.seed;
}

// Writes to --output (or stdout for "-").
void emit(const std::string& path, const std::string& text) {
  if (path.empty() || path == "-") {
    std::cout << text;
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) throw IoError("cannot open output file '" + path + "'");
  out << text;
  if (!out) throw IoError("write failed for '" + path + "'");
}

std::string fmt(double x) {
  std::ostringstream os;
  os.imbue(std::locale::classic());
  os << std::setprecision(17) << x;
  return os.str();
}

struct Options {
  std::string lattice = "k=1,twist=full";
  std::string vector;
  std::string base = "(0; 0, 0; 0)";
  double s_end = 10.0;
  double step = 1e-3;
  std::string format;
  std::string output = "-";
  std::uint64_t seed = 0;
  std::vector<std::string> suites;
  bool quotient = false;
};

int cmd_classify(const Options& o) {
  const LatticeSpec L = parse_lattice(o.lattice);
  const Tangent X = parse_vector(o.vector);
  const Classification c = classify_geodesic(L, X);
  emit(o.output, (o.format == "json" ? to_json(c) : to_text(c)) + "\n");
  return kOk;
}

int cmd_trace(const Options& o) {
  const TangentF X = to_float(parse_vector(o.vector));
  const GroupElementF h = to_float(parse_element(o.base));
  std::ostringstream os;
  os.imbue(std::locale::classic());
  if (o.quotient) {
    const LatticeSpec L = parse_lattice(o.lattice);
    const auto path = project_geodesic(L, h, X, o.s_end, o.step);
    if (o.format == "json") {
      os << to_json(path) << "\n";
    } else {
      write_csv(os, path);
    }
    emit(o.output, os.str());
    return kOk;
  }
  const auto path = integrate_geodesic(h, X, o.s_end, o.step);
  const GeodesicCurve<double> curve{h, X};
  nlohmann::ordered_json rows = nlohmann::ordered_json::array();
  if (o.format != "json") os << "s,t,x,y,z,dev\n";
  for (const auto& p : path) {
    const GroupElementF c = geodesic_eval(curve, p.s);
    const double dev = std::max({std::abs(c.t - p.p.t), std::abs(c.v.x - p.p.v.x), std::abs(c.v.y - p.p.v.y),
                                 std::abs(c.z - p.p.z)});
    if (o.format == "json") {
      rows.push_back({p.s, p.p.t, p.p.v.x, p.p.v.y, p.p.z, dev});
    } else {
      os << fmt(p.s) << ',' << fmt(p.p.t) << ',' << fmt(p.p.v.x) << ',' << fmt(p.p.v.y) << ',' << fmt(p.p.z) << ','
         << fmt(dev) << '\n';
    }
  }
  if (o.format == "json") os << rows.dump() << "\n";
  emit(o.output, os.str());
  return kOk;
}

int cmd_verify(const Options& o) {
  SuiteOptions so;
  so.seed = o.seed;
  std::vector<std::string> names = o.suites.empty() ? suite_names() : o.suites;
  for (const auto& n : names)
    if (std::find(suite_names().begin(), suite_names().end(), n) == suite_names().end())
      throw ParseError("unknown suite '" + n + "'", n);
  bool all = true;
  std::ostringstream os;
  nlohmann::ordered_json j = nlohmann::ordered_json::array();
  for (const auto& n : names) {
    const SuiteResult r = run_suite(n, so);
    all = all && r.passed;
    if (o.format == "json") {
      j.push_back({{"suite", r.name}, {"passed", r.passed}, {"detail", r.detail}});
    } else {
      os << std::left << std::setw(12) << r.name << (r.passed ? "PASS  " : "FAIL  ") << r.detail << "\n";
    }
  }
  if (o.format == "json") {
    os << j.dump() << "\n";
  } else {
    os << "seed " << o.seed << ": " << (all ? "all suites passed" : "FAILURES") << "\n";
  }
  emit(o.output, os.str());
  return all ? kOk : kVerifyFailed;
}

int cmd_coset(const Options& o) {
  const LatticeSpec L = parse_lattice(o.lattice);
  const GroupElement g = parse_element(o.base);
  const GroupElement nf = coset_normal_form(L, g);
  std::string text;
  if (o.format == "json") {
    nlohmann::ordered_json j;
    j["lattice"] = to_string(L);
    j["element"] = to_string(g);
    j["normal_form"] = to_string(nf);
    j["in_lattice"] = lattice_contains(L, g);
    j["normalizes"] = normalizer_contains(L, g);
    text = j.dump();
  } else {
    text = to_string(nf) + (lattice_contains(L, g) ? " (in lattice)" : "") +
           (normalizer_contains(L, g) ? " (normalizes)" : "");
  }
  emit(o.output, text + "\n");
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Geodesics and isometries of the oscillator group and its compact quotients"};
  app.require_subcommand(1);
  Options o;

  try {
    o.seed = default_seed();
  } catch (const ParseError& e) {
    std::cerr << "error: " << e.what() << " (token '" << e.token() << "')\n";
    return kUsage;
  }

  auto* classify = app.add_subcommand("classify", "decide whether the geodesic with direction X closes");
  classify->add_option("--lattice", o.lattice, "k=<int>,twist=<full|half|quarter>")->capture_default_str();
  classify->add_option("--vector", o.vector, "a0=..,a1=..,a2=..,a3=.. (exact, pi allowed)")->required();
  classify->add_option("--format", o.format, "text or json")->check(CLI::IsMember({"text", "json"}));
  classify->add_option("--output", o.output, "output file, - for stdout")->capture_default_str();

  auto* trace = app.add_subcommand("trace", "sample a geodesic (RK4 with closed-form deviation, or cosets)");
  trace->add_option("--vector", o.vector, "direction X")->required();
  trace->add_option("--base", o.base, "base point (t; x, y; z)")->capture_default_str();
  trace->add_option("--s-end", o.s_end, "final parameter")->capture_default_str();
  trace->add_option("--step", o.step, "integration step")->capture_default_str();
  trace->add_option("--format", o.format, "csv or json")->check(CLI::IsMember({"csv", "json"}));
  trace->add_option("--output", o.output, "output file, - for stdout")->capture_default_str();
  trace->add_flag("--quotient", o.quotient, "emit coset normal forms in G/Lambda");
  trace->add_option("--lattice", o.lattice, "lattice for --quotient")->capture_default_str();

  auto* verify = app.add_subcommand("verify", "run the self-check suites");
  verify->add_option("--suite", o.suites, "suite name (repeatable); default all");
  verify->add_option("--seed", o.seed, "random seed (default from OSCIGEO_SEED)")->capture_default_str();
  verify->add_option("--format", o.format, "text or json")->check(CLI::IsMember({"text", "json"}));
  verify->add_option("--output", o.output, "output file, - for stdout")->capture_default_str();

  auto* coset = app.add_subcommand("coset", "normal form of g Lambda");
  coset->add_option("--lattice", o.lattice, "k=<int>,twist=<full|half|quarter>")->capture_default_str();
  coset->add_option("--base", o.base, "group element (t; x, y; z)")->required();
  coset->add_option("--format", o.format, "text or json")->check(CLI::IsMember({"text", "json"}));
  coset->add_option("--output", o.output, "output file, - for stdout")->capture_default_str();

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
    if (classify->parsed()) return cmd_classify(o);
    if (trace->parsed()) return cmd_trace(o);
    if (verify->parsed()) return cmd_verify(o);
    if (coset->parsed()) return cmd_coset(o);
  } catch (const ParseError& e) {
    std::cerr << "error: " << e.what() << " (token '" << e.token() << "')\n";
    return kUsage;
  } catch (const IoError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kIo;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kVerifyFailed;
  }
  return kUsage;
}
