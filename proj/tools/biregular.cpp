// biregular: construct, verify and inspect Ramanujan biregular graphs.

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include "biregular/builder.hpp"
#include "biregular/checks.hpp"
#include "biregular/errors.hpp"
#include "biregular/graph.hpp"
#include "biregular/oracle.hpp"
#include "biregular/parallel.hpp"
#include "biregular/rect_conv.hpp"
#include "biregular/verify.hpp"

namespace fs = std::filesystem;
using json = nlohmann::json;
using namespace biregular;

namespace {

enum Exit { kOk = 0, kFailed = 1, kInvalid = 2, kCap = 3 };

struct Common {
  unsigned precision_bits = kDefaultPrecisionBits;
  std::uint64_t cap = kDefaultEnumerationCap;
  std::uint64_t seed = 0;
  int workers = 0;
  bool json = false;
};

json poly_json(const RatPoly& p) {
  json coeffs = json::array();
  for (const auto& c : p.coeffs()) coeffs.push_back(to_fraction_string(c));
  return {{"degree", p.degree()}, {"coeffs", coeffs}, {"text", p.to_string()}};
}

json enclosure_json(const Enclosure& e) {
  return {{"lo", to_fraction_string(e.lo())}, {"hi", to_fraction_string(e.hi())}, {"decimal", e.to_string(30)}};
}

json bracket_json(const RootBracket& b) {
  return {{"lo", to_fraction_string(b.lo)}, {"hi", to_fraction_string(b.hi)}, {"approx", b.mid()}};
}

json certificate_json(const SpectralCertificate& c) {
  json j = {{"n", c.n},
            {"k", c.k},
            {"d", c.d},
            {"bound_squared", enclosure_json(c.bound_enclosure)},
            {"gram_poly", poly_json(c.gram_poly)},
            {"roots_above_bound", c.roots_above_bound},
            {"root_equals_bound", c.root_equals_bound},
            {"precision_bits", c.precision_bits},
            {"valid", c.valid()}};
  if (c.max_root) j["max_root"] = bracket_json(*c.max_root);
  return j;
}

template <class Stream>
Stream open_file(const std::string& path) {
  Stream s(path);
  if (!s) throw InvalidInput("cannot open '" + path + "'");
  return s;
}

RatPoly load_poly(const std::string& path) {
  auto in = open_file<std::ifstream>(path);
  return read_poly(in);
}

void write_to(const fs::path& path, const std::string& text) {
  auto out = open_file<std::ofstream>(path.string());
  out << text;
  if (!out) throw InvalidInput("cannot write '" + path.string() + "'");
}

template <class Writer>
std::string render(Writer&& w) {
  std::ostringstream os;
  w(os);
  return os.str();
}

// --- subcommands ------------------------------------------------------------

struct ConstructArgs {
  int n = 0, k = 0, d = 0;
  std::string out_dir = ".";
};

int run_construct(const ConstructArgs& a, const Common& c) {
  const ConstructResult res = construct(a.n, a.k, a.d);
  const SpectralCertificate cert = certify_ramanujan(res.graph, a.n, a.k, a.d, c.precision_bits);
  fs::create_directories(a.out_dir);
  const fs::path dir(a.out_dir);
  write_to(dir / "graph.txt", render([&](std::ostream& os) { write_graph(os, res.graph); }));
  write_to(dir / "trail.txt", render([&](std::ostream& os) { write_trail(os, res); }));
  write_to(dir / "certificate.txt", render([&](std::ostream& os) { write_certificate(os, cert); }));
  const double lambda2 = lambda2_numeric(res.graph);
  if (c.json) {
    json steps = json::array();
    for (const auto& e : res.trail) {
      json s = {{"matching", e.matching}, {"claw", e.claw}, {"right", e.step.chosen.right},
                {"lefts", e.step.chosen.lefts.indices()}, {"candidates", e.step.candidates},
                {"poly", poly_json(e.step.poly)}};
      if (e.step.bracket) s["max_root"] = bracket_json(*e.step.bracket);
      steps.push_back(s);
    }
    std::cout << json{{"n", a.n}, {"k", a.k}, {"d", a.d}, {"root_poly", poly_json(res.root_poly)},
                      {"trail", steps}, {"certificate", certificate_json(cert)}, {"lambda2", lambda2},
                      {"files", {(dir / "graph.txt").string(), (dir / "trail.txt").string(),
                                 (dir / "certificate.txt").string()}}}
                     .dump(2)
              << "\n";
  } else {
    std::cout << "graph: " << (dir / "graph.txt").string() << "\n"
              << "trail: " << (dir / "trail.txt").string() << " (" << res.trail.size() << " steps)\n"
              << "certificate: " << (dir / "certificate.txt").string() << " (" << (cert.valid() ? "valid" : "INVALID")
              << ")\n"
              << "lambda2: " << lambda2 << "\n"
              << "bound: " << ramanujan_bound(a.k, a.d, c.precision_bits).to_string() << "\n";
  }
  return cert.valid() ? kOk : kFailed;
}

struct VerifyArgs {
  std::string graph;
  int k = 0, d = 0;
  std::string cert_out;
};

int run_verify(const VerifyArgs& a, const Common& c) {
  auto in = open_file<std::ifstream>(a.graph);
  const BigraphAdjacency g = read_graph(in);
  const int n = g.n();
  if (!check_biregular(g, n, a.k, a.d)) {
    const std::string msg = "graph is not (" + std::to_string(n) + ", " + std::to_string(a.k) + ", " +
                            std::to_string(a.d) + ")-biregular";
    if (c.json) {
      std::cout << json{{"n", n}, {"biregular", false}, {"valid", false}, {"error", msg}}.dump(2) << "\n";
    } else {
      std::cout << msg << "\nvalid: false\n";
    }
    return kFailed;
  }
  const SpectralCertificate cert = certify_ramanujan(g, n, a.k, a.d, c.precision_bits);
  const std::string text = render([&](std::ostream& os) { write_certificate(os, cert); });
  if (!a.cert_out.empty()) write_to(a.cert_out, text);
  if (c.json) {
    json j = certificate_json(cert);
    j["biregular"] = true;
    j["lambda2"] = lambda2_numeric(g);
    std::cout << j.dump(2) << "\n";
  } else {
    std::cout << text;
  }
  return cert.valid() ? kOk : kFailed;
}

struct ConvolveArgs {
  std::string p, q;
  int m = 0, n = 0;
  std::string out;
};

int run_convolve(const ConvolveArgs& a, const Common& c) {
  const RatPoly r = rect_conv(load_poly(a.p), load_poly(a.q), ConvDims{a.m, a.n}, RootCheck::Enforce);
  const std::string record = poly_to_record(r);
  if (!a.out.empty()) write_to(a.out, record);
  if (c.json) {
    std::cout << poly_json(r).dump(2) << "\n";
  } else if (a.out.empty()) {
    std::cout << record;
  } else {
    std::cout << r.to_string() << "\n";
  }
  return kOk;
}

struct BoundArgs {
  int k = 0, d = 0;
  std::optional<std::string> theta;
  std::optional<std::string> u;
  std::optional<int> n;
};

int run_bound(const BoundArgs& a, const Common& c) {
  const unsigned bits = c.precision_bits;
  const Enclosure raman = ramanujan_bound(a.k, a.d, bits);
  json j = {{"k", a.k}, {"d", a.d}, {"ramanujan", enclosure_json(raman)},
            {"ramanujan_squared", enclosure_json(ramanujan_bound_squared(a.k, a.d, bits))}};
  std::ostringstream text;
  text << "ramanujan: " << raman.to_string(30) << "\n"
       << "ramanujan_squared: " << ramanujan_bound_squared(a.k, a.d, bits).to_string(30) << "\n";

  if (a.n) {
    const int n = *a.n, m = a.k * n;
    const Enclosure shifted = shifted_ramanujan_bound(a.k, a.d, n, bits);
    const bool better = better_than_ramanujan_check(a.k, a.d, n, bits);
    j["n"] = n;
    j["shifted"] = enclosure_json(shifted);
    j["shifted_le_ramanujan"] = better;
    text << "shifted (n=" << n << "): " << shifted.to_string(30) << "\n"
         << "shifted <= ramanujan: " << (better ? "true" : "false") << "\n";

    const Rational theta = a.theta ? parse_rational(*a.theta) : Rational(a.k);
    j["theta"] = to_fraction_string(theta);
    const Enclosure cor = cor_ok_bound(theta, m, n, a.d, bits);
    const Enclosure us = u_star(theta, m, n, a.d, bits);
    const Rational u = a.u ? parse_rational(*a.u) : us.mid();
    const Enclosure r = r_bound(BoundParams{theta, a.d, ConvDims{m, n}, u}, bits);
    j["cor_ok"] = enclosure_json(cor);
    j["u_star"] = enclosure_json(us);
    j["u"] = to_fraction_string(u);
    j["r_of_u"] = enclosure_json(r);
    text << "theta: " << to_fraction_string(theta) << " (m=" << m << ", n=" << n << ")\n"
         << "cor_ok: " << cor.to_string(30) << "\n"
         << "u_star: " << us.to_string(30) << "\n"
         << "R(u) at u=" << to_decimal(u, 30) << ": " << r.to_string(30) << "\n";
  } else if (a.theta || a.u) {
    throw InvalidInput("--theta and --u need --n");
  }
  std::cout << (c.json ? j.dump(2) + "\n" : text.str());
  return kOk;
}

struct ExpectedPolyArgs {
  std::string state;
};

int run_expected_poly(const ExpectedPolyArgs& a, const Common& c) {
  auto in = open_file<std::ifstream>(a.state);
  const BuildState state = read_state(in);
  const RatPoly p = node_gram_poly(state);
  std::optional<RootBracket> br;
  if (p.degree() >= 1) br = max_root(p);
  if (c.json) {
    json j = {{"poly", poly_json(p)}};
    if (br) j["max_root"] = bracket_json(*br);
    std::cout << j.dump(2) << "\n";
  } else {
    std::cout << poly_to_record(p);
    if (br) std::cout << "# max root in (" << to_decimal(br->lo, 25) << ", " << to_decimal(br->hi, 25) << "]\n";
  }
  return kOk;
}

struct OracleArgs {
  std::string name;
  long trials = 100000;
  int instances = 0;
};

int run_oracle(const OracleArgs& a, const Common& c) {
  if (a.name == "list") {
    for (const auto& info : check_catalog()) std::cout << info.name << "  " << info.summary << "\n";
    return kOk;
  }
  CheckOptions opts;
  opts.seed = c.seed;
  opts.trials = a.trials;
  opts.instances = a.instances;
  opts.precision_bits = c.precision_bits;
  const CheckResult res = run_check(a.name, opts);
  if (c.json) {
    json j = {{"check", res.name}, {"pass", res.pass}, {"seed", c.seed}, {"details", res.details}};
    if (res.counterexample) j["counterexample"] = *res.counterexample;
    std::cout << j.dump(2) << "\n";
  } else {
    for (const auto& line : res.details) std::cout << "  " << line << "\n";
    std::cout << res.name << ": " << (res.pass ? "PASS" : "FAIL") << "\n";
    if (res.counterexample) std::cout << "first counterexample: " << *res.counterexample << "\n";
  }
  return res.pass ? kOk : kFailed;
}

template <class T>
void env_override(const char* name, T& target) {
  const char* v = std::getenv(name);
  if (v == nullptr || *v == '\0') return;
  try {
    std::size_t used = 0;
    const long long parsed = std::stoll(v, &used);
    if (used != std::string(v).size() || parsed <= 0) throw std::invalid_argument(name);
    target = static_cast<T>(parsed);
  } catch (const std::exception&) {
    throw InvalidInput(std::string(name) + " must be a positive integer");
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Ramanujan biregular graphs via interlacing families"};
  app.require_subcommand(1);
  app.set_help_all_flag("--help-all");

  Common common;
  app.add_option("--precision-bits", common.precision_bits, "Bits for square-root enclosures")
      ->check(CLI::Range(16u, 1u << 20));
  app.add_option("--cap", common.cap, "Enumeration cap for brute-force oracles (env BIREGULAR_CAP)")
      ->check(CLI::PositiveNumber);
  app.add_option("--seed", common.seed, "Seed for Monte Carlo oracles");
  app.add_option("--workers", common.workers, "Worker threads (env BIREGULAR_WORKERS)")->check(CLI::PositiveNumber);
  app.add_flag("--json", common.json, "Machine-readable output");

  ConstructArgs ca;
  auto* construct_cmd = app.add_subcommand("construct", "Greedy construction, writes graph, trail and certificate");
  construct_cmd->add_option("n", ca.n)->required()->check(CLI::PositiveNumber);
  construct_cmd->add_option("k", ca.k)->required()->check(CLI::PositiveNumber);
  construct_cmd->add_option("d", ca.d)->required()->check(CLI::PositiveNumber);
  construct_cmd->add_option("-o,--out-dir", ca.out_dir, "Directory for graph.txt, trail.txt, certificate.txt");

  VerifyArgs va;
  auto* verify_cmd = app.add_subcommand("verify", "Certify a graph file against the Ramanujan bound");
  verify_cmd->add_option("graph", va.graph)->required();
  verify_cmd->add_option("k", va.k)->required()->check(CLI::PositiveNumber);
  verify_cmd->add_option("d", va.d)->required()->check(CLI::PositiveNumber);
  verify_cmd->add_option("-o,--out", va.cert_out, "Write the certificate here");

  ConvolveArgs cv;
  auto* convolve_cmd = app.add_subcommand("convolve", "Rectangular additive convolution of two polynomial files");
  convolve_cmd->add_option("p", cv.p)->required();
  convolve_cmd->add_option("q", cv.q)->required();
  convolve_cmd->add_option("m", cv.m)->required()->check(CLI::NonNegativeNumber);
  convolve_cmd->add_option("n", cv.n)->required()->check(CLI::NonNegativeNumber);
  convolve_cmd->add_option("-o,--out", cv.out, "Write the result here");

  BoundArgs ba;
  auto* bound_cmd = app.add_subcommand("bound", "Ramanujan and convolution root bounds");
  bound_cmd->add_option("k", ba.k)->required()->check(CLI::PositiveNumber);
  bound_cmd->add_option("d", ba.d)->required()->check(CLI::PositiveNumber);
  bound_cmd->add_option("--theta", ba.theta, "Squared singular value (default k)");
  bound_cmd->add_option("--u", ba.u, "Point for R(u) (default u_star)");
  bound_cmd->add_option("--n", ba.n, "Right side size; enables shifted, cor_ok, u_star and R(u)")
      ->check(CLI::PositiveNumber);

  ExpectedPolyArgs ea;
  auto* expected_cmd = app.add_subcommand("expected-poly", "Node polynomial of a build state file");
  expected_cmd->add_option("state", ea.state)->required();

  OracleArgs oa;
  auto* oracle_cmd = app.add_subcommand("oracle", "Run a named oracle check ('list' for names)");
  oracle_cmd->add_option("name", oa.name)->required();
  oracle_cmd->add_option("--trials", oa.trials, "Monte Carlo samples")->check(CLI::PositiveNumber);
  oracle_cmd->add_option("--instances", oa.instances, "Random instances (0 keeps each check's default)")
      ->check(CLI::NonNegativeNumber);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kInvalid;
  }

  try {
    // flags win over the environment
    if (app.count("--workers") == 0) env_override("BIREGULAR_WORKERS", common.workers);
    if (app.count("--cap") == 0) env_override("BIREGULAR_CAP", common.cap);
    if (common.workers > 0) set_worker_count(common.workers);
    set_enumeration_cap(common.cap);

    if (*construct_cmd) return run_construct(ca, common);
    if (*verify_cmd) return run_verify(va, common);
    if (*convolve_cmd) return run_convolve(cv, common);
    if (*bound_cmd) return run_bound(ba, common);
    if (*expected_cmd) return run_expected_poly(ea, common);
    if (*oracle_cmd) return run_oracle(oa, common);
  } catch (const CapExceeded& e) {
    std::cerr << "cap exceeded: " << e.what() << "\n";
    return kCap;
  } catch (const StructuralError& e) {
    std::cerr << "verification failed: " << e.what() << "\n";
    return kFailed;
  } catch (const InternalError& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return kFailed;
  } catch (const Error& e) {
    std::cerr << "invalid input: " << e.what() << "\n";
    return kInvalid;
  } catch (const std::filesystem::filesystem_error& e) {
    std::cerr << "invalid input: " << e.what() << "\n";
    return kInvalid;
  }
  return kInvalid;
}
