#include "cohnl/cli.hpp"

#include <CLI11.hpp>

#include <cmath>
#include <fstream>
#include <optional>
#include <sstream>

#include "cohnl/incoherent_ops.hpp"
#include "cohnl/json_io.hpp"
#include "cohnl/theorem_lab.hpp"

namespace cohnl::cli {
namespace {

struct Flags {
  std::string in;
  std::string out;
  std::optional<int> d;
  std::optional<int> n;
  int resolution = 16;
  int trials = 1000;
  std::uint64_t seed = 7;
  bool expect_violation = false;
  std::string theorem = "all";
  int a_steps = 101;
  int b_steps = 101;
};

class UsageError : public InvalidArgument {
 public:
  using InvalidArgument::InvalidArgument;
};

std::string read_file(const std::string& path) {
  if (path.empty()) throw UsageError("--in is required for this subcommand");
  std::ifstream f(path, std::ios::binary);
  if (!f) throw UsageError("cannot read input file " + path);
  std::ostringstream os;
  os << f.rdbuf();
  return os.str();
}

DensityMatrix load_state(const Flags& f) { return density_from_document(parse_matrix(read_file(f.in))); }

// Square-dimension inputs without "dims" are read as d (x) d.
DensityMatrix as_bipartite(const DensityMatrix& rho) {
  if (rho.parties() == 2) return rho;
  if (rho.parties() == 1) {
    const int d = static_cast<int>(std::lround(std::sqrt(rho.dim())));
    if (d * d == rho.dim() && d >= 2) return rho.with_dims({d, d});
  }
  throw InvalidArgument("expected a bipartite d x d state (dims [d,d])");
}

DensityMatrix as_three_qubits(const DensityMatrix& rho) {
  if (rho.parties() == 1 && rho.dim() == 8) return rho.with_dims({2, 2, 2});
  if (rho.dims() != Dims{2, 2, 2}) throw InvalidArgument("expected a three-qubit state (dims [2,2,2])");
  return rho;
}

OracleOptions oracle_options(const Flags& f) {
  OracleOptions o;
  o.resolution = f.resolution;
  o.seed = f.seed;
  return o;
}

struct Result {
  Json json;
  bool violated = false;
};

Result run_coherence(const Flags& f) {
  const auto rho = load_state(f);
  const auto report = coherence_report(rho);
  return {to_json(report), !report.is_incoherent};
}

Result run_convert(const Flags& f) {
  const auto rho = load_state(f);
  if (rho.parties() != 1) throw InvalidArgument("convert: source must be a single qudit");
  const int d = f.d.value_or(rho.dim());
  if (d != rho.dim()) throw InvalidArgument("convert: --d does not match the input dimension");
  const auto out = convert(rho, ConversionSpec{d, f.n.value_or(2)});
  return {to_json(out), c_l1(out) > kIncoherentTol};
}

Result run_chsh(const Flags& f) {
  const auto rho = as_bipartite(load_state(f));
  const int d = rho.dims()[0];
  if (rho.dims()[1] != d) throw InvalidArgument("chsh: both parties must have the same dimension");
  if (d == 2) {
    const auto closed = chsh_certificate(rho);
    Json j{{"horodecki_M", horodecki_M(rho)}, {"certificate", to_json(closed)},
           {"oracle", to_json(chsh_grid_oracle(rho, oracle_options(f)))}};
    return {j, closed.violated};
  }
  // Qudits: best projected CHSH over all basis pairs.
  std::optional<CertificateReport> best;
  for (int a = 0; a < d; ++a)
    for (int b = a + 1; b < d; ++b)
      for (int c = 0; c < d; ++c)
        for (int e = c + 1; e < d; ++e) {
          auto r = projected_chsh(rho, ProjectorPair{a, b, c, e, d});
          if (!best || r.value > best->value) best = std::move(r);
        }
  return {Json{{"certificate", to_json(*best)}}, best->violated};
}

Result run_svetlichny(const Flags& f) {
  const auto rho = as_three_qubits(load_state(f));
  const auto bound = svetlichny_bound(rho, oracle_options(f));
  Json j{{"lambda1", svetlichny_lambda1(rho)}, {"bound", to_json(bound)},
         {"oracle", to_json(svetlichny_oracle(rho, oracle_options(f)))}};
  return {j, bound.violated};
}

Result run_tns(const Flags& f) {
  const auto rho = as_three_qubits(load_state(f));
  auto t = t_certificate(rho, reference_t_settings(false));
  t.name = "t_inequality";
  auto t_swapped = t_certificate(rho, reference_t_settings(true));
  t_swapped.name = "t_inequality_swapped";
  const auto ns = ns_oracle(rho, oracle_options(f));
  Json j{{"t", to_json(t)}, {"t_swapped", to_json(t_swapped)}, {"ns", to_json(ns)}};
  return {j, t.violated || t_swapped.violated || ns.violated};
}

Result run_gme(const Flags& f) {
  const auto rho = load_state(f);
  double value = 0.0;
  std::string mode;
  if (rho.parties() == 1) {
    if (!f.n) throw InvalidArgument("gme: a single-qudit source needs --n (number of parties after conversion)");
    value = c_gme_converted(rho, *f.n);
    mode = "converted";
  } else {
    value = c_gme_pure(rho);
    mode = "pure";
  }
  return {Json{{"c_gme", value}, {"mode", mode}}, value > kViolationTol};
}

Result run_verify(const Flags& f) {
  CampaignOptions opts;
  opts.trials = f.trials;
  opts.seed = f.seed;
  opts.oracle.resolution = f.resolution;
  std::vector<CampaignResult> results;
  const auto& th = f.theorem;
  if (th == "all") {
    results = verify_all(opts);
  } else if (th == "1") {
    results.push_back(verify_chsh_conversion(opts));
  } else if (th == "2") {
    results.push_back(verify_projected_chsh(opts, f.d.value_or(3)));
  } else if (th == "3") {
    results.push_back(verify_relative_entropy_chain(opts));
  } else if (th == "4") {
    results.push_back(verify_gme_conversion(opts, f.d.value_or(3)));
  } else if (th == "5") {
    results.push_back(verify_tripartite_thresholds(opts));
  } else {
    throw UsageError("verify: --theorem must be one of 1, 2, 3, 4, 5, all");
  }
  Json j = Json::array();
  bool all_passed = true;
  for (const auto& r : results) {
    j.push_back(to_json(r));
    all_passed = all_passed && r.passed();
  }
  return {j, all_passed};
}

void write_out(const std::string& path, const std::string& text) {
  std::ofstream o(path, std::ios::binary);
  if (!o) throw UsageError("cannot open " + path + " for writing");
  o << text;
}

}  // namespace

Outcome run(const std::vector<std::string>& args) {
  CLI::App app{"Coherence measures, incoherent conversions and nonlocality certificates", "cohnl"};
  app.require_subcommand(1);
  Flags f;

  const auto add_state = [&](CLI::App* sub) {
    sub->add_option("--in", f.in, "Matrix JSON input file")->required();
    sub->add_option("--out", f.out, "Write JSON output to this file instead of stdout");
    sub->add_flag("--expect-violation", f.expect_violation, "Exit with code 2 unless the certificate fires");
  };
  const auto add_oracle = [&](CLI::App* sub) {
    sub->add_option("--resolution", f.resolution, "Angular grid steps for oracle start points")
        ->check(CLI::PositiveNumber);
    sub->add_option("--seed", f.seed, "Seed for every stochastic step");
  };

  auto* coherence = app.add_subcommand("coherence", "l1 and relative-entropy coherence of a state");
  add_state(coherence);
  auto* conv = app.add_subcommand("convert", "Fan-out conversion of a source qudit onto n parties");
  add_state(conv);
  conv->add_option("--d", f.d, "Source dimension (checked against the input)");
  conv->add_option("--n", f.n, "Total number of parties (default 2)");
  auto* chsh = app.add_subcommand("chsh", "CHSH certificate (Horodecki closed form, oracle, projected CHSH for qudits)");
  add_state(chsh);
  add_oracle(chsh);
  auto* svet = app.add_subcommand("svetlichny", "Svetlichny bound 4 lambda_1 and settings oracle");
  add_state(svet);
  add_oracle(svet);
  auto* tns = app.add_subcommand("tns", "T expression with fixed settings and NS settings oracle");
  add_state(tns);
  add_oracle(tns);
  auto* gme = app.add_subcommand("gme", "Genuine multipartite concurrence");
  add_state(gme);
  gme->add_option("--n", f.n, "Parties after conversion when the input is a single source qudit");
  auto* verify = app.add_subcommand("verify", "Run verification campaigns");
  verify->add_option("--theorem", f.theorem, "1, 2, 3, 4, 5 or all");
  verify->add_option("--trials", f.trials, "Random trials per campaign")->check(CLI::PositiveNumber);
  verify->add_option("--d", f.d, "Source dimension for campaigns 2 (3-5) and 4 (2-3)");
  verify->add_option("--out", f.out, "Write JSON output to this file instead of stdout");
  add_oracle(verify);
  auto* fig2 = app.add_subcommand("fig2", "T and NS values over rho_01 = a + ib (CSV)");
  fig2->add_option("--a-steps", f.a_steps, "Grid points along a")->check(CLI::Range(2, 100000));
  fig2->add_option("--b-steps", f.b_steps, "Grid points along b")->check(CLI::Range(2, 100000));
  fig2->add_option("--out", f.out, "CSV output path (CSV goes to stdout when omitted)");
  add_oracle(fig2);

  Outcome outcome;
  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    outcome.out = app.help();
    return outcome;
  } catch (const CLI::ParseError& e) {
    outcome.exit_code = 1;
    outcome.err = std::string("error: ") + e.what() + "\n";
    return outcome;
  }

  try {
    if (fig2->parsed()) {
      CampaignOptions opts;
      opts.seed = f.seed;
      opts.oracle.resolution = f.resolution;
      if (f.out.empty()) {
        std::ostringstream csv;
        const auto result = tripartite_surface_campaign(f.a_steps, f.b_steps, opts, csv);
        outcome.out = csv.str();
        if (!result.passed()) outcome.err = to_json(result).dump(2) + "\n";
      } else {
        std::ofstream csv(f.out, std::ios::binary);
        if (!csv) throw UsageError("cannot open " + f.out + " for writing");
        auto result = tripartite_surface_campaign(f.a_steps, f.b_steps, opts, csv);
        result.artifacts.push_back(f.out);
        outcome.out = to_json(result).dump(2) + "\n";
      }
      return outcome;
    }

    Result result;
    if (coherence->parsed()) result = run_coherence(f);
    else if (conv->parsed()) result = run_convert(f);
    else if (chsh->parsed()) result = run_chsh(f);
    else if (svet->parsed()) result = run_svetlichny(f);
    else if (tns->parsed()) result = run_tns(f);
    else if (gme->parsed()) result = run_gme(f);
    else if (verify->parsed()) result = run_verify(f);

    const std::string text = result.json.dump(2) + "\n";
    if (f.out.empty())
      outcome.out = text;
    else
      write_out(f.out, text);
    if (f.expect_violation && !result.violated) outcome.exit_code = 2;
  } catch (const InvalidArgument& e) {
    outcome.exit_code = 1;
    outcome.err = std::string("error: ") + e.what() + "\n";
  }
  return outcome;
}

}  // namespace cohnl::cli
