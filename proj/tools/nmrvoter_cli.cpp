#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "nmr/json_io.hpp"
#include "nmr/selfcheck.hpp"
#include "nmr/simulator.hpp"
#include "nmr/spectral.hpp"
#include "nmr/voter.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitBadInput = 1;
constexpr int kExitZeroActive = 2;

// --input/--config take a file path, "-" for stdin, or inline JSON (detected
// by a leading '{').
std::string slurp(const std::string& spec) {
  const auto first = spec.find_first_not_of(" \t\r\n");
  if (first != std::string::npos && spec[first] == '{') {
    return spec;
  }
  if (spec == "-") {
    std::ostringstream buffer;
    buffer << std::cin.rdbuf();
    return buffer.str();
  }
  std::ifstream file(spec);
  if (!file) {
    throw std::invalid_argument("cannot open input: " + spec);
  }
  std::ostringstream buffer;
  buffer << file.rdbuf();
  return buffer.str();
}

nmr::json parse_json(const std::string& text) {
  return nmr::json::parse(text);  // throws nlohmann::json::parse_error
}

int run_vote(const std::string& input_spec, const std::string& format) {
  const nmr::VoterInputSet inputs = nmr::input_set_from_json(parse_json(slurp(input_spec)));
  const nmr::Voter voter;
  const nmr::InputStateDescriptor isd = voter.compute_isd(inputs);
  if (format == "pretty") {
    std::cout << "y     = " << isd.y << "  (input " << isd.index << ")\n"
              << "d     = " << isd.d << "\n"
              << "eq    = " << isd.eq << "\n";
    std::cout << "e     =";
    for (int flag : isd.e) std::cout << ' ' << flag;
    std::cout << "\na     = " << isd.a << "\nerr   = " << isd.err << "\n";
  } else {
    std::cout << nmr::to_json(isd).dump() << "\n";
  }
  return kExitOk;
}

int run_analyze(const std::string& input_spec, double tolerance, const std::string& format) {
  const nmr::VoterInputSet inputs = nmr::input_set_from_json(parse_json(slurp(input_spec)));
  const nmr::Voter voter;
  const nmr::EqualityMatrix matrix = voter.build_matrix(inputs);
  const nmr::FrequencyProfile profile = voter.frequency_profile(inputs);
  const nmr::InputStateDescriptor isd = voter.compute_isd(inputs);
  const nmr::IntPolynomial poly = nmr::char_poly_proper(profile, inputs.size());
  const nmr::Spectrum spectrum = nmr::analyze_spectrum(matrix, tolerance);
  const auto eigenpairs = nmr::eigenpairs_proper(matrix);
  const nmr::DetectionReport check = nmr::full_check(matrix, tolerance);

  if (format == "pretty") {
    std::cout << "matrix:\n" << matrix.pretty();
    if (matrix.order() >= 2) {
      std::cout << "reduced:\n" << nmr::reduce_matrix(matrix).pretty();
    }
    std::cout << "frequencies:";
    for (std::size_t f : profile.frequencies()) std::cout << ' ' << f;
    std::cout << "\ncharacteristic polynomial: " << poly.str() << "\n";
    std::cout << "eigenvalues:";
    for (const auto& entry : spectrum.exact) {
      std::cout << ' ' << entry.value.str();
      if (entry.multiplicity > 1) std::cout << "(x" << entry.multiplicity << ")";
    }
    std::cout << "\nnumeric:";
    for (double v : spectrum.numeric) std::cout << ' ' << v;
    std::cout << "\nvote: " << nmr::to_json(isd).dump() << "\n";
    std::cout << "selfcheck: transitivity_err=" << check.transitivity_err
              << " spectral_err=" << check.spectral_err << "\n";
    return kExitOk;
  }

  nmr::json out{{"input", nmr::to_json(inputs)},
                {"matrix", nmr::to_json(matrix)},
                {"isd", nmr::to_json(isd)},
                {"profile", nmr::to_json(profile)},
                {"char_poly", nmr::to_json(poly)},
                {"spectrum", nmr::to_json(spectrum)},
                {"eigenpairs", nmr::to_json(eigenpairs)},
                {"selfcheck", nmr::to_json(check)}};
  out["reduced"] = matrix.order() >= 2 ? nmr::to_json(nmr::reduce_matrix(matrix))
                                       : nmr::json(nullptr);
  std::cout << out.dump() << "\n";
  return kExitOk;
}

int run_inject(const std::string& config_spec, double tolerance, const std::string& format) {
  const nmr::CampaignConfig config =
      nmr::campaign_config_from_json(parse_json(slurp(config_spec)));
  const nmr::CampaignReport report = nmr::run_campaign(config, tolerance);
  if (format == "pretty") {
    std::cout << "cases: " << report.total << "  injected: " << report.injected
              << "  detected: " << report.detected << "  skipped: " << report.skipped
              << "  detection rate: " << report.detection_rate << "\n";
    for (const auto& item : report.cases) {
      if (!item.eligible) {
        std::cout << "seed " << item.seed << ": skipped, no class of size >= 3\n";
      }
    }
  } else {
    std::cout << nmr::to_json(report).dump() << "\n";
  }
  return report.detected == report.injected ? kExitOk : kExitBadInput;
}

int run_simulate(const std::string& config_spec, std::uint64_t horizon, std::uint64_t seed,
                 const std::string& output_path) {
  const nmr::SimConfig config = nmr::sim_config_from_json(parse_json(slurp(config_spec)));
  const auto trace = nmr::NmrodSimulator::run(config, horizon, seed);

  std::ofstream file;
  std::ostream* out = &std::cout;
  if (!output_path.empty()) {
    file.open(output_path);
    if (!file) {
      throw std::invalid_argument("cannot open output file: " + output_path);
    }
    out = &file;
  }
  for (const auto& record : trace) {
    *out << nmr::to_json(record).dump() << "\n";
  }
  return kExitOk;
}

int run_gen(std::size_t n, const std::string& format) {
  if (n == 0) {
    throw std::invalid_argument("a voter needs at least one input");
  }
  const std::size_t fill_zeros = n >= 2 ? (n - 1) * (n - 2) / 2 : 0;
  const std::size_t upper_entries = n * (n - 1) / 2;
  nmr::json descriptor{
      {"n", n},
      {"word_width", 64},
      {"outputs", {"y", "index", "d", "eq", "e[0.." + std::to_string(n - 1) + "]", "a", "err"}},
      {"programming_signals", "p[0.." + std::to_string(n - 1) + "]"}};
  descriptor["reduced_matrix"] =
      n >= 2 ? nmr::json{{"rows", n - 1},
                         {"cols", n - 1},
                         {"fill_zero_count", fill_zeros},
                         {"upper_entry_count", upper_entries}}
             : nmr::json(nullptr);
  if (format == "pretty") {
    std::cout << descriptor.dump(2) << "\n";
  } else {
    std::cout << descriptor.dump() << "\n";
  }
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Programmable NMR voter: voting, spectral analysis, fault injection, simulation"};
  app.require_subcommand(1);

  std::string input_spec;
  std::string config_spec;
  std::string output_path;
  std::string format = "json";
  double tolerance = nmr::kDefaultIntegralityTol;
  std::uint64_t seed = 0;
  std::uint64_t horizon = 100;
  std::size_t gen_n = 0;

  auto add_format = [&format](CLI::App* cmd) {
    cmd->add_option("--format", format, "Output format")
        ->check(CLI::IsMember({"json", "pretty"}));
  };

  CLI::App* vote = app.add_subcommand("vote", "Vote on an input set and print the ISD");
  vote->add_option("--input", input_spec, "Input record: path, '-' or inline JSON")->required();
  add_format(vote);

  CLI::App* analyze = app.add_subcommand(
      "analyze", "Matrix, profile, characteristic polynomial, spectrum and self-checks");
  analyze->add_option("--input", input_spec, "Input record: path, '-' or inline JSON")->required();
  analyze->add_option("--tolerance", tolerance, "Eigenvalue integrality tolerance");
  add_format(analyze);

  CLI::App* inject = app.add_subcommand("inject", "Run a seeded violation-injection campaign");
  inject->add_option("--config", config_spec, "Campaign config: path, '-' or inline JSON")
      ->required();
  inject->add_option("--tolerance", tolerance, "Eigenvalue integrality tolerance");
  add_format(inject);

  CLI::App* simulate = app.add_subcommand("simulate", "Run the adaptive-redundancy simulator");
  simulate->add_option("--config", config_spec, "Simulation config: path, '-' or inline JSON")
      ->required();
  simulate->add_option("--horizon", horizon, "Number of steps");
  simulate->add_option("--seed", seed, "PRNG seed");
  simulate->add_option("--output", output_path, "Trace file (JSON Lines); stdout if omitted");

  CLI::App* gen = app.add_subcommand("gen", "Emit the voter descriptor for N inputs");
  gen->add_option("n", gen_n, "Number of voter inputs")->required();
  add_format(gen);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitBadInput;
  }

  try {
    if (vote->parsed()) return run_vote(input_spec, format);
    if (analyze->parsed()) return run_analyze(input_spec, tolerance, format);
    if (inject->parsed()) return run_inject(config_spec, tolerance, format);
    if (simulate->parsed()) return run_simulate(config_spec, horizon, seed, output_path);
    if (gen->parsed()) return run_gen(gen_n, format);
  } catch (const nmr::ZeroActiveError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitZeroActive;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitBadInput;
  }
  return kExitBadInput;
}
