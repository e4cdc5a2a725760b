// dmimo: rates of oblivious distributed MIMO over the circulant interference channel.
//
//   dmimo --alpha2 0.6 --snr-db 10 --c inf --cprime inf --scheme IM
//   dmimo sweep --alpha2 0.6 --snr-db 0:1:40 --c 4 --cprime inf --scheme IM,QW --out r.csv
//   dmimo figure2 --out fig2/
//
// Exit codes: 0 success, 2 validation, 3 I/O.

#include <filesystem>
#include <fstream>
#include <iostream>
#include <string>

#include "CLI11.hpp"
#include "dmimo/errors.hpp"
#include "sweep.hpp"

namespace {

constexpr int kExitValidation = 2;
constexpr int kExitIo = 3;

struct GridArgs {
  std::string alpha2;
  std::string snr_db;
  std::string c = "inf";
  std::string cprime = "inf";
  std::string scheme = "all";
  std::string format = "csv";
  std::string out;
};

void add_grid_options(CLI::App& app, GridArgs& args, bool out_required) {
  app.add_option("--alpha2", args.alpha2, "alpha^2 in [0,1]: value, a,b,c list or start:step:stop")
      ->required();
  app.add_option("--snr-db", args.snr_db, "per-transmitter SNR P in dB: value, list or range")
      ->required();
  app.add_option("--c", args.c, "transmit-side link capacity C [bit/symbol] or inf")
      ->capture_default_str();
  app.add_option("--cprime", args.cprime, "receive-side link capacity C' [bit/symbol] or inf")
      ->capture_default_str();
  app.add_option("--scheme", args.scheme,
                 "UB, IM, QW, EC, DC, IM-EC, IM-DC, QW-EC, QW-DC (comma list) or all")
      ->capture_default_str();
  app.add_option("--format", args.format, "csv or json")
      ->check(CLI::IsMember({"csv", "json"}))
      ->capture_default_str();
  auto* out = app.add_option("--out", args.out, "output file");
  if (out_required) out->required();
}

dmimo::cli::SweepGrid build_grid(const GridArgs& args) {
  using namespace dmimo::cli;
  SweepGrid grid;
  grid.alpha2_values = parse_axis(args.alpha2, false);
  grid.p_db_values = parse_axis(args.snr_db, false);
  grid.c_values = parse_axis(args.c, true);
  grid.cprime_values = parse_axis(args.cprime, true);
  bool all = false;
  grid.schemes = parse_scheme_list(args.scheme, &all);
  grid.skip_inapplicable = all;
  return grid;
}

void emit(const std::vector<dmimo::cli::SweepRow>& rows, const std::string& format,
          std::ostream& os) {
  if (format == "json") {
    dmimo::cli::write_json(os, rows);
  } else {
    dmimo::cli::write_csv(os, rows);
  }
}

void write_file(const std::filesystem::path& path, const std::vector<dmimo::cli::SweepRow>& rows,
                const std::string& format) {
  std::ofstream file(path, std::ios::binary);
  if (!file) throw dmimo::cli::OutputError("cannot open " + path.string() + " for writing");
  emit(rows, format, file);
  file.close();
  if (!file) throw dmimo::cli::OutputError("failed writing " + path.string());
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Achievable rates and upper bounds for distributed MIMO with oblivious antennas"};
  app.require_subcommand(0, 1);

  GridArgs eval_args;
  add_grid_options(app, eval_args, false);
  // Top-level grid options only apply when no subcommand is given.
  for (auto* opt : app.get_options()) {
    if (opt->get_name() == "--alpha2" || opt->get_name() == "--snr-db") opt->required(false);
  }

  GridArgs sweep_args;
  auto* sweep = app.add_subcommand("sweep", "evaluate a grid of (alpha2, P, C, C') x schemes");
  add_grid_options(*sweep, sweep_args, true);

  std::string figure_dir;
  auto* figure = app.add_subcommand("figure2", "write the alpha^2 = 0.6 rate-vs-SNR dataset");
  figure->add_option("--out", figure_dir, "output directory")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::Error& e) {
    app.exit(e);
    return kExitValidation;
  }

  try {
    if (*figure) {
      namespace fs = std::filesystem;
      const fs::path dir(figure_dir);
      std::error_code ec;
      fs::create_directories(dir, ec);
      if (ec) throw dmimo::cli::OutputError("cannot create " + dir.string() + ": " + ec.message());
      const auto rows = dmimo::cli::figure2_rows();
      write_file(dir / "figure2.csv", rows, "csv");
      std::ofstream readme(dir / "README.md", std::ios::binary);
      readme << dmimo::cli::figure2_readme();
      if (!readme) throw dmimo::cli::OutputError("failed writing " + (dir / "README.md").string());
      std::cout << rows.size() << " rows written to " << (dir / "figure2.csv").string() << '\n';
      return 0;
    }
    if (*sweep) {
      const auto rows = dmimo::cli::run_sweep(build_grid(sweep_args));
      write_file(sweep_args.out, rows, sweep_args.format);
      std::cout << rows.size() << " rows written to " << sweep_args.out << '\n';
      return 0;
    }
    if (eval_args.alpha2.empty() || eval_args.snr_db.empty()) {
      std::cerr << "--alpha2 and --snr-db are required\n" << app.help();
      return kExitValidation;
    }
    const auto rows = dmimo::cli::run_sweep(build_grid(eval_args));
    if (eval_args.out.empty()) {
      emit(rows, eval_args.format, std::cout);
    } else {
      write_file(eval_args.out, rows, eval_args.format);
    }
    return 0;
  } catch (const dmimo::cli::OutputError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitIo;
  } catch (const dmimo::cli::ValidationError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitValidation;
  } catch (const dmimo::DomainError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitValidation;
  } catch (const dmimo::PreconditionError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitValidation;
  }
}
