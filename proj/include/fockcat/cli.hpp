// Command-line front end: figure data pipelines, custom scenario runs and the
// CSV / JSON manifest writers they share.
#pragma once

#include <iosfwd>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace fockcat::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitValidation = 1;
inline constexpr int kExitNumericalHealth = 2;

/// Shortest round-trip decimal form, independent of the C/C++ locale.
std::string format_number(double x);

struct Table {
  std::vector<std::string> columns;
  std::vector<std::vector<std::string>> rows;

  void add_row(std::vector<std::string> row);
};

/// Header row plus one newline-terminated line per record.
std::string to_csv(const Table& table);

struct FigureOverrides {
  std::vector<double> lambda;
  std::vector<double> R;
  std::optional<double> Rs;
  std::vector<double> eta;
  std::optional<int> n_max;
  std::optional<int> k_max;
};

struct FigureData {
  std::string name;
  Table table;
  std::map<std::string, std::string> parameters;
  double max_tail_weight = 0.0;
  int flagged_records = 0;
  std::vector<std::string> diagnostics;
};

const std::vector<std::string>& figure_names();

/// Computes the data behind one figure. Throws fockcat::ParameterError for
/// unknown names or overrides the figure does not accept.
FigureData build_figure(const std::string& name, const FigureOverrides& overrides);

/// Entry point shared by the fockcat executable and the tests.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace fockcat::cli
