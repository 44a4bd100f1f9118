#ifndef MGDIAG_CLI_FIGURE_HPP
#define MGDIAG_CLI_FIGURE_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "json.hpp"

namespace mgdiag::cli {

/// Flags of one (d, e) cell of the region table for Delta = (1,1).
struct FigureCell {
  std::int64_t d;
  std::int64_t e;
  bool cohen_macaulay;
  bool gorenstein;
  bool rational;
  bool f_regular_type;

  /// 'F' F-regular type, 'R' rational, 'C' Cohen-Macaulay, '.' otherwise.
  char region() const;
};

struct FigureTable {
  int m;
  int n;
  int d_max;
  int e_max;
  /// Row-major in d, then e.
  std::vector<FigureCell> cells;

  const FigureCell& at(std::int64_t d, std::int64_t e) const;
};

/// Classifies every (d, e) in [1,d_max] x [1,e_max]. Needs m, n >= 3 and
/// d_max, e_max >= 1.
FigureTable figure_table(int m, int n, int d_max, int e_max);

/// d runs left to right, e bottom to top; Gorenstein cells carry a '*'.
std::string figure_ascii(const FigureTable& table);
std::string figure_csv(const FigureTable& table);
nlohmann::json figure_json(const FigureTable& table);

}  // namespace mgdiag::cli

#endif  // MGDIAG_CLI_FIGURE_HPP
