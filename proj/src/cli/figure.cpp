#include "mgdiag/cli/figure.hpp"

#include <sstream>

#include "mgdiag/errors.hpp"
#include "mgdiag/hypersurface.hpp"

namespace mgdiag::cli {

char FigureCell::region() const {
  if (f_regular_type) return 'F';
  if (rational) return 'R';
  if (cohen_macaulay) return 'C';
  return '.';
}

const FigureCell& FigureTable::at(std::int64_t d, std::int64_t e) const {
  if (d < 1 || d > d_max || e < 1 || e > e_max) throw PreconditionError("cell outside the table");
  return cells[static_cast<std::size_t>((d - 1) * e_max + (e - 1))];
}

FigureTable figure_table(int m, int n, int d_max, int e_max) {
  if (m < 3 || n < 3) throw PreconditionError("region table needs m, n >= 3");
  if (d_max < 1 || e_max < 1) throw PreconditionError("d_max and e_max must be >= 1");
  FigureTable table{m, n, d_max, e_max, {}};
  table.cells.reserve(static_cast<std::size_t>(d_max) * static_cast<std::size_t>(e_max));
  const gradedcomb::DiagonalSpec diag{1, 1};
  for (int d = 1; d <= d_max; ++d) {
    for (int e = 1; e <= e_max; ++e) {
      auto report = hypersurface::classify({m, n, d, e}, diag);
      table.cells.push_back({d, e, report.cohen_macaulay, report.gorenstein, report.rational_singularities_generic,
                             report.f_regular_type_generic});
    }
  }
  return table;
}

std::string figure_ascii(const FigureTable& t) {
  std::ostringstream out;
  out << "m=" << t.m << " n=" << t.n << " Delta=(1,1)\n";
  for (int e = t.e_max; e >= 1; --e) {
    out << (e < 10 ? " " : "") << e << " |";
    for (int d = 1; d <= t.d_max; ++d) {
      const auto& c = t.at(d, e);
      out << ' ' << c.region() << (c.gorenstein ? '*' : ' ');
    }
    out << '\n';
  }
  out << "   +" << std::string(static_cast<std::size_t>(3 * t.d_max), '-') << '\n';
  out << "    ";
  for (int d = 1; d <= t.d_max; ++d) out << (d < 10 ? " " : "") << d << ' ';
  out << " d\n";
  out << "F: F-regular type  R: rational  C: Cohen-Macaulay  .: not CM  *: Gorenstein\n";
  return out.str();
}

std::string figure_csv(const FigureTable& t) {
  std::ostringstream out;
  out << "d,e,cohen_macaulay,gorenstein,rational_singularities,f_regular_type,region\n";
  for (const auto& c : t.cells) {
    out << c.d << ',' << c.e << ',' << c.cohen_macaulay << ',' << c.gorenstein << ',' << c.rational << ','
        << c.f_regular_type << ',' << c.region() << '\n';
  }
  return out.str();
}

nlohmann::json figure_json(const FigureTable& t) {
  nlohmann::json cells = nlohmann::json::array();
  for (const auto& c : t.cells) {
    cells.push_back({{"d", c.d},
                     {"e", c.e},
                     {"cohen_macaulay", c.cohen_macaulay},
                     {"gorenstein", c.gorenstein},
                     {"rational_singularities", c.rational},
                     {"f_regular_type", c.f_regular_type},
                     {"region", std::string(1, c.region())}});
  }
  return {{"m", t.m}, {"n", t.n}, {"d_max", t.d_max}, {"e_max", t.e_max}, {"cells", std::move(cells)}};
}

}  // namespace mgdiag::cli
