#include "mgdiag/cli/commands.hpp"

#include <algorithm>
#include <functional>
#include <optional>
#include <ostream>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"
#include "mgdiag/cli/figure.hpp"
#include "mgdiag/cli/poly_parser.hpp"
#include "mgdiag/errors.hpp"
#include "mgdiag/exactalg/groebner.hpp"
#include "mgdiag/exactalg/hilbert.hpp"
#include "mgdiag/frobenius.hpp"
#include "mgdiag/hypersurface.hpp"
#include "mgdiag/rees.hpp"

namespace mgdiag::cli {

namespace {

using nlohmann::json;
using gradedcomb::BigInt;
using gradedcomb::DiagonalSpec;
using hypersurface::HypersurfaceSpec;

constexpr const char* kSchemaVersion = "1";

std::string schema_name(const std::string& command) { return "mgdiag." + command + "/" + kSchemaVersion; }

json big(const BigInt& v) {
  if (v >= std::numeric_limits<std::int64_t>::min() && v <= std::numeric_limits<std::int64_t>::max()) {
    return json(static_cast<std::int64_t>(v));
  }
  return json(v.str());
}

json window_json(const gradedcomb::Window& w) {
  if (w.empty()) return {{"empty", true}, {"lo", nullptr}, {"hi", nullptr}};
  return {{"empty", false}, {"lo", w.unbounded_below ? json(nullptr) : json(w.lo)}, {"hi", w.hi}};
}

std::string scalar_text(const json& v) {
  if (v.is_string()) return v.get<std::string>();
  if (v.is_array()) {
    std::string s;
    for (std::size_t i = 0; i < v.size(); ++i) {
      if (i) s += ';';
      s += scalar_text(v[i]);
    }
    return s;
  }
  return v.dump();
}

void flatten(const json& v, const std::string& prefix, std::vector<std::pair<std::string, std::string>>& out) {
  if (v.is_object()) {
    for (auto it = v.begin(); it != v.end(); ++it) {
      flatten(it.value(), prefix.empty() ? it.key() : prefix + "." + it.key(), out);
    }
    return;
  }
  if (v.is_array() && std::any_of(v.begin(), v.end(), [](const json& x) { return x.is_structured(); })) {
    out.emplace_back(prefix, v.dump());
    return;
  }
  out.emplace_back(prefix, scalar_text(v));
}

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string quoted = "\"";
  for (char c : s) {
    if (c == '"') quoted += '"';
    quoted += c;
  }
  return quoted + '"';
}

std::string flat_csv(const json& doc) {
  std::vector<std::pair<std::string, std::string>> fields;
  flatten(doc, "", fields);
  std::string header, row;
  for (std::size_t i = 0; i < fields.size(); ++i) {
    if (i) {
      header += ',';
      row += ',';
    }
    header += csv_field(fields[i].first);
    row += csv_field(fields[i].second);
  }
  return header + "\n" + row + "\n";
}

std::string flat_text(const json& doc) {
  std::vector<std::pair<std::string, std::string>> fields;
  flatten(doc, "", fields);
  std::string out;
  for (const auto& [k, v] : fields) out += k + ": " + v + "\n";
  return out;
}

/// Renders a list of flat row objects as CSV with the given columns.
std::string rows_csv(const json& rows, const std::vector<std::string>& columns) {
  std::string out;
  for (std::size_t i = 0; i < columns.size(); ++i) out += (i ? "," : "") + columns[i];
  out += '\n';
  for (const auto& r : rows) {
    for (std::size_t i = 0; i < columns.size(); ++i) {
      out += (i ? "," : "") + csv_field(r.contains(columns[i]) ? scalar_text(r[columns[i]]) : std::string());
    }
    out += '\n';
  }
  return out;
}

struct Emitter {
  std::string format = "json";

  void emit(std::ostream& out, const json& doc, const std::function<std::string()>& csv,
            const std::function<std::string()>& text) const {
    if (format == "json") {
      out << doc.dump(2) << '\n';
    } else if (format == "csv") {
      out << csv();
    } else {
      out << text();
    }
  }
};

void add_format(CLI::App* cmd, Emitter& em) {
  cmd->set_help_flag("--help", "Print this help message and exit");
  cmd->add_option("--format", em.format, "Output format")->check(CLI::IsMember({"json", "csv", "text"}));
}

json hypersurface_input(const HypersurfaceSpec& s, const DiagonalSpec& diag) {
  return {{"m", s.m}, {"n", s.n}, {"d", s.d}, {"e", s.e}, {"g", diag.g}, {"h", diag.h}};
}

// ---- classify ----

struct ClassifyArgs {
  HypersurfaceSpec spec{};
  DiagonalSpec diag{};
};

int run_classify(const ClassifyArgs& a, const Emitter& em, std::ostream& out) {
  auto r = hypersurface::classify(a.spec, a.diag);
  json doc{{"schema", schema_name("classify")},
           {"input", hypersurface_input(a.spec, a.diag)},
           {"cohen_macaulay", r.cohen_macaulay},
           {"cm_obstruction", r.cm_obstruction ? json(*r.cm_obstruction) : json(nullptr)},
           {"gorenstein", r.gorenstein},
           {"canonical_shift", {r.canonical_shift.first, r.canonical_shift.second}},
           {"a_invariant", r.a_invariant},
           {"rational_singularities_generic", r.rational_singularities_generic},
           {"f_regular_type_generic", r.f_regular_type_generic},
           {"generic_normal", r.generic_normal},
           {"dim2_rational", r.dim2_rational ? json(*r.dim2_rational) : json(nullptr)},
           {"caveats", r.caveats}};
  em.emit(out, doc, [&] { return flat_csv(doc); }, [&] { return flat_text(doc); });
  return kExitOk;
}

// ---- hilbert ----

struct HilbertArgs {
  HypersurfaceSpec spec{};
  DiagonalSpec diag{};
  std::int64_t k_max = 6;
  std::uint32_t p = 101;
  std::string poly;
  bool random = false;
  std::uint64_t seed = 0;
};

int run_hilbert(const HilbertArgs& a, const Emitter& em, std::ostream& out, std::ostream& err) {
  a.spec.validate();
  a.diag.validate();
  if (a.k_max < 0) throw PreconditionError("--k-max must be >= 0");
  if (!a.poly.empty() && a.random) throw PreconditionError("--poly and --random are exclusive");

  std::optional<exactalg::MultiPoly> f;
  if (!a.poly.empty()) {
    f = parse_polynomial(a.poly, a.spec.m, a.spec.n, a.p).poly;
  } else if (a.random) {
    f = frobenius::random_biform(a.spec.m, a.spec.n, static_cast<int>(a.spec.d), static_cast<int>(a.spec.e), a.p,
                                 a.seed);
  }
  std::vector<exactalg::MultiPoly> gb;
  if (f) {
    if (f->bidegree() != std::pair<int, int>{static_cast<int>(a.spec.d), static_cast<int>(a.spec.e)}) {
      throw PreconditionError("polynomial is not bihomogeneous of bidegree (" + std::to_string(a.spec.d) + "," +
                              std::to_string(a.spec.e) + ")");
    }
    gb = exactalg::groebner_basis(std::vector<exactalg::MultiPoly>{*f});
  }

  json rows = json::array();
  bool agree = true;
  for (std::int64_t k = 0; k <= a.k_max; ++k) {
    BigInt dim = hypersurface::dim_R_delta_piece(a.spec, a.diag, k);
    json row{{"k", k}, {"dim", big(dim)}};
    if (f) {
      const auto oracle = exactalg::standard_monomial_count(
          f->context(), gb, {}, exactalg::Bidegree{static_cast<int>(a.diag.g * k), static_cast<int>(a.diag.h * k)});
      row["oracle"] = oracle;
      if (BigInt(oracle) != dim) agree = false;
    }
    rows.push_back(std::move(row));
  }
  json doc{{"schema", schema_name("hilbert")},
           {"input", hypersurface_input(a.spec, a.diag)},
           {"polynomial", f ? json(f->to_string()) : json(nullptr)},
           {"p", f ? json(a.p) : json(nullptr)},
           {"rows", rows}};
  if (f) doc["oracle_agrees"] = agree;
  std::vector<std::string> cols{"k", "dim"};
  if (f) cols.push_back("oracle");
  em.emit(out, doc, [&] { return rows_csv(rows, cols); },
          [&] {
            std::string s;
            if (f) s += "f = " + f->to_string() + " over F_" + std::to_string(a.p) + "\n";
            for (const auto& r : rows) {
              s += "k=" + scalar_text(r["k"]) + " dim=" + scalar_text(r["dim"]);
              if (f) s += " oracle=" + scalar_text(r["oracle"]);
              s += '\n';
            }
            return s;
          });
  if (!agree) {
    err << "error: closed-form dimensions disagree with the Groebner count\n";
    return kExitInternal;
  }
  return kExitOk;
}

// ---- lcdim ----

struct LcdimArgs {
  HypersurfaceSpec spec{};
  DiagonalSpec diag{};
  std::optional<std::int64_t> top_floor;
};

int run_lcdim(const LcdimArgs& a, const Emitter& em, std::ostream& out) {
  const auto table = hypersurface::lc_dim_table(a.spec, a.diag, a.top_floor);
  const auto a_inv = hypersurface::a_invariant(a.spec, a.diag);
  json entries = json::array();
  for (const auto& e : table.entries) entries.push_back({{"q", e.q}, {"k", e.k}, {"dim", big(e.dim)}});
  json doc{{"schema", schema_name("lcdim")},
           {"input", hypersurface_input(a.spec, a.diag)},
           {"a_invariant", a_inv},
           {"top_floor", table.top_floor},
           {"entries", entries}};
  em.emit(out, doc, [&] { return rows_csv(entries, {"q", "k", "dim"}); },
          [&] {
            std::string s = "a-invariant: " + std::to_string(a_inv) + "\n";
            s += "top module listed from k = " + std::to_string(table.top_floor) + "\n";
            for (const auto& e : entries) {
              s += "H^" + scalar_text(e["q"]) + "_" + scalar_text(e["k"]) + " = " + scalar_text(e["dim"]) + "\n";
            }
            return s;
          });
  return kExitOk;
}

// ---- frobenius ----

struct FrobeniusArgs {
  int m = 3;
  int n = 0;
  int d = 2;
  int e = 0;
  std::uint32_t p = 5;
  std::string poly;
  bool random = false;
  std::uint64_t seed = 0;
  std::optional<std::uint64_t> q_max;
};

int run_frobenius(const FrobeniusArgs& a, const Emitter& em, std::ostream& out) {
  if (a.m < 1 || a.n < 0) throw PreconditionError("need m >= 1 and n >= 0");
  if (a.n == 0 && a.e != 0) throw PreconditionError("--e must be 0 without y-variables");
  if (!a.poly.empty() && a.random) throw PreconditionError("--poly and --random are exclusive");
  exactalg::PrimeField field(a.p);  // validates p

  const std::uint64_t q_max = a.q_max.value_or(static_cast<std::uint64_t>(a.p) * a.p * a.p * a.p);
  if (q_max < a.p) throw PreconditionError("--q-max must be at least p");
  int e_max = 0;
  for (std::uint64_t q = a.p; q <= q_max; q *= a.p) {
    ++e_max;
    if (q > q_max / a.p) break;
  }

  std::string source;
  exactalg::MultiPoly f = [&] {
    if (!a.poly.empty()) {
      source = "poly";
      return parse_polynomial(a.poly, a.m, a.n, a.p).poly;
    }
    if (a.random) {
      source = "random";
      return frobenius::random_biform(a.m, a.n, a.d, a.e, a.p, a.seed);
    }
    source = "witness";
    return a.n == 0 ? frobenius::witness_graded(a.d, a.m, a.p) : frobenius::witness_bigraded(a.d, a.e, a.m, a.n, a.p);
  }();

  const auto cert = a.n == 0 ? frobenius::f_regular_certificate_graded(f, a.d, a.m, a.p, e_max)
                             : frobenius::f_regular_certificate_bigraded(f, a.d, a.e, a.m, a.n, a.p, e_max);
  json doc{{"schema", schema_name("frobenius")},
           {"input",
            {{"m", a.m},
             {"n", a.n},
             {"d", a.d},
             {"e", a.e},
             {"p", a.p},
             {"q_max", q_max},
             {"seed", a.seed},
             {"source", source}}},
           {"certificate", frobenius::to_json(cert)}};
  em.emit(out, doc, [&] { return flat_csv(doc); }, [&] { return flat_text(doc); });
  return kExitOk;
}

// ---- rees ----

struct ReesArgs {
  std::optional<int> m;
  std::optional<std::int64_t> a;
  std::optional<int> dim_a;
  std::int64_t k = 1;
  int s = 2;
  std::int64_t g = 1;
  std::int64_t h = 1;
  std::int64_t i_max = 6;
  std::vector<std::int64_t> degrees;
  std::optional<std::int64_t> deg_f;
};

int run_rees(const ReesArgs& a, const Emitter& em, std::ostream& out, std::ostream& err) {
  if (a.deg_f) {
    if (!a.dim_a) throw PreconditionError("blow-up example needs --dim-a");
    const auto w = rees::blowup_example_range(*a.deg_f, a.k, *a.dim_a);
    json doc{{"schema", schema_name("rees")},
             {"mode", "blowup"},
             {"input", {{"deg_f", *a.deg_f}, {"k", a.k}, {"dim_a", *a.dim_a}}},
             {"g_range", window_json(w)}};
    em.emit(out, doc, [&] { return flat_csv(doc); }, [&] { return flat_text(doc); });
    return kExitOk;
  }

  if (!a.degrees.empty()) {
    if (!a.m) throw PreconditionError("complete-intersection criterion needs --m");
    rees::CISpec ci{*a.m, a.degrees};
    const bool cm = rees::chtv_is_cm(ci, a.g, a.h);
    json doc{{"schema", schema_name("rees")},
             {"mode", "complete_intersection"},
             {"input", {{"m", *a.m}, {"degrees", a.degrees}, {"g", a.g}, {"h", a.h}}},
             {"cohen_macaulay", cm}};
    em.emit(out, doc, [&] { return flat_csv(doc); }, [&] { return flat_text(doc); });
    return kExitOk;
  }

  rees::ReesSpec spec;
  if (a.m) {
    if (a.a || a.dim_a) throw PreconditionError("--m fixes a = -m and dim A = m; drop --a/--dim-a");
    spec = rees::ReesSpec::polynomial(*a.m, a.k, a.s);
  } else {
    if (!a.a || !a.dim_a) throw PreconditionError("give either --m or both --a and --dim-a");
    spec = {*a.a, *a.dim_a, a.s, a.k, std::nullopt};
    spec.validate();
  }
  if (a.g < 1 || a.h < 1) throw PreconditionError("g and h must be positive");

  const auto window = rees::rigidity_window(spec.a, spec.k, spec.s, a.g);
  json quotient = json::array();
  for (std::int64_t r = 1; r <= 3; ++r) {
    quotient.push_back({{"r", r}, {"a_invariant", rees::a_inv_quotient_power(spec.a, spec.k, spec.s, r)}});
  }
  json doc{{"schema", schema_name("rees")},
           {"mode", "rigidity"},
           {"input",
            {{"a", spec.a},
             {"dim_a", spec.dim_a},
             {"s", spec.s},
             {"k", spec.k},
             {"g", a.g},
             {"h", a.h},
             {"polynomial_vars", spec.polynomial_vars ? json(*spec.polynomial_vars) : json(nullptr)}}},
           {"threshold", spec.a + spec.k * spec.s - spec.k},
           {"cohen_macaulay", rees::rigidity_is_cm(spec.a, spec.k, spec.s, a.g)},
           {"nonvanishing_window", window_json(window)},
           {"possibly_nonzero_cohomology", {spec.dim_a - spec.s + 1, spec.dim_a}},
           {"quotient_power_a_invariants", quotient}};

  bool ok = true;
  if (spec.polynomial_vars) {
    if (a.i_max < 1) throw PreconditionError("--i-max must be >= 1");
    json dims = json::array();
    for (std::int64_t i = 1; i <= a.i_max; ++i) {
      BigInt dim = rees::dim_lc_rees_diag(spec, a.g, a.h, i);
      if ((dim != 0) != window.contains(i)) ok = false;
      dims.push_back({{"i", i}, {"dim", big(dim)}});
    }
    doc["cohomology_degree"] = spec.dim_a - spec.s + 1;
    doc["dimensions"] = dims;
    const bool consistent = rees::rigidity_chtv_consistency(*spec.polynomial_vars, spec.k, spec.s, a.g, a.h);
    doc["complete_intersection_consistent"] = consistent;
    ok = ok && consistent;
  }
  em.emit(out, doc,
          [&] {
            if (doc.contains("dimensions")) return rows_csv(doc["dimensions"], {"i", "dim"});
            return flat_csv(doc);
          },
          [&] { return flat_text(doc); });
  if (!ok) {
    err << "error: rigidity criterion disagrees with exact dimensions or the complete-intersection criterion\n";
    return kExitInternal;
  }
  return kExitOk;
}

// ---- figure ----

struct FigureArgs {
  int m = 3;
  int n = 3;
  int d_max = 12;
  int e_max = 12;
};

int run_figure(const FigureArgs& a, const Emitter& em, std::ostream& out) {
  const auto table = figure_table(a.m, a.n, a.d_max, a.e_max);
  json doc = figure_json(table);
  doc["schema"] = schema_name("figure");
  em.emit(out, doc, [&] { return figure_csv(table); }, [&] { return figure_ascii(table); });
  return kExitOk;
}

void add_hypersurface_options(CLI::App* cmd, HypersurfaceSpec& spec, DiagonalSpec& diag) {
  cmd->add_option("--m", spec.m, "Number of x-variables")->required();
  cmd->add_option("--n", spec.n, "Number of y-variables")->required();
  cmd->add_option("--d", spec.d, "x-degree of f")->required();
  cmd->add_option("--e", spec.e, "y-degree of f")->required();
  cmd->add_option("--g", diag.g, "Diagonal step in x")->capture_default_str();
  cmd->add_option("--h", diag.h, "Diagonal step in y")->capture_default_str();
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Ring-theoretic properties of diagonal subalgebras", "mgdiag"};
  // "-h" would clash with the diagonal option --h
  app.set_help_flag("--help", "Print this help message and exit");
  app.require_subcommand(1);
  Emitter em;

  ClassifyArgs classify_args;
  auto* classify = app.add_subcommand("classify", "Classify a hypersurface diagonal");
  add_hypersurface_options(classify, classify_args.spec, classify_args.diag);
  add_format(classify, em);

  HilbertArgs hilbert_args;
  auto* hilbert = app.add_subcommand("hilbert", "Graded piece dimensions, optionally checked by Groebner bases");
  add_hypersurface_options(hilbert, hilbert_args.spec, hilbert_args.diag);
  hilbert->add_option("--k-max", hilbert_args.k_max, "Largest piece index")->capture_default_str();
  hilbert->add_option("--p", hilbert_args.p, "Prime for the oracle")->capture_default_str();
  hilbert->add_option("--poly", hilbert_args.poly, "Explicit f for the oracle");
  hilbert->add_flag("--random", hilbert_args.random, "Use a seeded random f for the oracle");
  hilbert->add_option("--seed", hilbert_args.seed, "Random seed")->capture_default_str();
  add_format(hilbert, em);

  LcdimArgs lcdim_args;
  auto* lcdim = app.add_subcommand("lcdim", "Local cohomology dimension table");
  add_hypersurface_options(lcdim, lcdim_args.spec, lcdim_args.diag);
  lcdim->add_option("--top-floor", lcdim_args.top_floor, "Lowest index listed for the top module");
  add_format(lcdim, em);

  FrobeniusArgs frob_args;
  auto* frob = app.add_subcommand("frobenius", "F-purity and F-regularity certificates");
  frob->add_option("--m", frob_args.m, "Number of x-variables")->capture_default_str();
  frob->add_option("--n", frob_args.n, "Number of y-variables (0 for the graded test)")->capture_default_str();
  frob->add_option("--d", frob_args.d, "x-degree of f")->capture_default_str();
  frob->add_option("--e", frob_args.e, "y-degree of f")->capture_default_str();
  frob->add_option("--p", frob_args.p, "Characteristic")->capture_default_str();
  frob->add_option("--poly", frob_args.poly, "Explicit f (default: the witness polynomial)");
  frob->add_flag("--random", frob_args.random, "Use a seeded random f");
  frob->add_option("--seed", frob_args.seed, "Random seed")->capture_default_str();
  frob->add_option("--q-max", frob_args.q_max, "Largest Frobenius power tested (default p^4)");
  add_format(frob, em);

  ReesArgs rees_args;
  auto* rees_cmd = app.add_subcommand("rees", "Rees algebra diagonal criteria");
  rees_cmd->add_option("--m", rees_args.m, "Polynomial base ring K[x_1..x_m]");
  rees_cmd->add_option("--a", rees_args.a, "a-invariant of the base ring");
  rees_cmd->add_option("--dim-a", rees_args.dim_a, "Dimension of the base ring");
  rees_cmd->add_option("--k", rees_args.k, "Degree of the forms")->capture_default_str();
  rees_cmd->add_option("--s", rees_args.s, "Length of the regular sequence")->capture_default_str();
  rees_cmd->add_option("--g", rees_args.g, "Diagonal step in the base degree")->capture_default_str();
  rees_cmd->add_option("--h", rees_args.h, "Diagonal step in the Rees degree")->capture_default_str();
  rees_cmd->add_option("--i-max", rees_args.i_max, "Largest diagonal index tabulated")->capture_default_str();
  rees_cmd->add_option("--degrees", rees_args.degrees, "Complete intersection generator degrees")->delimiter(',');
  rees_cmd->add_option("--deg-f", rees_args.deg_f, "Degree of the hypersurface for the blow-up example");
  add_format(rees_cmd, em);

  FigureArgs fig_args;
  auto* fig = app.add_subcommand("figure", "Region table for Delta = (1,1)");
  fig->add_option("--m", fig_args.m, "Number of x-variables")->capture_default_str();
  fig->add_option("--n", fig_args.n, "Number of y-variables")->capture_default_str();
  fig->add_option("--d-max", fig_args.d_max, "Largest d")->capture_default_str();
  fig->add_option("--e-max", fig_args.e_max, "Largest e")->capture_default_str();
  add_format(fig, em);

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitPrecondition;
  }

  try {
    if (*classify) return run_classify(classify_args, em, out);
    if (*hilbert) return run_hilbert(hilbert_args, em, out, err);
    if (*lcdim) return run_lcdim(lcdim_args, em, out);
    if (*frob) return run_frobenius(frob_args, em, out);
    if (*rees_cmd) return run_rees(rees_args, em, out, err);
    if (*fig) return run_figure(fig_args, em, out);
  } catch (const mgdiag::ParseError& e) {
    err << "parse error: " << e.what() << '\n';
    return kExitPrecondition;
  } catch (const ResourceLimitError& e) {
    err << "error: resource cap exceeded: " << e.what() << '\n';
    return kExitInternal;
  } catch (const PreconditionError& e) {
    err << "error: " << e.what() << '\n';
    return kExitPrecondition;
  } catch (const InternalError& e) {
    err << "internal error: " << e.what() << '\n';
    return kExitInternal;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << '\n';
    return kExitInternal;
  }
  return kExitInternal;
}

}  // namespace mgdiag::cli
