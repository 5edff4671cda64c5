#include <polybern/cli.hpp>

#include <polybern/combinatorics.hpp>
#include <polybern/identities.hpp>
#include <polybern/index_vector.hpp>
#include <polybern/multi_poly.hpp>
#include <polybern/poly_bernoulli.hpp>

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

namespace polybern::cli {

namespace {

using nlohmann::ordered_json;

enum class Format { Plain, Json, Csv, Markdown };

constexpr int kExitOk = 0;
constexpr int kExitCheckFailed = 1;
constexpr int kExitUsage = 2;

std::optional<Format> parse_format(const std::string& name) {
  if (name == "plain") return Format::Plain;
  if (name == "json") return Format::Json;
  if (name == "csv") return Format::Csv;
  if (name == "markdown") return Format::Markdown;
  return std::nullopt;
}

std::string csv_escape(const std::string& field) {
  if (field.find_first_of(",\"\n") == std::string::npos) return field;
  std::string out = "\"";
  for (char c : field) {
    if (c == '"') out += '"';
    out += c;
  }
  out += '"';
  return out;
}

std::vector<long> parse_long_list(const std::string& text) {
  std::vector<long> values;
  std::string token;
  std::istringstream stream(text);
  while (std::getline(stream, token, ',')) {
    size_t used = 0;
    long v = std::stol(token, &used);
    if (used != token.size()) throw std::invalid_argument("trailing junk in '" + token + "'");
    values.push_back(v);
  }
  if (values.empty()) throw std::invalid_argument("empty list");
  return values;
}

// One markdown table row; cells right-aligned by the separator row.
void markdown_table(std::ostream& out, const std::vector<std::string>& header,
                    const std::vector<std::vector<std::string>>& rows) {
  out << "|";
  for (const auto& h : header) out << " " << h << " |";
  out << "\n|";
  for (size_t j = 0; j < header.size(); ++j) out << " ---: |";
  out << "\n";
  for (const auto& row : rows) {
    out << "|";
    for (const auto& cell : row) out << " " << cell << " |";
    out << "\n";
  }
}

void aligned_table(std::ostream& out, const std::vector<std::string>& header,
                   const std::vector<std::vector<std::string>>& rows) {
  std::vector<size_t> width(header.size());
  for (size_t j = 0; j < header.size(); ++j) width[j] = header[j].size();
  for (const auto& row : rows)
    for (size_t j = 0; j < row.size(); ++j) width[j] = std::max(width[j], row[j].size());
  auto emit = [&](const std::vector<std::string>& row) {
    for (size_t j = 0; j < row.size(); ++j) {
      if (j) out << "  ";
      out << std::string(width[j] - row[j].size(), ' ') << row[j];
    }
    out << "\n";
  };
  emit(header);
  for (const auto& row : rows) emit(row);
}

void csv_table(std::ostream& out, const std::vector<std::string>& header,
               const std::vector<std::vector<std::string>>& rows) {
  auto emit = [&](const std::vector<std::string>& row) {
    for (size_t j = 0; j < row.size(); ++j) {
      if (j) out << ",";
      out << csv_escape(row[j]);
    }
    out << "\n";
  };
  emit(header);
  for (const auto& row : rows) emit(row);
}

void render_table(std::ostream& out, Format format,
                  const std::vector<std::string>& header,
                  const std::vector<std::vector<std::string>>& rows) {
  switch (format) {
    case Format::Plain: aligned_table(out, header, rows); break;
    case Format::Csv: csv_table(out, header, rows); break;
    case Format::Markdown: markdown_table(out, header, rows); break;
    case Format::Json: break;  // callers emit structured json themselves
  }
}

// --- value ----------------------------------------------------------------

int cmd_value(long n, long k, Format format, std::ostream& out) {
  Rational value = pb(n, k);
  switch (format) {
    case Format::Plain:
      out << value.str() << "\n";
      break;
    case Format::Json: {
      ordered_json doc{{"n", n}, {"k", k}, {"value", value.str()}};
      out << doc.dump() << "\n";
      break;
    }
    case Format::Csv:
    case Format::Markdown:
      render_table(out, format, {"n", "k", "value"},
                   {{std::to_string(n), std::to_string(k), value.str()}});
      break;
  }
  return kExitOk;
}

// --- multi ----------------------------------------------------------------

int cmd_multi(const IndexVector& indices, long n, Format format, std::ostream& out) {
  MpbValue result = mpb_with_route(n, indices);
  switch (format) {
    case Format::Plain:
      out << result.value.str() << "\n";
      break;
    case Format::Json: {
      ordered_json doc{{"indices", indices.entries()},
                       {"n", n},
                       {"value", result.value.str()},
                       {"route", mpb_route_name(result.route)}};
      out << doc.dump() << "\n";
      break;
    }
    case Format::Csv:
    case Format::Markdown:
      render_table(out, format, {"indices", "n", "value", "route"},
                   {{indices.str(), std::to_string(n), result.value.str(),
                     mpb_route_name(result.route)}});
      break;
  }
  return kExitOk;
}

// --- alpha ----------------------------------------------------------------

int cmd_alpha(const IndexVector& magnitudes, Format format, std::ostream& out) {
  AlphaVector av = alpha_coefficients(magnitudes);
  PowerExpansion pe = to_power_expansion(av);
  switch (format) {
    case Format::Plain:
      out << pe.str() << "\n";
      break;
    case Format::Json: {
      std::vector<std::string> coeffs;
      for (const auto& c : av.coefficients) coeffs.push_back(c.get_str());
      ordered_json doc{{"magnitudes", av.magnitudes},
                       {"r", magnitudes.length()},
                       {"weight", av.weight},
                       {"coefficients", coeffs},
                       {"expansion", pe.str()}};
      out << doc.dump() << "\n";
      break;
    }
    case Format::Csv:
    case Format::Markdown: {
      std::vector<std::vector<std::string>> rows;
      for (const auto& [l, c] : pe.terms)
        rows.push_back({std::to_string(l), c.get_str(),
                        std::to_string(pe.base_offset + l)});
      render_table(out, format, {"l", "coefficient", "base"}, rows);
      break;
    }
  }
  return kExitOk;
}

// --- table ----------------------------------------------------------------

// Upper-index magnitude vectors of the expansion table, grouped by r in the
// published row order (with the weight-2 pair (1,1) in its lexicographic slot).
const std::vector<std::vector<long>>& expansion_table_rows() {
  static const std::vector<std::vector<long>> rows = {
      {1}, {2}, {3},
      {0, 1}, {1, 0}, {0, 2}, {1, 1}, {2, 0}, {0, 3}, {1, 2}, {2, 1}, {3, 0},
      {0, 0, 1}, {0, 1, 0}, {1, 0, 0},
      {0, 0, 2}, {0, 2, 0}, {2, 0, 0}, {0, 1, 1}, {1, 0, 1}, {1, 1, 0},
      {0, 0, 3}, {0, 3, 0}, {3, 0, 0},
      {0, 1, 2}, {0, 2, 1}, {1, 0, 2}, {1, 2, 0}, {2, 0, 1}, {2, 1, 0},
      {1, 1, 1},
  };
  return rows;
}

const std::vector<std::vector<long>>& pair_table_rows() {
  static const std::vector<std::vector<long>> rows = {
      {1, 1}, {1, 0}, {0, 1}, {0, 0}, {0, -1}, {-1, 0}, {-1, -1},
  };
  return rows;
}

int cmd_table_1(Format format, std::ostream& out) {
  struct Row {
    long r;
    std::string label;
    std::string expansion;
    std::vector<long> indices;
  };
  std::vector<Row> rows;
  for (const auto& mags : expansion_table_rows()) {
    IndexVector mv{std::vector<long>(mags)};
    PowerExpansion pe = to_power_expansion(alpha_coefficients(mv));
    rows.push_back({mv.length(), "B_n^" + mv.negated().str(), pe.str(),
                    mv.negated().entries()});
  }
  switch (format) {
    case Format::Plain: {
      long current_r = 0;
      for (const auto& row : rows) {
        if (row.r != current_r) {
          if (current_r != 0) out << "\n";
          out << "r=" << row.r << "\n";
          current_r = row.r;
        }
        out << row.label << " = " << row.expansion << "\n";
      }
      break;
    }
    case Format::Json: {
      ordered_json groups = ordered_json::array();
      long current_r = 0;
      for (const auto& row : rows) {
        if (row.r != current_r) {
          groups.push_back({{"r", row.r}, {"rows", ordered_json::array()}});
          current_r = row.r;
        }
        groups.back()["rows"].push_back(
            {{"indices", row.indices}, {"expansion", row.expansion}});
      }
      ordered_json doc{{"table", 1}, {"groups", groups}};
      out << doc.dump() << "\n";
      break;
    }
    case Format::Csv:
    case Format::Markdown: {
      std::vector<std::vector<std::string>> cells;
      for (const auto& row : rows) {
        IndexVector mv{std::vector<long>(row.indices)};
        cells.push_back({std::to_string(row.r), mv.str(), row.expansion});
      }
      render_table(out, format, {"r", "indices", "expansion"}, cells);
      break;
    }
  }
  return kExitOk;
}

int cmd_table_2(Format format, std::ostream& out) {
  const long max_n = 7;
  std::vector<std::vector<std::string>> cells;
  for (long k = -5; k <= 5; ++k) {
    std::vector<std::string> row{std::to_string(k)};
    for (long n = 0; n <= max_n; ++n) row.push_back(pb(n, k).str());
    cells.push_back(std::move(row));
  }
  if (format == Format::Json) {
    ordered_json rows = ordered_json::array();
    for (long k = -5; k <= 5; ++k) {
      std::vector<std::string> values;
      for (long n = 0; n <= max_n; ++n) values.push_back(pb(n, k).str());
      rows.push_back({{"k", k}, {"values", values}});
    }
    std::vector<long> columns(max_n + 1);
    for (long n = 0; n <= max_n; ++n) columns[n] = n;
    ordered_json doc{{"table", 2}, {"columns", columns}, {"rows", rows}};
    out << doc.dump() << "\n";
    return kExitOk;
  }
  std::vector<std::string> header{"k/n"};
  for (long n = 0; n <= max_n; ++n) header.push_back(std::to_string(n));
  render_table(out, format, header, cells);
  return kExitOk;
}

int cmd_table_3(Format format, std::ostream& out) {
  const long max_n = 7;
  auto label = [](const std::vector<long>& indices) {
    return "B^" + IndexVector{std::vector<long>(indices)}.str();
  };
  if (format == Format::Json) {
    ordered_json rows = ordered_json::array();
    for (const auto& indices : pair_table_rows()) {
      std::vector<std::string> values;
      for (long n = 0; n <= max_n; ++n)
        values.push_back(mpb(n, IndexVector{std::vector<long>(indices)}).str());
      rows.push_back({{"indices", indices}, {"values", values}});
    }
    std::vector<long> columns(max_n + 1);
    for (long n = 0; n <= max_n; ++n) columns[n] = n;
    ordered_json doc{{"table", 3}, {"columns", columns}, {"rows", rows}};
    out << doc.dump() << "\n";
    return kExitOk;
  }
  std::vector<std::vector<std::string>> cells;
  for (const auto& indices : pair_table_rows()) {
    std::vector<std::string> row{label(indices)};
    for (long n = 0; n <= max_n; ++n)
      row.push_back(mpb(n, IndexVector{std::vector<long>(indices)}).str());
    cells.push_back(std::move(row));
  }
  std::vector<std::string> header{"indices/n"};
  for (long n = 0; n <= max_n; ++n) header.push_back(std::to_string(n));
  render_table(out, format, header, cells);
  return kExitOk;
}

// --- verify ---------------------------------------------------------------

ordered_json range_to_json(const RangeSpec& range) {
  ordered_json samples = ordered_json::array();
  for (const auto& [p, q] : range.sample_points)
    samples.push_back({p.str(), q.str()});
  return ordered_json{{"max_n", range.max_n}, {"max_k", range.max_k},
                      {"max_r", range.max_r}, {"max_m", range.max_m},
                      {"max_i", range.max_i}, {"cap", range.cap},
                      {"sample_points", samples}};
}

ordered_json report_to_json(const VerificationReport& report) {
  ordered_json counterexamples = ordered_json::array();
  for (const auto& ce : report.counterexamples) {
    ordered_json params;
    for (const auto& [key, value] : ce.params) params[key] = value;
    counterexamples.push_back(
        {{"params", params}, {"lhs", ce.lhs}, {"rhs", ce.rhs}});
  }
  return ordered_json{{"identity", identity_name(report.identity)},
                      {"range", range_to_json(report.range)},
                      {"cases", report.cases_checked},
                      {"passed", report.passed},
                      {"counterexamples", counterexamples}};
}

std::string params_str(const Counterexample& ce) {
  std::string s;
  for (const auto& [key, value] : ce.params) {
    if (!s.empty()) s += ' ';
    s += key + "=" + value;
  }
  return s;
}

void render_reports(const std::vector<VerificationReport>& reports, Format format,
                    std::ostream& out) {
  switch (format) {
    case Format::Plain:
      for (const auto& report : reports) {
        out << identity_name(report.identity) << ": "
            << (report.passed ? "PASS" : "FAIL")
            << " (cases=" << report.cases_checked;
        if (!report.passed)
          out << ", counterexamples=" << report.counterexamples.size();
        out << ")";
        if (is_conjecture(report.identity)) out << " [conjecture]";
        out << "\n";
        for (const auto& ce : report.counterexamples)
          out << "  " << params_str(ce) << ": lhs=" << ce.lhs << " rhs=" << ce.rhs
              << "\n";
      }
      break;
    case Format::Json: {
      ordered_json doc = ordered_json::array();
      for (const auto& report : reports) doc.push_back(report_to_json(report));
      out << doc.dump() << "\n";
      break;
    }
    case Format::Csv:
    case Format::Markdown: {
      std::vector<std::vector<std::string>> rows;
      for (const auto& report : reports)
        rows.push_back({std::string(identity_name(report.identity)),
                        std::to_string(report.cases_checked),
                        report.passed ? "true" : "false",
                        std::to_string(report.counterexamples.size())});
      render_table(out, format, {"identity", "cases", "passed", "counterexamples"},
                   rows);
      break;
    }
  }
}

int verify_exit_code(const std::vector<VerificationReport>& reports,
                     bool strict_conjecture) {
  for (const auto& report : reports) {
    if (report.passed) continue;
    if (!is_conjecture(report.identity) || strict_conjecture) return kExitCheckFailed;
  }
  return kExitOk;
}

// --- conjecture -----------------------------------------------------------

int cmd_conjecture(long max_k, long max_r, long max_n, bool strict, Format format,
                   std::ostream& out) {
  VerificationReport report = check_conjecture(max_k, max_r, max_n);
  long effective_r = std::min(max_r, max_k - 1);

  switch (format) {
    case Format::Plain: {
      for (long r = 1; r <= effective_r; ++r) {
        ConjectureTriangle tri = conjecture_triangle(r, max_k - r - 1);
        out << "triangle r=" << r << ":\n";
        for (size_t j = 0; j < tri.rows.size(); ++j) {
          out << "  row " << j << ":";
          for (const auto& a : tri.rows[j]) out << " " << a.get_str();
          out << "\n";
        }
      }
      for (long r = 1; r <= effective_r; ++r)
        for (long k = r + 1; k <= max_k; ++k) {
          out << "k=" << k << " r=" << r << ": coefficients";
          for (const auto& c : conjecture_coefficients(k, r)) out << " " << c.get_str();
          out << "\n";
        }
      out << "conjecture " << identity_name(report.identity) << ": "
          << (report.passed ? "PASS" : "FAIL") << " (cases=" << report.cases_checked
          << ")\n";
      for (const auto& ce : report.counterexamples)
        out << "  " << params_str(ce) << ": lhs=" << ce.lhs << " rhs=" << ce.rhs
            << "\n";
      break;
    }
    case Format::Json: {
      ordered_json doc = report_to_json(report);
      ordered_json triangles = ordered_json::array();
      for (long r = 1; r <= effective_r; ++r) {
        ConjectureTriangle tri = conjecture_triangle(r, max_k - r - 1);
        ordered_json rows = ordered_json::array();
        for (const auto& row : tri.rows) {
          std::vector<std::string> values;
          for (const auto& a : row) values.push_back(a.get_str());
          rows.push_back(values);
        }
        triangles.push_back({{"r", r}, {"rows", rows}});
      }
      ordered_json expansions = ordered_json::array();
      for (long r = 1; r <= effective_r; ++r)
        for (long k = r + 1; k <= max_k; ++k) {
          std::vector<std::string> coeffs;
          for (const auto& c : conjecture_coefficients(k, r))
            coeffs.push_back(c.get_str());
          expansions.push_back({{"k", k}, {"r", r}, {"coefficients", coeffs}});
        }
      doc["triangles"] = triangles;
      doc["expansions"] = expansions;
      out << doc.dump() << "\n";
      break;
    }
    case Format::Csv:
    case Format::Markdown: {
      std::vector<std::vector<std::string>> rows;
      for (long r = 1; r <= effective_r; ++r) {
        ConjectureTriangle tri = conjecture_triangle(r, max_k - r - 1);
        for (size_t j = 0; j < tri.rows.size(); ++j) {
          std::string values;
          for (const auto& a : tri.rows[j]) {
            if (!values.empty()) values += ' ';
            values += a.get_str();
          }
          rows.push_back({"triangle-row", std::to_string(r), std::to_string(j),
                          values, ""});
        }
      }
      for (long r = 1; r <= effective_r; ++r)
        for (long k = r + 1; k <= max_k; ++k) {
          std::string values;
          for (const auto& c : conjecture_coefficients(k, r)) {
            if (!values.empty()) values += ' ';
            values += c.get_str();
          }
          rows.push_back({"expansion", std::to_string(r), std::to_string(k), values,
                          report.passed ? "true" : "false"});
        }
      render_table(out, format, {"kind", "r", "index", "values", "passed"}, rows);
      break;
    }
  }
  return (strict && !report.passed) ? kExitCheckFailed : kExitOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact poly-Bernoulli and multi-poly-Bernoulli number calculator"};
  app.name("polybern");
  app.require_subcommand(1);

  std::string format_name = "plain";

  auto add_format = [&](CLI::App* sub) {
    sub->add_option("--format", format_name,
                    "Output format: plain|json|csv|markdown");
  };

  long value_n = 0, value_k = 0;
  auto* value_cmd = app.add_subcommand("value", "Print B_n^(k)");
  value_cmd->add_option("n", value_n, "Subscript n (>= 0)")->required();
  value_cmd->add_option("k", value_k, "Upper index k (any integer)")->required();
  add_format(value_cmd);

  std::string multi_indices;
  long multi_n = 0;
  auto* multi_cmd = app.add_subcommand("multi", "Print B_n^(k1,...,kr)");
  multi_cmd->add_option("indices", multi_indices, "Comma-separated upper indices")
      ->required();
  multi_cmd->add_option("n", multi_n, "Subscript n (>= 0)")->required();
  add_format(multi_cmd);

  std::string alpha_magnitudes;
  auto* alpha_cmd =
      app.add_subcommand("alpha", "Print the power expansion of B_n^(-k1,...,-kr)");
  alpha_cmd
      ->add_option("magnitudes", alpha_magnitudes,
                   "Comma-separated nonnegative magnitudes (not all zero)")
      ->required();
  add_format(alpha_cmd);

  long table_id = 0;
  auto* table_cmd = app.add_subcommand("table", "Print a reference table (1, 2 or 3)");
  table_cmd->add_option("which", table_id, "Table number")->required();
  add_format(table_cmd);

  std::vector<std::string> verify_ids;
  RangeSpec range;
  bool strict_conjecture = false;
  auto* verify_cmd = app.add_subcommand("verify", "Check named identities over a range");
  verify_cmd->add_option("ids", verify_ids, "Identity ids, or 'all'")->required();
  verify_cmd->add_option("--max-n", range.max_n, "Largest subscript n");
  verify_cmd->add_option("--max-k", range.max_k, "Largest index magnitude k");
  verify_cmd->add_option("--max-r", range.max_r, "Largest vector length r");
  verify_cmd->add_option("--max-m", range.max_m, "Largest entry magnitude m");
  verify_cmd->add_option("--max-i", range.max_i, "Largest position i");
  verify_cmd->add_option("--cap", range.cap, "Total-degree cap for thm-2.5");
  verify_cmd->add_flag("--strict-conjecture", strict_conjecture,
                       "Conjecture failures also set exit code 1");
  add_format(verify_cmd);

  long conj_max_k = 6, conj_max_r = 4, conj_max_n = 8;
  bool conj_strict = false;
  auto* conj_cmd =
      app.add_subcommand("conjecture", "Sweep the conjectured triangle expansion");
  conj_cmd->add_option("--max-k", conj_max_k, "Largest k (must exceed --max-r)");
  conj_cmd->add_option("--max-r", conj_max_r, "Largest r");
  conj_cmd->add_option("--max-n", conj_max_n, "Largest n");
  conj_cmd->add_flag("--strict-conjecture", conj_strict,
                     "A failed sweep sets exit code 1");
  add_format(conj_cmd);

  // CLI11's vector overload consumes from the back.
  std::vector<std::string> argv(args.rbegin(), args.rend());
  try {
    app.parse(argv);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    err << "usage: polybern {value|multi|alpha|table|verify|conjecture} ... "
           "[--format plain|json|csv|markdown]\n";
    return kExitUsage;
  }

  auto format = parse_format(format_name);
  if (!format) {
    err << "error: unknown format '" << format_name << "'\n";
    return kExitUsage;
  }

  try {
    if (value_cmd->parsed()) {
      if (value_n < 0) {
        err << "error: value: n must be >= 0\n";
        return kExitUsage;
      }
      return cmd_value(value_n, value_k, *format, out);
    }

    if (multi_cmd->parsed()) {
      if (multi_n < 0) {
        err << "error: multi: n must be >= 0\n";
        return kExitUsage;
      }
      std::vector<long> indices;
      try {
        indices = parse_long_list(multi_indices);
      } catch (const std::exception& e) {
        err << "error: multi: bad index list: " << e.what() << "\n";
        return kExitUsage;
      }
      return cmd_multi(IndexVector(std::move(indices)), multi_n, *format, out);
    }

    if (alpha_cmd->parsed()) {
      std::vector<long> magnitudes;
      try {
        magnitudes = parse_long_list(alpha_magnitudes);
      } catch (const std::exception& e) {
        err << "error: alpha: bad magnitude list: " << e.what() << "\n";
        return kExitUsage;
      }
      IndexVector mv(std::move(magnitudes));
      if (!mv.all_nonnegative()) {
        err << "error: alpha: magnitudes must be nonnegative\n";
        return kExitUsage;
      }
      if (mv.all_zero()) {
        err << "error: alpha: the all-zero index vector has no power expansion; "
               "its value is the constant r^n = " << mv.length()
            << "^n (use the 'multi' subcommand)\n";
        return kExitUsage;
      }
      return cmd_alpha(mv, *format, out);
    }

    if (table_cmd->parsed()) {
      switch (table_id) {
        case 1: return cmd_table_1(*format, out);
        case 2: return cmd_table_2(*format, out);
        case 3: return cmd_table_3(*format, out);
        default:
          err << "error: table: unknown table id " << table_id << " (use 1, 2 or 3)\n";
          return kExitUsage;
      }
    }

    if (verify_cmd->parsed()) {
      bool run_all = false;
      std::vector<IdentityId> ids;
      for (const auto& name : verify_ids) {
        if (name == "all") {
          run_all = true;
          continue;
        }
        auto id = identity_from_name(name);
        if (!id) {
          err << "error: verify: unknown identity id '" << name << "'\n";
          return kExitUsage;
        }
        ids.push_back(*id);
      }
      if (run_all && !ids.empty()) {
        err << "error: verify: 'all' cannot be combined with explicit ids\n";
        return kExitUsage;
      }
      std::vector<VerificationReport> reports;
      try {
        if (run_all) {
          reports = verify_all(range);
        } else {
          for (IdentityId id : ids) reports.push_back(verify(id, range));
        }
      } catch (const std::invalid_argument& e) {
        err << "error: verify: " << e.what() << "\n";
        return kExitUsage;
      }
      render_reports(reports, *format, out);
      return verify_exit_code(reports, strict_conjecture);
    }

    if (conj_cmd->parsed()) {
      if (conj_max_r < 1 || conj_max_k <= conj_max_r || conj_max_n < 0) {
        err << "error: conjecture: need max-r >= 1, max-k > max-r, max-n >= 0\n";
        return kExitUsage;
      }
      return cmd_conjecture(conj_max_k, conj_max_r, conj_max_n, conj_strict, *format,
                            out);
    }
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  }

  err << "error: no subcommand\n";
  return kExitUsage;
}

}  // namespace polybern::cli
