#include "kzw/cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <charconv>
#include <chrono>
#include <cmath>
#include <functional>
#include <limits>
#include <map>
#include <optional>
#include <ostream>
#include <regex>
#include <sstream>

#include "kzw/identities.hpp"
#include "kzw/kzw.hpp"
#include "kzw/xi.hpp"

namespace kzw::cli {

namespace {

using Json = nlohmann::ordered_json;

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

double parse_decimal(const std::string& s) {
  const char* first = s.data();
  if (*first == '+') ++first;
  double v = 0.0;
  const auto [ptr, ec] = std::from_chars(first, s.data() + s.size(), v);
  if (ec != std::errc() || ptr != s.data() + s.size() || !std::isfinite(v)) {
    throw std::invalid_argument("bad number '" + s + "'");
  }
  return v;
}

std::string fmt(double v) {
  if (std::isnan(v)) return "nan";
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof buf, v);
  return std::string(buf, res.ptr);
}

Json json_number(double v) { return std::isfinite(v) ? Json(v) : Json(nullptr); }

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\r\n") == std::string::npos) return s;
  std::string q = "\"";
  for (char c : s) {
    if (c == '"') q += '"';
    q += c;
  }
  return q + "\"";
}

void csv_row(std::ostream& out, const std::vector<std::string>& fields) {
  for (std::size_t i = 0; i < fields.size(); ++i) {
    if (i > 0) out << ',';
    out << csv_field(fields[i]);
  }
  out << "\r\n";
}

enum class Format { text, json, csv };

struct Options {
  std::string z, w, x, alpha, a;
  std::optional<double> rel_tol, abs_tol;
  std::optional<int> max_terms;
  bool json = false, csv = false, verbose = false;
  std::string identity;

  Format format() const { return json ? Format::json : csv ? Format::csv : Format::text; }

  const std::string& value_of(const std::string& name) const {
    if (name == "z") return z;
    if (name == "w") return w;
    if (name == "x") return x;
    if (name == "alpha") return alpha;
    return a;
  }
};

EvalConfig make_config(const Options& o) {
  EvalConfig cfg;
  if (o.rel_tol) cfg.rel_tol = *o.rel_tol;
  if (o.abs_tol) cfg.abs_tol = *o.abs_tol;
  if (o.max_terms) cfg.max_series_terms = *o.max_terms;
  try {
    cfg.validate();
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
  return cfg;
}

Complex single_value(const Options& o, const std::string& name) {
  const std::string& text = o.value_of(name);
  if (text.empty()) throw UsageError("missing --" + name);
  if (is_sweep(text)) throw UsageError("--" + name + " takes a single value here");
  try {
    return parse_complex(text);
  } catch (const std::invalid_argument& e) {
    throw UsageError("--" + name + ": " + e.what());
  }
}

std::vector<Complex> value_list(const Options& o, const std::string& name) {
  const std::string& text = o.value_of(name);
  if (text.empty()) throw UsageError("missing --" + name);
  try {
    return parse_list(text);
  } catch (const std::invalid_argument& e) {
    throw UsageError("--" + name + ": " + e.what());
  }
}

void write_json(std::ostream& out, const Json& j) { out << j.dump(2) << '\n'; }

Json complex_json(Complex c) { return Json{{"re", json_number(c.real())}, {"im", json_number(c.imag())}}; }

// ---------------------------------------------------------------------------
// eval / compare
// ---------------------------------------------------------------------------

KzwPoint point_from(const Options& o) {
  const Complex z = single_value(o, "z"), w = single_value(o, "w"), x = single_value(o, "x");
  try {
    return KzwPoint(z, w, x);
  } catch (const DomainError& e) {
    throw UsageError(e.what());
  }
}

int cmd_eval(const Options& o, std::ostream& out) {
  const EvalConfig cfg = make_config(o);
  const KzwPoint p = point_from(o);
  const Evaluation e = eval_auto(p, cfg);
  switch (o.format()) {
    case Format::json:
      write_json(out, Json{{"z", format_complex(p.z)},
                           {"w", format_complex(p.w)},
                           {"x", format_complex(p.x)},
                           {"value_re", json_number(e.value.real())},
                           {"value_im", json_number(e.value.imag())},
                           {"err_est", json_number(e.err_est)},
                           {"method", std::string(to_string(e.method))},
                           {"work", e.work},
                           {"converged", e.converged}});
      break;
    case Format::csv:
      csv_row(out, {"z", "w", "x", "value_re", "value_im", "err_est", "method", "work", "converged"});
      csv_row(out, {format_complex(p.z), format_complex(p.w), format_complex(p.x), fmt(e.value.real()),
                    fmt(e.value.imag()), fmt(e.err_est), std::string(to_string(e.method)),
                    std::to_string(e.work), e.converged ? "true" : "false"});
      break;
    case Format::text:
      out << "value      " << format_complex(e.value) << '\n'
          << "err_est    " << fmt(e.err_est) << '\n'
          << "method     " << to_string(e.method) << '\n'
          << "work       " << e.work << '\n'
          << "converged  " << (e.converged ? "true" : "false") << '\n';
      break;
  }
  return e.converged ? kExitOk : kExitNumeric;
}

int cmd_compare(const Options& o, std::ostream& out) {
  const EvalConfig cfg = make_config(o);
  const KzwPoint p = point_from(o);
  const Comparison c = compare_methods(p, cfg);
  bool all_converged = !c.outcomes.empty();
  for (const MethodOutcome& m : c.outcomes) all_converged = all_converged && m.eval && m.eval->converged;
  switch (o.format()) {
    case Format::json: {
      Json methods = Json::array();
      for (const MethodOutcome& m : c.outcomes) {
        Json row{{"method", std::string(to_string(m.method))}};
        if (m.eval) {
          row["value_re"] = json_number(m.eval->value.real());
          row["value_im"] = json_number(m.eval->value.imag());
          row["err_est"] = json_number(m.eval->err_est);
          row["work"] = m.eval->work;
          row["converged"] = m.eval->converged;
        } else {
          row["error"] = m.error;
        }
        methods.push_back(row);
      }
      write_json(out, Json{{"z", format_complex(p.z)},
                           {"w", format_complex(p.w)},
                           {"x", format_complex(p.x)},
                           {"max_pairwise_rel", json_number(c.max_pairwise_rel)},
                           {"methods", methods}});
      break;
    }
    case Format::csv:
      csv_row(out, {"method", "value_re", "value_im", "err_est", "work", "converged", "error"});
      for (const MethodOutcome& m : c.outcomes) {
        if (m.eval) {
          csv_row(out, {std::string(to_string(m.method)), fmt(m.eval->value.real()), fmt(m.eval->value.imag()),
                        fmt(m.eval->err_est), std::to_string(m.eval->work),
                        m.eval->converged ? "true" : "false", ""});
        } else {
          csv_row(out, {std::string(to_string(m.method)), "", "", "", "", "false", m.error});
        }
      }
      break;
    case Format::text:
      for (const MethodOutcome& m : c.outcomes) {
        out << to_string(m.method) << "  ";
        if (m.eval) {
          out << format_complex(m.eval->value) << "  err_est " << fmt(m.eval->err_est)
              << (m.eval->converged ? "" : "  (not converged)") << '\n';
        } else {
          out << "error: " << m.error << '\n';
        }
      }
      out << "max_pairwise_rel  " << fmt(c.max_pairwise_rel) << '\n';
      break;
  }
  return all_converged ? kExitOk : kExitNumeric;
}

// ---------------------------------------------------------------------------
// verify
// ---------------------------------------------------------------------------

struct IdentityInfo {
  std::vector<std::string> params;
  std::vector<std::string> real_params;
  std::function<IdentityReport(const std::map<std::string, Complex>&, const EvalConfig&)> run;
};

double real_of(const std::map<std::string, Complex>& v, const std::string& name) { return v.at(name).real(); }

const std::map<std::string, IdentityInfo>& identities() {
  using V = std::map<std::string, Complex>;
  static const std::map<std::string, IdentityInfo> table{
      {"reciprocity",
       {{"z", "w", "alpha", "x"},
        {"alpha", "x"},
        [](const V& v, const EvalConfig& c) {
          return check_reciprocity(v.at("z"), v.at("w"), real_of(v, "alpha"), real_of(v, "x"), c);
        }}},
      {"rg-general",
       {{"z", "w", "a"},
        {"a"},
        [](const V& v, const EvalConfig& c) { return check_rg_general(v.at("z"), v.at("w"), real_of(v, "a"), c); }}},
      {"rg-modular",
       {{"z", "w", "alpha"},
        {"alpha"},
        [](const V& v, const EvalConfig& c) {
          return check_rg_modular(v.at("z"), v.at("w"), real_of(v, "alpha"), c);
        }}},
      {"koshliakov-w",
       {{"w", "alpha"},
        {"alpha"},
        [](const V& v, const EvalConfig& c) { return check_koshliakov_w(v.at("w"), real_of(v, "alpha"), c); }}},
      {"dde",
       {{"z", "w", "x"},
        {},
        [](const V& v, const EvalConfig& c) { return check_dde(v.at("z"), v.at("w"), v.at("x"), c); }}},
      {"lemma-inteq",
       {{"w", "x"},
        {},
        [](const V& v, const EvalConfig& c) { return check_lemma_inteq(v.at("w"), v.at("x"), c); }}},
      {"xi-thm",
       {{"z", "w", "alpha"},
        {"alpha"},
        [](const V& v, const EvalConfig& c) {
          return check_xi_theorem(v.at("z"), v.at("w"), real_of(v, "alpha"), c);
        }}},
      {"xi-corollary",
       {{"w", "alpha"},
        {"alpha"},
        [](const V& v, const EvalConfig& c) { return check_xi_corollary_z0(v.at("w"), real_of(v, "alpha"), c); }}},
  };
  return table;
}

struct VerifyRow {
  std::map<std::string, Complex> inputs;
  std::optional<IdentityReport> report;
  std::string error;
};

Json report_json(const IdentityReport& r) {
  Json params = Json::object();
  for (const auto& [name, value] : r.params) params[name] = complex_json(value);
  Json j{{"identity", r.name},
         {"params", params},
         {"lhs", complex_json(r.lhs)},
         {"rhs", complex_json(r.rhs)},
         {"abs_residual", json_number(r.abs_residual)},
         {"rel_residual", json_number(r.rel_residual)},
         {"tolerance", json_number(r.tolerance)},
         {"pass", r.pass},
         {"work", r.work}};
  if (!r.diagnostics.empty()) {
    Json d = Json::object();
    for (const auto& [name, value] : r.diagnostics) d[name] = json_number(value);
    j["diagnostics"] = d;
  }
  if (!r.parts.empty()) {
    Json parts = Json::array();
    for (const IdentityReport& p : r.parts) parts.push_back(report_json(p));
    j["parts"] = parts;
  }
  return j;
}

int cmd_verify(const Options& o, std::ostream& out) {
  const auto& table = identities();
  const auto found = table.find(o.identity);
  if (found == table.end()) throw UsageError("unknown identity '" + o.identity + "'");
  const IdentityInfo& info = found->second;
  const EvalConfig cfg = make_config(o);

  // Parse everything before computing anything.
  std::vector<std::vector<Complex>> lists;
  for (const std::string& name : info.params) {
    lists.push_back(value_list(o, name));
    if (lists.back().empty()) throw UsageError("empty grid for --" + name);
    const bool must_be_real =
        std::find(info.real_params.begin(), info.real_params.end(), name) != info.real_params.end();
    for (Complex v : lists.back()) {
      if (must_be_real && v.imag() != 0.0) throw UsageError("--" + name + " must be real");
    }
  }

  // Cartesian product, last parameter varying fastest.
  std::vector<VerifyRow> rows;
  std::vector<std::size_t> index(lists.size(), 0);
  for (bool more = true; more;) {
    VerifyRow row;
    for (std::size_t i = 0; i < lists.size(); ++i) row.inputs[info.params[i]] = lists[i][index[i]];
    rows.push_back(std::move(row));
    more = false;
    for (std::size_t k = lists.size(); k-- > 0;) {
      if (++index[k] < lists[k].size()) {
        more = true;
        break;
      }
      index[k] = 0;
    }
  }

  bool all_pass = true;
  for (VerifyRow& row : rows) {
    try {
      row.report = info.run(row.inputs, cfg);
      all_pass = all_pass && row.report->pass;
    } catch (const DomainError& e) {
      throw UsageError(e.what());
    } catch (const PoleError& e) {
      throw UsageError(e.what());
    } catch (const NumericError& e) {
      row.error = e.what();
      all_pass = false;
    }
  }

  switch (o.format()) {
    case Format::json: {
      Json arr = Json::array();
      for (const VerifyRow& row : rows) {
        if (row.report) {
          arr.push_back(report_json(*row.report));
        } else {
          Json params = Json::object();
          for (const std::string& name : info.params) params[name] = complex_json(row.inputs.at(name));
          arr.push_back(Json{{"identity", o.identity}, {"params", params}, {"pass", false}, {"error", row.error}});
        }
      }
      write_json(out, arr);
      break;
    }
    case Format::csv: {
      std::vector<std::string> header{"identity"};
      header.insert(header.end(), info.params.begin(), info.params.end());
      for (const char* col : {"lhs_re", "lhs_im", "rhs_re", "rhs_im", "abs_residual", "rel_residual",
                              "tolerance", "pass", "error"}) {
        header.emplace_back(col);
      }
      csv_row(out, header);
      for (const VerifyRow& row : rows) {
        std::vector<std::string> f{o.identity};
        for (const std::string& name : info.params) f.push_back(format_complex(row.inputs.at(name)));
        if (row.report) {
          const IdentityReport& r = *row.report;
          for (double v : {r.lhs.real(), r.lhs.imag(), r.rhs.real(), r.rhs.imag(), r.abs_residual,
                           r.rel_residual, r.tolerance}) {
            f.push_back(fmt(v));
          }
          f.emplace_back(r.pass ? "true" : "false");
          f.emplace_back("");
        } else {
          f.insert(f.end(), 7, "");
          f.emplace_back("false");
          f.push_back(row.error);
        }
        csv_row(out, f);
      }
      break;
    }
    case Format::text:
      for (const VerifyRow& row : rows) {
        out << o.identity;
        for (const std::string& name : info.params) out << "  " << name << '=' << format_complex(row.inputs.at(name));
        if (!row.report) {
          out << "  ERROR " << row.error << '\n';
          continue;
        }
        const IdentityReport& r = *row.report;
        out << "  lhs=" << format_complex(r.lhs) << "  rhs=" << format_complex(r.rhs)
            << "  rel_residual=" << fmt(r.rel_residual) << "  tolerance=" << fmt(r.tolerance) << "  "
            << (r.pass ? "PASS" : "FAIL") << '\n';
        for (const IdentityReport& p : r.parts) {
          out << "    " << p.name << "  rel_residual=" << fmt(p.rel_residual) << "  " << (p.pass ? "PASS" : "FAIL")
              << '\n';
        }
        for (const auto& [name, value] : r.diagnostics) out << "    " << name << '=' << fmt(value) << '\n';
      }
      break;
  }
  return all_pass ? kExitOk : kExitNumeric;
}

// ---------------------------------------------------------------------------
// table
// ---------------------------------------------------------------------------

int cmd_table(const Options& o, std::ostream& out) {
  const EvalConfig cfg = make_config(o);
  std::string swept;
  for (const std::string name : {"z", "w", "x"}) {
    if (o.value_of(name).empty()) throw UsageError("missing --" + name);
    if (is_sweep(o.value_of(name))) {
      if (!swept.empty()) throw UsageError("table sweeps exactly one parameter (got --" + swept + " and --" + name + ")");
      swept = name;
    }
  }
  if (swept.empty()) throw UsageError("table needs one swept parameter (a list or lin:/log: range)");
  const std::vector<Complex> values = value_list(o, swept);
  if (values.empty()) throw UsageError("empty grid for --" + swept);

  std::map<std::string, Complex> fixed;
  for (const std::string name : {"z", "w", "x"}) {
    if (name != swept) fixed[name] = single_value(o, name);
  }
  std::vector<KzwPoint> points;
  for (Complex v : values) {
    std::map<std::string, Complex> at = fixed;
    at[swept] = v;
    try {
      points.emplace_back(at["z"], at["w"], at["x"]);
    } catch (const DomainError& e) {
      throw UsageError(e.what());
    }
  }

  struct Row {
    Complex param;
    std::optional<Evaluation> eval;
    std::string error;
  };
  std::vector<Row> rows;
  bool all_converged = true;
  for (std::size_t i = 0; i < points.size(); ++i) {
    Row row{values[i], std::nullopt, {}};
    try {
      row.eval = eval_auto(points[i], cfg);
      all_converged = all_converged && row.eval->converged;
    } catch (const NumericError& e) {
      row.error = e.what();
      all_converged = false;
    }
    rows.push_back(std::move(row));
  }

  switch (o.format()) {
    case Format::json: {
      Json arr = Json::array();
      for (const Row& r : rows) {
        Json j{{"parameter", swept}, {swept, format_complex(r.param)}};
        if (r.eval) {
          j["value_re"] = json_number(r.eval->value.real());
          j["value_im"] = json_number(r.eval->value.imag());
          j["err_est"] = json_number(r.eval->err_est);
          j["method"] = std::string(to_string(r.eval->method));
          j["converged"] = r.eval->converged;
        } else {
          j["converged"] = false;
          j["error"] = r.error;
        }
        arr.push_back(j);
      }
      write_json(out, arr);
      break;
    }
    case Format::csv:
    case Format::text: {
      const bool csv = o.format() == Format::csv;
      const std::vector<std::string> header{swept, "value_re", "value_im", "err_est", "method", "converged"};
      auto emit = [&](const std::vector<std::string>& f) {
        if (csv) {
          csv_row(out, f);
          return;
        }
        for (std::size_t i = 0; i < f.size(); ++i) out << (i ? "  " : "") << f[i];
        out << '\n';
      };
      emit(header);
      for (const Row& r : rows) {
        if (r.eval) {
          emit({format_complex(r.param), fmt(r.eval->value.real()), fmt(r.eval->value.imag()), fmt(r.eval->err_est),
                std::string(to_string(r.eval->method)), r.eval->converged ? "true" : "false"});
        } else {
          emit({format_complex(r.param), "nan", "nan", "nan", "error", "false"});
        }
      }
      break;
    }
  }
  return all_converged ? kExitOk : kExitNumeric;
}

void add_output_flags(CLI::App* sub, Options& o) {
  sub->add_option("--rel-tol", o.rel_tol, "relative tolerance (default 1e-12)");
  sub->add_option("--abs-tol", o.abs_tol, "absolute tolerance (default 1e-15)");
  sub->add_option("--max-terms", o.max_terms, "series term cap (default 200)");
  auto* json = sub->add_flag("--json", o.json, "JSON output");
  auto* csv = sub->add_flag("--csv", o.csv, "CSV output (RFC 4180)");
  json->excludes(csv);
  sub->add_flag("--verbose", o.verbose, "run metadata on the diagnostic stream");
}

void add_point_flags(CLI::App* sub, Options& o) {
  sub->add_option("--z", o.z, "order z (complex literal)");
  sub->add_option("--w", o.w, "parameter w (complex literal)");
  sub->add_option("--x", o.x, "argument x (complex literal, |arg x| < pi/4)");
}

}  // namespace

Complex parse_complex(std::string_view text) {
  static const std::string num = R"([+-]?(?:\d+\.?\d*|\.\d+)(?:[eE][+-]?\d+)?)";
  static const std::string unsigned_num = R"((?:\d+\.?\d*|\.\d+)(?:[eE][+-]?\d+)?)";
  static const std::regex real_re("(" + num + ")");
  static const std::regex imag_re("(" + num + ")i");
  static const std::regex full_re("(" + num + ")([+-])(" + unsigned_num + ")i");
  const std::string s(text);
  std::smatch m;
  if (std::regex_match(s, m, real_re)) return {parse_decimal(m[1]), 0.0};
  if (std::regex_match(s, m, imag_re)) return {0.0, parse_decimal(m[1])};
  if (std::regex_match(s, m, full_re)) {
    const double im = parse_decimal(m[3]);
    return {parse_decimal(m[1]), m[2] == "-" ? -im : im};
  }
  throw std::invalid_argument("malformed complex literal '" + s + "' (expected a, a+bi or bi)");
}

bool is_sweep(std::string_view text) {
  return text.find(',') != std::string_view::npos || text.starts_with("lin:") || text.starts_with("log:");
}

std::vector<Complex> parse_list(std::string_view text) {
  if (text.starts_with("lin:") || text.starts_with("log:")) {
    const bool log = text.starts_with("log:");
    std::vector<std::string> fields;
    std::stringstream ss{std::string(text.substr(4))};
    for (std::string f; std::getline(ss, f, ':');) fields.push_back(f);
    if (fields.size() != 3) throw std::invalid_argument("range must be lin:START:STOP:N or log:E0:E1:N");
    const double lo = parse_decimal(fields[0]), hi = parse_decimal(fields[1]);
    int n = 0;
    const auto [ptr, ec] = std::from_chars(fields[2].data(), fields[2].data() + fields[2].size(), n);
    if (ec != std::errc() || ptr != fields[2].data() + fields[2].size() || n < 0) {
      throw std::invalid_argument("bad point count '" + fields[2] + "'");
    }
    std::vector<Complex> out;
    for (int i = 0; i < n; ++i) {
      const double t = n == 1 ? lo : lo + (hi - lo) * i / (n - 1);
      out.emplace_back(log ? std::pow(10.0, t) : t);
    }
    return out;
  }
  std::vector<Complex> out;
  std::size_t start = 0;
  for (;;) {
    const std::size_t comma = text.find(',', start);
    out.push_back(parse_complex(text.substr(start, comma - start)));
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  return out;
}

std::string format_complex(Complex c) {
  if (c.imag() == 0.0) return fmt(c.real());
  const std::string im = fmt(std::abs(c.imag())) + "i";
  if (c.real() == 0.0) return (c.imag() < 0.0 ? "-" : "") + im;
  return fmt(c.real()) + (c.imag() < 0.0 ? "-" : "+") + im;
}

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Generalized modified Bessel function K_{z,w}(x): evaluation and identity checks"};
  app.require_subcommand(1, 1);
  app.footer(
      "Complex literals: a, a+bi, a-bi, bi. Lists: comma-separated literals, or\n"
      "lin:START:STOP:N / log:E0:E1:N ranges (table, verify).\n"
      "Exit status: 0 converged/passed, 1 usage error, 2 non-convergence or failed check.");
  Options o;

  CLI::App* eval = app.add_subcommand("eval", "evaluate K_{z,w}(x) with the regime dispatcher");
  add_point_flags(eval, o);
  add_output_flags(eval, o);
  eval->footer("CSV columns: z,w,x,value_re,value_im,err_est,method,work,converged");

  CLI::App* compare = app.add_subcommand("compare", "evaluate every applicable representation");
  add_point_flags(compare, o);
  add_output_flags(compare, o);
  compare->footer("CSV columns: method,value_re,value_im,err_est,work,converged,error");

  CLI::App* verify = app.add_subcommand("verify", "check an identity on a parameter grid");
  verify->add_option("identity", o.identity,
                     "reciprocity, rg-general, rg-modular, koshliakov-w, dde, lemma-inteq, xi-thm, xi-corollary")
      ->required();
  add_point_flags(verify, o);
  verify->add_option("--alpha", o.alpha, "alpha > 0 (beta = 1/alpha)");
  verify->add_option("--a", o.a, "a > 0 (b = pi^2/a)");
  add_output_flags(verify, o);
  verify->footer(
      "Every parameter flag accepts a list; the grid is their product, last flag fastest.\n"
      "CSV columns: identity,<parameters>,lhs_re,lhs_im,rhs_re,rhs_im,abs_residual,rel_residual,tolerance,pass,error");

  CLI::App* table = app.add_subcommand("table", "sweep one of z, w, x and tabulate K_{z,w}(x)");
  add_point_flags(table, o);
  add_output_flags(table, o);
  table->footer("CSV columns: <swept parameter>,value_re,value_im,err_est,method,converged");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  const auto start = std::chrono::steady_clock::now();
  int status = kExitOk;
  try {
    if (eval->parsed()) status = cmd_eval(o, out);
    if (compare->parsed()) status = cmd_compare(o, out);
    if (verify->parsed()) status = cmd_verify(o, out);
    if (table->parsed()) status = cmd_table(o, out);
  } catch (const UsageError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const PoleError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const DomainError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const NumericError& e) {
    err << "error: " << e.what() << '\n';
    return kExitNumeric;
  }
  if (o.verbose) {
    const EvalConfig cfg = make_config(o);
    err << "# rel_tol " << fmt(cfg.rel_tol) << (o.rel_tol ? " (override)" : "") << '\n'
        << "# abs_tol " << fmt(cfg.abs_tol) << (o.abs_tol ? " (override)" : "") << '\n'
        << "# max_series_terms " << cfg.max_series_terms << (o.max_terms ? " (override)" : "") << '\n'
        << "# elapsed_s "
        << fmt(std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count()) << '\n'
        << "# exit " << status << '\n';
  }
  return status;
}

}  // namespace kzw::cli
