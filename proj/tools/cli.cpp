#include "cli.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <iomanip>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "sgcount/counting.hpp"
#include "sgcount/errors.hpp"
#include "sgcount/export.hpp"
#include "sgcount/grid.hpp"
#include "sgcount/nodes.hpp"
#include "sgcount/series.hpp"

namespace sgcount::cli {
namespace {

using Json = nlohmann::ordered_json;

struct Range {
  std::uint32_t lo = 0;
  std::uint32_t hi = 0;
};

// "a..b" or a single "a".
Range parse_range(const std::string& text, std::string_view what) {
  auto parse_one = [&](std::string_view s) {
    std::uint32_t v = 0;
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (s.empty() || ec != std::errc{} || ptr != s.data() + s.size()) {
      throw ContractError("invalid " + std::string(what) + " range '" + text + "'");
    }
    return v;
  };
  const auto dots = text.find("..");
  if (dots == std::string::npos) {
    const auto v = parse_one(text);
    return {v, v};
  }
  Range r{parse_one(std::string_view(text).substr(0, dots)), parse_one(std::string_view(text).substr(dots + 2))};
  if (r.lo > r.hi) throw ContractError("empty " + std::string(what) + " range '" + text + "'");
  return r;
}

std::vector<std::string> split_list(const std::string& text) {
  std::vector<std::string> out;
  std::stringstream ss(text);
  for (std::string item; std::getline(ss, item, ',');) {
    if (!item.empty()) out.push_back(item);
  }
  return out;
}

std::string format_double(double v) {
  char buf[64];
  auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, v, std::chars_format::general, 17);
  return ec == std::errc{} ? std::string(buf, ptr) : std::string("nan");
}

enum class Quantity { N, Ndup, Nsigma };

Quantity parse_quantity(std::string_view s) {
  if (s == "N") return Quantity::N;
  if (s == "Ndup") return Quantity::Ndup;
  if (s == "Nsigma") return Quantity::Nsigma;
  throw ContractError("unknown quantity '" + std::string(s) + "' (N, Ndup, Nsigma)");
}

std::string_view quantity_name(Quantity q) {
  switch (q) {
    case Quantity::N: return "N";
    case Quantity::Ndup: return "Ndup";
    case Quantity::Nsigma: return "Nsigma";
  }
  return "?";
}

std::uint32_t sigma_lower(const CountQuery& q) { return q.mu + 1 > q.d ? q.mu + 1 - q.d : 0; }

BigInt sigma_of(const CountQuery& q, BigInt (*dup)(const CountQuery&)) {
  BigInt total = 0;
  for (std::uint32_t k = sigma_lower(q); k <= q.mu; ++k) total += dup({q.d, k, q.growth});
  return total;
}

BigInt compute_count(const CountQuery& q, Quantity quantity, std::string_view method,
                     const std::optional<NodeFamilyId>& family) {
  q.validate();
  const GrowthFamily fam = q.growth.family();
  auto need_family = [&]() {
    if (!family) throw ContractError("method 'oracle' needs --family");
    return *family;
  };

  switch (quantity) {
    case Quantity::N:
      if (method == "closed") return count_nested_closed(q);
      if (method == "recursion") return count_nested_recursion(q);
      if (method == "genfun") return count_via_genfun(q.growth, q.d, q.mu, CountKind::Nested);
      if (method == "oracle") {
        const NodeFamilyId f = need_family();
        return grid_cardinality_oracle({q.d, q.mu, f, q.growth, is_nested_pairing(f, q.growth)});
      }
      if (method == "auto") return has_nested_closed(fam) ? count_nested_closed(q) : count_nested_recursion(q);
      break;
    case Quantity::Ndup:
      if (method == "closed") return count_dup_closed(q);
      if (method == "recursion") return count_dup_recursion(q);
      if (method == "genfun") return count_via_genfun(q.growth, q.d, q.mu, CountKind::WithDuplicates);
      if (method == "oracle") return duplicate_count_oracle({q.d, q.mu, need_family(), q.growth, true});
      if (method == "auto") return has_dup_closed(fam) ? count_dup_closed(q) : count_dup_sum(q);
      break;
    case Quantity::Nsigma:
      if (method == "closed") {
        if (fam == GrowthFamily::Linear) return count_sigma_linear_closed(q.d, q.mu);
        if (has_dup_closed(fam)) return sigma_of(q, &count_dup_closed);
        throw UnsupportedError("Nsigma has no closed form for growth " + q.growth.name() +
                               "; use --method recursion, genfun or auto");
      }
      if (method == "recursion") return sigma_of(q, &count_dup_recursion);
      if (method == "genfun") {
        const auto series = genfun_series(q.growth, q.d, q.mu, CountKind::WithDuplicates);
        BigInt total = 0;
        for (std::uint32_t k = sigma_lower(q); k <= q.mu; ++k) total += series[k];
        return total;
      }
      if (method == "oracle") return duplicate_count_oracle({q.d, q.mu, need_family(), q.growth, false});
      if (method == "auto") return count_sigma(q);
      break;
  }
  throw ContractError("unknown method '" + std::string(method) + "'");
}

BigInt auto_count(const CountQuery& q, Quantity quantity) { return compute_count(q, quantity, "auto", {}); }

struct Globals {
  std::string format;
  std::string out_path;
};

// Writes to --out when given, otherwise to `fallback`.
class Sink {
 public:
  Sink(const std::string& path, std::ostream& fallback) : stream_(&fallback) {
    if (!path.empty()) {
      file_.open(path, std::ios::binary);
      if (!file_) throw ContractError("cannot open '" + path + "' for writing");
      stream_ = &file_;
    }
  }
  std::ostream& get() { return *stream_; }

 private:
  std::ofstream file_;
  std::ostream* stream_;
};

void require_format(const std::string& format, std::initializer_list<std::string_view> allowed) {
  if (std::find(allowed.begin(), allowed.end(), format) == allowed.end()) {
    std::string list;
    for (auto a : allowed) list += (list.empty() ? "" : ", ") + std::string(a);
    throw ContractError("format '" + format + "' not supported here (" + list + ")");
  }
}

// --- count -------------------------------------------------------------------

struct CountArgs {
  std::uint32_t d = 1;
  std::uint32_t mu = 0;
  std::string growth;
  std::string quantity = "N";
  std::string method = "auto";
  std::string family;
};

int cmd_count(const CountArgs& a, const Globals& g, std::ostream& out) {
  const CountQuery q{a.d, a.mu, GrowthSpec::parse(a.growth)};
  const Quantity quantity = parse_quantity(a.quantity);
  std::optional<NodeFamilyId> family;
  if (!a.family.empty()) family = parse_family(a.family);
  const BigInt value = compute_count(q, quantity, a.method, family);

  Sink sink(g.out_path, out);
  if (g.format == "json") {
    Json doc;
    doc["d"] = q.d;
    doc["mu"] = q.mu;
    doc["growth"] = q.growth.name();
    doc["quantity"] = quantity_name(quantity);
    doc["method"] = a.method;
    doc["value"] = to_decimal(value);
    sink.get() << doc.dump() << '\n';
  } else {
    sink.get() << to_decimal(value) << '\n';
  }
  return kOk;
}

// --- table -------------------------------------------------------------------

struct TableArgs {
  std::string d = "1..3";
  std::string mu = "0..4";
  std::string growth;
  std::string quantities = "N";
};

int cmd_table(const TableArgs& a, const Globals& g, std::ostream& out) {
  const Range dr = parse_range(a.d, "d");
  const Range mr = parse_range(a.mu, "mu");
  if (dr.lo < 1) throw ContractError("d range must start at 1 or above");
  const GrowthSpec growth = GrowthSpec::parse(a.growth);
  std::vector<Quantity> quantities;
  for (const auto& s : split_list(a.quantities)) quantities.push_back(parse_quantity(s));
  if (quantities.empty()) throw ContractError("no quantities requested");
  const std::string format = g.format.empty() ? "csv" : g.format;
  require_format(format, {"csv", "json", "pretty"});

  std::vector<std::vector<std::string>> rows;
  for (std::uint32_t d = dr.lo; d <= dr.hi; ++d) {
    for (std::uint32_t mu = mr.lo; mu <= mr.hi; ++mu) {
      std::vector<std::string> row{std::to_string(d), std::to_string(mu), growth.name()};
      for (Quantity qt : quantities) row.push_back(to_decimal(auto_count({d, mu, growth}, qt)));
      rows.push_back(std::move(row));
    }
  }
  std::vector<std::string> header{"d", "mu", "growth"};
  for (Quantity qt : quantities) header.emplace_back(quantity_name(qt));

  Sink sink(g.out_path, out);
  std::ostream& os = sink.get();
  if (format == "json") {
    Json doc = Json::array();
    for (const auto& row : rows) {
      Json cell;
      cell["d"] = std::stoul(row[0]);
      cell["mu"] = std::stoul(row[1]);
      cell["growth"] = row[2];
      for (std::size_t k = 3; k < row.size(); ++k) cell[header[k]] = row[k];
      doc.push_back(std::move(cell));
    }
    os << doc.dump(2) << '\n';
  } else if (format == "csv") {
    for (std::size_t k = 0; k < header.size(); ++k) os << (k ? "," : "") << header[k];
    os << '\n';
    for (const auto& row : rows) {
      for (std::size_t k = 0; k < row.size(); ++k) os << (k ? "," : "") << row[k];
      os << '\n';
    }
  } else {
    std::vector<std::size_t> width(header.size());
    for (std::size_t k = 0; k < header.size(); ++k) width[k] = header[k].size();
    for (const auto& row : rows)
      for (std::size_t k = 0; k < row.size(); ++k) width[k] = std::max(width[k], row[k].size());
    auto emit = [&](const std::vector<std::string>& row) {
      for (std::size_t k = 0; k < row.size(); ++k) {
        os << (k ? "  " : "") << std::setw(static_cast<int>(width[k])) << row[k];
      }
      os << '\n';
    };
    emit(header);
    for (const auto& row : rows) emit(row);
  }
  return kOk;
}

// --- verify ------------------------------------------------------------------

struct VerifyArgs {
  std::uint32_t d_min = 1;
  std::uint32_t d_max = 4;
  std::uint32_t mu_min = 0;
  std::uint32_t mu_max = 5;
  std::vector<std::string> growths;
  std::vector<std::string> families;
  bool detail = false;
};

std::string method_label(const MethodValue& v) {
  std::string s(method_name(v.method));
  if (v.family) s += "[" + std::string(family_name(*v.family)) + "]";
  return s;
}

int cmd_verify(const VerifyArgs& a, const Globals& g, std::ostream& out, std::ostream& err,
               const Hooks& hooks) {
  VerifyOptions options;
  options.d_min = a.d_min;
  options.d_max = a.d_max;
  options.mu_min = a.mu_min;
  options.mu_max = a.mu_max;
  if (a.d_min < 1 || a.d_min > a.d_max || a.mu_min > a.mu_max) {
    throw ContractError("verify bounds must satisfy 1 <= d-min <= d-max and mu-min <= mu-max");
  }
  if (!a.growths.empty()) {
    options.growths.clear();
    for (const auto& s : a.growths) options.growths.push_back(GrowthSpec::parse(s));
  }
  if (!a.families.empty()) {
    options.families.clear();
    for (const auto& s : a.families) options.families.push_back(parse_family(s));
  }
  options.hooks = hooks.verify;
  const std::string format = g.format.empty() ? "pretty" : g.format;
  require_format(format, {"csv", "json", "pretty"});

  const VerifySummary summary = run_verification(options);

  Sink sink(g.out_path, out);
  std::ostream& os = sink.get();
  if (format == "json") {
    Json doc;
    doc["all_agree"] = summary.all_agree;
    Json exercised = Json::array();
    for (Method m : summary.exercised) exercised.push_back(method_name(m));
    doc["methods_exercised"] = std::move(exercised);
    Json cells = Json::array();
    for (const auto& r : summary.reports) {
      Json cell;
      cell["d"] = r.query.d;
      cell["mu"] = r.query.mu;
      cell["growth"] = r.query.growth.name();
      cell["N"] = to_decimal(r.n_nested);
      cell["Ndup"] = to_decimal(r.n_dup);
      cell["Nsigma"] = to_decimal(r.n_sigma);
      cell["agree"] = r.agreement;
      Json values = Json::object();
      for (const auto& v : r.values) values[method_label(v)] = to_decimal(v.value);
      cell["methods"] = std::move(values);
      cell["mismatches"] = r.mismatches;
      cells.push_back(std::move(cell));
    }
    doc["cells"] = std::move(cells);
    os << doc.dump(2) << '\n';
  } else if (format == "csv") {
    os << "d,mu,growth,N,Ndup,Nsigma,agree,methods\n";
    for (const auto& r : summary.reports) {
      os << r.query.d << ',' << r.query.mu << ',' << r.query.growth.name() << ',' << to_decimal(r.n_nested)
         << ',' << to_decimal(r.n_dup) << ',' << to_decimal(r.n_sigma) << ','
         << (r.agreement ? "agree" : "DISAGREE") << ',' << r.values.size() << '\n';
    }
  } else {
    for (const auto& r : summary.reports) {
      os << "d=" << r.query.d << " mu=" << r.query.mu << " growth=" << r.query.growth.name()
         << "  N=" << to_decimal(r.n_nested) << " Ndup=" << to_decimal(r.n_dup)
         << " Nsigma=" << to_decimal(r.n_sigma) << "  " << (r.agreement ? "agree" : "DISAGREE") << " ("
         << r.values.size() << " paths)\n";
      if (a.detail) {
        for (const auto& v : r.values) os << "    " << method_label(v) << " = " << to_decimal(v.value) << '\n';
      }
    }
    os << "cells: " << summary.reports.size() << ", methods exercised: " << summary.exercised.size() << "/"
       << kAllMethods.size() << ", " << (summary.all_agree ? "all paths agree" : "DISAGREEMENT") << '\n';
  }

  if (const CountReport* bad = summary.first_failure()) {
    err << "verification failed at d=" << bad->query.d << " mu=" << bad->query.mu
        << " growth=" << bad->query.growth.name() << '\n';
    for (const auto& m : bad->mismatches) err << "  " << m << '\n';
    return kVerifyFailed;
  }
  return kOk;
}

// --- grid --------------------------------------------------------------------

struct GridArgs {
  std::uint32_t d = 2;
  std::uint32_t mu = 0;
  std::string family;
  std::string growth;
  bool general = false;
};

int cmd_grid(const GridArgs& a, const Globals& g, std::ostream& out, std::ostream& err) {
  const std::string format = g.format.empty() ? "csv" : g.format;
  const ExportFormat fmt = parse_export_format(format);
  GridSpec spec{a.d, a.mu, parse_family(a.family), GrowthSpec::parse(a.growth), true};
  spec.nested_mode = !a.general && is_nested_pairing(spec.family, spec.growth);
  if (fmt == ExportFormat::Svg && spec.d != 2) {
    throw UnsupportedError("svg export needs d = 2");
  }
  const Grid grid = build_grid(spec);
  if (g.out_path.empty()) {
    export_grid(grid, fmt, out);
    err << "cardinality: " << to_decimal(grid.cardinality()) << '\n';
  } else {
    Sink sink(g.out_path, out);
    export_grid(grid, fmt, sink.get());
    out << to_decimal(grid.cardinality()) << '\n';
  }
  return kOk;
}

// --- leja --------------------------------------------------------------------

struct LejaArgs {
  std::size_t n = 1;
  double seed = kLejaDefaultSeed;
  bool symmetric = false;
};

int cmd_leja(const LejaArgs& a, const Globals& g, std::ostream& out) {
  if (a.n > kLejaMaxPoints) {
    throw ResourceGuardError("n = " + std::to_string(a.n) + " exceeds the Leja bound of " +
                             std::to_string(kLejaMaxPoints));
  }
  const std::vector<double> xs = leja_sequence(a.n, a.seed, a.symmetric);
  Sink sink(g.out_path, out);
  if (g.format == "json") {
    Json doc = Json::array();
    for (double x : xs) doc.push_back(x);
    sink.get() << doc.dump() << '\n';
  } else {
    for (double x : xs) sink.get() << format_double(x) << '\n';
  }
  return kOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err, const Hooks& hooks) {
  CLI::App app{"Exact node counts for Smolyak sparse grids", "sgcount"};
  app.require_subcommand(1);
  app.fallthrough();

  Globals globals;
  app.add_option("--format", globals.format, "Output format: csv, json, pretty (grid: csv, json, svg)");
  app.add_option("--out", globals.out_path, "Write output to this file instead of standard output");

  CountArgs count_args;
  auto* count = app.add_subcommand("count", "Print one count");
  count->add_option("--d", count_args.d, "Dimension")->required()->check(CLI::PositiveNumber);
  count->add_option("--mu", count_args.mu, "Level")->required();
  count->add_option("--growth", count_args.growth, "Growth function, e.g. power:3")->required();
  count->add_option("--quantity", count_args.quantity, "N, Ndup or Nsigma");
  count->add_option("--method", count_args.method, "closed, recursion, genfun, oracle or auto");
  count->add_option("--family", count_args.family, "Node family (needed by --method oracle)");

  TableArgs table_args;
  auto* table = app.add_subcommand("table", "Print a table of counts");
  table->add_option("--d", table_args.d, "Dimension range, e.g. 1..3");
  table->add_option("--mu", table_args.mu, "Level range, e.g. 0..4");
  table->add_option("--growth", table_args.growth, "Growth function")->required();
  table->add_option("--quantities", table_args.quantities, "Comma list of N, Ndup, Nsigma");

  VerifyArgs verify_args;
  auto* verify = app.add_subcommand("verify", "Cross-check every counting path");
  verify->add_option("--d-min", verify_args.d_min, "Smallest dimension");
  verify->add_option("--d-max", verify_args.d_max, "Largest dimension");
  verify->add_option("--mu-min", verify_args.mu_min, "Smallest level");
  verify->add_option("--mu-max", verify_args.mu_max, "Largest level");
  verify->add_option("--growth", verify_args.growths, "Growth function (repeatable)");
  verify->add_option("--family", verify_args.families, "Node family for grid oracles (repeatable)");
  verify->add_flag("--detail", verify_args.detail, "List every path value");

  GridArgs grid_args;
  auto* grid = app.add_subcommand("grid", "Build and export a grid");
  grid->add_option("--d", grid_args.d, "Dimension")->required()->check(CLI::PositiveNumber);
  grid->add_option("--mu", grid_args.mu, "Level")->required();
  grid->add_option("--family", grid_args.family, "Node family")->required();
  grid->add_option("--growth", grid_args.growth, "Growth function")->required();
  grid->add_flag("--general", grid_args.general, "Use the full index set even for nested pairings");

  LejaArgs leja_args;
  auto* leja = app.add_subcommand("leja", "Print the first n Leja points");
  leja->add_option("--n", leja_args.n, "Number of points")->required()->check(CLI::PositiveNumber);
  leja->add_option("--seed", leja_args.seed, "First point in [-1, 1]");
  leja->add_flag("--symmetric", leja_args.symmetric, "Symmetric variant (seed 0, mirror pairs)");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kUsage;
  }

  try {
    if (*count) return cmd_count(count_args, globals, out);
    if (*table) return cmd_table(table_args, globals, out);
    if (*verify) return cmd_verify(verify_args, globals, out, err, hooks);
    if (*grid) return cmd_grid(grid_args, globals, out, err);
    if (*leja) return cmd_leja(leja_args, globals, out);
  } catch (const ResourceGuardError& e) {
    err << "error: " << e.what() << '\n';
    return kResourceGuard;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  }
  return kUsage;
}

}  // namespace sgcount::cli
