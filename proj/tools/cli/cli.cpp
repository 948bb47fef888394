#include "cli.hpp"

#include <algorithm>
#include <chrono>
#include <optional>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include <macmahon/errors.hpp>
#include <macmahon/families.hpp>
#include <macmahon/identities.hpp>
#include <macmahon/oracles.hpp>

namespace macmahon::cli {

namespace {

using nlohmann::ordered_json;

enum class Format { plain, json, csv };

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

Format parse_format(const std::string &s) {
  if (s == "plain") return Format::plain;
  if (s == "json") return Format::json;
  if (s == "csv") return Format::csv;
  throw UsageError("--format must be plain, json or csv");
}

Sign parse_sign(const std::string &s) {
  if (s == "plus" || s == "+") return Sign::plus;
  if (s == "minus" || s == "-") return Sign::minus;
  throw UsageError("--sign must be plus or minus");
}

Bound parse_bound(const std::string &s) {
  if (s == "inf") {
    return kUnbounded;
  }
  try {
    std::size_t used = 0;
    const int m = std::stoi(s, &used);
    if (used == s.size() && m >= 0) {
      return m;
    }
  } catch (const std::exception &) {
  }
  throw UsageError("--m must be a non-negative integer or 'inf'");
}

Family parse_family(const std::string &s) {
  if (s == "A") return Family::A;
  if (s == "C") return Family::C;
  if (s == "V") return Family::V;
  if (s == "W") return Family::W;
  throw UsageError("--family must be one of A, C, V, W");
}

ordered_json bound_json(const Bound &m) { return m ? ordered_json(*m) : ordered_json("inf"); }

ordered_json params_json(const IdentityParams &p) {
  ordered_json j = ordered_json::object();
  if (p.sign) j["sign"] = to_string(*p.sign);
  if (p.k) j["k"] = *p.k;
  if (p.j) j["j"] = *p.j;
  if (p.m) j["m"] = bound_json(*p.m);
  if (p.n) j["n"] = *p.n;
  if (p.s) j["s"] = *p.s;
  if (p.e) j["e"] = *p.e;
  return j;
}

double elapsed_ms(const VerifyReport &r) {
  return std::chrono::duration<double, std::milli>(r.elapsed).count();
}

ordered_json report_json(const VerifyReport &r, bool deterministic) {
  ordered_json j;
  j["id"] = std::string(identity_name(r.identity_case.id));
  j["params"] = params_json(r.identity_case.params);
  j["order"] = r.identity_case.order;
  j["holds"] = r.holds;
  if (r.first_discrepancy) {
    j["first_discrepancy"] = {{"exponent", r.first_discrepancy->exponent},
                              {"lhs", to_string(r.first_discrepancy->lhs)},
                              {"rhs", to_string(r.first_discrepancy->rhs)}};
  } else {
    j["first_discrepancy"] = nullptr;
  }
  if (!r.note.empty()) {
    j["note"] = r.note;
  }
  if (!deterministic) {
    j["elapsed_ms"] = elapsed_ms(r);
  }
  return j;
}

std::string csv_params(const IdentityParams &p) {
  std::string s = p.to_string();
  std::replace(s.begin(), s.end(), ',', ';');
  return s;
}

std::string csv_quote(const std::string &s) {
  if (s.find_first_of(",\"\n") == std::string::npos) {
    return s;
  }
  std::string q = "\"";
  for (char c : s) {
    q += c;
    if (c == '"') q += '"';
  }
  return q + "\"";
}

constexpr const char *kCsvReportHeader = "id,params,order,holds,exponent,lhs,rhs,note";

void write_csv_report(std::ostream &out, const VerifyReport &r) {
  out << identity_name(r.identity_case.id) << "," << csv_params(r.identity_case.params) << ","
      << r.identity_case.order << "," << (r.holds ? "true" : "false") << ",";
  if (r.first_discrepancy) {
    out << r.first_discrepancy->exponent << "," << to_string(r.first_discrepancy->lhs) << ","
        << to_string(r.first_discrepancy->rhs);
  } else {
    out << ",,";
  }
  out << "," << csv_quote(r.note) << "\n";
}

void write_plain_report(std::ostream &out, const VerifyReport &r, bool deterministic) {
  out << identity_name(r.identity_case.id);
  const std::string params = r.identity_case.params.to_string();
  if (!params.empty()) {
    out << " [" << params << "]";
  }
  out << " order=" << r.identity_case.order << ": ";
  if (r.holds) {
    out << "holds";
  } else if (r.first_discrepancy) {
    out << "FAILS at q^" << r.first_discrepancy->exponent
        << " (lhs=" << to_string(r.first_discrepancy->lhs)
        << ", rhs=" << to_string(r.first_discrepancy->rhs) << ")";
  } else {
    out << "FAILS";
  }
  if (!deterministic) {
    std::ostringstream ms;
    ms.precision(3);
    ms << std::fixed << elapsed_ms(r);
    out << "  [" << ms.str() << " ms]";
  }
  out << "\n";
  if (!r.note.empty()) {
    out << "  note: " << r.note << "\n";
  }
}

// ---- subcommands --------------------------------------------------------------

struct CoeffsArgs {
  std::string family;
  std::string sign = "plus";
  int k = 0;
  std::string m = "inf";
  int order = 20;
  std::string format = "plain";
};

int cmd_coeffs(const CoeffsArgs &a, std::ostream &out) {
  const Format format = parse_format(a.format);
  if (a.k < 0 || a.order < 0) {
    throw UsageError("--k and --order must be non-negative");
  }
  const FamilySpec spec{parse_family(a.family), parse_sign(a.sign), a.k, parse_bound(a.m)};
  const ExactSeries s = family_series(spec, a.order);
  switch (format) {
  case Format::plain:
    for (int n = 0; n <= a.order; ++n) {
      out << n << " " << to_string(s.coeff(n)) << "\n";
    }
    break;
  case Format::csv:
    out << "n,coefficient\n";
    for (int n = 0; n <= a.order; ++n) {
      out << n << "," << to_string(s.coeff(n)) << "\n";
    }
    break;
  case Format::json: {
    ordered_json j;
    j["family"] = to_string(spec.family);
    j["sign"] = to_string(spec.sign);
    j["k"] = spec.k;
    j["m"] = bound_json(spec.m);
    j["order"] = a.order;
    ordered_json coeffs = ordered_json::array();
    for (int n = 0; n <= a.order; ++n) {
      coeffs.push_back(to_string(s.coeff(n)));
    }
    j["coefficients"] = std::move(coeffs);
    out << j.dump(2) << "\n";
    break;
  }
  }
  return kSuccess;
}

struct VerifyArgs {
  std::string id;
  std::optional<std::string> sign;
  std::optional<int> k, j, n, s, e;
  std::optional<std::string> m;
  int order = 20;
  std::string format = "plain";
  bool deterministic = false;
};

int cmd_verify(const VerifyArgs &a, std::ostream &out) {
  const Format format = parse_format(a.format);
  IdentityCase c;
  c.id = parse_identity(a.id);
  c.order = a.order;
  const auto required = required_params(c.id);
  auto needs = [&](Param p) { return std::find(required.begin(), required.end(), p) != required.end(); };
  if (a.sign) {
    c.params.sign = parse_sign(*a.sign);
  } else if (needs(Param::sign)) {
    c.params.sign = Sign::plus;
  }
  c.params.k = a.k;
  c.params.j = a.j;
  c.params.n = a.n;
  c.params.s = a.s;
  c.params.e = a.e;
  if (a.m) {
    c.params.m = parse_bound(*a.m);
  }
  const VerifyReport r = verify(c);
  switch (format) {
  case Format::plain:
    write_plain_report(out, r, a.deterministic);
    break;
  case Format::csv:
    out << kCsvReportHeader << "\n";
    write_csv_report(out, r);
    break;
  case Format::json:
    out << report_json(r, a.deterministic).dump(2) << "\n";
    break;
  }
  return r.holds ? kSuccess : kIdentityFails;
}

struct SuiteArgs {
  int order = 20;
  std::string format = "plain";
  bool deterministic = false;
  unsigned threads = 0;
};

int cmd_suite(const SuiteArgs &a, std::ostream &out, std::ostream &err) {
  const Format format = parse_format(a.format);
  if (a.order < 0) {
    throw UsageError("--order must be non-negative");
  }
  const auto reports = verify_suite(default_grid(), a.order, a.threads);
  const auto passed = static_cast<std::size_t>(
      std::count_if(reports.begin(), reports.end(), [](const VerifyReport &r) { return r.holds; }));
  const std::size_t failed = reports.size() - passed;
  std::ostringstream summary;
  summary << passed << " passed / " << failed << " failed / " << reports.size() << " total";

  switch (format) {
  case Format::plain:
    for (const auto &r : reports) {
      write_plain_report(out, r, a.deterministic);
    }
    out << summary.str() << "\n";
    break;
  case Format::csv:
    out << kCsvReportHeader << "\n";
    for (const auto &r : reports) {
      write_csv_report(out, r);
    }
    err << summary.str() << "\n";
    break;
  case Format::json: {
    ordered_json j;
    j["order"] = a.order;
    ordered_json list = ordered_json::array();
    for (const auto &r : reports) {
      list.push_back(report_json(r, a.deterministic));
    }
    j["reports"] = std::move(list);
    j["summary"] = {{"passed", passed}, {"failed", failed}, {"total", reports.size()}};
    out << j.dump(2) << "\n";
    break;
  }
  }
  return failed == 0 ? kSuccess : kIdentityFails;
}

struct OracleArgs {
  std::string which = "v";
  std::string sign = "plus";
  int k = 0;
  std::string m = "inf";
  int n = 0;
  std::string format = "plain";
};

int cmd_oracle(const OracleArgs &a, std::ostream &out) {
  const Format format = parse_format(a.format);
  Family family;
  if (a.which == "v") {
    family = Family::V;
  } else if (a.which == "w") {
    family = Family::W;
  } else if (a.which == "a") {
    family = Family::A;
  } else if (a.which == "c") {
    family = Family::C;
  } else {
    throw UsageError("--which must be v, w, a or c");
  }
  if (a.k < 0 || a.n < 0) {
    throw UsageError("--k and --n must be non-negative");
  }
  const Sign sign = parse_sign(a.sign);
  const Bound m = parse_bound(a.m);
  const Integer oracle = chain_oracle(family, sign, a.k, m, a.n);
  const Integer series = family_series({family, sign, a.k, m}, a.n).coeff(a.n);
  const bool match = oracle == series;
  switch (format) {
  case Format::plain:
    out << "oracle=" << to_string(oracle) << " series=" << to_string(series)
        << (match ? "" : " MISMATCH") << "\n";
    break;
  case Format::csv:
    out << "which,sign,k,m,n,oracle,series,match\n"
        << a.which << "," << to_string(sign) << "," << a.k << "," << to_string(m) << "," << a.n
        << "," << to_string(oracle) << "," << to_string(series) << "," << (match ? "true" : "false")
        << "\n";
    break;
  case Format::json: {
    ordered_json j;
    j["which"] = a.which;
    j["sign"] = to_string(sign);
    j["k"] = a.k;
    j["m"] = bound_json(m);
    j["n"] = a.n;
    j["oracle"] = to_string(oracle);
    j["series"] = to_string(series);
    j["match"] = match;
    out << j.dump(2) << "\n";
    break;
  }
  }
  return match ? kSuccess : kIdentityFails;
}

} // namespace

int run(const std::vector<std::string> &args, std::ostream &out, std::ostream &err) {
  CLI::App app{"Exact q-series engine for MacMahon-type partition generating functions",
               "macmahon"};
  app.require_subcommand(1);

  CoeffsArgs coeffs;
  auto *c = app.add_subcommand("coeffs", "Print coefficients of an A/C/V/W family series");
  c->add_option("--family", coeffs.family, "A, C, V or W")->required();
  c->add_option("--sign", coeffs.sign, "plus or minus");
  c->add_option("--k", coeffs.k, "number of magnitudes")->required();
  c->add_option("--m", coeffs.m, "magnitude bound or 'inf'");
  c->add_option("--order", coeffs.order, "truncation order N");
  c->add_option("--format", coeffs.format, "plain, json or csv");

  VerifyArgs verify_args;
  auto *v = app.add_subcommand("verify", "Check one identity coefficientwise");
  v->add_option("--id", verify_args.id, "identity name")->required();
  v->add_option("--sign", verify_args.sign, "plus or minus (default plus)");
  v->add_option("--k", verify_args.k);
  v->add_option("--j", verify_args.j);
  v->add_option("--m", verify_args.m, "bound or 'inf'");
  v->add_option("--n", verify_args.n, "Cauchy product length");
  v->add_option("--s", verify_args.s, "Cauchy exponent step");
  v->add_option("--e", verify_args.e, "Euler product offset");
  v->add_option("--order", verify_args.order, "truncation order N");
  v->add_option("--format", verify_args.format, "plain, json or csv");
  v->add_flag("--deterministic", verify_args.deterministic, "omit timing");

  SuiteArgs suite_args;
  auto *s = app.add_subcommand("suite", "Run every identity over the default grid");
  s->add_option("--order", suite_args.order, "truncation order N");
  s->add_option("--format", suite_args.format, "plain, json or csv");
  s->add_option("--threads", suite_args.threads, "worker threads (0 = all cores)");
  s->add_flag("--deterministic", suite_args.deterministic, "omit timing");

  OracleArgs oracle_args;
  auto *o = app.add_subcommand("oracle", "Compare brute-force enumeration with the series");
  o->add_option("--which", oracle_args.which, "v, w, a or c");
  o->add_option("--sign", oracle_args.sign, "plus or minus");
  o->add_option("--k", oracle_args.k)->required();
  o->add_option("--m", oracle_args.m, "bound or 'inf'");
  o->add_option("--n", oracle_args.n)->required();
  o->add_option("--format", oracle_args.format, "plain, json or csv");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp &) {
    out << app.help();
    return kSuccess;
  } catch (const CLI::CallForAllHelp &) {
    out << app.help("", CLI::AppFormatMode::All);
    return kSuccess;
  } catch (const CLI::ParseError &e) {
    err << "error: " << e.what() << "\n";
    return kUsageError;
  }

  try {
    if (*c) return cmd_coeffs(coeffs, out);
    if (*v) return cmd_verify(verify_args, out);
    if (*s) return cmd_suite(suite_args, out, err);
    if (*o) return cmd_oracle(oracle_args, out);
  } catch (const UsageError &e) {
    err << "error: " << e.what() << "\n";
    return kUsageError;
  } catch (const Error &e) {
    err << "error: " << e.what() << "\n";
    return kUsageError;
  } catch (const std::exception &e) {
    err << "internal error: " << e.what() << "\n";
    return kUsageError;
  }
  return kUsageError;
}

} // namespace macmahon::cli
