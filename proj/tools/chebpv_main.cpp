// chebpv: Cauchy principal values by Chebyshev-U expansion.
//
// Subcommands:
//   integrate  one integral, text or JSON report, optional excision oracle
//   study      convergence sweep over degrees, CSV output
//   basis      table of exact U-basis moments
//
// Exit codes: 0 success, 2 parse/validation error, 3 numerical failure.

#include <algorithm>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "chebpv/chebpv.hpp"

namespace {

// Validation problems attributable to one flag; mapped to exit code 2.
struct FlagError {
  std::string flag;
  std::string message;
};

std::string fmt17(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

std::string json_quote(const std::string& s) {
  std::string out = "\"";
  for (char c : s) {
    switch (c) {
      case '"': out += "\\\""; break;
      case '\\': out += "\\\\"; break;
      case '\n': out += "\\n"; break;
      case '\t': out += "\\t"; break;
      default:
        if (static_cast<unsigned char>(c) < 0x20) {
          char buf[8];
          std::snprintf(buf, sizeof buf, "\\u%04x", c);
          out += buf;
        } else {
          out += c;
        }
    }
  }
  return out + "\"";
}

int parse_int(const std::string& text, const std::string& flag) {
  int value = 0;
  const auto result =
      std::from_chars(text.data(), text.data() + text.size(), value);
  if (result.ec != std::errc{} || result.ptr != text.data() + text.size()) {
    throw FlagError{flag, "expected an integer, got '" + text + "'"};
  }
  return value;
}

int parse_nodes(const std::string& text) {
  if (text == "auto") return 0;
  const int m = parse_int(text, "--nodes");
  if (m <= 0) throw FlagError{"--nodes", "node count must be positive"};
  return m;
}

struct Sweep {
  int start = 0;
  int stop = 0;
  int factor = 0;
};

// "<start>:<stop>:x<factor>", e.g. 4:256:x2.
Sweep parse_degrees(const std::string& text) {
  const auto first = text.find(':');
  const auto second = first == std::string::npos
                          ? std::string::npos
                          : text.find(':', first + 1);
  if (first == std::string::npos || second == std::string::npos ||
      text.find(':', second + 1) != std::string::npos) {
    throw FlagError{"--degrees",
                    "expected <start>:<stop>:x<factor>, got '" + text + "'"};
  }
  const std::string start_text = text.substr(0, first);
  const std::string stop_text = text.substr(first + 1, second - first - 1);
  const std::string factor_text = text.substr(second + 1);
  if (start_text.empty() || stop_text.empty() || factor_text.size() < 2 ||
      factor_text[0] != 'x') {
    throw FlagError{"--degrees",
                    "expected <start>:<stop>:x<factor>, got '" + text + "'"};
  }
  Sweep sweep;
  sweep.start = parse_int(start_text, "--degrees");
  sweep.stop = parse_int(stop_text, "--degrees");
  sweep.factor = parse_int(factor_text.substr(1), "--degrees");
  if (sweep.start < 1) {
    throw FlagError{"--degrees", "sweep start must be >= 1"};
  }
  if (sweep.stop < sweep.start) {
    throw FlagError{"--degrees", "sweep stop must be >= start"};
  }
  if (sweep.factor < 2) {
    throw FlagError{"--degrees", "sweep factor must be >= 2"};
  }
  return sweep;
}

struct IntegrateOptions {
  std::string expr_text;
  std::vector<double> interval{-1.0, 1.0};
  double singularity = 0.0;
  double order = 1.0;
  int degree = 64;
  std::string nodes = "auto";
  bool with_oracle = false;
  std::string format = "text";
};

struct StudyOptions {
  std::string expr_text;
  std::vector<double> interval{-1.0, 1.0};
  double singularity = 0.0;
  double order = 1.0;
  std::string degrees;
  std::string out = "-";
};

struct BasisOptions {
  int max_degree = 0;
  std::string format = "text";
};

struct RunReport {
  std::string expr;
  double a = 0.0, b = 0.0, singularity = 0.0, order = 0.0;
  int degree = 0;
  int nodes = 0;
  double value = 0.0;
  bool converged = false;
  std::vector<double> tail_ratios;  // one per piece, singular window first
  bool has_oracle = false;
  double oracle_value = 0.0;
  double oracle_error_estimate = 0.0;
  double abs_err_vs_oracle = 0.0;
};

chebpv::Integrand make_integrand(const chebpv::expr::ExprPtr& ast,
                                 const std::vector<double>& interval,
                                 double singularity, double order) {
  if (!(order > 0.0)) {
    throw FlagError{"--order", "singularity order must be positive"};
  }
  chebpv::Integrand g;
  g.f = [ast](double x) { return chebpv::expr::eval(*ast, x); };
  g.a = interval.at(0);
  g.b = interval.at(1);
  g.s = singularity;
  g.p = order;
  return g;
}

void print_report_json(const RunReport& r) {
  std::string out = "{\n";
  out += "  \"expr\": " + json_quote(r.expr) + ",\n";
  out += "  \"interval\": [" + fmt17(r.a) + ", " + fmt17(r.b) + "],\n";
  out += "  \"singularity\": " + fmt17(r.singularity) + ",\n";
  out += "  \"order\": " + fmt17(r.order) + ",\n";
  out += "  \"degree\": " + std::to_string(r.degree) + ",\n";
  out += "  \"nodes\": " + std::to_string(r.nodes) + ",\n";
  out += "  \"value\": " + fmt17(r.value) + ",\n";
  out += std::string("  \"converged\": ") + (r.converged ? "true" : "false") +
         ",\n";
  out += "  \"tail_ratio\": [";
  for (std::size_t i = 0; i < r.tail_ratios.size(); ++i) {
    if (i > 0) out += ", ";
    out += fmt17(r.tail_ratios[i]);
  }
  out += "]";
  if (r.has_oracle) {
    out += ",\n  \"oracle_value\": " + fmt17(r.oracle_value);
    out += ",\n  \"oracle_error_estimate\": " + fmt17(r.oracle_error_estimate);
    out += ",\n  \"abs_err_vs_oracle\": " + fmt17(r.abs_err_vs_oracle);
  }
  out += "\n}\n";
  std::fputs(out.c_str(), stdout);
}

void print_report_text(const RunReport& r) {
  std::printf("expr:        %s\n", r.expr.c_str());
  std::printf("interval:    [%s, %s]\n", fmt17(r.a).c_str(),
              fmt17(r.b).c_str());
  std::printf("singularity: %s\n", fmt17(r.singularity).c_str());
  std::printf("order:       %s\n", fmt17(r.order).c_str());
  std::printf("degree:      %d\n", r.degree);
  std::printf("nodes:       %d\n", r.nodes);
  std::printf("value:       %s\n", fmt17(r.value).c_str());
  std::printf("converged:   %s\n", r.converged ? "true" : "false");
  std::string tails;
  for (std::size_t i = 0; i < r.tail_ratios.size(); ++i) {
    if (i > 0) tails += " ";
    tails += fmt17(r.tail_ratios[i]);
  }
  std::printf("tail_ratio:  %s\n", tails.c_str());
  if (r.has_oracle) {
    std::printf("oracle_value:          %s\n", fmt17(r.oracle_value).c_str());
    std::printf("oracle_error_estimate: %s\n",
                fmt17(r.oracle_error_estimate).c_str());
    std::printf("abs_err_vs_oracle:     %s\n",
                fmt17(r.abs_err_vs_oracle).c_str());
  }
}

int run_integrate(const IntegrateOptions& opt) {
  if (opt.degree < 0) {
    throw FlagError{"--degree", "degree must be non-negative"};
  }
  const auto ast = chebpv::expr::parse(opt.expr_text);
  const auto g =
      make_integrand(ast, opt.interval, opt.singularity, opt.order);

  chebpv::PVConfig cfg;
  cfg.degree = opt.degree;
  cfg.node_count = parse_nodes(opt.nodes);

  const chebpv::PVResult result = chebpv::pv_integrate(g, cfg);

  RunReport report;
  report.expr = opt.expr_text;
  report.a = g.a;
  report.b = g.b;
  report.singularity = g.s;
  report.order = g.p;
  report.degree = cfg.degree;
  report.nodes = cfg.resolved_node_count();
  report.value = result.value;
  report.converged = result.converged;
  for (const auto& piece : result.pieces) {
    report.tail_ratios.push_back(piece.series.tail_ratio);
  }
  if (opt.with_oracle) {
    const auto oracle = chebpv::oracle::pv_excision(g);
    report.has_oracle = true;
    report.oracle_value = oracle.value;
    report.oracle_error_estimate = oracle.error_estimate;
    report.abs_err_vs_oracle = std::fabs(report.value - oracle.value);
  }
  if (opt.format == "json") {
    print_report_json(report);
  } else {
    print_report_text(report);
  }
  return 0;
}

int run_study(const StudyOptions& opt) {
  const Sweep sweep = parse_degrees(opt.degrees);
  const auto ast = chebpv::expr::parse(opt.expr_text);
  const auto g =
      make_integrand(ast, opt.interval, opt.singularity, opt.order);

  const auto oracle = chebpv::oracle::pv_excision(g);

  std::string csv = "degree,nodes,value,tail_ratio,abs_err_vs_oracle\n";
  for (long long n = sweep.start; n <= sweep.stop; n *= sweep.factor) {
    chebpv::PVConfig cfg;
    cfg.degree = static_cast<int>(n);
    const chebpv::PVResult result = chebpv::pv_integrate(g, cfg);
    double tail = 0.0;
    for (const auto& piece : result.pieces) {
      tail = std::max(tail, piece.series.tail_ratio);
    }
    csv += std::to_string(n) + "," +
           std::to_string(cfg.resolved_node_count()) + "," +
           fmt17(result.value) + "," + fmt17(tail) + "," +
           fmt17(std::fabs(result.value - oracle.value)) + "\n";
  }

  if (opt.out == "-") {
    std::fputs(csv.c_str(), stdout);
  } else {
    std::ofstream file(opt.out);
    if (!file) {
      throw FlagError{"--out", "cannot open '" + opt.out + "' for writing"};
    }
    file << csv;
  }
  return 0;
}

int run_basis(const BasisOptions& opt) {
  if (opt.max_degree < 0) {
    throw FlagError{"--max-degree", "must be non-negative"};
  }
  if (opt.format == "json") {
    std::string out = "{\n  \"max_degree\": " + std::to_string(opt.max_degree);
    out += ",\n  \"moments\": [";
    for (int i = 0; i <= opt.max_degree; ++i) {
      if (i > 0) out += ", ";
      out += fmt17(chebpv::u_moment(i));
    }
    out += "]\n}\n";
    std::fputs(out.c_str(), stdout);
  } else {
    for (int i = 0; i <= opt.max_degree; ++i) {
      std::printf("%d %s\n", i, fmt17(chebpv::u_moment(i)).c_str());
    }
  }
  return 0;
}

int fail(int code, const std::string& flag, const std::string& kind,
         const std::string& what) {
  std::cerr << "error: ";
  if (!flag.empty()) std::cerr << flag << ": ";
  std::cerr << kind << ": " << what << "\n";
  return code;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "Cauchy principal-value integrals by Chebyshev-U series with "
      "closed-form moments"};
  app.require_subcommand(1);

  IntegrateOptions iopt;
  StudyOptions sopt;
  BasisOptions bopt;

  CLI::App* integrate = app.add_subcommand(
      "integrate", "Integrate one expression and report the result");
  integrate->add_option("--expr", iopt.expr_text, "Integrand formula in x")
      ->required();
  integrate->add_option("--interval", iopt.interval, "Interval endpoints a b")
      ->expected(2);
  integrate
      ->add_option("--singularity", iopt.singularity,
                   "Singularity location s, strictly inside (a, b)")
      ->required();
  integrate->add_option("--order", iopt.order,
                        "Declared singularity order p (0 < p <= 1)");
  integrate->add_option("--degree", iopt.degree, "Expansion degree n");
  integrate->add_option("--nodes", iopt.nodes,
                        "Projection node count M (even) or 'auto'");
  integrate->add_flag("--oracle", iopt.with_oracle,
                      "Also run the excision oracle and report discrepancy");
  integrate->add_option("--format", iopt.format, "Output format")
      ->check(CLI::IsMember({"text", "json"}));

  CLI::App* study = app.add_subcommand(
      "study", "Convergence study over a degree sweep, CSV output");
  study->add_option("--expr", sopt.expr_text, "Integrand formula in x")
      ->required();
  study->add_option("--interval", sopt.interval, "Interval endpoints a b")
      ->expected(2);
  study
      ->add_option("--singularity", sopt.singularity,
                   "Singularity location s, strictly inside (a, b)")
      ->required();
  study->add_option("--order", sopt.order,
                    "Declared singularity order p (0 < p <= 1)");
  study
      ->add_option("--degrees", sopt.degrees,
                   "Geometric sweep <start>:<stop>:x<factor>, e.g. 4:256:x2")
      ->required();
  study->add_option("--out", sopt.out, "Output path, or - for stdout");

  CLI::App* basis =
      app.add_subcommand("basis", "Table of exact U-basis moments");
  basis->add_option("--max-degree", bopt.max_degree, "Largest degree to print")
      ->required();
  basis->add_option("--format", bopt.format, "Output format")
      ->check(CLI::IsMember({"text", "json"}));

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cerr << "error: " << e.get_name() << ": " << e.what() << "\n";
    return 2;
  }

  try {
    if (integrate->parsed()) return run_integrate(iopt);
    if (study->parsed()) return run_study(sopt);
    return run_basis(bopt);
  } catch (const FlagError& e) {
    return fail(2, e.flag, "ArgumentError", e.message);
  } catch (const chebpv::expr::ParseError& e) {
    return fail(2, "--expr", "ParseError", e.what());
  } catch (const chebpv::HypersingularUnsupported& e) {
    return fail(2, "--order", "HypersingularUnsupported", e.what());
  } catch (const chebpv::EndpointSingularity& e) {
    return fail(2, "--singularity", "EndpointSingularity", e.what());
  } catch (const chebpv::InvalidInterval& e) {
    return fail(2, "--interval", "InvalidInterval", e.what());
  } catch (const chebpv::NonFiniteSample& e) {
    return fail(3, "--expr", "NonFiniteSample", e.what());
  } catch (const chebpv::ToleranceNotMet& e) {
    return fail(3, "--expr", "ToleranceNotMet", e.what());
  } catch (const chebpv::ArgumentError& e) {
    return fail(2, "--degree/--nodes", "ArgumentError", e.what());
  } catch (const chebpv::Error& e) {
    return fail(2, "", "Error", e.what());
  }
}
