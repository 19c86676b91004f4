/*
   Copyright 2026 The intpoly authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#include "cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <future>
#include <optional>
#include <ostream>
#include <sstream>

#include "intpoly/json_io.hpp"

namespace intpoly::cli {

namespace {

using nlohmann::json;

constexpr int kOk = 0;
constexpr int kNegative = 1;
constexpr int kUsage = 2;

struct Options {
  std::string domain = "Z";
  std::string format = "json";
  std::string output;
  std::string poly;
  std::string poly_file;
  std::string input;
  std::string qs = "2";
  long upto = 10;
  long n = 0;
  long depth = 2;
  long maxdeg = 10;
  long bound = 20;
  long kmax = 10;
  long nmax = 20;
  long jobs = 1;
  std::string disc;
};

int json_indent(const Options& opt) { return opt.format == "pretty" ? 2 : -1; }

void emit(const Options& opt, std::ostream& out, const std::string& text) {
  if (!opt.output.empty()) {
    std::ofstream f(opt.output);
    if (!f) throw std::runtime_error("cannot open output file " + opt.output);
    f << text << "\n";
    return;
  }
  out << text << "\n";
}

std::string read_file(const std::string& path) {
  std::ifstream f(path);
  if (!f) throw std::invalid_argument("cannot read file " + path);
  std::ostringstream ss;
  ss << f.rdbuf();
  return ss.str();
}

std::vector<Rational> parse_inline_coeffs(const std::string& text) {
  std::vector<Rational> out;
  std::string token;
  std::istringstream ss(text);
  while (std::getline(ss, token, ',')) {
    size_t a = token.find_first_not_of(" \t");
    size_t b = token.find_last_not_of(" \t");
    if (a == std::string::npos)
      throw std::invalid_argument("empty coefficient in polynomial list");
    out.emplace_back(token.substr(a, b - a + 1));
  }
  if (out.empty()) throw std::invalid_argument("empty polynomial");
  return out;
}

std::vector<BigInt> parse_q_list(const std::string& text) {
  std::vector<BigInt> out;
  std::string token;
  std::istringstream ss(text);
  while (std::getline(ss, token, ',')) out.emplace_back(token);
  if (out.empty()) throw std::invalid_argument("empty q list");
  return out;
}

// Reads the polynomial for a domain from --poly or --poly-file.
template <class D>
auto load_poly(const D& dom, const Options& opt) {
  using P = Poly<typename D::Field>;
  if (!opt.poly_file.empty()) {
    std::string text = read_file(opt.poly_file);
    if constexpr (std::is_same_v<D, FpTDomain>) {
      return parse_poly_fpt(text, dom);
    } else if constexpr (std::is_same_v<D, QuadOrderDomain>) {
      return parse_poly_quad(text, dom);
    } else {
      return parse_poly_q(text, dom.spec());
    }
  }
  if (opt.poly.empty())
    throw std::invalid_argument("missing --poly or --poly-file");
  std::vector<Rational> rats = parse_inline_coeffs(opt.poly);
  if constexpr (std::is_same_v<D, FpTDomain>) {
    throw std::invalid_argument(
        "inline --poly is not supported over FpT; use --poly-file");
  } else if constexpr (std::is_same_v<D, QuadOrderDomain>) {
    std::vector<QuadElem> cs;
    for (const auto& r : rats) cs.emplace_back(r, Rational(0), dom.d());
    return P(dom.field(), std::move(cs));
  } else {
    return P(dom.field(), std::move(rats));
  }
}

json obstruction_json(const PolyaObstruction& ob) {
  return json{{"ok", false},
              {"obstruction", json{{"q", ob.q.str()}, {"info", ob.info}}}};
}

int cmd_basis(const Options& opt, std::ostream& out) {
  DomainSpec spec = DomainSpec::parse(opt.domain);
  return with_domain(spec, [&](auto dom) {
    auto outcome = build_regular_basis(dom, static_cast<int>(opt.upto));
    if (!outcome.ok()) {
      emit(opt, out, obstruction_json(*outcome.obstruction).dump(
                         json_indent(opt) < 0 ? -1 : json_indent(opt)));
      return kNegative;
    }
    emit(opt, out, to_json(*outcome.basis, json_indent(opt)));
    return kOk;
  });
}

int cmd_membership(const Options& opt, std::ostream& out) {
  DomainSpec spec = DomainSpec::parse(opt.domain);
  return with_domain(spec, [&](auto dom) {
    auto f = load_poly(dom, opt);
    MembershipResult r = is_member(dom, f);
    emit(opt, out, to_json(r, json_indent(opt)));
    return r.member ? kOk : kNegative;
  });
}

int cmd_expand(const Options& opt, std::ostream& out) {
  DomainSpec spec = DomainSpec::parse(opt.domain);
  return with_domain(spec, [&](auto dom) {
    auto f = load_poly(dom, opt);
    long upto = std::max<long>(opt.upto, f.degree());
    auto outcome = build_regular_basis(dom, static_cast<int>(upto));
    if (!outcome.ok()) {
      emit(opt, out, obstruction_json(*outcome.obstruction).dump(
                         json_indent(opt) < 0 ? -1 : json_indent(opt)));
      return kNegative;
    }
    auto expansion = expand_in_basis(f, *outcome.basis, dom);
    emit(opt, out, to_json(expansion, json_indent(opt)));
    return expansion.ok ? kOk : kNegative;
  });
}

int cmd_ideals(const Options& opt, std::ostream& out) {
  DomainSpec spec = DomainSpec::parse(opt.domain);
  IdealReport report = ideal_report(spec, BigInt(opt.n));
  emit(opt, out, to_json(report, json_indent(opt)));
  return kOk;
}

int cmd_pog(const Options& opt, std::ostream& out) {
  DomainSpec spec = DomainSpec::parse(opt.domain);
  if (spec.kind != DomainKind::kImagQuadraticOrder)
    throw std::invalid_argument("pog requires --domain Quad:d");
  PogResult pog = polya_ostrowski_group(spec.param);
  emit(opt, out, to_json(pog, json_indent(opt)));
  return pog.is_trivial ? kOk : kNegative;
}

int cmd_classgroup(const Options& opt, std::ostream& out) {
  if (opt.disc.empty()) throw std::invalid_argument("missing --disc");
  ClassGroupTable table = class_group(BigInt(opt.disc));
  emit(opt, out, to_json(table, json_indent(opt)));
  return kOk;
}

int cmd_verify_presentation(const Options& opt, std::ostream& out) {
  DomainSpec spec = DomainSpec::parse(opt.domain);
  if (spec.kind != DomainKind::kLocalizedIntegers)
    throw std::invalid_argument("verify-presentation requires --domain Zloc:p");
  ZLocalDomain dom(spec.param);
  LocalPresentationReport report = verify_local_presentation(dom, opt.maxdeg);
  emit(opt, out, to_json(report, json_indent(opt)));
  return report.pass() ? kOk : kNegative;
}

int cmd_verify_relations(const Options& opt, std::ostream& out) {
  DomainSpec spec = DomainSpec::parse(opt.domain);
  std::vector<BigInt> qs = parse_q_list(opt.qs);
  return with_domain(spec, [&](auto dom) {
    GlobalRelationsReport report =
        verify_global_relations(dom, qs, static_cast<int>(opt.depth));
    emit(opt, out, to_json(report, json_indent(opt)));
    return report.pass() ? kOk : kNegative;
  });
}

int cmd_wpc(const Options& opt, std::ostream& out) {
  if (opt.input.empty()) throw std::invalid_argument("missing --input");
  FiniteAlgebra algebra = parse_finite_algebra(read_file(opt.input));
  WpcReport report = check_wpc_over_Z(algebra);
  json suites = json::array();
  for (const auto& verdict : report.primes) {
    ConditionSuite suite = check_condition_suite(algebra, verdict.p);
    suites.push_back(json::parse(to_json(suite)));
  }
  json doc{{"wpc", json::parse(to_json(report))}, {"suites", suites}};
  int indent = json_indent(opt);
  emit(opt, out, indent < 0 ? doc.dump() : doc.dump(indent));
  return report.overall ? kOk : kNegative;
}

int cmd_split_analysis(const Options& opt, std::ostream& out) {
  DomainSpec spec = DomainSpec::parse(opt.domain);
  if (spec.kind != DomainKind::kImagQuadraticOrder)
    throw std::invalid_argument("split-analysis requires --domain Quad:d");
  SplitAnalysisReport report =
      numthm_split_analysis(spec.param, BigInt(opt.bound));
  emit(opt, out, to_json(report, json_indent(opt)));
  return report.all_verified ? kOk : kNegative;
}

int cmd_w_table(const Options& opt, std::ostream& out) {
  if (opt.kmax < 2 || opt.nmax < 0)
    throw std::invalid_argument("w-table needs --kmax >= 2 and --nmax >= 0");
  // Rows are computed independently; --jobs only changes scheduling, the
  // merged output is always in row order.
  long jobs = std::max<long>(1, opt.jobs);
  auto row_values = [&](long n) {
    std::vector<long> row;
    row.reserve(static_cast<size_t>(opt.kmax - 1));
    for (long k = 2; k <= opt.kmax; ++k)
      row.push_back(factorial_exponent(k, n));
    return row;
  };
  std::vector<std::vector<long>> rows(static_cast<size_t>(opt.nmax) + 1);
  std::vector<std::future<void>> futures;
  std::atomic<long> next{0};
  for (long j = 0; j < jobs; ++j) {
    futures.push_back(std::async(std::launch::async, [&]() {
      for (long n = next.fetch_add(1); n <= opt.nmax; n = next.fetch_add(1))
        rows[static_cast<size_t>(n)] = row_values(n);
    }));
  }
  for (auto& f : futures) f.get();

  if (opt.format == "csv") {
    std::ostringstream csv;
    csv << "n";
    for (long k = 2; k <= opt.kmax; ++k) csv << ",w_" << k;
    for (long n = 0; n <= opt.nmax; ++n) {
      csv << "\n" << n;
      for (long v : rows[static_cast<size_t>(n)]) csv << "," << v;
    }
    emit(opt, out, csv.str());
    return kOk;
  }
  json doc{{"kmax", opt.kmax}, {"nmax", opt.nmax}, {"rows", rows}};
  int indent = json_indent(opt);
  emit(opt, out, indent < 0 ? doc.dump() : doc.dump(indent));
  return kOk;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out,
            std::ostream& err) {
  CLI::App app{"exact arithmetic for integer-valued polynomial rings"};
  app.require_subcommand(1);
  Options opt;

  auto add_common = [&](CLI::App* cmd) {
    cmd->add_option("--format", opt.format, "json, csv, or pretty")
        ->check(CLI::IsMember({"json", "csv", "pretty"}));
    cmd->add_option("--output", opt.output, "write to file instead of stdout");
    cmd->add_option("--jobs", opt.jobs, "worker threads for sweeps");
  };

  auto* basis = app.add_subcommand("basis", "regular basis G_0..G_N");
  basis->add_option("--domain", opt.domain)->required();
  basis->add_option("--upto", opt.upto)->required();
  add_common(basis);

  auto* membership =
      app.add_subcommand("membership", "decide f in Int(D) with witness");
  membership->add_option("--domain", opt.domain)->required();
  membership->add_option("--poly", opt.poly,
                         "comma-separated exact rationals, ascending degree");
  membership->add_option("--poly-file", opt.poly_file, "polynomial JSON file");
  add_common(membership);

  auto* expand =
      app.add_subcommand("expand", "coefficients of f in the regular basis");
  expand->add_option("--domain", opt.domain)->required();
  expand->add_option("--poly", opt.poly);
  expand->add_option("--poly-file", opt.poly_file);
  expand->add_option("--upto", opt.upto);
  add_common(expand);

  auto* ideals = app.add_subcommand(
      "ideals", "characteristic and factorial ideals in factored form");
  ideals->add_option("--domain", opt.domain)->required();
  ideals->add_option("--n", opt.n)->required();
  add_common(ideals);

  auto* pog =
      app.add_subcommand("pog", "Polya-Ostrowski group of a quadratic order");
  pog->add_option("--domain", opt.domain)->required();
  add_common(pog);

  auto* classgroup =
      app.add_subcommand("classgroup", "reduced forms and composition table");
  classgroup->add_option("--disc", opt.disc)->required();
  add_common(classgroup);

  auto* vp = app.add_subcommand("verify-presentation",
                                "bounded-degree local presentation certificate");
  vp->add_option("--domain", opt.domain)->required();
  vp->add_option("--maxdeg", opt.maxdeg)->required();
  add_common(vp);

  auto* vr = app.add_subcommand("verify-relations",
                                "exact Fermat-tower relation identities");
  vr->add_option("--domain", opt.domain)->required();
  vr->add_option("--q", opt.qs, "comma-separated prime powers")->required();
  vr->add_option("--depth", opt.depth)->required();
  add_common(vr);

  auto* wpc = app.add_subcommand(
      "wpc", "weak polynomial completeness of a finite Z-algebra");
  wpc->add_option("--input", opt.input, "FiniteAlgebra JSON file")->required();
  add_common(wpc);

  auto* split = app.add_subcommand("split-analysis",
                                   "split primes and localization data");
  split->add_option("--domain", opt.domain)->required();
  split->add_option("--bound", opt.bound)->required();
  add_common(split);

  auto* wt = app.add_subcommand("w-table", "table of w_k(n) exponents");
  wt->add_option("--kmax", opt.kmax)->required();
  wt->add_option("--nmax", opt.nmax)->required();
  add_common(wt);

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "usage error: " << e.what() << "\n";
    return kUsage;
  }

  try {
    if (basis->parsed()) return cmd_basis(opt, out);
    if (membership->parsed()) return cmd_membership(opt, out);
    if (expand->parsed()) return cmd_expand(opt, out);
    if (ideals->parsed()) return cmd_ideals(opt, out);
    if (pog->parsed()) return cmd_pog(opt, out);
    if (classgroup->parsed()) return cmd_classgroup(opt, out);
    if (vp->parsed()) return cmd_verify_presentation(opt, out);
    if (vr->parsed()) return cmd_verify_relations(opt, out);
    if (wpc->parsed()) return cmd_wpc(opt, out);
    if (split->parsed()) return cmd_split_analysis(opt, out);
    if (wt->parsed()) return cmd_w_table(opt, out);
    err << "usage error: no subcommand\n";
    return kUsage;
  } catch (const budget_error& e) {
    err << "budget error: " << e.what() << "\n";
    return kUsage;
  } catch (const std::invalid_argument& e) {
    err << "usage error: " << e.what() << "\n";
    return kUsage;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  }
}

}  // namespace intpoly::cli
