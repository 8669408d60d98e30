// regext: command-line front end.
//
// Exit codes: 0 success, 1 verification failure, 2 usage error, 3 budget exceeded.
// Data goes to stdout (or --output), diagnostics to stderr.

#include "regext/classifier.hpp"
#include "regext/errors.hpp"
#include "regext/literals.hpp"
#include "regext/report.hpp"

#include <CLI11.hpp>

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <thread>

using namespace regext;

namespace {

enum Exit { kOk = 0, kVerificationFailure = 1, kUsage = 2, kBudget = 3 };

struct Options {
  std::string type;
  std::string types;
  std::string subset;
  std::string weight;
  std::string lambda;
  std::string eta;
  int bound = 1;
  std::int64_t dim_cap = kDefaultOracleCap;
  int enum_cap = kDefaultEnumerationCap;
  std::string mode = "full";
  std::string output;
  std::string format = "json";
};

struct Result {
  Json json;
  std::string text;
  std::string csv;
  int code = kOk;
};

int worker_count() {
  int n = static_cast<int>(std::max(1u, std::thread::hardware_concurrency()));
  if (const char* env = std::getenv("REGEXT_THREADS")) {
    const int limit = std::atoi(env);
    if (limit >= 1) n = std::min(n, limit);
  }
  return n;
}

Caps caps_from(const Options& o) {
  Caps caps;
  caps.oracle_dim = o.dim_cap;
  caps.enumeration_roots = o.enum_cap;
  return caps;
}

std::string path_text(const SimpleRootPath& p) { return format_path(p); }

std::string certificate_text(const WitnessCertificate& c, const CertificateValidation& v) {
  std::ostringstream out;
  if (c.kind == CertificateKind::wide) {
    out << "  wide: closure(T u -T) = Phi";
  } else {
    out << "  " << format_weight(*c.lambda) << "  " << to_string(c.kind) << "  l=" << *c.chosen_simple + 1
        << "  path " << path_text(*c.path) << "  witness " << format_weight(*c.witness_weight);
  }
  out << "  [" << (v.valid() ? "valid" : "INVALID") << ", "
      << (c.kind == CertificateKind::wide ? "closure" : to_string(v.method)) << "]\n";
  return out.str();
}

Result cmd_roots(const Options& o) {
  const RootSystem sys(parse_type(o.type));
  Result r;
  Json roots = Json::array();
  std::ostringstream text;
  text << sys.type().name() << ": " << sys.size() << " roots (" << sys.positive_count() << " positive)\n";
  r.csv = "index,root,height,positive\n";
  for (int i = 0; i < sys.size(); ++i) {
    const Root& a = sys.root(i);
    roots.push_back(Json{{"index", i}, {"root", format_root(a)}, {"height", a.height()}});
    text << "  " << i << "  " << format_root(a) << "\n";
    r.csv += std::to_string(i) + ",\"" + format_root(a) + "\"," + std::to_string(a.height()) + "," +
             (sys.is_positive(i) ? "1" : "0") + "\n";
  }
  r.json = Json{{"system", sys.type().name()},
                {"count", sys.size()},
                {"positive_count", sys.positive_count()},
                {"roots", std::move(roots)}};
  r.text = text.str();
  return r;
}

Result cmd_closure(const Options& o) {
  const RootSystem sys(parse_type(o.type));
  const RootSubset s = parse_subset(sys, o.subset);
  const RootSubset c = closure(s);
  const ClosedDecomposition dec = decompose(c);
  Result r;
  r.json = Json{{"system", sys.type().name()},
                {"input", format_subset(s)},
                {"input_closed", is_closed(s)},
                {"closure", format_subset(c)},
                {"closure_size", c.size()},
                {"symmetric_part", format_subset(dec.symmetric)},
                {"special_part", format_subset(dec.special)},
                {"kind", to_string(dec.kind)}};
  r.text = "closure: {" + format_subset(c) + "}  (" + std::to_string(c.size()) + " roots, " + to_string(dec.kind) +
           ")\n";
  r.csv = "input,closure,size,kind\n\"" + format_subset(s) + "\",\"" + format_subset(c) + "\"," +
          std::to_string(c.size()) + "," + to_string(dec.kind) + "\n";
  return r;
}

Result cmd_classify(const Options& o) {
  LieContext ctx(parse_type(o.type));
  const RootSubset T = parse_subset(ctx.system(), o.subset);
  const Caps caps = caps_from(o);
  const auto grid = dominant_weights_up_to(ctx.system(), o.bound);
  const SubsetVerdict v = classify_subset(ctx, T, grid, caps);
  Result r;
  r.json = classification_json(ctx.system().type().name(), v, grid, caps, false);
  std::ostringstream text;
  text << ctx.system().type().name() << "  T = {" << format_subset(T) << "}  " << to_string(v.kind) << "\n"
       << "verdict: " << to_string(v.verdict) << "\n";
  for (std::size_t i = 0; i < v.certificates.size(); ++i) text << certificate_text(v.certificates[i], v.validations[i]);
  for (const auto& p : v.problems) text << "  problem: " << p << "\n";
  r.text = text.str();
  r.csv = "subset,verdict,certificates,oracle_checks\n\"" + format_subset(T) + "\"," + to_string(v.verdict) + "," +
          std::to_string(v.certificates.size()) + "," + std::to_string(v.oracle_checks.size()) + "\n";
  r.code = v.verdict == Verdict::violation ? kVerificationFailure : kOk;
  return r;
}

Result cmd_witness(const Options& o) {
  LieContext ctx(parse_type(o.type));
  const RootSubset T = parse_subset(ctx.system(), o.subset);
  const Weight lambda = parse_weight(o.weight, ctx.system().rank());
  const WitnessCertificate cert = narrow_witness(ctx.diagram(), T, lambda);
  const CertificateValidation v = validate_certificate(ctx, cert, caps_from(o));
  Result r;
  r.json = to_json(cert, v);
  r.json["system"] = ctx.system().type().name();
  r.json["subset"] = format_subset(T);
  r.text = certificate_text(cert, v);
  r.csv = "lambda,kind,l,path,witness,valid,method\n" + format_weight(lambda) + "," + to_string(cert.kind) + "," +
          std::to_string(*cert.chosen_simple + 1) + ",\"" + path_text(*cert.path) + "\"," +
          format_weight(*cert.witness_weight) + "," + (v.valid() ? "1" : "0") + "," + to_string(v.method) + "\n";
  r.code = v.valid() ? kOk : kVerificationFailure;
  return r;
}

Result cmd_verify(const Options& o) {
  LieContext ctx(parse_type(o.type));
  VerifyOptions opts;
  opts.caps = caps_from(o);
  opts.mode = o.mode == "full" ? EnumerationMode::full : EnumerationMode::conjugacy_reduced;
  opts.threads = worker_count();
  const ClassificationReport report = verify_regular_extreme(ctx, o.bound, opts);
  std::cerr << "verify-extreme " << report.system << ": " << report.verdicts.size() << " subsets in "
            << report.seconds << " s\n";
  Result r;
  r.json = to_json(report);
  r.csv = to_csv(report);
  std::ostringstream text;
  text << report.system << "  bound " << report.coeff_bound << "  grid " << report.grid.size() << " weights  mode "
       << to_string(report.mode) << "\n"
       << "closed subsets: " << report.verdicts.size() << "  wide " << report.count(Verdict::wide) << "  narrow "
       << report.count(Verdict::narrow) << "  violations " << report.count(Verdict::violation) << "\n"
       << "oracle checks: " << report.oracle_checks() << "  disagreements " << report.oracle_disagreements() << "\n"
       << "dichotomy " << (report.dichotomy_holds() ? "holds" : "NOT verified") << "\n";
  if (report.incomplete) text << "incomplete: " << report.incomplete_reason << "\n";
  r.text = text.str();
  if (report.count(Verdict::violation) > 0) {
    r.code = kVerificationFailure;
  } else if (report.incomplete) {
    std::cerr << "incomplete: " << report.incomplete_reason << "\n";
    r.code = kBudget;
  }
  return r;
}

Result cmd_oracle(const Options& o) {
  LieContext ctx(parse_type(o.type));
  const RootSubset T = parse_subset(ctx.system(), o.subset);
  const Weight lambda = parse_weight(o.weight, ctx.system().rank());
  const OracleCheck check = oracle_check(ctx, T, lambda, o.dim_cap);
  Result r;
  r.json = to_json(check);
  r.json["system"] = ctx.system().type().name();
  r.json["subset"] = format_subset(T);
  r.text = "dim V = " + std::to_string(check.module_dim) + ", span dim " + std::to_string(check.span_dim) +
           ", lambda-wide " + (check.lambda_wide ? "yes" : "no") + ", commutant " +
           std::to_string(check.commutant.commutant_dim) + " (radical " + std::to_string(check.commutant.radical_dim) +
           "), indecomposable " + (check.commutant.indecomposable() ? "yes" : "no") + "\n";
  r.csv = "lambda,module_dim,span_dim,lambda_wide,commutant_dim,radical_dim,indecomposable\n" +
          format_weight(lambda) + "," + std::to_string(check.module_dim) + "," + std::to_string(check.span_dim) + "," +
          (check.lambda_wide ? "1" : "0") + "," + std::to_string(check.commutant.commutant_dim) + "," +
          std::to_string(check.commutant.radical_dim) + "," + (check.commutant.indecomposable() ? "1" : "0") + "\n";
  r.code = check.agree() ? kOk : kVerificationFailure;
  return r;
}

Result cmd_nonsimple(const Options& o) {
  std::vector<LieType> types;
  std::stringstream ss(o.types);
  for (std::string item; std::getline(ss, item, ',');) types.push_back(parse_type(item));
  if (types.size() < 2) throw std::invalid_argument("--types needs at least two comma-separated types");
  const RootSystem first(types[0]);
  const RootSystem second(types[1]);
  const Weight lambda = parse_weight(o.lambda, first.rank());
  const Weight eta = parse_weight(o.eta, second.rank());
  const NonsimpleReport rep = nonsimple_demo(types, lambda, eta, o.dim_cap);
  Result r;
  r.json = to_json(rep);
  std::ostringstream text;
  text << "V: dim " << rep.dim_v << ", commutant " << rep.v_commutant.commutant_dim << " (radical "
       << rep.v_commutant.radical_dim << "), indecomposable " << (rep.not_narrow() ? "yes" : "no") << "\n"
       << "W: dim " << rep.dim_w << ", first factor acts trivially " << (rep.w_first_factor_acts_trivially ? "yes" : "no")
       << ", trivial summands " << rep.w_trivial_summands << "\n"
       << "first factor neither narrow nor wide: " << (rep.neither_narrow_nor_wide() ? "yes" : "no") << "\n";
  r.text = text.str();
  r.csv = "dim_v,dim_w,v_indecomposable,w_trivial_summands,neither\n" + std::to_string(rep.dim_v) + "," +
          std::to_string(rep.dim_w) + "," + (rep.not_narrow() ? "1" : "0") + "," +
          std::to_string(rep.w_trivial_summands) + "," + (rep.neither_narrow_nor_wide() ? "1" : "0") + "\n";
  r.code = rep.neither_narrow_nor_wide() && rep.factors_commute ? kOk : kVerificationFailure;
  return r;
}

Result cmd_enumerate(const Options& o) {
  const RootSystem sys(parse_type(o.type));
  std::vector<RootSubset> subsets = enumerate_closed(sys, o.enum_cap);
  std::vector<int> orbit_sizes;
  if (o.mode != "full") {
    std::vector<RootSubset> reps;
    std::vector<bool> covered(subsets.size(), false);
    for (std::size_t i = 0; i < subsets.size(); ++i) {
      if (covered[i]) continue;
      const auto orbit = weyl_orbit(subsets[i]);
      RootSubset best = orbit.front();
      for (const auto& x : orbit) {
        if (lex_less(x, best)) best = x;
        for (std::size_t j = i; j < subsets.size(); ++j) {
          if (!covered[j] && subsets[j] == x) covered[j] = true;
        }
      }
      reps.push_back(best);
      orbit_sizes.push_back(static_cast<int>(orbit.size()));
    }
    subsets = std::move(reps);
  }
  Result r;
  Json list = Json::array();
  std::ostringstream text;
  r.csv = "subset,size,kind,wide\n";
  for (std::size_t i = 0; i < subsets.size(); ++i) {
    const auto& s = subsets[i];
    const ClosedDecomposition dec = decompose(s);
    const bool wide = is_wide(s).wide;
    Json item{{"subset", format_subset(s)}, {"size", s.size()}, {"kind", to_string(dec.kind)}, {"wide", wide}};
    if (!orbit_sizes.empty()) item["orbit_size"] = orbit_sizes[i];
    list.push_back(std::move(item));
    text << "{" << format_subset(s) << "}  " << to_string(dec.kind) << (wide ? "  wide" : "") << "\n";
    r.csv += "\"" + format_subset(s) + "\"," + std::to_string(s.size()) + "," + to_string(dec.kind) + "," +
             (wide ? "1" : "0") + "\n";
  }
  r.json = Json{{"system", sys.type().name()},
                {"mode", o.mode},
                {"count", subsets.size()},
                {"subsets", std::move(list)}};
  r.text = text.str();
  return r;
}

void emit(const Result& r, const Options& o) {
  std::string data;
  if (o.format == "json") {
    data = r.json.dump(2) + "\n";
  } else if (o.format == "csv") {
    data = r.csv;
  } else {
    data = r.text;
  }
  if (o.output.empty()) {
    std::cout << data;
  } else {
    std::ofstream out(o.output, std::ios::binary);
    if (!out) throw std::invalid_argument("cannot write '" + o.output + "'");
    out << data;
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Regular subalgebras of simple Lie algebras: narrow / wide classification"};
  app.require_subcommand(1);
  Options o;

  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--output,-o", o.output, "Write the report here instead of stdout");
    sub->add_option("--format", o.format, "Output format")->check(CLI::IsMember({"json", "csv", "text"}));
  };
  auto add_type = [&](CLI::App* sub) { sub->add_option("--type,-t", o.type, "Lie type, e.g. B3")->required(); };
  auto add_dim_cap = [&](CLI::App* sub) {
    sub->add_option("--dim-cap", o.dim_cap, "Largest module dimension built for oracle checks")
        ->check(CLI::PositiveNumber);
  };

  auto* roots = app.add_subcommand("roots", "List the roots of a system");
  add_type(roots);
  add_common(roots);

  auto* clos = app.add_subcommand("closure", "Closure of a root subset");
  add_type(clos);
  clos->add_option("--subset,-s", o.subset, "Subset literal or @file.json")->required();
  add_common(clos);

  auto* classify = app.add_subcommand("classify", "Wide / narrow verdict for one closed subset");
  add_type(classify);
  classify->add_option("--subset,-s", o.subset, "Subset literal or @file.json")->required();
  classify->add_option("--bound", o.bound, "Coordinate bound for the weight grid")->check(CLI::PositiveNumber);
  add_dim_cap(classify);
  add_common(classify);

  auto* witness = app.add_subcommand("witness", "Narrowness witness for one subset and weight");
  add_type(witness);
  witness->add_option("--subset,-s", o.subset, "Subset literal or @file.json")->required();
  witness->add_option("--weight,-w", o.weight, "Highest weight, e.g. w:1,0")->required();
  add_dim_cap(witness);
  add_common(witness);

  auto* verify = app.add_subcommand("verify-extreme", "Check the wide / narrow dichotomy for every closed subset");
  add_type(verify);
  verify->add_option("--bound", o.bound, "Coordinate bound for the weight grid")->check(CLI::PositiveNumber);
  add_dim_cap(verify);
  verify->add_option("--mode", o.mode, "Enumeration mode")->check(CLI::IsMember({"full", "reduced"}));
  verify->add_option("--enum-cap", o.enum_cap, "Largest root count enumerated")->check(CLI::PositiveNumber);
  add_common(verify);

  auto* oracle = app.add_subcommand("oracle-check", "Span test and commutant oracle for one subset and weight");
  add_type(oracle);
  oracle->add_option("--subset,-s", o.subset, "Subset literal or @file.json")->required();
  oracle->add_option("--weight,-w", o.weight, "Highest weight, e.g. w:1,0")->required();
  add_dim_cap(oracle);
  add_common(oracle);

  auto* nonsimple = app.add_subcommand("nonsimple-demo", "First factor of a semisimple algebra is neither narrow nor wide");
  nonsimple->add_option("--types", o.types, "Comma-separated simple factors, e.g. A1,A2")->required();
  nonsimple->add_option("--lambda", o.lambda, "Highest weight on the first factor")->required();
  nonsimple->add_option("--eta", o.eta, "Highest weight on the second factor")->required();
  add_dim_cap(nonsimple);
  add_common(nonsimple);

  auto* enumerate = app.add_subcommand("enumerate", "List closed subsets");
  add_type(enumerate);
  enumerate->add_option("--mode", o.mode, "Enumeration mode")->check(CLI::IsMember({"full", "reduced"}));
  enumerate->add_option("--enum-cap", o.enum_cap, "Largest root count enumerated")->check(CLI::PositiveNumber);
  add_common(enumerate);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kUsage;
  }

  try {
    Result r;
    if (*roots) r = cmd_roots(o);
    else if (*clos) r = cmd_closure(o);
    else if (*classify) r = cmd_classify(o);
    else if (*witness) r = cmd_witness(o);
    else if (*verify) r = cmd_verify(o);
    else if (*oracle) r = cmd_oracle(o);
    else if (*nonsimple) r = cmd_nonsimple(o);
    else r = cmd_enumerate(o);
    emit(r, o);
    if (r.code == kVerificationFailure) std::cerr << "verification failed\n";
    return r.code;
  } catch (const BudgetExceeded& e) {
    std::cerr << "budget exceeded: " << e.what() << "\n";
    return kBudget;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return kVerificationFailure;
  }
}
