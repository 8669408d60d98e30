#include "regext/classifier.hpp"

#include "regext/errors.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <limits>
#include <set>
#include <stdexcept>
#include <thread>
#include <unordered_set>

namespace regext {

// ---------------------------------------------------------------------------
// LieContext

LieContext::LieContext(const LieType& type)
    : sys_(std::make_unique<RootSystem>(type)),
      chevalley_(std::make_unique<ChevalleyBasis>(*sys_)),
      diagram_(std::make_unique<DynkinDiagram>(*sys_)) {}

std::int64_t LieContext::dimension(const Weight& lambda) {
  {
    std::lock_guard lock(mutex_);
    if (auto it = dims_.find(lambda); it != dims_.end()) return it->second;
  }
  const mpz_class d = sys_->weyl_dimension(lambda);
  const std::int64_t v = d.fits_slong_p() ? d.get_si() : std::numeric_limits<std::int64_t>::max();
  std::lock_guard lock(mutex_);
  dims_.emplace(lambda, v);
  return v;
}

std::shared_ptr<const ModuleRealization> LieContext::module(const Weight& lambda, std::int64_t cap) {
  {
    std::lock_guard lock(mutex_);
    if (auto it = modules_.find(lambda); it != modules_.end()) return it->second;
  }
  // Built outside the lock; a concurrent duplicate build is harmless.
  auto m = std::make_shared<const ModuleRealization>(build_module(*chevalley_, lambda, cap));
  std::lock_guard lock(mutex_);
  return modules_.emplace(lambda, std::move(m)).first->second;
}

std::shared_ptr<const Character> LieContext::character(const Weight& lambda, std::int64_t cap) {
  {
    std::lock_guard lock(mutex_);
    if (auto it = characters_.find(lambda); it != characters_.end()) return it->second;
  }
  auto c = std::make_shared<const Character>(expected_character(*sys_, lambda, cap));
  std::lock_guard lock(mutex_);
  return characters_.emplace(lambda, std::move(c)).first->second;
}

// ---------------------------------------------------------------------------
// Wideness

RootSubset symmetrize(const RootSubset& T) { return closure(T | T.negated()); }

WideResult is_wide(const RootSubset& T) {
  if (auto bad = closedness_violation(T)) {
    const RootSystem& sys = T.system();
    const int s = sys.sum_index(bad->first, bad->second);
    throw std::invalid_argument("subset is not closed: roots " + std::to_string(bad->first) + " and " +
                                std::to_string(bad->second) + " sum to root " + std::to_string(s) +
                                " outside the subset");
  }
  RootSubset sym = symmetrize(T);
  const bool wide = sym == RootSubset::full(T.system());
  return {wide, std::move(sym)};
}

namespace {

void check_lambda(const RootSystem& sys, const Weight& lambda) {
  if (static_cast<int>(lambda.coords.size()) != sys.rank()) throw std::invalid_argument("weight rank mismatch");
  if (!lambda.is_dominant()) throw std::invalid_argument("highest weight must be dominant");
}

}  // namespace

bool lambda_wide(LieContext& ctx, const RootSubset& T, const Weight& lambda, std::int64_t cap) {
  check_lambda(ctx.system(), lambda);
  const std::int64_t dim = ctx.dimension(lambda);
  if (dim > cap) {
    throw BudgetExceeded("lambda-wideness check needs dim V <= " + std::to_string(cap) + ", got " +
                         std::to_string(dim));
  }
  const auto m = ctx.module(lambda, cap);
  return subalgebra_span(*m, T).dimension == m->dimension();
}

// ---------------------------------------------------------------------------
// Certificates

std::string to_string(CertificateKind kind) {
  switch (kind) {
    case CertificateKind::wide: return "wide";
    case CertificateKind::narrow_case1: return "narrow_case1";
    case CertificateKind::narrow_case2: return "narrow_case2";
  }
  return "?";
}

std::string to_string(ValidationMethod m) { return m == ValidationMethod::module ? "module" : "criterion"; }

WitnessCertificate wide_certificate(const RootSubset& T) {
  auto [wide, sym] = is_wide(T);
  if (!wide) throw std::invalid_argument("subset is not wide");
  return {CertificateKind::wide, T, sym, std::nullopt, std::nullopt, std::nullopt, std::nullopt};
}

namespace {

int first_nonzero(const Weight& lambda) {
  for (std::size_t i = 0; i < lambda.coords.size(); ++i) {
    if (lambda.coords[i] != 0) return static_cast<int>(i);
  }
  return -1;
}

}  // namespace

WitnessCertificate narrow_witness(const DynkinDiagram& d, const RootSubset& T, const Weight& lambda) {
  const RootSystem& sys = d.system();
  check_lambda(sys, lambda);
  auto [wide, sym] = is_wide(T);
  if (wide) throw std::invalid_argument("subset is wide; no narrowness witness exists");
  const int l = first_nonzero(lambda);
  if (l < 0) throw std::invalid_argument("highest weight must be nonzero");

  WitnessCertificate cert{CertificateKind::narrow_case1, T, sym, lambda, l, std::nullopt, std::nullopt};
  if (!sym.contains(l)) {
    cert.path = SimpleRootPath{{l}};
    cert.witness_weight = lambda - sys.to_weight(sys.root(l));
    return cert;
  }
  cert.kind = CertificateKind::narrow_case2;
  cert.path = escape_path(l, sym, d);
  cert.witness_weight = lambda - sys.to_weight(path_sum(*cert.path, sys));
  return cert;
}

bool in_positive_cone(const Root& sigma, const std::vector<Root>& generators) {
  for (int c : sigma.coeffs) {
    if (c < 0) return false;
  }
  for (const auto& g : generators) {
    if (!g.is_positive()) throw std::invalid_argument("cone generators must be positive roots");
  }
  // Reachability from zero by adding generators, staying below sigma.
  std::set<std::vector<int>> seen{std::vector<int>(sigma.coeffs.size(), 0)};
  std::vector<std::vector<int>> stack(seen.begin(), seen.end());
  while (!stack.empty()) {
    auto v = std::move(stack.back());
    stack.pop_back();
    if (v == sigma.coeffs) return true;
    for (const auto& g : generators) {
      std::vector<int> w = v;
      bool ok = true;
      for (std::size_t i = 0; i < w.size() && ok; ++i) {
        w[i] += g.coeffs[i];
        ok = w[i] <= sigma.coeffs[i];
      }
      if (ok && seen.insert(w).second) stack.push_back(std::move(w));
    }
  }
  return false;
}

CertificateValidation validate_certificate(LieContext& ctx, const WitnessCertificate& cert, const Caps& caps) {
  const RootSystem& sys = ctx.system();
  CertificateValidation out;
  auto fail = [&](std::string why) {
    out.detail = std::move(why);
    return out;
  };

  if (&cert.subset.system() != &sys) return fail("certificate belongs to another root system");
  if (!is_closed(cert.subset)) return fail("subset is not closed");
  const RootSubset sym = symmetrize(cert.subset);
  if (!(sym == cert.symmetrized)) return fail("recorded symmetrization differs from closure(T u -T)");
  const bool wide = sym == RootSubset::full(sys);

  if (cert.kind == CertificateKind::wide) {
    if (!wide) return fail("closure(T u -T) is not the whole root system");
    out.structure_ok = out.witness_is_weight = out.witness_outside_span = true;
    out.detail = "closure(T u -T) = Phi";
    return out;
  }

  if (wide) return fail("narrow certificate for a wide subset");
  if (!cert.lambda || !cert.chosen_simple || !cert.path || !cert.witness_weight) {
    return fail("narrow certificate is missing fields");
  }
  const Weight& lambda = *cert.lambda;
  if (static_cast<int>(lambda.coords.size()) != sys.rank() || !lambda.is_dominant()) {
    return fail("highest weight is not dominant");
  }
  const int l = first_nonzero(lambda);
  if (l < 0) return fail("highest weight is zero");
  if (*cert.chosen_simple != l) return fail("chosen simple root is not the least index with m_l > 0");

  const SimpleRootPath& path = *cert.path;
  try {
    validate_path(path, ctx.diagram());
  } catch (const std::invalid_argument& e) {
    return fail(std::string("path: ") + e.what());
  }
  if (path.vertices.front() != l) return fail("path does not start at the chosen simple root");
  if (sym.contains(l)) {
    if (cert.kind != CertificateKind::narrow_case2) return fail("a_l lies in closure(T u -T); expected case 2");
    if (!(path == escape_path(l, sym, ctx.diagram()))) return fail("path is not the canonical escape path");
    for (std::size_t k = 0; k + 1 < path.vertices.size(); ++k) {
      if (!sym.contains(path.vertices[k])) return fail("interior path vertex outside closure(T u -T)");
    }
    if (sym.contains(path.vertices.back())) return fail("path end lies in closure(T u -T)");
  } else {
    if (cert.kind != CertificateKind::narrow_case1) return fail("a_l lies outside closure(T u -T); expected case 1");
    if (path.length() != 1) return fail("case 1 path must be the single vertex l");
  }
  const Root sigma = path_sum(path, sys);
  if (!sys.find(sigma)) return fail("path sum is not a root");
  if (!(lambda - sys.to_weight(sigma) == *cert.witness_weight)) return fail("witness is not lambda minus the path sum");
  out.structure_ok = true;

  const Weight& witness = *cert.witness_weight;
  const std::int64_t dim = ctx.dimension(lambda);
  if (dim <= caps.character_dim) {
    out.witness_is_weight = ctx.character(lambda, caps.character_dim)->weights.contains(witness);
  } else {
    out.witness_is_weight = is_weight_of(sys, lambda, witness);
  }
  if (!out.witness_is_weight) return fail("witness is not a weight of V(lambda)");

  if (dim <= caps.oracle_dim) {
    out.method = ValidationMethod::module;
    const auto m = ctx.module(lambda, caps.oracle_dim);
    if (!m->space_of(witness)) return fail("witness weight space missing from the built module");
    const SubmoduleSpan span = subalgebra_span(*m, cert.subset);
    out.witness_outside_span = !span.has_weight(witness);
    out.detail = "span dim " + std::to_string(span.dimension) + " of " + std::to_string(m->dimension());
  } else {
    out.method = ValidationMethod::criterion;
    std::vector<Root> cone;
    for (int idx : sym.indices()) {
      if (sys.is_positive(idx)) cone.push_back(sys.root(idx));
    }
    out.witness_outside_span = !in_positive_cone(sigma, cone);
    out.detail = "path sum outside the positive cone of closure(T u -T)";
  }
  if (!out.witness_outside_span) return fail("witness lies in the span of the subalgebra orbit");
  return out;
}

// ---------------------------------------------------------------------------
// Per-subset classification

OracleCheck oracle_check(LieContext& ctx, const RootSubset& T, const Weight& lambda, std::int64_t cap) {
  check_lambda(ctx.system(), lambda);
  const std::int64_t dim = ctx.dimension(lambda);
  if (dim > cap) {
    throw BudgetExceeded("oracle needs dim V <= " + std::to_string(cap) + ", got " + std::to_string(dim));
  }
  const auto m = ctx.module(lambda, cap);
  OracleCheck out;
  out.lambda = lambda;
  out.module_dim = m->dimension();
  out.span_dim = subalgebra_span(*m, T).dimension;
  out.lambda_wide = out.span_dim == out.module_dim;
  out.commutant = is_indecomposable_oracle(*m, T, cap);
  return out;
}

std::string to_string(Verdict v) {
  switch (v) {
    case Verdict::wide: return "wide";
    case Verdict::narrow: return "narrow";
    case Verdict::violation: return "violation";
  }
  return "?";
}

SubsetVerdict classify_subset(LieContext& ctx, const RootSubset& T, const std::vector<Weight>& grid, const Caps& caps) {
  const ClosedDecomposition dec = decompose(T);
  const auto [wide, sym] = is_wide(T);
  SubsetVerdict out{T, dec.kind, wide ? Verdict::wide : Verdict::narrow, {}, {}, {}, {}};

  if (wide) {
    out.certificates.push_back(wide_certificate(T));
    out.validations.push_back(validate_certificate(ctx, out.certificates.back(), caps));
  }
  for (const Weight& lambda : grid) {
    if (lambda.is_zero()) continue;
    const std::string tag = "lambda " + [&] {
      std::string s;
      for (int c : lambda.coords) s += (s.empty() ? "" : ",") + std::to_string(c);
      return s;
    }() + ": ";
    if (!wide) {
      out.certificates.push_back(narrow_witness(ctx.diagram(), T, lambda));
      out.validations.push_back(validate_certificate(ctx, out.certificates.back(), caps));
      if (!out.validations.back().valid()) out.problems.push_back(tag + out.validations.back().detail);
    }
    if (ctx.dimension(lambda) <= caps.oracle_dim) {
      OracleCheck oc = oracle_check(ctx, T, lambda, caps.oracle_dim);
      if (oc.lambda_wide != wide) {
        out.problems.push_back(tag + (wide ? "wide subset but the span is proper" : "narrow subset but the span is everything"));
      }
      if (!oc.agree()) out.problems.push_back(tag + "span test and commutant oracle disagree");
      out.oracle_checks.push_back(std::move(oc));
    }
  }
  if (wide && !out.validations.front().valid()) out.problems.push_back(out.validations.front().detail);
  if (!out.problems.empty()) out.verdict = Verdict::violation;
  return out;
}

// ---------------------------------------------------------------------------
// Full verification

std::string to_string(EnumerationMode m) { return m == EnumerationMode::full ? "full" : "reduced"; }

int ClassificationReport::count(Verdict v) const {
  return static_cast<int>(std::count_if(verdicts.begin(), verdicts.end(), [&](const SubsetVerdict& s) {
    return s.verdict == v;
  }));
}

int ClassificationReport::oracle_checks() const {
  int n = 0;
  for (const auto& s : verdicts) n += static_cast<int>(s.oracle_checks.size());
  return n;
}

int ClassificationReport::oracle_disagreements() const {
  int n = 0;
  for (const auto& s : verdicts) {
    for (const auto& oc : s.oracle_checks) n += oc.agree() ? 0 : 1;
  }
  return n;
}

bool ClassificationReport::dichotomy_holds() const {
  return !incomplete && !verdicts.empty() && count(Verdict::violation) == 0;
}

namespace {

struct MaskHash {
  std::size_t operator()(const RootMask& m) const { return std::hash<RootMask>{}(m); }
};

}  // namespace

ClassificationReport verify_regular_extreme(LieContext& ctx, int coeff_bound, const VerifyOptions& options) {
  const auto start = std::chrono::steady_clock::now();
  const RootSystem& sys = ctx.system();
  if (coeff_bound < 1) throw std::invalid_argument("coefficient bound must be at least 1");

  ClassificationReport report;
  report.system = sys.type().name();
  report.coeff_bound = coeff_bound;
  report.caps = options.caps;
  report.mode = options.mode;
  report.grid = dominant_weights_up_to(sys, coeff_bound);

  std::vector<RootSubset> subsets;
  try {
    subsets = enumerate_closed(sys, options.caps.enumeration_roots);
    if (options.mode == EnumerationMode::conjugacy_reduced) {
      std::unordered_set<RootMask, MaskHash> seen;
      std::vector<RootSubset> reps;
      for (const auto& s : subsets) {
        if (seen.count(s.mask())) continue;
        const auto orbit = weyl_orbit(s, options.caps.orbit_budget);
        RootSubset best = orbit.front();
        for (const auto& o : orbit) {
          seen.insert(o.mask());
          if (lex_less(o, best)) best = o;
        }
        reps.push_back(best);
        report.orbit_sizes.push_back(static_cast<int>(orbit.size()));
      }
      subsets = std::move(reps);
    }
  } catch (const BudgetExceeded& e) {
    report.incomplete = true;
    report.incomplete_reason = e.what();
    report.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    return report;
  }

  std::vector<std::optional<SubsetVerdict>> results(subsets.size());
  std::vector<std::string> budget_errors(subsets.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < subsets.size(); i = next++) {
      try {
        results[i] = classify_subset(ctx, subsets[i], report.grid, options.caps);
      } catch (const BudgetExceeded& e) {
        budget_errors[i] = e.what();
      }
    }
  };
  const int threads = std::max(1, std::min<int>(options.threads, static_cast<int>(subsets.size())));
  if (threads == 1) {
    worker();
  } else {
    std::vector<std::jthread> pool;
    for (int t = 0; t < threads; ++t) pool.emplace_back(worker);
  }

  std::vector<int> kept_orbits;
  for (std::size_t i = 0; i < subsets.size(); ++i) {
    if (results[i]) {
      report.verdicts.push_back(std::move(*results[i]));
      if (!report.orbit_sizes.empty()) kept_orbits.push_back(report.orbit_sizes[i]);
    } else if (!report.incomplete) {
      report.incomplete = true;
      report.incomplete_reason = budget_errors[i];
    }
  }
  if (!report.orbit_sizes.empty()) report.orbit_sizes = std::move(kept_orbits);
  report.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return report;
}

// ---------------------------------------------------------------------------
// Non-simple algebras

namespace {

// I (x) ... (x) X (x) ... (x) I with X in slot `slot`.
SparseMatrix embed(const SparseMatrix& x, std::size_t slot, const std::vector<int>& dims) {
  SparseMatrix out = SparseMatrix::identity(1);
  for (std::size_t k = 0; k < dims.size(); ++k) {
    out = kronecker(out, k == slot ? x : SparseMatrix::identity(dims[k]));
  }
  return out;
}

std::vector<SparseMatrix> factor_generators(const ModuleRealization& m, std::size_t slot, const std::vector<int>& dims) {
  std::vector<SparseMatrix> gens;
  for (int i = 0; i < m.system().rank(); ++i) gens.push_back(embed(m.h(i), slot, dims));
  for (int b = 0; b < m.system().size(); ++b) gens.push_back(embed(m.e(b), slot, dims));
  return gens;
}

bool all_commute(const std::vector<SparseMatrix>& a, const std::vector<SparseMatrix>& b) {
  for (const auto& x : a) {
    for (const auto& y : b) {
      if (!commutator(x, y).is_zero()) return false;
    }
  }
  return true;
}

}  // namespace

NonsimpleReport nonsimple_demo(const std::vector<LieType>& types, const Weight& lambda, const Weight& eta,
                               std::int64_t cap) {
  if (types.size() < 2) throw std::invalid_argument("need at least two simple factors");
  std::vector<std::unique_ptr<LieContext>> ctx;
  for (const auto& t : types) ctx.push_back(std::make_unique<LieContext>(t));
  check_lambda(ctx[0]->system(), lambda);
  check_lambda(ctx[1]->system(), eta);
  if (lambda.is_zero()) throw std::invalid_argument("lambda must be nonzero");
  if (eta.is_zero()) throw std::invalid_argument("eta must be nonzero");

  NonsimpleReport out;
  out.types = types;
  out.lambda = lambda;
  out.eta = eta;

  // Factor modules for V and W.
  std::vector<std::shared_ptr<const ModuleRealization>> v_parts, w_parts;
  for (std::size_t k = 0; k < ctx.size(); ++k) {
    const Weight zero = ctx[k]->system().zero_weight();
    v_parts.push_back(ctx[k]->module(k == 0 ? lambda : zero, cap));
    w_parts.push_back(ctx[k]->module(k == 1 ? eta : zero, cap));
  }
  std::vector<int> v_dims, w_dims;
  std::int64_t dim_v = 1, dim_w = 1;
  for (std::size_t k = 0; k < ctx.size(); ++k) {
    v_dims.push_back(v_parts[k]->dimension());
    w_dims.push_back(w_parts[k]->dimension());
    dim_v *= v_dims.back();
    dim_w *= w_dims.back();
  }
  if (dim_v > cap || dim_w > cap) {
    throw BudgetExceeded("tensor modules need dim <= " + std::to_string(cap) + ", got " + std::to_string(dim_v) +
                         " and " + std::to_string(dim_w));
  }
  out.dim_v = static_cast<int>(dim_v);
  out.dim_w = static_cast<int>(dim_w);

  const auto v_first = factor_generators(*v_parts[0], 0, v_dims);
  const auto v_second = factor_generators(*v_parts[1], 1, v_dims);
  const auto w_first = factor_generators(*w_parts[0], 0, w_dims);
  const auto w_second = factor_generators(*w_parts[1], 1, w_dims);

  out.factors_commute = all_commute(v_first, v_second) && all_commute(w_first, w_second);
  out.v_commutant = analyze_commutant(v_first, out.dim_v);
  out.w_commutant = analyze_commutant(w_first, out.dim_w);
  out.w_first_factor_acts_trivially =
      std::all_of(w_first.begin(), w_first.end(), [](const SparseMatrix& x) { return x.is_zero(); });
  out.w_trivial_summands = out.w_first_factor_acts_trivially ? out.dim_w : 0;
  return out;
}

}  // namespace regext
