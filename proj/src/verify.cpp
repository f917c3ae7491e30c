#include "treespectra/verify.hpp"

#include <algorithm>
#include <sstream>

#include "treespectra/analysis.hpp"
#include "treespectra/embedding.hpp"
#include "treespectra/path_steiner.hpp"

namespace treespectra {

namespace {

std::string tree_inputs(const Tree& t) {
  std::ostringstream out;
  out << "n=" << t.vertex_count() << " edges=";
  for (const VertexPair& e : t.edges()) out << e.label() << " ";
  std::string s = out.str();
  s.pop_back();
  return s;
}

std::string inertia_string(const InertiaTriple& in) {
  return "(" + std::to_string(in.positive) + "," + std::to_string(in.negative) + "," +
         std::to_string(in.zero) + ")";
}

struct Recorder {
  std::vector<CheckResult>& out;
  std::string inputs;

  void add(const std::string& id, const std::string& expected, const std::string& computed) {
    out.push_back({id, inputs, expected, computed, expected == computed});
  }
  void add(const std::string& id, const std::string& expected, const std::string& computed,
           bool pass) {
    out.push_back({id, inputs, expected, computed, pass});
  }
};

void check_min4pc_for_f(const Tree& t, const VertexPair& f, std::vector<CheckResult>& results) {
  const int n = t.vertex_count();
  PairBasis basis = min4pc_basis(t, f);
  Recorder rec{results, tree_inputs(t) + " f=" + f.label() +
                            " d=" + std::to_string(basis.f_distance())};
  ExactMatrix m = restricted_pair_matrix(t, PairKind::min4pc, basis);

  InertiaTriple in = inertia(m);
  rec.add("min4pc.inertia", "(1," + std::to_string(n - 1) + ",0)", inertia_string(in));

  Poly cp = charpoly(m);
  Poly closed = closed_form_min4pc(n, basis.f_distance());
  rec.add("min4pc.charpoly-closed-form", closed.to_string(), cp.to_string());

  SignCheck sign = sign_pattern_check(cp, in, m.trace());
  rec.add("min4pc.sign-pattern", "a_k < 0 for 0..:" + std::to_string(n - 2),
          sign.ok ? "holds" : "violated at " + std::to_string(sign.violations.front()), sign.ok);
  rec.add("min4pc.coeff-n-minus-1", "0", rat_string(cp.coeff(std::size_t(n - 1))));

  CoefficientReport report = analyze(cp, Window{0, std::size_t(n - 2)});
  rec.add("min4pc.unimodal", "unimodal", report.unimodal ? "unimodal" : "not unimodal");
  rec.add("min4pc.log-concave", "log-concave",
          report.log_concave ? "log-concave" : "not log-concave");
  if (n >= 8) {
    auto bound = peak_bound(PeakFamily::min4pc, n);
    CoefficientReport bounded = analyze(cp, Window{0, std::size_t(n - 2)}, bound);
    std::ostringstream peaks;
    for (std::size_t p : bounded.peak_set) peaks << p << " ";
    rec.add("min4pc.peak-bound",
            "peaks in [" + std::to_string(bound.first) + "," + std::to_string(bound.second) + "]",
            "peaks: " + peaks.str(), *bounded.bound_ok);
  }
}

}  // namespace

std::vector<CheckResult> verify_tree(const Tree& t, const VerifyOptions& opt) {
  std::vector<CheckResult> results;
  const int n = t.vertex_count();
  Recorder rec{results, tree_inputs(t)};

  // Four-point condition: among the three pairing sums of any quadruple the
  // two largest agree. Exhaustive up to n = 9.
  if (n <= 9) {
    bool ok = true;
    for (int i = 1; i <= n && ok; ++i)
      for (int j = 1; j <= n && ok; ++j)
        for (int k = 1; k <= n && ok; ++k)
          for (int l = 1; l <= n && ok; ++l) {
            auto s = quadruple_sums(t, i, j, k, l);
            std::sort(s.begin(), s.end());
            ok = s[1] == s[2];
          }
    rec.add("tree.four-point-condition", "max attained twice in every quadruple",
            ok ? "holds" : "violated", ok);
  }

  // Distance-matrix normalized coefficients are positive.
  {
    Poly dist_cp = charpoly(t.distance_matrix());
    std::vector<Rat> d = normalized_tree_coeffs(dist_cp, n);
    bool ok = std::all_of(d.begin(), d.end(), [](const Rat& v) { return v > 0; });
    rec.add("tree.normalized-coeffs-positive", "d_k > 0 for k=0..n-2", ok ? "holds" : "violated",
            ok);
  }

  if (n <= 64) {
    PairMatrix mn = PairMatrix::build(t, PairKind::min4pc);
    PairMatrix mx = PairMatrix::build(t, PairKind::max4pc);
    PairMatrix st = PairMatrix::build(t, PairKind::steiner2);

    bool avg_ok = st.entries().scaled(Rat(2)) == mn.entries() + mx.entries();
    rec.add("steiner.average-identity", "2 D2 = Max4PC + Min4PC", avg_ok ? "holds" : "violated",
            avg_ok);

    // Min4PC on E x E is 2(J - I).
    bool exe_ok = true;
    for (std::size_t a = 0; a < t.edges().size() && exe_ok; ++a)
      for (std::size_t b = 0; b < t.edges().size() && exe_ok; ++b) {
        Rat expect = a == b ? 0 : 2;
        exe_ok = mn.at(t.edges()[a], t.edges()[b]) == expect;
      }
    rec.add("min4pc.edge-block", "Min4PC[E,E] = 2(J-I)", exe_ok ? "holds" : "violated", exe_ok);

    if (opt.spot_checks) {
      SpotCheckResult hyper = quadratic_form_spot_check(mn, FormConstraint::hypermetric,
                                                        opt.trials, opt.seed, opt.entry_bound);
      Recorder spot{results, rec.inputs + " trials=" + std::to_string(opt.trials) +
                                 " seed=" + std::to_string(opt.seed) +
                                 " bound=" + std::to_string(opt.entry_bound)};
      spot.add("embedding.hypermetric-spot", "form <= 0", "worst " + int_string(hyper.worst),
               hyper.ok);
      SpotCheckResult neg = quadratic_form_spot_check(mn, FormConstraint::negative_type,
                                                      opt.trials, opt.seed, opt.entry_bound);
      spot.add("embedding.negative-type-spot", "form <= 0", "worst " + int_string(neg.worst),
               neg.ok);
    }
  }

  // Min4PC[B,B] checks for the requested f choices.
  if (n >= 3) {
    std::vector<VertexPair> fs = non_edges(t);
    if (opt.explicit_f) fs = {*opt.explicit_f};
    else if (!opt.all_f && fs.size() > 1) fs.erase(fs.begin() + 1, fs.end());
    for (const VertexPair& f : fs) check_min4pc_for_f(t, f, results);
  }

  // 2-Steiner restricted matrix under the default basis.
  if (n >= 3) {
    PairBasis basis = steiner_basis(t);
    Recorder srec{results, tree_inputs(t) + " basis=" + basis.describe()};
    const int p = t.leaves().first;
    const std::size_t r = basis.size();  // 2n - p - 1
    srec.add("steiner.basis-size", std::to_string(2 * n - p - 1), std::to_string(r));

    steiner_v(t, basis);  // throws if either defining identity fails
    srec.add("steiner.v-identities", "1^t v = 1 and D2[B,B] v = (n-1) 1", "hold", true);

    ExactMatrix d2 = restricted_pair_matrix(t, PairKind::steiner2, basis);
    InertiaTriple in = inertia(d2);
    srec.add("steiner.inertia", "(1," + std::to_string(2 * n - p - 2) + ",0)",
             inertia_string(in));

    Poly cp = charpoly(d2);
    SignCheck sign = sign_pattern_check(cp, in, d2.trace());
    srec.add("steiner.sign-pattern", "a_k < 0 for 0.." + std::to_string(r - 1),
             sign.ok ? "holds" : "violated", sign.ok);

    CoefficientReport report = analyze(cp, Window{0, r - 1});
    srec.add("steiner.unimodal", "unimodal", report.unimodal ? "unimodal" : "not unimodal");
    srec.add("steiner.log-concave", "log-concave",
             report.log_concave ? "log-concave" : "not log-concave");
  }

  // l1 embedding of Min4PC.
  {
    EmbeddingCheck e = verify_embedding(t);
    rec.add("embedding.isometry", "Min4PC(p,q) = ||phi_p - phi_q||_1",
            e.ok ? "holds"
                 : "violated at (" + e.violation->first.label() + "," +
                       e.violation->second.label() + ")",
            e.ok);
    if (n <= 8) {
      TriangleCheck tri = triangle_check(PairMatrix::build(t, PairKind::min4pc));
      rec.add("embedding.triangle", "triangle inequality", tri.ok ? "holds" : "violated", tri.ok);
    }
  }

  return results;
}

std::vector<CheckResult> verify_star(int n) {
  std::vector<CheckResult> results;
  Tree t = make_star(n);
  PairBasis basis = steiner_basis(t);
  Recorder rec{results, "star n=" + std::to_string(n) + " basis=" + basis.describe()};

  ExactMatrix d2 = restricted_pair_matrix(t, PairKind::steiner2, basis);
  Poly cp = charpoly(d2);
  Poly closed = closed_form_star_steiner(n);
  rec.add("star.charpoly-closed-form", closed.to_string(), cp.to_string());
  rec.add("star.coeff-a0", int_string(Int(-(n - 1))), rat_string(cp.coeff(0)));
  if (n >= 4)
    rec.add("star.coeff-a-n-minus-1", int_string(Int(-(n + 1))),
            rat_string(cp.coeff(std::size_t(n - 1))));

  if (n >= 6) {
    auto bound = peak_bound(PeakFamily::star, n);
    CoefficientReport report = analyze(cp, Window{0, std::size_t(n - 1)}, bound);
    std::ostringstream peaks;
    for (std::size_t p : report.peak_set) peaks << p << " ";
    rec.add("star.peak-bound",
            "peaks in [" + std::to_string(bound.first) + "," + std::to_string(bound.second) + "]",
            "peaks: " + peaks.str(), *report.bound_ok);
  }
  return results;
}

std::vector<CheckResult> verify_bistar(int n) {
  std::vector<CheckResult> results;
  Tree t = make_bistar(n);
  // Block 1 sits at vertex 2 = {e_1,e_2}; block 2 at vertex 3 = {e_2,...,e_{n-1}}.
  // B_1 picks (e_2,e_3) in block 2, B_2 picks (e_3,e_4).
  PairBasis b1 = steiner_basis(t, {{0, 1}, {1, 2}});
  PairBasis b2 = steiner_basis(t, {{0, 1}, {2, 3}});

  for (int which = 1; which <= 2; ++which) {
    const PairBasis& basis = which == 1 ? b1 : b2;
    Recorder rec{results,
                 "bistar n=" + std::to_string(n) + " basis=B" + std::to_string(which)};
    ExactMatrix d2 = restricted_pair_matrix(t, PairKind::steiner2, basis);
    Poly cp = charpoly(d2);
    Poly closed = closed_form_bistar_steiner(n, which);
    rec.add("bistar.charpoly-closed-form-B" + std::to_string(which), closed.to_string(),
            cp.to_string());
    rec.add("bistar.coeff-a0-B" + std::to_string(which), int_string(Int(-(n - 1))),
            rat_string(cp.coeff(0)));
    if (which == 1)
      rec.add("bistar.coeff-an-B1", int_string(Int(-(n + 3))),
              rat_string(cp.coeff(std::size_t(n))));

    auto bound = peak_bound(PeakFamily::bistar, n);
    CoefficientReport report = analyze(cp, Window{0, std::size_t(n)}, bound);
    std::ostringstream peaks;
    for (std::size_t p : report.peak_set) peaks << p << " ";
    rec.add("bistar.peak-bound-B" + std::to_string(which),
            "peaks in [" + std::to_string(bound.first) + "," + std::to_string(bound.second) + "]",
            "peaks: " + peaks.str(), *report.bound_ok);
  }
  return results;
}

std::vector<CheckResult> verify_path(int n) {
  std::vector<CheckResult> results;
  PathSteinerInstance inst = build_path_instance(n);
  Recorder rec{results, "path n=" + std::to_string(n) + " ordered basis"};

  rec.add("path.det", int_string(Int(n - 1)), rat_string(determinant(inst.matrix)));
  rec.add("path.inverse-formula", "D^-1 = -L + v v^t/(n-1)",
          verify_inverse_formula(inst) ? "holds" : "violated", verify_inverse_formula(inst));

  // Generic pipeline and interval-hull construction agree.
  ExactMatrix generic = restricted_pair_matrix(inst.tree, PairKind::steiner2, inst.basis);
  rec.add("path.two-routes-agree", "interval hull = union-of-paths pipeline",
          generic == inst.matrix ? "agree" : "differ", generic == inst.matrix);

  // L 1 = 0.
  {
    const std::size_t m = inst.basis.size();
    bool ok = true;
    for (std::size_t i = 0; i < m && ok; ++i) {
      Rat row = 0;
      for (std::size_t j = 0; j < m; ++j) row += inst.laplacian_like(i, j);
      ok = row == 0;
    }
    rec.add("path.laplacian-rowsum", "L 1 = 0", ok ? "holds" : "violated", ok);
  }

  {
    auto scan = principal_minor_scan(inst);
    bool ok = std::all_of(scan.begin(), scan.end(),
                          [](const MinorScanEntry& e) { return e.matches; });
    rec.add("path.principal-minors",
            "-(n-1) on pendant edges, -(2n-3) otherwise", ok ? "holds" : "violated", ok);
  }

  {
    PathCoefficientFacts facts = path_coefficient_facts(inst);
    rec.add("path.coeff-a0", "|a_0| = " + std::to_string(n - 1), int_string(abs(facts.a0)),
            facts.a0_ok);
    rec.add("path.coeff-a1", "|a_1| = " + std::to_string(4 * n * n - 14 * n + 13),
            int_string(abs(facts.a1)), facts.a1_ok);
    rec.add("path.coeff-trace", "|a_{2n-4}| = " + std::to_string(3 * n - 5),
            int_string(abs(facts.a_2n4)), facts.a_2n4_ok);

    auto bound = peak_bound(PeakFamily::path, n);
    bool ok = facts.peak_set.back() <= bound.second;
    rec.add("path.peak-upper-bound", "peak <= " + std::to_string(bound.second),
            "peak " + std::to_string(facts.peak_set.back()), ok);

    PathPeakBoundDetail detail = path_peak_bound_detail(n);
    rec.add("path.fn-below-7n-over-5", "f(n) < 7n/5", rat_string(detail.f_n),
            detail.f_below_bound);
  }

  {
    InertiaTriple in = inertia(inst.matrix);
    rec.add("path.inertia", "(1," + std::to_string(2 * n - 4) + ",0)", inertia_string(in));
  }
  return results;
}

bool all_pass(const std::vector<CheckResult>& results) {
  return std::all_of(results.begin(), results.end(),
                     [](const CheckResult& r) { return r.pass; });
}

}  // namespace treespectra
