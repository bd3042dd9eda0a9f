// Acceptance suite: one line per criterion, exit 0 iff all pass.
// Everything is exact rational arithmetic; there are no tolerances anywhere.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <vector>

#include "fixtures.hpp"
#include "nlal/extensions.hpp"
#include "nlal/io.hpp"

using namespace nlal;

namespace {

int g_failures = 0;

void line(int idx, const std::string& what, bool ok) {
  std::cout << (ok ? "[PASS]" : "[FAIL]") << " criterion " << idx << ": " << what << "\n";
  if (!ok) ++g_failures;
}

// -------------------------------------------------------------- criterion 1+2
void delta_squared_and_dual_assembly() {
  std::vector<Representation> reps;
  reps.push_back(adjoint_representation(fx::n2d3()));
  reps.push_back(trivial_representation(fx::n2d3(), 1));
  reps.push_back(adjoint_representation(fx::a4()));
  reps.push_back(trivial_representation(fx::a4(), 1));
  bool square_zero = true, agree = true;
  for (const auto& r : reps) {
    Matrix d[4];
    for (int p = 1; p <= 3; ++p) {
      d[p] = nlie_coboundary_direct(r, p);
      if (!(d[p] == nlie_coboundary_leibniz(r, p))) agree = false;
    }
    for (int p = 1; p <= 2; ++p)
      if (!(d[p + 1] * d[p]).is_zero()) square_zero = false;
  }
  line(1, "delta_{p+1} * delta_p = 0 for {n2d3, a4} x {adjoint, trivial}, p = 1,2", square_zero);
  line(2, "direct four-sum assembly equals the Leibniz-coefficient assembly entry-wise", agree);
}

// ---------------------------------------------------------------- criterion 3
void prop_2_5_biconditional() {
  std::vector<Representation> corpus;
  corpus.push_back(trivial_representation(fx::a4(), 2));
  corpus.push_back(adjoint_representation(fx::a4()));
  corpus.push_back(adjoint_representation(fx::n2d3()));
  corpus.push_back(fx::scaled_adjoint(fx::a4()));
  corpus.push_back(fx::weak_not_full());
  corpus.push_back(fx::random_rep(fx::a4(), 2, 99));
  bool ok = true;
  int valid = 0;
  for (const auto& r : corpus) {
    bool rep_ok = validate_representation(r, RepMode::full).pass();
    bool mod_ok = validate_leibniz_module(fundamental_leibniz(r.algebra), hom_module(r)).pass();
    if (rep_ok != mod_ok) ok = false;
    valid += rep_ok ? 1 : 0;
  }
  ok = ok && valid == 3 && corpus.size() == 6;
  line(3, "(R1)+(R2) holds iff Hom(g,V) satisfies the Leibniz module axioms (3 valid, 3 invalid)",
       ok);
}

// ---------------------------------------------------------------- criterion 4
std::vector<LMAlgebra> lm_corpus() {
  std::vector<LMAlgebra> out;
  out.push_back(fx::lm_f0(fx::a4()));
  out.push_back(fx::lm_id(fx::a4()));
  out.push_back(hemisemidirect_projection_example(adjoint_representation(fx::a4())));
  out.push_back(wedge_power_example(fx::a4()));
  out.push_back(fx::lm_id(fx::n2d3()));
  return out;
}

void induced_bracket_property() {
  bool ok = true;
  for (const auto& a : lm_corpus()) {
    if (!validate_lm(a).pass()) ok = false;
    LeibnizNAlgebra m = induced_leibniz_bracket(a);
    if (!validate_leibniz_n(m).pass()) ok = false;
    IndexTuple t(a.g.n, 0);
    if (a.mdim() > 0) do {
        Vec lhs = a.f.apply(m.bracket_idx(t));
        std::vector<Vec> args(a.g.n);
        for (int q = 0; q < a.g.n; ++q) args[q] = a.f.col(t[q]);
        if (!(lhs == a.g.bracket_vecs(args))) ok = false;
      } while (next_index(t, a.mdim()));
  }
  line(4, "induced bracket is Leibniz and f intertwines, on 5 LM fixtures", ok);
}

// ---------------------------------------------------------------- criterion 5
void id_plus_f_biconditional() {
  std::vector<LMAlgebra> corpus = lm_corpus();
  corpus.push_back(fx::lm_broken_f(fx::a4()));
  corpus.push_back(fx::lm_broken_f(fx::n2d3()));
  bool ok = true;
  int invalid = 0;
  for (const auto& a : corpus) {
    bool lm_ok = validate_lm(a).pass();
    bool hom_ok = id_plus_f_check(a).pass();
    if (lm_ok != hom_ok) ok = false;
    invalid += lm_ok ? 0 : 1;
  }
  line(5, "validate_lm iff id+f is a homomorphism, including broken-f fixtures",
       ok && invalid == 2);
}

// ---------------------------------------------------------------- criterion 6
void lm_complex_squares_to_zero() {
  std::vector<std::pair<LMAlgebra, LMRepresentation>> corpus;
  {
    LMAlgebra a = fx::lm_id(fx::a4());
    corpus.emplace_back(a, adjoint_lm_representation(a));
    corpus.emplace_back(a, trivial_lm_representation(a, 1, 1));
  }
  {
    LMAlgebra a = fx::c7_base();
    corpus.emplace_back(a, fx::c7_target(a));
  }
  {
    LMAlgebra a = fx::lm_id(fx::n2d3());
    corpus.emplace_back(a, adjoint_lm_representation(a));
  }
  bool ok = true;
  for (const auto& [a, r] : corpus)
    if (!(lm_coboundary_matrix(a, r, 2) * lm_coboundary_matrix(a, r, 1)).is_zero()) ok = false;
  line(6, "D2 * D1 = 0 exactly for 4 (LM algebra, representation) pairs incl. adjoint", ok);
}

// ---------------------------------------------------------------- criterion 7
void extension_roundtrips() {
  LMAlgebra a = fx::c7_base();
  LMRepresentation r = fx::c7_target(a);
  bool ok = true;

  // (a) cocycle_from_extension o extension_from_cocycle = id on a basis of Z^2
  auto basis = fx::z2_basis(a, r);
  if (basis.size() != 10) ok = false;
  for (const auto& c : basis) {
    AbelianExtension e = extension_from_cocycle(a, r, c);
    LMCochain back = cocycle_from_extension(e, canonical_section(e));
    if (!(back.omega == c.omega && back.nu == c.nu && back.theta == c.theta)) ok = false;
  }

  // (b) a section change shifts the cocycle by an element of im D1
  AbelianExtension split = extension_from_cocycle(a, r, LMCochain(a, r, 2));
  Section s = canonical_section(split);
  Matrix b0 = fx::random_matrix(r.wdim, a.g.dim, 61);
  Matrix b1 = fx::random_matrix(r.vdim, a.mdim(), 62);
  Section sheared{s.sigma0 + (split.i0 * b0), s.sigma1 + (split.i1 * b1)};
  LMCochain c1 = cocycle_from_extension(split, s);
  LMCochain c2 = cocycle_from_extension(split, sheared);
  Vec diff = lm_cochain_coords(a, r, c2);
  {
    Vec base = lm_cochain_coords(a, r, c1);
    for (std::size_t i = 0; i < diff.size(); ++i) diff[i] -= base[i];
  }
  auto sol = solve(lm_coboundary_matrix(a, r, 1), diff);
  if (!sol) ok = false;

  // (c) distinct classes never admit an equivalence witness
  Matrix D1 = lm_coboundary_matrix(a, r, 1);
  std::vector<LMCochain> nontrivial;
  for (const auto& c : basis) {
    if (!solve(D1, lm_cochain_coords(a, r, c))) nontrivial.push_back(c);
    if (nontrivial.size() == 2) break;
  }
  if (nontrivial.size() < 2) {
    ok = false;
  } else {
    AbelianExtension es = extension_from_cocycle(a, r, LMCochain(a, r, 2));
    AbelianExtension e1 = extension_from_cocycle(a, r, nontrivial[0]);
    // e2 differs from e1 by nontrivial[1], which is not a coboundary
    LMCochain cd = nontrivial[0];
    cd.omega.axpy(Rational(1), nontrivial[1].omega);
    cd.nu.axpy(Rational(1), nontrivial[1].nu);
    cd.theta.axpy(Rational(1), nontrivial[1].theta);
    AbelianExtension e2 = extension_from_cocycle(a, r, cd);
    if (!extension_equivalence(e1, e1)) ok = false;  // reflexivity
    if (extension_equivalence(es, e1)) ok = false;   // class of e1 is nonzero
    if (extension_equivalence(e1, e2)) ok = false;   // classes differ by nontrivial[1]
  }
  line(7, "extension/cocycle roundtrips, coboundary section shifts, distinct classes", ok);
}

// ---------------------------------------------------------------- criterion 8
void deformation_equivalence() {
  const Rational probes[] = {Rational(1), Rational(2), Rational(-1), Rational(1, 2)};
  bool ok = true;
  for (const LMAlgebra& a : {fx::lm_id(fx::a4()), fx::lm_f0(fx::a4())}) {
    std::vector<DeformationTriple> triples;
    triples.push_back(DeformationTriple(a));
    triples.push_back(fx::first_order(a, deformation_from_nijenhuis(a, fx::pair_e21())));
    triples.push_back(
        fx::first_order(a, deformation_from_nijenhuis(a, fx::pair_scalar(a, Rational(1, 2)))));
    triples.push_back(fx::random_triple(a, 8001));
    triples.push_back(fx::random_triple(a, 8002));
    for (const auto& t : triples) {
      bool six = validate_infinitesimal_deformation(a, t).pass();
      bool lam = true;
      for (const auto& l : probes)
        if (!validate_lm(deformed_structures(a, t, l)).pass()) lam = false;
      if (six != lam) ok = false;
    }
  }
  line(8, "six-equation test agrees with validate_lm of the deformed structure at 4 lambdas", ok);
}

// ---------------------------------------------------------------- criterion 9
void nijenhuis_deformations() {
  LMAlgebra a = fx::lm_id(fx::a4());
  // solve the definition over a deterministic candidate family for a
  // non-scalar pair
  NijenhuisPair found;
  bool have = false;
  for (int i = 0; i < 4 && !have; ++i)
    for (int j = 0; j < 4 && !have; ++j) {
      if (i == j) continue;
      NijenhuisPair p;
      p.N0 = Matrix(4, 4);
      p.N0.at(i, j) = Rational(1);
      p.N1 = p.N0;
      if (is_nijenhuis(a, p).pass()) {
        found = p;
        have = true;
      }
    }
  bool ok = have;
  std::vector<NijenhuisPair> pairs{fx::pair_scalar(a, Rational(0)),
                                   fx::pair_scalar(a, Rational(1)),
                                   fx::pair_scalar(a, Rational(1, 2))};
  if (have) pairs.push_back(found);
  std::vector<Rational> lams{Rational(1), Rational(2), Rational(-1)};
  for (const auto& p : pairs) {
    if (!is_nijenhuis(a, p).pass()) ok = false;
    FormalDeformation d = deformation_from_nijenhuis(a, p);
    if (!validate_formal_deformation(a, d).pass()) ok = false;
    if (!check_triviality_witness(a, d, p, lams).pass()) ok = false;
  }
  line(9, "Nijenhuis pairs {0, id, id/2, found non-scalar} give verified trivial deformations",
       ok);
}

// --------------------------------------------------------------- criterion 10
void counting_identities() {
  bool ok = nlie_cochain_dim(adjoint_representation(fx::a4()), 2) == 96;
  CohomologyDims h = cohomology_dim(trivial_representation(fx::abelian(3, 4), 1), 1);
  ok = ok && h.cohomology == 4;
  line(10, "dim C^2 = 96 for (n=3, dim g=4, dim V=4); H^1 = 4 for the abelian/trivial case", ok);
}

// --------------------------------------------------------------- criterion 11
struct CliRun {
  int exit_code = -1;
  std::string output;
};

CliRun run_cli(const std::string& args, const std::string& tag) {
  std::string out = std::string("/tmp/nlal_acc_") + tag + ".out";
  std::string cmd = std::string(NLAL_CLI_PATH) + " " + args + " > " + out + " 2>/dev/null";
  int st = std::system(cmd.c_str());
  CliRun r;
  r.exit_code = WIFEXITED(st) ? WEXITSTATUS(st) : -1;
  std::ifstream in(out, std::ios::binary);
  std::ostringstream ss;
  ss << in.rdbuf();
  r.output = ss.str();
  return r;
}

void cli_contract() {
  const std::string fx = NLAL_FIXTURES_DIR;
  struct Case {
    std::string args;
    int expect;
  };
  std::vector<Case> cases = {
      {"validate " + fx + "/a4.json", 0},
      {"validate " + fx + "/n2d3.json", 0},
      {"validate " + fx + "/abelian34.json", 0},
      {"validate " + fx + "/a4_broken.json", 1},
      {"validate " + fx + "/bad_leibniz22.json", 1},
      {"validate " + fx + "/a4_hemisemidirect.json", 0},
      {"validate " + fx + "/a4_adjoint_rep.json", 0},
      {"validate " + fx + "/n2d3_adjoint_rep.json", 0},
      {"validate " + fx + "/abelian34_trivial1_rep.json", 0},
      {"validate " + fx + "/weak_rep.json", 1},
      {"validate " + fx + "/a4_id_ad_lm.json", 0},
      {"validate " + fx + "/a4_f0_lm.json", 0},
      {"validate " + fx + "/a4_broken_f_lm.json", 1},
      {"validate " + fx + "/a4_adjoint_lm_rep.json", 0},
      {"validate " + fx + "/a4_trivial11_lm_rep.json", 0},
      {"validate " + fx + "/c7_lm.json", 0},
      {"validate " + fx + "/c7_lm_rep.json", 0},
      {"validate " + fx + "/c7_ext_split.json", 0},
      {"validate " + fx + "/c7_ext_shifted.json", 0},
      {"validate " + fx + "/c7_ext_nontrivial.json", 0},
      {"validate " + fx + "/does_not_exist.json", 2},
      {"validate " + fx + "/c7_cocycle.json", 2},  // no standalone validator
      {"cohomology " + fx + "/abelian34.json --degree 1 --coefficients " + fx +
           "/abelian34_trivial1_rep.json",
       0},
      {"cohomology " + fx + "/a4.json --degree 2", 0},
      {"cohomology " + fx + "/n2d3.json --degree 2 --coefficients " + fx +
           "/n2d3_adjoint_rep.json",
       0},
      {"cohomology " + fx + "/a4_id_ad_lm.json --degree 2 --coefficients " + fx +
           "/a4_trivial11_lm_rep.json",
       0},
      {"cohomology " + fx + "/c7_lm.json --degree 3 --coefficients " + fx + "/c7_lm_rep.json", 0},
      {"cocycle check " + fx + "/c7_cocycle.json --against " + fx + "/c7_lm_rep.json", 0},
      {"semidirect " + fx + "/a4.json " + fx + "/a4_adjoint_rep.json", 0},
      {"semidirect " + fx + "/c7_lm.json " + fx + "/c7_lm_rep.json", 0},
      {"semidirect " + fx + "/a4.json " + fx + "/n2d3_adjoint_rep.json", 2},
      {"extend " + fx + "/c7_lm.json " + fx + "/c7_lm_rep.json " + fx + "/c7_cocycle.json", 0},
      {"extract " + fx + "/c7_ext_nontrivial.json", 0},
      {"extract " + fx + "/c7_ext_split.json --section " + fx + "/c7_section_shear.json", 0},
      {"equivalent " + fx + "/c7_ext_split.json " + fx + "/c7_ext_shifted.json", 0},
      {"equivalent " + fx + "/c7_ext_split.json " + fx + "/c7_ext_nontrivial.json", 1},
      {"nijenhuis check " + fx + "/a4_id_ad_lm.json " + fx + "/nijenhuis_e21.json", 0},
      {"nijenhuis check " + fx + "/a4_id_ad_lm.json " + fx + "/nijenhuis_bad.json", 1},
      {"deform check " + fx + "/a4_id_ad_lm.json " + fx + "/deformation_e21.json", 0},
      {"deform from-nijenhuis " + fx + "/a4_id_ad_lm.json " + fx + "/nijenhuis_e21.json", 0},
  };
  bool ok = true;
  int idx = 0;
  for (const auto& c : cases) {
    for (const std::string& format : {std::string("text"), std::string("json")}) {
      std::string args = "--format " + format + " " + c.args;
      CliRun r1 = run_cli(args, "a" + std::to_string(idx) + format);
      CliRun r2 = run_cli(args, "b" + std::to_string(idx) + format);
      if (r1.exit_code != c.expect || r2.exit_code != c.expect) {
        std::cout << "  exit mismatch (" << r1.exit_code << " vs expected " << c.expect
                  << "): " << c.args << "\n";
        ok = false;
      }
      if (r1.output != r2.output) {
        std::cout << "  nondeterministic output: " << c.args << "\n";
        ok = false;
      }
    }
    ++idx;
  }
  // the documented H^1 = 4 row for the abelian/trivial example
  CliRun h = run_cli("--format json cohomology " + fx + "/abelian34.json --degree 1 --coefficients " +
                         fx + "/abelian34_trivial1_rep.json",
                     "h1row");
  if (h.output.find("\"cohomology\": 4") == std::string::npos) ok = false;
  line(11, "CLI exit codes and byte-identical reports across repeated runs", ok);
}

}  // namespace

int main() {
  delta_squared_and_dual_assembly();
  prop_2_5_biconditional();
  induced_bracket_property();
  id_plus_f_biconditional();
  lm_complex_squares_to_zero();
  extension_roundtrips();
  deformation_equivalence();
  nijenhuis_deformations();
  counting_identities();
  cli_contract();
  std::cout << (g_failures == 0 ? "ACCEPTANCE: all 11 criteria passed\n"
                                : "ACCEPTANCE: " + std::to_string(g_failures) + " criteria FAILED\n");
  return g_failures == 0 ? 0 : 1;
}
