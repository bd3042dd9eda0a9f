// Regenerates the JSON fixture corpus under a target directory (default
// fixtures/). The corpus is deterministic; tests and the acceptance suite
// consume it read-only.

#include <filesystem>
#include <fstream>
#include <iostream>

#include "nlal/io.hpp"

using namespace nlal;

namespace {

NLieAlgebra a4() {
  NLieAlgebra a(3, 4, "a4");
  for (const auto& t : wedge_basis(4, 3)) {
    int l = 6 - t[0] - t[1] - t[2];
    IndexTuple full = t;
    full.push_back(l);
    auto [s, sorted] = normalize_wedge(full);
    a.bracket.add(t, l, Rational(s));
  }
  return a;
}

NLieAlgebra n2d3() {
  NLieAlgebra a(2, 3, "so3q");
  a.bracket.add({0, 1}, 2, Rational(1));
  a.bracket.add({1, 2}, 0, Rational(1));
  a.bracket.add({2, 0}, 1, Rational(1));
  return a;
}

void write(const std::filesystem::path& dir, const std::string& name, const Json& j) {
  std::ofstream out(dir / name, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write " + (dir / name).string());
  out << j.dump(2) << "\n";
  std::cout << "wrote " << (dir / name).string() << "\n";
}

}  // namespace

int main(int argc, char** argv) {
  std::filesystem::path dir = argc > 1 ? argv[1] : "fixtures";
  std::filesystem::create_directories(dir);

  NLieAlgebra A4 = a4();
  NLieAlgebra SO3 = n2d3();
  NLieAlgebra AB34(3, 4, "abelian34");

  write(dir, "a4.json", io::nlie_json(A4));
  write(dir, "n2d3.json", io::nlie_json(SO3));
  write(dir, "abelian34.json", io::nlie_json(AB34));

  {
    NLieAlgebra bad = A4;
    bad.name = "a4-broken";
    bad.bracket.add({0, 1, 2}, 0, Rational(1));
    write(dir, "a4_broken.json", io::nlie_json(bad));
  }
  {
    LeibnizNAlgebra bad(2, 2, "bad-leibniz");
    bad.at({0, 0})[1] = Rational(1);
    bad.at({0, 1})[0] = Rational(1);
    write(dir, "bad_leibniz22.json", io::leibniz_n_json(bad));
  }
  write(dir, "a4_hemisemidirect.json",
        io::leibniz_n_json(hemisemidirect_product(adjoint_representation(A4))));

  write(dir, "a4_adjoint_rep.json", io::rep_json(adjoint_representation(A4), "a4-adjoint"));
  write(dir, "n2d3_adjoint_rep.json", io::rep_json(adjoint_representation(SO3), "so3q-adjoint"));
  write(dir, "abelian34_trivial1_rep.json",
        io::rep_json(trivial_representation(AB34, 1), "abelian34-trivial1"));
  {
    Representation w(AB34, 1);
    for (auto& m : w.rho) m.at(0, 0) = Rational(1);
    write(dir, "weak_rep.json", io::rep_json(w, "abelian34-weak"));
  }

  LMAlgebra lm_a4{A4, adjoint_representation(A4), Matrix::identity(4), "a4-id-ad"};
  write(dir, "a4_id_ad_lm.json", io::lm_json(lm_a4));
  LMAlgebra lm_f0{A4, adjoint_representation(A4), Matrix(4, 4), "a4-f0"};
  write(dir, "a4_f0_lm.json", io::lm_json(lm_f0));
  {
    LMAlgebra broken = lm_a4;
    broken.name = "a4-broken-f";
    broken.f = Matrix(4, 4);
    broken.f.at(0, 0) = Rational(1);
    broken.f.at(0, 1) = Rational(1);
    write(dir, "a4_broken_f_lm.json", io::lm_json(broken));
  }

  write(dir, "a4_adjoint_lm_rep.json",
        io::lm_rep_json(LMRepFile{lm_a4, adjoint_lm_representation(lm_a4)}, "a4-id-ad-adjoint"));
  write(dir, "a4_trivial11_lm_rep.json",
        io::lm_rep_json(LMRepFile{lm_a4, trivial_lm_representation(lm_a4, 1, 1)},
                        "a4-id-ad-trivial11"));

  LMAlgebra c7{SO3, trivial_representation(SO3, 2), Matrix(3, 2), "c7"};
  LMRepresentation r7 = trivial_lm_representation(c7, 2, 2);
  r7.phi.at(0, 0) = Rational(1);
  write(dir, "c7_lm.json", io::lm_json(c7));
  write(dir, "c7_lm_rep.json", io::lm_rep_json(LMRepFile{c7, r7}, "c7-target"));

  // a nontrivial cocycle and three extensions: split, shifted, distinct class
  {
    Matrix E = lm_skew_embedding(c7, r7, 2);
    Matrix D2E = lm_coboundary_matrix(c7, r7, 2) * E;
    Matrix D1 = lm_coboundary_matrix(c7, r7, 1);
    auto kb = kernel_basis(D2E);
    LMCochain nontrivial(c7, r7, 2);
    bool found = false;
    for (const auto& k : kb) {
      Vec coords = E.apply(k);
      if (!solve(D1, coords)) {
        LMCochainDims d = lm_cochain_dims(c7, r7, 2);
        long pos = 0;
        for (long p = 0; p < d.omega / r7.wdim; ++p)
          for (int w = 0; w < r7.wdim; ++w) nontrivial.omega.value_at(p)[w] = coords[pos++];
        for (long p = 0; p < d.nu / r7.vdim; ++p)
          for (int v = 0; v < r7.vdim; ++v) nontrivial.nu.value_at(p)[v] = coords[pos++];
        for (long p = 0; p < d.theta / r7.wdim; ++p)
          for (int w = 0; w < r7.wdim; ++w) nontrivial.theta.value_at(p)[w] = coords[pos++];
        found = true;
        break;
      }
    }
    if (!found) throw std::runtime_error("no nontrivial class found");
    Cochain2File cf;
    cf.target = "lm";
    cf.n = 2;
    cf.dim_g = 3;
    cf.dim_m = 2;
    cf.v_dim = 2;
    cf.w_dim = 2;
    cf.omega_block = nontrivial.omega;
    cf.nu = nontrivial.nu;
    cf.theta = nontrivial.theta;
    write(dir, "c7_cocycle.json", io::cochain2_json(cf, "c7-nontrivial-cocycle"));

    AbelianExtension split = extension_from_cocycle(c7, r7, LMCochain(c7, r7, 2));
    write(dir, "c7_ext_split.json", io::extension_json(split, "c7-split"));
    LMCochain cob = lm_coboundary_1(c7, r7, Matrix(2, 3), [&] {
      Matrix b1(2, 2);
      b1.at(0, 0) = Rational(1);
      b1.at(1, 0) = Rational(2);
      return b1;
    }());
    AbelianExtension shifted = extension_from_cocycle(c7, r7, cob);
    write(dir, "c7_ext_shifted.json", io::extension_json(shifted, "c7-shifted"));
    AbelianExtension nont = extension_from_cocycle(c7, r7, nontrivial);
    write(dir, "c7_ext_nontrivial.json", io::extension_json(nont, "c7-nontrivial"));

    SectionFile sec;
    sec.section = canonical_section(split);
    Matrix b0(2, 3);
    b0.at(0, 0) = Rational(1);
    sec.section.sigma0 = sec.section.sigma0 + (split.i0 * b0);
    write(dir, "c7_section_shear.json", io::section_json(sec, "c7-sheared-section"));
  }

  {
    NijenhuisFile nf;
    nf.dim_g = 4;
    nf.dim_m = 4;
    nf.pair.N0 = Matrix(4, 4);
    nf.pair.N0.at(1, 0) = Rational(1);
    nf.pair.N1 = nf.pair.N0;
    write(dir, "nijenhuis_e21.json", io::nijenhuis_json(nf, "e21-pair"));
    NijenhuisFile bad;
    bad.dim_g = 4;
    bad.dim_m = 4;
    bad.pair.N0 = Matrix(4, 4);
    bad.pair.N0.at(0, 1) = Rational(1);
    bad.pair.N0.at(1, 0) = Rational(1);
    bad.pair.N0.at(2, 3) = Rational(1);
    bad.pair.N1 = Matrix::identity(4);
    write(dir, "nijenhuis_bad.json", io::nijenhuis_json(bad, "bad-pair"));
    FormalDeformation d = deformation_from_nijenhuis(lm_a4, nf.pair);
    write(dir, "deformation_e21.json",
          io::deformation_json(DeformationFile{4, 4, d}, "e21-deformation"));
  }

  return 0;
}
