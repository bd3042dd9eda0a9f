// Command-line interface for the n-Lie / Loday-Pirashvili algebra library.
// Exit codes: 0 every check passed, 1 a mathematical check failed,
// 2 usage or input problem.

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <string>

#include "nlal/io.hpp"

using namespace nlal;

namespace {

struct Options {
  std::string format = "text";
};

int emit_report(const Options& opt, const std::string& command, const Report& r) {
  int code = r.pass() ? 0 : 1;
  if (opt.format == "json") {
    Json j;
    j["schema_version"] = 1;
    j["command"] = command;
    j["pass"] = r.pass();
    j["exit_code"] = code;
    j["report"] = io::report_json(r);
    std::cout << j.dump(2) << "\n";
  } else {
    std::cout << "command: " << command << "\n" << io::report_text(r);
  }
  return code;
}

void emit_document(const Options& opt, const Json& doc, const std::string& out_path) {
  (void)opt;
  if (out_path.empty()) {
    std::cout << doc.dump(2) << "\n";
  } else {
    std::ofstream out(out_path, std::ios::binary);
    if (!out) throw ShapeError(out_path + ": cannot open for writing");
    out << doc.dump(2) << "\n";
  }
}

template <class T>
const T& expect(const ParsedFile& f, const char* kind) {
  if (f.kind != kind)
    throw ShapeError(f.name + ": expected a '" + kind + "' file, got '" + f.kind + "'");
  return std::get<T>(f.value);
}

bool nlie_equal(const NLieAlgebra& a, const NLieAlgebra& b) {
  return a.n == b.n && a.dim == b.dim && a.bracket == b.bracket;
}

/// LMCochain from a parsed degree-2 cochain file, checked against the target
/// representation's dimensions.
LMCochain lm_cochain_of(const Cochain2File& f, const LMAlgebra& base, const LMRepresentation& r) {
  if (f.target != "lm") throw ShapeError("cochain: target must be 'lm' here");
  if (f.n != base.g.n || f.dim_g != base.g.dim || f.dim_m != base.mdim() || f.v_dim != r.vdim ||
      f.w_dim != r.wdim)
    throw ShapeError("cochain: dimensions do not match the base/representation");
  LMCochain c(base, r, 2);
  if (f.omega_block) {
    c.omega = *f.omega_block;
  } else {
    const auto& wt = c.omega.table();
    for (long rk = 0; rk < wt.count(); ++rk)
      for (int z = 0; z < base.g.dim; ++z) {
        IndexTuple t = wt.basis[rk];
        t.push_back(z);
        Vec v = f.omega_skew->eval(t);
        std::array<long, 1> ranks{rk};
        std::array<int, 1> slots{z};
        long pos = c.omega.position(ranks, slots);
        for (int k = 0; k < r.wdim; ++k) c.omega.value_at(pos)[k] = v[k];
      }
  }
  c.nu = *f.nu;
  c.theta = *f.theta;
  return c;
}

Json dims_row(int degree, long c, long z, long b, long h, bool beyond) {
  Json row;
  row["degree"] = degree;
  row["cochain"] = c;
  row["cocycles"] = z;
  row["coboundaries"] = b;
  row["cohomology"] = h;
  if (beyond) row["note"] = "beyond the explicit degree-1/2 formulas";
  return row;
}

int emit_table(const Options& opt, const std::string& command, const Json& table) {
  if (opt.format == "json") {
    Json j;
    j["schema_version"] = 1;
    j["command"] = command;
    j["pass"] = true;
    j["exit_code"] = 0;
    j["table"] = table;
    std::cout << j.dump(2) << "\n";
  } else {
    std::cout << "command: " << command << "\n";
    std::cout << "p  dim C   dim Z   dim B   dim H\n";
    for (const auto& row : table) {
      std::cout << row["degree"].get<int>() << "  " << row["cochain"].get<long>() << "\t"
                << row["cocycles"].get<long>() << "\t" << row["coboundaries"].get<long>() << "\t"
                << row["cohomology"].get<long>();
      if (row.contains("note")) std::cout << "  (" << row["note"].get<std::string>() << ")";
      std::cout << "\n";
    }
  }
  return 0;
}

int cmd_validate(const Options& opt, const std::string& path) {
  ParsedFile f = io::parse_file(path);
  Report r;
  if (f.kind == "nlie") {
    r = validate_n_lie(std::get<NLieAlgebra>(f.value));
  } else if (f.kind == "leibniz_n") {
    r = validate_leibniz_n(std::get<LeibnizNAlgebra>(f.value));
  } else if (f.kind == "rep") {
    const auto& rep = std::get<Representation>(f.value);
    r.absorb(validate_n_lie(rep.algebra), "algebra.");
    r.absorb(validate_representation(rep, RepMode::full), "");
  } else if (f.kind == "lm") {
    r = validate_lm(std::get<LMAlgebra>(f.value));
  } else if (f.kind == "lm_rep") {
    const auto& lr = std::get<LMRepFile>(f.value);
    r.absorb(validate_lm(lr.base), "base.");
    r.absorb(validate_lm_representation(lr.rep, lr.base), "");
  } else if (f.kind == "extension") {
    r = validate_extension(std::get<AbelianExtension>(f.value));
  } else {
    throw ShapeError(path + ": kind '" + f.kind +
                     "' has no standalone validator; use the dedicated subcommand");
  }
  r.subject = f.name;
  return emit_report(opt, "validate", r);
}

int cmd_cohomology(const Options& opt, const std::string& path, int degree,
                   const std::string& coefficients) {
  ParsedFile f = io::parse_file(path);
  Json table = Json::array();
  if (f.kind == "nlie") {
    const auto& g = std::get<NLieAlgebra>(f.value);
    Representation rep;
    if (coefficients == "adjoint") {
      rep = adjoint_representation(g);
    } else {
      ParsedFile cf = io::parse_file(coefficients);
      rep = expect<Representation>(cf, "rep");
      if (!nlie_equal(rep.algebra, g))
        throw ShapeError(coefficients + ": representation is not over the given algebra");
    }
    {
      Report v;
      v.absorb(validate_n_lie(g), "algebra.");
      v.absorb(validate_representation(rep, RepMode::full), "coefficients.");
      if (!v.pass()) return emit_report(opt, "cohomology", v);
    }
    for (int p = 1; p <= degree; ++p) {
      CohomologyDims d = cohomology_dim(rep, p);
      table.push_back(dims_row(p, d.cochain, d.cocycles, d.coboundaries, d.cohomology, false));
    }
  } else if (f.kind == "lm") {
    const auto& a = std::get<LMAlgebra>(f.value);
    LMRepresentation rep;
    if (coefficients == "adjoint") {
      rep = adjoint_lm_representation(a);  // throws ValidationError if a invalid
    } else {
      ParsedFile cf = io::parse_file(coefficients);
      const auto& lr = expect<LMRepFile>(cf, "lm_rep");
      if (!detail::lm_equal(lr.base, a))
        throw ShapeError(coefficients + ": representation is not over the given LM algebra");
      rep = lr.rep;
    }
    {
      Report v;
      v.absorb(validate_lm(a), "base.");
      v.absorb(validate_lm_representation(rep, a), "coefficients.");
      if (!v.pass()) return emit_report(opt, "cohomology", v);
    }
    for (int k = 1; k <= degree; ++k) {
      LMCohomologyDims d = lm_cohomology_dim(a, rep, k);
      table.push_back(
          dims_row(k, d.cochain, d.cocycles, d.coboundaries, d.cohomology, d.beyond_explicit));
    }
  } else {
    throw ShapeError(path + ": cohomology expects an 'nlie' or 'lm' file");
  }
  return emit_table(opt, "cohomology", table);
}

int cmd_cocycle_check(const Options& opt, const std::string& path, const std::string& against) {
  ParsedFile cf = io::parse_file(path);
  const auto& c = expect<Cochain2File>(cf, "cochain2");
  ParsedFile bf = io::parse_file(against);
  Report r;
  if (c.target == "nlie") {
    const auto& rep = expect<Representation>(bf, "rep");
    if (c.n != rep.algebra.n || c.dim_g != rep.algebra.dim || c.value_dim != rep.module_dim)
      throw ShapeError(path + ": cochain dimensions do not match the representation");
    r.absorb(validate_n_lie(rep.algebra), "algebra.");
    r.absorb(validate_representation(rep, RepMode::full), "coefficients.");
    if (r.pass()) {
      Report cc = c.omega_skew ? is_two_cocycle(rep, *c.omega_skew) : is_two_cocycle(rep, *c.omega_block);
      r.absorb(cc, "");
    }
  } else {
    const auto& lr = expect<LMRepFile>(bf, "lm_rep");
    r.absorb(validate_lm(lr.base), "base.");
    r.absorb(validate_lm_representation(lr.rep, lr.base), "rep.");
    if (r.pass()) {
      LMCochain lc = lm_cochain_of(c, lr.base, lr.rep);
      r.absorb(is_lm_two_cocycle(lr.base, lr.rep, lc), "");
    }
  }
  r.subject = cf.name;
  return emit_report(opt, "cocycle check", r);
}

int cmd_semidirect(const Options& opt, const std::string& base_path, const std::string& rep_path,
                   const std::string& out) {
  ParsedFile bf = io::parse_file(base_path);
  ParsedFile rf = io::parse_file(rep_path);
  if (bf.kind == "nlie") {
    const auto& g = std::get<NLieAlgebra>(bf.value);
    const auto& rep = expect<Representation>(rf, "rep");
    if (!nlie_equal(rep.algebra, g))
      throw ShapeError(rep_path + ": representation is not over the given algebra");
    NLieAlgebra prod = semidirect_product(rep);  // validates, throws on failure
    emit_document(opt, io::nlie_json(prod), out);
    return 0;
  }
  if (bf.kind == "lm") {
    const auto& a = std::get<LMAlgebra>(bf.value);
    const auto& lr = expect<LMRepFile>(rf, "lm_rep");
    if (!detail::lm_equal(lr.base, a))
      throw ShapeError(rep_path + ": representation is not over the given LM algebra");
    LMAlgebra prod = lm_semidirect(a, lr.rep);
    emit_document(opt, io::lm_json(prod), out);
    return 0;
  }
  throw ShapeError(base_path + ": semidirect expects an 'nlie' or 'lm' base");
}

int cmd_extend(const Options& opt, const std::string& base_path, const std::string& rep_path,
               const std::string& cocycle_path, const std::string& out) {
  const auto base_f = io::parse_file(base_path);
  const auto& base = expect<LMAlgebra>(base_f, "lm");
  const auto rep_f = io::parse_file(rep_path);
  const auto& lr = expect<LMRepFile>(rep_f, "lm_rep");
  if (!detail::lm_equal(lr.base, base))
    throw ShapeError(rep_path + ": representation is not over the given LM algebra");
  const auto coc_f = io::parse_file(cocycle_path);
  const auto& cf = expect<Cochain2File>(coc_f, "cochain2");
  LMCochain c = lm_cochain_of(cf, base, lr.rep);
  AbelianExtension e = extension_from_cocycle(base, lr.rep, c);  // rejects non-cocycles
  emit_document(opt, io::extension_json(e, base.name + ".extension"), out);
  return 0;
}

int cmd_extract(const Options& opt, const std::string& ext_path, const std::string& section_path,
                const std::string& out) {
  const auto ext_f = io::parse_file(ext_path);
  const auto& e = expect<AbelianExtension>(ext_f, "extension");
  Section s;
  if (section_path.empty()) {
    s = canonical_section(e);
  } else {
    const auto sf = io::parse_file(section_path);
    s = expect<SectionFile>(sf, "section").section;
    if (s.sigma0.rows() != e.total.g.dim || s.sigma0.cols() != e.base.g.dim ||
        s.sigma1.rows() != e.total.mdim() || s.sigma1.cols() != e.base.mdim())
      throw ShapeError(section_path + ": section shapes do not match the extension");
    Report sr;
    sr.subject = section_path;
    auto& c0 = sr.add("p0_sigma0_identity");
    c0.record(detail::flatten(e.p0 * s.sigma0 - Matrix::identity(e.base.g.dim)), {});
    auto& c1 = sr.add("p1_sigma1_identity");
    c1.record(detail::flatten(e.p1 * s.sigma1 - Matrix::identity(e.base.mdim())), {});
    if (!sr.pass()) return emit_report(opt, "extract", sr);
  }
  LMCochain c = cocycle_from_extension(e, s);  // validates the extension
  LMRepresentation rep = rep_from_extension(e, s);
  Cochain2File cf;
  cf.target = "lm";
  cf.n = e.base.g.n;
  cf.dim_g = e.base.g.dim;
  cf.dim_m = e.base.mdim();
  cf.v_dim = rep.vdim;
  cf.w_dim = rep.wdim;
  cf.omega_block = c.omega;
  cf.nu = c.nu;
  cf.theta = c.theta;
  emit_document(opt, io::cochain2_json(cf, ext_f.name + ".cocycle"), out);
  return 0;
}

int cmd_equivalent(const Options& opt, const std::string& e1_path, const std::string& e2_path) {
  const auto f1 = io::parse_file(e1_path);
  const auto f2 = io::parse_file(e2_path);
  const auto& e1 = expect<AbelianExtension>(f1, "extension");
  const auto& e2 = expect<AbelianExtension>(f2, "extension");
  auto w = extension_equivalence(e1, e2);
  Report r;
  r.subject = f1.name + " ~ " + f2.name;
  auto& chk = r.add("equivalent");
  chk.instances = 1;
  if (!w) {
    chk.pass = false;
    chk.note = "no witness: the cocycle classes differ in H^2";
    return emit_report(opt, "equivalent", r);
  }
  chk.note = "witness F found and verified";
  r.absorb(w->verification, "witness.");
  if (opt.format == "json") {
    Json j;
    j["schema_version"] = 1;
    j["command"] = "equivalent";
    j["pass"] = r.pass();
    j["exit_code"] = r.pass() ? 0 : 1;
    j["report"] = io::report_json(r);
    j["witness"]["F0"] = io::matrix_json(w->F0);
    j["witness"]["F1"] = io::matrix_json(w->F1);
    j["witness"]["b0"] = io::matrix_json(w->b0);
    j["witness"]["b1"] = io::matrix_json(w->b1);
    std::cout << j.dump(2) << "\n";
    return r.pass() ? 0 : 1;
  }
  int code = emit_report(opt, "equivalent", r);
  std::cout << "witness F0 = " << io::matrix_json(w->F0).dump() << "\n";
  std::cout << "witness F1 = " << io::matrix_json(w->F1).dump() << "\n";
  return code;
}

int cmd_nijenhuis_check(const Options& opt, const std::string& base_path,
                        const std::string& pair_path) {
  const auto bf = io::parse_file(base_path);
  const auto& a = expect<LMAlgebra>(bf, "lm");
  const auto pf = io::parse_file(pair_path);
  const auto& nf = expect<NijenhuisFile>(pf, "nijenhuis");
  if (nf.dim_g != a.g.dim || nf.dim_m != a.mdim())
    throw ShapeError(pair_path + ": pair dimensions do not match the base");
  Report r = is_nijenhuis(a, nf.pair);
  r.subject = pf.name;
  return emit_report(opt, "nijenhuis check", r);
}

int cmd_deform_check(const Options& opt, const std::string& base_path,
                     const std::string& def_path) {
  const auto bf = io::parse_file(base_path);
  const auto& a = expect<LMAlgebra>(bf, "lm");
  const auto df = io::parse_file(def_path);
  const auto& fd = expect<DeformationFile>(df, "deformation");
  if (fd.dim_g != a.g.dim || fd.dim_m != a.mdim())
    throw ShapeError(def_path + ": deformation dimensions do not match the base");
  Report r;
  r.subject = df.name;
  Report base_ok = validate_lm(a);
  if (!base_ok.pass()) {
    base_ok.subject = bf.name;
    return emit_report(opt, "deform check", base_ok);
  }
  if (fd.def.order == 1) {
    DeformationTriple tri(a);
    tri.theta = fd.def.theta[0];
    tri.omega = fd.def.omega[0];
    tri.nu = fd.def.nu[0];
    r.absorb(validate_infinitesimal_deformation(a, tri), "");
  } else {
    r.absorb(validate_formal_deformation(a, fd.def), "");
  }
  return emit_report(opt, "deform check", r);
}

int cmd_deform_from_nijenhuis(const Options& opt, const std::string& base_path,
                              const std::string& pair_path, const std::string& out) {
  const auto bf = io::parse_file(base_path);
  const auto& a = expect<LMAlgebra>(bf, "lm");
  const auto pf = io::parse_file(pair_path);
  const auto& nf = expect<NijenhuisFile>(pf, "nijenhuis");
  if (nf.dim_g != a.g.dim || nf.dim_m != a.mdim())
    throw ShapeError(pair_path + ": pair dimensions do not match the base");
  FormalDeformation d = deformation_from_nijenhuis(a, nf.pair);  // rejects non-Nijenhuis
  DeformationFile fd{a.g.dim, a.mdim(), std::move(d)};
  emit_document(opt, io::deformation_json(fd, pf.name + ".deformation"), out);
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  Options opt;
  CLI::App app{"exact computations for n-Lie algebras in the Loday-Pirashvili category"};
  app.require_subcommand(1);
  app.add_option("--format", opt.format, "report format")
      ->check(CLI::IsMember({"text", "json"}))
      ->capture_default_str();

  std::function<int()> action;

  {
    auto* c = app.add_subcommand("validate", "validate the axioms of a file's object");
    auto path = std::make_shared<std::string>();
    c->add_option("file", *path, "input file")->required();
    c->callback([&, path] { action = [&, path] { return cmd_validate(opt, *path); }; });
  }
  {
    auto* c = app.add_subcommand("cohomology", "cohomology dimension table");
    auto path = std::make_shared<std::string>();
    auto deg = std::make_shared<int>(3);
    auto coeff = std::make_shared<std::string>("adjoint");
    c->add_option("file", *path, "nlie or lm file")->required();
    c->add_option("--degree", *deg, "maximum degree")->check(CLI::Range(1, 6));
    c->add_option("--coefficients", *coeff, "adjoint or a rep / lm_rep file");
    c->callback([&, path, deg, coeff] {
      action = [&, path, deg, coeff] { return cmd_cohomology(opt, *path, *deg, *coeff); };
    });
  }
  {
    auto* c = app.add_subcommand("cocycle", "cocycle tests");
    auto* chk = c->add_subcommand("check", "test a degree-2 cochain");
    auto path = std::make_shared<std::string>();
    auto against = std::make_shared<std::string>();
    chk->add_option("file", *path, "cochain2 file")->required();
    chk->add_option("--against", *against, "rep or lm_rep file")->required();
    chk->callback([&, path, against] {
      action = [&, path, against] { return cmd_cocycle_check(opt, *path, *against); };
    });
    c->require_subcommand(1);
  }
  {
    auto* c = app.add_subcommand("semidirect", "semidirect product");
    auto base = std::make_shared<std::string>();
    auto rep = std::make_shared<std::string>();
    auto out = std::make_shared<std::string>();
    c->add_option("base", *base, "nlie or lm file")->required();
    c->add_option("rep", *rep, "rep or lm_rep file")->required();
    c->add_option("-o,--output", *out, "write the product file here (default stdout)");
    c->callback([&, base, rep, out] {
      action = [&, base, rep, out] { return cmd_semidirect(opt, *base, *rep, *out); };
    });
  }
  {
    auto* c = app.add_subcommand("extend", "build the extension attached to a 2-cocycle");
    auto base = std::make_shared<std::string>(), rep = std::make_shared<std::string>(),
         coc = std::make_shared<std::string>(), out = std::make_shared<std::string>();
    c->add_option("base", *base, "lm file")->required();
    c->add_option("rep", *rep, "lm_rep file")->required();
    c->add_option("cocycle", *coc, "cochain2 file")->required();
    c->add_option("-o,--output", *out, "write the extension file here (default stdout)");
    c->callback([&, base, rep, coc, out] {
      action = [&, base, rep, coc, out] { return cmd_extend(opt, *base, *rep, *coc, *out); };
    });
  }
  {
    auto* c = app.add_subcommand("extract", "extract the 2-cocycle of an extension");
    auto ext = std::make_shared<std::string>(), sec = std::make_shared<std::string>(),
         out = std::make_shared<std::string>();
    c->add_option("extension", *ext, "extension file")->required();
    c->add_option("--section", *sec, "section file (default: canonical section)");
    c->add_option("-o,--output", *out, "write the cocycle file here (default stdout)");
    c->callback([&, ext, sec, out] {
      action = [&, ext, sec, out] { return cmd_extract(opt, *ext, *sec, *out); };
    });
  }
  {
    auto* c = app.add_subcommand("equivalent", "decide equivalence of two extensions");
    auto e1 = std::make_shared<std::string>(), e2 = std::make_shared<std::string>();
    c->add_option("e1", *e1, "extension file")->required();
    c->add_option("e2", *e2, "extension file")->required();
    c->callback([&, e1, e2] { action = [&, e1, e2] { return cmd_equivalent(opt, *e1, *e2); }; });
  }
  {
    auto* c = app.add_subcommand("nijenhuis", "Nijenhuis operators");
    auto* chk = c->add_subcommand("check", "test the three conditions");
    auto base = std::make_shared<std::string>(), pair = std::make_shared<std::string>();
    chk->add_option("base", *base, "lm file (n = 3)")->required();
    chk->add_option("pair", *pair, "nijenhuis file")->required();
    chk->callback([&, base, pair] {
      action = [&, base, pair] { return cmd_nijenhuis_check(opt, *base, *pair); };
    });
    c->require_subcommand(1);
  }
  {
    auto* c = app.add_subcommand("deform", "deformations");
    c->require_subcommand(1);
    {
      auto* chk = c->add_subcommand("check", "validate a deformation against a base");
      auto base = std::make_shared<std::string>(), def = std::make_shared<std::string>();
      chk->add_option("base", *base, "lm file (n = 3)")->required();
      chk->add_option("deformation", *def, "deformation file")->required();
      chk->callback([&, base, def] {
        action = [&, base, def] { return cmd_deform_check(opt, *base, *def); };
      });
    }
    {
      auto* gen = c->add_subcommand("from-nijenhuis", "generate the order-2 trivial deformation");
      auto base = std::make_shared<std::string>(), pair = std::make_shared<std::string>(),
           out = std::make_shared<std::string>();
      gen->add_option("base", *base, "lm file (n = 3)")->required();
      gen->add_option("pair", *pair, "nijenhuis file")->required();
      gen->add_option("-o,--output", *out, "write the deformation file here (default stdout)");
      gen->callback([&, base, pair, out] {
        action = [&, base, pair, out] { return cmd_deform_from_nijenhuis(opt, *base, *pair, *out); };
      });
    }
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }
  try {
    return action ? action() : 2;
  } catch (const ValidationError& e) {
    // a construction was handed input failing its validation precondition
    std::cerr << e.what() << "\n";
    int code = emit_report(opt, "validation", e.report);
    return code == 0 ? 1 : code;
  } catch (const ShapeError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
}
