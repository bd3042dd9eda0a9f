#ifndef NLAL_IO_HPP
#define NLAL_IO_HPP

#include <fstream>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <variant>

#include <json.hpp>

#include "nlal/deformations.hpp"

namespace nlal {

using Json = nlohmann::ordered_json;

/// File-kind payloads beyond the core value types.
struct LMRepFile {
  LMAlgebra base;
  LMRepresentation rep;
};

/// Degree-2 cochain file; omega in either the fully-skew or the block
/// storage, per the two cochain-space readings supported at degree 2.
struct Cochain2File {
  std::string target;  // "nlie" | "lm"
  int n = 0, dim_g = 0;
  // nlie: a 2-cochain valued in a module of dimension value_dim
  int value_dim = 0;
  // lm: component dimensions
  int dim_m = 0, v_dim = 0, w_dim = 0;
  std::optional<SkewTensor> omega_skew;
  std::optional<BlockCochain> omega_block;
  std::optional<BlockCochain> nu;     // lm only
  std::optional<BlockCochain> theta;  // lm only (0 blocks, slot M, target W)
};

struct DeformationFile {
  int dim_g = 0, dim_m = 0;
  FormalDeformation def;
};

struct NijenhuisFile {
  int dim_g = 0, dim_m = 0;
  NijenhuisPair pair;
};

struct SectionFile {
  Section section;
};

struct ParsedFile {
  std::string kind;
  std::string name;
  std::variant<NLieAlgebra, LeibnizNAlgebra, Representation, LMAlgebra, LMRepFile,
               AbelianExtension, Cochain2File, DeformationFile, NijenhuisFile, SectionFile>
      value;
};

namespace io {

/// JSON access with a tracked path so shape errors name the offending node.
class Cursor {
public:
  Cursor(const Json& j, std::string path) : j_(&j), path_(std::move(path)) {}

  const Json& raw() const { return *j_; }
  const std::string& path() const { return path_; }

  [[noreturn]] void fail(const std::string& msg) const { throw ShapeError(path_ + ": " + msg); }

  bool has(const char* key) const { return j_->is_object() && j_->contains(key); }

  Cursor at(const char* key) const {
    if (!j_->is_object()) fail("expected an object");
    if (!j_->contains(key)) fail(std::string("missing key '") + key + "'");
    return Cursor((*j_)[key], path_ + "." + key);
  }

  Cursor at(std::size_t i) const {
    if (!j_->is_array()) fail("expected an array");
    if (i >= j_->size()) fail("index out of range");
    return Cursor((*j_)[i], path_ + "[" + std::to_string(i) + "]");
  }

  std::size_t size() const {
    if (!j_->is_array()) fail("expected an array");
    return j_->size();
  }

  long as_integer() const {
    if (!j_->is_number_integer()) fail("expected an integer");
    return j_->get<long>();
  }

  int as_count(long lo, long hi) const {
    long v = as_integer();
    if (v < lo || v > hi) fail("value " + std::to_string(v) + " outside [" + std::to_string(lo) + ", " + std::to_string(hi) + "]");
    return static_cast<int>(v);
  }

  std::string as_string() const {
    if (!j_->is_string()) fail("expected a string");
    return j_->get<std::string>();
  }

  Rational as_rational() const {
    if (!j_->is_string()) fail("expected a rational string \"p/q\"");
    try {
      return Rational::parse(j_->get<std::string>());
    } catch (const std::domain_error& e) {
      fail(e.what());
    }
  }

  /// 1-based index into a space of the given dimension, converted to 0-based.
  int as_index(int dim) const {
    long v = as_integer();
    if (v < 1 || v > dim) fail("index " + std::to_string(v) + " outside 1.." + std::to_string(dim));
    return static_cast<int>(v - 1);
  }

  IndexTuple as_tuple(int dim, int len, bool strictly_increasing) const {
    if (!j_->is_array()) fail("expected an index array");
    if (static_cast<int>(j_->size()) != len)
      fail("expected " + std::to_string(len) + " indices, got " + std::to_string(j_->size()));
    IndexTuple t(len);
    for (int i = 0; i < len; ++i) t[i] = at(i).as_index(dim);
    if (strictly_increasing)
      for (int i = 1; i < len; ++i)
        if (t[i - 1] >= t[i]) fail("indices must be strictly increasing");
    return t;
  }

  /// Dense rows x cols matrix of rational strings.
  Matrix as_matrix(int rows, int cols) const {
    if (!j_->is_array()) fail("expected a matrix (array of rows)");
    if (static_cast<int>(j_->size()) != rows) fail("expected " + std::to_string(rows) + " rows");
    Matrix m(rows, cols);
    for (int i = 0; i < rows; ++i) {
      Cursor row = at(static_cast<std::size_t>(i));
      if (static_cast<int>(row.size()) != cols) row.fail("expected " + std::to_string(cols) + " columns");
      for (int j = 0; j < cols; ++j) m.at(i, j) = row.at(static_cast<std::size_t>(j)).as_rational();
    }
    return m;
  }

  /// Sparse vector {"<1-based index>": "p/q", ...} of the given dimension.
  Vec as_sparse_vec(int dim) const {
    if (!j_->is_object()) fail("expected an object of index -> rational");
    Vec v(dim, Rational(0));
    for (auto it = j_->begin(); it != j_->end(); ++it) {
      long idx = 0;
      try {
        std::size_t pos = 0;
        idx = std::stol(it.key(), &pos);
        if (pos != it.key().size()) throw std::invalid_argument("");
      } catch (...) {
        fail("bad index key '" + it.key() + "'");
      }
      if (idx < 1 || idx > dim) fail("index key " + it.key() + " outside 1.." + std::to_string(dim));
      Cursor c(it.value(), path_ + "." + it.key());
      v[idx - 1] = c.as_rational();
    }
    return v;
  }

private:
  const Json* j_;
  std::string path_;
};

inline std::string key_of(const IndexTuple& t) {
  std::string s = "[";
  for (std::size_t i = 0; i < t.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(t[i] + 1);
  }
  return s + "]";
}

inline NLieAlgebra parse_nlie(const Cursor& c) {
  int n = c.at("n").as_count(2, 16);
  int dim = c.at("dim").as_count(0, 64);
  NLieAlgebra a(n, dim, c.has("name") ? c.at("name").as_string() : "");
  if (c.has("brackets")) {
    Cursor b = c.at("brackets");
    std::set<IndexTuple> seen;
    for (std::size_t i = 0; i < b.size(); ++i) {
      Cursor e = b.at(i);
      IndexTuple on = e.at("on").as_tuple(dim, n, true);
      if (!seen.insert(on).second) e.at("on").fail("duplicate bracket key " + key_of(on));
      Vec v = e.at("value").as_sparse_vec(dim);
      a.bracket.set_value(a.bracket.table().rank(on), v);
    }
  }
  return a;
}

inline LeibnizNAlgebra parse_leibniz_n(const Cursor& c) {
  int n = c.at("n").as_count(2, 16);
  int dim = c.at("dim").as_count(0, 64);
  LeibnizNAlgebra a(n, dim, c.has("name") ? c.at("name").as_string() : "");
  if (c.has("brackets")) {
    Cursor b = c.at("brackets");
    std::set<IndexTuple> seen;
    for (std::size_t i = 0; i < b.size(); ++i) {
      Cursor e = b.at(i);
      IndexTuple on = e.at("on").as_tuple(dim, n, false);
      if (!seen.insert(on).second) e.at("on").fail("duplicate bracket key " + key_of(on));
      Vec v = e.at("value").as_sparse_vec(dim);
      auto cell = a.at(on);
      for (int k = 0; k < dim; ++k) cell[k] = v[k];
    }
  }
  return a;
}

/// Wedge-keyed matrix family: [{"on":[..], "matrix": [[..]]}, ..].
inline void parse_action(const Cursor& c, Representation& r) {
  std::set<IndexTuple> seen;
  for (std::size_t i = 0; i < c.size(); ++i) {
    Cursor e = c.at(i);
    IndexTuple on = e.at("on").as_tuple(r.algebra.dim, r.algebra.n - 1, true);
    if (!seen.insert(on).second) e.at("on").fail("duplicate action key " + key_of(on));
    r.rho[r.lt.rank(on)] = e.at("matrix").as_matrix(r.module_dim, r.module_dim);
  }
}

inline Representation parse_rep(const Cursor& c) {
  NLieAlgebra g = parse_nlie(c.at("algebra"));
  int md = c.at("module_dim").as_count(0, 64);
  Representation r(std::move(g), md);
  if (c.has("action")) parse_action(c.at("action"), r);
  return r;
}

inline LMAlgebra parse_lm(const Cursor& c) {
  NLieAlgebra g = parse_nlie(c.at("g"));
  int md = c.at("module_dim").as_count(0, 64);
  Representation r(g, md);
  if (c.has("action")) parse_action(c.at("action"), r);
  Matrix f = c.at("f").as_matrix(g.dim, md);
  std::string name = c.has("name") ? c.at("name").as_string() : "";
  return LMAlgebra{std::move(g), std::move(r), std::move(f), std::move(name)};
}

inline LMRepFile parse_lm_rep(const Cursor& c) {
  LMRepFile out{parse_lm(c.at("base")), {}};
  const int dg = out.base.g.dim, dM = out.base.mdim(), n = out.base.g.n;
  LMRepresentation& r = out.rep;
  r.vdim = c.at("v_dim").as_count(0, 64);
  r.wdim = c.at("w_dim").as_count(0, 64);
  r.phi = c.at("phi").as_matrix(r.wdim, r.vdim);
  r.rho1 = Representation(out.base.g, r.vdim);
  r.rho2 = Representation(out.base.g, r.wdim);
  if (c.has("rho1")) parse_action(c.at("rho1"), r.rho1);
  if (c.has("rho2")) parse_action(c.at("rho2"), r.rho2);
  std::size_t cnt = 1;
  for (int i = 0; i < n - 2; ++i) cnt *= static_cast<std::size_t>(dg);
  r.rho3.assign(cnt * dM, Matrix(r.vdim, r.wdim));
  if (c.has("rho3")) {
    Cursor rr = c.at("rho3");
    std::set<std::pair<IndexTuple, int>> seen;
    for (std::size_t i = 0; i < rr.size(); ++i) {
      Cursor e = rr.at(i);
      IndexTuple on = e.at("on").as_tuple(dg, n - 2, false);
      int m = e.at("m").as_index(dM);
      if (!seen.insert({on, m}).second) e.fail("duplicate rho3 key");
      r.rho3_at(on, m, dg, dM) = e.at("matrix").as_matrix(r.vdim, r.wdim);
    }
  }
  return out;
}

inline AbelianExtension parse_extension(const Cursor& c) {
  AbelianExtension e;
  e.base = parse_lm(c.at("base"));
  e.total = parse_lm(c.at("total"));
  Cursor i0 = c.at("i0");
  if (!i0.raw().is_array() || i0.size() != static_cast<std::size_t>(e.total.g.dim))
    i0.fail("i0 must have dim(total g) rows");
  int dW = i0.size() ? static_cast<int>(i0.at(std::size_t{0}).size()) : 0;
  e.i0 = i0.as_matrix(e.total.g.dim, dW);
  Cursor i1 = c.at("i1");
  if (!i1.raw().is_array() || i1.size() != static_cast<std::size_t>(e.total.mdim()))
    i1.fail("i1 must have dim(total M) rows");
  int dV = i1.size() ? static_cast<int>(i1.at(std::size_t{0}).size()) : 0;
  e.i1 = i1.as_matrix(e.total.mdim(), dV);
  e.p0 = c.at("p0").as_matrix(e.base.g.dim, e.total.g.dim);
  e.p1 = c.at("p1").as_matrix(e.base.mdim(), e.total.mdim());
  return e;
}

inline Cochain2File parse_cochain2(const Cursor& c) {
  Cochain2File f;
  f.target = c.at("target").as_string();
  f.n = c.at("n").as_count(2, 16);
  f.dim_g = c.at("dim_g").as_count(0, 64);
  auto parse_omega = [&](int wdim) {
    bool has_skew = c.has("omega_skew"), has_block = c.has("omega_block");
    if (has_skew == has_block)
      c.fail("provide exactly one of omega_skew / omega_block");
    if (has_skew) {
      SkewTensor t(f.dim_g, f.n, wdim);
      Cursor o = c.at("omega_skew");
      std::set<IndexTuple> seen;
      for (std::size_t i = 0; i < o.size(); ++i) {
        Cursor e = o.at(i);
        IndexTuple on = e.at("on").as_tuple(f.dim_g, f.n, true);
        if (!seen.insert(on).second) e.at("on").fail("duplicate key " + key_of(on));
        t.set_value(t.table().rank(on), e.at("value").as_sparse_vec(wdim));
      }
      f.omega_skew = std::move(t);
    } else {
      BlockCochain t(f.dim_g, 1, f.n - 1, {f.dim_g}, wdim);
      Cursor o = c.at("omega_block");
      std::set<std::pair<IndexTuple, int>> seen;
      for (std::size_t i = 0; i < o.size(); ++i) {
        Cursor e = o.at(i);
        IndexTuple on = e.at("block").as_tuple(f.dim_g, f.n - 1, true);
        int z = e.at("z").as_index(f.dim_g);
        if (!seen.insert({on, z}).second) e.fail("duplicate key");
        Vec v = e.at("value").as_sparse_vec(wdim);
        std::array<long, 1> ranks{t.table().rank(on)};
        std::array<int, 1> slots{z};
        long pos = t.position(ranks, slots);
        for (int k = 0; k < wdim; ++k) t.value_at(pos)[k] = v[k];
      }
      f.omega_block = std::move(t);
    }
  };
  if (f.target == "nlie") {
    f.value_dim = c.at("value_dim").as_count(0, 64);
    parse_omega(f.value_dim);
  } else if (f.target == "lm") {
    f.dim_m = c.at("dim_m").as_count(0, 64);
    f.v_dim = c.at("v_dim").as_count(0, 64);
    f.w_dim = c.at("w_dim").as_count(0, 64);
    parse_omega(f.w_dim);
    BlockCochain nu(f.dim_g, 1, f.n - 1, {f.dim_m}, f.v_dim);
    if (c.has("nu")) {
      Cursor o = c.at("nu");
      std::set<std::pair<IndexTuple, int>> seen;
      for (std::size_t i = 0; i < o.size(); ++i) {
        Cursor e = o.at(i);
        IndexTuple on = e.at("block").as_tuple(f.dim_g, f.n - 1, true);
        int m = e.at("m").as_index(f.dim_m);
        if (!seen.insert({on, m}).second) e.fail("duplicate key");
        Vec v = e.at("value").as_sparse_vec(f.v_dim);
        std::array<long, 1> ranks{nu.table().rank(on)};
        std::array<int, 1> slots{m};
        long pos = nu.position(ranks, slots);
        for (int k = 0; k < f.v_dim; ++k) nu.value_at(pos)[k] = v[k];
      }
    }
    f.nu = std::move(nu);
    BlockCochain th(f.dim_g, 0, f.n - 1, {f.dim_m}, f.w_dim);
    if (c.has("theta")) {
      Cursor o = c.at("theta");
      std::set<int> seen;
      for (std::size_t i = 0; i < o.size(); ++i) {
        Cursor e = o.at(i);
        int m = e.at("m").as_index(f.dim_m);
        if (!seen.insert(m).second) e.fail("duplicate key");
        Vec v = e.at("value").as_sparse_vec(f.w_dim);
        for (int k = 0; k < f.w_dim; ++k) th.value_at(m)[k] = v[k];
      }
    }
    f.theta = std::move(th);
  } else {
    c.at("target").fail("unknown target '" + f.target + "' (expected nlie or lm)");
  }
  return f;
}

inline DeformationFile parse_deformation(const Cursor& c) {
  DeformationFile f;
  f.dim_g = c.at("dim_g").as_count(0, 64);
  f.dim_m = c.at("dim_m").as_count(0, 64);
  f.def.order = c.at("order").as_count(1, 8);
  Cursor th = c.at("theta");
  Cursor om = c.at("omega");
  Cursor nu = c.at("nu");
  if (th.size() != static_cast<std::size_t>(f.def.order)) th.fail("theta must list one matrix per order");
  if (om.size() != static_cast<std::size_t>(f.def.order)) om.fail("omega must list one tensor per order");
  if (nu.size() != static_cast<std::size_t>(f.def.order)) nu.fail("nu must list one tensor per order");
  for (int k = 0; k < f.def.order; ++k) {
    f.def.theta.push_back(th.at(static_cast<std::size_t>(k)).as_matrix(f.dim_g, f.dim_m));
    SkewTensor o(f.dim_g, 3, f.dim_g);
    {
      Cursor oc = om.at(static_cast<std::size_t>(k));
      std::set<IndexTuple> seen;
      for (std::size_t i = 0; i < oc.size(); ++i) {
        Cursor e = oc.at(i);
        IndexTuple on = e.at("on").as_tuple(f.dim_g, 3, true);
        if (!seen.insert(on).second) e.at("on").fail("duplicate key " + key_of(on));
        o.set_value(o.table().rank(on), e.at("value").as_sparse_vec(f.dim_g));
      }
    }
    f.def.omega.push_back(std::move(o));
    BlockCochain nn(f.dim_g, 1, 2, {f.dim_m}, f.dim_m);
    {
      Cursor nc = nu.at(static_cast<std::size_t>(k));
      std::set<std::pair<IndexTuple, int>> seen;
      for (std::size_t i = 0; i < nc.size(); ++i) {
        Cursor e = nc.at(i);
        IndexTuple on = e.at("block").as_tuple(f.dim_g, 2, true);
        int m = e.at("m").as_index(f.dim_m);
        if (!seen.insert({on, m}).second) e.fail("duplicate key");
        Vec v = e.at("value").as_sparse_vec(f.dim_m);
        std::array<long, 1> ranks{nn.table().rank(on)};
        std::array<int, 1> slots{m};
        long pos = nn.position(ranks, slots);
        for (int q = 0; q < f.dim_m; ++q) nn.value_at(pos)[q] = v[q];
      }
    }
    f.def.nu.push_back(std::move(nn));
  }
  return f;
}

inline NijenhuisFile parse_nijenhuis(const Cursor& c) {
  NijenhuisFile f;
  f.dim_g = c.at("dim_g").as_count(0, 64);
  f.dim_m = c.at("dim_m").as_count(0, 64);
  f.pair.N0 = c.at("N0").as_matrix(f.dim_g, f.dim_g);
  f.pair.N1 = c.at("N1").as_matrix(f.dim_m, f.dim_m);
  return f;
}

inline SectionFile parse_section(const Cursor& c) {
  SectionFile f;
  Cursor s0 = c.at("sigma0");
  if (!s0.raw().is_array() || s0.size() == 0) s0.fail("sigma0 must be a nonempty matrix");
  int r0 = static_cast<int>(s0.size());
  int c0 = static_cast<int>(s0.at(std::size_t{0}).size());
  f.section.sigma0 = s0.as_matrix(r0, c0);
  Cursor s1 = c.at("sigma1");
  if (!s1.raw().is_array() || s1.size() == 0) s1.fail("sigma1 must be a nonempty matrix");
  int r1 = static_cast<int>(s1.size());
  int c1 = static_cast<int>(s1.at(std::size_t{0}).size());
  f.section.sigma1 = s1.as_matrix(r1, c1);
  return f;
}

/// Parses any supported file kind; syntax errors carry line/column, shape
/// errors the JSON path.
inline ParsedFile parse_text(const std::string& text, const std::string& origin) {
  Json j;
  try {
    j = Json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    // recover line/column from the byte offset
    std::size_t line = 1, col = 1;
    for (std::size_t i = 0; i + 1 < e.byte && i < text.size(); ++i) {
      if (text[i] == '\n') {
        ++line;
        col = 1;
      } else {
        ++col;
      }
    }
    throw ShapeError(origin + ":" + std::to_string(line) + ":" + std::to_string(col) +
                     ": JSON syntax error");
  }
  Cursor c(j, "$");
  if (c.has("schema_version") && c.at("schema_version").as_integer() != 1)
    c.at("schema_version").fail("unsupported schema_version");
  std::string kind = c.at("kind").as_string();
  ParsedFile out;
  out.kind = kind;
  out.name = c.has("name") ? c.at("name").as_string() : origin;
  if (kind == "nlie")
    out.value = parse_nlie(c);
  else if (kind == "leibniz_n")
    out.value = parse_leibniz_n(c);
  else if (kind == "rep")
    out.value = parse_rep(c);
  else if (kind == "lm")
    out.value = parse_lm(c);
  else if (kind == "lm_rep")
    out.value = parse_lm_rep(c);
  else if (kind == "extension")
    out.value = parse_extension(c);
  else if (kind == "cochain2")
    out.value = parse_cochain2(c);
  else if (kind == "deformation")
    out.value = parse_deformation(c);
  else if (kind == "nijenhuis")
    out.value = parse_nijenhuis(c);
  else if (kind == "section")
    out.value = parse_section(c);
  else
    c.at("kind").fail("unknown kind '" + kind + "'");
  return out;
}

inline ParsedFile parse_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ShapeError(path + ": cannot open file");
  std::ostringstream ss;
  ss << in.rdbuf();
  return parse_text(ss.str(), path);
}

// ---------------------------------------------------------------------------
// serialization (canonical: sparse nonzero entries in basis order)

inline Json rational_json(const Rational& r) { return Json(r.str()); }

inline Json sparse_vec_json(const Vec& v) {
  Json o = Json::object();
  for (std::size_t i = 0; i < v.size(); ++i)
    if (!v[i].is_zero()) o[std::to_string(i + 1)] = v[i].str();
  return o;
}

inline Json tuple_json(const IndexTuple& t) {
  Json a = Json::array();
  for (int q : t) a.push_back(q + 1);
  return a;
}

inline Json matrix_json(const Matrix& m) {
  Json rows = Json::array();
  for (int i = 0; i < m.rows(); ++i) {
    Json row = Json::array();
    for (int j = 0; j < m.cols(); ++j) row.push_back(m.at(i, j).str());
    rows.push_back(row);
  }
  return rows;
}

inline Json nlie_json(const NLieAlgebra& a) {
  Json j;
  j["schema_version"] = 1;
  j["kind"] = "nlie";
  if (!a.name.empty()) j["name"] = a.name;
  j["n"] = a.n;
  j["dim"] = a.dim;
  Json br = Json::array();
  const auto& wt = a.bracket.table();
  for (long r = 0; r < wt.count(); ++r) {
    auto v = a.bracket.value(r);
    Vec vv(v.begin(), v.end());
    if (is_zero(vv)) continue;
    Json e;
    e["on"] = tuple_json(wt.basis[r]);
    e["value"] = sparse_vec_json(vv);
    br.push_back(e);
  }
  j["brackets"] = br;
  return j;
}

inline Json leibniz_n_json(const LeibnizNAlgebra& a) {
  Json j;
  j["schema_version"] = 1;
  j["kind"] = "leibniz_n";
  if (!a.name.empty()) j["name"] = a.name;
  j["n"] = a.n;
  j["dim"] = a.dim;
  Json br = Json::array();
  IndexTuple t(a.n, 0);
  if (a.dim > 0) do {
      Vec v = a.bracket_idx(t);
      if (is_zero(v)) continue;
      Json e;
      e["on"] = tuple_json(t);
      e["value"] = sparse_vec_json(v);
      br.push_back(e);
    } while (next_index(t, a.dim));
  j["brackets"] = br;
  return j;
}

inline Json action_json(const Representation& r) {
  Json acts = Json::array();
  for (long i = 0; i < r.lt.count(); ++i) {
    if (r.rho[i].is_zero()) continue;
    Json e;
    e["on"] = tuple_json(r.lt.basis[i]);
    e["matrix"] = matrix_json(r.rho[i]);
    acts.push_back(e);
  }
  return acts;
}

inline Json rep_json(const Representation& r, const std::string& name = "") {
  Json j;
  j["schema_version"] = 1;
  j["kind"] = "rep";
  if (!name.empty()) j["name"] = name;
  Json alg = nlie_json(r.algebra);
  alg.erase("schema_version");
  j["algebra"] = alg;
  j["module_dim"] = r.module_dim;
  j["action"] = action_json(r);
  return j;
}

inline Json lm_json(const LMAlgebra& a) {
  Json j;
  j["schema_version"] = 1;
  j["kind"] = "lm";
  if (!a.name.empty()) j["name"] = a.name;
  Json g = nlie_json(a.g);
  g.erase("schema_version");
  j["g"] = g;
  j["module_dim"] = a.mdim();
  j["action"] = action_json(a.rho);
  j["f"] = matrix_json(a.f);
  return j;
}

inline Json lm_rep_json(const LMRepFile& f, const std::string& name = "") {
  Json j;
  j["schema_version"] = 1;
  j["kind"] = "lm_rep";
  if (!name.empty()) j["name"] = name;
  Json base = lm_json(f.base);
  base.erase("schema_version");
  j["base"] = base;
  j["v_dim"] = f.rep.vdim;
  j["w_dim"] = f.rep.wdim;
  j["phi"] = matrix_json(f.rep.phi);
  j["rho1"] = action_json(f.rep.rho1);
  j["rho2"] = action_json(f.rep.rho2);
  Json r3 = Json::array();
  const int dg = f.base.g.dim, dM = f.base.mdim(), n = f.base.g.n;
  IndexTuple gt(n - 2, 0);
  do {
    for (int m = 0; m < dM; ++m) {
      const Matrix& mat = f.rep.rho3_at(gt, m, dg, dM);
      if (mat.is_zero()) continue;
      Json e;
      e["on"] = tuple_json(gt);
      e["m"] = m + 1;
      e["matrix"] = matrix_json(mat);
      r3.push_back(e);
    }
  } while (!gt.empty() && next_index(gt, dg));
  j["rho3"] = r3;
  return j;
}

inline Json extension_json(const AbelianExtension& e, const std::string& name = "") {
  Json j;
  j["schema_version"] = 1;
  j["kind"] = "extension";
  if (!name.empty()) j["name"] = name;
  Json base = lm_json(e.base), total = lm_json(e.total);
  base.erase("schema_version");
  total.erase("schema_version");
  j["base"] = base;
  j["total"] = total;
  j["i0"] = matrix_json(e.i0);
  j["i1"] = matrix_json(e.i1);
  j["p0"] = matrix_json(e.p0);
  j["p1"] = matrix_json(e.p1);
  return j;
}

inline Json cochain2_json(const Cochain2File& f, const std::string& name = "") {
  Json j;
  j["schema_version"] = 1;
  j["kind"] = "cochain2";
  if (!name.empty()) j["name"] = name;
  j["target"] = f.target;
  j["n"] = f.n;
  j["dim_g"] = f.dim_g;
  if (f.target == "nlie") j["value_dim"] = f.value_dim;
  if (f.target == "lm") {
    j["dim_m"] = f.dim_m;
    j["v_dim"] = f.v_dim;
    j["w_dim"] = f.w_dim;
  }
  if (f.omega_skew) {
    Json o = Json::array();
    const auto& t = *f.omega_skew;
    for (long r = 0; r < t.table().count(); ++r) {
      auto v = t.value(r);
      Vec vv(v.begin(), v.end());
      if (is_zero(vv)) continue;
      Json e;
      e["on"] = tuple_json(t.table().basis[r]);
      e["value"] = sparse_vec_json(vv);
      o.push_back(e);
    }
    j["omega_skew"] = o;
  }
  if (f.omega_block) {
    Json o = Json::array();
    const auto& t = *f.omega_block;
    for (long r = 0; r < t.table().count(); ++r)
      for (int z = 0; z < f.dim_g; ++z) {
        std::array<long, 1> ranks{r};
        std::array<int, 1> slots{z};
        auto v = t.value_at(t.position(ranks, slots));
        Vec vv(v.begin(), v.end());
        if (is_zero(vv)) continue;
        Json e;
        e["block"] = tuple_json(t.table().basis[r]);
        e["z"] = z + 1;
        e["value"] = sparse_vec_json(vv);
        o.push_back(e);
      }
    j["omega_block"] = o;
  }
  if (f.nu) {
    Json o = Json::array();
    const auto& t = *f.nu;
    for (long r = 0; r < t.table().count(); ++r)
      for (int m = 0; m < f.dim_m; ++m) {
        std::array<long, 1> ranks{r};
        std::array<int, 1> slots{m};
        auto v = t.value_at(t.position(ranks, slots));
        Vec vv(v.begin(), v.end());
        if (is_zero(vv)) continue;
        Json e;
        e["block"] = tuple_json(t.table().basis[r]);
        e["m"] = m + 1;
        e["value"] = sparse_vec_json(vv);
        o.push_back(e);
      }
    j["nu"] = o;
  }
  if (f.theta) {
    Json o = Json::array();
    for (int m = 0; m < f.dim_m; ++m) {
      auto v = f.theta->value_at(m);
      Vec vv(v.begin(), v.end());
      if (is_zero(vv)) continue;
      Json e;
      e["m"] = m + 1;
      e["value"] = sparse_vec_json(vv);
      o.push_back(e);
    }
    j["theta"] = o;
  }
  return j;
}

inline Json deformation_json(const DeformationFile& f, const std::string& name = "") {
  Json j;
  j["schema_version"] = 1;
  j["kind"] = "deformation";
  if (!name.empty()) j["name"] = name;
  j["order"] = f.def.order;
  j["dim_g"] = f.dim_g;
  j["dim_m"] = f.dim_m;
  Json th = Json::array(), om = Json::array(), nu = Json::array();
  for (int k = 0; k < f.def.order; ++k) {
    th.push_back(matrix_json(f.def.theta[k]));
    Json o = Json::array();
    const auto& t = f.def.omega[k];
    for (long r = 0; r < t.table().count(); ++r) {
      auto v = t.value(r);
      Vec vv(v.begin(), v.end());
      if (is_zero(vv)) continue;
      Json e;
      e["on"] = tuple_json(t.table().basis[r]);
      e["value"] = sparse_vec_json(vv);
      o.push_back(e);
    }
    om.push_back(o);
    Json nn = Json::array();
    const auto& u = f.def.nu[k];
    for (long r = 0; r < u.table().count(); ++r)
      for (int m = 0; m < f.dim_m; ++m) {
        std::array<long, 1> ranks{r};
        std::array<int, 1> slots{m};
        auto v = u.value_at(u.position(ranks, slots));
        Vec vv(v.begin(), v.end());
        if (is_zero(vv)) continue;
        Json e;
        e["block"] = tuple_json(u.table().basis[r]);
        e["m"] = m + 1;
        e["value"] = sparse_vec_json(vv);
        nn.push_back(e);
      }
    nu.push_back(nn);
  }
  j["theta"] = th;
  j["omega"] = om;
  j["nu"] = nu;
  return j;
}

inline Json nijenhuis_json(const NijenhuisFile& f, const std::string& name = "") {
  Json j;
  j["schema_version"] = 1;
  j["kind"] = "nijenhuis";
  if (!name.empty()) j["name"] = name;
  j["dim_g"] = f.dim_g;
  j["dim_m"] = f.dim_m;
  j["N0"] = matrix_json(f.pair.N0);
  j["N1"] = matrix_json(f.pair.N1);
  return j;
}

inline Json section_json(const SectionFile& f, const std::string& name = "") {
  Json j;
  j["schema_version"] = 1;
  j["kind"] = "section";
  if (!name.empty()) j["name"] = name;
  j["sigma0"] = matrix_json(f.section.sigma0);
  j["sigma1"] = matrix_json(f.section.sigma1);
  return j;
}

// ---------------------------------------------------------------------------
// report rendering

inline Json witness_json(const Witness& w) {
  Json j;
  Json args = Json::object();
  for (const auto& [k, t] : w.args) {
    Json a = Json::array();
    for (int q : t) a.push_back(q);
    args[k] = a;
  }
  j["args"] = args;
  if (!w.residual.empty()) {
    Json r = Json::array();
    for (const auto& s : w.residual) r.push_back(s);
    j["residual"] = r;
  }
  if (!w.note.empty()) j["note"] = w.note;
  return j;
}

inline Json report_json(const Report& r) {
  Json j;
  j["subject"] = r.subject;
  j["pass"] = r.pass();
  Json checks = Json::array();
  for (const auto& c : r.checks) {
    Json e;
    e["name"] = c.name;
    e["pass"] = c.pass;
    e["instances"] = c.instances;
    e["violations"] = c.violations;
    if (!c.note.empty()) e["note"] = c.note;
    if (!c.witnesses.empty()) {
      Json ws = Json::array();
      for (const auto& w : c.witnesses) ws.push_back(witness_json(w));
      e["witnesses"] = ws;
    }
    checks.push_back(e);
  }
  j["checks"] = checks;
  return j;
}

inline std::string report_text(const Report& r) {
  std::ostringstream os;
  os << "subject: " << r.subject << "\n";
  for (const auto& c : r.checks) {
    os << "  " << (c.pass ? "PASS" : "FAIL") << "  " << c.name;
    if (c.violations > 0) {
      os << " (" << c.violations << " of " << c.instances << " instances violated)";
    } else if (c.pass && c.instances > 0) {
      os << " (" << c.instances << (c.instances == 1 ? " instance)" : " instances)");
    }
    if (!c.note.empty()) os << "  -- " << c.note;
    os << "\n";
    for (const auto& w : c.witnesses) {
      os << "        at";
      for (const auto& [k, t] : w.args) {
        os << " " << k << "=(";
        for (std::size_t i = 0; i < t.size(); ++i) os << (i ? "," : "") << t[i];
        os << ")";
      }
      if (!w.residual.empty()) {
        os << " residual (";
        for (std::size_t i = 0; i < w.residual.size(); ++i) os << (i ? ", " : "") << w.residual[i];
        os << ")";
      }
      if (!w.note.empty()) os << " " << w.note;
      os << "\n";
    }
    if (c.violations > static_cast<long>(c.witnesses.size()) && c.violations > 0)
      os << "        ... and " << (c.violations - static_cast<long>(c.witnesses.size()))
         << " further violations\n";
  }
  os << "result: " << (r.pass() ? "PASS" : "FAIL") << "\n";
  return os.str();
}

}  // namespace io

}  // namespace nlal

#endif
