// lieforge: command-line front end over the document format.
//
// Exit codes: 0 success, 1 a negative mathematical answer (obstructed,
// invalid document under `validate`, a functor failing the criteria),
// 2 usage, syntax and schema errors.

#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"
#include "lieforge/document.hpp"
#include "lieforge/harrison.hpp"

using namespace lieforge;
using Json = nlohmann::ordered_json;

namespace {

// Thrown for bad flag values and inconsistent inputs; maps to exit code 2.
struct UsageError : Error {
  using Error::Error;
};

struct Result {
  std::vector<std::string> lines;
  Json json = Json::object();
  int code = 0;
};

struct Globals {
  bool json = false;
  bool lax = false;
};

ParseOptions options(const Globals& g) {
  ParseOptions o;
  o.strict = !g.lax;
  return o;
}

std::string tuple_text(std::span<const Scalar> v) {
  std::string out = "(";
  for (std::size_t i = 0; i < v.size(); ++i) out += (i ? ", " : "") + std::to_string(v[i]);
  return out + ")";
}

std::string join(const std::vector<std::size_t>& v, const std::string& sep = ",") {
  std::string out;
  for (std::size_t i = 0; i < v.size(); ++i) out += (i ? sep : "") + std::to_string(v[i]);
  return out;
}

Json vec_json(std::span<const Scalar> v) { return Json(std::vector<Scalar>(v.begin(), v.end())); }

std::size_t power(std::size_t base, std::size_t e) {
  std::size_t r = 1;
  while (e--) r *= base;
  return r;
}

Document load(const std::string& path, const Globals& g) { return load_document(path, options(g)); }

LiePtr load_lie(const std::string& path, const Globals& g) {
  auto d = load(path, g);
  if (!d.lie) throw UsageError(path + ": expected a lie document, got " + d.kind);
  return d.lie;
}

ArtinPtr load_artin(const std::string& path, const Globals& g) {
  auto d = load(path, g);
  if (!d.artin) throw UsageError(path + ": expected an artin document, got " + d.kind);
  return d.artin;
}

// --rep and --map both name a morphism document; --source and --target,
// when given, must agree with its endpoints.
struct RepFlags {
  std::string rep, map, source, target;
};

void add_rep_flags(CLI::App* c, RepFlags& f) {
  auto* r = c->add_option("--rep", f.rep, "rep document");
  auto* m = c->add_option("--map", f.map, "morphism document G -> Lbar");
  r->excludes(m);
  c->add_option("--source", f.source, "lie document expected as the source G");
  c->add_option("--target", f.target, "lie document expected as the target Lbar");
}

RepPtr load_rep(const RepFlags& f, const Globals& g) {
  const std::string& path = f.rep.empty() ? f.map : f.rep;
  if (path.empty()) throw UsageError("one of --rep or --map is required");
  auto d = load(path, g);
  RepPtr rep = d.rep;
  if (!rep) {
    if (!d.morphism) throw UsageError(path + ": expected a rep or morphism document, got " + d.kind);
    rep = share(GradedRep(*d.morphism));
  }
  if (!f.source.empty() && !(*load_lie(f.source, g) == *rep->source()))
    throw UsageError("--source " + f.source + " differs from the source of " + path);
  if (!f.target.empty() && !(*load_lie(f.target, g) == *rep->target()))
    throw UsageError("--target " + f.target + " differs from the target of " + path);
  return rep;
}

// F_l[t]/t^(n+1) -> F_l[t]/t^n
AlgExtension truncation_step(std::uint32_t l, std::size_t n) {
  auto big = share(ArtinLocalAlgebra::truncated_polynomial(l, n + 1));
  auto small = share(ArtinLocalAlgebra::truncated_polynomial(l, n));
  Mat m(CoeffRing(l), n + 1, n);
  for (std::size_t i = 0; i < n; ++i) m.set(i, i, 1);
  return extension_from_surjection(ArtinMorphism(big, small, m));
}

AlgExtension load_extension(const std::string& path, const ArtinPtr& base, const Globals& g) {
  auto d = load(path, g);
  if (!d.artin_morphism) throw UsageError(path + ": expected a morphism between artin documents");
  if (!(*d.artin_morphism->target() == *base)) throw UsageError("--ext " + path + " does not end at the base");
  if (!d.artin_morphism->is_surjective()) throw UsageError("--ext " + path + " is not surjective");
  auto ext = extension_from_surjection(*d.artin_morphism);
  if (auto why = ext.defect(true)) throw UsageError("--ext " + path + " is not a small extension: " + *why);
  return ext;
}

std::pair<int, int> grade_window(const std::string& s) {
  auto colon = s.find(':');
  try {
    std::size_t used = 0;
    int lo = std::stoi(s.substr(0, colon), &used);
    if (used != (colon == std::string::npos ? s.size() : colon)) throw std::invalid_argument(s);
    if (colon == std::string::npos) return {lo, lo};
    int hi = std::stoi(s.substr(colon + 1), &used);
    if (used != s.size() - colon - 1 || hi < lo) throw std::invalid_argument(s);
    return {lo, hi};
  } catch (const std::logic_error&) {
    throw UsageError("--grade expects M or LO:HI, got '" + s + "'");
  }
}

std::string group_text(const Subquotient& h) {
  const auto& ring = h.ring();
  if (ring.is_field()) return std::to_string(h.dimension());
  if (h.exponents().empty()) return "0";
  std::string out;
  for (auto e : h.exponents()) out += (out.empty() ? "" : " + ") + std::string("Z/") + std::to_string(power(ring.prime(), e));
  return out;
}

// ---------------------------------------------------------------------------

Result cmd_validate(const std::string& path, const Globals& g) {
  Result r;
  Document d;
  try {
    d = load(path, g);
  } catch (const ParseError& e) {
    if (!e.mathematical()) throw;
    r.lines.push_back("invalid: " + std::string(e.what()));
    r.json = {{"valid", false}, {"path", e.path()}, {"error", e.what()}};
    r.code = 1;
    return r;
  }
  r.json["valid"] = true;
  r.json["kind"] = d.kind;
  r.lines.push_back("valid " + d.kind);
  if (d.lie) {
    r.lines.push_back("ring: " + d.lie->ring().name());
    r.lines.push_back("ranks: " + join(d.lie->ranks()));
    r.lines.push_back(std::string("abelian: ") + (d.lie->is_abelian() ? "yes" : "no"));
    r.json["ring"] = d.lie->ring().name();
    r.json["ranks"] = d.lie->ranks();
  } else if (d.artin) {
    r.lines.push_back("presentation: " + d.artin->presentation());
    r.lines.push_back("rank: " + std::to_string(d.artin->rank()));
    r.json["presentation"] = d.artin->presentation();
    r.json["rank"] = d.artin->rank();
  } else if (d.module) {
    r.lines.push_back("dim: " + std::to_string(d.module->dim()));
    r.json["dim"] = d.module->dim();
  } else if (d.morphism) {
    r.lines.push_back("source ranks: " + join(d.morphism->source()->ranks()));
    r.lines.push_back("target ranks: " + join(d.morphism->target()->ranks()));
    r.json["source_ranks"] = d.morphism->source()->ranks();
    r.json["target_ranks"] = d.morphism->target()->ranks();
  } else if (d.artin_morphism) {
    r.lines.push_back(d.artin_morphism->source()->presentation() + " -> " + d.artin_morphism->target()->presentation());
    r.json["source"] = d.artin_morphism->source()->presentation();
    r.json["target"] = d.artin_morphism->target()->presentation();
  } else if (d.deformation) {
    r.lines.push_back("base: " + d.deformation->base()->presentation());
    for (const auto& s : d.deformation->describe()) r.lines.push_back(s);
    r.json["base"] = d.deformation->base()->presentation();
    r.json["brackets"] = d.deformation->describe();
  } else if (d.suite) {
    r.lines.push_back("objects: " + std::to_string(d.suite->category->objects().size()));
    r.lines.push_back("arrows: " + std::to_string(d.suite->category->arrows().size()));
    r.lines.push_back("functors: " + std::to_string(d.suite->functors.size()));
    r.json["objects"] = d.suite->category->objects().size();
    r.json["arrows"] = d.suite->category->arrows().size();
    r.json["functors"] = d.suite->functors.size();
  }
  return r;
}

Result cmd_cohomology(const std::string& path, int q, const std::string& grades, const std::string& coeffs,
                      const Globals& g) {
  if (q < 0) throw UsageError("--q must be nonnegative");
  auto lie = load_lie(path, g);
  ModulePtr module;
  std::string m_name = "L";
  if (coeffs == "adjoint") {
    module = share(adjoint_module(lie));
  } else {
    auto d = load(coeffs, g);
    if (!d.module) throw UsageError("--coeffs " + coeffs + ": expected a module document, got " + d.kind);
    if (!(*d.module->algebra() == *lie)) throw UsageError("--coeffs " + coeffs + " is a module over another algebra");
    module = d.module;
    m_name = "M";
  }
  auto [lo, hi] = grade_window(grades);
  Result r;
  r.json["q"] = q;
  r.json["coeffs"] = coeffs == "adjoint" ? "adjoint" : "module";
  r.json["ring"] = lie->ring().name();
  Json rows = Json::array();
  for (int m = lo; m <= hi; ++m) {
    auto h = cohomology_space(module, q, m);
    const std::string head = "H^" + std::to_string(q) + "(L," + m_name + ")(" + std::to_string(m) + ")";
    if (lie->ring().is_field())
      r.lines.push_back("dim " + head + " = " + group_text(h.homology));
    else
      r.lines.push_back(head + " = " + group_text(h.homology));
    rows.push_back({{"grade", m},
                    {"cochains", h.cochains.dim()},
                    {"dim", h.dimension()},
                    {"exponents", h.homology.exponents()}});
  }
  r.json["grades"] = rows;
  return r;
}

Result cmd_harrison(const std::string& path, int i, const Globals& g) {
  if (i != 1 && i != 2) throw UsageError("--i must be 1 or 2");
  auto a = load_artin(path, g);
  auto h = harrison_cohomology(ArtinModule::trivial(a, 1), i);
  Result r;
  r.lines.push_back("A = " + a->presentation());
  r.lines.push_back("dim Harr^" + std::to_string(i) + "(A,k) = " + std::to_string(h.dimension()));
  r.json = {{"algebra", a->presentation()}, {"i", i}, {"dim", h.dimension()}};
  if (i == 1) {
    r.lines.push_back("dim m/m^2 = " + std::to_string(a->cotangent_dimension()));
    r.json["cotangent"] = a->cotangent_dimension();
  }
  return r;
}

Result cmd_free(const std::string& gens, int degree, std::uint32_t l, std::uint32_t n, const std::string& out,
                const Globals&) {
  if (degree < 1) throw UsageError("--degree must be positive");
  std::vector<FreeGenerator> generators;
  std::stringstream ss(gens);
  std::string item;
  while (std::getline(ss, item, ',')) {
    auto colon = item.find(':');
    if (colon == std::string::npos || colon == 0) throw UsageError("--gens expects name:degree, got '" + item + "'");
    int deg = 0;
    try {
      std::size_t used = 0;
      deg = std::stoi(item.substr(colon + 1), &used);
      if (used != item.size() - colon - 1) throw std::invalid_argument(item);
    } catch (const std::logic_error&) {
      throw UsageError("--gens expects name:degree, got '" + item + "'");
    }
    if (deg < 1) throw UsageError("--gens degrees must be positive, got '" + item + "'");
    generators.push_back({item.substr(0, colon), deg});
  }
  if (generators.empty()) throw UsageError("--gens is empty");
  CoeffRing ring = [&] {
    try {
      return CoeffRing(l, n);
    } catch (const InvalidArgument& e) {
      throw UsageError(std::string("--l/--N: ") + e.what());
    }
  }();
  auto lie = free_lie_truncated(ring, generators, static_cast<std::size_t>(degree));
  const std::string text = serialize_lie(lie);
  Result r;
  if (out.empty()) {
    std::string body = text;
    body.pop_back();
    r.lines.push_back(body);
    r.json = Json::parse(text);
    return r;
  }
  std::ofstream f(out, std::ios::binary);
  if (!(f << text)) throw UsageError("-o " + out + ": cannot write");
  r.lines.push_back("wrote " + out);
  r.lines.push_back("ranks: " + join(lie.ranks()));
  r.json = {{"file", out}, {"ranks", lie.ranks()}};
  return r;
}

Json deformation_json(const LieDeformation& d) {
  return {{"base", d.base()->presentation()}, {"rank", d.rank()}, {"brackets", d.describe()}};
}

Result cmd_eta(const std::string& path, const std::vector<int>& grades, const Globals& g) {
  auto lie = load_lie(path, g);
  if (!lie->ring().is_field()) throw UsageError(path + ": eta needs coefficients in F_l");
  auto e = eta(lie, grades);
  Result r;
  Json blocks = Json::array();
  for (std::size_t b = 0; b < e.grades.size(); ++b) {
    const auto h = e.sections[b].rows();
    r.lines.push_back("dim H^2(L,L)(" + std::to_string(e.grades[b]) + ") = " + std::to_string(h));
    blocks.push_back({{"grade", e.grades[b]}, {"dim", h}});
  }
  r.lines.push_back("D_1 = " + e.deformation.base()->presentation());
  for (const auto& s : e.deformation.describe()) r.lines.push_back(s);
  r.json = {{"blocks", blocks}, {"eta", deformation_json(e.deformation)}};
  return r;
}

Json obstruction_json(const ObstructionData& o) {
  Json classes = Json::array();
  for (const auto& c : o.classes) classes.push_back(vec_json(c));
  return {{"h3", o.h3}, {"classes", classes}, {"vanishes", o.vanishes()}};
}

void obstruction_lines(const ObstructionData& o, Result& r) {
  r.lines.push_back("dim H^3(L,L)(0) = " + std::to_string(o.h3));
  for (std::size_t s = 0; s < o.classes.size(); ++s)
    r.lines.push_back("class " + std::to_string(s + 1) + " = " + tuple_text(o.classes[s]));
}

LieDeformation load_deformation(const std::string& path, const Globals& g) {
  auto d = load(path, g);
  if (!d.deformation) throw UsageError(path + ": expected a deformation document, got " + d.kind);
  return *d.deformation;
}

Result cmd_obstruct(const std::string& path, const std::string& ext_path, const Globals& g) {
  auto d = load_deformation(path, g);
  auto ext = load_extension(ext_path, d.base(), g);
  auto o = obstruction(d, ext);
  Result r;
  obstruction_lines(o, r);
  r.lines.push_back(o.vanishes() ? "unobstructed" : "obstructed");
  r.json = obstruction_json(o);
  r.code = o.vanishes() ? 0 : 1;
  return r;
}

Result cmd_extend(const std::string& path, const std::string& ext_path, const Globals& g) {
  auto d = load_deformation(path, g);
  auto ext = load_extension(ext_path, d.base(), g);
  auto res = extend_deformation(d, ext);
  Result r;
  r.json["obstruction"] = obstruction_json(res.obstruction);
  if (!res.ok()) {
    obstruction_lines(res.obstruction, r);
    r.lines.push_back("obstructed");
    r.code = 1;
    return r;
  }
  r.lines.push_back("extended over " + res.lifted->base()->presentation());
  for (const auto& s : res.lifted->describe()) r.lines.push_back(s);
  r.json["lifted"] = deformation_json(*res.lifted);
  return r;
}

Result cmd_tower(const std::string& path, int stages, const Globals& g) {
  if (stages < 1) throw UsageError("--stages must be positive");
  auto lie = load_lie(path, g);
  if (!lie->ring().is_field()) throw UsageError(path + ": the tower needs coefficients in F_l");
  auto tower = miniversal_tower(lie, static_cast<std::size_t>(stages));
  Result r;
  Json js = Json::array();
  for (const auto& st : tower) {
    const std::string k = std::to_string(st.k);
    r.lines.push_back("D_" + k + " = " + st.base()->presentation());
    for (const auto& s : st.eta.describe()) r.lines.push_back("  eta_" + k + ": " + s);
    Json j = deformation_json(st.eta);
    j["k"] = st.k;
    j["ext_rank"] = st.ext_rank;
    j["obstruction_rank"] = st.obstruction_rank;
    js.push_back(j);
  }
  r.json["stages"] = js;
  return r;
}

Result cmd_rep_tangent(const RepFlags& f, const Globals& g) {
  auto rep = load_rep(f, g);
  auto t = tangent_space(rep);
  const auto l = rep->ring().prime();
  Result r;
  r.lines.push_back("dim H^1(G,Ad rho)(0) = " + std::to_string(t.dimension()));
  r.lines.push_back("first-order lifts: " + std::to_string(power(l, t.dimension())));
  Json basis = Json::array();
  const auto& reps = t.h1.homology.representatives();
  for (std::size_t i = 0; i < reps.rows(); ++i) {
    auto lift = first_order_lift(rep, reps.row_vec(i), "t");
    std::string desc;
    for (const auto& s : lift.describe()) desc += (desc.empty() ? "" : "; ") + s;
    r.lines.push_back("c" + std::to_string(i + 1) + ": " + desc);
    basis.push_back(lift.describe());
  }
  r.json = {{"dim", t.dimension()}, {"lifts", power(l, t.dimension())}, {"basis", basis}};
  return r;
}

Vec parse_direction(const std::string& s, std::size_t h1, const CoeffRing& ring) {
  Vec v;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      std::size_t used = 0;
      long long x = std::stoll(item, &used);
      if (used != item.size()) throw std::invalid_argument(item);
      v.push_back(ring.reduce(x));
    } catch (const std::logic_error&) {
      throw UsageError("--direction expects comma-separated integers, got '" + s + "'");
    }
  }
  if (v.size() != h1) throw UsageError("--direction needs " + std::to_string(h1) + " coordinates");
  return v;
}

Result cmd_rep_lift(const RepFlags& f, const std::string& direction, const std::string& base_path, const Globals& g) {
  auto rep = load_rep(f, g);
  const auto& ring = rep->ring();
  const auto l = ring.prime();
  std::size_t order = 3;
  if (!base_path.empty()) {
    auto a = load_artin(base_path, g);
    if (!a->is_truncated_polynomial() || a->rank() < 2 || !(*a == ArtinLocalAlgebra::truncated_polynomial(l, a->rank())))
      throw UsageError("--base " + base_path + " must be F_l[t]/t^n with n >= 2");
    order = a->rank();
  }
  auto t = tangent_space(rep);
  Vec v = direction.empty() ? Vec(t.dimension(), 1) : parse_direction(direction, t.dimension(), ring);
  const auto& reps = t.h1.homology.representatives();
  Vec c(reps.cols(), 0);
  for (std::size_t i = 0; i < v.size(); ++i)
    for (std::size_t k = 0; k < c.size(); ++k) c[k] = ring.add(c[k], ring.mul(v[i], reps(i, k)));
  Result r;
  r.lines.push_back("direction " + tuple_text(v));
  auto current = first_order_lift(rep, c, "t");
  Json steps = Json::array();
  for (std::size_t n = 2; n < order; ++n) {
    auto res = lift_representation(current, truncation_step(l, n));
    Json classes = Json::array();
    for (const auto& cl : res.certificate.classes) classes.push_back(vec_json(cl));
    steps.push_back({{"to", "t^" + std::to_string(n + 1)}, {"h2", res.certificate.h2}, {"classes", classes},
                     {"lifted", res.ok()}});
    if (!res.ok()) {
      r.lines.push_back("dim H^2(G,Ad rho)(0) = " + std::to_string(res.certificate.h2));
      for (std::size_t s = 0; s < res.certificate.classes.size(); ++s)
        r.lines.push_back("class " + std::to_string(s + 1) + " = " + tuple_text(res.certificate.classes[s]));
      r.lines.push_back("obstructed at t^" + std::to_string(n + 1));
      r.json = {{"direction", vec_json(v)}, {"steps", steps}, {"lifted", false}};
      r.code = 1;
      return r;
    }
    current = *res.lifted;
  }
  r.lines.push_back("lifted over " + current.base()->presentation());
  for (const auto& s : current.describe()) r.lines.push_back(s);
  r.json = {{"direction", vec_json(v)}, {"steps", steps}, {"lifted", true}, {"images", current.describe()}};
  return r;
}

Result cmd_rep_enumerate(const RepFlags& f, const std::string& base_path, std::size_t bound, const Globals& g) {
  auto rep = load_rep(f, g);
  ArtinPtr a = base_path.empty() ? share(ArtinLocalAlgebra::truncated_polynomial(rep->ring().prime(), 2))
                                 : load_artin(base_path, g);
  if (!(a->ring() == rep->ring())) throw UsageError("--base is over another field");
  LiftEnumeration e;
  try {
    e = enumerate_lifts(rep, a, bound);
  } catch (const InvalidArgument& err) {
    throw UsageError(std::string("--bound: ") + err.what());
  }
  Result r;
  r.lines.push_back("base: " + a->presentation());
  r.lines.push_back("candidates: l^" + std::to_string(e.search_log));
  r.lines.push_back("lifts: " + std::to_string(e.lifts.size()));
  Json lifts = Json::array();
  for (std::size_t i = 0; i < e.lifts.size(); ++i) {
    std::string desc;
    for (const auto& s : e.lifts[i].describe()) desc += (desc.empty() ? "" : "; ") + s;
    r.lines.push_back("  " + std::to_string(i + 1) + ": " + desc);
    lifts.push_back(e.lifts[i].describe());
  }
  r.json = {{"base", a->presentation()}, {"search_log", e.search_log}, {"count", e.lifts.size()}, {"lifts", lifts}};
  return r;
}

Result cmd_quadratic_rep(const RepFlags& f, const Globals& g) {
  auto rep = load_rep(f, g);
  auto q = quadratic_relations(rep);
  const auto l = rep->ring().prime();
  Result r;
  r.lines.push_back("dim H^1(G,Ad rho)(0) = " + std::to_string(q.h1));
  r.lines.push_back("dim H^2(G,Ad rho)(0) = " + std::to_string(q.h2));
  Json bil = Json::array();
  for (std::size_t i = 0; i < q.h1; ++i)
    for (std::size_t j = 0; j < q.h1; ++j) {
      r.lines.push_back("B(" + std::to_string(i + 1) + "," + std::to_string(j + 1) + ") = " +
                        tuple_text(q.bilinear[i * q.h1 + j]));
      bil.push_back(vec_json(q.bilinear[i * q.h1 + j]));
    }
  r.lines.push_back("R = " + q.presentation());
  r.json = {{"h1", q.h1}, {"h2", q.h2}, {"bilinear", bil}, {"presentation", q.presentation()}};
  if (power(l, q.h1) <= (1u << 16)) {
    std::size_t zeros = 0;
    Vec v(q.h1, 0);
    for (std::size_t k = 0; k < power(l, q.h1); ++k) {
      std::size_t x = k;
      for (auto& c : v) {
        c = static_cast<Scalar>(x % l);
        x /= l;
      }
      if (is_zero_vec(q.evaluate(v))) ++zeros;
    }
    r.lines.push_back("zero locus: " + std::to_string(zeros) + " of " + std::to_string(power(l, q.h1)));
    r.json["zero_locus"] = zeros;
  }
  return r;
}

Result cmd_quadratic_lie(const std::string& path, const Globals& g) {
  auto lie = load_lie(path, g);
  if (!lie->ring().is_field()) throw UsageError(path + ": needs coefficients in F_l");
  auto q = quadratic_map(lie);
  Result r;
  r.lines.push_back("dim H^2(L,L)(0) = " + std::to_string(q.h2));
  r.lines.push_back("dim H^3(L,L)(0) = " + std::to_string(q.h3));
  Json bil = Json::array(), quad = Json::array();
  for (std::size_t a = 0; a < q.h2; ++a) {
    r.lines.push_back("Q(" + std::to_string(a + 1) + ") = " + tuple_text(q.quadratic[a]));
    quad.push_back(vec_json(q.quadratic[a]));
  }
  for (std::size_t a = 0; a < q.h2; ++a)
    for (std::size_t b = 0; b < q.h2; ++b) {
      r.lines.push_back("B(" + std::to_string(a + 1) + "," + std::to_string(b + 1) + ") = " +
                        tuple_text(q.bilinear[a * q.h2 + b]));
      bil.push_back(vec_json(q.bilinear[a * q.h2 + b]));
    }
  r.json = {{"h2", q.h2}, {"h3", q.h3}, {"quadratic", quad}, {"bilinear", bil}};
  return r;
}

Result cmd_schlessinger(const std::string& path, const Globals& g) {
  auto d = load(path, g);
  if (!d.suite) throw UsageError(path + ": expected a functor-suite document, got " + d.kind);
  Result r;
  Json reports = Json::array();
  for (const auto& f : d.suite->functors) {
    try {
      auto rep = check_criteria(*f, *d.suite->category);
      for (const auto& s : rep.lines()) r.lines.push_back(s);
      Json inst = Json::array();
      for (const auto& i : rep.instances)
        inst.push_back({{"criterion", i.criterion},
                        {"description", i.description},
                        {"source", i.source_size},
                        {"target", i.target_size},
                        {"injective", i.injective},
                        {"surjective", i.surjective}});
      reports.push_back({{"functor", rep.functor},
                         {"instances", inst},
                         {"H1", rep.h1},
                         {"H2", rep.h2},
                         {"H3", rep.h3},
                         {"H4", rep.h4},
                         {"tangent_size", rep.tangent_size},
                         {"has_hull", rep.has_hull()},
                         {"pro_representable", rep.pro_representable()}});
      if (!rep.pro_representable()) r.code = 1;
    } catch (const InvalidArgument& e) {
      r.lines.push_back("functor: " + f->name());
      r.lines.push_back("rejected: " + std::string(e.what()));
      reports.push_back({{"functor", f->name()}, {"rejected", e.what()}});
      r.code = 1;
    }
  }
  r.json["reports"] = reports;
  return r;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Graded Lie algebras over F_l and Z/l^N: cohomology, deformations, representations"};
  app.require_subcommand(1);
  Globals g;
  app.add_flag("--json", g.json, "machine-readable output");
  app.add_flag("--lax", g.lax, "ignore unknown document keys");
  app.fallthrough();

  std::function<Result()> run;
  std::string file, coeffs = "adjoint", grades = "0", gens, out, ext, direction, base;
  int q = 2, i = 1, degree = 0, stages = 1;
  std::uint32_t l = 5, n = 1;
  std::size_t bound = 1 << 16;
  std::vector<int> eta_grades{0};
  RepFlags rf;
  std::string lie_file;

  auto* validate = app.add_subcommand("validate", "parse and validate a document");
  validate->add_option("file", file, "document")->required();
  validate->callback([&] { run = [&] { return cmd_validate(file, g); }; });

  auto* coh = app.add_subcommand("cohomology", "Chevalley-Eilenberg cohomology H^q(L, M)(m)");
  coh->add_option("file", file, "lie document")->required();
  coh->add_option("--q", q, "cochain degree")->required();
  coh->add_option("--grade", grades, "internal grade M or window LO:HI");
  coh->add_option("--coeffs", coeffs, "adjoint or a module document");
  coh->callback([&] { run = [&] { return cmd_cohomology(file, q, grades, coeffs, g); }; });

  auto* harr = app.add_subcommand("harrison", "Harrison cohomology Harr^i(A, k)");
  harr->add_option("file", file, "artin document")->required();
  harr->add_option("--i", i, "1 or 2")->required();
  harr->callback([&] { run = [&] { return cmd_harrison(file, i, g); }; });

  auto* fr = app.add_subcommand("free", "truncated free Lie algebra");
  fr->add_option("--gens", gens, "generators as name:degree,...")->required();
  fr->add_option("--degree", degree, "truncation degree")->required();
  fr->add_option("--l", l, "prime");
  fr->add_option("--N", n, "precision");
  fr->add_option("-o,--output", out, "write the document here");
  fr->callback([&] { run = [&] { return cmd_free(gens, degree, l, n, out, g); }; });

  auto* et = app.add_subcommand("eta", "the square-zero deformation eta over D_1");
  et->add_option("file", file, "lie document")->required();
  et->add_option("--grades", eta_grades, "grades of H^2 to include");
  et->callback([&] { run = [&] { return cmd_eta(file, eta_grades, g); }; });

  auto* ob = app.add_subcommand("obstruct", "obstruction to extending a deformation");
  ob->add_option("file", file, "deformation document")->required();
  ob->add_option("--ext", ext, "morphism document B -> A")->required();
  ob->callback([&] { run = [&] { return cmd_obstruct(file, ext, g); }; });

  auto* ex = app.add_subcommand("extend", "extend a deformation along a small extension");
  ex->add_option("file", file, "deformation document")->required();
  ex->add_option("--ext", ext, "morphism document B -> A")->required();
  ex->callback([&] { run = [&] { return cmd_extend(file, ext, g); }; });

  auto* tw = app.add_subcommand("tower", "miniversal tower D_1 .. D_k");
  tw->add_option("file", file, "lie document")->required();
  tw->add_option("--stages", stages, "number of stages");
  tw->callback([&] { run = [&] { return cmd_tower(file, stages, g); }; });

  auto* rt = app.add_subcommand("rep-tangent", "H^1(G, Ad rho)(0) and first-order lifts");
  add_rep_flags(rt, rf);
  rt->callback([&] { run = [&] { return cmd_rep_tangent(rf, g); }; });

  auto* rl = app.add_subcommand("rep-lift", "lift a first-order deformation along F_l[t]/t^n");
  add_rep_flags(rl, rf);
  rl->add_option("--direction", direction, "tangent coordinates v1,..,vh (default all ones)");
  rl->add_option("--base", base, "artin document F_l[t]/t^n (default n = 3)");
  rl->callback([&] { run = [&] { return cmd_rep_lift(rf, direction, base, g); }; });

  auto* re = app.add_subcommand("rep-enumerate", "all lifts over an Artin algebra");
  add_rep_flags(re, rf);
  re->add_option("--base", base, "artin document (default F_l[t]/t^2)");
  re->add_option("--bound", bound, "maximal number of candidates");
  re->callback([&] { run = [&] { return cmd_rep_enumerate(rf, base, bound, g); }; });

  auto* qu = app.add_subcommand("quadratic", "quadratic relations of the deformation ring");
  add_rep_flags(qu, rf);
  auto* qlie = qu->add_option("--lie", lie_file, "lie document");
  qlie->excludes("--rep")->excludes("--map");
  qu->callback([&] {
    run = [&] { return lie_file.empty() ? cmd_quadratic_rep(rf, g) : cmd_quadratic_lie(lie_file, g); };
  });

  auto* sc = app.add_subcommand("schlessinger", "check H1-H4 for a functor suite");
  sc->add_option("--suite", file, "functor-suite document")->required();
  sc->callback([&] { run = [&] { return cmd_schlessinger(file, g); }; });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    Result r = run();
    if (g.json) {
      Json j = r.json;
      j["exit"] = r.code;
      std::cout << j.dump(2) << "\n";
    } else {
      for (const auto& s : r.lines) std::cout << s << "\n";
    }
    return r.code;
  } catch (const ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
}
