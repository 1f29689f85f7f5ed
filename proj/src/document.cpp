#include "lieforge/document.hpp"

#include <fstream>
#include <map>
#include <set>
#include <sstream>

#include "json.hpp"

namespace lieforge {

using Json = nlohmann::ordered_json;

ParseError::ParseError(std::string file, std::string path, const std::string& message, bool mathematical)
    : Error(file + (path.empty() ? "" : ":" + path) + ": " + message),
      file_(std::move(file)),
      path_(std::move(path)),
      mathematical_(mathematical) {}

namespace {

struct Reader {
  std::string file;
  std::filesystem::path dir;
  ParseOptions options;

  [[noreturn]] void fail(const std::string& path, const std::string& msg, bool math = false) const {
    throw ParseError(file, path, msg, math);
  }

  void keys(const Json& obj, const std::string& path, std::initializer_list<const char*> allowed) const {
    if (!obj.is_object()) fail(path, "expected an object");
    if (!options.strict) return;
    for (const auto& [k, v] : obj.items()) {
      (void)v;
      bool ok = false;
      for (const char* a : allowed) ok = ok || k == a;
      if (!ok) fail(path + "/" + k, "unknown key");
    }
  }

  const Json& at(const Json& obj, const std::string& path, const char* key) const {
    if (!obj.contains(key)) fail(path + "/" + key, "missing");
    return obj.at(key);
  }

  std::int64_t integer(const Json& v, const std::string& path) const {
    if (!v.is_number_integer()) fail(path, "expected an integer");
    return v.get<std::int64_t>();
  }

  std::size_t index(const Json& v, const std::string& path, std::size_t bound, const std::string& what) const {
    auto i = integer(v, path);
    if (i < 0 || static_cast<std::size_t>(i) >= bound)
      fail(path, what + " " + std::to_string(i) + " out of range [0, " + std::to_string(bound) + ")");
    return static_cast<std::size_t>(i);
  }

  std::string string(const Json& v, const std::string& path) const {
    if (!v.is_string()) fail(path, "expected a string");
    return v.get<std::string>();
  }

  const Json& array(const Json& v, const std::string& path) const {
    if (!v.is_array()) fail(path, "expected an array");
    return v;
  }

  CoeffRing ring(const Json& doc) const {
    const Json& r = at(doc, "", "ring");
    keys(r, "/ring", {"l", "N"});
    auto l = integer(at(r, "/ring", "l"), "/ring/l");
    auto n = r.contains("N") ? integer(r.at("N"), "/ring/N") : 1;
    if (l < 2 || n < 1) fail("/ring", "l must be a prime and N >= 1");
    try {
      return CoeffRing(static_cast<std::uint32_t>(l), static_cast<std::uint32_t>(n));
    } catch (const InvalidArgument& e) {
      fail("/ring", e.what());
    }
  }

  Scalar coeff(const Json& v, const std::string& path, const CoeffRing& ring) const {
    return ring.reduce(integer(v, path));
  }

  std::filesystem::path ref(const Json& v, const std::string& path) const {
    std::filesystem::path p(string(v, path));
    return p.is_absolute() ? p : dir / p;
  }
};

Document load_at(const std::filesystem::path& path, const ParseOptions& options);

Document load_ref(const Reader& r, const Json& v, const std::string& path) {
  auto p = r.ref(v, path);
  try {
    return load_at(p, r.options);
  } catch (const ParseError&) {
    throw;
  } catch (const Error& e) {
    r.fail(path, e.what());
  }
}

// [deg, idx] -> global basis index
std::size_t basis_ref(const Reader& r, const Json& v, const std::string& path, const GradedLieAlgebra& l) {
  const Json& a = r.array(v, path);
  if (a.size() != 2) r.fail(path, "expected [degree, index]");
  auto deg = r.integer(a[0], path + "/0");
  if (deg < 1 || deg > static_cast<std::int64_t>(l.truncation()))
    r.fail(path + "/0", "degree " + std::to_string(deg) + " outside [1, " + std::to_string(l.truncation()) + "]");
  auto idx = r.index(a[1], path + "/1", l.rank(static_cast<int>(deg)), "index");
  return l.index(static_cast<int>(deg), idx);
}

std::string pair_name(const GradedLieAlgebra& l, std::size_t a, std::size_t b) {
  return "[" + l.label(a) + "," + l.label(b) + "]";
}

LiePtr parse_lie(const Reader& r, const Json& doc) {
  r.keys(doc, "", {"ring", "kind", "degrees", "basis", "brackets"});
  CoeffRing ring = r.ring(doc);
  const Json& degs = r.array(r.at(doc, "", "degrees"), "/degrees");
  if (degs.empty()) r.fail("/degrees", "at least one degree is required");
  std::vector<std::size_t> ranks;
  for (std::size_t i = 0; i < degs.size(); ++i) {
    auto n = r.integer(degs[i], "/degrees/" + std::to_string(i));
    if (n < 0) r.fail("/degrees/" + std::to_string(i), "negative rank");
    ranks.push_back(static_cast<std::size_t>(n));
  }
  std::vector<std::vector<std::string>> labels;
  if (doc.contains("basis")) {
    const Json& b = r.array(doc.at("basis"), "/basis");
    if (b.size() != ranks.size()) r.fail("/basis", "one label list per degree is required");
    for (std::size_t i = 0; i < b.size(); ++i) {
      const std::string p = "/basis/" + std::to_string(i);
      const Json& row = r.array(b[i], p);
      if (row.size() != ranks[i]) r.fail(p, "expected " + std::to_string(ranks[i]) + " labels");
      std::vector<std::string> names;
      for (std::size_t j = 0; j < row.size(); ++j) names.push_back(r.string(row[j], p + "/" + std::to_string(j)));
      labels.push_back(std::move(names));
    }
  }
  GradedLieAlgebra l(ring, ranks, labels);
  const int d = static_cast<int>(l.truncation());
  std::map<std::pair<std::size_t, std::size_t>, std::size_t> seen;  // ordered pair -> entry
  struct Entry {
    std::size_t a, b;
    Element value;
  };
  std::vector<Entry> entries;
  const Json& brackets = doc.contains("brackets") ? r.array(doc.at("brackets"), "/brackets") : Json::array();
  for (std::size_t e = 0; e < brackets.size(); ++e) {
    const std::string p = "/brackets/" + std::to_string(e);
    const Json& br = brackets[e];
    r.keys(br, p, {"left", "right", "value"});
    const std::size_t a = basis_ref(r, r.at(br, p, "left"), p + "/left", l);
    const std::size_t b = basis_ref(r, r.at(br, p, "right"), p + "/right", l);
    if (a == b) r.fail(p, "antisymmetry: " + pair_name(l, a, b) + " must vanish", true);
    const auto key = std::minmax(a, b);
    if (auto it = seen.find(key); it != seen.end())
      r.fail(p, "antisymmetry: " + pair_name(l, a, b) + " at " + p + " repeats " + pair_name(l, key.first, key.second) +
                    " at /brackets/" + std::to_string(it->second),
             true);
    seen[key] = e;
    if (a > b)
      r.fail(p, "entries store left < right; write " + pair_name(l, b, a) + " instead of " + pair_name(l, a, b));
    const int forced = l.degree(a) + l.degree(b);
    Element value(l.dim(), 0);
    const Json& vals = r.array(r.at(br, p, "value"), p + "/value");
    for (std::size_t i = 0; i < vals.size(); ++i) {
      const std::string vp = p + "/value/" + std::to_string(i);
      const Json& t = r.array(vals[i], vp);
      if (t.size() != 2 && t.size() != 3) r.fail(vp, "expected [index, coeff] or [degree, index, coeff]");
      if (t.size() == 3) {
        auto deg = r.integer(t[0], vp + "/0");
        if (deg != forced)
          r.fail(vp + "/0",
                 "grading: " + pair_name(l, a, b) + " has a value in degree " + std::to_string(deg) +
                     ", expected " + std::to_string(forced),
                 true);
      }
      const Scalar c = r.coeff(t[t.size() - 1], vp + "/" + std::to_string(t.size() - 1), ring);
      if (forced > d) {
        if (c != 0)
          r.fail(vp, "grading: " + pair_name(l, a, b) + " lands in degree " + std::to_string(forced) +
                         " above the truncation " + std::to_string(d),
                 true);
        continue;
      }
      const std::size_t idx = r.index(t[t.size() - 2], vp + "/" + std::to_string(t.size() - 2), l.rank(forced),
                                      "index in degree " + std::to_string(forced));
      value[l.index(forced, idx)] = ring.add(value[l.index(forced, idx)], c);
    }
    entries.push_back({a, b, std::move(value)});
  }
  for (const auto& e : entries) l.set_antisymmetric(e.a, e.b, e.value);
  auto report = l.validate();
  if (!report.ok()) r.fail("/brackets", l.describe_issue(report.issues.front()), true);
  return share(std::move(l));
}

std::vector<Vec> sparse_table(const Reader& r, const Json& v, const std::string& path, std::size_t count,
                              std::size_t width, const CoeffRing& ring) {
  const Json& t = r.array(v, path);
  if (t.size() != count) r.fail(path, "expected " + std::to_string(count) + " entries");
  std::vector<Vec> out;
  for (std::size_t i = 0; i < t.size(); ++i) {
    const std::string p = path + "/" + std::to_string(i);
    Vec row(width, 0);
    const Json& e = r.array(t[i], p);
    for (std::size_t j = 0; j < e.size(); ++j) {
      const std::string q = p + "/" + std::to_string(j);
      const Json& pr = r.array(e[j], q);
      if (pr.size() != 2) r.fail(q, "expected [index, coeff]");
      const auto k = r.index(pr[0], q + "/0", width, "index");
      row[k] = ring.add(row[k], r.coeff(pr[1], q + "/1", ring));
    }
    out.push_back(std::move(row));
  }
  return out;
}

ArtinPtr parse_artin(const Reader& r, const Json& doc) {
  r.keys(doc, "", {"ring", "kind", "rank", "unit", "table", "maximal", "labels"});
  CoeffRing ring = r.ring(doc);
  if (!ring.is_field()) r.fail("/ring", "Artin algebras are over F_l (N = 1)");
  auto rank = r.integer(r.at(doc, "", "rank"), "/rank");
  if (rank < 1) r.fail("/rank", "rank must be positive");
  const auto n = static_cast<std::size_t>(rank);
  const auto unit = r.index(r.at(doc, "", "unit"), "/unit", n, "unit index");
  auto table = sparse_table(r, r.at(doc, "", "table"), "/table", n * n, n, ring);
  std::vector<std::size_t> maximal;
  const Json& m = r.array(r.at(doc, "", "maximal"), "/maximal");
  for (std::size_t i = 0; i < m.size(); ++i) maximal.push_back(r.index(m[i], "/maximal/" + std::to_string(i), n, "index"));
  std::vector<std::string> labels;
  if (doc.contains("labels")) {
    const Json& ls = r.array(doc.at("labels"), "/labels");
    if (ls.size() != n) r.fail("/labels", "one label per basis element is required");
    for (std::size_t i = 0; i < n; ++i) labels.push_back(r.string(ls[i], "/labels/" + std::to_string(i)));
  }
  try {
    return share(ArtinLocalAlgebra(ring, n, unit, std::move(table), std::move(maximal), std::move(labels)));
  } catch (const InvalidArgument& e) {
    r.fail("/table", e.what(), true);
  }
}

std::vector<Mat> parse_blocks(const Reader& r, const Json& v, const std::string& path, const GradedLieAlgebra& s,
                              const GradedLieAlgebra& t) {
  const Json& bs = r.array(v, path);
  if (bs.size() != s.truncation()) r.fail(path, "expected one block per degree (" + std::to_string(s.truncation()) + ")");
  std::vector<Mat> out;
  for (std::size_t i = 0; i < bs.size(); ++i) {
    const int deg = static_cast<int>(i + 1);
    const std::string p = path + "/" + std::to_string(i);
    const Json& rows = r.array(bs[i], p);
    if (rows.size() != s.rank(deg)) r.fail(p, "expected " + std::to_string(s.rank(deg)) + " rows");
    Mat m(s.ring(), s.rank(deg), t.rank(deg));
    for (std::size_t a = 0; a < rows.size(); ++a) {
      const std::string q = p + "/" + std::to_string(a);
      const Json& row = r.array(rows[a], q);
      if (row.size() != t.rank(deg)) r.fail(q, "expected " + std::to_string(t.rank(deg)) + " entries");
      for (std::size_t b = 0; b < row.size(); ++b) m.set(a, b, r.coeff(row[b], q + "/" + std::to_string(b), s.ring()));
    }
    out.push_back(std::move(m));
  }
  return out;
}

GradedMorphism lie_morphism(const Reader& r, const LiePtr& s, const LiePtr& t, const Json& blocks,
                            const std::string& path) {
  if (!(s->ring() == t->ring()) || s->truncation() != t->truncation())
    r.fail(path, "source and target differ in ring or truncation");
  GradedMorphism m(s, t, parse_blocks(r, blocks, path, *s, *t));
  auto bad = m.bracket_violations();
  if (!bad.empty())
    r.fail(path, "not a Lie morphism: " + pair_name(*s, bad[0].first, bad[0].second) + " is not preserved", true);
  return m;
}

Document parse_morphism(const Reader& r, const Json& doc, const std::string& kind) {
  r.keys(doc, "", {"ring", "kind", "source", "target", "blocks", "matrix"});
  Document src = load_ref(r, r.at(doc, "", "source"), "/source");
  Document tgt = load_ref(r, r.at(doc, "", "target"), "/target");
  Document out;
  out.kind = kind;
  if (src.artin && tgt.artin && kind == "morphism") {
    const Json& rows = r.array(r.at(doc, "", "matrix"), "/matrix");
    const auto& a = *src.artin;
    const auto& b = *tgt.artin;
    if (rows.size() != a.rank()) r.fail("/matrix", "expected " + std::to_string(a.rank()) + " rows");
    Mat m(a.ring(), a.rank(), b.rank());
    for (std::size_t i = 0; i < rows.size(); ++i) {
      const std::string q = "/matrix/" + std::to_string(i);
      const Json& row = r.array(rows[i], q);
      if (row.size() != b.rank()) r.fail(q, "expected " + std::to_string(b.rank()) + " entries");
      for (std::size_t j = 0; j < row.size(); ++j) m.set(i, j, r.coeff(row[j], q + "/" + std::to_string(j), a.ring()));
    }
    try {
      out.artin_morphism = ArtinMorphism(src.artin, tgt.artin, m);
    } catch (const InvalidArgument& e) {
      r.fail("/matrix", e.what(), true);
    }
    return out;
  }
  if (!src.lie || !tgt.lie) r.fail("/source", "source and target must both be Lie or both Artin algebras");
  auto m = lie_morphism(r, src.lie, tgt.lie, r.at(doc, "", "blocks"), "/blocks");
  if (kind == "rep") {
    try {
      out.rep = share(GradedRep(m));
    } catch (const InvalidArgument& e) {
      r.fail("/blocks", e.what(), true);
    }
  }
  out.morphism = std::move(m);
  return out;
}

ModulePtr parse_module(const Reader& r, const Json& doc) {
  r.keys(doc, "", {"ring", "kind", "algebra", "degrees", "labels", "action"});
  Document alg = load_ref(r, r.at(doc, "", "algebra"), "/algebra");
  if (!alg.lie) r.fail("/algebra", "expected a Lie algebra document");
  const auto& l = *alg.lie;
  std::vector<int> degrees;
  const Json& ds = r.array(r.at(doc, "", "degrees"), "/degrees");
  for (std::size_t i = 0; i < ds.size(); ++i) degrees.push_back(static_cast<int>(r.integer(ds[i], "/degrees/" + std::to_string(i))));
  std::vector<std::string> labels;
  if (doc.contains("labels")) {
    const Json& ls = r.array(doc.at("labels"), "/labels");
    if (ls.size() != degrees.size()) r.fail("/labels", "one label per basis element is required");
    for (std::size_t i = 0; i < ls.size(); ++i) labels.push_back(r.string(ls[i], "/labels/" + std::to_string(i)));
  }
  LieModule m(alg.lie, degrees, labels);
  const Json& acts = doc.contains("action") ? r.array(doc.at("action"), "/action") : Json::array();
  for (std::size_t e = 0; e < acts.size(); ++e) {
    const std::string p = "/action/" + std::to_string(e);
    r.keys(acts[e], p, {"element", "on", "value"});
    const auto x = basis_ref(r, r.at(acts[e], p, "element"), p + "/element", l);
    const auto on = r.index(r.at(acts[e], p, "on"), p + "/on", m.dim(), "module index");
    Vec v(m.dim(), 0);
    const Json& vals = r.array(r.at(acts[e], p, "value"), p + "/value");
    for (std::size_t i = 0; i < vals.size(); ++i) {
      const std::string q = p + "/value/" + std::to_string(i);
      const Json& t = r.array(vals[i], q);
      if (t.size() != 2) r.fail(q, "expected [index, coeff]");
      const auto k = r.index(t[0], q + "/0", m.dim(), "module index");
      if (m.degree(k) != l.degree(x) + m.degree(on))
        r.fail(q, "grading: value in degree " + std::to_string(m.degree(k)) + ", expected " +
                      std::to_string(l.degree(x) + m.degree(on)),
               true);
      v[k] = l.ring().add(v[k], r.coeff(t[1], q + "/1", l.ring()));
    }
    m.set_action(x, on, v);
  }
  auto bad = m.action_identity_violations();
  if (!bad.empty())
    r.fail("/action", "[" + l.label(bad[0][0]) + "," + l.label(bad[0][1]) + "] does not act as the commutator on " +
                          m.label(bad[0][2]),
           true);
  return share(std::move(m));
}

LieDeformation parse_deformation(const Reader& r, const Json& doc) {
  r.keys(doc, "", {"ring", "kind", "lie", "base", "brackets"});
  Document lie = load_ref(r, r.at(doc, "", "lie"), "/lie");
  Document base = load_ref(r, r.at(doc, "", "base"), "/base");
  if (!lie.lie) r.fail("/lie", "expected a Lie algebra document");
  if (!base.artin) r.fail("/base", "expected an Artin algebra document");
  const auto& l = *lie.lie;
  const auto& a = *base.artin;
  const std::size_t n = l.dim(), rk = a.rank();
  auto constants = LieDeformation::trivial(lie.lie, base.artin).all_constants();
  const Json& brackets = doc.contains("brackets") ? r.array(doc.at("brackets"), "/brackets") : Json::array();
  std::set<std::pair<std::size_t, std::size_t>> seen;
  for (std::size_t e = 0; e < brackets.size(); ++e) {
    const std::string p = "/brackets/" + std::to_string(e);
    r.keys(brackets[e], p, {"left", "right", "value"});
    const auto x = basis_ref(r, r.at(brackets[e], p, "left"), p + "/left", l);
    const auto y = basis_ref(r, r.at(brackets[e], p, "right"), p + "/right", l);
    if (x >= y) r.fail(p, "entries store left < right");
    if (!seen.insert({x, y}).second) r.fail(p, "repeated entry " + pair_name(l, x, y));
    const Json& vals = r.array(r.at(brackets[e], p, "value"), p + "/value");
    for (std::size_t i = 0; i < vals.size(); ++i) {
      const std::string q = p + "/value/" + std::to_string(i);
      const Json& t = r.array(vals[i], q);
      if (t.size() != 4) r.fail(q, "expected [degree, index, base index, coeff]");
      auto deg = r.integer(t[0], q + "/0");
      if (deg < 1 || deg > static_cast<std::int64_t>(l.truncation())) r.fail(q + "/0", "degree out of range");
      const auto k = l.index(static_cast<int>(deg), r.index(t[1], q + "/1", l.rank(static_cast<int>(deg)), "index"));
      const auto j = r.index(t[2], q + "/2", rk, "base index");
      const Scalar c = r.coeff(t[3], q + "/3", l.ring());
      constants[x * n + y][k * rk + j] = l.ring().add(constants[x * n + y][k * rk + j], c);
      constants[y * n + x][k * rk + j] = l.ring().sub(constants[y * n + x][k * rk + j], c);
    }
  }
  try {
    return LieDeformation(lie.lie, base.artin, std::move(constants));
  } catch (const InvalidArgument& e) {
    r.fail("/brackets", e.what(), true);
  }
}

FunctorSuite parse_suite(const Reader& r, const Json& doc) {
  r.keys(doc, "", {"ring", "kind", "truncation", "base", "objects", "arrows", "functors"});
  CoeffRing ring = r.ring(doc);
  if (!ring.is_field()) r.fail("/ring", "functor suites are over F_l");
  auto d = r.integer(r.at(doc, "", "truncation"), "/truncation");
  if (d < 1) r.fail("/truncation", "truncation must be positive");
  std::optional<LiePtr> base;
  if (doc.contains("base")) {
    Document b = load_ref(r, doc.at("base"), "/base");
    if (!b.lie) r.fail("/base", "expected a Lie algebra document");
    base = b.lie;
  }
  std::vector<CatObject> objects;
  const Json& objs = r.array(r.at(doc, "", "objects"), "/objects");
  for (std::size_t i = 0; i < objs.size(); ++i) {
    const std::string p = "/objects/" + std::to_string(i);
    r.keys(objs[i], p, {"name", "lie", "structure"});
    const std::string name = r.string(r.at(objs[i], p, "name"), p + "/name");
    const std::string lie = r.string(r.at(objs[i], p, "lie"), p + "/lie");
    CatObject o;
    if (lie == "zero") {
      o = TestCategory::zero_object(ring, static_cast<std::size_t>(d), base);
    } else if (lie == "eps") {
      o = TestCategory::eps_object(ring, static_cast<std::size_t>(d), base);
    } else {
      Document ld = load_ref(r, objs[i].at("lie"), p + "/lie");
      if (!ld.lie) r.fail(p + "/lie", "expected a Lie algebra document");
      o.lie = ld.lie;
      if (base) {
        o.structure = lie_morphism(r, *base, o.lie, r.at(objs[i], p, "structure"), p + "/structure");
      }
    }
    o.name = name;
    objects.push_back(std::move(o));
  }
  auto find = [&](const Json& v, const std::string& p) {
    const std::string name = r.string(v, p);
    for (std::size_t i = 0; i < objects.size(); ++i)
      if (objects[i].name == name) return i;
    r.fail(p, "unknown object " + name);
  };
  std::vector<CatArrow> arrows;
  const Json& arr = doc.contains("arrows") ? r.array(doc.at("arrows"), "/arrows") : Json::array();
  for (std::size_t i = 0; i < arr.size(); ++i) {
    const std::string p = "/arrows/" + std::to_string(i);
    r.keys(arr[i], p, {"name", "from", "to", "blocks"});
    const auto from = find(r.at(arr[i], p, "from"), p + "/from");
    const auto to = find(r.at(arr[i], p, "to"), p + "/to");
    auto m = lie_morphism(r, objects[from].lie, objects[to].lie, r.at(arr[i], p, "blocks"), p + "/blocks");
    arrows.push_back({r.string(r.at(arr[i], p, "name"), p + "/name"), from, to, std::move(m)});
  }
  FunctorSuite out;
  try {
    out.category = std::make_shared<const TestCategory>(base, objects, std::move(arrows));
  } catch (const InvalidArgument& e) {
    r.fail("/objects", e.what(), true);
  }
  const Json& fs = r.array(r.at(doc, "", "functors"), "/functors");
  for (std::size_t i = 0; i < fs.size(); ++i) {
    const std::string p = "/functors/" + std::to_string(i);
    r.keys(fs[i], p, {"type", "object", "objects", "size", "rep"});
    const std::string type = r.string(r.at(fs[i], p, "type"), p + "/type");
    if (type == "hom") {
      out.functors.push_back(hom_oracle(objects[find(r.at(fs[i], p, "object"), p + "/object")]));
    } else if (type == "wedge") {
      const Json& two = r.array(r.at(fs[i], p, "objects"), p + "/objects");
      if (two.size() != 2) r.fail(p + "/objects", "expected two object names");
      out.functors.push_back(wedge_oracle(objects[find(two[0], p + "/objects/0")], objects[find(two[1], p + "/objects/1")]));
    } else if (type == "constant") {
      auto size = r.integer(r.at(fs[i], p, "size"), p + "/size");
      if (size < 0) r.fail(p + "/size", "size must be nonnegative");
      out.functors.push_back(constant_oracle(static_cast<std::size_t>(size)));
    } else if (type == "rep") {
      Document rd = load_ref(r, r.at(fs[i], p, "rep"), p + "/rep");
      if (!rd.rep) r.fail(p + "/rep", "expected a rep document");
      out.functors.push_back(rep_transport_oracle(rd.rep));
    } else {
      r.fail(p + "/type", "unknown functor type " + type);
    }
  }
  return out;
}

Document dispatch(const Reader& r, const Json& doc) {
  if (!doc.is_object()) r.fail("", "expected a JSON object");
  const std::string kind = r.string(r.at(doc, "", "kind"), "/kind");
  if (doc.contains("ring") && kind != "lie" && kind != "artin" && kind != "functor-suite") r.ring(doc);
  Document out;
  if (kind == "lie") {
    out.lie = parse_lie(r, doc);
  } else if (kind == "artin") {
    out.artin = parse_artin(r, doc);
  } else if (kind == "morphism" || kind == "rep") {
    out = parse_morphism(r, doc, kind);
  } else if (kind == "module") {
    out.module = parse_module(r, doc);
  } else if (kind == "deformation") {
    out.deformation = parse_deformation(r, doc);
  } else if (kind == "functor-suite") {
    out.suite = parse_suite(r, doc);
  } else {
    r.fail("/kind", "unknown kind " + kind);
  }
  out.kind = kind;
  return out;
}

Document load_at(const std::filesystem::path& path, const ParseOptions& options) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError(path.string(), "", "cannot open file");
  std::stringstream ss;
  ss << in.rdbuf();
  return parse_document(ss.str(), path.parent_path(), options, path.string());
}

Json ring_json(const CoeffRing& ring) { return Json{{"l", ring.prime()}, {"N", ring.precision()}}; }

std::string dump(const Json& j) { return j.dump(2) + "\n"; }

}  // namespace

Document parse_document(const std::string& text, const std::filesystem::path& dir, const ParseOptions& options,
                        const std::string& file) {
  Reader r{file, dir, options};
  Json doc;
  try {
    doc = Json::parse(text);
  } catch (const Json::parse_error& e) {
    throw ParseError(file, "", std::string("syntax error: ") + e.what());
  }
  return dispatch(r, doc);
}

Document load_document(const std::filesystem::path& path, const ParseOptions& options) {
  return load_at(path, options);
}

std::string serialize_lie(const GradedLieAlgebra& l) {
  Json j;
  j["ring"] = ring_json(l.ring());
  j["kind"] = "lie";
  j["degrees"] = l.ranks();
  Json basis = Json::array();
  for (std::size_t i = 1; i <= l.truncation(); ++i) {
    Json row = Json::array();
    for (std::size_t k = 0; k < l.rank(static_cast<int>(i)); ++k) row.push_back(l.label(l.index(static_cast<int>(i), k)));
    basis.push_back(row);
  }
  j["basis"] = basis;
  Json brackets = Json::array();
  for (std::size_t a = 0; a < l.dim(); ++a)
    for (std::size_t b = a + 1; b < l.dim(); ++b) {
      auto v = l.bracket(a, b);
      if (is_zero_vec(v)) continue;
      const int deg = l.degree(a) + l.degree(b);
      Json value = Json::array();
      for (std::size_t k = 0; k < l.dim(); ++k)
        if (v[k] != 0) value.push_back(Json::array({k - l.offset(deg), v[k]}));
      brackets.push_back(Json{{"left", {l.degree(a), a - l.offset(l.degree(a))}},
                              {"right", {l.degree(b), b - l.offset(l.degree(b))}},
                              {"value", value}});
    }
  j["brackets"] = brackets;
  return dump(j);
}

std::string serialize_artin(const ArtinLocalAlgebra& a) {
  Json j;
  j["ring"] = ring_json(a.ring());
  j["kind"] = "artin";
  j["rank"] = a.rank();
  j["unit"] = a.unit();
  Json table = Json::array();
  for (const auto& v : a.table()) {
    Json e = Json::array();
    for (std::size_t k = 0; k < v.size(); ++k)
      if (v[k] != 0) e.push_back(Json::array({k, v[k]}));
    table.push_back(e);
  }
  j["table"] = table;
  j["maximal"] = a.maximal();
  j["labels"] = a.labels();
  return dump(j);
}

}  // namespace lieforge
