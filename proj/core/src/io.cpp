#include "wha/io.hpp"

#include <json.hpp>

#include <fstream>
#include <sstream>

namespace wha::io {

using Json = nlohmann::ordered_json;

namespace {

[[noreturn]] void fail(const std::string& what) { throw ParseError(what); }

Json parse_json(std::string_view text) {
  try {
    return Json::parse(text.begin(), text.end());
  } catch (const Json::exception& e) {
    fail(std::string("not valid JSON: ") + e.what());
  }
}

const Json& field(const Json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) fail(std::string("missing field '") + key + "'");
  return j.at(key);
}

std::size_t index(const Json& j, std::size_t bound, const char* what) {
  if (!j.is_number_unsigned() && !(j.is_number_integer() && j.get<long long>() >= 0)) {
    fail(std::string(what) + " must be a non-negative integer");
  }
  auto k = j.get<std::size_t>();
  if (k >= bound) fail(std::string(what) + " " + std::to_string(k) + " out of range");
  return k;
}

Scalar scalar(const Json& j) {
  if (j.is_number_integer()) return Scalar(j.get<long>());
  if (!j.is_string()) fail("scalars must be strings such as \"1/2+1*i\"");
  try {
    return Scalar::parse(j.get<std::string>());
  } catch (const std::invalid_argument& e) {
    fail(e.what());
  }
}

Vec vector(const Json& j, std::size_t dim, const char* what) {
  if (!j.is_array() || j.size() != dim) fail(std::string(what) + " must be an array of " + std::to_string(dim) + " scalars");
  std::vector<Vec::Term> t;
  for (std::size_t i = 0; i < dim; ++i) t.emplace_back(i, scalar(j[i]));
  return Vec::from_terms(dim, std::move(t));
}

// Dense rows; column j of the result is read from entry [i][j].
LinearMap dense(const Json& j, std::size_t rows, std::size_t cols, const char* what) {
  if (!j.is_array() || j.size() != rows) fail(std::string(what) + " must have " + std::to_string(rows) + " rows");
  std::vector<std::vector<Vec::Term>> c(cols);
  for (std::size_t i = 0; i < rows; ++i) {
    if (!j[i].is_array() || j[i].size() != cols) fail(std::string(what) + " rows must have " + std::to_string(cols) + " entries");
    for (std::size_t k = 0; k < cols; ++k) c[k].emplace_back(i, scalar(j[i][k]));
  }
  LinearMap m(rows, cols);
  for (std::size_t k = 0; k < cols; ++k) m.set_column(k, Vec::from_terms(rows, std::move(c[k])));
  return m;
}

Vec two_tensor(const Json& j, std::size_t n, const char* what) {
  if (!j.is_array()) fail(std::string(what) + " must be a list of [p, q, scalar]");
  std::vector<Vec::Term> t;
  for (const auto& e : j) {
    if (!e.is_array() || e.size() != 3) fail(std::string(what) + " entries are [p, q, scalar]");
    t.emplace_back(index(e[0], n, "leg index") * n + index(e[1], n, "leg index"), scalar(e[2]));
  }
  return Vec::from_terms(n * n, std::move(t));
}

void check_header(const Json& j, std::initializer_list<const char*> kinds) {
  if (!j.is_object()) fail("top level must be an object");
  const Json& v = field(j, "format_version");
  if (!v.is_number_integer() || v.get<long long>() != kFormatVersion) {
    fail("unsupported format_version " + v.dump() + " (expected " + std::to_string(kFormatVersion) + ")");
  }
  const Json& k = field(j, "kind");
  for (const char* want : kinds) {
    if (k == want) return;
  }
  fail("unexpected kind " + k.dump());
}

Algebra algebra_from(const Json& j) {
  const std::size_t n = index(field(j, "dim"), SIZE_MAX, "dim");
  if (n == 0) fail("dim must be positive");
  std::vector<std::string> names;
  if (j.contains("basis_names")) {
    const Json& bn = j.at("basis_names");
    if (!bn.is_array() || bn.size() != n) fail("basis_names must list " + std::to_string(n) + " names");
    for (const auto& x : bn) {
      if (!x.is_string()) fail("basis names must be strings");
      names.push_back(x.get<std::string>());
    }
  }
  StructureConstants c(n);
  const Json& st = field(j, "structure");
  if (!st.is_array()) fail("structure must be a list of [i, j, k, scalar]");
  for (const auto& e : st) {
    if (!e.is_array() || e.size() != 4) fail("structure entries are [i, j, k, scalar]");
    c.add(index(e[0], n, "structure index"), index(e[1], n, "structure index"), index(e[2], n, "structure index"),
          scalar(e[3]));
  }
  Algebra a = [&] {
    try {
      return Algebra::load(std::move(c), std::move(names));
    } catch (const StructureError& e) {
      fail(std::string("invalid algebra: ") + e.what());
    }
  }();
  if (j.contains("unit")) {
    Vec u = vector(j.at("unit"), n, "unit");
    if (!a.has_unit() || a.one() != u) fail("declared unit is not the unit of the algebra");
  }
  return a;
}

Json scalar_json(const Scalar& s) { return s.str(); }

Json vector_json(const Vec& v) {
  Json out = Json::array();
  for (const auto& s : v.dense()) out.push_back(scalar_json(s));
  return out;
}

Json two_tensor_json(const Vec& x, std::size_t n) {
  Json out = Json::array();
  for (const auto& [k, c] : x.terms()) out.push_back(Json::array({k / n, k % n, c.str()}));
  return out;
}

Json dense_json(const LinearMap& m) {
  Json out = Json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    Json row = Json::array();
    for (std::size_t k = 0; k < m.cols(); ++k) row.push_back(m.column(k)[i].str());
    out.push_back(std::move(row));
  }
  return out;
}

Json algebra_json(const Algebra& a, const char* kind) {
  Json j;
  j["format_version"] = kFormatVersion;
  j["kind"] = kind;
  j["dim"] = a.dim();
  j["basis_names"] = a.basis_names();
  Json st = Json::array();
  for (std::size_t i = 0; i < a.dim(); ++i) {
    for (std::size_t k = 0; k < a.dim(); ++k) {
      for (const auto& [m, c] : a.basis_product(i, k).terms()) st.push_back(Json::array({i, k, m, c.str()}));
    }
  }
  j["structure"] = std::move(st);
  if (a.has_unit()) j["unit"] = vector_json(a.one());
  return j;
}

FiniteGroupoid groupoid_from(const Json& j) {
  const Json& objs = field(j, "objects");
  if (!objs.is_array() || objs.empty()) fail("objects must be a non-empty list");
  std::vector<std::string> objects;
  for (const auto& o : objs) {
    if (!o.is_string()) fail("object labels must be strings");
    objects.push_back(o.get<std::string>());
  }
  auto object = [&](const Json& x) -> std::size_t {
    if (x.is_string()) {
      for (std::size_t k = 0; k < objects.size(); ++k) {
        if (objects[k] == x.get<std::string>()) return k;
      }
      fail("unknown object " + x.dump());
    }
    return index(x, objects.size(), "object");
  };
  const Json& arr = field(j, "arrows");
  if (!arr.is_array() || arr.empty()) fail("arrows must be a non-empty list");
  std::vector<Arrow> arrows;
  for (const auto& a : arr) {
    Arrow x;
    const Json& label = field(a, "label");
    if (!label.is_string()) fail("arrow labels must be strings");
    x.label = label.get<std::string>();
    x.src = object(field(a, "src"));
    x.tgt = object(field(a, "tgt"));
    arrows.push_back(std::move(x));
  }
  const std::size_t m = arrows.size();
  const Json& comp = field(j, "compose");
  if (!comp.is_array() || comp.size() != m) fail("compose must be an " + std::to_string(m) + "x" + std::to_string(m) + " table");
  std::vector<std::vector<std::optional<std::size_t>>> table(m, std::vector<std::optional<std::size_t>>(m));
  for (std::size_t f = 0; f < m; ++f) {
    if (!comp[f].is_array() || comp[f].size() != m) fail("compose rows must have " + std::to_string(m) + " entries");
    for (std::size_t g = 0; g < m; ++g) {
      if (!comp[f][g].is_null()) table[f][g] = index(comp[f][g], m, "arrow");
    }
  }
  const Json& inv = field(j, "inverse");
  if (!inv.is_array() || inv.size() != m) fail("inverse must list " + std::to_string(m) + " arrows");
  std::vector<std::size_t> inverse;
  for (const auto& x : inv) inverse.push_back(index(x, m, "arrow"));
  try {
    return FiniteGroupoid(std::move(objects), std::move(arrows), std::move(table), std::move(inverse));
  } catch (const PreconditionError& e) {
    fail(std::string("invalid groupoid: ") + e.what());
  }
}

WeakHopfSpec weak_hopf_from(const Json& j, const std::string& default_name) {
  std::string name = default_name;
  if (j.contains("name")) {
    if (!j.at("name").is_string()) fail("name must be a string");
    name = j.at("name").get<std::string>();
  }
  if (j.at("kind") == "groupoid") return groupoid_algebra(groupoid_from(j), name);

  Algebra a = algebra_from(j);
  if (!a.has_unit()) fail("a weak Hopf spec needs a unital algebra");
  const std::size_t n = a.dim();
  const Json& cp = field(j, "coproduct");
  if (!cp.is_object()) fail("coproduct must map basis indices to [[p, q, scalar], ...]");
  LinearMap delta(n * n, n);
  for (const auto& [key, val] : cp.items()) {
    std::size_t i = 0;
    try {
      std::size_t used = 0;
      i = std::stoul(key, &used);
      if (used != key.size()) throw std::invalid_argument(key);
    } catch (const std::exception&) {
      fail("coproduct key '" + key + "' is not a basis index");
    }
    if (i >= n) fail("coproduct key " + key + " out of range");
    delta.set_column(i, two_tensor(val, n, "coproduct"));
  }
  // absent keys mean Δ(e_i) = 0
  WeakHopfSpec s{name, a, std::move(delta), vector(field(j, "counit"), n, "counit"),
                 dense(field(j, "antipode"), n, n, "antipode"), std::nullopt, std::nullopt};
  if (j.contains("idempotent")) s.declared_idempotent = two_tensor(j.at("idempotent"), n, "idempotent");
  if (j.contains("antipodal_b")) s.declared_antipodal_b = dense(j.at("antipodal_b"), n, n, "antipodal_b");
  return s;
}

}  // namespace

std::string read_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) fail("cannot read " + path.string());
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

void write_file(const std::filesystem::path& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) fail("cannot write " + path.string());
  out << text;
  if (!out) fail("write failed: " + path.string());
}

Algebra read_algebra(std::string_view text) {
  Json j = parse_json(text);
  check_header(j, {"algebra", "weak-hopf"});
  return algebra_from(j);
}

FiniteGroupoid read_groupoid(std::string_view text) {
  Json j = parse_json(text);
  check_header(j, {"groupoid"});
  return groupoid_from(j);
}

WeakHopfSpec read_weak_hopf(std::string_view text, const std::string& default_name) {
  Json j = parse_json(text);
  check_header(j, {"weak-hopf", "groupoid"});
  return weak_hopf_from(j, default_name);
}

TwistFile read_twist(std::string_view text, const std::filesystem::path& base_dir, const std::string& default_name) {
  Json j = parse_json(text);
  check_header(j, {"twist"});
  const Json& ref = field(j, "spec");
  WeakHopfSpec spec = [&] {
    if (ref.is_string()) {
      std::filesystem::path p = base_dir / ref.get<std::string>();
      return read_weak_hopf(read_file(p), p.stem().string());
    }
    check_header(ref, {"weak-hopf", "groupoid"});
    return weak_hopf_from(ref, default_name);
  }();
  const std::size_t n = spec.dim();
  Vec u = vector(field(j, "u"), n, "u");
  Vec v = vector(field(j, "v"), n, "v");
  return TwistFile{std::move(spec), std::move(u), std::move(v)};
}

Loaded load(const std::filesystem::path& path) {
  std::string text = read_file(path);
  Json j = parse_json(text);
  check_header(j, {"weak-hopf", "groupoid", "twist"});
  if (j.at("kind") == "twist") {
    TwistFile t = read_twist(text, path.parent_path(), path.stem().string());
    return Loaded{std::move(t.spec), std::move(t.u), std::move(t.v)};
  }
  return Loaded{weak_hopf_from(j, path.stem().string()), std::nullopt, std::nullopt};
}

std::string write_algebra(const Algebra& a) { return algebra_json(a, "algebra").dump(2) + "\n"; }

std::string write_weak_hopf(const WeakHopfSpec& s) {
  const std::size_t n = s.dim();
  Json j = algebra_json(s.algebra, "weak-hopf");
  Json out;
  out["format_version"] = j["format_version"];
  out["kind"] = j["kind"];
  out["name"] = s.name;
  for (const auto& [k, v] : j.items()) {
    if (k != "format_version" && k != "kind") out[k] = v;
  }
  Json cp = Json::object();
  for (std::size_t i = 0; i < n; ++i) {
    if (!s.coproduct.column(i).is_zero()) cp[std::to_string(i)] = two_tensor_json(s.coproduct.column(i), n);
  }
  out["coproduct"] = std::move(cp);
  out["counit"] = vector_json(s.counit);
  out["antipode"] = dense_json(s.antipode);
  if (s.declared_idempotent) out["idempotent"] = two_tensor_json(*s.declared_idempotent, n);
  if (s.declared_antipodal_b) out["antipodal_b"] = dense_json(*s.declared_antipodal_b);
  return out.dump(2) + "\n";
}

std::string write_groupoid(const FiniteGroupoid& g) {
  Json j;
  j["format_version"] = kFormatVersion;
  j["kind"] = "groupoid";
  j["objects"] = g.objects();
  Json arrows = Json::array();
  for (const auto& a : g.arrows()) arrows.push_back(Json{{"label", a.label}, {"src", a.src}, {"tgt", a.tgt}});
  j["arrows"] = std::move(arrows);
  Json comp = Json::array();
  for (std::size_t f = 0; f < g.size(); ++f) {
    Json row = Json::array();
    for (std::size_t h = 0; h < g.size(); ++h) {
      auto c = g.compose(f, h);
      row.push_back(c ? Json(*c) : Json(nullptr));
    }
    comp.push_back(std::move(row));
  }
  j["compose"] = std::move(comp);
  Json inv = Json::array();
  for (std::size_t f = 0; f < g.size(); ++f) inv.push_back(g.inverse(f));
  j["inverse"] = std::move(inv);
  return j.dump(2) + "\n";
}

std::string write_twist(const WeakHopfSpec& s, const Vec& u, const Vec& v, const std::string& spec_ref) {
  Json j;
  j["format_version"] = kFormatVersion;
  j["kind"] = "twist";
  j["spec"] = spec_ref.empty() ? Json::parse(write_weak_hopf(s)) : Json(spec_ref);
  j["u"] = vector_json(u);
  j["v"] = vector_json(v);
  return j.dump(2) + "\n";
}

Vec parse_vector(std::string_view csv, std::size_t dim) {
  std::vector<Vec::Term> t;
  std::size_t i = 0;
  std::size_t start = 0;
  while (true) {
    std::size_t end = csv.find(',', start);
    std::string_view item = csv.substr(start, end == std::string_view::npos ? std::string_view::npos : end - start);
    while (!item.empty() && item.front() == ' ') item.remove_prefix(1);
    while (!item.empty() && item.back() == ' ') item.remove_suffix(1);
    try {
      t.emplace_back(i++, Scalar::parse(item));
    } catch (const std::invalid_argument& e) {
      fail("bad vector entry '" + std::string(item) + "': " + e.what());
    }
    if (end == std::string_view::npos) break;
    start = end + 1;
  }
  if (i != dim) fail("vector has " + std::to_string(i) + " entries, expected " + std::to_string(dim));
  return Vec::from_terms(dim, std::move(t));
}

std::string format_vector(const Vec& v) {
  std::string s;
  for (const auto& x : v.dense()) s += (s.empty() ? "" : ",") + x.str();
  return s;
}

}  // namespace wha::io
