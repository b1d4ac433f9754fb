#include "hvec/complex.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <map>
#include <set>
#include <sstream>

#include "json.hpp"

namespace hvec {

Face Face::of(const std::vector<int>& vertices) {
  VertexMask m = 0;
  for (int v : vertices) {
    if (v < 0 || v >= kMaxVertices) throw std::out_of_range("vertex index out of range");
    m |= VertexMask{1} << v;
  }
  return Face(m);
}

std::vector<int> Face::vertices() const {
  std::vector<int> out;
  out.reserve(static_cast<std::size_t>(size()));
  for (VertexMask m = bits; m != 0; m &= m - 1) out.push_back(std::countr_zero(m));
  return out;
}

bool canonical_less(Face a, Face b) noexcept {
  if (a.size() != b.size()) return a.size() < b.size();
  const VertexMask diff = a.bits ^ b.bits;
  if (diff == 0) return false;
  // the smallest vertex in exactly one of them decides
  return (a.bits & (diff & (~diff + 1))) != 0;
}

std::int64_t binomial(std::int64_t n, std::int64_t k) {
  if (k < 0 || n < 0 || k > n) return 0;
  if (k > n - k) k = n - k;
  std::int64_t r = 1;
  for (std::int64_t i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

// ---------------------------------------------------------------------------

SimplicialComplex::SimplicialComplex(std::vector<std::string> names, const std::vector<Face>& generators)
    : names_(std::move(names)) {
  if (names_.size() > static_cast<std::size_t>(kMaxVertices)) {
    throw std::invalid_argument("at most " + std::to_string(kMaxVertices) + " vertices are supported");
  }
  const VertexMask universe =
      names_.size() == 32 ? ~VertexMask{0} : ((VertexMask{1} << names_.size()) - 1);
  std::vector<Face> gens = generators;
  for (Face g : gens) {
    if (!g.subset_of(Face(universe))) throw std::out_of_range("facet uses an unnamed vertex");
  }
  std::sort(gens.begin(), gens.end(), [](Face a, Face b) { return canonical_less(b, a); });
  gens.erase(std::unique(gens.begin(), gens.end()), gens.end());
  for (Face g : gens) {
    bool dominated = false;
    for (Face f : facets_) {
      if (g.subset_of(f)) {
        dominated = true;
        break;
      }
    }
    if (!dominated) facets_.push_back(g);
  }
  std::sort(facets_.begin(), facets_.end(), canonical_less);
  build();
}

void SimplicialComplex::build() {
  std::set<VertexMask> seen;
  dim_ = -1;
  for (Face f : facets_) {
    dim_ = std::max(dim_, f.dim());
    for (VertexMask s = f.bits;; s = (s - 1) & f.bits) {
      seen.insert(s);
      if (s == 0) break;
    }
  }
  faces_.clear();
  faces_.reserve(seen.size());
  for (VertexMask m : seen) faces_.emplace_back(m);
  std::sort(faces_.begin(), faces_.end(), canonical_less);
  by_size_.assign(static_cast<std::size_t>(dim_ + 2), {});
  face_index_.clear();
  face_index_.reserve(faces_.size());
  vertex_mask_ = 0;
  for (Face f : faces_) {
    auto& bucket = by_size_[static_cast<std::size_t>(f.size())];
    face_index_.emplace(f, static_cast<int>(bucket.size()));
    bucket.push_back(f);
    vertex_mask_ |= f.bits;
  }
}

SimplicialComplex SimplicialComplex::empty_complex() { return SimplicialComplex({}, {Face()}); }

SimplicialComplex SimplicialComplex::boundary_simplex(int d) {
  if (d < 1) throw std::invalid_argument("boundary_simplex requires d >= 1");
  std::vector<std::string> names;
  for (int i = 1; i <= d + 1; ++i) names.push_back(std::to_string(i));
  const VertexMask all = (VertexMask{1} << (d + 1)) - 1;
  std::vector<Face> facets;
  for (int v = 0; v <= d; ++v) facets.emplace_back(all & ~(VertexMask{1} << v));
  return SimplicialComplex(std::move(names), facets);
}

SimplicialComplex SimplicialComplex::simplex(int n) {
  std::vector<std::string> names;
  for (int i = 1; i <= n; ++i) names.push_back(std::to_string(i));
  return SimplicialComplex(std::move(names), {Face(n == 32 ? ~VertexMask{0} : (VertexMask{1} << n) - 1)});
}

namespace {

bool parse_int(const std::string& s, long long& out) {
  if (s.empty()) return false;
  const char* b = s.data();
  const char* e = s.data() + s.size();
  auto [ptr, ec] = std::from_chars(b, e, out);
  return ec == std::errc() && ptr == e;
}

std::vector<std::string> order_names(std::set<std::string> names) {
  std::vector<std::string> out(names.begin(), names.end());
  bool numeric = true;
  for (const auto& n : out) {
    long long v = 0;
    numeric = numeric && parse_int(n, v);
  }
  if (numeric) {
    std::stable_sort(out.begin(), out.end(), [](const std::string& a, const std::string& b) {
      long long x = 0;
      long long y = 0;
      parse_int(a, x);
      parse_int(b, y);
      return x < y;
    });
  }
  return out;
}

SimplicialComplex build_named(std::vector<std::string> names, const std::vector<std::vector<std::string>>& facets) {
  std::map<std::string, int> index;
  for (std::size_t i = 0; i < names.size(); ++i) index[names[i]] = static_cast<int>(i);
  std::vector<Face> gens;
  gens.reserve(facets.size());
  for (const auto& f : facets) {
    std::vector<int> vs;
    for (const auto& n : f) vs.push_back(index.at(n));
    gens.push_back(Face::of(vs));
  }
  return SimplicialComplex(std::move(names), gens);
}

}  // namespace

SimplicialComplex SimplicialComplex::from_facets(const std::vector<std::vector<std::string>>& facets) {
  std::set<std::string> names;
  for (const auto& f : facets) {
    std::set<std::string> local;
    for (const auto& n : f) {
      if (!local.insert(n).second) throw std::invalid_argument("duplicate vertex '" + n + "' in a facet");
      names.insert(n);
    }
  }
  if (names.size() > static_cast<std::size_t>(kMaxVertices)) {
    throw std::invalid_argument("at most " + std::to_string(kMaxVertices) + " vertices are supported");
  }
  return build_named(order_names(std::move(names)), facets);
}

SimplicialComplex SimplicialComplex::from_facets(const std::vector<std::vector<int>>& facets) {
  std::vector<std::vector<std::string>> named;
  for (const auto& f : facets) {
    std::vector<std::string> n;
    for (int v : f) n.push_back(std::to_string(v));
    named.push_back(std::move(n));
  }
  return from_facets(named);
}

int SimplicialComplex::vertex_index(const std::string& name) const {
  for (std::size_t i = 0; i < names_.size(); ++i) {
    if (names_[i] == name) return static_cast<int>(i);
  }
  throw std::out_of_range("unknown vertex '" + name + "'");
}

bool SimplicialComplex::is_pure() const noexcept {
  for (Face f : facets_) {
    if (f.dim() != dim_) return false;
  }
  return true;
}

const std::vector<Face>& SimplicialComplex::faces_of_dim(int i) const {
  static const std::vector<Face> none;
  if (i < -1 || i + 1 >= static_cast<int>(by_size_.size())) return none;
  return by_size_[static_cast<std::size_t>(i + 1)];
}

int SimplicialComplex::face_index(Face f) const {
  const auto it = face_index_.find(f);
  return it == face_index_.end() ? -1 : it->second;
}

std::vector<std::int64_t> SimplicialComplex::f_vector() const {
  if (is_void()) throw std::invalid_argument("f-vector of the void complex is undefined");
  std::vector<std::int64_t> f(by_size_.size());
  for (std::size_t k = 0; k < by_size_.size(); ++k) f[k] = static_cast<std::int64_t>(by_size_[k].size());
  return f;
}

std::vector<std::int64_t> SimplicialComplex::h_vector() const {
  const std::vector<std::int64_t> f = f_vector();
  const std::int64_t d = dim_ + 1;
  std::vector<std::int64_t> h(static_cast<std::size_t>(d + 1), 0);
  for (std::int64_t i = 0; i <= d; ++i) {
    std::int64_t s = 0;
    for (std::int64_t j = 0; j <= i; ++j) {
      const std::int64_t term = binomial(d - j, i - j) * f[static_cast<std::size_t>(j)];
      s += ((i - j) % 2 == 0) ? term : -term;
    }
    h[static_cast<std::size_t>(i)] = s;
  }
  return h;
}

SimplicialComplex SimplicialComplex::with_faces(const std::vector<Face>& generators) const {
  return SimplicialComplex(names_, generators);
}

SimplicialComplex SimplicialComplex::link(Face f) const {
  if (!contains(f)) throw std::invalid_argument("link of a non-face " + face_name(f));
  std::vector<Face> gens;
  for (Face g : facets_) {
    if (f.subset_of(g)) gens.push_back(g.minus(f));
  }
  return with_faces(gens);
}

SimplicialComplex SimplicialComplex::contrastar(Face f) const {
  if (!contains(f)) throw std::invalid_argument("contrastar of a non-face " + face_name(f));
  std::vector<Face> gens;
  for (Face g : faces_) {
    if (!f.subset_of(g)) gens.push_back(g);
  }
  return with_faces(gens);
}

std::vector<std::string> SimplicialComplex::fresh_names(int count) const {
  bool numeric = true;
  long long top = 0;
  for (const auto& n : names_) {
    long long v = 0;
    numeric = numeric && parse_int(n, v);
    top = std::max(top, v);
  }
  std::vector<std::string> out;
  std::set<std::string> taken(names_.begin(), names_.end());
  if (numeric) {
    for (int i = 1; i <= count; ++i) out.push_back(std::to_string(top + i));
    return out;
  }
  static const char* const kBase[] = {"N", "S", "C"};
  for (int i = 0; i < count; ++i) {
    std::string n = kBase[i % 3];
    while (taken.count(n) != 0) n += "'";
    taken.insert(n);
    out.push_back(n);
  }
  return out;
}

SimplicialComplex SimplicialComplex::cone() const {
  if (is_void()) throw std::invalid_argument("cone of the void complex");
  std::vector<std::string> names = names_;
  const std::vector<std::string> apex = fresh_names(1);
  names.push_back(apex[0]);
  const Face a = Face::vertex(static_cast<int>(names_.size()));
  std::vector<Face> gens;
  for (Face f : facets_) gens.push_back(f | a);
  return SimplicialComplex(std::move(names), gens);
}

SimplicialComplex SimplicialComplex::suspension() const {
  if (is_void()) throw std::invalid_argument("suspension of the void complex");
  std::vector<std::string> names = names_;
  const std::vector<std::string> apex = fresh_names(2);
  names.insert(names.end(), apex.begin(), apex.end());
  const Face n = Face::vertex(static_cast<int>(names_.size()));
  const Face s = Face::vertex(static_cast<int>(names_.size()) + 1);
  std::vector<Face> gens;
  for (Face f : facets_) {
    gens.push_back(f | n);
    gens.push_back(f | s);
  }
  return SimplicialComplex(std::move(names), gens);
}

SimplicialComplex SimplicialComplex::join(const SimplicialComplex& other) const {
  std::vector<std::string> names = names_;
  std::set<std::string> taken(names_.begin(), names_.end());
  for (std::string n : other.names_) {
    while (taken.count(n) != 0) n += "'";
    taken.insert(n);
    names.push_back(n);
  }
  const auto shift = static_cast<unsigned>(names_.size());
  if (names.size() > static_cast<std::size_t>(kMaxVertices)) throw std::invalid_argument("join has too many vertices");
  std::vector<Face> gens;
  for (Face f : facets_)
    for (Face g : other.facets_) gens.push_back(f | Face(g.bits << shift));
  return SimplicialComplex(std::move(names), gens);
}

std::vector<std::vector<std::string>> SimplicialComplex::named_facets() const {
  std::vector<std::vector<std::string>> out;
  for (Face f : facets_) {
    std::vector<std::string> n;
    for (int v : f.vertices()) n.push_back(names_[static_cast<std::size_t>(v)]);
    out.push_back(std::move(n));
  }
  return out;
}

std::string SimplicialComplex::face_name(Face f) const {
  std::string out = "{";
  bool first = true;
  for (int v : f.vertices()) {
    if (!first) out += ",";
    out += v < static_cast<int>(names_.size()) ? names_[static_cast<std::size_t>(v)] : "#" + std::to_string(v);
    first = false;
  }
  return out + "}";
}

// ---------------------------------------------------------------------------
// I/O

SimplicialComplex parse_facet_text(std::istream& in) {
  std::vector<std::vector<std::string>> facets;
  std::set<std::string> names;
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    const auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    std::istringstream tokens(line);
    std::vector<std::string> facet;
    std::set<std::string> local;
    std::string tok;
    while (tokens >> tok) {
      if (!local.insert(tok).second) {
        throw ParseError("line " + std::to_string(lineno) + ": duplicate vertex '" + tok + "' in facet", lineno);
      }
      facet.push_back(tok);
      names.insert(tok);
    }
    if (!facet.empty()) facets.push_back(std::move(facet));
  }
  if (names.size() > static_cast<std::size_t>(kMaxVertices)) {
    throw ParseError("too many vertices (at most " + std::to_string(kMaxVertices) + ")", lineno);
  }
  return build_named(order_names(std::move(names)), facets);
}

SimplicialComplex parse_facet_text_string(const std::string& text) {
  std::istringstream in(text);
  return parse_facet_text(in);
}

namespace {
std::string vertex_token(const nlohmann::json& v) {
  if (v.is_string()) return v.get<std::string>();
  if (v.is_number_integer()) return std::to_string(v.get<long long>());
  throw ParseError("vertex identifiers must be strings or integers", 0);
}
}  // namespace

SimplicialComplex parse_complex_json(const std::string& text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError(std::string("invalid JSON: ") + e.what(), 0);
  }
  if (!j.is_object() || !j.contains("facets") || !j["facets"].is_array()) {
    throw ParseError("JSON complex needs a \"facets\" array", 0);
  }
  std::vector<std::vector<std::string>> facets;
  std::set<std::string> names;
  std::size_t idx = 0;
  for (const auto& f : j["facets"]) {
    if (!f.is_array()) throw ParseError("facet " + std::to_string(idx) + " is not an array", 0);
    std::vector<std::string> facet;
    std::set<std::string> local;
    for (const auto& v : f) {
      const std::string tok = vertex_token(v);
      if (!local.insert(tok).second) {
        throw ParseError("facet " + std::to_string(idx) + ": duplicate vertex '" + tok + "'", 0);
      }
      facet.push_back(tok);
      names.insert(tok);
    }
    facets.push_back(std::move(facet));
    ++idx;
  }
  std::vector<std::string> order;
  if (j.contains("vertices")) {
    if (!j["vertices"].is_array()) throw ParseError("\"vertices\" must be an array", 0);
    std::set<std::string> declared;
    for (const auto& v : j["vertices"]) {
      const std::string tok = vertex_token(v);
      if (!declared.insert(tok).second) throw ParseError("duplicate vertex '" + tok + "' in \"vertices\"", 0);
      order.push_back(tok);
    }
    for (const auto& n : names) {
      if (declared.count(n) == 0) throw ParseError("facet vertex '" + n + "' missing from \"vertices\"", 0);
    }
  } else {
    order = order_names(names);
  }
  if (order.size() > static_cast<std::size_t>(kMaxVertices)) {
    throw ParseError("too many vertices (at most " + std::to_string(kMaxVertices) + ")", 0);
  }
  return build_named(std::move(order), facets);
}

SimplicialComplex load_complex_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open '" + path + "'", 0);
  std::stringstream buf;
  buf << in.rdbuf();
  const std::string text = buf.str();
  const auto first = text.find_first_not_of(" \t\r\n");
  if (first != std::string::npos && text[first] == '{') return parse_complex_json(text);
  return parse_facet_text_string(text);
}

std::string to_facet_text(const SimplicialComplex& c) {
  std::ostringstream os;
  for (const auto& f : c.named_facets()) {
    for (std::size_t i = 0; i < f.size(); ++i) os << (i ? " " : "") << f[i];
    os << '\n';
  }
  return os.str();
}

std::string to_json_text(const SimplicialComplex& c) {
  nlohmann::json j;
  j["vertices"] = c.vertex_names();
  j["facets"] = c.named_facets();
  return j.dump();
}

}  // namespace hvec
