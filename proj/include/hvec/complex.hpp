#pragma once

#include <bit>
#include <cstdint>
#include <iosfwd>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <vector>

namespace hvec {

using VertexMask = std::uint32_t;
constexpr int kMaxVertices = 32;

/// A face as a set of vertex indices; dim(F) = |F| - 1.
struct Face {
  VertexMask bits = 0;

  constexpr Face() = default;
  constexpr explicit Face(VertexMask b) : bits(b) {}
  static Face of(const std::vector<int>& vertices);
  static constexpr Face vertex(int v) { return Face(VertexMask{1} << v); }

  int size() const noexcept { return std::popcount(bits); }
  int dim() const noexcept { return size() - 1; }
  bool empty() const noexcept { return bits == 0; }
  bool contains(int v) const noexcept { return ((bits >> v) & 1U) != 0; }
  bool subset_of(Face o) const noexcept { return (bits & ~o.bits) == 0; }
  bool disjoint(Face o) const noexcept { return (bits & o.bits) == 0; }
  Face operator|(Face o) const noexcept { return Face(bits | o.bits); }
  Face operator&(Face o) const noexcept { return Face(bits & o.bits); }
  Face minus(Face o) const noexcept { return Face(bits & ~o.bits); }
  /// Sorted vertex indices.
  std::vector<int> vertices() const;

  bool operator==(const Face& o) const noexcept { return bits == o.bits; }
  bool operator!=(const Face& o) const noexcept { return bits != o.bits; }
};

/// Canonical order: by size, then lexicographically on sorted vertex lists.
bool canonical_less(Face a, Face b) noexcept;

struct FaceHash {
  std::size_t operator()(Face f) const noexcept { return std::hash<VertexMask>()(f.bits); }
};

class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& what, int line) : std::runtime_error(what), line_(line) {}
  int line() const noexcept { return line_; }

 private:
  int line_;
};

/// A finite simplicial complex, stored by its facets.
///
/// Vertex names are interned; `vertex_names()[i]` is the name of index i. The
/// void complex has no faces; the empty complex {∅} has the single facet ∅.
/// Links and contrastars keep the vertex names of the parent, so indices are
/// shared between a complex and everything derived from it.
class SimplicialComplex {
 public:
  /// The void complex on no vertices.
  SimplicialComplex() = default;
  /// Facets over an explicit, ordered vertex name list. Dominated faces are dropped.
  SimplicialComplex(std::vector<std::string> names, const std::vector<Face>& generators);

  /// Vertex names ordered numerically when all are integers, lexicographically otherwise.
  static SimplicialComplex from_facets(const std::vector<std::vector<std::string>>& facets);
  static SimplicialComplex from_facets(const std::vector<std::vector<int>>& facets);
  static SimplicialComplex void_complex() { return {}; }
  static SimplicialComplex empty_complex();
  /// All proper subsets of a (d+1)-element set, vertices named 1..d+1.
  static SimplicialComplex boundary_simplex(int d);
  /// The full simplex on n vertices named 1..n.
  static SimplicialComplex simplex(int n);

  const std::vector<std::string>& vertex_names() const noexcept { return names_; }
  /// Index of a vertex name; throws std::out_of_range when absent.
  int vertex_index(const std::string& name) const;
  /// Number of vertex names (the index space), which may exceed num_vertices().
  int universe_size() const noexcept { return static_cast<int>(names_.size()); }
  /// Vertices v with {v} a face.
  VertexMask vertex_mask() const noexcept { return vertex_mask_; }
  int num_vertices() const noexcept { return std::popcount(vertex_mask_); }
  std::vector<int> vertices() const { return Face(vertex_mask_).vertices(); }

  const std::vector<Face>& facets() const noexcept { return facets_; }
  bool is_void() const noexcept { return facets_.empty(); }
  bool is_empty_complex() const noexcept { return facets_.size() == 1 && facets_[0].empty(); }
  /// max |F| - 1 over faces; -1 for {∅} and for the void complex.
  int dimension() const noexcept { return dim_; }
  /// d = dim + 1
  int d() const noexcept { return dim_ + 1; }
  bool is_pure() const noexcept;

  bool contains(Face f) const { return face_index_.count(f) != 0; }
  /// All faces in canonical order.
  const std::vector<Face>& faces() const noexcept { return faces_; }
  /// Faces of dimension i in canonical order (i = -1 gives [∅]).
  const std::vector<Face>& faces_of_dim(int i) const;
  /// Index of a face within faces_of_dim(f.dim()); -1 when absent.
  int face_index(Face f) const;
  std::size_t num_faces() const noexcept { return faces_.size(); }

  /// f[k] = f_{k-1}, k = 0..d.
  std::vector<std::int64_t> f_vector() const;
  /// h[i], i = 0..d.
  std::vector<std::int64_t> h_vector() const;

  SimplicialComplex link(Face f) const;
  SimplicialComplex contrastar(Face f) const;
  /// Complex generated by the given faces, keeping this complex's vertex names.
  SimplicialComplex with_faces(const std::vector<Face>& generators) const;

  SimplicialComplex cone() const;
  SimplicialComplex suspension() const;
  SimplicialComplex join(const SimplicialComplex& other) const;

  std::vector<std::vector<std::string>> named_facets() const;
  std::string face_name(Face f) const;

  bool operator==(const SimplicialComplex& o) const { return names_ == o.names_ && facets_ == o.facets_; }

 private:
  void build();
  std::vector<std::string> fresh_names(int count) const;

  std::vector<std::string> names_;
  std::vector<Face> facets_;
  int dim_ = -1;
  VertexMask vertex_mask_ = 0;
  std::vector<Face> faces_;
  std::vector<std::vector<Face>> by_size_;
  std::unordered_map<Face, int, FaceHash> face_index_;
};

std::int64_t binomial(std::int64_t n, std::int64_t k);

/// One facet per line, whitespace-separated tokens, `#` starts a comment.
SimplicialComplex parse_facet_text(std::istream& in);
SimplicialComplex parse_facet_text_string(const std::string& text);
/// {"vertices": [...], "facets": [[...], ...]}; vertices may be strings or integers.
SimplicialComplex parse_complex_json(const std::string& text);
/// Dispatches on the first non-blank character ('{' means JSON).
SimplicialComplex load_complex_file(const std::string& path);

std::string to_facet_text(const SimplicialComplex& c);
std::string to_json_text(const SimplicialComplex& c);

}  // namespace hvec
