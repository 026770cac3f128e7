#pragma once

// Combinatorial embeddings of plane pseudographs.
//
// A graph with m edges owns 2m darts. Dart 2e+0 sits at the first endpoint of
// edge e, dart 2e+1 at the second one. Each vertex lists its darts in
// clockwise order; the face permutation is
//
//     phi(d) = next_clockwise(twin(d))
//
// and its orbits are the face walks. Faces are numbered in order of their
// smallest dart, so face ids are a pure function of the rotation system.

#include <algorithm>
#include <compare>
#include <cstddef>
#include <numeric>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "facet/error.hpp"

namespace facet {

struct Dart {
  int id = 0;

  constexpr int edge() const noexcept { return id >> 1; }
  constexpr int end() const noexcept { return id & 1; }
  constexpr Dart twin() const noexcept { return Dart{id ^ 1}; }

  friend constexpr auto operator<=>(Dart, Dart) = default;
};

constexpr Dart dart_of(int edge, int end) noexcept { return Dart{2 * edge + end}; }

struct FaceWalk {
  std::vector<Dart> darts;
  std::vector<int> edges;     // edge of darts[i]
  std::vector<int> vertices;  // tail of darts[i]

  int length() const noexcept { return static_cast<int>(darts.size()); }
};

class EmbeddedGraph {
 public:
  EmbeddedGraph() { index(); }

  /// Validates the rotation system and computes faces. Throws InputError when
  /// a dart is missing, duplicated, placed at the wrong vertex, or when the
  /// rotation system does not describe a plane embedding.
  EmbeddedGraph(int vertex_count, std::vector<std::pair<int, int>> endpoints,
                std::vector<std::vector<Dart>> rotation)
      : n_(vertex_count), endpoints_(std::move(endpoints)), rotation_(std::move(rotation)) {
    index();
  }

  int vertex_count() const noexcept { return n_; }
  int edge_count() const noexcept { return static_cast<int>(endpoints_.size()); }
  int dart_count() const noexcept { return 2 * edge_count(); }

  std::pair<int, int> endpoints(int e) const {
    check_edge(e);
    return endpoints_[static_cast<std::size_t>(e)];
  }
  bool is_loop(int e) const {
    auto [u, v] = endpoints(e);
    return u == v;
  }

  int tail(Dart d) const {
    auto [u, v] = endpoints(d.edge());
    return d.end() == 0 ? u : v;
  }
  int head(Dart d) const { return tail(d.twin()); }

  std::span<const Dart> rotation(int v) const {
    check_vertex(v);
    return rotation_[static_cast<std::size_t>(v)];
  }
  int degree(int v) const { return static_cast<int>(rotation(v).size()); }

  Dart next_clockwise(Dart d) const {
    const auto& rot = rotation_[static_cast<std::size_t>(tail(d))];
    auto p = static_cast<std::size_t>(position_[static_cast<std::size_t>(d.id)]);
    return rot[(p + 1) % rot.size()];
  }
  Dart prev_clockwise(Dart d) const {
    const auto& rot = rotation_[static_cast<std::size_t>(tail(d))];
    auto p = static_cast<std::size_t>(position_[static_cast<std::size_t>(d.id)]);
    return rot[(p + rot.size() - 1) % rot.size()];
  }

  Dart face_successor(Dart d) const { return next_clockwise(d.twin()); }
  Dart face_predecessor(Dart d) const { return prev_clockwise(d).twin(); }

  const std::vector<FaceWalk>& faces() const noexcept { return faces_; }
  int face_count() const noexcept { return static_cast<int>(faces_.size()); }
  int face_of(Dart d) const {
    check_dart(d);
    return dart_face_[static_cast<std::size_t>(d.id)];
  }
  /// Position of `d` inside the walk of its face.
  int position_in_face(Dart d) const {
    check_dart(d);
    return dart_offset_[static_cast<std::size_t>(d.id)];
  }

  int component_count() const noexcept { return components_; }
  bool is_connected() const noexcept { return components_ <= 1; }
  int component_of(int v) const {
    check_vertex(v);
    return component_id_[static_cast<std::size_t>(v)];
  }

  /// Faces of the drawing in the plane: outer faces of different components
  /// coincide, and an isolated vertex sits inside a face without a walk.
  int plane_face_count() const noexcept {
    return face_count() + isolated_ - std::max(0, components_ - 1);
  }
  /// V - E + F with F counted in the plane; equals 1 + components.
  int euler_characteristic() const noexcept { return n_ - edge_count() + plane_face_count(); }

  /// Distinct neighbours of v (loops excluded).
  std::vector<int> neighbors(int v) const {
    std::vector<int> out;
    for (Dart d : rotation(v)) {
      int w = head(d);
      if (w != v) out.push_back(w);
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
  }

  void check_vertex(int v) const {
    if (v < 0 || v >= n_) throw InputError("vertex id " + std::to_string(v) + " out of range");
  }
  void check_edge(int e) const {
    if (e < 0 || e >= edge_count()) throw InputError("edge id " + std::to_string(e) + " out of range");
  }
  void check_dart(Dart d) const {
    if (d.id < 0 || d.id >= dart_count()) throw InputError("dart " + std::to_string(d.id) + " out of range");
  }
  void check_face(int f) const {
    if (f < 0 || f >= face_count()) throw InputError("face id " + std::to_string(f) + " out of range");
  }

  friend bool operator==(const EmbeddedGraph& a, const EmbeddedGraph& b) {
    return a.n_ == b.n_ && a.endpoints_ == b.endpoints_ && a.rotation_ == b.rotation_;
  }

 private:
  void index();

  int n_ = 0;
  std::vector<std::pair<int, int>> endpoints_;
  std::vector<std::vector<Dart>> rotation_;

  std::vector<int> position_;
  std::vector<FaceWalk> faces_;
  std::vector<int> dart_face_;
  std::vector<int> dart_offset_;
  std::vector<int> component_id_;
  int components_ = 0;
  int isolated_ = 0;
};

inline void EmbeddedGraph::index() {
  if (n_ < 0) throw InputError("negative vertex count");
  if (static_cast<int>(rotation_.size()) != n_)
    throw InputError("expected " + std::to_string(n_) + " rotations, got " + std::to_string(rotation_.size()));
  const int m = edge_count();
  for (int e = 0; e < m; ++e) {
    auto [u, v] = endpoints_[static_cast<std::size_t>(e)];
    if (u < 0 || u >= n_ || v < 0 || v >= n_)
      throw InputError("edge " + std::to_string(e) + " has an endpoint out of range");
  }

  position_.assign(static_cast<std::size_t>(2 * m), -1);
  for (int v = 0; v < n_; ++v) {
    const auto& rot = rotation_[static_cast<std::size_t>(v)];
    for (std::size_t i = 0; i < rot.size(); ++i) {
      Dart d = rot[i];
      if (d.id < 0 || d.id >= 2 * m) throw InputError("dart " + std::to_string(d.id) + " out of range");
      auto& slot = position_[static_cast<std::size_t>(d.id)];
      if (slot >= 0) throw InputError("duplicate dart " + std::to_string(d.id));
      if (tail(d) != v)
        throw InputError("dart " + std::to_string(d.id) + " listed at vertex " + std::to_string(v) +
                         " but belongs to vertex " + std::to_string(tail(d)));
      slot = static_cast<int>(i);
    }
  }
  for (int d = 0; d < 2 * m; ++d)
    if (position_[static_cast<std::size_t>(d)] < 0)
      throw InputError("dart " + std::to_string(d) + " is not listed in any rotation");

  faces_.clear();
  dart_face_.assign(static_cast<std::size_t>(2 * m), -1);
  dart_offset_.assign(static_cast<std::size_t>(2 * m), -1);
  for (int s = 0; s < 2 * m; ++s) {
    if (dart_face_[static_cast<std::size_t>(s)] >= 0) continue;
    const int id = static_cast<int>(faces_.size());
    FaceWalk walk;
    Dart d{s};
    do {
      dart_face_[static_cast<std::size_t>(d.id)] = id;
      dart_offset_[static_cast<std::size_t>(d.id)] = walk.length();
      walk.darts.push_back(d);
      walk.edges.push_back(d.edge());
      walk.vertices.push_back(tail(d));
      d = face_successor(d);
    } while (d.id != s);
    faces_.push_back(std::move(walk));
  }

  // Components by union-find over edges.
  std::vector<int> parent(static_cast<std::size_t>(n_));
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int x) {
    while (parent[static_cast<std::size_t>(x)] != x) {
      auto& p = parent[static_cast<std::size_t>(x)];
      p = parent[static_cast<std::size_t>(p)];
      x = p;
    }
    return x;
  };
  for (auto [u, v] : endpoints_) parent[static_cast<std::size_t>(find(u))] = find(v);
  component_id_.assign(static_cast<std::size_t>(n_), -1);
  std::vector<int> label(static_cast<std::size_t>(n_), -1);
  components_ = 0;
  isolated_ = 0;
  for (int v = 0; v < n_; ++v) {
    int r = find(v);
    if (label[static_cast<std::size_t>(r)] < 0) label[static_cast<std::size_t>(r)] = components_++;
    component_id_[static_cast<std::size_t>(v)] = label[static_cast<std::size_t>(r)];
    if (rotation_[static_cast<std::size_t>(v)].empty()) ++isolated_;
  }

  // Every component must have Euler characteristic 2 on its own.
  const int orbit_sum = n_ - m + face_count() + isolated_;
  if (orbit_sum != 2 * components_)
    throw InputError("rotation system is not plane: V - E + F = " + std::to_string(orbit_sum - 2 * (components_ - 1)) +
                     " summed over components, expected " + std::to_string(2 * components_ - 2 * (components_ - 1)));
}

/// All-pairs facial distances between edges. Infinity is represented by an
/// empty optional.
class FacialDistances {
 public:
  explicit FacialDistances(const EmbeddedGraph& g)
      : m_(g.edge_count()),
        dist_(static_cast<std::size_t>(m_) * static_cast<std::size_t>(m_), -1),
        face_(dist_.size(), -1) {
    for (int e = 0; e < m_; ++e) at(e, e) = 0;
    for (int f = 0; f < g.face_count(); ++f) {
      const auto& edges = g.faces()[static_cast<std::size_t>(f)].edges;
      const int k = static_cast<int>(edges.size());
      for (int p = 0; p < k; ++p) {
        for (int q = p + 1; q < k; ++q) {
          int a = edges[static_cast<std::size_t>(p)], b = edges[static_cast<std::size_t>(q)];
          if (a == b) continue;
          int gap = std::min(q - p, k - (q - p));
          int& cur = at(a, b);
          if (cur < 0 || gap < cur) {
            cur = gap;
            at(b, a) = gap;
            face_at(a, b) = f;
            face_at(b, a) = f;
          }
        }
      }
    }
  }

  int edge_count() const noexcept { return m_; }

  std::optional<int> distance(int e, int f) const {
    check(e);
    check(f);
    int d = dist_[index(e, f)];
    if (d < 0) return std::nullopt;
    return d;
  }
  /// Face realising the distance, or -1 when e == f or the edges share no face.
  int witness_face(int e, int f) const {
    check(e);
    check(f);
    return face_[index(e, f)];
  }
  bool within(int e, int f, int ell) const {
    auto d = distance(e, f);
    return d && *d <= ell;
  }

 private:
  std::size_t index(int a, int b) const {
    return static_cast<std::size_t>(a) * static_cast<std::size_t>(m_) + static_cast<std::size_t>(b);
  }
  int& at(int a, int b) { return dist_[index(a, b)]; }
  int& face_at(int a, int b) { return face_[index(a, b)]; }
  void check(int e) const {
    if (e < 0 || e >= m_) throw InputError("edge id " + std::to_string(e) + " out of range");
  }

  int m_;
  std::vector<int> dist_;
  std::vector<int> face_;
};

/// Minimum cyclic gap between occurrences of e and f over all face walks.
inline std::optional<int> facial_distance(const EmbeddedGraph& g, int e, int f) {
  g.check_edge(e);
  g.check_edge(f);
  if (e == f) return 0;
  std::optional<int> best;
  for (const auto& walk : g.faces()) {
    const int k = walk.length();
    for (int p = 0; p < k; ++p) {
      if (walk.edges[static_cast<std::size_t>(p)] != e) continue;
      for (int q = 0; q < k; ++q) {
        if (walk.edges[static_cast<std::size_t>(q)] != f) continue;
        int diff = p > q ? p - q : q - p;
        int gap = std::min(diff, k - diff);
        if (!best || gap < *best) best = gap;
      }
    }
  }
  return best;
}

/// Edges other than e within facial distance `ell` of e, ascending.
inline std::vector<int> facial_neighborhood(const EmbeddedGraph& g, int ell, int e) {
  g.check_edge(e);
  if (ell < 0) throw PreconditionError("ell must be nonnegative");
  std::vector<int> out;
  for (int f = 0; f < g.edge_count(); ++f) {
    if (f == e) continue;
    auto d = facial_distance(g, e, f);
    if (d && *d <= ell) out.push_back(f);
  }
  return out;
}

/// The shorter stretch of face `face` leading from an occurrence of e to one
/// of f, both included. Empty when the edges do not share the face.
inline std::vector<int> facial_trail(const EmbeddedGraph& g, int face, int e, int f) {
  g.check_face(face);
  const auto& edges = g.faces()[static_cast<std::size_t>(face)].edges;
  const int k = static_cast<int>(edges.size());
  int best_p = -1, best_step = 0, best_gap = k + 1;
  for (int p = 0; p < k; ++p) {
    if (edges[static_cast<std::size_t>(p)] != e) continue;
    for (int q = 0; q < k; ++q) {
      if (edges[static_cast<std::size_t>(q)] != f) continue;
      int forward = ((q - p) % k + k) % k;
      int backward = k - forward;
      if (forward < best_gap) best_gap = forward, best_p = p, best_step = 1;
      if (backward < best_gap) best_gap = backward, best_p = p, best_step = -1;
    }
  }
  std::vector<int> trail;
  if (best_p < 0) return trail;
  for (int i = 0; i <= best_gap; ++i)
    trail.push_back(edges[static_cast<std::size_t>(((best_p + best_step * i) % k + k) % k)]);
  return trail;
}

struct FaceProfile {
  int face = 0;
  int length = 0;
  int n2 = 0;           // distinct 2-vertices on the face
  int n2_thread = 0;    // of those, the ones having a 2-neighbour
  int one_sections = 0;
  int two_sections = 0;
  int long_runs = 0;    // maximal runs of >= 3 consecutive 2-vertices
};

/// A 2-vertex belongs to a 2-thread when one of its neighbours also has degree 2.
inline bool in_two_thread(const EmbeddedGraph& g, int v) {
  if (g.degree(v) != 2) return false;
  for (int w : g.neighbors(v))
    if (g.degree(w) == 2) return true;
  return false;
}

inline FaceProfile face_profile(const EmbeddedGraph& g, int face) {
  g.check_face(face);
  const auto& walk = g.faces()[static_cast<std::size_t>(face)];
  FaceProfile p;
  p.face = face;
  p.length = walk.length();

  std::vector<int> distinct = walk.vertices;
  std::sort(distinct.begin(), distinct.end());
  distinct.erase(std::unique(distinct.begin(), distinct.end()), distinct.end());
  for (int v : distinct) {
    if (g.degree(v) != 2) continue;
    ++p.n2;
    if (in_two_thread(g, v)) ++p.n2_thread;
  }

  // Runs of 2-vertices along the cyclic vertex sequence. A walk made only of
  // 2-vertices has no 3+-path and hence no sections.
  const int k = p.length;
  int start = -1;
  for (int i = 0; i < k; ++i)
    if (g.degree(walk.vertices[static_cast<std::size_t>(i)]) != 2) {
      start = i;
      break;
    }
  if (start < 0) return p;
  int run = 0;
  auto close_run = [&] {
    if (run == 1) ++p.one_sections;
    else if (run == 2) ++p.two_sections;
    else if (run >= 3) ++p.long_runs;
    run = 0;
  };
  for (int i = 1; i <= k; ++i) {
    int v = walk.vertices[static_cast<std::size_t>((start + i) % k)];
    if (g.degree(v) == 2) ++run;
    else close_run();
  }
  return p;
}

inline std::vector<FaceProfile> face_profiles(const EmbeddedGraph& g) {
  std::vector<FaceProfile> out;
  out.reserve(static_cast<std::size_t>(g.face_count()));
  for (int f = 0; f < g.face_count(); ++f) out.push_back(face_profile(g, f));
  return out;
}

}  // namespace facet
