#include "cubesurf/surface.hpp"

#include <algorithm>
#include <numeric>

#include "cubesurf/error.hpp"

namespace cubesurf {

bool VertexFigure::single_cycle() const {
  size_t n = node_edges.size();
  if (n < 3) return false;
  if (links.size() != n) return false;
  std::vector<int> degree(n, 0);
  for (const auto& [a, b] : links) {
    ++degree[static_cast<size_t>(a)];
    ++degree[static_cast<size_t>(b)];
  }
  for (int d : degree)
    if (d != 2) return false;
  // Degree-2 regular with |links| == |nodes|: connected iff a single cycle.
  std::vector<std::vector<int>> adj(n);
  for (const auto& [a, b] : links) {
    adj[static_cast<size_t>(a)].push_back(b);
    adj[static_cast<size_t>(b)].push_back(a);
  }
  std::vector<char> seen(n, 0);
  std::vector<int> stack{0};
  seen[0] = 1;
  size_t reached = 1;
  while (!stack.empty()) {
    int u = stack.back();
    stack.pop_back();
    for (int w : adj[static_cast<size_t>(u)])
      if (!seen[static_cast<size_t>(w)]) {
        seen[static_cast<size_t>(w)] = 1;
        ++reached;
        stack.push_back(w);
      }
  }
  return reached == n;
}

VertexFigure vertex_figure(const CubicalComplex& complex, int vertex_index) {
  if (vertex_index < 0 || vertex_index >= complex.vertex_count())
    fail(ErrorCode::NotAVertex, "vertex index " + std::to_string(vertex_index) + " out of range");
  VertexFigure fig;
  fig.node_edges = complex.vertex_edges(vertex_index);
  std::sort(fig.node_edges.begin(), fig.node_edges.end());

  auto node_of = [&](int edge) {
    auto it = std::lower_bound(fig.node_edges.begin(), fig.node_edges.end(), edge);
    return static_cast<int>(it - fig.node_edges.begin());
  };

  // Each face at v contains exactly two of v's edges and yields one link.
  for (int f : complex.vertex_faces(vertex_index)) {
    int at_v[2];
    int count = 0;
    for (int e : complex.face_edges(f)) {
      const auto& ends = complex.edge_endpoints(e);
      if (ends[0] == vertex_index || ends[1] == vertex_index) at_v[count++] = e;
    }
    int a = node_of(at_v[0]);
    int b = node_of(at_v[1]);
    fig.links.emplace_back(std::min(a, b), std::max(a, b));
  }
  std::sort(fig.links.begin(), fig.links.end());
  return fig;
}

VertexFigure vertex_figure(const CubicalComplex& complex, const CellCode& vertex) {
  int vi = complex.vertex_index(vertex);
  if (vi < 0) fail(ErrorCode::NotAVertex, vertex.word() + " is not a vertex of the complex");
  return vertex_figure(complex, vi);
}

ClosedSurfaceReport check_closed_surface(const CubicalComplex& complex) {
  ClosedSurfaceReport report;
  if (complex.empty()) return report;
  for (int e = 0; e < complex.edge_count(); ++e)
    if (complex.edge_faces(e).size() != 2) report.bad_edges.push_back(e);
  for (int v = 0; v < complex.vertex_count(); ++v)
    if (!vertex_figure(complex, v).single_cycle()) report.bad_vertices.push_back(v);
  report.closed = report.bad_edges.empty() && report.bad_vertices.empty();
  return report;
}

bool is_closed_surface(const CubicalComplex& complex) {
  return check_closed_surface(complex).closed;
}

int euler_characteristic(const CubicalComplex& complex) {
  return complex.vertex_count() - complex.edge_count() + complex.face_count();
}

bool is_connected(const CubicalComplex& complex) {
  if (complex.empty()) return false;
  size_t n = static_cast<size_t>(complex.face_count());
  std::vector<char> seen(n, 0);
  std::vector<int> stack{0};
  seen[0] = 1;
  size_t reached = 1;
  while (!stack.empty()) {
    int f = stack.back();
    stack.pop_back();
    for (int e : complex.face_edges(f))
      for (int g : complex.edge_faces(e))
        if (!seen[static_cast<size_t>(g)]) {
          seen[static_cast<size_t>(g)] = 1;
          ++reached;
          stack.push_back(g);
        }
  }
  return reached == n;
}

namespace {

// Direction of edge e along the cyclic corner order of face f: true when the
// traversal visits the lower vertex index first.
bool face_edge_forward(const CubicalComplex& complex, int f, int e) {
  const auto& corners = complex.face_corners(f);
  const auto& edges = complex.face_edges(f);
  for (int k = 0; k < 4; ++k) {
    if (edges[static_cast<size_t>(k)] != e) continue;
    int a = corners[static_cast<size_t>(k)];
    int b = corners[static_cast<size_t>((k + 1) % 4)];
    return a < b;
  }
  return true;  // unreachable for edges of f
}

}  // namespace

bool is_orientable(const CubicalComplex& complex) {
  ClosedSurfaceReport report = check_closed_surface(complex);
  if (!report.closed || !is_connected(complex))
    fail(ErrorCode::NotAClosedSurface, "orientability is defined for connected closed surfaces");

  // Propagate face orientations across shared edges; the two faces at an
  // edge must traverse it in opposite directions.
  std::vector<int> flip(static_cast<size_t>(complex.face_count()), -1);
  std::vector<int> stack;
  flip[0] = 0;
  stack.push_back(0);
  while (!stack.empty()) {
    int f = stack.back();
    stack.pop_back();
    for (int e : complex.face_edges(f)) {
      for (int g : complex.edge_faces(e)) {
        if (g == f) continue;
        bool df = face_edge_forward(complex, f, e) != (flip[static_cast<size_t>(f)] == 1);
        bool dg_unflipped = face_edge_forward(complex, g, e);
        // Need dg != df after g's flip is applied.
        int need = (dg_unflipped == df) ? 1 : 0;
        if (flip[static_cast<size_t>(g)] < 0) {
          flip[static_cast<size_t>(g)] = need;
          stack.push_back(g);
        } else if (flip[static_cast<size_t>(g)] != need) {
          return false;
        }
      }
    }
  }
  return true;
}

SurfaceClass classify(const CubicalComplex& complex) {
  SurfaceClass sc;
  sc.connected = is_connected(complex);
  sc.closed = check_closed_surface(complex).closed;
  sc.euler_characteristic = euler_characteristic(complex);
  if (sc.connected && sc.closed) {
    sc.orientable = is_orientable(complex);
    if (*sc.orientable)
      sc.genus = (2 - sc.euler_characteristic) / 2;
    else
      sc.demigenus = 2 - sc.euler_characteristic;
  }
  return sc;
}

std::string canonical_signature(const CubicalComplex& complex) {
  if (complex.empty()) return "";
  int n = complex.ambient();
  const auto& faces = complex.faces();

  std::vector<int> perm(static_cast<size_t>(n));
  std::iota(perm.begin(), perm.end(), 0);

  std::vector<std::uint32_t> best;
  std::vector<std::uint32_t> image(faces.size());
  std::vector<CellCode> best_faces(faces.size());

  do {
    for (std::uint32_t flips = 0; flips < (1u << n); ++flips) {
      for (size_t i = 0; i < faces.size(); ++i) {
        const CellCode& f = faces[i];
        std::uint8_t stars = 0, bits = 0;
        for (int c = 0; c < n; ++c) {
          int target = perm[static_cast<size_t>(c)];
          if (f.star_mask() & (1u << c)) {
            stars |= std::uint8_t(1u << target);
          } else {
            bool bit = (f.bit_mask() >> c) & 1u;
            if (bit != bool((flips >> c) & 1u)) bits |= std::uint8_t(1u << target);
          }
        }
        image[i] = CellCode::from_masks(n, stars, bits).lex_key();
      }
      std::sort(image.begin(), image.end());
      if (best.empty() || image < best) best = image;
    }
  } while (std::next_permutation(perm.begin(), perm.end()));

  // Decode the winning key list back into words.
  std::string out;
  for (size_t i = 0; i < best.size(); ++i) {
    std::uint32_t key = best[i];
    std::string w(static_cast<size_t>(n), '0');
    for (int c = n - 1; c >= 0; --c) {
      std::uint32_t rank = key % 4u;
      key /= 4u;
      w[static_cast<size_t>(c)] = rank == 2u ? '*' : (rank == 1u ? '1' : '0');
    }
    if (i) out += ',';
    out += w;
  }
  return out;
}

}  // namespace cubesurf
