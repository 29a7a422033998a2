#include <doctest.h>

#include <bit>
#include <numeric>
#include <set>

#include "cubesurf/complex.hpp"
#include "cubesurf/error.hpp"
#include "cubesurf/rng.hpp"

using namespace cubesurf;

namespace {

std::vector<CellCode> cube_boundary(const std::string& cell_word) {
  CellCode cube = CellCode::parse(cell_word, static_cast<int>(cell_word.size()));
  return boundary_cells(cube, 2);
}

}  // namespace

TEST_CASE("cube boundary has 8 vertices, 12 edges, 6 faces") {
  CubicalComplex c = CubicalComplex::from_faces(cube_boundary("***00"));
  CHECK(c.vertex_count() == 8);
  CHECK(c.edge_count() == 12);
  CHECK(c.face_count() == 6);
}

TEST_CASE("single face derives its own boundary") {
  CubicalComplex c = CubicalComplex::from_faces({CellCode::parse("**000", 5)});
  CHECK(c.vertex_count() == 4);
  CHECK(c.edge_count() == 4);
  CHECK(c.face_count() == 1);
  for (int e = 0; e < c.edge_count(); ++e) CHECK(c.edge_faces(e).size() == 1);
}

TEST_CASE("two faces sharing an edge give F_e = 2 on it") {
  CubicalComplex c =
      CubicalComplex::from_faces({CellCode::parse("**000", 5), CellCode::parse("*0*00", 5)});
  int shared = c.edge_index(CellCode::parse("*0000", 5));
  REQUIRE(shared >= 0);
  CHECK(c.edge_faces(shared).size() == 2);
}

TEST_CASE("construction rejects mixed input") {
  CHECK_THROWS_AS(CubicalComplex::from_faces({CellCode::parse("*0000", 5)}), Error);
  CHECK_THROWS_AS(
      CubicalComplex::from_faces({CellCode::parse("**000", 5), CellCode::parse("**00", 4)}), Error);
  try {
    CubicalComplex::from_faces({CellCode::parse("***00", 5)});
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::MixedDimension);
  }
}

TEST_CASE("incidence counts on the cube boundary") {
  CubicalComplex c = CubicalComplex::from_faces(cube_boundary("***"));
  IncidenceCardinalities counts = incidence_counts(c);
  for (int fe : counts.faces_per_edge) CHECK(fe == 2);
  for (int ev : counts.edges_per_vertex) CHECK(ev == 3);
  for (int fv : counts.faces_per_vertex) CHECK(fv == 3);
}

TEST_CASE("every edge of the full Q^5 two-skeleton has F_e = 4") {
  auto faces = full_skeleton(5, 2);
  CubicalComplex c = CubicalComplex::from_faces(faces);

  // Independent count: walk all 80 faces and test cell containment.
  for (int e = 0; e < c.edge_count(); ++e) {
    const CellCode& edge = c.edges()[static_cast<size_t>(e)];
    int containing = 0;
    for (const CellCode& f : faces)
      if (f.contains(edge)) ++containing;
    CHECK(containing == 4);
    CHECK(c.edge_faces(e).size() == 4);
  }
}

TEST_CASE("sum of F_e equals four times the face count") {
  Rng rng(7);
  auto all_faces = full_skeleton(5, 2);
  for (int trial = 0; trial < 20; ++trial) {
    std::vector<CellCode> subset;
    for (const CellCode& f : all_faces)
      if (rng.uniform() < 0.3) subset.push_back(f);
    if (subset.empty()) continue;
    CubicalComplex c = CubicalComplex::from_faces(subset);
    IncidenceCardinalities counts = incidence_counts(c);
    int total = std::accumulate(counts.faces_per_edge.begin(), counts.faces_per_edge.end(), 0);
    CHECK(total == 4 * c.face_count());
  }
}

TEST_CASE("rebuilding a complex from its own faces is idempotent") {
  Rng rng(11);
  auto all_faces = full_skeleton(4, 2);
  for (int trial = 0; trial < 50; ++trial) {
    std::vector<CellCode> subset;
    for (const CellCode& f : all_faces)
      if (rng.uniform() < 0.4) subset.push_back(f);
    if (subset.empty()) continue;
    CubicalComplex once = CubicalComplex::from_faces(subset);
    CubicalComplex twice = CubicalComplex::from_faces(once.faces());
    CHECK(once.faces() == twice.faces());
    CHECK(once.edges() == twice.edges());
    CHECK(once.vertices() == twice.vertices());
  }
}

TEST_CASE("edges join exactly the vertex pairs at Hamming distance one") {
  for (int n = 2; n <= 4; ++n) {
    CubicalComplex c = CubicalComplex::from_faces(full_skeleton(n, 2));
    REQUIRE(c.vertex_count() == (1 << n));

    std::set<std::pair<int, int>> edge_pairs;
    for (int e = 0; e < c.edge_count(); ++e) {
      auto ends = c.edge_endpoints(e);
      edge_pairs.insert({std::min(ends[0], ends[1]), std::max(ends[0], ends[1])});
    }

    for (int a = 0; a < c.vertex_count(); ++a) {
      for (int b = a + 1; b < c.vertex_count(); ++b) {
        std::uint8_t diff = std::uint8_t(c.vertices()[static_cast<size_t>(a)].bit_mask() ^
                                         c.vertices()[static_cast<size_t>(b)].bit_mask());
        bool hamming_one = std::popcount(diff) == 1;
        bool joined = edge_pairs.count({a, b}) > 0;
        CHECK(hamming_one == joined);
      }
    }
  }
}

TEST_CASE("face corners come in cyclic order") {
  CubicalComplex c = CubicalComplex::from_faces({CellCode::parse("**000", 5)});
  const auto& corners = c.face_corners(0);
  // Consecutive corners differ in exactly one coordinate, diagonal in two.
  for (int k = 0; k < 4; ++k) {
    const CellCode& a = c.vertices()[static_cast<size_t>(corners[static_cast<size_t>(k)])];
    const CellCode& b = c.vertices()[static_cast<size_t>(corners[static_cast<size_t>((k + 1) % 4)])];
    CHECK(std::popcount(std::uint8_t(a.bit_mask() ^ b.bit_mask())) == 1);
  }
  const CellCode& c0 = c.vertices()[static_cast<size_t>(corners[0])];
  const CellCode& c2 = c.vertices()[static_cast<size_t>(corners[2])];
  CHECK(std::popcount(std::uint8_t(c0.bit_mask() ^ c2.bit_mask())) == 2);
}
