#include "cleangraph/clean_graph.hpp"

#include <string>

#include "cleangraph/error.hpp"

namespace cleangraph {

Vertex CleanGraph::vertex_of(CleanVertex v) const {
  const auto it = index.find(std::uint64_t{v.e} << 32 | v.u);
  if (it != index.end()) return it->second;
  throw domain_error("no clean vertex (" + std::to_string(v.e) + "," +
                     std::to_string(v.u) + ")");
}

namespace {

bool orthogonal(const FiniteRing& r, ElemIndex e, ElemIndex f) {
  return r.mul(e, f) == r.zero() && r.mul(f, e) == r.zero();
}

bool mutually_inverse(const FiniteRing& r, ElemIndex u, ElemIndex v) {
  return r.mul(u, v) == r.one() && r.mul(v, u) == r.one();
}

CleanGraph build_clean(const RingTables& t,
                       const std::vector<ElemIndex>& idempotent_rows,
                       const Caps& caps) {
  const std::size_t count = idempotent_rows.size() * t.unit.size();
  if (count > caps.max_vertices) {
    throw budget_exceeded("clean graph of " + t.ring.name() + " would have " +
                          std::to_string(count) +
                          " vertices, over the vertex cap " +
                          std::to_string(caps.max_vertices));
  }
  const FiniteRing& r = t.ring;
  CleanGraph out;
  GraphBuilder b;
  out.vertices.reserve(count);
  for (ElemIndex e : idempotent_rows) {
    for (ElemIndex u : t.unit.units) {
      out.index.emplace(std::uint64_t{e} << 32 | u,
                        static_cast<Vertex>(out.vertices.size()));
      out.vertices.push_back({e, u});
      b.add_vertex("(" + r.format(e) + "," + r.format(u) + ")");
    }
  }
  for (Vertex i = 0; i < count; ++i) {
    const CleanVertex& x = out.vertices[i];
    for (Vertex j = i + 1; j < count; ++j) {
      const CleanVertex& y = out.vertices[j];
      if (orthogonal(r, x.e, y.e) || mutually_inverse(r, x.u, y.u)) {
        b.add_edge(i, j);
      }
    }
  }
  out.graph = std::move(b).build();
  return out;
}

}  // namespace

CleanGraph clean_graph(const RingTables& tables, const Caps& caps) {
  return build_clean(tables, tables.idem.all, caps);
}

CleanGraph cl1(const RingTables& tables, const Caps& caps) {
  return build_clean(tables, {tables.ring.zero()}, caps);
}

CleanGraph cl2(const RingTables& tables, const Caps& caps) {
  return build_clean(tables, tables.idem.nonzero, caps);
}

Graph idempotent_graph(const RingTables& tables) {
  const auto& nt = tables.idem.nontrivial;
  GraphBuilder b;
  for (ElemIndex e : nt) b.add_vertex(tables.ring.format(e));
  for (Vertex i = 0; i < nt.size(); ++i) {
    for (Vertex j = i + 1; j < nt.size(); ++j) {
      if (orthogonal(tables.ring, nt[i], nt[j])) b.add_edge(i, j);
    }
  }
  return std::move(b).build();
}

std::size_t cl2_degree_formula(const RingTables& tables, ElemIndex e,
                               ElemIndex u) {
  if (e == tables.ring.zero()) {
    throw domain_error("degree formula is defined for nonzero idempotents");
  }
  if (!tables.unit.is_unit(u)) throw domain_error("not a unit");
  const std::size_t m = tables.idem.nonzero.size();
  const std::size_t k = tables.unit.size();
  const std::size_t o = tables.idem.ortho_count(e);
  return (tables.unit.is_involution(u) ? m - 1 : m) + o * (k - 1);
}

ShurikenRoute cl2_via_shuriken(const RingTables& tables, const Caps& caps) {
  ShurikenRoute route;
  route.cl2 = cl2(tables, caps);
  const std::size_t k = tables.unit.size();
  route.shuriken =
      shuriken({tables.unit.involution_count, k, idempotent_graph(tables)});

  // Cl2 vertex of (e, u) sits at (position of e among nonzero idempotents)
  // * k + (unit position); the identity's row is found by lookup.
  const auto& nonzero = tables.idem.nonzero;
  auto row_of = [&](ElemIndex e) {
    for (std::size_t i = 0; i < nonzero.size(); ++i) {
      if (nonzero[i] == e) return i;
    }
    throw domain_error("idempotent missing from table");
  };
  const std::size_t one_row = row_of(tables.ring.one());
  std::vector<std::size_t> base_row;
  for (ElemIndex e : tables.idem.nontrivial) base_row.push_back(row_of(e));

  route.to_cl2.reserve(route.shuriken.vertices.size());
  for (const ShurikenVertex& sv : route.shuriken.vertices) {
    const std::size_t unit_pos = sv.copy - 1;
    const std::size_t row = sv.apex ? one_row : base_row[sv.base];
    route.to_cl2.push_back(static_cast<Vertex>(row * k + unit_pos));
  }
  return route;
}

}  // namespace cleangraph
