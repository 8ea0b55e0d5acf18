#include "cleangraph/iso.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <tuple>

#include "cleangraph/error.hpp"

namespace cleangraph {

std::vector<std::vector<Vertex>> connected_components(const Graph& g) {
  std::vector<std::vector<Vertex>> out;
  std::vector<bool> seen(g.order(), false);
  for (Vertex s = 0; s < g.order(); ++s) {
    if (seen[s]) continue;
    std::vector<Vertex> comp{s};
    seen[s] = true;
    for (std::size_t head = 0; head < comp.size(); ++head) {
      for (Vertex w : g.neighbors(comp[head])) {
        if (!seen[w]) {
          seen[w] = true;
          comp.push_back(w);
        }
      }
    }
    std::sort(comp.begin(), comp.end());
    out.push_back(std::move(comp));
  }
  return out;
}

Fingerprint fingerprint(const Graph& g) {
  Fingerprint fp;
  fp.order = g.order();
  fp.size = g.size();
  fp.degrees = g.degree_sequence();
  for (const auto& comp : connected_components(g)) {
    Fingerprint::Component c;
    c.order = comp.size();
    std::size_t degree_sum = 0;
    for (Vertex v : comp) {
      c.degrees.push_back(g.degree(v));
      degree_sum += g.degree(v);
    }
    c.size = degree_sum / 2;
    std::sort(c.degrees.rbegin(), c.degrees.rend());
    fp.components.push_back(std::move(c));
  }
  std::sort(fp.components.begin(), fp.components.end());
  return fp;
}

std::optional<std::string> first_difference(const Fingerprint& a,
                                            const Fingerprint& b) {
  if (a.order != b.order) return "order";
  if (a.size != b.size) return "size";
  if (a.degrees != b.degrees) return "degree sequence";
  if (a.components != b.components) return "components";
  return std::nullopt;
}

namespace {

std::uint64_t mix(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

bool edges_preserved(const Graph& g1, const Graph& g2,
                     const std::vector<Vertex>& map) {
  if (g1.size() != g2.size()) return false;
  for (Vertex u = 0; u < g1.order(); ++u) {
    for (Vertex v : g1.neighbors(u)) {
      if (u < v && !g2.adjacent(map[u], map[v])) return false;
    }
  }
  return true;
}

// Individualisation-refinement search over the disjoint union of g1 and g2.
// Union vertex x < n is g1's x; x >= n is g2's x - n. Colours are computed
// jointly so that equal colour ids mean the same refined class on both sides.
class PairSearch {
 public:
  PairSearch(const Graph& g1, const Graph& g2, std::uint64_t budget,
             std::uint64_t& nodes)
      : g1_(g1), g2_(g2), n_(g1.order()), budget_(budget), nodes_(nodes) {}

  std::optional<std::vector<Vertex>> find_one() {
    if (!compatible()) return std::nullopt;
    limit_ = 1;
    run();
    if (found_.empty()) return std::nullopt;
    return std::move(found_.front());
  }

  void enumerate(std::size_t cap, IsoEnumeration& out) {
    if (!compatible()) return;
    limit_ = cap;
    run();
    out.maps = std::move(found_);
    out.truncated = truncated_;
  }

 private:
  struct Coloring {
    std::vector<std::uint32_t> color;
    std::uint32_t num_colors = 1;
  };

  bool compatible() const {
    return g1_.order() == g2_.order() && g1_.size() == g2_.size();
  }

  void run() {
    Coloring c;
    c.color.assign(2 * n_, 0);
    search(std::move(c));
  }

  std::span<const Vertex> neighbors(std::size_t x) const {
    return x < n_ ? g1_.neighbors(static_cast<Vertex>(x))
                  : g2_.neighbors(static_cast<Vertex>(x - n_));
  }

  // Refines to a stable colouring. Returns false as soon as some colour class
  // has different sizes on the two sides.
  bool refine(Coloring& c) {
    const std::size_t total = 2 * n_;
    std::vector<std::tuple<std::uint32_t, std::uint64_t, std::uint32_t>> keyed(
        total);
    std::vector<std::int64_t> balance;
    while (true) {
      for (std::size_t x = 0; x < total; ++x) {
        std::uint64_t acc = 0;
        const std::size_t offset = x < n_ ? 0 : n_;
        for (Vertex w : neighbors(x)) acc += mix(c.color[w + offset]);
        keyed[x] = {c.color[x], acc, static_cast<std::uint32_t>(x)};
      }
      std::sort(keyed.begin(), keyed.end());
      std::uint32_t id = 0;
      for (std::size_t i = 0; i < total; ++i) {
        if (i > 0 && (std::get<0>(keyed[i]) != std::get<0>(keyed[i - 1]) ||
                      std::get<1>(keyed[i]) != std::get<1>(keyed[i - 1]))) {
          ++id;
        }
        c.color[std::get<2>(keyed[i])] = id;
      }
      const std::uint32_t count = total == 0 ? 0 : id + 1;
      balance.assign(count, 0);
      for (std::size_t x = 0; x < total; ++x) {
        balance[c.color[x]] += x < n_ ? 1 : -1;
      }
      for (auto b : balance) {
        if (b != 0) return false;
      }
      if (count == c.num_colors) return true;
      c.num_colors = count;
    }
  }

  void search(Coloring c) {
    if (done()) return;
    if (!refine(c)) return;
    if (c.num_colors == n_) {
      std::vector<Vertex> side2_of(n_);
      for (std::size_t x = n_; x < 2 * n_; ++x) {
        side2_of[c.color[x]] = static_cast<Vertex>(x - n_);
      }
      std::vector<Vertex> map(n_);
      for (std::size_t x = 0; x < n_; ++x) map[x] = side2_of[c.color[x]];
      if (edges_preserved(g1_, g2_, map)) {
        if (found_.size() >= limit_) {
          truncated_ = true;
        } else {
          found_.push_back(std::move(map));
        }
      }
      return;
    }

    // Target: the smallest non-singleton class, lowest id on ties.
    std::vector<std::uint32_t> class_size(c.num_colors, 0);
    for (std::size_t x = 0; x < n_; ++x) ++class_size[c.color[x]];
    std::uint32_t target = 0;
    std::uint32_t best = 0;
    for (std::uint32_t k = 0; k < c.num_colors; ++k) {
      if (class_size[k] > 1 && (best == 0 || class_size[k] < best)) {
        best = class_size[k];
        target = k;
      }
    }
    std::size_t v = 0;
    while (c.color[v] != target) ++v;

    for (std::size_t w = n_; w < 2 * n_; ++w) {
      if (c.color[w] != target) continue;
      if (++nodes_ > budget_) {
        throw Error(ErrorKind::kInconclusive,
                    "isomorphism search exceeded its budget of " +
                        std::to_string(budget_) + " nodes");
      }
      Coloring child = c;
      child.color[v] = c.num_colors;
      child.color[w] = c.num_colors;
      child.num_colors = c.num_colors + 1;
      search(std::move(child));
      if (done()) return;
    }
  }

  bool done() const { return truncated_ || (limit_ == 1 && !found_.empty()); }

  const Graph& g1_;
  const Graph& g2_;
  std::size_t n_;
  std::uint64_t budget_;
  std::uint64_t& nodes_;
  std::size_t limit_ = 1;
  bool truncated_ = false;
  std::vector<std::vector<Vertex>> found_;
};

struct Piece {
  int side = 0;
  std::vector<Vertex> vertices;  // original ids, sorted
  Graph graph;                   // induced subgraph in that order
};

struct PieceClass {
  std::size_t rep = 0;
  // (piece index, map rep-vertex -> piece-vertex) per member.
  std::vector<std::pair<std::size_t, std::vector<Vertex>>> side1, side2;
};

}  // namespace

IsoResult is_isomorphic(const Graph& g1, const Graph& g2,
                        std::uint64_t budget) {
  IsoResult result;
  const Fingerprint fp1 = fingerprint(g1), fp2 = fingerprint(g2);
  if (auto diff = first_difference(fp1, fp2)) {
    result.screened_by = std::move(diff);
    return result;
  }

  std::uint64_t nodes = 0;
  const auto comps1 = connected_components(g1);
  const auto comps2 = connected_components(g2);
  std::vector<Vertex> witness(g1.order());

  if (comps1.size() <= 1) {
    auto map = PairSearch(g1, g2, budget, nodes).find_one();
    result.search_nodes = nodes;
    if (!map) return result;
    witness = std::move(*map);
  } else {
    std::vector<Piece> pieces;
    std::map<Fingerprint::Component, std::vector<std::size_t>> groups;
    auto add_pieces = [&](const Graph& g, const auto& comps, int side) {
      for (const auto& comp : comps) {
        Piece p{side, comp, g.induced(comp)};
        Fingerprint::Component key{p.graph.order(), p.graph.size(),
                                   p.graph.degree_sequence()};
        groups[key].push_back(pieces.size());
        pieces.push_back(std::move(p));
      }
    };
    add_pieces(g1, comps1, 1);
    add_pieces(g2, comps2, 2);

    for (const auto& [key, members] : groups) {
      std::vector<PieceClass> classes;
      for (std::size_t idx : members) {
        const Piece& piece = pieces[idx];
        bool placed = false;
        for (auto& cls : classes) {
          auto map = PairSearch(pieces[cls.rep].graph, piece.graph, budget,
                                nodes)
                         .find_one();
          if (!map) continue;
          (piece.side == 1 ? cls.side1 : cls.side2)
              .emplace_back(idx, std::move(*map));
          placed = true;
          break;
        }
        if (!placed) {
          PieceClass cls;
          cls.rep = idx;
          std::vector<Vertex> identity(piece.graph.order());
          std::iota(identity.begin(), identity.end(), 0);
          (piece.side == 1 ? cls.side1 : cls.side2)
              .emplace_back(idx, std::move(identity));
          classes.push_back(std::move(cls));
        }
      }
      for (const auto& cls : classes) {
        if (cls.side1.size() != cls.side2.size()) {
          result.search_nodes = nodes;
          return result;
        }
        for (std::size_t i = 0; i < cls.side1.size(); ++i) {
          const auto& [a_idx, rep_to_a] = cls.side1[i];
          const auto& [b_idx, rep_to_b] = cls.side2[i];
          std::vector<Vertex> a_to_rep(rep_to_a.size());
          for (Vertex r = 0; r < rep_to_a.size(); ++r) a_to_rep[rep_to_a[r]] = r;
          const Piece& a = pieces[a_idx];
          const Piece& b = pieces[b_idx];
          for (Vertex x = 0; x < a.vertices.size(); ++x) {
            witness[a.vertices[x]] = b.vertices[rep_to_b[a_to_rep[x]]];
          }
        }
      }
    }
    result.search_nodes = nodes;
  }

  if (!verify_bijection(g1, g2, witness).ok) {
    throw Error(ErrorKind::kDomain,
                "internal error: isomorphism witness failed verification");
  }
  result.verdict = IsoVerdict::kIsomorphic;
  result.witness = std::move(witness);
  return result;
}

IsoEnumeration all_isomorphisms(const Graph& g1, const Graph& g2,
                                std::size_t cap, std::uint64_t budget) {
  if (g1.order() > kMaxEnumerationOrder || g2.order() > kMaxEnumerationOrder) {
    throw budget_exceeded("all_isomorphisms is limited to " +
                          std::to_string(kMaxEnumerationOrder) + " vertices");
  }
  IsoEnumeration out;
  PairSearch(g1, g2, budget, out.search_nodes).enumerate(cap, out);
  return out;
}

BijectionCheck verify_bijection(const Graph& g1, const Graph& g2,
                                std::span<const Vertex> map) {
  const std::size_t n = g1.order();
  if (g2.order() != n || map.size() != n) {
    throw domain_error("verify_bijection: vertex counts differ");
  }
  std::vector<bool> hit(n, false);
  for (Vertex v : map) {
    if (v >= n || hit[v]) {
      throw domain_error("verify_bijection: map is not a bijection");
    }
    hit[v] = true;
  }
  BijectionCheck check;
  for (Vertex u = 0; u < n; ++u) {
    for (Vertex v = u + 1; v < n; ++v) {
      if (g1.adjacent(u, v) != g2.adjacent(map[u], map[v])) {
        check.ok = false;
        check.violation = std::make_pair(u, v);
        return check;
      }
    }
  }
  return check;
}

}  // namespace cleangraph
