#include "hypembed/tree.hpp"

#include <algorithm>
#include <queue>
#include <sstream>

#include "hypembed/error.hpp"

namespace hypembed {

RootedTree::RootedTree(std::size_t color) : color_(color) {
  vertices_.push_back(Vertex{});
  by_level_.push_back({0});
}

VertexId RootedTree::add_vertex(std::size_t level, std::size_t member, VertexId parent) {
  if (parent >= vertices_.size()) throw Error("parent vertex does not exist");
  if (vertices_[parent].level >= level) throw Error("parent must sit on a lower level");
  const auto id = static_cast<VertexId>(vertices_.size());
  Vertex v;
  v.level = level;
  v.member = member;
  v.parent = parent;
  v.depth = vertices_[parent].depth + 1;
  vertices_.push_back(std::move(v));
  vertices_[parent].children.push_back(id);
  if (by_level_.size() <= level) by_level_.resize(level + 1);
  auto& slot = by_level_[level];
  if (slot.size() <= member) slot.resize(member + 1, static_cast<VertexId>(-1));
  slot[member] = id;
  return id;
}

const RootedTree::Vertex& RootedTree::vertex(VertexId v) const {
  if (v >= vertices_.size()) throw Error("vertex is not in the tree");
  return vertices_[v];
}

VertexId RootedTree::vertex_of(std::size_t level, std::size_t member) const {
  if (level == 0) return 0;
  if (level >= by_level_.size() || member >= by_level_[level].size() ||
      by_level_[level][member] == static_cast<VertexId>(-1))
    throw Error("no vertex for the requested member");
  return by_level_[level][member];
}

VertexId RootedTree::lowest_common_ancestor(VertexId a, VertexId b) const {
  const Vertex* va = &vertex(a);
  const Vertex* vb = &vertex(b);
  while (va->depth > vb->depth) {
    a = *va->parent;
    va = &vertices_[a];
  }
  while (vb->depth > va->depth) {
    b = *vb->parent;
    vb = &vertices_[b];
  }
  while (a != b) {
    a = *vertices_[a].parent;
    b = *vertices_[b].parent;
  }
  return a;
}

std::size_t RootedTree::distance(VertexId a, VertexId b) const {
  const VertexId c = lowest_common_ancestor(a, b);
  return vertex(a).depth + vertex(b).depth - 2 * vertices_[c].depth;
}

std::size_t RootedTree::distance_to_levels_at_most(VertexId v, std::size_t level) const {
  std::size_t steps = 0;
  while (vertex(v).level > level) {
    v = *vertices_[v].parent;
    ++steps;
  }
  return steps;
}

RootedTree build_tree(const FiniteMetricSpace& space, const CharSequence& seq, std::size_t color) {
  const auto& ladder = seq.ladder;
  if (color >= ladder.color_count) throw Error("color out of range");
  const std::size_t depth = ladder.depth();
  // point -> members containing it, per level
  std::vector<std::vector<std::vector<std::uint32_t>>> index(depth + 1);
  for (std::size_t j = 1; j <= depth; ++j) {
    index[j].assign(space.size(), {});
    const auto& fam = ladder.members(j, color);
    for (std::size_t i = 0; i < fam.size(); ++i)
      for (PointIndex p : fam[i]) index[j][p].push_back(static_cast<std::uint32_t>(i));
  }

  RootedTree tree(color);
  for (std::size_t j = 1; j <= depth; ++j) {
    const auto& fam = ladder.members(j, color);
    for (std::size_t i = 0; i < fam.size(); ++i) {
      const Subset& u = fam[i];
      if (u.empty()) throw Error("tree construction met an empty member");
      VertexId parent = 0;
      for (std::size_t jp = j - 1; jp >= 1; --jp) {
        std::vector<std::uint32_t> containers;
        for (std::uint32_t c : index[jp][u[0]])
          if (u.is_subset_of(ladder.members(jp, color)[c])) containers.push_back(c);
        if (containers.size() > 1) {
          std::ostringstream os;
          os << "defective sequence: level " << j << " member " << i << " of color " << color
             << " has incomparable containers " << containers[0] << " and " << containers[1] << " at level " << jp;
          throw Error(os.str());
        }
        if (containers.size() == 1) {
          parent = tree.vertex_of(jp, containers[0]);
          break;
        }
      }
      tree.add_vertex(j, i, parent);
    }
  }
  return tree;
}

TreeAudit audit_tree(const CharSequence& seq, const RootedTree& tree) {
  TreeAudit audit;
  const auto& verts = tree.vertices();
  const auto& ladder = seq.ladder;
  const std::size_t color = tree.color();
  auto problem = [&](bool& flag, const std::string& what) {
    flag = false;
    audit.problems.push_back(what);
  };

  std::size_t edges = 0;
  for (VertexId v = 0; v < verts.size(); ++v) {
    const auto& x = verts[v];
    if (v == 0) {
      if (x.parent) problem(audit.unique_parent, "root has a parent");
      continue;
    }
    if (!x.parent) {
      problem(audit.unique_parent, "vertex " + std::to_string(v) + " has no parent");
      continue;
    }
    ++edges;
    const auto& p = verts.at(*x.parent);
    if (std::count(p.children.begin(), p.children.end(), v) != 1)
      problem(audit.unique_parent, "vertex " + std::to_string(v) + " is not listed exactly once by its parent");
    if (p.level >= x.level) problem(audit.levels_increase, "edge " + std::to_string(v) + " does not go up in level");
    const Subset& u = ladder.members(x.level, color).at(*x.member);
    if (*x.parent != 0) {
      const Subset& up = ladder.members(p.level, color).at(*p.member);
      if (!u.is_subset_of(up)) problem(audit.containment, "vertex " + std::to_string(v) + " not contained in its parent");
    }
    for (std::size_t jp = p.level + 1; jp < x.level; ++jp)
      for (const auto& w : ladder.members(jp, color))
        if (u.is_subset_of(w)) {
          problem(audit.maximal_parent, "vertex " + std::to_string(v) + " skips a container at level " + std::to_string(jp));
          break;
        }
  }
  for (VertexId v = 0; v < verts.size(); ++v)
    for (VertexId c : verts[v].children)
      if (c >= verts.size() || verts[c].parent != v) problem(audit.unique_parent, "child link mismatch");

  std::vector<char> seen(verts.size(), 0);
  std::queue<VertexId> q;
  q.push(0);
  seen[0] = 1;
  std::size_t reached = 1;
  while (!q.empty()) {
    const VertexId v = q.front();
    q.pop();
    auto visit = [&](VertexId w) {
      if (!seen[w]) {
        seen[w] = 1;
        ++reached;
        q.push(w);
      }
    };
    for (VertexId c : verts[v].children) visit(c);
    if (verts[v].parent) visit(*verts[v].parent);
  }
  if (reached != verts.size()) problem(audit.connected, "tree is not connected");
  if (edges != verts.size() - 1 || reached != verts.size()) problem(audit.acyclic, "edge count does not match a tree");
  return audit;
}

std::vector<std::uint32_t> tree_distance_table(const RootedTree& tree) {
  const std::size_t n = tree.size();
  std::vector<std::uint32_t> table(n * n, 0);
  std::vector<std::uint32_t> dist(n);
  for (VertexId s = 0; s < n; ++s) {
    std::fill(dist.begin(), dist.end(), static_cast<std::uint32_t>(-1));
    std::queue<VertexId> q;
    dist[s] = 0;
    q.push(s);
    while (!q.empty()) {
      const VertexId v = q.front();
      q.pop();
      const auto& x = tree.vertex(v);
      auto relax = [&](VertexId w) {
        if (dist[w] == static_cast<std::uint32_t>(-1)) {
          dist[w] = dist[v] + 1;
          q.push(w);
        }
      };
      for (VertexId c : x.children) relax(c);
      if (x.parent) relax(*x.parent);
    }
    std::copy(dist.begin(), dist.end(), table.begin() + static_cast<std::ptrdiff_t>(s) * static_cast<std::ptrdiff_t>(n));
  }
  return table;
}

}  // namespace hypembed
