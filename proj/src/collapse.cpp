#include "rcx/collapse.hpp"

#include "rcx/error.hpp"

namespace rcx {

const char* collapse_kind_name(CollapseKind kind) noexcept {
  return kind == CollapseKind::Graph ? "graph" : "closed_core";
}

std::vector<Face> free_faces(const Complex2& s) {
  std::vector<Face> out;
  for (std::size_t i = 0; i < s.num_faces(); ++i)
    for (std::uint32_t e : s.edges_of_face(i))
      if (s.edge_degree(e) == 1) {
        out.push_back(s.faces()[i]);
        break;
      }
  return out;
}

Complex2 collapse_step(const Complex2& s) {
  std::vector<bool> keep_face(s.num_faces(), true);
  std::vector<bool> drop_edge(s.num_edges(), false);
  bool any = false;
  for (std::size_t i = 0; i < s.num_faces(); ++i) {
    // edges_of_face lists the edges in sorted order.
    for (std::uint32_t e : s.edges_of_face(i)) {
      if (s.edge_degree(e) != 1 || drop_edge[e]) continue;
      drop_edge[e] = true;
      keep_face[i] = false;
      any = true;
      break;
    }
  }
  if (!any) throw Error(ErrorCode::NothingToCollapse, "no free faces");
  return s.restrict(keep_face, drop_edge);
}

CollapseOutcome collapse_to_core(const Complex2& s) {
  CollapseOutcome out;
  Complex2 current = s;
  out.face_counts_per_step.push_back(static_cast<std::uint32_t>(current.num_faces()));
  out.euler_per_step.push_back(euler_characteristic(current));
  while (current.num_faces() > 0 && !free_faces(current).empty()) {
    current = collapse_step(current);
    ++out.steps;
    out.face_counts_per_step.push_back(static_cast<std::uint32_t>(current.num_faces()));
    out.euler_per_step.push_back(euler_characteristic(current));
  }
  out.kind = current.num_faces() == 0 ? CollapseKind::Graph : CollapseKind::ClosedCore;
  out.core = std::move(current);
  return out;
}

}  // namespace rcx
