#pragma once

// Deterministic generators for the named complexes used throughout the
// library and its tests. Generators label vertices consecutively from 1.

#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "rcx/core.hpp"

namespace rcx::catalog {

/// Apex labelled max_label(G) + 1, one face {apex, a, b} per edge of G.
Complex2 cone_over_graph(const Graph1& g);

enum class GammaKind {
  TwoCircles,  // x-cycle and y-cycle joined by a path of z edges (z = 0: wedge)
  Theta,       // two branch vertices joined by arcs of x, y, z edges
};

/// chi = -1 graphs; requires x, y >= 3 and z >= 0 (z >= 1 for Theta).
Graph1 gamma_graph(GammaKind kind, std::int64_t x, std::int64_t y, std::int64_t z);

/// Disk with two interior vertices of degrees x and y and x + y - 2 vertices
/// and faces; L(3,3) is the tetrahedron boundary.
Complex2 l_xy(std::int64_t x, std::int64_t y);

enum class DiskKind {
  Ngon,          // cone over an n-cycle
  ImplantedNgon  // square boundary, annulus without interior vertices, coned n-gon
};

Complex2 disk(DiskKind kind, std::int64_t n);

enum class SurfaceKind { Sphere4, Torus7, Rp2_6, Klein8 };

Complex2 closed_surface(SurfaceKind kind);

/// k = 0: three triangles on a common edge. k >= 1: the common edge split into
/// k + 1 segments, each coned to the three apexes.
Complex2 triod(std::int64_t k);

/// Adds face {e.a, e.b, u} for a fresh vertex u. Throws UnknownSimplex if e is
/// not an edge of s.
Complex2 attach_triangle(const Complex2& s, const Edge& e);

Complex2 triangle();

/// Every 2-simplex on {1..n}.
Complex2 full_two_skeleton(std::int64_t n);

/// Complex from a catalog name and integer parameters, e.g. ("ngon", {6}).
/// Throws InvalidParameter on an unknown name or wrong parameter count.
Complex2 by_name(std::string_view name, std::span<const std::int64_t> params = {});

/// Names accepted by by_name, with their parameter lists.
std::vector<std::string> names();

struct Fixture {
  std::string name;
  Complex2 complex;
};

/// The standard fixture set: every generator at a spread of parameters.
std::vector<Fixture> fixtures();

}  // namespace rcx::catalog
