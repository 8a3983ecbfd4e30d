#include "rcx/patterns.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>

#include "rcx/density.hpp"
#include "rcx/error.hpp"

namespace rcx {

namespace {

constexpr std::uint32_t kUnassigned = std::numeric_limits<std::uint32_t>::max();

// Host faces over dense vertex indices, indexed by vertex and by edge.
class HostIndex {
 public:
  explicit HostIndex(const Complex2& host) : labels_(host.vertices()) {
    const std::size_t n = labels_.size();
    by_vertex_.resize(n);
    for (const Face& f : host.faces()) {
      auto a = local(f.a), b = local(f.b), c = local(f.c);
      codes_.push_back(code(a, b, c));
      by_vertex_[a].push_back({b, c});
      by_vertex_[b].push_back({a, c});
      by_vertex_[c].push_back({a, b});
      thirds_.push_back({pair_code(a, b), c});
      thirds_.push_back({pair_code(a, c), b});
      thirds_.push_back({pair_code(b, c), a});
    }
    // host.faces() is sorted, so codes_ is sorted as well.
    std::sort(thirds_.begin(), thirds_.end());
  }

  std::size_t vertex_count() const { return labels_.size(); }
  std::size_t face_count() const { return codes_.size(); }
  VertexId label(std::uint32_t i) const { return labels_[i]; }

  /// Face id of {x,y,z}, or kUnassigned if absent or degenerate.
  std::uint32_t face_id(std::uint32_t x, std::uint32_t y, std::uint32_t z) const {
    if (x == y || y == z || x == z) return kUnassigned;
    std::array<std::uint32_t, 3> c{x, y, z};
    std::sort(c.begin(), c.end());
    auto key = code(c[0], c[1], c[2]);
    auto it = std::lower_bound(codes_.begin(), codes_.end(), key);
    if (it == codes_.end() || *it != key) return kUnassigned;
    return static_cast<std::uint32_t>(it - codes_.begin());
  }

  /// Third vertices of faces containing edge {x,y}.
  template <typename Fn>
  void for_each_third(std::uint32_t x, std::uint32_t y, Fn&& fn) const {
    const auto key = pair_code(std::min(x, y), std::max(x, y));
    auto it = std::lower_bound(thirds_.begin(), thirds_.end(),
                               std::pair<std::uint64_t, std::uint32_t>{key, 0});
    for (; it != thirds_.end() && it->first == key; ++it)
      if (!fn(it->second)) return;
  }

  const std::vector<std::array<std::uint32_t, 2>>& opposite(std::uint32_t v) const {
    return by_vertex_[v];
  }

  std::array<std::uint32_t, 3> corners(std::uint32_t id) const {
    const std::uint64_t n = labels_.size();
    std::uint64_t k = codes_[id];
    return {static_cast<std::uint32_t>(k / (n * n)), static_cast<std::uint32_t>(k / n % n),
            static_cast<std::uint32_t>(k % n)};
  }

 private:
  std::uint32_t local(VertexId v) const {
    return static_cast<std::uint32_t>(std::lower_bound(labels_.begin(), labels_.end(), v) -
                                      labels_.begin());
  }
  std::uint64_t code(std::uint64_t a, std::uint64_t b, std::uint64_t c) const {
    const std::uint64_t n = labels_.size();
    return (a * n + b) * n + c;
  }
  std::uint64_t pair_code(std::uint64_t a, std::uint64_t b) const {
    return a * labels_.size() + b;
  }

  std::vector<VertexId> labels_;
  std::vector<std::uint64_t> codes_;
  std::vector<std::vector<std::array<std::uint32_t, 2>>> by_vertex_;
  std::vector<std::pair<std::uint64_t, std::uint32_t>> thirds_;
};

struct PatternPlan {
  std::vector<VertexId> labels;
  std::vector<std::array<std::uint32_t, 3>> faces;  // in search order
  std::size_t faceless_vertices = 0;
};

// Seeds on the face of largest corner face-degree sum, then repeatedly takes
// the face with the most corners already reached (ties: larger degree sum).
PatternPlan plan(const Complex2& pattern) {
  PatternPlan p;
  p.labels = pattern.vertices();
  auto local = [&](VertexId v) {
    return static_cast<std::uint32_t>(*pattern.vertex_index(v));
  };
  std::vector<std::uint32_t> face_degree(p.labels.size(), 0);
  std::vector<std::array<std::uint32_t, 3>> faces;
  for (const Face& f : pattern.faces()) {
    faces.push_back({local(f.a), local(f.b), local(f.c)});
    for (auto v : faces.back()) ++face_degree[v];
  }
  auto weight = [&](const std::array<std::uint32_t, 3>& f) {
    return face_degree[f[0]] + face_degree[f[1]] + face_degree[f[2]];
  };
  std::vector<bool> reached(p.labels.size(), false);
  std::vector<bool> taken(faces.size(), false);
  for (std::size_t step = 0; step < faces.size(); ++step) {
    std::size_t best = faces.size();
    int best_hits = -1;
    std::uint32_t best_weight = 0;
    for (std::size_t i = 0; i < faces.size(); ++i) {
      if (taken[i]) continue;
      int hits = reached[faces[i][0]] + reached[faces[i][1]] + reached[faces[i][2]];
      if (hits > best_hits || (hits == best_hits && weight(faces[i]) > best_weight)) {
        best = i;
        best_hits = hits;
        best_weight = weight(faces[i]);
      }
    }
    taken[best] = true;
    for (auto v : faces[best]) reached[v] = true;
    p.faces.push_back(faces[best]);
  }
  p.faceless_vertices =
      static_cast<std::size_t>(std::count(face_degree.begin(), face_degree.end(), 0u));
  return p;
}

class Search {
 public:
  Search(const PatternPlan& plan, const HostIndex& host, MapKind kind, bool stop_at_first)
      : plan_(plan),
        host_(host),
        kind_(kind),
        stop_(stop_at_first),
        assign_(plan.labels.size(), kUnassigned),
        vertex_users_(host.vertex_count(), 0),
        face_used_(host.face_count(), false) {}

  std::uint64_t run() {
    if (kind_ == MapKind::Embedding && plan_.labels.size() > host_.vertex_count()) return 0;
    descend(0);
    return count_;
  }

  const std::vector<std::uint32_t>& witness() const { return witness_; }

 private:
  bool done() const { return stop_ && count_ > 0; }

  bool vertex_free(std::uint32_t h) const {
    return kind_ == MapKind::Immersion || vertex_users_[h] == 0;
  }

  void finish() {
    const std::size_t extra = plan_.faceless_vertices;
    std::uint64_t ways = 1;
    if (extra > 0 && kind_ == MapKind::Embedding) {
      std::size_t free_hosts = 0;
      for (auto users : vertex_users_) free_hosts += users == 0;
      for (std::size_t i = 0; i < extra; ++i) {
        if (free_hosts < i + 1) return;
        ways *= free_hosts - i;
      }
    } else if (extra > 0) {
      for (std::size_t i = 0; i < extra; ++i) ways *= host_.vertex_count();
      if (ways == 0) return;
    }
    if (count_ == 0) {
      witness_ = assign_;
      // Faceless pattern vertices get the smallest admissible host vertices.
      std::vector<std::uint32_t> users = vertex_users_;
      for (auto& a : witness_) {
        if (a != kUnassigned) continue;
        std::uint32_t h = 0;
        while (kind_ == MapKind::Embedding && users[h] != 0) ++h;
        a = h;
        ++users[h];
      }
    }
    count_ += ways;
  }

  void bind(std::uint32_t p, std::uint32_t h) {
    assign_[p] = h;
    ++vertex_users_[h];
  }
  void unbind(std::uint32_t p) {
    --vertex_users_[assign_[p]];
    assign_[p] = kUnassigned;
  }

  // Places face k given candidate images for its unassigned corners.
  void try_face(std::size_t k, std::uint32_t id, const std::array<std::uint32_t, 3>& image) {
    if (id == kUnassigned || face_used_[id]) return;
    const auto& f = plan_.faces[k];
    std::array<bool, 3> fresh{};
    for (int i = 0; i < 3; ++i) {
      fresh[i] = assign_[f[i]] == kUnassigned;
      if (fresh[i] && !vertex_free(image[i])) {
        for (int j = 0; j < i; ++j)
          if (fresh[j]) unbind(f[j]);
        return;
      }
      if (fresh[i]) bind(f[i], image[i]);
    }
    face_used_[id] = true;
    descend(k + 1);
    face_used_[id] = false;
    for (int i = 0; i < 3; ++i)
      if (fresh[i]) unbind(f[i]);
  }

  void descend(std::size_t k) {
    if (done()) return;
    if (k == plan_.faces.size()) {
      finish();
      return;
    }
    const auto& f = plan_.faces[k];
    std::array<std::uint32_t, 3> img{assign_[f[0]], assign_[f[1]], assign_[f[2]]};
    const int known = (img[0] != kUnassigned) + (img[1] != kUnassigned) + (img[2] != kUnassigned);

    if (known == 3) {
      try_face(k, host_.face_id(img[0], img[1], img[2]), img);
      return;
    }
    if (known == 2) {
      int miss = img[0] == kUnassigned ? 0 : img[1] == kUnassigned ? 1 : 2;
      std::uint32_t x = img[(miss + 1) % 3], y = img[(miss + 2) % 3];
      if (x == y) return;
      host_.for_each_third(x, y, [&](std::uint32_t h) {
        auto image = img;
        image[miss] = h;
        try_face(k, host_.face_id(x, y, h), image);
        return !done();
      });
      return;
    }
    if (known == 1) {
      int hit = img[0] != kUnassigned ? 0 : img[1] != kUnassigned ? 1 : 2;
      const int j = (hit + 1) % 3, l = (hit + 2) % 3;
      for (const auto& opp : host_.opposite(img[hit])) {
        for (int swap = 0; swap < 2 && !done(); ++swap) {
          auto image = img;
          image[j] = opp[swap];
          image[l] = opp[1 - swap];
          try_face(k, host_.face_id(image[0], image[1], image[2]), image);
        }
        if (done()) return;
      }
      return;
    }
    static constexpr std::array<std::array<int, 3>, 6> kPerms{
        {{0, 1, 2}, {0, 2, 1}, {1, 0, 2}, {1, 2, 0}, {2, 0, 1}, {2, 1, 0}}};
    for (std::uint32_t id = 0; id < host_.face_count() && !done(); ++id) {
      const auto c = host_.corners(id);
      for (const auto& perm : kPerms) {
        try_face(k, id, {c[perm[0]], c[perm[1]], c[perm[2]]});
        if (done()) return;
      }
    }
  }

  const PatternPlan& plan_;
  const HostIndex& host_;
  MapKind kind_;
  bool stop_;
  std::vector<std::uint32_t> assign_;
  std::vector<std::uint32_t> vertex_users_;
  std::vector<bool> face_used_;
  std::uint64_t count_ = 0;
  std::vector<std::uint32_t> witness_;
};

std::optional<VertexMap> find_map(const Complex2& pattern, const Complex2& host, MapKind kind) {
  if (pattern.num_faces() == 0) throw Error(ErrorCode::NoFaces, "pattern has no faces");
  const PatternPlan p = plan(pattern);
  const HostIndex h(host);
  Search search(p, h, kind, true);
  if (search.run() == 0) return std::nullopt;
  VertexMap map;
  map.kind = kind;
  for (std::size_t i = 0; i < p.labels.size(); ++i)
    map.assignment[p.labels[i]] = h.label(search.witness()[i]);
  return map;
}

}  // namespace

bool is_valid_map(const Complex2& pattern, const Complex2& host, const VertexMap& map) {
  for (VertexId v : pattern.vertices()) {
    auto it = map.assignment.find(v);
    if (it == map.assignment.end() || !host.has_vertex(it->second)) return false;
  }
  if (map.kind == MapKind::Embedding) {
    std::vector<VertexId> images;
    for (const auto& [from, to] : map.assignment) images.push_back(to);
    std::sort(images.begin(), images.end());
    if (std::adjacent_find(images.begin(), images.end()) != images.end()) return false;
  }
  std::vector<Face> targets;
  for (const Face& f : pattern.faces()) {
    VertexId x = map.assignment.at(f.a), y = map.assignment.at(f.b), z = map.assignment.at(f.c);
    if (x == y || y == z || x == z) return false;
    Face g = Face::make(x, y, z);
    if (!host.face_index(g)) return false;
    targets.push_back(g);
  }
  std::sort(targets.begin(), targets.end());
  return std::adjacent_find(targets.begin(), targets.end()) == targets.end();
}

std::optional<VertexMap> find_immersion(const Complex2& pattern, const Complex2& host) {
  return find_map(pattern, host, MapKind::Immersion);
}

std::optional<VertexMap> find_embedding(const Complex2& pattern, const Complex2& host) {
  return find_map(pattern, host, MapKind::Embedding);
}

std::uint64_t count_embeddings(const Complex2& pattern, const Complex2& host) {
  if (pattern.num_faces() == 0) throw Error(ErrorCode::NoFaces, "pattern has no faces");
  const PatternPlan p = plan(pattern);
  const HostIndex h(host);
  return Search(p, h, MapKind::Embedding, false).run();
}

FirstMoment expected_embedding_count(const Complex2& pattern, std::int64_t n, double p) {
  const auto v = static_cast<std::int64_t>(pattern.num_vertices());
  const auto f = static_cast<double>(pattern.num_faces());
  FirstMoment m;
  m.immersion_bound = std::pow(static_cast<double>(n), static_cast<double>(v)) * std::pow(p, f);
  if (n < v) return m;
  double falling = 1.0;
  for (std::int64_t i = 0; i < v; ++i) falling *= static_cast<double>(n - i);
  m.embeddings = falling * std::pow(p, f);
  return m;
}

double non_embedding_curve(const Complex2& pattern, double n, double p) {
  const double log_n = std::log(n);
  const double log_p = std::log(p);
  double sum = 0.0;
  for_each_face_subset(pattern, [&](std::uint32_t v, std::uint32_t f, std::uint32_t) {
    sum += std::exp(-(v * log_n + f * log_p));
  });
  return sum;
}

}  // namespace rcx
