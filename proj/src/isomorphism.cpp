#include "domcycle/isomorphism.hpp"

#include <algorithm>
#include <map>
#include <string>

#include "domcycle/errors.hpp"

namespace domcycle {
namespace {

using CountMatrix = std::vector<std::vector<int>>;

CountMatrix multiplicities(const Multigraph& g) {
  const auto n = static_cast<std::size_t>(g.vertex_count());
  CountMatrix mult(n, std::vector<int>(n, 0));
  for (const Edge& e : g.edges()) {
    ++mult[e.u][e.v];
    ++mult[e.v][e.u];
  }
  return mult;
}

/// Refines both graphs with a shared colour dictionary so colours are
/// comparable across them. Returns false if the colour class sizes diverge.
bool refine_jointly(const CountMatrix& ma, const CountMatrix& mb, std::vector<int>& ca, std::vector<int>& cb) {
  const std::size_t n = ma.size();
  ca.assign(n, 0);
  cb.assign(n, 0);
  std::size_t classes = 1;
  while (true) {
    std::map<std::vector<int>, int> dictionary;
    auto signature = [&](const CountMatrix& m, const std::vector<int>& colour, std::size_t v) {
      std::vector<int> sig{colour[v]};
      std::vector<std::pair<int, int>> nbrs;
      for (std::size_t w = 0; w < n; ++w) {
        if (m[v][w]) nbrs.emplace_back(colour[w], m[v][w]);
      }
      std::sort(nbrs.begin(), nbrs.end());
      for (auto [c, k] : nbrs) {
        sig.push_back(c);
        sig.push_back(k);
      }
      return sig;
    };
    std::vector<std::vector<int>> sa(n), sb(n);
    for (std::size_t v = 0; v < n; ++v) {
      sa[v] = signature(ma, ca, v);
      sb[v] = signature(mb, cb, v);
      dictionary.emplace(sa[v], 0);
      dictionary.emplace(sb[v], 0);
    }
    int next = 0;
    for (auto& [sig, id] : dictionary) id = next++;
    std::vector<int> count(dictionary.size(), 0);
    for (std::size_t v = 0; v < n; ++v) {
      ca[v] = dictionary[sa[v]];
      cb[v] = dictionary[sb[v]];
      ++count[static_cast<std::size_t>(ca[v])];
      --count[static_cast<std::size_t>(cb[v])];
    }
    if (std::any_of(count.begin(), count.end(), [](int c) { return c != 0; })) return false;
    if (dictionary.size() == classes) return true;
    classes = dictionary.size();
  }
}

class Matcher {
 public:
  Matcher(const CountMatrix& ma, const CountMatrix& mb, const std::vector<int>& ca, const std::vector<int>& cb)
      : ma_(ma), mb_(mb), ca_(ca), cb_(cb), map_(ma.size(), -1), taken_(ma.size(), 0) {
    // small colour classes first
    std::map<int, int> class_size;
    for (int c : ca) ++class_size[c];
    order_.resize(ma.size());
    for (std::size_t v = 0; v < ma.size(); ++v) order_[v] = static_cast<VertexId>(v);
    std::stable_sort(order_.begin(), order_.end(), [&](VertexId x, VertexId y) {
      return std::make_pair(class_size[ca[x]], ca[x]) < std::make_pair(class_size[ca[y]], ca[y]);
    });
  }

  bool run(std::size_t depth = 0) {
    if (depth == order_.size()) return true;
    const VertexId v = order_[depth];
    for (std::size_t w = 0; w < mb_.size(); ++w) {
      if (taken_[w] || cb_[w] != ca_[v]) continue;
      bool consistent = true;
      for (std::size_t k = 0; k < depth && consistent; ++k) {
        const VertexId u = order_[k];
        consistent = ma_[v][u] == mb_[w][map_[u]];
      }
      if (!consistent) continue;
      map_[v] = static_cast<VertexId>(w);
      taken_[w] = 1;
      if (run(depth + 1)) return true;
      taken_[w] = 0;
      map_[v] = -1;
    }
    return false;
  }

  const std::vector<VertexId>& mapping() const { return map_; }

 private:
  const CountMatrix& ma_;
  const CountMatrix& mb_;
  const std::vector<int>& ca_;
  const std::vector<int>& cb_;
  std::vector<VertexId> map_;
  std::vector<char> taken_;
  std::vector<VertexId> order_;
};

}  // namespace

IsomorphismResult are_isomorphic(const Multigraph& a, const Multigraph& b) {
  if (a.vertex_count() > kMaxIsomorphismVertices || b.vertex_count() > kMaxIsomorphismVertices) {
    throw GraphError(ErrorCode::TooLarge, "isomorphism test limited to " + std::to_string(kMaxIsomorphismVertices) + " vertices");
  }
  if (a.vertex_count() != b.vertex_count() || a.edge_count() != b.edge_count()) return {};
  const CountMatrix ma = multiplicities(a);
  const CountMatrix mb = multiplicities(b);
  std::vector<int> ca, cb;
  if (!refine_jointly(ma, mb, ca, cb)) return {};
  Matcher matcher(ma, mb, ca, cb);
  if (!matcher.run()) return {};
  return IsomorphismResult{true, matcher.mapping()};
}

bool is_isomorphism(const Multigraph& a, const Multigraph& b, const std::vector<VertexId>& mapping) {
  const int n = a.vertex_count();
  if (b.vertex_count() != n || a.edge_count() != b.edge_count() || static_cast<int>(mapping.size()) != n) return false;
  std::vector<char> hit(static_cast<std::size_t>(n), 0);
  for (VertexId v : mapping) {
    if (v < 0 || v >= n || hit[v]) return false;
    hit[v] = 1;
  }
  const CountMatrix ma = multiplicities(a);
  const CountMatrix mb = multiplicities(b);
  for (VertexId u = 0; u < n; ++u) {
    for (VertexId v = 0; v < n; ++v) {
      if (ma[u][v] != mb[mapping[u]][mapping[v]]) return false;
    }
  }
  return true;
}

}  // namespace domcycle
