#include "cgraph/canonical.hpp"

#include <algorithm>
#include <map>
#include <numeric>

namespace cgraph {

std::string CanonicalCode::hex() const {
  static constexpr char kDigits[] = "0123456789abcdef";
  std::string out;
  out.reserve(bytes.size() * 2);
  for (std::uint8_t b : bytes) {
    out.push_back(kDigits[b >> 4]);
    out.push_back(kDigits[b & 15]);
  }
  return out;
}

namespace {

void put16(std::vector<std::uint8_t>& out, int value) {
  out.push_back(static_cast<std::uint8_t>(value & 0xff));
  out.push_back(static_cast<std::uint8_t>((value >> 8) & 0xff));
}

// Color orders to try: order[k] is the original color placed at position k.
std::vector<std::vector<Color>> color_orders(ColorSet support,
                                             CanonicalMode mode) {
  std::vector<Color> fixed = support.to_vector();
  if (mode == CanonicalMode::ColorsFixed) return {fixed};
  std::vector<Color> movable;
  bool has_zero = support.contains(0);
  for (Color c : fixed) {
    if (c != 0) movable.push_back(c);
  }
  std::vector<std::vector<Color>> out;
  do {
    std::vector<Color> order;
    if (has_zero) order.push_back(0);
    order.insert(order.end(), movable.begin(), movable.end());
    out.push_back(std::move(order));
  } while (std::next_permutation(movable.begin(), movable.end()));
  return out;
}

// Length of the {a,b}-cycle through each vertex.
std::vector<int> cycle_lengths(const ColoredGraph& g, Color a, Color b) {
  const int n = g.vertex_count();
  std::vector<int> len(n, 0);
  std::vector<Vertex> members;
  for (Vertex s = 0; s < n; ++s) {
    if (len[s] != 0) continue;
    members.clear();
    Vertex x = s;
    do {
      members.push_back(x);
      Vertex y = g.neighbor(x, a);
      members.push_back(y);
      x = g.neighbor(y, b);
    } while (x != s);
    for (Vertex m : members) len[m] = static_cast<int>(members.size());
  }
  return len;
}

std::vector<int> rank_signatures(const std::vector<std::vector<int>>& sigs) {
  std::vector<std::vector<int>> sorted = sigs;
  std::sort(sorted.begin(), sorted.end());
  sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
  std::vector<int> rank(sigs.size());
  for (std::size_t v = 0; v < sigs.size(); ++v) {
    rank[v] = static_cast<int>(
        std::lower_bound(sorted.begin(), sorted.end(), sigs[v]) -
        sorted.begin());
  }
  return rank;
}

std::vector<int> refine(const ColoredGraph& g, const std::vector<Color>& order) {
  const int n = g.vertex_count();
  const int m = static_cast<int>(order.size());
  std::vector<std::vector<int>> sigs(n);
  for (int i = 0; i < m; ++i) {
    for (int j = i + 1; j < m; ++j) {
      std::vector<int> len = cycle_lengths(g, order[i], order[j]);
      for (Vertex v = 0; v < n; ++v) sigs[v].push_back(len[v]);
    }
  }
  std::vector<int> cls = rank_signatures(sigs);
  int classes = cls.empty() ? 0 : *std::max_element(cls.begin(), cls.end()) + 1;
  while (true) {
    for (Vertex v = 0; v < n; ++v) {
      sigs[v].assign(1, cls[v]);
      for (Color c : order) sigs[v].push_back(cls[g.neighbor(v, c)]);
    }
    std::vector<int> next = rank_signatures(sigs);
    int next_classes = *std::max_element(next.begin(), next.end()) + 1;
    cls = std::move(next);
    if (next_classes == classes) break;
    classes = next_classes;
  }
  return cls;
}

// Traversal code from a root; neighbors visited in color order.
std::vector<int> traversal_code(const ColoredGraph& g,
                                const std::vector<Color>& order, Vertex root) {
  const int n = g.vertex_count();
  std::vector<int> label(n, -1);
  std::vector<Vertex> by_label;
  by_label.reserve(n);
  label[root] = 0;
  by_label.push_back(root);
  for (std::size_t head = 0; head < by_label.size(); ++head) {
    Vertex x = by_label[head];
    for (Color c : order) {
      Vertex y = g.neighbor(x, c);
      if (label[y] < 0) {
        label[y] = static_cast<int>(by_label.size());
        by_label.push_back(y);
      }
    }
  }
  std::vector<int> code;
  code.reserve(static_cast<std::size_t>(n) * order.size());
  for (Vertex x : by_label) {
    for (Color c : order) code.push_back(label[g.neighbor(x, c)]);
  }
  return code;
}

}  // namespace

CanonicalCode canonical_form(const ColoredGraph& g, CanonicalMode mode) {
  if (!g.is_connected()) {
    throw GraphError("canonical_form: graph is disconnected");
  }
  std::vector<int> best;
  for (const std::vector<Color>& order : color_orders(g.support(), mode)) {
    std::vector<int> cls = refine(g, order);
    std::map<int, int> sizes;
    for (int c : cls) ++sizes[c];
    int chosen = -1;
    int chosen_size = g.vertex_count() + 1;
    for (auto [c, s] : sizes) {
      if (s < chosen_size) {
        chosen = c;
        chosen_size = s;
      }
    }
    for (Vertex root = 0; root < g.vertex_count(); ++root) {
      if (cls[root] != chosen) continue;
      std::vector<int> code = traversal_code(g, order, root);
      if (best.empty() || code < best) best = std::move(code);
    }
  }
  CanonicalCode out;
  out.mode = mode;
  out.bytes.push_back(static_cast<std::uint8_t>(mode));
  out.bytes.push_back(static_cast<std::uint8_t>(g.dimension()));
  std::uint32_t bits = g.support().bits();
  for (int k = 0; k < 4; ++k) {
    out.bytes.push_back(static_cast<std::uint8_t>((bits >> (8 * k)) & 0xff));
  }
  put16(out.bytes, g.vertex_count());
  for (int x : best) put16(out.bytes, x);
  return out;
}

CanonicalCode canonical_form_components(const ColoredGraph& g,
                                        CanonicalMode mode) {
  std::vector<CanonicalCode> parts;
  for (const auto& comp : g.components()) {
    parts.push_back(canonical_form(induced_subgraph(g, comp), mode));
  }
  std::sort(parts.begin(), parts.end());
  CanonicalCode out;
  out.mode = mode;
  put16(out.bytes, static_cast<int>(parts.size()));
  for (const CanonicalCode& p : parts) {
    put16(out.bytes, static_cast<int>(p.bytes.size()));
    out.bytes.insert(out.bytes.end(), p.bytes.begin(), p.bytes.end());
  }
  return out;
}

std::vector<std::vector<Vertex>> isomorphisms(const ColoredGraph& a,
                                              const ColoredGraph& b) {
  std::vector<std::vector<Vertex>> out;
  if (a.vertex_count() != b.vertex_count() || a.support() != b.support() ||
      a.dimension() != b.dimension()) {
    return out;
  }
  const int n = a.vertex_count();
  const std::vector<Color> colors = a.support().to_vector();
  for (Vertex target = 0; target < n; ++target) {
    std::vector<Vertex> map(n, -1);
    std::vector<bool> used(n, false);
    std::vector<Vertex> queue{0};
    map[0] = target;
    used[target] = true;
    bool ok = true;
    for (std::size_t head = 0; ok && head < queue.size(); ++head) {
      Vertex x = queue[head];
      for (Color c : colors) {
        Vertex y = a.neighbor(x, c);
        Vertex y_img = b.neighbor(map[x], c);
        if (map[y] < 0) {
          if (used[y_img]) {
            ok = false;
            break;
          }
          map[y] = y_img;
          used[y_img] = true;
          queue.push_back(y);
        } else if (map[y] != y_img) {
          ok = false;
          break;
        }
      }
    }
    if (ok && static_cast<int>(queue.size()) == n) out.push_back(std::move(map));
  }
  return out;
}

}  // namespace cgraph
