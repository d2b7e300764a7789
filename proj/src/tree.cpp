#include "lamkit/tree.hpp"

#include <algorithm>
#include <functional>
#include <queue>
#include <set>
#include <stdexcept>

namespace lamkit {

PlaneBicoloredTree::PlaneBicoloredTree(std::vector<RegionKind> colors, std::vector<std::array<int, 2>> edges,
                                       std::vector<std::vector<int>> rotation)
    : colors_(std::move(colors)), edges_(std::move(edges)), rotation_(std::move(rotation)) {
  const std::size_t n = colors_.size();
  if (n == 0 || edges_.size() + 1 != n) throw std::invalid_argument("a tree needs exactly one more vertex than edges");
  if (rotation_.size() != n) throw std::invalid_argument("one rotation list per vertex required");
  std::vector<std::vector<int>> incident(n);
  for (std::size_t e = 0; e < edges_.size(); ++e) {
    auto [u, v] = edges_[e];
    if (u < 0 || v < 0 || static_cast<std::size_t>(u) >= n || static_cast<std::size_t>(v) >= n || u == v) {
      throw std::invalid_argument("edge endpoint out of range");
    }
    if (colors_[static_cast<std::size_t>(u)] == colors_[static_cast<std::size_t>(v)]) {
      throw std::invalid_argument("edge joins two vertices of the same color");
    }
    incident[static_cast<std::size_t>(u)].push_back(static_cast<int>(e));
    incident[static_cast<std::size_t>(v)].push_back(static_cast<int>(e));
  }
  for (std::size_t v = 0; v < n; ++v) {
    std::vector<int> a = incident[v];
    std::vector<int> b = rotation_[v];
    std::sort(a.begin(), a.end());
    std::sort(b.begin(), b.end());
    if (a != b) throw std::invalid_argument("rotation list does not match incident edges");
  }
  std::vector<bool> seen(n, false);
  std::queue<int> todo;
  todo.push(0);
  seen[0] = true;
  std::size_t reached = 1;
  while (!todo.empty()) {
    int v = todo.front();
    todo.pop();
    for (int e : rotation_[static_cast<std::size_t>(v)]) {
      int w = edges_[static_cast<std::size_t>(e)][0] == v ? edges_[static_cast<std::size_t>(e)][1]
                                                           : edges_[static_cast<std::size_t>(e)][0];
      if (!seen[static_cast<std::size_t>(w)]) {
        seen[static_cast<std::size_t>(w)] = true;
        ++reached;
        todo.push(w);
      }
    }
  }
  if (reached != n) throw std::invalid_argument("tree is not connected");
}

std::vector<ContourStep> PlaneBicoloredTree::contour(int from, int edge) const {
  const std::size_t steps = 2 * edges_.size();
  std::vector<ContourStep> walk;
  walk.reserve(steps);
  int cur = from;
  int e = edge;
  for (std::size_t i = 0; i < steps; ++i) {
    const auto& ends = edges_[static_cast<std::size_t>(e)];
    if (ends[0] != cur && ends[1] != cur) throw std::invalid_argument("edge is not incident to the start vertex");
    int to = ends[0] == cur ? ends[1] : ends[0];
    walk.push_back({cur, to, e});
    const auto& rot = rotation(to);
    auto pos = std::find(rot.begin(), rot.end(), e);
    ++pos;
    if (pos == rot.end()) pos = rot.begin();
    cur = to;
    e = *pos;
  }
  return walk;
}

std::vector<int> PlaneBicoloredTree::parents() const {
  std::vector<int> parent(colors_.size(), -2);
  parent[0] = -1;
  std::queue<int> todo;
  todo.push(0);
  while (!todo.empty()) {
    int v = todo.front();
    todo.pop();
    for (int e : rotation(v)) {
      int w = edges_[static_cast<std::size_t>(e)][0] == v ? edges_[static_cast<std::size_t>(e)][1]
                                                           : edges_[static_cast<std::size_t>(e)][0];
      if (parent[static_cast<std::size_t>(w)] == -2) {
        parent[static_cast<std::size_t>(w)] = v;
        todo.push(w);
      }
    }
  }
  return parent;
}

std::string CanonicalCode::str() const {
  std::string out;
  for (std::size_t i = 0; i + 1 < word.size(); i += 2) {
    if (i > 0) out += ' ';
    out += word[i] == 0 ? 'C' : 'R';
    out += std::to_string(word[i + 1]);
  }
  return out;
}

CanonicalCode canonical_code(const PlaneBicoloredTree& t) {
  const int m = static_cast<int>(t.edge_count());
  const int len = 2 * m;
  CanonicalCode best;
  bool have = false;
  for (std::size_t v = 0; v < t.vertex_count(); ++v) {
    for (int e : t.rotation(static_cast<int>(v))) {
      auto walk = t.contour(static_cast<int>(v), e);
      std::vector<std::array<int, 2>> at(static_cast<std::size_t>(m), {-1, -1});
      for (int i = 0; i < len; ++i) {
        auto& slot = at[static_cast<std::size_t>(walk[static_cast<std::size_t>(i)].edge)];
        (slot[0] < 0 ? slot[0] : slot[1]) = i;
      }
      CanonicalCode code;
      code.word.reserve(static_cast<std::size_t>(2 * len));
      for (int i = 0; i < len; ++i) {
        const auto& step = walk[static_cast<std::size_t>(i)];
        const auto& slot = at[static_cast<std::size_t>(step.edge)];
        int partner = slot[0] == i ? slot[1] : slot[0];
        code.word.push_back(t.color(step.from) == RegionKind::C ? 0 : 1);
        code.word.push_back(((partner - i) % len + len) % len);
      }
      if (!have || code < best) {
        best = std::move(code);
        have = true;
      }
    }
  }
  return best;
}

PlaneBicoloredTree tree_from_dyck(const std::string& dyck, RegionKind root_color) {
  std::vector<RegionKind> colors{root_color};
  std::vector<std::array<int, 2>> edges;
  std::vector<std::vector<int>> rotation(1);
  std::vector<int> stack{0};
  for (char c : dyck) {
    if (c == '(') {
      int parent = stack.back();
      int child = static_cast<int>(colors.size());
      int e = static_cast<int>(edges.size());
      colors.push_back(opposite(colors[static_cast<std::size_t>(parent)]));
      edges.push_back({parent, child});
      rotation[static_cast<std::size_t>(parent)].push_back(e);
      rotation.push_back({e});
      stack.push_back(child);
    } else if (c == ')') {
      if (stack.size() < 2) throw std::invalid_argument("unbalanced Dyck word");
      stack.pop_back();
    } else {
      throw std::invalid_argument("Dyck words use only '(' and ')'");
    }
  }
  if (stack.size() != 1) throw std::invalid_argument("unbalanced Dyck word");
  return PlaneBicoloredTree(std::move(colors), std::move(edges), std::move(rotation));
}

std::vector<std::string> dyck_words(int edges) {
  std::vector<std::string> out;
  std::string cur;
  std::function<void(int, int)> rec = [&](int open, int close) {
    if (open == edges && close == edges) {
      out.push_back(cur);
      return;
    }
    if (open < edges) {
      cur.push_back('(');
      rec(open + 1, close);
      cur.pop_back();
    }
    if (close < open) {
      cur.push_back(')');
      rec(open, close + 1);
      cur.pop_back();
    }
  };
  rec(0, 0);
  return out;
}

BigInt binomial(int n, int k) {
  if (k < 0 || k > n) return 0;
  BigInt r = 1;
  for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

BigInt catalan(int n) { return binomial(2 * n, n) / (n + 1); }

long euler_phi(long n) {
  long result = n;
  for (long p = 2; p * p <= n; ++p) {
    if (n % p != 0) continue;
    while (n % p == 0) n /= p;
    result -= result / p;
  }
  if (n > 1) result -= result / n;
  return result;
}

BigInt count_formula_numerator(int d) {
  if (d < 1) throw std::invalid_argument("count formula needs d >= 1");
  BigInt total = catalan(d);
  for (int n = 1; n < d; ++n) {
    if (d % n == 0) total += BigInt(euler_phi(d / n)) * binomial(2 * n, n);
  }
  return total;
}

BigInt count_formula(int d) {
  BigInt numerator = count_formula_numerator(d);
  if (numerator % d != 0) throw std::logic_error("count formula numerator not divisible by d");
  return numerator / d;
}

std::vector<CanonicalCode> enumerate_trees(int d) {
  if (d < 1) throw std::invalid_argument("trees need at least one edge");
  std::set<CanonicalCode> classes;
  for (const auto& word : dyck_words(d)) {
    for (RegionKind root : {RegionKind::C, RegionKind::R}) classes.insert(canonical_code(tree_from_dyck(word, root)));
  }
  return {classes.begin(), classes.end()};
}

}  // namespace lamkit
