#include "xyent/lattice.hpp"

#include <algorithm>
#include <queue>
#include <sstream>
#include <stdexcept>

namespace xyent {

const char* to_string(LatticeKind kind) {
    return kind == LatticeKind::Chain7 ? "chain7" : "star7";
}

LatticeKind lattice_kind_from_string(const std::string& name) {
    if (name == "chain7") return LatticeKind::Chain7;
    if (name == "star7") return LatticeKind::Star7;
    throw std::invalid_argument("unknown lattice kind '" + name +
                                "' (expected chain7 or star7)");
}

void validate(const LatticeSpec& spec) {
    std::ostringstream bad;
    if (!(spec.gamma >= 0.0 && spec.gamma <= 1.0))
        bad << "gamma=" << spec.gamma << " outside [0,1]; ";
    if (!(spec.lambda >= 0.0))
        bad << "lambda=" << spec.lambda << " negative; ";
    if (!(spec.alpha > -1.0))
        bad << "alpha=" << spec.alpha << " must exceed -1; ";
    const std::string msg = bad.str();
    if (!msg.empty()) throw std::invalid_argument("invalid LatticeSpec: " + msg);
}

std::vector<Edge> build_edges(LatticeKind kind, double alpha,
                              std::vector<std::string>* warnings) {
    if (!(alpha > -1.0))
        throw std::invalid_argument("impurity strength alpha must exceed -1, got " +
                                    std::to_string(alpha));
    std::vector<Edge> edges;
    if (kind == LatticeKind::Chain7) {
        if (alpha != 0.0 && warnings)
            warnings->push_back("chain7 has no central site; alpha=" +
                                std::to_string(alpha) + " ignored");
        for (int s = 1; s < kNumSites; ++s) edges.push_back({s, s + 1, 1.0});
    } else {
        // Border ring 1-2-5-7-6-3-1 plus six spokes to the center (site 4).
        const int ring[6][2] = {{1, 2}, {2, 5}, {5, 7}, {6, 7}, {3, 6}, {1, 3}};
        for (auto& e : ring) edges.push_back({std::min(e[0], e[1]), std::max(e[0], e[1]), 1.0});
        for (int s = 1; s <= kNumSites; ++s) {
            if (s == kCenterSite) continue;
            edges.push_back({std::min(s, kCenterSite), std::max(s, kCenterSite), 1.0 + alpha});
        }
    }
    std::sort(edges.begin(), edges.end(), [](const Edge& a, const Edge& b) {
        return std::pair(a.i, a.j) < std::pair(b.i, b.j);
    });
    return edges;
}

int graph_distance(const std::vector<Edge>& edges, int i, int j) {
    if (i == j) return 0;
    std::vector<std::vector<int>> adj(kNumSites + 1);
    for (const auto& e : edges) {
        adj[e.i].push_back(e.j);
        adj[e.j].push_back(e.i);
    }
    std::vector<int> dist(kNumSites + 1, -1);
    std::queue<int> q;
    dist[i] = 0;
    q.push(i);
    while (!q.empty()) {
        int u = q.front();
        q.pop();
        for (int v : adj[u])
            if (dist[v] < 0) {
                dist[v] = dist[u] + 1;
                if (v == j) return dist[v];
                q.push(v);
            }
    }
    return dist[j];
}

}  // namespace xyent
