#pragma once

#include <string>
#include <vector>

namespace xyent {

// The two 7-site geometries. Sites are numbered 1..7 everywhere in the
// public interface. On Star7 the central site is 4 and the six border
// sites form the ring 1-2-5-7-6-3-1, so that (1,2) is a nearest-neighbour
// pair, (1,5) next-nearest and (1,7) the farthest pair on the ring.
enum class LatticeKind { Chain7, Star7 };

constexpr int kNumSites = 7;
constexpr int kCenterSite = 4;

struct Edge {
    int i = 0;              // 1..7, i < j
    int j = 0;
    double coupling = 1.0;  // J_ij in units of J
};

// Model parameters. lambda = h/J is the dimensionless transverse field,
// gamma the anisotropy (1 = Ising, 0 = isotropic XX), alpha the impurity
// strength scaling the central couplings as J' = (1+alpha) J.
struct LatticeSpec {
    LatticeKind kind = LatticeKind::Star7;
    double alpha = 0.0;
    double gamma = 1.0;
    double lambda = 0.0;
};

const char* to_string(LatticeKind kind);
LatticeKind lattice_kind_from_string(const std::string& name);

// Throws std::invalid_argument listing every violated constraint
// (gamma in [0,1], lambda >= 0, alpha > -1).
void validate(const LatticeSpec& spec);

// Edge list in canonical order (sorted by (i,j)). Chain7 has no central
// site, so alpha is ignored there; a note is appended to *warnings when a
// nonzero alpha is dropped. Throws on alpha <= -1.
std::vector<Edge> build_edges(LatticeKind kind, double alpha,
                              std::vector<std::string>* warnings = nullptr);

// BFS shortest-path distance over the given edges; -1 if disconnected.
int graph_distance(const std::vector<Edge>& edges, int i, int j);

}  // namespace xyent
