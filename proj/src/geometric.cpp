#include "xyent/geometric.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <stdexcept>
#include <thread>
#include <vector>

namespace xyent {

double ProductParams::amp0(int site) const {
    const double v = p[site - 1];
    return ((sign_mask >> (site - 1)) & 1u) ? -v : v;
}

double ProductParams::amp1(int site) const {
    return std::sqrt(std::max(0.0, 1.0 - p[site - 1] * p[site - 1]));
}

std::uint64_t splitmix64(std::uint64_t seed, std::uint64_t counter) {
    std::uint64_t z = seed + (counter + 1) * 0x9E3779B97F4A7C15ull;
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
    return z ^ (z >> 31);
}

double unit_double(std::uint64_t bits) {
    return static_cast<double>(bits >> 11) * 0x1.0p-53;
}

namespace {

// Signed single-site amplitudes (c0, c1) with c1 >= 0 after normalization.
using Amps = std::array<std::array<double, 2>, 7>;

int site_count(Eigen::Index dim) {
    for (int n = 1; n <= 7; ++n)
        if ((Eigen::Index{1} << n) == dim) return n;
    throw std::invalid_argument("state length must be a power of two in 2..128");
}

double contract_all(const double* psi, int n, const Amps& a) {
    std::array<double, 128> buf;
    int len = 1 << n;
    std::copy(psi, psi + len, buf.begin());
    for (int site = n; site >= 1; --site) {  // site n occupies the LSB
        const double c0 = a[site - 1][0];
        const double c1 = a[site - 1][1];
        const int half = len >> 1;
        for (int m = 0; m < half; ++m) buf[m] = buf[2 * m] * c0 + buf[2 * m + 1] * c1;
        len = half;
    }
    return std::abs(buf[0]);
}

// Contraction of psi against every site except `site`; the two remaining
// components give the closed-form optimal update for that site.
std::array<double, 2> contract_all_but(const double* psi, int n, const Amps& a,
                                       int site) {
    std::array<double, 128> buf;
    int len = 1 << n;
    std::copy(psi, psi + len, buf.begin());
    for (int s = n; s > site; --s) {
        const double c0 = a[s - 1][0];
        const double c1 = a[s - 1][1];
        const int half = len >> 1;
        for (int m = 0; m < half; ++m) buf[m] = buf[2 * m] * c0 + buf[2 * m + 1] * c1;
        len = half;
    }
    std::array<double, 64> b0, b1;
    int half = len >> 1;
    for (int m = 0; m < half; ++m) {
        b0[m] = buf[2 * m];
        b1[m] = buf[2 * m + 1];
    }
    len = half;
    for (int s = site - 1; s >= 1; --s) {
        const double c0 = a[s - 1][0];
        const double c1 = a[s - 1][1];
        const int h = len >> 1;
        for (int m = 0; m < h; ++m) {
            b0[m] = b0[2 * m] * c0 + b0[2 * m + 1] * c1;
            b1[m] = b1[2 * m] * c0 + b1[2 * m + 1] * c1;
        }
        len = h;
    }
    return {b0[0], b1[0]};
}

struct Candidate {
    double lam = -1.0;
    std::int64_t index = 0;  // global sample index, tie breaker
    Amps amps{};
};

bool better(const Candidate& a, const Candidate& b) {
    if (a.lam != b.lam) return a.lam > b.lam;
    return a.index < b.index;
}

// Keeps the k best candidates ordered by (lam desc, index asc).
struct TopK {
    std::size_t k;
    std::vector<Candidate> items;

    explicit TopK(std::size_t k_) : k(k_) { items.reserve(k + 1); }

    void offer(const Candidate& c) {
        if (items.size() == k && !better(c, items.back())) return;
        auto pos = std::upper_bound(items.begin(), items.end(), c, better);
        items.insert(pos, c);
        if (items.size() > k) items.pop_back();
    }
};

void sample_range(const double* psi, int n, std::uint64_t seed, std::int64_t lo,
                  std::int64_t hi, TopK& top) {
    Amps amps{};
    for (std::int64_t s = lo; s < hi; ++s) {
        for (int d = 0; d < n; ++d) {
            const double p = unit_double(
                splitmix64(seed, static_cast<std::uint64_t>(s) * 7u + d));
            amps[d] = {p, std::sqrt(std::max(0.0, 1.0 - p * p))};
        }
        const double lam = contract_all(psi, n, amps);
        top.offer({lam, s, amps});
    }
}

// Alternating closed-form ascent; each accepted update sets the overlap to
// the contraction norm, which can never fall below the previous value.
void refine(const double* psi, int n, Candidate& c, int iters, double conv_tol) {
    for (int it = 0; it < iters; ++it) {
        const double before = c.lam;
        for (int site = 1; site <= n; ++site) {
            const auto g = contract_all_but(psi, n, c.amps, site);
            const double norm = std::hypot(g[0], g[1]);
            if (norm <= 1e-300) continue;  // psi orthogonal to this slice
            if (norm + 1e-9 < c.lam)
                throw std::logic_error("geometric refinement decreased the overlap");
            double c0 = g[0] / norm;
            double c1 = g[1] / norm;
            if (c1 < 0.0 || (c1 == 0.0 && c0 < 0.0)) {
                c0 = -c0;
                c1 = -c1;
            }
            c.amps[site - 1] = {c0, c1};
            c.lam = norm;
        }
        if (c.lam - before < conv_tol) break;
    }
}

void validate_config(const GESearchConfig& cfg) {
    std::ostringstream bad;
    if (cfg.samples < 1) bad << "samples must be >= 1; ";
    if (cfg.refine_iters < 0) bad << "refine_iters must be >= 0; ";
    if (cfg.refine_top < 0) bad << "refine_top must be >= 0; ";
    if (!(cfg.conv_tol >= 0.0)) bad << "conv_tol must be >= 0; ";
    const std::string msg = bad.str();
    if (!msg.empty()) throw std::invalid_argument("invalid GESearchConfig: " + msg);
}

}  // namespace

double overlap(const Vec& psi, const ProductParams& params) {
    const int n = site_count(psi.size());
    if (n != params.n_sites)
        throw std::invalid_argument("product state has wrong number of sites");
    if (std::abs(psi.norm() - 1.0) > 1e-10)
        throw std::invalid_argument("state must be normalized to 1e-10");
    Amps amps{};
    for (int site = 1; site <= n; ++site) {
        if (!(params.p[site - 1] >= 0.0 && params.p[site - 1] <= 1.0))
            throw std::invalid_argument("product amplitude outside [0,1]");
        amps[site - 1] = {params.amp0(site), params.amp1(site)};
    }
    return contract_all(psi.data(), n, amps);
}

GEResult geometric_entanglement(const Vec& psi, const GESearchConfig& cfg,
                                int threads) {
    const int n = site_count(psi.size());
    if (std::abs(psi.norm() - 1.0) > 1e-10)
        throw std::invalid_argument("state must be normalized to 1e-10");
    validate_config(cfg);

    const std::int64_t want_top = cfg.refine_top > 0 ? cfg.refine_top : 1;
    const std::size_t keep =
        static_cast<std::size_t>(std::max<std::int64_t>(1, std::min(want_top, cfg.samples)));

    TopK top(keep);
    threads = std::clamp(threads, 1, 64);
    if (threads == 1 || cfg.samples < 4096) {
        sample_range(psi.data(), n, cfg.seed, 0, cfg.samples, top);
    } else {
        // Disjoint index ranges share the counter-based stream, so the
        // merged result is identical to a single-threaded pass.
        std::vector<TopK> parts(threads, TopK(keep));
        std::vector<std::thread> pool;
        const std::int64_t chunk = (cfg.samples + threads - 1) / threads;
        for (int t = 0; t < threads; ++t) {
            const std::int64_t lo = t * chunk;
            const std::int64_t hi = std::min<std::int64_t>(cfg.samples, lo + chunk);
            if (lo >= hi) break;
            pool.emplace_back([&, t, lo, hi] {
                sample_range(psi.data(), n, cfg.seed, lo, hi, parts[t]);
            });
        }
        for (auto& th : pool) th.join();
        for (const auto& part : parts)
            for (const auto& c : part.items) top.offer(c);
    }

    std::vector<Candidate> finalists = top.items;
    if (cfg.refine_top > 0 && cfg.refine_iters > 0)
        for (auto& c : finalists) refine(psi.data(), n, c, cfg.refine_iters, cfg.conv_tol);

    // Ties between finalists resolve by their pre-refinement rank.
    std::size_t best = 0;
    for (std::size_t c = 1; c < finalists.size(); ++c)
        if (finalists[c].lam > finalists[best].lam) best = c;

    const Candidate& win = finalists[best];
    GEResult res;
    res.best_overlap = std::min(win.lam, 1.0);
    res.g = std::max(0.0, 1.0 - res.best_overlap * res.best_overlap);
    res.best.n_sites = n;
    for (int site = 1; site <= n; ++site) {
        const double c0 = win.amps[site - 1][0];
        res.best.p[site - 1] = std::clamp(std::abs(c0), 0.0, 1.0);
        if (c0 < 0.0) res.best.sign_mask |= 1u << (site - 1);
    }
    res.sign_used = res.best.sign_mask != 0;
    return res;
}

}  // namespace xyent
