// Test-only oracles, deliberately coded independently of the library paths
// they check: a full-matrix circuit construction, a 2^n subset scan for
// vertex covers, and seeded random graph generators.
#pragma once

#include <array>
#include <bit>
#include <cmath>
#include <complex>
#include <cstdint>
#include <vector>

#include "topobench/graph.hpp"
#include "topobench/qubo.hpp"
#include "topobench/rng.hpp"

namespace oracle {

using topobench::Edge;
using topobench::Graph;
using topobench::NodeId;

// ---------------------------------------------------------------------------
// Graph builders
// ---------------------------------------------------------------------------

inline Graph make_graph(std::vector<NodeId> nodes, std::vector<Edge> edges) {
    return Graph(std::move(nodes), edges);
}

inline Graph path_graph(int n) {
    std::vector<NodeId> nodes;
    std::vector<Edge> edges;
    for (int i = 0; i < n; ++i) {
        nodes.push_back(i);
        if (i + 1 < n) edges.emplace_back(i, i + 1);
    }
    return Graph(std::move(nodes), edges);
}

inline Graph cycle_graph(int n) {
    std::vector<NodeId> nodes;
    std::vector<Edge> edges;
    for (int i = 0; i < n; ++i) {
        nodes.push_back(i);
        edges.emplace_back(i, (i + 1) % n);
    }
    return Graph(std::move(nodes), edges);
}

inline Graph star_graph(int n) {  // hub 0 plus n-1 leaves
    std::vector<NodeId> nodes{0};
    std::vector<Edge> edges;
    for (int i = 1; i < n; ++i) {
        nodes.push_back(i);
        edges.emplace_back(0, i);
    }
    return Graph(std::move(nodes), edges);
}

inline Graph complete_graph(int n) {
    std::vector<NodeId> nodes;
    std::vector<Edge> edges;
    for (int i = 0; i < n; ++i) {
        nodes.push_back(i);
        for (int j = i + 1; j < n; ++j) edges.emplace_back(i, j);
    }
    return Graph(std::move(nodes), edges);
}

inline Graph edgeless_graph(int n) {
    std::vector<NodeId> nodes;
    for (int i = 0; i < n; ++i) nodes.push_back(i);
    return Graph(std::move(nodes), {});
}

// Random spanning tree plus independent extra edges; always connected.
inline Graph random_connected_graph(int n, topobench::SplitMix64& rng,
                                    double extra_edge_prob = 0.25) {
    std::vector<NodeId> nodes;
    std::vector<Edge> edges;
    for (int v = 0; v < n; ++v) {
        nodes.push_back(v);
        if (v > 0)
            edges.emplace_back(
                static_cast<NodeId>(rng.next_below(
                    static_cast<std::uint64_t>(v))),
                v);
    }
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if (rng.next_unit() < extra_edge_prob) edges.emplace_back(i, j);
    return Graph(std::move(nodes), edges);
}

// Erdos-Renyi G(n, p); may be disconnected.
inline Graph random_graph(int n, double edge_prob,
                          topobench::SplitMix64& rng) {
    std::vector<NodeId> nodes;
    std::vector<Edge> edges;
    for (int i = 0; i < n; ++i) nodes.push_back(i);
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if (rng.next_unit() < edge_prob) edges.emplace_back(i, j);
    return Graph(std::move(nodes), edges);
}

// ---------------------------------------------------------------------------
// Independent vertex-cover enumeration (bitmask over node positions)
// ---------------------------------------------------------------------------

inline bool mask_is_cover(const Graph& g, std::uint64_t mask) {
    for (const auto& [u, v] : g.edges()) {
        std::uint64_t iu = 1ULL << g.index_of(u);
        std::uint64_t iv = 1ULL << g.index_of(v);
        if ((mask & iu) == 0 && (mask & iv) == 0) return false;
    }
    return true;
}

struct CoverScan {
    int min_size = 0;
    std::vector<std::uint64_t> minimum_masks;  // every cover of minimum size
};

inline CoverScan scan_all_covers(const Graph& g) {
    int n = g.node_count();
    CoverScan out;
    out.min_size = n + 1;
    for (std::uint64_t mask = 0; mask < (1ULL << n); ++mask) {
        if (!mask_is_cover(g, mask)) continue;
        int size = std::popcount(mask);
        if (size < out.min_size) {
            out.min_size = size;
            out.minimum_masks.assign(1, mask);
        } else if (size == out.min_size) {
            out.minimum_masks.push_back(mask);
        }
    }
    return out;
}

// ---------------------------------------------------------------------------
// Dense complex matrices and the full-circuit oracle
// ---------------------------------------------------------------------------

using Complex = std::complex<double>;
using CMatrix = std::vector<Complex>;  // row-major, d x d

inline CMatrix cmat_identity(std::size_t d) {
    CMatrix m(d * d, Complex{0.0, 0.0});
    for (std::size_t i = 0; i < d; ++i) m[i * d + i] = 1.0;
    return m;
}

inline CMatrix cmat_mul(const CMatrix& a, const CMatrix& b, std::size_t d) {
    CMatrix c(d * d, Complex{0.0, 0.0});
    for (std::size_t i = 0; i < d; ++i)
        for (std::size_t k = 0; k < d; ++k) {
            Complex aik = a[i * d + k];
            if (aik == Complex{0.0, 0.0}) continue;
            for (std::size_t j = 0; j < d; ++j)
                c[i * d + j] += aik * b[k * d + j];
        }
    return c;
}

inline std::vector<Complex> cmat_vec(const CMatrix& a,
                                     const std::vector<Complex>& v,
                                     std::size_t d) {
    std::vector<Complex> out(d, Complex{0.0, 0.0});
    for (std::size_t i = 0; i < d; ++i)
        for (std::size_t j = 0; j < d; ++j) out[i] += a[i * d + j] * v[j];
    return out;
}

inline double cmat_inf_norm(const CMatrix& a, std::size_t d) {
    double best = 0.0;
    for (std::size_t i = 0; i < d; ++i) {
        double row = 0.0;
        for (std::size_t j = 0; j < d; ++j) row += std::abs(a[i * d + j]);
        best = std::max(best, row);
    }
    return best;
}

// Matrix exponential by scaled Taylor series with repeated squaring.
inline CMatrix cmat_expm(CMatrix a, std::size_t d) {
    int squarings = 0;
    double norm = cmat_inf_norm(a, d);
    while (norm > 0.5) {
        norm /= 2.0;
        ++squarings;
    }
    double scale = std::ldexp(1.0, -squarings);
    for (auto& x : a) x *= scale;

    CMatrix result = cmat_identity(d);
    CMatrix term = cmat_identity(d);
    for (int k = 1; k <= 24; ++k) {
        term = cmat_mul(term, a, d);
        for (auto& x : term) x /= static_cast<double>(k);
        for (std::size_t i = 0; i < d * d; ++i) result[i] += term[i];
    }
    for (int s = 0; s < squarings; ++s) result = cmat_mul(result, result, d);
    return result;
}

// Operator acting as `op` on `qubit` and identity elsewhere, under the
// bit-i-of-index convention.
inline CMatrix single_qubit_operator(
    const std::array<std::array<Complex, 2>, 2>& op, int qubit, int n) {
    std::size_t d = std::size_t{1} << n;
    CMatrix m(d * d, Complex{0.0, 0.0});
    std::uint64_t bit = 1ULL << qubit;
    for (std::uint64_t r = 0; r < d; ++r)
        for (std::uint64_t c = 0; c < d; ++c) {
            if ((r & ~bit) != (c & ~bit)) continue;
            m[r * d + c] = op[(r & bit) ? 1 : 0][(c & bit) ? 1 : 0];
        }
    return m;
}

inline const std::array<std::array<Complex, 2>, 2> kPauliX{
    {{Complex{0, 0}, Complex{1, 0}}, {Complex{1, 0}, Complex{0, 0}}}};
inline const std::array<std::array<Complex, 2>, 2> kPauliZ{
    {{Complex{1, 0}, Complex{0, 0}}, {Complex{0, 0}, Complex{-1, 0}}}};

// Full 2^n x 2^n matrices of the cost and mixer Hamiltonians, built from
// Kronecker-style operator embeddings rather than per-index bit arithmetic.
inline CMatrix cost_hamiltonian_matrix(const topobench::IsingHamiltonian& h) {
    std::size_t d = std::size_t{1} << h.n;
    CMatrix m(d * d, Complex{0.0, 0.0});
    for (int i = 0; i < h.n; ++i) {
        CMatrix zi = single_qubit_operator(kPauliZ, i, h.n);
        double coeff = h.h[static_cast<std::size_t>(i)];
        for (std::size_t k = 0; k < d * d; ++k) m[k] += coeff * zi[k];
    }
    for (const auto& [i, j, c] : h.j) {
        CMatrix zz = cmat_mul(single_qubit_operator(kPauliZ, i, h.n),
                              single_qubit_operator(kPauliZ, j, h.n), d);
        for (std::size_t k = 0; k < d * d; ++k) m[k] += c * zz[k];
    }
    return m;
}

inline CMatrix mixer_hamiltonian_matrix(int n) {
    std::size_t d = std::size_t{1} << n;
    CMatrix m(d * d, Complex{0.0, 0.0});
    for (int i = 0; i < n; ++i) {
        CMatrix xi = single_qubit_operator(kPauliX, i, n);
        for (std::size_t k = 0; k < d * d; ++k) m[k] += xi[k];
    }
    return m;
}

// Reference p=1 circuit: expm(-i beta H_M) expm(-i gamma H_C) |+...+>.
inline std::vector<Complex> reference_qaoa_state(
    const topobench::IsingHamiltonian& h, double gamma, double beta) {
    std::size_t d = std::size_t{1} << h.n;
    CMatrix hc = cost_hamiltonian_matrix(h);
    CMatrix hm = mixer_hamiltonian_matrix(h.n);
    for (auto& x : hc) x *= Complex{0.0, -gamma};
    for (auto& x : hm) x *= Complex{0.0, -beta};
    CMatrix u_phase = cmat_expm(hc, d);
    CMatrix u_mixer = cmat_expm(hm, d);
    std::vector<Complex> state(d, Complex{1.0 / std::sqrt(static_cast<double>(d)), 0.0});
    state = cmat_vec(u_phase, state, d);
    state = cmat_vec(u_mixer, state, d);
    return state;
}

}  // namespace oracle
