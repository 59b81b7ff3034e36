#include "gh/mub.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <complex>
#include <cstdint>
#include <stdexcept>
#include <vector>

#include "gh/quantum.hpp"

namespace gh {
namespace {

// Pauli strings modulo phase, as length-2n bit vectors: the upper n bits
// flag an X component per qubit, the lower n bits a Z component (qubit 0
// at the top of each half). Commutation is the symplectic form being zero.
bool commute_vec(uint32_t u, uint32_t v, int n) {
    const uint32_t mask = (1u << n) - 1;
    const uint32_t xu = u >> n, zu = u & mask;
    const uint32_t xv = v >> n, zv = v & mask;
    return ((std::popcount(xu & zv) + std::popcount(zu & xv)) & 1) == 0;
}

PauliString vector_to_pauli(uint32_t v, int n) {
    static const int kLetter[4] = {0, 3, 1, 2};  // (x,z) = 00->I, 01->Z, 10->X, 11->Y
    PauliString p;
    p.letters.resize(n);
    for (int k = 0; k < n; ++k) {
        const int xb = (v >> (n + (n - 1 - k))) & 1;
        const int zb = (v >> (n - 1 - k)) & 1;
        p.letters[k] = kLetter[(xb << 1) | zb];
    }
    return p;
}

// Partition the 4^n - 1 nonzero vectors into 2^n + 1 isotropic n-dimensional
// subspaces by backtracking. Each class is grown from its smallest member
// with strictly increasing generators, so the enumeration is deterministic
// and duplicate generator orders are never tried.
struct SpreadSearch {
    int n;
    uint32_t total;
    std::vector<char> used;
    std::vector<std::vector<uint32_t>> classes;

    explicit SpreadSearch(int n_) : n(n_), total(1u << (2 * n_)), used(total, 0) {}

    bool solve() {
        uint32_t seed = 0;
        for (uint32_t v = 1; v < total; ++v) {
            if (!used[v]) {
                seed = v;
                break;
            }
        }
        if (seed == 0) return true;
        used[seed] = 1;
        std::vector<uint32_t> span{seed};
        std::vector<uint32_t> gens{seed};
        const bool ok = extend(span, gens);
        if (!ok) used[seed] = 0;
        return ok;
    }

    bool extend(std::vector<uint32_t>& span, std::vector<uint32_t>& gens) {
        if (static_cast<int>(gens.size()) == n) {
            std::vector<uint32_t> cls = span;
            std::sort(cls.begin(), cls.end());
            classes.push_back(std::move(cls));
            if (solve()) return true;
            classes.pop_back();
            return false;
        }
        for (uint32_t c = gens.back() + 1; c < total; ++c) {
            if (used[c]) continue;
            bool ok = true;
            for (uint32_t g : gens) {
                if (!commute_vec(c, g, n)) {
                    ok = false;
                    break;
                }
            }
            if (!ok) continue;
            std::vector<uint32_t> fresh{c};
            for (uint32_t e : span) {
                const uint32_t w = c ^ e;
                if (used[w]) {
                    ok = false;
                    break;
                }
                fresh.push_back(w);
            }
            if (!ok) continue;
            for (uint32_t w : fresh) used[w] = 1;
            const size_t before = span.size();
            span.insert(span.end(), fresh.begin(), fresh.end());
            gens.push_back(c);
            if (extend(span, gens)) return true;
            gens.pop_back();
            span.resize(before);
            for (uint32_t w : fresh) used[w] = 0;
        }
        return false;
    }
};

// Greedy independent subset of a (sorted) class, used as the generators
// whose joint eigenspaces define the basis. Deterministic by construction.
std::vector<uint32_t> greedy_gens(const std::vector<uint32_t>& cls, int n) {
    const uint32_t total = 1u << (2 * n);
    std::vector<char> in_span(total, 0);
    in_span[0] = 1;
    std::vector<uint32_t> gens;
    for (uint32_t e : cls) {
        if (in_span[e]) continue;
        std::vector<uint32_t> cur;
        for (uint32_t v = 0; v < total; ++v) {
            if (in_span[v]) cur.push_back(v);
        }
        for (uint32_t v : cur) in_span[v ^ e] = 1;
        gens.push_back(e);
        if (static_cast<int>(gens.size()) == n) break;
    }
    if (static_cast<int>(gens.size()) != n) {
        throw std::logic_error("commuting class does not span the expected dimension");
    }
    return gens;
}

using Mat = std::vector<std::vector<cplx>>;

Mat pauli_matrix(const PauliString& p) {
    static const cplx kI(0.0, 1.0);
    static const cplx kSigma[4][2][2] = {
        {{1, 0}, {0, 1}},      // I
        {{0, 1}, {1, 0}},      // X
        {{0, -kI}, {kI, 0}},   // Y
        {{1, 0}, {0, -1}},     // Z
    };
    const int n = static_cast<int>(p.letters.size());
    const uint32_t dim = 1u << n;
    cplx scale(1.0, 0.0);
    for (int t = 0; t < (p.phase & 3); ++t) scale *= kI;
    Mat m(dim, std::vector<cplx>(dim, 0.0));
    for (uint32_t i = 0; i < dim; ++i) {
        for (uint32_t j = 0; j < dim; ++j) {
            cplx v = scale;
            for (int k = 0; k < n && v != cplx(0.0, 0.0); ++k) {
                const int bi = (i >> (n - 1 - k)) & 1;
                const int bj = (j >> (n - 1 - k)) & 1;
                v *= kSigma[p.letters[k]][bi][bj];
            }
            m[i][j] = v;
        }
    }
    return m;
}

Mat mat_mul(const Mat& a, const Mat& b) {
    const size_t dim = a.size();
    Mat r(dim, std::vector<cplx>(dim, 0.0));
    for (size_t i = 0; i < dim; ++i) {
        for (size_t k = 0; k < dim; ++k) {
            if (a[i][k] == cplx(0.0, 0.0)) continue;
            for (size_t j = 0; j < dim; ++j) r[i][j] += a[i][k] * b[k][j];
        }
    }
    return r;
}

// Rank-one projector -> its range vector, phase fixed so the first nonzero
// amplitude is real and positive.
StateVector projector_column(const Mat& p, int n) {
    const uint32_t dim = 1u << n;
    cplx trace(0.0, 0.0);
    for (uint32_t i = 0; i < dim; ++i) trace += p[i][i];
    if (std::abs(trace - cplx(1.0, 0.0)) > 1e-9) {
        throw std::logic_error("joint eigenspace is not one-dimensional");
    }
    uint32_t best = 0;
    double best_diag = -1.0;
    for (uint32_t j = 0; j < dim; ++j) {
        const double d = p[j][j].real();
        if (d > best_diag) {
            best_diag = d;
            best = j;
        }
    }
    StateVector s;
    s.qubit_count = n;
    s.amp.resize(dim);
    double norm = 0.0;
    for (uint32_t i = 0; i < dim; ++i) {
        s.amp[i] = p[i][best];
        norm += std::norm(s.amp[i]);
    }
    norm = std::sqrt(norm);
    for (auto& a : s.amp) a /= norm;
    for (uint32_t i = 0; i < dim; ++i) {
        if (std::abs(s.amp[i]) > 1e-9) {
            const cplx rot = std::conj(s.amp[i]) / std::abs(s.amp[i]);
            for (auto& a : s.amp) a *= rot;
            break;
        }
    }
    return s;
}

StateVector bell_pair() {
    StateVector b;
    b.qubit_count = 2;
    b.amp = {cplx(1.0 / std::sqrt(2.0), 0.0), 0.0, 0.0, cplx(1.0 / std::sqrt(2.0), 0.0)};
    return b;
}

void check_family_args(const MubFamily& family, int a, uint32_t x) {
    const uint32_t dim = 1u << family.n;
    if (a < 0 || a > static_cast<int>(dim)) {
        throw std::invalid_argument("basis index out of range: " + std::to_string(a));
    }
    if (x >= dim) {
        throw std::invalid_argument("state index out of range: " + std::to_string(x));
    }
}

}  // namespace

MubFamily build_mub(int n) {
    if (n < 1 || n > 3) {
        throw std::invalid_argument("mutually unbiased bases are built for 1 <= n <= 3, got " +
                                    std::to_string(n));
    }
    SpreadSearch search(n);
    if (!search.solve()) {
        throw std::logic_error("no partition into commuting classes found");
    }

    MubFamily family;
    family.n = n;
    const uint32_t dim = 1u << n;
    for (const auto& cls : search.classes) {
        std::vector<PauliString> ops;
        ops.reserve(cls.size());
        for (uint32_t v : cls) ops.push_back(vector_to_pauli(v, n));
        family.classes.push_back(std::move(ops));

        const std::vector<uint32_t> gens = greedy_gens(cls, n);
        std::vector<Mat> gen_mats;
        gen_mats.reserve(gens.size());
        for (uint32_t g : gens) gen_mats.push_back(pauli_matrix(vector_to_pauli(g, n)));

        std::vector<StateVector> basis(dim);
        for (uint32_t x = 0; x < dim; ++x) {
            Mat p(dim, std::vector<cplx>(dim, 0.0));
            for (uint32_t i = 0; i < dim; ++i) p[i][i] = 1.0;
            for (int k = 0; k < n; ++k) {
                const double sign = ((x >> (n - 1 - k)) & 1) ? -1.0 : 1.0;
                Mat q(dim, std::vector<cplx>(dim, 0.0));
                for (uint32_t i = 0; i < dim; ++i) {
                    for (uint32_t j = 0; j < dim; ++j) {
                        q[i][j] = 0.5 * (static_cast<double>(i == j) + sign * gen_mats[k][i][j]);
                    }
                }
                p = mat_mul(p, q);
            }
            basis[x] = projector_column(p, n);
        }
        family.bases.push_back(std::move(basis));
    }
    return family;
}

uint32_t mub_permute(const PauliString& u, const MubFamily& family, int a, uint32_t x) {
    check_family_args(family, a, x);
    if (static_cast<int>(u.letters.size()) != family.n) {
        throw std::invalid_argument("operator length does not match the family");
    }
    StateVector s = family.bases[a][x];
    apply_pauli(s, u);
    const uint32_t dim = 1u << family.n;
    for (uint32_t z = 0; z < dim; ++z) {
        cplx overlap(0.0, 0.0);
        for (uint32_t i = 0; i < dim; ++i) {
            overlap += std::conj(family.bases[a][z].amp[i]) * s.amp[i];
        }
        if (std::abs(std::abs(overlap) - 1.0) <= 1e-8) return z;
    }
    throw std::logic_error("pauli operator does not permute the basis; family is inconsistent");
}

uint32_t pv_mub_attack(const MubFamily& family, int a, uint32_t x, std::mt19937_64& rng) {
    check_family_args(family, a, x);
    const int n = family.n;
    const uint32_t dim = 1u << n;

    // The flight state plus one EPR pair per qubit; pair k sits on qubits
    // (n + 2k, n + 2k + 1) and its second half receives the teleported qubit.
    StateVector st = family.bases[a][x];
    for (int k = 0; k < n; ++k) st = tensor(st, bell_pair());

    static const int kLetter[4] = {0, 1, 3, 2};  // outcome z -> I, X, Z, Y
    PauliString u;
    u.letters.resize(n);
    for (int k = 0; k < n; ++k) {
        const BellOutcome z = teleport(st, k, n + 2 * k, n + 2 * k + 1, rng);
        u.letters[k] = kLetter[z.z & 3];
    }

    // Measure the uncorrected teleported register in basis a by projecting
    // onto each basis state; the result is deterministic because the state
    // is exactly a permuted basis vector.
    const int qc = st.qubit_count;
    std::vector<double> prob(dim, 0.0);
    for (uint32_t j = 0; j < dim; ++j) {
        const StateVector& ej = family.bases[a][j];
        std::vector<cplx> acc(1u << (2 * n), cplx(0.0, 0.0));
        for (size_t i = 0; i < st.amp.size(); ++i) {
            uint32_t b = 0;
            for (int k = 0; k < n; ++k) {
                const int q = n + 2 * k + 1;
                b |= static_cast<uint32_t>((i >> (qc - 1 - q)) & 1) << (n - 1 - k);
            }
            uint32_t rest = 0;
            for (int q = 0; q < qc; ++q) {
                if (q >= n && ((q - n) & 1)) continue;  // skip the teleported register
                rest = (rest << 1) | static_cast<uint32_t>((i >> (qc - 1 - q)) & 1);
            }
            acc[rest] += std::conj(ej.amp[b]) * st.amp[i];
        }
        for (const cplx& v : acc) prob[j] += std::norm(v);
    }
    const uint32_t z = static_cast<uint32_t>(
        std::max_element(prob.begin(), prob.end()) - prob.begin());
    if (prob[z] < 1.0 - 1e-6) {
        throw std::logic_error("teleported state is not a basis vector; family is inconsistent");
    }

    for (uint32_t cand = 0; cand < dim; ++cand) {
        if (mub_permute(u, family, a, cand) == z) return cand;
    }
    throw std::logic_error("no preimage under the correction permutation");
}

uint32_t pv_mub_attack(int n, int a, uint32_t x, std::mt19937_64& rng) {
    const MubFamily family = build_mub(n);
    return pv_mub_attack(family, a, x, rng);
}

}  // namespace gh
