#include "surg/homology.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace surg {

ChainComplex chain_complex(const Complex& c) {
    ChainComplex cc;
    cc.vertices = c.vertex_count();
    cc.edges = c.edge_count();
    cc.faces = c.face_count();
    const auto& labels = c.edge_labels();
    auto edge_index = [&](int label) {
        auto it = std::lower_bound(labels.begin(), labels.end(), label);
        return static_cast<int>(it - labels.begin());
    };
    cc.d2.assign(cc.edges, std::vector<BigInt>(cc.faces, 0));
    for (int f = 0; f < cc.faces; ++f)
        for (SignedEdge s : c.faces()[f].word()) {
            int row = edge_index(edge_label(s));
            cc.d2[row][f] = cc.d2[row][f] + BigInt(s > 0 ? 1 : -1);
        }
    cc.d1.assign(cc.vertices, std::vector<BigInt>(cc.edges, 0));
    for (int e = 0; e < cc.edges; ++e) {
        int head = c.vertex_of({labels[e], 1});
        int tail = c.vertex_of({labels[e], 0});
        cc.d1[head][e] = cc.d1[head][e] + BigInt(1);
        cc.d1[tail][e] = cc.d1[tail][e] - BigInt(1);
    }
    return cc;
}

bool boundary_squares_to_zero(const ChainComplex& cc) {
    for (int v = 0; v < cc.vertices; ++v)
        for (int f = 0; f < cc.faces; ++f) {
            BigInt sum = 0;
            for (int e = 0; e < cc.edges; ++e) sum = sum + cc.d1[v][e] * cc.d2[e][f];
            if (!sum.is_zero()) return false;
        }
    return true;
}

namespace {

struct SmithReducer {
    IntMatrix& m;
    int rows, cols;

    bool find_pivot(int t, int& pi, int& pj) const {
        bool found = false;
        for (int i = t; i < rows; ++i)
            for (int j = t; j < cols; ++j) {
                if (m[i][j].is_zero()) continue;
                if (!found || BigInt::compare_magnitude(m[i][j], m[pi][pj]) < 0) {
                    pi = i;
                    pj = j;
                    found = true;
                }
            }
        return found;
    }

    void swap_rows(int a, int b) { std::swap(m[a], m[b]); }
    void swap_cols(int a, int b) {
        for (int i = 0; i < rows; ++i) std::swap(m[i][a], m[i][b]);
    }

    // subtract q times row a from row b, columns t..
    void row_op(int b, int a, const BigInt& q, int t) {
        for (int j = t; j < cols; ++j) m[b][j] = m[b][j] - q * m[a][j];
    }
    void col_op(int b, int a, const BigInt& q, int t) {
        for (int i = t; i < rows; ++i) m[i][b] = m[i][b] - q * m[i][a];
    }

    void reduce(int t) {
        for (;;) {
            int pi = t, pj = t;
            if (!find_pivot(t, pi, pj)) return;
            if (pi != t) swap_rows(pi, t);
            if (pj != t) swap_cols(pj, t);
            bool touched = false;
            for (int i = t + 1; i < rows; ++i) {
                if (m[i][t].is_zero()) continue;
                BigInt q = m[i][t] / m[t][t];
                if (!q.is_zero()) row_op(i, t, q, t);
                if (!m[i][t].is_zero()) {
                    // remainder smaller than the pivot takes over
                    touched = true;
                    break;
                }
            }
            if (touched) continue;
            for (int j = t + 1; j < cols; ++j) {
                if (m[t][j].is_zero()) continue;
                BigInt q = m[t][j] / m[t][t];
                if (!q.is_zero()) col_op(j, t, q, t);
                if (!m[t][j].is_zero()) {
                    touched = true;
                    break;
                }
            }
            if (touched) continue;
            // row and column are clear; enforce divisibility of the rest
            bool fixed = true;
            for (int i = t + 1; i < rows && fixed; ++i)
                for (int j = t + 1; j < cols && fixed; ++j) {
                    if ((m[i][j] % m[t][t]).is_zero()) continue;
                    // fold the offending row into row t and restart
                    for (int k = t; k < cols; ++k) m[t][k] = m[t][k] + m[i][k];
                    fixed = false;
                }
            if (fixed) return;
        }
    }
};

}  // namespace

std::vector<BigInt> smith_invariant_factors(IntMatrix m) {
    int rows = static_cast<int>(m.size());
    int cols = rows ? static_cast<int>(m[0].size()) : 0;
    std::vector<BigInt> divisors;
    SmithReducer red{m, rows, cols};
    for (int t = 0; t < std::min(rows, cols); ++t) {
        int pi = t, pj = t;
        if (!red.find_pivot(t, pi, pj)) break;
        red.reduce(t);
        if (m[t][t].is_zero()) break;
        divisors.push_back(m[t][t].abs());
    }
    return divisors;
}

namespace {

int rank_over(const std::vector<BigInt>& divisors, const Coefficients& coeff) {
    if (coeff.kind == Coefficients::ModP) {
        int r = 0;
        BigInt p(coeff.p);
        for (const auto& d : divisors)
            if (!(d % p).is_zero()) ++r;
        return r;
    }
    return static_cast<int>(divisors.size());
}

}  // namespace

HomologyResult homology(const Complex& c, Coefficients coeff) {
    if (coeff.kind == Coefficients::ModP) {
        if (coeff.p < 2) throw std::invalid_argument("homology: modulus must be at least 2");
        for (long long d = 2; d * d <= coeff.p; ++d)
            if (coeff.p % d == 0) throw std::invalid_argument("homology: modulus must be prime");
    }
    ChainComplex cc = chain_complex(c);
    auto div1 = smith_invariant_factors(cc.d1);
    auto div2 = smith_invariant_factors(cc.d2);
    int r1 = rank_over(div1, coeff);
    int r2 = rank_over(div2, coeff);

    HomologyResult res;
    res.coefficients = coeff;
    res.h0.rank = cc.vertices - r1;
    res.h1.rank = (cc.edges - r1) - r2;
    res.h2.rank = cc.faces - r2;
    if (coeff.kind == Coefficients::Integers) {
        for (const auto& d : div2)
            if (BigInt::compare_magnitude(d, BigInt(1)) > 0) res.h1.torsion.push_back(d.to_long_long());
        std::sort(res.h1.torsion.begin(), res.h1.torsion.end());
        // d1 is a graph incidence matrix: its invariant factors are 1, so H0
        // is free; recorded here for completeness
        for (const auto& d : div1)
            if (BigInt::compare_magnitude(d, BigInt(1)) > 0) res.h0.torsion.push_back(d.to_long_long());
    }
    return res;
}

std::string HomologyResult::text() const {
    auto group = [](const HomologyGroup& g) {
        std::ostringstream os;
        if (g.rank == 0 && g.torsion.empty()) {
            os << "0";
            return os.str();
        }
        bool first = true;
        if (g.rank > 0) {
            os << "Z^" << g.rank;
            first = false;
        }
        for (long long t : g.torsion) {
            if (!first) os << " (+) ";
            os << "Z/" << t;
            first = false;
        }
        return os.str();
    };
    std::ostringstream os;
    os << "H0 = " << group(h0) << '\n';
    os << "H1 = " << group(h1) << '\n';
    os << "H2 = " << group(h2) << '\n';
    return os.str();
}

}  // namespace surg
