#include "malg/group.hpp"

#include <algorithm>
#include <array>

namespace malg {

void CayleyTable::validate() const {
    const std::size_t n = order;
    if (n == 0) throw InvalidGroupError("empty group: no identity element possible");
    if (table.size() != n) throw InvalidGroupError("table has the wrong number of rows");
    for (const auto& row : table) {
        if (row.size() != n) throw InvalidGroupError("table row has the wrong length");
        for (auto v : row)
            if (v >= n) throw InvalidGroupError("table entry out of range");
    }
    // Latin square: every row and column a permutation.
    for (std::size_t g = 0; g < n; ++g) {
        std::vector<bool> seen(n, false);
        for (std::size_t x = 0; x < n; ++x) {
            if (seen[table[g][x]])
                throw InvalidGroupError("row " + std::to_string(g) + " repeats an element");
            seen[table[g][x]] = true;
        }
    }
    for (std::size_t x = 0; x < n; ++x) {
        std::vector<bool> seen(n, false);
        for (std::size_t g = 0; g < n; ++g) {
            if (seen[table[g][x]])
                throw InvalidGroupError("column " + std::to_string(x) + " repeats an element");
            seen[table[g][x]] = true;
        }
    }
    // Two-sided identity.
    std::optional<std::size_t> e;
    for (std::size_t g = 0; g < n; ++g) {
        bool left = true, right = true;
        for (std::size_t x = 0; x < n; ++x) {
            if (table[g][x] != x) left = false;
            if (table[x][g] != x) right = false;
        }
        if (left && right) {
            e = g;
            break;
        }
    }
    if (!e) throw InvalidGroupError("no identity element");
    // Inverses (Latin square gives solvability; require a two-sided inverse).
    for (std::size_t g = 0; g < n; ++g) {
        bool has = false;
        for (std::size_t h = 0; h < n; ++h)
            if (table[g][h] == *e && table[h][g] == *e) has = true;
        if (!has) throw InvalidGroupError("element " + std::to_string(g) + " has no two-sided inverse");
    }
    // Associativity, all n^3 triples (order <= 12 keeps this tiny).
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = 0; b < n; ++b)
            for (std::size_t c = 0; c < n; ++c)
                if (table[table[a][b]][c] != table[a][table[b][c]])
                    throw InvalidGroupError("associativity fails at (" + std::to_string(a) + "," +
                                            std::to_string(b) + "," + std::to_string(c) + ")");
}

std::size_t CayleyTable::identity() const {
    for (std::size_t g = 0; g < order; ++g)
        if (table[g][0] == 0 && table[0][g] == g) {
            bool left = true;
            for (std::size_t x = 0; x < order; ++x)
                if (table[g][x] != x) left = false;
            if (left) return g;
        }
    throw InvalidGroupError("no identity element");
}

CayleyTable cyclic_group(std::size_t n) {
    CayleyTable g{n, {}, "C" + std::to_string(n)};
    g.table.assign(n, std::vector<std::size_t>(n));
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = 0; b < n; ++b) g.table[a][b] = (a + b) % n;
    return g;
}

CayleyTable klein_four_group() {
    // C2 x C2 with index 2a+b; componentwise xor.
    CayleyTable g{4, {}, "V4"};
    g.table.assign(4, std::vector<std::size_t>(4));
    for (std::size_t a = 0; a < 4; ++a)
        for (std::size_t b = 0; b < 4; ++b) g.table[a][b] = a ^ b;
    return g;
}

CayleyTable dihedral_group(std::size_t n) {
    if (n < 3) throw Error("dihedral group wants n >= 3");
    // Elements r^i s^j with index i + n*j; s r^k = r^{-k} s.
    CayleyTable g{2 * n, {}, "D" + std::to_string(n)};
    g.table.assign(2 * n, std::vector<std::size_t>(2 * n));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < 2; ++j)
            for (std::size_t k = 0; k < n; ++k)
                for (std::size_t l = 0; l < 2; ++l) {
                    std::size_t rot = j ? (i + n - k % n) % n : (i + k) % n;
                    g.table[i + n * j][k + n * l] = rot + n * (j ^ l);
                }
    return g;
}

CayleyTable symmetric_group_s3() {
    // Permutations of {0,1,2} in lexicographic order; product = composition
    // (left acts after right), matching the table convention g*x.
    std::vector<std::array<std::size_t, 3>> perms = {
        {0, 1, 2}, {0, 2, 1}, {1, 0, 2}, {1, 2, 0}, {2, 0, 1}, {2, 1, 0}};
    CayleyTable g{6, {}, "S3"};
    g.table.assign(6, std::vector<std::size_t>(6));
    for (std::size_t a = 0; a < 6; ++a)
        for (std::size_t b = 0; b < 6; ++b) {
            std::array<std::size_t, 3> comp{};
            for (std::size_t i = 0; i < 3; ++i) comp[i] = perms[a][perms[b][i]];
            g.table[a][b] = std::find(perms.begin(), perms.end(), comp) - perms.begin();
        }
    return g;
}

CayleyTable quaternion_group() {
    // {1,-1,i,-i,j,-j,k,-k} as (unit 0..3, sign) with index 2*unit + sign.
    // unit products: i*j=k, j*k=i, k*i=j and anticommutes; squares are -1.
    auto mul = [](std::size_t a, std::size_t b) -> std::size_t {
        std::size_t ua = a / 2, ub = b / 2;
        bool sa = a % 2, sb = b % 2; // true = negative
        std::size_t uc;
        bool flip = false; // extra sign from the unit product
        if (ua == 0)
            uc = ub;
        else if (ub == 0)
            uc = ua;
        else if (ua == ub) {
            uc = 0;
            flip = true; // i^2 = j^2 = k^2 = -1
        } else {
            // distinct imaginary units: cyclic (1,2,3) -> positive, else negative
            uc = 6 - ua - ub; // the third unit among {1,2,3}
            flip = !((ub == ua % 3 + 1) || (ua == 3 && ub == 1));
        }
        bool sc = (sa != sb) != flip;
        return 2 * uc + (sc ? 1 : 0);
    };
    CayleyTable g{8, {}, "Q8"};
    g.table.assign(8, std::vector<std::size_t>(8));
    for (std::size_t a = 0; a < 8; ++a)
        for (std::size_t b = 0; b < 8; ++b) g.table[a][b] = mul(a, b);
    return g;
}

namespace {
// Reduced row echelon form in place; records the pivot columns. Exact.
std::size_t rref(std::vector<std::vector<Rational>>& m, std::vector<std::size_t>& pivot_cols) {
    pivot_cols.clear();
    if (m.empty()) return 0;
    const std::size_t rows = m.size(), cols = m[0].size();
    std::size_t rank = 0;
    for (std::size_t col = 0; col < cols && rank < rows; ++col) {
        std::size_t pivot = rank;
        while (pivot < rows && m[pivot][col] == 0) ++pivot;
        if (pivot == rows) continue;
        std::swap(m[rank], m[pivot]);
        Rational inv = Rational(1) / m[rank][col];
        for (auto& v : m[rank]) v *= inv;
        for (std::size_t r = 0; r < rows; ++r) {
            if (r == rank || m[r][col] == 0) continue;
            Rational f = m[r][col];
            for (std::size_t c = 0; c < cols; ++c) m[r][c] -= f * m[rank][c];
        }
        pivot_cols.push_back(col);
        ++rank;
    }
    return rank;
}
} // namespace

bool KernelResult::spanned_by_constant() const {
    if (nullity != 1 || basis.size() != 1) return false;
    const auto& v = basis[0];
    return !v.empty() && std::all_of(v.begin(), v.end(), [&](const Rational& x) { return x == v[0]; });
}

KernelResult left_invariance_kernel(const CayleyTable& g) {
    g.validate();
    const std::size_t n = g.order;
    // One equation per (g, x): m[g*x] - m[x] = 0.
    std::vector<std::vector<Rational>> m;
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t x = 0; x < n; ++x) {
            std::size_t gx = g.table[a][x];
            if (gx == x) continue;
            std::vector<Rational> row(n, Rational(0));
            row[gx] = 1;
            row[x] = -1;
            m.push_back(std::move(row));
        }
    std::vector<std::size_t> pivot_cols;
    std::size_t rank = rref(m, pivot_cols);

    KernelResult res;
    res.nullity = n - rank;
    // One basis vector per free column: set it to 1, read the bound
    // coordinates off the reduced rows.
    std::vector<bool> is_pivot(n, false);
    for (auto c : pivot_cols) is_pivot[c] = true;
    for (std::size_t c = 0; c < n; ++c) {
        if (is_pivot[c]) continue;
        std::vector<Rational> v(n, Rational(0));
        v[c] = 1;
        for (std::size_t r = 0; r < rank; ++r) v[pivot_cols[r]] = -m[r][c];
        res.basis.push_back(std::move(v));
    }
    // Normalize: first nonzero entry 1.
    for (auto& v : res.basis) {
        auto it = std::find_if(v.begin(), v.end(), [](const Rational& x) { return x != 0; });
        if (it != v.end()) {
            Rational inv = Rational(1) / *it;
            for (auto& x : v) x *= inv;
        }
    }
    return res;
}

InvarianceCheck check_left_invariant(const CayleyTable& g, const std::vector<Rational>& candidate) {
    g.validate();
    if (candidate.size() != g.order) throw Error("candidate sized for a different group");
    InvarianceCheck out;
    for (std::size_t a = 0; a < g.order; ++a)
        for (std::size_t x = 0; x < g.order; ++x)
            if (candidate[g.table[a][x]] != candidate[x]) {
                out.witness = {a, x};
                return out;
            }
    out.invariant = true;
    out.scalar = candidate.empty() ? Rational(0) : candidate[0]; // relative to counting measure
    return out;
}

} // namespace malg
