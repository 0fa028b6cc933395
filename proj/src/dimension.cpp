#include "xrc/dimension.hpp"

#include <algorithm>
#include <array>
#include <map>

#include "xrc/linalg.hpp"

namespace xrc {

ConstraintSet parse_constraint_set(const std::string& s) {
    if (s == "axioms_only") return ConstraintSet::axioms_only;
    if (s == "axioms_plus_vanishing_on_ordered") return ConstraintSet::axioms_plus_vanishing_on_ordered;
    if (s == "alternating_cocycles") return ConstraintSet::alternating_cocycles;
    throw DomainError("unknown constraint set: " + s);
}

std::string constraint_set_name(ConstraintSet cs) {
    switch (cs) {
        case ConstraintSet::axioms_only: return "axioms_only";
        case ConstraintSet::axioms_plus_vanishing_on_ordered: return "axioms_plus_vanishing_on_ordered";
        case ConstraintSet::alternating_cocycles: return "alternating_cocycles";
    }
    return "?";
}

namespace {

constexpr int kMinN = 4;
constexpr int kMaxN = 8;

void require_range(int n) {
    if (n < kMinN || n > kMaxN)
        throw DomainError("size-error: dimension solver supports 4 <= n <= 8");
}

using Quad = std::array<int, 4>;

// Axioms i) and ii) tie the 8 tuples below to a single signed unknown.
struct SignedQuad {
    Quad q;
    int sign;
};

SignedQuad orbit_canonical(int i, int j, int k, int l) {
    const std::array<SignedQuad, 8> orbit = {{
        {{i, j, k, l}, +1},
        {{j, i, k, l}, -1},
        {{i, j, l, k}, -1},
        {{j, i, l, k}, +1},
        {{k, l, i, j}, -1},
        {{l, k, i, j}, +1},
        {{k, l, j, i}, +1},
        {{l, k, j, i}, -1},
    }};
    const SignedQuad* best = &orbit[0];
    for (const auto& sq : orbit)
        if (sq.q < best->q) best = &sq;
    return *best;
}

struct TableUnknowns {
    int n;
    std::map<Quad, size_t> id;
    std::vector<Quad> rep;

    explicit TableUnknowns(int n_) : n(n_) {
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j)
                for (int k = 0; k < n; ++k)
                    for (int l = 0; l < n; ++l) {
                        if (i == j || i == k || i == l || j == k || j == l || k == l) continue;
                        auto c = orbit_canonical(i, j, k, l);
                        if (c.q == Quad{i, j, k, l} && !id.count(c.q)) {
                            id.emplace(c.q, rep.size());
                            rep.push_back(c.q);
                        }
                    }
    }

    void accumulate(std::vector<Rational>& row, int i, int j, int k, int l,
                    const Rational& coeff) const {
        auto c = orbit_canonical(i, j, k, l);
        row[id.at(c.q)] += c.sign > 0 ? coeff : Rational(-coeff);
    }
};

LinearSystem table_system(int n, bool vanishing_on_ordered, const TableUnknowns& u) {
    LinearSystem sys(u.rep.size());
    // Axiom iii): [x,m,e,f] + [m,y,e,f] - [x,y,e,f] = 0 over 5 distinct labels.
    for (int x = 0; x < n; ++x)
        for (int m = 0; m < n; ++m)
            for (int y = 0; y < n; ++y) {
                if (x == m || x == y || m == y) continue;
                for (int e = 0; e < n; ++e)
                    for (int f = 0; f < n; ++f) {
                        if (e == f || e == x || e == m || e == y || f == x || f == m || f == y)
                            continue;
                        std::vector<Rational> row(u.rep.size(), Rational(0));
                        u.accumulate(row, x, m, e, f, Rational(1));
                        u.accumulate(row, m, y, e, f, Rational(1));
                        u.accumulate(row, x, y, e, f, Rational(-1));
                        sys.add_row(std::move(row));
                    }
            }
    if (vanishing_on_ordered) {
        // Cyclic order of labels is their natural order 0 < 1 < ... < n-1.
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j)
                for (int k = 0; k < n; ++k)
                    for (int l = 0; l < n; ++l) {
                        if (i == j || i == k || i == l || j == k || j == l || k == l) continue;
                        int a = ((j - i) % n + n) % n;
                        int b = ((k - i) % n + n) % n;
                        int c = ((l - i) % n + n) % n;
                        if (!(a < b && b < c)) continue;
                        std::vector<Rational> row(u.rep.size(), Rational(0));
                        u.accumulate(row, i, j, k, l, Rational(1));
                        sys.add_row(std::move(row));
                    }
    }
    return sys;
}

struct TripleUnknowns {
    int n;
    std::map<std::array<int, 3>, size_t> id;
    std::vector<std::array<int, 3>> rep;

    explicit TripleUnknowns(int n_) : n(n_) {
        for (int i = 0; i < n; ++i)
            for (int j = i + 1; j < n; ++j)
                for (int k = j + 1; k < n; ++k) {
                    id.emplace(std::array<int, 3>{i, j, k}, rep.size());
                    rep.push_back({i, j, k});
                }
    }
};

LinearSystem cocycle_system(int n, const TripleUnknowns& u) {
    LinearSystem sys(u.rep.size());
    for (int a = 0; a < n; ++a)
        for (int b = a + 1; b < n; ++b)
            for (int c = b + 1; c < n; ++c)
                for (int d = c + 1; d < n; ++d) {
                    std::vector<Rational> row(u.rep.size(), Rational(0));
                    row[u.id.at({b, c, d})] += 1;
                    row[u.id.at({a, c, d})] -= 1;
                    row[u.id.at({a, b, d})] += 1;
                    row[u.id.at({a, b, c})] -= 1;
                    sys.add_row(std::move(row));
                }
    return sys;
}

}  // namespace

int space_dimension(int n, ConstraintSet cs) {
    require_range(n);
    if (cs == ConstraintSet::alternating_cocycles) {
        TripleUnknowns u(n);
        auto sys = cocycle_system(n, u);
        return static_cast<int>(u.rep.size() - sys.rank());
    }
    TableUnknowns u(n);
    auto sys = table_system(n, cs == ConstraintSet::axioms_plus_vanishing_on_ordered, u);
    return static_cast<int>(u.rep.size() - sys.rank());
}

std::vector<CrossRatioTable> crossratio_nullspace(int n, ConstraintSet cs) {
    require_range(n);
    if (cs == ConstraintSet::alternating_cocycles)
        throw DomainError("crossratio_nullspace: constraint set is not a table system");
    TableUnknowns u(n);
    auto sys = table_system(n, cs == ConstraintSet::axioms_plus_vanishing_on_ordered, u);
    std::vector<CrossRatioTable> out;
    for (const auto& vec : sys.nullspace_basis()) {
        CrossRatioTable t(n);
        t.for_each_tuple([&](int i, int j, int k, int l) {
            auto c = orbit_canonical(i, j, k, l);
            const Rational& v = vec[u.id.at(c.q)];
            t.set(i, j, k, l, c.sign > 0 ? v : Rational(-v));
        });
        out.push_back(std::move(t));
    }
    return out;
}

std::vector<AltCochain2> cocycle_nullspace(int n) {
    require_range(n);
    TripleUnknowns u(n);
    auto sys = cocycle_system(n, u);
    std::vector<AltCochain2> out;
    for (const auto& vec : sys.nullspace_basis()) {
        AltCochain2 phi(n);
        for (size_t t = 0; t < u.rep.size(); ++t)
            phi.set(u.rep[t][0], u.rep[t][1], u.rep[t][2], vec[t]);
        out.push_back(std::move(phi));
    }
    return out;
}

}  // namespace xrc
