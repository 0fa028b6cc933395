#include "xrc/cocycle.hpp"

#include <sstream>

namespace xrc {

CrossRatioTable::CrossRatioTable(int n) : n_(n) {
    if (n < 0) throw DomainError("size-error: negative table size");
    v_.assign(static_cast<size_t>(n) * n * n * n, Rational(0));
}

int CrossRatioTable::index(int i, int j, int k, int l) const {
    if (i < 0 || j < 0 || k < 0 || l < 0 || i >= n_ || j >= n_ || k >= n_ || l >= n_)
        throw DomainError("unknown-label: out of range");
    if (i == j || i == k || i == l || j == k || j == l || k == l)
        throw DomainError("duplicate-point: table entries are indexed by distinct labels");
    return ((i * n_ + j) * n_ + k) * n_ + l;
}

const Rational& CrossRatioTable::at(int i, int j, int k, int l) const {
    return v_[index(i, j, k, l)];
}

void CrossRatioTable::set(int i, int j, int k, int l, const Rational& v) {
    v_[index(i, j, k, l)] = v;
}

CrossRatioTable CrossRatioTable::canonical(const Configuration& config) {
    CrossRatioTable t(config.size());
    t.for_each_tuple([&](int i, int j, int k, int l) {
        int c = config.canonical_value(i, j, k, l);
        if (c != 0) t.set(i, j, k, l, Rational(c));
    });
    return t;
}

CrossRatioTable& CrossRatioTable::add_scaled(const CrossRatioTable& o, const Rational& c) {
    if (o.n_ != n_) throw DomainError("size-error: table size mismatch");
    for (size_t i = 0; i < v_.size(); ++i) v_[i] += c * o.v_[i];
    return *this;
}

CrossRatioTable CrossRatioTable::scaled(const Rational& c) const {
    CrossRatioTable t(n_);
    for (size_t i = 0; i < v_.size(); ++i) t.v_[i] = c * v_[i];
    return t;
}

std::string AxiomViolation::describe() const {
    std::ostringstream os;
    switch (kind) {
        case Kind::antisym_first_pair:
            os << "axiom i) violated at (" << labels[0] << ',' << labels[1] << ',' << labels[2]
               << ',' << labels[3] << ")";
            break;
        case Kind::antisym_pair_swap:
            os << "axiom ii) violated at (" << labels[0] << ',' << labels[1] << ',' << labels[2]
               << ',' << labels[3] << ")";
            break;
        case Kind::additivity:
            os << "axiom iii) violated at (" << labels[0] << ',' << labels[1] << ',' << labels[2]
               << " | " << labels[3] << ',' << labels[4] << ")";
            break;
    }
    return os.str();
}

std::vector<AxiomViolation> check_axioms(const CrossRatioTable& t) {
    std::vector<AxiomViolation> out;
    const int n = t.size();
    t.for_each_tuple([&](int i, int j, int k, int l) {
        if (t.at(i, j, k, l) != -t.at(j, i, k, l))
            out.push_back({AxiomViolation::Kind::antisym_first_pair, {i, j, k, l, -1}});
        if (t.at(k, l, i, j) != -t.at(i, j, k, l))
            out.push_back({AxiomViolation::Kind::antisym_pair_swap, {i, j, k, l, -1}});
    });
    // Additivity [x,m,e,e'] + [m,y,e,e'] = [x,y,e,e'] over all 5 distinct labels.
    for (int x = 0; x < n; ++x)
        for (int m = 0; m < n; ++m)
            for (int y = 0; y < n; ++y)
                for (int e = 0; e < n; ++e)
                    for (int f = 0; f < n; ++f) {
                        if (x == m || x == y || m == y) continue;
                        if (e == f) continue;
                        if (e == x || e == m || e == y || f == x || f == m || f == y) continue;
                        if (t.at(x, m, e, f) + t.at(m, y, e, f) != t.at(x, y, e, f))
                            out.push_back({AxiomViolation::Kind::additivity, {x, m, y, e, f}});
                    }
    return out;
}

AltCochain2::AltCochain2(int n) : n_(n) {
    if (n < 0) throw DomainError("size-error: negative cochain size");
    rep_.assign(static_cast<size_t>(n) * n * n, Rational(0));
}

int AltCochain2::rep_index(int i, int j, int k) const {
    return (i * n_ + j) * n_ + k;
}

namespace {
// Sorts three distinct ints, returning the permutation sign.
int sort3(int& i, int& j, int& k) {
    int s = 1;
    if (i > j) { std::swap(i, j); s = -s; }
    if (j > k) { std::swap(j, k); s = -s; }
    if (i > j) { std::swap(i, j); s = -s; }
    return s;
}
}  // namespace

Rational AltCochain2::at(int i, int j, int k) const {
    if (i < 0 || j < 0 || k < 0 || i >= n_ || j >= n_ || k >= n_)
        throw DomainError("unknown-label: out of range");
    if (i == j || j == k || i == k) return Rational(0);
    int s = sort3(i, j, k);
    const Rational& r = rep_[rep_index(i, j, k)];
    return s > 0 ? r : Rational(-r);
}

void AltCochain2::set(int i, int j, int k, const Rational& v) {
    if (i < 0 || j < 0 || k < 0 || i >= n_ || j >= n_ || k >= n_)
        throw DomainError("unknown-label: out of range");
    if (i == j || j == k || i == k)
        throw DomainError("duplicate-point: alternating cochains vanish on repeated labels");
    int s = sort3(i, j, k);
    rep_[rep_index(i, j, k)] = s > 0 ? v : Rational(-v);
}

Rational AltCochain2::sup_abs() const {
    Rational m(0);
    for (int i = 0; i < n_; ++i)
        for (int j = i + 1; j < n_; ++j)
            for (int k = j + 1; k < n_; ++k) {
                Rational a = rational_abs(rep_[rep_index(i, j, k)]);
                if (a > m) m = a;
            }
    return m;
}

Cochain1::Cochain1(int n) : n_(n) {
    if (n < 0) throw DomainError("size-error: negative cochain size");
    v_.assign(static_cast<size_t>(n) * n, Rational(0));
}

Rational phi_from_crossratio(const CrossRatioTable& t, int xi, int eta, int zeta, int nu) {
    if (nu == xi || nu == eta || nu == zeta)
        throw DomainError("duplicate-point: auxiliary label collides with the triple");
    if (xi == eta || eta == zeta || xi == zeta) return Rational(0);
    Rational s = t.at(xi, zeta, eta, nu) + t.at(zeta, eta, xi, nu) + t.at(eta, xi, zeta, nu);
    return s / 2;
}

AltCochain2 cochain_from_crossratio(const CrossRatioTable& t) {
    const int n = t.size();
    if (n < 4) throw DomainError("size-error: need at least 4 labels to build the cochain");
    auto bad = check_axioms(t);
    if (!bad.empty())
        throw DomainError("axiom-violation: " + bad.front().describe());
    AltCochain2 phi(n);
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            for (int k = j + 1; k < n; ++k) {
                int nu = 0;
                while (nu == i || nu == j || nu == k) ++nu;
                phi.set(i, j, k, phi_from_crossratio(t, i, j, k, nu));
            }
    return phi;
}

Rational coboundary2_value(const AltCochain2& phi, int a, int b, int c, int d) {
    return phi.at(b, c, d) - phi.at(a, c, d) + phi.at(a, b, d) - phi.at(a, b, c);
}

bool is_cocycle(const AltCochain2& phi) {
    const int n = phi.size();
    for (int a = 0; a < n; ++a)
        for (int b = a + 1; b < n; ++b)
            for (int c = b + 1; c < n; ++c)
                for (int d = c + 1; d < n; ++d)
                    if (coboundary2_value(phi, a, b, c, d) != 0) return false;
    return true;
}

Rational coboundary1_value(const Cochain1& b, int x, int y, int z) {
    return b.at(y, z) - b.at(x, z) + b.at(x, y);
}

CrossRatioTable crossratio_from_cocycle(const AltCochain2& phi) {
    if (!is_cocycle(phi)) throw DomainError("not-a-cocycle: coboundary of the cochain is nonzero");
    CrossRatioTable t(phi.size());
    t.for_each_tuple([&](int g, int gp, int h, int hp) {
        t.set(g, gp, h, hp, phi.at(h, gp, g) - phi.at(gp, g, hp));
    });
    return t;
}

Rational sup_norm(const CrossRatioTable& t) {
    Rational m(0);
    t.for_each_tuple([&](int i, int j, int k, int l) {
        Rational a = rational_abs(t.at(i, j, k, l));
        if (a > m) m = a;
    });
    return m;
}

Rational max_entry(const CrossRatioTable& t) {
    Rational m(0);
    bool first = true;
    t.for_each_tuple([&](int i, int j, int k, int l) {
        const Rational& v = t.at(i, j, k, l);
        if (first || v > m) {
            m = v;
            first = false;
        }
    });
    return m;
}

}  // namespace xrc
