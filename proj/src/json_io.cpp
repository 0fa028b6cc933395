#include "xrc/json_io.hpp"

#include <algorithm>
#include <optional>
#include <sstream>

namespace xrc {

namespace {

BoundaryPoint point_from_json(const Json& j) {
    if (j.is_string()) return BoundaryPoint::parse(j.get<std::string>());
    if (j.is_number_integer()) return BoundaryPoint(Rational(j.get<long long>()));
    throw DomainError("parse: boundary points must be strings or integers");
}

Rational value_from_json(const Json& j) {
    if (j.is_string()) return parse_rational(j.get<std::string>());
    if (j.is_number_integer()) return Rational(j.get<long long>());
    throw DomainError("parse: rational values must be strings or integers");
}

template <class T>
std::string tuple_str(const T& t) {
    std::ostringstream os;
    os << '(';
    for (size_t i = 0; i < t.size(); ++i) os << (i ? "," : "") << t[i];
    os << ')';
    return os.str();
}

}  // namespace

Json config_to_json(const Configuration& config) {
    Json arr = Json::array();
    for (const auto& p : config.points()) arr.push_back(p.str());
    return arr;
}

Configuration config_from_json(const Json& j) {
    if (!j.is_array()) throw DomainError("parse: configuration must be an array of points");
    std::vector<BoundaryPoint> pts;
    for (const auto& e : j) pts.push_back(point_from_json(e));
    return Configuration(std::move(pts));
}

Json table_to_json(const CrossRatioTable& t) {
    Json entries = Json::array();
    t.for_each_tuple([&](int i, int j, int k, int l) {
        entries.push_back(Json{{"q", {i, j, k, l}}, {"v", rational_str(t.at(i, j, k, l))}});
    });
    return Json{{"n", t.size()}, {"entries", entries}};
}

CrossRatioTable table_from_json(const Json& j) {
    int n = j.at("n").get<int>();
    CrossRatioTable t(n);
    std::vector<char> known(static_cast<size_t>(n) * n * n * n, 0);
    auto idx = [n](int a, int b, int c, int d) { return ((a * n + b) * n + c) * n + d; };
    auto get = [&](int a, int b, int c, int d) -> std::optional<Rational> {
        if (!known[idx(a, b, c, d)]) return std::nullopt;
        return t.at(a, b, c, d);
    };
    // Inserts a value together with its sign-orbit under axioms i)/ii).
    auto put = [&](int a, int b, int c, int d, const Rational& v) -> bool {
        struct Member { int i, j, k, l; int sign; };
        const Member orbit[8] = {{a, b, c, d, +1}, {b, a, c, d, -1}, {a, b, d, c, -1},
                                 {b, a, d, c, +1}, {c, d, a, b, -1}, {d, c, a, b, +1},
                                 {c, d, b, a, +1}, {d, c, b, a, -1}};
        bool changed = false;
        for (const auto& m : orbit) {
            Rational w = m.sign > 0 ? v : Rational(-v);
            auto cur = get(m.i, m.j, m.k, m.l);
            if (cur) {
                if (*cur != w)
                    throw DomainError("inconsistent: entry " + tuple_str(std::array<int, 4>{m.i, m.j, m.k, m.l}) +
                                      " conflicts with the sign orbit of " +
                                      tuple_str(std::array<int, 4>{a, b, c, d}));
            } else {
                t.set(m.i, m.j, m.k, m.l, w);
                known[idx(m.i, m.j, m.k, m.l)] = 1;
                changed = true;
            }
        }
        return changed;
    };
    for (const auto& e : j.at("entries")) {
        auto q = e.at("q");
        if (!q.is_array() || q.size() != 4) throw DomainError("parse: table entry needs a 4-tuple q");
        put(q[0].get<int>(), q[1].get<int>(), q[2].get<int>(), q[3].get<int>(),
            value_from_json(e.at("v")));
    }
    // Two-of-three inference on [x,m,e,f] + [m,y,e,f] = [x,y,e,f].
    bool changed = true;
    while (changed) {
        changed = false;
        for (int x = 0; x < n; ++x)
            for (int m = 0; m < n; ++m)
                for (int y = 0; y < n; ++y) {
                    if (x == m || x == y || m == y) continue;
                    for (int e = 0; e < n; ++e)
                        for (int f = 0; f < n; ++f) {
                            if (e == f || e == x || e == m || e == y || f == x || f == m || f == y)
                                continue;
                            auto a = get(x, m, e, f), b = get(m, y, e, f), c = get(x, y, e, f);
                            if (a && b && !c)
                                changed |= put(x, y, e, f, *a + *b);
                            else if (a && !b && c)
                                changed |= put(m, y, e, f, *c - *a);
                            else if (!a && b && c)
                                changed |= put(x, m, e, f, *c - *b);
                            else if (a && b && c && *a + *b != *c)
                                throw DomainError(
                                    "inconsistent: additivity fails at " +
                                    tuple_str(std::array<int, 5>{x, m, y, e, f}));
                        }
                }
    }
    t.for_each_tuple([&](int a, int b, int c, int d) {
        if (!known[idx(a, b, c, d)])
            throw DomainError("underdetermined: entry " + tuple_str(std::array<int, 4>{a, b, c, d}) +
                              " is not determined by the given generating set");
    });
    auto bad = check_axioms(t);
    if (!bad.empty()) throw DomainError("inconsistent: " + bad.front().describe());
    return t;
}

Json cochain_to_json(const AltCochain2& phi) {
    Json entries = Json::array();
    const int n = phi.size();
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            for (int k = j + 1; k < n; ++k)
                entries.push_back(Json{{"t", {i, j, k}}, {"v", rational_str(phi.at(i, j, k))}});
    return Json{{"n", n}, {"entries", entries}};
}

AltCochain2 cochain_from_json(const Json& j) {
    int n = j.at("n").get<int>();
    AltCochain2 phi(n);
    std::vector<char> known(static_cast<size_t>(n) * n * n, 0);
    for (const auto& e : j.at("entries")) {
        auto tj = e.at("t");
        if (!tj.is_array() || tj.size() != 3) throw DomainError("parse: cochain entry needs a 3-tuple t");
        int a = tj[0].get<int>(), b = tj[1].get<int>(), c = tj[2].get<int>();
        Rational v = value_from_json(e.at("v"));
        if (a < 0 || b < 0 || c < 0 || a >= n || b >= n || c >= n)
            throw DomainError("unknown-label: out of range");
        if (a == b || b == c || a == c) {
            if (v != 0)
                throw DomainError("inconsistent: alternating cochains vanish on repeated labels");
            continue;
        }
        int s[3] = {a, b, c};
        std::sort(s, s + 3);
        size_t key = (static_cast<size_t>(s[0]) * n + s[1]) * n + s[2];
        if (known[key]) {
            if (phi.at(a, b, c) != v)
                throw DomainError("inconsistent: entry " + tuple_str(std::array<int, 3>{a, b, c}) +
                                  " conflicts with its alternation orbit");
        } else {
            phi.set(a, b, c, v);
            known[key] = 1;
        }
    }
    for (int a = 0; a < n; ++a)
        for (int b = a + 1; b < n; ++b)
            for (int c = b + 1; c < n; ++c) {
                size_t key = (static_cast<size_t>(a) * n + b) * n + c;
                if (!known[key])
                    throw DomainError("underdetermined: entry " +
                                      tuple_str(std::array<int, 3>{a, b, c}) + " missing");
            }
    return phi;
}

Json measure_to_json(const RectMeasure& m) {
    Json rects = Json::array();
    m.for_each_rect([&](int a, int b, int c, int d) {
        rects.push_back(
            Json{{"ab", {a, b}}, {"cd", {c, d}}, {"v", rational_str(m.at(a, b, c, d))}});
    });
    return Json{{"config", config_to_json(m.config())}, {"rects", rects}};
}

RectMeasure measure_from_json(const Json& j) {
    Configuration config = config_from_json(j.at("config"));
    const int n = config.size();
    RectMeasure m(config);
    std::vector<char> known(static_cast<size_t>(n) * n * n * n, 0);
    auto idx = [n](int a, int b, int c, int d) { return ((a * n + b) * n + c) * n + d; };
    auto get = [&](int a, int b, int c, int d) -> std::optional<Rational> {
        if (!known[idx(a, b, c, d)]) return std::nullopt;
        return m.at(a, b, c, d);
    };
    auto put = [&](int a, int b, int c, int d, const Rational& v) -> bool {
        if (!m.admissible(a, b, c, d))
            throw DomainError("inadmissible-rectangle: " + tuple_str(std::array<int, 4>{a, b, c, d}));
        bool changed = false;
        struct Member { int i, j, k, l; int sign; };
        const Member orbit[2] = {{a, b, c, d, +1}, {c, d, a, b, -1}};
        for (const auto& e : orbit) {
            Rational w = e.sign > 0 ? v : Rational(-v);
            auto cur = get(e.i, e.j, e.k, e.l);
            if (cur) {
                if (*cur != w)
                    throw DomainError("inconsistent: flip-antiinvariance fails at " +
                                      tuple_str(std::array<int, 4>{a, b, c, d}));
            } else {
                m.set(e.i, e.j, e.k, e.l, w);
                known[idx(e.i, e.j, e.k, e.l)] = 1;
                changed = true;
            }
        }
        return changed;
    };
    for (const auto& e : j.at("rects")) {
        auto ab = e.at("ab"), cd = e.at("cd");
        if (!ab.is_array() || ab.size() != 2 || !cd.is_array() || cd.size() != 2)
            throw DomainError("parse: rect entry needs ab and cd pairs");
        put(ab[0].get<int>(), ab[1].get<int>(), cd[0].get<int>(), cd[1].get<int>(),
            value_from_json(e.at("v")));
    }
    bool changed = true;
    while (changed) {
        changed = false;
        for (int a = 0; a < n; ++a)
            for (int b = 0; b < n; ++b)
                for (int bp = 0; bp < n; ++bp) {
                    if (a == b || a == bp || b == bp) continue;
                    if (!config.cyclically_ordered(a, b, bp)) continue;
                    for (int c = 0; c < n; ++c)
                        for (int d = 0; d < n; ++d) {
                            if (c == d || c == a || c == b || c == bp || d == a || d == b ||
                                d == bp)
                                continue;
                            if (!config.quadruple_cyclically_ordered(a, bp, c, d)) continue;
                            auto u = get(a, b, c, d), v = get(b, bp, c, d), w = get(a, bp, c, d);
                            if (u && v && !w)
                                changed |= put(a, bp, c, d, *u + *v);
                            else if (u && !v && w)
                                changed |= put(b, bp, c, d, *w - *u);
                            else if (!u && v && w)
                                changed |= put(a, b, c, d, *w - *v);
                            else if (u && v && w && *u + *v != *w)
                                throw DomainError("inconsistent: additivity fails at " +
                                                  tuple_str(std::array<int, 5>{a, b, bp, c, d}));
                        }
                }
    }
    m.for_each_rect([&](int a, int b, int c, int d) {
        if (!known[idx(a, b, c, d)])
            throw DomainError("underdetermined: rectangle " +
                              tuple_str(std::array<int, 4>{a, b, c, d}) +
                              " is not determined by the given generating set");
    });
    auto bad = check_measure(m);
    if (!bad.empty()) throw DomainError("inconsistent: " + bad.front().describe());
    return m;
}

FiniteGraphSpace graph_from_json(const Json& j) {
    int n = j.at("n").get<int>();
    std::vector<std::pair<int, int>> edges;
    for (const auto& e : j.at("edges")) {
        if (!e.is_array() || e.size() != 2) throw DomainError("parse: edges must be [i,j] pairs");
        edges.emplace_back(e[0].get<int>(), e[1].get<int>());
    }
    return FiniteGraphSpace(n, edges);
}

}  // namespace xrc
