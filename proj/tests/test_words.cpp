#include <doctest.h>

#include <map>
#include <string>
#include <vector>

#include "xrc/words.hpp"

using namespace xrc;

// ---------------------------------------------------------------------------
// Independent oracle, written before the library implementation: enumerates
// reduced words by brute force over raw strings and computes the Brooks
// counting defect directly. Shares no code with xrc::.
namespace oracle {

std::string reduce(const std::string& w) {
    std::string out;
    auto inv = [](char c) { return c == 'g' ? 'G' : c == 'G' ? 'g' : c == 'h' ? 'H' : 'h'; };
    for (char c : w) {
        if (!out.empty() && out.back() == inv(c))
            out.pop_back();
        else
            out.push_back(c);
    }
    return out;
}

std::vector<std::string> all_reduced(int max_len) {
    std::vector<std::string> out{""};
    for (size_t i = 0; i < out.size(); ++i) {
        if (static_cast<int>(out[i].size()) >= max_len) continue;
        for (char c : {'G', 'H', 'g', 'h'}) {
            std::string w = out[i] + c;
            if (reduce(w) == w) out.push_back(w);
        }
    }
    return out;
}

long long occurrences(const std::string& pat, const std::string& text) {
    if (pat.empty() || pat.size() > text.size()) return 0;
    long long n = 0;
    for (size_t i = 0; i + pat.size() <= text.size(); ++i)
        if (text.substr(i, pat.size()) == pat) ++n;
    return n;
}

std::string invert(const std::string& w) {
    std::string out;
    auto inv = [](char c) { return c == 'g' ? 'G' : c == 'G' ? 'g' : c == 'h' ? 'H' : 'h'; };
    for (auto it = w.rbegin(); it != w.rend(); ++it) out.push_back(inv(*it));
    return out;
}

long long brooks(const std::string& pat, const std::string& text) {
    return occurrences(pat, text) - occurrences(invert(pat), text);
}

// max |q(u) + q(v) - q(uv)| over reduced words of length <= L
long long brooks_defect(const std::string& pat, int max_len) {
    auto words = all_reduced(max_len);
    long long best = 0;
    for (const auto& u : words)
        for (const auto& v : words) {
            long long d = brooks(pat, u) + brooks(pat, v) - brooks(pat, reduce(u + v));
            best = std::max(best, d < 0 ? -d : d);
        }
    return best;
}

}  // namespace oracle
// ---------------------------------------------------------------------------

TEST_CASE("word parsing, reduction, inversion") {
    CHECK(GroupWord::parse("gG").is_identity());
    CHECK(GroupWord::parse("ghHG").is_identity());
    CHECK(GroupWord::parse("gghH").letters() == "gg");
    CHECK(GroupWord::parse("gh").inverse().letters() == "HG");
    CHECK((GroupWord::parse("gh") * GroupWord::parse("HG")).is_identity());
    CHECK(GroupWord::parse("e").is_identity());
    CHECK_THROWS_AS(GroupWord::parse("gx"), DomainError);
}

TEST_CASE("reduced word enumeration counts") {
    CHECK(reduced_words_up_to(0).size() == 1);
    CHECK(reduced_words_up_to(1).size() == 5);
    CHECK(reduced_words_up_to(2).size() == 17);   // 1 + 4 + 12
    CHECK(reduced_words_up_to(3).size() == 53);   // + 36
    // agrees with the string-level oracle
    CHECK(oracle::all_reduced(3).size() == 53);
}

TEST_CASE("word evaluation respects the group structure") {
    WordEvaluator ev = WordEvaluator::standard();
    CHECK(ev.generator_g() == MobiusMap(Rational(2), Rational(0), Rational(0), Rational(1)));
    CHECK(ev.generator_h() == MobiusMap(Rational(3), Rational(-1), Rational(-1), Rational(3)));
    for (const auto& w : reduced_words_up_to(3)) {
        CHECK(ev.eval(w).compose(ev.eval(w.inverse())).is_identity());
        for (const auto& v : reduced_words_up_to(2))
            CHECK(ev.eval(w * v) == ev.eval(w).compose(ev.eval(v)));
    }
}

TEST_CASE("brooks counting examples") {
    CHECK(brooks_counting(GroupWord::parse("g"), GroupWord::parse("ggh")) == 2);
    CHECK(brooks_counting(GroupWord::parse("g"), GroupWord::parse("G")) == -1);
    CHECK(brooks_counting(GroupWord::parse("gh"), GroupWord::parse("ghgh")) == 2);
    CHECK(brooks_counting(GroupWord::parse("gh"), GroupWord::parse("HGHG")) == -2);
    CHECK_THROWS_AS(brooks_counting(GroupWord(), GroupWord::parse("g")), DomainError);
}

TEST_CASE("homomorphisms have zero defect") {
    auto qg = [](const GroupWord& w) { return Rational(exponent_sum('g', w)); };
    auto qh = [](const GroupWord& w) { return Rational(exponent_sum('h', w)); };
    for (int L = 1; L <= 4; ++L) {
        CHECK(quasimorphism_defect(qg, L) == 0);
        CHECK(quasimorphism_defect(qh, L) == 0);
    }
    CHECK(quasimorphism_defect([](const GroupWord&) { return Rational(0); }, 3) == 0);
}

TEST_CASE("brooks defect for gh at L=3: two implementations agree") {
    GroupWord gh = GroupWord::parse("gh");
    auto q = [&](const GroupWord& w) { return Rational(brooks_counting(gh, w)); };
    Rational lib = quasimorphism_defect(q, 3);
    long long ora = oracle::brooks_defect("gh", 3);
    CHECK(lib == Rational(ora));
    CHECK(lib > 0);
    // frozen value, computed by the oracle above
    CHECK(lib == 1);
    // monotonicity in the truncation length
    CHECK(quasimorphism_defect(q, 1) <= quasimorphism_defect(q, 2));
    CHECK(quasimorphism_defect(q, 2) <= lib);
}
