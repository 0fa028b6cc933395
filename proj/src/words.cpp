#include "xrc/words.hpp"

#include <algorithm>

namespace xrc {

char GroupWord::invert_letter(char c) {
    switch (c) {
        case 'g': return 'G';
        case 'G': return 'g';
        case 'h': return 'H';
        case 'H': return 'h';
    }
    throw DomainError("parse: word letters must be g, G, h or H");
}

GroupWord GroupWord::parse(std::string_view s) {
    if (s == "e") return GroupWord();
    GroupWord w;
    for (char c : s) {
        invert_letter(c);  // validates
        if (!w.letters_.empty() && w.letters_.back() == invert_letter(c))
            w.letters_.pop_back();
        else
            w.letters_.push_back(c);
    }
    return w;
}

GroupWord GroupWord::operator*(const GroupWord& o) const {
    GroupWord w = *this;
    for (char c : o.letters_) {
        if (!w.letters_.empty() && w.letters_.back() == invert_letter(c))
            w.letters_.pop_back();
        else
            w.letters_.push_back(c);
    }
    return w;
}

GroupWord GroupWord::inverse() const {
    GroupWord w;
    w.letters_.assign(letters_.rbegin(), letters_.rend());
    for (char& c : w.letters_) c = invert_letter(c);
    return w;
}

std::vector<GroupWord> reduced_words_up_to(int max_length) {
    static const char alphabet[4] = {'G', 'H', 'g', 'h'};  // ASCII order
    std::vector<GroupWord> out;
    out.emplace_back();
    size_t level_begin = 0;
    for (int len = 1; len <= max_length; ++len) {
        size_t level_end = out.size();
        for (size_t i = level_begin; i < level_end; ++i)
            for (char c : alphabet) {
                GroupWord w = out[i] * GroupWord::parse(std::string(1, c));
                if (w.length() == static_cast<size_t>(len)) out.push_back(w);
            }
        level_begin = level_end;
    }
    return out;
}

WordEvaluator::WordEvaluator(MobiusMap g, MobiusMap h) : g_(std::move(g)), h_(std::move(h)) {}

WordEvaluator WordEvaluator::standard() {
    MobiusMap g(Rational(2), Rational(0), Rational(0), Rational(1));
    MobiusMap s(Rational(1), Rational(1), Rational(-1), Rational(1));
    MobiusMap h = s.compose(g).compose(s.inverse());
    return WordEvaluator(std::move(g), std::move(h));
}

const MobiusMap& WordEvaluator::eval(const GroupWord& w) const {
    auto it = cache_.find(w.letters());
    if (it != cache_.end()) return it->second;
    MobiusMap m;
    if (!w.is_identity()) {
        GroupWord prefix = GroupWord::parse(w.letters().substr(0, w.length() - 1));
        MobiusMap step;
        switch (w.letters().back()) {
            case 'g': step = g_; break;
            case 'h': step = h_; break;
            case 'G': step = g_.inverse(); break;
            default: step = h_.inverse(); break;
        }
        m = eval(prefix).compose(step);
    }
    return cache_.emplace(w.letters(), std::move(m)).first->second;
}

long long brooks_counting(const GroupWord& w, const GroupWord& x) {
    if (w.is_identity()) throw DomainError("brooks_counting: pattern word must be nonempty");
    auto count = [](const std::string& pat, const std::string& text) -> long long {
        if (pat.size() > text.size()) return 0;
        long long c = 0;
        for (size_t i = 0; i + pat.size() <= text.size(); ++i)
            if (text.compare(i, pat.size(), pat) == 0) ++c;
        return c;
    };
    return count(w.letters(), x.letters()) - count(w.inverse().letters(), x.letters());
}

long long exponent_sum(char generator, const GroupWord& w) {
    if (generator != 'g' && generator != 'h')
        throw DomainError("exponent_sum: generator must be g or h");
    const char inv = generator == 'g' ? 'G' : 'H';
    long long s = 0;
    for (char c : w.letters()) {
        if (c == generator) ++s;
        if (c == inv) --s;
    }
    return s;
}

Rational quasimorphism_defect(const std::function<Rational(const GroupWord&)>& q, int max_length) {
    auto words = reduced_words_up_to(max_length);
    std::vector<Rational> qv;
    qv.reserve(words.size());
    for (const auto& w : words) qv.push_back(q(w));
    Rational best(0);
    for (size_t i = 0; i < words.size(); ++i)
        for (size_t j = 0; j < words.size(); ++j) {
            Rational d = rational_abs(qv[i] + qv[j] - q(words[i] * words[j]));
            if (d > best) best = d;
        }
    return best;
}

}  // namespace xrc
