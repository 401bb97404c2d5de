#pragma once

#include "dskrv/word.hpp"

#include <vector>

namespace dskrv {

// Shuffle product of two words, with multiplicity: the result has
// C(|u|+|v|, |u|) entries counted with repetition.
inline std::vector<Word> shuffle(const Word& u, const Word& v) {
    require_same_alphabet(u.alphabet(), v.alphabet());
    if (u.empty()) return {v};
    if (v.empty()) return {u};
    std::vector<Word> out;
    for (const Word& w : shuffle(drop_first(u), v))
        out.push_back(concat(prefix(u, 1), w));
    for (const Word& w : shuffle(u, drop_first(v)))
        out.push_back(concat(prefix(v, 1), w));
    return out;
}

// Stuffle (harmonic) product on depth-encoded words, with multiplicity:
//   st(y_i u', y_j v') = y_i st(u', y_j v')
//                      + y_j st(y_i u', v')
//                      + y_{i+j} st(u', v').
inline std::vector<YWord> stuffle(const YWord& u, const YWord& v) {
    if (u.indices.empty()) return {v};
    if (v.indices.empty()) return {u};

    const int i = u.indices.front();
    const int j = v.indices.front();
    YWord ur{std::vector<int>(u.indices.begin() + 1, u.indices.end())};
    YWord vr{std::vector<int>(v.indices.begin() + 1, v.indices.end())};

    auto prepend = [](int head, const std::vector<YWord>& tails) {
        std::vector<YWord> out;
        out.reserve(tails.size());
        for (const YWord& t : tails) {
            YWord y;
            y.indices.reserve(t.indices.size() + 1);
            y.indices.push_back(head);
            y.indices.insert(y.indices.end(), t.indices.begin(), t.indices.end());
            out.push_back(std::move(y));
        }
        return out;
    };

    std::vector<YWord> out = prepend(i, stuffle(ur, v));
    for (YWord& y : prepend(j, stuffle(u, vr))) out.push_back(std::move(y));
    for (YWord& y : prepend(i + j, stuffle(ur, vr))) out.push_back(std::move(y));
    return out;
}

}  // namespace dskrv
