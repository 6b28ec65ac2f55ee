#pragma once

#include <algorithm>
#include <cstddef>
#include <string>
#include <vector>

// Object words over the two letters x and x*.  The empty word is the
// monoidal unit.

namespace cobalt {

enum class Letter { X, XStar };

inline Letter star(Letter l) { return l == Letter::X ? Letter::XStar : Letter::X; }

using ObjectWord = std::vector<Letter>;

// Dual of a word: reverse the order and star each letter.  An involution.
inline ObjectWord word_star(const ObjectWord& w) {
    ObjectWord out(w.rbegin(), w.rend());
    for (Letter& l : out) l = star(l);
    return out;
}

inline ObjectWord concat(const ObjectWord& a, const ObjectWord& b) {
    ObjectWord out = a;
    out.insert(out.end(), b.begin(), b.end());
    return out;
}

inline std::string letter_str(Letter l) { return l == Letter::X ? "x" : "x*"; }

inline std::string word_str(const ObjectWord& w) {
    if (w.empty()) return "1";
    std::string s;
    for (std::size_t i = 0; i < w.size(); ++i) {
        if (i) s += "@";
        s += letter_str(w[i]);
    }
    return s;
}

}  // namespace cobalt
