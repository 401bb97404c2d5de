#pragma once

#include <algorithm>
#include <bit>
#include <compare>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace dskrv {

// Two-letter alphabets only. Letter 0 is x (resp. a), letter 1 is y (resp. b).
enum class Alphabet : std::uint8_t { xy = 0, ab = 1 };

inline char letter_char(Alphabet a, int letter) {
    if (a == Alphabet::xy) return letter ? 'y' : 'x';
    return letter ? 'b' : 'a';
}

inline void require_same_alphabet(Alphabet a, Alphabet b) {
    if (a != b) throw std::invalid_argument("mixed alphabets");
}

namespace detail {
inline constexpr std::uint64_t low_mask(int len) {
    return len >= 64 ? ~std::uint64_t{0} : ((std::uint64_t{1} << len) - 1);
}
inline constexpr std::uint64_t shr_safe(std::uint64_t v, int k) {
    return k >= 64 ? 0 : v >> k;
}
}  // namespace detail

// A monomial over a two-letter alphabet. Letters are packed into a 64-bit
// field with the first letter in the highest used position, so that among
// words of equal degree the numeric order of the bit field is the
// lexicographic order with x < y (a < b). Degree is capped at 64, far above
// anything the weight-graded computations reach.
class Word {
public:
    static constexpr int max_degree = 64;

    constexpr Word() = default;
    constexpr explicit Word(Alphabet a) : alpha_(a) {}

    Word(Alphabet a, std::uint64_t bits, int degree)
        : bits_(bits), len_(static_cast<std::uint8_t>(degree)), alpha_(a) {
        if (degree < 0 || degree > max_degree)
            throw std::length_error("word degree out of range");
        if (degree < 64 && (bits >> degree) != 0)
            throw std::invalid_argument("bits beyond word degree");
    }

    constexpr Alphabet alphabet() const { return alpha_; }
    constexpr int degree() const { return len_; }
    constexpr bool empty() const { return len_ == 0; }
    constexpr std::uint64_t bits() const { return bits_; }

    // Number of second letters (y resp. b).
    constexpr int depth() const { return std::popcount(bits_); }

    // 0-based position from the left.
    constexpr int letter(int i) const {
        return static_cast<int>(bits_ >> (len_ - 1 - i)) & 1;
    }
    constexpr int first() const { return letter(0); }
    constexpr int last() const { return static_cast<int>(bits_) & 1; }

    friend constexpr bool operator==(const Word&, const Word&) = default;

    // Graded-lexicographic: degree first, then lexicographic.
    friend constexpr std::strong_ordering operator<=>(const Word& u, const Word& v) {
        if (u.alpha_ != v.alpha_)
            return u.alpha_ < v.alpha_ ? std::strong_ordering::less
                                       : std::strong_ordering::greater;
        if (u.len_ != v.len_)
            return u.len_ < v.len_ ? std::strong_ordering::less
                                   : std::strong_ordering::greater;
        if (u.bits_ != v.bits_)
            return u.bits_ < v.bits_ ? std::strong_ordering::less
                                     : std::strong_ordering::greater;
        return std::strong_ordering::equal;
    }

    std::string str() const {
        if (empty()) return "1";
        std::string s;
        s.reserve(len_);
        for (int i = 0; i < len_; ++i) s.push_back(letter_char(alpha_, letter(i)));
        return s;
    }

    static Word parse(std::string_view s, Alphabet a) {
        if (s == "1") return Word(a);
        Word w(a);
        for (char c : s) {
            int l;
            if (c == letter_char(a, 0)) l = 0;
            else if (c == letter_char(a, 1)) l = 1;
            else throw std::invalid_argument(std::string("invalid letter '") + c + "'");
            w = appended(w, l);
        }
        return w;
    }

    // The given letter repeated count times.
    static Word power(Alphabet a, int letter, int count) {
        if (count < 0 || count > max_degree)
            throw std::length_error("word degree out of range");
        return Word(a, letter ? detail::low_mask(count) : 0, count);
    }

    friend Word appended(const Word& w, int letter) {
        if (w.len_ >= max_degree) throw std::length_error("word degree overflow");
        return Word(w.alpha_, (w.bits_ << 1) | static_cast<std::uint64_t>(letter & 1),
                    w.len_ + 1);
    }

private:
    std::uint64_t bits_ = 0;
    std::uint8_t len_ = 0;
    Alphabet alpha_ = Alphabet::xy;
};

inline Word concat(const Word& u, const Word& v) {
    require_same_alphabet(u.alphabet(), v.alphabet());
    if (u.degree() + v.degree() > Word::max_degree)
        throw std::length_error("word degree overflow");
    if (u.empty()) return v;
    if (v.empty()) return u;
    return Word(u.alphabet(), (u.bits() << v.degree()) | v.bits(),
                u.degree() + v.degree());
}

// First k letters.
inline Word prefix(const Word& w, int k) {
    if (k < 0 || k > w.degree()) throw std::out_of_range("prefix length");
    if (k == 0) return Word(w.alphabet());
    return Word(w.alphabet(), detail::shr_safe(w.bits(), w.degree() - k), k);
}

// Last k letters.
inline Word suffix(const Word& w, int k) {
    if (k < 0 || k > w.degree()) throw std::out_of_range("suffix length");
    return Word(w.alphabet(), w.bits() & detail::low_mask(k), k);
}

inline Word drop_first(const Word& w) { return suffix(w, w.degree() - 1); }
inline Word drop_last(const Word& w) { return prefix(w, w.degree() - 1); }

inline Word reverse(const Word& w) {
    std::uint64_t b = 0;
    for (int i = 0; i < w.degree(); ++i) b = (b << 1) | ((w.bits() >> i) & 1);
    return Word(w.alphabet(), b, w.degree());
}

inline Word replace_letter(const Word& w, int i, int letter) {
    if (i < 0 || i >= w.degree()) throw std::out_of_range("letter index");
    const int pos = w.degree() - 1 - i;
    std::uint64_t b = w.bits() & ~(std::uint64_t{1} << pos);
    if (letter & 1) b |= std::uint64_t{1} << pos;
    return Word(w.alphabet(), b, w.degree());
}

inline Word erase_letter(const Word& w, int i) {
    if (i < 0 || i >= w.degree()) throw std::out_of_range("letter index");
    const int pos = w.degree() - 1 - i;
    const std::uint64_t high = detail::shr_safe(w.bits(), pos + 1);
    const std::uint64_t low = w.bits() & detail::low_mask(pos);
    return Word(w.alphabet(), (high << pos) | low, w.degree() - 1);
}

// First letter moved to the end.
inline Word rotated_left(const Word& w) {
    if (w.degree() <= 1) return w;
    const std::uint64_t top = static_cast<std::uint64_t>(w.first());
    const std::uint64_t rest = w.bits() & detail::low_mask(w.degree() - 1);
    return Word(w.alphabet(), (rest << 1) | top, w.degree());
}

// Lexicographically least rotation; canonical key for cyclic classes.
inline Word canonical_rotation(const Word& w) {
    Word best = w, cur = w;
    for (int i = 1; i < w.degree(); ++i) {
        cur = rotated_left(cur);
        if (cur.bits() < best.bits()) best = cur;
    }
    return best;
}

// Number of distinct rotations of w.
inline int rotation_orbit_size(const Word& w) {
    if (w.degree() <= 1) return 1;
    int count = 1;
    Word cur = rotated_left(w);
    while (cur != w) {
        ++count;
        cur = rotated_left(cur);
    }
    return count;
}

// Lexicographic order with a proper prefix preceding its extensions
// (unlike Word's graded order, which sorts by degree first).
inline bool lex_less(const Word& u, const Word& v) {
    const int n = std::min(u.degree(), v.degree());
    for (int i = 0; i < n; ++i)
        if (u.letter(i) != v.letter(i)) return u.letter(i) < v.letter(i);
    return u.degree() < v.degree();
}

// Lengths of the maximal x-runs: w = x^{i_0} y x^{i_1} y ... y x^{i_r}
// yields (i_0, ..., i_r) with r = depth(w).
inline std::vector<int> x_runs(const Word& w) {
    std::vector<int> runs;
    runs.reserve(static_cast<std::size_t>(w.depth()) + 1);
    int run = 0;
    for (int i = 0; i < w.degree(); ++i) {
        if (w.letter(i) == 0) {
            ++run;
        } else {
            runs.push_back(run);
            run = 0;
        }
    }
    runs.push_back(run);
    return runs;
}

inline Word word_from_runs(Alphabet a, const std::vector<int>& runs) {
    Word w(a);
    for (std::size_t k = 0; k < runs.size(); ++k) {
        if (k > 0) w = appended(w, 1);
        w = concat(w, Word::power(a, 0, runs[k]));
    }
    return w;
}

// Cyclic shift of the x-run exponents:
// x^{i_0} y x^{i_1} y ... y x^{i_r}  ->  x^{i_r} y x^{i_0} y ... y x^{i_{r-1}}.
// Words without a second letter are fixed.
inline Word push(const Word& w) {
    if (w.depth() == 0) return w;
    std::vector<int> runs = x_runs(w);
    std::rotate(runs.rbegin(), runs.rbegin() + 1, runs.rend());
    return word_from_runs(w.alphabet(), runs);
}

// push applied 1, 2, ..., depth(w)+1 times, repetitions kept. The push
// operator has order dividing depth(w)+1, so the last entry is w itself.
inline std::vector<Word> push_list(const Word& w) {
    std::vector<Word> out;
    out.reserve(static_cast<std::size_t>(w.depth()) + 1);
    Word cur = w;
    for (int i = 0; i <= w.depth(); ++i) {
        cur = push(cur);
        out.push_back(cur);
    }
    return out;
}

// Depth encoding of a monomial ending in y: indices (i_1, ..., i_r) with
// i_k >= 1 stand for x^{i_1 - 1} y x^{i_2 - 1} y ... x^{i_r - 1} y.
struct YWord {
    std::vector<int> indices;

    int weight() const {
        int s = 0;
        for (int i : indices) s += i;
        return s;
    }
    int depth() const { return static_cast<int>(indices.size()); }

    Word to_word(Alphabet a = Alphabet::xy) const {
        Word w(a);
        for (int i : indices) {
            if (i < 1) throw std::invalid_argument("y-word index below 1");
            w = concat(w, Word::power(a, 0, i - 1));
            w = appended(w, 1);
        }
        return w;
    }

    static YWord from_word(const Word& w) {
        if (w.empty() || w.last() != 1)
            throw std::invalid_argument("word does not end in y");
        std::vector<int> runs = x_runs(w);  // final run is empty
        YWord y;
        y.indices.reserve(runs.size() - 1);
        for (std::size_t k = 0; k + 1 < runs.size(); ++k)
            y.indices.push_back(runs[k] + 1);
        return y;
    }

    std::string str() const {
        std::string s = "[";
        for (std::size_t k = 0; k < indices.size(); ++k) {
            if (k > 0) s += ",";
            s += std::to_string(indices[k]);
        }
        return s + "]";
    }

    friend bool operator==(const YWord&, const YWord&) = default;
    friend auto operator<=>(const YWord&, const YWord&) = default;
};

}  // namespace dskrv
