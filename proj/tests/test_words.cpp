#include "helpers.hpp"

#include "dskrv/word.hpp"

#include <catch2/catch_amalgamated.hpp>

#include <set>

using namespace dskrv;
using testutil::W;

TEST_CASE("word basics") {
    const Word w = W("xxyxy");
    CHECK(w.degree() == 5);
    CHECK(w.depth() == 2);
    CHECK(w.str() == "xxyxy");
    CHECK(w.first() == 0);
    CHECK(w.last() == 1);
    CHECK(w.letter(2) == 1);

    CHECK(Word(Alphabet::xy).str() == "1");
    CHECK(Word::parse("1", Alphabet::xy).empty());
    CHECK(Word::parse("ab", Alphabet::ab).str() == "ab");
    CHECK_THROWS_AS(Word::parse("ab", Alphabet::xy), std::invalid_argument);
    CHECK(Word::power(Alphabet::xy, 0, 3) == W("xxx"));
    CHECK(Word::power(Alphabet::xy, 1, 2) == W("yy"));
}

TEST_CASE("word ordering is graded lexicographic") {
    CHECK(W("y") < W("xx"));
    CHECK(W("xy") < W("yx"));
    CHECK(W("xxy") < W("xyx"));
    CHECK(lex_less(W("xy"), W("xyx")));   // prefix precedes extension
    CHECK(!lex_less(W("y"), W("xx")));    // plain lexicographic instead
}

TEST_CASE("concat, prefix, suffix, reverse, erase, replace") {
    CHECK(concat(W("xx"), W("yx")) == W("xxyx"));
    CHECK(concat(W(""), W("xy")) == W("xy"));
    CHECK(prefix(W("xxyxy"), 2) == W("xx"));
    CHECK(suffix(W("xxyxy"), 2) == W("xy"));
    CHECK(drop_first(W("yxx")) == W("xx"));
    CHECK(drop_last(W("yxx")) == W("yx"));
    CHECK(reverse(W("xxy")) == W("yxx"));
    CHECK(reverse(W("")) == W(""));
    CHECK(erase_letter(W("xyx"), 1) == W("xx"));
    CHECK(replace_letter(W("xyx"), 1, 0) == W("xxx"));
    CHECK(x_runs(W("xxyxy")) == std::vector<int>{2, 1, 0});
    CHECK(YWord::from_word(W("yxy")).indices == std::vector<int>{1, 2});
}

TEST_CASE("rotations and canonical class") {
    CHECK(rotated_left(W("xxy")) == W("xyx"));
    CHECK(canonical_rotation(W("yxy")) == W("xyy"));
    CHECK(canonical_rotation(W("yx")) == W("xy"));
    CHECK(canonical_rotation(W("xyxy")) == W("xyxy"));
    CHECK(rotation_orbit_size(W("xyxy")) == 2);
    CHECK(rotation_orbit_size(W("xxy")) == 3);
    CHECK(rotation_orbit_size(W("yyy")) == 1);
}

TEST_CASE("push on words") {
    CHECK(push(W("xxyxy")) == W("yxxyx"));
    CHECK(push(W("xxx")) == W("xxx"));
    CHECK(push(W("xy")) == W("yx"));
    CHECK(push(W("yx")) == W("xy"));
    CHECK(push(W("")) == W(""));
    // same cyclic rule over {a,b}
    CHECK(push(W("aab", Alphabet::ab)) == W("baa", Alphabet::ab));
    CHECK(push(W("aabab", Alphabet::ab)) == W("baaba", Alphabet::ab));
}

TEST_CASE("push_list length and final entry") {
    CHECK(push_list(W("xy")) == std::vector<Word>{W("yx"), W("xy")});
    CHECK(push_list(W("yy")) == std::vector<Word>{W("yy"), W("yy"), W("yy")});
    CHECK(push_list(W("xx")) == std::vector<Word>{W("xx")});
}

TEST_CASE("push is a bijection in every degree up to 10") {
    for (int n = 0; n <= 10; ++n) {
        std::set<Word> images;
        for (std::uint64_t b = 0; b < (std::uint64_t{1} << n); ++b) {
            const Word w(Alphabet::xy, b, n);
            images.insert(push(w));
            const auto list = push_list(w);
            REQUIRE(list.size() == static_cast<std::size_t>(w.depth()) + 1);
            REQUIRE(list.back() == w);
        }
        REQUIRE(images.size() == (std::size_t{1} << n));
    }
}

TEST_CASE("y-word decoding") {
    CHECK(YWord{{1}}.to_word() == W("y"));
    CHECK(YWord{{2}}.to_word() == W("xy"));
    CHECK(YWord{{3}}.to_word() == W("xxy"));
    CHECK(YWord{{1, 2}}.to_word() == W("yxy"));
    CHECK(YWord{{2, 1}}.to_word() == W("xyy"));
    CHECK(YWord{{1, 1, 1}}.to_word() == W("yyy"));
    CHECK(YWord{{2, 3}}.weight() == 5);
    CHECK(YWord{{2, 3}}.depth() == 2);
    CHECK_THROWS_AS(YWord::from_word(W("yx")), std::invalid_argument);
    CHECK_THROWS_AS(YWord::from_word(W("")), std::invalid_argument);
}

TEST_CASE("y-word round trip over all words ending in y") {
    for (int n = 1; n <= 8; ++n)
        for (std::uint64_t b = 1; b < (std::uint64_t{1} << n); b += 2) {
            const Word w(Alphabet::xy, b, n);
            REQUIRE(YWord::from_word(w).to_word() == w);
        }
}

TEST_CASE("mixed alphabets are rejected") {
    CHECK_THROWS_AS(concat(W("x"), Word::parse("a", Alphabet::ab)),
                    std::invalid_argument);
}
