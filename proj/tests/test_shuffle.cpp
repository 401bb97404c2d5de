#include "helpers.hpp"

#include "dskrv/series.hpp"
#include "dskrv/shuffle.hpp"

#include <catch2/catch_amalgamated.hpp>

#include <algorithm>
#include <vector>

using namespace dskrv;
using testutil::W;

namespace {

// Independent shuffle: choose the positions of u among |u|+|v| slots.
std::vector<Word> shuffle_by_positions(const Word& u, const Word& v) {
    const int m = u.degree(), n = v.degree();
    std::vector<Word> out;
    std::vector<int> pick(static_cast<std::size_t>(m + n), 0);
    std::fill(pick.begin(), pick.begin() + m, 1);
    std::sort(pick.begin(), pick.end());
    do {
        Word w(u.alphabet());
        int iu = 0, iv = 0;
        for (int s = 0; s < m + n; ++s)
            w = appended(w, pick[static_cast<std::size_t>(s)]
                                ? u.letter(iu++)
                                : v.letter(iv++));
        out.push_back(w);
    } while (std::next_permutation(pick.begin(), pick.end()));
    return out;
}

std::vector<Word> sorted(std::vector<Word> v) {
    std::sort(v.begin(), v.end());
    return v;
}

// Stuffle output size depends only on the depths:
// N(r,s) = N(r-1,s) + N(r,s-1) + N(r-1,s-1).
long long stuffle_count(int r, int s) {
    if (r == 0 || s == 0) return 1;
    return stuffle_count(r - 1, s) + stuffle_count(r, s - 1) +
           stuffle_count(r - 1, s - 1);
}

}  // namespace

TEST_CASE("shuffle base cases and small examples") {
    CHECK(sorted(shuffle(W("x"), W("y"))) == sorted({W("xy"), W("yx")}));
    CHECK(sorted(shuffle(W("x"), W("xy"))) ==
          sorted({W("xxy"), W("xxy"), W("xyx")}));
    CHECK(shuffle(W(""), W("xyx")) == std::vector<Word>{W("xyx")});
    CHECK(shuffle(W("yx"), W("")) == std::vector<Word>{W("yx")});
}

TEST_CASE("shuffle multiset equals the position-choice expansion") {
    for (int m = 0; m <= 4; ++m)
        for (int n = 0; n <= 4; ++n)
            for (std::uint64_t bu = 0; bu < (std::uint64_t{1} << m); ++bu)
                for (std::uint64_t bv = 0; bv < (std::uint64_t{1} << n); bv += 3) {
                    const Word u(Alphabet::xy, bu, m);
                    const Word v(Alphabet::xy, bv % (std::uint64_t{1} << n), n);
                    const auto got = sorted(shuffle(u, v));
                    REQUIRE(got.size() ==
                            static_cast<std::size_t>(
                                detail::binomial_int(m + n, m).convert_to<long long>()));
                    REQUIRE(got == sorted(shuffle_by_positions(u, v)));
                }
}

TEST_CASE("stuffle base cases and small examples") {
    auto sorted_y = [](std::vector<YWord> v) {
        std::sort(v.begin(), v.end());
        return v;
    };
    CHECK(sorted_y(stuffle(YWord{{1}}, YWord{{2}})) ==
          sorted_y({YWord{{1, 2}}, YWord{{2, 1}}, YWord{{3}}}));
    CHECK(sorted_y(stuffle(YWord{{1}}, YWord{{1}})) ==
          sorted_y({YWord{{1, 1}}, YWord{{1, 1}}, YWord{{2}}}));
    CHECK(sorted_y(stuffle(YWord{{1}}, YWord{{1, 1}})) ==
          sorted_y({YWord{{1, 1, 1}}, YWord{{1, 1, 1}}, YWord{{1, 1, 1}},
                    YWord{{2, 1}}, YWord{{1, 2}}}));
    CHECK(stuffle(YWord{}, YWord{{2, 1}}) == std::vector<YWord>{YWord{{2, 1}}});
}

TEST_CASE("stuffle output size follows the depth recursion") {
    testutil::Rng rng(99);
    std::uniform_int_distribution<int> idx(1, 3);
    for (int r = 0; r <= 4; ++r)
        for (int s = 0; s <= 4; ++s) {
            YWord u, v;
            for (int i = 0; i < r; ++i) u.indices.push_back(idx(rng));
            for (int i = 0; i < s; ++i) v.indices.push_back(idx(rng));
            REQUIRE(stuffle(u, v).size() ==
                    static_cast<std::size_t>(stuffle_count(r, s)));
        }
}

TEST_CASE("stuffle preserves weight") {
    testutil::Rng rng(7);
    std::uniform_int_distribution<int> idx(1, 4);
    for (int trial = 0; trial < 20; ++trial) {
        YWord u, v;
        for (int i = 0; i < 3; ++i) u.indices.push_back(idx(rng));
        for (int i = 0; i < 2; ++i) v.indices.push_back(idx(rng));
        for (const YWord& w : stuffle(u, v))
            REQUIRE(w.weight() == u.weight() + v.weight());
    }
}
