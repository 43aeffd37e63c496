#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <tribreak/decrement_max_queue.hpp>
#include <tribreak/rng.hpp>

#include <cstdint>
#include <random>
#include <vector>

using tribreak::DecrementMaxQueue;

namespace {

/** Linear-scan reference with the same contract. */
struct RefQueue {
    std::vector<std::int64_t> score;
    std::vector<char> live;
    std::size_t count;

    explicit RefQueue(const std::vector<std::int64_t>& s)
        : score(s), live(s.size(), 1), count(s.size()) {}

    std::pair<std::uint32_t, std::int64_t> pop_max() {
        std::uint32_t best = 0;
        std::int64_t best_score = -1;
        for (std::uint32_t x = 0; x < score.size(); ++x) {
            if (live[x] && score[x] > best_score) {
                best = x;
                best_score = score[x];
            }
        }
        live[best] = 0;
        --count;
        return {best, best_score};
    }

    void decrement(std::uint32_t x) { --score[x]; }
};

} // namespace

TEST_CASE("pop order on a fixed instance") {
    DecrementMaxQueue q({3, 1, 3, 0, 2});
    CHECK(q.size() == 5);
    CHECK(q.pop_max() == std::pair<std::uint32_t, std::int64_t>{0, 3});
    CHECK(q.pop_max() == std::pair<std::uint32_t, std::int64_t>{2, 3});
    q.decrement(4); // 2 -> 1
    CHECK(q.pop_max() == std::pair<std::uint32_t, std::int64_t>{1, 1});
    CHECK(q.pop_max() == std::pair<std::uint32_t, std::int64_t>{4, 1});
    CHECK(q.pop_max() == std::pair<std::uint32_t, std::int64_t>{3, 0});
    CHECK(q.empty());
}

TEST_CASE("decrement between pops re-settles the head") {
    DecrementMaxQueue q({5, 4});
    q.decrement(0);
    q.decrement(0); // 0 drops to 3 while it is the standing head
    CHECK(q.pop_max() == std::pair<std::uint32_t, std::int64_t>{1, 4});
    CHECK(q.pop_max() == std::pair<std::uint32_t, std::int64_t>{0, 3});
}

TEST_CASE("contract violations throw") {
    CHECK_THROWS_AS(DecrementMaxQueue({1, -1}), std::invalid_argument);

    DecrementMaxQueue q({0, 2});
    CHECK_THROWS_AS(q.decrement(0), std::invalid_argument); // already at 0
    CHECK_THROWS_AS(q.decrement(7), std::invalid_argument); // out of range
    q.pop_max();
    CHECK_THROWS_AS(q.decrement(1), std::invalid_argument); // no longer enqueued
    q.pop_max();
    CHECK_THROWS_AS(q.pop_max(), std::out_of_range);
}

TEST_CASE("agrees with the linear-scan reference on random op sequences") {
    for (std::uint64_t seed = 0; seed < 40; ++seed) {
        std::mt19937_64 rng(seed * 7919 + 3);
        const std::size_t n = 1 + tribreak::uniform_below(rng, 80);
        std::vector<std::int64_t> scores(n);
        for (auto& s : scores)
            s = static_cast<std::int64_t>(tribreak::uniform_below(rng, 12));

        DecrementMaxQueue q(scores);
        RefQueue ref(scores);
        while (ref.count > 0) {
            // Mostly decrements, with pops mixed in.
            const bool do_pop = tribreak::uniform_below(rng, 4) == 0;
            if (do_pop) {
                REQUIRE(q.pop_max() == ref.pop_max());
                continue;
            }
            // Pick a live element with positive score, if any.
            std::vector<std::uint32_t> eligible;
            for (std::uint32_t x = 0; x < n; ++x)
                if (ref.live[x] && ref.score[x] > 0) eligible.push_back(x);
            if (eligible.empty()) {
                REQUIRE(q.pop_max() == ref.pop_max());
                continue;
            }
            const auto x =
                eligible[tribreak::uniform_below(rng, eligible.size())];
            q.decrement(x);
            ref.decrement(x);
            REQUIRE(q.score(x) == ref.score[x]);
        }
        CHECK(q.empty());
    }
}
