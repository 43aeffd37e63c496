#ifndef TRIBREAK_DECREMENT_MAX_QUEUE_HPP
#define TRIBREAK_DECREMENT_MAX_QUEUE_HPP

#include <algorithm>
#include <cstdint>
#include <stdexcept>
#include <utility>
#include <vector>

namespace tribreak {

/**
 * Max-priority queue over dense element ids 0..n-1 with non-negative integer
 * scores, supporting exactly the operations the discounting loop needs:
 * pop_max (ties by smallest id) and decrement-by-one.
 *
 * Bucket layout: buckets[s] is an append-only list of elements that had score
 * s at some point; an entry is current iff the element is still enqueued and
 * its score still equals s. A decrement appends the element one bucket down
 * and leaves the old entry stale. The max cursor only ever descends: a
 * decrement can never create a score above the current maximum, so once the
 * cursor lands on a bucket that bucket receives no further appends, and it is
 * sorted by id once to serve tie-broken pops. Total cost over a run is
 * O(n + max_score + #decrements).
 */
class DecrementMaxQueue {
public:
    /** Build from scores indexed by element id. Throws on negative scores. */
    explicit DecrementMaxQueue(const std::vector<std::int64_t>& scores) {
        std::int64_t max_score = 0;
        for (std::int64_t s : scores) {
            if (s < 0) throw std::invalid_argument("DecrementMaxQueue: negative score");
            max_score = std::max(max_score, s);
        }
        score_.assign(scores.begin(), scores.end());
        enqueued_.assign(scores.size(), 1);
        buckets_.resize(static_cast<std::size_t>(max_score) + 1);
        for (std::uint32_t x = 0; x < scores.size(); ++x) {
            buckets_[static_cast<std::size_t>(scores[x])].push_back(x);
        }
        cursor_ = max_score;
        live_count_ = scores.size();
    }

    std::size_t size() const { return live_count_; }
    bool empty() const { return live_count_ == 0; }

    /** Current score of an element (meaningful while it is enqueued). */
    std::int64_t score(std::uint32_t x) const { return score_[x]; }
    bool contains(std::uint32_t x) const { return x < enqueued_.size() && enqueued_[x]; }

    /**
     * Remove and return (element, score) with the maximal score, smallest id
     * among ties. Throws std::out_of_range when empty.
     */
    std::pair<std::uint32_t, std::int64_t> pop_max() {
        if (empty()) throw std::out_of_range("DecrementMaxQueue: pop on empty queue");
        settle(); // decrements since the last pop may have staled the head
        std::uint32_t x = buckets_[static_cast<std::size_t>(cursor_)][read_];
        ++read_;
        enqueued_[x] = 0;
        --live_count_;
        return {x, cursor_};
    }

    /**
     * Lower the score of an enqueued element by one.
     * Throws std::invalid_argument if x is not enqueued or already at 0.
     */
    void decrement(std::uint32_t x) {
        if (!contains(x)) throw std::invalid_argument("DecrementMaxQueue: element not enqueued");
        if (score_[x] == 0) throw std::invalid_argument("DecrementMaxQueue: score already 0");
        --score_[x];
        buckets_[static_cast<std::size_t>(score_[x])].push_back(x);
    }

private:
    // Advance read_/cursor_ to the next current entry; sort each bucket by id
    // when the cursor first lands on it (it is frozen from then on).
    void settle() {
        if (empty()) return;
        while (true) {
            auto& bucket = buckets_[static_cast<std::size_t>(cursor_)];
            while (read_ < bucket.size()) {
                std::uint32_t x = bucket[read_];
                if (enqueued_[x] && score_[x] == cursor_) return;
                ++read_;
            }
            --cursor_;
            read_ = 0;
            std::sort(buckets_[static_cast<std::size_t>(cursor_)].begin(),
                      buckets_[static_cast<std::size_t>(cursor_)].end());
        }
    }

    std::vector<std::int64_t> score_;
    std::vector<std::uint8_t> enqueued_;
    std::vector<std::vector<std::uint32_t>> buckets_;
    std::int64_t cursor_ = 0;
    std::size_t read_ = 0;
    std::size_t live_count_ = 0;
};

} // namespace tribreak

#endif
