#pragma once

#include <bit>
#include <cstdint>
#include <functional>
#include <string>
#include <vector>

namespace credo {

// Set of valuations (truth assignments) represented as a bitmask.
// Bit v is set iff valuation with index v belongs to the set. Valuation
// indices encode atom truth values with atom 0 in the least significant bit.
class TruthSet {
public:
    TruthSet() = default;
    explicit TruthSet(uint32_t valuation_count)
        : size_(valuation_count), words_((valuation_count + 63) / 64, 0) {}

    static TruthSet none(uint32_t n) { return TruthSet(n); }
    static TruthSet all(uint32_t n) {
        TruthSet t(n);
        for (auto& w : t.words_) w = ~uint64_t{0};
        t.trim();
        return t;
    }
    static TruthSet single(uint32_t n, uint32_t v) {
        TruthSet t(n);
        t.set(v);
        return t;
    }

    uint32_t size() const { return size_; }

    bool test(uint32_t v) const { return (words_[v >> 6] >> (v & 63)) & 1; }
    void set(uint32_t v) { words_[v >> 6] |= uint64_t{1} << (v & 63); }

    uint32_t count() const {
        uint32_t c = 0;
        for (uint64_t w : words_) c += static_cast<uint32_t>(std::popcount(w));
        return c;
    }

    bool empty() const {
        for (uint64_t w : words_)
            if (w) return false;
        return true;
    }
    bool full() const { return count() == size_; }

    bool subset_of(const TruthSet& other) const {
        for (size_t i = 0; i < words_.size(); ++i)
            if (words_[i] & ~other.words_[i]) return false;
        return true;
    }

    friend TruthSet operator&(const TruthSet& a, const TruthSet& b) {
        TruthSet r(a.size_);
        for (size_t i = 0; i < r.words_.size(); ++i) r.words_[i] = a.words_[i] & b.words_[i];
        return r;
    }
    friend TruthSet operator|(const TruthSet& a, const TruthSet& b) {
        TruthSet r(a.size_);
        for (size_t i = 0; i < r.words_.size(); ++i) r.words_[i] = a.words_[i] | b.words_[i];
        return r;
    }
    friend TruthSet operator^(const TruthSet& a, const TruthSet& b) {
        TruthSet r(a.size_);
        for (size_t i = 0; i < r.words_.size(); ++i) r.words_[i] = a.words_[i] ^ b.words_[i];
        return r;
    }
    friend TruthSet operator~(const TruthSet& a) {
        TruthSet r(a.size_);
        for (size_t i = 0; i < r.words_.size(); ++i) r.words_[i] = ~a.words_[i];
        r.trim();
        return r;
    }

    bool operator==(const TruthSet& other) const = default;

    template <class Fn>
    void for_each(Fn&& fn) const {
        for (size_t i = 0; i < words_.size(); ++i) {
            uint64_t w = words_[i];
            while (w) {
                uint32_t b = static_cast<uint32_t>(std::countr_zero(w));
                fn(static_cast<uint32_t>(i * 64 + b));
                w &= w - 1;
            }
        }
    }

    // "{0,3,5}"-style listing, handy in diagnostics
    std::string to_string() const {
        std::string out = "{";
        bool first = true;
        for_each([&](uint32_t v) {
            if (!first) out += ',';
            out += std::to_string(v);
            first = false;
        });
        out += '}';
        return out;
    }

    size_t hash() const {
        size_t h = std::hash<uint32_t>{}(size_);
        for (uint64_t w : words_) h ^= std::hash<uint64_t>{}(w) + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
        return h;
    }

private:
    void trim() {
        uint32_t tail = size_ & 63;
        if (tail && !words_.empty()) words_.back() &= (uint64_t{1} << tail) - 1;
    }

    uint32_t size_ = 0;
    std::vector<uint64_t> words_;
};

struct TruthSetHash {
    size_t operator()(const TruthSet& t) const { return t.hash(); }
};

}  // namespace credo
