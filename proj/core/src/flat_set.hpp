#pragma once

#include <cstdint>
#include <vector>

namespace invar::detail {

// Open-addressing set of 64-bit keys. Key ~0 is reserved as the empty slot.
class FlatSet64 {
public:
    explicit FlatSet64(size_t expected = 16) { rehash(expected * 2 + 16); }

    bool insert(uint64_t k) {
        if ((size_ + 1) * 10 > slots_.size() * 7) rehash(slots_.size() * 2);
        size_t i = slot(k);
        if (slots_[i] == k) return false;
        slots_[i] = k;
        ++size_;
        return true;
    }
    bool contains(uint64_t k) const { return slots_[slot(k)] == k; }
    size_t size() const { return size_; }

private:
    static constexpr uint64_t kEmpty = ~uint64_t(0);
    static uint64_t mix(uint64_t x) {
        x ^= x >> 33;
        x *= 0xff51afd7ed558ccdULL;
        x ^= x >> 33;
        return x;
    }
    size_t slot(uint64_t k) const {
        size_t mask = slots_.size() - 1;
        size_t i = mix(k) & mask;
        while (slots_[i] != kEmpty && slots_[i] != k) i = (i + 1) & mask;
        return i;
    }
    void rehash(size_t want) {
        size_t cap = 16;
        while (cap < want) cap <<= 1;
        std::vector<uint64_t> old;
        old.swap(slots_);
        slots_.assign(cap, kEmpty);
        size_ = 0;
        for (uint64_t k : old)
            if (k != kEmpty) insert(k);
    }

    std::vector<uint64_t> slots_;
    size_t size_ = 0;
};

}  // namespace invar::detail
