#pragma once

#include <cstdint>
#include <string>

#include "effap/errors.hpp"

namespace effap {

// Knobs shared across the pipeline. Precision escalation starts at
// `prec_start` bits and doubles up to `prec_cap`; operations that cannot
// decide at the cap throw UndecidableAtPrecision instead of guessing.
struct RunConfig {
    unsigned prec_start = 128;
    unsigned prec_cap = 1u << 16;
    long search_box_cap = 100000;
    std::uint64_t memory_cap_bytes = 1ull << 31;
    std::string output = "json";  // json | text
    std::uint64_t seed = 1;

    RunConfig with_cap(unsigned cap) const {
        RunConfig c = *this;
        c.prec_cap = cap;
        return c;
    }
};

// for (unsigned bits : PrecisionSchedule(cfg)) { ... }  -- start, 2*start, ..., <= cap
class PrecisionSchedule {
public:
    explicit PrecisionSchedule(const RunConfig& cfg) : start_(cfg.prec_start), cap_(cfg.prec_cap) {}
    PrecisionSchedule(unsigned start, unsigned cap) : start_(start), cap_(cap) {}

    class iterator {
    public:
        iterator(unsigned bits, unsigned cap) : bits_(bits), cap_(cap) {}
        unsigned operator*() const { return bits_; }
        iterator& operator++() {
            if (bits_ == 0 || bits_ > cap_ / 2)
                bits_ = 0;  // end sentinel
            else
                bits_ *= 2;
            return *this;
        }
        bool operator!=(const iterator& o) const { return bits_ != o.bits_; }

    private:
        unsigned bits_;
        unsigned cap_;
    };

    iterator begin() const { return iterator(start_ <= cap_ ? start_ : 0, cap_); }
    iterator end() const { return iterator(0, cap_); }

private:
    unsigned start_;
    unsigned cap_;
};

}  // namespace effap
