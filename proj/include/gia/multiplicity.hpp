#pragma once

#include <compare>
#include <cstdint>
#include <stdexcept>

namespace gia {

/// Edge multiplicity: a nonnegative count or infinity (an infinite bundle of
/// parallel edges). Infinity absorbs under addition and compares greater
/// than every finite value.
class Multiplicity {
public:
    constexpr Multiplicity() = default;
    constexpr Multiplicity(std::uint64_t n) : n_(n) {}

    static constexpr Multiplicity infinity() {
        Multiplicity m;
        m.inf_ = true;
        return m;
    }

    constexpr bool is_infinite() const { return inf_; }
    constexpr bool is_zero() const { return !inf_ && n_ == 0; }
    constexpr bool is_positive() const { return inf_ || n_ > 0; }

    /// Finite count; throws when infinite.
    constexpr std::uint64_t finite_value() const {
        if (inf_) throw std::logic_error("Multiplicity: finite_value() on infinity");
        return n_;
    }

    /// True when at least two parallel edges (infinity counts).
    constexpr bool at_least_two() const { return inf_ || n_ >= 2; }

    Multiplicity& operator+=(Multiplicity other) {
        if (inf_ || other.inf_) {
            inf_ = true;
            n_ = 0;
            return *this;
        }
        std::uint64_t sum = 0;
        if (__builtin_add_overflow(n_, other.n_, &sum))
            throw std::overflow_error("Multiplicity: sum exceeds 64 bits");
        n_ = sum;
        return *this;
    }

    friend Multiplicity operator+(Multiplicity a, Multiplicity b) { return a += b; }

    friend constexpr bool operator==(Multiplicity a, Multiplicity b) {
        return a.inf_ == b.inf_ && a.n_ == b.n_;
    }

    friend constexpr std::strong_ordering operator<=>(Multiplicity a, Multiplicity b) {
        if (a.inf_ != b.inf_) return a.inf_ ? std::strong_ordering::greater
                                            : std::strong_ordering::less;
        return a.n_ <=> b.n_;
    }

private:
    std::uint64_t n_ = 0;
    bool inf_ = false;
};

}  // namespace gia
