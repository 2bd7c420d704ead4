#pragma once

#include <bit>
#include <cstdint>
#include <functional>
#include <stdexcept>
#include <string>
#include <vector>

namespace cofill {

/// Fixed-length bit-vector packed into 64-bit words, little-endian:
/// bit i lives in word i/64 at position i%64.
class BitVec {
public:
    BitVec() = default;
    explicit BitVec(std::uint64_t nbits)
        : nbits_(nbits), w_((nbits + 63) / 64, 0) {}

    std::uint64_t size() const { return nbits_; }

    bool test(std::uint64_t i) const { return (w_[i >> 6] >> (i & 63)) & 1u; }
    void set(std::uint64_t i, bool v = true) {
        std::uint64_t m = 1ull << (i & 63);
        if (v) w_[i >> 6] |= m; else w_[i >> 6] &= ~m;
    }
    void flip(std::uint64_t i) { w_[i >> 6] ^= 1ull << (i & 63); }

    std::uint64_t count() const {
        std::uint64_t c = 0;
        for (std::uint64_t x : w_) c += static_cast<std::uint64_t>(std::popcount(x));
        return c;
    }
    bool any() const {
        for (std::uint64_t x : w_) if (x) return true;
        return false;
    }

    BitVec& operator^=(const BitVec& o) {
        if (o.nbits_ != nbits_) throw std::invalid_argument("BitVec: length mismatch");
        for (std::size_t i = 0; i < w_.size(); ++i) w_[i] ^= o.w_[i];
        return *this;
    }
    friend BitVec operator^(BitVec a, const BitVec& b) { a ^= b; return a; }

    friend bool operator==(const BitVec& a, const BitVec& b) {
        return a.nbits_ == b.nbits_ && a.w_ == b.w_;
    }
    friend bool operator!=(const BitVec& a, const BitVec& b) { return !(a == b); }

    /// Total order: treat the vector as one big little-endian integer.
    /// Used for deterministic "colex-least" tie-breaking.
    friend bool less_as_integer(const BitVec& a, const BitVec& b) {
        for (std::size_t i = a.w_.size(); i-- > 0;)
            if (a.w_[i] != b.w_[i]) return a.w_[i] < b.w_[i];
        return false;
    }

    /// Visit every set bit in increasing index order.
    template <typename F>
    void for_each_set(F&& f) const {
        for (std::size_t wi = 0; wi < w_.size(); ++wi) {
            std::uint64_t x = w_[wi];
            while (x) {
                int b = std::countr_zero(x);
                f(static_cast<std::uint64_t>(wi) * 64 + static_cast<std::uint64_t>(b));
                x &= x - 1;
            }
        }
    }

    /// Hex encoding, little-endian over bit ranks, two digits per byte.
    std::string to_hex() const {
        static const char* digits = "0123456789abcdef";
        std::uint64_t nbytes = (nbits_ + 7) / 8;
        std::string s;
        s.reserve(nbytes * 2);
        for (std::uint64_t i = 0; i < nbytes; ++i) {
            unsigned byte = static_cast<unsigned>((w_[i >> 3] >> ((i & 7) * 8)) & 0xff);
            s.push_back(digits[byte >> 4]);
            s.push_back(digits[byte & 0xf]);
        }
        return s;
    }
    static BitVec from_hex(std::uint64_t nbits, const std::string& hex) {
        BitVec v(nbits);
        std::uint64_t nbytes = (nbits + 7) / 8;
        if (hex.size() != nbytes * 2) throw std::invalid_argument("BitVec: bad hex length");
        auto val = [](char c) -> unsigned {
            if (c >= '0' && c <= '9') return static_cast<unsigned>(c - '0');
            if (c >= 'a' && c <= 'f') return static_cast<unsigned>(c - 'a' + 10);
            if (c >= 'A' && c <= 'F') return static_cast<unsigned>(c - 'A' + 10);
            throw std::invalid_argument("BitVec: bad hex digit");
        };
        for (std::uint64_t i = 0; i < nbytes; ++i) {
            unsigned byte = (val(hex[2 * i]) << 4) | val(hex[2 * i + 1]);
            v.w_[i >> 3] |= static_cast<std::uint64_t>(byte) << ((i & 7) * 8);
        }
        if (nbits % 64 && (v.w_.back() >> (nbits % 64)))
            throw std::invalid_argument("BitVec: stray bits beyond length");
        return v;
    }

    const std::vector<std::uint64_t>& words() const { return w_; }

private:
    std::uint64_t nbits_ = 0;
    std::vector<std::uint64_t> w_;
};

}  // namespace cofill
