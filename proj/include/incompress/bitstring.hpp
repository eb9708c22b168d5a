#ifndef INCOMPRESS_BITSTRING_HPP
#define INCOMPRESS_BITSTRING_HPP

#include <cstddef>
#include <cstdint>
#include <functional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace incompress {

// Finite binary string. Bits are stored leftmost-first; codewords grow and
// concatenate left to right. The empty string prints as the token "eps".
class BitString {
public:
    BitString() = default;

    static BitString zeros(std::size_t n) { return BitString(std::vector<std::uint8_t>(n, 0)); }
    static BitString ones(std::size_t n) { return BitString(std::vector<std::uint8_t>(n, 1)); }

    // Accepts a run of '0'/'1' characters, or the token "eps" for the
    // empty string. Anything else is rejected.
    static BitString from_string(std::string_view text) {
        if (text == "eps") return BitString{};
        BitString out;
        out.bits_.reserve(text.size());
        for (char ch : text) {
            if (ch != '0' && ch != '1')
                throw std::invalid_argument("bitstring may contain only '0' and '1' (or be \"eps\")");
            out.bits_.push_back(static_cast<std::uint8_t>(ch - '0'));
        }
        return out;
    }

    std::size_t size() const { return bits_.size(); }
    bool empty() const { return bits_.empty(); }

    int operator[](std::size_t i) const { return bits_[i]; }

    void set(std::size_t i, int bit) { bits_[i] = static_cast<std::uint8_t>(bit & 1); }

    void push_back(int bit) { bits_.push_back(static_cast<std::uint8_t>(bit & 1)); }

    BitString& append(const BitString& other) {
        bits_.insert(bits_.end(), other.bits_.begin(), other.bits_.end());
        return *this;
    }

    BitString substr(std::size_t pos, std::size_t len = std::string::npos) const {
        if (pos > bits_.size()) throw std::out_of_range("bitstring substr past end");
        std::size_t avail = bits_.size() - pos;
        std::size_t take = len < avail ? len : avail;
        return BitString(std::vector<std::uint8_t>(bits_.begin() + static_cast<std::ptrdiff_t>(pos),
                                                   bits_.begin() + static_cast<std::ptrdiff_t>(pos + take)));
    }

    bool is_prefix_of(const BitString& other) const {
        if (size() > other.size()) return false;
        for (std::size_t i = 0; i < size(); ++i)
            if (bits_[i] != other.bits_[i]) return false;
        return true;
    }

    std::size_t count(int bit) const {
        std::size_t c = 0;
        for (std::uint8_t b : bits_) c += (b == bit);
        return c;
    }

    // "101..."; empty string renders as "".
    std::string str() const {
        std::string out(bits_.size(), '0');
        for (std::size_t i = 0; i < bits_.size(); ++i) out[i] = static_cast<char>('0' + bits_[i]);
        return out;
    }

    // CLI/text form: the empty string is the token "eps".
    std::string display() const { return bits_.empty() ? std::string("eps") : str(); }

    friend bool operator==(const BitString& a, const BitString& b) { return a.bits_ == b.bits_; }
    friend bool operator!=(const BitString& a, const BitString& b) { return !(a == b); }
    friend bool operator<(const BitString& a, const BitString& b) { return a.bits_ < b.bits_; }

    friend BitString operator+(BitString a, const BitString& b) {
        a.append(b);
        return a;
    }

private:
    explicit BitString(std::vector<std::uint8_t> bits) : bits_(std::move(bits)) {}
    std::vector<std::uint8_t> bits_;
};

} // namespace incompress

template <>
struct std::hash<incompress::BitString> {
    std::size_t operator()(const incompress::BitString& s) const {
        // FNV-1a over length then bits
        std::uint64_t h = 1469598103934665603ULL;
        auto mix = [&h](std::uint64_t v) {
            h ^= v;
            h *= 1099511628211ULL;
        };
        mix(s.size());
        for (std::size_t i = 0; i < s.size(); ++i) mix(static_cast<std::uint64_t>(s[i]));
        return static_cast<std::size_t>(h);
    }
};

#endif
