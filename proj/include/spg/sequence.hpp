#pragma once

#include <cctype>
#include <string>
#include <vector>

#include "spg/errors.hpp"

namespace spg {

// Non-decreasing sequence of positive integers s_1..s_k. Color index i
// (1-based) refers to values()[i-1].
class SSequence {
  public:
    SSequence() = default;
    explicit SSequence(std::vector<int> values) : v_(std::move(values)) {
        if (v_.empty()) fail(errc::parse_error, "empty sequence");
        for (size_t i = 0; i < v_.size(); ++i) {
            if (v_[i] < 1) fail(errc::parse_error, "sequence values must be positive");
            if (i > 0 && v_[i] < v_[i - 1]) fail(errc::not_non_decreasing, format_raw(v_));
        }
    }

    const std::vector<int>& values() const { return v_; }
    int size() const { return (int)v_.size(); }
    int value(int index1) const {
        if (index1 < 1 || index1 > size()) fail(errc::index_out_of_range, "color index " + std::to_string(index1));
        return v_[index1 - 1];
    }

    // Maximal runs of equal values; precedence symmetry breaking and
    // canonicalization both act within these blocks.
    std::vector<std::pair<int, int>> blocks() const { // [first,last] 1-based inclusive
        std::vector<std::pair<int, int>> out;
        int i = 0;
        while (i < size()) {
            int j = i;
            while (j + 1 < size() && v_[j + 1] == v_[i]) ++j;
            out.push_back({i + 1, j + 1});
            i = j + 1;
        }
        return out;
    }

    bool operator==(const SSequence& o) const { return v_ == o.v_; }

    std::string str() const {
        // compact exponent form, e.g. (1,2^4,3)
        std::string s = "(";
        int i = 0;
        while (i < size()) {
            int j = i;
            while (j + 1 < size() && v_[j + 1] == v_[i]) ++j;
            if (i) s += ",";
            s += std::to_string(v_[i]);
            if (j > i) s += "^" + std::to_string(j - i + 1);
            i = j + 1;
        }
        return s + ")";
    }

  private:
    static std::string format_raw(const std::vector<int>& v) {
        std::string s;
        for (size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + std::to_string(v[i]);
        return s;
    }
    std::vector<int> v_;
};

// Parses "1^2,2^3,3" style text (exponents denote repetition). Whitespace
// and surrounding parentheses are tolerated.
inline SSequence parse_sequence(const std::string& text) {
    std::vector<int> vals;
    size_t i = 0;
    auto skip_ws = [&] {
        while (i < text.size() && (std::isspace((unsigned char)text[i]) || text[i] == '(' || text[i] == ')')) ++i;
    };
    auto read_int = [&]() -> int {
        skip_ws();
        if (i >= text.size() || !std::isdigit((unsigned char)text[i]))
            fail(errc::parse_error, "expected integer at position " + std::to_string(i) + " in '" + text + "'");
        long x = 0;
        while (i < text.size() && std::isdigit((unsigned char)text[i])) {
            x = x * 10 + (text[i] - '0');
            if (x > 1000000) fail(errc::parse_error, "value too large");
            ++i;
        }
        return (int)x;
    };
    skip_ws();
    if (i >= text.size()) fail(errc::parse_error, "empty sequence");
    while (true) {
        int base = read_int();
        int rep = 1;
        skip_ws();
        if (i < text.size() && text[i] == '^') {
            ++i;
            rep = read_int();
            if (rep < 1) fail(errc::parse_error, "exponent must be >= 1");
        }
        for (int r = 0; r < rep; ++r) vals.push_back(base);
        skip_ws();
        if (i < text.size() && text[i] == ',') {
            ++i;
            continue;
        }
        break;
    }
    skip_ws();
    if (i != text.size()) fail(errc::parse_error, "trailing characters in '" + text + "'");
    if (vals.size() > 64) fail(errc::parse_error, "at most 64 colors supported");
    return SSequence(vals);
}

} // namespace spg
