#pragma once

#include <algorithm>
#include <cctype>
#include <cstdlib>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace krammer {

/// sigma_index^sign
struct Letter {
    int index = 1;
    int sign = 1;

    bool operator==(const Letter&) const = default;
    int signed_index() const { return sign * index; }
};

struct BraidParseError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

/// A word in the Artin generators of B_n.  No reduction is ever applied.
class BraidWord {
public:
    explicit BraidWord(int strands, std::vector<Letter> letters = {})
        : strands_(strands), letters_(std::move(letters))
    {
        if (strands_ < 2) throw std::invalid_argument("braid group needs at least 2 strands");
        for (const auto& l : letters_) {
            if (l.index < 1 || l.index > strands_ - 1)
                throw std::invalid_argument("generator index " + std::to_string(l.index) +
                                            " out of range for B_" + std::to_string(strands_));
            if (l.sign != 1 && l.sign != -1) throw std::invalid_argument("letter sign must be +-1");
        }
    }

    static BraidWord from_signed(int strands, const std::vector<int>& indices)
    {
        std::vector<Letter> letters;
        letters.reserve(indices.size());
        for (int k : indices) {
            if (k == 0) throw std::invalid_argument("zero is not a braid generator");
            letters.push_back({std::abs(k), k > 0 ? 1 : -1});
        }
        return BraidWord(strands, std::move(letters));
    }

    int strands() const { return strands_; }
    const std::vector<Letter>& letters() const { return letters_; }
    std::size_t length() const { return letters_.size(); }
    bool empty() const { return letters_.empty(); }

    std::vector<int> signed_indices() const
    {
        std::vector<int> out;
        out.reserve(letters_.size());
        for (const auto& l : letters_) out.push_back(l.signed_index());
        return out;
    }

    bool operator==(const BraidWord&) const = default;

    BraidWord operator*(const BraidWord& o) const
    {
        if (o.strands_ != strands_) throw std::invalid_argument("concatenating words of different B_n");
        auto letters = letters_;
        letters.insert(letters.end(), o.letters_.begin(), o.letters_.end());
        return BraidWord(strands_, std::move(letters));
    }

private:
    int strands_;
    std::vector<Letter> letters_;
};

/**
 * Parses whitespace- or comma-separated nonzero integers; -j stands for the
 * inverse of sigma_j.
 */
inline BraidWord parse_word(std::string_view text, int strands)
{
    if (strands < 2) throw BraidParseError("braid group needs at least 2 strands");
    std::vector<Letter> letters;
    std::size_t pos = 0;
    auto is_sep = [](char c) { return std::isspace(static_cast<unsigned char>(c)) || c == ','; };
    while (pos < text.size()) {
        if (is_sep(text[pos])) {
            ++pos;
            continue;
        }
        std::size_t end = pos;
        while (end < text.size() && !is_sep(text[end])) ++end;
        std::string token(text.substr(pos, end - pos));
        pos = end;

        std::size_t digits = (token[0] == '-' || token[0] == '+') ? 1 : 0;
        if (digits == token.size() ||
            !std::all_of(token.begin() + static_cast<std::ptrdiff_t>(digits), token.end(),
                         [](char c) { return std::isdigit(static_cast<unsigned char>(c)); }))
            throw BraidParseError("malformed braid letter '" + token + "'");
        if (token.size() > 10) throw BraidParseError("braid letter '" + token + "' out of range");
        long k = std::stol(token);
        if (k == 0) throw BraidParseError("zero is not a braid generator");
        if (std::labs(k) > strands - 1)
            throw BraidParseError("generator " + token + " out of range for B_" + std::to_string(strands));
        letters.push_back({static_cast<int>(std::labs(k)), k > 0 ? 1 : -1});
    }
    return BraidWord(strands, std::move(letters));
}

/// Smallest n for which the text is a valid word (1 + max |index|, at least 2).
inline int infer_strands(std::string_view text)
{
    int best = 1;
    std::string token;
    auto flush = [&] {
        if (token.empty()) return;
        try {
            best = std::max(best, static_cast<int>(std::labs(std::stol(token))));
        } catch (const std::exception&) {
            throw BraidParseError("malformed braid letter '" + token + "'");
        }
        token.clear();
    };
    for (char c : text) {
        if (std::isspace(static_cast<unsigned char>(c)) || c == ',')
            flush();
        else
            token.push_back(c);
    }
    flush();
    return std::max(2, best + 1);
}

inline std::string render(const BraidWord& w)
{
    std::string out;
    for (const auto& l : w.letters()) {
        if (!out.empty()) out += ' ';
        out += std::to_string(l.signed_index());
    }
    return out;
}

/// Letters in reverse order, signs kept: the word of c f^-1 c.
inline BraidWord reverse_word(const BraidWord& w)
{
    return BraidWord(w.strands(), {w.letters().rbegin(), w.letters().rend()});
}

/// Signs flipped, order kept: the image under f -> c f c.
inline BraidWord mirror_word(const BraidWord& w)
{
    auto letters = w.letters();
    for (auto& l : letters) l.sign = -l.sign;
    return BraidWord(w.strands(), std::move(letters));
}

inline BraidWord inverse_word(const BraidWord& w) { return mirror_word(reverse_word(w)); }

inline int exponent_sum(const BraidWord& w)
{
    int sum = 0;
    for (const auto& l : w.letters()) sum += l.sign;
    return sum;
}

}  // namespace krammer
