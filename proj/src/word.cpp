#include "lsg/word.hpp"

#include <cctype>
#include <charconv>
#include <stdexcept>

namespace lsg {

Word::Word(std::span<const Letter> letters, Residue p) : letters_(free_reduce(letters, p).letters_) {}

std::size_t Word::length() const {
    std::size_t total = 0;
    for (const auto& l : letters_) total += l.exp;
    return total;
}

Word Word::inverse(Residue p) const {
    Word out;
    out.letters_.reserve(letters_.size());
    for (auto it = letters_.rbegin(); it != letters_.rend(); ++it) {
        out.letters_.push_back({it->gen, p - it->exp});
    }
    return out;
}

Word Word::concat(const Word& rhs, Residue p) const {
    std::vector<Letter> joined;
    joined.reserve(letters_.size() + rhs.letters_.size());
    joined.insert(joined.end(), letters_.begin(), letters_.end());
    joined.insert(joined.end(), rhs.letters_.begin(), rhs.letters_.end());
    return free_reduce(joined, p);
}

Word Word::conjugate_by(const Word& u, Residue p) const {
    std::vector<Letter> joined;
    joined.reserve(2 * u.letters_.size() + letters_.size());
    joined.insert(joined.end(), u.letters_.begin(), u.letters_.end());
    joined.insert(joined.end(), letters_.begin(), letters_.end());
    for (auto it = u.letters_.rbegin(); it != u.letters_.rend(); ++it) {
        joined.push_back({it->gen, p - it->exp});
    }
    return free_reduce(joined, p);
}

Word free_reduce(std::span<const Letter> letters, Residue p) {
    Word out;
    auto& stack = out.letters_;
    stack.reserve(letters.size());
    for (const auto& l : letters) {
        const auto e = static_cast<std::uint32_t>(l.exp % p);
        if (e == 0) continue;
        if (!stack.empty() && stack.back().gen == l.gen) {
            const auto merged = (stack.back().exp + e) % p;
            if (merged == 0) {
                stack.pop_back();
            } else {
                stack.back().exp = merged;
            }
        } else {
            stack.push_back({l.gen, e});
        }
    }
    return out;
}

Word free_reduce(const Word& w, Residue p) { return free_reduce(w.letters(), p); }

std::string format_word(std::span<const Letter> letters, std::size_t n) {
    if (letters.empty()) return "1";
    std::string out;
    for (std::size_t i = 0; i < letters.size(); ++i) {
        if (i > 0) out += '*';
        if (letters[i].gen == n) {
            out += 'J';
        } else {
            out += 'g';
            out += std::to_string(letters[i].gen + 1);
        }
        if (letters[i].exp != 1) {
            out += '^';
            out += std::to_string(letters[i].exp);
        }
    }
    return out;
}

std::vector<Letter> parse_letters(std::string_view text, std::size_t n) {
    std::vector<Letter> out;
    std::size_t pos = 0;
    auto skip = [&] {
        while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
    };
    auto number = [&]() -> std::uint64_t {
        const auto start = pos;
        while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
        std::uint64_t v = 0;
        if (start == pos || std::from_chars(text.data() + start, text.data() + pos, v).ec != std::errc{}) {
            throw std::invalid_argument("expected integer at offset " + std::to_string(start));
        }
        return v;
    };

    const auto first = text.find_first_not_of(" \t\r\n");
    const auto last = text.find_last_not_of(" \t\r\n");
    if (first != std::string_view::npos && text.substr(first, last - first + 1) == "1") return out;
    while (true) {
        skip();
        if (pos >= text.size()) throw std::invalid_argument("unexpected end of word");
        Letter letter;
        if (text[pos] == 'J') {
            ++pos;
            letter.gen = static_cast<GeneratorId>(n);
        } else if (text[pos] == 'g') {
            ++pos;
            const auto k = number();
            if (k == 0 || k > n) throw std::invalid_argument("generator g" + std::to_string(k) + " out of range");
            letter.gen = static_cast<GeneratorId>(k - 1);
        } else {
            throw std::invalid_argument(std::string("unexpected character '") + text[pos] + "'");
        }
        if (pos < text.size() && text[pos] == '^') {
            ++pos;
            letter.exp = static_cast<std::uint32_t>(number());
        }
        out.push_back(letter);
        skip();
        if (pos >= text.size()) break;
        if (text[pos] != '*') throw std::invalid_argument("expected '*' between letters");
        ++pos;
    }
    return out;
}

std::size_t WordHash::operator()(const Word& w) const noexcept {
    std::uint64_t h = 0xcbf29ce484222325ull;
    for (const auto& l : w.letters()) {
        h ^= (static_cast<std::uint64_t>(l.gen) << 8) ^ l.exp;
        h *= 0x100000001b3ull;
    }
    return static_cast<std::size_t>(h);
}

}  // namespace lsg
