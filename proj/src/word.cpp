#include "scl/word.hpp"

#include <algorithm>
#include <deque>

#include "scl/errors.hpp"

namespace scl {

char Letter::to_char() const {
    if (generator < 1 || generator > 26) {
        throw InputError("generator " + std::to_string(generator) + " has no textual form");
    }
    const char base = sign > 0 ? 'a' : 'A';
    return static_cast<char>(base + generator - 1);
}

Letter letter_from_char(char c) {
    if (c >= 'a' && c <= 'z') return {c - 'a' + 1, 1};
    if (c >= 'A' && c <= 'Z') return {c - 'A' + 1, -1};
    throw InputError(std::string("illegal character '") + c + "' in word");
}

std::string to_string(std::span<const Letter> letters) {
    std::string out;
    out.reserve(letters.size());
    for (const auto& l : letters) out.push_back(l.to_char());
    return out;
}

CyclicWord::CyclicWord(std::vector<Letter> letters, int rank)
    : letters_(std::move(letters)), rank_(rank) {
    if (letters_.size() < 2) {
        throw InputError("cyclic word must have length at least 2");
    }
    const std::size_t len = letters_.size();
    for (std::size_t i = 0; i < len; ++i) {
        const auto& l = letters_[i];
        if (l.generator < 1 || l.generator > rank_ || (l.sign != 1 && l.sign != -1)) {
            throw InputError("letter outside the declared rank");
        }
        if (l.is_inverse_of(letters_[(i + 1) % len])) {
            throw InputError("word is not cyclically reduced");
        }
    }
}

int CyclicWord::wrap(long position) const {
    const long len = static_cast<long>(letters_.size());
    long r = (position - 1) % len;
    if (r < 0) r += len;
    return static_cast<int>(r + 1);
}

ParsedWord parse_word(std::string_view text) {
    if (text.empty()) throw InputError("empty word");
    ParsedWord out;
    out.letters.reserve(text.size());
    for (char c : text) {
        out.letters.push_back(letter_from_char(c));
        out.rank = std::max(out.rank, out.letters.back().generator);
    }
    return out;
}

Reduction cyclically_reduce(std::span<const Letter> letters, int rank) {
    if (letters.empty()) throw InputError("empty word");
    std::deque<Letter> stack;
    for (const auto& l : letters) {
        if (!stack.empty() && stack.back().is_inverse_of(l)) {
            stack.pop_back();
        } else {
            stack.push_back(l);
        }
    }
    while (stack.size() >= 2 && stack.front().is_inverse_of(stack.back())) {
        stack.pop_front();
        stack.pop_back();
    }
    if (stack.empty()) throw InputError("word reduces to the identity");
    if (stack.size() < 2) throw InputError("cyclic reduction has length 1");

    int used = 0;
    for (const auto& l : letters) used = std::max(used, l.generator);
    const std::size_t removed = letters.size() - stack.size();
    return {CyclicWord({stack.begin(), stack.end()}, std::max(rank, used)), removed};
}

Reduction cyclically_reduce(const ParsedWord& parsed) {
    return cyclically_reduce(parsed.letters, parsed.rank);
}

std::map<int, long> exponent_sums(const CyclicWord& w) {
    std::map<int, long> sums;
    for (int g = 1; g <= w.rank(); ++g) sums[g] = 0;
    for (const auto& l : w.letters()) sums[l.generator] += l.sign;
    return sums;
}

bool in_commutator_subgroup(const CyclicWord& w) {
    const auto sums = exponent_sums(w);
    return std::all_of(sums.begin(), sums.end(), [](const auto& kv) { return kv.second == 0; });
}

}  // namespace scl
