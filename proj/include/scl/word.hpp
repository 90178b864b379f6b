#pragma once

#include <cstddef>
#include <map>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace scl {

// A free generator (1-based) or its inverse.
struct Letter {
    int generator = 1;
    int sign = 1;

    Letter inverse() const { return {generator, -sign}; }
    bool is_inverse_of(const Letter& other) const {
        return generator == other.generator && sign == -other.sign;
    }
    // 'a'..'z' for positive letters, 'A'..'Z' for inverses.
    char to_char() const;

    friend bool operator==(const Letter&, const Letter&) = default;
    friend auto operator<=>(const Letter&, const Letter&) = default;
};

Letter letter_from_char(char c);
std::string to_string(std::span<const Letter> letters);

// Cyclically reduced word of length at least 2. Positions are 1-based and
// wrap around, so at(0) == at(size()) and at(size() + 1) == at(1).
class CyclicWord {
public:
    // Throws InputError unless letters are cyclically reduced, of length >= 2,
    // and every generator lies in 1..rank.
    CyclicWord(std::vector<Letter> letters, int rank);

    std::size_t size() const { return letters_.size(); }
    int rank() const { return rank_; }
    const std::vector<Letter>& letters() const { return letters_; }

    int wrap(long position) const;
    const Letter& at(long position) const { return letters_[wrap(position) - 1]; }

    std::string to_string() const { return scl::to_string(letters_); }

    friend bool operator==(const CyclicWord&, const CyclicWord&) = default;

private:
    std::vector<Letter> letters_;
    int rank_;
};

struct ParsedWord {
    std::vector<Letter> letters;
    int rank = 0;
};

// Accepts [a-zA-Z]+; lowercase is a generator, uppercase its inverse.
ParsedWord parse_word(std::string_view text);

struct Reduction {
    CyclicWord word;
    std::size_t removed = 0;
};

// Free then cyclic reduction. Throws InputError if fewer than two letters
// survive. rank 0 means "highest generator used".
Reduction cyclically_reduce(std::span<const Letter> letters, int rank = 0);
Reduction cyclically_reduce(const ParsedWord& parsed);

std::map<int, long> exponent_sums(const CyclicWord& w);
bool in_commutator_subgroup(const CyclicWord& w);

}  // namespace scl
