#pragma once

#include <algorithm>
#include <compare>
#include <initializer_list>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace fdb {

/// Commutative monomial x_{n1}^{d1} ... x_{nk}^{dk} in generators indexed by n >= 1.
///
/// Stored as (index, exponent) pairs sorted by index, with strictly positive
/// exponents. The empty monomial is the unit. Degree is sum of n * d.
class CommMonomial {
public:
    CommMonomial() = default;

    explicit CommMonomial(std::vector<std::pair<int, int>> powers) {
        std::sort(powers.begin(), powers.end());
        for (const auto& [n, d] : powers) {
            if (n < 1) throw std::invalid_argument("monomial generator index must be >= 1");
            if (d < 0) throw std::invalid_argument("monomial exponent must be non-negative");
            if (d == 0) continue;
            if (!powers_.empty() && powers_.back().first == n)
                powers_.back().second += d;
            else
                powers_.emplace_back(n, d);
        }
    }

    CommMonomial(std::initializer_list<std::pair<int, int>> powers)
        : CommMonomial(std::vector<std::pair<int, int>>(powers)) {}

    static CommMonomial generator(int n, int exponent = 1) { return CommMonomial({{n, exponent}}); }

    /// Monomial whose generator multiset is the given list of indices.
    static CommMonomial from_indices(const std::vector<int>& indices) {
        std::vector<std::pair<int, int>> p;
        p.reserve(indices.size());
        for (int n : indices) p.emplace_back(n, 1);
        return CommMonomial(std::move(p));
    }

    const std::vector<std::pair<int, int>>& powers() const { return powers_; }
    bool is_unit() const { return powers_.empty(); }

    int degree() const {
        int d = 0;
        for (const auto& [n, e] : powers_) d += n * e;
        return d;
    }

    /// Number of generator factors counted with multiplicity.
    int length() const {
        int l = 0;
        for (const auto& [n, e] : powers_) l += e;
        return l;
    }

    int exponent(int n) const {
        for (const auto& [k, e] : powers_)
            if (k == n) return e;
        return 0;
    }

    /// Generator indices with multiplicity, ascending.
    std::vector<int> indices() const {
        std::vector<int> out;
        for (const auto& [n, e] : powers_) out.insert(out.end(), static_cast<std::size_t>(e), n);
        return out;
    }

    friend CommMonomial operator*(const CommMonomial& a, const CommMonomial& b) {
        std::vector<std::pair<int, int>> p = a.powers_;
        p.insert(p.end(), b.powers_.begin(), b.powers_.end());
        return CommMonomial(std::move(p));
    }

    friend bool operator==(const CommMonomial&, const CommMonomial&) = default;
    friend auto operator<=>(const CommMonomial&, const CommMonomial&) = default;

private:
    std::vector<std::pair<int, int>> powers_;
};

inline std::string to_string(const CommMonomial& m, const std::string& symbol = "x") {
    if (m.is_unit()) return "1";
    std::string s;
    for (const auto& [n, e] : m.powers()) {
        if (!s.empty()) s += ' ';
        s += symbol + std::to_string(n);
        if (e != 1) s += '^' + std::to_string(e);
    }
    return s;
}

/// Non-commutative monomial: a word in generators indexed by n >= 1.
/// The empty word is the unit; multiplication is concatenation.
struct Word {
    std::vector<int> letters;

    Word() = default;
    Word(std::initializer_list<int> l) : letters(l) { validate(); }
    explicit Word(std::vector<int> l) : letters(std::move(l)) { validate(); }

    bool empty() const { return letters.empty(); }
    std::size_t size() const { return letters.size(); }

    int degree() const {
        int d = 0;
        for (int n : letters) d += n;
        return d;
    }

    friend Word operator*(const Word& a, const Word& b) {
        Word w;
        w.letters.reserve(a.size() + b.size());
        w.letters = a.letters;
        w.letters.insert(w.letters.end(), b.letters.begin(), b.letters.end());
        return w;
    }

    friend bool operator==(const Word&, const Word&) = default;
    friend auto operator<=>(const Word&, const Word&) = default;

private:
    void validate() const {
        for (int n : letters)
            if (n < 1) throw std::invalid_argument("word letters must be >= 1");
    }
};

inline std::string to_string(const Word& w, const std::string& symbol = "x") {
    if (w.empty()) return "1";
    std::string s;
    for (int n : w.letters) s += symbol + std::to_string(n);
    return s;
}

/// Letter of a free product alphabet: a generator index tagged by the copy it lives in.
struct TaggedLetter {
    char tag;
    int index;
    friend bool operator==(const TaggedLetter&, const TaggedLetter&) = default;
    friend auto operator<=>(const TaggedLetter&, const TaggedLetter&) = default;
};

/// Word in a multi-copy alphabet (x1, y1, x2, ...); unit is the empty word.
struct TaggedWord {
    std::vector<TaggedLetter> letters;

    TaggedWord() = default;
    TaggedWord(std::initializer_list<TaggedLetter> l) : letters(l) {}
    explicit TaggedWord(std::vector<TaggedLetter> l) : letters(std::move(l)) {}

    bool empty() const { return letters.empty(); }
    int degree() const {
        int d = 0;
        for (const auto& l : letters) d += l.index;
        return d;
    }

    friend TaggedWord operator*(const TaggedWord& a, const TaggedWord& b) {
        TaggedWord w(a.letters);
        w.letters.insert(w.letters.end(), b.letters.begin(), b.letters.end());
        return w;
    }

    friend bool operator==(const TaggedWord&, const TaggedWord&) = default;
    friend auto operator<=>(const TaggedWord&, const TaggedWord&) = default;
};

inline std::string to_string(const TaggedWord& w) {
    if (w.empty()) return "1";
    std::string s;
    for (const auto& l : w.letters) s += l.tag + std::to_string(l.index);
    return s;
}

/// Single indexed generator such as e_n or x_n; `Symbol` is only used for printing.
template <char Symbol>
struct Gen {
    int n;
    friend bool operator==(const Gen&, const Gen&) = default;
    friend auto operator<=>(const Gen&, const Gen&) = default;
};

template <char Symbol>
std::string to_string(const Gen<Symbol>& g) {
    return std::string(1, Symbol) + std::to_string(g.n);
}

namespace monomial_detail {

/// Reads "x3^2 x1" style text into (index, exponent) factors in order of appearance.
/// Separating spaces are optional; "1" alone denotes the unit.
inline std::vector<std::pair<int, int>> read_factors(std::string_view text, char symbol) {
    std::vector<std::pair<int, int>> out;
    std::size_t i = 0;
    auto fail = [&](const std::string& why) {
        throw std::invalid_argument("malformed monomial '" + std::string(text) + "': " + why);
    };
    auto number = [&]() {
        const std::size_t start = i;
        while (i < text.size() && text[i] >= '0' && text[i] <= '9') ++i;
        if (i == start) fail("expected a number");
        if (i - start > 6) fail("index too large");
        return std::stoi(std::string(text.substr(start, i - start)));
    };
    auto skip = [&] {
        while (i < text.size() && (text[i] == ' ' || text[i] == '*')) ++i;
    };
    skip();
    if (i < text.size() && text[i] == '1') {
        ++i;
        skip();
        if (i != text.size()) fail("unit '1' cannot be combined with generators");
        return out;
    }
    while (i < text.size()) {
        if (text[i] != symbol) fail(std::string("expected '") + symbol + "'");
        ++i;
        const int n = number();
        int e = 1;
        if (i < text.size() && text[i] == '^') {
            ++i;
            e = number();
        }
        out.emplace_back(n, e);
        skip();
    }
    if (out.empty()) fail("empty (write 1 for the unit)");
    return out;
}

}  // namespace monomial_detail

/// Inverse of to_string(CommMonomial).
inline CommMonomial parse_monomial(std::string_view text, char symbol = 'x') {
    return CommMonomial(monomial_detail::read_factors(text, symbol));
}

/// Inverse of to_string(Word); "x1^2" is read as x1 x1.
inline Word parse_word(std::string_view text, char symbol = 'x') {
    std::vector<int> letters;
    for (const auto& [n, e] : monomial_detail::read_factors(text, symbol)) {
        if (e < 1) throw std::invalid_argument("word exponents must be >= 1");
        letters.insert(letters.end(), static_cast<std::size_t>(e), n);
    }
    return Word(std::move(letters));
}

}  // namespace fdb
