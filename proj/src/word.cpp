#include "braidkit/word.hpp"

#include <cstdlib>

#include "braidkit/error.hpp"

namespace braidkit {

namespace {

void check_alphabet(const Word& u, const Word& v) {
    if (u.alphabet_size() != v.alphabet_size())
        throw InvalidInput("alphabet mismatch: " + std::to_string(u.alphabet_size()) + " vs " +
                           std::to_string(v.alphabet_size()));
}

} // namespace

Word::Word(int alphabet_size) : alphabet_size_(alphabet_size) {
    if (alphabet_size < 0) throw InvalidInput("negative alphabet size");
}

Word Word::reduce(std::span<const int> letters, int alphabet_size) {
    Word w(alphabet_size);
    w.letters_.reserve(letters.size());
    for (int x : letters) {
        if (x == 0) throw InvalidInput("letter 0 is not a generator index");
        if (std::abs(x) > alphabet_size)
            throw InvalidInput("letter " + std::to_string(x) + " outside alphabet of size " +
                               std::to_string(alphabet_size));
        if (!w.letters_.empty() && w.letters_.back() == -x)
            w.letters_.pop_back();
        else
            w.letters_.push_back(x);
    }
    return w;
}

Word Word::generator(int index, int alphabet_size) {
    const int letter[] = {index};
    return reduce(letter, alphabet_size);
}

Word Word::inverse() const {
    Word w(alphabet_size_);
    w.letters_.assign(letters_.rbegin(), letters_.rend());
    for (int& x : w.letters_) x = -x;
    return w;
}

Word Word::power(std::int64_t k) const {
    const Word base = k < 0 ? inverse() : *this;
    std::vector<int> joined;
    for (std::int64_t i = 0; i < (k < 0 ? -k : k); ++i)
        joined.insert(joined.end(), base.letters_.begin(), base.letters_.end());
    return reduce(joined, alphabet_size_);
}

Word operator*(const Word& u, const Word& v) {
    check_alphabet(u, v);
    std::vector<int> joined = u.letters_;
    joined.insert(joined.end(), v.letters_.begin(), v.letters_.end());
    return Word::reduce(joined, u.alphabet_size_);
}

Word commutator(const Word& u, const Word& v) {
    check_alphabet(u, v);
    return u.inverse() * v.inverse() * u * v;
}

std::vector<std::int64_t> exponent_vector(const Word& w, int n) {
    if (w.alphabet_size() > n) throw InvalidInput("word alphabet larger than requested vector length");
    std::vector<std::int64_t> v(static_cast<std::size_t>(n), 0);
    for (int x : w.letters()) v[static_cast<std::size_t>(std::abs(x) - 1)] += x > 0 ? 1 : -1;
    return v;
}

std::string to_string(const Word& w, const std::vector<std::string>& names) {
    if (w.empty()) return "1";
    std::string out;
    for (std::size_t i = 0; i < w.letters().size(); ++i) {
        const int x = w.letters()[i];
        if (i) out += ' ';
        const auto idx = static_cast<std::size_t>(std::abs(x) - 1);
        out += idx < names.size() ? names[idx] : "g" + std::to_string(idx + 1);
        if (x < 0) out += "^-1";
    }
    return out;
}

nlohmann::json to_json(const Word& w) { return w.letters(); }

Word word_from_json(const nlohmann::json& j, int alphabet_size) {
    if (!j.is_array()) throw InvalidInput("word must be a JSON array of signed integers");
    std::vector<int> letters;
    for (const auto& x : j) {
        if (!x.is_number_integer()) throw InvalidInput("word letters must be integers");
        letters.push_back(x.get<int>());
    }
    return Word::reduce(letters, alphabet_size);
}

} // namespace braidkit
