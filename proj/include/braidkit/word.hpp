#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

namespace braidkit {

/// A freely reduced word over the signed alphabet {±1, ..., ±alphabet_size}.
/// Letter i > 0 stands for generator g_i, -i for its inverse.
class Word {
  public:
    Word() = default;

    /// The empty word over an alphabet of the given size.
    explicit Word(int alphabet_size);

    /// Freely reduces `letters`. Throws InvalidInput on a zero letter or a
    /// letter whose absolute value exceeds `alphabet_size`.
    static Word reduce(std::span<const int> letters, int alphabet_size);
    static Word reduce(std::initializer_list<int> letters, int alphabet_size) {
        return reduce(std::span<const int>(letters.begin(), letters.size()), alphabet_size);
    }

    static Word generator(int index, int alphabet_size);

    const std::vector<int>& letters() const noexcept { return letters_; }
    int alphabet_size() const noexcept { return alphabet_size_; }
    std::size_t length() const noexcept { return letters_.size(); }
    bool empty() const noexcept { return letters_.empty(); }

    Word inverse() const;
    Word power(std::int64_t k) const;

    /// Concatenation followed by free reduction.
    friend Word operator*(const Word& u, const Word& v);

    friend bool operator==(const Word&, const Word&) = default;

  private:
    std::vector<int> letters_;
    int alphabet_size_ = 0;
};

/// [u, v] = u^-1 v^-1 u v.
Word commutator(const Word& u, const Word& v);

/// Signed occurrence count of each generator; length n.
std::vector<std::int64_t> exponent_vector(const Word& w, int n);

std::string to_string(const Word& w, const std::vector<std::string>& names);

nlohmann::json to_json(const Word& w);
Word word_from_json(const nlohmann::json& j, int alphabet_size);

} // namespace braidkit
