#pragma once

#include "genusdist/errors.hpp"

#include <cstddef>
#include <cstdint>
#include <map>
#include <span>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

namespace genusdist {

/**
 * A chord diagram with n chords: a fixed-point-free involution on the
 * endpoints 0 .. 2n-1, read counterclockwise from the basepoint (0,1).
 * Endpoint i is glued to partner(i).
 */
class ChordDiagram {
public:
    using Endpoint = std::uint32_t;

    /// Validates that `pairing` is a fixed-point-free involution of even, positive size.
    static ChordDiagram from_pairing(std::vector<Endpoint> pairing);

    std::size_t chords() const noexcept { return pairing_.size() / 2; }
    std::size_t endpoints() const noexcept { return pairing_.size(); }
    Endpoint partner(std::size_t i) const { return pairing_[i]; }
    std::span<const Endpoint> pairing() const noexcept { return pairing_; }

    friend bool operator==(const ChordDiagram&, const ChordDiagram&) = default;

private:
    explicit ChordDiagram(std::vector<Endpoint> pairing) : pairing_(std::move(pairing)) {}
    std::vector<Endpoint> pairing_;
};

/// Boundary components of the thickened diagram.
struct FaceStructure {
    std::vector<std::size_t> sides;  // side count of each face, in order of first endpoint visited

    std::size_t face_count() const noexcept { return sides.size(); }
};

/**
 * Builds a diagram from a word in which every symbol occurs exactly twice;
 * position i is paired with the other occurrence of word[i].
 */
template <typename Symbol>
ChordDiagram from_word(std::span<const Symbol> word) {
    if (word.empty() || word.size() % 2 != 0) {
        throw OddLength("word length " + std::to_string(word.size()) + " is not even and positive");
    }
    std::map<Symbol, std::vector<std::size_t>> positions;
    for (std::size_t i = 0; i < word.size(); ++i) positions[word[i]].push_back(i);

    std::vector<ChordDiagram::Endpoint> pairing(word.size());
    for (const auto& [symbol, at] : positions) {
        if (at.size() != 2) {
            std::ostringstream msg;
            msg << "symbol '" << symbol << "' occurs " << at.size() << " times, expected 2";
            throw SymbolCountNotTwo(msg.str());
        }
        pairing[at[0]] = static_cast<ChordDiagram::Endpoint>(at[1]);
        pairing[at[1]] = static_cast<ChordDiagram::Endpoint>(at[0]);
    }
    return ChordDiagram::from_pairing(std::move(pairing));
}

template <typename Symbol>
ChordDiagram from_word(const std::vector<Symbol>& word) {
    return from_word(std::span<const Symbol>(word));
}

/**
 * Splits CLI word text into symbols. Whitespace or commas separate symbols;
 * text with neither is read one character per symbol ("abab").
 */
std::vector<std::string> parse_word(std::string_view text);

/// parse_word followed by from_word.
ChordDiagram diagram_from_text(std::string_view text);

/// Cycles of the boundary walk i -> partner(i) + 1 (mod 2n).
FaceStructure faces(const ChordDiagram& d);

/// Same walk on a raw pairing (assumed valid); side counts go to `sides`.
void boundary_cycles(std::span<const ChordDiagram::Endpoint> pairing, std::vector<std::uint8_t>& scratch,
                     std::vector<std::size_t>& sides);

/// Number of faces only; reuses `scratch` to avoid allocation in hot loops.
std::size_t face_count(const ChordDiagram& d, std::vector<std::uint8_t>& scratch);

/// (n + 1 - F) / 2.
std::size_t genus(const ChordDiagram& d);

/// Genus from a known face count; asserts the Euler-characteristic parity.
std::size_t genus_from_faces(std::size_t chords, std::size_t face_count);

/// Symbols numbered 1, 2, ... in order of first occurrence.
std::vector<std::size_t> to_word(const ChordDiagram& d);

/// to_word rendered as space-separated integers, e.g. "1 2 1 2".
std::string to_word_string(const ChordDiagram& d);

/// True when no two chords cross (stack test).
bool is_noncrossing(const ChordDiagram& d);

/// Moves the basepoint: endpoint i becomes i + shift (mod 2n).
ChordDiagram rotated(const ChordDiagram& d, std::size_t shift);

/// Mirror image: endpoint i becomes 2n - 1 - i.
ChordDiagram reflected(const ChordDiagram& d);

} // namespace genusdist
