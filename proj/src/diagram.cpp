#include "genusdist/diagram.hpp"

#include <algorithm>
#include <stack>

namespace genusdist {

ChordDiagram ChordDiagram::from_pairing(std::vector<Endpoint> pairing) {
    const std::size_t m = pairing.size();
    if (m == 0 || m % 2 != 0) {
        throw OddLength("pairing size " + std::to_string(m) + " is not even and positive");
    }
    for (std::size_t i = 0; i < m; ++i) {
        const std::size_t j = pairing[i];
        if (j >= m || j == i || pairing[j] != i) {
            throw InvalidPairing("endpoint " + std::to_string(i) + " is not part of a proper chord");
        }
    }
    return ChordDiagram(std::move(pairing));
}

std::vector<std::string> parse_word(std::string_view text) {
    auto is_sep = [](char c) { return c == ',' || c == ' ' || c == '\t' || c == '\n' || c == '\r'; };
    std::vector<std::string> symbols;
    if (std::none_of(text.begin(), text.end(), is_sep)) {
        for (char c : text) symbols.emplace_back(1, c);
        return symbols;
    }
    std::string current;
    for (char c : text) {
        if (is_sep(c)) {
            if (!current.empty()) symbols.push_back(std::move(current));
            current.clear();
        } else {
            current.push_back(c);
        }
    }
    if (!current.empty()) symbols.push_back(std::move(current));
    return symbols;
}

ChordDiagram diagram_from_text(std::string_view text) {
    return from_word(parse_word(text));
}

void boundary_cycles(std::span<const ChordDiagram::Endpoint> pairing, std::vector<std::uint8_t>& scratch,
                     std::vector<std::size_t>& sides) {
    const std::size_t m = pairing.size();
    scratch.assign(m, 0);
    sides.clear();
    for (std::size_t start = 0; start < m; ++start) {
        if (scratch[start]) continue;
        std::size_t len = 0;
        std::size_t i = start;
        do {
            scratch[i] = 1;
            ++len;
            i = pairing[i] + 1;
            if (i == m) i = 0;
        } while (i != start);
        sides.push_back(len);
    }
}

FaceStructure faces(const ChordDiagram& d) {
    std::vector<std::uint8_t> scratch;
    FaceStructure fs;
    boundary_cycles(d.pairing(), scratch, fs.sides);
    return fs;
}

std::size_t face_count(const ChordDiagram& d, std::vector<std::uint8_t>& scratch) {
    const std::size_t m = d.endpoints();
    scratch.assign(m, 0);
    std::size_t count = 0;
    for (std::size_t start = 0; start < m; ++start) {
        if (scratch[start]) continue;
        ++count;
        std::size_t i = start;
        do {
            scratch[i] = 1;
            i = d.partner(i) + 1;
            if (i == m) i = 0;
        } while (i != start);
    }
    return count;
}

std::size_t genus_from_faces(std::size_t chords, std::size_t face_count) {
    if (face_count < 1 || face_count > chords + 1 || (chords + 1 - face_count) % 2 != 0) {
        throw ComputationError("face count " + std::to_string(face_count) + " impossible for " +
                               std::to_string(chords) + " chords");
    }
    return (chords + 1 - face_count) / 2;
}

std::size_t genus(const ChordDiagram& d) {
    std::vector<std::uint8_t> scratch;
    return genus_from_faces(d.chords(), face_count(d, scratch));
}

std::vector<std::size_t> to_word(const ChordDiagram& d) {
    const std::size_t m = d.endpoints();
    std::vector<std::size_t> word(m, 0);
    std::size_t next = 1;
    for (std::size_t i = 0; i < m; ++i) {
        if (word[i] != 0) continue;
        word[i] = next;
        word[d.partner(i)] = next;
        ++next;
    }
    return word;
}

std::string to_word_string(const ChordDiagram& d) {
    std::string out;
    for (std::size_t s : to_word(d)) {
        if (!out.empty()) out.push_back(' ');
        out += std::to_string(s);
    }
    return out;
}

bool is_noncrossing(const ChordDiagram& d) {
    std::stack<std::size_t> open;
    for (std::size_t i = 0; i < d.endpoints(); ++i) {
        const std::size_t j = d.partner(i);
        if (j > i) {
            open.push(i);
        } else {
            if (open.empty() || open.top() != j) return false;
            open.pop();
        }
    }
    return true;
}

ChordDiagram rotated(const ChordDiagram& d, std::size_t shift) {
    const std::size_t m = d.endpoints();
    std::vector<ChordDiagram::Endpoint> p(m);
    for (std::size_t i = 0; i < m; ++i) {
        p[(i + shift) % m] = static_cast<ChordDiagram::Endpoint>((d.partner(i) + shift) % m);
    }
    return ChordDiagram::from_pairing(std::move(p));
}

ChordDiagram reflected(const ChordDiagram& d) {
    const std::size_t m = d.endpoints();
    std::vector<ChordDiagram::Endpoint> p(m);
    for (std::size_t i = 0; i < m; ++i) {
        p[m - 1 - i] = static_cast<ChordDiagram::Endpoint>(m - 1 - d.partner(i));
    }
    return ChordDiagram::from_pairing(std::move(p));
}

} // namespace genusdist
