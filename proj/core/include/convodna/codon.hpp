#pragma once

#include <array>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>

#include "convodna/dna.hpp"

namespace convodna {

// mRNA bases. The enum value doubles as the 2-bit identifier: first bit
// (value bit 1) purine, second bit (value bit 0) strong.
enum class RnaBase : std::uint8_t { U = 0b00, C = 0b01, A = 0b10, G = 0b11 };

char rna_base_char(RnaBase b);
RnaBase rna_base_parse(char c);  // DataError on anything but ACGU

class RnaSeq {
public:
    RnaSeq() = default;
    static RnaSeq parse(std::string_view text);  // DataError; T is rejected

    const std::string& str() const { return bases_; }
    std::size_t size() const { return bases_.size(); }
    RnaBase base(std::size_t i) const { return rna_base_parse(bases_[i]); }

private:
    explicit RnaSeq(std::string bases) : bases_(std::move(bases)) {}
    std::string bases_;
    friend RnaSeq transcribe(const DnaSeq&);
};

// Coding-strand transcription: T -> U, everything else unchanged.
RnaSeq transcribe(const DnaSeq& x);

struct Codon {
    std::array<RnaBase, 3> bases;

    static Codon parse(std::string_view text);  // exactly 3 RNA bases
    std::string str() const;
    friend bool operator==(const Codon&, const Codon&) = default;
};

inline std::uint8_t base_bits(RnaBase b) { return static_cast<std::uint8_t>(b); }

struct BaseTraits {
    bool purine;  // first identifier bit
    bool strong;  // second identifier bit (three hydrogen bonds)
    bool amino;   // XOR of the two: A and C; keto otherwise
};
BaseTraits classify(RnaBase b);

// 6-bit index: identifiers concatenated in 2, 1, 3 base order (the second
// base carries the most information, the third is degenerate).
std::uint8_t codon_index(const Codon& c);
Codon index_to_codon(std::uint8_t index);  // DomainError above 63

std::string_view codon_to_amino(const Codon& c);  // "Met", "Stp", ...

struct CodonEntry {
    const char* codon;
    std::uint8_t index;
    const char* amino;
};
// All 64 rows of the amino-acid binary correspondence table.
std::span<const CodonEntry, 64> codon_table();

std::string index_to_bit_string(std::uint8_t index);  // "001011", MSB first

}  // namespace convodna
