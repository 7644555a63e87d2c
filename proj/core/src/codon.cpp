#include "convodna/codon.hpp"

#include <algorithm>

#include "convodna/errors.hpp"

namespace convodna {

char rna_base_char(RnaBase b) {
    switch (b) {
        case RnaBase::U: return 'U';
        case RnaBase::C: return 'C';
        case RnaBase::A: return 'A';
        case RnaBase::G: return 'G';
    }
    return '?';
}

RnaBase rna_base_parse(char c) {
    switch (c) {
        case 'U': case 'u': return RnaBase::U;
        case 'C': case 'c': return RnaBase::C;
        case 'A': case 'a': return RnaBase::A;
        case 'G': case 'g': return RnaBase::G;
    }
    throw DataError("invalid RNA base '" + std::string(1, c) + "'");
}

RnaSeq RnaSeq::parse(std::string_view text) {
    std::string bases;
    bases.reserve(text.size());
    for (char c : text) bases.push_back(rna_base_char(rna_base_parse(c)));
    return RnaSeq(std::move(bases));
}

RnaSeq transcribe(const DnaSeq& x) {
    std::string out = x.str();
    std::replace(out.begin(), out.end(), 'T', 'U');
    return RnaSeq(std::move(out));
}

Codon Codon::parse(std::string_view text) {
    if (text.size() != 3) throw DataError("a codon has exactly 3 bases");
    return Codon{{rna_base_parse(text[0]), rna_base_parse(text[1]), rna_base_parse(text[2])}};
}

std::string Codon::str() const {
    return {rna_base_char(bases[0]), rna_base_char(bases[1]), rna_base_char(bases[2])};
}

BaseTraits classify(RnaBase b) {
    const std::uint8_t bits = base_bits(b);
    const bool purine = (bits >> 1) & 1;
    const bool strong = bits & 1;
    return {purine, strong, purine != strong};
}

std::uint8_t codon_index(const Codon& c) {
    return static_cast<std::uint8_t>((base_bits(c.bases[1]) << 4) | (base_bits(c.bases[0]) << 2) |
                                     base_bits(c.bases[2]));
}

std::string index_to_bit_string(std::uint8_t index) {
    std::string s(6, '0');
    for (int i = 0; i < 6; ++i)
        if ((index >> (5 - i)) & 1) s[static_cast<std::size_t>(i)] = '1';
    return s;
}

namespace {

// Amino acid binary correspondence table, all 64 codons. Listed by first
// base (U, C, A, G), then second base, then third base.
constexpr std::array<CodonEntry, 64> kTable{{
    {"UUU", 0b000000, "Phe"}, {"UUC", 0b000001, "Phe"}, {"UUA", 0b000010, "Leu"},
    {"UUG", 0b000011, "Leu"}, {"UCU", 0b010000, "Ser"}, {"UCC", 0b010001, "Ser"},
    {"UCA", 0b010010, "Ser"}, {"UCG", 0b010011, "Ser"}, {"UAU", 0b100000, "Tyr"},
    {"UAC", 0b100001, "Tyr"}, {"UAA", 0b100010, "Stp"}, {"UAG", 0b100011, "Stp"},
    {"UGU", 0b110000, "Cys"}, {"UGC", 0b110001, "Cys"}, {"UGA", 0b110010, "Stp"},
    {"UGG", 0b110011, "Trp"},
    {"CUU", 0b000100, "Leu"}, {"CUC", 0b000101, "Leu"}, {"CUA", 0b000110, "Leu"},
    {"CUG", 0b000111, "Leu"}, {"CCU", 0b010100, "Pro"}, {"CCC", 0b010101, "Pro"},
    {"CCA", 0b010110, "Pro"}, {"CCG", 0b010111, "Pro"}, {"CAU", 0b100100, "His"},
    {"CAC", 0b100101, "His"}, {"CAA", 0b100110, "Gln"}, {"CAG", 0b100111, "Gln"},
    {"CGU", 0b110100, "Arg"}, {"CGC", 0b110101, "Arg"}, {"CGA", 0b110110, "Arg"},
    {"CGG", 0b110111, "Arg"},
    {"AUU", 0b001000, "Ile"}, {"AUC", 0b001001, "Ile"}, {"AUA", 0b001010, "Ile"},
    {"AUG", 0b001011, "Met"}, {"ACU", 0b011000, "Thr"}, {"ACC", 0b011001, "Thr"},
    {"ACA", 0b011010, "Thr"}, {"ACG", 0b011011, "Thr"}, {"AAU", 0b101000, "Asn"},
    {"AAC", 0b101001, "Asn"}, {"AAA", 0b101010, "Lys"}, {"AAG", 0b101011, "Lys"},
    {"AGU", 0b111000, "Ser"}, {"AGC", 0b111001, "Ser"}, {"AGA", 0b111010, "Arg"},
    {"AGG", 0b111011, "Arg"},
    {"GUU", 0b001100, "Val"}, {"GUC", 0b001101, "Val"}, {"GUA", 0b001110, "Val"},
    {"GUG", 0b001111, "Val"}, {"GCU", 0b011100, "Ala"}, {"GCC", 0b011101, "Ala"},
    {"GCA", 0b011110, "Ala"}, {"GCG", 0b011111, "Ala"}, {"GAU", 0b101100, "Asp"},
    {"GAC", 0b101101, "Asp"}, {"GAA", 0b101110, "Glu"}, {"GAG", 0b101111, "Glu"},
    {"GGU", 0b111100, "Gly"}, {"GGC", 0b111101, "Gly"}, {"GGA", 0b111110, "Gly"},
    {"GGG", 0b111111, "Gly"},
}};

struct IndexMaps {
    std::array<const char*, 64> amino{};
    std::array<const char*, 64> codon{};
    IndexMaps() {
        for (const auto& e : kTable) {
            amino[e.index] = e.amino;
            codon[e.index] = e.codon;
        }
    }
};

const IndexMaps& maps() {
    static const IndexMaps m;
    return m;
}

}  // namespace

std::span<const CodonEntry, 64> codon_table() { return kTable; }

std::string_view codon_to_amino(const Codon& c) { return maps().amino[codon_index(c)]; }

Codon index_to_codon(std::uint8_t index) {
    if (index > 63) throw DomainError("codon index must lie in 0..63");
    return Codon::parse(maps().codon[index]);
}

}  // namespace convodna
