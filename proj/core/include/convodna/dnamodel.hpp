#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "convodna/dna.hpp"

namespace convodna {

// Z4 digitization of a strand: A=0, G=1, C=2, T=3.
using DigitSeq = std::vector<std::uint8_t>;
DigitSeq digitize(const DnaSeq& x);

using CodonBlock = std::array<std::uint8_t, 3>;

// A (6, 3, 2)-style codon convolutional model: the output block is
// cur*g1 + prev*g2 with componentwise reduction mod `modulus`.
struct ModelConfig {
    std::string label;
    std::array<std::array<std::uint8_t, 6>, 3> g1{};  // row = input base, column = output
    std::array<std::array<std::uint8_t, 6>, 3> g2{};
    int modulus = 4;

    // Every row 110110: each base of both codons feeds outputs 1, 2, 4, 5.
    static ModelConfig liu_geng();
    // Hierarchical base weights w2 > w1 > w3 (3, 2, 1 by default) plus a
    // third output equation fed by the first two bases of both codons.
    static ModelConfig revised();

    static ModelConfig from_json(const std::string& text);  // DataError on bad shape
    std::string to_json() const;

    // Per-base weights as stored in the matrix (max coefficient per row).
    std::array<int, 3> base_weights() const;
    void validate() const;  // entries must be < modulus
};

// Output block for one tick: current block through g1 plus previous block
// through g2, reduced mod 4.
std::array<std::uint8_t, 6> encode_block(const CodonBlock& prev, const CodonBlock& cur,
                                         const ModelConfig& cfg);

// Hamming distance (Z4 symbol-wise) between the first three output symbols
// and the previous input block.
int block_distance(std::span<const std::uint8_t, 6> out, const CodonBlock& prev);

struct CacdReport {
    std::string record_id;
    std::size_t length = 0;       // bases analyzed
    double gc_content = 0.0;      // fraction of G/C over the analyzed bases
    double cacd = 0.0;            // mean per-block distance, in [0, 3]
    std::size_t block_count = 0;  // complete codon blocks
};

// Whole-sequence CACD: non-overlapping codon blocks from offset 0 (trailing
// partial block truncated), one distance per adjacent block pair, averaged.
// DomainError when fewer than two complete blocks exist.
CacdReport cacd(const DnaSeq& x, const ModelConfig& cfg);

struct RecordResult {
    std::string record_id;
    std::optional<CacdReport> report;
    std::string error;  // set when digitization or length checks fail
};

// One result per FASTA record in file order; `frame` skips that many leading
// bases before blocking. Per-record failures land in RecordResult::error.
std::vector<RecordResult> analyze_fasta(const std::string& path, const ModelConfig& cfg,
                                        int frame = 0);

std::string cacd_csv_row(const CacdReport& r);
inline constexpr std::string_view kCacdCsvHeader = "record_id,length,gc_content,cacd,block_count";

}  // namespace convodna
