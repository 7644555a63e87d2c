#pragma once

#include <cstdint>
#include <functional>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace convodna {

// A 5'->3' oriented strand over {A, C, G, T}. The alphabet is enforced at
// ingestion; every later operation can assume well-formed bases.
class DnaSeq {
public:
    DnaSeq() = default;
    static DnaSeq parse(std::string_view text);  // DataError on anything but ACGT

    const std::string& str() const { return bases_; }
    std::size_t size() const { return bases_.size(); }
    bool empty() const { return bases_.empty(); }
    char operator[](std::size_t i) const { return bases_[i]; }

    friend bool operator==(const DnaSeq&, const DnaSeq&) = default;
    friend auto operator<=>(const DnaSeq&, const DnaSeq&) = default;

private:
    explicit DnaSeq(std::string bases) : bases_(std::move(bases)) {}
    std::string bases_;
    friend DnaSeq complement(const DnaSeq&);
    friend DnaSeq reverse(const DnaSeq&);
};

DnaSeq complement(const DnaSeq& x);          // A<->T, C<->G, basewise
DnaSeq reverse(const DnaSeq& x);
DnaSeq reverse_complement(const DnaSeq& x);  // complement of the reverse

std::size_t hamming(const DnaSeq& x, const DnaSeq& y);  // DataError on length mismatch
std::size_t gc_weight(const DnaSeq& x);

// n-1 bits for shifts 0..n-2: bit i is 1 iff the suffix x[i..n) equals the
// prefix y[0..n-i). Matches the paper's 6-bit answer for n=7.
std::vector<std::uint8_t> correlation(const DnaSeq& x, const DnaSeq& y);

struct BaseComposition {
    double a, t, c, g;
};
// Chargaff: T = A, C = G = (1 - 2A)/2. DomainError if frac_a > 0.5.
BaseComposition chargaff_composition(double frac_a);

// A set of equal-length codewords, stored sorted and duplicate-free so every
// report comes out in the same order.
struct DnaCodeSet {
    std::vector<DnaSeq> words;
    std::size_t word_length = 0;

    static DnaCodeSet from_words(std::vector<DnaSeq> words);
    // One word per line, '#' starts a comment, blank lines skipped.
    static DnaCodeSet load(std::istream& in);
};

struct Violation {
    std::string item;      // offending word, or "x,y" for pair constraints
    std::string measured;
    std::string bound;
};

struct ConstraintReport {
    std::string constraint;
    bool satisfied = true;
    std::vector<Violation> violations;
};

// Hamming distance >= d over unordered pairs of distinct words.
ConstraintReport check_hd(const DnaCodeSet& set, std::size_t d);
// H(x^R, y) >= d over ordered pairs with x != y.
ConstraintReport check_reverse(const DnaCodeSet& set, std::size_t d);
// H(x^R, y^C) >= d over ALL ordered pairs, x = y included.
ConstraintReport check_rc(const DnaCodeSet& set, std::size_t d);
// GC weight of every word equals w; default floor(n/2).
ConstraintReport check_gc(const DnaCodeSet& set, std::optional<std::size_t> w = std::nullopt);
// No motif occurs as a contiguous substring of any word.
ConstraintReport check_forbidden(const DnaCodeSet& set, const std::vector<DnaSeq>& motifs);
// No nontrivial shift of any word matches another word (correlation bits at
// shift >= 1 must all be 0 for ordered pairs x != y).
ConstraintReport check_uncorrelated(const DnaCodeSet& set);
// |energy(x) - energy(y)| <= delta over unordered pairs of distinct words.
ConstraintReport check_free_energy(const DnaCodeSet& set,
                                   const std::function<double(const DnaSeq&)>& energy,
                                   double delta);

}  // namespace convodna
