#include "convodna/dna.hpp"

#include <algorithm>
#include <cmath>
#include <istream>
#include <sstream>

#include "convodna/errors.hpp"

namespace convodna {

namespace {

char complement_base(char c) {
    switch (c) {
        case 'A': return 'T';
        case 'T': return 'A';
        case 'C': return 'G';
        case 'G': return 'C';
    }
    return c;  // unreachable for validated sequences
}

std::string pair_item(const DnaSeq& x, const DnaSeq& y) { return x.str() + "," + y.str(); }

}  // namespace

DnaSeq DnaSeq::parse(std::string_view text) {
    std::string bases;
    bases.reserve(text.size());
    for (char c : text) {
        switch (c) {
            case 'A': case 'C': case 'G': case 'T':
                bases.push_back(c);
                break;
            case 'a': case 'c': case 'g': case 't':
                bases.push_back(static_cast<char>(c - ('a' - 'A')));
                break;
            default:
                throw DataError("invalid DNA base '" + std::string(1, c) +
                                "' (IUPAC ambiguity codes are rejected)");
        }
    }
    return DnaSeq(std::move(bases));
}

DnaSeq complement(const DnaSeq& x) {
    std::string out = x.bases_;
    for (char& c : out) c = complement_base(c);
    return DnaSeq(std::move(out));
}

DnaSeq reverse(const DnaSeq& x) {
    std::string out(x.bases_.rbegin(), x.bases_.rend());
    return DnaSeq(std::move(out));
}

DnaSeq reverse_complement(const DnaSeq& x) { return complement(reverse(x)); }

std::size_t hamming(const DnaSeq& x, const DnaSeq& y) {
    if (x.size() != y.size())
        throw DataError("Hamming distance needs equal lengths (" + std::to_string(x.size()) +
                        " vs " + std::to_string(y.size()) + ")");
    std::size_t d = 0;
    for (std::size_t i = 0; i < x.size(); ++i)
        if (x[i] != y[i]) ++d;
    return d;
}

std::size_t gc_weight(const DnaSeq& x) {
    std::size_t w = 0;
    for (std::size_t i = 0; i < x.size(); ++i)
        if (x[i] == 'G' || x[i] == 'C') ++w;
    return w;
}

std::vector<std::uint8_t> correlation(const DnaSeq& x, const DnaSeq& y) {
    if (x.size() != y.size()) throw DataError("correlation needs equal lengths");
    const std::size_t n = x.size();
    std::vector<std::uint8_t> bits;
    if (n < 2) return bits;
    bits.reserve(n - 1);
    for (std::size_t shift = 0; shift + 1 < n; ++shift) {
        bool match = true;
        for (std::size_t i = shift; i < n && match; ++i)
            if (x[i] != y[i - shift]) match = false;
        bits.push_back(match ? 1 : 0);
    }
    return bits;
}

BaseComposition chargaff_composition(double frac_a) {
    if (frac_a < 0.0 || frac_a > 0.5)
        throw DomainError("A fraction must lie in [0, 0.5]; A and T together fill 2A of the strand");
    const double cg = (1.0 - 2.0 * frac_a) / 2.0;
    return {frac_a, frac_a, cg, cg};
}

DnaCodeSet DnaCodeSet::from_words(std::vector<DnaSeq> words) {
    DnaCodeSet set;
    std::sort(words.begin(), words.end());
    for (std::size_t i = 0; i + 1 < words.size(); ++i)
        if (words[i] == words[i + 1])
            throw DataError("duplicate codeword " + words[i].str());
    for (const auto& w : words)
        if (w.size() != words.front().size())
            throw DataError("codewords must share one length; " + w.str() + " has " +
                            std::to_string(w.size()) + " bases, expected " +
                            std::to_string(words.front().size()));
    set.word_length = words.empty() ? 0 : words.front().size();
    set.words = std::move(words);
    return set;
}

DnaCodeSet DnaCodeSet::load(std::istream& in) {
    std::vector<DnaSeq> words;
    std::string line;
    while (std::getline(in, line)) {
        if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
        while (!line.empty() && (line.back() == ' ' || line.back() == '\t' || line.back() == '\r'))
            line.pop_back();
        std::size_t start = line.find_first_not_of(" \t");
        if (start == std::string::npos) continue;
        words.push_back(DnaSeq::parse(std::string_view(line).substr(start)));
    }
    return from_words(std::move(words));
}

namespace {

ConstraintReport make_report(std::string name, std::vector<Violation> violations) {
    ConstraintReport r;
    r.constraint = std::move(name);
    r.satisfied = violations.empty();
    r.violations = std::move(violations);
    return r;
}

}  // namespace

ConstraintReport check_hd(const DnaCodeSet& set, std::size_t d) {
    std::vector<Violation> v;
    for (std::size_t i = 0; i < set.words.size(); ++i)
        for (std::size_t j = i + 1; j < set.words.size(); ++j) {
            std::size_t dist = hamming(set.words[i], set.words[j]);
            if (dist < d)
                v.push_back({pair_item(set.words[i], set.words[j]), std::to_string(dist),
                             ">=" + std::to_string(d)});
        }
    return make_report("hd", std::move(v));
}

ConstraintReport check_reverse(const DnaCodeSet& set, std::size_t d) {
    std::vector<Violation> v;
    for (std::size_t i = 0; i < set.words.size(); ++i)
        for (std::size_t j = 0; j < set.words.size(); ++j) {
            if (i == j) continue;
            std::size_t dist = hamming(reverse(set.words[i]), set.words[j]);
            if (dist < d)
                v.push_back({pair_item(set.words[i], set.words[j]), std::to_string(dist),
                             ">=" + std::to_string(d)});
        }
    return make_report("reverse", std::move(v));
}

ConstraintReport check_rc(const DnaCodeSet& set, std::size_t d) {
    std::vector<Violation> v;
    for (std::size_t i = 0; i < set.words.size(); ++i)
        for (std::size_t j = 0; j < set.words.size(); ++j) {  // x may equal y
            std::size_t dist = hamming(reverse(set.words[i]), complement(set.words[j]));
            if (dist < d)
                v.push_back({pair_item(set.words[i], set.words[j]), std::to_string(dist),
                             ">=" + std::to_string(d)});
        }
    return make_report("rc", std::move(v));
}

ConstraintReport check_gc(const DnaCodeSet& set, std::optional<std::size_t> w) {
    const std::size_t bound = w.value_or(set.word_length / 2);
    std::vector<Violation> v;
    for (const auto& word : set.words) {
        std::size_t weight = gc_weight(word);
        if (weight != bound)
            v.push_back({word.str(), std::to_string(weight), "=" + std::to_string(bound)});
    }
    return make_report("gc", std::move(v));
}

ConstraintReport check_forbidden(const DnaCodeSet& set, const std::vector<DnaSeq>& motifs) {
    std::vector<Violation> v;
    for (const auto& word : set.words)
        for (const auto& motif : motifs) {
            if (motif.empty() || motif.size() > word.size()) continue;
            for (std::size_t off = 0;
                 (off = word.str().find(motif.str(), off)) != std::string::npos; ++off)
                v.push_back({word.str(), motif.str() + "@" + std::to_string(off), "absent"});
        }
    return make_report("forbidden", std::move(v));
}

ConstraintReport check_uncorrelated(const DnaCodeSet& set) {
    std::vector<Violation> v;
    for (std::size_t i = 0; i < set.words.size(); ++i)
        for (std::size_t j = 0; j < set.words.size(); ++j) {
            if (i == j) continue;
            auto bits = correlation(set.words[i], set.words[j]);
            for (std::size_t shift = 1; shift < bits.size(); ++shift)
                if (bits[shift])
                    v.push_back({pair_item(set.words[i], set.words[j]),
                                 "match@shift" + std::to_string(shift), "no match"});
        }
    return make_report("uncorrelated", std::move(v));
}

ConstraintReport check_free_energy(const DnaCodeSet& set,
                                   const std::function<double(const DnaSeq&)>& energy,
                                   double delta) {
    if (delta <= 0.0) throw DomainError("free-energy window delta must be positive");
    std::vector<Violation> v;
    std::vector<double> values;
    values.reserve(set.words.size());
    for (const auto& word : set.words) values.push_back(energy(word));
    auto fmt = [](double x) {
        std::ostringstream os;
        os << x;
        return os.str();
    };
    for (std::size_t i = 0; i < set.words.size(); ++i)
        for (std::size_t j = i + 1; j < set.words.size(); ++j) {
            double gap = std::abs(values[i] - values[j]);
            if (gap > delta)
                v.push_back({pair_item(set.words[i], set.words[j]), fmt(gap), "<=" + fmt(delta)});
        }
    return make_report("free_energy", std::move(v));
}

}  // namespace convodna
