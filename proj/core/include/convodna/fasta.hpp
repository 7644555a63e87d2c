#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace convodna {

struct FastaRecord {
    std::string id;        // header token up to the first whitespace
    std::string sequence;  // raw text, lines concatenated; not yet validated
    std::size_t line = 0;  // header line number, 1-based
};

// Standard '>' headers, sequence lines concatenated, surrounding whitespace
// tolerated. DataError with a line number on malformed input (data before
// the first header, or an empty header).
std::vector<FastaRecord> parse_fasta(std::istream& in);

}  // namespace convodna
