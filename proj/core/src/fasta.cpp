#include "convodna/fasta.hpp"

#include <cctype>
#include <istream>

#include "convodna/errors.hpp"

namespace convodna {

std::vector<FastaRecord> parse_fasta(std::istream& in) {
    std::vector<FastaRecord> records;
    std::string line;
    std::size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        while (!line.empty() && (line.back() == '\r' || line.back() == '\n')) line.pop_back();
        std::size_t start = 0;
        while (start < line.size() && std::isspace(static_cast<unsigned char>(line[start])))
            ++start;
        if (start == line.size()) continue;

        if (line[start] == '>') {
            std::size_t id_begin = start + 1;
            std::size_t id_end = id_begin;
            while (id_end < line.size() && !std::isspace(static_cast<unsigned char>(line[id_end])))
                ++id_end;
            if (id_end == id_begin)
                throw DataError("FASTA line " + std::to_string(lineno) + ": empty record header");
            records.push_back({line.substr(id_begin, id_end - id_begin), "", lineno});
        } else {
            if (records.empty())
                throw DataError("FASTA line " + std::to_string(lineno) +
                                ": sequence data before the first '>' header");
            for (std::size_t i = start; i < line.size(); ++i)
                if (!std::isspace(static_cast<unsigned char>(line[i])))
                    records.back().sequence.push_back(line[i]);
        }
    }
    return records;
}

}  // namespace convodna
