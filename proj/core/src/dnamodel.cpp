#include "convodna/dnamodel.hpp"

#include <cstdio>
#include <fstream>

#include <nlohmann/json.hpp>

#include "convodna/errors.hpp"
#include "convodna/fasta.hpp"

namespace convodna {

DigitSeq digitize(const DnaSeq& x) {
    DigitSeq out;
    out.reserve(x.size());
    for (std::size_t i = 0; i < x.size(); ++i) {
        switch (x[i]) {
            case 'A': out.push_back(0); break;
            case 'G': out.push_back(1); break;
            case 'C': out.push_back(2); break;
            case 'T': out.push_back(3); break;
        }
    }
    return out;
}

ModelConfig ModelConfig::liu_geng() {
    ModelConfig cfg;
    cfg.label = "liu-geng";
    for (auto& row : cfg.g1) row = {1, 1, 0, 1, 1, 0};
    cfg.g2 = cfg.g1;
    return cfg;
}

ModelConfig ModelConfig::revised() {
    ModelConfig cfg;
    cfg.label = "revised";
    // Base weights 2, 3, 1 on the original taps; outputs 3 takes the first
    // two bases of each codon with unit coefficients (row 110110 across the
    // six-base window).
    cfg.g1[0] = {2, 2, 1, 2, 2, 0};
    cfg.g1[1] = {3, 3, 1, 3, 3, 0};
    cfg.g1[2] = {1, 1, 0, 1, 1, 0};
    cfg.g2 = cfg.g1;
    return cfg;
}

void ModelConfig::validate() const {
    if (modulus < 2) throw DataError("model modulus must be at least 2");
    for (const auto* mat : {&g1, &g2})
        for (const auto& row : *mat)
            for (auto v : row)
                if (v >= modulus)
                    throw DataError("generator entry " + std::to_string(v) +
                                    " is not reduced mod " + std::to_string(modulus));
}

std::array<int, 3> ModelConfig::base_weights() const {
    std::array<int, 3> w{};
    for (int r = 0; r < 3; ++r)
        for (auto v : g1[static_cast<std::size_t>(r)])
            w[static_cast<std::size_t>(r)] = std::max(w[static_cast<std::size_t>(r)], int(v));
    return w;
}

ModelConfig ModelConfig::from_json(const std::string& text) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(text);
    } catch (const nlohmann::json::exception& e) {
        throw DataError(std::string("model config is not valid JSON: ") + e.what());
    }
    ModelConfig cfg;
    try {
        cfg.label = j.value("label", "custom");
        cfg.modulus = j.value("modulus", 4);
        auto load = [](const nlohmann::json& mat, std::array<std::array<std::uint8_t, 6>, 3>& out) {
            if (!mat.is_array() || mat.size() != 3)
                throw DataError("generator matrix must have 3 rows");
            for (std::size_t r = 0; r < 3; ++r) {
                if (!mat[r].is_array() || mat[r].size() != 6)
                    throw DataError("generator rows must have 6 entries");
                for (std::size_t c = 0; c < 6; ++c)
                    out[r][c] = mat[r][c].get<std::uint8_t>();
            }
        };
        load(j.at("g1"), cfg.g1);
        load(j.at("g2"), cfg.g2);
    } catch (const nlohmann::json::exception& e) {
        throw DataError(std::string("model config shape: ") + e.what());
    }
    cfg.validate();
    return cfg;
}

std::string ModelConfig::to_json() const {
    nlohmann::ordered_json j;
    j["label"] = label;
    j["g1"] = g1;
    j["g2"] = g2;
    j["modulus"] = modulus;
    return j.dump();
}

std::array<std::uint8_t, 6> encode_block(const CodonBlock& prev, const CodonBlock& cur,
                                         const ModelConfig& cfg) {
    std::array<std::uint8_t, 6> out{};
    for (std::size_t col = 0; col < 6; ++col) {
        int v = 0;
        for (std::size_t row = 0; row < 3; ++row)
            v += cur[row] * cfg.g1[row][col] + prev[row] * cfg.g2[row][col];
        out[col] = static_cast<std::uint8_t>(v % cfg.modulus);
    }
    return out;
}

int block_distance(std::span<const std::uint8_t, 6> out, const CodonBlock& prev) {
    int d = 0;
    for (std::size_t i = 0; i < 3; ++i)
        if (out[i] != prev[i]) ++d;
    return d;
}

CacdReport cacd(const DnaSeq& x, const ModelConfig& cfg) {
    cfg.validate();
    if (x.size() < 6)
        throw DomainError("CACD needs at least 6 bases (two codon blocks), got " +
                          std::to_string(x.size()));
    DigitSeq digits = digitize(x);
    const std::size_t blocks = digits.size() / 3;

    CacdReport r;
    r.length = x.size();
    r.block_count = blocks;
    r.gc_content = static_cast<double>(gc_weight(x)) / static_cast<double>(x.size());

    long total = 0;
    for (std::size_t t = 1; t < blocks; ++t) {
        CodonBlock prev{digits[3 * (t - 1)], digits[3 * (t - 1) + 1], digits[3 * (t - 1) + 2]};
        CodonBlock cur{digits[3 * t], digits[3 * t + 1], digits[3 * t + 2]};
        total += block_distance(encode_block(prev, cur, cfg), prev);
    }
    r.cacd = static_cast<double>(total) / static_cast<double>(blocks - 1);
    return r;
}

std::vector<RecordResult> analyze_fasta(const std::string& path, const ModelConfig& cfg,
                                        int frame) {
    if (frame < 0 || frame > 2) throw DomainError("reading frame must be 0, 1, or 2");
    std::ifstream in(path);
    if (!in) throw DataError("cannot open FASTA file " + path);
    auto records = parse_fasta(in);

    std::vector<RecordResult> results;
    results.reserve(records.size());
    for (const auto& rec : records) {
        RecordResult res;
        res.record_id = rec.id;
        try {
            std::string_view body(rec.sequence);
            if (body.size() >= static_cast<std::size_t>(frame)) body.remove_prefix(frame);
            DnaSeq seq = DnaSeq::parse(body);
            CacdReport report = cacd(seq, cfg);
            report.record_id = rec.id;
            res.report = report;
        } catch (const std::runtime_error& e) {
            res.error = e.what();
        }
        results.push_back(std::move(res));
    }
    return results;
}

std::string cacd_csv_row(const CacdReport& r) {
    char buf[64];
    std::string row = r.record_id;
    row += ',';
    row += std::to_string(r.length);
    std::snprintf(buf, sizeof buf, ",%.10g", r.gc_content);
    row += buf;
    std::snprintf(buf, sizeof buf, ",%.10g", r.cacd);
    row += buf;
    row += ',';
    row += std::to_string(r.block_count);
    return row;
}

}  // namespace convodna
