#include "convodna/gf2poly.hpp"

#include <algorithm>
#include <cctype>

#include "convodna/errors.hpp"

namespace convodna {

BitSeq parse_bits(std::string_view text) {
    BitSeq out;
    out.reserve(text.size());
    for (char c : text) {
        if (c == '0' || c == '1') {
            out.push_back(static_cast<std::uint8_t>(c - '0'));
        } else {
            throw DataError("bit sequence may contain only 0/1, got '" + std::string(1, c) + "'");
        }
    }
    return out;
}

std::string format_bits(const BitSeq& bits) {
    std::string s;
    s.reserve(bits.size());
    for (auto b : bits) s.push_back(b ? '1' : '0');
    return s;
}

void BinaryPoly::normalize() {
    while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

BinaryPoly BinaryPoly::from_bits(const BitSeq& bits) {
    BinaryPoly p;
    p.coeffs_.assign(bits.begin(), bits.end());
    p.normalize();
    return p;
}

std::optional<std::size_t> BinaryPoly::degree() const {
    if (coeffs_.empty()) return std::nullopt;
    return coeffs_.size() - 1;
}

BitSeq BinaryPoly::to_bits(std::size_t len) const {
    if (!coeffs_.empty() && len < coeffs_.size())
        throw DomainError("to_bits length " + std::to_string(len) + " does not cover degree " +
                          std::to_string(coeffs_.size() - 1));
    BitSeq out(len, 0);
    std::copy(coeffs_.begin(), coeffs_.end(), out.begin());
    return out;
}

std::string BinaryPoly::to_string() const {
    if (coeffs_.empty()) return "0";
    return format_bits(coeffs_);
}

namespace {

// "1 + x^2" form. Terms: "1", "x", "x^K".
BinaryPoly parse_human(std::string_view text) {
    std::string compact;
    for (char c : text)
        if (!std::isspace(static_cast<unsigned char>(c))) compact.push_back(c);

    BitSeq coeffs;
    std::size_t pos = 0;
    while (pos < compact.size()) {
        std::size_t next = compact.find('+', pos);
        std::string term = compact.substr(pos, next == std::string::npos ? next : next - pos);
        std::size_t power;
        if (term == "1") {
            power = 0;
        } else if (term == "x") {
            power = 1;
        } else if (term.rfind("x^", 0) == 0 && term.size() > 2 &&
                   term.find_first_not_of("0123456789", 2) == std::string::npos) {
            power = static_cast<std::size_t>(std::stoull(term.substr(2)));
        } else {
            throw DataError("cannot parse polynomial term '" + term + "'");
        }
        if (coeffs.size() <= power) coeffs.resize(power + 1, 0);
        coeffs[power] ^= 1;  // repeated terms cancel over Z2
        if (next == std::string::npos) break;
        pos = next + 1;
    }
    return BinaryPoly::from_bits(coeffs);
}

}  // namespace

BinaryPoly BinaryPoly::parse(std::string_view text) {
    if (text.empty()) throw DataError("empty polynomial");
    if (text.find_first_not_of("01") == std::string_view::npos)
        return from_bits(parse_bits(text));
    return parse_human(text);
}

BinaryPoly operator+(const BinaryPoly& p, const BinaryPoly& q) {
    BinaryPoly r;
    r.coeffs_.resize(std::max(p.coeffs_.size(), q.coeffs_.size()), 0);
    for (std::size_t i = 0; i < r.coeffs_.size(); ++i)
        r.coeffs_[i] = static_cast<std::uint8_t>(p.coeff(i) ^ q.coeff(i));
    r.normalize();
    return r;
}

BinaryPoly operator*(const BinaryPoly& p, const BinaryPoly& q) {
    BinaryPoly r;
    if (p.is_zero() || q.is_zero()) return r;
    r.coeffs_.assign(p.coeffs_.size() + q.coeffs_.size() - 1, 0);
    for (std::size_t i = 0; i < p.coeffs_.size(); ++i) {
        if (!p.coeffs_[i]) continue;
        for (std::size_t j = 0; j < q.coeffs_.size(); ++j)
            r.coeffs_[i + j] ^= q.coeffs_[j];
    }
    r.normalize();
    return r;
}

}  // namespace convodna
