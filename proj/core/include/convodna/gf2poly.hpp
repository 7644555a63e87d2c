#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace convodna {

// A 0/1 digit sequence in time order (index 0 transmitted first). Unlike
// BinaryPoly it keeps trailing zeros.
using BitSeq = std::vector<std::uint8_t>;

BitSeq parse_bits(std::string_view text);   // "1100" -> {1,1,0,0}; DataError on other chars
std::string format_bits(const BitSeq& bits);

// Polynomial over Z2[x], little-endian coefficients (index i = coefficient of
// x^i). Always normalized: the highest stored index carries a 1, and the zero
// polynomial stores nothing. degree() is nullopt for the zero polynomial so
// degree arithmetic can never silently treat "no degree" as -1.
class BinaryPoly {
public:
    BinaryPoly() = default;

    static BinaryPoly from_bits(const BitSeq& bits);
    // Accepts the little-endian bit-string form ("101" = 1+x^2) and the human
    // form ("1+x^2", whitespace tolerated). Emission always uses bit strings.
    static BinaryPoly parse(std::string_view text);

    bool is_zero() const { return coeffs_.empty(); }
    std::optional<std::size_t> degree() const;
    std::uint8_t coeff(std::size_t i) const { return i < coeffs_.size() ? coeffs_[i] : 0; }
    const std::vector<std::uint8_t>& coeffs() const { return coeffs_; }

    // len must exceed degree(); the result carries trailing zeros up to len.
    BitSeq to_bits(std::size_t len) const;
    std::string to_string() const;  // "0" for the zero polynomial

    friend BinaryPoly operator+(const BinaryPoly& p, const BinaryPoly& q);
    friend BinaryPoly operator*(const BinaryPoly& p, const BinaryPoly& q);
    friend bool operator==(const BinaryPoly&, const BinaryPoly&) = default;

private:
    std::vector<std::uint8_t> coeffs_;
    void normalize();
};

}  // namespace convodna
