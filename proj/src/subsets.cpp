#include "lolab/subsets.hpp"

#include <charconv>

namespace lolab {

std::vector<int> mask_elements(std::uint32_t mask) {
    std::vector<int> out;
    while (mask) {
        const int bit = std::countr_zero(mask);
        out.push_back(bit + 1);
        mask &= mask - 1;
    }
    return out;
}

PolyTable::PolyTable(int arity_, int target_size_, std::vector<std::uint8_t> values_)
    : arity(arity_), target_size(target_size_), values(std::move(values_)) {
    check_arity(arity_);
    if (target_size_ < 2 || target_size_ > 10)
        throw std::invalid_argument("target size out of range");
    if (values.size() != (std::size_t{1} << arity_))
        throw std::invalid_argument("value table has wrong length");
    for (std::uint8_t v : values)
        if (v >= target_size_)
            throw std::invalid_argument("table entry exceeds target size");
}

std::vector<PartitionTriple> iterate_partitions(int n) {
    std::vector<PartitionTriple> out;
    for_each_partition(n, [&](std::uint32_t x, std::uint32_t y, std::uint32_t z) {
        out.push_back(PartitionTriple{x, y, z, n});
    });
    return out;
}

std::string encode_table(const PolyTable& f) {
    std::string out = "poly " + std::to_string(f.arity) + " " +
                      std::to_string(f.target_size) + "\n";
    out.reserve(out.size() + f.values.size() + 1);
    for (std::uint8_t v : f.values) out.push_back(static_cast<char>('0' + v));
    out.push_back('\n');
    return out;
}

PolyTable decode_table(std::string_view text) {
    const auto fail_header = [] {
        throw ParseError(ParseError::Kind::Header, "malformed table header");
    };
    if (text.substr(0, 5) != "poly ") fail_header();
    text.remove_prefix(5);
    const auto line_end = text.find('\n');
    if (line_end == std::string_view::npos) fail_header();
    const std::string_view header = text.substr(0, line_end);
    std::string_view body = text.substr(line_end + 1);

    int n = 0, ell = 0;
    const auto space = header.find(' ');
    if (space == std::string_view::npos) fail_header();
    auto r1 = std::from_chars(header.data(), header.data() + space, n);
    auto r2 = std::from_chars(header.data() + space + 1,
                              header.data() + header.size(), ell);
    if (r1.ec != std::errc{} || r2.ec != std::errc{} ||
        r1.ptr != header.data() + space || r2.ptr != header.data() + header.size())
        fail_header();
    if (n < 1 || n > kMaxArity || ell < 2 || ell > 10) fail_header();

    if (!body.empty() && body.back() == '\n') body.remove_suffix(1);
    if (body.size() != (std::size_t{1} << n))
        throw ParseError(ParseError::Kind::Length,
                         "table body has wrong length (expected " +
                             std::to_string(std::size_t{1} << n) + " digits)");

    std::vector<std::uint8_t> values(body.size());
    for (std::size_t i = 0; i < body.size(); ++i) {
        const char c = body[i];
        if (c < '0' || c >= '0' + ell)
            throw ParseError(ParseError::Kind::Digit,
                             "table digit out of range at index " + std::to_string(i));
        values[i] = static_cast<std::uint8_t>(c - '0');
    }
    return PolyTable(n, ell, std::move(values));
}

}  // namespace lolab
