#include "tmcv/weight.hpp"

#include "tmcv/errors.hpp"

#include <charconv>
#include <vector>

namespace tmcv {

std::string to_string(const Weight& w)
{
    std::string s = "(";
    for (Eigen::Index i = 0; i < w.size(); ++i) {
        if (i) s += ',';
        s += std::to_string(w(i));
    }
    return s + ")";
}

Weight parse_weight(std::string_view text)
{
    std::vector<Int> xs;
    std::size_t i = 0;
    auto skip = [&] {
        while (i < text.size() && (text[i] == ' ' || text[i] == '(' || text[i] == ')' || text[i] == '\t'))
            ++i;
    };
    skip();
    while (i < text.size()) {
        Int v = 0;
        const char* b = text.data() + i;
        const char* e = text.data() + text.size();
        if (*b == '+') ++b;
        auto [ptr, ec] = std::from_chars(b, e, v);
        if (ec != std::errc{} || ptr == b) throw Error(ErrorCode::ParseError, "bad weight '" + std::string(text) + "'");
        xs.push_back(v);
        i = static_cast<std::size_t>(ptr - text.data());
        skip();
        if (i < text.size()) {
            if (text[i] != ',') throw Error(ErrorCode::ParseError, "bad weight '" + std::string(text) + "'");
            ++i;
            skip();
            if (i >= text.size()) throw Error(ErrorCode::ParseError, "bad weight '" + std::string(text) + "'");
        }
    }
    if (xs.empty() || xs.size() > 3) throw Error(ErrorCode::ParseError, "bad weight '" + std::string(text) + "'");
    Weight w(static_cast<Eigen::Index>(xs.size()));
    for (std::size_t k = 0; k < xs.size(); ++k) w(static_cast<Eigen::Index>(k)) = xs[k];
    return w;
}

} // namespace tmcv
