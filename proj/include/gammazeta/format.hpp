// Text forms of scalars: "a+bi" parsing and shortest round-trip output.

#ifndef GAMMAZETA_FORMAT_HPP
#define GAMMAZETA_FORMAT_HPP

#include <gammazeta/numerics.hpp>

#include <charconv>
#include <optional>
#include <string>
#include <string_view>

namespace gammazeta {

namespace detail {

inline std::optional<double> parse_real(std::string_view s)
{
    if (!s.empty() && s.front() == '+') s.remove_prefix(1);
    if (s.empty()) return std::nullopt;
    double v = 0;
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec != std::errc() || ptr != s.data() + s.size()) return std::nullopt;
    return v;
}

}  // namespace detail

// Accepts "a", "bi", "a+bi", "a-bi", "i", "-i" (j is accepted for i).
inline std::optional<complex_t> parse_complex(std::string_view text)
{
    std::string s;
    for (char c : text)
        if (c != ' ' && c != '\t') s.push_back(c);
    if (s.empty()) return std::nullopt;

    const char last = s.back();
    if (last != 'i' && last != 'j') {
        auto re = detail::parse_real(s);
        if (!re) return std::nullopt;
        return complex_t(*re, 0.0);
    }
    s.pop_back();
    std::size_t split = std::string::npos;
    for (std::size_t k = s.size(); k-- > 1;) {
        if ((s[k] == '+' || s[k] == '-') && s[k - 1] != 'e' && s[k - 1] != 'E') {
            split = k;
            break;
        }
    }
    std::string_view re_text = split == std::string::npos ? std::string_view{}
                                                          : std::string_view(s).substr(0, split);
    std::string_view im_text = split == std::string::npos ? std::string_view(s)
                                                          : std::string_view(s).substr(split);
    double re = 0, im = 0;
    if (!re_text.empty()) {
        auto v = detail::parse_real(re_text);
        if (!v) return std::nullopt;
        re = *v;
    }
    if (im_text.empty() || im_text == "+") {
        im = 1;
    } else if (im_text == "-") {
        im = -1;
    } else {
        auto v = detail::parse_real(im_text);
        if (!v) return std::nullopt;
        im = *v;
    }
    return complex_t(re, im);
}

// Shortest decimal string that reads back to the same double.
inline std::string format_real(double v)
{
    char buf[64];
    auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, v);
    if (ec != std::errc()) return "nan";
    return std::string(buf, ptr);
}

inline std::string format_complex(complex_t z)
{
    if (z.imag() == 0) return format_real(z.real());
    std::string im = format_real(z.imag());
    if (im.front() != '-') im.insert(im.begin(), '+');
    return format_real(z.real()) + im + "i";
}

}  // namespace gammazeta

#endif  // GAMMAZETA_FORMAT_HPP
