#include "rotrng/estimators.hpp"

#include <cctype>
#include <charconv>
#include <iomanip>
#include <ostream>
#include <stdexcept>

namespace rotrng {
namespace {

std::int64_t pow10(int e) {
    std::int64_t v = 1;
    for (int i = 0; i < e; ++i) {
        if (v > INT64_MAX / 10) {
            throw std::invalid_argument("decimal out of range");
        }
        v *= 10;
    }
    return v;
}

// ceil(num / den) for den > 0, clamped at zero for non-positive arguments.
std::int64_t ceil_nonneg(std::int64_t num, std::int64_t den) {
    if (num <= 0) {
        return 0;
    }
    return (num + den - 1) / den;
}

}  // namespace

Rational parse_decimal(std::string_view text) {
    const std::string_view original = text;
    auto fail = [&] { throw std::invalid_argument("not a decimal number: '" + std::string(original) + "'"); };
    if (text.empty()) {
        fail();
    }
    std::int64_t mantissa = 0;
    int frac_digits = 0;
    bool seen_point = false;
    bool seen_digit = false;
    std::size_t i = 0;
    for (; i < text.size(); ++i) {
        const char c = text[i];
        if (c == '.' && !seen_point) {
            seen_point = true;
        } else if (std::isdigit(static_cast<unsigned char>(c))) {
            if (mantissa > (INT64_MAX - 9) / 10) {
                fail();
            }
            mantissa = mantissa * 10 + (c - '0');
            frac_digits += seen_point ? 1 : 0;
            seen_digit = true;
        } else {
            break;
        }
    }
    if (!seen_digit) {
        fail();
    }
    int exponent = 0;
    if (i < text.size()) {
        if (text[i] != 'e' && text[i] != 'E') {
            fail();
        }
        const char* first = text.data() + i + 1;
        const char* last = text.data() + text.size();
        if (first != last && *first == '+') {
            ++first;
        }
        auto [ptr, ec] = std::from_chars(first, last, exponent);
        if (ec != std::errc{} || ptr != last) {
            fail();
        }
    }
    const int scale = exponent - frac_digits;
    if (scale >= 0) {
        const std::int64_t factor = pow10(scale);
        if (mantissa != 0 && mantissa > INT64_MAX / factor) {
            fail();
        }
        return Rational(mantissa * factor);
    }
    return Rational(mantissa, pow10(-scale));
}

std::string format_rational(const Rational& value) {
    std::int64_t num = value.numerator();
    std::int64_t den = value.denominator();
    std::int64_t rest = den;
    while (rest % 2 == 0) rest /= 2;
    while (rest % 5 == 0) rest /= 5;
    if (rest != 1) {
        return std::to_string(num) + "/" + std::to_string(den);
    }
    std::string out = num < 0 ? "-" : "";
    if (num < 0) {
        num = -num;
    }
    out += std::to_string(num / den);
    std::int64_t rem = num % den;
    if (rem != 0) {
        out += '.';
        while (rem != 0) {
            rem *= 10;
            out += static_cast<char>('0' + rem / den);
            rem %= den;
        }
    }
    return out;
}

ThroughputEstimate throughput(const Rational& f_hz, unsigned d, unsigned r) {
    if (f_hz <= 0) {
        throw std::invalid_argument("throughput: clock frequency must be positive");
    }
    if (d + r > 62) {
        throw std::invalid_argument("throughput: d + r too large");
    }
    return {f_hz / (std::int64_t{1} << (d + r))};
}

std::int64_t ResourceEstimate::rounded_up() const {
    const auto q = clb_count.numerator() / clb_count.denominator();
    return clb_count.numerator() % clb_count.denominator() == 0 ? q : q + 1;
}

ResourceEstimate clb_count(const TrngParams& params) {
    params.validate();
    const auto n = static_cast<std::int64_t>(params.n);
    const auto l = static_cast<std::int64_t>(params.l);
    const auto d = static_cast<std::int64_t>(params.d);
    const auto r = static_cast<std::int64_t>(params.r);

    ResourceEstimate est;
    est.breakdown = {
        {"ro_chain", Rational(l)},
        {"xor_tree", Rational(ceil_nonneg(n - 1, 3))},
        {"divider", Rational(d, 4)},
        {"counter", Rational(r, 4)},
        {"and_stage", Rational(ceil_nonneg(r - 1, 3))},
        {"fixed", Rational(3)},
    };
    for (const auto& term : est.breakdown) {
        est.clb_count += term.clbs;
    }
    return est;
}

std::int64_t Table1Row::kbps_truncated() const { return kbps.numerator() / kbps.denominator(); }

std::vector<Table1Row> table1(const Rational& f_hz) {
    struct Row {
        unsigned d, r, n, l;
    };
    static constexpr Row kRows[] = {{0, 2, 20, 3}, {0, 3, 10, 3}, {2, 2, 10, 3}, {5, 3, 5, 3}};
    std::vector<Table1Row> out;
    for (const auto& row : kRows) {
        out.push_back({row.d, row.r, row.n, row.l, throughput(f_hz, row.d, row.r).kbps()});
    }
    return out;
}

void write_table1_text(std::ostream& os, const std::vector<Table1Row>& rows) {
    os << std::setw(3) << "d" << std::setw(4) << "r" << std::setw(5) << "n" << std::setw(4) << "l"
       << std::setw(14) << "Kbps" << std::setw(16) << "Kbps (exact)" << '\n';
    for (const auto& row : rows) {
        os << std::setw(3) << row.d << std::setw(4) << row.r << std::setw(5) << row.n << std::setw(4) << row.l
           << std::setw(14) << row.kbps_truncated() << std::setw(16) << format_rational(row.kbps) << '\n';
    }
}

void write_table1_csv(std::ostream& os, const std::vector<Table1Row>& rows) {
    os << "d,r,n,l,throughput_kbps,throughput_kbps_exact\n";
    for (const auto& row : rows) {
        os << row.d << ',' << row.r << ',' << row.n << ',' << row.l << ',' << row.kbps_truncated() << ','
           << format_rational(row.kbps) << '\n';
    }
}

}  // namespace rotrng
