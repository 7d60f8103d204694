#include "clustercap/rational.hpp"

#include <cctype>
#include <stdexcept>

namespace clustercap {

Int rat_floor(const Rat& r) {
    Int n = num(r), d = den(r);
    Int q = n / d;  // truncates toward zero
    if (n < 0 && q * d != n) --q;
    return q;
}

Int rat_ceil(const Rat& r) {
    Int n = num(r), d = den(r);
    Int q = n / d;
    if (n > 0 && q * d != n) ++q;
    return q;
}

namespace {

bool all_digits(const std::string& s) {
    if (s.empty()) return false;
    for (char c : s)
        if (!std::isdigit(static_cast<unsigned char>(c))) return false;
    return true;
}

}  // namespace

Rat parse_rat(const std::string& text) {
    std::string s = text;
    // strip surrounding whitespace
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.erase(s.begin());
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.pop_back();
    if (s.empty()) throw std::invalid_argument("empty rational literal");

    bool negative = false;
    if (s[0] == '+' || s[0] == '-') {
        negative = (s[0] == '-');
        s.erase(s.begin());
    }
    if (s.empty()) throw std::invalid_argument("bad rational literal: " + text);

    Rat result;
    auto slash = s.find('/');
    auto dot = s.find('.');
    if (slash != std::string::npos) {
        std::string p = s.substr(0, slash), q = s.substr(slash + 1);
        if (!all_digits(p) || !all_digits(q))
            throw std::invalid_argument("bad rational literal: " + text);
        Int qi(q);
        if (qi == 0) throw std::invalid_argument("zero denominator: " + text);
        result = Rat(Int(p), qi);
    } else if (dot != std::string::npos) {
        std::string ip = s.substr(0, dot), fp = s.substr(dot + 1);
        if (ip.empty()) ip = "0";
        if (fp.empty()) fp = "0";
        if (!all_digits(ip) || !all_digits(fp))
            throw std::invalid_argument("bad rational literal: " + text);
        Int scale = 1;
        for (size_t i = 0; i < fp.size(); ++i) scale *= 10;
        result = Rat(Int(ip) * scale + Int(fp), scale);
    } else {
        if (!all_digits(s)) throw std::invalid_argument("bad rational literal: " + text);
        result = Rat(Int(s));
    }
    return negative ? Rat(-result) : result;
}

std::string rat_to_string(const Rat& r) {
    Int n = num(r), d = den(r);
    if (d == 1) return n.str();
    return n.str() + "/" + d.str();
}

std::string rat_to_decimal(const Rat& r, int digits) {
    Int n = num(r), d = den(r);
    bool neg = n < 0;
    if (neg) n = -n;
    Int scale = 1;
    for (int i = 0; i < digits; ++i) scale *= 10;
    // round(n/d * scale), half away from zero
    Int scaled = (n * scale * 2 + d) / (d * 2);
    Int whole = scaled / scale, frac = scaled % scale;
    std::string fs = frac.str();
    fs.insert(fs.begin(), digits - static_cast<int>(fs.size()), '0');
    std::string out = whole.str();
    if (digits > 0) out += "." + fs;
    if (neg && (whole != 0 || frac != 0)) out.insert(out.begin(), '-');
    return out;
}

bool ext_less(const ExtRat& a, const ExtRat& b) {
    if (a.infinite) return false;
    if (b.infinite) return true;
    return a.value < b.value;
}

bool ext_geq_one(const ExtRat& a) { return a.infinite || a.value >= 1; }

std::string ext_to_string(const ExtRat& e) {
    return e.infinite ? "inf" : rat_to_string(e.value);
}

}  // namespace clustercap
