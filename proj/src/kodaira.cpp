#include "hitchin/kodaira.hpp"

#include <algorithm>
#include <cctype>

namespace hitchin {

std::string to_string(const KodairaType& t) {
    using K = KodairaType::Kind;
    switch (t.kind) {
        case K::In: return "i" + std::to_string(t.n);
        case K::InStar: return "i" + std::to_string(t.n) + "*";
        case K::II: return "ii";
        case K::III: return "iii";
        case K::IV: return "iv";
        case K::IVStar: return "e6~";
        case K::IIIStar: return "e7~";
        case K::IIStar: return "e8~";
    }
    return "?";
}

KodairaType parse_kodaira(const std::string& raw) {
    std::string s;
    for (char ch : raw) s.push_back(char(std::tolower(static_cast<unsigned char>(ch))));
    if (s == "ii") return KodairaType::II_();
    if (s == "iii") return KodairaType::III_();
    if (s == "iv") return KodairaType::IV_();
    if (s == "e6~" || s == "iv*") return KodairaType::E6();
    if (s == "e7~" || s == "iii*") return KodairaType::E7();
    if (s == "e8~" || s == "ii*") return KodairaType::E8();
    if (s.size() >= 2 && s[0] == 'i' && std::isdigit(static_cast<unsigned char>(s[1]))) {
        bool star = s.back() == '*';
        std::string digits = s.substr(1, s.size() - 1 - (star ? 1 : 0));
        for (char ch : digits)
            if (!std::isdigit(static_cast<unsigned char>(ch)))
                throw std::invalid_argument("bad fiber name: " + raw);
        int n = std::stoi(digits);
        if (!star && n < 1) throw std::invalid_argument("bad fiber name: " + raw);
        return star ? KodairaType::Istar(n) : KodairaType::I(n);
    }
    throw std::invalid_argument("bad fiber name: " + raw);
}

GrothClass groth_class(const KodairaType& t) {
    using K = KodairaType::Kind;
    switch (t.kind) {
        case K::In: return {t.n, 0};
        case K::InStar: return {t.n + 5, 1};
        case K::II: return {1, 1};
        case K::III: return {2, 1};
        case K::IV: return {3, 1};
        case K::IVStar: return {7, 1};
        case K::IIIStar: return {8, 1};
        case K::IIStar: return {9, 1};
    }
    return {};
}

int euler_number(const KodairaType& t) {
    using K = KodairaType::Kind;
    switch (t.kind) {
        case K::In: return t.n;
        case K::InStar: return t.n + 6;
        case K::II: return 2;
        case K::III: return 3;
        case K::IV: return 4;
        case K::IVStar: return 8;
        case K::IIIStar: return 9;
        case K::IIStar: return 10;
    }
    return 0;
}

std::vector<std::vector<KodairaType>> allowed_companions(const KodairaType& infinity) {
    using KT = KodairaType;
    const KT i1 = KT::I(1), i2 = KT::I(2), i3 = KT::I(3);
    const KT ii = KT::II_(), iii = KT::III_(), iv = KT::IV_();
    if (infinity == KT::Istar(2)) {
        return {{i1, i1, i1, i1}, {ii, i1, i1}, {i2, i1, i1},
                {i2, i2},         {ii, ii},     {iii, i1}};
    }
    if (infinity == KT::Istar(3)) return {{i1, i1, i1}, {ii, i1}};
    if (infinity == KT::Istar(4)) return {{i1, i1}};
    if (infinity == KT::E6()) {
        return {{i1, i1, i1, i1}, {i2, i1, i1}, {ii, i1, i1}, {ii, i2},
                {ii, ii},         {i3, i1},     {iii, i1},    {iv}};
    }
    if (infinity == KT::E7()) return {{i1, i1, i1}, {i2, i1}, {ii, i1}, {iii}};
    throw UnsupportedInfinityType(to_string(infinity));
}

std::string to_string(const GrothClass& c) {
    std::string out;
    auto term = [&](long v, const std::string& sym) {
        if (v == 0) return;
        if (!out.empty()) out += (v > 0) ? "+" : "-";
        else if (v < 0) out += "-";
        long a = std::abs(v);
        if (a != 1 || sym.empty()) out += std::to_string(a);
        out += sym;
    };
    term(c.l, "L");
    term(c.pt, "pt");
    if (out.empty()) out = "0";
    return out;
}

}  // namespace hitchin
