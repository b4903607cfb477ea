#pragma once

#include <stdexcept>
#include <string>
#include <vector>

namespace hitchin {

struct UnsupportedInfinityType : std::runtime_error {
    explicit UnsupportedInfinityType(const std::string& name)
        : std::runtime_error("no companion table for fiber type " + name) {}
};

// Kodaira fiber types of relative minimal elliptic surfaces, as far as this
// project needs them. The starred types carry the dual-graph aliases used in
// the irregular Hitchin literature: IV* = E6~, III* = E7~, II* = E8~.
struct KodairaType {
    enum class Kind { In, InStar, II, III, IV, IVStar, IIIStar, IIStar };
    Kind kind = Kind::In;
    int n = 1;  // only meaningful for In / InStar

    static KodairaType I(int n) { return {Kind::In, n}; }
    static KodairaType Istar(int n) { return {Kind::InStar, n}; }
    static KodairaType II_() { return {Kind::II, 0}; }
    static KodairaType III_() { return {Kind::III, 0}; }
    static KodairaType IV_() { return {Kind::IV, 0}; }
    static KodairaType E6() { return {Kind::IVStar, 0}; }
    static KodairaType E7() { return {Kind::IIIStar, 0}; }
    static KodairaType E8() { return {Kind::IIStar, 0}; }

    friend bool operator==(const KodairaType& a, const KodairaType& b) {
        if (a.kind != b.kind) return false;
        if (a.kind == Kind::In || a.kind == Kind::InStar) return a.n == b.n;
        return true;
    }
    friend bool operator!=(const KodairaType& a, const KodairaType& b) { return !(a == b); }
    friend bool operator<(const KodairaType& a, const KodairaType& b) {
        if (a.kind != b.kind) return a.kind < b.kind;
        return a.n < b.n;
    }
};

// Class in the Grothendieck ring of varieties, truncated to the subring
// Z<L, pt> every fiber in this story lives in. L is the Lefschetz class.
struct GrothClass {
    long l = 0;
    long pt = 0;

    friend GrothClass operator+(GrothClass a, GrothClass b) { return {a.l + b.l, a.pt + b.pt}; }
    friend GrothClass operator-(GrothClass a, GrothClass b) { return {a.l - b.l, a.pt - b.pt}; }
    friend GrothClass operator*(long s, GrothClass a) { return {s * a.l, s * a.pt}; }
    friend bool operator==(GrothClass a, GrothClass b) { return a.l == b.l && a.pt == b.pt; }
    friend bool operator!=(GrothClass a, GrothClass b) { return !(a == b); }
};

inline constexpr GrothClass kClassL{1, 0};
inline constexpr GrothClass kClassPt{0, 1};
inline constexpr GrothClass kClassP1{1, 1};     // [CP^1] = L + pt
inline constexpr GrothClass kClassTorus{1, -1};  // [C^x] = L - pt

std::string to_string(const KodairaType& t);
KodairaType parse_kodaira(const std::string& name);

// Class of the full Kodaira fiber (all components, reduced).
GrothClass groth_class(const KodairaType& t);

// Topological Euler number; these sum to 12 on a rational elliptic surface.
int euler_number(const KodairaType& t);

// Companion multisets that can share a rational elliptic surface with the
// given fiber over infinity. Only the five types arising here are supported.
std::vector<std::vector<KodairaType>> allowed_companions(const KodairaType& infinity);

std::string to_string(const GrothClass& c);

}  // namespace hitchin
