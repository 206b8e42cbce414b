#pragma once

#include <optional>
#include <string>
#include <vector>

#include "bireg/ring.hpp"

namespace bireg {

enum class RegionKind { St, Reg, RegPrime, RegDoublePrime, DReg };

std::string to_string(RegionKind k);
RegionKind region_kind_from_string(const std::string& s);

// Inclusive rectangle [k0,k1] x [l0,l1].
struct Window {
    int k0, k1, l0, l1;
    bool contains(int k, int kp) const noexcept { return k0 <= k && k <= k1 && l0 <= kp && kp <= l1; }
    bool empty() const noexcept { return k0 > k1 || l0 > l1; }
};

// Up-set {k >= a, k' >= b, k + k' >= s}.
struct UpsetBounds {
    int a, b, s;
    bool contains(int k, int kp) const noexcept { return k >= a && kp >= b && k + kp >= s; }
};

// Symbolic lattice region: staircases St_i, up-sets Reg_i / Reg'_{-1} / Reg''_{-1}, down-sets DReg_i,
// all anchored at (p, p').
class Region {
public:
    // Throws InvalidRegion for kind/index combinations that are not defined.
    Region(RegionKind kind, int i, int p, int pp);

    RegionKind kind() const noexcept { return kind_; }
    int index() const noexcept { return i_; }
    int p() const noexcept { return p_; }
    int pp() const noexcept { return pp_; }

    bool contains(int k, int kp) const;
    bool is_upset() const noexcept;
    bool is_finite() const noexcept { return kind_ == RegionKind::St; }
    UpsetBounds upset_bounds() const;

    // Lexicographically sorted lattice points; St without a window, anything with one.
    std::vector<Bidegree> points(std::optional<Window> window = std::nullopt) const;

    std::string name() const;

private:
    RegionKind kind_;
    int i_, p_, pp_;
};

bool region_contains(const Region& r, int k, int kp);
std::vector<Bidegree> region_points(const Region& r, std::optional<Window> window = std::nullopt);

// Independent route for Reg_i: Z_+^2 + St_i(p,p') (Reg_{-1} via its own translate).
bool reg_contains_by_staircase(int i, int p, int pp, int k, int kp);
// Independent route for DReg_i: -Reg_{i+1}(-p+1, -p'+1).
bool dreg_contains_by_negation(int i, int p, int pp, int k, int kp);

struct ShiftPropertiesReport {
    bool ok = true;
    std::string failure; // first counterexample, empty when ok
};

// Pointwise check of the six staircase/regularity-region shift implications on a window.
ShiftPropertiesReport region_shift_properties_check(int i, int p, int pp, const Window& window);

// Rows k' descending, '#' member, '.' nonmember.
std::string render_region(const Region& r, const Window& window);

} // namespace bireg
