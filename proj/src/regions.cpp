#include "bireg/regions.hpp"

#include <algorithm>
#include <sstream>

#include "bireg/errors.hpp"

namespace bireg {

std::string to_string(RegionKind k) {
    switch (k) {
    case RegionKind::St: return "St";
    case RegionKind::Reg: return "Reg";
    case RegionKind::RegPrime: return "RegPrime";
    case RegionKind::RegDoublePrime: return "RegDoublePrime";
    case RegionKind::DReg: return "DReg";
    }
    return "?";
}

RegionKind region_kind_from_string(const std::string& s) {
    if (s == "St") return RegionKind::St;
    if (s == "Reg") return RegionKind::Reg;
    if (s == "RegPrime" || s == "Reg'") return RegionKind::RegPrime;
    if (s == "RegDoublePrime" || s == "Reg''") return RegionKind::RegDoublePrime;
    if (s == "DReg") return RegionKind::DReg;
    throw InvalidRegion("unknown region kind '" + s + "'");
}

Region::Region(RegionKind kind, int i, int p, int pp) : kind_(kind), i_(i), p_(p), pp_(pp) {
    bool ok = true;
    switch (kind) {
    case RegionKind::St: break;
    case RegionKind::Reg: ok = i >= -1; break;
    case RegionKind::RegPrime:
    case RegionKind::RegDoublePrime: ok = i == -1; break;
    case RegionKind::DReg: ok = i >= 0; break;
    }
    if (!ok) throw InvalidRegion(to_string(kind) + " is not defined for index " + std::to_string(i));
}

bool Region::is_upset() const noexcept {
    return kind_ == RegionKind::Reg || kind_ == RegionKind::RegPrime || kind_ == RegionKind::RegDoublePrime;
}

UpsetBounds Region::upset_bounds() const {
    switch (kind_) {
    case RegionKind::Reg: return {p_ - i_, pp_ - i_, p_ + pp_ - i_ - 1};
    case RegionKind::RegPrime: return {p_ + 1, pp_, p_ + 1 + pp_};
    case RegionKind::RegDoublePrime: return {p_, pp_ + 1, p_ + pp_ + 1};
    default: throw InvalidRegion(name() + " is not an up-set");
    }
}

bool Region::contains(int k, int kp) const {
    const int r = k - p_, s = kp - pp_;
    switch (kind_) {
    case RegionKind::St:
        if (i_ > 0) return r + s == -i_ - 1 && r < 0 && s < 0;
        return r + s == -i_ && r >= 0 && s >= 0;
    case RegionKind::Reg:
    case RegionKind::RegPrime:
    case RegionKind::RegDoublePrime: return upset_bounds().contains(k, kp);
    case RegionKind::DReg: return k <= p_ + i_ && kp <= pp_ + i_ && k + kp <= p_ + pp_ + i_;
    }
    return false;
}

std::vector<Bidegree> Region::points(std::optional<Window> window) const {
    std::vector<Bidegree> out;
    if (!window) {
        if (kind_ != RegionKind::St) throw NeedsWindow(name() + " is infinite; supply a window");
        if (i_ > 0) {
            for (int r = -i_; r <= -1; ++r) out.push_back({p_ + r, pp_ - i_ - 1 - r});
        } else {
            for (int r = 0; r <= -i_; ++r) out.push_back({p_ + r, pp_ - i_ - r});
        }
    } else {
        for (int k = window->k0; k <= window->k1; ++k)
            for (int kp = window->l0; kp <= window->l1; ++kp)
                if (contains(k, kp)) out.push_back({k, kp});
    }
    std::sort(out.begin(), out.end());
    return out;
}

std::string Region::name() const {
    return to_string(kind_) + "_" + std::to_string(i_) + "(" + std::to_string(p_) + "," + std::to_string(pp_) + ")";
}

bool region_contains(const Region& r, int k, int kp) { return r.contains(k, kp); }

std::vector<Bidegree> region_points(const Region& r, std::optional<Window> window) { return r.points(window); }

bool reg_contains_by_staircase(int i, int p, int pp, int k, int kp) {
    if (i == -1) return k >= p + 1 && kp >= pp + 1;
    for (const auto& pt : Region(RegionKind::St, i, p, pp).points())
        if (k >= pt.a && kp >= pt.b) return true;
    return false;
}

bool dreg_contains_by_negation(int i, int p, int pp, int k, int kp) {
    return Region(RegionKind::Reg, i + 1, -p + 1, -pp + 1).contains(-k, -kp);
}

ShiftPropertiesReport region_shift_properties_check(int i, int p, int pp, const Window& w) {
    ShiftPropertiesReport rep;
    auto fail = [&](int item, int k, int kp) {
        std::ostringstream os;
        os << "item " << item << " fails at (" << k << "," << kp << ") for i=" << i << " p=" << p << " p'=" << pp;
        rep.ok = false;
        rep.failure = os.str();
    };
    const bool has_st = i >= 0;
    const bool has_reg = i >= -1;
    const Region r0(RegionKind::Reg, 0, p, pp);
    const Region rp(RegionKind::RegPrime, -1, p, pp), rpp(RegionKind::RegDoublePrime, -1, p, pp);
    std::optional<Region> st, st1, reg, reg1;
    if (has_st) {
        st.emplace(RegionKind::St, i, p, pp);
        st1.emplace(RegionKind::St, i + 1, p, pp);
    }
    if (has_reg) {
        reg.emplace(RegionKind::Reg, i, p, pp);
        reg1.emplace(RegionKind::Reg, i + 1, p, pp);
    }
    for (int k = w.k0; k <= w.k1 && rep.ok; ++k) {
        for (int kp = w.l0; kp <= w.l1 && rep.ok; ++kp) {
            if (has_st && st->contains(k, kp) && !(st1->contains(k - 1, kp) && st1->contains(k, kp - 1))) {
                fail(1, k, kp);
            } else if (has_st && st->contains(k, kp) && !reg->contains(k, kp)) {
                fail(2, k, kp);
            } else if (has_reg && reg->contains(k, kp) &&
                       !(reg1->contains(k - 1, kp) && reg1->contains(k, kp - 1))) {
                fail(3, k, kp);
            } else if (rp.contains(k, kp) && !r0.contains(k - 1, kp)) {
                fail(5, k, kp);
            } else if (rpp.contains(k, kp) && !r0.contains(k, kp - 1)) {
                fail(6, k, kp);
            } else if (has_reg && !reg->contains(k, kp)) {
                // item 4 by transitivity: the two neighbouring anchors suffice.
                if (Region(RegionKind::Reg, i, p + 1, pp).contains(k, kp) ||
                    Region(RegionKind::Reg, i, p, pp + 1).contains(k, kp))
                    fail(4, k, kp);
            }
        }
    }
    return rep;
}

std::string render_region(const Region& r, const Window& w) {
    std::ostringstream os;
    for (int kp = w.l1; kp >= w.l0; --kp) {
        for (int k = w.k0; k <= w.k1; ++k) os << (r.contains(k, kp) ? '#' : '.');
        os << '\n';
    }
    return os.str();
}

} // namespace bireg
