#include "bireg/ring.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <sstream>
#include <stdexcept>

#include "bireg/errors.hpp"

namespace bireg {

std::ostream& operator<<(std::ostream& os, Bidegree d) { return os << '(' << d.a << ',' << d.b << ')'; }

Monomial::Monomial(int nx, int nvars) : nx_(static_cast<std::uint8_t>(nx)), nv_(static_cast<std::uint8_t>(nvars)) {
    if (nvars < 0 || static_cast<std::size_t>(nvars) > kMaxVars || nx < 0 || nx > nvars)
        throw std::invalid_argument("bireg: unsupported number of variables");
}

Monomial Monomial::from_exponents(int nx, const std::vector<int>& exps) {
    Monomial u(nx, static_cast<int>(exps.size()));
    for (int i = 0; i < static_cast<int>(exps.size()); ++i) u.set(i, exps[static_cast<std::size_t>(i)]);
    return u;
}

void Monomial::set(int i, int e) {
    if (e < 0 || e > 255) throw std::overflow_error("bireg: monomial exponent out of range");
    auto& slot = e_[static_cast<std::size_t>(i)];
    if (i < nx_)
        xdeg_ = static_cast<std::uint16_t>(xdeg_ - slot + e);
    else
        ydeg_ = static_cast<std::uint16_t>(ydeg_ - slot + e);
    slot = static_cast<std::uint8_t>(e);
}

bool Monomial::divides(const Monomial& o) const noexcept {
    if (xdeg_ > o.xdeg_ || ydeg_ > o.ydeg_) return false;
    for (int i = 0; i < nv_; ++i)
        if (e_[i] > o.e_[i]) return false;
    return true;
}

bool Monomial::coprime(const Monomial& o) const noexcept {
    for (int i = 0; i < nv_; ++i)
        if (e_[i] && o.e_[i]) return false;
    return true;
}

Monomial Monomial::lcm(const Monomial& o) const {
    Monomial r(nx_, nv_);
    for (int i = 0; i < nv_; ++i) r.set(i, std::max(e_[i], o.e_[i]));
    return r;
}

Monomial Monomial::quotient(const Monomial& d) const {
    Monomial r(nx_, nv_);
    for (int i = 0; i < nv_; ++i) {
        if (d.e_[i] > e_[i]) throw std::logic_error("bireg: monomial quotient without divisibility");
        r.set(i, e_[i] - d.e_[i]);
    }
    return r;
}

Monomial operator*(const Monomial& u, const Monomial& v) {
    Monomial r(u.nx_, u.nv_);
    for (int i = 0; i < u.nv_; ++i) {
        int e = u.e_[i] + v.e_[i];
        if (e > 255) throw std::overflow_error("bireg: monomial exponent overflow");
        r.e_[i] = static_cast<std::uint8_t>(e);
    }
    r.xdeg_ = static_cast<std::uint16_t>(u.xdeg_ + v.xdeg_);
    r.ydeg_ = static_cast<std::uint16_t>(u.ydeg_ + v.ydeg_);
    return r;
}

int compare_revlex(const Monomial& u, const Monomial& v) noexcept {
    for (int i = u.nv_ - 1; i >= 0; --i) {
        if (u.e_[i] != v.e_[i]) return u.e_[i] < v.e_[i] ? 1 : -1;
    }
    return 0;
}

int compare_degrevlex(const Monomial& u, const Monomial& v) noexcept {
    int du = u.degree(), dv = v.degree();
    if (du != dv) return du > dv ? 1 : -1;
    return compare_revlex(u, v);
}

std::size_t Monomial::hash() const noexcept {
    std::size_t h = 1469598103934665603ULL;
    for (int i = 0; i < nv_; ++i) h = (h ^ e_[i]) * 1099511628211ULL;
    return h;
}

// ---------------------------------------------------------------- Ring

struct Ring::Cache {
    std::mutex mu;
    std::map<Bidegree, std::vector<Monomial>> monomials;
};

Ring::Ring(int m, int n, Field field, bool allow_trivial)
    : m_(m), n_(n), field_(field), cache_(std::make_shared<Cache>()) {
    if (m < -1 || n < -1) throw std::invalid_argument("bireg: block sizes must be >= -1");
    if (m == -1 && n == -1 && !allow_trivial) throw EmptyRing("ring with no variables requested");
    if (static_cast<std::size_t>(m + n + 2) > kMaxVars) throw std::invalid_argument("bireg: too many variables");
}

Monomial Ring::var(int i) const {
    Monomial u = one();
    u.set(i, 1);
    return u;
}

std::string Ring::var_name(int i) const {
    return i < nx() ? "x" + std::to_string(i) : "y" + std::to_string(i - nx());
}

Polynomial Ring::constant(long long c) const { return term(one(), c); }
Polynomial Ring::variable(int i) const { return term(var(i), 1); }

Polynomial Ring::term(const Monomial& mono, long long c) const {
    return Polynomial::from_terms({{mono, field_.from_int(c)}});
}

namespace {

void compositions(int total, int parts, std::vector<int>& cur, std::vector<std::vector<int>>& out) {
    if (parts == 0) {
        if (total == 0) out.push_back(cur);
        return;
    }
    if (parts == 1) {
        cur.push_back(total);
        out.push_back(cur);
        cur.pop_back();
        return;
    }
    for (int e = total; e >= 0; --e) {
        cur.push_back(e);
        compositions(total - e, parts - 1, cur, out);
        cur.pop_back();
    }
}

} // namespace

const std::vector<Monomial>& Ring::monomials(Bidegree d) const {
    std::lock_guard lock(cache_->mu);
    auto it = cache_->monomials.find(d);
    if (it != cache_->monomials.end()) return it->second;
    std::vector<Monomial> out;
    if (d.nonnegative() && !(nx() == 0 && d.a > 0) && !(ny() == 0 && d.b > 0)) {
        std::vector<std::vector<int>> xs, ys;
        std::vector<int> cur;
        compositions(d.a, nx(), cur, xs);
        compositions(d.b, ny(), cur, ys);
        for (const auto& xe : xs)
            for (const auto& ye : ys) {
                Monomial u = one();
                for (int i = 0; i < nx(); ++i) u.set(i, xe[static_cast<std::size_t>(i)]);
                for (int j = 0; j < ny(); ++j) u.set(nx() + j, ye[static_cast<std::size_t>(j)]);
                out.push_back(u);
            }
        std::sort(out.begin(), out.end(),
                  [](const Monomial& u, const Monomial& v) { return compare_degrevlex(u, v) > 0; });
    }
    return cache_->monomials.emplace(d, std::move(out)).first->second;
}

long long binomial(long long n, long long k) {
    if (k < 0 || n < k) return 0;
    k = std::min(k, n - k);
    long long r = 1;
    for (long long i = 1; i <= k; ++i) r = r * (n - k + i) / i;
    return r;
}

long long Ring::dim(Bidegree d) const {
    if (!d.nonnegative()) return 0;
    auto part = [](int deg, int block) -> long long {
        if (block < 0) return deg == 0 ? 1 : 0;
        return binomial(deg + block, block);
    };
    return part(d.a, m_) * part(d.b, n_);
}

// ---------------------------------------------------------------- Polynomial

Polynomial Polynomial::from_terms(std::vector<TermT> terms) {
    std::sort(terms.begin(), terms.end(),
              [](const TermT& s, const TermT& t) { return compare_degrevlex(s.first, t.first) > 0; });
    Polynomial p;
    for (auto& t : terms) {
        if (!p.terms_.empty() && p.terms_.back().first == t.first) {
            p.terms_.back().second += t.second;
            if (p.terms_.back().second.is_zero()) p.terms_.pop_back();
        } else if (!t.second.is_zero()) {
            p.terms_.push_back(std::move(t));
        }
    }
    return p;
}

Bidegree Polynomial::bidegree() const {
    if (terms_.empty()) throw ZeroPolynomial("the zero polynomial has no bidegree");
    Bidegree d = terms_.front().first.bidegree();
    for (const auto& t : terms_)
        if (t.first.bidegree() != d) throw NotBihomogeneous("polynomial mixes bidegrees");
    return d;
}

bool Polynomial::is_bihomogeneous() const noexcept {
    if (terms_.empty()) return true;
    Bidegree d = terms_.front().first.bidegree();
    return std::all_of(terms_.begin(), terms_.end(), [&](const TermT& t) { return t.first.bidegree() == d; });
}

const Scalar* Polynomial::constant_term() const noexcept {
    if (terms_.empty() || !terms_.back().first.is_one()) return nullptr;
    return &terms_.back().second;
}

Polynomial Polynomial::operator-() const {
    Polynomial r = *this;
    for (auto& t : r.terms_) t.second = -t.second;
    return r;
}

namespace {

std::vector<Polynomial::TermT> merge(const std::vector<Polynomial::TermT>& a, const std::vector<Polynomial::TermT>& b,
                                     bool subtract) {
    std::vector<Polynomial::TermT> out;
    out.reserve(a.size() + b.size());
    std::size_t i = 0, j = 0;
    while (i < a.size() || j < b.size()) {
        int c = i == a.size() ? -1 : j == b.size() ? 1 : compare_degrevlex(a[i].first, b[j].first);
        if (c > 0) {
            out.push_back(a[i++]);
        } else if (c < 0) {
            out.emplace_back(b[j].first, subtract ? -b[j].second : b[j].second);
            ++j;
        } else {
            Scalar s = subtract ? a[i].second - b[j].second : a[i].second + b[j].second;
            if (!s.is_zero()) out.emplace_back(a[i].first, std::move(s));
            ++i;
            ++j;
        }
    }
    return out;
}

} // namespace

Polynomial& Polynomial::operator+=(const Polynomial& o) {
    terms_ = merge(terms_, o.terms_, false);
    return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& o) {
    terms_ = merge(terms_, o.terms_, true);
    return *this;
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
    Polynomial r;
    for (const auto& t : b.terms_) r += a.shifted(t.first).scaled(t.second);
    return r;
}

Polynomial Polynomial::scaled(const Scalar& c) const {
    Polynomial r;
    if (c.is_zero()) return r;
    r.terms_.reserve(terms_.size());
    for (const auto& t : terms_) r.terms_.emplace_back(t.first, t.second * c);
    return r;
}

Polynomial Polynomial::shifted(const Monomial& u) const {
    Polynomial r;
    r.terms_.reserve(terms_.size());
    for (const auto& t : terms_) r.terms_.emplace_back(t.first * u, t.second);
    return r;
}

bool operator==(const Polynomial& a, const Polynomial& b) {
    if (a.terms_.size() != b.terms_.size()) return false;
    for (std::size_t i = 0; i < a.terms_.size(); ++i)
        if (!(a.terms_[i].first == b.terms_[i].first) || !(a.terms_[i].second == b.terms_[i].second)) return false;
    return true;
}

std::string Polynomial::to_string(const Ring& ring) const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [mono, coef] : terms_) {
        std::string c = coef.to_string();
        bool neg = !c.empty() && c[0] == '-';
        if (neg) c.erase(0, 1);
        if (!first) os << (neg ? " - " : " + ");
        else if (neg) os << '-';
        first = false;
        bool unit = c == "1";
        if (!unit || mono.is_one()) os << c;
        bool need_star = !unit;
        for (int i = 0; i < mono.nvars(); ++i) {
            if (mono[i] == 0) continue;
            if (need_star) os << '*';
            os << ring.var_name(i);
            if (mono[i] > 1) os << '^' << mono[i];
            need_star = true;
        }
    }
    return os.str();
}

Bidegree bidegree_of(const Polynomial& p) { return p.bidegree(); }

} // namespace bireg
