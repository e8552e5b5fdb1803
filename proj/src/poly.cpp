#include "homlie/poly.hpp"

#include <sstream>
#include <unordered_map>
#include <vector>

namespace homlie {

std::string GaussianRational::str() const {
    std::ostringstream os;
    if (im == 0) {
        os << re;
    } else if (re == 0) {
        if (im == 1) os << "i";
        else if (im == -1) os << "-i";
        else os << im << "*i";
    } else {
        os << re;
        Rational a = im < 0 ? Rational(-im) : im;
        os << (im < 0 ? "-" : "+");
        if (a == 1) os << "i";
        else os << a << "*i";
    }
    return os.str();
}

MultivarPoly MultivarPoly::variable(int v) {
    MultivarPoly p;
    Expo e{0, 0, 0};
    e[v] = 1;
    p.terms_[e] = GaussianRational(1);
    return p;
}

bool MultivarPoly::is_constant() const {
    return terms_.empty() ||
           (terms_.size() == 1 && terms_.begin()->first == Expo{0, 0, 0});
}

GaussianRational MultivarPoly::constant_value() const {
    if (terms_.empty()) return GaussianRational(0);
    return terms_.begin()->second;
}

bool MultivarPoly::uses_variable(int v) const {
    for (const auto& [e, k] : terms_)
        if (e[v] > 0) return true;
    return false;
}

int MultivarPoly::degree_in(int v) const {
    int d = 0;
    for (const auto& [e, k] : terms_)
        if (e[v] > d) d = e[v];
    return d;
}

void MultivarPoly::add_term(const Expo& e, const GaussianRational& k) {
    if (k.is_zero()) return;
    auto it = terms_.find(e);
    if (it == terms_.end()) {
        terms_[e] = k;
    } else {
        it->second = it->second + k;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

MultivarPoly operator+(const MultivarPoly& f, const MultivarPoly& g) {
    MultivarPoly r = f;
    for (const auto& [e, k] : g.terms_) r.add_term(e, k);
    return r;
}

MultivarPoly operator-(const MultivarPoly& f, const MultivarPoly& g) {
    MultivarPoly r = f;
    for (const auto& [e, k] : g.terms_) r.add_term(e, -k);
    return r;
}

MultivarPoly operator-(const MultivarPoly& f) {
    MultivarPoly r;
    for (const auto& [e, k] : f.terms_) r.terms_[e] = -k;
    return r;
}

MultivarPoly operator*(const MultivarPoly& f, const MultivarPoly& g) {
    MultivarPoly r;
    for (const auto& [e1, k1] : f.terms_)
        for (const auto& [e2, k2] : g.terms_)
            r.add_term(Expo{e1[0] + e2[0], e1[1] + e2[1], e1[2] + e2[2]}, k1 * k2);
    return r;
}

MultivarPoly MultivarPoly::pow(int k) const {
    MultivarPoly r(1);
    for (int n = 0; n < k; ++n) r = r * *this;
    return r;
}

std::optional<MultivarPoly> MultivarPoly::divide_exact(const MultivarPoly& d) const {
    if (d.is_zero()) return std::nullopt;
    MultivarPoly rem = *this;
    MultivarPoly quot;
    const Expo& dl = d.leading_monomial();
    while (!rem.is_zero()) {
        const Expo& rl = rem.leading_monomial();
        Expo q;
        for (int v = 0; v < kNumVars; ++v) {
            q[v] = rl[v] - dl[v];
            if (q[v] < 0) return std::nullopt;
        }
        GaussianRational kq = rem.leading_coeff() / d.leading_coeff();
        MultivarPoly m;
        m.terms_[q] = kq;
        quot = quot + m;
        rem = rem - m * d;
    }
    return quot;
}

namespace {

// View of f as a univariate polynomial in variable v with MultivarPoly
// coefficients (which no longer involve v).
std::map<int, MultivarPoly> univar(const MultivarPoly& f, int v) {
    std::map<int, MultivarPoly> out;
    for (const auto& [e, k] : f.terms()) {
        Expo rest = e;
        int d = rest[v];
        rest[v] = 0;
        out[d].add_term(rest, k);
    }
    return out;
}

MultivarPoly from_univar(const std::map<int, MultivarPoly>& u, int v) {
    MultivarPoly out;
    for (const auto& [d, coeff] : u) {
        for (const auto& [e, k] : coeff.terms()) {
            Expo full = e;
            full[v] = d;
            out.add_term(full, k);
        }
    }
    return out;
}

int udeg(const std::map<int, MultivarPoly>& u) { return u.empty() ? -1 : u.rbegin()->first; }

// gcd of all MultivarPoly coefficients of f viewed in variable v.
MultivarPoly content(const MultivarPoly& f, int v) {
    MultivarPoly c;
    for (const auto& [d, coeff] : univar(f, v))
        c = MultivarPoly::gcd(c, coeff);
    return c;
}

// Pseudo-remainder of f by g in variable v (deg_v g >= 1, g != 0).
MultivarPoly prem(MultivarPoly f, const MultivarPoly& g, int v) {
    auto ug = univar(g, v);
    int dg = udeg(ug);
    const MultivarPoly& lg = ug.rbegin()->second;
    int df = univar(f, v).empty() ? -1 : univar(f, v).rbegin()->first;
    if (df < dg) return f;
    // Multiply through by lc(g)^(df-dg+1) so each elimination step is exact.
    f = f * lg.pow(df - dg + 1);
    while (true) {
        auto uf = univar(f, v);
        int d = udeg(uf);
        if (d < dg || f.is_zero()) return f;
        MultivarPoly q = *uf.rbegin()->second.divide_exact(lg);
        std::map<int, MultivarPoly> shift;
        shift[d - dg] = q;
        f = f - from_univar(shift, v) * g;
    }
}

MultivarPoly make_monic(const MultivarPoly& f) {
    if (f.is_zero()) return f;
    MultivarPoly r;
    GaussianRational inv = f.leading_coeff().inverse();
    for (const auto& [e, k] : f.terms()) r.add_term(e, k * inv);
    return r;
}

}  // namespace

namespace {

// gcd when at least one argument is a single term: the min-exponent monomial
// across every term of both.
MultivarPoly monomial_gcd(const MultivarPoly& f, const MultivarPoly& g) {
    Expo m = f.leading_monomial();
    for (const auto& [e, k] : f.terms())
        for (int v = 0; v < kNumVars; ++v) m[v] = std::min(m[v], e[v]);
    for (const auto& [e, k] : g.terms())
        for (int v = 0; v < kNumVars; ++v) m[v] = std::min(m[v], e[v]);
    MultivarPoly r;
    r.add_term(m, GaussianRational(1));
    return r;
}

// Cheap necessary condition for g | f, so the trial divisions below fail
// fast on unrelated polynomials.
bool may_divide(const MultivarPoly& g, const MultivarPoly& f) {
    const Expo& lf = f.leading_monomial();
    const Expo& lg = g.leading_monomial();
    for (int v = 0; v < kNumVars; ++v)
        if (lg[v] > lf[v] || g.degree_in(v) > f.degree_in(v)) return false;
    return true;
}

}  // namespace

namespace {

// Min exponent vector over all terms, as a monomial.
MultivarPoly monomial_content(const MultivarPoly& f) {
    Expo m = f.leading_monomial();
    for (const auto& [e, k] : f.terms())
        for (int v = 0; v < kNumVars; ++v) m[v] = std::min(m[v], e[v]);
    MultivarPoly r;
    r.add_term(m, GaussianRational(1));
    return r;
}

// The single variable p involves, or -1 if it involves several (or none).
int only_variable(const MultivarPoly& p) {
    int v = -1;
    for (int w = 0; w < kNumVars; ++w)
        if (p.uses_variable(w)) {
            if (v >= 0) return -1;
            v = w;
        }
    return v;
}

// Monic gcd of two univariate polynomials in v, by plain Euclid over Q(i).
MultivarPoly gcd_uni(const MultivarPoly& f, const MultivarPoly& g, int v) {
    auto tovec = [&](const MultivarPoly& p) {
        std::vector<GaussianRational> c(p.degree_in(v) + 1);
        for (const auto& [e, k] : p.terms()) c[e[v]] = k;
        return c;
    };
    auto trim = [](std::vector<GaussianRational>& c) {
        while (!c.empty() && c.back().is_zero()) c.pop_back();
    };
    std::vector<GaussianRational> x = tovec(f), y = tovec(g);
    trim(x);
    trim(y);
    while (!y.empty()) {
        while (x.size() >= y.size()) {
            GaussianRational q = x.back() / y.back();
            for (std::size_t i = 0; i < y.size(); ++i) {
                std::size_t j = x.size() - y.size() + i;
                x[j] = x[j] - q * y[i];
            }
            trim(x);
        }
        std::swap(x, y);
    }
    MultivarPoly r;
    GaussianRational inv = x.back().inverse();
    for (std::size_t i = 0; i < x.size(); ++i)
        if (!x[i].is_zero()) {
            Expo e{};
            e[v] = static_cast<int>(i);
            r.add_term(e, x[i] * inv);
        }
    return r;
}

}  // namespace

MultivarPoly MultivarPoly::gcd(const MultivarPoly& f, const MultivarPoly& g) {
    if (f.is_zero()) return make_monic(g);
    if (g.is_zero()) return make_monic(f);
    if (f.is_constant() || g.is_constant()) return MultivarPoly(1);
    if (f.is_monomial() || g.is_monomial()) return monomial_gcd(f, g);

    // Pull the monomial content out of both sides; it is by far the most
    // common shared factor in this workload (denominators are near-monomial).
    MultivarPoly m = monomial_gcd(monomial_content(f), monomial_content(g));
    MultivarPoly fp = *f.divide_exact(monomial_content(f));
    MultivarPoly gp = *g.divide_exact(monomial_content(g));

    // A common divisor only involves variables both sides use.
    bool shared[kNumVars];
    bool any_shared = false;
    for (int v = 0; v < kNumVars; ++v) {
        shared[v] = fp.uses_variable(v) && gp.uses_variable(v);
        any_shared = any_shared || shared[v];
    }
    if (!any_shared) return m;

    if (may_divide(gp, fp) && fp.divide_exact(gp)) return m * make_monic(gp);
    if (may_divide(fp, gp) && gp.divide_exact(fp)) return m * make_monic(fp);

    // If either side involves a single variable, every common divisor is
    // univariate in it, so the gcd is the univariate gcd of that side with
    // each coefficient of the other side grouped by its monomial in the
    // remaining variables.  This covers the common case of reducing a large
    // accumulated numerator against a cleared-denominator factor.
    if (int vg = only_variable(gp), vf = only_variable(fp); vg >= 0 || vf >= 0) {
        int v = vg >= 0 ? vg : vf;
        const MultivarPoly& uni = vg >= 0 ? gp : fp;
        const MultivarPoly& rest = vg >= 0 ? fp : gp;
        std::map<Expo, MultivarPoly, GrlexLess> groups;  // key has slot v zeroed
        for (const auto& [e, k] : rest.terms()) {
            Expo key = e;
            Expo t{};
            t[v] = key[v];
            key[v] = 0;
            groups[key].add_term(t, k);
        }
        MultivarPoly h = uni;
        for (const auto& [key, coeff] : groups) {
            if (h.is_constant()) break;
            h = gcd_uni(h, coeff, v);
        }
        if (h.is_constant()) return m;
        return m * h;
    }

    // The same denominator pairs recur constantly during tensor
    // accumulation, so the expensive PRS tail is memoized.
    static std::unordered_map<std::string, MultivarPoly> cache;
    std::string key = fp.str() + "|" + gp.str();
    if (auto it = cache.find(key); it != cache.end()) return m * it->second;

    // Primitive PRS in the cheapest shared variable.
    int v = -1, best = 0;
    for (int w = 0; w < kNumVars; ++w) {
        if (!shared[w]) continue;
        int d = std::min(fp.degree_in(w), gp.degree_in(w));
        if (v < 0 || d < best) v = w, best = d;
    }
    MultivarPoly cf = content(fp, v), cg = content(gp, v);
    MultivarPoly c = gcd(cf, cg);
    fp = *fp.divide_exact(cf);
    gp = *gp.divide_exact(cg);
    if (fp.degree_in(v) < gp.degree_in(v)) std::swap(fp, gp);
    MultivarPoly result;
    while (true) {
        if (gp.degree_in(v) == 0) {
            // gp is a nonzero content-free element w.r.t. v: gcd in v is 1.
            if (!gp.is_zero()) result = make_monic(c);
            else result = make_monic(c * *fp.divide_exact(content(fp, v)));
            break;
        }
        MultivarPoly r = prem(fp, gp, v);
        if (!r.is_zero()) r = *r.divide_exact(content(r, v));
        fp = gp;
        gp = r;
    }
    cache.emplace(std::move(key), result);
    return m * result;
}

GaussianRational MultivarPoly::substitute(
    const std::array<std::optional<GaussianRational>, kNumVars>& b) const {
    GaussianRational out(0);
    for (const auto& [e, k] : terms_) {
        GaussianRational t = k;
        for (int v = 0; v < kNumVars; ++v) {
            if (e[v] == 0) continue;
            if (!b[v]) throw Error(std::string("unbound variable ") + kVarNames[v]);
            for (int p = 0; p < e[v]; ++p) t = t * *b[v];
        }
        out = out + t;
    }
    return out;
}

MultivarPoly MultivarPoly::substitute_partial(
    const std::array<std::optional<GaussianRational>, kNumVars>& b) const {
    MultivarPoly out;
    for (const auto& [e, k] : terms_) {
        GaussianRational coeff = k;
        Expo rest = e;
        for (int v = 0; v < kNumVars; ++v) {
            if (e[v] == 0 || !b[v]) continue;
            for (int p = 0; p < e[v]; ++p) coeff = coeff * *b[v];
            rest[v] = 0;
        }
        out.add_term(rest, coeff);
    }
    return out;
}

std::string MultivarPoly::str() const {
    if (terms_.empty()) return "0";
    std::string out;
    // Descending grlex so the leading term comes first.
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
        const auto& [e, k] = *it;
        std::string coeff;
        bool negated = false;
        if (k.is_real() && k.re < 0) {
            coeff = GaussianRational(Rational(-k.re)).str();
            negated = true;
        } else if (k.is_real() || k.re == 0) {
            coeff = k.str();
        } else {
            coeff = "(" + k.str() + ")";  // mixed complex coefficient
        }
        std::string mono;
        for (int v = 0; v < kNumVars; ++v) {
            if (e[v] == 0) continue;
            if (!mono.empty()) mono += "*";
            mono += kVarNames[v];
            if (e[v] > 1) mono += "^" + std::to_string(e[v]);
        }
        std::string term;
        if (mono.empty()) term = coeff;
        else if (coeff == "1") term = mono;
        else term = coeff + "*" + mono;
        if (out.empty()) out = (negated ? "-" : "") + term;
        else out += (negated ? "-" : "+") + term;
    }
    return out;
}

RationalFunction::RationalFunction(MultivarPoly n, MultivarPoly d)
    : num_(std::move(n)), den_(std::move(d)) {
    if (den_.is_zero()) throw DivisionByZero();
    normalize();
}

void RationalFunction::normalize() {
    if (num_.is_zero()) {
        den_ = MultivarPoly(1);
        return;
    }
    MultivarPoly g = MultivarPoly::gcd(num_, den_);
    num_ = *num_.divide_exact(g);
    den_ = *den_.divide_exact(g);
    GaussianRational lc = den_.leading_coeff();
    if (!(lc == GaussianRational(1))) {
        MultivarPoly inv(lc.inverse());
        num_ = num_ * inv;
        den_ = den_ * inv;
    }
}

RationalFunction RationalFunction::reduced(MultivarPoly n, MultivarPoly d) {
    RationalFunction r;
    r.num_ = std::move(n);
    r.den_ = std::move(d);
    if (r.num_.is_zero()) {
        r.den_ = MultivarPoly(1);
        return r;
    }
    GaussianRational lc = r.den_.leading_coeff();
    if (!(lc == GaussianRational(1))) {
        MultivarPoly inv(lc.inverse());
        r.num_ = r.num_ * inv;
        r.den_ = r.den_ * inv;
    }
    return r;
}

namespace {

// a/b +- c/d with the shared denominator factor pulled out first.
RationalFunction add_sub(const RationalFunction& x, const RationalFunction& y, bool sub) {
    const MultivarPoly& b = x.den();
    const MultivarPoly& d = y.den();
    MultivarPoly g = MultivarPoly::gcd(b, d);
    if (g.is_constant()) {
        MultivarPoly n = sub ? x.num() * d - y.num() * b : x.num() * d + y.num() * b;
        return {std::move(n), b * d};
    }
    MultivarPoly bq = *b.divide_exact(g);
    MultivarPoly dq = *d.divide_exact(g);
    MultivarPoly n = sub ? x.num() * dq - y.num() * bq : x.num() * dq + y.num() * bq;
    return {std::move(n), b * dq};
}

}  // namespace

RationalFunction operator+(const RationalFunction& x, const RationalFunction& y) {
    return add_sub(x, y, false);
}

RationalFunction operator-(const RationalFunction& x, const RationalFunction& y) {
    return add_sub(x, y, true);
}

RationalFunction operator-(const RationalFunction& x) {
    RationalFunction r = x;
    r.num_ = -r.num_;
    return r;
}

RationalFunction operator*(const RationalFunction& x, const RationalFunction& y) {
    // Cross-cancel first; the product of the reduced parts is already in
    // lowest terms, so skip the full gcd.
    MultivarPoly g1 = MultivarPoly::gcd(x.num_, y.den_);
    MultivarPoly g2 = MultivarPoly::gcd(y.num_, x.den_);
    MultivarPoly n = *x.num_.divide_exact(g1) * *y.num_.divide_exact(g2);
    MultivarPoly d = *x.den_.divide_exact(g2) * *y.den_.divide_exact(g1);
    return RationalFunction::reduced(std::move(n), std::move(d));
}

RationalFunction RationalFunction::inverse() const {
    if (num_.is_zero()) throw DivisionByZero();
    return {den_, num_};
}

RationalFunction operator/(const RationalFunction& x, const RationalFunction& y) {
    return x * y.inverse();
}

GaussianRational RationalFunction::substitute(
    const std::array<std::optional<GaussianRational>, kNumVars>& b) const {
    GaussianRational d = den_.substitute(b);
    if (d.is_zero())
        throw DenominatorVanishes("denominator " + den_.str() + " vanishes under substitution");
    return num_.substitute(b) / d;
}

RationalFunction RationalFunction::substitute_partial(
    const std::array<std::optional<GaussianRational>, kNumVars>& b) const {
    MultivarPoly d = den_.substitute_partial(b);
    if (d.is_zero())
        throw DenominatorVanishes("denominator " + den_.str() + " vanishes under substitution");
    return {num_.substitute_partial(b), std::move(d)};
}

std::string RationalFunction::str() const {
    if (is_polynomial()) {
        std::string n = num_.str();
        return num_.terms().size() > 1 ? "(" + n + ")" : n;
    }
    return "(" + num_.str() + ")/(" + den_.str() + ")";
}

}  // namespace homlie
