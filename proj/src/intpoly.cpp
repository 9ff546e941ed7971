#include "hcov/intpoly.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace hcov {

void IntPoly::trim() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

IntPoly IntPoly::constant(BigInt c) {
    IntPoly p;
    p.c_.push_back(std::move(c));
    p.trim();
    return p;
}

IntPoly IntPoly::monomial(BigInt c, int k) {
    IntPoly p;
    if (c != 0) {
        p.c_.assign(k + 1, BigInt(0));
        p.c_[k] = std::move(c);
    }
    return p;
}

IntPoly IntPoly::from_desc(const std::vector<BigInt>& descending) {
    std::vector<BigInt> asc(descending.rbegin(), descending.rend());
    return IntPoly(std::move(asc));
}

BigInt IntPoly::coeff(int i) const {
    if (i < 0 || i >= static_cast<int>(c_.size())) return BigInt(0);
    return c_[i];
}

IntPoly IntPoly::operator-() const {
    IntPoly r = *this;
    for (auto& c : r.c_) c = -c;
    return r;
}

IntPoly operator+(const IntPoly& a, const IntPoly& b) {
    IntPoly r;
    r.c_.resize(std::max(a.c_.size(), b.c_.size()), BigInt(0));
    for (size_t i = 0; i < a.c_.size(); ++i) r.c_[i] = a.c_[i];
    for (size_t i = 0; i < b.c_.size(); ++i) r.c_[i] += b.c_[i];
    r.trim();
    return r;
}

IntPoly operator-(const IntPoly& a, const IntPoly& b) {
    IntPoly r;
    r.c_.resize(std::max(a.c_.size(), b.c_.size()), BigInt(0));
    for (size_t i = 0; i < a.c_.size(); ++i) r.c_[i] = a.c_[i];
    for (size_t i = 0; i < b.c_.size(); ++i) r.c_[i] -= b.c_[i];
    r.trim();
    return r;
}

IntPoly operator*(const IntPoly& a, const IntPoly& b) {
    if (a.is_zero() || b.is_zero()) return IntPoly();
    IntPoly r;
    r.c_.assign(a.c_.size() + b.c_.size() - 1, BigInt(0));
    for (size_t i = 0; i < a.c_.size(); ++i)
        for (size_t j = 0; j < b.c_.size(); ++j) r.c_[i + j] += a.c_[i] * b.c_[j];
    r.trim();
    return r;
}

IntPoly IntPoly::operator*(const BigInt& s) const {
    if (s == 0) return IntPoly();
    IntPoly r = *this;
    for (auto& c : r.c_) c *= s;
    return r;
}

IntPoly IntPoly::times_power(int k) const {
    if (is_zero()) return IntPoly();
    IntPoly r;
    r.c_.assign(c_.size() + k, BigInt(0));
    for (size_t i = 0; i < c_.size(); ++i) r.c_[i + k] = c_[i];
    return r;
}

IntPoly IntPoly::compose_square() const {
    if (is_zero()) return IntPoly();
    IntPoly r;
    r.c_.assign(2 * c_.size() - 1, BigInt(0));
    for (size_t i = 0; i < c_.size(); ++i) r.c_[2 * i] = c_[i];
    return r;
}

IntPoly IntPoly::derivative() const {
    IntPoly r;
    if (degree() < 1) return r;
    r.c_.resize(c_.size() - 1);
    for (size_t i = 1; i < c_.size(); ++i) r.c_[i - 1] = c_[i] * BigInt(static_cast<long>(i));
    r.trim();
    return r;
}

BigInt IntPoly::content() const {
    BigInt g(0);
    for (const auto& c : c_) {
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
        if (g == 1) break;
    }
    return g;
}

IntPoly IntPoly::primitive() const {
    BigInt g = content();
    if (g == 0 || g == 1) return *this;
    IntPoly r = *this;
    for (auto& c : r.c_) mpz_divexact(c.get_mpz_t(), c.get_mpz_t(), g.get_mpz_t());
    return r;
}

IntPoly IntPoly::normalized() const {
    IntPoly r = primitive();
    if (!r.is_zero() && r.leading() < 0)
        for (auto& c : r.c_) c = -c;
    return r;
}

IntPoly IntPoly::div_exact(const IntPoly& num, const IntPoly& den) {
    if (den.is_zero()) throw std::logic_error("polynomial division by zero");
    IntPoly rem = num;
    if (num.is_zero()) return IntPoly();
    int dq = num.degree() - den.degree();
    if (dq < 0) throw std::logic_error("inexact polynomial division");
    IntPoly quot;
    quot.c_.assign(dq + 1, BigInt(0));
    while (!rem.is_zero() && rem.degree() >= den.degree()) {
        int k = rem.degree() - den.degree();
        BigInt q;
        mpz_tdiv_q(q.get_mpz_t(), rem.leading().get_mpz_t(), den.leading().get_mpz_t());
        if (q * den.leading() != rem.leading())
            throw std::logic_error("inexact polynomial division");
        quot.c_[k] = q;
        rem = rem - den.times_power(k) * q;
    }
    if (!rem.is_zero()) throw std::logic_error("inexact polynomial division");
    quot.trim();
    return quot;
}

BigRat IntPoly::eval(const BigRat& t) const {
    BigRat acc(0);
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * t + BigRat(*it);
    return acc;
}

double IntPoly::eval_double(double t) const {
    double acc = 0.0;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * t + it->get_d();
    return acc;
}

int IntPoly::sign_at(const BigRat& t) const {
    BigRat v = eval(t);
    return sgn(v);
}

std::string IntPoly::to_string() const {
    std::ostringstream out;
    out << "poly";
    if (is_zero()) {
        out << " 0";
        return out.str();
    }
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) out << " " << *it;
    return out.str();
}

namespace {

// Pseudo remainder scaled so the result is a *positive* rational multiple of
// a mod b, then reduced to a primitive polynomial with the sign kept.
// Sturm chains require the sign structure to survive the scaling.
IntPoly signed_mod(IntPoly a, const IntPoly& b) {
    int db = b.degree();
    const BigInt& lb = b.leading();
    long iters = 0;
    while (!a.is_zero() && a.degree() >= db) {
        int k = a.degree() - db;
        BigInt la = a.leading();
        a = a * lb - b.times_power(k) * la;
        ++iters;
        // keep coefficients small; positive content division preserves sign
        a = a.primitive();
    }
    if (lb < 0 && (iters % 2) == 1)
        a = -a;
    return a;
}

}  // namespace

IntPoly poly_gcd(IntPoly a, IntPoly b) {
    a = a.normalized();
    b = b.normalized();
    if (a.is_zero()) return b;
    if (b.is_zero()) return a;
    if (a.degree() < b.degree()) std::swap(a, b);
    while (!b.is_zero()) {
        IntPoly r = signed_mod(a, b).primitive();
        a = std::move(b);
        b = std::move(r);
    }
    return a.normalized();
}

std::vector<std::pair<IntPoly, int>> squarefree_factors(const IntPoly& p) {
    std::vector<std::pair<IntPoly, int>> out;
    IntPoly f = p.normalized();
    if (f.degree() < 1) return out;
    IntPoly fp = f.derivative();
    IntPoly a0 = poly_gcd(f, fp);
    IntPoly b = IntPoly::div_exact(f, a0);
    IntPoly c = IntPoly::div_exact(fp, a0);
    IntPoly d = c - b.derivative();
    int i = 1;
    while (b.degree() > 0) {
        IntPoly ai = poly_gcd(b, d);
        if (ai.degree() > 0) out.emplace_back(ai, i);
        b = IntPoly::div_exact(b, ai);
        c = IntPoly::div_exact(d, ai);
        d = c - b.derivative();
        ++i;
    }
    return out;
}

namespace {

std::vector<IntPoly> sturm_chain(const IntPoly& squarefree) {
    std::vector<IntPoly> chain;
    chain.push_back(squarefree);
    IntPoly d = squarefree.derivative().primitive();
    if (d.is_zero()) return chain;
    chain.push_back(d);
    while (chain.back().degree() > 0) {
        IntPoly r = -signed_mod(chain[chain.size() - 2], chain.back());
        r = r.primitive();
        if (r.is_zero()) break;
        chain.push_back(std::move(r));
    }
    return chain;
}

int variations(const std::vector<IntPoly>& chain, const BigRat& t) {
    int count = 0, prev = 0;
    for (const auto& p : chain) {
        int s = p.sign_at(t);
        if (s == 0) continue;
        if (prev != 0 && s != prev) ++count;
        prev = s;
    }
    return count;
}

struct Isolator {
    const IntPoly& p;
    std::vector<IntPoly> chain;
    std::vector<BigRat> exact_roots;          // roots hit head-on
    std::vector<std::pair<BigRat, BigRat>> intervals;  // one simple root each

    explicit Isolator(const IntPoly& sf) : p(sf), chain(sturm_chain(sf)) {}

    void isolate(const BigRat& lo, const BigRat& hi, int vlo, int vhi) {
        int count = vlo - vhi;
        if (count <= 0) return;
        if (count == 1) {
            intervals.emplace_back(lo, hi);
            return;
        }
        BigRat mid = (lo + hi) / 2;
        if (p.sign_at(mid) == 0) {
            exact_roots.push_back(mid);
            // shrink a window around mid until it contains only that root
            BigRat delta = (hi - lo) / 4;
            while (true) {
                BigRat a = mid - delta, b = mid + delta;
                if (p.sign_at(a) != 0 && p.sign_at(b) != 0 &&
                    variations(chain, a) - variations(chain, b) == 1)
                    break;
                delta /= 2;
            }
            BigRat a = mid - delta, b = mid + delta;
            isolate(lo, a, vlo, variations(chain, a));
            isolate(b, hi, variations(chain, b), vhi);
        } else {
            int vm = variations(chain, mid);
            isolate(lo, mid, vlo, vm);
            isolate(mid, hi, vm, vhi);
        }
    }
};

double refine_bisect(const IntPoly& p, BigRat lo, BigRat hi) {
    // exactly one simple root inside; endpoint signs differ
    int slo = p.sign_at(lo);
    BigRat target(1, 100000000000L);  // 1e-11
    while (hi - lo > target) {
        BigRat mid = (lo + hi) / 2;
        int sm = p.sign_at(mid);
        if (sm == 0) return mid.get_d();
        if (sm == slo)
            lo = mid;
        else
            hi = mid;
    }
    return ((lo + hi) / 2).get_d();
}

}  // namespace

std::vector<PolyRoot> real_roots(const IntPoly& p) {
    if (p.is_zero()) throw std::invalid_argument("real_roots: zero polynomial");
    std::vector<PolyRoot> roots;

    // strip x^k
    int zero_mult = 0;
    while (p.coeff(zero_mult) == 0) ++zero_mult;
    IntPoly q = p;
    if (zero_mult > 0) {
        std::vector<BigInt> c(p.coeffs().begin() + zero_mult, p.coeffs().end());
        q = IntPoly(std::move(c));
        roots.push_back({0.0, zero_mult});
    }
    if (q.degree() >= 1) {
        for (const auto& [factor, mult] : squarefree_factors(q)) {
            if (factor.degree() == 1) {
                BigRat r(-factor.coeff(0), factor.coeff(1));
                r.canonicalize();
                roots.push_back({r.get_d(), mult});
                continue;
            }
            // Cauchy bound: all roots lie strictly inside [-B, B]
            BigRat maxabs(0);
            for (int i = 0; i < factor.degree(); ++i) {
                BigRat a(abs(factor.coeff(i)), abs(factor.leading()));
                a.canonicalize();
                if (a > maxabs) maxabs = a;
            }
            BigRat bound = maxabs + 1;
            Isolator iso(factor);
            iso.isolate(-bound, bound, variations(iso.chain, -bound),
                        variations(iso.chain, bound));
            for (const auto& r : iso.exact_roots) roots.push_back({r.get_d(), mult});
            for (const auto& [lo, hi] : iso.intervals)
                roots.push_back({refine_bisect(factor, lo, hi), mult});
        }
    }
    std::sort(roots.begin(), roots.end(),
              [](const PolyRoot& a, const PolyRoot& b) { return a.value > b.value; });
    return roots;
}

}  // namespace hcov
