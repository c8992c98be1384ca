#include "compstat/catalog.hpp"

#include <stdexcept>
#include <utility>

#include "compstat/engine.hpp"

namespace compstat {

std::string_view quantity_name(Quantity q) {
    switch (q) {
        case Quantity::Count: return "count";
        case Quantity::Total: return "total";
        case Quantity::SecondMoment: return "second-moment";
    }
    return "?";
}

std::string CatalogQuery::describe() const {
    std::string out = std::string(class_name(cls)) + " A=" + set.spec() + " ";
    if (quantity == Quantity::Count) out += "count";
    else out += std::string(quantity_name(quantity)) + "(" + std::string(statistic_name(stat)) + ")";
    if (parts) out += " m=" + std::to_string(*parts);
    if (!extra.empty()) out += " at " + extra.to_string();
    return out;
}

BigInt exact_div(const BigInt& q, const BigInt& d) {
    BigInt quotient, remainder;
    boost::multiprecision::divide_qr(q, d, quotient, remainder);
    if (!remainder.is_zero())
        throw std::domain_error(q.str() + " is not divisible by " + d.str());
    return quotient;
}

namespace {

using R = RationalGF;
using Ints = std::vector<int>;
using CC = CompositionClass;

R X(int k) { return R::x_pow(k); }
R one() { return R(1); }

template <class F>
R sum_over(const Ints& a, F f) {
    R acc(0);
    for (int v : a) acc = acc + f(v);
    return acc;
}

template <class F>
IntPoly prod_over(const Ints& a, F f) {
    IntPoly acc(1);
    for (int v : a) acc = acc * f(v);
    return acc;
}

IntPoly xp(int k) { return IntPoly::x_pow(k); }

std::string set_label(const Ints& a) {
    std::string s = "A={";
    for (std::size_t i = 0; i < a.size(); ++i) s += (i ? "," : "") + std::to_string(a[i]);
    return s + "}";
}

BigInt pow2(int e) { return BigInt(1) << e; }
int sign(int e) { return e % 2 == 0 ? 1 : -1; }

BigInt binom(int n, int k) {
    if (k < 0 || k > n) return 0;
    BigInt r = 1;
    for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
    return r;
}

BigInt fib(int n) {
    BigInt a = 0, b = 1;
    for (int i = 0; i < n; ++i) {
        BigInt t = a + b;
        a = b;
        b = t;
    }
    return a;
}

// ---- query shorthands -----------------------------------------------------

CatalogQuery count_q(CC cls, PartSet set, std::optional<int> m = {}, Substitution extra = {}) {
    return {cls, std::move(set), Quantity::Count, Statistic::Rises, m, std::move(extra)};
}

CatalogQuery total_q(CC cls, PartSet set, Statistic stat, std::optional<int> m = {}) {
    return {cls, std::move(set), Quantity::Total, stat, m, {}};
}

CatalogInstance fixed(std::string label, CatalogQuery q, R r) {
    return {std::move(label), std::move(q), [r = std::move(r)](int) { return r; }, std::nullopt};
}

CatalogInstance truncating(std::string label, CatalogQuery q, std::function<R(int)> make) {
    return {std::move(label), std::move(q), std::move(make), std::nullopt};
}

CatalogInstance counted(std::string label, CatalogQuery q, int n_min, std::function<BigInt(int)> f) {
    return {std::move(label), std::move(q), nullptr, CountFormula{n_min, std::move(f)}};
}

PartSet fin(const Ints& a) { return PartSet::explicit_set(a); }

const std::vector<Ints> kGeneralSets = {{1, 2}, {1, 2, 5}, {2, 3, 7}, {1, 3, 4}};
const std::vector<std::pair<int, int>> kPairs = {{1, 2}, {2, 3}, {2, 5}, {1, 3}};
const Ints kOneK = {2, 3, 4};

std::string pair_label(int a, int b) { return "a=" + std::to_string(a) + ",b=" + std::to_string(b); }
std::string k_label(int k) { return "k=" + std::to_string(k); }
std::string m_label(int m) { return "m=" + std::to_string(m); }

// ---- building blocks -------------------------------------------------------

R sum_x(const Ints& a, int scale = 1) {
    return sum_over(a, [scale](int v) { return X(scale * v); });
}

// sum_{j>i} x^{a_i + a_j}
R pair_sum(const Ints& a) {
    R acc(0);
    for (std::size_t j = 0; j < a.size(); ++j)
        for (std::size_t i = 0; i < j; ++i) acc = acc + X(a[i] + a[j]);
    return acc;
}

// Per-m coefficient of y^m in  F * sum_{m'>=0} (m'+1) s^{m'} y^{m'+2}.
R y_slice(const R& f, const R& s, int m) {
    if (m < 2) return R(0);
    return f * R(m - 1) * s.pow(m - 2);
}

// Sums over all j <= order of x^j/(1+x^j), kept over the common denominator
// D = prod_j (1+x^j): returns D and the numerators n_j = x^j D/(1+x^j).
struct CarlitzNaturals {
    IntPoly d{1};
    std::vector<IntPoly> numerators;

    explicit CarlitzNaturals(int order) {
        for (int j = 1; j <= order; ++j) d = d * (IntPoly(1) + xp(j));
        for (int j = 1; j <= order; ++j) {
            IntPoly n = xp(j);
            for (int i = 1; i <= order; ++i)
                if (i != j) n = n * (IntPoly(1) + xp(i));
            numerators.push_back(std::move(n));
        }
    }
    IntPoly numerator_sum() const {
        IntPoly s;
        for (const auto& n : numerators) s = s + n;
        return s;
    }
};

// ---- compositions ------------------------------------------------------------

void add_compositions(std::vector<CatalogEntry>& out) {
    const PartSet nat = PartSet::naturals();
    const R comp_n = X(1) / (one() - X(1));  // sum_{j>=1} x^j

    {
        CatalogEntry e{"compositions.count.m", "\\frac{x^m}{(1-x)^m}", {}, false, {}};
        for (int m = 1; m <= 5; ++m)
            e.instances.push_back(fixed(m_label(m), count_q(CC::Compositions, nat, m), comp_n.pow(m)));
        out.push_back(std::move(e));
    }
    {
        CatalogEntry e{"compositions.count.general", "\\dfrac{1}{1-\\sum_{j=1}^kx^{a_j}}", {}, false, {}};
        for (const Ints& a : kGeneralSets)
            e.instances.push_back(fixed(set_label(a), count_q(CC::Compositions, fin(a)), one() / (one() - sum_x(a))));
        out.push_back(std::move(e));
    }
    out.push_back({"compositions.count.N", "\\frac{1-x}{1-2x}",
                   {fixed("", count_q(CC::Compositions, nat), R(IntPoly({1, -1}), IntPoly({1, -2})))}, false, {}});
    out.push_back({"compositions.count.N.closed", "2^{n-1}",
                   {counted("", count_q(CC::Compositions, nat), 1, [](int n) -> BigInt { return pow2(n - 1); })}, false, {}});

    for (Statistic st : {Statistic::Rises, Statistic::Drops}) {
        const std::string name(statistic_name(st));
        CatalogEntry e{"compositions." + name + ".general", "\\sum_{k\\geq j>i\\geq 1} x^{a_i+a_j}", {}, false, {}};
        for (const Ints& a : kGeneralSets) {
            const R s = sum_x(a);
            e.instances.push_back(fixed(set_label(a), total_q(CC::Compositions, fin(a), st),
                                        pair_sum(a) / (one() - s).pow(2)));
            for (int m = 2; m <= 4; ++m)
                e.instances.push_back(fixed(set_label(a) + " " + m_label(m), total_q(CC::Compositions, fin(a), st, m),
                                            y_slice(pair_sum(a), s, m)));
        }
        out.push_back(std::move(e));
    }
    {
        CatalogEntry e{"compositions.rises.N.m", "\\frac{(m-1)x^{m+1}}{(1+x)(1-x)^{m}}", {}, false, {}};
        for (int m = 2; m <= 6; ++m)
            e.instances.push_back(fixed(m_label(m), total_q(CC::Compositions, nat, Statistic::Rises, m),
                                        R(IntPoly::x_pow(m + 1, m - 1), IntPoly({1, 1}) * IntPoly({1, -1}).pow(m))));
        out.push_back(std::move(e));
    }
    for (Statistic st : {Statistic::Rises, Statistic::Drops}) {
        out.push_back({"compositions." + std::string(statistic_name(st)) + ".N", "\\frac{x^3}{(1+x)(1-2x)^2}",
                       {fixed("", total_q(CC::Compositions, nat, st),
                              R(xp(3), IntPoly({1, 1}) * IntPoly({1, -2}).pow(2)))},
                       false, {}});
    }
    out.push_back({"compositions.rises.N.closed", "2^{n-2}(3n-5)+(-1)^{n+1}",
                   {counted("", total_q(CC::Compositions, nat, Statistic::Rises), 3,
                            [](int n) -> BigInt { return exact_div(pow2(n - 2) * (3 * n - 5) + sign(n + 1), 9); })},
                   false, {}});
    {
        CatalogEntry e{"compositions.rises.1k", "\\frac{x^{k+1}}{(1-x-x^k)^2}", {}, false, {}};
        for (int k : {2, 3, 4, 5})
            e.instances.push_back(fixed(k_label(k), total_q(CC::Compositions, fin({1, k}), Statistic::Rises),
                                        X(k + 1) / (one() - X(1) - X(k)).pow(2)));
        out.push_back(std::move(e));
    }
    // The odd-parts display repeats the {1,k} form with a free k; it is
    // instantiated at k = 2 and expected to disagree.
    out.push_back({"compositions.rises.odd", "\\frac{x^{k+1}}{(1-x-x^k)^2}",
                   {fixed("k=2", total_q(CC::Compositions, PartSet::odds(), Statistic::Rises),
                          X(3) / (one() - X(1) - X(2)).pow(2))},
                   true,
                   "odd-parts rises shown with the {1,k} form and an unbound k; true series is "
                   "x^4/((1+x^2)(1-x-x^2)^2)"});
    {
        CatalogEntry e{"compositions.rises.N-k", "\\frac{x^{k+1}(1-x^{k-1})+x^{2k+1}}{1-x}", {}, false, {}};
        for (int k = 1; k <= 4; ++k) {
            const R f = X(3) / ((one() - X(1)) * (one() - X(2))) -
                        (X(k + 1) * (one() - X(k - 1)) + X(2 * k + 1)) / (one() - X(1));
            const R s = comp_n - X(k);
            const PartSet set = PartSet::naturals_without(k);
            e.instances.push_back(fixed(k_label(k), total_q(CC::Compositions, set, Statistic::Rises),
                                        f / (one() - s).pow(2)));
            for (int m = 2; m <= 4; ++m)
                e.instances.push_back(fixed(k_label(k) + " " + m_label(m),
                                            total_q(CC::Compositions, set, Statistic::Rises, m), y_slice(f, s, m)));
        }
        out.push_back(std::move(e));
    }
    {
        CatalogEntry e{"compositions.rises.N-1.m", "(m-1)\\frac{x^{2m+1}}{(1+x)(1-x)^m}", {}, false, {}};
        for (int m = 2; m <= 5; ++m)
            e.instances.push_back(fixed(m_label(m),
                                        total_q(CC::Compositions, PartSet::naturals_without(1), Statistic::Rises, m),
                                        R(IntPoly::x_pow(2 * m + 1, m - 1), IntPoly({1, 1}) * IntPoly({1, -1}).pow(m))));
        out.push_back(std::move(e));
    }
    {
        CatalogEntry e{"compositions.rises.N-1.m.binomial",
                       "\\sum_{n\\geq0}x^{n+2m-1}(m-1)\\sum_{j=0}^n(-1)^{n-j}\\binom{j+m-1}{m-1}",
                       {},
                       true,
                       "binomial expansion is offset by x^2 from its own rational form; the exponent "
                       "should read n+2m+1"};
        for (int m = 2; m <= 5; ++m) {
            e.instances.push_back(counted(
                m_label(m), total_q(CC::Compositions, PartSet::naturals_without(1), Statistic::Rises, m), 0,
                [m](int degree) -> BigInt {
                    const int n = degree - 2 * m + 1;
                    BigInt acc = 0;
                    for (int j = 0; j <= n; ++j) acc += sign(n - j) * binom(j + m - 1, m - 1);
                    return acc * (m - 1);
                }));
        }
        out.push_back(std::move(e));
    }

    // levels
    {
        CatalogEntry e{"compositions.levels.general", "\\sum_{j=1}^k x^{2a_j}", {}, false, {}};
        for (const Ints& a : kGeneralSets) {
            const R s = sum_x(a);
            const R f = sum_x(a, 2);
            e.instances.push_back(fixed(set_label(a), total_q(CC::Compositions, fin(a), Statistic::Levels),
                                        f / (one() - s).pow(2)));
            for (int m = 2; m <= 4; ++m)
                e.instances.push_back(fixed(set_label(a) + " " + m_label(m),
                                            total_q(CC::Compositions, fin(a), Statistic::Levels, m), y_slice(f, s, m)));
        }
        out.push_back(std::move(e));
    }
    {
        CatalogEntry e{"compositions.levels.N.m", "\\frac{(m-1)x^{m}}{(1+x)(1-x)^{m-1}}", {}, false, {}};
        for (int m = 2; m <= 6; ++m)
            e.instances.push_back(fixed(m_label(m), total_q(CC::Compositions, nat, Statistic::Levels, m),
                                        R(IntPoly::x_pow(m, m - 1), IntPoly({1, 1}) * IntPoly({1, -1}).pow(m - 1))));
        out.push_back(std::move(e));
    }
    out.push_back({"compositions.levels.N", "\\frac{x^2(1-x)}{(1+x)(1-2x)^2}",
                   {fixed("", total_q(CC::Compositions, nat, Statistic::Levels),
                          R(xp(2) * IntPoly({1, -1}), IntPoly({1, 1}) * IntPoly({1, -2}).pow(2)))},
                   false, {}});
    // (2^{n-2}(3n+1) + 2(-1)^n)/9 scaled by 4 so that n = 1 stays integral.
    out.push_back({"compositions.levels.N.closed", "2^{n-2}(3n+1)+2(-1)^{n}",
                   {counted("", total_q(CC::Compositions, nat, Statistic::Levels), 1,
                            [](int n) -> BigInt { return exact_div(pow2(n) * (3 * n + 1) + 8 * sign(n), 36); })},
                   false, {}});
    out.push_back({"compositions.levels.12", "\\frac{x^2+x^4}{(1-(x+x^2))^2}",
                   {fixed("", total_q(CC::Compositions, fin({1, 2}), Statistic::Levels),
                          (X(2) + X(4)) / (one() - (X(1) + X(2))).pow(2))},
                   false, {}});
    {
        CatalogEntry e{"compositions.levels.1k",
                       "\\frac{x^2+x^{2k}}{(1-(x^k+x^{2k}))^2}",
                       {},
                       true,
                       "disagrees with the general levels form for every k; that form gives "
                       "(x^2+x^{2k})/(1-x-x^k)^2"};
        for (int k : kOneK)
            e.instances.push_back(fixed(k_label(k), total_q(CC::Compositions, fin({1, k}), Statistic::Levels),
                                        (X(2) + X(2 * k)) / (one() - (X(k) + X(2 * k))).pow(2)));
        out.push_back(std::move(e));
    }
    out.push_back({"compositions.levels.odd", "\\frac{x^2(1-x^2)}{(1+x^2)(1-x-x^2)^2}",
                   {fixed("", total_q(CC::Compositions, PartSet::odds(), Statistic::Levels),
                          R(xp(2) * IntPoly({1, 0, -1}), IntPoly({1, 0, 1}) * IntPoly({1, -1, -1}).pow(2)))},
                   false, {}});
    {
        CatalogEntry e{"compositions.levels.N-k.series", "\\left(\\frac{x^2}{1-x^2}-x^{2k}\\right)", {}, false, {}};
        for (int k = 1; k <= 4; ++k) {
            const R f = X(2) / (one() - X(2)) - X(2 * k);
            const R s = comp_n - X(k);
            const PartSet set = PartSet::naturals_without(k);
            e.instances.push_back(fixed(k_label(k), total_q(CC::Compositions, set, Statistic::Levels),
                                        f / (one() - s).pow(2)));
            for (int m = 2; m <= 4; ++m)
                e.instances.push_back(fixed(k_label(k) + " " + m_label(m),
                                            total_q(CC::Compositions, set, Statistic::Levels, m), y_slice(f, s, m)));
        }
        out.push_back(std::move(e));
    }
    {
        CatalogEntry e{"compositions.levels.N-k",
                       "\\frac{(1-x)x^2(1-x^{2(k-1)}+x^{2k})}{(1+x)(1-2x+x^k-x^{k+1})^2}", {}, false, {}};
        for (int k = 1; k <= 4; ++k)
            e.instances.push_back(fixed(
                k_label(k), total_q(CC::Compositions, PartSet::naturals_without(k), Statistic::Levels),
                R(IntPoly({1, -1}) * xp(2) * (IntPoly(1) - xp(2 * (k - 1)) + xp(2 * k)),
                  IntPoly({1, 1}) * (IntPoly({1, -2}) + xp(k) - xp(k + 1)).pow(2))));
        out.push_back(std::move(e));
    }

    {
        CatalogEntry e{"compositions.moment.fibonacci", "\\frac{2x^6}{(1-x-x^2)^3}", {}, false, {}};
        for (Statistic st : {Statistic::Drops, Statistic::Rises})
            e.instances.push_back(fixed(std::string(statistic_name(st)),
                                        {CC::Compositions, fin({1, 2}), Quantity::SecondMoment, st, {}, {}},
                                        R(IntPoly::x_pow(6, 2), IntPoly({1, -1, -1}).pow(3))));
        out.push_back(std::move(e));
    }
    out.push_back({"compositions.moment.fibonacci.convolution", "2x^3\\sum_{n\\geq3}\\left(\\sum_{a+b+c=n}F_aF_bF_c\\right)x^n",
                   {counted("", {CC::Compositions, fin({1, 2}), Quantity::SecondMoment, Statistic::Drops, {}, {}}, 0,
                            [](int degree) -> BigInt {
                                const int n = degree - 3;
                                BigInt acc = 0;
                                for (int a = 1; a <= n; ++a)
                                    for (int b = 1; a + b < n; ++b) acc += fib(a) * fib(b) * fib(n - a - b);
                                return 2 * acc;
                            })},
                   false, {}});
}

// ---- palindromes -------------------------------------------------------------

void add_palindromes(std::vector<CatalogEntry>& out) {
    const PartSet nat = PartSet::naturals();
    const CC P = CC::Palindromes;

    {
        CatalogEntry e{"palindromes.count.general",
                       "\\frac{1+\\sum_{i=1}^kx^{a_i}}{1-\\sum_{i=1}^k x^{2a_i}}", {}, false, {}};
        for (const Ints& a : kGeneralSets)
            e.instances.push_back(fixed(set_label(a), count_q(P, fin(a)), (one() + sum_x(a)) / (one() - sum_x(a, 2))));
        out.push_back(std::move(e));
    }
    out.push_back({"palindromes.count.N", "\\frac{1+x}{1-2x^2}",
                   {fixed("", count_q(P, nat), R(IntPoly({1, 1}), IntPoly({1, 0, -2})))}, false, {}});
    out.push_back({"palindromes.count.N.closed", "2^{\\lfloor n/2 \\rfloor}",
                   {counted("", count_q(P, nat), 0, [](int n) -> BigInt { return pow2(n / 2); })}, false, {}});

    {
        CatalogEntry e{"palindromes.rises.general",
                       "\\left(\\sum_{i=1}^kx^{2a_i}(1-x^{2a_i}y^2)\\right)", {}, false, {}};
        for (const Ints& a : kGeneralSets) {
            const R s1 = sum_x(a);
            const R s2 = sum_x(a, 2);
            const R g = ((one() + s1) * sum_over(a, [](int v) { return X(2 * v) * (one() - X(2 * v)); }) -
                         (one() - s2) * sum_over(a, [](int v) { return X(2 * v) * (one() + X(v)); })) /
                        (one() - s2).pow(2);
            for (Statistic st : {Statistic::Rises, Statistic::Drops})
                e.instances.push_back(fixed(set_label(a) + " " + std::string(statistic_name(st)),
                                            total_q(P, fin(a), st), g));
        }
        out.push_back(std::move(e));
    }
    out.push_back({"palindromes.rises.N", "\\frac{x^4(4x^4+4x^3+4x^2+3x+1)}{(1+x^2)(1+x+x^2)(1-2x^2)^2}",
                   {fixed("", total_q(P, nat, Statistic::Rises),
                          R(xp(4) * IntPoly({1, 3, 4, 4, 4}),
                            IntPoly({1, 0, 1}) * IntPoly({1, 1, 1}) * IntPoly({1, 0, -2}).pow(2)))},
                   false, {}});
    {
        CatalogEntry e{"palindromes.rises.N.even-m", "\\frac{(2m'-2)x^{2m'+2}}{(1+x^2)(1-x^2)^{m'}}", {}, false, {}};
        for (int mp = 1; mp <= 3; ++mp)
            e.instances.push_back(fixed(m_label(2 * mp), total_q(P, nat, Statistic::Rises, 2 * mp),
                                        R(IntPoly::x_pow(2 * mp + 2, 2 * mp - 2),
                                          IntPoly({1, 0, 1}) * IntPoly({1, 0, -1}).pow(mp))));
        out.push_back(std::move(e));
    }
    {
        CatalogEntry e{"palindromes.rises.N.odd-m",
                       "\\frac{x^{2m'}(1-x)(1+(2m'-2)x+(2m'-3)x^2+(2m'-2)x^3)}{(1+x^2)(1+x+x^2)(1-x^2)^{m'}}",
                       {},
                       true,
                       "nonzero already for m=1, where no composition has a rise; the y^{2m'+3} "
                       "expansion it is read from does not support it"};
        for (int mp = 1; mp <= 3; ++mp)
            e.instances.push_back(fixed(m_label(2 * mp - 1), total_q(P, nat, Statistic::Rises, 2 * mp - 1),
                                        R(xp(2 * mp) * IntPoly({1, -1}) * IntPoly({1, 2 * mp - 2, 2 * mp - 3, 2 * mp - 2}),
                                          IntPoly({1, 0, 1}) * IntPoly({1, 1, 1}) * IntPoly({1, 0, -1}).pow(mp))));
        out.push_back(std::move(e));
    }
    {
        CatalogEntry e{"palindromes.rises.1k",
                       "\\frac{x^{k+1}(x-x^3+x^k-x^{3k}+2x^{k+1}+x^{k+2}+x^{2k+1})}{(1-x^2-x^{2k})^2}", {}, false, {}};
        for (int k : kOneK)
            e.instances.push_back(fixed(
                k_label(k), total_q(P, fin({1, k}), Statistic::Rises),
                R(xp(k + 1) * (xp(1) - xp(3) + xp(k) - xp(3 * k) + IntPoly::x_pow(k + 1, 2) + xp(k + 2) + xp(2 * k + 1)),
                  (IntPoly(1) - xp(2) - xp(2 * k)).pow(2))));
        out.push_back(std::move(e));
    }
    out.push_back({"palindromes.rises.odd",
                   "\\frac{x^5(1+2x^2+2x^3+2x^4+2x^5+3x^6+2x^7+2x^8)}{(1+x^4)(1-x^2-x^4)^2(1+x^2+x^4)}",
                   {fixed("", total_q(P, PartSet::odds(), Statistic::Rises),
                          R(xp(5) * IntPoly({1, 0, 2, 2, 2, 2, 3, 2, 2}),
                            IntPoly({1, 0, 0, 0, 1}) * IntPoly({1, 0, -1, 0, -1}).pow(2) * IntPoly({1, 0, 1, 0, 1})))},
                   false, {}});
    {
        CatalogEntry e{"palindromes.rises.N-k",
                       "\\frac{x^4(1+3x+4x^2+4x^3+4x^4)+x^{2k+1}(x^4-1)(1+4x+5x^2+4x^3)}"
                       "{(1+x^2)(1+x+x^2)(1-2x^2+x^{2k}-x^{2(k+1)})^2}",
                       {},
                       true,
                       "disagrees for every k tried, first at x^{4k+2}; the explicit k=1 form agrees"};
        for (int k = 1; k <= 4; ++k) {
            const IntPoly d = IntPoly({1, 0, -2}) + xp(2 * k) - xp(2 * (k + 1));
            const R first(xp(4) * IntPoly({1, 3, 4, 4, 4}) + xp(2 * k + 1) * IntPoly({-1, 0, 0, 0, 1}) * IntPoly({1, 4, 5, 4}),
                          IntPoly({1, 0, 1}) * IntPoly({1, 1, 1}) * d.pow(2));
            const R second(IntPoly({-1, 0, 1}) * (xp(k + 2) + xp(3 * k) * IntPoly({1, 0, 1}) * IntPoly({-2, 0, 3}) +
                                                  xp(4 * k) * IntPoly({1, 1}) * IntPoly({-2, 1})),
                           IntPoly({1, 0, 1}) * d.pow(2));
            e.instances.push_back(fixed(k_label(k), total_q(P, PartSet::naturals_without(k), Statistic::Rises),
                                        first + second));
        }
        out.push_back(std::move(e));
    }
    out.push_back({"palindromes.rises.N-1",
                   "\\frac{(x^5+3x^4+5x^3+3x^2+3x+1)x^7}{(1-x^2-x^4)^2(1+x+x^2)(1+x^2)}",
                   {fixed("", total_q(P, PartSet::naturals_without(1), Statistic::Rises),
                          R(IntPoly({1, 3, 3, 5, 3, 1}) * xp(7),
                            IntPoly({1, 0, -1, 0, -1}).pow(2) * IntPoly({1, 1, 1}) * IntPoly({1, 0, 1})))},
                   false, {}});

    {
        CatalogEntry e{"palindromes.levels.general", "\\sum_{i=1}^kx^{2a_i}(1+2x^{a_i}y)", {}, false, {}};
        for (const Ints& a : kGeneralSets) {
            const R s1 = sum_x(a);
            const R s2 = sum_x(a, 2);
            e.instances.push_back(fixed(
                set_label(a), total_q(P, fin(a), Statistic::Levels),
                ((one() - s2) * sum_over(a, [](int v) { return X(2 * v) * (one() + R(2) * X(v)); }) +
                 R(2) * (one() + s1) * sum_x(a, 4)) /
                    (one() - s2).pow(2)));
        }
        out.push_back(std::move(e));
    }
    out.push_back({"palindromes.levels.N",
                   "\\frac{x^2(1+3x+4x^2+x^3-x^4-4x^5-6x^6)}{(1+x^2)(1+x+x^2)(1-2x^2)^2}",
                   {fixed("", total_q(P, nat, Statistic::Levels),
                          R(xp(2) * IntPoly({1, 3, 4, 1, -1, -4, -6}),
                            IntPoly({1, 0, 1}) * IntPoly({1, 1, 1}) * IntPoly({1, 0, -2}).pow(2)))},
                   false, {}});
    {
        CatalogEntry e{"palindromes.levels.N.m", "l_m(x)", {}, false, {}};
        for (int m = 2; m <= 7; ++m) {
            R form;
            if (m == 2) {
                form = X(2) / (one() - X(2));
            } else if (m % 2 == 0) {
                const int mp = m / 2;
                form = R(IntPoly({2 * mp - 1, 0, -(2 * mp - 3)}) * xp(2 * mp),
                         IntPoly({1, 0, 1}) * IntPoly({1, 0, -1}).pow(mp));
            } else {
                const int mp = (m - 1) / 2;
                form = R(IntPoly({2, 2}) * IntPoly({mp, mp - 1, mp}) * xp(2 * mp + 1),
                         IntPoly({1, 0, 1}) * IntPoly({1, 1, 1}) * IntPoly({1, 0, -1}).pow(mp));
            }
            e.instances.push_back(fixed(m_label(m), total_q(P, nat, Statistic::Levels, m), form));
        }
        out.push_back(std::move(e));
    }
    {
        CatalogEntry e{"palindromes.levels.1k",
                       "\\frac{x^2+x^{2k}+x^3+x^{3k}+x^4+x^{4k}+2(x^{k+4}-x^{2(k+1)}-x^{2k+3}-x^{3k+2}+x^{4k+1})}"
                       "{(1-y^2x^2-y^2x^{2k})^2}",
                       {},
                       true,
                       "y left in the denominator; read at y=1, and the numerator still disagrees "
                       "with the general palindromic levels form"};
        for (int k : kOneK)
            e.instances.push_back(fixed(
                k_label(k), total_q(P, fin({1, k}), Statistic::Levels),
                R(xp(2) + xp(2 * k) + xp(3) + xp(3 * k) + xp(4) + xp(4 * k) +
                      IntPoly(2) * (xp(k + 4) - xp(2 * (k + 1)) - xp(2 * k + 3) - xp(3 * k + 2) + xp(4 * k + 1)),
                  (IntPoly(1) - xp(2) - xp(2 * k)).pow(2))));
        out.push_back(std::move(e));
    }
    out.push_back({"palindromes.levels.odd",
                   "\\frac{x^2(1+2x+2x^2+2x^3+2x^4+2x^5-2x^6+2x^7-4x^8-2x^9-4x^{10}-2x^{11}-x^{12})}"
                   "{(1+x^4)(1-x^2-x^4)^2(1+x^2+x^4)}",
                   {fixed("", total_q(P, PartSet::odds(), Statistic::Levels),
                          R(xp(2) * IntPoly({1, 2, 2, 2, 2, 2, -2, 2, -4, -2, -4, -2, -1}),
                            IntPoly({1, 0, 0, 0, 1}) * IntPoly({1, 0, -1, 0, -1}).pow(2) * IntPoly({1, 0, 1, 0, 1})))},
                   false, {}});
    {
        CatalogEntry e{"palindromes.levels.N-k",
                       "\\frac{x^2(1+3x+4x^2+x^3-x^4-4x^5-6x^6)+x^{2k}(x^4-1)(1+x-2x^2-5x^3-5x^4)}"
                       "{(1+x^2)(1+x+x^2)(1-2x^2+x^{2k}-x^{2(k+1)})^2}",
                       {}, false, {}};
        for (int k = 1; k <= 4; ++k) {
            const IntPoly d = IntPoly({1, 0, -2}) + xp(2 * k) - xp(2 * (k + 1));
            const R first(xp(2) * IntPoly({1, 3, 4, 1, -1, -4, -6}) +
                              xp(2 * k) * IntPoly({-1, 0, 0, 0, 1}) * IntPoly({1, 1, -2, -5, -5}),
                          IntPoly({1, 0, 1}) * IntPoly({1, 1, 1}) * d.pow(2));
            const R second(IntPoly({-1, 0, 1}) * (IntPoly::x_pow(k + 4, 2) +
                                                  IntPoly::x_pow(3 * k, 2) * IntPoly({1, 0, 1}) * IntPoly({1, 0, -2}) +
                                                  xp(4 * k) * IntPoly({1, 1}) * IntPoly({3, -1}) * IntPoly({1, 0, 1})),
                           IntPoly({1, 0, 1}) * d.pow(2));
            e.instances.push_back(fixed(k_label(k), total_q(P, PartSet::naturals_without(k), Statistic::Levels),
                                        first + second));
        }
        out.push_back(std::move(e));
    }
    out.push_back({"palindromes.levels.N-1",
                   "\\frac{(1+x+3x^2+2x^3-5x^6-3x^7-x^8)x^4}{(1-x^2-x^4)^2(1+x^2)(1+x+x^2)}",
                   {fixed("", total_q(P, PartSet::naturals_without(1), Statistic::Levels),
                          R(IntPoly({1, 1, 3, 2, 0, 0, -5, -3, -1}) * xp(4),
                            IntPoly({1, 0, -1, 0, -1}).pow(2) * IntPoly({1, 0, 1}) * IntPoly({1, 1, 1})))},
                   false, {}});
}

// ---- Carlitz -----------------------------------------------------------------

// Count and rise forms over {a,b}, split by number of parts.
R carlitz_ab_count_slice(int a, int b, int m) {
    if (m == 0) return one();
    const int mp = m / 2;
    if (m % 2 == 0) return R(IntPoly::x_pow(mp * (a + b), 2));
    return (X(a) + X(b)) * X(mp * (a + b));
}

R carlitz_ab_rises_slice(int a, int b, int m) {
    const int mp = m / 2;
    if (mp == 0) return R(0);
    if (m % 2 == 0) return R(IntPoly::x_pow(mp * (a + b), 2 * mp - 1));
    return R(mp) * (X(a) + X(b)) * X(mp * (a + b));
}

void add_carlitz(std::vector<CatalogEntry>& out) {
    const CC E = CC::Carlitz;
    {
        CatalogEntry e{"carlitz.count.general", "\\dfrac{1}{1-\\sum_{j=1}^k\\dfrac{x^{a_j}y}{1+x^{a_j}y}}", {}, false, {}};
        for (const Ints& a : kGeneralSets)
            e.instances.push_back(fixed(set_label(a), count_q(E, fin(a)),
                                        one() / (one() - sum_over(a, [](int v) { return X(v) / (one() + X(v)); }))));
        e.instances.push_back(truncating("A=N", count_q(E, PartSet::naturals()), [](int order) {
            const CarlitzNaturals c(order);
            return R(c.d, c.d - c.numerator_sum());
        }));
        out.push_back(std::move(e));
    }
    {
        CatalogEntry e{"carlitz.count.ab", "\\frac{(1+x^a)(1+x^b)}{1-x^{a+b}}", {}, false, {}};
        for (auto [a, b] : kPairs)
            e.instances.push_back(fixed(pair_label(a, b), count_q(E, fin({a, b})),
                                        (one() + X(a)) * (one() + X(b)) / (one() - X(a + b))));
        out.push_back(std::move(e));
    }
    {
        CatalogEntry e{"carlitz.count.ab.m", "x^{m(a+b)}(2y^{2m}+(x^a+x^b)y^{2m+1})", {}, false, {}};
        for (auto [a, b] : kPairs)
            for (int m = 1; m <= 6; ++m)
                e.instances.push_back(fixed(pair_label(a, b) + " " + m_label(m), count_q(E, fin({a, b}), m),
                                            carlitz_ab_count_slice(a, b, m)));
        out.push_back(std::move(e));
    }
    {
        CatalogEntry e{"carlitz.count.ab.closed", "2 if $n=n'(a+b)$", {}, false, {}};
        for (auto [a, b] : kPairs)
            e.instances.push_back(counted(pair_label(a, b), count_q(E, fin({a, b})), 1, [a, b](int n) -> BigInt {
                const int r = n % (a + b);
                return BigInt(r == 0 ? 2 : (r == a || r == b) ? 1 : 0);
            }));
        out.push_back(std::move(e));
    }
    {
        CatalogEntry e{"carlitz.rises.general",
                       "\\sum_{i=1}^{j-1}\\dfrac{x^{a_i}y}{1+x^{a_i}y}", {}, false, {}};
        for (const Ints& a : kGeneralSets) {
            R num(0), prefix(0), total(0);
            for (int v : a) {
                const R u = X(v) / (one() + X(v));
                num = num + u * prefix;
                prefix = prefix + u;
                total = total + u;
            }
            for (Statistic st : {Statistic::Rises, Statistic::Drops})
                e.instances.push_back(fixed(set_label(a) + " " + std::string(statistic_name(st)),
                                            total_q(E, fin(a), st), num / (one() - total).pow(2)));
        }
        e.instances.push_back(truncating("A=N", total_q(E, PartSet::naturals(), Statistic::Rises), [](int order) {
            const CarlitzNaturals c(order);
            IntPoly num, prefix;
            for (const auto& n : c.numerators) {
                num = num + n * prefix;
                prefix = prefix + n;
            }
            return R(num, (c.d - prefix).pow(2));
        }));
        out.push_back(std::move(e));
    }
    {
        CatalogEntry e{"carlitz.rises.ab", "\\frac{x^{a+b}(1+x^a)(1+x^b)}{(1-x^{a+b})^2}", {}, false, {}};
        for (auto [a, b] : kPairs)
            e.instances.push_back(fixed(pair_label(a, b), total_q(E, fin({a, b}), Statistic::Rises),
                                        X(a + b) * (one() + X(a)) * (one() + X(b)) / (one() - X(a + b)).pow(2)));
        out.push_back(std::move(e));
    }
    {
        CatalogEntry e{"carlitz.rises.ab.m", "x^{m(a+b)}\\left((2m-1)y^{2m}+m(x^a+x^b)y^{2m+1}\\right)", {}, false, {}};
        for (auto [a, b] : kPairs)
            for (int m = 1; m <= 6; ++m)
                e.instances.push_back(fixed(pair_label(a, b) + " " + m_label(m),
                                            total_q(E, fin({a, b}), Statistic::Rises, m),
                                            carlitz_ab_rises_slice(a, b, m)));
        out.push_back(std::move(e));
    }
    {
        CatalogEntry e{"carlitz.rises.ab.closed", "2n'-1 \\:\\mbox{ if }\\: n=(a+b)n'", {}, false, {}};
        for (auto [a, b] : kPairs)
            e.instances.push_back(counted(pair_label(a, b), total_q(E, fin({a, b}), Statistic::Rises), a + b,
                                          [a, b](int n) -> BigInt {
                                              const int np = n / (a + b);
                                              const int r = n % (a + b);
                                              return BigInt(r == 0 ? 2 * np - 1 : (r == a || r == b) ? np : 0);
                                          }));
        out.push_back(std::move(e));
    }
}

void add_carlitz_palindromes(std::vector<CatalogEntry>& out) {
    const CC F = CC::CarlitzPalindromes;
    {
        CatalogEntry e{"carlitz-palindromes.count.general",
                       "1+\\dfrac{\\sum\\limits_{i=1}^k\\dfrac{x^{a_i}y}{1+x^{2a_i}y^2r}}", {}, false, {}};
        for (const Ints& a : kGeneralSets)
            e.instances.push_back(fixed(
                set_label(a), count_q(F, fin(a)),
                one() + sum_over(a, [](int v) { return X(v) / (one() + X(2 * v)); }) /
                            (one() - sum_over(a, [](int v) { return X(2 * v) / (one() + X(2 * v)); }))));
        out.push_back(std::move(e));
    }
    {
        CatalogEntry e{"carlitz-palindromes.count.ab", "\\frac{1+x^a+x^b-x^{a+b}}{1-x^{a+b}}", {}, false, {}};
        for (auto [a, b] : kPairs)
            e.instances.push_back(fixed(pair_label(a, b), count_q(F, fin({a, b})),
                                        (one() + X(a) + X(b) - X(a + b)) / (one() - X(a + b))));
        out.push_back(std::move(e));
    }
    {
        CatalogEntry e{"carlitz-palindromes.count.ab.closed", "n =(a+b)n'+a", {}, false, {}};
        for (auto [a, b] : kPairs)
            e.instances.push_back(counted(pair_label(a, b), count_q(F, fin({a, b})), 1, [a, b](int n) -> BigInt {
                const int r = n % (a + b);
                return BigInt((r == a || r == b) ? 1 : 0);
            }));
        out.push_back(std::move(e));
    }
    {
        CatalogEntry e{"carlitz-palindromes.rises.general",
                       "\\frac{x^{3a_i}y^3}{(1+x^{2a_i}y^2)^2}", {}, false, {}};
        for (const Ints& a : kGeneralSets) {
            const R q = sum_over(a, [](int v) { return X(2 * v) / (one() + X(2 * v)); });
            const R g = (sum_over(a, [](int v) { return X(3 * v) / (one() + X(2 * v)).pow(2); }) * (q - one()) +
                         sum_over(a, [](int v) { return X(v) / (one() + X(2 * v)); }) *
                             sum_over(a, [](int v) { return X(2 * v) / (one() + X(2 * v)).pow(2); })) /
                        (one() - q).pow(2);
            for (Statistic st : {Statistic::Rises, Statistic::Drops})
                e.instances.push_back(fixed(set_label(a) + " " + std::string(statistic_name(st)),
                                            total_q(F, fin(a), st), g));
        }
        out.push_back(std::move(e));
    }
    {
        CatalogEntry e{"carlitz-palindromes.rises.ab", "\\frac{x^{a+b}(x^a+x^b)}{(1-x^{a+b})^2}", {}, false, {}};
        for (auto [a, b] : kPairs)
            e.instances.push_back(fixed(pair_label(a, b), total_q(F, fin({a, b}), Statistic::Rises),
                                        X(a + b) * (X(a) + X(b)) / (one() - X(a + b)).pow(2)));
        out.push_back(std::move(e));
    }
    {
        CatalogEntry e{"carlitz-palindromes.rises.ab.m", "(x^a+x^b)\\sum_{m\\geq1}m \\, x^{m(a+b)}y^{2m+1}", {}, false, {}};
        for (auto [a, b] : kPairs)
            for (int m = 1; m <= 6; ++m) {
                const int mp = m / 2;
                const R form = m % 2 == 1 ? R(mp) * (X(a) + X(b)) * X(mp * (a + b)) : R(0);
                e.instances.push_back(fixed(pair_label(a, b) + " " + m_label(m),
                                            total_q(F, fin({a, b}), Statistic::Rises, m), form));
            }
        out.push_back(std::move(e));
    }
    {
        CatalogEntry e{"carlitz-palindromes.rises.ab.closed", "n' \\: \\mbox{  if  }\\: n=(a+b)n'+a", {}, false, {}};
        for (auto [a, b] : kPairs)
            e.instances.push_back(counted(pair_label(a, b), total_q(F, fin({a, b}), Statistic::Rises), a + b,
                                          [a, b](int n) -> BigInt {
                                              const int r = n % (a + b);
                                              return BigInt((r == a || r == b) ? n / (a + b) : 0);
                                          }));
        out.push_back(std::move(e));
    }
}

// ---- partitions --------------------------------------------------------------

void add_partitions(std::vector<CatalogEntry>& out) {
    const CC G = CC::Partitions;
    const Substitution distinct{{Marker::Levels, 0}};
    {
        CatalogEntry e{"partitions.count.ab", "\\frac{1}{(1-x^a)(1-x^b)}", {}, false, {}};
        for (auto [a, b] : kPairs)
            e.instances.push_back(fixed(pair_label(a, b), count_q(G, fin({a, b})),
                                        R(IntPoly(1), (IntPoly(1) - xp(a)) * (IntPoly(1) - xp(b)))));
        out.push_back(std::move(e));
    }
    out.push_back({"partitions.count.N", "\\prod_{j\\geq1}(1-x^jy)^{-1}",
                   {truncating("", count_q(G, PartSet::naturals()), [](int order) {
                       IntPoly d(1);
                       for (int j = 1; j <= order; ++j) d = d * (IntPoly(1) - xp(j));
                       return R(IntPoly(1), d);
                   })},
                   false, {}});
    {
        CatalogEntry e{"partitions.count.1k.closed", "\\lfloor (n+k)/k \\rfloor", {}, false, {}};
        for (int k : kOneK)
            e.instances.push_back(counted(k_label(k), count_q(G, fin({1, k})), 0,
                                          [k](int n) -> BigInt { return BigInt((n + k) / k); }));
        out.push_back(std::move(e));
    }
    {
        CatalogEntry e{"partitions.distinct-adjacent", "\\prod_{j=1}^k(1+x^{a_j}y)", {}, false, {}};
        for (const Ints& a : kGeneralSets)
            e.instances.push_back(fixed(set_label(a), count_q(G, fin(a), std::nullopt, distinct),
                                        R(prod_over(a, [](int v) { return IntPoly(1) + xp(v); }))));
        e.instances.push_back(truncating("A=N", count_q(G, PartSet::naturals(), std::nullopt, distinct), [](int order) {
            IntPoly p(1);
            for (int j = 1; j <= order; ++j) p = p * (IntPoly(1) + xp(j));
            return R(p);
        }));
        out.push_back(std::move(e));
    }
    {
        CatalogEntry e{"partitions.levels.general",
                       "\\sum_{i=1}^{j-1}\\frac{x^{2a_i}y^2}{1-x^{a_i}y}", {}, false, {}};
        for (const Ints& a : kGeneralSets) {
            R first(0), second(0);
            IntPoly pr(1);
            R inner(0);
            for (int v : a) {
                first = first + X(2 * v) * R(pr);
                second = second + X(v) * R(pr) * inner;
                inner = inner + X(2 * v) / (one() - X(v));
                pr = pr * (IntPoly(1) - xp(v));
            }
            e.instances.push_back(fixed(set_label(a), total_q(G, fin(a), Statistic::Levels),
                                        (first - second) / R(pr.pow(2))));
        }
        out.push_back(std::move(e));
    }
    {
        CatalogEntry e{"partitions.drops.general",
                       "\\left(1-\\prod_{j=1}^k(1-x^{a_j}y)\\right)^2", {}, false, {}};
        for (const Ints& a : kGeneralSets) {
            R sub(0);
            IntPoly pr(1), prefix;
            for (int v : a) {
                prefix = prefix + xp(v);
                sub = sub + R(xp(v) * pr * prefix);
                pr = pr * (IntPoly(1) - xp(v));
            }
            e.instances.push_back(fixed(set_label(a), total_q(G, fin(a), Statistic::Drops),
                                        (R((IntPoly(1) - pr).pow(2)) - sub) / R(pr.pow(2))));
        }
        out.push_back(std::move(e));
    }
    {
        CatalogEntry e{"partitions.levels.ab", "\\frac{x^{2a}y^2(1-x^by)+x^{2b}y^2(1-x^ay)}{(1-x^ay)^2(1-x^by)^2}",
                       {}, false, {}};
        for (auto [a, b] : kPairs)
            e.instances.push_back(fixed(pair_label(a, b), total_q(G, fin({a, b}), Statistic::Levels),
                                        R(xp(2 * a) * (IntPoly(1) - xp(b)) + xp(2 * b) * (IntPoly(1) - xp(a)),
                                          (IntPoly(1) - xp(a)).pow(2) * (IntPoly(1) - xp(b)).pow(2))));
        out.push_back(std::move(e));
    }
    out.push_back({"partitions.levels.12", "\\frac{x^2(1-x^3)}{(1-x)^4(1+x)^2}",
                   {fixed("", total_q(G, fin({1, 2}), Statistic::Levels),
                          R(xp(2) * IntPoly({1, 0, 0, -1}), IntPoly({1, -1}).pow(4) * IntPoly({1, 1}).pow(2)))},
                   false, {}});
    {
        CatalogEntry e{"partitions.drops.ab", "\\frac{x^{a+b}y^2}{(1-x^ay)(1-x^by)}", {}, false, {}};
        for (auto [a, b] : kPairs)
            e.instances.push_back(fixed(pair_label(a, b), total_q(G, fin({a, b}), Statistic::Drops),
                                        R(xp(a + b), (IntPoly(1) - xp(a)) * (IntPoly(1) - xp(b)))));
        out.push_back(std::move(e));
    }
    {
        CatalogEntry e{"partitions.drops.1k", "\\frac{x^{k+1}}{(1-x)(1-x^k)}", {}, false, {}};
        for (int k : kOneK)
            e.instances.push_back(fixed(k_label(k), total_q(G, fin({1, k}), Statistic::Drops),
                                        R(xp(k + 1), IntPoly({1, -1}) * (IntPoly(1) - xp(k)))));
        out.push_back(std::move(e));
    }
    {
        CatalogEntry e{"partitions.drops.1k.closed", "\\lfloor (n-1)/k \\rfloor", {}, false, {}};
        for (int k : kOneK)
            e.instances.push_back(counted(k_label(k), total_q(G, fin({1, k}), Statistic::Drops), 1,
                                          [k](int n) -> BigInt { return BigInt((n - 1) / k); }));
        out.push_back(std::move(e));
    }
}

std::vector<CatalogEntry> build() {
    std::vector<CatalogEntry> out;
    add_compositions(out);
    add_palindromes(out);
    add_carlitz(out);
    add_carlitz_palindromes(out);
    add_partitions(out);
    return out;
}

}  // namespace

const std::vector<CatalogEntry>& catalog() {
    static const std::vector<CatalogEntry> entries = build();
    return entries;
}

const CatalogEntry* find_entry(std::string_view id) {
    for (const auto& e : catalog())
        if (e.id == id) return &e;
    return nullptr;
}

TruncatedSeries engine_series(const CatalogQuery& q, int order) {
    if (q.quantity != Quantity::Count && !q.extra.empty())
        throw ContractError("engine_series: extra substitutions apply to counts only");
    switch (q.quantity) {
        case Quantity::Count: {
            Substitution at = q.extra;
            for (Marker m : kAllMarkers)
                if (!at.fixes(m) && !(m == Marker::Parts && q.parts)) at.set(m, 1);
            TruncatedSeries gf = class_gf(q.cls, q.set, order, at);
            return q.parts ? per_parts_slice(gf, *q.parts).eval_marker(Marker::Parts, 1) : gf;
        }
        case Quantity::Total: {
            TruncatedSeries t = statistic_total(q.cls, q.set, q.stat, order, q.parts.has_value());
            return q.parts ? per_parts_slice(t, *q.parts) : t;
        }
        case Quantity::SecondMoment:
            if (q.parts) throw ContractError("engine_series: no per-parts second moment");
            return moment_total(q.cls, q.set, q.stat, order);
    }
    throw std::logic_error("unknown quantity");
}

TruncatedSeries claimed_series(const CatalogInstance& inst, int order) {
    if (inst.rational) return expand(inst.rational(order), order);
    std::vector<MarkerPoly> coeffs(static_cast<std::size_t>(order) + 1);
    for (int n = inst.formula->n_min; n <= order; ++n)
        coeffs[static_cast<std::size_t>(n)] = MarkerPoly(inst.formula->value(n));
    return {order, std::move(coeffs)};
}

Verdict verify_instance(const CatalogInstance& inst, const TruncatedSeries& engine, int order) {
    const TruncatedSeries claimed = claimed_series(inst, order);
    const int start = inst.formula ? inst.formula->n_min : 0;
    for (int n = start; n <= order; ++n) {
        const BigInt e = engine.coeff(n).constant_term();
        const BigInt c = claimed.coeff(n).constant_term();
        if (e != c) return {false, inst.label, n, e, c};
    }
    return {};
}

Verdict verify_entry(const CatalogEntry& entry, int order) {
    for (const auto& inst : entry.instances) {
        Verdict v = verify_instance(inst, engine_series(inst.query, order), order);
        if (!v.match) return v;
    }
    return {};
}

}  // namespace compstat
