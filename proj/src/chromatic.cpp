#include "listgap/chromatic.hpp"

#include <algorithm>
#include <map>

namespace listgap {

namespace {

using MemoKey = std::pair<int, std::vector<Edge>>;

IntPolynomial deletion_contraction(const Graph &g, std::map<MemoKey, IntPolynomial> &memo)
{
    if (g.size() == 0)
        return IntPolynomial::monomial(BigInt(1), static_cast<std::size_t>(g.order()));

    MemoKey key{g.order(), g.edges()};
    if (auto it = memo.find(key); it != memo.end())
        return it->second;

    const EdgeRef last{g.size() - 1};
    IntPolynomial result = deletion_contraction(delete_edge(g, last), memo);
    result -= deletion_contraction(contract(g, last).graph, memo);
    memo.emplace(std::move(key), result);
    return result;
}

/// k^n, saturating at budget + 1.
std::uint64_t capped_power(std::uint64_t base, int exponent, std::uint64_t budget)
{
    std::uint64_t acc = 1;
    for (int i = 0; i < exponent; ++i) {
        if (base != 0 && acc > (budget + 1) / base)
            return budget + 1;
        acc *= base;
    }
    return acc;
}

} // namespace

IntPolynomial chromatic_deletion_contraction(const Graph &g, std::size_t max_edges)
{
    if (g.size() > max_edges)
        throw BudgetExceeded("deletion-contraction", std::to_string(g.size()) + " edges",
                             static_cast<std::uint64_t>(max_edges));
    std::map<MemoKey, IntPolynomial> memo;
    return deletion_contraction(g, memo);
}

BigInt count_proper_colorings(const Graph &g, long k, std::uint64_t budget)
{
    const int n = g.order();
    if (k < 0)
        throw std::invalid_argument("negative colour count");
    if (n == 0)
        return 1;
    if (k == 0)
        return 0;
    if (capped_power(static_cast<std::uint64_t>(k), n, budget) > budget) {
        BigInt need;
        mpz_ui_pow_ui(need.get_mpz_t(), static_cast<unsigned long>(k), static_cast<unsigned long>(n));
        throw BudgetExceeded("proper colouring count", to_string(need) + " leaves", budget);
    }

    std::vector<long> colour(static_cast<std::size_t>(n), 0);
    std::uint64_t count = 0;
    // Vertex v only checks neighbours with smaller index (already coloured).
    auto place = [&](auto &&self, Vertex v) -> void {
        if (v == n) {
            ++count;
            return;
        }
        for (long c = 1; c <= k; ++c) {
            bool ok = true;
            for (Vertex w : g.neighbors(v))
                if (w < v && colour[static_cast<std::size_t>(w)] == c) {
                    ok = false;
                    break;
                }
            if (!ok)
                continue;
            colour[static_cast<std::size_t>(v)] = c;
            self(self, v + 1);
        }
        colour[static_cast<std::size_t>(v)] = 0;
    };
    place(place, 0);
    return BigInt(static_cast<unsigned long>(count));
}

IntPolynomial chromatic_by_interpolation(const Graph &g, std::uint64_t budget)
{
    // Lagrange interpolation through (k, P(G,k)) for k = 0..n, done over the rationals.
    const int n = g.order();
    std::vector<Rational> values;
    for (int k = 0; k <= n; ++k)
        values.emplace_back(count_proper_colorings(g, k, budget));

    std::vector<Rational> result(static_cast<std::size_t>(n + 1), Rational(0));
    for (int j = 0; j <= n; ++j) {
        // basis_j(x) = prod_{i != j} (x - i) / (j - i)
        std::vector<Rational> basis{Rational(1)};
        Rational denom = 1;
        for (int i = 0; i <= n; ++i) {
            if (i == j)
                continue;
            std::vector<Rational> next(basis.size() + 1, Rational(0));
            for (std::size_t d = 0; d < basis.size(); ++d) {
                next[d + 1] += basis[d];
                next[d] -= basis[d] * i;
            }
            basis = std::move(next);
            denom *= (j - i);
        }
        for (std::size_t d = 0; d < basis.size(); ++d)
            result[d] += values[static_cast<std::size_t>(j)] * basis[d] / denom;
    }
    std::vector<BigInt> coeffs;
    for (auto &r : result) {
        r.canonicalize();
        if (r.get_den() != 1)
            throw std::logic_error("interpolated chromatic coefficient is not an integer");
        coeffs.push_back(r.get_num());
    }
    return IntPolynomial(std::move(coeffs));
}

RatPolynomial q_poly(const Graph &g, const NbcProfile &profile, EdgeRef e)
{
    const int n = g.order();
    std::vector<Rational> coeffs(static_cast<std::size_t>(std::max(n, 1)), Rational(0));
    for (int i = 1; i <= n - 1; ++i) {
        Rational count(static_cast<unsigned long>(profile.per_edge(e, static_cast<std::size_t>(i))));
        if (i % 2 == 1)
            coeffs[static_cast<std::size_t>(n - i)] = count / i;
        else
            coeffs[static_cast<std::size_t>(n - i)] = -count;
    }
    return RatPolynomial(std::move(coeffs));
}

RatPolynomial q_poly(const Graph &g, const EdgeOrdering &eta, EdgeRef e)
{
    return q_poly(g, nbc_profile(g, eta), e);
}

Rational q_eval(const Graph &g, const NbcProfile &profile, EdgeRef e, const Rational &x)
{
    return q_poly(g, profile, e).evaluate(x);
}

Rational q_eval(const Graph &g, const EdgeOrdering &eta, EdgeRef e, const Rational &x)
{
    return q_eval(g, nbc_profile(g, eta), e, x);
}

} // namespace listgap
