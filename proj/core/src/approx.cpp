#include "vnlab/approx.hpp"

#include "vnlab/error.hpp"

#include <chrono>
#include <numeric>

namespace vnlab {

SymbolicOperator::SymbolicOperator(const FieldSpec& field, std::vector<Term> terms) : field_(&field) {
    for (auto& [word, c] : terms) {
        if (&c.field() != field_) throw MismatchError("operator coefficient over a different field");
        if (!c.is_zero()) terms_.emplace_back(std::move(word), std::move(c));
    }
    if (terms_.empty()) throw DomainError("operator has no nonzero terms");
}

SymbolicOperator SymbolicOperator::identity(const FieldSpec& field) {
    return SymbolicOperator(field, {{"e", CycloScalar(field, 1L)}});
}

SymbolicOperator SymbolicOperator::markov(const std::vector<std::string>& generator_words) {
    if (generator_words.empty()) throw DomainError("Markov operator needs at least one generator");
    const FieldSpec& q = FieldSpec::rationals();
    const CycloScalar w(q, Rational(1, static_cast<unsigned long>(2 * generator_words.size())));
    std::vector<Term> terms;
    for (const auto& s : generator_words) {
        terms.emplace_back(s, w);
        // (s1*...*sk)^-1 = sk^-1*...*s1^-1
        std::vector<std::string> tokens;
        std::size_t pos = 0;
        while (true) {
            const auto star = s.find('*', pos);
            tokens.push_back(s.substr(pos, star == std::string::npos ? std::string::npos : star - pos));
            if (star == std::string::npos) break;
            pos = star + 1;
        }
        std::string inverse;
        for (auto it = tokens.rbegin(); it != tokens.rend(); ++it) {
            std::string token = *it;
            long e = 1;
            if (const auto caret = token.find('^'); caret != std::string::npos) {
                try {
                    e = std::stol(token.substr(caret + 1));
                } catch (const std::exception&) {
                    throw SpecError("malformed exponent in word '" + s + "'");
                }
                token.resize(caret);
            }
            if (!inverse.empty()) inverse += "*";
            inverse += token + "^" + std::to_string(-e);
        }
        terms.emplace_back(inverse, w);
    }
    return SymbolicOperator(q, std::move(terms));
}

std::string SymbolicOperator::to_string() const {
    std::string out;
    for (const auto& [word, c] : terms_) {
        if (!out.empty()) out += " + ";
        out += "(" + c.to_string() + ")*" + word;
    }
    return out;
}

RingElement SymbolicOperator::evaluate(const GroupPtr& g) const {
    RingElement x(g, *field_);
    for (const auto& [word, c] : terms_) x.add_term(g->evaluate_word(word), c);
    return x;
}

QuotientFamily lamplighter_family() {
    QuotientFamily f;
    f.name = "lamplighter";
    f.first = 1;
    f.last = 10;
    f.instantiate = [](std::size_t n) { return lamplighter(n); };
    f.block_hint = [](const GroupPtr& g) -> std::optional<Subgroup> {
        // The lamp configurations are the elements with shift 0: indices b*n.
        const std::size_t n = g->element_order(*g->generator("t"));
        std::vector<Elem> lamps;
        for (Elem x = 0; x < g->order(); x += static_cast<Elem>(n)) lamps.push_back(x);
        return Subgroup(g, std::move(lamps));
    };
    return f;
}

SymbolicOperator lamplighter_markov_operator() { return SymbolicOperator::markov({"t", "a*t"}); }

RingElement markov_element(const GroupPtr& g, const std::vector<Elem>& gens) {
    if (gens.empty()) throw DomainError("markov_element: empty generating set");
    const FieldSpec& q = FieldSpec::rationals();
    const CycloScalar w(q, Rational(1, static_cast<unsigned long>(2 * gens.size())));
    RingElement x(g, q);
    for (Elem s : gens) {
        x.add_term(s, w);
        x.add_term(g->inv(s), w);
    }
    return x;
}

ApproxRun approximation_run(const QuotientFamily& family, const SymbolicOperator& op, std::size_t from, std::size_t to,
                            std::optional<Rational> target) {
    if (from > to) throw DomainError("approximation_run: empty parameter range");
    if (from < family.first || to > family.last) {
        throw DomainError("approximation_run: parameters must lie in " + std::to_string(family.first) + ".." +
                          std::to_string(family.last) + " for family " + family.name);
    }
    ApproxRun run;
    run.family = family.name;
    run.op = op.to_string();
    run.target = target;
    for (std::size_t n = from; n <= to; ++n) {
        try {
            const auto start = std::chrono::steady_clock::now();
            const GroupPtr g = family.instantiate(n);
            RingMatrix a({{op.evaluate(g)}});
            DimOptions options;
            if (family.block_hint) options.block_subgroup = family.block_hint(g);
            const DimReport report = vn_dim_kernel(a, options);
            ApproxPoint pt;
            pt.parameter = n;
            pt.order = g->order();
            pt.vn_dim = report.vn_dim;
            pt.path = report.path;
            if (target) pt.error = abs(report.vn_dim - *target);
            pt.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
            run.points.push_back(std::move(pt));
        } catch (const Error& e) {
            run.complete = false;
            run.failure = "parameter " + std::to_string(n) + ": " + e.what();
            break;
        }
    }
    return run;
}

unsigned long euler_phi(unsigned long k) {
    if (k == 0) throw DomainError("euler_phi: argument must be positive");
    unsigned long result = k;
    unsigned long n = k;
    for (unsigned long p = 2; p * p <= n; ++p) {
        if (n % p != 0) continue;
        while (n % p == 0) n /= p;
        result -= result / p;
    }
    if (n > 1) result -= result / n;
    return result;
}

std::string rounded_decimal(const Rational& x, unsigned digits) {
    if (x < 0) return "-" + rounded_decimal(-x, digits);
    Integer scale;
    mpz_ui_pow_ui(scale.get_mpz_t(), 10, digits);
    // floor(x * 10^d + 1/2)
    const Integer num = 2 * x.get_num() * scale + x.get_den();
    const Integer den = 2 * x.get_den();
    Integer q;
    mpz_fdiv_q(q.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
    std::string s = q.get_str();
    if (digits == 0) return s;
    if (s.size() <= digits) s.insert(0, digits + 1 - s.size(), '0');
    s.insert(s.size() - digits, ".");
    return s;
}

namespace {

// sum_{k > K} k x^k = x^{K+1} ((K+1) - K x) / (1-x)^2
Rational weighted_geometric_tail(std::size_t k_max, const Rational& x) {
    Rational power = 1;
    for (std::size_t i = 0; i <= k_max; ++i) power *= x;
    const Rational kk(static_cast<unsigned long>(k_max));
    const Rational one_minus = 1 - x;
    return Rational(power * ((kk + 1) - kk * x) / (one_minus * one_minus));
}

}  // namespace

SeriesSum ds02_partial_sum(std::size_t k_max, unsigned digits) {
    if (k_max < 2) throw DomainError("ds02_partial_sum: need at least the k = 2 term");
    SeriesSum out;
    out.terms = k_max;
    Rational sum = 0;
    Integer two_k = 2;  // 2^k
    for (std::size_t k = 2; k <= k_max; ++k) {
        two_k *= 2;
        const Integer d = two_k - 1;
        sum += Rational(Integer(static_cast<unsigned long>(euler_phi(k))), d * d);
    }
    sum.canonicalize();
    out.exact = sum;
    out.decimal = rounded_decimal(sum, digits);
    // phi(k) <= k and (2^k - 1)^2 >= 4^k / 2 for k >= 2, so each tail term is at most 2k / 4^k.
    out.tail_bound = 2 * weighted_geometric_tail(k_max, Rational(1, 4));
    for (unsigned d = 0; d <= digits; ++d) {
        if (rounded_decimal(sum, d) != rounded_decimal(sum + out.tail_bound, d)) break;
        out.certified_digits = d;
    }
    return out;
}

}  // namespace vnlab
