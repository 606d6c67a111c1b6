#pragma once

// Approximation of kernel dimensions through families of finite quotients,
// and the rational partial sums of the totient series sum phi(k)/(2^k-1)^2.

#include "vnlab/vnla.hpp"

#include <functional>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace vnlab {

// A 1x1 operator written over generator names, evaluated in each quotient.
class SymbolicOperator {
public:
    using Term = std::pair<std::string, CycloScalar>;

    // Terms with zero coefficient are dropped; throws DomainError if none remain.
    SymbolicOperator(const FieldSpec& field, std::vector<Term> terms);

    // "the identity word": the operator 1.
    static SymbolicOperator identity(const FieldSpec& field = FieldSpec::rationals());
    // (1 / 2|gens|) * sum_s (s + s^-1) for the given generator words.
    static SymbolicOperator markov(const std::vector<std::string>& generator_words);

    const FieldSpec& field() const noexcept { return *field_; }
    const std::vector<Term>& terms() const noexcept { return terms_; }
    std::string to_string() const;

    RingElement evaluate(const GroupPtr& g) const;

private:
    const FieldSpec* field_;
    std::vector<Term> terms_;
};

struct QuotientFamily {
    std::string name;
    std::size_t first = 1;
    std::size_t last = 1;
    std::function<GroupPtr(std::size_t)> instantiate;
    // Optional abelian subgroup for the character-block path.
    std::function<std::optional<Subgroup>(const GroupPtr&)> block_hint;
};

// L_n = (Z/2)^n x| Z/n for n = 1..10, generators "a" and "t".
QuotientFamily lamplighter_family();

// Generators {t, a*t}, uniform weight 1/4.
SymbolicOperator lamplighter_markov_operator();

RingElement markov_element(const GroupPtr& g, const std::vector<Elem>& gens);

struct ApproxPoint {
    std::size_t parameter = 0;
    std::size_t order = 0;
    Rational vn_dim;
    DimPath path = DimPath::dense;
    std::optional<Rational> error;  // |vn_dim - target|
    double seconds = 0;
};

struct ApproxRun {
    std::string family;
    std::string op;
    std::optional<Rational> target;
    std::vector<ApproxPoint> points;
    bool complete = true;
    std::string failure;  // set when a parameter could not be instantiated or evaluated
};

ApproxRun approximation_run(const QuotientFamily& family, const SymbolicOperator& op, std::size_t from, std::size_t to,
                            std::optional<Rational> target = std::nullopt);

unsigned long euler_phi(unsigned long k);

// Decimal expansion of x >= 0 rounded half-up to `digits` places.
std::string rounded_decimal(const Rational& x, unsigned digits);

struct SeriesSum {
    std::size_t terms = 0;        // k runs over 2..terms
    Rational exact;
    std::string decimal;
    Rational tail_bound;          // bound on the sum over k > terms
    unsigned certified_digits = 0;  // leading places on which sum and sum + tail_bound agree
};

SeriesSum ds02_partial_sum(std::size_t k_max, unsigned digits);

}  // namespace vnlab
