#pragma once

// Instance-level verification suites. Every check is an exact comparison of
// rationals or integers; nothing here uses a tolerance.

#include "vnlab/morph.hpp"
#include "vnlab/vnla.hpp"

#include <cstdint>
#include <random>
#include <string>
#include <utility>
#include <vector>

namespace vnlab {

struct Check {
    std::string label;
    std::string expected;
    std::string actual;
    bool pass = false;
};

// A relation recorded with both sides but deliberately not asserted.
struct Observation {
    std::string label;
    std::string lhs;
    std::string rhs;
    bool holds = false;
    std::string note;
};

struct SuiteReport {
    std::string suite;
    std::string instance;
    std::vector<Check> checks;
    std::vector<Observation> observations;
    std::vector<std::pair<std::string, std::string>> values;  // named exact quantities
    std::vector<std::string> notes;
    bool precondition_failed = false;

    bool pass() const;
    const std::string* value(const std::string& name) const;

    void expect(std::string label, const Rational& expected, const Rational& actual);
    void expect(std::string label, bool holds, std::string detail = {});
    void record(std::string name, const Rational& v);
    void precondition(std::string label, bool holds, std::string detail = {});
};

// ------------------------------------------------------------ random instances

// Sum of at most three group elements with coefficients in {-1, 0, 1, 1/2},
// each multiplied by a random power of zeta when the field is not Q.
RingElement random_element(const GroupPtr& g, const FieldSpec& field, std::mt19937_64& rng);
// Shape m x n with 1 <= m, n <= 3.
RingMatrix random_matrix(const GroupPtr& g, const FieldSpec& field, std::mt19937_64& rng);
RingMatrix random_matrix(const GroupPtr& g, const FieldSpec& field, std::size_t m, std::size_t n, std::mt19937_64& rng);
// As above with every term drawn from `support`.
RingMatrix random_matrix_in(const Subgroup& support, const FieldSpec& field, std::mt19937_64& rng);

// ------------------------------------------------------------ suites

// A is over the ambient group with entries supported in u; pn is a prime power.
SuiteReport verify_prop31(const Subgroup& u, const Subgroup& v, const RingMatrix& a, std::uint64_t pn);
// Case 1: S3 with V = N = A3. Case 2: Z/2 x Z/3 with U = Z/2 x 1, V = 1 x V2 and p = 3,
// where V2 is Z/3 or, with trivial_v2, the trivial group.
SuiteReport verify_prop31_footnotes(int which, bool trivial_v2 = false);

SuiteReport verify_prop41(const QuotientMap& p, const RingMatrix& a);
SuiteReport verify_prop44(const QuotientMap& p, const RingMatrix& a);
SuiteReport verify_lemma42(const QuotientMap& p);
SuiteReport verify_restriction(const Subgroup& u, const RingMatrix& a);
SuiteReport verify_strong_atiyah_finite(const GroupPtr& g, unsigned trials, std::uint64_t seed, unsigned conductor = 1);
// Transfer-map properties (push-pull identities, adjointness, norm bounds, multiplicativity)
// on `pairs` seeded random pairs.
SuiteReport verify_transfer_properties(const QuotientMap& p, unsigned pairs, std::uint64_t seed);

// Subgroups for lemma checks: every cyclic subgroup plus closures of pairs of generators, deduplicated.
std::vector<Subgroup> sample_subgroups(const GroupPtr& g, std::size_t limit = 64);

// A transversal different from the minimal one whenever some coset has two or more
// elements: each non-identity coset is represented by its largest element.
Transversal alternate_transversal(const Subgroup& u);

}  // namespace vnlab
