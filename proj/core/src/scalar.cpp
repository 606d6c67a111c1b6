#include "vnlab/scalar.hpp"

#include "vnlab/error.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <memory>
#include <mutex>
#include <numeric>

namespace vnlab {

unsigned euler_totient(unsigned n) {
    if (n == 0) throw DomainError("euler_totient: argument must be positive");
    unsigned result = n;
    unsigned m = n;
    for (unsigned p = 2; p * p <= m; ++p) {
        if (m % p != 0) continue;
        while (m % p == 0) m /= p;
        result -= result / p;
    }
    if (m > 1) result -= result / m;
    return result;
}

namespace {

// Exact division of integer polynomials by a monic divisor.
std::vector<Integer> divide_monic(std::vector<Integer> num, const std::vector<Integer>& den) {
    const std::size_t dn = den.size() - 1;
    std::vector<Integer> quot(num.size() - dn);
    for (std::size_t k = num.size(); k-- > dn;) {
        const Integer c = num[k];
        quot[k - dn] = c;
        if (c == 0) continue;
        for (std::size_t i = 0; i <= dn; ++i) num[k - dn + i] -= c * den[i];
    }
    return quot;
}

}  // namespace

std::vector<Integer> cyclotomic_polynomial(unsigned n) {
    if (n == 0) throw DomainError("cyclotomic_polynomial: conductor must be positive");
    static std::mutex mutex;
    static std::map<unsigned, std::vector<Integer>> cache;
    {
        std::lock_guard lock(mutex);
        if (auto it = cache.find(n); it != cache.end()) return it->second;
    }
    std::vector<Integer> poly(n + 1);
    poly[0] = -1;
    poly[n] = 1;
    for (unsigned d = 1; d < n; ++d) {
        if (n % d == 0) poly = divide_monic(std::move(poly), cyclotomic_polynomial(d));
    }
    std::lock_guard lock(mutex);
    cache.emplace(n, poly);
    return poly;
}

struct FieldRegistry {
    std::mutex mutex;
    std::map<unsigned, std::unique_ptr<FieldSpec>> fields;

    const FieldSpec& get(unsigned conductor) {
        std::lock_guard lock(mutex);
        auto& slot = fields[conductor];
        if (!slot) slot.reset(new FieldSpec(conductor));
        return *slot;
    }
};

const FieldSpec& FieldSpec::get(unsigned conductor) {
    if (conductor == 0) throw DomainError("field conductor must be >= 1");
    static FieldRegistry registry;
    return registry.get(conductor);
}

FieldSpec::FieldSpec(unsigned conductor) : conductor_(conductor), modulus_(cyclotomic_polynomial(conductor)) {
    const std::size_t d = degree();
    const std::size_t count = std::max<std::size_t>(2 * d, conductor_ + 1);
    powers_.assign(count * d, Rational(0));
    std::vector<Rational> current(d, Rational(0));
    current[0] = 1;
    for (std::size_t k = 0; k < count; ++k) {
        std::copy(current.begin(), current.end(), powers_.begin() + static_cast<std::ptrdiff_t>(k * d));
        // multiply by z and reduce with z^d = -sum modulus_[i] z^i
        const Rational top = current[d - 1];
        for (std::size_t i = d - 1; i > 0; --i) current[i] = current[i - 1];
        current[0] = 0;
        if (top != 0) {
            for (std::size_t i = 0; i < d; ++i) current[i] -= top * Rational(modulus_[i]);
        }
    }
}

std::span<const Rational> FieldSpec::power(std::size_t k) const {
    const std::size_t d = degree();
    if (k >= reduction_table_size()) throw DomainError("FieldSpec::power: exponent outside reduction table");
    return {powers_.data() + k * d, d};
}

CycloScalar::CycloScalar() : CycloScalar(FieldSpec::rationals()) {}

CycloScalar::CycloScalar(const FieldSpec& field) : field_(&field), coeffs_(field.degree(), Rational(0)) {}

CycloScalar::CycloScalar(const FieldSpec& field, Rational value) : CycloScalar(field) {
    value.canonicalize();
    coeffs_[0] = std::move(value);
}

CycloScalar CycloScalar::from_polynomial(const FieldSpec& field, std::span<const Rational> coeffs) {
    CycloScalar out(field);
    const std::size_t d = field.degree();
    const unsigned n = field.conductor();
    for (std::size_t k = 0; k < coeffs.size(); ++k) {
        if (coeffs[k] == 0) continue;
        if (k < d) {
            out.coeffs_[k] += coeffs[k];
            continue;
        }
        // z^n = 1, so fold the exponent before using the table.
        const auto row = field.power(k % n);
        for (std::size_t i = 0; i < d; ++i) {
            if (row[i] != 0) out.coeffs_[i] += coeffs[k] * row[i];
        }
    }
    return out;
}

CycloScalar CycloScalar::zeta_power(const FieldSpec& field, long k) {
    const long n = static_cast<long>(field.conductor());
    const long r = ((k % n) + n) % n;
    CycloScalar out(field);
    const auto row = field.power(static_cast<std::size_t>(r));
    std::copy(row.begin(), row.end(), out.coeffs_.begin());
    return out;
}

CycloScalar CycloScalar::root_of_unity(const FieldSpec& field, unsigned order, long k) {
    const unsigned r = field.root_order();
    if (order == 0 || r % order != 0) {
        throw DomainError("root_of_unity: order " + std::to_string(order) + " does not divide " + std::to_string(r));
    }
    const unsigned n = field.conductor();
    // w_order = w_r^(r/order); w_r = zeta_n when n is even, otherwise -zeta_n^((n+1)/2).
    const long step = static_cast<long>(r / order);
    const long ord = static_cast<long>(order);
    const long e = ((k % ord) + ord) % ord * step;  // exponent of w_r, in [0, r)
    if (n % 2 == 0) return zeta_power(field, e);
    CycloScalar out = zeta_power(field, e * static_cast<long>((n + 1) / 2));
    if (e % 2 == 1) out = -out;
    return out;
}

bool CycloScalar::is_zero() const {
    return std::all_of(coeffs_.begin(), coeffs_.end(), [](const Rational& c) { return c == 0; });
}

bool CycloScalar::is_one() const {
    return coeffs_[0] == 1 && std::all_of(coeffs_.begin() + 1, coeffs_.end(), [](const Rational& c) { return c == 0; });
}

bool CycloScalar::is_rational() const {
    return std::all_of(coeffs_.begin() + 1, coeffs_.end(), [](const Rational& c) { return c == 0; });
}

const Rational& CycloScalar::as_rational() const {
    if (!is_rational()) throw DomainError("scalar " + to_string() + " is not rational");
    return coeffs_[0];
}

void CycloScalar::check_same_field(const CycloScalar& other) const {
    if (field_ != other.field_) {
        throw MismatchError("field mismatch: Q(zeta_" + std::to_string(field_->conductor()) + ") vs Q(zeta_" +
                            std::to_string(other.field_->conductor()) + ")");
    }
}

CycloScalar& CycloScalar::operator+=(const CycloScalar& other) {
    check_same_field(other);
    for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] += other.coeffs_[i];
    return *this;
}

CycloScalar& CycloScalar::operator-=(const CycloScalar& other) {
    check_same_field(other);
    for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] -= other.coeffs_[i];
    return *this;
}

CycloScalar& CycloScalar::operator*=(const CycloScalar& other) {
    check_same_field(other);
    const std::size_t d = coeffs_.size();
    if (d == 1) {
        coeffs_[0] *= other.coeffs_[0];
        return *this;
    }
    std::vector<Rational> product(2 * d - 1, Rational(0));
    for (std::size_t i = 0; i < d; ++i) {
        if (coeffs_[i] == 0) continue;
        for (std::size_t j = 0; j < d; ++j) {
            if (other.coeffs_[j] != 0) product[i + j] += coeffs_[i] * other.coeffs_[j];
        }
    }
    *this = from_polynomial(*field_, product);
    return *this;
}

CycloScalar& CycloScalar::operator*=(const Rational& r) {
    for (auto& c : coeffs_) c *= r;
    return *this;
}

CycloScalar CycloScalar::operator-() const {
    CycloScalar out(*this);
    for (auto& c : out.coeffs_) c = -c;
    return out;
}

CycloScalar CycloScalar::inverse() const {
    if (is_zero()) throw DomainError("division by zero");
    const std::size_t d = coeffs_.size();
    if (d == 1) return CycloScalar(*field_, Rational(1) / coeffs_[0]);

    // Solve M c = e_0 where column j of M holds the coordinates of z^j * this.
    std::vector<std::vector<Rational>> aug(d, std::vector<Rational>(d + 1, Rational(0)));
    CycloScalar column = *this;
    const CycloScalar z = zeta_power(*field_, 1);
    for (std::size_t j = 0; j < d; ++j) {
        for (std::size_t i = 0; i < d; ++i) aug[i][j] = column.coeffs_[i];
        column *= z;
    }
    aug[0][d] = 1;
    for (std::size_t c = 0; c < d; ++c) {
        std::size_t pivot = c;
        while (aug[pivot][c] == 0) ++pivot;  // M is invertible, a pivot exists
        std::swap(aug[pivot], aug[c]);
        const Rational inv = Rational(1) / aug[c][c];
        for (auto& v : aug[c]) v *= inv;
        for (std::size_t r = 0; r < d; ++r) {
            if (r == c || aug[r][c] == 0) continue;
            const Rational f = aug[r][c];
            for (std::size_t k = c; k <= d; ++k) aug[r][k] -= f * aug[c][k];
        }
    }
    CycloScalar out(*field_);
    for (std::size_t i = 0; i < d; ++i) out.coeffs_[i] = aug[i][d];
    return out;
}

CycloScalar& CycloScalar::operator/=(const CycloScalar& other) {
    check_same_field(other);
    if (coeffs_.size() == 1) {
        if (other.coeffs_[0] == 0) throw DomainError("division by zero");
        coeffs_[0] /= other.coeffs_[0];
        return *this;
    }
    return *this *= other.inverse();
}

CycloScalar CycloScalar::conj() const {
    const std::size_t d = coeffs_.size();
    if (d == 1) return *this;
    const unsigned n = field_->conductor();
    // z^i -> z^(n-i)
    std::vector<Rational> poly(n, Rational(0));
    for (std::size_t i = 0; i < d; ++i) poly[(n - i) % n] += coeffs_[i];
    return from_polynomial(*field_, poly);
}

bool operator==(const CycloScalar& a, const CycloScalar& b) {
    return a.field_ == b.field_ && a.coeffs_ == b.coeffs_;
}

std::string to_string(const Rational& r) { return r.get_str(); }

Rational parse_rational(std::string_view text) {
    std::string s;
    for (char c : text) {
        if (!std::isspace(static_cast<unsigned char>(c))) s.push_back(c);
    }
    if (s.empty()) throw SpecError("empty rational literal");
    if (s.front() == '+') s.erase(0, 1);
    const auto valid = [](const std::string& part) {
        std::size_t start = (!part.empty() && part[0] == '-') ? 1 : 0;
        return part.size() > start &&
               std::all_of(part.begin() + static_cast<std::ptrdiff_t>(start), part.end(),
                           [](char c) { return std::isdigit(static_cast<unsigned char>(c)); });
    };
    const auto slash = s.find('/');
    const std::string num = s.substr(0, slash);
    const std::string den = slash == std::string::npos ? "1" : s.substr(slash + 1);
    if (!valid(num) || !valid(den) || den[0] == '-') throw SpecError("malformed rational literal '" + std::string(text) + "'");
    Rational r{Integer(num), Integer(den)};
    if (r.get_den() == 0) throw SpecError("zero denominator in '" + std::string(text) + "'");
    r.canonicalize();
    return r;
}

CycloScalar CycloScalar::parse(const FieldSpec& field, std::string_view text) {
    std::string s;
    for (char c : text) {
        if (!std::isspace(static_cast<unsigned char>(c))) s.push_back(c);
    }
    if (s.empty()) throw SpecError("empty scalar literal");

    // Split into signed terms at top-level '+'/'-' that do not follow '^' or '/'.
    std::vector<std::string> terms;
    std::string current;
    for (std::size_t i = 0; i < s.size(); ++i) {
        const char c = s[i];
        const bool sign = (c == '+' || c == '-') && i > 0 && s[i - 1] != '^' && s[i - 1] != '/' && s[i - 1] != '*';
        if (sign && !current.empty()) {
            terms.push_back(current);
            current.clear();
        }
        current.push_back(c);
    }
    terms.push_back(current);

    std::vector<Rational> poly;
    for (std::string term : terms) {
        bool negative = false;
        while (!term.empty() && (term[0] == '+' || term[0] == '-')) {
            negative ^= term[0] == '-';
            term.erase(0, 1);
        }
        if (term.empty()) throw SpecError("malformed scalar literal '" + std::string(text) + "'");
        Rational coeff(1);
        std::size_t exponent = 0;
        const auto zpos = term.find('z');
        if (zpos == std::string::npos) {
            coeff = parse_rational(term);
        } else {
            std::string head = term.substr(0, zpos);
            std::string tail = term.substr(zpos + 1);
            if (!head.empty()) {
                if (head.back() != '*') throw SpecError("expected '*' before z in '" + std::string(text) + "'");
                head.pop_back();
                coeff = parse_rational(head);
            }
            exponent = 1;
            if (!tail.empty()) {
                if (tail[0] != '^' || tail.size() < 2 ||
                    !std::all_of(tail.begin() + 1, tail.end(), [](char c) { return std::isdigit(static_cast<unsigned char>(c)); })) {
                    throw SpecError("malformed power of z in '" + std::string(text) + "'");
                }
                exponent = std::stoul(tail.substr(1));
            }
            if (field.conductor() == 1 && exponent > 0) {
                // zeta_1 = 1
                exponent = 0;
            }
        }
        if (negative) coeff = -coeff;
        exponent %= field.conductor();
        if (poly.size() <= exponent) poly.resize(exponent + 1, Rational(0));
        poly[exponent] += coeff;
    }
    return from_polynomial(field, poly);
}

std::string CycloScalar::to_string() const {
    if (coeffs_.size() == 1) return coeffs_[0].get_str();
    std::string out;
    for (std::size_t i = 0; i < coeffs_.size(); ++i) {
        const Rational& c = coeffs_[i];
        if (c == 0) continue;
        const bool negative = c < 0;
        const Rational mag = negative ? Rational(-c) : c;
        if (out.empty()) {
            if (negative) out += "-";
        } else {
            out += negative ? " - " : " + ";
        }
        if (i == 0) {
            out += mag.get_str();
            continue;
        }
        if (mag != 1) out += mag.get_str() + "*";
        out += "z";
        if (i > 1) out += "^" + std::to_string(i);
    }
    return out.empty() ? "0" : out;
}

}  // namespace vnlab
