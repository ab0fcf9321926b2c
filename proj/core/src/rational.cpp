#include "tropsand/rational.hpp"

#include <cctype>

#include "tropsand/errors.hpp"

namespace tropsand {

void Rational::canonicalize_checked() {
    if (mpz_sgn(mpq_denref(v_.get_mpq_t())) == 0)
        throw InputError("rational with zero denominator");
    v_.canonicalize();
}

Rational& Rational::operator/=(const Rational& o) {
    if (o.is_zero()) throw InputError("rational division by zero");
    v_ /= o.v_;
    return *this;
}

std::optional<Rational> Rational::parse(std::string_view text) {
    if (text.empty()) return std::nullopt;
    // mpq_class accepts whitespace and decimal-looking strings in some bases;
    // validate the shape ourselves: [-]digits[/digits].
    size_t pos = 0;
    auto digits = [&](size_t start) {
        size_t p = start;
        while (p < text.size() && std::isdigit(static_cast<unsigned char>(text[p]))) ++p;
        return p;
    };
    if (text[pos] == '-' || text[pos] == '+') ++pos;
    size_t num_end = digits(pos);
    if (num_end == pos) return std::nullopt;
    if (num_end == text.size()) {
        return Rational(mpq_class(std::string(text), 10));
    }
    if (text[num_end] != '/') return std::nullopt;
    size_t den_start = num_end + 1;
    size_t den_end = digits(den_start);
    if (den_end == den_start || den_end != text.size()) return std::nullopt;
    mpq_class v(std::string(text), 10);
    if (mpz_sgn(mpq_denref(v.get_mpq_t())) == 0) return std::nullopt;
    v.canonicalize();
    return Rational(std::move(v));
}

std::string Rational::to_fraction_string() const {
    return v_.get_num().get_str() + "/" + v_.get_den().get_str();
}

std::string Rational::to_string() const {
    if (v_.get_den() == 1) return v_.get_num().get_str();
    return to_fraction_string();
}

long Rational::ceil_long() const {
    mpz_class q;
    mpz_cdiv_q(q.get_mpz_t(), v_.get_num().get_mpz_t(), v_.get_den().get_mpz_t());
    if (!q.fits_slong_p()) throw InternalError("ceil_long: value out of range");
    return q.get_si();
}

Rational RPoint::boundary_distance() const {
    Rational d = min(x, y);
    d = min(d, Rational(1) - x);
    return min(d, Rational(1) - y);
}

std::optional<RPoint> parse_point(std::string_view text) {
    size_t comma = text.find(',');
    if (comma == std::string_view::npos) return std::nullopt;
    auto px = Rational::parse(text.substr(0, comma));
    auto py = Rational::parse(text.substr(comma + 1));
    if (!px || !py) return std::nullopt;
    return RPoint{*px, *py};
}

} // namespace tropsand
