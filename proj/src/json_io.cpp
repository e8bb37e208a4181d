#include "zorbit/json_io.hpp"

#include <cctype>

namespace zorbit {

namespace {

bool canonical_integer(const std::string& s, bool allow_sign) {
    std::size_t i = 0;
    if (allow_sign && !s.empty() && s[0] == '-') i = 1;
    if (i >= s.size()) return false;
    for (std::size_t k = i; k < s.size(); ++k)
        if (!std::isdigit(static_cast<unsigned char>(s[k]))) return false;
    if (s[i] == '0' && (s.size() - i > 1 || i == 1)) return false;
    return true;
}

}  // namespace

mpq_class parse_rational(const std::string& s) {
    auto slash = s.find('/');
    std::string num = s.substr(0, slash);
    if (!canonical_integer(num, true)) throw std::invalid_argument("non-canonical rational: \"" + s + "\"");
    if (slash == std::string::npos) return mpq_class(mpz_class(num));
    std::string den = s.substr(slash + 1);
    if (!canonical_integer(den, false) || den == "1") throw std::invalid_argument("non-canonical rational: \"" + s + "\"");
    mpz_class n(num), d(den);
    if (d == 0 || n == 0 || gcd(n, d) != 1) throw std::invalid_argument("non-canonical rational: \"" + s + "\"");
    return mpq_class(n, d);
}

json to_json(const Scalar& s) {
    if (s.field().is_rational()) return s.rational().get_str();
    return s.residue();
}

json to_json(const Matrix& m) {
    json rows = json::array();
    for (std::size_t i = 0; i < m.rows(); ++i) {
        json row = json::array();
        for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(to_json(m(i, j)));
        rows.push_back(row);
    }
    return rows;
}

Scalar scalar_from_json(const json& j, Field f) {
    if (f.is_rational()) {
        if (j.is_string()) return Scalar(parse_rational(j.get<std::string>()));
        if (j.is_number_integer()) return Scalar(j.get<long>(), f);
        throw std::invalid_argument("rational entries must be strings \"a/b\"");
    }
    if (!j.is_number_unsigned() || j.get<std::uint64_t>() >= f.characteristic())
        throw std::invalid_argument("entries over " + f.name() + " must be integers in [0, p)");
    return Scalar(static_cast<long>(j.get<std::uint64_t>()), f);
}

Matrix matrix_from_json(const json& j, Field f) {
    if (!j.is_array() || j.empty() || !j[0].is_array()) throw std::invalid_argument("matrix must be a non-empty array of rows");
    std::size_t c = j[0].size();
    Matrix m(j.size(), c, f);
    for (std::size_t i = 0; i < j.size(); ++i) {
        if (!j[i].is_array() || j[i].size() != c) throw ShapeError("ragged matrix rows");
        for (std::size_t k = 0; k < c; ++k) m.set(i, k, scalar_from_json(j[i][k], f));
    }
    return m;
}

}  // namespace zorbit
