#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>

#include <json.hpp>

#include "ncsym/classical.hpp"
#include "ncsym/matrix.hpp"
#include "ncsym/ncsym_hopf.hpp"
#include "ncsym/series.hpp"
#include "ncsym/words.hpp"

namespace ncsym {

// Parse failure carrying the byte offset at which scanning stopped.
class ParseError : public std::runtime_error {
public:
    ParseError(const std::string& what, std::size_t position)
        : std::runtime_error(what + " (at position " + std::to_string(position) + ")"),
          position_(position) {}
    std::size_t position() const { return position_; }

private:
    std::size_t position_;
};

// Exact rational as "p" or "p/q"; never scientific notation.
std::string to_text(const Rational& q);
Rational parse_rational(std::string_view s);

// Set partition: blocks joined by "|". Elements are concatenated digits when
// every element is below 10 and comma-separated otherwise; the parser takes
// either form per block. "" is the empty partition.
std::string to_text(const SetPartition& a);
SetPartition parse_set_partition(std::string_view s);

// Composition "(2,1,3,2)"; the empty composition is "()".
std::string to_text(const Composition& alpha);
Composition parse_composition(std::string_view s);

// Integer partition "[3,1,1]"; the empty partition is "[]".
std::string to_text(const IntegerPartition& lambda);
IntegerPartition parse_partition(std::string_view s);

// Word "x1.x2.x1"; the empty word is "".
std::string to_text(const Word& w);
Word parse_word(std::string_view s);

// Linear combinations print as sign-joined sums of "coeff*term" with the
// coefficient dropped when it is 1, "m{12|3}" / "h(2,1)" / "R via h" /
// "m[3,1]" / "x1.x2" as term forms, "1" for the unit, and "0" for zero.
// Tensor factors are joined by "⊗".
std::string to_text(const NCSymElem& x);
std::string to_text(const NCSymTensor& x);
std::string to_text(const NSymElem& x);
std::string to_text(const NSymTensor& x);
std::string to_text(const SymElem& x);
std::string to_text(const SymTensor& x);
std::string to_text(const WordPoly& p);

// Element expression parsers: sums of optionally signed and scaled basis
// terms, e.g. "m{12} - 2*m{1|2}", "h(2,1) + R(3)", "3/2*m[2,1] + 1".
// Ribbon terms are converted into the h basis, Sym h terms into the m basis.
NCSymElem parse_ncsym(std::string_view s);
NSymElem parse_nsym(std::string_view s);
SymElem parse_sym(std::string_view s);

// JSON forms. Coefficients and matrix entries are exact decimal strings.
// NCSym: [{"coeff","partition"}], tensors [{"coeff","left","right"}];
// NSym: [{"coeff","composition"}] with composition as an int array;
// Sym: [{"coeff","partition"}] with partition as an int array;
// words: [{"coeff","word"}] with the word as an int array.
nlohmann::json json_of(const NCSymElem& x);
nlohmann::json json_of(const NCSymTensor& x);
nlohmann::json json_of(const NSymElem& x);
nlohmann::json json_of(const NSymTensor& x);
nlohmann::json json_of(const SymElem& x);
nlohmann::json json_of(const SymTensor& x);
nlohmann::json json_of(const WordPoly& p);
nlohmann::json json_of(const Matrix<Integer>& m);
nlohmann::json json_of(const PowerSeries& s);

NCSymElem ncsym_from_json(const nlohmann::json& j);
NSymElem nsym_from_json(const nlohmann::json& j);
SymElem sym_from_json(const nlohmann::json& j);

} // namespace ncsym
