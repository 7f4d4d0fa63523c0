#include "ncsym/text_io.hpp"

#include <algorithm>
#include <cctype>

namespace ncsym {

namespace {

// Cursor over an element expression; all errors carry the current offset.
struct Scanner {
    std::string_view s;
    std::size_t pos = 0;

    bool done() const { return pos >= s.size(); }
    char peek() const { return done() ? '\0' : s[pos]; }
    void skip_ws() {
        while (!done() && std::isspace(static_cast<unsigned char>(s[pos]))) ++pos;
    }
    bool consume(char c) {
        if (peek() != c) return false;
        ++pos;
        return true;
    }
    void expect(char c) {
        if (!consume(c)) fail(std::string("expected '") + c + "'");
    }
    [[noreturn]] void fail(const std::string& msg) const { throw ParseError(msg, pos); }

    long long parse_uint() {
        if (!std::isdigit(static_cast<unsigned char>(peek()))) fail("expected a digit");
        long long v = 0;
        while (std::isdigit(static_cast<unsigned char>(peek()))) {
            v = v * 10 + (s[pos] - '0');
            if (v > 1'000'000'000) fail("number too large");
            ++pos;
        }
        return v;
    }

    Rational parse_rational_body() {
        Integer num(parse_uint());
        if (consume('/')) {
            Integer den(parse_uint());
            if (den == 0) fail("zero denominator");
            return Rational(num, den);
        }
        return Rational(num);
    }

    // Comma-separated nonnegative integers up to (not consuming) the closer.
    std::vector<int> parse_int_list(char closer) {
        std::vector<int> out;
        skip_ws();
        if (peek() == closer) return out;
        for (;;) {
            skip_ws();
            out.push_back(static_cast<int>(parse_uint()));
            skip_ws();
            if (!consume(',')) return out;
        }
    }
};

} // namespace

std::string to_text(const Rational& q) { return q.str(); }

Rational parse_rational(std::string_view s) {
    Scanner sc{s};
    sc.skip_ws();
    const bool neg = sc.consume('-');
    sc.skip_ws();
    Rational q = sc.parse_rational_body();
    sc.skip_ws();
    if (!sc.done()) sc.fail("unexpected trailing input");
    return neg ? -q : q;
}

std::string to_text(const SetPartition& a) {
    const bool commas = a.size() >= 10;
    std::string out;
    for (int b = 0; b < a.num_blocks(); ++b) {
        if (b > 0) out += '|';
        const auto& blk = a.blocks()[b];
        for (std::size_t i = 0; i < blk.size(); ++i) {
            if (commas && i > 0) out += ',';
            out += std::to_string(blk[i]);
        }
    }
    return out;
}

namespace {

SetPartition parse_set_partition_at(Scanner& sc, char terminator) {
    std::vector<std::vector<int>> blocks;
    std::vector<int> blk;
    bool comma_block = false;
    const std::size_t start = sc.pos;
    auto flush = [&](bool final_block) {
        if (blk.empty()) {
            if (final_block && blocks.empty()) return; // empty partition
            sc.fail("empty block");
        }
        blocks.push_back(std::move(blk));
        blk.clear();
        comma_block = false;
    };
    for (;;) {
        const char c = sc.peek();
        if (c == terminator || sc.done()) {
            flush(true);
            break;
        }
        if (c == '|') {
            flush(false);
            ++sc.pos;
        } else if (c == ',') {
            if (blk.empty()) sc.fail("expected an element before ','");
            comma_block = true;
            ++sc.pos;
            blk.push_back(static_cast<int>(sc.parse_uint()));
        } else if (std::isdigit(static_cast<unsigned char>(c))) {
            if (blk.empty() || !comma_block) {
                blk.push_back(c - '0'); // digit-juxtaposition form
                ++sc.pos;
            } else {
                sc.fail("expected ',' or '|'");
            }
        } else {
            sc.fail("unexpected character in set partition");
        }
    }
    try {
        return SetPartition::from_blocks(std::move(blocks));
    } catch (const std::invalid_argument& e) {
        throw ParseError(e.what(), start);
    }
}

} // namespace

SetPartition parse_set_partition(std::string_view s) {
    Scanner sc{s};
    SetPartition a = parse_set_partition_at(sc, '\0');
    if (!sc.done()) sc.fail("unexpected trailing input");
    return a;
}

std::string to_text(const Composition& alpha) {
    std::string out = "(";
    for (int i = 0; i < alpha.length(); ++i) {
        if (i > 0) out += ',';
        out += std::to_string(alpha.parts()[i]);
    }
    return out + ")";
}

Composition parse_composition(std::string_view s) {
    Scanner sc{s};
    sc.skip_ws();
    sc.expect('(');
    std::vector<int> parts = sc.parse_int_list(')');
    sc.expect(')');
    sc.skip_ws();
    if (!sc.done()) sc.fail("unexpected trailing input");
    try {
        return Composition(std::move(parts));
    } catch (const std::invalid_argument& e) {
        throw ParseError(e.what(), 0);
    }
}

std::string to_text(const IntegerPartition& lambda) {
    std::string out = "[";
    for (int i = 0; i < lambda.length(); ++i) {
        if (i > 0) out += ',';
        out += std::to_string(lambda.parts()[i]);
    }
    return out + "]";
}

IntegerPartition parse_partition(std::string_view s) {
    Scanner sc{s};
    sc.skip_ws();
    sc.expect('[');
    std::vector<int> parts = sc.parse_int_list(']');
    sc.expect(']');
    sc.skip_ws();
    if (!sc.done()) sc.fail("unexpected trailing input");
    try {
        return IntegerPartition(std::move(parts));
    } catch (const std::invalid_argument& e) {
        throw ParseError(e.what(), 0);
    }
}

std::string to_text(const Word& w) {
    std::string out;
    for (std::size_t i = 0; i < w.size(); ++i) {
        if (i > 0) out += '.';
        out += 'x';
        out += std::to_string(w[i]);
    }
    return out;
}

Word parse_word(std::string_view s) {
    Scanner sc{s};
    sc.skip_ws();
    Word w;
    if (sc.done()) return w;
    for (;;) {
        if (!sc.consume('x')) sc.fail("expected 'x'");
        const int letter = static_cast<int>(sc.parse_uint());
        if (letter < 1) sc.fail("letters are numbered from 1");
        w.push_back(letter);
        sc.skip_ws();
        if (!sc.consume('.')) break;
        sc.skip_ws();
    }
    if (!sc.done()) sc.fail("unexpected trailing input");
    return w;
}

namespace {

template <class K, class TermPrinter>
std::string print_linear(const LinComb<K>& x, TermPrinter term) {
    if (x.is_zero()) return "0";
    std::string out;
    bool first = true;
    for (const auto& [k, c] : x.terms()) {
        const bool neg = c < 0;
        const Rational mag = neg ? Rational(-c) : c;
        const std::string t = term(k);
        std::string body;
        if (t == "1")
            body = to_text(mag);
        else if (mag == 1)
            body = t;
        else
            body = to_text(mag) + "*" + t;
        if (first) {
            out = neg ? "-" + body : body;
            first = false;
        } else {
            out += (neg ? " - " : " + ") + body;
        }
    }
    return out;
}

std::string ncsym_term(const SetPartition& a) {
    return a.size() == 0 ? "1" : "m{" + to_text(a) + "}";
}
std::string nsym_term(const Composition& a) {
    return a.length() == 0 ? "1" : "h" + to_text(a);
}
std::string sym_term(const IntegerPartition& a) {
    return a.length() == 0 ? "1" : "m" + to_text(a);
}
std::string word_term(const Word& w) { return w.empty() ? "1" : to_text(w); }

template <class F1, class F2>
auto tensor_term(F1 left, F2 right) {
    return [left, right](const auto& key) { return left(key.first) + "⊗" + right(key.second); };
}

} // namespace

std::string to_text(const NCSymElem& x) { return print_linear(x, ncsym_term); }
std::string to_text(const NCSymTensor& x) {
    return print_linear(x, tensor_term(ncsym_term, ncsym_term));
}
std::string to_text(const NSymElem& x) { return print_linear(x, nsym_term); }
std::string to_text(const NSymTensor& x) {
    return print_linear(x, tensor_term(nsym_term, nsym_term));
}
std::string to_text(const SymElem& x) { return print_linear(x, sym_term); }
std::string to_text(const SymTensor& x) {
    return print_linear(x, tensor_term(sym_term, sym_term));
}
std::string to_text(const WordPoly& p) { return print_linear(p, word_term); }

namespace {

// Shared sum-of-terms driver: BasisParser consumes one basis term at the
// cursor (or reports that none starts here) and returns it as an element.
template <class Elem, class BasisParser>
Elem parse_element(std::string_view s, BasisParser basis) {
    Scanner sc{s};
    Elem out;
    sc.skip_ws();
    bool first = true;
    for (;;) {
        Rational sign = 1;
        sc.skip_ws();
        if (sc.consume('-'))
            sign = -1;
        else if (!first)
            sc.expect('+');
        else
            sc.consume('+');
        sc.skip_ws();
        Rational coeff = sign;
        bool have_coeff = false;
        if (std::isdigit(static_cast<unsigned char>(sc.peek()))) {
            coeff *= sc.parse_rational_body();
            have_coeff = true;
            sc.skip_ws();
            if (sc.consume('*')) {
                sc.skip_ws();
                have_coeff = false; // a basis term must follow
            } else {
                out += coeff * Elem(typename Elem::Terms::key_type{});
            }
        }
        if (!have_coeff) {
            Elem term = basis(sc);
            term *= coeff;
            out += term;
        }
        sc.skip_ws();
        if (sc.done()) return out;
        if (sc.peek() != '+' && sc.peek() != '-') sc.fail("expected '+', '-', or end of input");
        first = false;
    }
}

} // namespace

NCSymElem parse_ncsym(std::string_view s) {
    return parse_element<NCSymElem>(s, [](Scanner& sc) {
        if (!sc.consume('m')) sc.fail("expected 'm'");
        sc.expect('{');
        SetPartition a = parse_set_partition_at(sc, '}');
        sc.expect('}');
        return NCSymElem(a);
    });
}

NSymElem parse_nsym(std::string_view s) {
    return parse_element<NSymElem>(s, [](Scanner& sc) {
        const char basis = sc.peek();
        if (basis != 'h' && basis != 'R') sc.fail("expected 'h' or 'R'");
        ++sc.pos;
        sc.expect('(');
        std::vector<int> parts = sc.parse_int_list(')');
        sc.expect(')');
        Composition alpha;
        try {
            alpha = Composition(std::move(parts));
        } catch (const std::invalid_argument& e) {
            throw ParseError(e.what(), sc.pos);
        }
        return basis == 'h' ? NSymElem(alpha) : ribbon_to_h(alpha);
    });
}

SymElem parse_sym(std::string_view s) {
    return parse_element<SymElem>(s, [](Scanner& sc) {
        const char basis = sc.peek();
        if (basis != 'm' && basis != 'h') sc.fail("expected 'm' or 'h'");
        ++sc.pos;
        sc.expect('[');
        std::vector<int> parts = sc.parse_int_list(']');
        sc.expect(']');
        IntegerPartition lambda;
        try {
            lambda = IntegerPartition(std::move(parts));
        } catch (const std::invalid_argument& e) {
            throw ParseError(e.what(), sc.pos);
        }
        return basis == 'm' ? SymElem(lambda) : sym_h_to_m(lambda);
    });
}

namespace {

nlohmann::json int_array(const std::vector<int>& v) { return nlohmann::json(v); }

template <class K, class KeyWriter>
nlohmann::json json_terms(const LinComb<K>& x, KeyWriter write) {
    nlohmann::json out = nlohmann::json::array();
    for (const auto& [k, c] : x.terms()) {
        nlohmann::json rec;
        rec["coeff"] = to_text(c);
        write(rec, k);
        out.push_back(std::move(rec));
    }
    return out;
}

} // namespace

nlohmann::json json_of(const NCSymElem& x) {
    return json_terms(x, [](nlohmann::json& rec, const SetPartition& a) {
        rec["partition"] = to_text(a);
    });
}

nlohmann::json json_of(const NCSymTensor& x) {
    return json_terms(x, [](nlohmann::json& rec, const auto& k) {
        rec["left"] = to_text(k.first);
        rec["right"] = to_text(k.second);
    });
}

nlohmann::json json_of(const NSymElem& x) {
    return json_terms(x, [](nlohmann::json& rec, const Composition& a) {
        rec["composition"] = int_array(a.parts());
    });
}

nlohmann::json json_of(const NSymTensor& x) {
    return json_terms(x, [](nlohmann::json& rec, const auto& k) {
        rec["left"] = int_array(k.first.parts());
        rec["right"] = int_array(k.second.parts());
    });
}

nlohmann::json json_of(const SymElem& x) {
    return json_terms(x, [](nlohmann::json& rec, const IntegerPartition& a) {
        rec["partition"] = int_array(a.parts());
    });
}

nlohmann::json json_of(const SymTensor& x) {
    return json_terms(x, [](nlohmann::json& rec, const auto& k) {
        rec["left"] = int_array(k.first.parts());
        rec["right"] = int_array(k.second.parts());
    });
}

nlohmann::json json_of(const WordPoly& p) {
    return json_terms(p, [](nlohmann::json& rec, const Word& w) { rec["word"] = int_array(w); });
}

nlohmann::json json_of(const Matrix<Integer>& m) {
    nlohmann::json rows = nlohmann::json::array();
    for (int i = 0; i < m.rows(); ++i) {
        nlohmann::json row = nlohmann::json::array();
        for (int j = 0; j < m.cols(); ++j) row.push_back(m(i, j).str());
        rows.push_back(std::move(row));
    }
    return rows;
}

nlohmann::json json_of(const PowerSeries& s) {
    nlohmann::json out = nlohmann::json::array();
    for (const Integer& c : s.coeffs()) out.push_back(c.str());
    return out;
}

NCSymElem ncsym_from_json(const nlohmann::json& j) {
    NCSymElem out;
    for (const auto& rec : j)
        out.add_term(parse_set_partition(rec.at("partition").get<std::string>()),
                     parse_rational(rec.at("coeff").get<std::string>()));
    return out;
}

NSymElem nsym_from_json(const nlohmann::json& j) {
    NSymElem out;
    for (const auto& rec : j)
        out.add_term(Composition(rec.at("composition").get<std::vector<int>>()),
                     parse_rational(rec.at("coeff").get<std::string>()));
    return out;
}

SymElem sym_from_json(const nlohmann::json& j) {
    SymElem out;
    for (const auto& rec : j)
        out.add_term(IntegerPartition(rec.at("partition").get<std::vector<int>>()),
                     parse_rational(rec.at("coeff").get<std::string>()));
    return out;
}

} // namespace ncsym
