#include "varkit/vdformat.hpp"

#include <cctype>
#include <fstream>
#include <map>
#include <sstream>

namespace varkit {

namespace {

bool name_start(char c) { return std::isalpha(static_cast<unsigned char>(c)); }
bool name_char(char c) {
    return std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '\'' || c == '~';
}

/// Cursor over one logical line; all errors carry (line, column).
class LineScanner {
public:
    LineScanner(std::string text, std::size_t line_no)
        : text_(std::move(text)), line_(line_no) {}

    [[noreturn]] void fail(const std::string& message) const {
        throw ParseError(line_, pos_ + 1, message);
    }

    void skip_ws() {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_])))
            ++pos_;
    }

    bool at_end() {
        skip_ws();
        return pos_ >= text_.size();
    }

    char peek() const { return pos_ < text_.size() ? text_[pos_] : '\0'; }

    void expect(char c) {
        if (peek() != c)
            fail(std::string("expected '") + c + "'");
        ++pos_;
    }

    bool consume(char c) {
        if (peek() == c) {
            ++pos_;
            return true;
        }
        return false;
    }

    std::string identifier(const char* what) {
        skip_ws();
        if (pos_ >= text_.size() || !name_start(text_[pos_]))
            fail(std::string("expected ") + what);
        std::size_t start = pos_;
        while (pos_ < text_.size() && name_char(text_[pos_]))
            ++pos_;
        return text_.substr(start, pos_ - start);
    }

    Integer integer() {
        skip_ws();
        std::size_t start = pos_;
        if (pos_ < text_.size() && (text_[pos_] == '-' || text_[pos_] == '+'))
            ++pos_;
        std::size_t digits = pos_;
        while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_])))
            ++pos_;
        if (pos_ == digits)
            fail("expected an integer");
        return Integer(text_.substr(start, pos_ - start));
    }

    std::size_t count(const char* what) {
        Integer v = integer();
        if (v < 0 || !v.fits_ulong_p())
            fail(std::string(what) + " out of range");
        return static_cast<std::size_t>(v.get_ui());
    }

    /// "(a,b,...)" of fixed width.
    std::vector<Integer> tuple(std::size_t width) {
        skip_ws();
        expect('(');
        std::vector<Integer> out;
        if (!consume(')')) {
            out.push_back(integer());
            while (consume(','))
                out.push_back(integer());
            expect(')');
        }
        if (out.size() != width)
            fail("expected a tuple of " + std::to_string(width) + " coefficients, got " +
                 std::to_string(out.size()));
        return out;
    }

    /// "[(...),(...),...]", possibly empty "[]".
    std::vector<std::vector<Integer>> tuple_list(std::size_t width) {
        skip_ws();
        expect('[');
        std::vector<std::vector<Integer>> out;
        if (!consume(']')) {
            out.push_back(tuple(width));
            while (consume(','))
                out.push_back(tuple(width));
            expect(']');
        }
        return out;
    }

    /// Optional trailing "gen=NAME"; `fallback` otherwise.
    std::string optional_gen(const std::string& fallback) {
        skip_ws();
        if (text_.compare(pos_, 4, "gen=") == 0) {
            pos_ += 4;
            return identifier("generator name after gen=");
        }
        return fallback;
    }

    void expect_keyword(const std::string& kw) {
        std::string got = identifier(("keyword '" + kw + "'").c_str());
        if (got != kw)
            fail("expected keyword '" + kw + "', got '" + got + "'");
    }

    void expect_key(const char* key) {
        skip_ws();
        std::string k = std::string(key) + "=";
        if (text_.compare(pos_, k.size(), k) != 0)
            fail("expected '" + k + "...'");
        pos_ += k.size();
    }

    std::size_t line_number() const { return line_; }

private:
    std::string text_;
    std::size_t line_;
    std::size_t pos_ = 0;
};

class DocumentParser {
public:
    explicit DocumentParser(const std::string& text) : text_(text) {}

    VarietyDocument run() {
        std::istringstream in(text_);
        std::string raw;
        std::size_t line_no = 0;
        while (std::getline(in, raw)) {
            ++line_no;
            if (auto hash = raw.find('#'); hash != std::string::npos)
                raw.erase(hash);
            bool blank = true;
            for (char c : raw)
                if (!std::isspace(static_cast<unsigned char>(c)))
                    blank = false;
            if (blank)
                continue;
            parse_definition(LineScanner(raw, line_no));
        }
        if (doc_.definitions.empty())
            throw ParseError(line_no + 1, 1, "the file defines no variety");
        doc_.result_name = doc_.definitions.back().first;
        doc_.result = doc_.definitions.back().second;
        return std::move(doc_);
    }

private:
    void parse_definition(LineScanner s) {
        std::string name = s.identifier("a definition name");
        if (lookup_.count(name))
            s.fail("'" + name + "' is already defined");
        s.skip_ws();
        s.expect('=');
        std::string ctor = s.identifier("a constructor keyword");
        VarietyPtr v;
        try {
            v = build(ctor, s);
        } catch (const ParseError&) {
            throw;
        } catch (const std::exception& e) {
            // Constructor invariant violations surface with the line number.
            throw ParseError(s.line_number(), 1, std::string("validation: ") + e.what());
        }
        if (!s.at_end())
            s.fail("trailing input after definition");
        lookup_[name] = v;
        doc_.definitions.emplace_back(std::move(name), std::move(v));
    }

    VarietyPtr ref(LineScanner& s, const char* what) {
        std::string name = s.identifier(what);
        auto it = lookup_.find(name);
        if (it == lookup_.end())
            s.fail("'" + name + "' is not defined");
        return it->second;
    }

    FormalBundle parse_bundle(LineScanner& s, const VarietyPtr& ambient) {
        s.expect_key("bundle");
        const auto lat = ambient->lattice();
        s.skip_ws();
        if (s.peek() == '[') {
            auto tuples = s.tuple_list(lat->rank());
            std::vector<DivisorClass> summands;
            summands.reserve(tuples.size());
            for (auto& t : tuples)
                summands.emplace_back(lat, std::move(t));
            return FormalBundle::split(std::move(summands), lat);
        }
        std::size_t rank = s.count("bundle rank");
        s.expect(':');
        return FormalBundle::formal(rank, DivisorClass(lat, s.tuple(lat->rank())));
    }

    VarietyPtr build(const std::string& ctor, LineScanner& s) {
        if (ctor == "projective") {
            std::size_t n = s.count("projective-space dimension");
            return VarietyExpr::projective_space(n, s.optional_gen("h"));
        }
        if (ctor == "grassmannian") {
            std::size_t k = s.count("grassmannian parameter");
            std::size_t n = s.count("grassmannian parameter");
            if (k != 2 || n != 4)
                s.fail("only grassmannian 2 4 is supported");
            return VarietyExpr::grassmannian24(s.optional_gen("s1"));
        }
        if (ctor == "atomic") {
            std::string kind = s.identifier("an atomic variety name");
            if (kind == "enriques")
                return VarietyExpr::enriques();
            if (kind == "k3")
                return VarietyExpr::k3();
            if (kind == "point")
                return VarietyExpr::point();
            s.fail("unknown atomic variety '" + kind + "' (enriques, k3, point)");
        }
        if (ctor == "product") {
            auto left = ref(s, "the left factor");
            auto right = ref(s, "the right factor");
            return VarietyExpr::product(std::move(left), std::move(right));
        }
        if (ctor == "projbundle") {
            auto base = ref(s, "the base variety");
            auto tuples = s.tuple_list(base->lattice()->rank());
            std::vector<DivisorClass> summands;
            for (auto& t : tuples)
                summands.emplace_back(base->lattice(), std::move(t));
            std::string H = s.identifier("the relative class name");
            return VarietyExpr::proj_bundle(std::move(base),
                                            FormalBundle::split(std::move(summands),
                                                                base->lattice()),
                                            std::move(H));
        }
        if (ctor == "blowup") {
            auto ambient = ref(s, "the ambient variety");
            auto center = ref(s, "the center variety");
            s.expect_key("codim");
            std::size_t codim = s.count("codimension");
            std::string E = s.identifier("the exceptional divisor name");
            return VarietyExpr::blow_up(std::move(ambient), std::move(center), codim,
                                        std::move(E));
        }
        if (ctor == "zerolocus") {
            auto ambient = ref(s, "the ambient variety");
            FormalBundle bundle = parse_bundle(s, ambient);
            return VarietyExpr::zero_locus(std::move(ambient), std::move(bundle));
        }
        if (ctor == "universal") {
            auto base = ref(s, "the base variety");
            s.expect_key("w");
            std::size_t w = s.count("linear system dimension");
            s.expect_key("jump");
            auto jump = ref(s, "the jump locus");
            return VarietyExpr::universal_divisor(std::move(base), w, std::move(jump),
                                                  s.optional_gen("H'"));
        }
        if (ctor == "identify") {
            std::vector<VarietyPtr> models;
            models.push_back(ref(s, "a model"));
            while (!s.at_end())
                models.push_back(ref(s, "a model"));
            return VarietyExpr::identified(std::move(models));
        }
        s.fail("unknown constructor '" + ctor + "'");
    }

    const std::string& text_;
    VarietyDocument doc_;
    std::map<std::string, VarietyPtr> lookup_;
};

}  // namespace

VarietyPtr VarietyDocument::find(const std::string& name) const {
    for (const auto& [n, v] : definitions)
        if (n == name)
            return v;
    return nullptr;
}

VarietyDocument parse_variety_document(const std::string& text) {
    return DocumentParser(text).run();
}

VarietyDocument load_variety_document(const std::string& path) {
    std::ifstream in(path);
    if (!in)
        throw std::runtime_error("cannot open '" + path + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_variety_document(buf.str());
}

DivisorClass parse_divisor_class(const std::string& text, const PicardLattice::Ptr& lattice) {
    DivisorClass out = DivisorClass::zero(lattice);
    std::size_t pos = 0;
    auto skip_ws = [&] {
        while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos])))
            ++pos;
    };
    bool first = true;
    skip_ws();
    if (pos >= text.size())
        throw std::invalid_argument("empty divisor class");
    while (true) {
        skip_ws();
        if (pos >= text.size())
            break;
        int sign = 1;
        if (text[pos] == '+' || text[pos] == '-') {
            sign = text[pos] == '-' ? -1 : 1;
            ++pos;
        } else if (!first) {
            throw std::invalid_argument("expected '+' or '-' before the next term");
        }
        skip_ws();
        Integer mag = 1;
        bool has_digits = false;
        if (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) {
            std::size_t start = pos;
            while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos])))
                ++pos;
            mag = Integer(text.substr(start, pos - start));
            has_digits = true;
        }
        skip_ws();
        if (pos < text.size() && name_start(text[pos])) {
            std::size_t start = pos;
            while (pos < text.size() && name_char(text[pos]))
                ++pos;
            std::string gen = text.substr(start, pos - start);
            out = out + DivisorClass::generator(lattice, gen) * (mag * sign);
        } else if (has_digits && mag == 0) {
            // a bare 0 term contributes nothing
        } else {
            throw std::invalid_argument("expected a generator name in divisor class '" + text +
                                        "'");
        }
        first = false;
    }
    return out;
}

}  // namespace varkit
