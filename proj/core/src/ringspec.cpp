#include "ringlab/ringspec.hpp"

#include <cctype>

namespace ringlab {

namespace {

class Parser {
public:
    explicit Parser(const std::string& text) : s_(text) {}

    RingSpec parse() {
        RingSpec r = ring();
        skip_ws();
        if (pos_ != s_.size()) fail("trailing input");
        return r;
    }

private:
    const std::string& s_;
    std::size_t pos_ = 0;

    [[noreturn]] void fail(const std::string& msg) { throw ParseError(msg, pos_); }

    void skip_ws() {
        while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    }

    bool accept(char c) {
        skip_ws();
        if (pos_ < s_.size() && s_[pos_] == c) { ++pos_; return true; }
        return false;
    }

    void expect(char c) {
        if (!accept(c)) fail(std::string("expected '") + c + "'");
    }

    std::string ident() {
        skip_ws();
        std::size_t start = pos_;
        while (pos_ < s_.size() && std::isalpha(static_cast<unsigned char>(s_[pos_]))) ++pos_;
        if (pos_ == start) fail("expected identifier");
        return s_.substr(start, pos_ - start);
    }

    long long nat() {
        skip_ws();
        bool negative = false;
        if (pos_ < s_.size() && s_[pos_] == '-') { negative = true; ++pos_; }
        std::size_t start = pos_;
        while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
        if (pos_ == start) fail("expected integer");
        long long v = std::stoll(s_.substr(start, pos_ - start));
        return negative ? -v : v;
    }

    std::vector<long long> int_list() {
        expect('[');
        std::vector<long long> out;
        out.push_back(nat());
        while (accept(',')) out.push_back(nat());
        expect(']');
        return out;
    }

    std::vector<std::vector<long long>> matrix() {
        expect('[');
        std::vector<std::vector<long long>> rows;
        rows.push_back(int_list());
        while (accept(',')) rows.push_back(int_list());
        expect(']');
        for (const auto& r : rows)
            if (r.size() != rows.size()) throw SemanticError("matrix literal must be square");
        return rows;
    }

    RingSpec field() {
        RingSpec f = ring();
        if (f.kind != RingSpec::Kind::Gf) throw SemanticError("a field (gf) is required here");
        return f;
    }

    RingSpec ring() {
        std::string head = ident();
        RingSpec r;
        if (head == "zmod") {
            expect('(');
            r.kind = RingSpec::Kind::Zmod;
            r.n = nat();
            expect(')');
            if (r.n < 2) throw SemanticError("zmod modulus must be >= 2");
        } else if (head == "gf") {
            expect('(');
            r.kind = RingSpec::Kind::Gf;
            r.p = nat();
            r.k = accept(',') ? static_cast<int>(nat()) : 1;
            expect(')');
            if (!is_prime(r.p)) throw SemanticError("gf base must be prime");
            if (r.k < 1) throw SemanticError("gf degree must be >= 1");
        } else if (head == "prod") {
            expect('(');
            r.kind = RingSpec::Kind::Prod;
            r.children.push_back(ring());
            while (accept(',')) r.children.push_back(ring());
            expect(')');
            if (r.children.size() < 2) throw SemanticError("prod needs at least two factors");
        } else if (head == "mat") {
            expect('(');
            r.kind = RingSpec::Kind::MatRing;
            r.children.push_back(ring());
            expect(',');
            r.n = nat();
            expect(')');
            if (r.n < 1) throw SemanticError("mat size must be >= 1");
        } else if (head == "tri") {
            expect('(');
            r.kind = RingSpec::Kind::Tri;
            r.children.push_back(field());
            expect(';');
            r.n = nat();
            expect(';');
            if (r.n < 1) throw SemanticError("tri dimension must be >= 1");
            std::string src = ident();
            if (src == "gen") {
                r.dsrc = RingSpec::Dsrc::Gen;
                skip_ws();
                // one or more bracketed matrices; a single matrix may be
                // written without the outer list
                expect('[');
                --pos_;  // re-scan from '['
                std::size_t save = pos_;
                ++pos_;
                skip_ws();
                if (pos_ < s_.size() && s_[pos_] == '[') {
                    ++pos_;
                    skip_ws();
                    bool triple = pos_ < s_.size() && s_[pos_] == '[';
                    pos_ = save;
                    if (triple) {
                        expect('[');
                        r.gen_mats.push_back(matrix());
                        while (accept(',')) r.gen_mats.push_back(matrix());
                        expect(']');
                    } else {
                        r.gen_mats.push_back(matrix());
                    }
                } else {
                    pos_ = save;
                    fail("expected matrix literal");
                }
            } else if (src == "companion") {
                r.dsrc = RingSpec::Dsrc::Companion;
                r.comp_poly = int_list();
            } else if (src == "scalars") {
                r.dsrc = RingSpec::Dsrc::Scalars;
            } else if (src == "full") {
                r.dsrc = RingSpec::Dsrc::Full;
            } else {
                fail("unknown matrix-source '" + src + "'");
            }
            expect(')');
        } else if (head == "trimat") {
            expect('(');
            r.kind = RingSpec::Kind::Trimat;
            r.children.push_back(ring());
            expect(',');
            r.children.push_back(ring());
            expect(')');
        } else if (head == "idealize") {
            expect('(');
            r.kind = RingSpec::Kind::Idealize;
            r.children.push_back(field());
            expect(',');
            r.n = nat();
            expect(')');
            if (r.n < 1) throw SemanticError("idealize dimension must be >= 1");
        } else {
            fail("unknown constructor '" + head + "'");
        }
        return r;
    }
};

std::string print_int_list(const std::vector<long long>& v) {
    std::string s = "[";
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i) s += ",";
        s += std::to_string(v[i]);
    }
    return s + "]";
}

std::string print_matrix(const std::vector<std::vector<long long>>& m) {
    std::string s = "[";
    for (std::size_t i = 0; i < m.size(); ++i) {
        if (i) s += ",";
        s += print_int_list(m[i]);
    }
    return s + "]";
}

}  // namespace

std::string RingSpec::print() const {
    switch (kind) {
        case Kind::Zmod:
            return "zmod(" + std::to_string(n) + ")";
        case Kind::Gf:
            return k == 1 ? "gf(" + std::to_string(p) + ")"
                          : "gf(" + std::to_string(p) + "," + std::to_string(k) + ")";
        case Kind::Prod: {
            std::string s = "prod(";
            for (std::size_t i = 0; i < children.size(); ++i) {
                if (i) s += ",";
                s += children[i].print();
            }
            return s + ")";
        }
        case Kind::MatRing:
            return "mat(" + children[0].print() + "," + std::to_string(n) + ")";
        case Kind::Tri: {
            std::string s = "tri(" + children[0].print() + ";" + std::to_string(n) + ";";
            switch (dsrc) {
                case Dsrc::Gen:
                    s += "gen";
                    if (gen_mats.size() == 1) {
                        s += print_matrix(gen_mats[0]);
                    } else {
                        s += "[";
                        for (std::size_t i = 0; i < gen_mats.size(); ++i) {
                            if (i) s += ",";
                            s += print_matrix(gen_mats[i]);
                        }
                        s += "]";
                    }
                    break;
                case Dsrc::Companion: s += "companion" + print_int_list(comp_poly); break;
                case Dsrc::Scalars: s += "scalars"; break;
                case Dsrc::Full: s += "full"; break;
                case Dsrc::None: break;
            }
            return s + ")";
        }
        case Kind::Trimat:
            return "trimat(" + children[0].print() + "," + children[1].print() + ")";
        case Kind::Idealize:
            return "idealize(" + children[0].print() + "," + std::to_string(n) + ")";
    }
    return "";
}

RingSpec parse_spec(const std::string& text) {
    if (text.size() > 64 * 1024) throw SemanticError("spec text exceeds 64 KiB");
    return Parser(text).parse();
}

}  // namespace ringlab
