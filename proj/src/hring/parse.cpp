#include "hyperasym/hring/parse.hpp"

#include "hyperasym/hring/factory.hpp"

#include <cctype>
#include <string>

namespace hyperasym {

namespace {

class Parser {
public:
    explicit Parser(std::string_view t) : text_(t) {}

    HElement run()
    {
        HElement v = expr();
        skip();
        if (pos_ != text_.size())
            fail("unexpected '" + std::string(1, text_[pos_]) + "'");
        return v;
    }

private:
    [[noreturn]] void fail(const std::string& msg) const
    {
        throw ParseError("parse error at offset " + std::to_string(pos_) + ": " + msg);
    }

    void skip()
    {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_])))
            ++pos_;
    }

    bool accept(char c)
    {
        skip();
        if (pos_ < text_.size() && text_[pos_] == c) {
            ++pos_;
            return true;
        }
        return false;
    }

    void expect(char c)
    {
        if (!accept(c))
            fail(std::string("expected '") + c + "'");
    }

    HElement expr()
    {
        HElement v = term();
        for (;;) {
            if (accept('+'))
                v += term();
            else if (accept('-'))
                v -= term();
            else
                return v;
        }
    }

    HElement term()
    {
        HElement v = unary();
        for (;;) {
            if (accept('*'))
                v *= unary();
            else if (accept('/'))
                v *= invert(unary());
            else
                return v;
        }
    }

    HElement unary()
    {
        if (accept('-'))
            return -unary();
        if (accept('+'))
            return unary();
        return power();
    }

    HElement power()
    {
        HElement base = primary();
        if (!accept('^'))
            return base;
        bool neg = accept('-');
        long e = integer();
        HElement r = pow(base, static_cast<unsigned>(e));
        return neg ? invert(r) : r;
    }

    long integer()
    {
        skip();
        std::size_t start = pos_;
        while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_])))
            ++pos_;
        if (start == pos_)
            fail("expected an integer");
        return std::stol(std::string(text_.substr(start, pos_ - start)));
    }

    std::string ident()
    {
        skip();
        std::size_t start = pos_;
        while (pos_ < text_.size() && (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_'))
            ++pos_;
        return std::string(text_.substr(start, pos_ - start));
    }

    CycloNumber scalar_arg()
    {
        HElement v = expr();
        auto c = v.as_scalar();
        if (!c)
            fail("expected an algebraic argument");
        return *c;
    }

    Rational rational_arg()
    {
        CycloNumber c = scalar_arg();
        if (!c.is_rational())
            fail("expected a rational argument");
        return c.to_rational();
    }

    long int_arg()
    {
        Rational r = rational_arg();
        if (!r.is_integer())
            fail("expected an integer argument");
        return r.to_long();
    }

    HElement primary()
    {
        skip();
        if (pos_ >= text_.size())
            fail("unexpected end of input");
        char c = text_[pos_];
        if (c == '(') {
            ++pos_;
            HElement v = expr();
            expect(')');
            return v;
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            std::size_t start = pos_;
            while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_])))
                ++pos_;
            return HElement(Rational(Integer(std::string(text_.substr(start, pos_ - start)))));
        }
        std::size_t start = pos_;
        std::string name = ident();
        if (name.empty())
            fail("unexpected '" + std::string(1, c) + "'");
        try {
            if (name == "cyclo") {
                std::size_t close = text_.find(']', pos_);
                if (close == std::string_view::npos)
                    fail("unterminated cyclotomic literal");
                pos_ = close + 1;
                return HElement(CycloNumber::parse(text_.substr(start, pos_ - start)));
            }
            if (name == "I")
                return HElement(CycloNumber::imag_unit());
            if (name == "Pi")
                return HElement::atom(HAtom::pi());
            if (name == "InvPi")
                return HElement::atom(HAtom::inv_pi());
            if (name == "EulerGamma")
                return HElement::atom(HAtom::euler_gamma());
            expect('(');
            HElement v;
            if (name == "Gamma") {
                v = HElement::atom(HAtom::gamma(rational_arg()));
            } else if (name == "Psi") {
                v = HElement::atom(HAtom::psi(rational_arg()));
            } else if (name == "HurwitzZeta") {
                long s = int_arg();
                expect(',');
                v = HElement::atom(HAtom::hurwitz(s, rational_arg()));
            } else if (name == "Zeta") {
                v = HElement::atom(HAtom::hurwitz(int_arg(), Rational(1)));
            } else if (name == "Log") {
                v = HElement::atom(HAtom::log(rational_arg()));
            } else if (name == "Li") {
                long s = int_arg();
                expect(',');
                v = HElement::atom(HAtom::polylog(s, scalar_arg()));
            } else {
                fail("unknown function '" + name + "'");
            }
            expect(')');
            return v;
        } catch (const ParseError&) {
            throw;
        } catch (const std::exception& e) {
            fail(e.what());
        }
    }

    HElement invert(const HElement& x)
    {
        if (auto c = x.as_scalar()) {
            if (c->is_zero())
                fail("division by zero");
            return HElement(c->inverse());
        }
        if (x.size() != 1)
            fail("division by a sum is not supported");
        const auto& [m, c] = *x.terms().begin();
        HElement out(c.inverse());
        for (const auto& [a, e] : m) {
            HElement inv;
            if (a.kind == AtomKind::Pi)
                inv = HElement::atom(HAtom::inv_pi());
            else if (a.kind == AtomKind::InvPi)
                inv = HElement::atom(HAtom::pi());
            else if (a.kind == AtomKind::Gamma)
                inv = h_reciprocal_gamma(a.r);
            else
                fail("cannot divide by " + a.str());
            out *= pow(inv, e);
        }
        return out;
    }

    std::string_view text_;
    std::size_t pos_ = 0;
};

}  // namespace

HElement parse_helement(std::string_view text)
{
    return Parser(text).run();
}

}  // namespace hyperasym
