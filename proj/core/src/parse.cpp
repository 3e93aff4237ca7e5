#include "nmt/parse.hpp"

#include <cctype>

#include "nmt/errors.hpp"

namespace nmt {

namespace {

class Parser {
public:
    Parser(std::string_view text, const Signature* sig) : text_(text), sig_(sig) {}

    Formula parse() {
        Formula result = parse_formula();
        skip_ws();
        if (pos_ != text_.size()) {
            fail(ParseErrorKind::Syntax, pos_, "unexpected trailing input");
        }
        return result;
    }

private:
    Formula parse_formula() {
        skip_ws();
        const std::size_t start = pos_;
        if (pos_ == text_.size()) {
            fail(ParseErrorKind::Syntax, pos_, "unexpected end of input");
        }
        std::string token = read_token(start);
        if (is_variable_token(token)) {
            return Formula::var(static_cast<unsigned>(std::stoul(token.substr(1))));
        }
        if (!is_valid_connective_name(token)) {
            fail(ParseErrorKind::Syntax, start, "expected a variable or connective name");
        }

        std::vector<Formula> args;
        skip_ws();
        if (pos_ < text_.size() && text_[pos_] == '(') {
            ++pos_;
            args.push_back(parse_formula());
            skip_ws();
            while (pos_ < text_.size() && text_[pos_] == ',') {
                ++pos_;
                args.push_back(parse_formula());
                skip_ws();
            }
            if (pos_ == text_.size() || text_[pos_] != ')') {
                fail(ParseErrorKind::Syntax, pos_, "expected ')' or ','");
            }
            ++pos_;
        }

        if (sig_ != nullptr) {
            auto arity = sig_->arity(token);
            if (!arity.has_value()) {
                fail(ParseErrorKind::UnknownConnective, start, "unknown connective: " + token);
            }
            if (static_cast<std::size_t>(*arity) != args.size()) {
                fail(ParseErrorKind::ArityMismatch, start,
                     token + " expects " + std::to_string(*arity) + " arguments, got " +
                         std::to_string(args.size()));
            }
        }
        return Formula::app(std::move(token), std::move(args));
    }

    std::string read_token(std::size_t start) {
        std::size_t end = start;
        while (end < text_.size()) {
            const char c = text_[end];
            if (std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '^') {
                ++end;
            } else {
                break;
            }
        }
        if (end == start) {
            fail(ParseErrorKind::Syntax, start, "expected a variable or connective name");
        }
        pos_ = end;
        return std::string(text_.substr(start, end - start));
    }

    void skip_ws() {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    }

    [[noreturn]] void fail(ParseErrorKind kind, std::size_t at, const std::string& message) {
        throw ParseError(kind, at, message + " (at position " + std::to_string(at) + ")");
    }

    std::string_view text_;
    const Signature* sig_;
    std::size_t pos_ = 0;
};

}  // namespace

Formula parse_formula(std::string_view text, const Signature& sig) {
    return Parser(text, &sig).parse();
}

Formula parse_term(std::string_view text) {
    return Parser(text, nullptr).parse();
}

}  // namespace nmt
