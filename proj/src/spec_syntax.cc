#include <ramsey/spec_syntax.hh>
#include <ramsey/errors.hh>

#include <cctype>
#include <charconv>
#include <string>
#include <vector>

using std::string;
using std::string_view;
using std::vector;

namespace ramsey
{
    namespace
    {
        struct Parsed
        {
            char letter;
            vector<int> before_semicolon;
            vector<int> after_semicolon;
            bool has_semicolon = false;
        };

        auto numbers(string_view text, const string & whole) -> vector<int>
        {
            vector<int> result;
            size_t start = 0;
            while (start <= text.size()) {
                auto end = text.find(',', start);
                if (end == string_view::npos)
                    end = text.size();
                auto token = text.substr(start, end - start);
                int value = 0;
                auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
                if (token.empty() || ec != std::errc() || ptr != token.data() + token.size())
                    throw ParameterError("malformed number '" + string(token) + "' in spec '" + whole + "'");
                result.push_back(value);
                start = end + 1;
            }
            return result;
        }

        auto tokenize(string_view text) -> Parsed
        {
            string compact;
            for (char c : text)
                if (! std::isspace(static_cast<unsigned char>(c)))
                    compact.push_back(char(std::toupper(static_cast<unsigned char>(c))));

            if (compact.size() < 4 || compact[1] != '(' || compact.back() != ')')
                throw ParameterError("malformed spec '" + string(text) + "': expected LETTER(args)");
            Parsed p;
            p.letter = compact[0];
            string_view inner(compact);
            inner = inner.substr(2, inner.size() - 3);
            auto semi = inner.find(';');
            if (semi == string_view::npos)
                p.before_semicolon = numbers(inner, string(text));
            else {
                p.has_semicolon = true;
                p.before_semicolon = numbers(inner.substr(0, semi), string(text));
                p.after_semicolon = numbers(inner.substr(semi + 1), string(text));
            }
            return p;
        }

        auto unknown(string_view text) -> ParameterError
        {
            return ParameterError("unrecognised spec '" + string(text)
                    + "' (expected S(n), S(n;l,m), S(n;l), K(n), K(a,b), C(n), P(n), E(n) or W(m))");
        }
    }

    auto parse_spec(string_view text) -> AnySpec
    {
        auto p = tokenize(text);
        auto & a = p.before_semicolon;
        auto & b = p.after_semicolon;

        if (p.letter == 'S') {
            if (a.size() != 1)
                throw unknown(text);
            TreeSpec spec;
            if (! p.has_semicolon)
                spec = Star{ a[0] };
            else if (b.size() == 2)
                spec = Spider{ a[0], b[0], b[1] };
            else if (b.size() == 1)
                spec = JoinedStars{ a[0], b[0] };
            else
                throw unknown(text);
            validate(spec);
            return spec;
        }

        if (p.has_semicolon)
            throw unknown(text);

        NamedGraphSpec spec;
        if (p.letter == 'K' && a.size() == 1)
            spec = Complete{ a[0] };
        else if (p.letter == 'K' && a.size() == 2)
            spec = CompleteBipartite{ a[0], a[1] };
        else if (p.letter == 'C' && a.size() == 1)
            spec = Cycle{ a[0] };
        else if (p.letter == 'P' && a.size() == 1)
            spec = Path{ a[0] };
        else if (p.letter == 'E' && a.size() == 1)
            spec = Empty{ a[0] };
        else if (p.letter == 'W' && a.size() == 1)
            spec = Wheel{ a[0] };
        else
            throw unknown(text);
        validate(spec);
        return spec;
    }

    auto parse_tree_spec(string_view text) -> TreeSpec
    {
        auto spec = parse_spec(text);
        if (auto t = std::get_if<TreeSpec>(&spec))
            return *t;
        throw ParameterError("'" + string(text) + "' is not a tree spec (expected S(n), S(n;l,m) or S(n;l))");
    }

    auto parse_named_spec(string_view text) -> NamedGraphSpec
    {
        auto spec = parse_spec(text);
        if (auto g = std::get_if<NamedGraphSpec>(&spec))
            return *g;
        throw ParameterError("'" + string(text) + "' is not a named graph spec");
    }
}
