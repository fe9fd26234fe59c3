#include <ramsey/graph6.hh>
#include <ramsey/errors.hh>

using std::size_t;
using std::string;
using std::string_view;

namespace ramsey
{
    using std::to_string;

    Graph6ParseError::Graph6ParseError(const string & message, size_t offset) :
        std::runtime_error("graph6 parse error at byte " + to_string(offset) + ": " + message),
        _offset(offset)
    {
    }

    auto graph6_encode(const Graph & g) -> string
    {
        string out;
        long n = g.order();
        if (n <= 62)
            out.push_back(char(63 + n));
        else if (n <= 258047) {
            out.push_back(char(126));
            for (int shift = 12 ; shift >= 0 ; shift -= 6)
                out.push_back(char(63 + ((n >> shift) & 63)));
        }
        else {
            out.push_back(char(126));
            out.push_back(char(126));
            for (int shift = 30 ; shift >= 0 ; shift -= 6)
                out.push_back(char(63 + ((n >> shift) & 63)));
        }

        int chunk = 0, filled = 0;
        for (int j = 1 ; j < n ; ++j)
            for (int i = 0 ; i < j ; ++i) {
                chunk = (chunk << 1) | (g.adjacent(i, j) ? 1 : 0);
                if (++filled == 6) {
                    out.push_back(char(63 + chunk));
                    chunk = filled = 0;
                }
            }
        if (filled > 0)
            out.push_back(char(63 + (chunk << (6 - filled))));
        return out;
    }

    auto graph6_decode(string_view text) -> Graph
    {
        constexpr string_view header = ">>graph6<<";
        size_t pos = 0;
        if (text.substr(0, header.size()) == header)
            pos = header.size();
        if (! text.empty() && text.back() == '\n')
            text.remove_suffix(1);
        if (! text.empty() && text.back() == '\r')
            text.remove_suffix(1);

        auto byte_at = [&] (size_t p) -> int {
            if (p >= text.size())
                throw Graph6ParseError("unexpected end of input", p);
            int c = static_cast<unsigned char>(text[p]);
            if (c < 63 || c > 126)
                throw Graph6ParseError("byte value " + to_string(c) + " outside 63..126", p);
            return c - 63;
        };

        long n = byte_at(pos);
        if (n < 63)
            ++pos;
        else if (pos + 1 < text.size() && text[pos + 1] == char(126)) {
            pos += 2;
            n = 0;
            for (int k = 0 ; k < 6 ; ++k)
                n = (n << 6) | byte_at(pos++);
        }
        else {
            pos += 1;
            n = 0;
            for (int k = 0 ; k < 3 ; ++k)
                n = (n << 6) | byte_at(pos++);
        }
        if (n > Graph::max_order)
            throw Graph6ParseError("order " + to_string(n) + " exceeds supported maximum " + to_string(Graph::max_order), pos);

        long bits = n * (n - 1) / 2;
        size_t expected = size_t((bits + 5) / 6);
        if (text.size() - pos != expected)
            throw Graph6ParseError("expected " + to_string(expected) + " adjacency bytes for order " + to_string(n)
                    + ", found " + to_string(text.size() - pos), text.size() < pos + expected ? text.size() : pos + expected);

        GraphBuilder b{ int(n) };
        // pairs (i, j), i < j, column by column
        int i = 0, j = 1;
        long k = 0;
        for (size_t p = pos ; p < text.size() ; ++p) {
            int value = byte_at(p);
            for (int bit = 5 ; bit >= 0 ; --bit, ++k) {
                bool set = (value >> bit) & 1;
                if (k >= bits) {
                    if (set)
                        throw Graph6ParseError("non-zero padding bit", p);
                    continue;
                }
                if (set)
                    b.add_edge(i, j);
                if (++i == j) {
                    i = 0;
                    ++j;
                }
            }
        }
        return std::move(b).build();
    }
}
