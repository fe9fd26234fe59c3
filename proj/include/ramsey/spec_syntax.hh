#ifndef RAMSEY_SPEC_SYNTAX_HH
#define RAMSEY_SPEC_SYNTAX_HH

#include <ramsey/families.hh>

#include <string_view>
#include <variant>

namespace ramsey
{
    using AnySpec = std::variant<TreeSpec, NamedGraphSpec>;

    /**
     * Parses the textual family syntax, case-insensitively and ignoring
     * whitespace: "S(n)", "S(n;l,m)", "S(n;l)", "K(n)", "K(a,b)", "C(n)",
     * "P(n)", "E(n)", "W(m)". The result is validated; malformed text throws
     * ParameterError.
     */
    auto parse_spec(std::string_view text) -> AnySpec;
    auto parse_tree_spec(std::string_view text) -> TreeSpec;
    auto parse_named_spec(std::string_view text) -> NamedGraphSpec;
}

#endif
