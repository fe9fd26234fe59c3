#ifndef RAMSEY_RECIPE_HH
#define RAMSEY_RECIPE_HH

#include <ramsey/families.hh>
#include <ramsey/graph.hh>

#include <memory>
#include <string>
#include <variant>

namespace ramsey
{
    struct RecipeExpr;
    using RecipePtr = std::shared_ptr<const RecipeExpr>;

    struct RecipeNamed { NamedGraphSpec spec; };
    struct RecipeCopies { int count; RecipePtr inner; };
    struct RecipeUnion { RecipePtr left, right; };
    struct RecipeComplement { RecipePtr inner; };

    /// Algebraic graph expression: named primitives closed under k-fold
    /// copies, disjoint union and complement.
    struct RecipeExpr
    {
        std::variant<RecipeNamed, RecipeCopies, RecipeUnion, RecipeComplement> node;
    };

    auto named(NamedGraphSpec spec) -> RecipeExpr;
    auto copies(int count, RecipeExpr inner) -> RecipeExpr;
    auto disjoint(RecipeExpr left, RecipeExpr right) -> RecipeExpr;
    auto complement_of(RecipeExpr inner) -> RecipeExpr;

    /// Order of the elaborated graph, computed symbolically. Throws
    /// ParameterError on a negative copy count.
    auto recipe_order(const RecipeExpr & recipe) -> long;

    /// Structural evaluation. Throws GraphError when the order would exceed
    /// Graph::max_order, ParameterError on a negative copy count.
    auto elaborate(const RecipeExpr & recipe) -> Graph;

    /// LaTeX-style notation, e.g. "\overline{K_{3,3}\cup 2K_4}\cup K_{10}".
    auto to_notation(const RecipeExpr & recipe) -> std::string;
}

#endif
