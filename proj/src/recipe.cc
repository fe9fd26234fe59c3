#include <ramsey/recipe.hh>
#include <ramsey/errors.hh>
#include "overload.hh"

using std::make_shared;
using std::string;

namespace ramsey
{
    using std::to_string;

    using detail::Overload;

    auto named(NamedGraphSpec spec) -> RecipeExpr
    {
        return RecipeExpr{ RecipeNamed{ spec } };
    }

    auto copies(int count, RecipeExpr inner) -> RecipeExpr
    {
        return RecipeExpr{ RecipeCopies{ count, make_shared<const RecipeExpr>(std::move(inner)) } };
    }

    auto disjoint(RecipeExpr left, RecipeExpr right) -> RecipeExpr
    {
        return RecipeExpr{ RecipeUnion{ make_shared<const RecipeExpr>(std::move(left)), make_shared<const RecipeExpr>(std::move(right)) } };
    }

    auto complement_of(RecipeExpr inner) -> RecipeExpr
    {
        return RecipeExpr{ RecipeComplement{ make_shared<const RecipeExpr>(std::move(inner)) } };
    }

    auto recipe_order(const RecipeExpr & recipe) -> long
    {
        return std::visit(Overload{
            [] (const RecipeNamed & r) -> long {
                return std::visit(Overload{
                    [] (const CompleteBipartite & s) -> long { return long(s.a) + s.b; },
                    [] (const Wheel & s) -> long { return long(s.m) + 1; },
                    [] (const auto & s) -> long { return s.n; }
                }, r.spec);
            },
            [] (const RecipeCopies & r) -> long {
                if (r.count < 0)
                    throw ParameterError("negative copy count " + to_string(r.count) + " in recipe");
                return r.count * recipe_order(*r.inner);
            },
            [] (const RecipeUnion & r) -> long { return recipe_order(*r.left) + recipe_order(*r.right); },
            [] (const RecipeComplement & r) -> long { return recipe_order(*r.inner); }
        }, recipe.node);
    }

    auto elaborate(const RecipeExpr & recipe) -> Graph
    {
        auto order = recipe_order(recipe);
        if (order > Graph::max_order)
            throw GraphError("recipe " + to_notation(recipe) + " elaborates to order " + to_string(order)
                    + ", exceeding capacity " + to_string(Graph::max_order));

        return std::visit(Overload{
            [] (const RecipeNamed & r) { return build_named(r.spec); },
            [] (const RecipeCopies & r) {
                Graph result;
                if (r.count > 0) {
                    auto one = elaborate(*r.inner);
                    for (int k = 0 ; k < r.count ; ++k)
                        result = disjoint_union(result, one);
                }
                return result;
            },
            [] (const RecipeUnion & r) { return disjoint_union(elaborate(*r.left), elaborate(*r.right)); },
            [] (const RecipeComplement & r) { return complement(elaborate(*r.inner)); }
        }, recipe.node);
    }

    auto to_notation(const RecipeExpr & recipe) -> string
    {
        return std::visit(Overload{
            [] (const RecipeNamed & r) { return to_string(r.spec); },
            [] (const RecipeCopies & r) {
                auto inner = to_notation(*r.inner);
                bool atomic = std::holds_alternative<RecipeNamed>(r.inner->node)
                    || std::holds_alternative<RecipeComplement>(r.inner->node);
                if (! atomic)
                    inner = "(" + inner + ")";
                return r.count == 1 ? inner : to_string(r.count) + inner;
            },
            [] (const RecipeUnion & r) { return to_notation(*r.left) + "\\cup " + to_notation(*r.right); },
            [] (const RecipeComplement & r) { return "\\overline{" + to_notation(*r.inner) + "}"; }
        }, recipe.node);
    }
}
