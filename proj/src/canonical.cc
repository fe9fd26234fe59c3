#include <ramsey/canonical.hh>
#include <ramsey/errors.hh>

#include <algorithm>
#include <bit>
#include <numeric>

using std::uint64_t;
using std::vector;

namespace ramsey
{
    using std::to_string;

    namespace
    {
        using Cells = vector<uint64_t>;

        auto bit(int v) -> uint64_t { return uint64_t{1} << v; }

        class Labeller
        {
            private:
                int _n;
                vector<uint64_t> _adj;

                bool _have_leaf = false;
                vector<int> _first_path, _first_lab, _best_lab;
                vector<uint64_t> _first_form, _best_form;
                vector<vector<int>> _generators;

                /// Refines to an equitable partition. Splits are made in a
                /// labelling-independent way: the first (splitter, cell) pair
                /// that splits does so, then refinement restarts.
                auto refine(Cells & cells) const -> void
                {
                    vector<int> count(static_cast<std::size_t>(_n));
                    bool changed = true;
                    while (changed && int(cells.size()) < _n) {
                        changed = false;
                        for (std::size_t s = 0 ; s < cells.size() && ! changed ; ++s) {
                            uint64_t splitter = cells[s];
                            for (std::size_t c = 0 ; c < cells.size() && ! changed ; ++c) {
                                uint64_t cell = cells[c];
                                if (std::popcount(cell) == 1)
                                    continue;
                                int lo = _n, hi = -1;
                                for (uint64_t b = cell ; b ; b &= b - 1) {
                                    int v = std::countr_zero(b);
                                    count[std::size_t(v)] = std::popcount(_adj[std::size_t(v)] & splitter);
                                    lo = std::min(lo, count[std::size_t(v)]);
                                    hi = std::max(hi, count[std::size_t(v)]);
                                }
                                if (lo == hi)
                                    continue;

                                Cells pieces;
                                for (int k = lo ; k <= hi ; ++k) {
                                    uint64_t piece = 0;
                                    for (uint64_t b = cell ; b ; b &= b - 1) {
                                        int v = std::countr_zero(b);
                                        if (count[std::size_t(v)] == k)
                                            piece |= bit(v);
                                    }
                                    if (piece)
                                        pieces.push_back(piece);
                                }
                                cells.erase(cells.begin() + long(c));
                                cells.insert(cells.begin() + long(c), pieces.begin(), pieces.end());
                                changed = true;
                            }
                        }
                    }
                }

                auto leaf_form(const vector<int> & lab) const -> vector<uint64_t>
                {
                    vector<int> pos(static_cast<std::size_t>(_n));
                    for (int i = 0 ; i < _n ; ++i)
                        pos[std::size_t(lab[std::size_t(i)])] = i;
                    vector<uint64_t> form(std::size_t(_n), 0);
                    for (int i = 0 ; i < _n ; ++i)
                        for (uint64_t b = _adj[std::size_t(lab[std::size_t(i)])] ; b ; b &= b - 1)
                            form[std::size_t(i)] |= bit(pos[std::size_t(std::countr_zero(b))]);
                    return form;
                }

                /// gamma with gamma(from[i]) = to[i]
                auto mapping(const vector<int> & from, const vector<int> & to) const -> vector<int>
                {
                    vector<int> gamma(static_cast<std::size_t>(_n));
                    for (int i = 0 ; i < _n ; ++i)
                        gamma[std::size_t(from[std::size_t(i)])] = to[std::size_t(i)];
                    return gamma;
                }

                /// Returns the depth to unwind to; the current depth when no
                /// jump applies.
                auto leaf(const Cells & cells, const vector<int> & path) -> int
                {
                    vector<int> lab;
                    lab.reserve(std::size_t(_n));
                    for (auto c : cells)
                        lab.push_back(std::countr_zero(c));
                    auto form = leaf_form(lab);
                    int depth = int(path.size());

                    if (! _have_leaf) {
                        _have_leaf = true;
                        _first_path = path;
                        _first_lab = _best_lab = lab;
                        _first_form = _best_form = form;
                        return depth;
                    }

                    if (form == _first_form) {
                        auto gamma = mapping(_first_lab, lab);
                        _generators.push_back(gamma);
                        // gamma carries the first path onto this one: the
                        // subtree below the divergence point is covered
                        std::size_t common = 0;
                        while (common < path.size() && common < _first_path.size() && path[common] == _first_path[common])
                            ++common;
                        bool carries = _first_path.size() == path.size();
                        for (std::size_t i = 0 ; carries && i < path.size() ; ++i)
                            carries = gamma[std::size_t(_first_path[i])] == path[i];
                        return carries ? int(common) : depth;
                    }

                    if (form == _best_form)
                        _generators.push_back(mapping(_best_lab, lab));
                    else if (form > _best_form) {
                        _best_form = std::move(form);
                        _best_lab = std::move(lab);
                    }
                    return depth;
                }

                auto search(Cells cells, vector<int> & path) -> int
                {
                    refine(cells);
                    int depth = int(path.size());
                    if (int(cells.size()) == _n)
                        return leaf(cells, path);

                    std::size_t target = 0;
                    while (std::popcount(cells[target]) == 1)
                        ++target;

                    vector<int> tried;
                    for (uint64_t b = cells[target] ; b ; b &= b - 1) {
                        int v = std::countr_zero(b);
                        if (! tried.empty() && equivalent_to_tried(v, tried, path))
                            continue;
                        tried.push_back(v);

                        Cells child = cells;
                        child[target] = bit(v);
                        child.insert(child.begin() + long(target) + 1, cells[target] & ~bit(v));
                        path.push_back(v);
                        int back = search(std::move(child), path);
                        path.pop_back();
                        if (back < depth)
                            return back;
                    }
                    return depth;
                }

                auto equivalent_to_tried(int v, const vector<int> & tried, const vector<int> & path) const -> bool
                {
                    vector<vector<int>> fixing;
                    for (auto & g : _generators) {
                        bool fixes = true;
                        for (int p : path)
                            if (g[std::size_t(p)] != p) {
                                fixes = false;
                                break;
                            }
                        if (fixes)
                            fixing.push_back(g);
                    }
                    if (fixing.empty())
                        return false;
                    auto orbit = orbits_of(_n, fixing);
                    for (int t : tried)
                        if (orbit[std::size_t(t)] == orbit[std::size_t(v)])
                            return true;
                    return false;
                }

            public:
                explicit Labeller(const Graph & g) :
                    _n(g.order()), _adj(std::size_t(g.order()))
                {
                    for (int v = 0 ; v < _n ; ++v)
                        _adj[std::size_t(v)] = g.row(v)[0];
                }

                auto run(std::span<const int> colours) -> CanonicalLabelling
                {
                    if (_n == 0)
                        return {};

                    Cells cells;
                    if (colours.empty())
                        cells.push_back(_n == 64 ? ~uint64_t{0} : bit(_n) - 1);
                    else {
                        vector<int> distinct(colours.begin(), colours.end());
                        std::sort(distinct.begin(), distinct.end());
                        distinct.erase(std::unique(distinct.begin(), distinct.end()), distinct.end());
                        for (int c : distinct) {
                            uint64_t cell = 0;
                            for (int v = 0 ; v < _n ; ++v)
                                if (colours[std::size_t(v)] == c)
                                    cell |= bit(v);
                            cells.push_back(cell);
                        }
                    }

                    vector<int> path;
                    search(std::move(cells), path);
                    return CanonicalLabelling{ std::move(_best_lab), std::move(_best_form), std::move(_generators) };
                }
        };
    }

    auto canonical_labelling(const Graph & g, std::span<const int> colours) -> CanonicalLabelling
    {
        if (g.order() > canonical_max_order)
            throw ParameterError("canonical labelling supports order at most " + to_string(canonical_max_order)
                    + " (got " + to_string(g.order()) + ")");
        if (! colours.empty() && int(colours.size()) != g.order())
            throw ParameterError("colouring has " + to_string(colours.size()) + " entries for order " + to_string(g.order()));
        return Labeller(g).run(colours);
    }

    auto canonical_form(const Graph & g) -> Graph
    {
        auto c = canonical_labelling(g);
        GraphBuilder b{ g.order() };
        for (int i = 0 ; i < g.order() ; ++i)
            for (uint64_t r = c.form[std::size_t(i)] ; r ; r &= r - 1) {
                int j = std::countr_zero(r);
                if (i < j)
                    b.add_edge(i, j);
            }
        return std::move(b).build();
    }

    auto are_isomorphic(const Graph & a, const Graph & b) -> bool
    {
        if (a.order() != b.order() || a.edge_count() != b.edge_count())
            return false;
        return canonical_labelling(a).form == canonical_labelling(b).form;
    }

    auto orbits_of(int n, const vector<vector<int>> & generators) -> vector<int>
    {
        vector<int> parent(static_cast<std::size_t>(n));
        std::iota(parent.begin(), parent.end(), 0);
        auto find = [&] (int v) {
            while (parent[std::size_t(v)] != v)
                v = parent[std::size_t(v)] = parent[std::size_t(parent[std::size_t(v)])];
            return v;
        };
        for (auto & g : generators)
            for (int v = 0 ; v < n ; ++v) {
                int a = find(v), b = find(g[std::size_t(v)]);
                if (a != b)
                    parent[std::size_t(std::max(a, b))] = std::min(a, b);
            }
        vector<int> orbit(static_cast<std::size_t>(n));
        for (int v = 0 ; v < n ; ++v)
            orbit[std::size_t(v)] = find(v);
        return orbit;
    }
}
