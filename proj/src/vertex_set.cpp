#include "critgraph/vertex_set.hpp"

#include <stdexcept>
#include <string>

namespace critgraph {

VertexSet::VertexSet(int universe) : universe_(universe)
{
    if (universe < 0 || universe > kCapacity)
        throw std::invalid_argument("vertex set universe out of range: " + std::to_string(universe));
}

VertexSet::VertexSet(int universe, std::initializer_list<int> members)
    : VertexSet(universe, std::span<const int>(members.begin(), members.size()))
{
}

VertexSet::VertexSet(int universe, std::span<const int> members) : VertexSet(universe)
{
    for (int v : members) {
        if (v < 0 || v >= universe)
            throw std::invalid_argument("vertex " + std::to_string(v) + " outside universe of size "
                                        + std::to_string(universe));
        insert(v);
    }
}

VertexSet VertexSet::full(int universe)
{
    VertexSet s(universe);
    const int words = s.word_count();
    for (int w = 0; w < words; ++w)
        s.words_[w] = ~std::uint64_t{0};
    if (const int tail = universe % kWordBits; tail != 0)
        s.words_[words - 1] = (std::uint64_t{1} << tail) - 1;
    return s;
}

std::vector<int> VertexSet::members() const
{
    std::vector<int> out;
    out.reserve(size());
    for_each([&](int v) { out.push_back(v); });
    return out;
}

} // namespace critgraph
