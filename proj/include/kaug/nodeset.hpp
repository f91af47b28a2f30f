#ifndef KAUG_NODESET_HPP
#define KAUG_NODESET_HPP

#include <boost/dynamic_bitset.hpp>

#include <cstdint>
#include <initializer_list>
#include <string>
#include <vector>

namespace kaug {

/// Subset of {0..n-1}. Canonical representation is the sorted member list.
class NodeSet {
public:
    NodeSet() = default;
    explicit NodeSet(int universe) : bits_(static_cast<size_t>(universe)) {}
    NodeSet(int universe, std::initializer_list<int> xs) : NodeSet(universe) {
        for (int v : xs) add(v);
    }

    static NodeSet from_members(int universe, const std::vector<int>& xs);
    static NodeSet from_mask(int universe, std::uint64_t mask);
    static NodeSet full(int universe);

    int universe() const { return static_cast<int>(bits_.size()); }
    bool empty() const { return bits_.none(); }
    int size() const { return static_cast<int>(bits_.count()); }
    bool contains(int v) const;
    void add(int v);
    void remove(int v);

    std::vector<int> members() const;
    int first() const;  // smallest member, -1 if empty

    NodeSet& operator|=(const NodeSet& o);
    NodeSet& operator&=(const NodeSet& o);
    NodeSet& operator-=(const NodeSet& o);
    friend NodeSet operator|(NodeSet a, const NodeSet& b) { return a |= b; }
    friend NodeSet operator&(NodeSet a, const NodeSet& b) { return a &= b; }
    friend NodeSet operator-(NodeSet a, const NodeSet& b) { return a -= b; }
    NodeSet complement() const;

    bool intersects(const NodeSet& o) const;
    bool is_subset_of(const NodeSet& o) const;
    bool operator==(const NodeSet& o) const { return bits_ == o.bits_; }
    bool operator!=(const NodeSet& o) const { return bits_ != o.bits_; }

    /// Lexicographic order on sorted member lists; total order for equal universes.
    static bool lex_less(const NodeSet& a, const NodeSet& b);

    std::uint64_t mask() const;  // universe must be <= 64
    const boost::dynamic_bitset<>& bits() const { return bits_; }

    std::string to_string() const;  // "{0,2,5}"

private:
    boost::dynamic_bitset<> bits_;
    void check_universe(const NodeSet& o) const;
};

}  // namespace kaug

#endif
