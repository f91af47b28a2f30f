#include "kaug/nodeset.hpp"

#include "kaug/errors.hpp"

#include <sstream>

namespace kaug {

NodeSet NodeSet::from_members(int universe, const std::vector<int>& xs) {
    NodeSet s(universe);
    for (int v : xs) s.add(v);
    return s;
}

NodeSet NodeSet::from_mask(int universe, std::uint64_t mask) {
    if (universe > 64) throw Error("from_mask: universe exceeds 64");
    NodeSet s(universe);
    for (int v = 0; v < universe; ++v)
        if (mask >> v & 1u) s.bits_.set(static_cast<size_t>(v));
    return s;
}

NodeSet NodeSet::full(int universe) {
    NodeSet s(universe);
    s.bits_.set();
    return s;
}

bool NodeSet::contains(int v) const {
    return v >= 0 && v < universe() && bits_.test(static_cast<size_t>(v));
}

void NodeSet::add(int v) {
    if (v < 0 || v >= universe()) throw Error("node out of range: " + std::to_string(v));
    bits_.set(static_cast<size_t>(v));
}

void NodeSet::remove(int v) {
    if (v < 0 || v >= universe()) throw Error("node out of range: " + std::to_string(v));
    bits_.reset(static_cast<size_t>(v));
}

std::vector<int> NodeSet::members() const {
    std::vector<int> out;
    out.reserve(bits_.count());
    for (size_t v = bits_.find_first(); v != boost::dynamic_bitset<>::npos; v = bits_.find_next(v))
        out.push_back(static_cast<int>(v));
    return out;
}

int NodeSet::first() const {
    size_t v = bits_.find_first();
    return v == boost::dynamic_bitset<>::npos ? -1 : static_cast<int>(v);
}

void NodeSet::check_universe(const NodeSet& o) const {
    if (universe() != o.universe()) throw Error("node-set universe mismatch");
}

NodeSet& NodeSet::operator|=(const NodeSet& o) {
    check_universe(o);
    bits_ |= o.bits_;
    return *this;
}

NodeSet& NodeSet::operator&=(const NodeSet& o) {
    check_universe(o);
    bits_ &= o.bits_;
    return *this;
}

NodeSet& NodeSet::operator-=(const NodeSet& o) {
    check_universe(o);
    bits_ -= o.bits_;
    return *this;
}

NodeSet NodeSet::complement() const {
    NodeSet s(*this);
    s.bits_.flip();
    return s;
}

bool NodeSet::intersects(const NodeSet& o) const {
    check_universe(o);
    return bits_.intersects(o.bits_);
}

bool NodeSet::is_subset_of(const NodeSet& o) const {
    check_universe(o);
    return bits_.is_subset_of(o.bits_);
}

bool NodeSet::lex_less(const NodeSet& a, const NodeSet& b) {
    a.check_universe(b);
    // Compare sorted member lists without materializing them.
    size_t x = a.bits_.find_first();
    size_t y = b.bits_.find_first();
    while (x != boost::dynamic_bitset<>::npos && y != boost::dynamic_bitset<>::npos) {
        if (x != y) return x < y;
        x = a.bits_.find_next(x);
        y = b.bits_.find_next(y);
    }
    return x == boost::dynamic_bitset<>::npos && y != boost::dynamic_bitset<>::npos;
}

std::uint64_t NodeSet::mask() const {
    if (universe() > 64) throw Error("mask: universe exceeds 64");
    std::uint64_t m = 0;
    for (size_t v = bits_.find_first(); v != boost::dynamic_bitset<>::npos; v = bits_.find_next(v))
        m |= std::uint64_t{1} << v;
    return m;
}

std::string NodeSet::to_string() const {
    std::ostringstream os;
    os << '{';
    bool sep = false;
    for (int v : members()) {
        if (sep) os << ',';
        os << v;
        sep = true;
    }
    os << '}';
    return os.str();
}

}  // namespace kaug
