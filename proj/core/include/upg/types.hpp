#pragma once

#include <algorithm>
#include <cstdint>
#include <initializer_list>
#include <stdexcept>
#include <string>
#include <vector>

namespace upg {

using Vertex = int;

// Error taxonomy. The CLI maps these onto stable exit codes:
// parse/instance -> 2, size/class -> 3, everything else -> 1.
struct parse_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct instance_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct size_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct class_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct contract_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct integrity_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Sorted, duplicate-free list of vertex ids. Doubles as an index set
// (triple indices, host node ids) where convenient.
class VertexSet {
public:
    VertexSet() = default;
    VertexSet(std::initializer_list<Vertex> ids) : ids_(ids) { normalize(); }
    explicit VertexSet(std::vector<Vertex> ids) : ids_(std::move(ids)) { normalize(); }

    static VertexSet full(int n) {
        std::vector<Vertex> ids(static_cast<size_t>(std::max(n, 0)));
        for (int i = 0; i < n; ++i) ids[static_cast<size_t>(i)] = i;
        return VertexSet(std::move(ids));
    }

    bool contains(Vertex v) const {
        return std::binary_search(ids_.begin(), ids_.end(), v);
    }
    void insert(Vertex v) {
        auto it = std::lower_bound(ids_.begin(), ids_.end(), v);
        if (it == ids_.end() || *it != v) ids_.insert(it, v);
    }
    void erase(Vertex v) {
        auto it = std::lower_bound(ids_.begin(), ids_.end(), v);
        if (it != ids_.end() && *it == v) ids_.erase(it);
    }

    int size() const { return static_cast<int>(ids_.size()); }
    bool empty() const { return ids_.empty(); }
    const std::vector<Vertex>& ids() const { return ids_; }

    auto begin() const { return ids_.begin(); }
    auto end() const { return ids_.end(); }

    // Lexicographic order on the sorted id lists; used for deterministic
    // tie-breaking among equal-size witnesses.
    bool operator==(const VertexSet&) const = default;
    auto operator<=>(const VertexSet&) const = default;

private:
    void normalize() {
        std::sort(ids_.begin(), ids_.end());
        ids_.erase(std::unique(ids_.begin(), ids_.end()), ids_.end());
    }

    std::vector<Vertex> ids_;
};

inline VertexSet set_union(const VertexSet& a, const VertexSet& b) {
    std::vector<Vertex> out;
    std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
    return VertexSet(std::move(out));
}

inline VertexSet set_intersection(const VertexSet& a, const VertexSet& b) {
    std::vector<Vertex> out;
    std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
    return VertexSet(std::move(out));
}

inline VertexSet set_difference(const VertexSet& a, const VertexSet& b) {
    std::vector<Vertex> out;
    std::set_difference(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
    return VertexSet(std::move(out));
}

// Certified yes/no answer. When `yes`, `set` satisfies the defining
// predicate of the query (re-checkable with the matching predicate) and
// objective == set.size(). When `no`, `set` is empty and `objective` is the
// proven exclusion bound: every solution of size < objective was ruled out.
struct Witness {
    bool yes = false;
    VertexSet set;
    int objective = 0;
};

}  // namespace upg
