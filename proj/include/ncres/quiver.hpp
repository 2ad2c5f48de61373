#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace ncres {

struct Arrow {
    int id = -1;
    int tail = -1;
    int head = -1;
    std::string name;
};

/// Finite directed multigraph.  Vertices are 0-based; arrow names are unique.
class Quiver {
public:
    Quiver() = default;
    explicit Quiver(int num_vertices) : nv_(num_vertices) {}

    int add_arrow(int tail, int head, const std::string& name);

    int num_vertices() const { return nv_; }
    int num_arrows() const { return int(arrows_.size()); }
    const Arrow& arrow(int id) const { return arrows_.at(size_t(id)); }
    const std::vector<Arrow>& arrows() const { return arrows_; }
    int arrow_id(const std::string& name) const;
    const std::vector<int>& arrows_from(int v) const { return out_.at(size_t(v)); }
    const std::vector<int>& arrows_into(int v) const { return in_.at(size_t(v)); }

private:
    int nv_ = 0;
    std::vector<Arrow> arrows_;
    std::vector<std::vector<int>> out_, in_;
    std::map<std::string, int> by_name_;
};

/// Path in a quiver; multiplication reads right to left.  Arrows are stored
/// in application order (the first arrow applied is arrows()[0]).
class Path {
public:
    Path() = default;
    /// Trivial path e_v.
    Path(const Quiver* q, int vertex) : q_(q), vertex_(vertex) {}
    Path(const Quiver* q, std::vector<int> arrow_ids);

    /// Builds a path from arrow names written in composition order, i.e. the
    /// leftmost name is the last arrow applied ("b1 a0" applies a0 first).
    static Path from_names(const Quiver& q, const std::vector<std::string>& names);

    const Quiver* quiver() const { return q_; }
    bool is_trivial() const { return arrows_.empty(); }
    int length() const { return int(arrows_.size()); }
    const std::vector<int>& arrows() const { return arrows_; }
    int tail() const { return arrows_.empty() ? vertex_ : q_->arrow(arrows_.front()).tail; }
    int head() const { return arrows_.empty() ? vertex_ : q_->arrow(arrows_.back()).head; }

    friend bool operator==(const Path& a, const Path& b) {
        return a.arrows_ == b.arrows_ &&
               (!a.arrows_.empty() || a.vertex_ == b.vertex_);
    }
    friend bool operator<(const Path& a, const Path& b) {
        if (a.length() != b.length()) return a.length() < b.length();
        if (a.arrows_.empty()) return a.vertex_ < b.vertex_;
        return a.arrows_ < b.arrows_;
    }

    /// Name sequence in composition order (last applied first).
    std::string str() const;

private:
    const Quiver* q_ = nullptr;
    int vertex_ = -1;
    std::vector<int> arrows_;
};

/// Returns pq (apply q first); throws on non-composable endpoints.
Path compose(const Path& p, const Path& q);

/// Arrow subset of a quiver; the vertex set is always all of Q0.
class Subquiver {
public:
    Subquiver() = default;
    Subquiver(const Quiver* q, std::uint64_t arrow_mask) : q_(q), mask_(arrow_mask) {
        if (q && q->num_arrows() > 64)
            throw std::invalid_argument("Subquiver: more than 64 arrows");
    }
    static Subquiver full(const Quiver& q) {
        return Subquiver(&q, q.num_arrows() == 64
                                 ? ~std::uint64_t(0)
                                 : (std::uint64_t(1) << q.num_arrows()) - 1);
    }
    static Subquiver from_names(const Quiver& q, const std::vector<std::string>& names);

    const Quiver* quiver() const { return q_; }
    std::uint64_t mask() const { return mask_; }
    bool contains(int arrow_id) const { return mask_ >> arrow_id & 1; }
    int count() const;
    bool subset_of(const Subquiver& o) const {
        return q_ == o.q_ && (mask_ & ~o.mask_) == 0;
    }
    friend bool operator==(const Subquiver& a, const Subquiver& b) {
        return a.q_ == b.q_ && a.mask_ == b.mask_;
    }
    friend bool operator<(const Subquiver& a, const Subquiver& b) {
        return a.mask_ < b.mask_;
    }
    std::vector<std::string> arrow_names() const;

private:
    const Quiver* q_ = nullptr;
    std::uint64_t mask_ = 0;
};

bool path_in_subquiver(const Path& p, const Subquiver& s);

/// All paths of length <= max_len with the given endpoints, ordered by
/// (length, arrow-id sequence).
std::vector<Path> enumerate_paths(const Quiver& q, std::optional<int> from,
                                  std::optional<int> to, int max_len);

} // namespace ncres
