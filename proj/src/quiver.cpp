#include "ncres/quiver.hpp"

#include <algorithm>
#include <bit>
#include <sstream>

namespace ncres {

int Quiver::add_arrow(int tail, int head, const std::string& name) {
    if (tail < 0 || tail >= nv_ || head < 0 || head >= nv_)
        throw std::invalid_argument("Quiver: arrow endpoint out of range");
    if (by_name_.count(name))
        throw std::invalid_argument("Quiver: duplicate arrow name " + name);
    int id = int(arrows_.size());
    arrows_.push_back({id, tail, head, name});
    out_.resize(size_t(nv_));
    in_.resize(size_t(nv_));
    out_[size_t(tail)].push_back(id);
    in_[size_t(head)].push_back(id);
    by_name_[name] = id;
    return id;
}

int Quiver::arrow_id(const std::string& name) const {
    auto it = by_name_.find(name);
    if (it == by_name_.end())
        throw std::invalid_argument("Quiver: unknown arrow " + name);
    return it->second;
}

Path::Path(const Quiver* q, std::vector<int> arrow_ids)
    : q_(q), arrows_(std::move(arrow_ids)) {
    for (size_t i = 0; i + 1 < arrows_.size(); ++i)
        if (q_->arrow(arrows_[i]).head != q_->arrow(arrows_[i + 1]).tail)
            throw std::invalid_argument("Path: arrows do not compose");
    if (!arrows_.empty()) vertex_ = q_->arrow(arrows_.front()).tail;
}

Path Path::from_names(const Quiver& q, const std::vector<std::string>& names) {
    std::vector<int> ids;
    ids.reserve(names.size());
    for (auto it = names.rbegin(); it != names.rend(); ++it)
        ids.push_back(q.arrow_id(*it));
    return Path(&q, std::move(ids));
}

std::string Path::str() const {
    if (arrows_.empty()) return "e" + std::to_string(vertex_);
    std::ostringstream os;
    for (auto it = arrows_.rbegin(); it != arrows_.rend(); ++it) {
        if (it != arrows_.rbegin()) os << "*";
        os << q_->arrow(*it).name;
    }
    return os.str();
}

Path compose(const Path& p, const Path& q) {
    if (p.quiver() != q.quiver())
        throw std::invalid_argument("compose: different quivers");
    if (p.tail() != q.head())
        throw std::invalid_argument("compose: endpoints do not match");
    if (q.is_trivial()) return p;
    if (p.is_trivial()) return q;
    std::vector<int> ids = q.arrows();
    ids.insert(ids.end(), p.arrows().begin(), p.arrows().end());
    return Path(p.quiver(), std::move(ids));
}

Subquiver Subquiver::from_names(const Quiver& q, const std::vector<std::string>& names) {
    std::uint64_t m = 0;
    for (const auto& n : names) m |= std::uint64_t(1) << q.arrow_id(n);
    return Subquiver(&q, m);
}

int Subquiver::count() const { return std::popcount(mask_); }

std::vector<std::string> Subquiver::arrow_names() const {
    std::vector<std::string> names;
    for (int a = 0; a < q_->num_arrows(); ++a)
        if (contains(a)) names.push_back(q_->arrow(a).name);
    return names;
}

bool path_in_subquiver(const Path& p, const Subquiver& s) {
    if (p.quiver() != s.quiver())
        throw std::invalid_argument("path_in_subquiver: different quivers");
    for (int a : p.arrows())
        if (!s.contains(a)) return false;
    return true;
}

std::vector<Path> enumerate_paths(const Quiver& q, std::optional<int> from,
                                  std::optional<int> to, int max_len) {
    if (max_len < 0) throw std::invalid_argument("enumerate_paths: negative bound");
    std::vector<Path> out;
    // trivial paths
    for (int v = 0; v < q.num_vertices(); ++v) {
        if (from && *from != v) continue;
        if (to && *to != v) continue;
        out.emplace_back(&q, v);
    }
    std::vector<std::vector<int>> frontier;  // arrow-id sequences, application order
    for (const Arrow& a : q.arrows()) {
        if (from && a.tail != *from) continue;
        frontier.push_back({a.id});
    }
    for (int len = 1; len <= max_len && !frontier.empty(); ++len) {
        std::vector<std::vector<int>> next;
        for (auto& seq : frontier) {
            int h = q.arrow(seq.back()).head;
            if (!to || h == *to) out.emplace_back(&q, seq);
            for (int a : q.arrows_from(h)) {
                if (len == max_len) continue;
                auto ext = seq;
                ext.push_back(a);
                next.push_back(std::move(ext));
            }
        }
        frontier = std::move(next);
    }
    std::sort(out.begin(), out.end());
    return out;
}

} // namespace ncres
