#pragma once

#include <algorithm>
#include <atomic>
#include <cstddef>
#include <cstdint>
#include <map>
#include <mutex>
#include <optional>
#include <string>
#include <thread>
#include <vector>

#include "core.hpp"
#include "errors.hpp"
#include "hypergraph.hpp"

namespace steiner_ramsey::oracle {

using Color = std::uint32_t;

inline constexpr std::size_t default_max_copies = 24;

/// A colouring problem: `family_size` items get colours, and each target is
/// a set of item indices. The arrow holds when every colouring makes some
/// target monochromatic. An empty target is monochromatic by convention.
struct ArrowProblem {
    std::size_t family_size = 0;
    std::vector<std::vector<std::size_t>> targets;
    std::size_t c = 2;
};

struct Verdict {
    bool holds = false;
    std::optional<std::vector<Color>> counterexample;  // when !holds
    std::uint64_t nodes = 0;
};

struct Options {
    std::size_t max_copies = default_max_copies;
    std::size_t jobs = 1;
};

namespace detail {

class ColoringSearch {
public:
    explicit ColoringSearch(const ArrowProblem& p) : p_(p), closing_(p.family_size) {
        for (std::size_t ti = 0; ti < p.targets.size(); ++ti) {
            const auto& t = p.targets[ti];
            if (t.empty()) continue;
            closing_[*std::max_element(t.begin(), t.end())].push_back(ti);
        }
    }

    // Colours items [from, n) after `col[0..from)` has been fixed. Returns
    // a line-free, i.e. target-free, colouring if one exists.
    std::optional<std::vector<Color>> run(std::vector<Color> col, std::size_t from, Color used,
                                          const std::atomic<bool>* stop = nullptr) {
        col.resize(p_.family_size);
        col_ = std::move(col);
        stop_ = stop;
        for (std::size_t i = 0; i < from; ++i)
            if (closes_mono(i)) return std::nullopt;
        if (dfs(from, used)) return col_;
        return std::nullopt;
    }

    std::uint64_t nodes() const { return nodes_; }

    bool closes_mono(std::size_t i) const {
        for (std::size_t ti : closing_[i]) {
            bool mono = true;
            for (std::size_t j : p_.targets[ti]) mono = mono && col_[j] == col_[i];
            if (mono) return true;
        }
        return false;
    }

private:
    bool dfs(std::size_t i, Color used) {
        if (i == p_.family_size) return true;
        ++nodes_;
        if (stop_ && (nodes_ & 0x3ff) == 0 && stop_->load(std::memory_order_relaxed)) return false;
        Color limit = static_cast<Color>(std::min<std::size_t>(p_.c, used + 1));
        for (Color k = 0; k < limit; ++k) {
            col_[i] = k;
            if (closes_mono(i)) continue;
            if (dfs(i + 1, std::max<Color>(used, k + 1))) return true;
        }
        return false;
    }

    const ArrowProblem& p_;
    std::vector<std::vector<std::size_t>> closing_;
    std::vector<Color> col_;
    const std::atomic<bool>* stop_ = nullptr;
    std::uint64_t nodes_ = 0;
};

// Canonical colour prefixes of length d (colours introduced in order).
inline void prefixes(std::size_t d, std::size_t c, std::vector<Color>& cur, Color used,
                     std::vector<std::pair<std::vector<Color>, Color>>& out) {
    if (cur.size() == d) {
        out.emplace_back(cur, used);
        return;
    }
    Color limit = static_cast<Color>(std::min<std::size_t>(c, used + 1));
    for (Color k = 0; k < limit; ++k) {
        cur.push_back(k);
        prefixes(d, c, cur, std::max<Color>(used, k + 1), out);
        cur.pop_back();
    }
}

} // namespace detail

/// Exhaustive pruned search for a colouring with no monochromatic target.
inline Verdict decide(const ArrowProblem& p, const Options& opt = {}) {
    if (p.c == 0) throw RangeError("need at least one colour");
    if (p.family_size > opt.max_copies)
        throw SizeLimitExceeded("family of " + std::to_string(p.family_size) +
                                " copies exceeds the oracle bound " +
                                std::to_string(opt.max_copies));
    for (const auto& t : p.targets)
        for (std::size_t j : t)
            if (j >= p.family_size) throw IndexOutOfRange("target refers to item " + std::to_string(j));
    Verdict v;
    for (const auto& t : p.targets)
        if (t.empty()) {
            v.holds = true;
            return v;
        }
    if (p.targets.empty()) {
        v.counterexample = std::vector<Color>(p.family_size, 0);
        return v;
    }

    std::size_t depth = 0;
    if (opt.jobs > 1)
        while (depth < p.family_size && depth < 12 &&
               saturating_pow(p.c, depth) < 8 * static_cast<std::uint64_t>(opt.jobs))
            ++depth;
    if (depth == 0) {
        detail::ColoringSearch s(p);
        auto found = s.run({}, 0, 0);
        v.nodes = s.nodes();
        v.holds = !found;
        v.counterexample = std::move(found);
        return v;
    }

    std::vector<std::pair<std::vector<Color>, Color>> work;
    std::vector<Color> cur;
    detail::prefixes(depth, p.c, cur, 0, work);
    std::atomic<std::size_t> next{0};
    std::atomic<bool> stop{false};
    std::atomic<std::uint64_t> nodes{0};
    std::mutex mu;
    std::optional<std::vector<Color>> found;
    auto worker = [&] {
        while (!stop.load()) {
            std::size_t i = next.fetch_add(1);
            if (i >= work.size()) return;
            detail::ColoringSearch s(p);
            auto r = s.run(work[i].first, depth, work[i].second, &stop);
            nodes += s.nodes();
            if (r) {
                std::lock_guard lock(mu);
                if (!found) found = std::move(r);
                stop = true;
            }
        }
    };
    std::vector<std::thread> pool;
    for (std::size_t j = 0; j < opt.jobs; ++j) pool.emplace_back(worker);
    for (auto& th : pool) th.join();
    v.nodes = nodes;
    v.holds = !found;
    v.counterexample = std::move(found);
    return v;
}

/// True iff `col` leaves every target non-monochromatic.
inline bool is_counterexample(const ArrowProblem& p, const std::vector<Color>& col) {
    if (col.size() != p.family_size) return false;
    for (const auto& t : p.targets) {
        if (t.empty()) return false;
        bool mono = std::all_of(t.begin(), t.end(), [&](std::size_t j) { return col[j] == col[t[0]]; });
        if (mono) return false;
    }
    for (Color k : col)
        if (k >= p.c) return false;
    return true;
}

/// The copy problem behind H -> (G)^F_c: colour the F-copies of the given
/// kind in H; each G-copy contributes the coloured F-copies inside it that
/// have the F-kind relative to that G-copy.
struct CopyProblem {
    ArrowProblem problem;
    std::vector<CopyEmbedding> f_copies;
    std::vector<CopyEmbedding> g_copies;
};

inline CopyProblem build_copy_problem(const Hypergraph& h, const Hypergraph& g,
                                      const Hypergraph& f, std::size_t t, std::size_t c,
                                      CopyKind kind_g, CopyKind kind_f, bool ordered) {
    CopyProblem out;
    out.f_copies = enumerate_copies(f, h, t, kind_f, ordered);
    out.g_copies = enumerate_copies(g, h, t, kind_g, ordered);
    out.problem.family_size = out.f_copies.size();
    out.problem.c = c;
    std::map<VertexList, std::vector<std::size_t>> by_image;
    for (std::size_t i = 0; i < out.f_copies.size(); ++i)
        by_image[out.f_copies[i].image()].push_back(i);
    for (const auto& gc : out.g_copies) {
        VertexList vs = gc.image();
        Hypergraph sub = h.induced(vs);
        std::vector<std::size_t> members;
        // F-copies of the right kind inside G~, matched back to coloured ones.
        for (const auto& inner : enumerate_copies(f, sub, t, kind_f, ordered)) {
            VertexList img;
            for (Vertex v : inner.image()) img.push_back(vs[v]);
            auto it = by_image.find(img);
            if (it == by_image.end()) continue;
            if (!ordered) {
                members.push_back(it->second.front());
                continue;
            }
            VertexList m;
            for (Vertex v : inner.map) m.push_back(vs[v]);
            for (std::size_t idx : it->second)
                if (out.f_copies[idx].map == m) members.push_back(idx);
        }
        std::sort(members.begin(), members.end());
        out.problem.targets.push_back(std::move(members));
    }
    return out;
}

inline Verdict arrows(const Hypergraph& h, const Hypergraph& g, const Hypergraph& f,
                      std::size_t t, std::size_t c, CopyKind kind_g, CopyKind kind_f,
                      bool ordered, const Options& opt = {}) {
    return decide(build_copy_problem(h, g, f, t, c, kind_g, kind_f, ordered).problem, opt);
}

inline Verdict arrows(const SteinerSystem& h, const SteinerSystem& g, const SteinerSystem& f,
                      std::size_t c, CopyKind kind_g, CopyKind kind_f, bool ordered,
                      const Options& opt = {}) {
    if (h.r() != g.r() || h.r() != f.r() || h.t() != g.t() || h.t() != f.t())
        throw ParameterMismatch("host, target and pattern must share (r,t)");
    return arrows(h.hypergraph(), g.hypergraph(), f.hypergraph(), h.t(), c, kind_g, kind_f,
                  ordered, opt);
}

} // namespace steiner_ramsey::oracle
