#pragma once

// Deliberately naive reference implementations. None of these call into the
// library's algorithms; they work on plain edge lists and enumerate
// everything.

#include <algorithm>
#include <cstdint>
#include <functional>
#include <numeric>
#include <random>
#include <set>
#include <vector>

namespace brute {

using Set = std::vector<std::uint32_t>;
using Edges = std::vector<Set>;

inline std::set<Set> edge_set(const Edges& es) {
    std::set<Set> s;
    for (auto e : es) {
        std::sort(e.begin(), e.end());
        s.insert(e);
    }
    return s;
}

inline void subsets(std::uint32_t n, std::size_t k, const std::function<void(const Set&)>& f) {
    Set cur;
    std::function<void(std::uint32_t)> rec = [&](std::uint32_t start) {
        if (cur.size() == k) {
            f(cur);
            return;
        }
        for (std::uint32_t v = start; v < n; ++v) {
            cur.push_back(v);
            rec(v + 1);
            cur.pop_back();
        }
    };
    rec(0);
}

inline void subsets_of(const Set& items, std::size_t k, const std::function<void(const Set&)>& f) {
    subsets(static_cast<std::uint32_t>(items.size()), k, [&](const Set& idx) {
        Set s;
        for (auto i : idx) s.push_back(items[i]);
        f(s);
    });
}

inline std::size_t meet(Set a, Set b) {
    std::sort(a.begin(), a.end());
    std::sort(b.begin(), b.end());
    Set c;
    std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(c));
    return c.size();
}

inline bool steiner(const Edges& es, std::size_t t) {
    for (std::size_t i = 0; i < es.size(); ++i)
        for (std::size_t j = i + 1; j < es.size(); ++j)
            if (meet(es[i], es[j]) >= t) return false;
    return true;
}

// Induced: for every r-subset of the pattern's vertices, edge in pattern iff
// its image is an edge of the host.
inline bool induced(std::uint32_t pn, const Edges& pe, const Edges& he, std::size_t r,
                    const Set& map) {
    auto P = edge_set(pe), H = edge_set(he);
    bool ok = true;
    subsets(pn, r, [&](const Set& s) {
        Set img;
        for (auto v : s) img.push_back(map[v]);
        std::sort(img.begin(), img.end());
        if (P.count(s) != H.count(img)) ok = false;
    });
    return ok;
}

inline bool strongly_induced(std::uint32_t pn, const Edges& pe, const Edges& he, std::size_t r,
                             std::size_t t, const Set& map) {
    if (!induced(pn, pe, he, r, map)) return false;
    Set image = map;
    std::sort(image.begin(), image.end());
    for (const auto& e : he) {
        std::size_t m = meet(e, image);
        if (m >= t && m < r) return false;
    }
    return true;
}

// Images (sorted vertex sets) of all copies; `ordered` restricts to
// monotone maps. Enumerates all injective maps.
inline std::set<Set> copy_images(std::uint32_t pn, const Edges& pe, std::uint32_t hn,
                                 const Edges& he, std::size_t r, std::size_t t, bool strong,
                                 bool ordered) {
    std::set<Set> out;
    subsets(hn, pn, [&](const Set& image) {
        Set perm = image;
        do {
            if (ordered && perm != image) continue;
            bool ok = strong ? strongly_induced(pn, pe, he, r, t, perm)
                             : induced(pn, pe, he, r, perm);
            if (ok) {
                out.insert(image);
                break;
            }
        } while (std::next_permutation(perm.begin(), perm.end()));
    });
    return out;
}

inline bool homogeneous(std::uint32_t n, const Edges& es) {
    auto E = edge_set(es);
    Set p(n);
    std::iota(p.begin(), p.end(), 0u);
    do {
        for (const auto& e : E) {
            Set img;
            for (auto v : e) img.push_back(p[v]);
            std::sort(img.begin(), img.end());
            if (!E.count(img)) return false;
        }
    } while (std::next_permutation(p.begin(), p.end()));
    return true;
}

inline bool complete(std::uint32_t n, const Edges& es, std::size_t t) {
    bool ok = true;
    subsets(n, t, [&](const Set& x) {
        bool covered = false;
        for (const auto& e : es)
            if (meet(x, e) == t) covered = true;
        if (!covered) ok = false;
    });
    return ok;
}

inline bool isomorphic(std::uint32_t n, const Edges& a, const Edges& b) {
    auto A = edge_set(a), B = edge_set(b);
    if (A.size() != B.size()) return false;
    Set p(n);
    std::iota(p.begin(), p.end(), 0u);
    do {
        std::set<Set> img;
        for (const auto& e : A) {
            Set f;
            for (auto v : e) f.push_back(p[v]);
            std::sort(f.begin(), f.end());
            img.insert(f);
        }
        if (img == B) return true;
    } while (std::next_permutation(p.begin(), p.end()));
    return false;
}

// Random Steiner (r,t)-system on n vertices: shuffle all r-subsets and keep
// each one that is compatible with those already kept, with probability p.
inline Edges random_steiner(std::mt19937& rng, std::uint32_t n, std::size_t r, std::size_t t,
                            double p = 0.6) {
    Edges all;
    subsets(n, r, [&](const Set& s) { all.push_back(s); });
    std::shuffle(all.begin(), all.end(), rng);
    std::bernoulli_distribution keep(p);
    Edges out;
    for (const auto& e : all) {
        if (!keep(rng)) continue;
        bool ok = true;
        for (const auto& f : out)
            if (meet(e, f) >= t) ok = false;
        if (ok) out.push_back(e);
    }
    return out;
}

// All words over {-1, 0..q-1}^n containing -1, as a set.
inline std::set<std::vector<int>> lines(int q, int n) {
    std::set<std::vector<int>> out;
    std::vector<int> w(n, -1);
    std::function<void(int)> rec = [&](int h) {
        if (h == n) {
            if (std::count(w.begin(), w.end(), -1) > 0) out.insert(w);
            return;
        }
        for (int a = -1; a < q; ++a) {
            w[h] = a;
            rec(h + 1);
        }
    };
    rec(0);
    return out;
}

inline std::uint64_t rank(const std::vector<int>& p, int q) {
    std::uint64_t r = 0;
    for (int a : p) r = r * q + a;
    return r;
}

// Does every c-colouring of [q]^n have a monochromatic line? Full
// enumeration of all c^(q^n) colourings.
inline bool hj_holds(int q, int c, int n) {
    auto ls = lines(q, n);
    std::uint64_t pts = 1;
    for (int i = 0; i < n; ++i) pts *= q;
    std::vector<int> col(pts, 0);
    while (true) {
        bool found = false;
        for (const auto& w : ls) {
            std::set<int> cs;
            for (int a = 0; a < q; ++a) {
                std::vector<int> p = w;
                for (auto& x : p)
                    if (x == -1) x = a;
                cs.insert(col[rank(p, q)]);
            }
            if (cs.size() == 1) {
                found = true;
                break;
            }
        }
        if (!found) return false;
        std::size_t i = 0;
        while (i < pts && col[i] == c - 1) col[i++] = 0;
        if (i == pts) return true;
        ++col[i];
    }
}

// Whether every c-colouring of n items makes some target monochromatic.
inline bool arrow_holds(std::size_t n, const std::vector<std::vector<std::size_t>>& targets, std::uint32_t c) {
    std::vector<std::uint32_t> col(n, 0);
    while (true) {
        bool some = false;
        for (const auto& t : targets) {
            bool mono = true;
            for (auto j : t) mono = mono && col[j] == col[t[0]];
            if (mono) some = true;
        }
        if (!some) return false;
        std::size_t i = 0;
        while (i < n && col[i] == c - 1) col[i++] = 0;
        if (i == n) return true;
        ++col[i];
    }
}

// Every ordering of G contains a strongly induced copy of every ordering of K,
// with K's i-th vertex sent to the i-th vertex of the copy.
inline bool ordering_property(std::uint32_t gn, const Edges& ge, std::uint32_t kn, const Edges& ke,
                              std::size_t r, std::size_t t) {
    Set pos(gn);
    std::iota(pos.begin(), pos.end(), 0u);
    do {
        Set sigma(kn);
        std::iota(sigma.begin(), sigma.end(), 0u);
        do {
            Edges ks;
            for (const auto& e : ke) {
                Set m;
                for (auto v : e) m.push_back(sigma[v]);
                ks.push_back(m);
            }
            bool found = false;
            subsets(gn, kn, [&](const Set& s) {
                if (found) return;
                Set by_pos = s;
                std::sort(by_pos.begin(), by_pos.end(), [&](auto a, auto b) { return pos[a] < pos[b]; });
                if (strongly_induced(kn, ks, ge, r, t, by_pos)) found = true;
            });
            if (!found) return false;
        } while (std::next_permutation(sigma.begin(), sigma.end()));
    } while (std::next_permutation(pos.begin(), pos.end()));
    return true;
}

} // namespace brute
