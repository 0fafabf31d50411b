#pragma once

#include <algorithm>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "combinatorics.hpp"
#include "errors.hpp"

// Hales-Jewett cubes over the alphabet {0, ..., q-1}. Points are ranked in
// mixed radix with the first coordinate most significant, so rank order is
// lexicographic order.
namespace steiner_ramsey::hj {

using Letter = std::uint32_t;
using Point = std::vector<Letter>;
using Color = std::uint32_t;

inline constexpr std::uint64_t default_point_bound = std::uint64_t{1} << 22;

struct Cube {
    std::size_t q = 1;
    std::size_t n = 1;

    std::uint64_t point_count() const { return saturating_pow(q, n); }
    std::uint64_t line_count() const { return saturating_pow(q + 1, n) - saturating_pow(q, n); }
};

inline void check_cube(const Cube& cube, std::uint64_t bound = default_point_bound) {
    if (cube.q == 0 || cube.n == 0) throw RangeError("cube needs q >= 1 and n >= 1");
    if (cube.point_count() > bound)
        throw SizeLimitExceeded("cube with " + std::to_string(cube.q) + "^" +
                                std::to_string(cube.n) + " points exceeds bound " +
                                std::to_string(bound));
}

inline std::uint64_t rank(const Cube& cube, const Point& p) {
    if (p.size() != cube.n) throw DimensionMismatch("point has wrong dimension");
    std::uint64_t r = 0;
    for (Letter a : p) {
        if (a >= cube.q) throw LetterNotInAlphabet("letter " + std::to_string(a));
        r = r * cube.q + a;
    }
    return r;
}

inline Point unrank(const Cube& cube, std::uint64_t r) {
    Point p(cube.n);
    for (std::size_t h = cube.n; h-- > 0;) {
        p[h] = static_cast<Letter>(r % cube.q);
        r /= cube.q;
    }
    return p;
}

/// A combinatorial line: word[h] is the constant letter g(h) for h in C, or
/// `moving` for h in M. M is never empty.
struct Line {
    static constexpr std::int32_t moving = -1;
    std::vector<std::int32_t> word;

    std::vector<std::size_t> constant_coords() const {
        std::vector<std::size_t> c;
        for (std::size_t h = 0; h < word.size(); ++h)
            if (word[h] != moving) c.push_back(h);
        return c;
    }
    std::vector<std::size_t> moving_coords() const {
        std::vector<std::size_t> m;
        for (std::size_t h = 0; h < word.size(); ++h)
            if (word[h] == moving) m.push_back(h);
        return m;
    }
    friend auto operator<=>(const Line&, const Line&) = default;
};

inline Line make_line(const Cube& cube, std::vector<std::int32_t> word) {
    if (word.size() != cube.n) throw DimensionMismatch("line has wrong dimension");
    bool has_moving = false;
    for (auto a : word) {
        if (a == Line::moving)
            has_moving = true;
        else if (a < 0 || static_cast<std::size_t>(a) >= cube.q)
            throw LetterNotInAlphabet("letter " + std::to_string(a));
    }
    if (!has_moving) throw RangeError("a line needs at least one moving coordinate");
    return Line{std::move(word)};
}

/// The point of `line` whose moving coordinates all carry `a`.
inline Point embed_line(const Cube& cube, const Line& line, Letter a) {
    if (a >= cube.q)
        throw LetterNotInAlphabet("letter " + std::to_string(a) + " not below q=" +
                                  std::to_string(cube.q));
    if (line.word.size() != cube.n) throw DimensionMismatch("line has wrong dimension");
    Point p(cube.n);
    for (std::size_t h = 0; h < cube.n; ++h)
        p[h] = line.word[h] == Line::moving ? a : static_cast<Letter>(line.word[h]);
    return p;
}

inline std::vector<std::uint64_t> line_ranks(const Cube& cube, const Line& line) {
    std::vector<std::uint64_t> out;
    out.reserve(cube.q);
    for (Letter a = 0; a < cube.q; ++a) out.push_back(rank(cube, embed_line(cube, line, a)));
    return out;
}

/// All lines, lexicographic in the word with `moving` below every letter.
inline std::vector<Line> enumerate_lines(const Cube& cube,
                                         std::uint64_t bound = default_point_bound) {
    check_cube(cube, bound);
    if (cube.line_count() > bound)
        throw SizeLimitExceeded("too many lines");
    std::vector<Line> out;
    out.reserve(cube.line_count());
    std::vector<std::int32_t> w(cube.n, Line::moving);
    const auto top = static_cast<std::int32_t>(cube.q) - 1;
    while (true) {
        for (auto a : w)
            if (a == Line::moving) {
                out.push_back(Line{w});
                break;
            }
        std::size_t h = cube.n;
        while (h > 0 && w[h - 1] == top) --h;
        if (h == 0) break;
        ++w[h - 1];
        for (std::size_t j = h; j < cube.n; ++j) w[j] = Line::moving;
    }
    return out;
}

/// First line (in enumeration order) on which `coloring` is constant.
inline std::optional<std::pair<Line, Color>>
find_monochromatic_line(const Cube& cube, const std::vector<Color>& coloring,
                        std::uint64_t bound = default_point_bound) {
    check_cube(cube, bound);
    if (coloring.size() != cube.point_count())
        throw DimensionMismatch("coloring has " + std::to_string(coloring.size()) +
                                " entries for " + std::to_string(cube.point_count()) + " points");
    for (auto& line : enumerate_lines(cube, bound)) {
        auto ranks = line_ranks(cube, line);
        Color c = coloring[ranks[0]];
        bool mono = true;
        for (auto r : ranks) mono = mono && coloring[r] == c;
        if (mono) return std::make_pair(std::move(line), c);
    }
    return std::nullopt;
}

enum class Verdict { arrow, counterexample, undecided };

inline std::string to_string(Verdict v) {
    switch (v) {
    case Verdict::arrow: return "arrow";
    case Verdict::counterexample: return "counterexample";
    case Verdict::undecided: return "undecided";
    }
    return "?";
}

struct Certificate {
    std::size_t q = 1, c = 1, n = 1;
    Verdict verdict = Verdict::undecided;
    std::optional<std::vector<Color>> counterexample;
};

inline constexpr std::uint64_t default_node_budget = 20'000'000;

/// Decides whether every c-colouring of the cube has a monochromatic line.
/// Points are coloured in rank order. A line is checked when its largest
/// point (all moving coordinates at q-1) is coloured. Colours are introduced
/// in order, which removes the c! relabelling symmetry.
inline Certificate decide_cube(std::size_t q, std::size_t c, std::size_t n,
                               std::uint64_t node_budget = default_node_budget,
                               std::uint64_t point_bound = default_point_bound) {
    Cube cube{q, n};
    check_cube(cube, point_bound);
    if (c == 0) throw RangeError("need at least one colour");
    const std::uint64_t points = cube.point_count();
    std::vector<std::vector<std::vector<std::uint64_t>>> closing(points);
    for (auto& line : enumerate_lines(cube, point_bound)) {
        auto ranks = line_ranks(cube, line);
        auto last = ranks.back();
        ranks.pop_back();
        closing[last].push_back(std::move(ranks));
    }
    std::vector<Color> col(points, 0);
    std::uint64_t nodes = 0;
    bool exhausted = false;

    auto closes_mono = [&](std::uint64_t p) {
        for (const auto& rest : closing[p]) {
            bool mono = true;
            for (auto r : rest) mono = mono && col[r] == col[p];
            if (mono) return true;
        }
        return false;
    };
    // Returns true once a line-free colouring is found.
    auto dfs = [&](auto& self, std::uint64_t p, Color used) -> bool {
        if (p == points) return true;
        if (++nodes > node_budget) {
            exhausted = true;
            return false;
        }
        Color limit = static_cast<Color>(std::min<std::size_t>(c, used + 1));
        for (Color k = 0; k < limit; ++k) {
            col[p] = k;
            if (closes_mono(p)) continue;
            if (self(self, p + 1, std::max<Color>(used, k + 1))) return true;
            if (exhausted) return false;
        }
        return false;
    };

    Certificate cert{q, c, n, Verdict::undecided, std::nullopt};
    if (dfs(dfs, 0, 0)) {
        cert.verdict = Verdict::counterexample;
        cert.counterexample = col;
    } else if (!exhausted) {
        cert.verdict = Verdict::arrow;
    }
    return cert;
}

/// Least n <= bound with every c-colouring of {0..q-1}^n containing a
/// monochromatic line; absent if no such n is found within the bound or the
/// search budget.
inline std::optional<std::size_t> hj_number(std::size_t q, std::size_t c, std::size_t bound,
                                            std::uint64_t node_budget = default_node_budget) {
    if (q == 0 || c == 0) throw RangeError("hj_number needs q, c >= 1");
    for (std::size_t n = 1; n <= bound; ++n) {
        if (saturating_pow(q, n) > default_point_bound) return std::nullopt;
        auto cert = decide_cube(q, c, n, node_budget);
        if (cert.verdict == Verdict::arrow) return n;
        if (cert.verdict == Verdict::undecided) return std::nullopt;
    }
    return std::nullopt;
}

} // namespace steiner_ramsey::hj
