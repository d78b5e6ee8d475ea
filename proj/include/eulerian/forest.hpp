#pragma once

#include <cctype>
#include <cstdlib>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "eulerian/detail.hpp"
#include "eulerian/numeric.hpp"
#include "eulerian/parallel.hpp"
#include "eulerian/polynomial.hpp"
#include "eulerian/signed_words.hpp"

namespace eulerian {

// Ordered forest of ordered rooted trees. Vertices are numbered in the order
// they are created; the provided builders and the parser both number in
// depth-first preorder across the trees, left to right.
//
// Order convention: x lies below y exactly when y is a proper ancestor of x,
// so roots are maximal elements and a linear extension lists every vertex
// after all of its descendants.
class PlaneForest {
public:
    PlaneForest() = default;

    // n trees, each a root with a single child. Vertices 2i / 2i+1 are the
    // root / child of the i-th tree (0-based).
    static PlaneForest pair_forest(int n) {
        if (n < 0) throw std::invalid_argument("pair_forest: n < 0");
        PlaneForest f;
        for (int i = 0; i < n; ++i) {
            const int root = f.add_root();
            f.add_child(root);
        }
        return f;
    }

    // pair_forest(n-1) plus a single-vertex tree as the rightmost component.
    static PlaneForest pair_forest_with_singleton(int n) {
        if (n < 1)
            throw std::invalid_argument("pair_forest_with_singleton: n < 1");
        PlaneForest f = pair_forest(n - 1);
        f.add_root();
        return f;
    }

    // Nested parentheses, one '(' .. ')' pair per vertex: a forest is a
    // sequence of trees, a tree is '(' followed by its child forest and ')'.
    // Whitespace is ignored. Example: "(()())" is a root with two leaves.
    static PlaneForest parse(std::string_view text) {
        PlaneForest f;
        std::vector<int> stack;
        for (char ch : text) {
            if (std::isspace(static_cast<unsigned char>(ch))) continue;
            if (ch == '(') {
                const int v =
                    stack.empty() ? f.add_root() : f.add_child(stack.back());
                stack.push_back(v);
            } else if (ch == ')') {
                if (stack.empty())
                    throw std::invalid_argument("PlaneForest::parse: unbalanced ')'");
                stack.pop_back();
            } else {
                throw std::invalid_argument(
                    "PlaneForest::parse: only parentheses and whitespace allowed");
            }
        }
        if (!stack.empty())
            throw std::invalid_argument("PlaneForest::parse: unbalanced '('");
        return f;
    }

    std::string to_string() const {
        std::string out;
        for (int r : roots_) write(r, out);
        return out;
    }

    int vertex_count() const { return static_cast<int>(parent_.size()); }
    const std::vector<int>& roots() const { return roots_; }
    int parent(int v) const { return parent_[static_cast<std::size_t>(v)]; }
    const std::vector<int>& children(int v) const {
        return children_[static_cast<std::size_t>(v)];
    }

    bool is_proper_ancestor(int x, int y) const {
        for (int p = parent(y); p >= 0; p = parent(p))
            if (p == x) return true;
        return false;
    }

    // Number of linear extensions: |V|! divided by the subtree sizes.
    Int linear_extension_count() const {
        const int n = vertex_count();
        Int total;
        mpz_fac_ui(total.get_mpz_t(), static_cast<unsigned long>(n));
        std::vector<int> size(static_cast<std::size_t>(n), 0);
        // children are created after parents, so a reverse sweep is bottom-up
        for (int v = n - 1; v >= 0; --v) {
            ++size[v];
            total /= size[v];
            if (parent_[v] >= 0) size[parent_[v]] += size[v];
        }
        return total;
    }

    int add_root() {
        parent_.push_back(-1);
        children_.emplace_back();
        roots_.push_back(vertex_count() - 1);
        return vertex_count() - 1;
    }

    int add_child(int parent) {
        if (parent < 0 || parent >= vertex_count())
            throw std::invalid_argument("add_child: no such vertex");
        parent_.push_back(parent);
        children_.emplace_back();
        const int v = vertex_count() - 1;
        children_[parent].push_back(v);
        return v;
    }

private:
    void write(int v, std::string& out) const {
        out += '(';
        for (int c : children(v)) write(c, out);
        out += ')';
    }

    std::vector<int> parent_;
    std::vector<std::vector<int>> children_;
    std::vector<int> roots_;
};

// Signed integer labels by vertex index, pairwise distinct in absolute value.
struct SignedLabeling {
    std::vector<int> labels;
};

// Label families over the structured forests:
//   pair_types       - pair_forest(n); each two-vertex tree takes one of the
//                      four sign patterns below.
//   forced_singleton - pair_forest_with_singleton(n); the first n-1 trees
//                      take the four patterns, the singleton is fixed
//                      negative.
//   free_singleton   - same, but the singleton takes either sign.
enum class ForestLabelFamily { pair_types, forced_singleton, free_singleton };

// Labels of the i-th two-vertex tree (1-based) as (root, child), using label
// magnitudes 2i and 2i-1. The four patterns, in enumeration order:
//   1: ( 2i,    2i-1)      2: ( 2i,   -(2i-1))
//   3: (-2i,    2i-1)      4: (-(2i-1), -2i)
inline std::pair<int, int> pair_tree_labels(int i, int type) {
    if (i < 1) throw std::invalid_argument("pair_tree_labels: i must be >= 1");
    const int small = 2 * i - 1, big = 2 * i;
    switch (type) {
        case 1: return {big, small};
        case 2: return {big, -small};
        case 3: return {-big, small};
        case 4: return {-small, -big};
    }
    throw std::invalid_argument("pair_tree_labels: type must be 1..4");
}

inline PlaneForest labeled_forest(ForestLabelFamily family, int n) {
    return family == ForestLabelFamily::pair_types
               ? PlaneForest::pair_forest(n)
               : PlaneForest::pair_forest_with_singleton(n);
}

// Visits every labeling in the family, as a SignedLabeling indexed by
// vertex. Enumeration order: the type tuple over the two-vertex trees counts
// up lexicographically with the last tree fastest; for free_singleton the
// singleton sign (positive first) flips fastest of all. The singleton label
// magnitude is 2n-1.
template <typename F>
bool visit_labelings(ForestLabelFamily family, int n, F&& f) {
    if (n < 1) throw std::invalid_argument("visit_labelings: n must be >= 1");
    const bool has_singleton = family != ForestLabelFamily::pair_types;
    const int pairs = has_singleton ? n - 1 : n;
    const int vcount = 2 * pairs + (has_singleton ? 1 : 0);

    SignedLabeling w;
    w.labels.assign(static_cast<std::size_t>(vcount), 0);
    std::vector<int> type(static_cast<std::size_t>(pairs), 1);
    int singleton_sign = 1;

    for (;;) {
        for (int i = 0; i < pairs; ++i) {
            const auto [root, child] = pair_tree_labels(i + 1, type[i]);
            w.labels[2 * i] = root;
            w.labels[2 * i + 1] = child;
        }
        if (has_singleton) {
            const int magnitude = 2 * n - 1;
            const int sign =
                family == ForestLabelFamily::forced_singleton ? -1 : singleton_sign;
            w.labels[static_cast<std::size_t>(vcount) - 1] = sign * magnitude;
        }
        if (!detail::keep_going(f, static_cast<const SignedLabeling&>(w)))
            return false;

        if (family == ForestLabelFamily::free_singleton && singleton_sign == 1) {
            singleton_sign = -1;
            continue;
        }
        singleton_sign = 1;
        int i = pairs - 1;
        while (i >= 0 && type[i] == 4) {
            type[i] = 1;
            --i;
        }
        if (i < 0) return true;
        ++type[i];
    }
}

// Visits every linear extension as a span of vertex indices (descendants
// always before ancestors). Extensions are generated by backtracking over
// the currently placeable vertices in increasing index order.
template <typename F>
bool visit_linear_extensions(const PlaneForest& forest, F&& f) {
    const int n = forest.vertex_count();
    std::vector<int> unplaced_children(static_cast<std::size_t>(n));
    for (int v = 0; v < n; ++v)
        unplaced_children[v] = static_cast<int>(forest.children(v).size());
    std::vector<char> placed(static_cast<std::size_t>(n), 0);
    std::vector<int> seq;
    seq.reserve(static_cast<std::size_t>(n));

    bool keep = true;
    auto rec = [&](auto&& self) -> void {
        if (!keep) return;
        if (static_cast<int>(seq.size()) == n) {
            keep = detail::keep_going(f, std::span<const int>(seq));
            return;
        }
        for (int v = 0; v < n && keep; ++v) {
            if (placed[v] || unplaced_children[v] != 0) continue;
            placed[v] = 1;
            seq.push_back(v);
            const int p = forest.parent(v);
            if (p >= 0) --unplaced_children[p];
            self(self);
            if (p >= 0) ++unplaced_children[p];
            seq.pop_back();
            placed[v] = 0;
        }
    };
    rec(rec);
    return keep;
}

// Visits every linear extension as the signed word of its labels.
template <typename F>
bool visit_labeled_extensions(const PlaneForest& forest,
                              const SignedLabeling& w, F&& f) {
    const int n = forest.vertex_count();
    if (static_cast<int>(w.labels.size()) != n)
        throw std::domain_error("visit_labeled_extensions: labeling size mismatch");
    for (int label : w.labels)
        if (label == 0)
            throw std::domain_error("visit_labeled_extensions: incomplete labeling");
    SignedWord word(static_cast<std::size_t>(n));
    return visit_linear_extensions(forest, [&](std::span<const int> vs) {
        for (int i = 0; i < n; ++i) word[i] = w.labels[vs[i]];
        return detail::keep_going(f, std::span<const int>(word));
    });
}

// Collapses the label pair {2i-1, 2i} to the letter i, keeping signs: a word
// whose absolute values are exactly {1, .., 2n} maps to a signed word over
// the multiset {1^2, .., n^2}. Sign-preserving and descent-preserving on the
// words this library produces.
inline SignedWord collapse_label_pairs(std::span<const int> word) {
    const int m = static_cast<int>(word.size());
    if (m % 2)
        throw std::domain_error("collapse_label_pairs: odd word length");
    std::vector<char> seen(static_cast<std::size_t>(m) + 1, 0);
    for (int v : word) {
        const int a = std::abs(v);
        if (a < 1 || a > m || seen[a])
            throw std::domain_error(
                "collapse_label_pairs: absolute values must be exactly 1..2n");
        seen[a] = 1;
    }
    SignedWord out(static_cast<std::size_t>(m));
    for (int j = 0; j < m; ++j) {
        const int a = std::abs(word[j]);
        out[j] = word[j] < 0 ? -((a + 1) / 2) : (a + 1) / 2;
    }
    return out;
}

// Distribution of des_b over all labeled linear extensions of the family's
// forest: every labeling in the family, every linear extension under it.
// Extensions are cached when their count is small (they are shared across
// all labelings); threads split the labeling stream.
inline Polynomial forest_descent_polynomial(ForestLabelFamily family, int n,
                                            int jobs = 1) {
    if (n < 1)
        throw std::invalid_argument("forest_descent_polynomial: n must be >= 1");
    const PlaneForest forest = labeled_forest(family, n);
    const int m = forest.vertex_count();

    const bool cache = forest.linear_extension_count() <= (1 << 21);
    std::vector<int> flat;
    if (cache) {
        flat.reserve(static_cast<std::size_t>(
            forest.linear_extension_count().get_ui() * m));
        visit_linear_extensions(forest, [&](std::span<const int> vs) {
            flat.insert(flat.end(), vs.begin(), vs.end());
        });
    }

    const long parts = jobs <= 1 ? 1 : 4L * jobs;
    auto counts = parallel_fold_counts(
        jobs, parts, static_cast<std::size_t>(m) + 2,
        [&](long task, std::vector<unsigned long long>& table) {
            long index = 0;
            SignedWord word(static_cast<std::size_t>(m));
            visit_labelings(family, n, [&](const SignedLabeling& w) {
                if (index++ % parts != task) return;
                if (cache) {
                    for (std::size_t off = 0; off < flat.size();
                         off += static_cast<std::size_t>(m)) {
                        for (int j = 0; j < m; ++j)
                            word[j] = w.labels[flat[off + j]];
                        ++table[des_b(word)];
                    }
                } else {
                    visit_labeled_extensions(forest, w,
                                             [&](std::span<const int> ww) {
                                                 ++table[des_b(ww)];
                                             });
                }
            });
        });
    return Polynomial::from_counts(counts);
}

}  // namespace eulerian
