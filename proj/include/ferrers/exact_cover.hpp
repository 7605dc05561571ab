#pragma once

#include <atomic>
#include <chrono>
#include <cstdint>
#include <limits>
#include <optional>
#include <vector>

namespace ferrers {

/// Search limits shared by the exact and branch-and-bound solvers.
struct Budget {
    std::uint64_t max_nodes = 200'000'000;
    std::optional<std::chrono::milliseconds> time_limit;
};

/// Dancing-links exact cover over primary columns only.
///
/// Column choice is minimum remaining rows, ties to the lowest column
/// index; rows of a column are tried in insertion order. Both rules make
/// node counts reproducible.
class DancingLinks {
public:
    DancingLinks(int columns, const std::vector<std::vector<int>>& rows) : columns_(columns) {
        const int header_count = columns + 1;
        nodes_.resize(static_cast<std::size_t>(header_count));
        size_.assign(static_cast<std::size_t>(header_count), 0);
        for (int c = 0; c < header_count; ++c) {
            auto& h = nodes_[static_cast<std::size_t>(c)];
            h.left = c == 0 ? columns : c - 1;
            h.right = c == columns ? 0 : c + 1;
            h.up = h.down = c;
            h.column = c;
            h.row = -1;
        }
        for (std::size_t r = 0; r < rows.size(); ++r)
            add_row(static_cast<int>(r), rows[r]);
    }

    /// Column with fewest rows, or 0 when every column is covered.
    int choose_column() const {
        int best = 0;
        int best_size = std::numeric_limits<int>::max();
        for (int c = at(0).right; c != 0; c = at(c).right) {
            if (size_[static_cast<std::size_t>(c)] < best_size) {
                best = c;
                best_size = size_[static_cast<std::size_t>(c)];
            }
        }
        return best;
    }

    /// Row ids of column c in trial order.
    std::vector<int> rows_of(int c) const {
        std::vector<int> out;
        for (int i = at(c).down; i != c; i = at(i).down)
            out.push_back(at(i).row);
        return out;
    }

    void cover_column(int c) { cover(c); }
    void uncover_column(int c) { uncover(c); }

    /// Commits row `row` reached through column header `via` (already covered).
    void select(int row, int via) {
        const int node = node_of(row, via);
        for (int j = at(node).right; j != node; j = at(j).right)
            cover(at(j).column);
    }

    void deselect(int row, int via) {
        const int node = node_of(row, via);
        for (int j = at(node).left; j != node; j = at(j).left)
            uncover(at(j).column);
    }

    enum class Outcome { found, exhausted, aborted };

    /// Depth-first search below the current state. `keep_going` is polled at
    /// every node; returning false aborts. On `found`, solution() holds the
    /// selected rows (in addition to anything the caller selected itself).
    template <typename KeepGoing>
    Outcome search(std::uint64_t& nodes, KeepGoing&& keep_going) {
        ++nodes;
        if (!keep_going())
            return Outcome::aborted;
        const int c = choose_column();
        if (c == 0)
            return Outcome::found;
        if (size_[static_cast<std::size_t>(c)] == 0)
            return Outcome::exhausted;
        cover(c);
        for (int r = at(c).down; r != c; r = at(r).down) {
            solution_.push_back(at(r).row);
            for (int j = at(r).right; j != r; j = at(j).right)
                cover(at(j).column);
            const Outcome out = search(nodes, keep_going);
            if (out != Outcome::exhausted) {
                // leave the links as they are; callers discard the structure
                return out;
            }
            for (int j = at(r).left; j != r; j = at(j).left)
                uncover(at(j).column);
            solution_.pop_back();
        }
        uncover(c);
        return Outcome::exhausted;
    }

    const std::vector<int>& solution() const noexcept { return solution_; }
    int columns() const noexcept { return columns_; }

private:
    struct Node {
        int left, right, up, down, column, row;
    };

    const Node& at(int i) const { return nodes_[static_cast<std::size_t>(i)]; }
    Node& at(int i) { return nodes_[static_cast<std::size_t>(i)]; }

    void add_row(int row, const std::vector<int>& cols) {
        int first = -1;
        for (int col : cols) {
            const int c = col + 1;
            const int id = static_cast<int>(nodes_.size());
            Node node{};
            node.column = c;
            node.row = row;
            node.down = c;
            node.up = at(c).up;
            nodes_.push_back(node);
            at(at(c).up).down = id;
            at(c).up = id;
            ++size_[static_cast<std::size_t>(c)];
            if (first < 0) {
                first = id;
                at(id).left = at(id).right = id;
            } else {
                at(id).right = first;
                at(id).left = at(first).left;
                at(at(first).left).right = id;
                at(first).left = id;
            }
        }
        row_start_.resize(static_cast<std::size_t>(row) + 1, -1);
        row_start_[static_cast<std::size_t>(row)] = first;
    }

    int node_of(int row, int via) const {
        int node = row_start_[static_cast<std::size_t>(row)];
        for (int k = node;;) {
            if (at(k).column == via)
                return k;
            k = at(k).right;
            if (k == node)
                return node;
        }
    }

    void cover(int c) {
        at(at(c).right).left = at(c).left;
        at(at(c).left).right = at(c).right;
        for (int i = at(c).down; i != c; i = at(i).down)
            for (int j = at(i).right; j != i; j = at(j).right) {
                at(at(j).down).up = at(j).up;
                at(at(j).up).down = at(j).down;
                --size_[static_cast<std::size_t>(at(j).column)];
            }
    }

    void uncover(int c) {
        for (int i = at(c).up; i != c; i = at(i).up)
            for (int j = at(i).left; j != i; j = at(j).left) {
                ++size_[static_cast<std::size_t>(at(j).column)];
                at(at(j).down).up = j;
                at(at(j).up).down = j;
            }
        at(at(c).right).left = c;
        at(at(c).left).right = c;
    }

    int columns_;
    std::vector<Node> nodes_;
    std::vector<int> size_;
    std::vector<int> row_start_;
    std::vector<int> solution_;
};

} // namespace ferrers
