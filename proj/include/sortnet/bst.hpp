#pragma once

#include <algorithm>
#include <cstddef>
#include <functional>
#include <memory>
#include <utility>

namespace sortnet {

/// Persistent (immutable) binary search tree. No balancing: insertion
/// order in this codebase keeps observed depths small, and structural
/// sharing lets snapshots be kept across pruning rounds for free.
/// Duplicates are suppressed. Thread-safe to share and read.
template <typename T, typename Compare = std::less<T>>
class SearchTree {
public:
    SearchTree() = default;
    explicit SearchTree(Compare cmp) : cmp_(std::move(cmp)) {}

    [[nodiscard]] bool empty() const noexcept { return root_ == nullptr; }
    [[nodiscard]] std::size_t size() const noexcept { return root_ ? root_->count : 0; }

    [[nodiscard]] bool contains(const T& value) const {
        const Node* node = root_.get();
        while (node != nullptr) {
            if (cmp_(value, node->value)) {
                node = node->left.get();
            } else if (cmp_(node->value, value)) {
                node = node->right.get();
            } else {
                return true;
            }
        }
        return false;
    }

    /// Returns the tree with `value` added; `*this` is unchanged.
    /// Adding a value already present returns an equal-valued tree.
    [[nodiscard]] SearchTree add(const T& value) const {
        return SearchTree(add_node(root_, value), cmp_);
    }

    /// Simultaneously extracts the minimum and the tree without it.
    /// On an empty tree returns (fallback, empty tree).
    [[nodiscard]] std::pair<T, SearchTree> split_min(T fallback) const {
        if (!root_) return {std::move(fallback), SearchTree(nullptr, cmp_)};
        auto [min_value, rest] = split_node(root_);
        return {std::move(min_value), SearchTree(std::move(rest), cmp_)};
    }

    /// In-order traversal: calls fn(value) in ascending order.
    template <typename F>
    void for_each(F&& fn) const {
        walk(root_.get(), fn);
    }

    [[nodiscard]] int depth() const noexcept { return depth_of(root_.get()); }

private:
    struct Node {
        T value;
        std::shared_ptr<const Node> left;
        std::shared_ptr<const Node> right;
        std::size_t count;
    };
    using NodePtr = std::shared_ptr<const Node>;

    NodePtr root_;
    [[no_unique_address]] Compare cmp_;

    SearchTree(NodePtr root, Compare cmp) : root_(std::move(root)), cmp_(std::move(cmp)) {}

    static std::size_t count_of(const NodePtr& node) noexcept {
        return node ? node->count : 0;
    }

    static NodePtr make(T value, NodePtr left, NodePtr right) {
        const std::size_t count = 1 + count_of(left) + count_of(right);
        return std::make_shared<const Node>(
            Node{std::move(value), std::move(left), std::move(right), count});
    }

    NodePtr add_node(const NodePtr& node, const T& value) const {
        if (!node) return make(value, nullptr, nullptr);
        if (cmp_(value, node->value)) {
            return make(node->value, add_node(node->left, value), node->right);
        }
        if (cmp_(node->value, value)) {
            return make(node->value, node->left, add_node(node->right, value));
        }
        return node;
    }

    static std::pair<T, NodePtr> split_node(const NodePtr& node) {
        if (!node->left) return {node->value, node->right};
        auto [min_value, left_rest] = split_node(node->left);
        return {std::move(min_value),
                make(node->value, std::move(left_rest), node->right)};
    }

    template <typename F>
    static void walk(const Node* node, F& fn) {
        if (node == nullptr) return;
        walk(node->left.get(), fn);
        fn(node->value);
        walk(node->right.get(), fn);
    }

    static int depth_of(const Node* node) noexcept {
        if (node == nullptr) return 0;
        return 1 + std::max(depth_of(node->left.get()), depth_of(node->right.get()));
    }
};

}  // namespace sortnet
