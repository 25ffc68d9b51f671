#pragma once

// Decision-tree intermediate representation shared by the parser, the
// binary codec and the virtual machine.

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <variant>
#include <vector>

namespace sqry {

template <class... Ts>
struct Overloaded : Ts... {
    using Ts::operator()...;
};

/// Owning, deep-copying pointer used for recursive tree members.
template <typename T>
class Box {
public:
    Box() : ptr_(std::make_unique<T>()) {}
    Box(T value) : ptr_(std::make_unique<T>(std::move(value))) {}
    Box(const Box& other) : ptr_(std::make_unique<T>(*other.ptr_)) {}
    Box(Box&&) noexcept = default;
    Box& operator=(const Box& other) {
        if (this != &other)
            ptr_ = std::make_unique<T>(*other.ptr_);
        return *this;
    }
    Box& operator=(Box&&) noexcept = default;
    ~Box() = default;

    T& operator*() { return *ptr_; }
    const T& operator*() const { return *ptr_; }
    T* operator->() { return ptr_.get(); }
    const T* operator->() const { return ptr_.get(); }

    friend bool operator==(const Box& a, const Box& b) { return *a.ptr_ == *b.ptr_; }

private:
    std::unique_ptr<T> ptr_;
};

struct Node;

struct Exit {
    friend bool operator==(const Exit&, const Exit&) = default;
};

struct Print {
    std::string text;
    Box<Node> next;
    friend bool operator==(const Print&, const Print&) = default;
};

struct Branch {
    std::string match;
    Box<Node> child;
    friend bool operator==(const Branch&, const Branch&) = default;
};

struct Ask {
    std::string prompt;
    std::vector<Branch> branches;
    friend bool operator==(const Ask&, const Ask&) = default;
};

struct Threshold {
    std::int64_t limit = 0;
    Box<Node> child;
    friend bool operator==(const Threshold&, const Threshold&) = default;
};

/// Numeric question: the first threshold whose limit is strictly below the
/// answer selects its child, otherwise the fallback (if any).
struct AskNumeric {
    std::string prompt;
    std::vector<Threshold> thresholds;
    std::optional<Box<Node>> otherwise;
    friend bool operator==(const AskNumeric&, const AskNumeric&) = default;
};

struct Node {
    std::variant<Exit, Print, Ask, AskNumeric> value;

    Node() = default;
    template <typename T>
        requires(!std::is_same_v<std::decay_t<T>, Node>)
    Node(T&& v) : value(std::forward<T>(v)) {}

    friend bool operator==(const Node&, const Node&) = default;
};

// Convenience builders, mostly for tests and generators.
Node make_exit();
Node make_print(std::string text, Node next = make_exit());
Node make_ask(std::string prompt, std::vector<std::pair<std::string, Node>> branches);
Node make_ask_numeric(std::string prompt, std::vector<std::pair<std::int64_t, Node>> thresholds,
                      std::optional<Node> otherwise = std::nullopt);

/// Every string literal occurrence in pre-order: prompt before branches,
/// match string before its child, print text before its successor.
std::vector<std::string> collect_strings(const Node& root);

bool has_forbidden_char(std::string_view text) noexcept;

/// Throws InvalidProgram when a structural invariant is broken.
void validate(const Node& root);

/// A validated tree plus its string inventory.
class Program {
public:
    explicit Program(Node root);

    const Node& root() const noexcept { return root_; }
    const std::vector<std::string>& strings() const noexcept { return strings_; }

    friend bool operator==(const Program& a, const Program& b) { return a.root_ == b.root_; }

private:
    Node root_;
    std::vector<std::string> strings_;
};

} // namespace sqry
