#pragma once

// Interactive execution of a decision tree. A Session is an immutable
// value: answering returns the next session, so callers can keep earlier
// snapshots for back navigation.

#include "sqry/ir.hpp"

#include <cstdint>
#include <memory>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

namespace sqry::vm {

struct AwaitingChoice {
    std::string prompt;
    std::vector<std::string> options;
    friend bool operator==(const AwaitingChoice&, const AwaitingChoice&) = default;
};

struct AwaitingNumber {
    std::string prompt;
    friend bool operator==(const AwaitingNumber&, const AwaitingNumber&) = default;
};

struct Finished {
    friend bool operator==(const Finished&, const Finished&) = default;
};

struct Failed {
    std::string reason;
    friend bool operator==(const Failed&, const Failed&) = default;
};

using State = std::variant<AwaitingChoice, AwaitingNumber, Finished, Failed>;

inline constexpr std::string_view kUnmatchedAnswer = "unmatched answer";
inline constexpr std::string_view kNoMatchingBranch = "no matching branch";

class Session {
public:
    /// Drains leading prints and stops at the first interactive node.
    static Session start(std::shared_ptr<const Program> program);
    static Session start(Program program);

    /// Requires AwaitingChoice; throws std::logic_error otherwise. The
    /// answer is compared exactly after trimming surrounding whitespace.
    Session answer_choice(std::string_view choice) const;

    /// Requires AwaitingNumber; the first limit strictly below value wins.
    Session answer_number(std::int64_t value) const;

    const State& state() const noexcept { return state_; }
    const std::vector<std::string>& output_log() const noexcept { return log_; }
    bool done() const noexcept {
        return std::holds_alternative<Finished>(state_) || std::holds_alternative<Failed>(state_);
    }
    const Program& program() const noexcept { return *program_; }

private:
    Session(std::shared_ptr<const Program> program, std::vector<std::string> log)
        : program_(std::move(program)), log_(std::move(log)) {}

    void enter(const Node* node);
    void fail(std::string_view reason);

    std::shared_ptr<const Program> program_;
    const Node* current_ = nullptr;
    std::vector<std::string> log_;
    State state_ = Finished{};
};

} // namespace sqry::vm
