#include "sqry/vm.hpp"

#include <stdexcept>

namespace sqry::vm {

namespace {

std::string_view trim(std::string_view s) {
    const auto first = s.find_first_not_of(" \t\r\n");
    if (first == std::string_view::npos)
        return {};
    const auto last = s.find_last_not_of(" \t\r\n");
    return s.substr(first, last - first + 1);
}

} // namespace

Session Session::start(std::shared_ptr<const Program> program) {
    Session s(std::move(program), {});
    s.enter(&s.program_->root());
    return s;
}

Session Session::start(Program program) {
    return start(std::make_shared<const Program>(std::move(program)));
}

void Session::enter(const Node* node) {
    while (const auto* p = std::get_if<Print>(&node->value)) {
        log_.push_back(p->text);
        node = &*p->next;
    }
    current_ = node;
    if (const auto* a = std::get_if<Ask>(&node->value)) {
        AwaitingChoice wait{a->prompt, {}};
        for (const auto& b : a->branches)
            wait.options.push_back(b.match);
        state_ = std::move(wait);
    } else if (const auto* n = std::get_if<AskNumeric>(&node->value)) {
        state_ = AwaitingNumber{n->prompt};
    } else {
        state_ = Finished{};
    }
}

void Session::fail(std::string_view reason) { state_ = Failed{std::string(reason)}; }

Session Session::answer_choice(std::string_view choice) const {
    const auto* ask = std::get_if<AwaitingChoice>(&state_) ? std::get_if<Ask>(&current_->value) : nullptr;
    if (!ask)
        throw std::logic_error("session is not waiting for a choice");
    Session next = *this;
    const std::string_view wanted = trim(choice);
    for (const auto& b : ask->branches) {
        if (trim(b.match) == wanted) {
            next.enter(&*b.child);
            return next;
        }
    }
    next.fail(kUnmatchedAnswer);
    return next;
}

Session Session::answer_number(std::int64_t value) const {
    const auto* ask =
        std::get_if<AwaitingNumber>(&state_) ? std::get_if<AskNumeric>(&current_->value) : nullptr;
    if (!ask)
        throw std::logic_error("session is not waiting for a number");
    Session next = *this;
    for (const auto& t : ask->thresholds) {
        if (value > t.limit) {
            next.enter(&*t.child);
            return next;
        }
    }
    if (ask->otherwise)
        next.enter(&**ask->otherwise);
    else
        next.fail(kNoMatchingBranch);
    return next;
}

} // namespace sqry::vm
