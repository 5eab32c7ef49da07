#include "jasonrs/bdi/agent.hpp"

#include <algorithm>

#include <spdlog/spdlog.h>

#include "jasonrs/bdi/runtime.hpp"
#include "jasonrs/logic/errors.hpp"

namespace jasonrs::bdi {

using logic::Literal;
using logic::Substitution;
using logic::Term;
using logic::TriggerKind;

namespace {

const Term& percept_source() {
    static const Term t = Term::atom("percept");
    return t;
}

const Term& self_source() {
    static const Term t = Term::atom("self");
    return t;
}

bool is_percept(const Literal& l) {
    const Term* src = l.source();
    return src != nullptr && *src == percept_source();
}

} // namespace

Agent::Agent(std::string name, const logic::AgentProgram& program, Runtime& runtime)
    : name_(std::move(name)), runtime_(runtime), rules_(program.rules) {
    plans_.reserve(program.plans.size());
    for (const auto& p : program.plans) {
        plans_.push_back(std::make_shared<const logic::Plan>(p));
    }
    for (const auto& b : program.initial_beliefs) {
        add_belief(b.source() ? b : b.with_source(self_source()), EventOrigin::internal(0));
    }
}

// ---- thread-safe input ----------------------------------------------------

std::uint64_t Agent::enqueue(Input input) {
    std::uint64_t seq = 0;
    {
        std::lock_guard lock(inbox_mutex_);
        inbox_.push_back(std::move(input));
        seq = ++input_seq_;
        inbox_nonempty_ = true;
    }
    runtime_.notify();
    return seq;
}

std::uint64_t Agent::inject_percept(Literal literal) {
    if (!literal.is_ground()) {
        throw NonGroundPercept(literal);
    }
    return enqueue(PerceptInput{literal.with_source(percept_source())});
}

std::uint64_t Agent::retract_percepts(std::string predicate) {
    return enqueue(RetractInput{std::move(predicate)});
}

std::uint64_t Agent::deliver(std::string from, logic::Performative performative, Literal content) {
    if (performative == logic::Performative::Tell && !content.is_ground()) {
        throw RuntimeError("told content must be ground: " + logic::to_string(content));
    }
    return enqueue(MessageInput{std::move(from), performative, std::move(content)});
}

void Agent::perceive() {
    std::lock_guard state(state_mutex_);
    std::deque<Input> batch;
    {
        std::lock_guard lock(inbox_mutex_);
        batch.swap(inbox_);
        inbox_nonempty_ = false;
    }
    for (auto& input : batch) {
        apply_input(input);
    }
}

// ---- belief revision --------------------------------------------------------

void Agent::raise(TriggerKind kind, Literal literal, EventOrigin origin) {
    Event e{logic::Trigger{kind, std::move(literal)}, std::move(origin)};
    history_.push_back(e);
    if (history_.size() > history_limit) {
        history_.pop_front();
    }
    events_.push_back(std::move(e));
}

bool Agent::add_belief(const Literal& l, EventOrigin origin) {
    if (std::find(beliefs_.begin(), beliefs_.end(), l) != beliefs_.end()) {
        return false;
    }
    beliefs_.push_back(l);
    raise(TriggerKind::AddBelief, l, std::move(origin));
    return true;
}

bool Agent::remove_belief(const Literal& l, EventOrigin origin) {
    auto it = std::find(beliefs_.begin(), beliefs_.end(), l);
    if (it == beliefs_.end()) {
        return false;
    }
    beliefs_.erase(it);
    raise(TriggerKind::DelBelief, l, std::move(origin));
    return true;
}

void Agent::apply_input(Input& input) {
    if (auto* p = std::get_if<PerceptInput>(&input)) {
        // Value replacement: one percept per predicate/arity.
        std::vector<Literal> stale;
        for (const auto& b : beliefs_) {
            if (is_percept(b) && b.same_signature(p->literal) && b != p->literal) {
                stale.push_back(b);
            }
        }
        for (const auto& b : stale) {
            remove_belief(b, EventOrigin::percept());
        }
        add_belief(p->literal, EventOrigin::percept());
    } else if (auto* r = std::get_if<RetractInput>(&input)) {
        std::vector<Literal> gone;
        for (const auto& b : beliefs_) {
            if (is_percept(b) && b.predicate == r->predicate) {
                gone.push_back(b);
            }
        }
        for (const auto& b : gone) {
            remove_belief(b, EventOrigin::percept());
        }
    } else {
        auto& m = std::get<MessageInput>(input);
        Literal content = m.content.with_source(Term::atom(m.from));
        if (m.performative == logic::Performative::Tell) {
            add_belief(content, EventOrigin::message(m.from));
        } else {
            raise(TriggerKind::AddGoal, std::move(content), EventOrigin::message(m.from));
        }
    }
}

// ---- reasoning cycle ----------------------------------------------------------

CycleReport Agent::reasoning_cycle() {
    perceive();
    std::lock_guard state(state_mutex_);
    CycleReport report;
    report.agent = name_;
    report.cycle = ++cycles_;
    std::optional<std::uint64_t> focus;
    if (!events_.empty()) {
        Event e = std::move(events_.front());
        events_.pop_front();
        report.event = to_string(e);
        focus = handle_event(e, report);
    }
    run_intention_step(report, focus);
    return report;
}

Agent::Intention* Agent::find_intention(std::uint64_t id) {
    for (auto& in : intentions_) {
        if (in.id == id) {
            return &in;
        }
    }
    return nullptr;
}

std::optional<std::uint64_t> Agent::handle_event(const Event& event, CycleReport& report) {
    const Literal& literal = event.trigger.literal;
    const bool rename = !literal.is_ground();
    for (std::size_t i = 0; i < plans_.size(); ++i) {
        const logic::Plan& candidate = *plans_[i];
        if (candidate.trigger.kind != event.trigger.kind || !candidate.trigger.literal.same_signature(literal)) {
            continue;
        }
        auto plan = rename ? std::make_shared<const logic::Plan>(
                                 logic::rename_vars(candidate, "__p" + std::to_string(++renames_)))
                           : plans_[i];
        auto relevant = logic::unify_literal(plan->trigger.literal, literal);
        if (!relevant) {
            continue;
        }
        std::optional<Substitution> context;
        try {
            context = logic::solve_first(plan->context, beliefs_, rules_, *relevant, runtime_.solve_options());
        } catch (const logic::LogicError& e) {
            report.notes.push_back("context of plan " + std::to_string(i) + " failed: " + e.what());
            spdlog::warn("[{}] context of plan {} raised: {}", name_, i, e.what());
            continue;
        }
        if (!context) {
            continue;
        }

        report.plan = i;
        Frame frame{plan, i, 0, std::move(*context), std::nullopt};
        const bool goal_event = event.trigger.kind == TriggerKind::AddGoal;
        if (goal_event) {
            frame.goal = literal;
        }
        if (goal_event && event.origin.kind == EventOrigin::Kind::Internal) {
            if (Intention* parent = find_intention(event.origin.intention)) {
                parent->stack.push_back(std::move(frame));
                parent->suspended = false;
                return parent->id;
            }
            return std::nullopt;
        }
        Intention fresh;
        fresh.id = ++intention_ids_;
        fresh.stack.push_back(std::move(frame));
        intentions_.push_back(std::move(fresh));
        return intentions_.back().id;
    }

    // No applicable plan.
    switch (event.trigger.kind) {
    case TriggerKind::AddGoal:
        report.notes.push_back("no applicable plan for " + logic::to_string(event.trigger));
        if (event.origin.kind == EventOrigin::Kind::Internal) {
            if (Intention* parent = find_intention(event.origin.intention)) {
                fail_intention(*parent, "subgoal has no applicable plan", report);
                return std::nullopt;
            }
        }
        raise(TriggerKind::DelGoal, literal, EventOrigin::internal(0));
        break;
    default:
        report.notes.push_back("discarded " + logic::to_string(event.trigger));
        spdlog::debug("[{}] no applicable plan, discarded {}", name_, logic::to_string(event.trigger));
        break;
    }
    return std::nullopt;
}

void Agent::fail_intention(Intention& intention, const std::string& why, CycleReport& report) {
    const std::uint64_t id = intention.id;
    std::optional<Literal> goal;
    for (auto it = intention.stack.rbegin(); it != intention.stack.rend(); ++it) {
        if (it->goal) {
            goal = *it->goal;
            break;
        }
    }
    report.notes.push_back("intention " + std::to_string(id) + " dropped: " + why);
    spdlog::warn("[{}] intention {} dropped: {}", name_, id, why);
    std::erase_if(intentions_, [id](const Intention& in) { return in.id == id; });
    if (goal) {
        raise(TriggerKind::DelGoal, std::move(*goal), EventOrigin::internal(0));
    }
}

void Agent::pop_finished_frames(Intention& intention) {
    while (!intention.stack.empty() && intention.stack.back().step >= intention.stack.back().plan->body.size()) {
        Frame done = std::move(intention.stack.back());
        intention.stack.pop_back();
        if (intention.stack.empty() || !done.goal) {
            continue;
        }
        // Hand bindings of the achieved goal back to the caller.
        Frame& parent = intention.stack.back();
        Literal achieved = done.subst.apply(done.plan->trigger.literal).without_annotations();
        if (auto s = logic::unify_literal(done.goal->without_annotations(), achieved, parent.subst)) {
            parent.subst = std::move(*s);
        }
    }
}

void Agent::run_intention_step(CycleReport& report, std::optional<std::uint64_t> focus) {
    // The intention that just adopted a plan runs its first step now, against
    // the same beliefs its context was checked on; others take turns.
    if (focus) {
        for (std::size_t i = 0; i < intentions_.size(); ++i) {
            if (intentions_[i].id == *focus) {
                next_intention_ = i;
                break;
            }
        }
    }
    std::size_t budget = intentions_.size();
    while (budget-- > 0 && !intentions_.empty()) {
        std::size_t idx = next_intention_ % intentions_.size();
        Intention& in = intentions_[idx];
        if (in.suspended) {
            next_intention_ = idx + 1;
            continue;
        }
        pop_finished_frames(in);
        if (in.stack.empty()) {
            intentions_.erase(intentions_.begin() + static_cast<std::ptrdiff_t>(idx));
            next_intention_ = idx;
            continue;
        }
        const std::uint64_t id = in.id;
        execute(in, report);
        if (Intention* after = find_intention(id); after != nullptr && !after->suspended) {
            pop_finished_frames(*after);
            if (after->stack.empty()) {
                std::erase_if(intentions_, [id](const Intention& x) { return x.id == id; });
                next_intention_ = idx;
                return;
            }
        }
        next_intention_ = find_intention(id) ? idx + 1 : idx;
        return;
    }
}

void Agent::execute(Intention& in, CycleReport& report) {
    Frame& frame = in.stack.back();
    const logic::ActionStep& step = frame.plan->body[frame.step++];
    report.intention = in.id;
    report.step = logic::to_string(step);

    auto fail = [&](const std::string& why) { fail_intention(in, why, report); };

    try {
        std::visit(
            [&](const auto& s) {
                using T = std::decay_t<decltype(s)>;
                if constexpr (std::is_same_v<T, logic::AddBeliefStep>) {
                    Literal l = frame.subst.apply(s.literal);
                    if (!l.is_ground()) {
                        return fail("cannot add non-ground belief " + logic::to_string(l));
                    }
                    add_belief(l.source() ? l : l.with_source(self_source()), EventOrigin::internal(in.id));
                } else if constexpr (std::is_same_v<T, logic::DelBeliefStep>) {
                    Literal pattern = frame.subst.apply(s.literal);
                    for (const auto& b : beliefs_) {
                        if (auto m = logic::unify_literal(pattern, b, frame.subst)) {
                            Literal victim = b;
                            frame.subst = std::move(*m);
                            remove_belief(victim, EventOrigin::internal(in.id));
                            break;
                        }
                    }
                } else if constexpr (std::is_same_v<T, logic::AchieveStep>) {
                    raise(TriggerKind::AddGoal, frame.subst.apply(s.goal), EventOrigin::internal(in.id));
                    in.suspended = true;
                } else if constexpr (std::is_same_v<T, logic::TestStep>) {
                    auto sol = logic::solve_first(s.goal, beliefs_, rules_, frame.subst, runtime_.solve_options());
                    if (!sol) {
                        return fail("test goal failed: ?" + logic::to_string(s.goal));
                    }
                    frame.subst = std::move(*sol);
                } else if constexpr (std::is_same_v<T, logic::SendStep>) {
                    Term to = frame.subst.apply(s.to);
                    Literal content = frame.subst.apply(s.content);
                    Agent* target = to.is_atom() ? runtime_.find(to.text()) : nullptr;
                    if (target == nullptr) {
                        return fail("send to unknown agent " + logic::to_string(to));
                    }
                    target->deliver(name_, s.performative, std::move(content));
                } else if constexpr (std::is_same_v<T, logic::PublishDecisionStep>) {
                    Decision d;
                    d.content = frame.subst.apply(s.content);
                    d.timestamp_ms = runtime_.clock()();
                    {
                        std::lock_guard lock(decision_mutex_);
                        d.seq = decision_ ? decision_->seq + 1 : 1;
                        decision_ = d;
                    }
                    runtime_.on_decision(name_, d);
                } else {
                    std::vector<Term> args;
                    args.reserve(s.args.size());
                    for (const auto& a : s.args) {
                        args.push_back(frame.subst.apply(a));
                    }
                    if (!runtime_.invoke_action(name_, s.name, args)) {
                        return fail("action " + s.name + " failed");
                    }
                }
            },
            step);
    } catch (const logic::LogicError& e) {
        fail(e.what());
    } catch (const RuntimeError& e) {
        fail(e.what());
    }
}

// ---- snapshots ----------------------------------------------------------------

bool Agent::quiescent() const {
    {
        std::lock_guard lock(inbox_mutex_);
        if (!inbox_.empty()) {
            return false;
        }
    }
    std::lock_guard state(state_mutex_);
    return events_.empty() && intentions_.empty();
}

std::optional<Decision> Agent::read_decision() const {
    std::lock_guard lock(decision_mutex_);
    return decision_;
}

std::vector<Literal> Agent::beliefs() const {
    std::lock_guard state(state_mutex_);
    return beliefs_;
}

std::vector<Event> Agent::pending_events() const {
    std::lock_guard state(state_mutex_);
    return {events_.begin(), events_.end()};
}

std::vector<Event> Agent::event_history() const {
    std::lock_guard state(state_mutex_);
    return {history_.begin(), history_.end()};
}

std::size_t Agent::intention_count() const {
    std::lock_guard state(state_mutex_);
    return intentions_.size();
}

} // namespace jasonrs::bdi
