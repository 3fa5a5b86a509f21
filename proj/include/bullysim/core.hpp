#pragma once

#include <cstdint>
#include <optional>
#include <set>
#include <string>
#include <vector>

namespace bullysim {

// Simulated time in abstract integer ticks.
using SimTime = std::int64_t;

// Process ids double as election priority: higher id wins. The election
// commission endpoint is addressed with a distinguished negative id.
using ProcessId = std::int32_t;
using Addr = std::int32_t;

constexpr Addr kEcAddr = -1;

inline bool is_process(Addr a) { return a >= 0; }

std::string addr_name(Addr a);

enum class MessageKind {
    Election,
    Answer,
    Coordinator,
    Grant,
    Query,
    QueryAnswer,
    Alive,
    AliveReply,
    Verify,
    VerifyReply,
    Stop,
};

constexpr int kMessageKindCount = 11;

const char* to_string(MessageKind k);
std::optional<MessageKind> message_kind_from_string(const std::string& s);

struct Message {
    MessageKind kind;
    Addr from;
    Addr to;
    // Present iff kind is Coordinator or QueryAnswer.
    std::optional<ProcessId> coordinator;
    // Responder id carried by Answer messages (Kordafshari answers carry it
    // explicitly; harmless elsewhere).
    std::optional<ProcessId> carried_id;
    SimTime send_time = 0;
};

enum class NodeStatus { Up, Crashed, Slow };

const char* to_string(NodeStatus s);

struct NodeState {
    ProcessId pid = 0;
    NodeStatus status = NodeStatus::Up;
    std::optional<ProcessId> believed_coordinator;
};

// Fixed membership: crash/recover toggles status, never the set.
struct SystemView {
    std::vector<NodeState> processes;  // sorted by pid, unique
    bool has_ec = false;
    SimTime now = 0;

    const NodeState* find(ProcessId pid) const;
    NodeState* find(ProcessId pid);
    bool is_up(ProcessId pid) const;
};

// Highest strictly-Up process id outside `exclude`; absent when none.
std::optional<ProcessId> highest_alive(const SystemView& view,
                                       const std::set<ProcessId>& exclude = {});

// True iff every Up process agrees on the coordinator and that coordinator
// is the highest alive process. Vacuously true with no Up processes.
bool correctness_predicate(const SystemView& view);

}  // namespace bullysim
