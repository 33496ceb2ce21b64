#pragma once

// Idle/exit handling shared by the decentralized engines.

#include "pastar/sync.hpp"

#include <thread>

namespace pastar::detail {

enum class IdleOutcome { Continue, Exit };

inline constexpr std::chrono::microseconds kIdlePoll{500};

/// Expansions between voluntary yields. Without them, a worker that holds the
/// CPU for a whole time slice (more threads than cores) drains its local OPEN
/// far past the global f frontier and the duplicate work explodes.
inline constexpr std::uint64_t kYieldInterval = 16;

inline void pace(std::uint64_t expansions)
{
    if (expansions % kYieldInterval == 0)
        std::this_thread::yield();
}

/// Called by a worker with an empty OPEN, an empty buffer and (as far as it
/// knows) an empty inbox. `pool_clear` is false while some other shared pool
/// the worker can draw from still holds work.
///
/// With a known incumbent the worker may close its inbox and leave: all its
/// remaining entries have f >= incumbent, and anything sent afterwards is
/// rerouted to a live worker. Without one (END not reached yet, or
/// unreachable), it exits only on global quiescence, confirmed twice around
/// a barrier.
inline IdleOutcome settle_idle(WorkerId id, MessageFabric& fabric, DynamicBarrier& barrier,
                               const Incumbent& incumbent, bool pool_clear)
{
    if (!pool_clear)
        return IdleOutcome::Continue;
    fabric.report_idle(id);
    if (incumbent.found()) {
        if (fabric.try_close(id))
            return IdleOutcome::Exit;
        fabric.report_busy(id);
        return IdleOutcome::Continue;
    }
    if (fabric.quiescent()) {
        barrier.wait(id);
        if (fabric.quiescent()) {
            fabric.close(id);
            return IdleOutcome::Exit;
        }
    }
    fabric.wait_for_message(id, kIdlePoll);
    fabric.report_busy(id);
    return IdleOutcome::Continue;
}

/// Closes the inbox (if still open) and leaves the barrier on every exit path.
class WorkerExitGuard
{
public:
    WorkerExitGuard(WorkerId id, MessageFabric& fabric, DynamicBarrier& barrier)
        : id_(id), fabric_(fabric), barrier_(barrier)
    {
    }
    WorkerExitGuard(const WorkerExitGuard&) = delete;
    WorkerExitGuard& operator=(const WorkerExitGuard&) = delete;
    ~WorkerExitGuard()
    {
        if (fabric_.live(id_))
            fabric_.close(id_);
        barrier_.leave(id_);
    }

private:
    WorkerId id_;
    MessageFabric& fabric_;
    DynamicBarrier& barrier_;
};

} // namespace pastar::detail
