#pragma once

#include "pastar/search.hpp"

#include <atomic>
#include <chrono>
#include <condition_variable>
#include <cstdint>
#include <functional>
#include <memory>
#include <mutex>
#include <optional>
#include <stdexcept>
#include <vector>

namespace pastar {

using WorkerId = int;

/// Misuse of a synchronization primitive (a programming error, not a runtime condition).
class SyncError : public std::logic_error
{
public:
    using std::logic_error::logic_error;
};

/// fabric send with every inbox already closed.
class NoLiveWorkers : public std::runtime_error
{
public:
    NoLiveWorkers() : std::runtime_error("no live workers to receive the message") {}
};

/// Barrier whose participant count shrinks as workers leave. A worker that
/// finishes early calls leave() instead of stranding the rest at wait().
class DynamicBarrier
{
public:
    explicit DynamicBarrier(int workers);

    /// Blocks until every still-registered worker has arrived. Returns the
    /// number of the generation that completed (the first is 1).
    std::uint64_t wait(WorkerId worker);

    /// Deregisters the worker, releasing the current generation if everyone
    /// left is already waiting.
    void leave(WorkerId worker);

    /// Releases every waiter and makes later waits return immediately.
    /// Used only to unwind a search that hit its watchdog.
    void cancel();

    int expected() const;
    int waiting() const;
    std::uint64_t generation() const;

private:
    void release_locked();

    mutable std::mutex mutex_;
    std::condition_variable cv_;
    std::vector<char> registered_;
    std::vector<char> waiting_;
    int expected_;
    int arrived_ = 0;
    std::uint64_t generation_ = 0;
    bool cancelled_ = false;
};

/// Best goal cost found so far. Lock-free: improvement is a CAS loop.
class Incumbent
{
public:
    /// Replaces the cost iff candidate is strictly smaller. Returns true when
    /// this call made the improvement.
    bool try_improve(double candidate, WorkerId worker) noexcept;

    double cost() const noexcept { return cost_.load(std::memory_order_acquire); }
    bool found() const noexcept { return cost() < kInfinity; }

    /// Worker behind the most recent improvement (advisory under contention).
    std::optional<WorkerId> owner() const noexcept;

private:
    std::atomic<double> cost_{kInfinity};
    std::atomic<WorkerId> owner_{-1};
};

struct WorkerMessage
{
    SearchNode node;
    WorkerId sender = -1;
};

/// Per-worker unbounded MPSC inboxes plus the termination ledger: global
/// sent/received counters, the live set, and per-worker idle reports.
///
/// Protocol: a worker must call report_busy() before it drains its inbox or
/// takes work from any other shared pool, and only sends while busy. Under
/// that rule quiescent() is stable once true.
class MessageFabric
{
public:
    explicit MessageFabric(int workers);
    ~MessageFabric();

    int workers() const noexcept { return static_cast<int>(inboxes_.size()); }

    /// Enqueues to `to`, or to the next live worker in cyclic order if `to`
    /// has closed. Never blocks on the receiver. Returns the recipient.
    WorkerId send(WorkerId to, WorkerMessage message);

    /// Moves every queued message into out and counts them received.
    std::size_t drain(WorkerId worker, std::vector<WorkerMessage>& out);

    bool has_messages(WorkerId worker) const;

    /// Blocks until the inbox is non-empty or the timeout passes.
    bool wait_for_message(WorkerId worker, std::chrono::microseconds timeout) const;

    /// Removes the worker from the live set. Anything still queued is
    /// discarded and counted received. Returns the number discarded.
    std::size_t close(WorkerId worker);

    /// Closes only if the inbox is empty, atomically with respect to senders.
    bool try_close(WorkerId worker);

    bool live(WorkerId worker) const;
    int live_count() const;

    void report_idle(WorkerId worker);
    void report_busy(WorkerId worker);

    /// Transfers through a channel other than the inboxes (e.g. a shared
    /// board) that still have to balance before termination.
    void note_sent(std::uint64_t count) noexcept { sent_.fetch_add(count, std::memory_order_acq_rel); }
    void note_received(std::uint64_t count) noexcept { received_.fetch_add(count, std::memory_order_acq_rel); }

    /// sent == received and every live worker is idle, read under one lock.
    bool quiescent() const;

    std::uint64_t sent() const noexcept { return sent_.load(std::memory_order_acquire); }
    std::uint64_t received() const noexcept { return received_.load(std::memory_order_acquire); }
    std::uint64_t rerouted() const noexcept { return rerouted_.load(std::memory_order_relaxed); }
    std::uint64_t queued() const;

private:
    struct Inbox;

    Inbox& inbox(WorkerId worker) const;

    std::vector<std::unique_ptr<Inbox>> inboxes_;
    std::atomic<std::uint64_t> sent_{0};
    std::atomic<std::uint64_t> received_{0};
    std::atomic<std::uint64_t> rerouted_{0};

    mutable std::mutex ledger_mutex_;
    std::vector<char> live_;
    std::vector<char> idle_;
};

/// Runs body(worker_id) on `threads` threads and joins them. If the deadline
/// passes first, sets `abort`, joins, and throws SearchHang. The first
/// exception thrown by a worker sets `abort` and is rethrown as WorkerFailure.
/// on_abort runs once, on the coordinating thread, whenever abort is raised
/// by the watchdog.
void run_workers(int threads, std::chrono::milliseconds timeout, std::atomic<bool>& abort,
                 const std::function<void(WorkerId)>& body, const std::function<void()>& on_abort = {});

} // namespace pastar
