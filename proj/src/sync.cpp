#include "pastar/sync.hpp"

#include <string>
#include <thread>

namespace pastar {

// ---------------------------------------------------------------- barrier

DynamicBarrier::DynamicBarrier(int workers)
    : registered_(static_cast<std::size_t>(workers), 1), waiting_(static_cast<std::size_t>(workers), 0),
      expected_(workers)
{
    if (workers < 1)
        throw SyncError("barrier needs at least one worker");
}

void DynamicBarrier::release_locked()
{
    ++generation_;
    arrived_ = 0;
    std::fill(waiting_.begin(), waiting_.end(), 0);
    cv_.notify_all();
}

std::uint64_t DynamicBarrier::wait(WorkerId worker)
{
    std::unique_lock lock(mutex_);
    if (worker < 0 || static_cast<std::size_t>(worker) >= registered_.size())
        throw SyncError("barrier wait by unknown worker " + std::to_string(worker));
    if (!registered_[static_cast<std::size_t>(worker)])
        throw SyncError("barrier wait by deregistered worker " + std::to_string(worker));

    if (cancelled_)
        return generation_;
    const auto gen = generation_;
    waiting_[static_cast<std::size_t>(worker)] = 1;
    if (++arrived_ >= expected_) {
        release_locked();
        return generation_;
    }
    cv_.wait(lock, [&] { return generation_ != gen || cancelled_; });
    return generation_ != gen ? gen + 1 : generation_;
}

void DynamicBarrier::cancel()
{
    std::lock_guard lock(mutex_);
    cancelled_ = true;
    cv_.notify_all();
}

void DynamicBarrier::leave(WorkerId worker)
{
    std::lock_guard lock(mutex_);
    if (worker < 0 || static_cast<std::size_t>(worker) >= registered_.size())
        throw SyncError("barrier leave by unknown worker " + std::to_string(worker));
    auto& reg = registered_[static_cast<std::size_t>(worker)];
    if (!reg)
        throw SyncError("worker " + std::to_string(worker) + " left the barrier twice");
    if (waiting_[static_cast<std::size_t>(worker)])
        throw SyncError("worker " + std::to_string(worker) + " left while waiting");
    reg = 0;
    --expected_;
    if (arrived_ > 0 && arrived_ >= expected_)
        release_locked();
}

int DynamicBarrier::expected() const
{
    std::lock_guard lock(mutex_);
    return expected_;
}

int DynamicBarrier::waiting() const
{
    std::lock_guard lock(mutex_);
    return arrived_;
}

std::uint64_t DynamicBarrier::generation() const
{
    std::lock_guard lock(mutex_);
    return generation_;
}

// -------------------------------------------------------------- incumbent

bool Incumbent::try_improve(double candidate, WorkerId worker) noexcept
{
    double current = cost_.load(std::memory_order_acquire);
    while (candidate < current) {
        if (cost_.compare_exchange_weak(current, candidate, std::memory_order_acq_rel,
                                        std::memory_order_acquire)) {
            owner_.store(worker, std::memory_order_release);
            return true;
        }
    }
    return false;
}

std::optional<WorkerId> Incumbent::owner() const noexcept
{
    const auto w = owner_.load(std::memory_order_acquire);
    if (w < 0)
        return std::nullopt;
    return w;
}

// ----------------------------------------------------------------- fabric

struct MessageFabric::Inbox
{
    mutable std::mutex mutex;
    mutable std::condition_variable cv;
    std::vector<WorkerMessage> queue;
    bool closed = false;
};

MessageFabric::MessageFabric(int workers)
    : live_(static_cast<std::size_t>(workers), 1), idle_(static_cast<std::size_t>(workers), 1)
{
    if (workers < 1)
        throw SyncError("fabric needs at least one worker");
    inboxes_.reserve(static_cast<std::size_t>(workers));
    for (int i = 0; i < workers; ++i)
        inboxes_.push_back(std::make_unique<Inbox>());
}

MessageFabric::~MessageFabric() = default;

MessageFabric::Inbox& MessageFabric::inbox(WorkerId worker) const
{
    if (worker < 0 || worker >= workers())
        throw SyncError("unknown worker " + std::to_string(worker));
    return *inboxes_[static_cast<std::size_t>(worker)];
}

WorkerId MessageFabric::send(WorkerId to, WorkerMessage message)
{
    inbox(to); // range check
    const int n = workers();
    for (int step = 0; step < n; ++step) {
        const WorkerId id = (to + step) % n;
        auto& box = *inboxes_[static_cast<std::size_t>(id)];
        {
            std::lock_guard lock(box.mutex);
            if (box.closed)
                continue;
            sent_.fetch_add(1, std::memory_order_acq_rel);
            box.queue.push_back(std::move(message));
        }
        box.cv.notify_one();
        if (step != 0)
            rerouted_.fetch_add(1, std::memory_order_relaxed);
        return id;
    }
    throw NoLiveWorkers();
}

std::size_t MessageFabric::drain(WorkerId worker, std::vector<WorkerMessage>& out)
{
    auto& box = inbox(worker);
    std::lock_guard lock(box.mutex);
    const auto count = box.queue.size();
    if (count == 0)
        return 0;
    if (out.empty()) {
        out.swap(box.queue);
    } else {
        out.insert(out.end(), std::make_move_iterator(box.queue.begin()),
                   std::make_move_iterator(box.queue.end()));
        box.queue.clear();
    }
    received_.fetch_add(count, std::memory_order_acq_rel);
    return count;
}

bool MessageFabric::has_messages(WorkerId worker) const
{
    auto& box = inbox(worker);
    std::lock_guard lock(box.mutex);
    return !box.queue.empty();
}

bool MessageFabric::wait_for_message(WorkerId worker, std::chrono::microseconds timeout) const
{
    auto& box = inbox(worker);
    std::unique_lock lock(box.mutex);
    return box.cv.wait_for(lock, timeout, [&] { return !box.queue.empty(); });
}

std::size_t MessageFabric::close(WorkerId worker)
{
    auto& box = inbox(worker);
    std::size_t drained = 0;
    {
        std::lock_guard lock(box.mutex);
        if (box.closed)
            throw SyncError("worker " + std::to_string(worker) + " closed its inbox twice");
        box.closed = true;
        drained = box.queue.size();
        box.queue.clear();
        received_.fetch_add(drained, std::memory_order_acq_rel);
    }
    std::lock_guard lock(ledger_mutex_);
    live_[static_cast<std::size_t>(worker)] = 0;
    return drained;
}

bool MessageFabric::try_close(WorkerId worker)
{
    auto& box = inbox(worker);
    {
        std::lock_guard lock(box.mutex);
        if (box.closed)
            throw SyncError("worker " + std::to_string(worker) + " closed its inbox twice");
        if (!box.queue.empty())
            return false;
        box.closed = true;
    }
    std::lock_guard lock(ledger_mutex_);
    live_[static_cast<std::size_t>(worker)] = 0;
    return true;
}

bool MessageFabric::live(WorkerId worker) const
{
    inbox(worker);
    std::lock_guard lock(ledger_mutex_);
    return live_[static_cast<std::size_t>(worker)] != 0;
}

int MessageFabric::live_count() const
{
    std::lock_guard lock(ledger_mutex_);
    int count = 0;
    for (char l : live_)
        count += l ? 1 : 0;
    return count;
}

void MessageFabric::report_idle(WorkerId worker)
{
    inbox(worker);
    std::lock_guard lock(ledger_mutex_);
    idle_[static_cast<std::size_t>(worker)] = 1;
}

void MessageFabric::report_busy(WorkerId worker)
{
    inbox(worker);
    std::lock_guard lock(ledger_mutex_);
    idle_[static_cast<std::size_t>(worker)] = 0;
}

bool MessageFabric::quiescent() const
{
    std::lock_guard lock(ledger_mutex_);
    for (std::size_t i = 0; i < live_.size(); ++i)
        if (live_[i] && !idle_[i])
            return false;
    return sent_.load(std::memory_order_acquire) == received_.load(std::memory_order_acquire);
}

std::uint64_t MessageFabric::queued() const
{
    std::uint64_t total = 0;
    for (const auto& box : inboxes_) {
        std::lock_guard lock(box->mutex);
        total += box->queue.size();
    }
    return total;
}

// ---------------------------------------------------------------- workers

void run_workers(int threads, std::chrono::milliseconds timeout, std::atomic<bool>& abort,
                 const std::function<void(WorkerId)>& body, const std::function<void()>& on_abort)
{
    std::mutex mutex;
    std::condition_variable done_cv;
    int finished = 0;
    std::exception_ptr failure;

    std::vector<std::thread> pool;
    pool.reserve(static_cast<std::size_t>(threads));
    for (WorkerId id = 0; id < threads; ++id) {
        pool.emplace_back([&, id] {
            try {
                body(id);
            } catch (...) {
                abort.store(true, std::memory_order_release);
                std::lock_guard lock(mutex);
                if (!failure)
                    failure = std::current_exception();
            }
            std::lock_guard lock(mutex);
            ++finished;
            done_cv.notify_all();
        });
    }

    bool hung = false;
    {
        std::unique_lock lock(mutex);
        if (!done_cv.wait_for(lock, timeout, [&] { return finished == threads; })) {
            hung = true;
            abort.store(true, std::memory_order_release);
        }
    }
    if (hung && on_abort)
        on_abort();
    for (auto& t : pool)
        t.join();

    if (failure) {
        try {
            std::rethrow_exception(failure);
        } catch (const std::exception& e) {
            throw WorkerFailure(std::string("worker failed: ") + e.what());
        } catch (...) {
            throw WorkerFailure("worker failed with a non-standard exception");
        }
    }
    if (hung)
        throw SearchHang("search exceeded its " + std::to_string(timeout.count()) + " ms watchdog");
}

} // namespace pastar
